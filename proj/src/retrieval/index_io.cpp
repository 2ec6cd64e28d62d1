#include <array>
#include <fstream>

#include "trialmatch/retrieval.hpp"

namespace trialmatch {

namespace {

constexpr std::array<char, 8> kMagic = {'T', 'M', 'I', 'D', 'X', '\0', '\r', '\n'};
constexpr std::uint32_t kVersion = 1;

class Writer {
 public:
  explicit Writer(std::ofstream& out) : out_(out) {}

  void u32(std::uint32_t v) {
    std::array<char, 4> b;
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
    out_.write(b.data(), 4);
  }
  void u64(std::uint64_t v) {
    u32(static_cast<std::uint32_t>(v & 0xFFFFFFFFu));
    u32(static_cast<std::uint32_t>(v >> 32));
  }
  void str(std::string_view s) {
    u32(static_cast<std::uint32_t>(s.size()));
    out_.write(s.data(), static_cast<std::streamsize>(s.size()));
  }

 private:
  std::ofstream& out_;
};

class Reader {
 public:
  Reader(std::ifstream& in, std::string path) : in_(in), path_(std::move(path)) {}

  std::uint32_t u32() {
    std::array<unsigned char, 4> b{};
    in_.read(reinterpret_cast<char*>(b.data()), 4);
    check();
    return static_cast<std::uint32_t>(b[0]) | static_cast<std::uint32_t>(b[1]) << 8 |
           static_cast<std::uint32_t>(b[2]) << 16 | static_cast<std::uint32_t>(b[3]) << 24;
  }
  std::uint64_t u64() {
    std::uint64_t lo = u32();
    std::uint64_t hi = u32();
    return lo | hi << 32;
  }
  std::string str() {
    std::string s(u32(), '\0');
    in_.read(s.data(), static_cast<std::streamsize>(s.size()));
    check();
    return s;
  }

 private:
  void check() {
    if (!in_) throw Error(ErrorCode::kIoError, path_ + ": truncated index file");
  }

  std::ifstream& in_;
  std::string path_;
};

}  // namespace

void save_index(const InvertedIndex& index, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  Writer w(out);
  out.write(kMagic.data(), kMagic.size());
  w.u32(kVersion);
  w.u64(index.num_docs());
  for (std::size_t i = 0; i < index.num_docs(); ++i) {
    w.str(index.doc_ids()[i]);
    w.u32(index.doc_lengths()[i]);
  }
  auto terms = index.sorted_terms();
  w.u64(terms.size());
  for (const auto& term : terms) {
    const auto& list = *index.postings(term);
    w.str(term);
    w.u32(static_cast<std::uint32_t>(list.size()));
    for (const auto& p : list) {
      w.u32(p.doc);
      w.u32(p.tf);
    }
  }
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path.string());
}

InvertedIndex load_index(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw Error(ErrorCode::kFormatVersionMismatch, path.string() + ": not an index file");
  Reader r(in, path.string());
  if (std::uint32_t v = r.u32(); v != kVersion) {
    throw Error(ErrorCode::kFormatVersionMismatch, path.string() + ": version " + std::to_string(v));
  }

  InvertedIndex index;
  std::uint64_t n = r.u64();
  double total = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    index.doc_ids_.push_back(r.str());
    index.doc_lengths_.push_back(r.u32());
    total += index.doc_lengths_.back();
  }
  index.avgdl_ = n == 0 ? 0.0 : total / static_cast<double>(n);
  std::uint64_t terms = r.u64();
  for (std::uint64_t t = 0; t < terms; ++t) {
    std::string term = r.str();
    std::uint32_t count = r.u32();
    std::vector<Posting> list(count);
    for (auto& p : list) {
      p.doc = r.u32();
      p.tf = r.u32();
      if (p.doc >= n) throw Error(ErrorCode::kIoError, path.string() + ": posting ordinal out of range");
    }
    index.postings_.emplace(std::move(term), std::move(list));
  }
  return index;
}

}  // namespace trialmatch
