#!/usr/bin/env python3
"""Regenerates data/lexicon.tsv from the curated term lists below.

Usage: tools/make_lexicon.py > data/lexicon.tsv
"""

import sys

DSYN = """
aortic stenosis; aortic regurgitation; aortic aneurysm; abdominal aortic aneurysm; mitral stenosis;
mitral regurgitation; mitral valve prolapse; tricuspid regurgitation; pulmonary stenosis; valve disease;
aortic valve disease; predominant aortic regurgitation valve disease; endocarditis; infective endocarditis;
myocarditis; pericarditis; pericardial effusion; cardiomyopathy; hypertrophic cardiomyopathy;
dilated cardiomyopathy; heart failure; congestive heart failure; myocardial infarction; acute myocardial infarction;
coronary artery disease; coronary heart disease; angina pectoris; unstable angina; stable angina;
atrial fibrillation; atrial flutter; ventricular tachycardia; ventricular fibrillation; heart block;
long qt syndrome; hypertension; pulmonary hypertension; essential hypertension; hypotension;
orthostatic hypotension; stroke; ischemic stroke; hemorrhagic stroke; transient ischemic attack;
cerebrovascular disease; subarachnoid hemorrhage; intracerebral hemorrhage; deep vein thrombosis;
pulmonary embolism; venous thromboembolism; peripheral arterial disease; peripheral vascular disease;
aortic dissection; vasculitis; giant cell arteritis; kawasaki disease; raynaud phenomenon; varicose veins;
diabetes; diabetes mellitus; type 1 diabetes; type 2 diabetes; type 1 diabetes mellitus; type 2 diabetes mellitus;
gestational diabetes; diabetic ketoacidosis; diabetic neuropathy; diabetic retinopathy; diabetic nephropathy;
prediabetes; insulin resistance; metabolic syndrome; obesity; morbid obesity; hyperlipidemia;
hypercholesterolemia; familial hypercholesterolemia; hypertriglyceridemia; dyslipidemia; hypothyroidism;
hyperthyroidism; graves disease; hashimoto thyroiditis; thyroid nodule; goiter; cushing syndrome;
addison disease; adrenal insufficiency; hyperparathyroidism; hypoparathyroidism; acromegaly;
pituitary adenoma; polycystic ovary syndrome; osteoporosis; osteopenia; paget disease; gout; hyperuricemia;
rheumatoid arthritis; osteoarthritis; psoriatic arthritis; ankylosing spondylitis; systemic lupus erythematosus;
lupus; lupus nephritis; sjogren syndrome; scleroderma; systemic sclerosis; dermatomyositis; polymyositis;
fibromyalgia; polymyalgia rheumatica; juvenile idiopathic arthritis; septic arthritis; osteomyelitis;
asthma; severe asthma; chronic obstructive pulmonary disease; copd; emphysema; chronic bronchitis;
bronchiectasis; cystic fibrosis; pulmonary fibrosis; idiopathic pulmonary fibrosis; interstitial lung disease;
sarcoidosis; pneumonia; community acquired pneumonia; aspiration pneumonia; tuberculosis; pulmonary tuberculosis;
latent tuberculosis; pleural effusion; pneumothorax; acute respiratory distress syndrome; respiratory failure;
sleep apnea; obstructive sleep apnea; lung cancer; non small cell lung cancer; small cell lung cancer;
mesothelioma; breast cancer; metastatic breast cancer; triple negative breast cancer; ductal carcinoma in situ;
prostate cancer; metastatic prostate cancer; colorectal cancer; colon cancer; rectal cancer; anal cancer;
gastric cancer; esophageal cancer; pancreatic cancer; hepatocellular carcinoma; liver cancer; cholangiocarcinoma;
gallbladder cancer; kidney cancer; renal cell carcinoma; bladder cancer; urothelial carcinoma; testicular cancer;
ovarian cancer; cervical cancer; endometrial cancer; uterine cancer; vulvar cancer; head and neck cancer;
oral cancer; laryngeal cancer; nasopharyngeal carcinoma; thyroid cancer; papillary thyroid cancer;
brain tumor; glioblastoma; glioma; astrocytoma; meningioma; medulloblastoma; neuroblastoma; retinoblastoma;
melanoma; metastatic melanoma; basal cell carcinoma; squamous cell carcinoma; merkel cell carcinoma;
sarcoma; osteosarcoma; ewing sarcoma; rhabdomyosarcoma; kaposi sarcoma; gastrointestinal stromal tumor;
neuroendocrine tumor; carcinoid tumor; lymphoma; hodgkin lymphoma; non hodgkin lymphoma;
diffuse large b cell lymphoma; follicular lymphoma; mantle cell lymphoma; burkitt lymphoma; leukemia;
acute myeloid leukemia; acute lymphoblastic leukemia; chronic myeloid leukemia; chronic lymphocytic leukemia;
multiple myeloma; myelodysplastic syndrome; myelofibrosis; polycythemia vera; essential thrombocythemia;
amyloidosis; anemia; iron deficiency anemia; sickle cell disease; sickle cell anemia; thalassemia;
aplastic anemia; hemolytic anemia; pernicious anemia; hemophilia; von willebrand disease; thrombocytopenia;
immune thrombocytopenia; neutropenia; febrile neutropenia; polycythemia; leukocytosis; leukopenia;
thrombocytosis; coagulopathy; disseminated intravascular coagulation; hemochromatosis; porphyria;
chronic kidney disease; end stage renal disease; acute kidney injury; renal failure; renal insufficiency;
nephrotic syndrome; glomerulonephritis; iga nephropathy; polycystic kidney disease; kidney stones;
nephrolithiasis; urinary tract infection; pyelonephritis; urinary incontinence; overactive bladder;
benign prostatic hyperplasia; erectile dysfunction; infertility; endometriosis; uterine fibroids;
preeclampsia; eclampsia; ectopic pregnancy; miscarriage; preterm labor; placenta previa;
cirrhosis; liver cirrhosis; hepatitis; hepatitis b; hepatitis c; chronic hepatitis b; chronic hepatitis c;
autoimmune hepatitis; alcoholic hepatitis; fatty liver disease; nonalcoholic fatty liver disease;
nonalcoholic steatohepatitis; primary biliary cholangitis; primary sclerosing cholangitis; liver failure;
acute liver failure; portal hypertension; esophageal varices; ascites; hepatic encephalopathy;
gastroesophageal reflux disease; peptic ulcer disease; gastric ulcer; duodenal ulcer; gastritis;
celiac disease; crohn disease; ulcerative colitis; inflammatory bowel disease; irritable bowel syndrome;
diverticulitis; diverticulosis; appendicitis; cholecystitis; cholelithiasis; gallstones; pancreatitis;
acute pancreatitis; chronic pancreatitis; bowel obstruction; small bowel obstruction; gastroparesis;
clostridium difficile infection; gastroenteritis; hemorrhoids; anal fissure; barrett esophagus;
achalasia; eosinophilic esophagitis; hiatal hernia; inguinal hernia; umbilical hernia;
alzheimer disease; dementia; vascular dementia; frontotemporal dementia; lewy body dementia;
mild cognitive impairment; parkinson disease; multiple sclerosis; amyotrophic lateral sclerosis;
huntington disease; epilepsy; seizure disorder; status epilepticus; migraine; cluster headache;
tension headache; trigeminal neuralgia; peripheral neuropathy; guillain barre syndrome; myasthenia gravis;
muscular dystrophy; duchenne muscular dystrophy; spinal muscular atrophy; cerebral palsy; spina bifida;
hydrocephalus; meningitis; bacterial meningitis; encephalitis; brain abscess; traumatic brain injury;
concussion; spinal cord injury; restless legs syndrome; narcolepsy; insomnia; essential tremor;
bell palsy; neuromyelitis optica; depression; major depressive disorder; bipolar disorder; schizophrenia;
schizoaffective disorder; anxiety disorder; generalized anxiety disorder; panic disorder;
post traumatic stress disorder; obsessive compulsive disorder; attention deficit hyperactivity disorder;
autism; autism spectrum disorder; anorexia nervosa; bulimia nervosa; binge eating disorder;
alcohol use disorder; alcoholism; alcohol dependence; substance use disorder; opioid use disorder;
drug abuse; cocaine dependence; nicotine dependence; tobacco use disorder; personality disorder;
borderline personality disorder; delirium; psychosis; suicidal ideation; glaucoma; open angle glaucoma;
cataract; macular degeneration; age related macular degeneration; diabetic macular edema; uveitis;
retinal detachment; retinitis pigmentosa; dry eye disease; keratoconus; conjunctivitis; amblyopia;
strabismus; optic neuritis; hearing loss; tinnitus; otitis media; sinusitis; chronic rhinosinusitis;
allergic rhinitis; nasal polyps; tonsillitis; pharyngitis; atopic dermatitis; eczema; psoriasis;
plaque psoriasis; acne; rosacea; vitiligo; alopecia; alopecia areata; hidradenitis suppurativa; urticaria;
chronic urticaria; cellulitis; pressure ulcer; diabetic foot ulcer; venous leg ulcer; burn injury;
keloid; actinic keratosis; pemphigus; bullous pemphigoid; hiv; hiv infection; aids; hepatitis b infection;
influenza; covid 19; sars cov 2 infection; sepsis; septic shock; bacteremia; malaria; dengue; cholera;
lyme disease; syphilis; gonorrhea; chlamydia infection; herpes zoster; herpes simplex; cytomegalovirus infection;
epstein barr virus infection; human papillomavirus infection; respiratory syncytial virus infection;
fungal infection; candidiasis; aspergillosis; mrsa infection; osteogenesis imperfecta; marfan syndrome;
down syndrome; turner syndrome; fragile x syndrome; phenylketonuria; gaucher disease; fabry disease;
pompe disease; hemolytic uremic syndrome; thrombotic thrombocytopenic purpura; antiphospholipid syndrome;
graft versus host disease; transplant rejection; malnutrition; vitamin d deficiency; vitamin b12 deficiency;
iron deficiency; dehydration; hyponatremia; hypernatremia; hypokalemia; hyperkalemia; hypocalcemia;
hypercalcemia; hypomagnesemia; metabolic acidosis; lactic acidosis; rhabdomyolysis; anaphylaxis;
food allergy; peanut allergy; drug allergy; penicillin allergy; angioedema; hereditary angioedema;
carpal tunnel syndrome; low back pain; chronic low back pain; sciatica; lumbar spinal stenosis;
herniated disc; scoliosis; rotator cuff tear; frozen shoulder; plantar fasciitis; tendinitis;
hip fracture; osteoporotic fracture; vertebral fracture; fracture; ankle sprain; anterior cruciate ligament tear;
meniscus tear; complex regional pain syndrome; chronic pain; cancer pain; neuropathic pain;
postherpetic neuralgia; temporomandibular disorder; periodontitis; dental caries; gingivitis;
hypoglycemia; hyperglycemia; aneurysm; intracranial aneurysm; arteriovenous malformation; moyamoya disease;
carotid stenosis; renal artery stenosis; heart valve disease; congenital heart disease; atrial septal defect;
ventricular septal defect; patent ductus arteriosus; tetralogy of fallot; bicuspid aortic valve;
coarctation of the aorta; sudden cardiac arrest; cardiac arrest; cardiogenic shock; shock; syncope;
premature ovarian failure; menopause syndrome; premenstrual syndrome; vaginitis; bacterial vaginosis;
pelvic inflammatory disease; chronic fatigue syndrome; lymphedema; cachexia; sarcopenia; frailty;
pneumocystis pneumonia; covid pneumonia; bronchiolitis; croup; pertussis; measles; mumps; rubella;
varicella; hand foot and mouth disease; scarlet fever; rheumatic fever; rheumatic heart disease;
necrotizing enterocolitis; bronchopulmonary dysplasia; neonatal jaundice; respiratory distress syndrome;
failure to thrive; colic; intussusception; pyloric stenosis; hirschsprung disease; biliary atresia;
wilms tumor; hepatoblastoma; germ cell tumor; pheochromocytoma; insulinoma; adrenal adenoma;
primary aldosteronism; hyperaldosteronism; diabetes insipidus; syndrome of inappropriate antidiuretic hormone;
hypogonadism; klinefelter syndrome; precocious puberty; growth hormone deficiency; short stature;
osteonecrosis; avascular necrosis; lupus anticoagulant; factor v leiden; protein c deficiency;
"""

SOSY = """
chest pain; chest tightness; chest discomfort; shortness of breath; dyspnea; dyspnea on exertion;
orthopnea; paroxysmal nocturnal dyspnea; cough; productive cough; dry cough; hemoptysis; wheezing;
palpitations; dizziness; lightheadedness; vertigo; fatigue; weakness; malaise; lethargy; fever; chills;
night sweats; weight loss; weight gain; loss of appetite; anorexia; nausea; vomiting; hematemesis;
diarrhea; constipation; abdominal pain; abdominal distension; bloating; heartburn; dysphagia; odynophagia;
melena; hematochezia; rectal bleeding; jaundice; pruritus; itching; rash; hives; headache; severe headache;
neck pain; neck stiffness; back pain; joint pain; arthralgia; myalgia; muscle pain; muscle weakness;
muscle cramps; stiffness; morning stiffness; swelling; edema; leg swelling; peripheral edema;
ankle swelling; numbness; tingling; paresthesia; tremor; seizure; seizures; confusion; altered mental status;
memory loss; disorientation; agitation; hallucinations; insomnia; somnolence; loss of consciousness;
fainting; blurred vision; double vision; vision loss; eye pain; photophobia; ear pain; hearing difficulty;
sore throat; hoarseness; nasal congestion; runny nose; sneezing; epistaxis; dysuria; urinary frequency;
urinary urgency; hematuria; polyuria; polydipsia; nocturia; urinary retention; flank pain; pelvic pain;
vaginal bleeding; vaginal discharge; dysmenorrhea; amenorrhea; menorrhagia; hot flashes; breast pain;
breast lump; cyanosis; pallor; diaphoresis; sweating; tachycardia; bradycardia; tachypnea; bradypnea;
hypoxia; hypoxemia; apnea; snoring; dry mouth; dry eyes; hair loss; easy bruising; bleeding; bruising;
lymphadenopathy; enlarged lymph nodes; splenomegaly; hepatomegaly; difficulty walking; gait disturbance;
falls; loss of balance; slurred speech; aphasia; dysarthria; facial droop; hemiparesis; paralysis;
neuropathic symptoms; burning pain; sharp pain; dull pain; radiating pain; pain; chronic cough;
anxiety; irritability; depressed mood; mood swings; poor concentration; sleep disturbance; nightmares;
appetite loss; early satiety; belching; flatulence; fecal incontinence; incontinence; tenesmus;
pleuritic pain; substernal chest pain; exertional chest pain; claudication; leg pain; calf pain;
skin lesions; skin ulcer; ulcer; blister; redness; erythema; warmth; tenderness; joint swelling;
limited range of motion; limping; facial swelling; tongue swelling; difficulty breathing;
respiratory distress; grunting; irritable; poor feeding; excessive crying; developmental delay;
""".replace("seizures;", "")

FNDG = """
smokes; smoker; current smoker; former smoker; smoking; cigarette smoking;
tobacco use; alcohol use; alcohol consumption; heavy drinking; drug use; intravenous drug use;
pregnancy; pregnant; breastfeeding; lactation; postmenopausal; premenopausal; sexually active;
sedentary lifestyle; physical inactivity; overweight; underweight; elevated blood pressure;
high blood pressure; low blood pressure; irregular heartbeat; heart murmur; systolic murmur;
diastolic murmur; abnormal ecg; st elevation; st depression; t wave inversion; left ventricular hypertrophy;
reduced ejection fraction; preserved ejection fraction; elevated troponin; positive troponin;
elevated liver enzymes; abnormal liver function; proteinuria; microalbuminuria; glycosuria;
hyperbilirubinemia; elevated creatinine; positive blood culture; positive urine culture;
positive pregnancy test; negative pregnancy test; abnormal chest x ray; pulmonary nodule; lung nodule;
lung mass; infiltrate; consolidation; ground glass opacity; cardiomegaly; pulmonary edema;
decreased breath sounds; crackles; rales; rhonchi; stridor; jugular venous distension; hepatojugular reflux;
positive babinski sign; hyperreflexia; hyporeflexia; papilledema; nystagmus; ptosis; anisocoria;
murmur; gallop; friction rub; bruit; family history; history of falls; prior surgery;
previous myocardial infarction; poor glycemic control; medication noncompliance; nonadherence;
immunocompromised; immunosuppressed; bedridden; wheelchair bound; homeless; unemployed; obese; frail;
allergies; no known drug allergies; hypersensitivity; intolerance; contraindication; life expectancy;
terminal illness; healthy volunteer; healthy; able to walk; ambulatory; independent living;
informed consent; written informed consent; measurable disease; metastatic disease; recurrent disease;
refractory disease; relapsed disease; progressive disease; stable disease; remission; complete remission;
partial response; brain metastases; bone metastases; liver metastases; positive lymph nodes;
her2 positive; her2 negative; estrogen receptor positive; hormone receptor positive; egfr mutation;
alk rearrangement; brca mutation; brca1 mutation; brca2 mutation; kras mutation; braf mutation;
microsatellite instability; pd l1 expression; ecog performance status; karnofsky performance status;
adequate organ function; adequate bone marrow function; adequate renal function; adequate hepatic function;
qt prolongation; prolonged qt interval; positive hiv test; seropositive; seronegative; anemic;
hypertensive; diabetic; dehydrated; febrile; afebrile; tachycardic; hypotensive; hypoxic; jaundiced;
cachectic; confused; obtunded; comatose; intubated; ventilated; sedated; unresponsive; alert;
oriented; cooperative; well appearing; ill appearing; distressed; in no acute distress;
"""

TOPP = """
aortic valve replacement; elective aortic valve replacement; transcatheter aortic valve replacement;
aortic aneurysm dilation repair; aortic aneurysm repair; mitral valve repair; mitral valve replacement;
valve replacement; valve repair; coronary artery bypass grafting; coronary artery bypass; cabg;
percutaneous coronary intervention; angioplasty; coronary angioplasty; stent placement; coronary stent;
cardiac catheterization; pacemaker implantation; pacemaker; implantable cardioverter defibrillator;
cardiac resynchronization therapy; catheter ablation; ablation; cardioversion; heart transplant;
heart transplantation; lung transplant; lung transplantation; liver transplant; liver transplantation;
kidney transplant; kidney transplantation; renal transplantation; pancreas transplant;
bone marrow transplant; bone marrow transplantation; stem cell transplant; hematopoietic stem cell transplantation;
allogeneic stem cell transplantation; autologous stem cell transplantation; organ transplantation;
dialysis; hemodialysis; peritoneal dialysis; renal replacement therapy; mechanical ventilation;
noninvasive ventilation; oxygen therapy; supplemental oxygen; intubation; tracheostomy; thoracentesis;
paracentesis; lumbar puncture; chemotherapy; adjuvant chemotherapy; neoadjuvant chemotherapy;
radiotherapy; radiation therapy; stereotactic radiosurgery; brachytherapy; immunotherapy;
targeted therapy; hormone therapy; hormone replacement therapy; androgen deprivation therapy;
endocrine therapy; surgery; major surgery; minor surgery; elective surgery; emergency surgery;
bariatric surgery; gastric bypass; sleeve gastrectomy; cholecystectomy; appendectomy; colectomy;
hemicolectomy; gastrectomy; esophagectomy; pancreatectomy; whipple procedure; hepatectomy; nephrectomy;
cystectomy; prostatectomy; radical prostatectomy; hysterectomy; oophorectomy; mastectomy; lumpectomy;
breast conserving surgery; thyroidectomy; parathyroidectomy; adrenalectomy; splenectomy; craniotomy;
laminectomy; spinal fusion; discectomy; hip replacement; total hip arthroplasty; knee replacement;
total knee arthroplasty; arthroscopy; amputation; carotid endarterectomy; endovascular repair;
thrombectomy; thrombolysis; embolization; biopsy; liver biopsy; kidney biopsy; bone marrow biopsy;
colonoscopy; endoscopy; upper endoscopy; bronchoscopy; cystoscopy; laparoscopy; physical therapy;
occupational therapy; speech therapy; cognitive behavioral therapy; psychotherapy; counseling;
electroconvulsive therapy; transcranial magnetic stimulation; deep brain stimulation;
spinal cord stimulation; nerve block; epidural injection; acupuncture; cardiac rehabilitation;
pulmonary rehabilitation; rehabilitation; blood transfusion; transfusion; plasmapheresis;
plasma exchange; phototherapy; photodynamic therapy; laser therapy; cryotherapy; vaccination;
immunization; insulin therapy; anticoagulation; anticoagulant therapy; antiplatelet therapy;
antibiotic therapy; antiviral therapy; antiretroviral therapy; smoking cessation; weight loss program;
dietary intervention; exercise training; exercise program; lifestyle intervention; palliative care;
hospice care; intensive care; resuscitation; cardiopulmonary resuscitation; defibrillation;
cesarean section; in vitro fertilization; assisted reproduction; contraception; circumcision;
cataract surgery; vitrectomy; corneal transplant; cochlear implant; tonsillectomy; adenoidectomy;
sinus surgery; dental extraction; root canal; wound care; debridement; skin graft; negative pressure wound therapy;
enteral nutrition; parenteral nutrition; tube feeding; gastrostomy; colostomy; ileostomy;
central venous catheter; port placement; radiofrequency ablation; transarterial chemoembolization;
car t cell therapy; gene therapy; cell therapy; monoclonal antibody therapy; checkpoint inhibitor therapy;
"""

PHSU = """
aspirin; clopidogrel; prasugrel; ticagrelor; warfarin; heparin; low molecular weight heparin; enoxaparin;
apixaban; rivaroxaban; dabigatran; edoxaban; statin; atorvastatin; simvastatin; rosuvastatin; pravastatin;
ezetimibe; metformin; insulin; insulin glargine; sulfonylurea; glipizide; glyburide; sitagliptin;
empagliflozin; dapagliflozin; canagliflozin; liraglutide; semaglutide; dulaglutide; exenatide; pioglitazone;
lisinopril; enalapril; ramipril; ace inhibitor; angiotensin receptor blocker; losartan; valsartan;
irbesartan; candesartan; beta blocker; metoprolol; atenolol; carvedilol; bisoprolol; propranolol;
calcium channel blocker; amlodipine; diltiazem; verapamil; nifedipine; diuretic; furosemide;
hydrochlorothiazide; chlorthalidone; spironolactone; eplerenone; digoxin; amiodarone; sotalol; dronedarone;
flecainide; nitroglycerin; isosorbide mononitrate; hydralazine; sacubitril valsartan; ivabradine;
prednisone; prednisolone; methylprednisolone; dexamethasone; hydrocortisone; corticosteroid; corticosteroids;
steroid; steroids; methotrexate; hydroxychloroquine; sulfasalazine; leflunomide; azathioprine;
mycophenolate mofetil; cyclosporine; tacrolimus; sirolimus; cyclophosphamide; rituximab; infliximab;
adalimumab; etanercept; tocilizumab; abatacept; ustekinumab; secukinumab; vedolizumab; dupilumab;
omalizumab; mepolizumab; benralizumab; albuterol; salbutamol; ipratropium; tiotropium; fluticasone;
budesonide; montelukast; theophylline; inhaled corticosteroid; bronchodilator; antibiotic; antibiotics;
amoxicillin; penicillin; ampicillin; piperacillin tazobactam; ceftriaxone; cefazolin; cephalexin; vancomycin;
linezolid; daptomycin; azithromycin; clarithromycin; doxycycline; ciprofloxacin; levofloxacin;
moxifloxacin; metronidazole; trimethoprim sulfamethoxazole; nitrofurantoin; gentamicin; meropenem;
imipenem; rifampin; isoniazid; fluconazole; voriconazole; amphotericin b; acyclovir; valacyclovir;
oseltamivir; remdesivir; tenofovir; emtricitabine; dolutegravir; efavirenz; entecavir; sofosbuvir;
ribavirin; interferon; peginterferon; cisplatin; carboplatin; oxaliplatin; paclitaxel; docetaxel;
doxorubicin; epirubicin; gemcitabine; capecitabine; fluorouracil; irinotecan; etoposide; vincristine;
vinorelbine; pemetrexed; temozolomide; bevacizumab; trastuzumab; pertuzumab; cetuximab; panitumumab;
pembrolizumab; nivolumab; atezolizumab; durvalumab; ipilimumab; imatinib; dasatinib; nilotinib; erlotinib;
gefitinib; osimertinib; crizotinib; alectinib; sorafenib; sunitinib; pazopanib; lenvatinib; cabozantinib;
olaparib; niraparib; palbociclib; ribociclib; abemaciclib; tamoxifen; letrozole; anastrozole; exemestane;
fulvestrant; leuprolide; goserelin; enzalutamide; abiraterone; bicalutamide; lenalidomide; thalidomide;
bortezomib; carfilzomib; daratumumab; ibrutinib; venetoclax; azacitidine; decitabine; cytarabine;
hydroxyurea; filgrastim; pegfilgrastim; erythropoietin; epoetin alfa; darbepoetin; iron supplement;
ferrous sulfate; intravenous iron; folic acid; vitamin d; vitamin b12; calcium supplement; bisphosphonate;
alendronate; zoledronic acid; denosumab; teriparatide; raloxifene; levothyroxine; methimazole;
propylthiouracil; estrogen; progesterone; testosterone; oral contraceptive; growth hormone; oxytocin;
acetaminophen; paracetamol; ibuprofen; naproxen; diclofenac; celecoxib; nsaid; nsaids; opioid; opioids;
morphine; oxycodone; hydrocodone; fentanyl; tramadol; methadone; buprenorphine; naloxone; naltrexone;
gabapentin; pregabalin; duloxetine; amitriptyline; nortriptyline; sertraline; fluoxetine; escitalopram;
citalopram; paroxetine; venlafaxine; bupropion; mirtazapine; trazodone; ssri; antidepressant;
antidepressants; lithium; valproate; valproic acid; lamotrigine; carbamazepine; levetiracetam; phenytoin;
topiramate; lacosamide; clonazepam; lorazepam; diazepam; alprazolam; benzodiazepine; benzodiazepines;
zolpidem; melatonin; quetiapine; olanzapine; risperidone; aripiprazole; haloperidol; clozapine;
antipsychotic; antipsychotics; methylphenidate; amphetamine; atomoxetine; donepezil; memantine;
rivastigmine; galantamine; levodopa; carbidopa levodopa; pramipexole; ropinirole; rasagiline;
interferon beta; glatiramer acetate; fingolimod; natalizumab; ocrelizumab; dimethyl fumarate;
sumatriptan; triptan; botulinum toxin; omeprazole; pantoprazole; esomeprazole; proton pump inhibitor;
ranitidine; famotidine; ondansetron; metoclopramide; loperamide; mesalamine; lactulose; rifaximin;
ursodiol; cholestyramine; allopurinol; febuxostat; colchicine; sildenafil; tadalafil; tamsulosin;
finasteride; oxybutynin; mirabegron; epinephrine; norepinephrine; dopamine; dobutamine; vasopressin;
atropine; adenosine; magnesium sulfate; potassium chloride; sodium bicarbonate; albumin; immunoglobulin;
intravenous immunoglobulin; vaccine; influenza vaccine; placebo; investigational drug; study drug;
antihypertensive; antihypertensives; anticoagulant; anticoagulants; antiplatelet; immunosuppressant;
immunosuppressants; chemotherapeutic agent; biologic; biologics; nicotine replacement therapy; varenicline;
cannabis; cannabidiol; ketamine; propofol; midazolam; lidocaine; bupivacaine; contrast agent; gadolinium;
"""

LBTR = """
hemoglobin; hemoglobin a1c; hba1c; glycated hemoglobin; hematocrit; white blood cell count; wbc count;
platelet count; absolute neutrophil count; lymphocyte count; red blood cell count; mean corpuscular volume;
serum creatinine; creatinine clearance; estimated glomerular filtration rate; egfr; blood urea nitrogen;
serum sodium; serum potassium; serum calcium; serum magnesium; serum phosphate; serum albumin;
total bilirubin; direct bilirubin; alanine aminotransferase; aspartate aminotransferase; alkaline phosphatase;
gamma glutamyl transferase; alt; ast; lactate dehydrogenase; troponin; troponin i; troponin t;
brain natriuretic peptide; nt probnp; creatine kinase; fasting glucose; fasting plasma glucose;
blood glucose; random glucose; oral glucose tolerance test; ldl cholesterol; hdl cholesterol;
total cholesterol; triglycerides; lipid panel; thyroid stimulating hormone; tsh; free t4;
prothrombin time; international normalized ratio; inr; partial thromboplastin time; d dimer; fibrinogen;
c reactive protein; erythrocyte sedimentation rate; procalcitonin; ferritin; serum iron; transferrin saturation;
vitamin d level; vitamin b12 level; folate level; uric acid; lactate; arterial blood gas; ph;
oxygen saturation; blood pressure; systolic blood pressure; diastolic blood pressure; heart rate; pulse;
respiratory rate; body temperature; temperature; body mass index; bmi; ejection fraction;
left ventricular ejection fraction; qtc interval; cd4 count; viral load; hiv viral load; psa;
prostate specific antigen; cea; ca 125; ca 19 9; alpha fetoprotein; urinalysis; urine protein;
urine albumin to creatinine ratio; urine culture; blood culture; sputum culture; stool culture;
anti nuclear antibody; rheumatoid factor; anti ccp antibody; complement levels; immunoglobulin levels;
serum protein electrophoresis; cortisol; acth; insulin level; c peptide; testosterone level; estradiol;
fsh; lh; prolactin; beta hcg; pregnancy test; hepatitis b surface antigen; hepatitis c antibody;
hiv test; tuberculin skin test; interferon gamma release assay; forced expiratory volume; fev1;
forced vital capacity; fvc; diffusing capacity; peak flow; spirometry; electrocardiogram; ecg; ekg;
echocardiogram; echocardiography; chest x ray; ct scan; computed tomography; mri; magnetic resonance imaging;
pet scan; ultrasound; mammography; bone density; dexa scan; stress test; holter monitoring;
cardiac enzymes; liver function tests; renal function tests; complete blood count; cbc;
basic metabolic panel; comprehensive metabolic panel; coagulation panel; toxicology screen;
urine drug screen; blood alcohol level; ammonia level; lipase; amylase;
"""

AAPP = """
insulin receptor; albumin protein; hemoglobin protein; troponin protein; collagen; fibrin; thrombin;
antithrombin; plasminogen; amyloid beta; tau protein; alpha synuclein; huntingtin; dystrophin;
her2 protein; estrogen receptor; progesterone receptor; androgen receptor; epidermal growth factor receptor;
vascular endothelial growth factor; vegf; tumor necrosis factor; tnf alpha; interleukin 6; interleukin 1;
interleukin 17; interleukin 23; interferon gamma; pd 1; pd l1; ctla 4; cd20; cd19; cd38; bcl 2;
p53; brca1 protein; brca2 protein; kras protein; braf protein; alk protein; egfr protein; c kit;
bcr abl; jak2; flt3; idh1; idh2; cyclin d1; ki 67; immunoglobulin e; ige; immunoglobulin g; igg;
immunoglobulin a; iga; immunoglobulin m; igm; c reactive protein molecule; ferritin protein; transferrin;
hepcidin; erythropoietin hormone; leptin; adiponectin; ghrelin; glucagon; glucagon like peptide 1;
glp 1; amylin; parathyroid hormone; calcitonin; thyroglobulin; growth hormone protein; prolactin hormone;
oxytocin hormone; vasopressin hormone; angiotensin; renin; aldosterone; natriuretic peptide;
lipoprotein a; apolipoprotein b; apolipoprotein e; apoe4; pcsk9; factor viii; factor ix;
von willebrand factor; protein c; protein s; alpha 1 antitrypsin; cftr; acetylcholine receptor;
acetylcholine receptor antibody; aquaporin 4; myelin basic protein; gad antibody; anti tpo antibody;
thyroid peroxidase; anti dsdna; anti smith antibody; anca; anti gbm antibody; spike protein;
"""

CELL = """
red blood cells; white blood cells; platelets; neutrophils; lymphocytes; monocytes; eosinophils;
basophils; t cells; b cells; cd4 cells; cd8 cells; natural killer cells; plasma cells; stem cells;
hematopoietic stem cells; mesenchymal stem cells; blast cells; blasts; tumor cells; cancer cells;
circulating tumor cells; epithelial cells; endothelial cells; beta cells; islet cells; hepatocytes;
cardiomyocytes; neurons; macrophages; dendritic cells; mast cells; fibroblasts; keratinocytes;
melanocytes; osteoblasts; osteoclasts; chondrocytes; sperm; oocytes; reticulocytes; schistocytes;
myeloblasts; lymphoblasts; regulatory t cells; car t cells; germ cells; goblet cells;
"""

HOPS = """
tobacco; tobacco smoke; cigarette smoke; secondhand smoke; asbestos; lead poisoning; mercury; arsenic; benzene;
radon; silica; coal dust; carbon monoxide; alcohol; ethanol; methanol; cocaine; heroin; methamphetamine;
marijuana; nicotine; air pollution; particulate matter; pesticides; herbicides; ionizing radiation;
ultraviolet radiation; formaldehyde; vinyl chloride; cadmium; chromium; beryllium; organophosphates;
aflatoxin; snake venom; carbon tetrachloride; toxic fumes; smoke inhalation;
"""

ORGF = """
menstruation; menopause; ovulation; puberty; fertility; conception; gestation; labor; delivery;
childbirth; lactation process; breast feeding; growth; aging; sleep; wakefulness; circadian rhythm;
metabolism; glucose metabolism; digestion; respiration; breathing; circulation; blood flow;
blood coagulation; hemostasis; immune response; inflammation; wound healing; cell proliferation;
apoptosis; angiogenesis; bone remodeling; muscle contraction; heart rhythm; sinus rhythm;
normal sinus rhythm; urination; defecation; bowel movement; bowel habits; appetite; thirst;
body weight; weight maintenance; ovarian function; renal function; hepatic function; cognitive function;
cognition; memory; mood; sexual function; erection; ejaculation; spermatogenesis; menstrual cycle;
"""

QNCO = """
dose; dosage; daily dose; maximum dose; single dose; high dose; low dose; cumulative dose;
frequency; duration; concentration; volume; weight; height; body weight; body surface area; level;
levels; count; ratio; percentage; score; index; rate; range; threshold; upper limit of normal;
lower limit of normal; normal range; reference range; baseline; body mass; waist circumference;
blood volume; pack years; pack year; number of cigarettes; units of alcohol; drinks per week; mean;
median; standard deviation; grade; stage; stage i; stage ii; stage iii; stage iv; grade 1; grade 2;
grade 3; grade 4; nyha class; nyha class ii; nyha class iii; nyha class iv; child pugh class;
child pugh score; meld score; apache ii score; glasgow coma scale; mini mental state examination;
montreal cognitive assessment; gleason score; tnm stage; ecog score; karnofsky score; apgar score;
pain score; visual analog scale; numeric rating scale; body temperature value; heart rate value;
"""

AGGP = """
infant; infants; newborn; neonate; neonates; premature infant; preterm infant; toddler; toddlers;
preschool child; child; children; pediatric; paediatric; school age child; adolescent; adolescents;
teenager; teenagers; youth; young adult; young adults; adult; adults; middle aged; middle aged adult;
elderly; older adults; older adult; aged; geriatric; seniors; octogenarian; nonagenarian; centenarian;
postmenopausal women; premenopausal women; women of childbearing potential;
"""

ORGANS = [
    "lung", "breast", "prostate", "colon", "rectal", "pancreatic", "gastric", "liver", "kidney", "bladder",
    "ovarian", "cervical", "endometrial", "thyroid", "brain", "skin", "bone", "esophageal", "head and neck",
    "testicular", "renal", "biliary", "adrenal", "oral", "tongue", "laryngeal", "pharyngeal", "penile",
    "vulvar", "vaginal", "uterine", "anal", "small intestine", "appendix", "salivary gland", "thymus",
    "pleural", "peritoneal", "spinal", "eye",
]
ORGAN_DSYN = ["cancer", "carcinoma", "tumor", "neoplasm", "malignancy", "metastasis", "adenocarcinoma",
              "lesion", "disease"]
ORGAN_TOPP = ["surgery", "resection", "biopsy", "transplant", "radiotherapy", "irradiation"]
ORGAN_FNDG = ["mass", "nodule", "enlargement", "involvement"]

SEVERITY = ["mild", "moderate", "severe", "acute", "chronic", "recurrent", "advanced", "metastatic",
            "refractory", "uncontrolled", "active"]
SEVERITY_TARGETS = ["asthma", "depression", "hypertension", "heart failure", "kidney disease", "anemia",
                    "pain", "pancreatitis", "hepatitis", "infection", "psoriasis", "atopic dermatitis",
                    "ulcerative colitis", "crohn disease", "rheumatoid arthritis", "liver disease",
                    "renal impairment", "hepatic impairment", "cognitive impairment", "malnutrition",
                    "diarrhea", "migraine", "sinusitis", "leukemia", "lymphoma"]
SEVERITY_SOSY = {"pain", "diarrhea"}


def split(block):
    seen = []
    for item in block.replace("\n", " ").split(";"):
        term = " ".join(item.split())
        if term and term not in seen:
            seen.append(term)
    return seen


def main():
    rows = {}

    def add(surface, semtype, preferred=None):
        key = surface.lower()
        if key not in rows:
            rows[key] = (preferred or key, semtype)

    for block, semtype in [(DSYN, "dsyn"), (SOSY, "sosy"), (FNDG, "fndg"), (TOPP, "topp"), (PHSU, "phsu"),
                           (LBTR, "lbtr"), (AAPP, "aapp"), (CELL, "cell"), (HOPS, "hops"), (ORGF, "orgf"),
                           (QNCO, "qnco"), (AGGP, "aggp")]:
        for term in split(block):
            add(term, semtype)

    for organ in ORGANS:
        for noun in ORGAN_DSYN:
            add(f"{organ} {noun}", "dsyn")
        for noun in ORGAN_TOPP:
            add(f"{organ} {noun}", "topp")
        for noun in ORGAN_FNDG:
            add(f"{organ} {noun}", "fndg")
    for sev in SEVERITY:
        for target in SEVERITY_TARGETS:
            add(f"{sev} {target}", "sosy" if target in SEVERITY_SOSY else "dsyn")
    for prefix, semtype in [("history of", "fndg"), ("prior", "fndg")]:
        for target in ["stroke", "myocardial infarction", "cancer", "seizures", "heart failure",
                       "chemotherapy", "radiotherapy", "surgery", "transplant", "malignancy"]:
            add(f"{prefix} {target}", semtype)

    out = sys.stdout
    out.write("# surface\tpreferred\tsemtype\n")
    out.write("# Generated by tools/make_lexicon.py; edit the script, not this file.\n")
    for surface in sorted(rows):
        preferred, semtype = rows[surface]
        out.write(f"{surface}\t{preferred}\t{semtype}\n")


if __name__ == "__main__":
    main()
