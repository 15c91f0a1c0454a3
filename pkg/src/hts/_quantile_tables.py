"""Quantiles of the S0-standardized stable law on an (alpha, beta) grid.

Generated by tools/gen_stable_quantile_tables.py; do not edit by hand.
"""

ALPHAS = [0.5, 0.6, 0.7, 0.8, 0.9, 1.0, 1.1, 1.2, 1.3, 1.4, 1.5, 1.6, 1.7, 1.8, 1.9, 1.95, 2.0]

BETAS = [-1.0, -0.875, -0.75, -0.625, -0.5, -0.375, -0.25, -0.125, -0.0, 0.125, 0.25, 0.375, 0.5, 0.625, 0.75, 0.875, 1.0]

Q05 = [
    [-253.6479089470319, -221.1528969123177, -191.17996868749094, -163.39566655521253, -137.7999995068811, -114.392979919887, -93.17462534552058, -74.14496151301347, -57.304259268147874, -42.65188721941693, -30.188648598669104, -19.914515694685544, -11.829921773431535, -5.93598295021288, -2.2367809918859325, -0.7880737371112718, -0.7396822283788255],
    [-96.49038871236256, -86.03181267551722, -76.06674417587152, -66.60749340414735, -57.66768707514261, -49.262548510049164, -41.40925655102384, -34.12743213047544, -27.439818699487404, -21.373270908204926, -15.960262662094099, -11.241339116740807, -7.269472683249451, -4.118909757549813, -1.9080237767826784, -0.9342323515523419, -0.8523277856207164],
    [-48.56258281959314, -43.94006078071211, -39.46777024822219, -35.15234707394716, -31.001297661689915, -27.023202259276406, -23.295022242982494, -19.62732635217585, -16.235162461828352, -13.068577312791684, -10.149105034269144, -7.505006703573139, -5.1755527032924435, -3.2204074903917124, -1.7467103908104218, -1.064593376812909, -0.9565026545676043],
    [-29.02028351945187, -26.54380123113657, -24.121770961449158, -21.7583080504086, -19.453959498610793, -17.222521716989764, -15.049808469113751, -12.960492160093773, -10.956245660885175, -9.046929810773856, -7.245481000570033, -5.56971022843325, -4.045905392385016, -2.717389958079244, -1.672808328737565, -1.181204887841659, -1.0547806877853394],
    [-19.402282241047182, -17.896368589713404, -16.411679516221934, -14.949862247431811, -13.512858512163442, -12.10298506631193, -10.723053924534193, -9.376549718084746, -8.06790236476112, -6.802928349810073, -5.589593311945615, -4.43945027423084, -3.3707100440954973, -2.4162168093877847, -1.6546524789305885, -1.2868891368497588, -1.1491765917210384],
    [-14.004804441113269, -13.006405584334804, -12.016320299572893, -11.03538972389489, -10.064628955177815, -9.105283860081217, -8.158914476020152, -7.227522062474035, -6.3137515146750305, -5.421232338278098, -4.555195670529561, -3.723703491487239, -2.9404605791202942, -2.232871510796885, -1.675940859288282, -1.3843169313527919, -1.2413046960742544],
    [-10.668728144136987, -9.966294080392261, -9.266721356873894, -8.570446221145694, -7.878016081871551, -7.1901310558328895, -6.507707007495754, -5.831975026429136, -5.164646084370099, -4.508200328434218, -3.8664360121142267, -3.2456252529337815, -2.657341349070123, -2.127127395852404, -1.7184569750909469, -1.475805859512334, -1.3325187026194991],
    [-8.448259753211353, -7.93380837744155, -7.419874711329253, -6.906697423227852, -6.394594828647718, -5.883999106918549, -5.375509937117031, -4.869982055890383, -4.368675430094755, -3.8735292482392114, -3.387702977192202, -2.9167615677410454, -2.4716272275523554, -2.0761010892539216, -1.7698928401219618, -1.5633419890333922, -1.4240207639021778],
    [-6.88071463243229, -6.494379637568331, -6.107641878722035, -5.7206564472556725, -5.333646005735574, -4.946933114497904, -4.560992122608873, -4.176535842513447, -3.794667407789882, -3.4171619636528625, -3.0470245552112805, -2.689661907862712, -2.355253885763321, -2.0612400942644697, -1.8253979923212318, -1.6486655744189707, -1.516947973473639],
    [-5.719518086118433, -5.4260430961767385, -5.131958190324368, -4.83740327595048, -4.5425865082535175, -4.247818155957279, -3.9535650147426975, -3.660540702270636, -3.3698605061026408, -3.083314031292282, -2.803843632018178, -2.536298350628836, -2.288128486961101, -2.068402973030544, -1.8835390075497274, -1.7333695039673689, -1.6124467133507276],
    [-4.824235965792947, -4.602038634275569, -4.379419750852216, -4.156545993277051, -3.933658790179566, -3.711108803068209, -3.4894085530138406, -3.269313009860476, -3.0519409731486884, -2.8389466502834897, -2.632721396698479, -2.4365119997538582, -2.254185841176658, -2.089379856811016, -1.9442939976488975, -1.8189981716675578, -1.7117446658280309],
    [-4.111047367912729, -3.9467372719926552, -3.782416639365198, -3.618288782357561, -3.4546289588365493, -3.2918093761103715, -3.1303315972096684, -2.970865876524162, -2.8142928060174413, -2.6617342336771475, -2.5145480456025715, -2.374252306755742, -2.242355746586857, -2.1201176601323537, -2.0083199345100127, -1.9071492424244976, -1.816230285985429],
    [-3.5290662887679973, -3.414373505918737, -3.3001039741073743, -3.186447706821363, -3.0736371474213944, -2.9619537192351704, -2.8517332455847026, -2.7433685563180368, -2.637306980977955, -2.534040165366099, -2.4340841763350705, -2.337949647721456, -2.246104641528397, -2.1589360453423097, -2.0767170971903965, -1.9995877668737236, -1.9275513256177816],
    [-3.0483048598378963, -2.977685988666588, -2.9076248189534573, -2.8382171140651735, -2.769567177947068, -2.701787241589797, -2.6349963574475406, -2.5693187331507925, -2.50488148074843, -2.441811802966925, -2.38023371473963, -2.320264470625037, -2.2620109191033637, -2.2055660591411095, -2.151006070249242, -2.0983880494598406, -2.047748623552276],
    [-2.6515464265347886, -2.619635544702399, -2.5879832756858434, -2.556603435460991, -2.525509872316604, -2.494716392970098, -2.4642366845228003, -2.4340842285406192, -2.404272218573684, -2.3748134748662046, -2.3457203270065015, -2.3170045886878095, -2.288677413524864, -2.2607492403663185, -2.2332297167891193, -2.206127627475785, -2.1794508351425113],
    [-2.4807443164592855, -2.4657252116115944, -2.450784379461105, -2.43592339644905, -2.421143819187379, -2.406447186041869, -2.391835008142398, -2.3773087714623165, -2.362869933121586, -2.3485199197431688, -2.3342601225734496, -2.320091897457875, -2.306016561792098, -2.2920353921919636, -2.278149617396457, -2.2643604349114836, -2.2506689802942565],
    [-2.3261743073533476, -2.3261743073533476, -2.3261743073533476, -2.3261743073533476, -2.3261743073533476, -2.3261743073533476, -2.3261743073533476, -2.3261743073533476, -2.3261743073533476, -2.3261743073533476, -2.3261743073533476, -2.3261743073533476, -2.3261743073533476, -2.3261743073533476, -2.3261743073533476, -2.3261743073533476, -2.3261743073533476],
]

Q25 = [
    [-8.84920432156657, -7.4844652345363025, -6.239332907817015, -5.113842057779575, -4.108041139577987, -3.2219999711586724, -2.455823164496467, -1.8096753503774172, -1.283832775357283, -0.8788017172263858, -0.5956406491420052, -0.43712196752645033, -0.3995601142699317, -0.3882960038878474, -0.36093756423488643, -0.3132806330585852, -0.2443155699456057],
    [-5.9472992920289025, -5.144032762090815, -4.395394369725569, -3.7030289106341643, -3.0687988568078963, -2.494841072677587, -1.9836478896333714, -1.5381886699235718, -1.16210396367633, -0.8600435724879094, -0.6383275675904736, -0.506240679694081, -0.4590407083640049, -0.4314439988285782, -0.39445616803003697, -0.3428971344728791, -0.27555290998564325],
    [-4.452489293540016, -3.9145494649158974, -3.4062473779062135, -2.9291657174195618, -2.4851379451649227, -2.076319664584314, -1.7052914058058226, -1.375212712456882, -1.090064220035667, -0.8550459923064692, -0.6772157019850547, -0.565252880714362, -0.5097687802287261, -0.4702686392519254, -0.42670376988836095, -0.3734791596388703, -0.3089322357290235],
    [-3.5595707509132373, -3.170211568965376, -2.7989183887992937, -2.447003387976278, -2.116014297575624, -1.8078056028475717, -1.5246411254598877, -1.2693459022597988, -1.045534735334348, -0.8579397851418712, -0.7126515094982323, -0.6146899004530617, -0.5538536524137468, -0.5064711548537127, -0.458696975312109, -0.4051741119068805, -0.3438936107513813],
    [-2.9697473349897767, -2.6739626339364775, -2.3901600416169595, -2.119405137383719, -1.8629712948143848, -1.6224036915975446, -1.399609575138161, -1.1969852191376513, -1.0175834075648431, -0.865259451935824, -0.7443073780808067, -0.6562497125802356, -0.5930434948379252, -0.5410791324500446, -0.49096818613949506, -0.43804881068743384, -0.3801850675204745],
    [-2.55081568281751, -2.3192844606096124, -2.096222905349861, -1.8824987681115397, -1.6791561786051354, -1.4874676864301075, -1.3090030093204363, -1.1457128311527203, -1.0000000000000806, -0.874640051694966, -0.7720333876749299, -0.6918401638789984, -0.6286864342344106, -0.5747524365004035, -0.5238354992751888, -0.47218658995973883, -0.4177647640506963],
    [-2.236504962045296, -2.0521267359810755, -1.8740295920033714, -1.702920042073623, -1.539646759836468, -1.385236575308731, -1.2409346416616318, -1.1082348787629164, -0.988852331544733, -0.884499104595538, -0.7961927687367775, -0.7230638601184203, -0.6618124881033649, -0.6079581005859994, -0.5575290648764258, -0.5077154591474511, -0.4567406883995554],
    [-1.9903432957261737, -1.842436943640547, -1.6993455480581292, -1.561634938938688, -1.4299756161667225, -1.305160423974008, -1.1881149412320555, -1.0798818590084327, -0.9815372003832525, -0.893965439814241, -0.8174413070229379, -0.7511707740056482, -0.6932254453921868, -0.6410705029907652, -0.5922571749831106, -0.5448188435570271, -0.4973395923854898],
    [-1.7907391230494774, -1.6722534436405805, -1.55751859823726, -1.4469683237523265, -1.3411019835280478, -1.240485992854201, -1.1457428463372568, -1.057514295818648, -0.9763789402739935, -0.9027081491838981, -0.8364787095397348, -0.7771292466581826, -0.7235788349769194, -0.6744311901247969, -0.6282465868145539, -0.5837452076082839, -0.5398965276671313],
    [-1.6241235131637408, -1.5301708301602097, -1.439123157901885, -1.3512865368258744, -1.2669974978242635, -1.1866153702503852, -1.1105046568160442, -1.039002464958201, -0.9723674033003604, -0.9107130083388569, -0.8539417307929855, -0.8017079222262602, -0.7534351668984899, -0.7083884131173129, -0.6657727026109322, -0.6248224899457522, -0.584860146812692],
    [-1.4815121081927851, -1.4085379002521765, -1.3377363296072016, -1.2692957038399184, -1.203410551316824, -1.140273229557545, -1.0800609798386784, -1.022917962102468, -0.9689331817329088, -0.9181174603633468, -0.8703849757183939, -0.8255457882451843, -0.7833136486048597, -0.7433285059252542, -0.7051880914601222, -0.6684806770735916, -0.632812409255533],
    [-1.3566463518157612, -1.301932594306044, -1.2487256359909713, -1.1971187230496427, -1.1472010075669816, -1.0990528834802806, -1.0527402617276678, -1.0083080878400665, -0.9657737272213028, -0.9251211579964514, -0.8862970824179974, -0.8492099550757477, -0.8137324712399814, -0.7797073641001461, -0.7469556625258328, -0.7152861177301473, -0.6845044491809736],
    [-1.2449115286093493, -1.2062759775215253, -1.1685507511266713, -1.131767984928691, -1.095955542592069, -1.061135618404362, -1.0273232880281826, -0.9945251042470331, -0.9627378575236947, -0.9319476321270016, -0.9021292808581045, -0.873246412000908, -0.8452519324565583, -0.8180891294236671, -0.7916932109029844, -0.7659931756536762, -0.7409138552853769],
    [-1.1426511428366222, -1.118280681554065, -1.0943348558546717, -1.0708188976053727, -1.0477365440683077, -1.0250898652634253, -1.0028791067113394, -0.9811025547388547, -0.9597564313991251, -0.9388348254531883, -0.918329664593575, -0.8982307326464375, -0.8785257331923297, -0.8592003989854938, -0.8402386441461236, -0.8216227539992849, -0.8033336056611615],
    [-1.0466796313455737, -1.0350713087916963, -1.023570401505692, -1.0121767563142772, -1.0008900930122493, -0.9897100013754929, -0.9786359387293153, -0.9676672281903966, -0.956803057543643, -0.9460424787270134, -0.935384407616688, -0.9248276262756003, -0.9143707832739919, -0.9040123967802012, -0.8937508577184353, -0.8835844334092725, -0.8735112722224849],
    [-1.0000846350617865, -0.9943987078070955, -0.9887393047614954, -0.9831063457934873, -0.9774997420217578, -0.9719193962244517, -0.9663652022882913, -0.9608370454770291, -0.9553348026947476, -0.9498583421259026, -0.9444075229673655, -0.9389821950945649, -0.9335822025518973, -0.9282073785727702, -0.922857548563808, -0.9175325299268893, -0.9122321315655694],
    [-0.9538725524090035, -0.9538725524090035, -0.9538725524090035, -0.9538725524090035, -0.9538725524090035, -0.9538725524090035, -0.9538725524090035, -0.9538725524090035, -0.9538725524090035, -0.9538725524090035, -0.9538725524090035, -0.9538725524090035, -0.9538725524090035, -0.9538725524090035, -0.9538725524090035, -0.9538725524090035, -0.9538725524090035],
]

Q50 = [
    [-1.1981093383318109, -0.908427806010153, -0.6587156183390046, -0.4490258254385529, -0.279429212104413, -0.1500163306466477, -0.06087670607942644, -0.011900308870242954, -0.0, 0.011900308870242954, 0.06087670607942644, 0.1500163306466477, 0.279429212104413, 0.4490258254385529, 0.6587156183390046, 0.908427806010153, 1.1981093383318109],
    [-0.9966381093227213, -0.7759339776795212, -0.580996674345982, -0.4126899123891536, -0.27198110225605604, -0.15993520890723253, -0.07762663809171519, -0.025613055047821746, -0.0, 0.025613055047821746, 0.07762663809171519, 0.15993520890723253, 0.27198110225605604, 0.4126899123891536, 0.580996674345982, 0.7759339776795212, 0.9966381093227213],
    [-0.8532687185159791, -0.6775256237402839, -0.5197430100071033, -0.3808948227735589, -0.26205970542990825, -0.1643803592309927, -0.08887289023762807, -0.03561183731642131, -0.0, 0.03561183731642131, 0.08887289023762807, 0.1643803592309927, 0.26205970542990825, 0.3808948227735589, 0.5197430100071033, 0.6775256237402839, 0.8532687185159791],
    [-0.7427051167616157, -0.5990441045441999, -0.46853438110160517, -0.352040301794442, -0.2504873231742366, -0.164777365811982, -0.09550946734383622, -0.042075129231134115, -0.0, 0.042075129231134115, 0.09550946734383622, 0.164777365811982, 0.2504873231742366, 0.352040301794442, 0.46853438110160517, 0.5990441045441999, 0.7427051167616157],
    [-0.6524695256615699, -0.5331967756356928, -0.4238381755844436, -0.32507671274929845, -0.23759638374438344, -0.1619628379068942, -0.09831143484684657, -0.04557642618095098, -0.0, 0.04557642618095098, 0.09831143484684657, 0.1619628379068942, 0.23759638374438344, 0.32507671274929845, 0.4238381755844436, 0.5331967756356928, 0.6524695256615699],
    [-0.575630143945248, -0.47576844642532573, -0.3834775086558295, -0.2992422363214799, -0.22349210573990147, -0.15647044522945447, -0.0979574976650553, -0.04675063659687258, -0.0, 0.04675063659687258, 0.0979574976650553, 0.15647044522945447, 0.22349210573990147, 0.2992422363214799, 0.3834775086558295, 0.47576844642532573, 0.575630143945248],
    [-0.5079608296822027, -0.4240856167676411, -0.34598085002694023, -0.27394394491908064, -0.20817869517250825, -0.1486798652836052, -0.09503522206500284, -0.04614550216376493, -0.0, 0.04614550216376493, 0.09503522206500284, 0.1486798652836052, 0.20817869517250825, 0.27394394491908064, 0.34598085002694023, 0.4240856167676411, 0.5079608296822027],
    [-0.446671254709689, -0.37630874803451086, -0.3102711429967757, -0.24869735633436002, -0.1916201417204721, -0.1388837446343559, -0.0900305521539164, -0.044182930482861364, -0.0, 0.044182930482861364, 0.0900305521539164, 0.1388837446343559, 0.1916201417204721, 0.24869735633436002, 0.3102711429967757, 0.37630874803451086, 0.446671254709689],
    [-0.38977474778682597, -0.3310707103583026, -0.27550166017322675, -0.22309005931197537, -0.17376367194085404, -0.12730903113011455, -0.0833210638257205, -0.041167693362731676, -0.0, 0.041167693362731676, 0.0833210638257205, 0.12730903113011455, 0.17376367194085404, 0.22309005931197537, 0.27550166017322675, 0.3310707103583026, 0.38977474778682597],
    [-0.3357417463399407, -0.28727375874797373, -0.24095963749393381, -0.19675338020828925, -0.15454042098017828, -0.11411791305716154, -0.07517900960220032, -0.037308810980681936, -0.0, 0.037308810980681936, 0.07517900960220032, 0.11411791305716154, 0.15454042098017828, 0.19675338020828925, 0.24095963749393381, 0.28727375874797373, 0.3357417463399407],
    [-0.28328931453534806, -0.24396272260427185, -0.20600097282244476, -0.1693342877909108, -0.1338530423126616, -0.0994023835646748, -0.06578011644418633, -0.03273975838687526, 2.220446049250313e-16, 0.03273975838687526, 0.06578011644418633, 0.0994023835646748, 0.1338530423126616, 0.1693342877909108, 0.20600097282244476, 0.24396272260427185, 0.28328931453534806],
    [-0.2312356791943917, -0.20023356313775229, -0.16999656866739274, -0.14046367577960084, -0.11155613115731244, -0.083177082895679, -0.05521246914426839, -0.027533392539266316, -0.0, 0.027533392539266316, 0.05521246914426839, 0.083177082895679, 0.11155613115731244, 0.14046367577960084, 0.16999656866739274, 0.20023356313775229, 0.2312356791943917],
    [-0.17838091476393406, -0.15515329951050474, -0.13227804694987952, -0.10971814656320292, -0.08743116180965875, -0.06536957255317062, -0.04348137224064122, -0.021710917939049123, 2.220446049250313e-16, 0.021710917939049123, 0.04348137224064122, 0.06536957255317062, 0.08743116180965875, 0.10971814656320292, 0.13227804694987952, 0.15515329951050474, 0.17838091476393406],
    [-0.12338701808069814, -0.10767300008047281, -0.09207234698179927, -0.07657088174670533, -0.06115354607358498, -0.045804507018737645, -0.030507282939603295, -0.015244890048643902, 2.220446049250313e-16, 0.015244890048643902, 0.030507282939603295, 0.045804507018737645, 0.06115354607358498, 0.07657088174670533, 0.09207234698179927, 0.10767300008047281, 0.12338701808069814],
    [-0.06463156231624427, -0.0565141766240818, -0.04841206580798895, -0.04032311985867582, -0.032245195638218406, -0.024176122439680345, -0.016113707249343526, -0.008055740174845944, -0.0, 0.008055740174845944, 0.016113707249343526, 0.024176122439680345, 0.032245195638218406, 0.04032311985867582, 0.04841206580798895, 0.0565141766240818, 0.06463156231624427],
    [-0.03320944337434679, -0.02905331485865404, -0.024899162244698334, -0.020746705639940004, -0.01659566405764199, -0.012445755596020283, -0.008296697619141986, -0.004148206938889782, -0.0, 0.004148206938889782, 0.008296697619141986, 0.012445755596020283, 0.01659566405764199, 0.020746705639940004, 0.024899162244698334, 0.02905331485865404, 0.03320944337434679],
    [-0.0, -0.0, -0.0, -0.0, -0.0, -0.0, -0.0, -0.0, -0.0, -0.0, -0.0, -0.0, -0.0, -0.0, -0.0, -0.0, -0.0],
]

Q75 = [
    [0.2443155699456057, 0.3132806330585852, 0.36093756423488643, 0.3882960038878474, 0.3995601142699317, 0.43712196752645033, 0.5956406491420052, 0.8788017172263858, 1.2838327753572831, 1.8096753503774172, 2.455823164496467, 3.2219999711586724, 4.108041139577987, 5.113842057779575, 6.239332907817015, 7.4844652345363025, 8.84920432156657],
    [0.27555290998564325, 0.3428971344728791, 0.39445616803003697, 0.4314439988285782, 0.4590407083640049, 0.506240679694081, 0.6383275675904736, 0.8600435724879094, 1.1621039636763295, 1.5381886699235718, 1.9836478896333714, 2.494841072677587, 3.0687988568078963, 3.7030289106341643, 4.395394369725569, 5.144032762090815, 5.9472992920289025],
    [0.3089322357290235, 0.3734791596388703, 0.42670376988836095, 0.4702686392519254, 0.5097687802287261, 0.565252880714362, 0.6772157019850547, 0.8550459923064692, 1.090064220035666, 1.375212712456882, 1.7052914058058226, 2.076319664584314, 2.4851379451649227, 2.9291657174195618, 3.4062473779062135, 3.9145494649158974, 4.452489293540016],
    [0.3438936107513813, 0.4051741119068805, 0.458696975312109, 0.5064711548537127, 0.5538536524137468, 0.6146899004530617, 0.7126515094982323, 0.8579397851418712, 1.045534735334348, 1.2693459022597988, 1.5246411254598877, 1.8078056028475717, 2.116014297575624, 2.447003387976278, 2.7989183887992937, 3.170211568965376, 3.5595707509132373],
    [0.3801850675204745, 0.43804881068743384, 0.49096818613949506, 0.5410791324500446, 0.5930434948379252, 0.6562497125802356, 0.7443073780808067, 0.865259451935824, 1.0175834075648431, 1.1969852191376513, 1.399609575138161, 1.6224036915975446, 1.8629712948143848, 2.119405137383719, 2.3901600416169595, 2.6739626339364775, 2.9697473349897767],
    [0.4177647640506963, 0.47218658995973883, 0.5238354992751888, 0.5747524365004035, 0.6286864342344106, 0.6918401638789984, 0.7720333876749299, 0.874640051694966, 1.0000000000000802, 1.1457128311527203, 1.3090030093204363, 1.4874676864301075, 1.6791561786051354, 1.8824987681115397, 2.096222905349861, 2.3192844606096124, 2.55081568281751],
    [0.4567406883995554, 0.5077154591474511, 0.5575290648764258, 0.6079581005859994, 0.6618124881033649, 0.7230638601184203, 0.7961927687367775, 0.884499104595538, 0.9888523315447333, 1.1082348787629164, 1.2409346416616318, 1.385236575308731, 1.539646759836468, 1.702920042073623, 1.8740295920033714, 2.0521267359810755, 2.236504962045296],
    [0.4973395923854898, 0.5448188435570271, 0.5922571749831106, 0.6410705029907652, 0.6932254453921868, 0.7511707740056482, 0.8174413070229379, 0.893965439814241, 0.9815372003832522, 1.0798818590084327, 1.1881149412320555, 1.305160423974008, 1.4299756161667225, 1.561634938938688, 1.6993455480581292, 1.842436943640547, 1.9903432957261737],
    [0.5398965276671313, 0.5837452076082839, 0.6282465868145539, 0.6744311901247969, 0.7235788349769194, 0.7771292466581826, 0.8364787095397348, 0.9027081491838981, 0.9763789402739934, 1.057514295818648, 1.1457428463372568, 1.240485992854201, 1.3411019835280478, 1.4469683237523265, 1.55751859823726, 1.6722534436405805, 1.7907391230494774],
    [0.584860146812692, 0.6248224899457522, 0.6657727026109322, 0.7083884131173129, 0.7534351668984899, 0.8017079222262602, 0.8539417307929855, 0.9107130083388569, 0.9723674033003605, 1.039002464958201, 1.1105046568160442, 1.1866153702503852, 1.2669974978242635, 1.3512865368258744, 1.439123157901885, 1.5301708301602097, 1.6241235131637408],
    [0.632812409255533, 0.6684806770735916, 0.7051880914601222, 0.7433285059252542, 0.7833136486048597, 0.8255457882451843, 0.8703849757183939, 0.9181174603633468, 0.968933181732909, 1.022917962102468, 1.0800609798386784, 1.140273229557545, 1.203410551316824, 1.2692957038399184, 1.3377363296072016, 1.4085379002521765, 1.4815121081927851],
    [0.6845044491809736, 0.7152861177301473, 0.7469556625258328, 0.7797073641001461, 0.8137324712399814, 0.8492099550757477, 0.8862970824179974, 0.9251211579964514, 0.9657737272213026, 1.0083080878400665, 1.0527402617276678, 1.0990528834802806, 1.1472010075669816, 1.1971187230496427, 1.2487256359909713, 1.301932594306044, 1.3566463518157612],
    [0.7409138552853769, 0.7659931756536762, 0.7916932109029844, 0.8180891294236671, 0.8452519324565583, 0.873246412000908, 0.9021292808581045, 0.9319476321270016, 0.9627378575236947, 0.9945251042470331, 1.0273232880281826, 1.061135618404362, 1.095955542592069, 1.131767984928691, 1.1685507511266713, 1.2062759775215253, 1.2449115286093493],
    [0.8033336056611615, 0.8216227539992849, 0.8402386441461236, 0.8592003989854938, 0.8785257331923297, 0.8982307326464375, 0.918329664593575, 0.9388348254531883, 0.9597564313991254, 0.9811025547388547, 1.0028791067113394, 1.0250898652634253, 1.0477365440683077, 1.0708188976053727, 1.0943348558546717, 1.118280681554065, 1.1426511428366222],
    [0.8735112722224849, 0.8835844334092725, 0.8937508577184353, 0.9040123967802012, 0.9143707832739919, 0.9248276262756003, 0.935384407616688, 0.9460424787270134, 0.9568030575436427, 0.9676672281903966, 0.9786359387293153, 0.9897100013754929, 1.0008900930122493, 1.0121767563142772, 1.023570401505692, 1.0350713087916963, 1.0466796313455737],
    [0.9122321315655694, 0.9175325299268893, 0.922857548563808, 0.9282073785727702, 0.9335822025518973, 0.9389821950945649, 0.9444075229673655, 0.9498583421259026, 0.9553348026947474, 0.9608370454770291, 0.9663652022882913, 0.9719193962244517, 0.9774997420217578, 0.9831063457934873, 0.9887393047614954, 0.9943987078070955, 1.0000846350617865],
    [0.9538725524090037, 0.9538725524090037, 0.9538725524090037, 0.9538725524090037, 0.9538725524090037, 0.9538725524090037, 0.9538725524090037, 0.9538725524090037, 0.9538725524090037, 0.9538725524090037, 0.9538725524090037, 0.9538725524090037, 0.9538725524090037, 0.9538725524090037, 0.9538725524090037, 0.9538725524090037, 0.9538725524090037],
]

Q95 = [
    [0.7396822283788255, 0.7880737371112718, 2.2367809918859325, 5.93598295021288, 11.829921773431535, 19.914515694685544, 30.188648598669104, 42.65188721941693, 57.304259268147824, 74.14496151301347, 93.17462534552058, 114.392979919887, 137.7999995068811, 163.39566655521253, 191.17996868749094, 221.1528969123177, 253.6479089470319],
    [0.8523277856207164, 0.9342323515523419, 1.9080237767826784, 4.118909757549813, 7.269472683249451, 11.241339116740807, 15.960262662094099, 21.373270908204926, 27.43981869948739, 34.12743213047544, 41.40925655102384, 49.262548510049164, 57.66768707514261, 66.60749340414735, 76.06674417587152, 86.03181267551722, 96.49038871236256],
    [0.9565026545676043, 1.064593376812909, 1.7467103908104218, 3.2204074903917124, 5.1755527032924435, 7.505006703573139, 10.149105034269144, 13.068577312791684, 16.235162461828356, 19.62732635217585, 23.295022242982494, 27.023202259276406, 31.001297661689915, 35.15234707394716, 39.46777024822219, 43.94006078071211, 48.56258281959314],
    [1.0547806877853394, 1.181204887841659, 1.672808328737565, 2.717389958079244, 4.045905392385016, 5.56971022843325, 7.245481000570033, 9.046929810773856, 10.956245660885232, 12.960492160093773, 15.049808469113751, 17.222521716989764, 19.453959498610793, 21.7583080504086, 24.121770961449158, 26.54380123113657, 29.02028351945187],
    [1.1491765917210384, 1.2868891368497588, 1.6546524789305885, 2.4162168093877847, 3.3707100440954973, 4.43945027423084, 5.589593311945615, 6.802928349810073, 8.067902364761132, 9.376549718084746, 10.723053924534193, 12.10298506631193, 13.512858512163442, 14.949862247431811, 16.411679516221934, 17.896368589713404, 19.402282241047182],
    [1.2413046960742544, 1.3843169313527919, 1.675940859288282, 2.232871510796885, 2.9404605791202942, 3.723703491487239, 4.555195670529561, 5.421232338278098, 6.3137515146750465, 7.227522062474035, 8.158914476020152, 9.105283860081217, 10.064628955177815, 11.03538972389489, 12.016320299572893, 13.006405584334804, 14.004804441113269],
    [1.3325187026194991, 1.475805859512334, 1.7184569750909469, 2.127127395852404, 2.657341349070123, 3.2456252529337815, 3.8664360121142267, 4.508200328434218, 5.164646084370097, 5.831975026429136, 6.507707007495754, 7.1901310558328895, 7.878016081871551, 8.570446221145694, 9.266721356873894, 9.966294080392261, 10.668728144136987],
    [1.4240207639021778, 1.5633419890333922, 1.7698928401219618, 2.0761010892539216, 2.4716272275523554, 2.9167615677410454, 3.387702977192202, 3.8735292482392114, 4.36867543009476, 4.869982055890383, 5.375509937117031, 5.883999106918549, 6.394594828647718, 6.906697423227852, 7.419874711329253, 7.93380837744155, 8.448259753211353],
    [1.516947973473639, 1.6486655744189707, 1.8253979923212318, 2.0612400942644697, 2.355253885763321, 2.689661907862712, 3.0470245552112805, 3.4171619636528625, 3.7946674077898797, 4.176535842513447, 4.560992122608873, 4.946933114497904, 5.333646005735574, 5.7206564472556725, 6.107641878722035, 6.494379637568331, 6.88071463243229],
    [1.6124467133507276, 1.7333695039673689, 1.8835390075497274, 2.068402973030544, 2.288128486961101, 2.536298350628836, 2.803843632018178, 3.083314031292282, 3.369860506102641, 3.660540702270636, 3.9535650147426975, 4.247818155957279, 4.5425865082535175, 4.83740327595048, 5.131958190324368, 5.4260430961767385, 5.719518086118433],
    [1.7117446658280309, 1.8189981716675578, 1.9442939976488975, 2.089379856811016, 2.254185841176658, 2.4365119997538582, 2.632721396698479, 2.8389466502834897, 3.051940973148689, 3.269313009860476, 3.4894085530138406, 3.711108803068209, 3.933658790179566, 4.156545993277051, 4.379419750852216, 4.602038634275569, 4.824235965792947],
    [1.816230285985429, 1.9071492424244976, 2.0083199345100127, 2.1201176601323537, 2.242355746586857, 2.374252306755742, 2.5145480456025715, 2.6617342336771475, 2.814292806017442, 2.970865876524162, 3.1303315972096684, 3.2918093761103715, 3.4546289588365493, 3.618288782357561, 3.782416639365198, 3.9467372719926552, 4.111047367912729],
    [1.9275513256177816, 1.9995877668737236, 2.0767170971903965, 2.1589360453423097, 2.246104641528397, 2.337949647721456, 2.4340841763350705, 2.534040165366099, 2.637306980977955, 2.7433685563180368, 2.8517332455847026, 2.9619537192351704, 3.0736371474213944, 3.186447706821363, 3.3001039741073743, 3.414373505918737, 3.5290662887679973],
    [2.047748623552276, 2.0983880494598406, 2.151006070249242, 2.2055660591411095, 2.2620109191033637, 2.320264470625037, 2.38023371473963, 2.441811802966925, 2.5048814807484323, 2.5693187331507925, 2.6349963574475406, 2.701787241589797, 2.769567177947068, 2.8382171140651735, 2.9076248189534573, 2.977685988666588, 3.0483048598378963],
    [2.1794508351425113, 2.206127627475785, 2.2332297167891193, 2.2607492403663185, 2.288677413524864, 2.3170045886878095, 2.3457203270065015, 2.3748134748662046, 2.404272218573683, 2.4340842285406192, 2.4642366845228003, 2.494716392970098, 2.525509872316604, 2.556603435460991, 2.5879832756858434, 2.619635544702399, 2.6515464265347886],
    [2.2506689802942565, 2.2643604349114836, 2.278149617396457, 2.2920353921919636, 2.306016561792098, 2.320091897457875, 2.3342601225734496, 2.3485199197431688, 2.3628699331215874, 2.3773087714623165, 2.391835008142398, 2.406447186041869, 2.421143819187379, 2.43592339644905, 2.450784379461105, 2.4657252116115944, 2.4807443164592855],
    [2.3261743073533494, 2.3261743073533494, 2.3261743073533494, 2.3261743073533494, 2.3261743073533494, 2.3261743073533494, 2.3261743073533494, 2.3261743073533494, 2.3261743073533494, 2.3261743073533494, 2.3261743073533494, 2.3261743073533494, 2.3261743073533494, 2.3261743073533494, 2.3261743073533494, 2.3261743073533494, 2.3261743073533494],
]

