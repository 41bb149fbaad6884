#pragma once

// Orthonormal wavelet lowpass filters, one coefficient per line at 17
// significant digits.  Generated by tools/gen_filters.py (spectral
// factorization at 60-digit precision); do not edit by hand.

namespace ssband::tables {

inline constexpr double kHaar[] = {
    0.70710678118654752,
    0.70710678118654752,
};

inline constexpr double kDaub2[] = {
    0.48296291314453414,
    0.83651630373780791,
    0.22414386804201338,
    -0.12940952255126038,
};

inline constexpr double kDaub3[] = {
    0.33267055295008262,
    0.80689150931109258,
    0.45987750211849157,
    -0.13501102001025459,
    -0.085441273882026662,
    0.035226291885709537,
};

inline constexpr double kDaub4[] = {
    0.23037781330889650,
    0.71484657055291565,
    0.63088076792985891,
    -0.027983769416859854,
    -0.18703481171909308,
    0.030841381835560764,
    0.032883011666885200,
    -0.010597401785069032,
};

inline constexpr double kDaub5[] = {
    0.16010239797419291,
    0.60382926979718967,
    0.72430852843777293,
    0.13842814590132073,
    -0.24229488706638203,
    -0.032244869584638375,
    0.077571493840045714,
    -0.0062414902127982743,
    -0.012580751999081999,
    0.0033357252854737713,
};

inline constexpr double kDaub6[] = {
    0.11154074335010946,
    0.49462389039845309,
    0.75113390802109535,
    0.31525035170919763,
    -0.22626469396543982,
    -0.12976686756726194,
    0.097501605587323049,
    0.027522865530305729,
    -0.031582039317486030,
    0.00055384220116149614,
    0.0047772575109455106,
    -0.0010773010853084796,
};

inline constexpr double kDaub7[] = {
    0.077852054085009179,
    0.39653931948191731,
    0.72913209084623512,
    0.46978228740519312,
    -0.14390600392856498,
    -0.22403618499387498,
    0.071309219266830265,
    0.080612609151083072,
    -0.038029936935014414,
    -0.016574541630666881,
    0.012550998556099841,
    0.00042957797292136652,
    -0.0018016407040474909,
    0.00035371379997452025,
};

inline constexpr double kDaub8[] = {
    0.054415842243104010,
    0.31287159091429997,
    0.67563073629728981,
    0.58535468365420671,
    -0.015829105256349306,
    -0.28401554296154693,
    0.00047248457391328277,
    0.12874742662047846,
    -0.017369301001807546,
    -0.044088253930794752,
    0.013981027917398282,
    0.0087460940474057767,
    -0.0048703529934515743,
    -0.00039174037337694705,
    0.00067544940645056937,
    -0.00011747678412476953,
};

inline constexpr double kDaub9[] = {
    0.038077947363878347,
    0.24383467461259035,
    0.60482312369011111,
    0.65728807805130054,
    0.13319738582500758,
    -0.29327378327917491,
    -0.096840783222976461,
    0.14854074933810638,
    0.030725681479333379,
    -0.067632829061329974,
    0.00025094711483145196,
    0.022361662123679097,
    -0.0047232047577513973,
    -0.0042815036824634298,
    0.0018476468830562265,
    0.00023038576352319597,
    -0.00025196318894271014,
    3.9347320316271599e-5,
};

inline constexpr double kDaub10[] = {
    0.026670057900555554,
    0.18817680007769149,
    0.52720118893172559,
    0.68845903945360357,
    0.28117234366057746,
    -0.24984642432731538,
    -0.19594627437737704,
    0.12736934033579326,
    0.093057364603572351,
    -0.071394147166397087,
    -0.029457536821875813,
    0.033212674059341002,
    0.0036065535669561697,
    -0.010733175483330575,
    0.0013953517470529012,
    0.0019924052951850561,
    -0.00068585669495971163,
    -0.00011646685512928545,
    9.3588670320069591e-5,
    -1.3264202894521245e-5,
};

inline constexpr double kDaub11[] = {
    0.018694297761471084,
    0.14406702115062451,
    0.44989976435604533,
    0.68568677491620051,
    0.41196436894790746,
    -0.16227524502749036,
    -0.27423084681794696,
    0.066043588196683192,
    0.14981201246637850,
    -0.046479955116684187,
    -0.066438785695025205,
    0.031335090219046076,
    0.020840904360181063,
    -0.015364820906201599,
    -0.0033408588730144456,
    0.0049284176560590411,
    -0.00030859285881514317,
    -0.00089302325066626461,
    0.00024915252355282350,
    5.4439074699368472e-5,
    -3.4634984186984996e-5,
    4.4942742772365101e-6,
};

inline constexpr double kDaub12[] = {
    0.013112257957229518,
    0.10956627282118515,
    0.37735513521421266,
    0.65719872257930709,
    0.51588647842781561,
    -0.044763885653774627,
    -0.31617845375278554,
    -0.023779257256069728,
    0.18247860592757968,
    0.0053595696743521503,
    -0.096432120096507082,
    0.010849130255822184,
    0.041546277495084441,
    -0.012218649069748281,
    -0.012840825198300683,
    0.0067114990087955092,
    0.0022486072409952376,
    -0.0021795036186277605,
    6.5451282125095956e-6,
    0.00038865306282093144,
    -8.8504109208204324e-5,
    -2.4241545757030784e-5,
    1.2776952219379767e-5,
    -1.5290717580685109e-6,
};

inline constexpr double kDaub13[] = {
    0.0092021335389623680,
    0.082861243872902780,
    0.31199632216043806,
    0.61105585115878765,
    0.58888957043121891,
    0.086985726179647237,
    -0.31497290771138863,
    -0.12457673075081526,
    0.17947607942933984,
    0.072948933656777164,
    -0.10580761818793433,
    -0.026488406475343695,
    0.056139477100283429,
    0.0023799722540590788,
    -0.023831420710323649,
    0.0039239414487974162,
    0.0072555894016175662,
    -0.0027619112346568622,
    -0.0013156739118922989,
    0.00093232613086726339,
    4.9251525126289462e-5,
    -0.00016512898855650549,
    3.0678537579325493e-5,
    1.0441930571408137e-5,
    -4.7004164793608683e-6,
    5.2200350984548647e-7,
};

inline constexpr double kDaub14[] = {
    0.0064611534600879478,
    0.062364758849398898,
    0.25485026779262135,
    0.55430561794089384,
    0.63118784910485678,
    0.21867068775890652,
    -0.27168855227874804,
    -0.21803352999327604,
    0.13839521386480659,
    0.13998901658446070,
    -0.086748411568169689,
    -0.071548955504046131,
    0.055237126259216044,
    0.026981408307912917,
    -0.030185351540390635,
    -0.0056150495303569591,
    0.012789493266333409,
    -0.00074621898926838494,
    -0.0038496388680221874,
    0.0010616910856067618,
    0.00070802115423552786,
    -0.00038683194731295448,
    -4.1777245770372597e-5,
    6.8755042526975096e-5,
    -1.0337209184570774e-5,
    -4.3897049017813941e-6,
    1.7249946753678128e-6,
    -1.7871399683113591e-7,
};

inline constexpr double kDaub15[] = {
    0.0045385373615788989,
    0.046743394892766272,
    0.20602386398699573,
    0.49263177170813962,
    0.64581314035742436,
    0.33900253545473153,
    -0.19320413960914543,
    -0.28888259656696565,
    0.065282952848772817,
    0.19014671400712298,
    -0.039666176555790944,
    -0.11112093603723169,
    0.033877143923507686,
    0.054780550584507613,
    -0.025767007328439963,
    -0.020810050169693082,
    0.015083918027835902,
    0.0051010003604075432,
    -0.0064877345603157450,
    -0.00024175649076162428,
    0.0019433239803822115,
    -0.00037348235413761699,
    -0.00035956524436246881,
    0.00015589648992059975,
    2.5792699155318937e-5,
    -2.8133296266047814e-5,
    3.3629871817375798e-6,
    1.8112704079405771e-6,
    -6.3168823258816644e-7,
    6.1333599133057520e-8,
};

inline constexpr double kDaub16[] = {
    0.0031892209253477380,
    0.034907714323673346,
    0.16506428348885312,
    0.43031272284600381,
    0.63735633208378890,
    0.44029025688635690,
    -0.089751089402489643,
    -0.32706331052791770,
    -0.027918208133028277,
    0.21119069394710429,
    0.027340263752716041,
    -0.13238830556381039,
    -0.0062397227524748718,
    0.075924236044276316,
    -0.0075889743688577376,
    -0.036888397691730142,
    0.010297659640955969,
    0.013993768859828731,
    -0.0069900145634139167,
    -0.0036442796214983899,
    0.0031280233812062688,
    0.00040789698084971284,
    -0.00094102174935956759,
    0.00011424152003872239,
    0.00017478724522533818,
    -6.1035966214109358e-5,
    -1.3945668988208893e-5,
    1.1336608661276259e-5,
    -1.0435713423116065e-6,
    -7.3636567854512055e-7,
    2.3087840868575459e-7,
    -2.1093396301007431e-8,
};

inline constexpr double kDaub17[] = {
    0.0022418070010373129,
    0.025985393703606043,
    0.13121490330782441,
    0.37035072415264115,
    0.61099661568462282,
    0.51831576405693784,
    0.027314970403293635,
    -0.32832074836396174,
    -0.12659975221588270,
    0.19731058956501099,
    0.10113548917747027,
    -0.12681569177828631,
    -0.057091419631676927,
    0.081105986654160885,
    0.022312336178103796,
    -0.046922438389269737,
    -0.0032709555358192938,
    0.022733676583946270,
    -0.0030429899813546371,
    -0.0086029215203228548,
    0.0029679966915260949,
    0.0023012052421535456,
    -0.0014368453048029761,
    -0.00032813251940983797,
    0.00043946542776864368,
    -2.5610109566548459e-5,
    -8.2048032024533918e-5,
    2.3186813798745951e-5,
    6.9906009850767513e-6,
    -4.5059424772229882e-6,
    3.0165496099945574e-7,
    2.9577009333168568e-7,
    -8.4239484460026802e-8,
    7.2674929685616081e-9,
};

inline constexpr double kDaub18[] = {
    0.0015763102184407604,
    0.019288531724146377,
    0.10358846582242360,
    0.31467894133703170,
    0.57182680776660722,
    0.57180165488865134,
    0.14722311196992814,
    -0.29365404073655874,
    -0.21648093400514297,
    0.14953397556537779,
    0.16708131276325740,
    -0.092331884150846281,
    -0.10675224665982849,
    0.064887216211905443,
    0.057051247738536884,
    -0.044526141902982325,
    -0.023733210395860001,
    0.026670705926470590,
    0.0062621679543057075,
    -0.013051480946612002,
    0.00011863003385811747,
    0.0049433436054667381,
    -0.0011187326669924971,
    -0.0013405962983361066,
    0.00062846568296514571,
    0.00021358156191034069,
    -0.00019864855231174795,
    -1.5359171235347247e-7,
    3.7412378807400382e-5,
    -8.5206025374466952e-6,
    -3.3326344788858219e-6,
    1.7687129836276155e-6,
    -7.6916326898851761e-8,
    -1.1760987670282317e-7,
    3.0688358630451748e-8,
    -2.5079344549485983e-9,
};

inline constexpr double kDaub19[] = {
    0.0011086697631817106,
    0.014281098450764397,
    0.081278113265459551,
    0.26438843174089678,
    0.52443637746465492,
    0.60170454912753789,
    0.26089495265103883,
    -0.22809139421548265,
    -0.28583863175582624,
    0.074652269708103266,
    0.21234974330627849,
    -0.033518541902302879,
    -0.14278569503873657,
    0.027584350625628669,
    0.086906755555812232,
    -0.026501236250123041,
    -0.045674226277230908,
    0.021623767409585047,
    0.019375549889176128,
    -0.013988388678535142,
    -0.0058669222810121747,
    0.0070407473671052432,
    0.00076895435925754836,
    -0.0026875518007015820,
    0.00034180865345859578,
    0.00073580252050543521,
    -0.00026067613567862801,
    -0.00012460079173415878,
    8.7112704672199230e-5,
    5.1059504870738861e-6,
    -1.6640176297154945e-5,
    3.0109643162965263e-6,
    1.5319314766911931e-6,
    -6.8627556577691427e-7,
    1.4470882987978445e-8,
    4.6369377757826042e-8,
    -1.1164020670358258e-8,
    8.6668488389976194e-10,
};

inline constexpr double kDaub20[] = {
    0.00077995361366684632,
    0.010549394624950398,
    0.063423780459081515,
    0.21994211355139705,
    0.47269618531090170,
    0.61049323893859382,
    0.36150229873933106,
    -0.13921208801148387,
    -0.32678680043403497,
    -0.016727088309077008,
    0.22829105081991632,
    0.039850246457771202,
    -0.15545875070726796,
    -0.024716827338613584,
    0.10229171917444256,
    0.0056322468573074355,
    -0.061722899624680460,
    0.0058746818118118265,
    0.032294299530769582,
    -0.0087893249239015613,
    -0.013810526137151920,
    0.0067216273022594568,
    0.0044205423870457910,
    -0.0035814942596096228,
    -0.00083156217282255692,
    0.0013925596193231363,
    -5.3497598439976951e-5,
    -0.00038510474869921761,
    0.00010153288973670291,
    6.7742808283777296e-5,
    -3.7105861833947129e-5,
    -4.3761438621839968e-6,
    7.2412482876736201e-6,
    -1.0119940100188862e-6,
    -6.8470795970005569e-7,
    2.6339242262700011e-7,
    2.0143220235505127e-10,
    -1.8148432482996960e-8,
    4.0561270555518328e-9,
    -2.9988364896193196e-10,
};

inline constexpr double kSym2[] = {
    -0.12940952255126038,
    0.22414386804201338,
    0.83651630373780791,
    0.48296291314453414,
};

inline constexpr double kSym3[] = {
    0.035226291885709537,
    -0.085441273882026662,
    -0.13501102001025459,
    0.45987750211849157,
    0.80689150931109258,
    0.33267055295008262,
};

inline constexpr double kSym4[] = {
    0.032223100604051468,
    -0.012603967262031304,
    -0.099219543576633533,
    0.29785779560530605,
    0.80373875180513208,
    0.49761866763277499,
    -0.029635527646002492,
    -0.075765714789502213,
};

inline constexpr double kSym5[] = {
    0.019538882735249827,
    -0.021101834024689041,
    -0.17532808990805622,
    0.016602105764510848,
    0.63397896345679206,
    0.72340769040404079,
    0.19939753397685560,
    -0.039134249302313844,
    0.029519490925706261,
    0.027333068344998769,
};

inline constexpr double kSym6[] = {
    -0.0078007083250323804,
    0.0017677118642540077,
    0.044724901770781385,
    -0.021060292512370848,
    -0.072637522786376583,
    0.33792942172816583,
    0.78764114102865100,
    0.49105594192797373,
    -0.048311742585698055,
    -0.11799011114852003,
    0.0034907120842221625,
    0.015404109327044824,
};

inline constexpr double kSym7[] = {
    0.0026818145682601470,
    -0.0010473848886797381,
    -0.012636303403240567,
    0.030515513165877886,
    0.067892693501220565,
    -0.049552834937042832,
    0.017441255086835707,
    0.53610191709056923,
    0.76776431700488293,
    0.28862963175064787,
    -0.14004724044293365,
    -0.10780823770328971,
    0.0040102448715223952,
    0.010268176708464816,
};

inline constexpr double kSym8[] = {
    0.0018899503327676892,
    -0.00030292051472413308,
    -0.014952258337062199,
    0.0038087520138944895,
    0.049137179673730287,
    -0.027219029917103486,
    -0.051945838107881801,
    0.36444189483617894,
    0.77718575169962803,
    0.48135965125905339,
    -0.061273359067811078,
    -0.14329423835127266,
    0.0076074873249766082,
    0.031695087811525991,
    -0.00054213233180001069,
    -0.0033824159510050026,
};

inline constexpr double kSym9[] = {
    0.0010694900329086119,
    -0.00047315449868004354,
    -0.010264064027633120,
    0.0088592674934002667,
    0.062077789302885748,
    -0.018233770779395506,
    -0.19155083129728433,
    0.035272488035271043,
    0.61733844914093415,
    0.71789708276441240,
    0.23876091460730517,
    -0.054568958430833351,
    0.00058346274612498183,
    0.030224878858275188,
    -0.011528210207679186,
    -0.013271967781817134,
    0.00061978088898550708,
    0.0014009155259146562,
};

inline constexpr double kSym10[] = {
    -0.00045932942100465204,
    5.7036083618495007e-5,
    0.0045931735853117919,
    -0.00080435893201645130,
    -0.020354939812311111,
    0.0057649120335811497,
    0.049994972077375156,
    -0.031990056882428114,
    -0.035536740473819586,
    0.38382676106707633,
    0.76951003702109794,
    0.47169066693844291,
    -0.070880535783231572,
    -0.15949427888491061,
    0.011609893903711318,
    0.045927239231091509,
    -0.0014653825813046105,
    -0.0086412992770221503,
    9.5632670722852731e-5,
    0.00077015980911445982,
};

inline constexpr double kSym11[] = {
    0.00017172195069934810,
    -3.8795655736148036e-5,
    -0.0017343662672978378,
    0.00058835273539698249,
    0.0065124956747715201,
    -0.0098579348287892134,
    -0.024080841595863579,
    0.037037415978858185,
    0.069976799610732932,
    -0.022832651022562262,
    0.097198394458905522,
    0.57202297801007579,
    0.73034354908838958,
    0.23768990904925752,
    -0.20465479449578829,
    -0.14460234370531190,
    0.035266759564464620,
    0.043000190681551327,
    -0.0020034719001089793,
    -0.0063896036664546651,
    0.00011053509764269031,
    0.00048926361026190297,
};

inline constexpr double kSym12[] = {
    0.00011196719424656528,
    -1.1353928041526612e-5,
    -0.0013497557555715790,
    0.00018021409008521752,
    0.0074149655176543154,
    -0.0014089092443291290,
    -0.024220722675013403,
    0.0075537806116793156,
    0.049179318299661196,
    -0.035848830736954636,
    -0.022162306170351301,
    0.39888597239019201,
    0.76347909778364054,
    0.46274103121928642,
    -0.078332622316315435,
    -0.17037069723884962,
    0.015301740622480153,
    0.057804179445504747,
    -0.0026043910313314189,
    -0.014589836449233534,
    0.00030764779631052453,
    0.0023502976141833475,
    -1.8158078862632959e-5,
    -0.00017906658697508447,
};

inline constexpr double kSym13[] = {
    7.0429866906962728e-5,
    3.6905373423238941e-5,
    -0.00072136438513637555,
    0.00041326119884167821,
    0.0056748537601233381,
    -0.0014924472742587285,
    -0.020749686325520654,
    0.017618296880645044,
    0.092926030899143970,
    0.0088197576704298521,
    -0.14049009311367553,
    0.11023022302128687,
    0.64456438390115713,
    0.69573915056156907,
    0.19770481877126597,
    -0.12436246075150339,
    -0.059750627717956464,
    0.013862497435838411,
    -0.017211642726304386,
    -0.020216768133395466,
    0.0052963597387218622,
    0.0075262253899681702,
    -0.00017094285852957213,
    -0.0011360634389279690,
    -3.5738623648715940e-5,
    6.8203252630743549e-5,
};

inline constexpr double kSym14[] = {
    -2.5879090265402585e-5,
    1.1210865808903234e-5,
    0.00039843567297607207,
    -6.2865424814745763e-5,
    -0.0025794417259337628,
    0.00036647657365998119,
    0.010037693717674818,
    -0.0027537747912247890,
    -0.029196217764050975,
    0.0042805204990007522,
    0.037433088362823582,
    -0.057634498351410970,
    -0.035318112115107519,
    0.39320152196203943,
    0.75997624196118915,
    0.47533576263434447,
    -0.058111823317658580,
    -0.15999741114651991,
    0.025898587531053822,
    0.069827616361821188,
    -0.0023650488367366590,
    -0.019439314263628176,
    0.0010131419871843176,
    0.0045326774719463366,
    -7.3214213566891339e-5,
    -0.00060576018246644027,
    1.9329016965548986e-5,
    4.4618977991484562e-5,
};

inline constexpr double kSym15[] = {
    9.7124197379644920e-6,
    -7.3596667989286793e-6,
    -0.00016066186637499559,
    5.5122547855653365e-5,
    0.0010705672194627174,
    -0.00026731644647202593,
    -0.0035901654473736222,
    0.0034234507363524206,
    0.010079977087906634,
    -0.019405011430946085,
    -0.038876716876854969,
    0.021937642719737217,
    0.040735479696770492,
    -0.041082666635469261,
    0.11153369514258364,
    0.57864041521515018,
    0.72184302963633358,
    0.24396270543218166,
    -0.19662635876631658,
    -0.13405629845628276,
    0.068393310060510168,
    0.067969829044895720,
    -0.0087447888864859159,
    -0.017171252781644520,
    0.0015261382781832660,
    0.0034810287370659997,
    -0.00010815440168565741,
    -0.00040216853760307322,
    2.1717890150808833e-5,
    2.8660708525332310e-5,
};

inline constexpr double kSym16[] = {
    6.2300067012376468e-6,
    -3.1135564076138704e-6,
    -0.00010943147929558312,
    2.8078582128206923e-5,
    0.00085235471080655208,
    -0.00010844562230766216,
    -0.0038809122526122203,
    0.00071821197882543154,
    0.012666731659876958,
    -0.0031265171722736302,
    -0.031051202843642750,
    0.0048692744048145422,
    0.032333091610582347,
    -0.066983049070619104,
    -0.034574228417699194,
    0.39712293362039822,
    0.75652498787638461,
    0.47534280601234711,
    -0.054040601387440806,
    -0.15959219218539580,
    0.030721139063299641,
    0.078037852903548304,
    -0.0035102750683370913,
    -0.024952758046315126,
    0.0013598447424801485,
    0.0069377611308113713,
    -0.00022211647621031348,
    -0.0013387206066936439,
    3.6565924833303029e-5,
    0.00016545679579123957,
    -5.3964831793134874e-6,
    -1.0797982104330865e-5,
};

inline constexpr double kSym17[] = {
    4.2973433273382561e-6,
    2.7801266938259432e-6,
    -6.2937025975459086e-5,
    -1.3506383399799108e-5,
    0.00047599638026318306,
    -0.00013864230268101328,
    -0.0027416759756781813,
    0.00085677007019280217,
    0.010482366933016148,
    -0.0048192128031813538,
    -0.033291383492306217,
    0.017903952214389489,
    0.10475461484219489,
    0.017271178210600193,
    -0.11856693261099855,
    0.14239835041511389,
    0.65071662920438239,
    0.68148899534431699,
    0.18053958458074406,
    -0.15507600534970689,
    -0.086070874720632641,
    0.016158808725918568,
    -0.0072616347509339156,
    -0.018038897241901388,
    0.0099529825235076136,
    0.012396988366634303,
    -0.0019054076898564055,
    -0.0039323252797949414,
    5.8400428695180918e-5,
    0.00071982706421454530,
    2.5207933140671322e-5,
    -7.6071244056029182e-5,
    -2.4527163425740826e-6,
    3.7912531943316249e-6,
};

inline constexpr double kSym18[] = {
    -1.5131530692320485e-6,
    7.8472980558485727e-7,
    2.9557437620876690e-5,
    -9.8588160300381688e-6,
    -0.00026583011024198103,
    4.7416145182283680e-5,
    0.0014280863270799422,
    -0.00018877623940057062,
    -0.0052397896830139739,
    0.0010877847895682567,
    0.015012356344216410,
    -0.0032607441999778556,
    -0.031712684731699470,
    0.0062779445541322597,
    0.028529597038742298,
    -0.073799207290885934,
    -0.032480573291504846,
    0.40148386056768734,
    0.75362914009993880,
    0.47396905989574696,
    -0.052029158980420069,
    -0.15993814866769704,
    0.033995667103542071,
    0.084219929970075870,
    -0.0050770851604169897,
    -0.030325091089143648,
    0.0016429863972087338,
    0.0095021643909096052,
    -0.00041152110920582622,
    -0.0023138718144868687,
    7.0212734585996361e-5,
    0.00039616840637938814,
    -1.4020992577002793e-5,
    -4.5246757874515306e-5,
    1.3549157617851245e-6,
    2.6126125564557023e-6,
};

inline constexpr double kSym19[] = {
    5.4877327682185139e-7,
    -6.4636513033334037e-7,
    -1.1880518269831196e-5,
    8.8733121736932822e-6,
    0.00011553923333583908,
    -4.6120396001717631e-5,
    -0.00063576451500423328,
    0.00015915804767957374,
    0.0021214250281832053,
    -0.0011607032571970345,
    -0.0051222050025694281,
    0.0079684383206377835,
    0.015797439295764449,
    -0.022651993378066387,
    -0.046635983534777709,
    0.0070155738572191808,
    0.0089545911729771244,
    -0.067525058040684000,
    0.10902582508022089,
    0.57814494533729672,
    0.71955552571598459,
    0.25826616923810383,
    -0.17659686625099993,
    -0.11624173010700133,
    0.093630843415921787,
    0.084072676279385028,
    -0.016908234861133549,
    -0.027709896931223671,
    0.0043193518748874169,
    0.0082622369555226428,
    -0.00061792232778999353,
    -0.0017049602611613153,
    0.00012930767650608302,
    0.00027621877685681965,
    -1.6821387029242595e-5,
    -2.8151138661488745e-5,
    2.0623170632293237e-6,
    1.7509367995304996e-6,
};

inline constexpr double kSym20[] = {
    3.6955374747912670e-7,
    -1.9015675892278172e-7,
    -7.9193614118939515e-6,
    3.0256660631185363e-6,
    7.9929678357121142e-5,
    -1.9284123010161865e-5,
    -0.00049473109156550730,
    7.2159911900736658e-5,
    0.0020889947081866743,
    -0.00030526283188065687,
    -0.0066065857991207313,
    0.0014230873596194143,
    0.017004049023279797,
    -0.0033138573844072329,
    -0.031629437145484322,
    0.0081232283563945484,
    0.025579349509566319,
    -0.078994344926761404,
    -0.029819368871243181,
    0.40583144436327478,
    0.75116272842889789,
    0.47199147509110537,
    -0.051088342936006394,
    -0.16057829842072484,
    0.036250951655760877,
    0.088919668028626005,
    -0.0068437019669740549,
    -0.035373336757463891,
    0.0019385970676619734,
    0.012157040948987497,
    -0.00061112638597797940,
    -0.0034716478029256889,
    0.00012544091727041257,
    0.00074761085980126171,
    -2.6615550342776810e-5,
    -0.00011739133516628475,
    4.5254222100862272e-6,
    1.2287252778374232e-5,
    -3.2567026426308277e-7,
    -6.3291290450428952e-7,
};

struct FilterRow { int order; const double* coeff; int len; };

inline constexpr FilterRow kDaubechies[] = {
    {2, kDaub2, 4},
    {3, kDaub3, 6},
    {4, kDaub4, 8},
    {5, kDaub5, 10},
    {6, kDaub6, 12},
    {7, kDaub7, 14},
    {8, kDaub8, 16},
    {9, kDaub9, 18},
    {10, kDaub10, 20},
    {11, kDaub11, 22},
    {12, kDaub12, 24},
    {13, kDaub13, 26},
    {14, kDaub14, 28},
    {15, kDaub15, 30},
    {16, kDaub16, 32},
    {17, kDaub17, 34},
    {18, kDaub18, 36},
    {19, kDaub19, 38},
    {20, kDaub20, 40},
};

inline constexpr FilterRow kSymlets[] = {
    {2, kSym2, 4},
    {3, kSym3, 6},
    {4, kSym4, 8},
    {5, kSym5, 10},
    {6, kSym6, 12},
    {7, kSym7, 14},
    {8, kSym8, 16},
    {9, kSym9, 18},
    {10, kSym10, 20},
    {11, kSym11, 22},
    {12, kSym12, 24},
    {13, kSym13, 26},
    {14, kSym14, 28},
    {15, kSym15, 30},
    {16, kSym16, 32},
    {17, kSym17, 34},
    {18, kSym18, 36},
    {19, kSym19, 38},
    {20, kSym20, 40},
};

}  // namespace ssband::tables
