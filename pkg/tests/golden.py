"""Reference values: y(x), y'(x) at N=200 / 45 iterations, plus the (N, iteration) lattice.

Stored as strings to keep every digit.
"""

SLOPE_REFERENCE = {
    100: "-1.5880710226113753127",
    150: "-1.5880710226113753127186845",
    200: "-1.588071022611375312718684509423",
}

#: independent estimate of y'(0) by the Pade-Hankel method, +-7e-22
SLOPE_PADE_HANKEL = "-1.5880710226113753127189"

Y_N200 = {
    "0.25": "0.755201465313331276073659062048",
    "0.50": "0.606986383355979909494446070174",
    "0.75": "0.502346846412368627446521794036",
    "1.00": "0.424008052080705600224612007418",
    "1.25": "0.363201414459514114681451617277",
    "1.50": "0.314777463700458172973580939810",
    "1.75": "0.275451327996091785680113852782",
    "2.00": "0.243008507161119555299806749733",
    "2.25": "0.215894626576130144431137496637",
    "2.50": "0.192984123458000701287136925252",
    "2.75": "0.173441292490063451179594691770",
    "3.00": "0.156632673216495841339813440477",
    "3.25": "0.142069642692650781317847467819",
    "3.50": "0.129369596993799111381550504704",
    "3.75": "0.118229001616846686506107664622",
    "4.00": "0.108404256918907711089847680321",
    "4.25": "0.099697845864740046922595440377",
    "4.50": "0.091948133826563845114632113892",
    "4.75": "0.085021743728059499429131697623",
    "5.00": "0.078807779251369904256091892542",
    "6": "0.059422949250422580797949567059",
    "7": "0.046097818604498589876456260102",
    "8": "0.036587255264676802392315804375",
    "9": "0.029590935270546873724362041806",
    "10": "0.024314292988680864190110388176",
    "20": "0.005784941191566940442010571504",
    "30": "0.002255836616202855884224076079",
    "40": "0.001113635638833368812571167838",
    "50": "0.000632254782984904726779778752",
    "60": "0.000393911366685417002026602841",
    "70": "0.000262265299812011293741733594",
    "80": "0.000183545759740710240155439613",
    "90": "0.000133545828953734623590590348",
    "100": "0.000100242568139407331685585932",
    "200": "0.000014501803496945764680403612",
    "300": "0.000004548571953616680184257373",
    "400": "0.000001979732628112504742575796",
    "500": "0.000001034077168199939706035333",
    "600": "0.000000606868769667525133710573",
    "700": "0.000000386176515703798616221824",
    "800": "0.000000260813730499833635331580",
    "900": "0.000000184372415135065178917921",
    "1000": "0.000000135127477354105831539440",
    "2000": "0.000000017339847516138509108205",
    "3000": "0.000000005189408334543857341875",
    "4000": "0.000000002201209082423027362721",
    "5000": "0.000000001130926706419984771574",
    "6000": "0.000000000656056637887703224451",
    "7000": "0.000000000413886522087042381058",
    "8000": "0.000000000277658195353364145555",
    "9000": "0.000000000195225879692802747067",
    "10000": "0.000000000142450044462688615523",
}

DY_N200 = {
    "0.25": "-0.722306984910234919519668083864",
    "0.50": "-0.489411612574538088647005847557",
    "0.75": "-0.358306880167513621987250767311",
    "1.00": "-0.273989051593306251989464686519",
    "1.25": "-0.215794130300733601274300529492",
    "1.50": "-0.173738799013945185681936465228",
    "1.75": "-0.142320937196893658885960452965",
    "2.00": "-0.118243191625487620571255867534",
    "2.25": "-0.099409321201447030009355248089",
    "2.50": "-0.084426186798809043812545918214",
    "2.75": "-0.072335044846097235621822505698",
    "3.00": "-0.062457130854120976228704899999",
    "3.25": "-0.054300422911798016711579461695",
    "3.50": "-0.047501046582295208950097689053",
    "3.75": "-0.041785207716826396797995883443",
    "4.00": "-0.036943757824123486354813738987",
    "4.25": "-0.032814785443993540385309640573",
    "4.50": "-0.029271448448803843379269452384",
    "4.75": "-0.026213311168397937715703460851",
    "5.00": "-0.023560074954700512881180449080",
    "6": "-0.015867549533407079812737615662",
    "7": "-0.011142531814867088405578460800",
    "8": "-0.008088602969645474322126751847",
    "9": "-0.006033074714457392439143608348",
    "10": "-0.004602881871269254502543511851",
    "20": "-0.000647254332777692033047085589",
    "30": "-0.000180670006476992635016139693",
    "40": "-0.000069668028540325866316070590",
    "50": "-0.000032498902048258814624200679",
    "60": "-0.000017197700083099862592575862",
    "70": "-0.000009956533393052361268495181",
    "80": "-0.000006166195528764075475304167",
    "90": "-0.000004024473703766734693502284",
    "100": "-0.000002739351068678330086744132",
    "200": "-0.000000205753231647526892605535",
    "300": "-0.000000043659496185302904545958",
    "400": "-0.000000014366823059961810213641",
    "500": "-0.000000006034363442475256759610",
    "600": "-0.000000002961822515102276227611",
    "700": "-0.000000001619832187577198029687",
    "800": "-0.000000000959243855994648160301",
    "900": "-0.000000000603766177055436240659",
    "1000": "-0.000000000398801070822799359788",
    "2000": "-0.000000000025760853699197105401",
    "3000": "-0.000000000005153001176402320032",
    "4000": "-0.000000000001641618607042605687",
    "5000": "-0.000000000000675339712187831946",
    "6000": "-0.000000000000326676807336313998",
    "7000": "-0.000000000000176730816571737264",
    "8000": "-0.000000000000103777992089730866",
    "9000": "-0.0000000000000648790244833915206",
    "10000": "-0.0000000000000426161649603483992",
}

#: (N, iteration, x) -> value
Y_LATTICE = {
    (50, 15, "10"): "0.02431429298880024169",
    (50, 15, "100"): "0.00010024257693932961",
    (50, 15, "200"): "0.00001450155426224488",
    (50, 15, "300"): "0.00000454855611182438",
    (50, 15, "400"): "0.00000198237212867001",
    (50, 15, "500"): "0.00000104219493450734",
    (50, 30, "10"): "0.024314292988680868310550970861",
    (50, 30, "100"): "0.000100242568139360181452116145",
    (50, 30, "200"): "0.000014501803498782770002228872",
    (50, 30, "300"): "0.000004548571957198050067791132",
    (50, 30, "400"): "0.000001979732627261138334433993",
    (50, 30, "500"): "0.000001034077157264396322609605",
    (50, 45, "10"): "0.024314292988680865622793862360",
    (50, 45, "100"): "0.000100242568139361977721849610",
    (50, 45, "200"): "0.000014501803498894699818187404",
    (50, 45, "300"): "0.000004548571957423423877537837",
    (50, 45, "400"): "0.000001979732627197689616236145",
    (50, 45, "500"): "0.000001034077156421974180242224",
    (100, 15, "10"): "0.02431429298868156639",
    (100, 15, "100"): "0.00010024257310248919",
    (100, 15, "200"): "0.00001450191210978454",
    (100, 15, "300"): "0.00000454926463044528",
    (100, 15, "400"): "0.00000198229714272620",
    (100, 15, "500"): "0.00000104078259214971",
    (100, 30, "10"): "0.024314292988680864190110392994",
    (100, 30, "100"): "0.000100242568139407331732468387",
    (100, 30, "200"): "0.000014501803496945767789317745",
    (100, 30, "300"): "0.000004548571953616664783487078",
    (100, 30, "400"): "0.000001979732628112388963029981",
    (100, 30, "500"): "0.000001034077168200029689420358",
    (100, 45, "10"): "0.024314292988680864190110392609",
    (100, 45, "100"): "0.000100242568139407331736524506",
    (100, 45, "200"): "0.000014501803496945768054100507",
    (100, 45, "300"): "0.000004548571953616663090340995",
    (100, 45, "400"): "0.000001979732628112377070251772",
    (100, 45, "500"): "0.000001034077168200025910092884",
    (150, 15, "10"): "0.02431429298868219619",
    (150, 15, "100"): "0.00010024257760384483",
    (150, 15, "200"): "0.00001450201192996564",
    (150, 15, "300"): "0.00000454989194540830",
    (150, 15, "400"): "0.00000198461606782965",
    (150, 15, "500"): "0.00000104695705516519",
    (150, 30, "10"): "0.024314292988680864190110388158",
    (150, 30, "100"): "0.000100242568139407331685519490",
    (150, 30, "200"): "0.000014501803496945764679973963",
    (150, 30, "300"): "0.000004548571953616680174309015",
    (150, 30, "400"): "0.000001979732628112504877013189",
    (150, 30, "500"): "0.000001034077168199940307972145",
    (150, 45, "10"): "0.024314292988680864190110388161",
    (150, 45, "100"): "0.000100242568139407331685518495",
    (150, 45, "200"): "0.000014501803496945764680397208",
    (150, 45, "300"): "0.000004548571953616680172305663",
    (150, 45, "400"): "0.000001979732628112504797936584",
    (150, 45, "500"): "0.000001034077168199940285585132",
    (200, 15, "10"): "0.02431429298868235435",
    (200, 15, "100"): "0.00010024257868296334",
    (200, 15, "200"): "0.00001450203484084579",
    (200, 15, "300"): "0.00000455003833574595",
    (200, 15, "400"): "0.00000198515363835884",
    (200, 15, "500"): "0.00000104836091033391",
    (200, 30, "10"): "0.024314292988680864190110388176",
    (200, 30, "100"): "0.000100242568139407331685586056",
    (200, 30, "200"): "0.000014501803496945764680404365",
    (200, 30, "300"): "0.000004548571953616680184259791",
    (200, 30, "400"): "0.000001979732628112504742514001",
    (200, 30, "500"): "0.000001034077168199939706184215",
    (200, 45, "10"): "0.024314292988680864190110388176",
    (200, 45, "100"): "0.000100242568139407331685585932",
    (200, 45, "200"): "0.000014501803496945764680403612",
    (200, 45, "300"): "0.000004548571953616680184257373",
    (200, 45, "400"): "0.000001979732628112504742575794",
    (200, 45, "500"): "0.000001034077168199939706035334",
}

#: (N, iteration, x) -> value
DY_LATTICE = {
    (50, 15, "0"): "-1.58798412034597225837",
    (50, 15, "10"): "-0.00460288187129760549",
    (50, 15, "100"): "-0.00000273935089878581",
    (50, 15, "200"): "-0.00000020575729375812",
    (50, 15, "300"): "-0.00000004364704984167",
    (50, 15, "400"): "-0.00000001432569675626",
    (50, 15, "500"): "-0.00000000596694589883",
    (50, 30, "0"): "-1.588071024773768750505101814302",
    (50, 30, "10"): "-0.004602881871269255485186656747",
    (50, 30, "100"): "-0.000002739351068678941009467810",
    (50, 30, "200"): "-0.000000205753231614201535153310",
    (50, 30, "300"): "-0.000000043659496195020703717486",
    (50, 30, "400"): "-0.000000014366823136534945762465",
    (50, 30, "500"): "-0.000000006034363563360980464672",
    (50, 45, "0"): "-1.588071022461220318498896590154",
    (50, 45, "10"): "-0.004602881871269254843810395419",
    (50, 45, "100"): "-0.000002739351068678834237868374",
    (50, 45, "200"): "-0.000000205753231612157754759952",
    (50, 45, "300"): "-0.000000043659496195672746505803",
    (50, 45, "400"): "-0.000000014366823142132220490812",
    (50, 45, "500"): "-0.000000006034363572464639504768",
    (100, 15, "0"): "-1.58806849943926523283",
    (100, 15, "10"): "-0.00460288187126903604",
    (100, 15, "100"): "-0.00000273935085186272",
    (100, 15, "200"): "-0.00000020575078049313",
    (100, 15, "300"): "-0.00000004364886726607",
    (100, 15, "400"): "-0.00000001433829371433",
    (100, 15, "500"): "-0.00000000597884939751",
    (100, 30, "0"): "-1.588071022611375312713595678174",
    (100, 30, "10"): "-0.004602881871269254502543510274",
    (100, 30, "100"): "-0.000002739351068678330084199975",
    (100, 30, "200"): "-0.000000205753231647526767499279",
    (100, 30, "300"): "-0.000000043659496185303706721008",
    (100, 30, "400"): "-0.000000014366823059962243265195",
    (100, 30, "500"): "-0.000000006034363442469847608554",
    (100, 45, "0"): "-1.588071022611375312724621425500",
    (100, 45, "10"): "-0.004602881871269254502543510545",
    (100, 45, "100"): "-0.000002739351068678330084039598",
    (100, 45, "200"): "-0.000000205753231647526755494256",
    (100, 45, "300"): "-0.000000043659496185303784906289",
    (100, 45, "400"): "-0.000000014366823059962315807005",
    (100, 45, "500"): "-0.000000006034363442469561014542",
    (150, 15, "0"): "-1.58807102261138081141",
    (150, 15, "10"): "-0.00460288187126883975",
    (150, 15, "100"): "-0.00000273935065143065",
    (150, 15, "200"): "-0.00000020574848020790",
    (150, 15, "300"): "-0.00000004365807090310",
    (150, 15, "400"): "-0.00000001431185061144",
    (150, 15, "500"): "-0.00000000592789998809",
    (150, 30, "0"): "-1.588071022611375312718684511366",
    (150, 30, "10"): "-0.004602881871269254502543511857",
    (150, 30, "100"): "-0.000002739351068678330086740561",
    (150, 30, "200"): "-0.000000205753231647526892507632",
    (150, 30, "300"): "-0.000000043659496185302905154071",
    (150, 30, "400"): "-0.000000014366823059961806789804",
    (150, 30, "500"): "-0.000000006034363442475251992346",
    (150, 45, "0"): "-1.588071022611375312718684517975",
    (150, 45, "10"): "-0.004602881871269254502543511856",
    (150, 45, "100"): "-0.000002739351068678330086729788",
    (150, 45, "200"): "-0.000000205753231647526892514803",
    (150, 45, "300"): "-0.000000043659496185302905165385",
    (150, 45, "400"): "-0.000000014366823059961806903847",
    (150, 45, "500"): "-0.000000006034363442475252124155",
    (200, 15, "0"): "-1.58807102261137532732",
    (200, 15, "10"): "-0.00460288187126879049",
    (200, 15, "100"): "-0.00000273935060780554",
    (200, 15, "200"): "-0.00000020574799465699",
    (200, 15, "300"): "-0.00000004363715847430",
    (200, 15, "400"): "-0.00000001430608195426",
    (200, 15, "500"): "-0.00000000591587973546",
    (200, 30, "0"): "-1.588071022611375312718684509421",
    (200, 30, "10"): "-0.004602881871269254502543511851",
    (200, 30, "100"): "-0.000002739351068678330086744127",
    (200, 30, "200"): "-0.000000205753231647526892605590",
    (200, 30, "300"): "-0.000000043659496185302904545860",
    (200, 30, "400"): "-0.000000014366823059961810214623",
    (200, 30, "500"): "-0.000000006034363442475256753121",
    (200, 45, "0"): "-1.588071022611375312718684509423",
    (200, 45, "10"): "-0.004602881871269254502543511851",
    (200, 45, "100"): "-0.000002739351068678330086744132",
    (200, 45, "200"): "-0.000000205753231647526892605535",
    (200, 45, "300"): "-0.000000043659496185302904545958",
    (200, 45, "400"): "-0.000000014366823059961810213641",
    (200, 45, "500"): "-0.000000006034363442475256759610",
}

