#pragma once

#include <array>
#include <string_view>

namespace relaywire::passgen {

// Fixed 2048-entry wordlist (11 bits per word). Frozen: changing it changes
// every generated passphrase, so treat edits as a breaking change.
inline constexpr std::array<std::string_view, 2048> kWordlist{{
    "babam", "badon", "badun", "bafos", "bagem", "bago", "bagun", "bahus",
    "baka", "bakur", "bama", "bana", "banat", "banul", "banun", "bapum",
    "barur", "basu", "bava", "bavar", "bavil", "bawe", "bawel", "bawol",
    "bazar", "bazom", "bazot", "bazul", "bebi", "bebut", "bedan", "befat",
    "befe", "behe", "behi", "bejat", "bejom", "bejur", "bekal", "belor",
    "bemet", "benem", "benu", "beril", "besam", "besas", "beter", "betum",
    "bevil", "bewum", "beza", "bidil", "bidon", "bifon", "bigam", "bijat",
    "bijel", "bikal", "bikun", "bilal", "bilil", "bilir", "bilum", "binas",
    "binur", "bipo", "birus", "bisen", "bisis", "bivol", "bivul", "biwar",
    "biwis", "bobe", "boben", "bodos", "bofan", "bofum", "bofun", "bogal",
    "bokel", "bolim", "bolis", "boma", "bomas", "bomul", "bonin", "bono",
    "bonos", "bopa", "bopis", "bopus", "borir", "boron", "bosam", "bosi",
    "boso", "bosol", "boten", "botur", "bovar", "bove", "bowom", "bozin",
    "bozom", "bubet", "bubus", "budil", "budu", "bufir", "bufun", "bugel",
    "bugen", "bugos", "bugut", "buhen", "buhur", "bujan", "buka", "bukun",
    "bulol", "bumu", "bupan", "bupes", "bupi", "burar", "bures", "busel",
    "busis", "butan", "butel", "butor", "butus", "buven", "buvis", "buvos",
    "buvun", "buwol", "buwul", "buwut", "buzar", "daba", "dabam", "dabom",
    "dadam", "dagan", "dagi", "dagit", "dagum", "dajer", "dakul", "dakum",
    "dalat", "dalos", "damur", "danat", "danul", "darus", "dasor", "datat",
    "date", "datem", "dator", "datum", "davi", "davir", "dawat", "dawut",
    "debal", "debes", "debet", "debos", "dedo", "defel", "defit", "defo",
    "defos", "defot", "degar", "degil", "degit", "deji", "dejon", "dejun",
    "delu", "demut", "denet", "depe", "dera", "deres", "desin", "desom",
    "deti", "detos", "devem", "devos", "devus", "dewat", "dewe", "dewi",
    "dewon", "dewur", "dibam", "dibat", "didu", "digol", "digor", "dijet",
    "dili", "dimas", "dimat", "dimos", "dinol", "dipa", "dipam", "dipat",
    "diso", "divo", "divur", "diwin", "dobel", "dobil", "dodet", "dodur",
    "dofar", "dogas", "dohu", "dojis", "dojum", "doma", "donem", "donon",
    "donu", "dopen", "dore", "doror", "dosem", "dosum", "dovel", "dovin",
    "dowel", "dowem", "dowom", "dozis", "dubos", "dudit", "dufon", "duge",
    "duhim", "dujis", "duka", "dukit", "dukul", "dukun", "dules", "dumas",
    "dumon", "duna", "durar", "duwa", "duwet", "duwis", "duzel", "fabar",
    "fabim", "fafas", "fafet", "fagir", "fagum", "fagun", "faha", "fajol",
    "fala", "falat", "falel", "falir", "falur", "fanet", "fapan", "fapem",
    "faren", "fase", "fatar", "fatol", "favar", "favim", "favom", "favot",
    "fawa", "fawu", "fazar", "fazem", "fedar", "fedul", "fefat", "fefus",
    "fegat", "fegos", "fehus", "fekal", "fekom", "fekum", "fela", "feles",
    "felis", "femal", "feman", "femom", "feni", "fepa", "fepam", "fepor",
    "ferim", "feset", "fesir", "fesom", "fetam", "fetol", "fewas", "fezal",
    "fibar", "fibat", "fibel", "fidu", "fidus", "figim", "fijir", "fijit",
    "fijos", "fika", "filul", "fimar", "fime", "finan", "fine", "finit",
    "finom", "fipem", "fipis", "fital", "fitat", "fivot", "fiwan", "fiwer",
    "fiwos", "fiwu", "fizar", "foba", "foban", "fobes", "fobol", "fobut",
    "fodar", "fodem", "fodit", "fofi", "fofos", "fogam", "fogan", "fohu",
    "fojis", "foli", "fopam", "fopu", "fosin", "fovon", "fowat", "fowom",
    "fowor", "foze", "fozir", "fozun", "fubom", "fude", "fudom", "fuje",
    "fujor", "fujur", "fukar", "fuku", "fukut", "fulal", "fulil", "fulun",
    "fuma", "fumin", "funas", "funen", "funi", "fupat", "fuper", "fupil",
    "fupir", "fupit", "furol", "furos", "fusat", "fute", "futem", "futir",
    "fuvar", "fuvom", "fuwos", "fuzas", "gabot", "gadi", "gadol", "gados",
    "gadum", "gafin", "gafis", "gaget", "gamar", "gamas", "gamem", "gamim",
    "gamo", "ganas", "ganer", "ganin", "gapus", "gaput", "garel", "garir",
    "gasin", "gasun", "gawat", "gedir", "gefel", "gefes", "gegem", "gegin",
    "geha", "gejas", "gekel", "gele", "geler", "gemo", "gepal", "gepat",
    "gepo", "gepum", "gerer", "geror", "gesi", "gesit", "geta", "gevut",
    "gezum", "gibus", "gibut", "gida", "gidal", "gidos", "gifin", "gigat",
    "gigin", "gigo", "gihes", "gihot", "gilu", "ginan", "ginar", "ginas",
    "ginel", "ginem", "ginon", "giri", "gitil", "gitis", "gito", "gitol",
    "giwat", "giwut", "giza", "gizir", "gobor", "godin", "gogan", "gohe",
    "gohet", "gojam", "gojot", "goken", "gokes", "gokur", "gokut", "golu",
    "gomer", "gomil", "gonel", "gonet", "gonos", "gopom", "gopos", "gopot",
    "goran", "gosu", "gowam", "gudal", "gudos", "gugi", "guhus", "gujar",
    "gujol", "gukar", "gular", "gumes", "gunin", "gunot", "guros", "gusim",
    "gusum", "guva", "guvem", "guvi", "guvu", "guwor", "guwum", "guzil",
    "guzis", "habol", "hadel", "hader", "hadom", "hafo", "hahet", "hahi",
    "hakat", "hali", "hama", "hamar", "hana", "hanor", "hapir", "hara",
    "hare", "harot", "haru", "hatel", "hater", "hatun", "havo", "hazon",
    "hebin", "hedir", "hedu", "hegel", "hegen", "hegor", "hehar", "hehe",
    "hehir", "hekam", "heken", "heku", "hekum", "hemin", "henan", "henir",
    "herom", "hesin", "hetis", "hetur", "hevel", "hevim", "hevus", "hezin",
    "hibur", "hidol", "hifer", "hifin", "hifis", "hifom", "hifu", "higo",
    "hiha", "hihil", "hijel", "hijet", "hijim", "hime", "himim", "hinin",
    "hinus", "hipar", "hirat", "hiren", "hires", "hirir", "hisit", "hitam",
    "hitar", "hitim", "hivas", "hivul", "hiwan", "hiwer", "hizas", "hizen",
    "hobil", "hofet", "hogur", "hohat", "hojim", "hojus", "hokat", "hokos",
    "holin", "holis", "homen", "honas", "hopat", "hopim", "hota", "hotem",
    "hotim", "howan", "howar", "hozet", "hozu", "hozum", "hozun", "hozut",
    "hudel", "hufot", "hufu", "huger", "huhos", "huhu", "hujus", "humut",
    "hunen", "hunit", "hupan", "hupar", "huper", "hural", "hurom", "husem",
    "huser", "hutem", "hutum", "huvis", "huzen", "huzur", "jabis", "jadil",
    "jadis", "jadur", "jadut", "jafur", "jagam", "jagin", "jahim", "jahul",
    "jajes", "jaji", "jajom", "jajur", "jakan", "jakot", "jamam", "jamas",
    "jamos", "jamu", "jarat", "jari", "jarim", "jasat", "jatol", "javal",
    "javis", "jawar", "jawer", "jawi", "jazur", "jede", "jedol", "jefan",
    "jefir", "jeger", "jehat", "jejen", "jejos", "jejur", "jekor", "jenas",
    "jerin", "jesem", "jesun", "jetus", "jevos", "jevut", "jezit", "jibon",
    "jibum", "jifur", "jiges", "jigi", "jigis", "jiho", "jihur", "jijit",
    "jikos", "jiku", "jilil", "jilun", "jime", "jimer", "jimun", "jinot",
    "jipo", "jiput", "jises", "jiter", "jizul", "jobes", "jodan", "jofet",
    "jofim", "jofun", "jogol", "johin", "joje", "jojis", "jojor", "jokim",
    "jokut", "jolil", "jomal", "joman", "jomul", "jonel", "jopir", "josin",
    "josis", "jotis", "jotit", "joton", "jozir", "jozit", "jozo", "juhes",
    "juhis", "juja", "jujal", "jujos", "jujus", "jukor", "julol", "julot",
    "jumat", "juno", "jupat", "jupon", "jupus", "jurin", "jurum", "jusel",
    "juvan", "juwer", "kabir", "kabum", "kafas", "kafil", "kafor", "kagil",
    "kahet", "kahom", "kajas", "kakat", "kaken", "kako", "kakus", "kale",
    "kalil", "kalo", "kames", "kanim", "kano", "kape", "kapis", "kapul",
    "kate", "katel", "kavi", "kawam", "kawo", "kawor", "kawus", "kazel",
    "kazon", "kazot", "kefam", "kefar", "kegom", "kejit", "kekat", "keket",
    "keles", "kelir", "kelu", "kemam", "keman", "kemir", "kemus", "kenis",
    "kepet", "kerat", "kesar", "ketor", "ketot", "kewal", "kezan", "kidot",
    "kifil", "kigan", "kigol", "kiha", "kihes", "kipum", "kiram", "kisen",
    "kisim", "kisut", "kitet", "kitol", "kivan", "kiwan", "kiwot", "kiwun",
    "kizis", "koban", "kodes", "kofal", "kofen", "kogan", "kojel", "komin",
    "konot", "kopim", "kopur", "kopus", "koput", "koret", "korit", "koro",
    "kosam", "kotal", "kotis", "kowin", "kowom", "kowon", "kube", "kubu",
    "kudam", "kudar", "kudim", "kugil", "kuhil", "kuho", "kujut", "kukat",
    "kukem", "kula", "kular", "kumal", "kumil", "kumu", "kuna", "kupot",
    "kurim", "kuru", "kuso", "kusun", "kusus", "kutel", "kutin", "kutun",
    "kuwer", "kuzer", "laber", "ladit", "ladot", "ladum", "lafel", "lafun",
    "lagal", "lagi", "lagom", "lagor", "lagut", "lahal", "lahit", "lajam",
    "lajo", "lama", "lamem", "lanem", "lanu", "lanut", "laris", "lasam",
    "lase", "latil", "latim", "lawan", "lawel", "lazo", "lebu", "lebut",
    "ledi", "ledu", "ledur", "legit", "legut", "lehen", "leho", "lejo",
    "lejor", "lejul", "lele", "lemen", "lemus", "lenar", "lenum", "lepan",
    "leput", "lere", "lerus", "lese", "leson", "lesut", "levan", "leven",
    "lezan", "lezim", "lezus", "lezut", "lidum", "lifan", "lifon", "lifum",
    "liget", "lihis", "lijut", "lika", "like", "likim", "lilal", "lili",
    "limal", "limon", "limus", "lirut", "lisem", "lisus", "livil", "livur",
    "liwat", "lizim", "lizur", "lodis", "logo", "lojom", "lokin", "lokos",
    "loli", "lonu", "losem", "lotol", "lovam", "lovim", "lovum", "lovun",
    "lowil", "lozal", "lubit", "lugor", "lugun", "luhi", "luhum", "lujim",
    "luken", "lulas", "lunam", "luni", "lunir", "lunis", "lupit", "lutan",
    "lutir", "luton", "luvet", "maber", "mada", "madas", "madat", "mafom",
    "magos", "maho", "majan", "maji", "majum", "maka", "makom", "makul",
    "mala", "malas", "mama", "mamom", "mapis", "mapus", "marom", "masim",
    "maver", "mawas", "mawis", "mawur", "mazam", "medi", "mefen", "megor",
    "mehet", "mehim", "mejo", "mejun", "mekam", "mekan", "mekir", "mekon",
    "mekus", "memul", "memur", "menon", "menor", "mepa", "merim", "mesil",
    "mete", "metil", "meto", "metun", "mevon", "mewem", "mezat", "miba",
    "mibet", "mibi", "midil", "midos", "mifan", "mifen", "mifim", "migan",
    "migim", "mije", "mijil", "mijun", "mimit", "minon", "mipet", "mipit",
    "mipum", "mivut", "mizis", "mizit", "mobo", "mobol", "model", "modut",
    "mofet", "mohil", "mohol", "mojet", "mokam", "mokel", "moker", "molen",
    "molil", "molon", "mono", "mopam", "mopat", "mopet", "moron", "mosa",
    "motan", "motun", "movut", "mowes", "muba", "mufa", "mugul", "mugum",
    "muhel", "mukar", "muker", "muket", "mukil", "mukul", "mukun", "mumu",
    "munu", "munul", "mupan", "mupet", "mupi", "murur", "musa", "musi",
    "musu", "mutem", "mutet", "mutur", "muva", "muvos", "muwun", "muzir",
    "nabat", "nabel", "nabur", "nadin", "nafom", "nagam", "nagim", "nagon",
    "nagun", "naje", "najom", "nako", "naku", "namas", "nane", "nanil",
    "nape", "napun", "napus", "nasor", "nawil", "nazut", "neba", "nebos",
    "negal", "negel", "neger", "nejes", "nejir", "nejo", "nejot", "nekom",
    "nekul", "nekut", "neler", "nelis", "nelul", "neson", "nesos", "nesut",
    "netim", "neven", "nevu", "nibem", "nidal", "nidam", "nihim", "nihir",
    "nihu", "nihus", "nijur", "nilet", "nilun", "nimom", "nimul", "ninam",
    "ninet", "nipal", "nipit", "nipum", "nipur", "nirel", "nitel", "nize",
    "nizin", "nizor", "nizos", "nizum", "nobon", "nofem", "nofus", "nohit",
    "nojar", "noman", "nomet", "nonar", "nonil", "nonor", "nonum", "nopem",
    "norer", "nosor", "notur", "novat", "novir", "nowir", "nozin", "nubi",
    "nufe", "nufem", "nuful", "nugu", "nuhim", "nujet", "nukus", "nuler",
    "numol", "nunes", "nunim", "nunot", "nupar", "nusim", "nutu", "nuwu",
    "nuzet", "pabat", "pabun", "pada", "pafil", "paful", "pagan", "pagot",
    "paho", "pajel", "paji", "pamil", "panat", "papit", "parem", "pator",
    "pazal", "pazi", "pazil", "pebis", "pedat", "pejol", "pekan", "peku",
    "pelet", "pelon", "pemes", "pemir", "pemur", "penen", "pepas", "pepit",
    "perot", "pesan", "pesil", "petu", "pevit", "pevus", "pewu", "pewul",
    "pewur", "pewus", "pidis", "pifos", "pigim", "piku", "pikus", "pilen",
    "pimar", "pine", "pinor", "pipet", "pirer", "pirun", "pisan", "pisot",
    "pivon", "pivos", "pivur", "piwor", "piwot", "podon", "podul", "pofin",
    "pofor", "pogas", "pohil", "pojet", "polit", "pomor", "ponom", "ponus",
    "popu", "porat", "porer", "porir", "poset", "potim", "potur", "povom",
    "powut", "pozal", "pozin", "pozum", "pubo", "pudul", "pufin", "pugim",
    "pugol", "pugor", "puhan", "pujat", "pujim", "pujit", "pukos", "pumu",
    "punas", "punil", "pupat", "pural", "pusar", "puso", "puti", "putun",
    "puwat", "puwun", "rabel", "rabun", "radis", "radon", "raful", "rafur",
    "ragat", "ragot", "rahin", "raje", "rajol", "rajur", "ralan", "ralat",
    "ralos", "ralun", "ramat", "rame", "rapam", "rare", "rarul", "rasil",
    "rasis", "rasut", "ravem", "rawan", "rawor", "raza", "rebul", "redar",
    "refon", "regel", "rehas", "rehem", "rehir", "rehut", "rejot", "reken",
    "relen", "relot", "relu", "reman", "remat", "renam", "renim", "renus",
    "repo", "reres", "resur", "retes", "revun", "rewar", "rewen", "rewir",
    "rewur", "rezur", "riban", "ribum", "ridan", "ride", "rifal", "rigas",
    "rigi", "rigir", "rijim", "rijus", "rikal", "riken", "rilam", "rilel",
    "rimol", "rimu", "rines", "rinum", "ripas", "riram", "riren", "rirol",
    "ritel", "rivar", "rizam", "rizi", "rizir", "rizit", "rizom", "rofi",
    "rofot", "rogam", "rogan", "rogem", "roger", "roges", "rohur", "rolon",
    "romen", "romes", "romo", "ronol", "roris", "rosen", "rosos", "rotar",
    "rotat", "rotu", "rovul", "rowos", "rowus", "rozat", "rozis", "rozo",
    "rozus", "rubur", "rudam", "rufa", "rugul", "rujol", "rukit", "rukos",
    "rulal", "rulan", "rulim", "rumu", "runon", "rupor", "rurom", "ruson",
    "ruvil", "ruwu", "ruzar", "sabes", "sadan", "sadat", "sago", "sajal",
    "sajol", "sakul", "salil", "sater", "satom", "sawil", "sawum", "sawun",
    "seber", "sefes", "sefit", "seger", "segil", "segor", "sehe", "sehun",
    "sejat", "sejes", "selen", "semal", "semem", "senen", "senil", "sepus",
    "seres", "sesir", "sesun", "sevum", "sewet", "sezem", "sibal", "siber",
    "sibul", "sidin", "sifa", "sifel", "sigos", "sihus", "sija", "sijar",
    "sijom", "sikim", "sile", "simom", "sinin", "sinon", "sires", "siro",
    "siros", "sisal", "sisur", "sitas", "siwe", "siwos", "sizel", "sobel",
    "sobes", "sobet", "sodas", "sodin", "sodon", "sodu", "sogo", "sojem",
    "sojes", "sojul", "sokam", "sokim", "sokon", "somar", "somen", "somi",
    "sonir", "sonit", "sopal", "sorur", "sotet", "sotim", "soto", "sovit",
    "subet", "sufan", "suken", "suki", "sulat", "sulis", "sulum", "sunon",
    "supir", "sural", "suras", "surir", "susat", "suto", "suwes", "tabat",
    "tabur", "tadil", "tadom", "tadot", "tagem", "tagin", "tahur", "tajel",
    "talum", "taman", "tamin", "tanol", "taput", "tares", "taret", "tarun",
    "tatan", "tatar", "tatil", "tavas", "tavin", "tavur", "tawem", "tawun",
    "tazam", "tazos", "tebel", "tebin", "tebon", "tefit", "tegat", "teger",
    "tegun", "teher", "tehes", "tehos", "tehu", "temam", "temas", "tenim",
    "teret", "tese", "tesor", "tetir", "tevo", "tewen", "tewi", "tibar",
    "tibu", "tidim", "tidum", "tidun", "tifi", "tifor", "tiget", "tigo",
    "tigut", "tikel", "tikim", "tikit", "tikol", "tilir", "timas", "timo",
    "tiner", "tinum", "tipu", "tires", "tiret", "tiris", "tirit", "tirot",
    "tirur", "tisil", "tisus", "titet", "tiwir", "tizil", "tobul", "tobus",
    "todas", "toder", "todom", "todon", "tofon", "toge", "tohis", "tohos",
    "tojan", "tojen", "tokal", "tolan", "tolum", "tomo", "tomom", "topin",
    "toron", "tosam", "totem", "totin", "towar", "towet", "tozim", "tozut",
    "tube", "tudan", "tudim", "tudin", "tufa", "tufit", "tugim", "tugir",
    "tuham", "tuhet", "tuhu", "tuhun", "tuhur", "tuka", "tumal", "tumam",
    "tuman", "tumis", "tumo", "tuner", "tunut", "tupel", "tupon", "turit",
    "tusen", "tutel", "tuve", "tuvit", "tuvor", "tuvu", "tuwil", "tuwor",
    "tuwu", "tuwun", "tuzor", "tuzur", "vabit", "vabo", "vafa", "vafem",
    "vafos", "vafut", "vamen", "vanes", "vanom", "vapas", "vapet", "vapi",
    "varin", "varut", "vasat", "vawir", "vawis", "vazam", "veben", "vebes",
    "vebil", "vebur", "vedur", "vefal", "vegam", "vegas", "vegat", "vejot",
    "vekar", "velat", "velol", "vemim", "veni", "vepit", "vesit", "veso",
    "vetor", "vevim", "vewe", "vibal", "vibim", "vibit", "vidir", "vidu",
    "vifir", "vihil", "vimom", "vinal", "vinan", "vipel", "vipin", "vipor",
    "vipot", "vipun", "viput", "virit", "vitul", "vive", "viwom", "vizem",
    "vizi", "voba", "vodas", "vodo", "vofil", "vofot", "vojem", "voken",
    "volat", "volel", "volin", "volul", "vonet", "vopon", "voro", "vorul",
    "vorus", "voves", "vovor", "vowa", "vudem", "vugi", "vuhu", "vujul",
    "vulas", "vulol", "vulus", "vumet", "vumun", "vunes", "vunis", "vunit",
    "vunu", "vutan", "vutat", "vuti", "vuves", "vuwan", "vuwes", "vuwut",
    "vuza", "vuzis", "vuzit", "wabas", "wabut", "wagil", "wajin", "wakin",
    "walal", "wali", "wamat", "wanom", "wapet", "waras", "warol", "warus",
    "wasem", "watat", "waver", "wavil", "wawon", "wawot", "wazam", "waze",
    "wazit", "wazol", "webar", "wefem", "wefil", "weges", "weget", "wego",
    "weham", "wejen", "wekel", "wekun", "welet", "weno", "wepa", "wepon",
    "werun", "wesar", "wesel", "weset", "wesim", "wesin", "wesis", "wetat",
    "wetem", "wetim", "wetor", "wevur", "wevus", "wibil", "wibos", "wibur",
    "wida", "widit", "wifom", "wigir", "wigum", "wigus", "wihun", "wijet",
    "wikit", "wimol", "wina", "winen", "wiras", "wirim", "wirot", "wiven",
    "wivim", "wiwet", "wize", "wizun", "woben", "wofin", "wogar", "wogor",
    "wogot", "wogus", "wohe", "wohom", "wokal", "wokan", "womas", "womer",
    "wopar", "wopil", "wopir", "wopit", "woram", "wosor", "woval", "wowum",
    "wozat", "wozir", "wubu", "wuda", "wudas", "wude", "wufat", "wugat",
    "wuhin", "wujar", "wukum", "wulas", "wumel", "wumin", "wumus", "wupar",
    "wutil", "wutom", "wuve", "wuwal", "wuwom", "wuwos", "wuzus", "zabut",
    "zafal", "zafon", "zaga", "zagot", "zagun", "zahi", "zahil", "zahir",
    "zahor", "zajon", "zakam", "zaket", "zaku", "zalus", "zamas", "zanor",
    "zapus", "zarul", "zasen", "zasit", "zator", "zave", "zavo", "zavom",
    "zavon", "zavur", "zawun", "zazom", "zebin", "zebu", "zedal", "zedas",
    "zeden", "zefil", "zegas", "zego", "zegon", "zehi", "zejel", "zeket",
    "zekin", "zekir", "zekut", "zelem", "zelis", "zelor", "zepit", "zesus",
    "zetat", "zetit", "zewas", "zewit", "zezen", "ziba", "zibal", "ziben",
    "zibis", "zibit", "zibon", "zidim", "zidu", "zidun", "zifun", "zigir",
    "zihes", "zikan", "zimet", "zinem", "zinun", "ziput", "zirol", "zisat",
    "zisot", "zisun", "zive", "zivos", "zivut", "zizin", "zizun", "zizus",
    "zobum", "zode", "zohe", "zojam", "zojar", "zoli", "zolu", "zonat",
    "zones", "zonor", "zonul", "zopa", "zopon", "zopot", "zorir", "zorot",
    "zoru", "zose", "zosen", "zoso", "zotam", "zotu", "zova", "zovit",
    "zovom", "zozol", "zozut", "zubal", "zudam", "zudum", "zufin", "zugas",
    "zugit", "zugos", "zuhet", "zujas", "zujel", "zujur", "zukel", "zulem",
    "zulot", "zupis", "zupun", "zuron", "zuset", "zusim", "zutu", "zuvil",
}};

}  // namespace relaywire::passgen
