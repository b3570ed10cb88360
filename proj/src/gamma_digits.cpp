#include "gamma_digits.hpp"

namespace sigmacheck::detail {

// floor(gamma * 10^5000), so gamma lies in [D, D + 1] * 10^-5000.
const char* const kEulerGammaDigits =
    "5772156649015328606065120900824024310421593359399235988057672348848677267776646709369470632917467495"
    "1463144724980708248096050401448654283622417399764492353625350033374293733773767394279259525824709491"
    "6008735203948165670853233151776611528621199501507984793745085705740029921354786146694029604325421519"
    "0587755352673313992540129674205137541395491116851028079842348775872050384310939973613725530608893312"
    "6760017247953783675927135157722610273492913940798430103417771778088154957066107501016191663340152278"
    "9358679654972520362128792265559536696281763887927268013243101047650596370394739495763890657296792960"
    "1009015125195950922243501409349871228247949747195646976318506676129063811051824197444867836380861749"
    "4551698927923018773910729457815543160050021828440960537724342032854783670151773943987003023703395183"
    "2869000155819398804270741154222781971652301107356583396734871765049194181230004065469314299929777956"
    "9303100503086303418569803231083691640025892970890985486825777364288253954925873629596133298574739302"
    "3734388470703702844129201664178502487333790805627549984345907616431671031467107223700218107450444186"
    "6475913480366902553245862544222534518138791243457350136129778227828814894590986384600629316947188714"
    "9587525492366493520473243641097268276160877595088095126208404544477992299157248292516251278427659657"
    "0832146102982146179519579590959227042089896279712553632179488737642106606070659825619901028807561251"
    "9913751167821764361905705844078357350158005607745793421314498850078641517161519456570617043245075008"
    "1687052307890937046143066848179164968425491504967243121837838753564894950868454102340601622508515583"
    "8672349441878804409407701068837951113078720234263952269209716088569083825113787128368204911789259447"
    "8486199118529391029309905925526691727446892044386971114717457157457320393520912231608508682755889010"
    "9451681181016874975470969366671210206304827165895049327314860874940207006742590918248759621373842311"
    "4426531350292303175172257221628324883811245895743862398703757662855130331439299954018531341415862127"
    "8864807611003015211965780068117773763501681838973389663986895793299145638864431037060807817448995795"
    "8324579418962026049841043922507860460362527726022919682995860988339013787171422691788381952984456079"
    "1605197279736047591025109957791335157917722515025492932463250287476779484215840507599290401855764599"
    "0186269267764372660571176813365590881554810747000062336372528894955463697143301200791308555263959549"
    "7823023144039149740494746825947320846185246058776694882879530104063491722921858008706770690427926743"
    "2844469685149718256780958416544918514575331964063311993738215734508749883255608888735280190191550896"
    "8855468259245444527728173057301080606177011363773182462924660081277162101867744684959514281790145111"
    "9489342288344825307531187018609761224623176749775564124619838564014841235871772495542248201615176579"
    "9408062968342428905725947392696386338387438054713196764292683724907608750737852837023046865034905120"
    "3422721743668979284862972908892678977703262462391226188876530057786274360609444360392809770813383693"
    "4235508583941126709218734414512187803276150509478055466300586845563152454605315113252818891079231491"
    "3110323443024509334500030765586487422297177003317845391505669401599884929160911400294869020884853816"
    "9700955156634705544522176403586293982865813123870132535880062568662692699776773773068322690091608510"
    "4515002261071802554659284938949277595897540761559933782648241979506418681437881718508854080367996314"
    "2395400919643887500789000006279979428098863729925919777650404099220379404276168178371566865306693983"
    "0916524322705955304176673664011679295901293053744971830800427584863508380804246673509355983232411696"
    "9214860649892763624432958854873789701489713343538448002890466650902845376896223983048814062730540879"
    "5911896705749385443247869148085337702640677580812754587311176364787874307392066420112513527274996175"
    "4505308558235668306832291767667704103523153503251012465638615670644984713269596933016786613833333344"
    "1657900605867497103646895174569597181553764078377650184278345991842015995431449047725552306147670165"
    "9934163906609120540053221589020913408027822515338528995116654522458691859936712201321501448014242309"
    "8625460448867256934314887049159304464018916450202240549538629184758629307788935064377159660690960468"
    "1243702305465703160679992587166675247219409777980186362625633582526279422393254860132693530701388937"
    "4369238428789385127647408565486502815630677404422030644037568263091029175145722344410503693177114521"
    "7088890744641604868870108386231142612844142596095637040061920057933503415524262402620646569354306125"
    "8526583452192121497771878069586608516334922104836737994592594340379560002192785418379417760203365594"
    "6730788798380848163146782414923546491488766833684074928938652818630485898203548186243838481759976358"
    "4907518079148063494391628470548220075494534898613382723573092219003074009680033766684493250556765493"
    "7530318112516410552492384077645149842395762012781552322944928854557853820248918942441857095919558208"
    "1000715783840396274799858178808888657168306994360607359904210685114279131696995967923008289881560975";

}  // namespace sigmacheck::detail
