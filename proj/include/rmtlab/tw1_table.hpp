// Generated by tools/gen_tw1_table.py from the same data as data/tw1_cdf.txt.
#pragma once

#include <array>

namespace rmtlab::detail {

inline constexpr double kTw1Lo = -10.0;
inline constexpr double kTw1Step = 0.01;
inline constexpr int kTw1TableVersion = 1;

inline constexpr std::array<double, 1801> kTw1Cdf = {
    3.162145956483e-22, 3.623012965831e-22, 4.150055483869e-22, 4.752668387622e-22,
    5.441484175116e-22, 6.227907174741e-22, 7.126776807004e-22, 8.153312549540e-22,
    9.325427473903e-22, 1.066302424729e-21, 1.218935164170e-21, 1.393110163534e-21,
    1.591788590220e-21, 1.818271852895e-21, 2.076476872095e-21, 2.370746484175e-21,
    2.706122247041e-21, 3.088065820211e-21, 3.523119408089e-21, 4.018347019123e-21,
    4.582190818096e-21, 5.223618414420e-21, 5.953465461287e-21, 6.783812825891e-21,
    7.727810162418e-21, 8.800868940483e-21, 1.002062939452e-20, 1.140674367187e-20,
    1.298104888469e-20, 1.476897792716e-20, 1.679919228601e-20, 1.910383184399e-20,
    2.171910567315e-20, 2.468621300569e-20, 2.805192076485e-20, 3.186851902238e-20,
    3.619559977510e-20, 4.110008910433e-20, 4.665740410954e-20, 5.295323123356e-20,
    6.008387757433e-20, 6.815811693251e-20, 7.729848256271e-20, 8.764278211326e-20,
    9.934764568633e-20, 1.125872980944e-19, 1.275610917174e-19, 1.444913764598e-19,
    1.636278082480e-19, 1.852537856864e-19, 2.096882881710e-19, 2.372860222496e-19,
    2.684529390958e-19, 3.036375431485e-19, 3.433519608937e-19, 3.881658133211e-19,
    4.387222096523e-19, 4.957456153874e-19, 5.600439110269e-19, 6.325334846580e-19,
    7.142278202508e-19, 8.062821647275e-19, 9.099801441371e-19, 1.026770449194e-18,
    1.158272988154e-18, 1.306304192571e-18, 1.472899823091e-18, 1.660348164325e-18,
    1.871199679042e-18, 2.108322694532e-18, 2.374931801710e-18, 2.674624842256e-18,
    3.011414336201e-18, 3.389807132756e-18, 3.814847458277e-18, 4.292147748388e-18,
    4.828046024531e-18, 5.429546685307e-18, 6.104550640859e-18, 6.861847852079e-18,
    7.711273829804e-18, 8.663804415670e-18, 9.731708914644e-18, 1.092867307403e-17,
    1.226996726765e-17, 1.377266637057e-17, 1.545575218875e-17, 1.734047681506e-17,
    1.945046510320e-17, 2.181209106381e-17, 2.445476723743e-17, 2.741121904783e-17,
    3.071794170191e-17, 3.441556036465e-17, 3.854927818923e-17, 4.316952824837e-17,
    4.833225320201e-17, 5.409986808382e-17, 6.054175640358e-17, 6.773505911117e-17,
    7.576549384413e-17, 8.472843677179e-17, 9.472981398748e-17, 1.058873959480e-16,
    1.183319602244e-16, 1.322086331869e-16, 1.476787858747e-16, 1.649213027864e-16,
    1.841347204434e-16, 2.055395533134e-16, 2.293801698365e-16, 2.559276136808e-16,
    2.854824915342e-16, 3.183777696364e-16, 3.549825952310e-16, 3.957061398530e-16,
    4.410013093911e-16, 4.913698198518e-16, 5.473666935821e-16, 6.096074932808e-16,
    6.787719843146e-16, 7.556130594466e-16, 8.409632438951e-16, 9.357431675119e-16,
    1.040970897521e-15, 1.157771174397e-15, 1.287387810246e-15, 1.431194390076e-15,
    1.590708064196e-15, 1.767604355695e-15, 1.963733165876e-15, 2.181137079534e-15,
    2.422068944387e-15, 2.689015579656e-15, 2.984717688608e-15, 3.312201211855e-15,
    3.674800274892e-15, 4.076188396661e-15, 4.520416671824e-15, 5.011948987047e-15,
    5.555698346323e-15, 6.157080031954e-15, 6.822051586228e-15, 7.557175906186e-15,
    8.369671955227e-15, 9.267481829328e-15, 1.025934556970e-14, 1.135487315382e-14,
    1.256463033351e-14, 1.390023198624e-14, 1.537444038993e-14, 1.700128577069e-14,
    1.879617282579e-14, 2.077602374078e-14, 2.295941690436e-14, 2.536674939504e-14,
    2.802040739023e-14, 3.094495247465e-14, 3.416733127217e-14, 3.771709678000e-14,
    4.162666260464e-14, 4.593154565372e-14, 5.067069228737e-14, 5.588676923571e-14,
    6.162652602548e-14, 6.794116406826e-14, 7.488675216592e-14, 8.252468054581e-14,
    9.092213497583e-14, 1.001526505692e-13, 1.102966767054e-13, 1.214422102510e-13,
    1.336854858854e-13, 1.471317206216e-13, 1.618959413533e-13, 1.781038452276e-13,
    1.958927715997e-13, 2.154127590442e-13, 2.368276714580e-13, 2.603164293677e-13,
    2.860743621222e-13, 3.143146426889e-13, 3.452699136491e-13, 3.791939411286e-13,
    4.163635452257e-13, 4.570805581627e-13, 5.016740814729e-13, 5.505028380270e-13,
    6.039577077879e-13, 6.624645938559e-13, 7.264874369245e-13, 7.965314761659e-13,
    8.731468191458e-13, 9.569323203197e-13, 1.048539732240e-12, 1.148678216359e-12,
    1.258119240727e-12, 1.377701927534e-12, 1.508338693196e-12, 1.651021494594e-12,
    1.806828559024e-12, 1.976931537128e-12, 2.162603434534e-12, 2.365226981941e-12,
    2.586303877502e-12, 2.827464563499e-12, 3.090478959961e-12, 3.377267948472e-12,
    3.689915850292e-12, 4.030683777592e-12, 4.402024178931e-12, 4.806596359503e-12,
    5.247283459749e-12, 5.727210536704e-12, 6.249764129696e-12, 6.818613445530e-12,
    7.437733013253e-12, 8.111427240578e-12, 8.844356733553e-12, 9.641566867755e-12,
    1.050851831797e-11, 1.145111965693e-11, 1.247576359903e-11, 1.358936414705e-11,
    1.479939848273e-11, 1.611395050865e-11, 1.754175831784e-11, 1.909226569465e-11,
    2.077567621622e-11, 2.260301270579e-11, 2.458617998491e-11, 2.673803303174e-11,
    2.907245034851e-11, 3.160441143865e-11, 3.435008146353e-11, 3.732690119490e-11,
    4.055368389743e-11, 4.405071885262e-11, 4.783988330705e-11, 5.194476091752e-11,
    5.639077040330e-11, 6.120530226148e-11, 6.641786560888e-11, 7.206024597731e-11,
    7.816667317596e-11, 8.477400202959e-11, 9.192190614439e-11, 9.965308304417e-11,
    1.080134776231e-10, 1.170525165942e-10, 1.268233631226e-10, 1.373831872177e-10,
    1.487934545923e-10, 1.611202367416e-10, 1.744345410115e-10, 1.888126643109e-10,
    2.043365700723e-10, 2.210942916623e-10, 2.391803617349e-10, 2.586962739533e-10,
    2.797509696115e-10, 3.024613637396e-10, 3.269529029754e-10, 3.533601590902e-10,
    3.818274659060e-10, 4.125095952813e-10, 4.455724775138e-10, 4.811939729252e-10,
    5.195646891776e-10, 5.608888532243e-10, 6.053852431902e-10, 6.532881769286e-10,
    7.048485645163e-10, 7.603350330709e-10, 8.200351151168e-10, 8.842565216193e-10,
    9.533284944252e-10, 1.027603236241e-09, 1.107457443600e-09, 1.193293926237e-09,
    1.285543334492e-09, 1.384665991498e-09, 1.491153839541e-09, 1.605532509969e-09,
    1.728363517910e-09, 1.860246594831e-09, 2.001822163755e-09, 2.153773963227e-09,
    2.316831837107e-09, 2.491774688210e-09, 2.679433616752e-09, 2.880695234602e-09,
    3.096505204125e-09, 3.327871961292e-09, 3.575870675240e-09, 3.841647446254e-09,
    4.126423740876e-09, 4.431501097537e-09, 4.758266107623e-09, 5.108195684394e-09,
    5.482862642173e-09, 5.883941601790e-09, 6.313215227253e-09, 6.772580842102e-09,
    7.264057403530e-09, 7.789792889815e-09, 8.352072110709e-09, 8.953324944887e-09,
    9.596135061052e-09, 1.028324912878e-08, 1.101758652701e-08, 1.180224962872e-08,
    1.264053462150e-08, 1.353594296000e-08, 1.449219343468e-08, 1.551323489831e-08,
    1.660325972374e-08, 1.776671794076e-08, 1.900833220513e-08, 2.033311352622e-08,
    2.174637787551e-08, 2.325376367341e-08, 2.486125021582e-08, 2.657517708403e-08,
    2.840226457664e-08, 3.034963524072e-08, 3.242483651498e-08, 3.463586457681e-08,
    3.699118942045e-08, 3.949978125975e-08, 4.217113826741e-08, 4.501531578598e-08,
    4.804295699172e-08, 5.126532517805e-08, 5.469433763035e-08, 5.834260127593e-08,
    6.222345006970e-08, 6.635098431179e-08, 7.074011192903e-08, 7.540659177066e-08,
    8.036707911465e-08, 8.563917336811e-08, 9.124146816212e-08, 9.719360385004e-08,
    1.035163226318e-07, 1.102315262877e-07, 1.173623367563e-07, 1.249331596072e-07,
    1.329697505351e-07, 1.414992850785e-07, 1.505504316239e-07, 1.601534277863e-07,
    1.703401605731e-07, 1.811442501092e-07, 1.926011373588e-07, 2.047481759532e-07,
    2.176247281413e-07, 2.312722653079e-07, 2.457344730099e-07, 2.610573607412e-07,
    2.772893768702e-07, 2.944815285217e-07, 3.126875070591e-07, 3.319638190431e-07,
    3.523699230998e-07, 3.739683728107e-07, 3.968249659095e-07, 4.210089000585e-07,
    4.465929353574e-07, 4.736535640315e-07, 5.022711873125e-07, 5.325303000623e-07,
    5.645196832226e-07, 5.983326044849e-07, 6.340670275199e-07, 6.718258299352e-07,
    7.117170304251e-07, 7.538540255437e-07, 7.983558360055e-07, 8.453473634994e-07,
    8.949596578627e-07, 9.473301952712e-07, 1.002603167661e-06, 1.060929784057e-06,
    1.122468583788e-06, 1.187385762490e-06, 1.255855510975e-06, 1.328060367476e-06,
    1.404191583970e-06, 1.484449506737e-06, 1.569043971761e-06, 1.658194715563e-06,
    1.752131801745e-06, 1.851096064107e-06, 1.955339566414e-06, 2.065126079922e-06,
    2.180731578563e-06, 2.302444753148e-06, 2.430567544281e-06, 2.565415695389e-06,
    2.707319326158e-06, 2.856623526732e-06, 3.013688973770e-06, 3.178892568930e-06,
    3.352628100078e-06, 3.535306926503e-06, 3.727358688275e-06, 3.929232040948e-06,
    4.141395415875e-06, 4.364337807313e-06, 4.598569586856e-06, 4.844623345864e-06,
    5.103054767028e-06, 5.374443525508e-06, 5.659394220734e-06, 5.958537339507e-06,
    6.272530251473e-06, 6.602058237563e-06, 6.947835552613e-06, 7.310606522633e-06,
    7.691146678052e-06, 8.090263923788e-06, 8.508799746568e-06, 8.947630461396e-06,
    9.407668497207e-06, 9.889863723061e-06, 1.039520481648e-05, 1.092472067342e-05,
    1.147948186259e-05, 1.206060212398e-05, 1.266923991325e-05, 1.330659999260e-05,
    1.397393506961e-05, 1.467254748495e-05, 1.540379094964e-05, 1.616907233410e-05,
    1.696985350837e-05, 1.780765323646e-05, 1.868404912456e-05, 1.960067962493e-05,
    2.055924609650e-05, 2.156151492316e-05, 2.260931969092e-05, 2.370456342561e-05,
    2.484922089117e-05, 2.604534095110e-05, 2.729504899298e-05, 2.860054941787e-05,
    2.996412819607e-05, 3.138815548946e-05, 3.287508834232e-05, 3.442747344189e-05,
    3.604794994910e-05, 3.773925240164e-05, 3.950421368944e-05, 4.134576810476e-05,
    4.326695446712e-05, 4.527091932503e-05, 4.736092023509e-05, 4.954032911969e-05,
    5.181263570470e-05, 5.418145103757e-05, 5.665051108828e-05, 5.922368043240e-05,
    6.190495601855e-05, 6.469847102134e-05, 6.760849877986e-05, 7.063945682379e-05,
    7.379591098737e-05, 7.708257961220e-05, 8.050433784068e-05, 8.406622199958e-05,
    8.777343407570e-05, 9.163134628400e-05, 9.564550572947e-05, 9.982163916218e-05,
    1.041656578285e-04, 1.086836624165e-04, 1.133819480988e-04, 1.182670096716e-04,
    1.233455467911e-04, 1.286244693079e-04, 1.341109027003e-04, 1.398121936058e-04,
    1.457359154519e-04, 1.518898741870e-04, 1.582821141109e-04, 1.649209238046e-04,
    1.718148421619e-04, 1.789726645198e-04, 1.864034488900e-04, 1.941165222911e-04,
    2.021214871798e-04, 2.104282279842e-04, 2.190469177346e-04, 2.279880247961e-04,
    2.372623196989e-04, 2.468808820684e-04, 2.568551076523e-04, 2.671967154473e-04,
    2.779177549207e-04, 2.890306133296e-04, 3.005480231351e-04, 3.124830695101e-04,
    3.248491979428e-04, 3.376602219292e-04, 3.509303307598e-04, 3.646740973938e-04,
    3.789064864237e-04, 3.936428621242e-04, 4.088989965896e-04, 4.246910779521e-04,
    4.410357186833e-04, 4.579499639754e-04, 4.754513002002e-04, 4.935576634441e-04,
    5.122874481160e-04, 5.316595156283e-04, 5.516932031442e-04, 5.724083323940e-04,
    5.938252185522e-04, 6.159646791783e-04, 6.388480432141e-04, 6.624971600352e-04,
    6.869344085570e-04, 7.121827063866e-04, 7.382655190217e-04, 7.652068690907e-04,
    7.930313456314e-04, 8.217641134040e-04, 8.514309222351e-04, 8.820581163880e-04,
    9.136726439566e-04, 9.463020662770e-04, 9.799745673542e-04, 1.014718963298e-03,
    1.050564711763e-03, 1.087541921395e-03, 1.125681361264e-03, 1.165014470297e-03,
    1.205573366689e-03, 1.247390857304e-03, 1.290500447045e-03, 1.334936348192e-03,
    1.380733489714e-03, 1.427927526532e-03, 1.476554848743e-03, 1.526652590779e-03,
    1.578258640527e-03, 1.631411648365e-03, 1.686151036145e-03, 1.742517006086e-03,
    1.800550549593e-03, 1.860293455985e-03, 1.921788321124e-03, 1.985078555946e-03,
    2.050208394882e-03, 2.117222904162e-03, 2.186167989999e-03, 2.257090406643e-03,
    2.330037764294e-03, 2.405058536882e-03, 2.482202069687e-03, 2.561518586803e-03,
    2.643059198445e-03, 2.726875908069e-03, 2.813021619329e-03, 2.901550142835e-03,
    2.992516202719e-03, 3.085975443004e-03, 3.181984433759e-03, 3.280600677036e-03,
    3.381882612585e-03, 3.485889623336e-03, 3.592682040641e-03, 3.702321149266e-03,
    3.814869192133e-03, 3.930389374793e-03, 4.048945869632e-03, 4.170603819796e-03,
    4.295429342836e-03, 4.423489534050e-03, 4.554852469532e-03, 4.689587208907e-03,
    4.827763797756e-03, 4.969453269706e-03, 5.114727648201e-03, 5.263659947929e-03,
    5.416324175899e-03, 5.572795332172e-03, 5.733149410228e-03, 5.897463396963e-03,
    6.065815272318e-03, 6.238284008518e-03, 6.414949568929e-03, 6.595892906520e-03,
    6.781195961915e-03, 6.970941661048e-03, 7.165213912395e-03, 7.364097603788e-03,
    7.567678598802e-03, 7.776043732708e-03, 7.989280807986e-03, 8.207478589396e-03,
    8.430726798598e-03, 8.659116108311e-03, 8.892738136022e-03, 9.131685437218e-03,
    9.376051498154e-03, 9.625930728140e-03, 9.881418451358e-03, 1.014261089818e-02,
    1.040960519603e-02, 1.068249935967e-02, 1.096139228114e-02, 1.124638371903e-02,
    1.153757428738e-02, 1.183506544399e-02, 1.213895947829e-02, 1.244935949862e-02,
    1.276636941911e-02, 1.309009394590e-02, 1.342063856300e-02, 1.375810951750e-02,
    1.410261380434e-02, 1.445425915054e-02, 1.481315399890e-02, 1.517940749118e-02,
    1.555312945079e-02, 1.593443036492e-02, 1.632342136614e-02, 1.672021421358e-02,
    1.712492127344e-02, 1.753765549910e-02, 1.795853041071e-02, 1.838766007417e-02,
    1.882515907970e-02, 1.927114251991e-02, 1.972572596723e-02, 2.018902545102e-02,
    2.066115743406e-02, 2.114223878857e-02, 2.163238677178e-02, 2.213171900097e-02,
    2.264035342805e-02, 2.315840831367e-02, 2.368600220085e-02, 2.422325388813e-02,
    2.477028240232e-02, 2.532720697073e-02, 2.589414699302e-02, 2.647122201254e-02,
    2.705855168732e-02, 2.765625576055e-02, 2.826445403078e-02, 2.888326632152e-02,
    2.951281245066e-02, 3.015321219933e-02, 3.080458528044e-02, 3.146705130692e-02,
    3.214072975948e-02, 3.282573995410e-02, 3.352220100917e-02, 3.423023181229e-02,
    3.494995098673e-02, 3.568147685766e-02, 3.642492741799e-02, 3.718042029401e-02,
    3.794807271068e-02, 3.872800145677e-02, 3.952032284962e-02, 4.032515269980e-02,
    4.114260627545e-02, 4.197279826646e-02, 4.281584274845e-02, 4.367185314659e-02,
    4.454094219921e-02, 4.542322192127e-02, 4.631880356776e-02, 4.722779759687e-02,
    4.815031363315e-02, 4.908646043051e-02, 5.003634583516e-02, 5.100007674851e-02,
    5.197775909000e-02, 5.296949775993e-02, 5.397539660218e-02, 5.499555836710e-02,
    5.603008467420e-02, 5.707907597509e-02, 5.814263151627e-02, 5.922084930216e-02,
    6.031382605805e-02, 6.142165719327e-02, 6.254443676440e-02, 6.368225743863e-02,
    6.483521045730e-02, 6.600338559950e-02, 6.718687114598e-02, 6.838575384316e-02,
    6.960011886737e-02, 7.083004978936e-02, 7.207562853897e-02, 7.333693537017e-02,
    7.461404882626e-02, 7.590704570546e-02, 7.721600102673e-02, 7.854098799599e-02,
    7.988207797262e-02, 8.123934043634e-02, 8.261284295449e-02, 8.400265114961e-02,
    8.540882866757e-02, 8.683143714597e-02, 8.827053618305e-02, 8.972618330709e-02,
    9.119843394617e-02, 9.268734139849e-02, 9.419295680317e-02, 9.571532911156e-02,
    9.725450505902e-02, 9.881052913737e-02, 1.003834435677e-01, 1.019732882740e-01,
    1.035801008570e-01, 1.052039165692e-01, 1.068447682896e-01, 1.085026865001e-01,
    1.101776992616e-01, 1.118698321917e-01, 1.135791084418e-01, 1.153055486761e-01,
    1.170491710505e-01, 1.188099911927e-01, 1.205880221825e-01, 1.223832745331e-01,
    1.241957561733e-01, 1.260254724297e-01, 1.278724260109e-01, 1.297366169910e-01,
    1.316180427949e-01, 1.335166981841e-01, 1.354325752428e-01, 1.373656633657e-01,
    1.393159492457e-01, 1.412834168628e-01, 1.432680474741e-01, 1.452698196037e-01,
    1.472887090345e-01, 1.493246888002e-01, 1.513777291781e-01, 1.534477976830e-01,
    1.555348590616e-01, 1.576388752884e-01, 1.597598055614e-01, 1.618976062998e-01,
    1.640522311415e-01, 1.662236309423e-01, 1.684117537755e-01, 1.706165449322e-01,
    1.728379469230e-01, 1.750758994802e-01, 1.773303395607e-01, 1.796012013501e-01,
    1.818884162679e-01, 1.841919129723e-01, 1.865116173677e-01, 1.888474526114e-01,
    1.911993391220e-01, 1.935671945888e-01, 1.959509339813e-01, 1.983504695602e-01,
    2.007657108890e-01, 2.031965648463e-01, 2.056429356393e-01, 2.081047248175e-01,
    2.105818312881e-01, 2.130741513315e-01, 2.155815786177e-01, 2.181040042238e-01,
    2.206413166522e-01, 2.231934018493e-01, 2.257601432253e-01, 2.283414216749e-01,
    2.309371155981e-01, 2.335471009224e-01, 2.361712511258e-01, 2.388094372598e-01,
    2.414615279741e-01, 2.441273895411e-01, 2.468068858817e-01, 2.494998785918e-01,
    2.522062269691e-01, 2.549257880410e-01, 2.576584165926e-01, 2.604039651965e-01,
    2.631622842414e-01, 2.659332219633e-01, 2.687166244762e-01, 2.715123358032e-01,
    2.743201979092e-01, 2.771400507333e-01, 2.799717322221e-01, 2.828150783637e-01,
    2.856699232218e-01, 2.885360989708e-01, 2.914134359312e-01, 2.943017626054e-01,
    2.972009057144e-01, 3.001106902341e-01, 3.030309394332e-01, 3.059614749108e-01,
    3.089021166345e-01, 3.118526829790e-01, 3.148129907652e-01, 3.177828552996e-01,
    3.207620904141e-01, 3.237505085059e-01, 3.267479205781e-01, 3.297541362803e-01,
    3.327689639502e-01, 3.357922106541e-01, 3.388236822292e-01, 3.418631833254e-01,
    3.449105174469e-01, 3.479654869954e-01, 3.510278933118e-01, 3.540975367197e-01,
    3.571742165677e-01, 3.602577312730e-01, 3.633478783643e-01, 3.664444545252e-01,
    3.695472556381e-01, 3.726560768269e-01, 3.757707125018e-01, 3.788909564020e-01,
    3.820166016399e-01, 3.851474407453e-01, 3.882832657085e-01, 3.914238680245e-01,
    3.945690387369e-01, 3.977185684817e-01, 4.008722475306e-01, 4.040298658356e-01,
    4.071912130715e-01, 4.103560786805e-01, 4.135242519148e-01, 4.166955218805e-01,
    4.198696775805e-01, 4.230465079576e-01, 4.262258019376e-01, 4.294073484715e-01,
    4.325909365786e-01, 4.357763553886e-01, 4.389633941835e-01, 4.421518424400e-01,
    4.453414898705e-01, 4.485321264652e-01, 4.517235425326e-01, 4.549155287408e-01,
    4.581078761577e-01, 4.613003762919e-01, 4.644928211316e-01, 4.676850031854e-01,
    4.708767155207e-01, 4.740677518029e-01, 4.772579063344e-01, 4.804469740921e-01,
    4.836347507658e-01, 4.868210327953e-01, 4.900056174076e-01, 4.931883026535e-01,
    4.963688874438e-01, 4.995471715849e-01, 5.027229558147e-01, 5.058960418368e-01,
    5.090662323552e-01, 5.122333311087e-01, 5.153971429037e-01, 5.185574736476e-01,
    5.217141303814e-01, 5.248669213116e-01, 5.280156558418e-01, 5.311601446036e-01,
    5.343001994874e-01, 5.374356336721e-01, 5.405662616548e-01, 5.436918992796e-01,
    5.468123637661e-01, 5.499274737372e-01, 5.530370492465e-01, 5.561409118048e-01,
    5.592388844068e-01, 5.623307915563e-01, 5.654164592913e-01, 5.684957152090e-01,
    5.715683884891e-01, 5.746343099175e-01, 5.776933119092e-01, 5.807452285303e-01,
    5.837898955197e-01, 5.868271503102e-01, 5.898568320489e-01, 5.928787816170e-01,
    5.958928416493e-01, 5.988988565528e-01, 6.018966725248e-01, 6.048861375703e-01,
    6.078671015191e-01, 6.108394160421e-01, 6.138029346670e-01, 6.167575127935e-01,
    6.197030077078e-01, 6.226392785966e-01, 6.255661865606e-01, 6.284835946272e-01,
    6.313913677626e-01, 6.342893728836e-01, 6.371774788686e-01, 6.400555565681e-01,
    6.429234788145e-01, 6.457811204315e-01, 6.486283582429e-01, 6.514650710805e-01,
    6.542911397921e-01, 6.571064472482e-01, 6.599108783487e-01, 6.627043200286e-01,
    6.654866612637e-01, 6.682577930753e-01, 6.710176085341e-01, 6.737660027646e-01,
    6.765028729477e-01, 6.792281183240e-01, 6.819416401951e-01, 6.846433419261e-01,
    6.873331289462e-01, 6.900109087492e-01, 6.926765908941e-01, 6.953300870042e-01,
    6.979713107662e-01, 7.006001779293e-01, 7.032166063026e-01, 7.058205157534e-01,
    7.084118282038e-01, 7.109904676278e-01, 7.135563600473e-01, 7.161094335280e-01,
    7.186496181745e-01, 7.211768461256e-01, 7.236910515484e-01, 7.261921706323e-01,
    7.286801415829e-01, 7.311549046149e-01, 7.336164019450e-01, 7.360645777843e-01,
    7.384993783301e-01, 7.409207517577e-01, 7.433286482113e-01, 7.457230197954e-01,
    7.481038205646e-01, 7.504710065141e-01, 7.528245355692e-01, 7.551643675752e-01,
    7.574904642857e-01, 7.598027893520e-01, 7.621013083113e-01, 7.643859885745e-01,
    7.666567994144e-01, 7.689137119530e-01, 7.711566991486e-01, 7.733857357829e-01,
    7.756007984476e-01, 7.778018655304e-01, 7.799889172015e-01, 7.821619353992e-01,
    7.843209038155e-01, 7.864658078817e-01, 7.885966347529e-01, 7.907133732934e-01,
    7.928160140610e-01, 7.949045492919e-01, 7.969789728843e-01, 7.990392803827e-01,
    8.010854689619e-01, 8.031175374104e-01, 8.051354861140e-01, 8.071393170389e-01,
    8.091290337151e-01, 8.111046412192e-01, 8.130661461572e-01, 8.150135566472e-01,
    8.169468823021e-01, 8.188661342116e-01, 8.207713249250e-01, 8.226624684329e-01,
    8.245395801498e-01, 8.264026768953e-01, 8.282517768766e-01, 8.300868996701e-01,
    8.319080662029e-01, 8.337152987346e-01, 8.355086208387e-01, 8.372880573842e-01,
    8.390536345167e-01, 8.408053796404e-01, 8.425433213985e-01, 8.442674896553e-01,
    8.459779154770e-01, 8.476746311128e-01, 8.493576699765e-01, 8.510270666272e-01,
    8.526828567507e-01, 8.543250771405e-01, 8.559537656793e-01, 8.575689613194e-01,
    8.591707040646e-01, 8.607590349509e-01, 8.623339960277e-01, 8.638956303392e-01,
    8.654439819057e-01, 8.669790957043e-01, 8.685010176508e-01, 8.700097945806e-01,
    8.715054742306e-01, 8.729881052200e-01, 8.744577370321e-01, 8.759144199961e-01,
    8.773582052681e-01, 8.787891448133e-01, 8.802072913876e-01, 8.816126985192e-01,
    8.830054204909e-01, 8.843855123217e-01, 8.857530297492e-01, 8.871080292113e-01,
    8.884505678291e-01, 8.897807033888e-01, 8.910984943241e-01, 8.924039996991e-01,
    8.936972791908e-01, 8.949783930716e-01, 8.962474021927e-01, 8.975043679666e-01,
    8.987493523507e-01, 8.999824178301e-01, 9.012036274012e-01, 9.024130445551e-01,
    9.036107332614e-01, 9.047967579515e-01, 9.059711835032e-01, 9.071340752240e-01,
    9.082854988356e-01, 9.094255204581e-01, 9.105542065947e-01, 9.116716241159e-01,
    9.127778402443e-01, 9.138729225397e-01, 9.149569388839e-01, 9.160299574660e-01,
    9.170920467677e-01, 9.181432755485e-01, 9.191837128319e-01, 9.202134278906e-01,
    9.212324902327e-01, 9.222409695881e-01, 9.232389358940e-01, 9.242264592821e-01,
    9.252036100647e-01, 9.261704587218e-01, 9.271270758875e-01, 9.280735323375e-01,
    9.290098989763e-01, 9.299362468245e-01, 9.308526470062e-01, 9.317591707370e-01,
    9.326558893119e-01, 9.335428740932e-01, 9.344201964986e-01, 9.352879279901e-01,
    9.361461400621e-01, 9.369949042303e-01, 9.378342920206e-01, 9.386643749582e-01,
    9.394852245568e-01, 9.402969123080e-01, 9.410995096710e-01, 9.418930880620e-01,
    9.426777188445e-01, 9.434534733192e-01, 9.442204227142e-01, 9.449786381756e-01,
    9.457281907579e-01, 9.464691514147e-01, 9.472015909897e-01, 9.479255802080e-01,
    9.486411896668e-01, 9.493484898273e-01, 9.500475510060e-01, 9.507384433665e-01,
    9.514212369115e-01, 9.520960014746e-01, 9.527628067127e-01, 9.534217220982e-01,
    9.540728169118e-01, 9.547161602349e-01, 9.553518209427e-01, 9.559798676969e-01,
    9.566003689391e-01, 9.572133928840e-01, 9.578190075129e-01, 9.584172805671e-01,
    9.590082795420e-01, 9.595920716810e-01, 9.601687239691e-01, 9.607383031276e-01,
    9.613008756081e-01, 9.618565075875e-01, 9.624052649619e-01, 9.629472133420e-01,
    9.634824180478e-01, 9.640109441037e-01, 9.645328562335e-01, 9.650482188562e-01,
    9.655570960809e-01, 9.660595517028e-01, 9.665556491990e-01, 9.670454517241e-01,
    9.675290221063e-01, 9.680064228436e-01, 9.684777161001e-01, 9.689429637022e-01,
    9.694022271354e-01, 9.698555675407e-01, 9.703030457113e-01, 9.707447220900e-01,
    9.711806567655e-01, 9.716109094700e-01, 9.720355395763e-01, 9.724546060950e-01,
    9.728681676724e-01, 9.732762825874e-01, 9.736790087499e-01, 9.740764036983e-01,
    9.744685245971e-01, 9.748554282354e-01, 9.752371710248e-01, 9.756138089977e-01,
    9.759853978054e-01, 9.763519927167e-01, 9.767136486167e-01, 9.770704200046e-01,
    9.774223609935e-01, 9.777695253082e-01, 9.781119662849e-01, 9.784497368695e-01,
    9.787828896174e-01, 9.791114766921e-01, 9.794355498646e-01, 9.797551605130e-01,
    9.800703596216e-01, 9.803811977805e-01, 9.806877251855e-01, 9.809899916373e-01,
    9.812880465414e-01, 9.815819389084e-01, 9.818717173530e-01, 9.821574300948e-01,
    9.824391249580e-01, 9.827168493715e-01, 9.829906503692e-01, 9.832605745902e-01,
    9.835266682790e-01, 9.837889772864e-01, 9.840475470692e-01, 9.843024226914e-01,
    9.845536488244e-01, 9.848012697478e-01, 9.850453293500e-01, 9.852858711291e-01,
    9.855229381936e-01, 9.857565732633e-01, 9.859868186702e-01, 9.862137163598e-01,
    9.864373078915e-01, 9.866576344404e-01, 9.868747367977e-01, 9.870886553727e-01,
    9.872994301932e-01, 9.875071009074e-01, 9.877117067851e-01, 9.879132867186e-01,
    9.881118792247e-01, 9.883075224459e-01, 9.885002541518e-01, 9.886901117408e-01,
    9.888771322416e-01, 9.890613523146e-01, 9.892428082538e-01, 9.894215359886e-01,
    9.895975710848e-01, 9.897709487473e-01, 9.899417038212e-01, 9.901098707936e-01,
    9.902754837959e-01, 9.904385766050e-01, 9.905991826460e-01, 9.907573349933e-01,
    9.909130663730e-01, 9.910664091647e-01, 9.912173954035e-01, 9.913660567821e-01,
    9.915124246528e-01, 9.916565300293e-01, 9.917984035891e-01, 9.919380756755e-01,
    9.920755762995e-01, 9.922109351422e-01, 9.923441815569e-01, 9.924753445710e-01,
    9.926044528883e-01, 9.927315348916e-01, 9.928566186441e-01, 9.929797318922e-01,
    9.931009020678e-01, 9.932201562899e-01, 9.933375213675e-01, 9.934530238016e-01,
    9.935666897874e-01, 9.936785452167e-01, 9.937886156799e-01, 9.938969264689e-01,
    9.940035025788e-01, 9.941083687104e-01, 9.942115492725e-01, 9.943130683843e-01,
    9.944129498777e-01, 9.945112172994e-01, 9.946078939136e-01, 9.947030027040e-01,
    9.947965663762e-01, 9.948886073603e-01, 9.949791478127e-01, 9.950682096189e-01,
    9.951558143957e-01, 9.952419834935e-01, 9.953267379985e-01, 9.954100987353e-01,
    9.954920862690e-01, 9.955727209077e-01, 9.956520227045e-01, 9.957300114604e-01,
    9.958067067258e-01, 9.958821278038e-01, 9.959562937514e-01, 9.960292233829e-01,
    9.961009352712e-01, 9.961714477510e-01, 9.962407789202e-01, 9.963089466428e-01,
    9.963759685512e-01, 9.964418620478e-01, 9.965066443081e-01, 9.965703322822e-01,
    9.966329426977e-01, 9.966944920615e-01, 9.967549966620e-01, 9.968144725716e-01,
    9.968729356488e-01, 9.969304015401e-01, 9.969868856828e-01, 9.970424033066e-01,
    9.970969694359e-01, 9.971505988922e-01, 9.972033062961e-01, 9.972551060692e-01,
    9.973060124366e-01, 9.973560394289e-01, 9.974052008841e-01, 9.974535104499e-01,
    9.975009815858e-01, 9.975476275650e-01, 9.975934614764e-01, 9.976384962270e-01,
    9.976827445436e-01, 9.977262189749e-01, 9.977689318936e-01, 9.978108954982e-01,
    9.978521218151e-01, 9.978926227008e-01, 9.979324098432e-01, 9.979714947642e-01,
    9.980098888213e-01, 9.980476032097e-01, 9.980846489638e-01, 9.981210369595e-01,
    9.981567779161e-01, 9.981918823977e-01, 9.982263608155e-01, 9.982602234294e-01,
    9.982934803499e-01, 9.983261415397e-01, 9.983582168160e-01, 9.983897158515e-01,
    9.984206481769e-01, 9.984510231822e-01, 9.984808501186e-01, 9.985101381002e-01,
    9.985388961054e-01, 9.985671329793e-01, 9.985948574345e-01, 9.986220780534e-01,
    9.986488032897e-01, 9.986750414697e-01, 9.987008007944e-01, 9.987260893408e-01,
    9.987509150633e-01, 9.987752857960e-01, 9.987992092533e-01, 9.988226930323e-01,
    9.988457446136e-01, 9.988683713634e-01, 9.988905805346e-01, 9.989123792686e-01,
    9.989337745964e-01, 9.989547734405e-01, 9.989753826159e-01, 9.989956088318e-01,
    9.990154586929e-01, 9.990349387009e-01, 9.990540552558e-01, 9.990728146573e-01,
    9.990912231061e-01, 9.991092867054e-01, 9.991270114620e-01, 9.991444032878e-01,
    9.991614680011e-01, 9.991782113275e-01, 9.991946389020e-01, 9.992107562694e-01,
    9.992265688859e-01, 9.992420821206e-01, 9.992573012562e-01, 9.992722314905e-01,
    9.992868779376e-01, 9.993012456291e-01, 9.993153395151e-01, 9.993291644654e-01,
    9.993427252709e-01, 9.993560266443e-01, 9.993690732216e-01, 9.993818695628e-01,
    9.993944201536e-01, 9.994067294057e-01, 9.994188016586e-01, 9.994306411801e-01,
    9.994422521677e-01, 9.994536387493e-01, 9.994648049845e-01, 9.994757548657e-01,
    9.994864923186e-01, 9.994970212035e-01, 9.995073453165e-01, 9.995174683899e-01,
    9.995273940936e-01, 9.995371260358e-01, 9.995466677641e-01, 9.995560227661e-01,
    9.995651944707e-01, 9.995741862486e-01, 9.995830014137e-01, 9.995916432231e-01,
    9.996001148791e-01, 9.996084195288e-01, 9.996165602660e-01, 9.996245401315e-01,
    9.996323621138e-01, 9.996400291503e-01, 9.996475441277e-01, 9.996549098831e-01,
    9.996621292046e-01, 9.996692048321e-01, 9.996761394580e-01, 9.996829357279e-01,
    9.996895962415e-01, 9.996961235534e-01, 9.997025201733e-01, 9.997087885674e-01,
    9.997149311583e-01, 9.997209503265e-01, 9.997268484106e-01, 9.997326277079e-01,
    9.997382904754e-01, 9.997438389301e-01, 9.997492752499e-01, 9.997546015741e-01,
    9.997598200040e-01, 9.997649326036e-01, 9.997699414001e-01, 9.997748483846e-01,
    9.997796555126e-01, 9.997843647046e-01, 9.997889778467e-01, 9.997934967912e-01,
    9.997979233571e-01, 9.998022593305e-01, 9.998065064653e-01, 9.998106664839e-01,
    9.998147410774e-01, 9.998187319063e-01, 9.998226406007e-01, 9.998264687615e-01,
    9.998302179602e-01, 9.998338897395e-01, 9.998374856142e-01, 9.998410070711e-01,
    9.998444555701e-01, 9.998478325439e-01, 9.998511393993e-01, 9.998543775167e-01,
    9.998575482514e-01, 9.998606529336e-01, 9.998636928689e-01, 9.998666693386e-01,
    9.998695836003e-01, 9.998724368882e-01, 9.998752304137e-01, 9.998779653654e-01,
    9.998806429097e-01, 9.998832641915e-01, 9.998858303339e-01, 9.998883424391e-01,
    9.998908015886e-01, 9.998932088437e-01, 9.998955652454e-01, 9.998978718153e-01,
    9.999001295556e-01, 9.999023394496e-01, 9.999045024620e-01, 9.999066195390e-01,
    9.999086916092e-01, 9.999107195831e-01, 9.999127043542e-01, 9.999146467986e-01,
    9.999165477761e-01, 9.999184081297e-01, 9.999202286863e-01, 9.999220102570e-01,
    9.999237536374e-01, 9.999254596076e-01, 9.999271289327e-01, 9.999287623632e-01,
    9.999303606350e-01, 9.999319244696e-01, 9.999334545747e-01, 9.999349516443e-01,
    9.999364163588e-01, 9.999378493854e-01, 9.999392513783e-01, 9.999406229790e-01,
    9.999419648162e-01, 9.999432775067e-01, 9.999445616548e-01, 9.999458178534e-01,
    9.999470466833e-01, 9.999482487143e-01, 9.999494245045e-01, 9.999505746014e-01,
    9.999516995416e-01, 9.999527998509e-01, 9.999538760448e-01, 9.999549286286e-01,
    9.999559580977e-01, 9.999569649374e-01, 9.999579496234e-01, 9.999589126220e-01,
    9.999598543902e-01, 9.999607753758e-01, 9.999616760176e-01, 9.999625567458e-01,
    9.999634179818e-01, 9.999642601385e-01, 9.999650836206e-01, 9.999658888246e-01,
    9.999666761391e-01, 9.999674459447e-01, 9.999681986144e-01, 9.999689345137e-01,
    9.999696540006e-01, 9.999703574258e-01, 9.999710451329e-01, 9.999717174587e-01,
    9.999723747329e-01, 9.999730172785e-01, 9.999736454121e-01, 9.999742594435e-01,
    9.999748596765e-01, 9.999754464086e-01, 9.999760199309e-01, 9.999765805289e-01,
    9.999771284820e-01, 9.999776640639e-01, 9.999781875427e-01, 9.999786991809e-01,
    9.999791992357e-01, 9.999796879587e-01, 9.999801655967e-01, 9.999806323910e-01,
    9.999810885781e-01, 9.999815343895e-01, 9.999819700519e-01, 9.999823957872e-01,
    9.999828118129e-01, 9.999832183417e-01, 9.999836155820e-01, 9.999840037378e-01,
    9.999843830088e-01, 9.999847535904e-01, 9.999851156742e-01, 9.999854694475e-01,
    9.999858150937e-01, 9.999861527924e-01, 9.999864827194e-01, 9.999868050468e-01,
    9.999871199429e-01, 9.999874275726e-01, 9.999877280974e-01, 9.999880216750e-01,
    9.999883084601e-01, 9.999885886040e-01, 9.999888622548e-01, 9.999891295572e-01,
    9.999893906532e-01, 9.999896456816e-01, 9.999898947780e-01, 9.999901380755e-01,
    9.999903757040e-01, 9.999906077909e-01, 9.999908344606e-01, 9.999910558350e-01,
    9.999912720333e-01, 9.999914831721e-01, 9.999916893657e-01, 9.999918907255e-01,
    9.999920873609e-01, 9.999922793787e-01, 9.999924668835e-01, 9.999926499776e-01,
    9.999928287611e-01, 9.999930033318e-01, 9.999931737855e-01, 9.999933402158e-01,
    9.999935027145e-01, 9.999936613710e-01, 9.999938162731e-01, 9.999939675065e-01,
    9.999941151551e-01, 9.999942593008e-01, 9.999944000240e-01, 9.999945374030e-01,
    9.999946715146e-01, 9.999948024339e-01, 9.999949302342e-01, 9.999950549872e-01,
    9.999951767632e-01, 9.999952956308e-01, 9.999954116571e-01, 9.999955249077e-01,
    9.999956354467e-01, 9.999957433369e-01, 9.999958486396e-01, 9.999959514148e-01,
    9.999960517212e-01, 9.999961496160e-01, 9.999962451553e-01, 9.999963383940e-01,
    9.999964293855e-01, 9.999965181822e-01, 9.999966048354e-01, 9.999966893950e-01,
    9.999967719100e-01, 9.999968524283e-01, 9.999969309965e-01, 9.999970076603e-01,
    9.999970824645e-01, 9.999971554525e-01, 9.999972266673e-01, 9.999972961503e-01,
    9.999973639424e-01, 9.999974300834e-01, 9.999974946122e-01, 9.999975575669e-01,
    9.999976189846e-01, 9.999976789016e-01, 9.999977373536e-01, 9.999977943751e-01,
    9.999978500001e-01, 9.999979042617e-01, 9.999979571922e-01, 9.999980088233e-01,
    9.999980591859e-01, 9.999981083102e-01, 9.999981562257e-01, 9.999982029612e-01,
    9.999982485448e-01, 9.999982930041e-01, 9.999983363660e-01, 9.999983786567e-01,
    9.999984199018e-01, 9.999984601264e-01, 9.999984993551e-01, 9.999985376116e-01,
    9.999985749194e-01, 9.999986113013e-01, 9.999986467796e-01, 9.999986813759e-01,
    9.999987151117e-01, 9.999987480076e-01, 9.999987800839e-01, 9.999988113605e-01,
    9.999988418567e-01, 9.999988715914e-01, 9.999989005830e-01, 9.999989288495e-01,
    9.999989564086e-01, 9.999989832774e-01, 9.999990094727e-01, 9.999990350110e-01,
    9.999990599081e-01, 9.999990841797e-01, 9.999991078411e-01, 9.999991309072e-01,
    9.999991533925e-01, 9.999991753113e-01, 9.999991966773e-01, 9.999992175041e-01,
    9.999992378050e-01, 9.999992575927e-01, 9.999992768801e-01, 9.999992956792e-01,
    9.999993140022e-01, 9.999993318607e-01, 9.999993492662e-01, 9.999993662298e-01,
    9.999993827625e-01, 9.999993988749e-01, 9.999994145774e-01, 9.999994298801e-01,
    9.999994447929e-01, 9.999994593254e-01, 9.999994734871e-01, 9.999994872873e-01,
    9.999995007347e-01, 9.999995138383e-01, 9.999995266066e-01, 9.999995390479e-01,
    9.999995511704e-01, 9.999995629819e-01, 9.999995744904e-01, 9.999995857032e-01,
    9.999995966279e-01, 9.999996072716e-01, 9.999996176414e-01, 9.999996277440e-01,
    9.999996375863e-01, 9.999996471747e-01, 9.999996565156e-01, 9.999996656152e-01,
    9.999996744796e-01, 9.999996831147e-01, 9.999996915263e-01, 9.999996997200e-01,
    9.999997077013e-01, 9.999997154756e-01, 9.999997230480e-01, 9.999997304238e-01,
    9.999997376078e-01, 9.999997446049e-01, 9.999997514199e-01, 9.999997580574e-01,
    9.999997645218e-01, 9.999997708176e-01, 9.999997769491e-01, 9.999997829204e-01,
    9.999997887355e-01, 9.999997943986e-01, 9.999997999135e-01, 9.999998052838e-01,
    9.999998105134e-01, 9.999998156058e-01, 9.999998205646e-01, 9.999998253931e-01,
    9.999998300947e-01, 9.999998346726e-01, 9.999998391300e-01, 9.999998434700e-01,
    9.999998476956e-01, 9.999998518097e-01, 9.999998558153e-01, 9.999998597151e-01,
    9.999998635118e-01, 9.999998672081e-01, 9.999998708066e-01, 9.999998743097e-01,
    9.999998777201e-01, 9.999998810400e-01, 9.999998842718e-01, 9.999998874177e-01,
    9.999998904801e-01, 9.999998934611e-01, 9.999998963627e-01, 9.999998991871e-01,
    9.999999019362e-01, 9.999999046120e-01, 9.999999072164e-01, 9.999999097513e-01,
    9.999999122185e-01, 9.999999146197e-01, 9.999999169567e-01, 9.999999192312e-01,
    9.999999214447e-01, 9.999999235989e-01, 9.999999256953e-01, 9.999999277354e-01,
    9.999999297207e-01, 9.999999316527e-01, 9.999999335328e-01, 9.999999353622e-01,
    9.999999371424e-01, 9.999999388746e-01, 9.999999405601e-01, 9.999999422001e-01,
    9.999999437959e-01, 9.999999453485e-01, 9.999999468592e-01, 9.999999483290e-01,
    9.999999497590e-01, 9.999999511503e-01, 9.999999525039e-01, 9.999999538208e-01,
    9.999999551019e-01, 9.999999563483e-01, 9.999999575608e-01, 9.999999587403e-01,
    9.999999598877e-01, 9.999999610039e-01, 9.999999620897e-01, 9.999999631458e-01,
    9.999999641732e-01, 9.999999651725e-01, 9.999999661445e-01, 9.999999670900e-01,
    9.999999680096e-01, 9.999999689041e-01, 9.999999697740e-01, 9.999999706201e-01,
    9.999999714431e-01, 9.999999722434e-01, 9.999999730218e-01, 9.999999737788e-01,
    9.999999745150e-01, 9.999999752309e-01, 9.999999759271e-01, 9.999999766042e-01,
    9.999999772626e-01, 9.999999779029e-01, 9.999999785255e-01, 9.999999791309e-01,
    9.999999797196e-01, 9.999999802920e-01, 9.999999808486e-01, 9.999999813897e-01,
    9.999999819159e-01, 9.999999824275e-01, 9.999999829250e-01, 9.999999834086e-01,
    9.999999838788e-01, 9.999999843359e-01, 9.999999847804e-01, 9.999999852124e-01,
    9.999999856325e-01, 9.999999860408e-01, 9.999999864378e-01, 9.999999868237e-01,
    9.999999871989e-01, 9.999999875635e-01, 9.999999879180e-01, 9.999999882626e-01,
    9.999999885975e-01, 9.999999889231e-01, 9.999999892396e-01, 9.999999895472e-01,
    9.999999898461e-01, 9.999999901367e-01, 9.999999904191e-01, 9.999999906936e-01,
    9.999999909604e-01, 9.999999912197e-01, 9.999999914717e-01, 9.999999917166e-01,
    9.999999919546e-01,
};

}  // namespace rmtlab::detail
