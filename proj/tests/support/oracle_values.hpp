#pragma once

// Generated by tests/oracles/generate_values.py (mpmath, 50 digits).

#include <cstddef>
#include <cstdint>

namespace oracle_values {

struct GammaDerivativeCase { std::size_t j; std::size_t x; double value; };
inline constexpr GammaDerivativeCase gamma_derivatives[] = {
    {0, 1, 1.0},
    {1, 1, -0.57721566490153286061},
    {2, 1, 1.9781119906559451108},
    {3, 1, -5.4448744564853177341},
    {4, 1, 23.561474084025604496},
    {5, 1, -117.83940826837742425},
    {6, 1, 715.06736252731885907},
    {7, 1, -5019.8488726298549312},
    {8, 1, 40243.621573335758134},
    {0, 2, 1.0},
    {1, 2, 0.42278433509846713939},
    {2, 2, 0.82368066085287938958},
    {3, 2, 0.48946151548251759827},
    {4, 2, 1.7819762580843335597},
    {5, 2, -0.032037848249401772199},
    {6, 2, 8.0309129170543135554},
    {7, 2, -14.377334938622917714},
    {8, 2, 84.830592296918684503},
    {0, 3, 2.0},
    {1, 3, 1.8455686701969342788},
    {2, 3, 2.4929299919026930579},
    {3, 3, 3.4499650135236733653},
    {4, 3, 5.5217985780987375124},
    {5, 3, 8.845805593922864254},
    {6, 3, 15.869598744612216478},
    {7, 3, 27.46172054213435946},
    {8, 3, 54.642505084854027296},
    {0, 4, 6.0},
    {1, 4, 7.5367060105908028364},
    {2, 4, 11.169927316101947731},
    {3, 4, 17.82868501627909927},
    {4, 4, 30.365255788390905998},
    {5, 4, 54.146409672262280324},
    {6, 4, 100.68362979737383496},
    {7, 4, 193.47235283868859372},
    {8, 4, 383.62127959163695757},
    {0, 5, 24.0},
    {1, 5, 36.146824042363211345},
    {2, 5, 59.753121285589396598},
    {3, 5, 104.82452201342224027},
    {4, 5, 192.77576321868002107},
    {5, 5, 368.41191763100365129},
    {6, 5, 727.61297722306902177},
    {7, 5, 1478.6748199363712196},
    {8, 5, 3082.2639410760565801},
    {0, 6, 120.0},
    {1, 6, 204.73412021181605673},
    {2, 6, 371.05925451267340568},
    {3, 6, 703.38197392387939116},
    {4, 6, 1383.1769041470890665},
    {5, 6, 2805.9384042484183618},
    {6, 6, 5848.5363919013670166},
    {7, 6, 12486.66494024333925},
    {8, 6, 27240.718264871252657},
    {0, 7, 720.0},
    {1, 7, 1348.4047212708963404},
    {2, 7, 2635.8237674996725475},
    {3, 7, 5333.469607081296564},
    {4, 7, 11112.589320578051963},
    {5, 7, 23751.514946225955503},
    {6, 7, 51926.84877689871227},
    {7, 7, 115859.74438476960462},
    {8, 7, 263337.62911117422995},
    {0, 8, 5040.0},
    {1, 8, 10158.833048896274383},
    {2, 8, 21147.575815039500514},
    {3, 8, 45241.758552068093591},
    {4, 8, 99122.00367237155},
    {5, 8, 221823.55122647194834},
    {6, 8, 505997.03111564671891},
    {7, 8, 1174506.1521316782182},
    {8, 8, 2770241.3588563764466},
    {0, 12, 39916800.0},
    {1, 12, 97503237.74725849311},
    {2, 12, 241636267.19784724399},
    {3, 12, 606880818.0319006248},
    {4, 12, 1543245114.8898287376},
    {5, 12, 3970137297.8289124043},
    {6, 12, 10325458333.59658348},
    {7, 12, 27131700658.668846046},
    {8, 12, 71989532469.641045933},
    {0, 20, 121645100408832000.0},
    {1, 20, 361349689303140710.31},
    {2, 20, 1079634766068221955.3},
    {3, 20, 3243814669126781070.4},
    {4, 20, 9799074344219072589.2},
    {5, 20, 29756997473849214476.0},
    {6, 20, 90823491020933850672.0},
    {7, 20, 2.7857787970762550514e+20},
    {8, 20, 8.5856400820786917023e+20},
};

struct PolygammaCase { std::size_t k; std::size_t x; double value; };
inline constexpr PolygammaCase polygammas[] = {
    {0, 1, -0.57721566490153286061},
    {1, 1, 1.6449340668482264365},
    {2, 1, -2.4041138063191885708},
    {3, 1, 6.4939394022668291491},
    {4, 1, -24.886266123440878232},
    {5, 1, 122.08116743813389677},
    {6, 1, -726.01147971498443532},
    {7, 1, 5060.5498752376394705},
    {0, 2, 0.42278433509846713939},
    {1, 2, 0.64493406684822643647},
    {2, 2, -0.4041138063191885708},
    {3, 2, 0.4939394022668291491},
    {4, 2, -0.88626612344087823195},
    {5, 2, 2.0811674381338967657},
    {6, 2, -6.0114797149844353247},
    {7, 2, 20.549875237639470469},
    {0, 3, 0.92278433509846713939},
    {1, 3, 0.39493406684822643647},
    {2, 3, -0.1541138063191885708},
    {3, 3, 0.1189394022668291491},
    {4, 3, -0.13626612344087823195},
    {5, 3, 0.20616743813389676574},
    {6, 3, -0.38647971498443532465},
    {7, 3, 0.86237523763947046857},
    {0, 7, 1.8727843350984671394},
    {1, 7, 0.15354517795933754758},
    {2, 7, -0.023530472985855237466},
    {3, 7, 0.0071981985631254453923},
    {4, 7, -0.0032967715890263801009},
    {5, 7, 0.0020094931750490291166},
    {6, 7, -0.0015282790276452011974},
    {7, 7, 0.0013922719030164219344},
    {0, 30, 3.3844381326855248766},
    {1, 30, 0.033895060357739944214},
    {2, 30, -0.001148765203728599844},
    {3, 30, 0.000077860036647361290602},
    {4, 30, -7.9149413401810240419e-6},
    {5, 30, 1.0726994936161623892e-6},
    {6, 30, -1.8170925411158237384e-7},
    {7, 30, 3.6933110778710127588e-8},
};

// Exact rational values, rounded once.
struct InteriorCase { std::size_t d; std::uint64_t n; double value; };
inline constexpr InteriorCase interior_exact[] = {
    {1, 0, 0.0},
    {1, 1, 1.0},
    {1, 2, 1.0},
    {1, 3, 1.0},
    {1, 10, 1.0},
    {1, 17, 1.0},
    {1, 30, 1.0},
    {1, 45, 1.0},
    {2, 0, 0.0},
    {2, 1, 0.0},
    {2, 2, 0.5},
    {2, 3, 0.83333333333333333333},
    {2, 4, 1.0833333333333333333},
    {2, 10, 1.9289682539682539683},
    {2, 17, 2.4395525226407579349},
    {2, 30, 2.9949871309203910705},
    {2, 45, 3.394948115551322142},
    {3, 0, 0.0},
    {3, 1, 0.0},
    {3, 2, 0.0},
    {3, 3, 0.22222222222222222222},
    {3, 4, 0.51388888888888888889},
    {3, 5, 0.82722222222222222222},
    {3, 10, 2.3417180020156210632},
    {3, 17, 4.0996707291395716437},
    {3, 30, 6.5871109010599622552},
    {3, 45, 8.7536815211314962967},
    {4, 0, 0.0},
    {4, 1, 0.0},
    {4, 3, 0.0},
    {4, 4, 0.09375},
    {4, 5, 0.27675},
    {4, 6, 0.53202777777777777778},
    {4, 10, 2.0063037967612088927},
    {4, 17, 5.3130949698193508334},
    {4, 30, 11.807804907974183473},
    {4, 45, 18.900785053668886996},
    {5, 0, 0.0},
    {5, 1, 0.0},
    {5, 4, 0.0},
    {5, 5, 0.0384},
    {5, 6, 0.13780740740740740741},
    {5, 7, 0.30818937788267234331},
    {5, 10, 1.2545283308886738817},
    {5, 17, 5.5441115263642987119},
    {5, 30, 17.981648678719010682},
    {5, 45, 35.53225531784778993},
    {6, 0, 0.0},
    {6, 1, 0.0},
    {6, 5, 0.0},
    {6, 6, 0.015432098765432098765},
    {6, 7, 0.065185398206361693797},
    {6, 8, 0.16628871709379478495},
    {6, 10, 0.57388102118966576649},
    {6, 17, 4.7574646718046195937},
    {6, 30, 23.790557932213975312},
    {6, 45, 59.413520081103536372},
};

struct LargeCase { std::size_t d; std::uint64_t n; double interior; double poissonized;
                   double depoissonized; double gap_bound; };
inline constexpr LargeCase large_n[] = {
    {2, 100, 4.1873775176396202608, 4.1823858508896242286, 4.0837530861068313073, 0.20094315105337745372},
    {2, 1000, 6.4854708605503449127, 6.4849709438836699127, 6.4680507771084822161, 0.033909825663302019476},
    {2, 10000, 8.7876060360443822642, 8.7875560368777155967, 8.78517027926219712, 0.004772533622126629358},
    {2, 100000, 11.090146129863427947, 11.090141129871761281, 11.089833432342495986, 0.00061540846779230567684},
    {2, 1000000, 13.392726722865723631, 13.392726222865806965, 13.392688544770303948, 0.000075356357337194841788},
    {3, 100, 13.981736857779020893, 13.95489962168032828, 13.382083304233250543, 1.1790539354770920016},
    {3, 1000, 36.219795989178846279, 36.214811265980013187, 36.039018352465912779, 0.35278814197738877947},
    {3, 10000, 69.079247880527338507, 69.078519131236494116, 69.042786302917749631, 0.071491644505854991103},
    {3, 100000, 112.54611911875956718, 112.54602321744977106, 112.5400019921052284, 0.012042903027911925948},
    {3, 1000000, 166.61733541734466811, 166.61732352461984404, 166.61641307325107185, 0.0018209097151753168309},
    {4, 100, 40.56738204685790389, 40.495138341691883268, 38.000902067231509344, 5.1949773746981978328},
    {4, 1000, 185.44261802612008845, 185.41123353513343017, 183.98247206591759904, 2.8720640691744163252},
    {4, 10000, 510.12091609002524382, 510.11376933948784362, 509.68730109527987818, 0.85340567151314367056},
    {4, 100000, 1087.8524496614439616, 1087.8511750773202667, 1087.7563282891067241, 0.18970444261792183786},
    {4, 1000000, 1991.8720794262624911, 1991.8718800711958425, 1991.8540570782008513, 0.035646195295607960429},
    {5, 100, 105.81455440960769936, 105.76611509906659118, 96.816737576149024538, 18.886019582811431721},
    {5, 1000, 891.45235805544183634, 891.30623938036492186, 881.37761296873548698, 19.997300458854365205},
    {5, 10000, 3603.57013846688991, 3603.5133941585544447, 3599.0931790349944244, 8.8472577317397212694},
    {5, 100000, 10162.369098575272074, 10162.354945290391999, 10161.046598555115329, 2.6169052261941952454},
    {5, 1000000, 23162.444060661681983, 23162.441224406100197, 23162.134093705226868, 0.61426651542363511276},
    {6, 100, 252.78728603170418869, 253.37899250311440605, 225.61244359865419247, 59.438660818068717676},
    {6, 1000, 4075.5069993660732272, 4075.0370945475134694, 4013.3742071445711116, 124.47333222944095539},
    {6, 10000, 24586.65470962506298, 24586.273018312517359, 24544.766942692893379, 83.09764830804450921},
    {6, 100000, 92453.793421988101242, 92453.654389974935282, 92437.186550327680719, 32.939251670647807643},
    {6, 1000000, 263657.14047472612779, 263657.10413843036373, 263652.25364252540756, 9.7011003625513232451},
};

struct CoefficientCase { std::size_t d; std::size_t j; double value; };
inline constexpr CoefficientCase coefficients[] = {
    {1, 0, 1.0},
    {2, 0, 1.0},
    {2, 1, 1.5772156649015328606},
    {3, 0, 1.0},
    {3, 1, 1.1544313298030657212},
    {3, 2, 2.9781119906559451108},
    {4, 0, 1.0},
    {4, 1, 0.23164699470459858182},
    {4, 2, 4.2026889772632367506},
    {4, 3, 3.4777064705014000679},
    {5, 0, 1.0},
    {5, 1, -1.0244706737272018909},
    {5, 2, 6.0965152949203420587},
    {5, 3, 1.9983779193818198285},
    {5, 4, 6.4118925624078787157},
    {6, 0, 1.0},
    {6, 1, -2.5305883421590023636},
    {6, 2, 9.7747805003595724614},
    {6, 3, -5.5107776447035423052},
    {6, 4, 14.670930459532393239},
    {6, 5, 4.8269431211186942341},
    {7, 0, 1.0},
    {7, 1, -4.2367060105908028364},
    {7, 2, 16.198876761130161529},
    {7, 3, -23.214585879247768728},
    {7, 4, 38.017657620451720232},
    {7, 5, -9.50969664773510689},
    {7, 6, 14.866817096036731667},
    {8, 0, 1.0},
    {8, 1, -6.1094903456892699758},
    {8, 2, 26.221251144604829449},
    {8, 3, -57.731391164312847081},
    {8, 4, 101.56634895202894592},
    {8, 5, -84.632194875436250452},
    {8, 6, 70.279117824426262028},
    {8, 7, -3.0180421505579270204},
    {9, 0, 1.0},
    {9, 1, -8.1251318236448799723},
    {9, 2, 40.610609540260843047},
    {9, 3, -118.28842868070881378},
    {9, 4, 249.5618696625534293},
    {9, 5, -327.06627332236792182},
    {9, 6, 319.15525788864547567},
    {9, 7, -143.0788739727572695},
    {9, 8, 53.694334714681724621},
};

} // namespace oracle_values
