#pragma once

#include "hborbit/balance_system.hpp"
#include "hborbit/real.hpp"

// Frozen h=35 reference solution for the shortest unstable cycle of the
// classical Lorenz system, used as a regression baseline. Its period and
// Poincare-section crossing agree with the independently published values
// for this orbit (T = 1.558652210..., crossing at x3 = 27).
namespace refcycle {

inline constexpr double kPeriod = 1.558652210;
inline constexpr double kX10 = -2.147367631;
inline constexpr double kX20 = 2.078048211;
inline constexpr double kX30 = 27.0;

inline constexpr int kHarmonics = 35;

inline constexpr double kMean1 = 0.0;
inline constexpr double kMean2 = 0.0;
inline constexpr double kMean3 = 23.04210397942006;

// {c_i, s_i} for i = 1..35. Even harmonics of x1, x2 and odd harmonics of x3
// vanish for this orbit.
inline constexpr double kX1Amp[35][2] = {
    {-5.780478259196228, 8.56017654325353},
    {0, 0},
    {3.160762628380509, 2.239212141102876},
    {0, 0},
    {0.6958870387616096, -0.7979388979225431},
    {0, 0},
    {-0.1891992374027477, -0.1864921358925765},
    {0, 0},
    {-0.04770429623010056, 0.04554044367245914},
    {0, 0},
    {0.01112322884679491, 0.01209138588669679},
    {0, 0},
    {0.003061207095371694, -0.002735092350544739},
    {0, 0},
    {-6.744578887916229e-4, -7.748319471034087e-4},
    {0, 0},
    {-1.960718247379475e-4, 1.665584161919807e-4},
    {0, 0},
    {4.116738805347028e-5, 4.960493476144467e-5},
    {0, 0},
    {1.254757391175977e-5, -1.018054283421179e-5},
    {0, 0},
    {-2.518375902000733e-6, -3.173486439630506e-6},
    {0, 0},
    {-8.025338211960923e-7, 6.230623750431923e-7},
    {0, 0},
    {1.541534734542893e-7, 2.0292802821633e-7},
    {0, 0},
    {5.130649139299358e-8, -3.813725452268523e-8},
    {0, 0},
    {-9.43393531993558e-9, -1.297038481588497e-8},
    {0, 0},
    {-3.278552746800046e-9, 2.333260259021725e-9},
    {0, 0},
    {5.76957885768651e-10, 8.28626640138045e-10},
};

inline constexpr double kX2Amp[35][2] = {
    {-2.32972926505593, 10.89038310357172},
    {0, 0},
    {5.86875317198698, -1.5832552129833},
    {0, 0},
    {-0.9124249133801483, -2.200556873678218},
    {0, 0},
    {-0.7154457265566421, 0.3473932955614448},
    {0, 0},
    {0.1175186702136983, 0.2186139734768588},
    {0, 0},
    {0.06473984670858603, -0.03723215039412078},
    {0, 0},
    {-0.01127208646321726, -0.01877739524860192},
    {0, 0},
    {-0.005359671824365359, 0.003303445299126894},
    {0, 0},
    {9.453499475830811e-4, 0.001510235036151227},
    {0, 0},
    {4.211022386354685e-4, -2.657049331814368e-4},
    {0, 0},
    {-7.363528144366622e-5, -1.164013765469982e-4},
    {0, 0},
    {-3.19419300699788e-5, 2.017609175377016e-5},
    {0, 0},
    {5.47663534401654e-6, 8.710929378319451e-6},
    {0, 0},
    {2.362852034076972e-6, -1.474901091428546e-6},
    {0, 0},
    {-3.94532524722541e-7, -6.379296603810031e-7},
    {0, 0},
    {-1.715198229248314e-7, 1.049218598356554e-7},
    {0, 0},
    {2.776045093375681e-8, 4.59473450493284e-8},
    {0, 0},
    {1.22681173575872e-8, -7.31171826830086e-9},
};

inline constexpr double kX3Amp[35][2] = {
    {0, 0},
    {7.568410271550653, -9.50386584559212},
    {0, 0},
    {-3.555327211552558, -1.844710563805469},
    {0, 0},
    {-0.4741220131932616, 1.279043179069961},
    {0, 0},
    {0.4227292179138024, 0.1274574086305204},
    {0, 0},
    {0.03498415351761577, -0.1315337800809524},
    {0, 0},
    {-0.03934013541135439, -0.009645786231708874},
    {0, 0},
    {-0.002660052258813564, 0.01145537653603837},
    {0, 0},
    {0.003271688724557337, 7.33752523103949e-4},
    {0, 0},
    {2.024982256871223e-4, -9.206266886554897e-4},
    {0, 0},
    {-2.560063570343799e-4, -5.58964460662525e-5},
    {0, 0},
    {-1.542436654918173e-5, 7.050327849098175e-5},
    {0, 0},
    {1.926014222030195e-5, 4.25261452471065e-6},
    {0, 0},
    {1.170939944189529e-6, -5.225643926851625e-6},
    {0, 0},
    {-1.409525591131397e-6, -3.21879984959824e-7},
    {0, 0},
    {-8.83134288999026e-8, 3.782652721710986e-7},
    {0, 0},
    {1.010610960272394e-7, 2.418021923473667e-8},
    {0, 0},
    {6.606163280924149e-9, -2.689431432873997e-8},
};

inline hborbit::HBState<double> state() {
    hborbit::HBState<double> z;
    z.omega = 2.0 * hborbit::pi<double>() / kPeriod;
    z.x1 = hborbit::TrigPoly<double>(kHarmonics);
    z.x2 = hborbit::TrigPoly<double>(kHarmonics);
    z.x3 = hborbit::TrigPoly<double>(kHarmonics);
    z.x1.mean = kMean1;
    z.x2.mean = kMean2;
    z.x3.mean = kMean3;
    for (int i = 1; i <= kHarmonics; ++i) {
        z.x1.c(i) = kX1Amp[i - 1][0];
        z.x1.s(i) = kX1Amp[i - 1][1];
        z.x2.c(i) = kX2Amp[i - 1][0];
        z.x2.s(i) = kX2Amp[i - 1][1];
        z.x3.c(i) = kX3Amp[i - 1][0];
        z.x3.s(i) = kX3Amp[i - 1][1];
    }
    return z;
}

}  // namespace refcycle
