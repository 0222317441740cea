// Generated by tests/data/generate_reference.py. Do not edit.
#pragma once

#include <limits>

#include "polariton/units.hpp"

namespace reference {

using polariton::cplx;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct WofzRow { cplx z; cplx w; };
inline const WofzRow kWofz[] = {
    {{0.5, 0.3}, {0.6148515391469911, 0.303124349647351}},
    {{3.0, 0.01}, {0.0009088307067415815, 0.20114646254019664}},
    {{-2.0, 1.0}, {0.14023958136627798, -0.22221344017989925}},
    {{10.0, 2.0}, {0.011001556705733514, 0.054471817098656505}},
    {{0.1, 12.0}, {0.04685102254876975, 0.0003877599790056919}},
    {{-20.0, 0.5}, {0.0007074522198847296, -0.028227120903787737}},
    {{0.001, 0.001}, {0.9988716223354106, 0.001126380671599899}},
    {{7.9, 0.1}, {0.000926498028641041, 0.07199086697264716}},
    {{8.1, 0.1}, {0.0008802238426884045, 0.07018534092764289}},
    {{0.0, 0.0}, {1.0, 0.0}},
    {{5.5, 5.5}, {0.05170292913394613, 0.050856026018576944}},
    {{-0.7, 3.0}, {0.17150191964184766, -0.03657693286128298}},
    {{0.0, 1e-08}, {0.9999999887162083, 0.0}},
    {{30.0, 1e-06}, {6.279250241310927e-10, 0.018816784868660702}},
};
struct BesselRow { cplx z; cplx i0; cplx i1; cplx k0; cplx k1; };
inline const BesselRow kBessel[] = {
    {{0.01, 0.0}, {0.9900745851497075, 0.0}, {0.004950311047118276, 0.0}, {4.768694028544462, 0.0}, {100.97864845824004, 0.0}},
    {{0.5, 0.5}, {0.5665342446963592, -0.22314431319632907}, {0.2017263147800892, 0.07315263549200524}, {1.2740700057330194, -0.4305244337391575}, {1.692891285651109, -1.1095435340610966}},
    {{3.0, -2.0}, {0.20501840754977674, 0.06812058999421473}, {0.18799604512902068, 0.04153534153762553}, {0.6177905548172046, 0.17643402180420353}, {0.6743883645509945, 0.23938036167479998}},
    {{10.0, 10.0}, {0.09835117352581829, -0.04149847619703506}, {0.09696066263124184, -0.03793927594551771}, {0.30674077521254745, -0.12492189726448621}, {0.31135222973677806, -0.13552785978123655}},
    {{29.0, 5.0}, {0.07358118097173927, -0.0063521405236167255}, {0.07235748650264145, -0.006028726498386885}, {0.2292622780469008, -0.01945790197223918}, {0.23301544505714586, -0.020432408590461384}},
    {{31.0, -5.0}, {0.07124624960608752, 0.005755732859645327}, {0.07013224573899278, 0.0054809115376347}, {0.2220960728335719, 0.01765855052718684}, {0.22551737400441316, 0.018488740517404817}},
    {{60.0, 40.0}, {0.04501561252589675, -0.013677450857130414}, {0.044808407613398965, -0.013424266181096628}, {0.14109551882590607, -0.042573904914955}, {0.14174540377319056, -0.04335871715731145}},
    {{200.0, 1.0}, {0.02822689465816826, -7.065544750595675e-05}, {0.028156241424164695, -7.012487531495333e-05}, {0.08856663009610201, -0.00022113979896991776}, {0.0887877630017331, -0.00022279625523813942}},
    {{0.02, -0.02}, {0.980006550839946, 0.01940666583687886}, {0.009995092633380548, -0.009604999308752336}, {3.771163915949219, 0.7250358126495094}, {25.960035531773226, 25.02552403450489}},
    {{1.5, 0.0}, {0.36743360905415834, 0.0}, {0.21903938742092569, 0.0}, {0.9582100532948965, 0.0}, {1.243165873552553, 0.0}},
    {{7.0, 6.9}, {0.1183283133879157, -0.0498505025367796}, {0.11590191239912795, -0.04365984121291557}, {0.3678038269801888, -0.14723535034991778}, {0.37601393282921536, -0.16524852334920503}},
    {{45.0, -44.0}, {0.04660627848335964, 0.019075298151414306}, {0.04644807637901709, 0.01870659048605589}, {0.14616813799662629, 0.05935112930490127}, {0.14667048275843944, 0.06049548686810376}},
};
struct NodeRow { int index; double x; double w; };
inline const NodeRow kHermite201[] = {
    {0, -19.38970039958089, 3.1562517583903493e-164},
    {10, -15.991350486412049, 2.258615127023415e-112},
    {60, -6.36822366816802, 4.027452962586732e-19},
    {99, -0.15649522104787772, 0.15271218047550827},
    {100, 0.0, 0.15649363599087426},
    {150, 8.045575683498656, 1.3184884690186048e-29},
    {200, 19.38970039958089, 3.1562517583903493e-164},
};
struct DephasedRow { double detuning, decay, k, v_T, gamma_c; cplx value; };
inline const DephasedRow kDephased[] = {
    {0.3, 0.01, 1.0, 1.0, 1.0, {1.5042535354396547, -0.574493643049822}},
    {0.0, 0.1, 1.0, 1.0, 0.01, {1.162038435204614, 0.0}},
    {2.0, 0.05, 1.0, 1.0, 100.0, {0.01498701178907225, -0.49960034220433563}},
    {-1.5, 0.2, 0.5, 2.0, 3.0, {0.20636562442287099, 0.6489843985767696}},
    {0.02, 0.001, 1.0, 1.0, 0.001, {1.2523970707335537, -0.019984801242841736}},
};
struct RamseyRow { int dim; bool exact_wall; double Delta, a, b, D, gamma0, gammaP; cplx R; };
inline const RamseyRow kRamsey[] = {
    {1, false, 0.0, 0.0001, kInf, 0.001, 100.0, 0.0, {0.9690334810799243, 0.0}},
    {1, false, 3000.0, 0.0001, kInf, 0.001, 628.3, 12566.0, {0.5554851204498626, -0.10629764516801553}},
    {1, false, -8000.0, 0.0001, 0.0003, 0.001, 628.3, 12566.0, {0.7480383777961948, -0.08830591167622706}},
    {1, false, 500.0, 0.0002, 0.0002, 0.0005, 50.0, 3000.0, {0.9257305579676259, 0.011068648794888761}},
    {1, false, 20000.0, 0.0001, 0.00015, 0.001, 10.0, 1000.0, {0.9630505712487055, 0.1585534669209181}},
    {2, false, 0.0, 0.0001, kInf, 0.001, 100.0, 0.0, {0.9980895449678291, 0.0}},
    {2, true, 0.0, 0.0001, kInf, 0.001, 100.0, 0.0, {0.9980895449678291, 0.0}},
    {2, false, 3000.0, 0.0001, kInf, 0.001, 628.3, 12566.0, {0.8677722888728754, -0.005718890618654511}},
    {2, true, 3000.0, 0.0001, kInf, 0.001, 628.3, 12566.0, {0.8677722888728754, -0.005718890618654511}},
    {2, false, -8000.0, 0.0001, 0.0003, 0.001, 628.3, 12566.0, {0.9157574740797019, -0.03980565508554626}},
    {2, true, -8000.0, 0.0001, 0.0003, 0.001, 628.3, 12566.0, {0.9148648758339917, -0.041112319153482096}},
    {2, false, 500.0, 0.0002, 0.0002, 0.0005, 50.0, 3000.0, {0.9706609519573381, 0.004617355525281997}},
    {2, true, 500.0, 0.0002, 0.0002, 0.0005, 50.0, 3000.0, {0.9706609519573381, 0.004617355525281997}},
    {2, false, 20000.0, 0.0001, 0.00015, 0.001, 10.0, 1000.0, {0.9911699560050687, 0.06403870300148867}},
    {2, true, 20000.0, 0.0001, 0.00015, 0.001, 10.0, 1000.0, {0.9917298519846818, 0.06468073491206015}},
};

}  // namespace reference
