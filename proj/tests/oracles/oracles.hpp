// Generated by generate_oracles.py; do not edit.
#pragma once

#include <vector>

namespace oracle {

struct BesselRow { double nu, x, j, i, k; };
inline const std::vector<BesselRow> bessel = {
    {0, 0.01, 9.9997500015624956597e-1, 1.000025000156250434, 4.7212447301610949651},
    {0, 0.5, 9.3846980724081290423e-1, 1.0634833707413235193, 9.2441907122766586178e-1},
    {0, 2, 2.2389077914123566805e-1, 2.2795853023360672674, 1.1389387274953343565e-1},
    {0, 8, 1.7165080713755390609e-1, 4.2756411572180478518e+2, 1.464707052228153871e-4},
    {0, 25, 9.6266783275958116174e-2, 5.7745606064663103158e+9, 3.4641615622131143554e-12},
    {0, 60, -9.1471804089061869531e-2, 5.8940770556098011683e+24, 1.4138978405591078091e-27},
    {0.5, 0.01, 7.9787126279334219655e-2, 7.9789785894536927535e-2, 1.2408434532846930048e+1},
    {0.5, 0.5, 5.4097378993452809133e-1, 5.8799308679041632549e-1, 1.0750476034999202387},
    {0.5, 2, 5.1301613656182775167e-1, 2.0462368630890550366, 1.1993777196806144737e-1},
    {0.5, 8, 2.7909280857099206145e-1, 4.2045631400447755633e+2, 1.4864800666517282988e-4},
    {0.5, 25, -2.1120283599650445018e-2, 5.7451597483464657581e+9, 3.4811912768406951572e-12},
    {0.5, 60, -3.1397461182520413009e-2, 5.8817065760751872783e+24, 1.4168223500353694484e-27},
    {1.5, 0.01, 2.6595886066191771721e-4, 2.6596417989232310483e-4, 1.2532518878175399348e+3},
    {1.5, 0.5, 9.1701699625651302638e-2, 9.640347383401674087e-2, 3.2251428104997607162},
    {1.5, 2, 4.9129377868716234501e-1, 1.0994731886331096755, 1.7990665795209217105e-1},
    {1.5, 8, 7.59314028117070703e-2, 3.6789936938617802786e+2, 1.6722900749831943361e-4},
    {1.5, 25, -1.5901789538603657984e-1, 5.5153533584126071278e+9, 3.6204389279143229634e-12},
    {1.5, 60, 9.7581392715329241915e-2, 5.7836781331406008237e+24, 1.4404360558692922725e-27},
    {2.25, 0.01, 2.6077475988732276234e-6, 2.6077877183756672792e-6, 8.5213794739343899439e+4},
    {2.25, 0.5, 1.7005155177250759222e-2, 1.7671947711450192574e-2, 1.2220647030680879517e+1},
    {2.25, 2, 2.849057157121767019e-1, 5.2810850294500833569e-1, 3.1131271164009827644e-1},
    {2.25, 8, -1.9213351629074281365e-1, 3.0542027148079744019e+2, 1.9720021749649855315e-4},
    {2.25, 25, -5.5753132743452056099e-2, 5.2078682909797142034e+9, 3.8256075571671664995e-12},
    {2.25, 60, 6.9672410050845110039e-2, 5.648599123274939397e+24, 1.4743065303492572897e-27},
    {7.5, 0.01, 3.9362228590503652543e-22, 3.9362460133705781917e-22, 1.693659545375877313e+20},
    {7.5, 0.5, 2.1585465071766178464e-9, 2.1905244050201853493e-9, 3.0365503270558198585e+7},
    {7.5, 2, 6.3298186302374784444e-5, 8.0091727289987538452e-5, 8.0386511335290534186e+2},
    {7.5, 8, 2.7593996087033065407e-1, 1.3171037265711221523e+1, 3.4592840766297886448e-3},
    {7.5, 25, 8.8969034090624766199e-2, 1.8481988426303950624e+9, 1.0365993190478041049e-11},
    {7.5, 60, -7.373776894555138422e-2, 3.6761221648872834991e+24, 2.2494462817880239029e-27},
    {20, 0.01, 3.9198996830746452875e-65, 3.9199090161802396341e-65, 6.3776982486011351698e+62},
    {20, 0.5, 3.7272019617047144607e-31, 3.7494538480790195278e-31, 6.6655498744171556352e+28},
    {20, 2, 3.9189728050907538391e-19, 4.3105605761095483322e-19, 5.770856852700241005e+16},
    {20, 8, 2.0805829639717027777e-7, 9.5603851139965364194e-7, 2.4276285094564741253e+4},
    {20, 25, 5.199404922830323178e-2, 2.4498405422952304841e+6, 6.374402933035208743e-9},
    {20, 60, 1.0266020557876329043e-1, 2.1091734863057239868e+23, 3.7482954006874723837e-26},
    {41.3, 0.01, 9.0603431899752762453e-146, 9.060353899607125879e-146, 1.3362101866347994471e+143},
    {41.3, 0.5, 1.3303453165874077448e-75, 1.3342824114322188802e-75, 9.0727793358251861321e+72},
    {41.3, 2, 9.5370467630776594882e-51, 9.9988012116974403754e-51, 1.2093808513872915789e+48},
    {41.3, 8, 4.8951208462957765879e-26, 1.0430954435761088182e-25, 1.139444349735299513e+23},
    {41.3, 25, 4.0773641555460131809e-7, 6.8308727349067742604e-4, 1.5161247937830736772e+1},
    {41.3, 60, -1.1816777458516216198e-1, 5.8828469587064734654e+18, 1.1668292282941457532e-21},
};

inline constexpr double gamma_three_halves = 8.8622692545275801365e-1;

struct Lemma1Row { double p, q, integral; };
inline const std::vector<Lemma1Row> lemma1 = {
    {0, 0, 7.8539816339744830962e-1},
    {1, 2, 2.9452431127404311611e-1},
    {0.5, 0.5, 2.7768018363489789044e-1},
    {3.5, 0.25, 2.5231322132186397013},
};

// G_k at r = 0.3, r' = 1, R = 0.5
struct ModalRow { double beta; int m; int k; double value; };
inline const std::vector<ModalRow> modal = {
    {1.0 / 1.0, 3, 0, 7.1658224308222597965e-2},
    {1.0 / 1.0, 3, 1, 1.7061128118402248375e-2},
    {1.0 / 1.0, 3, 2, 3.0320986359827409611e-3},
    {1.0 / 1.0, 3, 3, 5.9802225487031200959e-4},
    {1.0 / 1.0, 4, 0, 2.1140903237965776843e-2},
    {1.0 / 1.0, 4, 1, 9.9950480942989936948e-3},
    {1.0 / 1.0, 4, 2, 2.3627416786039514845e-3},
    {1.0 / 1.0, 4, 3, 5.5853140346532293574e-4},
    {2.0 / 3.0, 3, 0, 1.0748733646233389695e-1},
    {2.0 / 3.0, 3, 1, 1.0576906313944053417e-2},
    {2.0 / 3.0, 3, 2, 8.9703338230546801439e-4},
    {2.0 / 3.0, 3, 3, 8.5430997685360778049e-5},
    {2.0 / 3.0, 4, 0, 3.1711354856948665264e-2},
    {2.0 / 3.0, 4, 1, 7.2894007025348297245e-3},
    {2.0 / 3.0, 4, 2, 8.3779710519798440361e-4},
    {2.0 / 3.0, 4, 3, 9.6291042037796214145e-5},
    {1.0 / 2.0, 3, 0, 1.4331644861644519593e-1},
    {1.0 / 2.0, 3, 1, 6.0641972719654819222e-3},
    {1.0 / 2.0, 3, 2, 2.4757235731733058615e-4},
    {1.0 / 2.0, 3, 3, 1.1423007292413486712e-5},
    {1.0 / 2.0, 4, 0, 4.2281806475931553686e-2},
    {1.0 / 2.0, 4, 1, 4.7254833572079029689e-3},
    {1.0 / 2.0, 4, 2, 2.6406384708231525706e-4},
    {1.0 / 2.0, 4, 3, 1.4756102194191801159e-5},
};

struct GreenRow { double beta; int m; double x[4]; double y[4]; double value; };
inline const std::vector<GreenRow> green = {
    {1.0 / 2.0, 3, {7.0e-1, 4.0e-1, 2.0e-1}, {1.1, 2.5, -3.0e-1}, 1.214253053442575199e-1},
    {1.0 / 3.0, 3, {7.0e-1, 4.0e-1, 2.0e-1}, {1.1, 2.5, -3.0e-1}, 1.951299078351582104e-1},
    {2.0 / 3.0, 3, {7.0e-1, 4.0e-1, 2.0e-1}, {1.1, 2.5, -3.0e-1}, 8.4233517964881636995e-2},
    {4.0 / 5.0, 3, {7.0e-1, 4.0e-1, 2.0e-1}, {1.1, 2.5, -3.0e-1}, 6.5932413405843160564e-2},
    {1.0 / 2.0, 3, {2.0e-1, 5.9, 0.0}, {1.0, 1.0e-1, 5.0e-2}, 1.6491809828483137359e-1},
    {1.0 / 3.0, 3, {2.0e-1, 5.9, 0.0}, {1.0, 1.0e-1, 5.0e-2}, 2.4191876606925164654e-1},
    {2.0 / 3.0, 3, {2.0e-1, 5.9, 0.0}, {1.0, 1.0e-1, 5.0e-2}, 1.2888412435881767851e-1},
    {4.0 / 5.0, 3, {2.0e-1, 5.9, 0.0}, {1.0, 1.0e-1, 5.0e-2}, 1.1196084196150933811e-1},
    {1.0 / 2.0, 3, {0.0, 0.0, 5.0e-1}, {1.3, 3.0, 0.0}, 1.1426658987716807378e-1},
    {1.0 / 3.0, 3, {0.0, 0.0, 5.0e-1}, {1.3, 3.0, 0.0}, 1.7139988481575211067e-1},
    {2.0 / 3.0, 3, {0.0, 0.0, 5.0e-1}, {1.3, 3.0, 0.0}, 8.5699942407876055333e-2},
    {4.0 / 5.0, 3, {0.0, 0.0, 5.0e-1}, {1.3, 3.0, 0.0}, 7.1416618673230046111e-2},
    {1.0 / 2.0, 4, {6.0e-1, 1.0, 1.0e-1, -2.0e-1}, {9.0e-1, 4.0, 3.0e-1, 0.0}, 4.0680426265137733995e-2},
};

struct CoeffRow { double beta; int m; int j; int k; double R; double value; };
inline const std::vector<CoeffRow> coeff = {
    {2.0 / 3.0, 3, 0, 0, 0.3, 6.1972395597753372728e-1},
    {2.0 / 3.0, 3, 1, 0, 0.3, 3.5379772834843449618e-2},
    {2.0 / 3.0, 3, 0, 1, 1.2, 5.0838882600540322858e-2},
    {2.0 / 3.0, 3, 2, 3, 0.7, -7.3195293668077355644e-5},
    {2.0 / 3.0, 3, 4, 2, 2.5, -7.4278407388826777763e-8},
    {2.0 / 3.0, 4, 0, 0, 0.3, 2.4449877750611246944e-1},
    {2.0 / 3.0, 4, 1, 0, 0.3, 5.7148762863020890328e-2},
    {2.0 / 3.0, 4, 0, 1, 1.2, 4.0977715627083723089e-2},
    {2.0 / 3.0, 4, 2, 3, 0.7, -7.4698605902114162232e-5},
    {2.0 / 3.0, 4, 4, 2, 2.5, -9.2242499166816495617e-8},
    {1.0 / 2.0, 3, 0, 0, 0.3, 6.1972395597753372728e-1},
    {1.0 / 2.0, 3, 1, 0, 0.3, 3.5379772834843449618e-2},
    {1.0 / 2.0, 3, 0, 1, 1.2, 2.7236666199200882821e-2},
    {1.0 / 2.0, 3, 2, 3, 0.7, -2.4102555649893488509e-5},
    {1.0 / 2.0, 3, 4, 2, 2.5, -1.3684421629512903687e-8},
    {1.0 / 2.0, 4, 0, 0, 0.3, 2.4449877750611246944e-1},
    {1.0 / 2.0, 4, 1, 0, 0.3, 5.7148762863020890328e-2},
    {1.0 / 2.0, 4, 0, 1, 1.2, 2.4846389680439649908e-2},
    {1.0 / 2.0, 4, 2, 3, 0.7, -3.6969467831702917576e-5},
    {1.0 / 2.0, 4, 4, 2, 2.5, -2.2612776746621121078e-8},
};

// two poles (0,0,0), (1/2,1/5,-1/10) at x = (3/10,-2/5,7/10)
inline constexpr double two_pole_W[3][3] = {
    {7.8982614305177960435e-2, 7.5556749275898108319e-3, 3.669899250543622404e-2},
    {7.5556749275898108319e-3, -4.468642028603116692e-2, 2.2338517177222049416e-3},
    {3.669899250543622404e-2, 2.2338517177222049416e-3, -3.4296194019146793515e-2},
};

} // namespace oracle
