#pragma once

// Golden reference values for the EU-27 mortality analysis: actual deaths,
// baseline predictions with 95 percent bounds, excess mortality, covid cases
// and declared covid deaths (2020/2021), the dual covid-death predictions,
// and the per-country demographic registry with published index values.
// Known irreproducible cells are listed in golden_exceptions.md.

#include <string_view>

namespace golden {

struct MortalityRow {
    std::string_view code;
    double ad20, lb20, expd20, ub20;
    double ad21, lb21, expd21, ub21;
    bool has_bounds21;
    double em20, cc20, dc20, em21, cc21, dc21;
};

struct PredictionRow {
    std::string_view code;
    double by_cc20, by_em20, declared20;
    double by_cc21, by_em21, declared21;
};

struct IndexRefRow {
    std::string_view code;
    double population, area;
    double dc_bar20, i_f20, dc_bar21, i_f21;
};

inline constexpr MortalityRow kMortality[27] = {
    {"AT", 91599, 81943, 85153, 88364, 91962, 82443, 85938, 89433, true, 6446, 360767, 6431, 6024, 914787, 9197},
    {"BE", 126896, 106409, 111057, 115706, 112331, 106245, 111455, 116664, true, 15839, 650041, 19819, 876, 1475862, 8563},
    {"BG", 124735, 104997, 108823, 112648, 148995, 104781, 108903, 113026, true, 15912, 202266, 7515, 40092, 544842, 23375},
    {"HR", 57023, 50289, 52900, 55510, 62712, 50210, 53006, 55801, true, 4124, 210837, 3920, 9707, 504408, 8618},
    {"CY", 6422, 5544, 6174, 6805, 7110, 5616, 6296, 6977, true, 248, 15101, 78, 814, 144176, 568},
    {"CZ", 129289, 109039, 113359, 117680, 139891, 109614, 114245, 118877, true, 15930, 732567, 12016, 25646, 1752631, 24339},
    {"DK", 54645, 53966, 55835, 57703, 57152, 0, 56216, 0, false, -1190, 156508, 907, 936, 606526, 1938},
    {"EE", 15811, 15345, 15775, 16206, 18587, 0, 15738, 0, false, 36, 28393, 233, 2849, 213738, 1692},
    {"FI", 55488, 53986, 54952, 55918, 57659, 54342, 55369, 56396, true, 536, 36676, 598, 2290, 241354, 1150},
    {"FR", 669137, 607893, 627025, 646157, 657134, 613220, 635195, 657170, true, 42112, 2620425, 44826, 21939, 7352375, 59135},
    {"DE", 985572, 932157, 966461, 1000765, 1023687, 940102, 978323, 1016545, true, 19111, 1754283, 51010, 45364, 5440699, 67134},
    {"EL", 130620, 120292, 126519, 132747, 143329, 121322, 128120, 134918, true, 4101, 138850, 4838, 15209, 1072003, 20790},
    {"HU", 141326, 126519, 131167, 135814, 156131, 126577, 131634, 136692, true, 10159, 322514, 9537, 24497, 933901, 29649},
    {"IE", 31765, 30834, 31482, 32130, 33058, 31053, 31753, 32454, true, 283, 91779, 2239, 1305, 696780, 3675},
    {"IT", 746146, 612396, 648310, 684225, 709035, 613760, 652604, 691447, true, 97836, 2107166, 74159, 56431, 4018517, 63243},
    {"LV", 28854, 27185, 28166, 29147, 34600, 27017, 28071, 29125, true, 688, 40904, 635, 6529, 235770, 3935},
    {"LT", 43547, 36376, 38322, 40269, 47746, 35562, 37879, 40196, true, 5225, 147990, 1845, 9867, 378766, 5571},
    {"LU", 4609, 4196, 4404, 4611, 4489, 4237, 4482, 4727, true, 205, 41272, 396, 7, 58282, 407},
    {"MT", 4084, 3492, 3755, 4017, 4163, 3545, 3825, 4106, true, 329, 11101, 166, 338, 39696, 258},
    {"NL", 168678, 151155, 155760, 160366, 170972, 152799, 157786, 162773, true, 12918, 795539, 11405, 13186, 2336036, 9514},
    {"PL", 477355, 399460, 415932, 432405, 519517, 403476, 421148, 438819, true, 61423, 1294878, 28554, 98369, 2813337, 68500},
    {"PT", 123357, 109069, 113315, 117561, 124802, 109741, 114374, 119006, true, 10042, 413678, 6906, 10428, 1013820, 11989},
    {"RO", 297039, 255712, 264713, 273713, 334473, 256484, 266069, 275654, true, 32326, 632263, 15767, 68404, 1176628, 42985},
    {"SK", 59089, 51964, 54054, 56144, 73461, 52075, 54318, 56561, true, 5035, 285091, 2250, 19143, 1090159, 14415},
    {"SI", 24016, 20287, 20942, 21597, 23261, 20492, 21198, 21905, true, 3074, 124034, 3025, 2063, 341757, 2885},
    {"ES", 491602, 411958, 430694, 449429, 449270, 414323, 434687, 455052, true, 60908, 2009358, 54374, 14583, 4813486, 36850},
    {"SE", 98124, 88166, 90981, 93796, 91958, 87874, 90930, 93987, true, 7143, 454758, 9817, 1028, 881840, 5534},
};

inline constexpr PredictionRow kPredictions[27] = {
    {"AT", 6832, 5930, 6431, 9813, 8212, 9197},
    {"BE", 13686, 12676, 19819, 16743, 2251, 8563},
    {"BG", 3451, 12726, 7515, 5501, 29311, 23375},
    {"HR", 3625, 4065, 3920, 5047, 11311, 8618},
    {"CY", 162, 377, 78, 1246, 2142, 568},
    {"CZ", 15759, 12738, 12016, 20286, 21716, 24339},
    {"DK", 2550, 1151, 907, 6201, 1151, 1938},
    {"EE", 340, 73, 233, 1934, 4968, 1692},
    {"FI", 460, 725, 598, 2215, 4290, 1150},
    {"FR", 70905, 28966, 44826, 100647, 19555, 59135},
    {"DE", 44161, 14856, 51010, 71900, 31846, 67134},
    {"EL", 2214, 4046, 4838, 11715, 15291, 20790},
    {"HU", 5985, 8709, 9537, 10042, 21058, 29649},
    {"IE", 1358, 422, 2239, 7240, 2941, 3675},
    {"IT", 54823, 59057, 74159, 51256, 36872, 63243},
    {"LV", 523, 895, 635, 2158, 8667, 3935},
    {"LT", 2387, 4965, 1845, 3665, 11437, 5571},
    {"LU", 529, 322, 396, 453, 85, 407},
    {"MT", 112, 480, 166, 295, 1186, 258},
    {"NL", 17369, 10670, 11405, 27964, 13894, 9514},
    {"PL", 30862, 39849, 28554, 34418, 53543, 68500},
    {"PT", 8029, 8625, 6906, 11007, 11869, 11989},
    {"RO", 13245, 23164, 15767, 12999, 41956, 42985},
    {"SK", 5175, 4812, 2250, 11936, 17845, 14415},
    {"SI", 1938, 3171, 3025, 3267, 3999, 2885},
    {"ES", 51833, 39567, 54374, 62706, 14866, 36850},
    {"SE", 8978, 6467, 9817, 9419, 2506, 5534},
};

inline constexpr IndexRefRow kIndexRef[27] = {
    {"AT", 8858775, 82409, 6381, 8.74e-09, 9012, 1.23e-08},
    {"BE", 11455519, 30280, 13181, 3.80e-08, 9497, 2.74e-08},
    {"BG", 7000039, 108560, 8088, 1.06e-08, 17406, 2.29e-08},
    {"HR", 4076246, 55960, 3845, 1.69e-08, 8179, 3.59e-08},
    {"CY", 875899, 9240, 269, 3.33e-08, 1694, 2.09e-07},
    {"CZ", 10649800, 77240, 14248, 1.73e-08, 21001, 2.55e-08},
    {"DK", 5806081, 42430, 1851, 7.51e-09, 3676, 1.49e-08},
    {"EE", 1324820, 42390, 207, 3.68e-09, 3451, 6.14e-08},
    {"FI", 5517919, 303890, 593, 3.53e-10, 3253, 1.94e-09},
    {"FR", 67012883, 547557, 49936, 1.36e-09, 60101, 1.64e-09},
    {"DE", 83019213, 348560, 29509, 1.02e-09, 51873, 1.79e-09},
    {"EL", 10724599, 128900, 3130, 2.26e-09, 13503, 9.77e-09},
    {"HU", 9772756, 90530, 7347, 8.30e-09, 15550, 1.76e-08},
    {"IE", 4904240, 68890, 890, 2.64e-09, 5090, 1.51e-08},
    {"IT", 60359546, 294140, 56940, 3.21e-09, 44064, 2.48e-09},
    {"LV", 1919968, 62200, 709, 5.94e-09, 5413, 4.53e-08},
    {"LT", 2794184, 62674, 3676, 2.10e-08, 7551, 4.31e-08},
    {"LU", 613894, 2590, 426, 2.68e-07, 269, 1.69e-07},
    {"MT", 493559, 320, 296, 1.88e-06, 741, 4.69e-06},
    {"NL", 17282163, 33720, 14020, 2.41e-08, 20929, 3.59e-08},
    {"PL", 37972812, 306230, 35356, 3.04e-09, 43980, 3.78e-09},
    {"PT", 10276617, 91590, 8327, 8.85e-09, 11438, 1.22e-08},
    {"RO", 19414458, 230170, 18205, 4.07e-09, 27477, 6.15e-09},
    {"SK", 5450421, 48088, 4993, 1.91e-08, 14891, 5.68e-08},
    {"SI", 2080908, 20140, 2555, 6.10e-08, 3633, 8.67e-08},
    {"ES", 46937060, 498800, 45700, 1.95e-09, 38786, 1.66e-09},
    {"SE", 10230185, 410340, 7723, 1.84e-09, 5962, 1.42e-09},
};

}  // namespace golden
