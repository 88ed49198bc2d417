// Embedded 2013 Standard Edition D/L resource table (percentages).
#include "restab/tables.hpp"

namespace restab::detail {

// Hundredths of a percent, rows u = 50..1, columns w = 0..9.
extern const int kDl2013Hundredths[kOvers][kWicketStates] = {
    {10000,  9340,  8510,  7490,  6270,  4900,  3490,  2200,  1190,   470},  // u = 50
    { 9910,  9260,  8450,  7440,  6250,  4890,  3490,  2200,  1190,   470},  // u = 49
    { 9810,  9170,  8380,  7400,  6220,  4880,  3490,  2200,  1190,   470},  // u = 48
    { 9710,  9090,  8320,  7350,  6190,  4860,  3490,  2200,  1190,   470},  // u = 47
    { 9610,  9000,  8250,  7300,  6160,  4850,  3480,  2200,  1190,   470},  // u = 46
    { 9500,  8910,  8180,  7250,  6130,  4840,  3480,  2200,  1190,   470},  // u = 45
    { 9390,  8820,  8100,  7200,  6100,  4830,  3480,  2200,  1190,   470},  // u = 44
    { 9280,  8730,  8030,  7140,  6070,  4810,  3470,  2200,  1190,   470},  // u = 43
    { 9170,  8630,  7950,  7090,  6030,  4790,  3470,  2200,  1190,   470},  // u = 42
    { 9050,  8530,  7870,  7030,  5990,  4780,  3460,  2200,  1190,   470},  // u = 41
    { 8930,  8420,  7780,  6960,  5950,  4760,  3460,  2200,  1190,   470},  // u = 40
    { 8800,  8310,  7690,  6900,  5910,  4740,  3450,  2200,  1190,   470},  // u = 39
    { 8670,  8200,  7600,  6830,  5870,  4710,  3450,  2190,  1190,   470},  // u = 38
    { 8540,  8090,  7500,  6760,  5820,  4690,  3440,  2190,  1190,   470},  // u = 37
    { 8410,  7970,  7410,  6680,  5770,  4660,  3430,  2190,  1190,   470},  // u = 36
    { 8270,  7850,  7300,  6600,  5720,  4640,  3420,  2190,  1190,   470},  // u = 35
    { 8130,  7720,  7200,  6520,  5660,  4610,  3410,  2190,  1190,   470},  // u = 34
    { 7980,  7590,  7090,  6440,  5600,  4580,  3400,  2190,  1190,   470},  // u = 33
    { 7830,  7460,  6970,  6350,  5540,  4540,  3390,  2190,  1190,   470},  // u = 32
    { 7670,  7320,  6860,  6250,  5480,  4510,  3370,  2190,  1190,   470},  // u = 31
    { 7510,  7180,  6730,  6160,  5410,  4470,  3360,  2180,  1190,   470},  // u = 30
    { 7350,  7030,  6610,  6050,  5340,  4420,  3340,  2180,  1190,   470},  // u = 29
    { 7180,  6880,  6480,  5950,  5260,  4380,  3320,  2180,  1190,   470},  // u = 28
    { 7010,  6720,  6340,  5840,  5180,  4330,  3300,  2170,  1190,   470},  // u = 27
    { 6830,  6560,  6200,  5720,  5090,  4280,  3280,  2170,  1190,   470},  // u = 26
    { 6650,  6390,  6050,  5600,  5000,  4220,  3260,  2160,  1190,   470},  // u = 25
    { 6460,  6220,  5900,  5470,  4900,  4160,  3230,  2160,  1190,   470},  // u = 24
    { 6270,  6040,  5740,  5340,  4800,  4090,  3200,  2150,  1190,   470},  // u = 23
    { 6070,  5860,  5580,  5200,  4700,  4020,  3160,  2140,  1190,   470},  // u = 22
    { 5870,  5670,  5410,  5060,  4580,  3940,  3120,  2130,  1190,   470},  // u = 21
    { 5660,  5480,  5240,  4910,  4460,  3860,  3080,  2120,  1190,   470},  // u = 20
    { 5440,  5280,  5050,  4750,  4340,  3770,  3030,  2110,  1190,   470},  // u = 19
    { 5220,  5070,  4860,  4590,  4200,  3680,  2980,  2090,  1190,   470},  // u = 18
    { 4990,  4850,  4670,  4410,  4060,  3580,  2920,  2070,  1190,   470},  // u = 17
    { 4760,  4630,  4470,  4230,  3910,  3470,  2850,  2050,  1180,   470},  // u = 16
    { 4520,  4410,  4260,  4050,  3760,  3350,  2780,  2020,  1180,   470},  // u = 15
    { 4270,  4170,  4040,  3850,  3590,  3220,  2700,  1990,  1180,   470},  // u = 14
    { 4020,  3930,  3810,  3650,  3420,  3080,  2610,  1950,  1170,   470},  // u = 13
    { 3760,  3680,  3580,  3430,  3230,  2940,  2510,  1900,  1160,   470},  // u = 12
    { 3490,  3420,  3340,  3210,  3040,  2780,  2400,  1850,  1150,   470},  // u = 11
    { 3210,  3160,  3080,  2980,  2830,  2610,  2280,  1790,  1140,   470},  // u = 10
    { 2930,  2890,  2820,  2740,  2610,  2420,  2140,  1710,  1120,   470},  // u = 9
    { 2640,  2600,  2550,  2480,  2380,  2230,  1990,  1620,  1090,   470},  // u = 8
    { 2340,  2310,  2270,  2220,  2140,  2010,  1820,  1520,  1050,   470},  // u = 7
    { 2030,  2010,  1980,  1940,  1880,  1780,  1640,  1390,  1010,   460},  // u = 6
    { 1720,  1700,  1680,  1650,  1610,  1540,  1430,  1250,   940,   460},  // u = 5
    { 1390,  1380,  1370,  1350,  1320,  1270,  1200,  1070,   840,   450},  // u = 4
    { 1060,  1050,  1040,  1030,  1020,   990,   950,   870,   720,   420},  // u = 3
    {  720,   710,   710,   700,   700,   680,   660,   620,   550,   370},  // u = 2
    {  360,   360,   360,   360,   360,   350,   350,   340,   320,   250},  // u = 1
};

}  // namespace restab::detail
