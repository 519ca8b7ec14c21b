#pragma once

// High-precision reference values; regenerate with generate_oracles.py.

namespace oracle {

inline constexpr double kLgl5LeftNodes[] = {-0.76505532392946469285, -0.28523151648064509631};
inline constexpr double kLgl7LeftNodes[] = {-0.87174014850960661534, -0.59170018143314230214, -0.20929921790247886877};
inline constexpr double kLgl20LeftNodes[] = {-0.98257229660454802823, -0.94197629695974553430, -0.87929475532359046445, -0.79600192607771240474, -0.69405102606222323263, -0.57583196026183068693, -0.44411578327900210119, -0.30198985650876488728, -0.15278551580218546601};

inline constexpr double kQ1Order2000 = 2.3523034561186715137;
inline constexpr double kQ2Order2000 = 1.5716971809943082166;
inline constexpr double kScaledEta1Order2000 = 3.8307484027878138478;

inline constexpr double kBesselJ1Zeros[] = {
    0.0,
    3.8317059702075123156,
    7.0155866698156187535,
    10.173468135062722077,
    13.323691936314223032,
    16.470630050877632813,
    19.615858510468242021,
    22.760084380592771898,
    25.903672087618382625,
    29.046828534916855067,
    32.189679910974403627,
    35.332307550083865103,
};
inline constexpr double kQhat[] = {
    2.3523058669305896285,
    1.5717000877582252933,
    1.3636689859746502206,
    1.2666742018219771581,
    1.2105287599734437375,
    1.1739140216416929203,
    1.1481485999444293225,
    1.1290324896681076928,
    1.1142858428103963072,
    1.1025641784782255933,
};

}  // namespace oracle
