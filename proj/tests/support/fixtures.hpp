// Generated by gen_fixtures.py -- do not edit by hand.
#pragma once

namespace fixtures {

inline constexpr double kNorm1d_0 = 0.4439938161680794378230489;
inline constexpr double kNorm1d_2 = 0.07020147675297540998837591;
inline constexpr double kNorm1d_4 = 0.02352359957114476841679167;
inline constexpr double kNorm1d_6 = 0.01023982351354442729091033;
inline constexpr double kNorm1d_8 = 0.005135464262331888285622989;
inline constexpr double kNorm1d_10 = 0.00282095642289334315237159;
inline constexpr double kNorm1d_12 = 0.001652598137573326237408558;

inline constexpr double kRadialMoment_1 = 0.07424775338796102395918;
inline constexpr double kRadialMoment_2 = 0.03510073837648770499418795;
inline constexpr double kRadialMoment_3 = 0.01940176978908095553988905;
inline constexpr double kRadialMoment_4 = 0.01176179978557238420839583;
inline constexpr double kRadialMoment_5 = 0.00758703185248125124675509;
inline constexpr double kRadialMoment_6 = 0.005119911756772213645455164;
inline constexpr double kRadialMoment_7 = 0.003576420847301711911876881;
inline constexpr double kRadialMoment_8 = 0.002567732131165944142811494;
inline constexpr double kRadialMoment_9 = 0.001885338413654330693325331;

inline constexpr double kA2_m2 = 6.324565190136990435663175;
inline constexpr double kA4_m4 = 18.87439950783317220786093;
inline constexpr double kA6_m6 = 43.35951841169914631115489;

inline constexpr double kB2 = 1.755968820258363134092865;
inline constexpr double kB4 = 3.414111286744215396043076;
inline constexpr double kB6 = 5.798128472837980418092339;

inline constexpr double kBt2 = -10.48067528453666521003082;
inline constexpr double kBt4 = -81.69052357339098173121455;
inline constexpr double kBt6 = -296.9191490236810156145986;

inline constexpr double kNormRadial_m2_d2 = 0.1219049148720342443642877;
inline constexpr double kCm_m2_d2 = 1.180089273256237945689449;
inline constexpr double kCmLinear_m2_d2 = 1.829433964561807510878329;
inline constexpr double kNormRadial_m2_d3 = 0.1478031351973928304578861;
inline constexpr double kCm_m2_d3 = 1.083454219205848008921514;
inline constexpr double kCmLinear_m2_d3 = 1.605535810445744725655788;

inline constexpr double kDerivU_m2_k0_x03 = 0.02999133694406014233631054;
inline constexpr double kDerivU_m2_k1_x03 = 0.1782120178594436344920566;
inline constexpr double kDerivU_m2_k2_x03 = 0.2913930749376469528954826;
inline constexpr double kDerivU_m2_k3_x03 = -3.290483953395318461014805;
inline constexpr double kDerivU_m2_k4_x03 = -15.50830826455127534543251;
inline constexpr double kDerivU_m2_k5_x03 = -48.06638615531088388940236;
inline constexpr double kDerivU_m2_k6_x03 = -182.4101493880756052736547;

inline constexpr double kDerivU_m4_k0_x03 = 0.002699220324965412810267948;
inline constexpr double kDerivU_m4_k1_x03 = 0.03403388377378601250607141;
inline constexpr double kDerivU_m4_k2_x03 = 0.3000624720638408718236824;
inline constexpr double kDerivU_m4_k3_x03 = 1.297636086238847660672876;
inline constexpr double kDerivU_m4_k4_x03 = -5.796192332706615652778668;

}  // namespace fixtures
