#ifndef STA_TESTS_FROZEN_HPP
#define STA_TESTS_FROZEN_HPP

// Reference values frozen from independent runs; unit tests pin against
// these, the acceptance suite applies the published tolerance bands.

namespace frozen {

inline constexpr double kReciprocalN10AbsW = 17.800232365;
inline constexpr double kReciprocalN10DistL2 = 28.4489405046;
inline constexpr double kReciprocalN20AbsW = 34.1589275544;
inline constexpr double kReciprocalN20DistL2 = 64.8840077194;
inline constexpr double kLogN10AbsW = 883.284936373;
inline constexpr double kLogN10DistL2 = 6095.9062396;
inline constexpr double kSineN10AbsW = 12.1174404006;
inline constexpr double kWeightedCubicNormSq = 26143.0;  // sum (i^2+1)^2 + 90 / 3
inline constexpr double kWeightedCubicResidual = 0.883512128678;
inline constexpr double kComplexCubicResidual = 0.162210239731;

}  // namespace frozen

#endif
