#ifndef EXPO_NORMAL_HPP
#define EXPO_NORMAL_HPP

namespace expo {

// Inverse standard normal CDF (Wichura's AS 241, PPND16). Rational
// polynomial approximation, absolute error well below 1e-9 over (0, 1).
double normal_quantile(double p);

}  // namespace expo

#endif  // EXPO_NORMAL_HPP
