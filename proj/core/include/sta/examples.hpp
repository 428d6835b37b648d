#ifndef STA_EXAMPLES_HPP
#define STA_EXAMPLES_HPP

#include "sta/poly.hpp"

namespace sta {

// Cubic tensor with entries sum_j (-1)^{i_j} / i_j (1-based indices).
HomPoly alternating_reciprocal_tensor(int n);

// Quintic tensor with entries sum_j (-1)^{i_j} log(i_j).
HomPoly alternating_log_tensor(int n);

// Cubic tensor with entries sin(i_1 + i_2 + i_3).
HomPoly sine_sum_tensor(int n);

// Real cubic sum_i (i^2 + 1) x_i^3 + sum_{i != j} x_i^2 x_j.
HomPoly weighted_cubic_coupling_tensor(int n);

// Complex cubic with diagonal coefficients e^sqrt(i) e^(i^2 I) + (i/n) I and
// x_i^2 x_j coupling (i/n) I.
HomPoly complex_cubic_coupling_tensor(int n);

}  // namespace sta

#endif
