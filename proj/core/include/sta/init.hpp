#ifndef STA_INIT_HPP
#define STA_INIT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sta/manifold.hpp"
#include "sta/poly.hpp"

namespace sta {

struct InitReport {
    std::string method;
    double residual_at_init;
    // Minimal separation between the pencil eigenvalues of the selected
    // draw; +inf when fewer than two eigenvalues are involved.
    double pencil_gap;
    std::vector<std::string> warnings;
};

// Simultaneous-diagonalisation initial point from the degree-(k, d-k-1)
// catalecticant slices, k = ceil((d-1)/2). Draws pencil_draws random pencil
// pairs (one for r = 1, where the leading singular vector is used directly)
// and keeps the candidate with the smallest apolar residual. Weights come
// from a least-squares fit; in complex mode their phases are folded into the
// directions so weights are nonnegative. Throws InsufficientDegree when
// d < 3 or r exceeds the slice dimensions.
std::pair<Decomposition, InitReport> shd_init(const HomPoly& P, int r, std::uint64_t seed,
                                              int pencil_draws = 4);

// Random unit directions with least-squares weights.
std::pair<Decomposition, InitReport> random_init(const HomPoly& P, int r,
                                                 std::uint64_t seed);

}  // namespace sta

#endif
