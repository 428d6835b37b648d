#ifndef STA_RANK1_HPP
#define STA_RANK1_HPP

#include <cstdint>

#include <Eigen/Dense>

#include "sta/poly.hpp"

namespace sta {

struct Rank1Options {
    int random_restarts = 8;
    std::uint64_t seed = 0;
    int max_iters = 60;
};

struct Rank1Result {
    // Signed weight P(v) at the best critical direction; |w| lower-bounds
    // the spectral norm and dist1^2 + w^2 = ||P||_d^2.
    double w;
    Eigen::VectorXd v;
    double spectral_lower_bound;
    double dist1;
    int iterations;
};

// Best real rank-1 approximation by Newton refinement from the leading
// catalecticant singular vector plus random restarts, keeping the largest
// |P(v)|. Real tensors only.
Rank1Result best_rank1(const HomPoly& P, const Rank1Options& opts = {});

}  // namespace sta

#endif
