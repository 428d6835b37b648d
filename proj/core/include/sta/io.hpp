#ifndef STA_IO_HPP
#define STA_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include "sta/experiment.hpp"
#include "sta/manifold.hpp"
#include "sta/poly.hpp"
#include "sta/solver.hpp"

namespace sta {

// Tensor file: {"n", "d", "field": "real"|"complex", "coeffs": [{"alpha":
// [..], "re", "im"}, ..]} with coefficients in the multinomial-rescaled
// basis, or the entry form {"entries": [{"index": [1-based,..], "re",
// "im"}, ..]} listing raw tensor entries. Malformed input raises ParseError
// with a line-numbered message.
HomPoly read_poly_json(const std::string& path);
void write_poly_json(const std::string& path, const HomPoly& P);

// Decomposition file: {"r", "n", "d", "field", "weights": [..], "vectors":
// [[{"re", "im"}, ..], ..]}. The tensor degree travels alongside the point.
std::pair<Decomposition, int> read_decomposition_json(const std::string& path);
void write_decomposition_json(const std::string& path, const Decomposition& p, int d);

// Iteration trace, one row per iteration: k,f,delta,rho,accepted.
void write_trace_csv(const std::string& path, const std::vector<TraceRow>& trace);

// Single-row summary: r,eps,err_min,err_med,err_max,avg_time_s,avg_iters.
std::string perturbation_csv(const ExperimentSummary& summary, int r, double eps);

}  // namespace sta

#endif
