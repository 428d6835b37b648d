#include "sta/examples.hpp"

#include <cmath>
#include <functional>
#include <vector>

#include "sta/errors.hpp"

namespace sta {

namespace {

// Symmetric tensor from an entry formula over 1-based index tuples; the
// stored coefficient at alpha is the entry at any tuple with content alpha.
HomPoly from_entry_formula(int n, int d,
                           const std::function<double(const std::vector<int>&)>& entry) {
    auto basis = MonomialBasis::get(n, d);
    Eigen::VectorXcd coeffs(basis->size());
    std::vector<int> idx;
    idx.reserve(d);
    for (long t = 0; t < basis->size(); ++t) {
        const Exponent& alpha = basis->exponent(t);
        idx.clear();
        for (int i = 0; i < n; ++i) {
            for (int rep = 0; rep < alpha[i]; ++rep) idx.push_back(i + 1);
        }
        coeffs[t] = entry(idx);
    }
    return HomPoly(basis, std::move(coeffs), FieldMode::Real);
}

double sign_pow(int i) { return (i % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

HomPoly alternating_reciprocal_tensor(int n) {
    if (n < 1) throw DimensionMismatch("need at least one variable");
    return from_entry_formula(n, 3, [](const std::vector<int>& idx) {
        double s = 0.0;
        for (int i : idx) s += sign_pow(i) / static_cast<double>(i);
        return s;
    });
}

HomPoly alternating_log_tensor(int n) {
    if (n < 1) throw DimensionMismatch("need at least one variable");
    return from_entry_formula(n, 5, [](const std::vector<int>& idx) {
        double s = 0.0;
        for (int i : idx) s += sign_pow(i) * std::log(static_cast<double>(i));
        return s;
    });
}

HomPoly sine_sum_tensor(int n) {
    if (n < 1) throw DimensionMismatch("need at least one variable");
    return from_entry_formula(n, 3, [](const std::vector<int>& idx) {
        int s = 0;
        for (int i : idx) s += i;
        return std::sin(static_cast<double>(s));
    });
}

HomPoly weighted_cubic_coupling_tensor(int n) {
    if (n < 1) throw DimensionMismatch("need at least one variable");
    auto basis = MonomialBasis::get(n, 3);
    Eigen::VectorXcd coeffs = Eigen::VectorXcd::Zero(basis->size());
    for (long t = 0; t < basis->size(); ++t) {
        const Exponent& alpha = basis->exponent(t);
        int hi = -1, lo = -1;
        for (int i = 0; i < n; ++i) {
            if (alpha[i] == 3) hi = i;
            if (alpha[i] == 2) hi = i;
            if (alpha[i] == 1) lo = i;
        }
        if (hi >= 0 && lo < 0 && alpha[hi] == 3) {
            double i1 = hi + 1;
            coeffs[t] = i1 * i1 + 1.0;
        } else if (hi >= 0 && lo >= 0 && alpha[hi] == 2) {
            // x_i^2 x_j carries multinomial 3, so the monomial coefficient is 1.
            coeffs[t] = 1.0 / 3.0;
        }
    }
    return HomPoly(basis, std::move(coeffs), FieldMode::Real);
}

HomPoly complex_cubic_coupling_tensor(int n) {
    if (n < 1) throw DimensionMismatch("need at least one variable");
    auto basis = MonomialBasis::get(n, 3);
    Eigen::VectorXcd coeffs = Eigen::VectorXcd::Zero(basis->size());
    const Complex I(0.0, 1.0);
    for (long t = 0; t < basis->size(); ++t) {
        const Exponent& alpha = basis->exponent(t);
        int hi = -1, lo = -1;
        for (int i = 0; i < n; ++i) {
            if (alpha[i] >= 2) hi = i;
            if (alpha[i] == 1) lo = i;
        }
        if (hi >= 0 && alpha[hi] == 3) {
            double i1 = hi + 1;
            coeffs[t] = std::exp(std::sqrt(i1)) * std::exp(I * (i1 * i1)) +
                        I * (i1 / static_cast<double>(n));
        } else if (hi >= 0 && lo >= 0 && alpha[hi] == 2) {
            double i1 = hi + 1;
            coeffs[t] = I * (i1 / static_cast<double>(n)) / 3.0;
        }
    }
    return HomPoly(basis, std::move(coeffs), FieldMode::Complex);
}

}  // namespace sta
