#ifndef STA_POLY_HPP
#define STA_POLY_HPP

#include <complex>
#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "sta/errors.hpp"

namespace sta {

using Complex = std::complex<double>;

enum class FieldMode { Real, Complex };

// Multi-index alpha with |alpha| = d; one entry per variable.
using Exponent = std::vector<int>;

// All exponents of total degree d in n variables, graded-lex descending in
// (alpha_1, ..., alpha_n). The order is fixed so files and matrices built
// from it are reproducible. Instances are shared via the get() cache.
class MonomialBasis {
  public:
    MonomialBasis(int n, int d);

    // Shared, memoized instance; thread-safe.
    static std::shared_ptr<const MonomialBasis> get(int n, int d);

    int n() const { return n_; }
    int d() const { return d_; }
    int size() const { return static_cast<int>(exps_.size()); }
    const std::vector<Exponent>& exponents() const { return exps_; }
    const Exponent& exponent(int idx) const { return exps_[idx]; }
    // Index of alpha in the graded-lex order, or -1 if |alpha| != d.
    int index_of(const Exponent& alpha) const;
    // d! / prod(alpha_i!) for the exponent at idx.
    double multinomial(int idx) const { return mult_[idx]; }
    const Eigen::VectorXd& multinomials() const { return mult_; }

  private:
    int n_, d_;
    std::vector<Exponent> exps_;
    std::unordered_map<std::uint64_t, int> index_;
    Eigen::VectorXd mult_;

    static std::uint64_t key_of(const Exponent& alpha);
};

// Homogeneous polynomial P = sum_{|alpha|=d} binom(d,alpha) p_alpha x^alpha.
// Coefficients store the apolar-normalized p_alpha (multinomial factor is
// NOT folded in), densely over the shared graded-lex basis. Real mode means
// every p_alpha has zero imaginary part. Immutable after construction.
class HomPoly {
  public:
    HomPoly(std::shared_ptr<const MonomialBasis> basis, Eigen::VectorXcd coeffs,
            FieldMode mode);
    static HomPoly zero(int n, int d, FieldMode mode);

    int n() const { return basis_->n(); }
    int d() const { return basis_->d(); }
    FieldMode mode() const { return mode_; }
    const MonomialBasis& basis() const { return *basis_; }
    std::shared_ptr<const MonomialBasis> basis_ptr() const { return basis_; }
    const Eigen::VectorXcd& coeffs() const { return coeffs_; }

    HomPoly operator+(const HomPoly& other) const;
    HomPoly operator-(const HomPoly& other) const;
    HomPoly operator*(Complex scalar) const;

  private:
    std::shared_ptr<const MonomialBasis> basis_;
    Eigen::VectorXcd coeffs_;
    FieldMode mode_;
};

// Apolar product sum binom(d,alpha) conj(p_alpha) q_alpha; conjugate-linear
// in the first argument, linear in the second.
Complex apolar(const HomPoly& P, const HomPoly& Q);

// sqrt(apolar(P, P)); coincides with the Frobenius norm of the symmetric
// tensor associated with P.
double apolar_norm(const HomPoly& P);

// Plain l2 norm of the monomial coefficients binom(d,alpha) p_alpha. This is
// the norm used for the reported rank-1 distances d0 and d_*.
double coeff_l2_norm(const HomPoly& P);

Complex eval(const HomPoly& P, const Eigen::VectorXcd& v);
// (d_{x_k} P(v))_k.
Eigen::VectorXcd grad_eval(const HomPoly& P, const Eigen::VectorXcd& v);
// (d_{x_k} d_{x_l} P(v))_{k,l}, symmetric.
Eigen::MatrixXcd hess_eval(const HomPoly& P, const Eigen::VectorXcd& v);

// Coefficients conjugated: eval(conj_poly(P), v) = conj(eval(P, conj(v))).
HomPoly conj_poly(const HomPoly& P);

// d_{x_i} P as a degree-(d-1) polynomial; apolar coefficients shift by
// q_beta = d * p_{beta + e_i}.
HomPoly derivative(const HomPoly& P, int i);

// x_i * P as a degree-(d+1) polynomial; q_alpha = (alpha_i/(d+1)) p_{alpha-e_i}.
HomPoly multiply_x(const HomPoly& P, int i);

// Veronese point Phi(v) = (v^t x)^d with p_alpha = v^alpha.
HomPoly veronese(const Eigen::VectorXcd& v, int d, FieldMode mode);

// sum_i w_i Phi(v_i); columns of V need not be unit.
HomPoly from_decomposition(const Eigen::VectorXd& w, const Eigen::MatrixXcd& V,
                           int d, FieldMode mode);

struct TensorEntry {
    std::vector<int> index;  // 1-based variable indices, one per tensor mode
    Complex value;
};

// Dense symmetric entries to apolar coefficients: p_alpha equals the common
// entry value of any index tuple with content alpha. Entries whose
// permutations disagree beyond 1e-12 raise AsymmetricInput.
HomPoly entries_to_poly(int n, int d, const std::vector<TensorEntry>& entries,
                        FieldMode mode);

// ceil(binom(n+d-1, d)/n), plus one for the Alexander-Hirschowitz
// exceptional pairs (d,n) in {(3,5),(4,3),(4,4),(4,5)}. Requires d >= 3.
int generic_rank(int n, int d);

class Rng;

// i.i.d. standard normal p_alpha (real and imaginary parts independent in
// complex mode); deterministic for a fixed seed.
HomPoly random_gaussian_poly(int n, int d, FieldMode mode, std::uint64_t seed);
HomPoly random_gaussian_poly(int n, int d, FieldMode mode, Rng& rng);

// eps * P / ||P||_d. Requires eps > 0 and P != 0.
HomPoly scale_to_norm(const HomPoly& P, double eps);

}  // namespace sta

#endif
