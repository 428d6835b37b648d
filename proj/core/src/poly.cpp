#include "sta/poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "sta/random.hpp"

namespace sta {

namespace {

void enumerate_exponents(int slots, int rem, Exponent& prefix,
                         std::vector<Exponent>& out) {
    if (slots == 1) {
        prefix.push_back(rem);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int a = rem; a >= 0; --a) {
        prefix.push_back(a);
        enumerate_exponents(slots - 1, rem - a, prefix, out);
        prefix.pop_back();
    }
}

double multinomial_value(int d, const Exponent& alpha) {
    // d!/prod(alpha_i!) built as a product of binomials; exact in uint64
    // for the degrees used here.
    std::uint64_t result = 1;
    int rem = d;
    for (int a : alpha) {
        for (int j = 1; j <= a; ++j) {
            result = result * static_cast<std::uint64_t>(rem) / j;
            --rem;
        }
    }
    return static_cast<double>(result);
}

Complex pow_int(Complex base, int e) {
    Complex acc(1.0, 0.0);
    for (int i = 0; i < e; ++i) acc *= base;
    return acc;
}

// v^alpha with one entry of alpha reduced by delta_i (and optionally a
// second by delta_j); callers guarantee the reduced entries stay >= 0.
Complex monomial_power(const Eigen::VectorXcd& v, const Exponent& alpha,
                       int skip_i = -1, int skip_j = -1) {
    Complex acc(1.0, 0.0);
    for (int k = 0; k < static_cast<int>(alpha.size()); ++k) {
        int e = alpha[k];
        if (k == skip_i) --e;
        if (k == skip_j) --e;
        acc *= pow_int(v[k], e);
    }
    return acc;
}

FieldMode combine(FieldMode a, FieldMode b) {
    return (a == FieldMode::Real && b == FieldMode::Real) ? FieldMode::Real
                                                          : FieldMode::Complex;
}

void require_same_space(const HomPoly& P, const HomPoly& Q, const char* op) {
    if (P.n() != Q.n() || P.d() != Q.d()) {
        std::ostringstream msg;
        msg << op << ": operands live in different spaces (n=" << P.n()
            << ", d=" << P.d() << ") vs (n=" << Q.n() << ", d=" << Q.d() << ")";
        throw DimensionMismatch(msg.str());
    }
}

}  // namespace

MonomialBasis::MonomialBasis(int n, int d) : n_(n), d_(d) {
    if (n < 1 || d < 0) throw DimensionMismatch("MonomialBasis: need n >= 1, d >= 0");
    Exponent prefix;
    prefix.reserve(n);
    enumerate_exponents(n, d, prefix, exps_);
    index_.reserve(exps_.size() * 2);
    mult_.resize(static_cast<int>(exps_.size()));
    for (int i = 0; i < static_cast<int>(exps_.size()); ++i) {
        index_.emplace(key_of(exps_[i]), i);
        mult_[i] = multinomial_value(d, exps_[i]);
    }
}

std::uint64_t MonomialBasis::key_of(const Exponent& alpha) {
    // FNV-1a over the entries; collisions resolved by the exact comparison
    // in index_of.
    std::uint64_t h = 1469598103934665603ull;
    for (int a : alpha) {
        h ^= static_cast<std::uint64_t>(a);
        h *= 1099511628211ull;
    }
    return h;
}

int MonomialBasis::index_of(const Exponent& alpha) const {
    if (static_cast<int>(alpha.size()) != n_) return -1;
    auto it = index_.find(key_of(alpha));
    if (it == index_.end()) return -1;
    if (exps_[it->second] != alpha) {
        // hash collision: fall back to a linear scan
        for (int i = 0; i < size(); ++i)
            if (exps_[i] == alpha) return i;
        return -1;
    }
    return it->second;
}

std::shared_ptr<const MonomialBasis> MonomialBasis::get(int n, int d) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const MonomialBasis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{n, d}];
    if (!slot) slot = std::make_shared<MonomialBasis>(n, d);
    return slot;
}

HomPoly::HomPoly(std::shared_ptr<const MonomialBasis> basis,
                 Eigen::VectorXcd coeffs, FieldMode mode)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)), mode_(mode) {
    if (coeffs_.size() != basis_->size())
        throw DimensionMismatch("HomPoly: coefficient count does not match basis size");
    if (mode_ == FieldMode::Real) coeffs_ = coeffs_.real().cast<Complex>();
}

HomPoly HomPoly::zero(int n, int d, FieldMode mode) {
    auto basis = MonomialBasis::get(n, d);
    return HomPoly(basis, Eigen::VectorXcd::Zero(basis->size()), mode);
}

HomPoly HomPoly::operator+(const HomPoly& other) const {
    require_same_space(*this, other, "operator+");
    return HomPoly(basis_, coeffs_ + other.coeffs_, combine(mode_, other.mode_));
}

HomPoly HomPoly::operator-(const HomPoly& other) const {
    require_same_space(*this, other, "operator-");
    return HomPoly(basis_, coeffs_ - other.coeffs_, combine(mode_, other.mode_));
}

HomPoly HomPoly::operator*(Complex scalar) const {
    FieldMode mode = (mode_ == FieldMode::Real && scalar.imag() == 0.0)
                         ? FieldMode::Real
                         : FieldMode::Complex;
    return HomPoly(basis_, coeffs_ * scalar, mode);
}

Complex apolar(const HomPoly& P, const HomPoly& Q) {
    require_same_space(P, Q, "apolar");
    const auto& mult = P.basis().multinomials();
    Complex acc(0.0, 0.0);
    for (int i = 0; i < P.basis().size(); ++i)
        acc += mult[i] * std::conj(P.coeffs()[i]) * Q.coeffs()[i];
    return acc;
}

double apolar_norm(const HomPoly& P) {
    const double sq = P.basis().multinomials().dot(P.coeffs().cwiseAbs2());
    return std::sqrt(std::max(sq, 0.0));
}

double coeff_l2_norm(const HomPoly& P) {
    const double sq = P.basis()
                          .multinomials()
                          .cwiseAbs2()
                          .dot(P.coeffs().cwiseAbs2());
    return std::sqrt(std::max(sq, 0.0));
}

Complex eval(const HomPoly& P, const Eigen::VectorXcd& v) {
    if (v.size() != P.n())
        throw DimensionMismatch("eval: point length does not match variable count");
    const auto& basis = P.basis();
    Complex acc(0.0, 0.0);
    for (int idx = 0; idx < basis.size(); ++idx) {
        const Complex c = P.coeffs()[idx];
        if (c == Complex(0.0, 0.0)) continue;
        acc += basis.multinomial(idx) * c * monomial_power(v, basis.exponent(idx));
    }
    return acc;
}

Eigen::VectorXcd grad_eval(const HomPoly& P, const Eigen::VectorXcd& v) {
    if (v.size() != P.n())
        throw DimensionMismatch("grad_eval: point length does not match variable count");
    const auto& basis = P.basis();
    Eigen::VectorXcd g = Eigen::VectorXcd::Zero(P.n());
    for (int idx = 0; idx < basis.size(); ++idx) {
        const Complex c = P.coeffs()[idx];
        if (c == Complex(0.0, 0.0)) continue;
        const Exponent& a = basis.exponent(idx);
        const Complex scaled = basis.multinomial(idx) * c;
        for (int i = 0; i < P.n(); ++i) {
            if (a[i] == 0) continue;
            g[i] += scaled * static_cast<double>(a[i]) * monomial_power(v, a, i);
        }
    }
    return g;
}

Eigen::MatrixXcd hess_eval(const HomPoly& P, const Eigen::VectorXcd& v) {
    if (v.size() != P.n())
        throw DimensionMismatch("hess_eval: point length does not match variable count");
    const auto& basis = P.basis();
    const int n = P.n();
    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(n, n);
    for (int idx = 0; idx < basis.size(); ++idx) {
        const Complex c = P.coeffs()[idx];
        if (c == Complex(0.0, 0.0)) continue;
        const Exponent& a = basis.exponent(idx);
        const Complex scaled = basis.multinomial(idx) * c;
        for (int i = 0; i < n; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < n; ++j) {
                const int factor = a[i] * (a[j] - (i == j ? 1 : 0));
                if (factor <= 0) continue;
                H(i, j) += scaled * static_cast<double>(factor) *
                           monomial_power(v, a, i, j);
            }
        }
    }
    return H;
}

HomPoly conj_poly(const HomPoly& P) {
    return HomPoly(P.basis_ptr(), P.coeffs().conjugate(), P.mode());
}

HomPoly derivative(const HomPoly& P, int i) {
    if (i < 0 || i >= P.n()) throw DimensionMismatch("derivative: variable index out of range");
    if (P.d() < 1) throw UnsupportedDegree("derivative: degree must be >= 1");
    auto lower = MonomialBasis::get(P.n(), P.d() - 1);
    Eigen::VectorXcd q = Eigen::VectorXcd::Zero(lower->size());
    const double d = static_cast<double>(P.d());
    for (int idx = 0; idx < lower->size(); ++idx) {
        Exponent a = lower->exponent(idx);
        a[i] += 1;
        q[idx] = d * P.coeffs()[P.basis().index_of(a)];
    }
    return HomPoly(lower, std::move(q), P.mode());
}

HomPoly multiply_x(const HomPoly& P, int i) {
    if (i < 0 || i >= P.n()) throw DimensionMismatch("multiply_x: variable index out of range");
    auto upper = MonomialBasis::get(P.n(), P.d() + 1);
    Eigen::VectorXcd q = Eigen::VectorXcd::Zero(upper->size());
    const double dq = static_cast<double>(P.d() + 1);
    for (int idx = 0; idx < upper->size(); ++idx) {
        const Exponent& a = upper->exponent(idx);
        if (a[i] == 0) continue;
        Exponent b = a;
        b[i] -= 1;
        q[idx] = (static_cast<double>(a[i]) / dq) * P.coeffs()[P.basis().index_of(b)];
    }
    return HomPoly(upper, std::move(q), P.mode());
}

HomPoly veronese(const Eigen::VectorXcd& v, int d, FieldMode mode) {
    if (v.norm() == 0.0) throw ZeroVector("veronese: direction vector is zero");
    auto basis = MonomialBasis::get(static_cast<int>(v.size()), d);
    Eigen::VectorXcd p(basis->size());
    for (int idx = 0; idx < basis->size(); ++idx)
        p[idx] = monomial_power(v, basis->exponent(idx));
    return HomPoly(basis, std::move(p), mode);
}

HomPoly from_decomposition(const Eigen::VectorXd& w, const Eigen::MatrixXcd& V,
                           int d, FieldMode mode) {
    if (w.size() != V.cols())
        throw DimensionMismatch("from_decomposition: weight count does not match column count");
    auto basis = MonomialBasis::get(static_cast<int>(V.rows()), d);
    Eigen::VectorXcd p = Eigen::VectorXcd::Zero(basis->size());
    for (int j = 0; j < V.cols(); ++j) {
        const Eigen::VectorXcd vj = V.col(j);
        if (vj.norm() == 0.0) throw ZeroVector("from_decomposition: zero column");
        for (int idx = 0; idx < basis->size(); ++idx)
            p[idx] += w[j] * monomial_power(vj, basis->exponent(idx));
    }
    return HomPoly(basis, std::move(p), mode);
}

HomPoly entries_to_poly(int n, int d, const std::vector<TensorEntry>& entries,
                        FieldMode mode) {
    auto basis = MonomialBasis::get(n, d);
    Eigen::VectorXcd p = Eigen::VectorXcd::Zero(basis->size());
    std::vector<char> seen(basis->size(), 0);
    for (const auto& entry : entries) {
        if (static_cast<int>(entry.index.size()) != d)
            throw DimensionMismatch("entries_to_poly: index tuple length must equal the degree");
        Exponent alpha(n, 0);
        for (int i : entry.index) {
            if (i < 1 || i > n)
                throw DimensionMismatch("entries_to_poly: 1-based index out of range");
            alpha[i - 1] += 1;
        }
        const int idx = basis->index_of(alpha);
        if (seen[idx]) {
            if (std::abs(p[idx] - entry.value) > 1e-12)
                throw AsymmetricInput(
                    "entries_to_poly: permuted index tuples carry different values");
        } else {
            p[idx] = entry.value;
            seen[idx] = 1;
        }
    }
    return HomPoly(basis, std::move(p), mode);
}

int generic_rank(int n, int d) {
    if (d < 3) throw UnsupportedDegree("generic_rank: defined for degree >= 3");
    // binom(n+d-1, d) = dim of degree-d forms in n variables
    std::uint64_t dim = 1;
    for (int j = 1; j <= d; ++j)
        dim = dim * static_cast<std::uint64_t>(n - 1 + j) / j;
    int rg = static_cast<int>((dim + n - 1) / n);
    const bool exceptional = (d == 3 && n == 5) || (d == 4 && n == 3) ||
                             (d == 4 && n == 4) || (d == 4 && n == 5);
    return exceptional ? rg + 1 : rg;
}

HomPoly random_gaussian_poly(int n, int d, FieldMode mode, std::uint64_t seed) {
    Rng rng(seed);
    return random_gaussian_poly(n, d, mode, rng);
}

HomPoly random_gaussian_poly(int n, int d, FieldMode mode, Rng& rng) {
    auto basis = MonomialBasis::get(n, d);
    Eigen::VectorXcd p(basis->size());
    for (int idx = 0; idx < basis->size(); ++idx) {
        if (mode == FieldMode::Real) {
            p[idx] = rng.gaussian();
        } else {
            const double re = rng.gaussian();
            const double im = rng.gaussian();
            p[idx] = Complex(re, im);
        }
    }
    return HomPoly(basis, std::move(p), mode);
}

HomPoly scale_to_norm(const HomPoly& P, double eps) {
    if (eps <= 0.0) throw InvalidScale("scale_to_norm: target norm must be positive");
    const double norm = apolar_norm(P);
    if (norm == 0.0) throw ZeroPolynomial("scale_to_norm: zero polynomial");
    return P * Complex(eps / norm, 0.0);
}

}  // namespace sta
