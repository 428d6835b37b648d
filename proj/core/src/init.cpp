#include "sta/init.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "sta/errors.hpp"
#include "sta/hankel.hpp"
#include "sta/random.hpp"

namespace sta {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Eigen::VectorXcd random_unit_direction(Rng& rng, int n, FieldMode mode) {
    Eigen::VectorXcd v = (mode == FieldMode::Real)
                             ? rng.gaussian_vector(n).cast<Complex>().eval()
                             : rng.gaussian_complex_vector(n);
    double nrm = v.norm();
    if (nrm == 0.0) return random_unit_direction(rng, n, mode);
    return v / nrm;
}

// Least-squares weights for P ~ sum w_j Phi(v_j): Gram(j,l) = <Phi(v_j),
// Phi(v_l)> = (v_j^* v_l)^d and the right side is <Phi(v_j), P> = P(conj v_j).
Eigen::VectorXcd ls_weights(const HomPoly& P, const Eigen::MatrixXcd& V) {
    int r = static_cast<int>(V.cols());
    int d = P.d();
    Eigen::MatrixXcd gram(r, r);
    Eigen::VectorXcd rhs(r);
    for (int j = 0; j < r; ++j) {
        for (int l = 0; l < r; ++l) {
            Complex s = (V.col(j).adjoint() * V.col(l)).value();
            gram(j, l) = std::pow(s, d);
        }
        rhs[j] = eval(P, V.col(j).conjugate());
    }
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(gram);
    return cod.solve(rhs);
}

// Realifies a direction in real mode; replaces it with a random direction
// when the real part vanishes.
Eigen::VectorXcd realify(const Eigen::VectorXcd& v, Rng& rng,
                         std::vector<std::string>& warnings) {
    Eigen::VectorXd re = v.real();
    double nrm = re.norm();
    if (nrm < 1e-12) {
        warnings.push_back("direction collapsed under realification; replaced by a random one");
        return random_unit_direction(rng, static_cast<int>(v.size()), FieldMode::Real);
    }
    return (re / nrm).cast<Complex>();
}

// Fits weights to the unit directions in V and applies the field-specific
// normal form: real weights in real mode, nonnegative weights with phases
// folded into the directions in complex mode.
Decomposition assemble(const HomPoly& P, Eigen::MatrixXcd V) {
    Eigen::VectorXcd wls = ls_weights(P, V);
    int r = static_cast<int>(V.cols());
    Eigen::VectorXd w(r);
    if (P.mode() == FieldMode::Real) {
        w = wls.real();
        V = V.real().cast<Complex>();
    } else {
        for (int j = 0; j < r; ++j) {
            w[j] = std::abs(wls[j]);
            if (w[j] > 0.0) {
                double phi = std::arg(wls[j]) / static_cast<double>(P.d());
                V.col(j) *= std::polar(1.0, phi);
            }
        }
    }
    return Decomposition{w, std::move(V), P.mode()};
}

double init_residual(const HomPoly& P, const Decomposition& p) {
    HomPoly approx = from_decomposition(p.w, p.V, P.d(), P.mode());
    return apolar_norm(approx - P);
}

// Deterministic rank-1 point: the leading left singular vector of the first
// catalecticant with a weight read off by evaluation.
std::pair<Decomposition, InitReport> theta_rank1(const HomPoly& P) {
    Eigen::VectorXcd u = theta(P);
    Eigen::VectorXd w(1);
    Eigen::MatrixXcd V(P.n(), 1);
    std::vector<std::string> warnings;
    if (P.mode() == FieldMode::Real) {
        Eigen::VectorXd re = u.real();
        double nrm = re.norm();
        if (nrm < 1e-12) {
            throw DegenerateInitialPoint("leading singular vector has no real part");
        }
        V.col(0) = (re / nrm).cast<Complex>();
        w[0] = std::real(eval(P, V.col(0)));
    } else {
        Complex z = eval(P, u.conjugate());
        w[0] = std::abs(z);
        if (w[0] > 0.0) {
            u *= std::polar(1.0, std::arg(z) / static_cast<double>(P.d()));
        }
        V.col(0) = u;
    }
    Decomposition p{w, V, P.mode()};
    InitReport report{"shd", init_residual(P, p), kInf, warnings};
    return {p, report};
}

struct PencilCandidate {
    Decomposition p;
    double residual;
    double gap;
    std::vector<std::string> warnings;
};

// One pencil draw: contract the shifted catalecticant slices with a random
// vector, reduce through its truncated SVD, and read directions off the
// eigenvectors of a second random contraction via Rayleigh quotients.
PencilCandidate pencil_draw(const HomPoly& P, int r, const std::vector<Eigen::MatrixXcd>& slices,
                            Rng& rng) {
    int n = P.n();
    int d = P.d();
    FieldMode mode = P.mode();
    std::vector<std::string> warnings;

    Eigen::VectorXcd a = random_unit_direction(rng, n, mode);
    Eigen::MatrixXcd Ha = Eigen::MatrixXcd::Zero(slices[0].rows(), slices[0].cols());
    for (int i = 0; i < n; ++i) Ha += a[i] * slices[i];

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(Ha, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& sv = svd.singularValues();
    double smax = sv.size() > 0 ? sv[0] : 0.0;
    int r_eff = 0;
    for (int j = 0; j < std::min<int>(r, static_cast<int>(sv.size())); ++j) {
        if (sv[j] > 1e-12 * smax) ++r_eff;
    }
    if (r_eff < r) {
        warnings.push_back("pencil contraction is rank deficient (" + std::to_string(r_eff) +
                           " of " + std::to_string(r) +
                           "); padding with random directions");
    }

    std::vector<Eigen::VectorXcd> dirs;
    double gap = kInf;
    if (r_eff > 0) {
        Eigen::MatrixXcd U = svd.matrixU().leftCols(r_eff);
        Eigen::MatrixXcd W = svd.matrixV().leftCols(r_eff);
        Eigen::VectorXd sinv = sv.head(r_eff).cwiseInverse();

        std::vector<Eigen::MatrixXcd> M(n);
        for (int i = 0; i < n; ++i) {
            M[i] = U.adjoint() * slices[i] * W * sinv.asDiagonal();
        }

        // A random combination of the reduced slices is simultaneously
        // diagonalisable at exact points; in real mode retry the draw when
        // complex eigenvalue pairs appear.
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig;
        bool real_ok = false;
        for (int attempt = 0; attempt < 5; ++attempt) {
            Eigen::VectorXcd b = random_unit_direction(rng, n, mode);
            Eigen::MatrixXcd Mb = Eigen::MatrixXcd::Zero(r_eff, r_eff);
            for (int i = 0; i < n; ++i) Mb += b[i] * M[i];
            eig.compute(Mb);
            if (mode == FieldMode::Complex) break;
            double imag_mag = eig.eigenvalues().imag().cwiseAbs().maxCoeff();
            double scale = 1.0 + eig.eigenvalues().cwiseAbs().maxCoeff();
            if (imag_mag <= 1e-9 * scale) {
                real_ok = true;
                break;
            }
        }
        if (mode == FieldMode::Real && !real_ok) {
            warnings.push_back(
                "pencil eigenvalues stayed complex after retries; realifying directions");
        }

        const Eigen::VectorXcd& lam = eig.eigenvalues();
        for (int i = 0; i < r_eff; ++i) {
            for (int j = i + 1; j < r_eff; ++j) {
                gap = std::min(gap, std::abs(lam[i] - lam[j]));
            }
        }

        for (int j = 0; j < r_eff; ++j) {
            Eigen::VectorXcd e = eig.eigenvectors().col(j);
            Complex denom = (e.adjoint() * e).value();
            Eigen::VectorXcd v(n);
            for (int i = 0; i < n; ++i) {
                v[i] = (e.adjoint() * M[i] * e).value() / denom;
            }
            double nrm = v.norm();
            if (nrm < 1e-12) {
                warnings.push_back("degenerate pencil direction; replaced by a random one");
                v = random_unit_direction(rng, n, mode);
            } else {
                v = phase_fix(v / nrm);
            }
            if (mode == FieldMode::Real) v = realify(v, rng, warnings);
            dirs.push_back(v);
        }
    }
    while (static_cast<int>(dirs.size()) < r) {
        dirs.push_back(random_unit_direction(rng, n, mode));
    }

    Eigen::MatrixXcd V(n, r);
    for (int j = 0; j < r; ++j) V.col(j) = dirs[j];
    Decomposition p = assemble(P, std::move(V));
    double residual = init_residual(P, p);
    (void)d;
    return {std::move(p), residual, gap, std::move(warnings)};
}

}  // namespace

std::pair<Decomposition, InitReport> shd_init(const HomPoly& P, int r, std::uint64_t seed,
                                              int pencil_draws) {
    if (P.d() < 3) {
        throw InsufficientDegree("shifted catalecticant initialisation needs degree >= 3, got " +
                                 std::to_string(P.d()));
    }
    if (r < 1) throw DimensionMismatch("rank must be positive");
    if (r == 1) return theta_rank1(P);

    int n = P.n();
    int d = P.d();
    int k = (d - 1 + 1) / 2;  // ceil((d-1)/2)
    auto rows = MonomialBasis::get(n, k);
    auto cols = MonomialBasis::get(n, d - k - 1);
    long cap = std::min(rows->size(), cols->size());
    if (r > cap) {
        throw InsufficientDegree("rank " + std::to_string(r) +
                                 " exceeds the shifted catalecticant dimension " +
                                 std::to_string(cap));
    }

    // H_i(alpha, beta) = p_{alpha + beta + e_i}.
    std::vector<Eigen::MatrixXcd> slices(n);
    auto full = P.basis_ptr();
    for (int i = 0; i < n; ++i) {
        Eigen::MatrixXcd H(rows->size(), cols->size());
        for (long a = 0; a < rows->size(); ++a) {
            Exponent idx = rows->exponent(a);
            idx[i] += 1;
            for (long b = 0; b < cols->size(); ++b) {
                Exponent sum = idx;
                const Exponent& beta = cols->exponent(b);
                for (int t = 0; t < n; ++t) sum[t] = idx[t] + beta[t];
                H(a, b) = P.coeffs()[full->index_of(sum)];
            }
        }
        slices[i] = std::move(H);
    }

    Rng rng(seed);
    PencilCandidate best;
    bool have = false;
    for (int draw = 0; draw < std::max(1, pencil_draws); ++draw) {
        PencilCandidate cand = pencil_draw(P, r, slices, rng);
        if (!have || cand.residual < best.residual) {
            best = std::move(cand);
            have = true;
        }
    }

    InitReport report{"shd", best.residual, best.gap, std::move(best.warnings)};
    return {std::move(best.p), report};
}

std::pair<Decomposition, InitReport> random_init(const HomPoly& P, int r,
                                                 std::uint64_t seed) {
    if (r < 1) throw DimensionMismatch("rank must be positive");
    Rng rng(seed);
    Eigen::MatrixXcd V(P.n(), r);
    for (int j = 0; j < r; ++j) V.col(j) = random_unit_direction(rng, P.n(), P.mode());
    Decomposition p = assemble(P, std::move(V));
    InitReport report{"random", init_residual(P, p), kInf, {}};
    return {std::move(p), report};
}

}  // namespace sta
