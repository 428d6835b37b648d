#ifndef STA_RANDOM_HPP
#define STA_RANDOM_HPP

#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace sta {

// Deterministic Gaussian source. std::normal_distribution is
// implementation-defined, so uniforms are built from raw mt19937_64 output
// and normals via Box-Muller; streams are reproducible for a fixed seed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Uniform on [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.14159265358979323846 * uniform();
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    Eigen::VectorXd gaussian_vector(int m) {
        Eigen::VectorXd x(m);
        for (int i = 0; i < m; ++i) x[i] = gaussian();
        return x;
    }

    // Real and imaginary parts are independent standard normals.
    Eigen::VectorXcd gaussian_complex_vector(int m) {
        Eigen::VectorXcd x(m);
        for (int i = 0; i < m; ++i) {
            const double re = gaussian();
            const double im = gaussian();
            x[i] = std::complex<double>(re, im);
        }
        return x;
    }

  private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace sta

#endif
