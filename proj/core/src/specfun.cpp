#include "simwave/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "simwave/errors.hpp"

namespace simwave {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_nonpositive_integer(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

// Lanczos, g = 607/128, 15 terms (Godfrey's coefficients).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

// Valid for Re z >= 1/2.
Complex gamma_lanczos(Complex z) {
    const Complex x = z - 1.0;
    Complex acc = kLanczos[0];
    for (size_t k = 1; k < kLanczos.size(); ++k) acc += kLanczos[k] / (x + static_cast<double>(k));
    const Complex t = x + kLanczosG + 0.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, x + 0.5) * std::exp(-t) * acc;
}

} // namespace

Complex gamma_complex(Complex z) {
    if (is_nonpositive_integer(z))
        throw degenerate_case_error("gamma_complex: pole at nonpositive integer");
    if (z.real() >= 0.5) return gamma_lanczos(z);
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return kPi / (std::sin(kPi * z) * gamma_lanczos(1.0 - z));
}

Complex reciprocal_gamma(Complex z) {
    if (is_nonpositive_integer(z)) return Complex(0.0);
    if (z.real() >= 0.5) return 1.0 / gamma_lanczos(z);
    return std::sin(kPi * z) * gamma_lanczos(1.0 - z) / kPi;
}

namespace {

// Direct series, |z| < 1. Stops once |term| < 1e-16 |sum| three times in a row.
Complex series_2f1(Complex a, Complex b, Complex c, Complex z) {
    Complex sum = 1.0;
    Complex term = 1.0;
    int quiet = 0;
    for (int k = 0; k < 100000; ++k) {
        const double dk = static_cast<double>(k);
        term *= (a + dk) * (b + dk) / ((c + dk) * (dk + 1.0)) * z;
        sum += term;
        if (std::abs(term) < 1e-16 * std::abs(sum)) {
            if (++quiet >= 3) return sum;
        } else {
            quiet = 0;
        }
    }
    throw no_convergence_error("hyp2f1: series did not converge within 1e5 terms");
}

bool near_integer(Complex z, double tol) {
    return std::abs(z.imag()) < tol && std::abs(z.real() - std::round(z.real())) < tol;
}

} // namespace

Complex gauss_sum_2f1(const HypergeometricParams& p) {
    const Complex cab = p.c - p.a - p.b;
    if (cab.real() <= 0.0)
        throw std::domain_error("gauss_sum_2f1: needs Re(c-a-b) > 0");
    return gamma_complex(p.c) * gamma_complex(cab) * reciprocal_gamma(p.c - p.a) *
           reciprocal_gamma(p.c - p.b);
}

Complex hyp2f1(const HypergeometricParams& p, Complex z) {
    if (is_nonpositive_integer(p.c))
        throw std::domain_error("hyp2f1: c is a nonpositive integer");
    if (z == Complex(0.0)) return 1.0;
    if (std::abs(z) <= 0.5) return series_2f1(p.a, p.b, p.c, z);

    if (z.imag() != 0.0 || z.real() < 0.0 || z.real() > 1.0)
        throw std::domain_error("hyp2f1: only z in [0,1] is supported");

    const Complex cab = p.c - p.a - p.b;
    if (z.real() == 1.0 || 1.0 - z.real() < 1e-14) return gauss_sum_2f1(p);

    // z in (1/2, 1): connection to argument 1-z
    if (near_integer(cab, kDegenerateGuard))
        throw degenerate_case_error("hyp2f1: logarithmic case c-a-b in Z");
    const Complex w = 1.0 - z;
    const Complex first = gamma_complex(p.c) * gamma_complex(cab) * reciprocal_gamma(p.c - p.a) *
                          reciprocal_gamma(p.c - p.b) *
                          series_2f1(p.a, p.b, p.a + p.b - p.c + 1.0, w);
    const Complex second = std::pow(w, cab) * gamma_complex(p.c) * gamma_complex(-cab) *
                           reciprocal_gamma(p.a) * reciprocal_gamma(p.b) *
                           series_2f1(p.c - p.a, p.c - p.b, cab + 1.0, w);
    return first + second;
}

HypergeometricParams hypergeom_params(Complex lambda, const NonlinearityConfig& cfg) {
    const double s = std::sqrt(1.0 + 4.0 * cfg.pc0());
    HypergeometricParams p;
    p.a = ((2.0 * lambda - 1.0) - s) / 4.0;
    p.b = ((2.0 * lambda - 1.0) + s) / 4.0;
    p.c = 0.5;
    return p;
}

Complex connection_coefficient_c1(Complex lambda, const NonlinearityConfig& cfg) {
    if (std::abs(lambda - 1.0) < kDegenerateGuard)
        throw degenerate_case_error("connection_coefficient_c1: degenerate case lambda = 1");
    const HypergeometricParams p = hypergeom_params(lambda, cfg);
    return gamma_complex(p.a + p.b + 1.0 - p.c) * gamma_complex(1.0 - p.c) *
           reciprocal_gamma(p.a + 1.0 - p.c) * reciprocal_gamma(p.b + 1.0 - p.c);
}

} // namespace simwave
