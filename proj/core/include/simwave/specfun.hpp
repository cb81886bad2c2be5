#pragma once

#include <complex>

#include "simwave/nonlinearity.hpp"

namespace simwave {

using Complex = std::complex<double>;

// ---- Gamma -----------------------------------------------------------------

/// Complex Gamma function, Lanczos approximation with reflection for
/// Re z < 1/2. Relative error below ~1e-13 for moderate |z|.
/// Throws degenerate_case_error at the poles (nonpositive integers).
Complex gamma_complex(Complex z);

/// Entire reciprocal 1/Gamma. Returns exactly 0 at nonpositive integers.
Complex reciprocal_gamma(Complex z);

// ---- Gauss hypergeometric 2F1 ----------------------------------------------

/// Parameters of 2F1; c must not be a nonpositive integer when the series
/// is started at z = 0.
struct HypergeometricParams {
    Complex a;
    Complex b;
    Complex c;
};

/// 2F1(a,b;c;z) for z in [0,1]:
///  - direct series on |z| <= 1/2,
///  - z -> 1-z connection pair on (1/2, 1),
///  - Gauss summation at z = 1 (requires Re(c-a-b) > 0).
/// Throws degenerate_case_error when the connection formula degenerates
/// (c-a-b within 1e-6 of an integer) and no_convergence_error when the
/// series needs more than 1e5 terms.
Complex hyp2f1(const HypergeometricParams& params, Complex z);

/// 2F1(a,b;c;1) via the Gamma closed form; zeros are exact because the
/// denominator is assembled from reciprocal_gamma.
Complex gauss_sum_2f1(const HypergeometricParams& params);

// ---- quantization-condition building blocks ---------------------------------

/// Parameters of the hypergeometric reduction of the perturbed pencil:
///   a = (-1 + 2 lambda - s)/4,  b = (-1 + 2 lambda + s)/4,  c = 1/2,
/// with s = sqrt(1 + 4 p c0) (principal branch).
HypergeometricParams hypergeom_params(Complex lambda, const NonlinearityConfig& cfg);

/// Connection coefficient
///   c1 = Gamma(a+b+1-c) Gamma(1-c) / (Gamma(a+1-c) Gamma(b+1-c)),
/// evaluated as a product with reciprocal_gamma so the quantized zeros are
/// exact. Throws degenerate_case_error within 1e-6 of lambda = 1.
Complex connection_coefficient_c1(Complex lambda, const NonlinearityConfig& cfg);

/// Guard half-width around the degenerate lambda = 1 case.
inline constexpr double kDegenerateGuard = 1e-6;

} // namespace simwave
