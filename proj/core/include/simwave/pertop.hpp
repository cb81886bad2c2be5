#pragma once

#include <vector>

#include "simwave/freeop.hpp"
#include "simwave/grid.hpp"
#include "simwave/nonlinearity.hpp"
#include "simwave/specfun.hpp"

namespace simwave {

/// L' u = (p c0 int_0^rho u2, 0): the compact perturbation.
StateVector apply_lprime(const NonlinearityConfig& cfg, const StateVector& state);

/// L = L0 + L'.
StateVector apply_l(const NonlinearityConfig& cfg, const StateVector& state);

/// One localized eigenvalue candidate.
struct EigenvalueReport {
    Complex lambda;
    enum class Method { gamma_pole, shooting } method = Method::gamma_pole;
    double residual = 0.0;
};

/// Point eigenvalues from the Gamma-pole quantization condition
///   a+1-c = -k  or  b+1-c = -k,  k = 0..50,
/// restricted to Re lambda > half_plane_cut, sorted by descending real part.
/// Roots in Re lambda > 1/2 are verified through |c1| evaluated as a limit
/// with reciprocal_gamma; for the remaining roots the residual is the
/// distance of the parameter to the nearest admissible pole.
std::vector<EigenvalueReport> quantization_roots(const NonlinearityConfig& cfg,
                                                 double half_plane_cut);

/// rho = 0 trace of the solution analytic at rho = 1, via the closed form
/// 2F1(a, b; a+b+1-c; 1). Vanishes exactly on sigma_p(L) in Re lambda > 1/2.
/// Throws degenerate_case_error within 1e-6 of lambda = 1.
Complex shoot_mismatch(SpectralParameter lambda, const NonlinearityConfig& cfg);

/// Independent route: integrate (t0(lambda) - p c0) u = 0 from rho = 1-eps
/// toward 0 with a Frobenius start and return u(0). Agrees with
/// shoot_mismatch in zero locations.
Complex shoot_mismatch_ode(SpectralParameter lambda, const NonlinearityConfig& cfg,
                           double eps = 1e-6);

/// Bisection on the sign of Re shoot_mismatch_ode over
/// [guess - half_width, guess + half_width]. Throws numerical_error when the
/// mismatch does not change sign across the window.
double relocate_root_by_shooting(const NonlinearityConfig& cfg, double guess,
                                 double half_width = 0.1);

/// The gauge mode: eigenfunction_from_profile(u, lambda0) for the pencil
/// kernel element u at lambda0 obtained by shooting, normalized so that
/// comp2(0) = 1. For p = 3 this is exactly (2 rho, 1).
StateVector gauge_mode_profile(const NonlinearityConfig& cfg, const GridPtr& grid);

/// Pencil kernel profile at an eigenvalue lambda with Re lambda < 1/2:
/// integrates (t0 - p c0) u = 0 from rho = 0 with u(0) = 0, u'(0) = 1,
/// sampled on the grid. Used to build eigenfunctions below the half plane.
GridFunction pencil_kernel_from_origin(SpectralParameter lambda, const NonlinearityConfig& cfg,
                                       const GridPtr& grid);

} // namespace simwave
