#pragma once

#include "simwave/grid.hpp"

namespace simwave {

/// Complex number probing the spectrum.
using SpectralParameter = Complex;

// ---- the free generator L0 --------------------------------------------------

/// Formal expression l0 u = (-rho u1' + u2', u1' - rho u2') with the grid
/// derivative. States in the domain satisfy comp1(0) = 0.
StateVector apply_l0(const StateVector& state);

/// Explicit kernel element of the pencil:
///   u0(rho, lambda) = (1-rho)^(1-lambda) - (1+rho)^(1-lambda),
/// principal branches, u0(0) = 0 exactly. Requires Re lambda < 1 so the
/// value at the node rho = 1 is finite.
GridFunction free_eigenprofile(SpectralParameter lambda, const GridPtr& grid);

/// Lift a pencil kernel element to a state:
///   u1 = rho u' + (lambda-1) u,  u2 = u'   (grid derivative).
StateVector eigenfunction_from_profile(const GridFunction& u, SpectralParameter lambda);

/// Point spectrum of L0 is the open half plane Re lambda < 1/2.
bool is_free_eigenvalue(SpectralParameter lambda);

/// B(lambda) f = f1 + rho f2 + lambda int_0^rho f2.
GridFunction apply_B(SpectralParameter lambda, const StateVector& f);

/// Solve (t0(lambda) - pc0_shift) u = g with u(0) = 0 and the Frobenius
/// closure at the regular singular point rho = 1:
///   2 lambda u'(1) + (lambda(lambda-1) - pc0_shift) u(1) = g(1).
/// Second-order finite differences, banded LU with partial pivoting.
/// Throws near_singular_error when the condition estimate exceeds 1e10
/// (lambda at or near a pencil eigenvalue).
GridFunction solve_T0(SpectralParameter lambda, const GridFunction& g, double pc0_shift);

/// Resolvent of L0 for Re lambda > 1/2:
///   R(lambda) f = ( rho w' + (lambda-1) w - int_0^rho f2 ,  w' ),
/// where w = T0(lambda)^{-1} B(lambda) f.
StateVector resolvent_l0(SpectralParameter lambda, const StateVector& f);

/// Both sides of the scalar resolvent estimate:
///   lhs = || T0^{-1}(lambda) B(lambda) f ||_L2,
///   rhs = 1/|lambda-1| (2/(Re lambda - 1/2) + 1) ||f||.
struct T0BoundSides {
    double lhs;
    double rhs;
};
T0BoundSides estimate_T0_bound(SpectralParameter lambda, const StateVector& f);

/// Condition-estimate threshold for pencil solves.
inline constexpr double kPencilConditionLimit = 1e10;

} // namespace simwave
