#include "simwave/freeop.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "simwave/errors.hpp"

#include <complex>
#define LAPACK_COMPLEX_CPP
#include <lapacke.h>

namespace simwave {

StateVector apply_l0(const StateVector& state) {
    const GridFunction d1 = derivative(state.comp1);
    const GridFunction d2 = derivative(state.comp2);
    StateVector out(state.grid());
    const auto& rho = state.grid()->nodes;
    for (int j = 0; j < d1.size(); ++j) {
        out.comp1[j] = -rho[static_cast<size_t>(j)] * d1[j] + d2[j];
        out.comp2[j] = d1[j] - rho[static_cast<size_t>(j)] * d2[j];
    }
    return out;
}

GridFunction free_eigenprofile(SpectralParameter lambda, const GridPtr& grid) {
    if (lambda.real() >= 1.0)
        throw std::domain_error("free_eigenprofile: endpoint rho = 1 singular for Re lambda >= 1");
    const Complex expo = 1.0 - lambda;
    GridFunction u(grid);
    for (int j = 0; j < grid->n; ++j) {
        const double rho = grid->nodes[static_cast<size_t>(j)];
        u[j] = std::pow(Complex(1.0 - rho), expo) - std::pow(Complex(1.0 + rho), expo);
    }
    u[0] = 0.0;
    return u;
}

StateVector eigenfunction_from_profile(const GridFunction& u, SpectralParameter lambda) {
    double scale = 0.0;
    for (const Complex& v : u.values) scale = std::max(scale, std::abs(v));
    if (std::abs(u[0]) > 1e-8 * scale && scale > 0.0)
        throw std::invalid_argument("eigenfunction_from_profile: profile must vanish at rho = 0");
    const GridFunction du = derivative(u);
    StateVector out(u.grid);
    const auto& rho = u.grid->nodes;
    for (int j = 0; j < u.size(); ++j) {
        out.comp1[j] = rho[static_cast<size_t>(j)] * du[j] + (lambda - 1.0) * u[j];
        out.comp2[j] = du[j];
    }
    out.comp1[0] = 0.0;
    return out;
}

bool is_free_eigenvalue(SpectralParameter lambda) { return lambda.real() < 0.5; }

GridFunction apply_B(SpectralParameter lambda, const StateVector& f) {
    const GridFunction integral = cumulative_integral(f.comp2);
    GridFunction out(f.grid());
    const auto& rho = f.grid()->nodes;
    for (int j = 0; j < out.size(); ++j)
        out[j] = f.comp1[j] + rho[static_cast<size_t>(j)] * f.comp2[j] + lambda * integral[j];
    return out;
}

namespace {

// Banded storage for zgbtrf/zgbtrs: kl = 2 (Frobenius row reaches u_{n-3}),
// ku = 1, column-major with leading dimension 2*kl + ku + 1.
struct PencilSystem {
    static constexpr lapack_int kl = 2;
    static constexpr lapack_int ku = 1;
    lapack_int n = 0;
    lapack_int ldab = 2 * kl + ku + 1;
    std::vector<Complex> ab;
    std::vector<lapack_int> ipiv;

    Complex& at(lapack_int i, lapack_int j) {
        return ab[static_cast<size_t>(j) * static_cast<size_t>(ldab) +
                  static_cast<size_t>(kl + ku + i - j)];
    }
};

PencilSystem assemble_pencil(SpectralParameter lambda, const RhoGrid& grid, double shift) {
    PencilSystem sys;
    sys.n = grid.n;
    sys.ab.assign(static_cast<size_t>(sys.ldab) * static_cast<size_t>(sys.n), Complex(0.0));
    sys.ipiv.resize(static_cast<size_t>(sys.n));
    const double h = grid.spacing;
    const Complex q = lambda * (lambda - 1.0) - shift;

    sys.at(0, 0) = 1.0; // u(0) = 0
    for (lapack_int j = 1; j + 1 < sys.n; ++j) {
        const double rho = grid.nodes[static_cast<size_t>(j)];
        const double w = 1.0 - rho * rho;
        sys.at(j, j - 1) = -w / (h * h) - lambda * rho / h;
        sys.at(j, j) = 2.0 * w / (h * h) + q;
        sys.at(j, j + 1) = -w / (h * h) + lambda * rho / h;
    }
    const lapack_int m = sys.n - 1;
    sys.at(m, m) = 3.0 * lambda / h + q;
    sys.at(m, m - 1) = -4.0 * lambda / h;
    sys.at(m, m - 2) = lambda / h;
    return sys;
}

} // namespace

GridFunction solve_T0(SpectralParameter lambda, const GridFunction& g, double pc0_shift) {
    if (!all_finite(g)) throw std::invalid_argument("solve_T0: non-finite right-hand side");
    const lapack_int n = g.size();
    PencilSystem sys = assemble_pencil(lambda, *g.grid, pc0_shift);

    const double anorm = LAPACKE_zlangb(LAPACK_COL_MAJOR, '1', n, PencilSystem::kl,
                                        PencilSystem::ku, sys.ab.data(), sys.ldab);
    lapack_int info = LAPACKE_zgbtrf(LAPACK_COL_MAJOR, n, n, PencilSystem::kl, PencilSystem::ku,
                                     sys.ab.data(), sys.ldab, sys.ipiv.data());
    if (info > 0)
        throw near_singular_error("solve_T0: pencil exactly singular at this lambda",
                                  std::numeric_limits<double>::infinity());
    if (info < 0) throw std::runtime_error("solve_T0: invalid LAPACK argument");

    double rcond = 0.0;
    info = LAPACKE_zgbcon(LAPACK_COL_MAJOR, '1', n, PencilSystem::kl, PencilSystem::ku,
                          sys.ab.data(), sys.ldab, sys.ipiv.data(), anorm, &rcond);
    if (info != 0) throw std::runtime_error("solve_T0: condition estimate failed");
    if (rcond == 0.0 || 1.0 / rcond > kPencilConditionLimit)
        throw near_singular_error("solve_T0: lambda at or near a pencil eigenvalue",
                                  rcond > 0.0 ? 1.0 / rcond
                                              : std::numeric_limits<double>::infinity());

    std::vector<Complex> rhs(g.values);
    rhs[0] = 0.0;
    info = LAPACKE_zgbtrs(LAPACK_COL_MAJOR, 'N', n, PencilSystem::kl, PencilSystem::ku, 1,
                          sys.ab.data(), sys.ldab, sys.ipiv.data(), rhs.data(), n);
    if (info != 0) throw std::runtime_error("solve_T0: banded solve failed");
    return GridFunction(g.grid, std::move(rhs));
}

StateVector resolvent_l0(SpectralParameter lambda, const StateVector& f) {
    if (lambda.real() <= 0.5)
        throw std::domain_error("resolvent_l0: requires Re lambda > 1/2");
    const GridFunction w = solve_T0(lambda, apply_B(lambda, f), 0.0);
    const GridFunction dw = derivative(w);
    const GridFunction integral = cumulative_integral(f.comp2);
    StateVector out(f.grid());
    const auto& rho = f.grid()->nodes;
    for (int j = 0; j < w.size(); ++j) {
        out.comp1[j] = rho[static_cast<size_t>(j)] * dw[j] + (lambda - 1.0) * w[j] - integral[j];
        out.comp2[j] = dw[j];
    }
    return out;
}

T0BoundSides estimate_T0_bound(SpectralParameter lambda, const StateVector& f) {
    if (lambda.real() <= 0.5)
        throw std::domain_error("estimate_T0_bound: requires Re lambda > 1/2");
    if (std::abs(lambda - 1.0) < 1e-12)
        throw std::domain_error("estimate_T0_bound: lambda = 1 excluded");
    T0BoundSides sides;
    const GridFunction w = solve_T0(lambda, apply_B(lambda, f), 0.0);
    sides.lhs = scalar_l2_norm(w);
    sides.rhs = (2.0 / (lambda.real() - 0.5) + 1.0) / std::abs(lambda - 1.0) * l2_norm(f);
    return sides;
}

} // namespace simwave
