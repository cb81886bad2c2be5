#pragma once

#include <complex>
#include <memory>
#include <vector>

namespace simwave {

using Complex = std::complex<double>;

/// Uniform grid on [0,1] with nodes rho_j = j/(n-1).
/// Endpoints are exactly 0 and 1; n >= 16.
struct RhoGrid {
    int n;
    double spacing;
    std::vector<double> nodes;

    explicit RhoGrid(int n_nodes);
};

using GridPtr = std::shared_ptr<const RhoGrid>;

/// Default resolution: spacing 1/1024.
inline constexpr int kDefaultGridSize = 1025;

GridPtr make_uniform_grid(int n_nodes);

/// Complex-valued samples of a scalar field on a RhoGrid.
struct GridFunction {
    GridPtr grid;
    std::vector<Complex> values;

    GridFunction() = default;
    explicit GridFunction(GridPtr g) : grid(std::move(g)), values(grid->n, Complex(0.0)) {}
    GridFunction(GridPtr g, std::vector<Complex> v);

    int size() const { return grid ? grid->n : 0; }
    Complex& operator[](int j) { return values[static_cast<size_t>(j)]; }
    const Complex& operator[](int j) const { return values[static_cast<size_t>(j)]; }
};

/// Sample a callable rho -> Complex on the grid.
template <class F>
GridFunction sample(const GridPtr& g, F&& f) {
    GridFunction out(g);
    for (int j = 0; j < g->n; ++j) out[j] = f(g->nodes[static_cast<size_t>(j)]);
    return out;
}

/// The evolution unknown: a pair (phi1, phi2) of fields on a shared grid.
/// States in the generator domain satisfy comp1(0) = 0.
struct StateVector {
    GridFunction comp1;
    GridFunction comp2;

    StateVector() = default;
    StateVector(GridFunction c1, GridFunction c2);
    explicit StateVector(const GridPtr& g) : comp1(g), comp2(g) {}

    const GridPtr& grid() const { return comp1.grid; }
};

// ---- grid checks -----------------------------------------------------------

/// Throws std::invalid_argument unless a and b live on compatible grids
/// (same n and spacing); a programming error, not a numerical one.
void require_same_grid(const GridFunction& a, const GridFunction& b);

bool all_finite(const GridFunction& f);
bool all_finite(const StateVector& s);

// ---- elementwise algebra ---------------------------------------------------

GridFunction operator+(const GridFunction& a, const GridFunction& b);
GridFunction operator-(const GridFunction& a, const GridFunction& b);
GridFunction operator*(Complex c, const GridFunction& a);
StateVector operator+(const StateVector& a, const StateVector& b);
StateVector operator-(const StateVector& a, const StateVector& b);
StateVector operator*(Complex c, const StateVector& a);

// ---- calculus on the grid --------------------------------------------------

/// Running integral rho -> int_0^rho f, composite trapezoid.
/// Result at rho_0 = 0 is exactly 0; order 2.
GridFunction cumulative_integral(const GridFunction& f);

/// Order-2 differentiation: central stencils in the interior, one-sided
/// 3-point stencils at the endpoints.
GridFunction derivative(const GridFunction& f);

/// Full-interval quadrature of a sampled integrand, composite Simpson
/// (3/8 closure on the last panel when the interval count is odd).
double integrate(const std::vector<double>& integrand, double spacing);

/// L2(0,1) norm of a scalar field.
double scalar_l2_norm(const GridFunction& f);

/// Norm on H = L2(0,1)^2: (int |phi1|^2 + |phi2|^2)^(1/2).
double l2_norm(const StateVector& state);

/// Same, but integrating only over [0, 1 - trim_nodes*spacing]. Used by
/// diagnostics that must ignore the under-resolved layer at rho = 1 where
/// eigenfunction derivatives are unbounded.
double l2_norm_interior(const StateVector& state, int trim_nodes);

// ---- field reconstruction and functionals ----------------------------------

/// phi(tau, rho) = e^{-tau} int_0^rho phi2.
GridFunction reconstruct_phi(const GridFunction& phi2, double tau);

/// Energy of the original field in the backward lightcone:
///   E_phi(tau) = e^{-tau} int_0^1 [ |phi1|^2 + |phi2 - e^tau phi/rho|^2 ].
/// The rho = 0 integrand uses the limit phi/rho -> e^{-tau} phi2(0).
double energy(const StateVector& state, double tau);

/// int_0^1 |phi/rho|^2 / (e^{-2 tau} ||phi2||^2), bounded by the Hardy
/// constant 4. Throws std::invalid_argument on zero input.
double hardy_ratio(const GridFunction& phi2, double tau);

} // namespace simwave
