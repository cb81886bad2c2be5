#include "simwave/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace simwave {

RhoGrid::RhoGrid(int n_nodes) : n(n_nodes) {
    if (n < 16) throw std::invalid_argument("RhoGrid: need n >= 16 nodes");
    spacing = 1.0 / static_cast<double>(n - 1);
    nodes.resize(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) nodes[static_cast<size_t>(j)] = static_cast<double>(j) * spacing;
    nodes.front() = 0.0;
    nodes.back() = 1.0;
}

GridPtr make_uniform_grid(int n_nodes) { return std::make_shared<const RhoGrid>(n_nodes); }

GridFunction::GridFunction(GridPtr g, std::vector<Complex> v)
    : grid(std::move(g)), values(std::move(v)) {
    if (static_cast<int>(values.size()) != grid->n)
        throw std::invalid_argument("GridFunction: value count does not match grid");
}

StateVector::StateVector(GridFunction c1, GridFunction c2)
    : comp1(std::move(c1)), comp2(std::move(c2)) {
    require_same_grid(comp1, comp2);
}

void require_same_grid(const GridFunction& a, const GridFunction& b) {
    if (!a.grid || !b.grid) throw std::invalid_argument("grid function without a grid");
    if (a.grid->n != b.grid->n || a.grid->spacing != b.grid->spacing)
        throw std::invalid_argument("mismatched grids");
}

bool all_finite(const GridFunction& f) {
    for (const Complex& v : f.values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

bool all_finite(const StateVector& s) { return all_finite(s.comp1) && all_finite(s.comp2); }

GridFunction operator+(const GridFunction& a, const GridFunction& b) {
    require_same_grid(a, b);
    GridFunction out(a.grid);
    for (int j = 0; j < a.size(); ++j) out[j] = a[j] + b[j];
    return out;
}

GridFunction operator-(const GridFunction& a, const GridFunction& b) {
    require_same_grid(a, b);
    GridFunction out(a.grid);
    for (int j = 0; j < a.size(); ++j) out[j] = a[j] - b[j];
    return out;
}

GridFunction operator*(Complex c, const GridFunction& a) {
    GridFunction out(a.grid);
    for (int j = 0; j < a.size(); ++j) out[j] = c * a[j];
    return out;
}

StateVector operator+(const StateVector& a, const StateVector& b) {
    return {a.comp1 + b.comp1, a.comp2 + b.comp2};
}

StateVector operator-(const StateVector& a, const StateVector& b) {
    return {a.comp1 - b.comp1, a.comp2 - b.comp2};
}

StateVector operator*(Complex c, const StateVector& a) { return {c * a.comp1, c * a.comp2}; }

GridFunction cumulative_integral(const GridFunction& f) {
    if (!all_finite(f)) throw std::invalid_argument("cumulative_integral: non-finite input");
    const double h = f.grid->spacing;
    GridFunction out(f.grid);
    out[0] = 0.0;
    for (int j = 1; j < f.size(); ++j) out[j] = out[j - 1] + 0.5 * h * (f[j - 1] + f[j]);
    return out;
}

GridFunction derivative(const GridFunction& f) {
    if (!all_finite(f)) throw std::invalid_argument("derivative: non-finite input");
    const int n = f.size();
    const double h = f.grid->spacing;
    GridFunction out(f.grid);
    out[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
    for (int j = 1; j + 1 < n; ++j) out[j] = (f[j + 1] - f[j - 1]) / (2.0 * h);
    out[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
    return out;
}

double integrate(const std::vector<double>& g, double h) {
    const int n = static_cast<int>(g.size());
    if (n < 4) throw std::invalid_argument("integrate: too few samples");
    const int intervals = n - 1;
    auto simpson = [&](int lo, int hi) { // hi-lo even
        double s = g[static_cast<size_t>(lo)] + g[static_cast<size_t>(hi)];
        for (int j = lo + 1; j < hi; j += 2) s += 4.0 * g[static_cast<size_t>(j)];
        for (int j = lo + 2; j < hi; j += 2) s += 2.0 * g[static_cast<size_t>(j)];
        return s * h / 3.0;
    };
    if (intervals % 2 == 0) return simpson(0, n - 1);
    // odd interval count: Simpson up to n-4, then a 3/8 panel on the last three
    double s = (intervals > 3) ? simpson(0, n - 4) : 0.0;
    const size_t m = static_cast<size_t>(n);
    s += 3.0 * h / 8.0 * (g[m - 4] + 3.0 * g[m - 3] + 3.0 * g[m - 2] + g[m - 1]);
    return s;
}

double scalar_l2_norm(const GridFunction& f) {
    std::vector<double> g(static_cast<size_t>(f.size()));
    for (int j = 0; j < f.size(); ++j) g[static_cast<size_t>(j)] = std::norm(f[j]);
    return std::sqrt(integrate(g, f.grid->spacing));
}

double l2_norm(const StateVector& state) {
    std::vector<double> g(static_cast<size_t>(state.comp1.size()));
    for (int j = 0; j < state.comp1.size(); ++j)
        g[static_cast<size_t>(j)] = std::norm(state.comp1[j]) + std::norm(state.comp2[j]);
    return std::sqrt(integrate(g, state.grid()->spacing));
}

double l2_norm_interior(const StateVector& state, int trim_nodes) {
    const int n = state.comp1.size();
    if (trim_nodes < 0 || n - trim_nodes < 4)
        throw std::invalid_argument("l2_norm_interior: bad trim");
    std::vector<double> g(static_cast<size_t>(n - trim_nodes));
    for (int j = 0; j < n - trim_nodes; ++j)
        g[static_cast<size_t>(j)] = std::norm(state.comp1[j]) + std::norm(state.comp2[j]);
    return std::sqrt(integrate(g, state.grid()->spacing));
}

GridFunction reconstruct_phi(const GridFunction& phi2, double tau) {
    return Complex(std::exp(-tau)) * cumulative_integral(phi2);
}

double energy(const StateVector& state, double tau) {
    const GridFunction integral = cumulative_integral(state.comp2);
    const int n = state.comp1.size();
    std::vector<double> g(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        const double rho = state.grid()->nodes[static_cast<size_t>(j)];
        // e^tau phi / rho = (1/rho) int_0^rho phi2, with limit phi2(0) at rho = 0
        const Complex mean = (j == 0) ? state.comp2[0] : integral[j] / rho;
        g[static_cast<size_t>(j)] = std::norm(state.comp1[j]) + std::norm(state.comp2[j] - mean);
    }
    return std::exp(-tau) * integrate(g, state.grid()->spacing);
}

double hardy_ratio(const GridFunction& phi2, double tau) {
    (void)tau; // the e^{-2 tau} factors cancel exactly between numerator and denominator
    const double denom = scalar_l2_norm(phi2);
    if (denom == 0.0) throw std::invalid_argument("hardy_ratio: zero input");
    const GridFunction integral = cumulative_integral(phi2);
    const int n = phi2.size();
    std::vector<double> g(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        const double rho = phi2.grid->nodes[static_cast<size_t>(j)];
        const Complex mean = (j == 0) ? phi2[0] : integral[j] / rho;
        g[static_cast<size_t>(j)] = std::norm(mean);
    }
    return integrate(g, phi2.grid->spacing) / (denom * denom);
}

} // namespace simwave
