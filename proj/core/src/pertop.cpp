#include "simwave/pertop.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "simwave/errors.hpp"

namespace simwave {

StateVector apply_lprime(const NonlinearityConfig& cfg, const StateVector& state) {
    StateVector out(state.grid());
    out.comp1 = Complex(cfg.pc0()) * cumulative_integral(state.comp2);
    return out;
}

StateVector apply_l(const NonlinearityConfig& cfg, const StateVector& state) {
    return apply_l0(state) + apply_lprime(cfg, state);
}

std::vector<EigenvalueReport> quantization_roots(const NonlinearityConfig& cfg,
                                                 double half_plane_cut) {
    constexpr int kMaxIndex = 50;
    const double s = std::sqrt(1.0 + 4.0 * cfg.pc0());
    std::vector<double> roots;
    for (int k = 0; k <= kMaxIndex; ++k) {
        roots.push_back((s - 1.0) / 2.0 - 2.0 * k);  // a + 1 - c = -k
        roots.push_back(-(s + 1.0) / 2.0 - 2.0 * k); // b + 1 - c = -k
    }
    std::sort(roots.begin(), roots.end(), std::greater<>());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double x, double y) { return std::abs(x - y) < 1e-12; }),
                roots.end());

    std::vector<EigenvalueReport> out;
    for (double lam : roots) {
        if (lam <= half_plane_cut) continue;
        EigenvalueReport rep;
        rep.lambda = lam;
        rep.method = EigenvalueReport::Method::gamma_pole;
        if (lam > 0.5 && std::abs(lam - 1.0) > kDegenerateGuard) {
            rep.residual = std::abs(connection_coefficient_c1(lam, cfg));
        } else {
            // distance of the quantized parameter to the nearest pole index
            const HypergeometricParams hp = hypergeom_params(lam, cfg);
            const double ra = (hp.a + 1.0 - hp.c).real();
            const double rb = (hp.b + 1.0 - hp.c).real();
            rep.residual = std::min(std::abs(ra - std::round(ra)), std::abs(rb - std::round(rb)));
        }
        out.push_back(rep);
    }
    return out;
}

Complex shoot_mismatch(SpectralParameter lambda, const NonlinearityConfig& cfg) {
    if (std::abs(lambda - 1.0) < kDegenerateGuard)
        throw degenerate_case_error("shoot_mismatch: degenerate case lambda = 1");
    const HypergeometricParams p = hypergeom_params(lambda, cfg);
    return hyp2f1({p.a, p.b, p.a + p.b + 1.0 - p.c}, Complex(1.0));
}

namespace {

// Second-order pencil ODE (t0(lambda) - pc0) u = 0 written in x = 1 - rho:
//   u_xx = (q u - 2 lambda (1-x) u_x) / (x (2-x)),   q = lambda(lambda-1) - pc0.
struct PencilOde {
    Complex lambda;
    Complex q;

    void eval(double x, Complex u, Complex w, Complex& du, Complex& dw) const {
        du = w;
        dw = (q * u - 2.0 * lambda * (1.0 - x) * w) / (x * (2.0 - x));
    }

    void rk4(double x, double h, Complex& u, Complex& w) const {
        Complex k1u, k1w, k2u, k2w, k3u, k3w, k4u, k4w;
        eval(x, u, w, k1u, k1w);
        eval(x + 0.5 * h, u + 0.5 * h * k1u, w + 0.5 * h * k1w, k2u, k2w);
        eval(x + 0.5 * h, u + 0.5 * h * k2u, w + 0.5 * h * k2w, k3u, k3w);
        eval(x + h, u + h * k3u, w + h * k3w, k4u, k4w);
        u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
        w += h / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w);
    }
};

constexpr double kOdeMaxStep = 5e-4;

// March from x_from to x_to (either direction), steps graded by the distance
// to the singular point x = 0, landing exactly on x_to.
void march(const PencilOde& ode, double x_from, double x_to, Complex& u, Complex& w) {
    const double scale = 0.1 / (1.0 + std::abs(ode.lambda));
    double x = x_from;
    const double dir = (x_to >= x_from) ? 1.0 : -1.0;
    while (dir * (x_to - x) > 0.0) {
        double h = std::min(kOdeMaxStep, scale * x);
        h = std::min(h, dir * (x_to - x));
        ode.rk4(x, dir * h, u, w);
        x += dir * h;
    }
}

// Two-term Frobenius start of the solution analytic at rho = 1.
void frobenius_start(const PencilOde& ode, double eps, Complex& u, Complex& w) {
    const Complex a1 = ode.q / (2.0 * ode.lambda);
    const Complex a2 = (2.0 * ode.lambda + ode.q) * a1 / (4.0 * (1.0 + ode.lambda));
    u = 1.0 + a1 * eps + a2 * eps * eps;
    w = a1 + 2.0 * a2 * eps;
}

} // namespace

Complex shoot_mismatch_ode(SpectralParameter lambda, const NonlinearityConfig& cfg, double eps) {
    if (std::abs(lambda - 1.0) < kDegenerateGuard)
        throw degenerate_case_error("shoot_mismatch_ode: degenerate case lambda = 1");
    const PencilOde ode{lambda, lambda * (lambda - 1.0) - cfg.pc0()};
    Complex u, w;
    frobenius_start(ode, eps, u, w);
    march(ode, eps, 1.0, u, w);
    return u; // value at rho = 0
}

double relocate_root_by_shooting(const NonlinearityConfig& cfg, double guess, double half_width) {
    double lo = guess - half_width;
    double hi = guess + half_width;
    double flo = shoot_mismatch_ode(lo, cfg).real();
    double fhi = shoot_mismatch_ode(hi, cfg).real();
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (std::signbit(flo) == std::signbit(fhi))
        throw numerical_error("relocate_root_by_shooting: no sign change in window");
    for (int it = 0; it < 80 && hi - lo > 1e-13; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = shoot_mismatch_ode(mid, cfg).real();
        if (fm == 0.0) return mid;
        if (std::signbit(fm) == std::signbit(flo)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

StateVector gauge_mode_profile(const NonlinearityConfig& cfg, const GridPtr& grid) {
    const double lambda0 = gauge_eigenvalue(cfg);
    const PencilOde ode{lambda0, lambda0 * (lambda0 - 1.0) - cfg.pc0()};
    constexpr double eps = 1e-6;

    GridFunction u(grid);
    const int n = grid->n;
    Complex uv, wv;
    frobenius_start(ode, eps, uv, wv);
    u[n - 1] = 1.0; // Frobenius base value at rho = 1 (x = 0)
    double x = eps;
    for (int j = n - 2; j >= 0; --j) {
        const double xj = 1.0 - grid->nodes[static_cast<size_t>(j)];
        march(ode, x, xj, uv, wv);
        x = xj;
        u[j] = uv;
    }

    StateVector mode = eigenfunction_from_profile(u, lambda0);
    const Complex scale = mode.comp2[0];
    if (std::abs(scale) == 0.0)
        throw numerical_error("gauge_mode_profile: degenerate normalization");
    return (1.0 / scale) * mode;
}

GridFunction pencil_kernel_from_origin(SpectralParameter lambda, const NonlinearityConfig& cfg,
                                       const GridPtr& grid) {
    // regular initial point rho = 0: u = 0, u' = 1; integrate toward the
    // singular endpoint, stopping a hair before rho = 1
    const Complex q = lambda * (lambda - 1.0) - cfg.pc0();
    const double scale = 0.1 / (1.0 + std::abs(lambda));
    auto eval = [&](double rho, Complex u, Complex w, Complex& du, Complex& dw) {
        du = w;
        dw = (2.0 * lambda * rho * w + q * u) / (1.0 - rho * rho);
    };
    auto rk4 = [&](double rho, double h, Complex& u, Complex& w) {
        Complex k1u, k1w, k2u, k2w, k3u, k3w, k4u, k4w;
        eval(rho, u, w, k1u, k1w);
        eval(rho + 0.5 * h, u + 0.5 * h * k1u, w + 0.5 * h * k1w, k2u, k2w);
        eval(rho + 0.5 * h, u + 0.5 * h * k2u, w + 0.5 * h * k2w, k3u, k3w);
        eval(rho + h, u + h * k3u, w + h * k3w, k4u, k4w);
        u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
        w += h / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w);
    };

    GridFunction u(grid);
    Complex uv = 0.0, wv = 1.0;
    double rho = 0.0;
    u[0] = 0.0;
    constexpr double kEndGap = 1e-9;
    for (int j = 1; j < grid->n; ++j) {
        const double target = std::min(grid->nodes[static_cast<size_t>(j)], 1.0 - kEndGap);
        while (rho < target) {
            double h = std::min(kOdeMaxStep, scale * (1.0 - rho));
            h = std::min(h, target - rho);
            rk4(rho, h, uv, wv);
            rho += h;
        }
        u[j] = uv;
    }
    return u;
}

} // namespace simwave
