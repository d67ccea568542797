#include "conekit/cone_green.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>

#include "conekit/errors.hpp"
#include "conekit/quadrature.hpp"
#include "conekit/special_functions.hpp"

namespace conekit {

namespace {

constexpr double pi = std::numbers::pi;

double eps_k(int k) { return k == 0 ? 1.0 : 2.0; }

void check_k(int k) {
    if (k < 0) throw ValidationError("mode index k must be >= 0");
}

// K_nu(a) I_nu(b) for a > b >= 0 without overflow.
double k_times_i(double nu, double a, double b) {
    if (b == 0.0) {
        if (nu != 0.0) return 0.0;
        return bessel_k(0.0, a).value;
    }
    const auto lk = log_bessel_k_scaled(nu, a);
    const auto li = log_bessel_i_scaled(nu, b);
    return std::exp(lk.log_value + li.log_value - (a - b));
}

// int_0^inf lam^{m-3} F(R lam) K_nu(rg lam) I_nu(rl lam) dlam, F(x) = x^{-a} J_a(x)
quad::Result i_integral(int m, double nu, double rl, double rg, double R, double tol, double abs_tol) {
    const double a = 0.5 * m - 2.0;
    auto f = [&](double lam) {
        if (lam == 0.0) return 0.0;
        const double F = bessel_j_reduced(a, R * lam).value;
        const double pw = m == 3 ? 1.0 : std::pow(lam, m - 3);
        return pw * F * k_times_i(nu, rg * lam, rl * lam);
    };
    const double gap = rg - rl;
    const double lmax = (50.0 + 4.0 * (m - 3)) / gap;
    double w = lmax / 16.0;
    if (R > 0) w = std::min(w, pi / R);
    // graded start: K_0 has a log singularity at 0, other orders vanish there
    auto breaks = quad::graded_breaks(1e-6 / rg, 1.0 / rg, 4.0);
    quad::append_uniform(breaks, std::max(lmax, 2.0 / rg), w);
    quad::Options opt;
    opt.rel_tol = tol;
    opt.abs_tol = abs_tol;
    opt.max_panels = 20000;
    return quad::integrate(f, breaks, opt);
}

// int_0^inf lam^{m/2-1} R^{2-m/2} K_{|m/2-2|}(R lam) J_nu(r lam) J_nu(rp lam) dlam
quad::Result k_integral(int m, double nu, double r, double rp, double R, double tol, double abs_tol) {
    const double a = std::abs(0.5 * m - 2.0);
    auto f = [&](double lam) {
        if (lam == 0.0) return 0.0;
        double kk;
        if (a == 0.5) kk = std::sqrt(pi / (2.0 * R * lam)) * std::exp(-R * lam);
        else kk = bessel_k(a, R * lam).value;
        const double pre = std::pow(R, 2.0 - 0.5 * m) * std::pow(lam, 0.5 * m - 1.0);
        return pre * kk * bessel_j(nu, r * lam).value * bessel_j(nu, rp * lam).value;
    };
    const double lmax = (50.0 + 2.0 * m) / R;
    double w = lmax / 16.0;
    if (r + rp > 0) w = std::min(w, pi / (r + rp));
    std::vector<double> breaks;
    if (m == 4) breaks = quad::graded_breaks(1e-6 / R, 1.0 / R, 4.0);
    else breaks = {0.0, std::min(1.0 / R, lmax)};
    quad::append_uniform(breaks, lmax, w);
    quad::Options opt;
    opt.rel_tol = tol;
    opt.abs_tol = abs_tol;
    opt.max_panels = 20000;
    return quad::integrate(f, breaks, opt);
}

double mode_prefactor(const ConeParams& p, int k) {
    return eps_k(k) / (2.0 * pi * p.beta) * std::pow(2.0 * pi, 1.0 - 0.5 * p.m);
}

} // namespace

double analytic_normalization(const ConeParams& p) {
    return std::pow(2.0 * pi, 0.5 * p.m) / (2.0 * p.beta);
}

EvalResult modal_component_I(const ConeParams& p, int k, double r, double rp, double R, double abs_tol) {
    p.validate();
    check_k(k);
    if (!(r >= 0 && rp >= 0 && R >= 0)) throw ValidationError("radii must be >= 0");
    const double rl = std::min(r, rp), rg = std::max(r, rp);
    if (!(rl < rg)) throw DomainError("I representation needs r < r'");
    const double nu = p.c() * k;
    if (rl == 0.0 && k > 0) return {0.0, 0.0};
    const double pre = mode_prefactor(p, k);
    const auto q = i_integral(p.m, nu, rl, rg, R, 1e-12, std::max(1e-300, abs_tol / pre));
    if (!q.converged && q.abs_error > std::max(1e-8 * std::abs(q.value), 10.0 * abs_tol / pre)) throw ConvergenceError("modal I integral did not converge");
    return {pre * q.value, pre * q.abs_error};
}

EvalResult modal_component_K(const ConeParams& p, int k, double r, double rp, double R, double abs_tol) {
    p.validate();
    check_k(k);
    if (!(R > 0)) throw DomainError("K representation needs R > 0");
    if (!(r >= 0 && rp >= 0)) throw ValidationError("radii must be >= 0");
    const double nu = p.c() * k;
    const double pre = mode_prefactor(p, k);
    const auto q = k_integral(p.m, nu, r, rp, R, 1e-12, std::max(1e-300, abs_tol / pre));
    if (!q.converged && q.abs_error > std::max(1e-8 * std::abs(q.value), 10.0 * abs_tol / pre))
        throw ConvergenceError("modal K integral did not converge");
    return {pre * q.value, pre * q.abs_error};
}

// g_k with the raw prefactors: G_raw = (2 pi)^{-m} R^{2-m/2} sum eps_k g_k cos k phi
EvalResult modal_gk_K(const ConeParams& p, int k, double r, double rp, double R) {
    if (!(R > 0)) throw DomainError("modal_gk_K needs R > 0");
    const auto g = modal_component_K(p, k, r, rp, R);
    const double s = std::pow(2.0 * pi, p.m) * std::pow(R, 0.5 * p.m - 2.0) / (eps_k(k) * analytic_normalization(p));
    return s * g;
}

EvalResult modal_gk_I(const ConeParams& p, int k, double r, double rp, double R) {
    if (!(r < rp)) throw DomainError("modal_gk_I needs r < r'");
    if (!(R >= 0)) throw ValidationError("R must be >= 0");
    if (R == 0.0 && p.m == 3) throw DomainError("g_k diverges at R = 0 for m = 3; use modal_component_I");
    const auto g = modal_component_I(p, k, r, rp, R);
    if (R == 0.0 && p.m > 4) return {0.0, 0.0};
    const double s = std::pow(2.0 * pi, p.m) * std::pow(R, 0.5 * p.m - 2.0) / (eps_k(k) * analytic_normalization(p));
    return s * g;
}

EvalResult heat_modal(const ConeParams& p, int k, double r, double rp, double t) {
    p.validate();
    check_k(k);
    if (!(t > 0)) throw DomainError("heat_modal needs t > 0");
    if (!(r >= 0 && rp >= 0)) throw ValidationError("radii must be >= 0");
    const double nu = p.c() * k;
    auto f = [&](double lam) {
        return std::exp(-lam * lam * t) * bessel_j(nu, lam * r).value * bessel_j(nu, lam * rp).value * lam;
    };
    const double lmax = std::sqrt(45.0 / t);
    std::vector<double> breaks{0.0};
    double w = lmax / 8.0;
    if (r + rp > 0) w = std::min(w, pi / (r + rp));
    quad::append_uniform(breaks, lmax, w);
    quad::Options opt;
    opt.rel_tol = 1e-13;
    opt.abs_tol = 1e-300;
    const auto q = quad::integrate(f, breaks, opt);
    return {q.value / pi, q.abs_error / pi + std::exp(-45.0) / (2.0 * pi * t)};
}

namespace {

// Time integral of one heat mode, in the variable z = r r' / (2t):
// G_k = eps_k/(4 pi beta) (2 pi r r')^{1-m/2} int z^{m/2-2} e^{-chi z} I_nu(z) dz
EvalResult heat_mode_green(const ConeParams& p, int k, double r, double rp, double R) {
    const double nu = p.c() * k;
    const double rr = r * rp;
    const double chi1 = (R * R + (r - rp) * (r - rp)) / (2.0 * rr); // chi - 1
    const double ex = 0.5 * p.m - 2.0;
    auto f = [&](double z) {
        if (z == 0.0) return 0.0;
        const auto li = log_bessel_i_scaled(nu, z);
        return std::exp(ex * std::log(z) - chi1 * z + li.log_value);
    };
    // scaled I decays like z^{-1/2}, so the tail is governed by chi - 1
    const double zmax = chi1 > 0 ? 60.0 / chi1 + 10.0 * (nu + 1.0) : 0.0;
    if (!(zmax > 0) || !std::isfinite(zmax)) throw SingularityError("heat route is singular at x = y");
    std::vector<double> breaks = quad::graded_breaks(1e-10, std::min(1.0, zmax), 4.0);
    for (double z = 2.0; z < zmax; z *= 2.0) breaks.push_back(z);
    if (breaks.back() < zmax) breaks.push_back(zmax);
    quad::Options opt;
    opt.rel_tol = 1e-12;
    opt.abs_tol = 1e-300;
    opt.max_panels = 20000;
    const auto q = quad::integrate(f, breaks, opt);
    const double pre = eps_k(k) / (4.0 * pi * p.beta) * std::pow(2.0 * pi * rr, 1.0 - 0.5 * p.m);
    // first neglected piece beyond zmax, e^{-60} relative
    const double tail = std::abs(q.value) * 1e-26;
    return {pre * q.value, pre * (q.abs_error + tail)};
}

int auto_modes(double c, double r, double rp, double R, double tol) {
    if (r == 0.0 || rp == 0.0) return 1;
    const double chi = (R * R + r * r + rp * rp) / (2.0 * r * rp);
    const double eta = std::acosh(std::max(1.0, chi));
    if (eta <= 0.0) return 1 << 20;
    const double n = std::log(1.0 / tol) / (c * eta) + 3.0;
    return n > 1e6 ? (1 << 20) : static_cast<int>(std::ceil(n));
}

double mode_ratio(double c, double r, double rp, double R) {
    if (r == 0.0 || rp == 0.0) return 0.0;
    const double chi = (R * R + r * r + rp * rp) / (2.0 * r * rp);
    return std::exp(-c * std::acosh(std::max(1.0, chi)));
}

} // namespace

EvalResult green_via_heat(const ConeParams& p, const ConePoint& x, const ConePoint& y, int k_max) {
    p.validate();
    validate_point(p, x);
    validate_point(p, y);
    const double R = transverse_distance(x, y);
    const double r = x.r, rp = y.r;
    if (r == 0.0 || rp == 0.0) {
        const double A = R * R + r * r + rp * rp;
        if (A == 0.0) throw SingularityError("heat route is singular at x = y");
        // only k = 0 survives; the z-integral is elementary
        const double v = p.c() * newton_kernel(p.m, A);
        return {v, 4e-16 * std::abs(v)};
    }
    if (R == 0.0 && r == rp) throw SingularityError("heat route needs R > 0 or r != r'");
    int K = k_max >= 0 ? k_max : std::min(auto_modes(p.c(), r, rp, R, 1e-13), 4000) - 1;
    const double phi = x.theta - y.theta;
    double sum = 0.0, err = 0.0, last = 0.0;
    for (int k = 0; k <= K; ++k) {
        const auto g = heat_mode_green(p, k, r, rp, R);
        sum += g.value * std::cos(k * phi);
        err += g.abs_error;
        last = std::abs(g.value);
    }
    const double q = mode_ratio(p.c(), r, rp, R);
    if (q < 1.0) err += last * q / (1.0 - q);
    return {sum, err};
}

std::string to_string(GreenRoute r) {
    switch (r) {
    case GreenRoute::modal_I:
        return "modal_I";
    case GreenRoute::modal_K:
        return "modal_K";
    default:
        return "closed_form";
    }
}

namespace {

// Unit-source G via the cheapest valid route.
GreenValue green_true(const ConeParams& p, const ConePoint& x, const ConePoint& y, int k_max, double tol) {
    p.validate();
    validate_point(p, x);
    validate_point(p, y);
    const double R = transverse_distance(x, y);
    const double r = x.r, rp = y.r;
    const double rl = std::min(r, rp), rg = std::max(r, rp);
    if (R == 0.0 && r == rp && (r == 0.0 || std::cos(x.theta - y.theta) == 1.0))
        throw SingularityError("Green's function is singular at x = y");
    const double c = p.c();
    const double phi = x.theta - y.theta;
    GreenValue out;

    int K;
    if (rl == 0.0) K = 0;
    else K = k_max >= 0 ? k_max : auto_modes(c, r, rp, R, tol) - 1;

    // rough cost in panels per mode
    const bool use_I = rg > 0.0 && rl < 0.45 * rg;
    double costK = 0.0;
    if (R > 0.0) costK = (K + 1.0) * (16.0 + (50.0 + 2.0 * p.m) * (r + rp) / (pi * R));
    const bool use_K = !use_I && R > 0.0 && costK < 6000.0;
    if (!use_I && !use_K) {
        const auto cf = green_closed(p, x, y);
        out.value = cf.value;
        out.abs_error = cf.abs_error;
        out.route = GreenRoute::closed_form;
        return out;
    }
    out.route = use_I ? GreenRoute::modal_I : GreenRoute::modal_K;
    double sum = 0.0, err = 0.0, last = 0.0, atol = 0.0;
    for (int k = 0; k <= K; ++k) {
        if (use_I && rl == 0.0 && k > 0) break;
        const auto g = use_I ? modal_component_I(p, k, rl, rg, R, atol) : modal_component_K(p, k, r, rp, R, atol);
        sum += g.value * std::cos(k * phi);
        err += g.abs_error;
        last = std::abs(g.value);
        out.modes = k + 1;
        if (k == 0) atol = 1e-2 * tol * std::abs(g.value);
    }
    const double q = mode_ratio(c, r, rp, R);
    out.tail = (q < 1.0 && rl > 0.0) ? 2.0 * last * q / (1.0 - q) : 0.0;
    out.value = sum;
    out.abs_error = err + out.tail + 1e-15 * std::abs(sum);
    return out;
}

std::mutex cal_mutex;
std::map<std::pair<double, int>, CalibrationReport> cal_cache;

} // namespace

GreenValue green_raw(const ConeParams& p, const ConePoint& x, const ConePoint& y, int k_max, double tol) {
    auto g = green_true(p, x, y, k_max, tol);
    const double s = 1.0 / analytic_normalization(p);
    g.value *= s;
    g.abs_error *= s;
    g.tail *= s;
    return g;
}

CalibrationReport flux_calibrate_report(const ConeParams& p) {
    p.validate();
    {
        std::lock_guard<std::mutex> lock(cal_mutex);
        auto it = cal_cache.find({p.beta, p.m});
        if (it != cal_cache.end()) return it->second;
    }
    const int m = p.m;
    // raw G for a pole at the origin, as a function of (r, R)
    auto raw = [&](double r, double R) {
        const double s = 1.0 / analytic_normalization(p);
        if (R > r) return s * modal_component_K(p, 0, r, 0.0, R).value;
        return s * modal_component_I(p, 0, 0.0, r, R).value;
    };
    const double sphere = m == 3 ? 2.0 : 2.0 * std::pow(pi, 0.5 * (m - 2)) / std::tgamma(0.5 * (m - 2));
    double fd_err = 0.0;
    auto flux = [&](double rho) {
        double err_acc = 0.0;
        auto integrand = [&](double psi) {
            const double sn = std::sin(psi), cs = std::cos(psi);
            auto G = [&](double rr) { return raw(rr * sn, rr * cs); };
            // central differences at h, h/2, h/4 and two Richardson sweeps
            const double h = 2e-2 * rho;
            double d[3];
            for (int i = 0; i < 3; ++i) {
                const double hi = h / (1 << i);
                d[i] = (G(rho + hi) - G(rho - hi)) / (2.0 * hi);
            }
            const double e1 = (4.0 * d[1] - d[0]) / 3.0, e2 = (4.0 * d[2] - d[1]) / 3.0;
            const double dG = (16.0 * e2 - e1) / 15.0;
            const double w = sn * (m == 3 ? 1.0 : std::pow(cs, m - 3));
            err_acc = std::max(err_acc, std::abs(dG - e2) / std::max(1e-300, std::abs(dG)));
            return dG * w;
        };
        quad::Options opt;
        opt.rel_tol = 1e-11;
        opt.abs_tol = 1e-300;
        const auto q = quad::integrate(integrand, 0.0, 0.5 * pi, opt);
        fd_err = std::max(fd_err, err_acc + q.abs_error / std::abs(q.value));
        return p.beta * 2.0 * pi * sphere * std::pow(rho, m - 1) * q.value;
    };
    CalibrationReport rep;
    rep.flux_small = flux(rep.radius_small);
    rep.flux_large = flux(rep.radius_large);
    rep.relative_spread = std::abs(rep.flux_small - rep.flux_large) / std::abs(rep.flux_large);
    rep.relative_error = std::max(rep.relative_spread, fd_err);
    rep.analytic_c0 = analytic_normalization(p);
    if (!(rep.relative_spread <= 1e-2) || !std::isfinite(rep.flux_small))
        throw CalibrationError("flux at radii 0.05 and 0.1 differs by more than 1%");
    rep.c0 = -2.0 / (rep.flux_small + rep.flux_large);
    std::lock_guard<std::mutex> lock(cal_mutex);
    cal_cache.emplace(std::make_pair(p.beta, p.m), rep);
    return rep;
}

double flux_calibrate(const ConeParams& p) { return flux_calibrate_report(p).c0; }

GreenValue green_eval(const ConeParams& p, const ConePoint& x, const ConePoint& y, int k_max, bool normalized,
                      double tol) {
    auto g = green_raw(p, x, y, k_max, tol);
    if (!normalized) return g;
    const auto cal = flux_calibrate_report(p);
    g.value *= cal.c0;
    g.abs_error = g.abs_error * cal.c0 + std::abs(g.value) * cal.relative_error;
    g.tail *= cal.c0;
    return g;
}

double flux_off_axis(const ConeParams& p, const ConePoint& pole, double radius) {
    p.validate();
    validate_point(p, pole);
    if (p.m != 3) throw ValidationError("off-axis flux is implemented for m = 3");
    if (!(pole.r > 0)) throw DomainError("pole must lie off S");
    if (!(radius > 0 && radius < 0.5 * pole.r)) throw DomainError("radius must be below half the distance to S");
    // developed Cartesian frame at the pole: e1 radial, e2 angular, e3 along s
    using GL = boost::math::quadrature::gauss<double, 30>;
    const double scale = flux_calibrate(p) / analytic_normalization(p);
    auto outer = [&](double vt) {
        auto inner = [&](double ph) {
            const double n1 = std::sin(vt) * std::cos(ph), n2 = std::sin(vt) * std::sin(ph), n3 = std::cos(vt);
            const double X = pole.r + radius * n1, Y = radius * n2;
            const double rr = std::hypot(X, Y), ang = std::atan2(Y, X);
            ConePoint q{rr, wrap_angle(pole.theta + ang / p.beta), {pole.s[0] + radius * n3}};
            const auto J = green_closed_jet(p, q, pole, 1);
            // radial and angular unit vectors at q in the developed frame
            const double er1 = X / rr, er2 = Y / rr;
            const double gX = J.grad[0] * er1 - J.grad[1] / (p.beta * rr) * er2;
            const double gY = J.grad[0] * er2 + J.grad[1] / (p.beta * rr) * er1;
            return (gX * n1 + gY * n2 + J.grad[2] * n3) * std::sin(vt);
        };
        return GL::integrate(inner, 0.0, 2.0 * pi);
    };
    return scale * radius * radius * GL::integrate(outer, 0.0, pi);
}

ConeGreen::ConeGreen(ConeParams p) : p_(p), c0_(flux_calibrate(p)) {}

GreenValue ConeGreen::operator()(const ConePoint& x, const ConePoint& y, int k_max) const {
    return green_eval(p_, x, y, k_max, true);
}

EvalResult laplacian_cone(const ConeParams& p, const ScalarField& phi, const ConePoint& x, double h) {
    p.validate();
    validate_point(p, x);
    if (!(h > 0)) throw DomainError("step must be positive");
    if (!(x.r > 2.0 * h)) throw DomainError("stencil would touch the singular set: need r > 2h");
    const double f0 = phi(x);
    auto shifted = [&](int var, double d) {
        ConePoint q = x;
        if (var == 0) q.r += d;
        else if (var == 1) q.theta = x.theta + d; // left unwrapped on purpose: the field sees the same point
        else q.s[var - 2] += d;
        return phi(q);
    };
    double lap = 0.0, scale = std::abs(f0);
    const double fp = shifted(0, h), fm = shifted(0, -h);
    lap += (fp - 2.0 * f0 + fm) / (h * h) + (fp - fm) / (2.0 * h * x.r);
    scale = std::max({scale, std::abs(fp), std::abs(fm)});
    // angular step of arc length h
    const double ht = h / (p.beta * x.r);
    const double tp = shifted(1, ht), tm = shifted(1, -ht);
    lap += (tp - 2.0 * f0 + tm) / (h * h);
    for (int i = 0; i < p.m - 2; ++i) {
        const double sp = shifted(2 + i, h), sm = shifted(2 + i, -h);
        lap += (sp - 2.0 * f0 + sm) / (h * h);
        scale = std::max({scale, std::abs(sp), std::abs(sm)});
    }
    const double roundoff = 8.0 * (p.m + 1) * 2.2e-16 * scale / (h * h);
    return {lap, roundoff};
}

double holder_seminorm(const std::vector<std::pair<std::vector<double>, double>>& samples, double alpha) {
    if (samples.size() < 2) throw ValidationError("need at least two samples");
    if (!(alpha > 0.0 && alpha < 1.0)) throw ValidationError("alpha must lie in (0, 1)");
    double best = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = i + 1; j < samples.size(); ++j) {
            const auto& a = samples[i].first;
            const auto& b = samples[j].first;
            if (a.size() != b.size()) throw ValidationError("samples must share a dimension");
            double d2 = 0.0;
            for (std::size_t q = 0; q < a.size(); ++q) d2 += (a[q] - b[q]) * (a[q] - b[q]);
            const double df = std::abs(samples[i].second - samples[j].second);
            if (d2 == 0.0) {
                if (df != 0.0) throw ValidationError("duplicate point with different values");
                continue;
            }
            best = std::max(best, df / std::pow(d2, 0.5 * alpha));
        }
    return best;
}

} // namespace conekit
