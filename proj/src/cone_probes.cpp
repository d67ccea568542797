// Derivative kernels and the empirical kernel-bound and Schauder probes.
#include "conekit/cone_probes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/quadrature/gauss.hpp>

#include "conekit/errors.hpp"
#include "conekit/polyhom.hpp"

namespace conekit {

namespace {

constexpr double pi = std::numbers::pi;

// full node and weight lists of an N-point Gauss rule on [a, b]
template <int N>
void gauss_rule(double a, double b, std::vector<double>& x, std::vector<double>& w) {
    using GL = boost::math::quadrature::gauss<double, N>;
    const auto& ab = GL::abscissa();
    const auto& wt = GL::weights();
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    x.clear();
    w.clear();
    for (std::size_t i = 0; i < ab.size(); ++i) {
        if (ab[i] == 0.0) {
            x.push_back(c);
            w.push_back(h * wt[i]);
            continue;
        }
        x.push_back(c - h * ab[i]);
        w.push_back(h * wt[i]);
        x.push_back(c + h * ab[i]);
        w.push_back(h * wt[i]);
    }
}

void gauss_nodes(int n, double a, double b, std::vector<double>& x, std::vector<double>& w) {
    switch (n) {
    case 8: gauss_rule<8>(a, b, x, w); break;
    case 12: gauss_rule<12>(a, b, x, w); break;
    case 16: gauss_rule<16>(a, b, x, w); break;
    case 20: gauss_rule<20>(a, b, x, w); break;
    case 24: gauss_rule<24>(a, b, x, w); break;
    case 30: gauss_rule<30>(a, b, x, w); break;
    default: throw ValidationError("Gauss rule size must be one of 8, 12, 16, 20, 24, 30");
    }
}

// value of the selected operator from a jet of order >= 2
double apply_second(const GreenJet& J, const DerivSelector& D, double r) {
    const int si = 1 + D.i, sj = 1 + D.j;
    switch (D.kind) {
    case DerivKind::ss: return J.dd(si, sj);
    case DerivKind::rs: return J.dd(0, si);
    case DerivKind::thetas: return J.dd(1, si) / r;
    }
    return 0.0;
}

double apply_second_error(const GreenJet& J, const DerivSelector& D, double r) {
    const int m = J.m, si = 1 + D.i, sj = 1 + D.j;
    switch (D.kind) {
    case DerivKind::ss: return J.hess_error[si * m + sj];
    case DerivKind::rs: return J.hess_error[si];
    case DerivKind::thetas: return J.hess_error[1 * m + si] / r;
    }
    return 0.0;
}

GreenJet route_jet(const ConeParams& p, const ConePoint& x, const ConePoint& y, int order, KernelRoute route,
                   double tol, KernelRoute& used) {
    const bool near = x.r < 0.45 * y.r;
    if (route == KernelRoute::expansion || (route == KernelRoute::automatic && near)) {
        used = KernelRoute::expansion;
        return polyhom_jet(p, x, y, order, tol);
    }
    used = KernelRoute::closed_form;
    return green_closed_jet(p, x, y, order, std::max(tol, 1e-13));
}

// central difference estimate of the operator from green_eval, two steps plus Richardson
std::pair<double, double> fd_kernel(const ConeParams& p, const DerivSelector& D, const ConePoint& x,
                                    const ConePoint& y) {
    const double dist = euclidean_distance(x, y);
    auto G = [&](double dr, double dt, int sa, double da, int sb, double db) {
        ConePoint q = x;
        q.r += dr;
        q.theta = wrap_angle(q.theta + dt);
        if (sa >= 0) q.s[sa] += da;
        if (sb >= 0) q.s[sb] += db;
        return green_eval(p, q, y).value;
    };
    auto estimate = [&](double h) {
        const int a = D.i - 1, b = D.j - 1;
        switch (D.kind) {
        case DerivKind::ss:
            if (a == b) return (G(0, 0, a, h, -1, 0) - 2.0 * G(0, 0, -1, 0, -1, 0) + G(0, 0, a, -h, -1, 0)) / (h * h);
            return (G(0, 0, a, h, b, h) - G(0, 0, a, h, b, -h) - G(0, 0, a, -h, b, h) + G(0, 0, a, -h, b, -h)) /
                   (4 * h * h);
        case DerivKind::rs:
            return (G(h, 0, a, h, -1, 0) - G(h, 0, a, -h, -1, 0) - G(-h, 0, a, h, -1, 0) + G(-h, 0, a, -h, -1, 0)) /
                   (4 * h * h);
        case DerivKind::thetas: {
            const double t = h / x.r;
            return (G(0, t, a, h, -1, 0) - G(0, t, a, -h, -1, 0) - G(0, -t, a, h, -1, 0) + G(0, -t, a, -h, -1, 0)) /
                   (4 * t * h) / x.r;
        }
        }
        return 0.0;
    };
    double h = 0.02 * dist;
    if (D.kind != DerivKind::ss) h = std::min(h, 0.25 * x.r);
    const double e1 = estimate(h), e2 = estimate(0.5 * h);
    const double rich = e2 + (e2 - e1) / 3.0;
    return {rich, std::abs(rich - e2) + 1e-7 * std::abs(rich)};
}

} // namespace

KernelValue deriv_kernel(const ConeParams& p, const DerivSelector& D, const ConePoint& x, const ConePoint& y,
                         const KernelOptions& opt) {
    p.validate();
    D.validate(p);
    validate_point(p, x);
    validate_point(p, y);
    if (euclidean_distance(x, y) == 0.0) throw SingularityError("kernel is singular at x = y");
    KernelValue out;
    const double c = p.c();
    if (x.r == 0.0 && D.kind != DerivKind::ss) {
        if (c > 1.0) {
            // d/dr and r^{-1} d/dtheta of r^{c k + 2j} terms vanish on S when c > 1
            out.value = 0.0;
            out.route = opt.route == KernelRoute::expansion ? KernelRoute::expansion : KernelRoute::closed_form;
            return out;
        }
        if (D.kind == DerivKind::thetas) {
            // beta = 1: the limit is the directional derivative along theta, taken at tiny r
            ConePoint xs = x;
            xs.r = 1e-9 * euclidean_distance(x, y);
            return deriv_kernel(p, D, xs, y, opt);
        }
    }
    const auto J = route_jet(p, x, y, 2, opt.route, opt.tol, out.route);
    out.value = apply_second(J, D, x.r);
    out.abs_error = apply_second_error(J, D, x.r);
    if (opt.fd_check) {
        if (D.kind != DerivKind::ss && x.r == 0.0) throw DomainError("finite differences need r > 0 for this kind");
        const auto [fv, fe] = fd_kernel(p, D, x, y);
        out.fd_checked = true;
        out.fd_value = fv;
        out.fd_error = fe;
        out.fd_agrees = std::abs(fv - out.value) <= fe + out.abs_error + 1e-9 * std::abs(out.value);
    }
    return out;
}

namespace {

// sample of unit directions in R^{m-2}
std::vector<std::vector<double>> s_directions(int m) {
    const int d = m - 2;
    std::vector<std::vector<double>> out;
    std::vector<double> e(d, 0.0);
    e[0] = 1.0;
    out.push_back(e);
    if (d >= 2) {
        std::vector<double> f(d, 0.0);
        f[0] = f[1] = std::sqrt(0.5);
        out.push_back(f);
    }
    return out;
}

ConePoint sphere_point(const ConeParams& p, double radius, double vt, double th, const std::vector<double>& u) {
    std::vector<double> s(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) s[i] = radius * std::cos(vt) * u[i];
    return make_point(p, radius * std::sin(vt), th, s);
}

// developed coordinates (r cos beta t, r sin beta t, s) with t in (-pi, pi]
std::array<double, 3> developed(const ConeParams& p, const ConePoint& x) {
    double t = x.theta > pi ? x.theta - 2 * pi : x.theta;
    return {x.r * std::cos(p.beta * t), x.r * std::sin(p.beta * t), x.s[0]};
}

ConePoint from_developed(const ConeParams& p, double u1, double u2, double s) {
    return make_point(p, std::hypot(u1, u2), wrap_angle(std::atan2(u2, u1) / p.beta), {s});
}

double kernel_closed(const ConeParams& p, const DerivSelector& D, const ConePoint& x, const ConePoint& y) {
    KernelOptions o;
    o.route = KernelRoute::closed_form;
    o.tol = 1e-11;
    return deriv_kernel(p, D, x, y, o).value;
}

// metric gradient of K in its first argument by central differences in developed coordinates
double grad_kernel_norm(const ConeParams& p, const DerivSelector& D, const ConePoint& z, const ConePoint& w) {
    const auto u = developed(p, z);
    const double h = 1e-4 * std::min(1.0, euclidean_distance(z, w));
    double n2 = 0.0;
    for (int a = 0; a < 3; ++a) {
        auto at = [&](double d) {
            auto v = u;
            v[a] += d;
            return kernel_closed(p, D, from_developed(p, v[0], v[1], v[2]), w);
        };
        const double g = (at(h) - at(-h)) / (2 * h);
        n2 += g * g;
    }
    return std::sqrt(n2);
}

} // namespace

KernelBoundReport kernel_bounds(const ConeParams& p, const DerivSelector& D, int level) {
    p.validate();
    D.validate(p);
    if (level < 1) throw ValidationError("level must be >= 1");
    // kappa3 and kappa4 sample in developed coordinates of the transverse plane and one s
    if (p.m != 3) throw ValidationError("kernel bound probes are implemented for m = 3");
    const int m = p.m;
    const double mu = p.mu();
    KernelBoundReport rep;
    const auto dirs = s_directions(m);
    const std::vector<double> s0(m - 2, 0.0);
    const ConePoint origin = make_point(p, 0.0, 0.0, s0);

    // kappa1 on the unit sphere
    const int nv = 8 + 8 * level, nt = 8 + 8 * level;
    for (const auto& u : dirs)
        for (int a = 0; a <= nv; ++a)
            for (int b = 0; b < nt; ++b) {
                const ConePoint z = sphere_point(p, 1.0, pi * a / nv, 2 * pi * b / nt, u);
                rep.kappa1 = std::max(rep.kappa1, std::abs(kernel_closed(p, D, origin, z)));
                ++rep.samples;
            }

    // kappa2: w in the half ball, pairs at a common z
    if (mu > 0) {
        std::vector<ConePoint> ws;
        ws.push_back(origin);
        const int nr = 6 + 4 * level, na = 8 + 4 * level;
        for (int a = 0; a < nr; ++a) {
            const double rr = 0.45 * std::pow(1e-4 / 0.45, static_cast<double>(a) / (nr - 1));
            for (int b = 0; b < na; ++b)
                for (double sv : {0.0, 0.5 * rr})
                    ws.push_back(make_point(p, rr, 2 * pi * b / na, std::vector<double>(m - 2, sv)));
        }
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 4; ++b) {
                const ConePoint z = sphere_point(p, 1.0, pi * (a + 0.5) / 3, 0.5 * pi * b + 0.3, dirs[0]);
                std::vector<double> K(ws.size());
                for (std::size_t i = 0; i < ws.size(); ++i) K[i] = kernel_closed(p, D, ws[i], z);
                rep.samples += static_cast<int>(ws.size());
                for (std::size_t i = 0; i < ws.size(); ++i)
                    for (std::size_t j = i + 1; j < ws.size(); ++j) {
                        const double d = euclidean_distance(ws[i], ws[j]);
                        if (d > 0) rep.kappa2 = std::max(rep.kappa2, std::abs(K[i] - K[j]) / std::pow(d, mu));
                    }
            }
    }

    // kappa3, kappa4: z on the unit sphere with |pi(z)| >= 1/2; w on shells around z and on a |w| <= 5 grid
    const int nd = 6 + 6 * level, ns = 4 + 2 * level;
    for (double vt : {pi / 3, pi / 2})
        for (double th : {0.2, 2.5}) {
            const ConePoint z = sphere_point(p, 1.0, vt, th, dirs[0]);
            const auto u = developed(p, z);
            std::vector<ConePoint> ws;
            for (int e = 0; e < ns; ++e) {
                const double eps = 0.3 * std::pow(1e-3 / 0.3, static_cast<double>(e) / (ns - 1));
                for (int a = 0; a < nd; ++a)
                    for (int b = 0; b < 2 * nd; ++b) {
                        const double va = pi * (a + 0.5) / nd, ph = pi * b / nd;
                        ws.push_back(from_developed(p, u[0] + eps * std::sin(va) * std::cos(ph),
                                                    u[1] + eps * std::sin(va) * std::sin(ph), u[2] + eps * std::cos(va)));
                    }
            }
            for (int a = 0; a <= 2 * level; ++a)
                for (int b = 0; b < 4 * level; ++b)
                    for (int e = -level; e <= level; ++e)
                        ws.push_back(make_point(p, 3.5 * a / (2 * level), 2 * pi * b / (4 * level),
                                                std::vector<double>(m - 2, 3.5 * e / level)));
            for (const auto& w : ws) {
                const double d = euclidean_distance(z, w);
                if (d < 1e-12) continue;
                rep.kappa3 = std::max(rep.kappa3, std::abs(kernel_closed(p, D, z, w)) * std::pow(d, m));
                rep.kappa4 = std::max(rep.kappa4, grad_kernel_norm(p, D, z, w) * std::pow(d, m + 1));
                ++rep.samples;
            }
        }
    return rep;
}

double BumpField::operator()(const ConeParams& p, const ConePoint& x) const {
    ConePoint q = dilate(x, 1.0 / scale);
    const auto u = developed(p, q);
    const double q2 = ((u[0] - centre_r) * (u[0] - centre_r) + u[1] * u[1] + u[2] * u[2]) / (width * width);
    return q2 >= 1.0 ? 0.0 : std::pow(1.0 - q2, 3);
}

namespace {

// d rho / ds at developed point v, for the dilated field
double bump_ds(const BumpField& b, double v0, double v1, double v2) {
    const double C = b.scale * b.centre_r, w2 = b.scale * b.scale * b.width * b.width;
    const double q = ((v0 - C) * (v0 - C) + v1 * v1 + v2 * v2) / w2;
    if (q >= 1.0) return 0.0;
    return -6.0 * (1.0 - q) * (1.0 - q) * v2 / w2;
}

// first-order operator D' with D = D' d/ds_i, applied in x
double first_order(const ConeParams& p, const DerivSelector& D, const ConePoint& x, const ConePoint& y, bool flat) {
    if (flat) {
        // Newton kernel 1/(4 pi |X-Y|) in developed coordinates
        const auto a = developed(p, x), b = developed(p, y);
        const double d0 = a[0] - b[0], d1 = a[1] - b[1], d2 = a[2] - b[2];
        const double n = std::sqrt(d0 * d0 + d1 * d1 + d2 * d2);
        const double f = -1.0 / (4 * pi * n * n * n);
        const double g0 = f * d0, g1 = f * d1, g2 = f * d2;
        const double phi = std::atan2(a[1], a[0]);
        switch (D.kind) {
        case DerivKind::ss: return g2;
        case DerivKind::rs: return g0 * std::cos(phi) + g1 * std::sin(phi);
        case DerivKind::thetas: return p.beta * (-g0 * std::sin(phi) + g1 * std::cos(phi));
        }
    }
    if (x.r == 0.0 && D.kind != DerivKind::ss && p.c() > 1.0) return 0.0;
    const auto J = green_closed_jet(p, x, y, 1, 1e-9);
    switch (D.kind) {
    case DerivKind::ss: return J.grad[1 + D.j];
    case DerivKind::rs: return J.grad[0];
    case DerivKind::thetas: return J.grad[1] / x.r;
    }
    return 0.0;
}

// T rho at x by quadrature over the support of the (dilated) bump
double T_at(const ConeParams& p, const BumpField& b, const DerivSelector& D, const ConePoint& x,
            const SchauderOptions& opt) {
    const auto X = developed(p, x);
    const double C = b.scale * b.centre_r, w = b.scale * b.width;
    const double dx0 = X[0] - C, dx1 = X[1], dx2 = X[2];
    const double dist = std::sqrt(dx0 * dx0 + dx1 * dx1 + dx2 * dx2);
    std::vector<double> tn, tw, cn, cw;
    gauss_nodes(opt.polar_nodes, -1.0, 1.0, cn, cw);
    const int na = opt.azimuth_nodes;
    auto eval_y = [&](double v0, double v1, double v2) {
        const double g = bump_ds(b, v0, v1, v2);
        if (g == 0.0) return 0.0;
        const ConePoint y = from_developed(p, v0, v1, v2);
        return first_order(p, D, x, y, opt.flat_kernel) * g;
    };
    double total = 0.0;
    if (dist > 1.3 * w) {
        // spherical coordinates about the centre of the support
        gauss_nodes(opt.radial_nodes, 0.0, w, tn, tw);
        for (std::size_t a = 0; a < cn.size(); ++a) {
            const double ct = cn[a], st = std::sqrt(1 - ct * ct);
            for (int k = 0; k < na; ++k) {
                const double ph = 2 * pi * (k + 0.5) / na;
                const double o0 = st * std::cos(ph), o1 = st * std::sin(ph), o2 = ct;
                for (std::size_t i = 0; i < tn.size(); ++i) {
                    const double t = tn[i];
                    total += cw[a] * (2 * pi / na) * tw[i] * t * t *
                             eval_y(C + t * o0, t * o1, t * o2);
                }
            }
        }
        return total;
    }
    // spherical coordinates about x; rays leave the support at t_out
    const bool inside = dist < w;
    double ax0 = 0, ax1 = 0, ax2 = 1, cmin = -1.0;
    if (!inside) {
        ax0 = -dx0 / dist;
        ax1 = -dx1 / dist;
        ax2 = -dx2 / dist;
        cmin = std::sqrt(1.0 - (w / dist) * (w / dist));
    }
    gauss_nodes(opt.polar_nodes, cmin, 1.0, cn, cw);
    // orthonormal frame around the axis
    double e0 = 1, e1 = 0, e2 = 0;
    if (std::abs(ax0) > 0.9) {
        e0 = 0;
        e1 = 1;
    }
    const double pr = e0 * ax0 + e1 * ax1 + e2 * ax2;
    e0 -= pr * ax0;
    e1 -= pr * ax1;
    e2 -= pr * ax2;
    const double en = std::sqrt(e0 * e0 + e1 * e1 + e2 * e2);
    e0 /= en;
    e1 /= en;
    e2 /= en;
    const double f0 = ax1 * e2 - ax2 * e1, f1 = ax2 * e0 - ax0 * e2, f2 = ax0 * e1 - ax1 * e0;
    for (std::size_t a = 0; a < cn.size(); ++a) {
        const double ct = cn[a], st = std::sqrt(std::max(0.0, 1 - ct * ct));
        for (int k = 0; k < na; ++k) {
            const double ph = 2 * pi * (k + 0.5) / na;
            const double cp = std::cos(ph), sp = std::sin(ph);
            const double o0 = ct * ax0 + st * (cp * e0 + sp * f0);
            const double o1 = ct * ax1 + st * (cp * e1 + sp * f1);
            const double o2 = ct * ax2 + st * (cp * e2 + sp * f2);
            // |dx + t o|^2 = w^2
            const double bq = dx0 * o0 + dx1 * o1 + dx2 * o2;
            const double disc = bq * bq - (dist * dist - w * w);
            if (disc <= 0) continue;
            const double sq = std::sqrt(disc);
            const double t0 = inside ? 0.0 : std::max(0.0, -bq - sq), t1 = -bq + sq;
            if (t1 <= t0) continue;
            gauss_nodes(opt.radial_nodes, t0, t1, tn, tw);
            for (std::size_t i = 0; i < tn.size(); ++i) {
                const double t = tn[i];
                total += cw[a] * (2 * pi / na) * tw[i] * t * t * eval_y(X[0] + t * o0, X[1] + t * o1, X[2] + t * o2);
            }
        }
    }
    return total;
}

// Half the points uniform in the developed ball of radius 1.5 w about the
// support, the rest spread over r <= 2, |s| <= 1 with extra density near S.
std::vector<ConePoint> probe_points(const ConeParams& p, const BumpField& b, int n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    auto unif = [&] { return (gen() >> 11) * 0x1.0p-53; };
    std::vector<ConePoint> out;
    const double R = 1.5 * b.width;
    while (static_cast<int>(out.size()) < n / 2) {
        const double v0 = R * (2 * unif() - 1), v1 = R * (2 * unif() - 1), v2 = R * (2 * unif() - 1);
        if (v0 * v0 + v1 * v1 + v2 * v2 > R * R) continue;
        out.push_back(dilate(from_developed(p, b.centre_r + v0, v1, v2), b.scale));
    }
    while (static_cast<int>(out.size()) < n) {
        const double u = unif(), v = unif(), w = unif();
        out.push_back(dilate(make_point(p, 2.0 * u * u, 2 * pi * v, {2.0 * w - 1.0}), b.scale));
    }
    return out;
}

double rho_seminorm(const ConeParams& p, const BumpField& b, double alpha) {
    std::vector<std::pair<std::vector<double>, double>> samples;
    const int n = 9;
    const double h = 2.4 * b.width / (n - 1);
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c)
            for (int d = 0; d < n; ++d) {
                const double v0 = b.centre_r - 1.2 * b.width + a * h, v1 = -1.2 * b.width + c * h,
                             v2 = -1.2 * b.width + d * h;
                const ConePoint x = dilate(from_developed(p, v0, v1, v2), b.scale);
                samples.push_back({euclidean_coords(x), b(p, x)});
            }
    return holder_seminorm(samples, alpha);
}

double pair_ratio(const std::vector<ConePoint>& pts, const std::vector<double>& T, double alpha, int budget,
                  std::uint64_t seed) {
    const std::size_t n = pts.size();
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.push_back({static_cast<int>(i), static_cast<int>(j)});
    std::mt19937_64 gen(seed);
    const std::size_t take = std::min<std::size_t>(pairs.size(), static_cast<std::size_t>(budget));
    for (std::size_t i = 0; i < take; ++i) {
        const std::size_t j = i + gen() % (pairs.size() - i);
        std::swap(pairs[i], pairs[j]);
    }
    double best = 0.0;
    for (std::size_t q = 0; q < take; ++q) {
        const auto [i, j] = pairs[q];
        const double d = euclidean_distance(pts[i], pts[j]);
        if (d > 0) best = std::max(best, std::abs(T[i] - T[j]) / std::pow(d, alpha));
    }
    return best;
}

} // namespace

SchauderReport schauder_ratio_unchecked(const ConeParams& p, const BumpField& rho, const DerivSelector& D,
                                        double alpha, const SchauderOptions& opt) {
    p.validate();
    D.validate(p);
    if (p.m != 3) throw ValidationError("the Schauder probe is implemented for m = 3");
    if (!(alpha > 0 && alpha < 1)) throw ValidationError("alpha must lie in (0, 1)");
    if (!(rho.width > 0 && rho.centre_r - rho.width > 0 && rho.scale > 0))
        throw ValidationError("bump support must stay off S");
    if (opt.points < 2 || opt.pair_budget < 1) throw ValidationError("need >= 2 points and a positive pair budget");
    if (std::asin(rho.width / rho.centre_r) >= pi * p.beta)
        throw ValidationError("bump support must fit inside the cone wedge");
    SchauderReport rep;
    rep.points = probe_points(p, rho, opt.points, opt.point_seed);
    for (const auto& x : rep.points) rep.T_values.push_back(T_at(p, rho, D, x, opt));
    rep.holder_rho = rho_seminorm(p, rho, alpha);
    rep.holder_T = pair_ratio(rep.points, rep.T_values, alpha, opt.pair_budget, opt.pair_seed);
    rep.ratio = rep.holder_T / rep.holder_rho;
    return rep;
}

SchauderReport schauder_probe(const ConeParams& p, const BumpField& rho, const DerivSelector& D, double alpha,
                              const SchauderOptions& opt) {
    p.validate();
    if (!(alpha > 0 && alpha < p.mu())) throw ValidationError("the estimate needs 0 < alpha < mu = 1/beta - 1");
    return schauder_ratio_unchecked(p, rho, D, alpha, opt);
}

double schauder_resample(const ConeParams& p, const SchauderReport& rep, const BumpField& rho, double alpha,
                         int pair_budget, std::uint64_t seed) {
    if (rep.points.size() < 2) throw ValidationError("report has fewer than two points");
    if (!(alpha > 0 && alpha < 1)) throw ValidationError("alpha must lie in (0, 1)");
    return pair_ratio(rep.points, rep.T_values, alpha, pair_budget, seed) / rho_seminorm(p, rho, alpha);
}

} // namespace conekit
