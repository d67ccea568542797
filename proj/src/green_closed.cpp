// Images plus diffraction integral for the cone Laplacian on C_beta x R^{m-2}.
//
// With c = 1/beta and phi = theta - theta', a point source at y produces
//   G = sum_{j : |phi - 2 pi j| < c pi} N(P - 2 r r' cos(beta (phi - 2 pi j)))
//       - (c / pi) int_0^inf S(u) N(P + 2 r r' cosh u) du
// where P = R^2 + r^2 + r'^2, N is the flat kernel of R^m and
//   S(u) = sum_{a = c pi +- phi} sin a / (2 (cosh(c u) - cos a)).
// S has a pole at u = 0 when a hits 2 pi Z, exactly when an image crosses
// the edge of the visible range. That part is subtracted and integrated in
// closed form, which keeps G smooth across the image boundaries.

#include <array>
#include <cmath>
#include <numbers>

#include "conekit/cone_green.hpp"
#include "conekit/errors.hpp"
#include "conekit/quadrature.hpp"

namespace conekit {

namespace {

constexpr double pi = std::numbers::pi;
constexpr std::size_t kMaxComp = 24;

// Value at u = 0 and increment Q(u) - Q(0), kept separate so that the
// subtracted integrand h(u) (Q(u) - Q(0)) does not lose digits.
struct Dv {
    double v = 0.0, d = 0.0;
};
Dv operator*(Dv a, Dv b) { return {a.v * b.v, a.d * (b.v + b.d) + a.v * b.d}; }
Dv operator+(Dv a, Dv b) { return {a.v + b.v, a.d + b.d}; }
Dv operator*(double s, Dv a) { return {s * a.v, s * a.d}; }

// Series of (cosh 2U - 1)/2 - U^2, written out plainly.
double excess_sinh2(double U) {
    if (std::abs(U) > 0.1) {
        const double s = std::sinh(U);
        return s * s - U * U;
    }
    const double z = 4.0 * U * U; // (2U)^2
    double t = z * z / 24.0;      // (2U)^4 / 4!
    double sum = 0.0;
    for (int n = 2; n < 14; ++n) {
        sum += t / 2.0;
        t *= z / ((2.0 * n + 1.0) * (2.0 * n + 2.0));
        if (t < 1e-18 * sum) break;
    }
    return sum;
}

// V^2 - sin^2 V = V^2 - (1 - cos 2V)/2
double excess_sin2(double V) {
    if (std::abs(V) > 0.1) {
        const double s = std::sin(V);
        return V * V - s * s;
    }
    const double z = 4.0 * V * V;
    double t = z * z / 24.0;
    double sum = 0.0;
    double sign = 1.0;
    for (int n = 2; n < 14; ++n) {
        sum += sign * t / 2.0;
        sign = -sign;
        t *= z / ((2.0 * n + 1.0) * (2.0 * n + 2.0));
        if (t < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

// sin V cos V - V
double excess_sincos(double V) {
    if (std::abs(V) > 0.1) return 0.5 * std::sin(2.0 * V) - V;
    const double z = 4.0 * V * V;
    double t = 2.0 * V * z / 6.0; // (2V)^3 / 3!
    double sum = 0.0, sign = -1.0;
    for (int n = 1; n < 14; ++n) {
        sum += sign * t / 2.0;
        sign = -sign;
        t *= z / ((2.0 * n + 2.0) * (2.0 * n + 3.0));
        if (std::abs(t) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

// One branch a = c pi +- phi of S, reduced to delta = a mod 2 pi in [-pi, pi].
struct Branch {
    double delta = 0.0;
    double sigma = 1.0; // d delta / d theta
    bool subtract = false;
};

// S, dS/ddelta, d2S/ddelta2 and the same minus the pole part
// h = delta / (c^2 u^2 + delta^2) and its delta derivatives.
struct BranchVals {
    double s0, s1, s2;    // full
    double r0, r1, r2;    // full minus pole part
    double h0, h1, h2;    // pole part
};

BranchVals branch_vals(double c, double u, double delta) {
    BranchVals b{};
    const double U = 0.5 * c * u, V = 0.5 * delta;
    const double su = std::sinh(U), sv = std::sin(V);
    const double X = su * su, Y = sv * sv;
    const double s1sum = X + Y; // (cosh cu - cos delta) / 2
    const double sd = std::sin(delta), cd = std::cos(delta);
    const double C = std::cosh(c * u);
    const double D = 2.0 * s1sum;
    b.s0 = sd / (2.0 * D);
    b.s1 = (X - Y - 2.0 * X * Y) / (4.0 * s1sum * s1sum);
    b.s2 = -sd * (C * C + C * cd - 2.0) / (2.0 * D * D * D);

    const double q = c * c * u * u, dd = delta * delta;
    const double w = q + dd;
    b.h0 = delta / w;
    b.h1 = (q - dd) / (w * w);
    b.h2 = -2.0 * delta * (3.0 * q - dd) / (w * w * w);

    const double x0 = U * U, y0 = V * V, s0 = x0 + y0;
    const double ex = excess_sinh2(U), ey = excess_sin2(V);
    const double e = ex - ey, ep = ex + ey, d0 = x0 - y0;
    const double g = excess_sincos(V);
    b.r0 = (g * s0 - V * e) / (2.0 * s1sum * s0);
    b.r1 = (ep - 2.0 * X * Y - 2.0 * d0 * e / s0 - d0 * e * e / (s0 * s0)) / (4.0 * s1sum * s1sum);
    // S'' - h'' regrouped so that the O(1/delta^2) parts cancel analytically
    const double n0 = 3.0 * x0 - y0, en = 3.0 * ex + ey, extra = 2.0 * X * X - 2.0 * X * Y;
    const double E3 = e * (3.0 * s0 * s0 + 3.0 * s0 * e + e * e);
    const double s13 = s1sum * s1sum * s1sum;
    b.r2 = -0.25 * ((V * (en + extra) + g * (n0 + en + extra)) / s13 - V * n0 * E3 / (s13 * s0 * s0 * s0));
    return b;
}

struct Setup {
    int m = 3, order = 0, ncomp = 1;
    double c = 1.0, beta = 1.0, r = 0.0, rp = 0.0, phi = 0.0, P = 0.0, L = 1.0;
    std::vector<double> ds;
    // component descriptors: selector (0: S, 1: dS/dtheta, 2: d2S/dtheta2)
    // and the variables differentiated (-1 for none)
    std::array<int, kMaxComp> sel{}, va{}, vb{};
};

double flat_const(int m) {
    return std::tgamma(0.5 * m - 1.0) / (4.0 * std::pow(pi, 0.5 * m));
}

// Factors of the integrand that depend on u only through B(u). Each entry
// holds Q(0) and Q(u) - Q(0); the split is only needed for u <= 1, beyond
// that the increment is formed as a plain difference.
std::array<Dv, kMaxComp> q_factors(const Setup& st, double kap, double u) {
    const double p = 1.0 - 0.5 * st.m;
    const double sh = std::sinh(0.5 * u);
    const double rr = st.r * st.rp;
    const double B0 = st.P + 2.0 * rr;
    const double dB = 4.0 * rr * sh * sh;
    const bool split = u <= 1.0;
    const double L1 = std::log1p(dB / B0);
    const double N0 = kap * std::pow(B0, p);
    const double N10 = p * N0 / B0;
    const double N20 = p * (p - 1.0) * N0 / (B0 * B0);
    Dv N, N1, N2, Br;
    if (split) {
        N = {N0, N0 * std::expm1(p * L1)};
        N1 = {N10, N10 * std::expm1((p - 1.0) * L1)};
        N2 = {N20, N20 * std::expm1((p - 2.0) * L1)};
        Br = {2.0 * st.r + 2.0 * st.rp, 4.0 * st.rp * sh * sh};
    } else {
        // here v carries Q(u) itself and d stays 0; fixed up below
        const double B = B0 + dB;
        const double Nu = kap * std::pow(B, p);
        N = {Nu, 0.0};
        N1 = {p * Nu / B, 0.0};
        N2 = {p * (p - 1.0) * Nu / (B * B), 0.0};
        Br = {2.0 * st.r + 2.0 * st.rp * std::cosh(u), 0.0};
    }
    auto dA = [&](int v) -> Dv {
        if (v == 0) return Br;
        return {2.0 * st.ds[v - 2], 0.0};
    };
    std::array<Dv, kMaxComp> out{};
    for (int q = 0; q < st.ncomp; ++q) {
        // theta never enters B, so theta indices only select the S factor
        const int a = st.va[q] == 1 ? -1 : st.va[q];
        const int b = st.vb[q] == 1 ? -1 : st.vb[q];
        Dv f;
        if (a < 0 && b < 0) f = N;
        else if (a < 0 || b < 0) f = N1 * dA(a < 0 ? b : a);
        else {
            f = N2 * dA(a) * dA(b);
            if (a == b) f = f + 2.0 * N1;
        }
        // dimensionless scaling by L per r or s derivative
        const int nlen = (a >= 0) + (b >= 0);
        out[q] = std::pow(st.L, nlen) * f;
    }
    return out;
}

} // namespace

double newton_kernel(int m, double A) { return flat_const(m) * std::pow(A, 1.0 - 0.5 * m); }

GreenJet green_closed_jet(const ConeParams& prm, const ConePoint& x, const ConePoint& y, int order, double rel_tol) {
    prm.validate();
    validate_point(prm, x);
    validate_point(prm, y);
    if (order < 0 || order > 2) throw ValidationError("jet order must be 0, 1 or 2");
    const int m = prm.m;
    Setup st;
    st.m = m;
    st.order = order;
    st.c = prm.c();
    st.beta = prm.beta;
    st.r = x.r;
    st.rp = y.r;
    st.phi = x.theta - y.theta;
    st.ds.resize(m - 2);
    double R2 = 0.0;
    for (int i = 0; i < m - 2; ++i) {
        st.ds[i] = x.s[i] - y.s[i];
        R2 += st.ds[i] * st.ds[i];
    }
    st.P = R2 + x.r * x.r + y.r * y.r;
    if (!(st.P > 0.0)) throw SingularityError("Green's function is singular at x = y");
    st.L = std::sqrt(st.P);

    int nc = 0;
    auto add = [&](int s, int a, int b) {
        st.sel[nc] = s;
        st.va[nc] = a;
        st.vb[nc] = b;
        ++nc;
    };
    add(0, -1, -1);
    if (order >= 1)
        for (int a = 0; a < m; ++a) add(a == 1 ? 1 : 0, a, -1);
    if (order >= 2) {
        if (m > 5) throw ValidationError("second derivatives are available for m <= 5");
        for (int a = 0; a < m; ++a)
            for (int b = a; b < m; ++b) add((a == 1) + (b == 1), a, b);
    }
    st.ncomp = nc;

    std::array<double, kMaxComp> total{}, err{};
    const double c = st.c, beta = st.beta, r = st.r, rp = st.rp;

    // images
    {
        const double p = 1.0 - 0.5 * m;
        const int jlo = static_cast<int>(std::floor((st.phi - c * pi) / (2.0 * pi))) - 1;
        const int jhi = static_cast<int>(std::ceil((st.phi + c * pi) / (2.0 * pi))) + 1;
        for (int j = jlo; j <= jhi; ++j) {
            const double psi = st.phi - 2.0 * pi * j;
            const double d1 = c * pi + psi, d2 = c * pi - psi;
            double w = 0.0;
            if (d1 > 0.0 && d2 > 0.0) w = 1.0;
            else if (d1 >= 0.0 && d2 >= 0.0) w = 0.5;
            if (w == 0.0) continue;
            const double cs = std::cos(beta * psi), sn = std::sin(beta * psi);
            const double A = st.P - 2.0 * r * rp * cs;
            if (!(A > 1e-300 * st.P)) throw SingularityError("Green's function is singular at x = y");
            const double N = newton_kernel(m, A), N1 = p * N / A, N2 = p * (p - 1.0) * N / (A * A);
            auto dA = [&](int v) {
                if (v == 0) return 2.0 * r - 2.0 * rp * cs;
                if (v == 1) return 2.0 * r * rp * beta * sn;
                return 2.0 * st.ds[v - 2];
            };
            auto dAA = [&](int a, int b) {
                if (a > b) std::swap(a, b);
                if (a == 0 && b == 0) return 2.0;
                if (a == 0 && b == 1) return 2.0 * rp * beta * sn;
                if (a == 1 && b == 1) return 2.0 * r * rp * beta * beta * cs;
                if (a >= 2 && a == b) return 2.0;
                return 0.0;
            };
            for (int q = 0; q < nc; ++q) {
                const int a = st.va[q], b = st.vb[q];
                double v;
                if (a < 0) v = N;
                else if (b < 0) v = N1 * dA(a);
                else v = N2 * dA(a) * dA(b) + N1 * dAA(a, b);
                total[q] += w * v;
                err[q] += 4e-16 * std::abs(w * v);
            }
        }
    }

    if (c != 1.0) {
        Branch br[2];
        {
            const double ap = c * pi + st.phi;
            const double np = std::round(ap / (2.0 * pi));
            br[0].delta = c * pi + (st.phi - 2.0 * pi * np);
            br[0].sigma = 1.0;
            const double am = c * pi - st.phi;
            const double nm = std::round(am / (2.0 * pi));
            br[1].delta = c * pi - (st.phi - 2.0 * pi * (-nm));
            br[1].sigma = -1.0;
        }
        double lo = 1.0;
        bool any = false;
        for (auto& b : br) {
            b.subtract = std::abs(b.delta) < 1.0;
            if (b.subtract) {
                any = true;
                lo = std::min(lo, std::max(1e-2 * std::abs(b.delta) / c, 1e-8));
            }
        }
        std::vector<double> breaks;
        if (any) breaks = quad::graded_breaks(lo, 1.0, 4.0);
        else breaks = {0.0, 1.0};
        // S decays like e^{-c u}; doubling panels beyond u = 1, refined adaptively
        const double umax = std::max(2.0, 40.0 / c + 2.0);
        for (double u = 2.0; u < umax; u *= 2.0) breaks.push_back(u);
        breaks.push_back(umax);

        const double kap = flat_const(m);
        const auto Q0 = q_factors(st, kap, 0.0);
        auto integrand = [&](double u) {
            const auto Q = q_factors(st, kap, u);
            std::array<double, kMaxComp> out{};
            for (const auto& b : br) {
                const auto bv = branch_vals(c, u, b.delta);
                const bool sub = b.subtract && u <= 1.0;
                for (int q = 0; q < nc; ++q) {
                    const double Qu = u <= 1.0 ? Q[q].v + Q[q].d : Q[q].v;
                    double v;
                    if (st.sel[q] == 0) v = sub ? bv.r0 * Qu + bv.h0 * Q[q].d : bv.s0 * Qu;
                    else if (st.sel[q] == 1) v = b.sigma * (sub ? bv.r1 * Qu + bv.h1 * Q[q].d : bv.s1 * Qu);
                    else v = sub ? bv.r2 * Qu + bv.h2 * Q[q].d : bv.s2 * Qu;
                    out[q] += v;
                }
            }
            return out;
        };
        quad::Options opt;
        opt.abs_tol = std::max(1e-14, 0.01 * rel_tol) * std::abs(Q0[0].v);
        opt.rel_tol = rel_tol;
        opt.max_panels = 3000;
        auto res = quad::integrate_vec<kMaxComp>(integrand, breaks, nc, opt);
        // the reported error carries any shortfall; only give up when it is useless
        for (int q = 0; q < nc; ++q)
            if (!std::isfinite(res.value[q]) || res.abs_error[q] > 1e-6 * std::abs(Q0[0].v))
                throw ConvergenceError("diffraction integral did not converge");
        // closed-form integrals of the subtracted pole parts over [0, 1]
        for (const auto& b : br) {
            if (!b.subtract) continue;
            const double d = b.delta;
            const double i0 = d == 0.0 ? 0.0 : std::atan(c / d) / c;
            const double i1 = -1.0 / (d * d + c * c);
            const double i2 = 2.0 * d / ((d * d + c * c) * (d * d + c * c));
            for (int q = 0; q < nc; ++q) {
                const double ih = st.sel[q] == 0 ? i0 : (st.sel[q] == 1 ? b.sigma * i1 : i2);
                res.value[q] += ih * Q0[q].v;
            }
        }
        for (int q = 0; q < nc; ++q) {
            const int nlen = (st.va[q] >= 0 && st.va[q] != 1) + (st.vb[q] >= 0 && st.vb[q] != 1);
            const double sc = -c / pi / std::pow(st.L, nlen);
            total[q] += sc * res.value[q];
            err[q] += std::abs(sc) * res.abs_error[q];
        }
    }

    GreenJet J;
    J.m = m;
    J.order = order;
    J.value = total[0];
    J.value_error = err[0];
    if (order >= 1) {
        J.grad.assign(total.begin() + 1, total.begin() + 1 + m);
        J.grad_error.assign(err.begin() + 1, err.begin() + 1 + m);
    }
    if (order >= 2) {
        J.hess.assign(m * m, 0.0);
        J.hess_error.assign(m * m, 0.0);
        for (int q = 1 + m; q < nc; ++q) {
            const int a = st.va[q], b = st.vb[q];
            J.hess[a * m + b] = J.hess[b * m + a] = total[q];
            J.hess_error[a * m + b] = J.hess_error[b * m + a] = err[q];
        }
    }
    return J;
}

EvalResult green_closed(const ConeParams& p, const ConePoint& x, const ConePoint& y) {
    const auto J = green_closed_jet(p, x, y, 0);
    return {J.value, J.value_error};
}

} // namespace conekit
