// Expansion of G in powers of r near S, from the I representation: the
// series of I_nu(r lam) integrated term by term against K_nu(r' lam).
#include "conekit/polyhom.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "conekit/errors.hpp"
#include "conekit/quadrature.hpp"
#include "conekit/special_functions.hpp"

namespace conekit {

namespace {

constexpr double pi = std::numbers::pi;

double eps_k(int k) { return k == 0 ? 1.0 : 2.0; }

double mode_prefactor(const ConeParams& p, int k) {
    return eps_k(k) / (2.0 * pi * p.beta) * std::pow(2.0 * pi, 1.0 - 0.5 * p.m);
}

// log of 2^{nu+2j} j! (nu+j)!
double log_norm(double nu, int j) {
    return (nu + 2.0 * j) * std::log(2.0) + std::lgamma(j + 1.0) + std::lgamma(nu + j + 1.0);
}

// Coefficient families at one mode:
//   A_f[j] = 2^{-nu-2j}/(j!(nu+j)!) int mu^{nu+2j+m-3+2f} F_{a+f}(rho mu) K_nu(2 mu) dmu
// for f = 0..nf-1, all j <= J on one shared set of GK21 panels.
struct Families {
    std::array<std::vector<double>, 3> A, err;
};

Families coefficient_families(const ConeParams& p, int k, double rho, int J, int nf) {
    const int m = p.m;
    const double nu = p.c() * k;
    const double a = 0.5 * m - 2.0;
    const double Pmax = nu + 2.0 * J + m - 3 + 2.0 * (nf - 1);
    const double mu_max = 0.5 * (Pmax + 60.0 + 8.0 * std::sqrt(Pmax + 1.0));
    double w = 1.0;
    if (rho > 0) w = std::min(w, 0.5 * pi / rho);
    auto breaks = quad::graded_breaks(1e-10, 1.0, 4.0);
    quad::append_uniform(breaks, mu_max, w);

    std::vector<double> lnorm(J + 1);
    for (int j = 0; j <= J; ++j) lnorm[j] = log_norm(nu, j);

    Families out;
    for (int f = 0; f < nf; ++f) {
        out.A[f].assign(J + 1, 0.0);
        out.err[f].assign(J + 1, 0.0);
    }
    const auto& t = quad::gk21_table();
    std::vector<double> kr(J + 1), gr(J + 1);
    for (std::size_t b = 0; b + 1 < breaks.size(); ++b) {
        const double lo = breaks[b], hi = breaks[b + 1];
        const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
        // per family: Kronrod and Gauss sums for every j
        std::array<std::vector<double>, 3> K, G;
        for (int f = 0; f < nf; ++f) {
            K[f].assign(J + 1, 0.0);
            G[f].assign(J + 1, 0.0);
        }
        for (int i = 0; i < 21; ++i) {
            const int idx = i == 0 ? 0 : (i + 1) / 2;
            const double x = i == 0 ? c : (i % 2 ? c + h * t.x[idx] : c - h * t.x[idx]);
            const double wk = t.wk[idx], wg = t.wg[idx];
            const auto lk = log_bessel_k_scaled(nu, 2.0 * x);
            const double lbase = lk.log_value - 2.0 * x + (nu + m - 3) * std::log(x);
            const double l2 = 2.0 * std::log(x);
            double Fv[3];
            for (int f = 0; f < nf; ++f) Fv[f] = bessel_j_reduced(a + f, rho * x).value;
            for (int j = 0; j <= J; ++j) {
                const double lj = lbase + 2.0 * j * std::log(x) - lnorm[j];
                for (int f = 0; f < nf; ++f) {
                    const double v = std::exp(lj + f * l2) * Fv[f];
                    K[f][j] += wk * v;
                    G[f][j] += wg * v;
                }
            }
        }
        for (int f = 0; f < nf; ++f)
            for (int j = 0; j <= J; ++j) {
                out.A[f][j] += h * K[f][j];
                out.err[f][j] += std::abs(h * (K[f][j] - G[f][j])) + 1e-15 * std::abs(h * K[f][j]);
            }
    }
    return out;
}

// Lemma-1 style bound on |A_f[j]| at mode k.
double family_bound(const ConeParams& p, int j, int k, int f) {
    const double nu = p.c() * k;
    const double a = 0.5 * p.m - 2.0 + f;
    const double ex = nu + 2.0 * j + p.m - 3 + 2.0 * f;
    return bessel_j_reduced_sup(a) * std::exp(std::lgamma(ex + 1.0) - log_norm(nu, j));
}

struct Plan {
    int K = 0;
    std::vector<int> J; // per mode
    std::vector<double> tail; // per jet component, rigorous
};

// Chooses per-mode truncation so that every skipped term bound is below
// tau, then sums the skipped bounds. comp_bound(j, k) returns the bounds of
// all requested jet components for one term.
template <class BoundFn>
Plan plan_truncation(int ncomp, int J_fixed, int K_fixed, double tau, BoundFn&& comp_bound) {
    Plan pl;
    pl.tail.assign(ncomp, 0.0);
    const bool auto_k = K_fixed < 0, auto_j = J_fixed < 0;
    const int kcap = 4000, jcap = 4000;
    for (int k = 0; k < kcap; ++k) {
        // walk j until the term bounds have dropped below 1e-30 of tau and are decreasing
        int Jk = auto_j ? -1 : J_fixed;
        double prev = 1e300;
        bool mode_used = auto_k ? false : k <= K_fixed;
        double level = 0.0;
        for (int j = 0; j < jcap; ++j) {
            const auto b = comp_bound(j, k);
            double mx = 0.0;
            for (double v : b) mx = std::max(mx, v);
            if (j == 0) level = mx;
            bool include;
            if (auto_k && auto_j) include = mx > tau;
            else if (auto_j) include = mode_used && mx > tau;
            else include = (auto_k ? mx > tau || j <= J_fixed : mode_used) && j <= J_fixed;
            if (auto_k && include) mode_used = true;
            if (include) Jk = std::max(Jk, j);
            else
                for (int q = 0; q < ncomp; ++q) pl.tail[q] += b[q];
            if (!include && mx < 1e-30 * tau && mx < prev && j > Jk) break;
            prev = mx;
        }
        if (mode_used && Jk >= 0) {
            pl.K = k;
            pl.J.resize(k + 1, -1);
            pl.J[k] = Jk;
        }
        if (level < 1e-30 * tau && (!auto_k ? k >= K_fixed : true)) break;
    }
    pl.J.resize(pl.K + 1, -1);
    return pl;
}

void check_region(const ConePoint& x, const ConePoint& y) {
    if (!(y.r > 0)) throw RegionError("expansion needs the pole off S");
    if (!(x.r < 0.5 * y.r)) throw RegionError("expansion needs r < r'/2");
}

} // namespace

double ExpansionTail::moment_bound(int j, int k) const { return family_bound(params, j, k, 0); }

double ExpansionTail::bound(int j, int k) const {
    const double nu = params.c() * k;
    const double e = nu + 2.0 * j;
    return C_univ * C_prime * std::exp(std::lgamma(e + params.m - 3 + 1.0) - std::lgamma(e + 1.0));
}

ExpansionTail expansion_tail(const ConeParams& p) {
    p.validate();
    ExpansionTail t;
    t.params = p;
    t.C_prime = bessel_j_reduced_sup(0.5 * p.m - 2.0);
    return t;
}

EvalResult polyhom_coeff(const ConeParams& p, int j, int k, double R) {
    p.validate();
    if (j < 0 || k < 0) throw ValidationError("indices must be >= 0");
    if (!(R > 0)) throw DomainError("coefficient needs R > 0");
    const auto fam = coefficient_families(p, k, R, j, 1);
    return {fam.A[0][j], fam.err[0][j]};
}

GreenJet polyhom_jet(const ConeParams& p, const ConePoint& x, const ConePoint& y, int order, double tol) {
    p.validate();
    validate_point(p, x);
    validate_point(p, y);
    check_region(x, y);
    if (order < 0 || order > 2) throw ValidationError("jet order must be 0, 1 or 2");
    const int m = p.m;
    const double c = p.c();
    const double rp = y.r, r = x.r;
    const double tq = 2.0 * r / rp; // < 1
    const double sc = 2.0 / rp;
    std::vector<double> ds(m - 2);
    double R2 = 0.0;
    for (int i = 0; i < m - 2; ++i) {
        ds[i] = x.s[i] - y.s[i];
        R2 += ds[i] * ds[i];
    }
    const double R = std::sqrt(R2);
    const double rho = 2.0 * R / rp;
    const double phi = x.theta - y.theta;
    const double base = std::pow(sc, m - 2);

    // component layout: value, grad (m), hess upper triangle
    std::vector<std::pair<int, int>> comps{{-1, -1}};
    if (order >= 1)
        for (int a = 0; a < m; ++a) comps.push_back({a, -1});
    if (order >= 2)
        for (int a = 0; a < m; ++a)
            for (int b = a; b < m; ++b) comps.push_back({a, b});
    const int nc = static_cast<int>(comps.size());
    const int nf = 1 + order;

    // r^{e}, r^{e-1}, r^{e-2} factors times powers of 2/r'
    auto rpow = [&](double e, int d) {
        // d-th r-derivative of (2r/r')^e, over the coefficient
        double coef = 1.0;
        for (int i = 0; i < d; ++i) coef *= (e - i);
        if (coef == 0.0) return 0.0;
        const double pw = e - d;
        return coef * std::pow(sc, d) * (pw == 0.0 ? 1.0 : std::pow(tq, pw));
    };

    // Term (j, k) contributes pref * base * T where for a component with
    // derivative counts (nr, nt, s-set) T = d_r^nr (2r/r')^e * d_theta^nt cos(k phi) * S-part,
    // S-part built from the families: value A0; d_si -sc^2 ds_i A1;
    // d_si d_sj -sc^2 delta_ij A1 + sc^4 ds_i ds_j A2.
    auto term = [&](int comp, double e, int k, const double* A, bool bound) {
        const auto [a, b] = comps[comp];
        int nr = 0, nt = 0;
        std::vector<int> sv;
        for (int v : {a, b}) {
            if (v == 0) ++nr;
            else if (v == 1) ++nt;
            else if (v >= 2) sv.push_back(v - 2);
        }
        double rf = rpow(e, nr);
        if (bound) rf = std::abs(rf);
        double tf;
        if (bound) tf = std::pow(static_cast<double>(k), nt);
        else if (nt == 0) tf = std::cos(k * phi);
        else if (nt == 1) tf = -k * std::sin(k * phi);
        else tf = -static_cast<double>(k) * k * std::cos(k * phi);
        double sf;
        if (sv.empty()) sf = A[0];
        else if (sv.size() == 1) sf = bound ? sc * sc * std::abs(ds[sv[0]]) * A[1] : -sc * sc * ds[sv[0]] * A[1];
        else {
            const double d = sv[0] == sv[1] ? 1.0 : 0.0;
            sf = bound ? sc * sc * d * A[1] + std::pow(sc, 4) * std::abs(ds[sv[0]] * ds[sv[1]]) * A[2]
                       : -sc * sc * d * A[1] + std::pow(sc, 4) * ds[sv[0]] * ds[sv[1]] * A[2];
        }
        return rf * tf * sf;
    };

    // bound of the leading term sets the scale of the absolute target
    auto comp_bound = [&](int j, int k) {
        std::vector<double> out(nc);
        const double e = c * k + 2.0 * j;
        double A[3] = {0, 0, 0};
        for (int f = 0; f < nf; ++f) A[f] = family_bound(p, j, k, f);
        const double pre = mode_prefactor(p, k) * base;
        for (int q = 0; q < nc; ++q) out[q] = pre * term(q, e, k, A, true);
        return out;
    };
    const double scale = comp_bound(0, 0)[0];
    const auto plan = plan_truncation(nc, -1, -1, tol * scale, comp_bound);

    std::vector<double> total(nc, 0.0), err(nc, 0.0);
    for (int k = 0; k <= plan.K; ++k) {
        const int Jk = plan.J[k];
        if (Jk < 0) continue;
        const auto fam = coefficient_families(p, k, rho, Jk, nf);
        const double pre = mode_prefactor(p, k) * base;
        for (int j = 0; j <= Jk; ++j) {
            const double e = c * k + 2.0 * j;
            double A[3] = {0, 0, 0}, E[3] = {0, 0, 0};
            for (int f = 0; f < nf; ++f) {
                A[f] = fam.A[f][j];
                E[f] = fam.err[f][j];
            }
            for (int q = 0; q < nc; ++q) {
                total[q] += pre * term(q, e, k, A, false);
                err[q] += pre * std::abs(term(q, e, k, E, true));
            }
        }
    }
    GreenJet J;
    J.m = m;
    J.order = order;
    J.value = total[0];
    J.value_error = err[0] + plan.tail[0];
    if (order >= 1) {
        J.grad.resize(m);
        J.grad_error.resize(m);
        for (int a = 0; a < m; ++a) {
            J.grad[a] = total[1 + a];
            J.grad_error[a] = err[1 + a] + plan.tail[1 + a];
        }
    }
    if (order >= 2) {
        J.hess.assign(m * m, 0.0);
        J.hess_error.assign(m * m, 0.0);
        for (int q = 1 + m; q < nc; ++q) {
            const auto [a, b] = comps[q];
            J.hess[a * m + b] = J.hess[b * m + a] = total[q];
            J.hess_error[a * m + b] = J.hess_error[b * m + a] = err[q] + plan.tail[q];
        }
    }
    return J;
}

PolyhomValue polyhom_eval(const ConeParams& p, const ConePoint& x, const ConePoint& y, int J_max, int K_max,
                          double tol) {
    p.validate();
    validate_point(p, x);
    validate_point(p, y);
    check_region(x, y);
    const int m = p.m;
    const double c = p.c();
    const double rp = y.r;
    const double tq = 2.0 * x.r / rp;
    const double R = transverse_distance(x, y);
    const double rho = 2.0 * R / rp;
    const double phi = x.theta - y.theta;
    const double base = std::pow(2.0 / rp, m - 2);
    auto bound = [&](int j, int k) {
        const double e = c * k + 2.0 * j;
        const double pw = e == 0.0 ? 1.0 : std::pow(tq, e);
        return std::vector<double>{mode_prefactor(p, k) * base * family_bound(p, j, k, 0) * pw};
    };
    const double scale = bound(0, 0)[0];
    const auto plan = plan_truncation(1, J_max, K_max, tol * scale, bound);
    PolyhomValue out;
    out.k_max = plan.K;
    double sum = 0.0, err = 0.0;
    for (int k = 0; k <= plan.K; ++k) {
        const int Jk = plan.J[k];
        if (Jk < 0) continue;
        out.j_max = std::max(out.j_max, Jk);
        const auto fam = coefficient_families(p, k, rho, Jk, 1);
        const double pre = mode_prefactor(p, k) * base * std::cos(k * phi);
        for (int j = 0; j <= Jk; ++j) {
            const double e = c * k + 2.0 * j;
            const double pw = e == 0.0 ? 1.0 : std::pow(tq, e);
            sum += pre * fam.A[0][j] * pw;
            err += std::abs(pre) * fam.err[0][j] * pw;
            ++out.terms;
        }
    }
    out.value = sum;
    out.tail_bound = plan.tail[0];
    out.abs_error = err + plan.tail[0];
    return out;
}

ChartFunction::ChartFunction(const ConeParams& p, const ConePoint& y, double s_offset, int J_max, int K_max) {
    p.validate();
    if (!(y.r > 0)) throw RegionError("expansion needs the pole off S");
    const double rho = 2.0 * std::abs(s_offset) / y.r;
    const double base = std::pow(2.0 / y.r, p.m - 2);
    coef_.resize(K_max + 1);
    for (int k = 0; k <= K_max; ++k) {
        const auto fam = coefficient_families(p, k, rho, J_max, 1);
        coef_[k].resize(J_max + 1);
        // a_{j,k} (2/r')^{nu+2j} so that r^{nu+2j} = |Z|^k X^j
        for (int j = 0; j <= J_max; ++j)
            coef_[k][j] = mode_prefactor(p, k) * base * fam.A[0][j] * std::pow(2.0 / y.r, p.c() * k + 2.0 * j);
    }
}

double ChartFunction::operator()(double zr, double zi, double X) const {
    double sum = 0.0;
    double pr = 1.0, pi_ = 0.0; // Re, Im of Z^k
    for (std::size_t k = 0; k < coef_.size(); ++k) {
        double xs = 0.0, xp = 1.0;
        for (double a : coef_[k]) {
            xs += a * xp;
            xp *= X;
        }
        sum += xs * pr;
        const double nr = pr * zr - pi_ * zi;
        pi_ = pr * zi + pi_ * zr;
        pr = nr;
    }
    return sum;
}

SmoothnessProbe beta_smooth_probe(const ConeParams& p, const ConePoint& y, double h) {
    p.validate();
    if (!(h > 0 && h < 0.05 * y.r)) throw DomainError("step must be small against r'");
    // y is taken at theta' = 0 and s' = 0 relative to the probe centre on S
    ChartFunction F(p, y, 0.0, 12, 12);
    SmoothnessProbe out;
    const double dirs[4][3] = {{1, 0, 0}, {0, 1, 0}, {0.6, 0.8, 0}, {0.6, 0, 0.8}};
    const double f0 = F(0, 0, 0);
    for (const auto& d : dirs) {
        // one-sided second difference from the chart origin (the point of S below y)
        const double f1 = F(h * d[0], h * d[1], h * d[2]), f2 = F(2 * h * d[0], 2 * h * d[1], 2 * h * d[2]);
        out.chart = std::max(out.chart, std::abs(f2 - 2.0 * f1 + f0) / (h * h));
    }
    // the same second difference of G itself along the ray theta = theta' in r
    ConePoint yy = y;
    yy.theta = 0.0;
    std::fill(yy.s.begin(), yy.s.end(), 0.0);
    const std::vector<double> s0(p.m - 2, 0.0);
    const double g0 = green_closed(p, make_point(p, 0.0, 0.0, s0), yy).value;
    const double g1 = green_closed(p, make_point(p, h, 0.0, s0), yy).value;
    const double g2 = green_closed(p, make_point(p, 2 * h, 0.0, s0), yy).value;
    out.developed = std::abs(g2 - 2.0 * g1 + g0) / (h * h);
    return out;
}

DoubleExpansionAudit double_expansion_audit(const ConeParams& p, int k, double r, double rp, double R, int shells) {
    p.validate();
    if (!(R > 0) || r < 0 || rp < 0) throw ValidationError("audit needs R > 0 and r, r' >= 0");
    const int m = p.m;
    const double nu = p.c() * k;
    const double pre = mode_prefactor(p, k) * std::pow(2.0, 0.5 * m - 2.0) * std::pow(R, 2.0 - m);
    const double lx = r > 0 ? std::log(r / R) : -1e300, ly = rp > 0 ? std::log(rp / R) : -1e300;
    DoubleExpansionAudit out;
    double sb = 0.0, sM = 0.0;
    for (int n = 0; n < shells; ++n) {
        double shell_b = 0.0, shell_M = 0.0;
        for (int j = 0; j <= n; ++j) {
            const int jp = n - j;
            const double N = nu + j + jp;
            const double lden = std::lgamma(j + 1.0) + std::lgamma(nu + j + 1.0) + std::lgamma(jp + 1.0) +
                                std::lgamma(nu + jp + 1.0);
            const double lpow = (nu + 2.0 * j) * lx + (nu + 2.0 * jp) * ly;
            const double lb = std::lgamma(N + 1.0) + std::lgamma(N + 0.5 * m - 1.0) - lden + lpow;
            const double lM = 0.5 * std::log(pi) + std::lgamma(2.0 * N + m - 3 + 1.0) - 2.0 * N * std::log(2.0) - lden + lpow;
            const double b = pre * std::exp(lb), M = pre * std::exp(lM);
            if (b > M * (1.0 + 1e-12)) out.b_dominated = false;
            shell_b += b;
            shell_M += M;
        }
        sb += shell_b;
        sM += shell_M;
        out.partial_b.push_back(sb);
        out.partial_M.push_back(sM);
        if (n > 2 && shell_M < 1e-14 * sM) out.converged = true;
    }
    return out;
}

} // namespace conekit
