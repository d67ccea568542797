// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "conekit/cone_green.hpp"
#include "conekit/cone_probes.hpp"
#include "conekit/gibbons_hawking.hpp"
#include "conekit/polyhom.hpp"
#include "conekit/special_functions.hpp"
#include "conekit/toric_futaki.hpp"

using namespace conekit;

namespace {

constexpr double pi = std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) detail << "failed: ";
            else detail << "; ";
            detail << what;
            pass = false;
        }
    }
};

Rational q(long long n, long long d = 1) { return Rational(n, d); }

ConePoint pt(const ConeParams& p, double r, double th, std::vector<double> s) { return make_point(p, r, th, std::move(s)); }

ConePoint random_point(const ConeParams& p, std::mt19937_64& rng, double rmin, double rmax) {
    std::uniform_real_distribution<double> U(0, 1);
    std::vector<double> s(p.m - 2);
    for (auto& v : s) v = U(rng) - 0.5;
    return pt(p, rmin + (rmax - rmin) * U(rng), 2 * pi * U(rng), s);
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

void c1(Outcome& o) {
    const auto fx = builtin_fixture("x2");
    o.require(toric_futaki(fx.polygon, fx.hamiltonian) == q(-2, 3), "Fut(X2)");
    o.require(polygon_area(fx.polygon) == q(7, 2), "Vol(X2)");
    o.require(polygon_moment(fx.polygon, fx.hamiltonian) == q(19, 3), "int H");
    o.require(divisor_volume(fx.curves) == 7, "Vol(Delta)");
    o.require(divisor_moment(fx.curves) == q(17, 2), "int_Delta H");
    const auto r = evaluate_fixture(fx);
    o.require(r.futaki_of_beta.c0 == q(-2, 3) && r.futaki_of_beta.c1 == q(25, 6), "pair polynomial");
    o.require(critical_beta(r) == q(21, 25), "critical beta");
    o.detail << "Fut = " << to_string(r.fut_Y) << " + " << to_string(r.futaki_of_beta.c1) << "(1-beta), beta* = "
             << (r.beta_critical ? to_string(*r.beta_critical) : "none");
}

void c2(Outcome& o) {
    const auto fx = builtin_fixture("x1");
    const auto r = evaluate_fixture(fx);
    o.require(toric_futaki(fx.polygon, fx.hamiltonian) == q(2, 3), "Fut(X1)");
    o.require(r.futaki_of_beta.c0 == q(2, 3) && r.futaki_of_beta.c1 == q(-14, 3), "pair polynomial");
    o.require(critical_beta(r) == q(6, 7), "critical beta");
    o.detail << "Fut = " << to_string(r.fut_Y) << " + " << to_string(r.futaki_of_beta.c1) << "(1-beta), beta* = "
             << (r.beta_critical ? to_string(*r.beta_critical) : "none");
}

void c3(Outcome& o) {
    const auto fx = builtin_fixture("p2");
    int n = 0;
    for (long long a = -3; a <= 3; ++a)
        for (long long b = -3; b <= 3; ++b)
            for (const auto& c : {q(0), q(2), q(-5, 3)}) {
                o.require(toric_futaki(fx.polygon, {q(a), q(b, 2), c}) == 0, "H = " + std::to_string(a) + "x + ...");
                ++n;
            }
    o.detail << n << " Hamiltonians, all exactly 0";
}

void c4(Outcome& o) {
    const auto p = make_params(1, 3);
    std::mt19937_64 rng(2024);
    double worst = 0;
    for (int i = 0; i < 50; ++i) {
        const auto x = random_point(p, rng, 0, 2), y = random_point(p, rng, 0, 2);
        const double v = green_eval(p, x, y).value * 4 * pi * euclidean_distance(x, y);
        worst = std::max(worst, std::abs(v - 1));
    }
    o.require(worst <= 1e-6, "max |G 4 pi |x-y| - 1| = " + fmt(worst));
    o.detail << "50 pairs, max |G 4 pi |x-y| - 1| = " << fmt(worst);
}

void c5(Outcome& o) {
    double worst = 0, worst_err = 0;
    int n = 0;
    for (double beta : {1.0, 2.0 / 3.0, 0.5})
        for (int m : {3, 4}) {
            const auto p = make_params(beta, m);
            for (int k = 0; k <= 3; ++k)
                for (double r : {0.1, 0.3, 0.45})
                    for (double R : {0.25, 0.5, 1.0}) {
                        const auto a = modal_gk_K(p, k, r, 1.0, R), b = modal_gk_I(p, k, r, 1.0, R);
                        const double d = std::abs(a.value - b.value), e = a.abs_error + b.abs_error;
                        const double slack = 4e-16 * std::abs(a.value);
                        o.require(d <= e + slack, "beta " + fmt(beta) + " m " + std::to_string(m) + " k " + std::to_string(k));
                        worst = std::max(worst, d);
                        worst_err = std::max(worst_err, e);
                        ++n;
                    }
        }
    o.require(worst <= 1e-8, "max |difference| = " + fmt(worst));
    o.detail << n << " cases, max |K - I| = " << fmt(worst) << ", max combined error " << fmt(worst_err);
}

void c6(Outcome& o) {
    std::mt19937_64 rng(77);
    double worst = 0;
    for (auto [beta, m] : {std::pair{1.0, 3}, {2.0 / 3.0, 3}, {0.5, 4}}) {
        const auto p = make_params(beta, m);
        for (int i = 0; i < 20; ++i) {
            const auto x = random_point(p, rng, 0.05, 1.5), y = random_point(p, rng, 0.05, 1.5);
            const auto a = green_eval(p, x, y);
            const auto b = green_via_heat(p, x, y, -1);
            const double d = std::abs(a.value - b.value);
            o.require(d <= a.abs_error + b.abs_error, "beta " + fmt(beta) + " pair " + std::to_string(i));
            worst = std::max(worst, d / std::abs(a.value));
        }
    }
    o.detail << "60 pairs, max relative difference " << fmt(worst);
}

void c7(Outcome& o) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> U(0, 1);
    const auto p = make_params(2.0 / 3.0, 3);
    double worst = 0, min_margin = 1e300;
    for (int i = 0; i < 20; ++i) {
        const auto y = random_point(p, rng, 0.5, 1.5);
        auto x = random_point(p, rng, 0, 1);
        x.r = 0.45 * y.r * U(rng);
        const auto e = polyhom_eval(p, x, y);
        const auto g = green_eval(p, x, y);
        const double d = std::abs(e.value - g.value);
        o.require(d <= e.abs_error + g.abs_error, "pair " + std::to_string(i));
        worst = std::max(worst, d / g.value);
        // truncation at fixed low order, against the closed form at tight tolerance
        const auto t = polyhom_eval(p, x, y, 3, 3);
        const double exact = green_closed_jet(p, x, y, 0, 1e-14).value;
        const double trunc = std::abs(t.value - exact);
        o.require(trunc <= t.tail_bound, "tail bound exceeded at pair " + std::to_string(i));
        if (trunc > 0) min_margin = std::min(min_margin, t.tail_bound / trunc);
    }
    o.detail << "20 pairs, max relative difference " << fmt(worst) << ", min tail bound / truncation error (J=K=3) "
             << fmt(min_margin);
}

void c8(Outcome& o) {
    double min_order = 1e300;
    for (double beta : {2.0 / 3.0, 0.5}) {
        const auto p = make_params(beta, 3);
        const auto x = pt(p, 0.8, 0.3, {0.0});
        for (int k : {0, 1, 2})
            for (double lam : {1.0, 2.5}) {
                ScalarField phi = [&](const ConePoint& z) { return bessel_j(p.c() * k, lam * z.r).value * std::cos(k * z.theta); };
                std::vector<double> res;
                for (double h : {0.04, 0.02, 0.01})
                    res.push_back(std::abs(laplacian_cone(p, phi, x, h).value + lam * lam * phi(x)));
                for (std::size_t i = 0; i + 1 < res.size(); ++i) min_order = std::min(min_order, std::log2(res[i] / res[i + 1]));
            }
    }
    o.require(min_order >= 1.8, "observed order " + fmt(min_order));
    o.detail << "min observed order " << fmt(min_order);
}

void c9(Outcome& o) {
    int n = 0;
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            const double p = 4.0 * i / 9, qq = 4.0 * j / 9;
            o.require(lemma1_check(p, qq).holds, "Lemma 1 at (" + fmt(p) + ", " + fmt(qq) + ")");
            ++n;
        }
    double worst = 0;
    for (double p = 1; p <= 50; p += 0.5)
        for (double qq = 1; qq <= 50; qq += 0.5) worst = std::max(worst, lemma2_check(p, qq));
    o.require(worst <= 1.1, "Lemma 2 max " + fmt(worst));
    o.detail << "Lemma 1 on " << n << " points, Lemma 2 max ratio " << fmt(worst);
}

void c10(Outcome& o) {
    using namespace gh;
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> U(-1, 1);
    const auto flat = HarmonicField::flat_newton({0, 0, 0});
    double wflat = 0;
    for (int i = 0; i < 100; ++i) {
        Vec3 x;
        do x = {U(rng), U(rng), U(rng)};
        while (std::hypot(x[0], x[1], x[2]) < 0.1);
        const auto W = gh_curvature(flat, x);
        for (const auto& r : W)
            for (double v : r) wflat = std::max(wflat, std::abs(v));
    }
    o.require(wflat <= 1e-8, "flat W = " + fmt(wflat));
    const auto two = HarmonicField::multi_pole({{0, 0, 0}, {0.5, 0.2, -0.1}}, {1.0, 1.0});
    const auto p = make_params(2.0 / 3.0, 3);
    const auto cone = HarmonicField::cone_green(p, pt(p, 1.0, 0.0, {0.0}));
    double asym = 0, tr = 0, resid = 0;
    for (int i = 0; i < 20; ++i) {
        Vec3 x{U(rng), U(rng), U(rng)};
        if (std::hypot(x[0], x[1], x[2]) < 0.1 || std::hypot(x[0] - 0.5, x[1] - 0.2, x[2] + 0.1) < 0.1) continue;
        for (const auto* f : {&two, &flat}) {
            const auto W = gh_curvature(*f, x);
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) asym = std::max(asym, std::abs(W[a][b] - W[b][a]));
            tr = std::max(tr, std::abs(trace(W)));
            resid = std::max(resid, connection_residual(*f, x));
        }
    }
    const Vec3 xc{0.2, 0.3, 0.25};
    const auto Wc = gh_curvature(cone, xc);
    tr = std::max(tr, std::abs(trace(Wc)));
    resid = std::max(resid, connection_residual(cone, xc));
    o.require(asym == 0 && tr <= 1e-10, "symmetry/trace");
    o.require(resid <= 1e-8, "connection residual " + fmt(resid));
    const Vec3 x{0.3, -0.4, 0.7};
    const double e1 = gh_curvature_fd_check(two, x, 4e-3), e2 = gh_curvature_fd_check(two, x, 2e-3),
                 e3 = gh_curvature_fd_check(two, x, 1e-3);
    const double order = std::min(std::log2(e1 / e2), std::log2(e2 / e3));
    o.require(order >= 1.0, "fd order " + fmt(order));
    std::vector<double> radii;
    for (int i = 0; i < 6; ++i) radii.push_back(1e-6 * std::pow(10.0, 0.5 * i));
    std::ostringstream ex;
    for (double beta : {2.0 / 3.0, 0.6, 0.5}) {
        const auto pb = make_params(beta, 3);
        const auto g = curvature_growth(HarmonicField::cone_green(pb, pt(pb, 1.0, 0.0, {0.0})), radii);
        o.require(std::abs(g.exponent - (1 / beta - 2)) <= 0.1, "growth exponent at beta " + fmt(beta));
        ex << " " << fmt(g.exponent);
    }
    o.detail << "flat |W| " << fmt(wflat) << ", |trace| " << fmt(tr) << ", connection residual " << fmt(resid)
             << ", fd order " << fmt(order) << ", growth exponents" << ex.str() << " (expected -0.5 -0.333 0)";
}

void c11(Outcome& o) {
    using namespace gh;
    const auto flat = HarmonicField::flat_newton({0, 0, 0});
    const HoloSeed sq = [](std::complex<double> z) { return std::sqrt(0.5 * z); };
    const double beta = 2.0 / 3.0;
    const auto p = make_params(beta, 3);
    const auto cone = HarmonicField::cone_green(p, pt(p, 1.0, 0.0, {0.0}));
    const HoloSeed cs = [beta](std::complex<double> z) { return 1.0 - std::pow(z, 1 / beta); };
    double dflat = 0, dcone = 0;
    for (const auto& base : {std::pair{0.3, 0.2}, {-0.2, 0.5}}) {
        const auto r0 = holo_pair(flat, {0.0, base.first, base.second}, 0.0, sq);
        const auto c0 = holo_pair(cone, {0.0, base.first, base.second}, 0.0, cs);
        for (double x1 : {-0.5, 0.0, 0.5})
            for (double psi : {0.0, pi / 2, pi}) {
                const auto a = holo_pair(flat, {x1, base.first, base.second}, psi, sq);
                dflat = std::max(dflat, std::abs(a.h * a.h_tilde - r0.h * r0.h_tilde));
                const auto b = holo_pair(cone, {x1, base.first, base.second}, psi, cs);
                dcone = std::max(dcone, std::abs(b.h * b.h_tilde - c0.h * c0.h_tilde));
                // the product is the square of the seed
                dflat = std::max(dflat, std::abs(a.h * a.h_tilde - a.h0_at_base * a.h0_at_base));
                dcone = std::max(dcone, std::abs(b.h * b.h_tilde - b.h0_at_base * b.h0_at_base));
            }
    }
    o.require(dflat <= 1e-10, "flat variation " + fmt(dflat));
    o.require(dcone <= 1e-6, "cone variation " + fmt(dcone));
    o.detail << "variation of h h~: flat " << fmt(dflat) << ", cone " << fmt(dcone);
}

void c12(Outcome& o) {
    const auto p = make_params(2.0 / 3.0, 3);
    const double mu = p.mu();
    SchauderOptions opt;
    opt.points = 100;
    opt.pair_budget = 3000;
    std::ostringstream out;
    for (const char* d : {"ss(1,1)", "rs(1)", "thetas(1)"}) {
        const auto D = parse_deriv(d);
        BumpField rho, rho2;
        rho2.scale = 2.0;
        // T rho does not depend on alpha; one quadrature pass serves both exponents
        const auto rep = schauder_probe(p, rho, D, 0.5 * mu, opt);
        const auto rep2 = schauder_probe(p, rho2, D, 0.5 * mu, opt);
        for (double alpha : {0.5 * mu, 0.9 * mu}) {
            const double r1 = schauder_resample(p, rep, rho, alpha, opt.pair_budget, opt.pair_seed);
            const double r2 = schauder_resample(p, rep2, rho2, alpha, opt.pair_budget, opt.pair_seed);
            std::vector<double> mc;
            for (std::uint64_t seed : {101, 202, 303}) mc.push_back(schauder_resample(p, rep, rho, alpha, opt.pair_budget, seed));
            const double mean = (mc[0] + mc[1] + mc[2]) / 3;
            double spread = 0;
            for (double v : mc) spread = std::max(spread, std::abs(v / mean - 1));
            const std::string tag = std::string(d) + " alpha " + fmt(alpha);
            o.require(std::isfinite(r1) && r1 > 0, tag + " ratio not finite");
            o.require(std::abs(r2 / r1 - 1) <= 0.05, tag + " dilation " + fmt(r2 / r1));
            o.require(spread <= 0.2, tag + " Monte Carlo spread " + fmt(spread));
            out << " " << tag << ": ratio " << fmt(r1) << ", dilated " << fmt(r2) << ", MC spread " << fmt(spread) << ";";
        }
    }
    o.detail << "beta 2/3 (alpha >= mu not asserted)" << out.str();
}

} // namespace

int main(int argc, char** argv) {
    // optional args: criterion numbers to run
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"X2 fixture exact values", c1},
        {"X1 fixture exact values", c2},
        {"projective plane Futaki vanishes", c3},
        {"flat reduction of G", c4},
        {"K and I modal representations agree", c5},
        {"heat route agrees with modal route", c6},
        {"expansion near S agrees, tail bound holds", c7},
        {"eigenfunction identity, order >= 1.8", c8},
        {"Lemma 1 grid and Lemma 2 ratio", c9},
        {"Gibbons-Hawking curvature checks", c10},
        {"holomorphic pair product invariant", c11},
        {"Schauder ratio finite, dilation and Monte Carlo stable", c12},
    };
    int failures = 0;
    std::size_t ran = 0;
    std::vector<bool> selected(criteria.size(), argc == 1);
    for (int a = 1; a < argc; ++a) {
        const int n = std::atoi(argv[a]);
        if (n >= 1 && n <= static_cast<int>(criteria.size())) selected[n - 1] = true;
    }
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (!selected[i]) continue;
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << " exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] criterion %zu: %s (%.1f s) %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                    o.detail.str().c_str());
        std::fflush(stdout);
        if (!o.pass) ++failures;
        ++ran;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(ran) - failures, ran);
    return failures == 0 ? 0 : 1;
}
