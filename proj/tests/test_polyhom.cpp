#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <algorithm>
#include <numbers>
#include <vector>

#include "conekit/errors.hpp"
#include "conekit/polyhom.hpp"
#include "oracles/oracles.hpp"

using namespace conekit;

namespace {
ConePoint pt(const ConeParams& p, double r, double th, std::vector<double> s) { return make_point(p, r, th, std::move(s)); }
} // namespace

TEST_CASE("coefficients against high-precision oracles") {
    for (const auto& row : oracle::coeff) {
        const auto p = make_params(row.beta, row.m);
        CAPTURE(row.beta);
        CAPTURE(row.m);
        CAPTURE(row.j);
        CAPTURE(row.k);
        const auto a = polyhom_coeff(p, row.j, row.k, row.R);
        CHECK(std::abs(a.value - row.value) <= a.abs_error + 1e-14 * std::abs(row.value) + 1e-300);
        CHECK(std::abs(a.value - row.value) <= 1e-10 * std::abs(row.value));
    }
}

TEST_CASE("coefficient bounds, sign and decay") {
    for (const auto& p : {make_params(2.0 / 3.0, 3), make_params(0.5, 4), make_params(1, 3)}) {
        const auto tail = expansion_tail(p);
        for (double R : {0.2, 1.0, 3.0})
            for (int k = 0; k <= 4; ++k)
                for (int j = 0; j <= 8; ++j) {
                    const double a = std::abs(polyhom_coeff(p, j, k, R).value);
                    CHECK(a <= tail.moment_bound(j, k) * (1 + 1e-12));
                    CHECK(a <= tail.bound(j, k));
                }
        CHECK(polyhom_coeff(p, 0, 0, 0.1).value > 0);
        // the coefficients change sign in j, so decay is asserted on the envelope max_{j' >= j} |a_{j',k}|
        for (int k = 0; k <= 2; ++k) {
            std::vector<double> env(21);
            for (int j = 20; j >= 6; --j)
                env[j] = std::max(std::abs(polyhom_coeff(p, j, k, 0.5).value), j < 20 ? env[j + 1] : 0.0);
            for (int j = 6; j <= 12; ++j) CHECK(env[j + 2] < env[j]);
        }
    }
    CHECK_THROWS_AS(polyhom_coeff(make_params(0.5, 3), 0, 0, 0.0), DomainError);
}

TEST_CASE("expansion agrees with the closed form") {
    const auto p = make_params(2.0 / 3.0, 3);
    const auto y = pt(p, 1.0, 0.4, {0.1});
    for (double r : {0.1, 0.3, 0.44}) {
        const auto x = pt(p, r, 2.0, {-0.2});
        const auto e = polyhom_eval(p, x, y, -1, -1, 1e-10);
        const auto c = green_closed(p, x, y);
        CHECK(std::abs(e.value - c.value) <= e.abs_error + c.abs_error);
        CHECK(e.tail_bound <= e.abs_error);
    }
    // the tail bound of a fixed truncation covers the observed error
    const auto x = pt(p, 0.3, 1.0, {0.0});
    const auto e = polyhom_eval(p, x, y, 3, 3);
    const double exact = green_closed(p, x, y).value;
    CHECK(std::abs(e.value - exact) <= e.tail_bound);
    CHECK(e.j_max == 3);
    CHECK(e.k_max == 3);
}

TEST_CASE("on S only the leading term survives") {
    const auto p = make_params(2.0 / 3.0, 3);
    const auto y = pt(p, 1.0, 0.0, {0.3});
    const auto e0 = polyhom_eval(p, pt(p, 0, 0, {0}), y, 0, 0);
    const auto e = polyhom_eval(p, pt(p, 0, 0, {0}), y, 6, 6);
    CHECK(e.value == doctest::Approx(e0.value).epsilon(1e-15));
    CHECK(e.value == doctest::Approx(green_closed(p, pt(p, 0, 0, {0}), y).value).epsilon(1e-10));
}

TEST_CASE("region and jets") {
    const auto p = make_params(2.0 / 3.0, 3);
    const auto y = pt(p, 1.0, 0.0, {0.0});
    CHECK_THROWS_AS(polyhom_eval(p, pt(p, 0.5, 0, {0}), y), RegionError);
    CHECK_THROWS_AS(polyhom_eval(p, pt(p, 0.1, 0, {0}), pt(p, 0, 0, {1})), RegionError);
    const auto x = pt(p, 0.2, 0.7, {0.15});
    const auto a = polyhom_jet(p, x, y, 2, 1e-12), b = green_closed_jet(p, x, y, 2, 1e-12);
    CHECK(a.value == doctest::Approx(b.value).epsilon(1e-11));
    for (int i = 0; i < 3; ++i) CHECK(std::abs(a.d(i) - b.d(i)) <= 1e-10 * (1 + std::abs(b.d(i))));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(std::abs(a.dd(i, j) - b.dd(i, j)) <= 1e-9 * (1 + std::abs(b.dd(i, j))));
}

TEST_CASE("beta-smoothness in the chart") {
    // chart second differences stay bounded; developed ones grow like h^{-1/2} for beta = 2/3
    const auto p = make_params(2.0 / 3.0, 3);
    const auto y = pt(p, 1.0, 0.0, {0.0});
    const auto s1 = beta_smooth_probe(p, y, 1e-2), s2 = beta_smooth_probe(p, y, 2.5e-3);
    CHECK(s2.chart <= 1.1 * s1.chart);
    CHECK(s2.developed / s1.developed == doctest::Approx(2.0).epsilon(0.1));
    const auto p1 = make_params(1, 3);
    const auto f1 = beta_smooth_probe(p1, pt(p1, 1, 0, {0}), 1e-2), f2 = beta_smooth_probe(p1, pt(p1, 1, 0, {0}), 2.5e-3);
    CHECK(f2.developed <= 1.1 * f1.developed);
    ChartFunction F(p, y, 0.0, 8, 8);
    CHECK(F(0, 0, 0) == doctest::Approx(polyhom_eval(p, pt(p, 0, 0, {0}), y, 8, 8).value).epsilon(1e-14));
}

TEST_CASE("double expansion audit") {
    for (const auto& p : {make_params(2.0 / 3.0, 3), make_params(0.5, 4)})
        for (int k : {0, 1, 3}) {
            const auto a = double_expansion_audit(p, k, 0.2, 0.3, 1.0, 80);
            CHECK(a.b_dominated);
            CHECK(a.converged);
            CHECK(a.partial_b.back() <= a.partial_M.back());
        }
}
