#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "conekit/cone_probes.hpp"
#include "conekit/errors.hpp"

using namespace conekit;

namespace {
ConePoint pt(const ConeParams& p, double r, double th, std::vector<double> s) { return make_point(p, r, th, std::move(s)); }
} // namespace

TEST_CASE("derivative selectors") {
    const auto p = make_params(2.0 / 3.0, 4);
    CHECK(to_string(parse_deriv("ss(1,2)")) == "ss(1,2)");
    CHECK(parse_deriv("thetas(2)").kind == DerivKind::thetas);
    CHECK_THROWS_AS(parse_deriv("rr(1)"), ValidationError);
    CHECK_THROWS_AS(parse_deriv("rs(3)").validate(p), ValidationError);
}

TEST_CASE("kernel matches finite differences on both routes") {
    const auto p = make_params(2.0 / 3.0, 3);
    const auto y = pt(p, 1.0, 0.0, {0.0});
    KernelOptions o;
    o.fd_check = true;
    for (const char* d : {"ss(1,1)", "rs(1)", "thetas(1)"})
        for (const auto& x : {pt(p, 0.2, 0.8, {0.1}), pt(p, 0.7, 2.0, {-0.3})}) {
            CAPTURE(d);
            const auto k = deriv_kernel(p, parse_deriv(d), x, y, o);
            CHECK(k.fd_checked);
            CHECK(k.fd_agrees);
        }
    // both routes agree where both are valid
    const auto x = pt(p, 0.3, 0.5, {0.2});
    KernelOptions e, c;
    e.route = KernelRoute::expansion;
    c.route = KernelRoute::closed_form;
    for (const char* d : {"ss(1,1)", "rs(1)", "thetas(1)"}) {
        const auto a = deriv_kernel(p, parse_deriv(d), x, y, e), b = deriv_kernel(p, parse_deriv(d), x, y, c);
        CHECK(std::abs(a.value - b.value) <= a.abs_error + b.abs_error + 1e-12);
    }
    CHECK_THROWS_AS(deriv_kernel(p, parse_deriv("rs(1)"), y, y), SingularityError);
}

TEST_CASE("kernel homogeneity of degree -m") {
    for (const auto& p : {make_params(2.0 / 3.0, 3), make_params(0.5, 4)}) {
        std::vector<double> s1(p.m - 2, 0.1), s2(p.m - 2, -0.2);
        const auto x = pt(p, 0.6, 1.0, s1), y = pt(p, 1.1, 3.0, s2);
        for (const char* d : {"ss(1,1)", "rs(1)", "thetas(1)"})
            for (double lam : {0.5, 2.0}) {
                const double k = deriv_kernel(p, parse_deriv(d), x, y).value;
                const double kl = deriv_kernel(p, parse_deriv(d), dilate(x, lam), dilate(y, lam)).value;
                CHECK(kl * std::pow(lam, p.m) == doctest::Approx(k).epsilon(1e-8));
            }
    }
}

TEST_CASE("r and theta kernels vanish on S") {
    const auto p = make_params(2.0 / 3.0, 3);
    const auto y = pt(p, 1.0, 0.0, {0.0});
    for (const char* d : {"rs(1)", "thetas(1)"}) {
        CHECK(deriv_kernel(p, parse_deriv(d), pt(p, 0, 0.3, {0.1}), y).value == 0.0);
        const double a = std::abs(deriv_kernel(p, parse_deriv(d), pt(p, 1e-2, 0.3, {0.1}), y).value);
        const double b = std::abs(deriv_kernel(p, parse_deriv(d), pt(p, 1e-4, 0.3, {0.1}), y).value);
        CHECK(b < a);
        // rate r^mu with mu = 1/2
        CHECK(std::log10(a / b) / 2 == doctest::Approx(0.5).epsilon(0.1));
    }
    // the ss kernel does not vanish there
    CHECK(std::abs(deriv_kernel(p, parse_deriv("ss(1,1)"), pt(p, 0, 0, {0.1}), y).value) > 1e-3);
}

TEST_CASE("kernel bound probes are finite and stable under refinement") {
    const auto p = make_params(2.0 / 3.0, 3);
    const auto D = parse_deriv("rs(1)");
    const auto a = kernel_bounds(p, D, 2), b = kernel_bounds(p, D, 3);
    CHECK(b.samples > a.samples);
    for (auto [u, v] : {std::pair{a.kappa2, b.kappa2}, {a.kappa3, b.kappa3}, {a.kappa4, b.kappa4}}) {
        CHECK(std::isfinite(v));
        CHECK(v > 0);
        CHECK(std::abs(v / u - 1) <= 0.1);
    }
    CHECK(b.kappa1 == 0.0);
    CHECK_THROWS_AS(kernel_bounds(make_params(0.5, 4), D, 1), ValidationError);
}

TEST_CASE("Schauder probe preconditions") {
    const auto p = make_params(2.0 / 3.0, 3);
    const auto D = parse_deriv("rs(1)");
    CHECK_THROWS_AS(schauder_probe(p, BumpField{}, D, 0.6), ValidationError);
    CHECK_THROWS_AS(schauder_probe(p, BumpField{}, D, 0.0), ValidationError);
    CHECK_THROWS_AS(schauder_probe(make_params(1, 3), BumpField{}, D, 0.1), ValidationError);
    const BumpField b;
    CHECK(b(p, pt(p, 1.0, 0.0, {0.0})) == doctest::Approx(1.0));
    CHECK(b(p, pt(p, 3.0, 0.0, {0.0})) == 0.0);
}

TEST_CASE("Schauder pipeline reproduces the flat probe at beta = 1") {
    const auto p = make_params(1, 3);
    const auto D = parse_deriv("ss(1,1)");
    SchauderOptions cone, flat;
    cone.points = flat.points = 40;
    flat.flat_kernel = true;
    const auto a = schauder_ratio_unchecked(p, BumpField{}, D, 0.5, cone);
    const auto b = schauder_ratio_unchecked(p, BumpField{}, D, 0.5, flat);
    CHECK(std::isfinite(a.ratio));
    CHECK(a.ratio == doctest::Approx(b.ratio).epsilon(0.1));
}
