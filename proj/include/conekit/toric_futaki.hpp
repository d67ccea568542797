#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace conekit {

using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& q); // "n/d", or "n" when integral
Rational parse_rational(const std::string& s);

struct Point2 {
    Rational x, y;
};

// Vertices in counterclockwise order.
struct LatticePolygon {
    std::vector<Point2> vertices;
    void validate() const;
};

struct AffineHamiltonian {
    Rational a, b, c;
    Rational operator()(const Rational& x, const Rational& y) const { return a * x + b * y + c; }
    Rational operator()(const Point2& p) const { return (*this)(p.x, p.y); }
};

struct InvariantCurve {
    Rational h_lo, h_hi, vol;
    int mult = 1;
    void validate() const;
};

struct BoundaryIntegral {
    Rational int_H_dsigma;
    Rational perimeter_sigma;
};

// c0 + c1 * (1 - beta)
struct LinearInOneMinusBeta {
    Rational c0, c1;
    Rational at(const Rational& beta) const { return c0 + c1 * (1 - beta); }
};

struct PairResult {
    Rational fut_Y, vol_X, int_X_H, vol_Delta, int_Delta_H;
    Rational bracket;
    LinearInOneMinusBeta futaki_of_beta;
    std::optional<Rational> beta_critical;
};

Rational polygon_area(const LatticePolygon& P);
Rational polygon_moment(const LatticePolygon& P, const AffineHamiltonian& H);
BoundaryIntegral boundary_integral(const LatticePolygon& P, const AffineHamiltonian& H);
Rational toric_futaki(const LatticePolygon& P, const AffineHamiltonian& H);

Rational divisor_volume(const std::vector<InvariantCurve>& curves);
Rational divisor_moment(const std::vector<InvariantCurve>& curves);

PairResult pair_futaki(const Rational& fut_Y, const Rational& vol_X, const Rational& int_X_H,
                       const Rational& vol_Delta, const Rational& int_Delta_H);
std::optional<Rational> critical_beta(const PairResult& result);

struct ToricFixture {
    std::string name;
    LatticePolygon polygon;
    AffineHamiltonian hamiltonian;
    std::vector<InvariantCurve> curves;
};

ToricFixture load_fixture(const std::string& path);
ToricFixture parse_fixture(const std::string& json_text);
// Shipped fixtures by short name ("x1", "x2", "p2").
ToricFixture builtin_fixture(const std::string& name);
std::string fixture_path(const std::string& name);

// Everything reported for one fixture: polygon data, divisor data, pair invariant.
PairResult evaluate_fixture(const ToricFixture& fx);

} // namespace conekit
