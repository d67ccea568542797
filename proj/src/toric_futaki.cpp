#include "conekit/toric_futaki.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "conekit/errors.hpp"

namespace conekit {

using boost::multiprecision::cpp_int;

std::string to_string(const Rational& q) {
    const cpp_int n = boost::multiprecision::numerator(q), d = boost::multiprecision::denominator(q);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

Rational parse_rational(const std::string& s) {
    try {
        const auto slash = s.find('/');
        if (s.find_first_of(".eE") != std::string::npos) throw ValidationError("floating literal");
        if (slash == std::string::npos) return Rational(cpp_int(s));
        const cpp_int d(s.substr(slash + 1));
        if (d == 0) throw ValidationError("zero denominator");
        return Rational(cpp_int(s.substr(0, slash)), d);
    } catch (const ValidationError&) {
        throw ValidationError("not an exact rational: '" + s + "'");
    } catch (const std::exception&) {
        throw ValidationError("not an exact rational: '" + s + "'");
    }
}

namespace {

Rational cross(const Point2& o, const Point2& a, const Point2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool is_integer(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

cpp_int gcd_int(cpp_int a, cpp_int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        cpp_int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Lattice length of the segment p -> q between lattice points.
Rational lattice_length(const Point2& p, const Point2& q) {
    const Rational dx = q.x - p.x, dy = q.y - p.y;
    if (!is_integer(dx) || !is_integer(dy))
        throw ValidationError("non-lattice edge: boundary measure needs integral vertices");
    return Rational(gcd_int(boost::multiprecision::numerator(dx), boost::multiprecision::numerator(dy)));
}

} // namespace

void LatticePolygon::validate() const {
    const std::size_t n = vertices.size();
    if (n < 3) throw ValidationError("polygon needs at least 3 vertices");
    // every other vertex strictly left of every edge: convex, simple, CCW
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = vertices[i];
        const auto& b = vertices[(i + 1) % n];
        if (a.x == b.x && a.y == b.y) throw ValidationError("polygon has a repeated vertex");
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || j == (i + 1) % n) continue;
            if (cross(a, b, vertices[j]) <= 0)
                throw ValidationError("polygon must be strictly convex and counterclockwise");
        }
    }
}

void InvariantCurve::validate() const {
    if (mult <= 0) throw ValidationError("curve multiplicity must be positive");
    if (vol <= 0) throw ValidationError("curve volume must be positive");
    if (h_lo > h_hi) throw ValidationError("curve needs h_lo <= h_hi");
    if (h_lo < h_hi && vol != h_hi - h_lo)
        throw ValidationError("weight-one invariant sphere must have vol = h_hi - h_lo");
}

Rational polygon_area(const LatticePolygon& P) {
    P.validate();
    Rational twice = 0;
    const std::size_t n = P.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = P.vertices[i];
        const auto& b = P.vertices[(i + 1) % n];
        twice += a.x * b.y - b.x * a.y;
    }
    if (twice <= 0) throw ValidationError("degenerate polygon");
    return twice / 2;
}

Rational polygon_moment(const LatticePolygon& P, const AffineHamiltonian& H) {
    P.validate();
    Rational total = 0;
    const auto& v = P.vertices;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        const Rational area = cross(v[0], v[i], v[i + 1]) / 2;
        const Point2 centroid{(v[0].x + v[i].x + v[i + 1].x) / 3, (v[0].y + v[i].y + v[i + 1].y) / 3};
        total += area * H(centroid);
    }
    return total;
}

BoundaryIntegral boundary_integral(const LatticePolygon& P, const AffineHamiltonian& H) {
    P.validate();
    BoundaryIntegral out{0, 0};
    const std::size_t n = P.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = P.vertices[i];
        const auto& b = P.vertices[(i + 1) % n];
        const Rational len = lattice_length(a, b);
        out.perimeter_sigma += len;
        out.int_H_dsigma += len * (H(a) + H(b)) / 2;
    }
    return out;
}

Rational toric_futaki(const LatticePolygon& P, const AffineHamiltonian& H) {
    const Rational area = polygon_area(P);
    const auto bd = boundary_integral(P, H);
    return bd.int_H_dsigma - bd.perimeter_sigma / area * polygon_moment(P, H);
}

Rational divisor_volume(const std::vector<InvariantCurve>& curves) {
    Rational v = 0;
    for (const auto& c : curves) {
        c.validate();
        v += c.mult * c.vol;
    }
    return v;
}

Rational divisor_moment(const std::vector<InvariantCurve>& curves) {
    Rational m = 0;
    for (const auto& c : curves) {
        c.validate();
        // pushforward of the invariant measure to [h_lo, h_hi] is Lebesgue
        if (c.h_lo < c.h_hi)
            m += c.mult * (c.h_hi * c.h_hi - c.h_lo * c.h_lo) / 2;
        else
            m += c.mult * c.h_lo * c.vol;
    }
    return m;
}

PairResult pair_futaki(const Rational& fut_Y, const Rational& vol_X, const Rational& int_X_H,
                       const Rational& vol_Delta, const Rational& int_Delta_H) {
    if (vol_X == 0) throw ValidationError("pair_futaki: Vol(X) must be nonzero");
    PairResult r;
    r.fut_Y = fut_Y;
    r.vol_X = vol_X;
    r.int_X_H = int_X_H;
    r.vol_Delta = vol_Delta;
    r.int_Delta_H = int_Delta_H;
    r.bracket = int_Delta_H - vol_Delta / vol_X * int_X_H;
    r.futaki_of_beta = {fut_Y, -r.bracket};
    r.beta_critical = critical_beta(r);
    return r;
}

std::optional<Rational> critical_beta(const PairResult& result) {
    if (result.bracket == 0) return std::nullopt;
    const Rational beta = 1 - result.fut_Y / result.bracket;
    if (beta > 0 && beta <= 1) return beta;
    return std::nullopt;
}

namespace {

Rational json_rational(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(cpp_int(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer()) {
        const long long d = j[1].get<long long>();
        if (d == 0) throw ValidationError("zero denominator in fixture");
        return Rational(cpp_int(j[0].get<long long>()), cpp_int(d));
    }
    throw ValidationError("fixture values must be exact rationals ([num, den], integer or \"n/d\")");
}

} // namespace

ToricFixture parse_fixture(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw ValidationError(std::string("fixture is not valid JSON: ") + e.what());
    }
    ToricFixture fx;
    try {
        fx.name = j.value("name", std::string{});
        for (const auto& v : j.at("vertices")) {
            if (!v.is_array() || v.size() != 2) throw ValidationError("vertex must be a pair");
            fx.polygon.vertices.push_back({json_rational(v[0]), json_rational(v[1])});
        }
        const auto& h = j.at("hamiltonian");
        fx.hamiltonian = {json_rational(h.at("a")), json_rational(h.at("b")), json_rational(h.at("c"))};
        if (j.contains("curves")) {
            for (const auto& c : j.at("curves")) {
                InvariantCurve ic{json_rational(c.at("h_lo")), json_rational(c.at("h_hi")), json_rational(c.at("vol")),
                                  c.value("mult", 1)};
                ic.validate();
                fx.curves.push_back(ic);
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed fixture: ") + e.what());
    }
    fx.polygon.validate();
    return fx;
}

ToricFixture load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open fixture file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_fixture(ss.str());
}

std::string fixture_path(const std::string& name) {
    return std::string(CONEKIT_DATA_DIR) + "/fixtures/" + name + ".json";
}

ToricFixture builtin_fixture(const std::string& name) { return load_fixture(fixture_path(name)); }

PairResult evaluate_fixture(const ToricFixture& fx) {
    const Rational fut = toric_futaki(fx.polygon, fx.hamiltonian);
    return pair_futaki(fut, polygon_area(fx.polygon), polygon_moment(fx.polygon, fx.hamiltonian),
                       divisor_volume(fx.curves), divisor_moment(fx.curves));
}

} // namespace conekit
