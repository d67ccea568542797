#include "conekit/cone_geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "conekit/errors.hpp"

namespace conekit {

void ConeParams::validate() const {
    if (!(beta > 0.0 && beta <= 1.0)) throw ValidationError("beta must lie in (0, 1]");
    if (m < 3) throw ValidationError("m must be an integer >= 3");
}

ConeParams make_params(double beta, int m) {
    ConeParams p{beta, m};
    p.validate();
    return p;
}

double wrap_angle(double theta) {
    constexpr double tau = 2.0 * std::numbers::pi;
    double t = std::fmod(theta, tau);
    if (t < 0) t += tau;
    if (t >= tau) t = 0.0;
    return t;
}

ConePoint make_point(const ConeParams& p, double r, double theta, std::vector<double> s) {
    ConePoint x{r, wrap_angle(theta), std::move(s)};
    validate_point(p, x);
    return x;
}

void validate_point(const ConeParams& p, const ConePoint& x) {
    if (!(x.r >= 0.0) || !std::isfinite(x.r)) throw ValidationError("point needs r >= 0");
    if (!std::isfinite(x.theta)) throw ValidationError("point angle must be finite");
    if (static_cast<int>(x.s.size()) != p.m - 2) throw ValidationError("point needs m - 2 transverse coordinates");
    for (double v : x.s)
        if (!std::isfinite(v)) throw ValidationError("transverse coordinates must be finite");
}

double transverse_distance(const ConePoint& x, const ConePoint& y) {
    double q = 0.0;
    for (std::size_t i = 0; i < x.s.size(); ++i) q += (x.s[i] - y.s[i]) * (x.s[i] - y.s[i]);
    return std::sqrt(q);
}

std::vector<double> euclidean_coords(const ConePoint& x) {
    std::vector<double> e{x.r * std::cos(x.theta), x.r * std::sin(x.theta)};
    e.insert(e.end(), x.s.begin(), x.s.end());
    return e;
}

double euclidean_distance(const ConePoint& x, const ConePoint& y) {
    const auto a = euclidean_coords(x), b = euclidean_coords(y);
    double q = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) q += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(q);
}

double cone_distance(const ConeParams& p, const ConePoint& x, const ConePoint& y) {
    constexpr double pi = std::numbers::pi;
    double d = std::abs(wrap_angle(x.theta - y.theta));
    d = std::min(d, 2.0 * pi - d);
    const double ang = p.beta * d;
    const double R = transverse_distance(x, y);
    const double planar2 = ang < pi ? x.r * x.r + y.r * y.r - 2.0 * x.r * y.r * std::cos(ang) : (x.r + y.r) * (x.r + y.r);
    return std::sqrt(std::max(0.0, planar2) + R * R);
}

std::vector<double> chart_iota(const ConeParams& p, const ConePoint& x) {
    const double rc = std::pow(x.r, p.c());
    std::vector<double> out{rc * std::cos(x.theta), rc * std::sin(x.theta), x.r * x.r};
    out.insert(out.end(), x.s.begin(), x.s.end());
    return out;
}

ConePoint dilate(const ConePoint& x, double lambda) {
    ConePoint y = x;
    y.r *= lambda;
    for (double& v : y.s) v *= lambda;
    return y;
}

void DerivSelector::validate(const ConeParams& p) const {
    const int n = p.m - 2;
    if (i < 1 || i > n) throw ValidationError("derivative index out of range 1..m-2");
    if (kind == DerivKind::ss && (j < 1 || j > n)) throw ValidationError("derivative index out of range 1..m-2");
}

DerivSelector parse_deriv(const std::string& t) {
    // ss(i,j), rs(i), thetas(i)
    auto args = [&](std::size_t open) {
        const auto close = t.find(')', open);
        if (close == std::string::npos) throw ValidationError("bad derivative selector: " + t);
        return t.substr(open + 1, close - open - 1);
    };
    try {
        if (t.rfind("ss(", 0) == 0) {
            const auto a = args(2);
            const auto comma = a.find(',');
            if (comma == std::string::npos) throw ValidationError("ss needs two indices");
            return {DerivKind::ss, std::stoi(a.substr(0, comma)), std::stoi(a.substr(comma + 1))};
        }
        if (t.rfind("rs(", 0) == 0) return {DerivKind::rs, std::stoi(args(2)), 1};
        if (t.rfind("thetas(", 0) == 0) return {DerivKind::thetas, std::stoi(args(6)), 1};
    } catch (const ValidationError&) {
        throw;
    } catch (const std::exception&) {
    }
    throw ValidationError("derivative selector must be ss(i,j), rs(i) or thetas(i): " + t);
}

std::string to_string(const DerivSelector& d) {
    switch (d.kind) {
    case DerivKind::ss:
        return "ss(" + std::to_string(d.i) + "," + std::to_string(d.j) + ")";
    case DerivKind::rs:
        return "rs(" + std::to_string(d.i) + ")";
    default:
        return "thetas(" + std::to_string(d.i) + ")";
    }
}

} // namespace conekit
