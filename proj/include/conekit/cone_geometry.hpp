#pragma once

#include <array>
#include <string>
#include <vector>

namespace conekit {

// Cone angle 2 pi beta on R^2 times R^{m-2}.
struct ConeParams {
    double beta = 2.0 / 3.0;
    int m = 3;

    double c() const { return 1.0 / beta; }
    double mu() const { return 1.0 / beta - 1.0; }
    void validate() const;
};

ConeParams make_params(double beta, int m);

// (r, theta, s) with theta in [0, 2 pi) and s in R^{m-2}.
struct ConePoint {
    double r = 0.0;
    double theta = 0.0;
    std::vector<double> s;
};

ConePoint make_point(const ConeParams& p, double r, double theta, std::vector<double> s);
double wrap_angle(double theta);
void validate_point(const ConeParams& p, const ConePoint& x);

// |s - s'|
double transverse_distance(const ConePoint& x, const ConePoint& y);
// Standard Euclidean distance of R^m, using (r cos theta, r sin theta, s).
double euclidean_distance(const ConePoint& x, const ConePoint& y);
// Distance of the singular metric dr^2 + beta^2 r^2 dtheta^2 + ds^2.
double cone_distance(const ConeParams& p, const ConePoint& x, const ConePoint& y);
std::vector<double> euclidean_coords(const ConePoint& x);

// iota(r cos t, r sin t, s) = (r^c cos t, r^c sin t, r^2, s)
std::vector<double> chart_iota(const ConeParams& p, const ConePoint& x);

// Dilation x -> lambda x.
ConePoint dilate(const ConePoint& x, double lambda);

enum class DerivKind { ss, rs, thetas };

// Second derivative operators of the Schauder estimate; indices are 1-based.
struct DerivSelector {
    DerivKind kind = DerivKind::rs;
    int i = 1;
    int j = 1;
    void validate(const ConeParams& p) const;
};

DerivSelector parse_deriv(const std::string& text);
std::string to_string(const DerivSelector& d);

} // namespace conekit
