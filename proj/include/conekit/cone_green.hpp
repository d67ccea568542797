#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "conekit/cone_geometry.hpp"
#include "conekit/eval_result.hpp"

namespace conekit {

// Value and derivatives of G(x, y) in the first point. Variables are ordered
// (r, theta, s_1, ..., s_{m-2}); hess is row-major m x m.
struct GreenJet {
    int m = 3;
    int order = 0;
    double value = 0.0;
    double value_error = 0.0;
    std::vector<double> grad, grad_error;
    std::vector<double> hess, hess_error;

    double d(int a) const { return grad[a]; }
    double dd(int a, int b) const { return hess[a * m + b]; }
};

// Unit-source Green's function by images plus the diffraction integral.
// Valid for every x != y; order 0, 1 or 2 (order 2 needs m <= 5).
GreenJet green_closed_jet(const ConeParams& p, const ConePoint& x, const ConePoint& y, int order,
                          double rel_tol = 1e-12);
EvalResult green_closed(const ConeParams& p, const ConePoint& x, const ConePoint& y);

// Green's function of the flat Laplacian on R^m at squared distance A.
double newton_kernel(int m, double A);

// Modal integrals. g_k from the K and I representations, raw prefactors.
EvalResult modal_gk_K(const ConeParams& p, int k, double r, double rp, double R);
EvalResult modal_gk_I(const ConeParams& p, int k, double r, double rp, double R);

// k-th Fourier coefficient of the unit-source G through the I
// representation; finite also for R = 0 when m = 3.
// abs_tol > 0 relaxes the quadrature for small high modes.
EvalResult modal_component_I(const ConeParams& p, int k, double r, double rp, double R, double abs_tol = 0.0);
EvalResult modal_component_K(const ConeParams& p, int k, double r, double rp, double R, double abs_tol = 0.0);

EvalResult heat_modal(const ConeParams& p, int k, double r, double rp, double t);
EvalResult green_via_heat(const ConeParams& p, const ConePoint& x, const ConePoint& y, int k_max);

enum class GreenRoute { modal_I, modal_K, closed_form };
std::string to_string(GreenRoute r);

struct GreenValue {
    double value = 0.0;
    double abs_error = 0.0;
    GreenRoute route = GreenRoute::modal_I;
    int modes = 0;
    double tail = 0.0;
    operator EvalResult() const { return {value, abs_error}; }
};

// k_max < 0 picks the truncation from the tail estimate. With normalized
// false the raw prefactor (2 pi)^{-m} R^{2-m/2} of the modal sum is kept.
GreenValue green_eval(const ConeParams& p, const ConePoint& x, const ConePoint& y, int k_max = -1,
                      bool normalized = true, double tol = 1e-12);

// Raw modal sum without the calibration constant.
GreenValue green_raw(const ConeParams& p, const ConePoint& x, const ConePoint& y, int k_max = -1,
                     double tol = 1e-12);

struct CalibrationReport {
    double c0 = 0.0;
    double flux_small = 0.0; // flux of raw G at the smaller radius
    double flux_large = 0.0;
    double radius_small = 0.05, radius_large = 0.1;
    double relative_spread = 0.0;
    double relative_error = 0.0; // spread or finite-difference error, whichever is larger
    double analytic_c0 = 0.0;
};

// Constant c0 with c0 * G_raw of unit flux around a pole on S (outward flux -1).
CalibrationReport flux_calibrate_report(const ConeParams& p);
double flux_calibrate(const ConeParams& p);
double analytic_normalization(const ConeParams& p);

// Outward flux of grad G over a sphere around a pole off S; -1 for the normalized G.
double flux_off_axis(const ConeParams& p, const ConePoint& pole, double radius);

// Caches the calibration of one (beta, m).
class ConeGreen {
public:
    explicit ConeGreen(ConeParams p);
    const ConeParams& params() const { return p_; }
    double c0() const { return c0_; }
    GreenValue operator()(const ConePoint& x, const ConePoint& y, int k_max = -1) const;

private:
    ConeParams p_;
    double c0_;
};

using ScalarField = std::function<double(const ConePoint&)>;

// Second-order finite difference of dr^2 + beta^2 r^2 dtheta^2 + ds^2.
EvalResult laplacian_cone(const ConeParams& p, const ScalarField& phi, const ConePoint& x, double h);

// sup |f(p) - f(q)| / |p - q|^alpha over sample pairs (Euclidean distance).
double holder_seminorm(const std::vector<std::pair<std::vector<double>, double>>& samples, double alpha);

} // namespace conekit
