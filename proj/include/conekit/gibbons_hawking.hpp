#pragma once

#include <array>
#include <complex>
#include <functional>
#include <vector>

#include "conekit/cone_geometry.hpp"
#include "conekit/eval_result.hpp"

namespace conekit::gh {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;

// Forms over the coframe (alpha, dx1, dx2, dx3), indices 0..3.
using OneForm = std::array<double, 4>;
using TwoForm = std::array<std::array<double, 4>, 4>; // antisymmetric; form = sum_{p<q} B[p][q] e^p e^q
using ThreeForm = std::array<double, 4>;              // components on (012), (013), (023), (123)

TwoForm wedge(const OneForm& a, const OneForm& b);
ThreeForm wedge(const OneForm& a, const TwoForm& b);
double wedge(const TwoForm& a, const TwoForm& b); // coefficient of alpha dx1 dx2 dx3

// Positive harmonic function on a domain of R^3. For cone_green the
// coordinates are (s, r cos beta theta, r sin beta theta), theta in (-pi, pi],
// so x1 runs along the singular set.
class HarmonicField {
public:
    enum class Kind { flat_newton, cone_green, multi_pole, linear };

    static HarmonicField flat_newton(const Vec3& pole, double weight = 1.0);
    static HarmonicField multi_pole(std::vector<Vec3> poles, std::vector<double> weights, double constant = 0.0);
    static HarmonicField cone_green(const ConeParams& p, const ConePoint& pole);
    static HarmonicField linear(double constant, const Vec3& gradient);

    Kind kind() const { return kind_; }
    double eval(const Vec3& x) const;
    Vec3 grad(const Vec3& x) const;
    Mat3 hess(const Vec3& x) const;
    // poles in these coordinates (empty for linear)
    std::vector<Vec3> poles() const;
    const ConeParams& cone_params() const { return params_; }
    ConePoint to_cone(const Vec3& x) const;

private:
    Kind kind_ = Kind::flat_newton;
    std::vector<Vec3> poles_;
    std::vector<double> weights_;
    double constant_ = 0.0;
    Vec3 lin_grad_{0, 0, 0};
    ConeParams params_;
    ConePoint cone_pole_;
    void cone_jet(const Vec3& x, int order, double& v, Vec3& g, Mat3& h) const;
};

// |trace of the finite-difference Hessian|, fourth-order five-point stencil per axis.
double harmonic_residual(const HarmonicField& f, const Vec3& x, double h);

struct FrameAtPoint {
    std::array<TwoForm, 3> omega, theta;
    double V = 0.0; // omega_1 ^ omega_1 = 2 f alpha dx1 dx2 dx3
};
FrameAtPoint gh_frame(double f);
// max deviation from omega_i^omega_j = V d_ij, theta_i^theta_j = -V d_ij, omega_i^theta_j = 0
double frame_identity_residual(const FrameAtPoint& F);

// T_i = (f_i / f^2) alpha + f^{-1} (f_k dx_j - f_j dx_k), (i, j, k) cyclic.
std::array<OneForm, 3> gh_connection(double f, const Vec3& df);
std::array<OneForm, 3> gh_connection(const HarmonicField& f, const Vec3& x);
// Direct least-squares solution of psi_i = T_j ^ theta_k - T_k ^ theta_j.
std::array<OneForm, 3> gh_connection_solve(double f, const Vec3& df);
// max |psi_i - (T_j ^ theta_k - T_k ^ theta_j)| with psi_i = -2 f_i dx1 dx2 dx3
double connection_residual(double f, const Vec3& df, const std::array<OneForm, 3>& T);
double connection_residual(const HarmonicField& f, const Vec3& x, double fd_step = 0.0);

// W = trace-free part of (f_ij / f^2 - 3 f_i f_j / f^3)
Mat3 gh_curvature(double f, const Vec3& df, const Mat3& ddf);
Mat3 gh_curvature(const HarmonicField& f, const Vec3& x);
// -(f/2) times the trace-free Hessian of f^{-2}; equal to W
Mat3 curvature_via_inverse_square(double f, const Vec3& df, const Mat3& ddf);
// F_i = -dT_i + T_j ^ T_k from finite differences of the connection,
// coefficients on theta_j; returns the max discrepancy against gh_curvature.
double gh_curvature_fd_check(const HarmonicField& f, const Vec3& x, double h);
// the anti-self-dual coefficients and the self-dual remainder of that computation
struct CurvatureForms {
    Mat3 asd{};
    Mat3 sd{};
};
CurvatureForms curvature_forms_fd(const HarmonicField& f, const Vec3& x, double h);

double frobenius(const Mat3& a);
double trace(const Mat3& a);

struct GrowthFit {
    double exponent = 0.0;
    bool zero_signal = false;
    std::vector<double> radii, norms;
};
// Least-squares slope of log |W| against log r along the ray
// (s, r cos beta theta, r sin beta theta) of a cone field (or the same
// Cartesian ray for other fields).
GrowthFit curvature_growth(const HarmonicField& f, const std::vector<double>& radii, double theta = 1.5707963267948966,
                           double s = 0.0);

// u(x) = int_0^{x1} f(t, x2, x3) dt
EvalResult holo_potential_u(const HarmonicField& f, const Vec3& x);

struct HoloPair {
    std::complex<double> h, h_tilde, h0_at_base;
};
using HoloSeed = std::function<std::complex<double>(std::complex<double>)>;
// h = e^u h0(x2 + i x3) e^{i psi}, h~ = e^{-u} h0 e^{-i psi}; needs df/dx1 = 0 on x1 = 0.
HoloPair holo_pair(const HarmonicField& f, const Vec3& x, double psi, const HoloSeed& h0);

// (z, w) -> (Re zw, Im zw, |z|^2 - |w|^2)
Vec3 flat_model_map(std::complex<double> z, std::complex<double> w);
// For f = kappa / |x| in the coordinates (|z|^2 - |w|^2, 2 Re zw, 2 Im zw)
// with seed h0 = sqrt(zeta / 2): relative mismatch of |h|^2 against |z|^2.
double flat_model_check(double kappa, std::complex<double> z, std::complex<double> w);

} // namespace conekit::gh
