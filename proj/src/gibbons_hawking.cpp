// Gibbons-Hawking metrics from a positive harmonic function: frame,
// connection, curvature and the holomorphic pair.
#include "conekit/gibbons_hawking.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "conekit/cone_green.hpp"
#include "conekit/errors.hpp"
#include "conekit/polyhom.hpp"
#include "conekit/quadrature.hpp"

namespace conekit::gh {

namespace {

constexpr double pi = std::numbers::pi;
constexpr int cyc[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};

double norm3(const Vec3& a) { return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]); }

TwoForm zero2() {
    TwoForm B{};
    return B;
}

void set2(TwoForm& B, int p, int q, double v) {
    B[p][q] += v;
    B[q][p] -= v;
}

TwoForm add2(const TwoForm& a, const TwoForm& b, double s = 1.0) {
    TwoForm c{};
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q) c[p][q] = a[p][q] + s * b[p][q];
    return c;
}

} // namespace

TwoForm wedge(const OneForm& a, const OneForm& b) {
    TwoForm B{};
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q) B[p][q] = a[p] * b[q] - a[q] * b[p];
    return B;
}

ThreeForm wedge(const OneForm& a, const TwoForm& B) {
    static constexpr int tri[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    ThreeForm out{};
    for (int t = 0; t < 4; ++t) {
        const int p = tri[t][0], q = tri[t][1], r = tri[t][2];
        out[t] = a[p] * B[q][r] - a[q] * B[p][r] + a[r] * B[p][q];
    }
    return out;
}

double wedge(const TwoForm& a, const TwoForm& b) {
    return a[0][1] * b[2][3] - a[0][2] * b[1][3] + a[0][3] * b[1][2] + a[1][2] * b[0][3] - a[1][3] * b[0][2] +
           a[2][3] * b[0][1];
}

// ---------------------------------------------------------------- fields

HarmonicField HarmonicField::flat_newton(const Vec3& pole, double weight) {
    if (!(weight > 0)) throw ValidationError("weight must be positive");
    HarmonicField f;
    f.kind_ = Kind::flat_newton;
    f.poles_ = {pole};
    f.weights_ = {weight};
    return f;
}

HarmonicField HarmonicField::multi_pole(std::vector<Vec3> poles, std::vector<double> weights, double constant) {
    if (poles.empty() || poles.size() != weights.size()) throw ValidationError("need one weight per pole");
    for (double w : weights)
        if (!(w > 0)) throw ValidationError("weights must be positive");
    if (constant < 0) throw ValidationError("constant must be >= 0");
    HarmonicField f;
    f.kind_ = Kind::multi_pole;
    f.poles_ = std::move(poles);
    f.weights_ = std::move(weights);
    f.constant_ = constant;
    return f;
}

HarmonicField HarmonicField::cone_green(const ConeParams& p, const ConePoint& pole) {
    p.validate();
    validate_point(p, pole);
    if (p.m != 3) throw ValidationError("cone fields need m = 3");
    if (!(pole.r > 0)) throw DomainError("the pole must lie off S");
    HarmonicField f;
    f.kind_ = Kind::cone_green;
    f.params_ = p;
    f.cone_pole_ = pole;
    return f;
}

HarmonicField HarmonicField::linear(double constant, const Vec3& gradient) {
    HarmonicField f;
    f.kind_ = Kind::linear;
    f.constant_ = constant;
    f.lin_grad_ = gradient;
    return f;
}

std::vector<Vec3> HarmonicField::poles() const {
    if (kind_ == Kind::cone_green) {
        const double t = cone_pole_.theta > pi ? cone_pole_.theta - 2 * pi : cone_pole_.theta;
        const double ph = params_.beta * t;
        return {{cone_pole_.s[0], cone_pole_.r * std::cos(ph), cone_pole_.r * std::sin(ph)}};
    }
    return poles_;
}

ConePoint HarmonicField::to_cone(const Vec3& x) const {
    const double r = std::hypot(x[1], x[2]);
    const double ph = r > 0 ? std::atan2(x[2], x[1]) : 0.0;
    if (std::abs(ph) > params_.beta * pi * (1 + 1e-12)) throw DomainError("point lies outside the developed wedge");
    return make_point(params_, r, wrap_angle(ph / params_.beta), {x[0]});
}

void HarmonicField::cone_jet(const Vec3& x, int order, double& v, Vec3& g, Mat3& H) const {
    const ConePoint q = to_cone(x);
    if (euclidean_distance(q, cone_pole_) == 0.0) throw SingularityError("field evaluated at its pole");
    if (order > 0 && q.r == 0.0) throw DomainError("derivatives of a cone field are not taken on S");
    const GreenJet J = q.r < 0.1 * cone_pole_.r ? polyhom_jet(params_, q, cone_pole_, order, 1e-12)
                                                : green_closed_jet(params_, q, cone_pole_, order, 1e-12);
    v = J.value;
    if (order == 0) return;
    // polar (r, phi) with phi = beta theta, and s = x1
    const double b = params_.beta, r = q.r;
    const double ph = std::atan2(x[2], x[1]);
    const double c = std::cos(ph), s = std::sin(ph);
    const double gr = J.d(0), gp = J.d(1) / b, gs = J.d(2);
    g = {gs, c * gr - s / r * gp, s * gr + c / r * gp};
    if (order < 2) return;
    const double grr = J.dd(0, 0), grp = J.dd(0, 1) / b, gpp = J.dd(1, 1) / (b * b);
    const double gss = J.dd(2, 2), grs = J.dd(0, 2), gps = J.dd(1, 2) / b;
    const double xx = c * c * grr - 2 * c * s / r * grp + s * s / (r * r) * gpp + s * s / r * gr + 2 * c * s / (r * r) * gp;
    const double yy = s * s * grr + 2 * c * s / r * grp + c * c / (r * r) * gpp + c * c / r * gr - 2 * c * s / (r * r) * gp;
    const double xy = c * s * grr + (c * c - s * s) / r * grp - c * s / (r * r) * gpp - c * s / r * gr -
                      (c * c - s * s) / (r * r) * gp;
    H[0][0] = gss;
    H[0][1] = H[1][0] = c * grs - s / r * gps;
    H[0][2] = H[2][0] = s * grs + c / r * gps;
    H[1][1] = xx;
    H[2][2] = yy;
    H[1][2] = H[2][1] = xy;
}

double HarmonicField::eval(const Vec3& x) const {
    switch (kind_) {
    case Kind::linear: return constant_ + lin_grad_[0] * x[0] + lin_grad_[1] * x[1] + lin_grad_[2] * x[2];
    case Kind::cone_green: {
        double v;
        Vec3 g;
        Mat3 H;
        cone_jet(x, 0, v, g, H);
        return v;
    }
    default: {
        double v = constant_;
        for (std::size_t i = 0; i < poles_.size(); ++i) {
            const Vec3 d{x[0] - poles_[i][0], x[1] - poles_[i][1], x[2] - poles_[i][2]};
            const double n = norm3(d);
            if (n == 0.0) throw SingularityError("field evaluated at its pole");
            v += weights_[i] / n;
        }
        return v;
    }
    }
}

Vec3 HarmonicField::grad(const Vec3& x) const {
    switch (kind_) {
    case Kind::linear: return lin_grad_;
    case Kind::cone_green: {
        double v;
        Vec3 g{};
        Mat3 H;
        cone_jet(x, 1, v, g, H);
        return g;
    }
    default: {
        Vec3 g{0, 0, 0};
        for (std::size_t i = 0; i < poles_.size(); ++i) {
            const Vec3 d{x[0] - poles_[i][0], x[1] - poles_[i][1], x[2] - poles_[i][2]};
            const double n = norm3(d);
            if (n == 0.0) throw SingularityError("field evaluated at its pole");
            for (int a = 0; a < 3; ++a) g[a] -= weights_[i] * d[a] / (n * n * n);
        }
        return g;
    }
    }
}

Mat3 HarmonicField::hess(const Vec3& x) const {
    Mat3 H{};
    switch (kind_) {
    case Kind::linear: return H;
    case Kind::cone_green: {
        double v;
        Vec3 g;
        cone_jet(x, 2, v, g, H);
        return H;
    }
    default:
        for (std::size_t i = 0; i < poles_.size(); ++i) {
            const Vec3 d{x[0] - poles_[i][0], x[1] - poles_[i][1], x[2] - poles_[i][2]};
            const double n = norm3(d);
            if (n == 0.0) throw SingularityError("field evaluated at its pole");
            const double n3 = n * n * n, n5 = n3 * n * n;
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b)
                    H[a][b] += weights_[i] * (3 * d[a] * d[b] / n5 - (a == b ? 1.0 / n3 : 0.0));
        }
        return H;
    }
}

double harmonic_residual(const HarmonicField& f, const Vec3& x, double h) {
    if (!(h > 0)) throw DomainError("step must be positive");
    for (const auto& p : f.poles()) {
        const Vec3 d{x[0] - p[0], x[1] - p[1], x[2] - p[2]};
        if (norm3(d) <= 3 * h) throw DomainError("stencil reaches a pole");
    }
    if (f.kind() == HarmonicField::Kind::cone_green && std::hypot(x[1], x[2]) <= 3 * h)
        throw DomainError("stencil reaches the singular set");
    // fourth-order five-point second differences along each axis
    const double f0 = f.eval(x);
    double sum = 0.0;
    for (int a = 0; a < 3; ++a) {
        auto at = [&](double d) {
            Vec3 q = x;
            q[a] += d;
            return f.eval(q);
        };
        sum += -at(2 * h) + 16 * at(h) - 30 * f0 + 16 * at(-h) - at(-2 * h);
    }
    return std::abs(sum / (12 * h * h));
}

// ---------------------------------------------------------------- frame

FrameAtPoint gh_frame(double f) {
    FrameAtPoint F;
    for (int i = 0; i < 3; ++i) {
        const int a = cyc[i][0] + 1, b = cyc[i][1] + 1, c = cyc[i][2] + 1;
        F.omega[i] = zero2();
        F.theta[i] = zero2();
        set2(F.omega[i], 0, a, 1.0);
        set2(F.omega[i], b, c, f);
        set2(F.theta[i], 0, a, 1.0);
        set2(F.theta[i], b, c, -f);
    }
    F.V = wedge(F.omega[0], F.omega[0]);
    return F;
}

double frame_identity_residual(const FrameAtPoint& F) {
    double r = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double d = i == j ? F.V : 0.0;
            r = std::max(r, std::abs(wedge(F.omega[i], F.omega[j]) - d));
            r = std::max(r, std::abs(wedge(F.theta[i], F.theta[j]) + d));
            r = std::max(r, std::abs(wedge(F.omega[i], F.theta[j])));
        }
    return r;
}

// ---------------------------------------------------------------- connection

std::array<OneForm, 3> gh_connection(double f, const Vec3& df) {
    if (!(f > 0)) throw DomainError("the harmonic function must be positive");
    std::array<OneForm, 3> T{};
    for (int i = 0; i < 3; ++i) {
        const int j = cyc[i][1], k = cyc[i][2];
        T[i][0] = df[i] / (f * f);
        T[i][1 + j] = df[k] / f;
        T[i][1 + k] = -df[j] / f;
    }
    return T;
}

std::array<OneForm, 3> gh_connection(const HarmonicField& f, const Vec3& x) {
    return gh_connection(f.eval(x), f.grad(x));
}

namespace {

std::array<ThreeForm, 3> connection_lhs(double f, const std::array<OneForm, 3>& T) {
    const auto F = gh_frame(f);
    std::array<ThreeForm, 3> out{};
    for (int i = 0; i < 3; ++i) {
        const int j = cyc[i][1], k = cyc[i][2];
        const auto a = wedge(T[j], F.theta[k]), b = wedge(T[k], F.theta[j]);
        for (int t = 0; t < 4; ++t) out[i][t] = a[t] - b[t];
    }
    return out;
}

} // namespace

std::array<OneForm, 3> gh_connection_solve(double f, const Vec3& df) {
    if (!(f > 0)) throw DomainError("the harmonic function must be positive");
    // the map T -> (T_j ^ theta_k - T_k ^ theta_j) is linear; assemble it column by column
    Eigen::Matrix<double, 12, 12> A;
    for (int col = 0; col < 12; ++col) {
        std::array<OneForm, 3> T{};
        T[col / 4][col % 4] = 1.0;
        const auto img = connection_lhs(f, T);
        for (int i = 0; i < 3; ++i)
            for (int t = 0; t < 4; ++t) A(4 * i + t, col) = img[i][t];
    }
    Eigen::Matrix<double, 12, 1> rhs = Eigen::Matrix<double, 12, 1>::Zero();
    for (int i = 0; i < 3; ++i) rhs(4 * i + 3) = -2.0 * df[i];
    const Eigen::Matrix<double, 12, 1> sol = A.colPivHouseholderQr().solve(rhs);
    std::array<OneForm, 3> T{};
    for (int c = 0; c < 12; ++c) T[c / 4][c % 4] = sol(c);
    return T;
}

double connection_residual(double f, const Vec3& df, const std::array<OneForm, 3>& T) {
    const auto lhs = connection_lhs(f, T);
    double r = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int t = 0; t < 4; ++t) {
            const double psi = t == 3 ? -2.0 * df[i] : 0.0;
            r = std::max(r, std::abs(lhs[i][t] - psi));
        }
    return r;
}

double connection_residual(const HarmonicField& f, const Vec3& x, double fd_step) {
    Vec3 g;
    if (fd_step > 0) {
        for (int a = 0; a < 3; ++a) {
            Vec3 p = x, m = x;
            p[a] += fd_step;
            m[a] -= fd_step;
            g[a] = (f.eval(p) - f.eval(m)) / (2 * fd_step);
        }
    } else {
        g = f.grad(x);
    }
    const double v = f.eval(x);
    return connection_residual(v, g, gh_connection(v, g));
}

// ---------------------------------------------------------------- curvature

double trace(const Mat3& a) { return a[0][0] + a[1][1] + a[2][2]; }

double frobenius(const Mat3& a) {
    double s = 0.0;
    for (const auto& row : a)
        for (double v : row) s += v * v;
    return std::sqrt(s);
}

namespace {

Mat3 trace_free(Mat3 a) {
    const double t = trace(a) / 3.0;
    for (int i = 0; i < 3; ++i) a[i][i] -= t;
    return a;
}

} // namespace

Mat3 gh_curvature(double f, const Vec3& df, const Mat3& ddf) {
    if (!(f > 0)) throw DomainError("the harmonic function must be positive");
    Mat3 W{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) W[i][j] = ddf[i][j] / (f * f) - 3 * df[i] * df[j] / (f * f * f);
    // symmetrize so the result is symmetric to the last bit
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) W[i][j] = W[j][i] = 0.5 * (W[i][j] + W[j][i]);
    return trace_free(W);
}

Mat3 gh_curvature(const HarmonicField& f, const Vec3& x) {
    return gh_curvature(f.eval(x), f.grad(x), f.hess(x));
}

Mat3 curvature_via_inverse_square(double f, const Vec3& df, const Mat3& ddf) {
    if (!(f > 0)) throw DomainError("the harmonic function must be positive");
    // Hess(f^-2)_ij = 6 f^-4 f_i f_j - 2 f^-3 f_ij
    Mat3 H{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) H[i][j] = -0.5 * f * (6 * df[i] * df[j] / std::pow(f, 4) - 2 * ddf[i][j] / std::pow(f, 3));
    return trace_free(H);
}

CurvatureForms curvature_forms_fd(const HarmonicField& f, const Vec3& x, double h) {
    if (!(h > 0)) throw DomainError("step must be positive");
    const double fv = f.eval(x);
    const Vec3 df = f.grad(x);
    const auto T = gh_connection(fv, df);
    // derivatives of the connection coefficients along x_a
    std::array<std::array<OneForm, 3>, 3> dT{};
    for (int a = 0; a < 3; ++a) {
        Vec3 p = x, m = x;
        p[a] += h;
        m[a] -= h;
        const auto Tp = gh_connection(f, p), Tm = gh_connection(f, m);
        for (int i = 0; i < 3; ++i)
            for (int c = 0; c < 4; ++c) dT[a][i][c] = (Tp[i][c] - Tm[i][c]) / (2 * h);
    }
    // d alpha = -(f_1 dx2 dx3 + f_2 dx3 dx1 + f_3 dx1 dx2)
    TwoForm dalpha{};
    set2(dalpha, 2, 3, -df[0]);
    set2(dalpha, 3, 1, -df[1]);
    set2(dalpha, 1, 2, -df[2]);
    const auto F = gh_frame(fv);
    CurvatureForms out;
    for (int i = 0; i < 3; ++i) {
        TwoForm d{};
        // d(T_i) = sum_a dx_a ^ d_a(T_i) on the coframe, plus T_i[alpha] d alpha
        for (int a = 0; a < 3; ++a) {
            OneForm e{};
            e[1 + a] = 1.0;
            d = add2(d, wedge(e, dT[a][i]));
        }
        d = add2(d, dalpha, T[i][0]);
        const int j = cyc[i][1], k = cyc[i][2];
        const TwoForm Fi = add2(wedge(T[j], T[k]), d, -1.0);
        for (int b = 0; b < 3; ++b) {
            out.asd[i][b] = -wedge(Fi, F.theta[b]) / F.V;
            out.sd[i][b] = wedge(Fi, F.omega[b]) / F.V;
        }
    }
    return out;
}

double gh_curvature_fd_check(const HarmonicField& f, const Vec3& x, double h) {
    const auto C = curvature_forms_fd(f, x, h);
    const auto W = gh_curvature(f, x);
    double r = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r = std::max(r, std::abs(C.asd[i][j] - W[i][j]));
    return r;
}

GrowthFit curvature_growth(const HarmonicField& f, const std::vector<double>& radii, double theta, double s) {
    if (radii.size() < 4) throw ValidationError("need at least 4 radii");
    GrowthFit fit;
    const double ph = f.kind() == HarmonicField::Kind::cone_green ? f.cone_params().beta * theta : theta;
    double scale = 0.0;
    for (double r : radii) {
        if (!(r > 0)) throw ValidationError("radii must be positive");
        const Vec3 x{s, r * std::cos(ph), r * std::sin(ph)};
        const double v = f.eval(x);
        const Vec3 g = f.grad(x);
        const Mat3 H = f.hess(x);
        fit.radii.push_back(r);
        fit.norms.push_back(frobenius(gh_curvature(v, g, H)));
        scale = std::max(scale, frobenius(H) / (v * v) + norm3(g) * norm3(g) / (v * v * v));
    }
    const double top = *std::max_element(fit.norms.begin(), fit.norms.end());
    if (!(top > 1e-9 * scale)) {
        fit.zero_signal = true;
        fit.exponent = std::nan("");
        return fit;
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(radii.size());
    for (std::size_t i = 0; i < radii.size(); ++i) {
        const double lx = std::log(fit.radii[i]), ly = std::log(fit.norms[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double den = n * sxx - sx * sx;
    if (den == 0.0) throw ValidationError("radii must not all coincide");
    fit.exponent = (n * sxy - sx * sy) / den;
    return fit;
}

// ---------------------------------------------------------------- holomorphic pair

EvalResult holo_potential_u(const HarmonicField& f, const Vec3& x) {
    const double a = std::min(0.0, x[0]), b = std::max(0.0, x[0]);
    if (a == b) return {0.0, 0.0};
    for (const auto& p : f.poles())
        if (p[1] == x[1] && p[2] == x[2] && p[0] >= a && p[0] <= b)
            throw DomainError("pole on the integration segment");
    std::vector<double> breaks{a};
    // break at the closest approach to each pole so the peak is resolved
    for (const auto& p : f.poles())
        if (p[0] > a && p[0] < b) breaks.push_back(p[0]);
    breaks.push_back(b);
    std::sort(breaks.begin(), breaks.end());
    quad::Options opt;
    opt.rel_tol = 1e-12;
    opt.abs_tol = 1e-15;
    const auto res = quad::integrate([&](double t) { return f.eval({t, x[1], x[2]}); }, breaks, opt);
    const double sgn = x[0] >= 0 ? 1.0 : -1.0;
    return {sgn * res.value, res.abs_error};
}

HoloPair holo_pair(const HarmonicField& f, const Vec3& x, double psi, const HoloSeed& h0) {
    // mirror symmetry: df/dx1 = 0 on x1 = 0
    const Vec3 base{0.0, x[1], x[2]};
    const Vec3 g = f.grad(base);
    if (std::abs(g[0]) > 1e-9 * (norm3(g) + std::abs(f.eval(base))))
        throw ValidationError("df/dx1 must vanish on the plane x1 = 0");
    const auto u = holo_potential_u(f, x);
    HoloPair out;
    out.h0_at_base = h0({x[1], x[2]});
    const std::complex<double> ph = std::polar(1.0, psi);
    out.h = std::exp(u.value) * out.h0_at_base * ph;
    out.h_tilde = std::exp(-u.value) * out.h0_at_base / ph;
    return out;
}

Vec3 flat_model_map(std::complex<double> z, std::complex<double> w) {
    const auto zw = z * w;
    return {zw.real(), zw.imag(), std::norm(z) - std::norm(w)};
}

double flat_model_check(double kappa, std::complex<double> z, std::complex<double> w) {
    if (!(kappa > 0)) throw ValidationError("kappa must be positive");
    const auto zeta = 2.0 * z * w;
    const Vec3 x{std::norm(z) - std::norm(w), zeta.real(), zeta.imag()};
    if (zeta == 0.0) throw DomainError("the check needs zw != 0");
    const auto f = HarmonicField::flat_newton({0, 0, 0}, kappa);
    const auto pair = holo_pair(f, x, 0.0, [](std::complex<double> q) { return std::sqrt(0.5 * q); });
    return std::abs(std::norm(pair.h) - std::norm(z)) / std::norm(z);
}

} // namespace conekit::gh
