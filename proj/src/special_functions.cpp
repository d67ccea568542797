#include "conekit/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "conekit/errors.hpp"
#include "conekit/quadrature.hpp"

namespace conekit {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;
constexpr double kLogMax = 709.0;

void check_order(double nu) {
    if (!(nu >= 0.0) || !std::isfinite(nu)) throw DomainError("Bessel order must be finite and >= 0");
}

void check_arg(double x) {
    if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("Bessel argument must be finite and >= 0");
}

struct Neumaier {
    double s = 0.0, c = 0.0;
    void add(double x) {
        const double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double sum() const { return s + c; }
};

// Power series for J_nu, nu > -1, x > 0.
EvalResult j_series(double nu, double x) {
    const double lt0 = nu * std::log(0.5 * x) - std::lgamma(nu + 1.0);
    const double q = 0.25 * x * x;
    double t = std::exp(lt0);
    Neumaier acc;
    double absum = 0.0;
    acc.add(t);
    absum += std::abs(t);
    for (int n = 0; n < 100000; ++n) {
        const double next = -t * q / ((n + 1.0) * (n + 1.0 + nu));
        const bool decreasing = q < (n + 1.0) * (n + 1.0 + nu);
        if (decreasing && std::abs(next) <= 1e-17 * std::abs(acc.sum())) {
            const double err = std::abs(next) + 4.0 * kEps * absum + kEps * (2.0 + std::abs(lt0)) * std::abs(acc.sum());
            return {acc.sum(), err};
        }
        if (next == 0.0) return {acc.sum(), 4.0 * kEps * absum};
        t = next;
        acc.add(t);
        absum += std::abs(t);
    }
    throw ConvergenceError("J series did not terminate");
}

// Hankel asymptotic expansion; returns false when the smallest term is
// not small enough for double precision.
bool j_hankel(double nu, double x, EvalResult& out) {
    const double mu4 = 4.0 * nu * nu;
    double P = 1.0, Q = 0.0, t = 1.0, last = 1.0, biggest = 1.0;
    double omitted_p = 0.0, omitted_q = 0.0;
    bool ok = false;
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        const double nt = t * (mu4 - odd * odd) / (8.0 * k * x);
        if (std::abs(nt) > std::abs(last) && k > 1 + nu) break;
        if (std::abs(nt) < 1e-17) {
            if (k % 2 == 1)
                omitted_q = std::abs(nt);
            else
                omitted_p = std::abs(nt);
            ok = true;
            break;
        }
        t = nt;
        last = nt;
        biggest = std::max(biggest, std::abs(t));
        // a_k/x^k enters P (even k) or Q (odd k) with sign (-1)^{floor(k/2)}
        const double sgn = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
        if (k % 2 == 0)
            P += sgn * t;
        else
            Q += sgn * t;
    }
    if (!ok) return false;
    const double amp = std::sqrt(2.0 / (kPi * x));
    const double w = x - (0.5 * nu + 0.25) * kPi;
    const double err = amp * (omitted_p + omitted_q + 4.0 * kEps * (x + nu + biggest));
    if (err > 1e-15 * amp) return false;
    out = {amp * (P * std::cos(w) - Q * std::sin(w)), err};
    return true;
}

// Miller backward recurrence over the orders mu + k, normalised with
// (x/2)^mu = sum_k (mu + 2k) Gamma(mu + k)/k! J_{mu+2k}(x).
double j_miller_run(int n, double mu, double x, int N) {
    std::vector<double> c(N / 2 + 1);
    c[0] = std::tgamma(mu + 1.0);
    double g = c[0];
    for (int i = 1; i <= N / 2; ++i) {
        if (i > 1) g *= (mu + i - 1.0) / i;
        c[i] = (mu + 2.0 * i) * g;
    }
    double jk1 = 0.0, jk = 1e-30, target = (n == N) ? jk : 0.0;
    double S = (N % 2 == 0) ? c[N / 2] * jk : 0.0;
    for (int k = N; k >= 1; --k) {
        const double jm = 2.0 * (mu + k) / x * jk - jk1;
        jk1 = jk;
        jk = jm;
        if (k - 1 == n) target = jk;
        if ((k - 1) % 2 == 0) S += c[(k - 1) / 2] * jk;
        if (std::abs(jk) > 1e250) {
            jk *= 1e-250;
            jk1 *= 1e-250;
            S *= 1e-250;
            target *= 1e-250;
        }
    }
    return target * std::pow(0.5 * x, mu) / S;
}

EvalResult j_miller(double nu, double x) {
    const int n = static_cast<int>(std::floor(nu));
    const double mu = nu - n;
    const double top = std::max(static_cast<double>(n), x);
    const int N1 = static_cast<int>(top + 30.0 + 3.0 * std::sqrt(top));
    const int N2 = N1 + 20 + N1 / 4;
    const double v1 = j_miller_run(n, mu, x, N1);
    const double v2 = j_miller_run(n, mu, x, N2);
    const double scale = std::max(std::abs(v2), std::min(1.0, std::sqrt(2.0 / (kPi * x))));
    return {v2, std::abs(v2 - v1) + 16.0 * kEps * scale * std::sqrt(static_cast<double>(N2))};
}

// Schlafli integral representation, valid for all x > 0 and nu > -1.
EvalResult j_schlafli(double nu, double x) {
    quad::Options opt;
    opt.abs_tol = 2e-16 * (x + nu + 1.0);
    opt.rel_tol = 1e-15;
    const int npan = 1 + static_cast<int>(std::ceil((x + nu) / 3.0));
    std::vector<double> br{0.0};
    quad::append_uniform(br, kPi, kPi / npan);
    auto a = quad::integrate([&](double t) { return std::cos(nu * t - x * std::sin(t)); }, br, opt);
    double val = a.value / kPi, err = a.abs_error / kPi;
    const double s = std::sin(nu * kPi);
    if (s != 0.0 && std::abs(nu - std::round(nu)) > 0.0) {
        double tmax = 1.0;
        while (x * std::sinh(tmax) + nu * tmax < 45.0) tmax *= 2.0;
        auto b = quad::integrate([&](double t) { return std::exp(-x * std::sinh(t) - nu * t); },
                                 quad::graded_breaks(std::min(0.5, tmax) / 64.0, tmax), opt);
        val -= s / kPi * b.value;
        err += std::abs(s) / kPi * b.abs_error;
        if (b.abs_error > 1e-12) throw ConvergenceError("Schlafli tail integral did not converge");
    }
    if (a.abs_error > 1e-12) throw ConvergenceError("Schlafli integral did not converge");
    return {val, err + 4.0 * kEps};
}

// Asymptotic series of e^{-x} I_nu(x) * sqrt(2 pi x); false if not accurate.
bool i_asymptotic(double nu, double x, double& sum, double& err) {
    const double mu4 = 4.0 * nu * nu;
    double t = 1.0, last = 1.0;
    sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        const double nt = -t * (mu4 - odd * odd) / (8.0 * k * x);
        if (std::abs(nt) > std::abs(last) && k > 1 + nu) return false;
        if (std::abs(nt) < 1e-17 * std::abs(sum)) {
            err = std::abs(nt) + 4.0 * kEps * std::abs(sum);
            return true;
        }
        t = nt;
        last = nt;
        sum += t;
    }
    return false;
}

} // namespace

EvalResult gamma_fact(double a) {
    if (!(a > -1.0)) throw DomainError("gamma_fact: argument must exceed -1");
    if (a > 170.62) throw OverflowError("gamma_fact: Gamma(a+1) overflows double precision");
    const double v = std::tgamma(a + 1.0);
    if (!std::isfinite(v)) throw OverflowError("gamma_fact: Gamma(a+1) overflows double precision");
    return {v, 8.0 * kEps * std::abs(v)};
}

double log_gamma_fact(double a) {
    if (!(a > -1.0)) throw DomainError("log_gamma_fact: argument must exceed -1");
    return std::lgamma(a + 1.0);
}

namespace detail {

EvalResult bessel_j_any(double nu, double x) {
    if (!(nu > -1.0) || !std::isfinite(nu)) throw DomainError("bessel_j: order must exceed -1");
    check_arg(x);
    if (x == 0.0) {
        if (nu == 0.0) return {1.0, 0.0};
        if (nu > 0.0) return {0.0, 0.0};
        throw DomainError("bessel_j: negative order is singular at x = 0");
    }
    // the series only cancels badly once (x/2)^2 outgrows the order
    if (x <= 6.0 || 0.25 * x * x <= nu + 1.0) return j_series(nu, x);
    EvalResult out;
    if (x > 20.0 && j_hankel(nu, x, out)) return out;
    if (nu >= 0.0) return j_miller(nu, x);
    return j_schlafli(nu, x);
}

} // namespace detail

EvalResult bessel_j(double nu, double x) {
    check_order(nu);
    return detail::bessel_j_any(nu, x);
}

LogEval log_bessel_i_scaled(double nu, double x) {
    check_order(nu);
    check_arg(x);
    if (x == 0.0) {
        if (nu == 0.0) return {0.0, 0.0};
        return {-std::numeric_limits<double>::infinity(), 0.0};
    }
    if (x > 30.0 && x > 0.5 * nu * nu) {
        double s, e;
        if (i_asymptotic(nu, x, s, e)) return {std::log(s) - 0.5 * std::log(2.0 * kPi * x), e / s + 2.0 * kEps};
    }
    const double lt0 = nu * std::log(0.5 * x) - std::lgamma(nu + 1.0);
    const double q = 0.25 * x * x;
    double rho = 1.0, s = 1.0, lscale = 0.0;
    int n = 0;
    for (; n < 200000; ++n) {
        const double next = rho * q / ((n + 1.0) * (n + 1.0 + nu));
        const bool decreasing = q < (n + 1.0) * (n + 1.0 + nu);
        if (decreasing && next <= 1e-17 * s) {
            // geometric bound on the remaining tail
            const double ratio = q / ((n + 2.0) * (n + 2.0 + nu));
            const double tail = next / std::max(1e-300, 1.0 - ratio);
            const double rel = tail / s + (4.0 + std::sqrt(n + 1.0)) * kEps + kEps * (2.0 + std::abs(lt0) + x);
            return {lt0 + std::log(s) + lscale - x, rel};
        }
        rho = next;
        s += rho;
        if (s > 1e290) {
            s *= 1e-290;
            rho *= 1e-290;
            lscale += 290.0 * std::log(10.0);
        }
    }
    throw ConvergenceError("I series did not terminate");
}

EvalResult bessel_i_scaled(double nu, double x) {
    const auto l = log_bessel_i_scaled(nu, x);
    const double v = std::exp(l.log_value);
    return {v, v * l.rel_error};
}

EvalResult bessel_i(double nu, double x) {
    const auto l = log_bessel_i_scaled(nu, x);
    if (l.log_value + x > kLogMax) throw OverflowError("bessel_i: I_nu(x) overflows double precision");
    const double v = std::exp(l.log_value + x);
    return {v, v * l.rel_error};
}

LogEval log_bessel_k_scaled(double nu, double x) {
    check_order(nu);
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("bessel_k: argument must be > 0 (K_nu diverges at 0)");
    // 0.5 * int exp(E(u)) du with E(u) = -x (cosh u - 1) + nu u, peak at asinh(nu/x)
    const double us = std::asinh(nu / x);
    auto E = [&](double u) { return -x * (std::cosh(u) - 1.0) + nu * u; };
    const double Es = E(us);
    const double sigma = 1.0 / std::sqrt(x * std::cosh(us));
    constexpr double drop = 46.0;
    double dr = std::min(sigma, 1.0);
    while (E(us + dr) > Es - drop) dr *= 2.0;
    double dl = std::min(sigma, 1.0);
    while (E(us - dl) > Es - drop) dl *= 2.0;
    const double lo = us - dl, hi = us + dr;
    const double w = std::min(2.0, 4.0 * sigma);
    const int n = std::max(2, static_cast<int>(std::ceil((hi - lo) / w)));
    auto f = [&](double u) { return std::exp(E(u) - Es); };
    using GL = boost::math::quadrature::gauss<double, 20>;
    auto composite = [&](int panels) {
        Neumaier acc;
        const double h = (hi - lo) / panels;
        for (int i = 0; i < panels; ++i) acc.add(GL::integrate(f, lo + i * h, lo + (i + 1) * h));
        return acc.sum();
    };
    const double q1 = composite(n), q2 = composite(2 * n);
    const double rel = std::abs(q2 - q1) / q2 + 8.0 * kEps * (1.0 + std::sqrt(2.0 * n)) + kEps * std::abs(Es);
    return {std::log(0.5 * q2) + Es, rel};
}

EvalResult bessel_k_scaled(double nu, double x) {
    const auto l = log_bessel_k_scaled(nu, x);
    if (l.log_value > kLogMax) throw OverflowError("bessel_k: value overflows double precision");
    const double v = std::exp(l.log_value);
    return {v, v * l.rel_error};
}

EvalResult bessel_k(double nu, double x) {
    const auto l = log_bessel_k_scaled(nu, x);
    if (l.log_value - x > kLogMax) throw OverflowError("bessel_k: value overflows double precision");
    const double v = std::exp(l.log_value - x);
    return {v, v * l.rel_error};
}

EvalResult bessel_k_reflect(double nu, double x) {
    check_order(nu);
    if (!(x > 0.0)) throw DomainError("bessel_k_reflect: argument must be > 0");
    if (std::abs(nu - std::round(nu)) < 1e-3)
        throw NearIntegerOrder("bessel_k_reflect: order within 1e-3 of an integer; use bessel_k");
    // I_{-nu} by its series; Gamma(n - nu + 1) may be negative for small n.
    const double q = 0.25 * x * x;
    auto series = [&](double order) {
        Neumaier acc;
        double absum = 0.0;
        double t = std::pow(0.5 * x, order) / std::tgamma(order + 1.0);
        acc.add(t);
        absum += std::abs(t);
        for (int n = 0; n < 100000; ++n) {
            const double next = t * q / ((n + 1.0) * (n + 1.0 + order));
            const bool decreasing = q < std::abs((n + 1.0) * (n + 1.0 + order));
            if (decreasing && std::abs(next) <= 1e-17 * std::abs(acc.sum())) break;
            t = next;
            acc.add(t);
            absum += std::abs(t);
        }
        return EvalResult{acc.sum(), 8.0 * kEps * absum};
    };
    const auto ineg = series(-nu), ipos = series(nu);
    const double pref = kPi / (2.0 * std::sin(nu * kPi));
    const double v = pref * (ineg.value - ipos.value);
    // cancellation between the two I values is the dominant error
    const double err = std::abs(pref) * (ineg.abs_error + ipos.abs_error +
                                         4.0 * kEps * (std::abs(ineg.value) + std::abs(ipos.value)));
    return {v, err};
}

EvalResult bessel_j_reduced(double a, double x) {
    if (!(a > -1.0)) throw DomainError("reduced Bessel function needs order > -1");
    x = std::abs(x);
    constexpr double s2pi = 0.79788456080286535588; // sqrt(2/pi)
    if (a == -0.5) return {s2pi * std::cos(x), 2.0 * kEps};
    if (a == 0.5 && x > 1e-2) return {s2pi * std::sin(x) / x, 2.0 * kEps};
    if (x <= 12.0) {
        const double q = 0.25 * x * x;
        double t = std::exp(-a * std::log(2.0) - std::lgamma(a + 1.0));
        Neumaier acc;
        double absum = std::abs(t);
        acc.add(t);
        for (int n = 0; n < 100000; ++n) {
            const double next = -t * q / ((n + 1.0) * (n + 1.0 + a));
            if (q < (n + 1.0) * (n + 1.0 + a) && std::abs(next) <= 1e-17 * std::abs(acc.sum())) {
                return {acc.sum(), std::abs(next) + 4.0 * kEps * absum};
            }
            if (next == 0.0) break;
            t = next;
            acc.add(t);
            absum += std::abs(t);
        }
        return {acc.sum(), 4.0 * kEps * absum};
    }
    const auto j = detail::bessel_j_any(a, x);
    const double s = std::pow(x, -a);
    return {j.value * s, j.abs_error * s};
}

double bessel_j_reduced_sup(double a) {
    if (!(a >= -0.5)) throw DomainError("supremum formula needs order >= -1/2");
    return std::exp(-a * std::log(2.0) - std::lgamma(a + 1.0));
}

Lemma1Report lemma1_check(double p, double q) {
    if (!(p >= 0.0) || !(q >= 0.0)) throw DomainError("lemma1_check: p, q must be >= 0");
    double max_rel = 0.0;
    auto f = [&](double x) {
        const auto k = log_bessel_k_scaled(p, 2.0 * x);
        max_rel = std::max(max_rel, k.rel_error);
        return std::exp(k.log_value - 2.0 * x + (p + q) * std::log(x));
    };
    const double xmax = 0.5 * (p + q) + 60.0;
    auto br = quad::graded_breaks(1e-12, 1.0);
    quad::append_uniform(br, xmax, 1.0);
    quad::Options opt;
    opt.abs_tol = 1e-15;
    opt.rel_tol = 1e-12;
    const auto r = quad::integrate(f, br, opt);
    if (!r.converged) throw ConvergenceError("lemma1_check: quadrature did not converge");
    Lemma1Report rep;
    rep.integral = {r.value, r.abs_error + max_rel * std::abs(r.value)};
    rep.bound = gamma_fact(p + q).value;
    rep.holds = rep.integral.value <= rep.bound + rep.integral.abs_error;
    return rep;
}

double lemma2_check(double p, double q) {
    if (!(p >= 1.0) || !(q >= 1.0)) throw DomainError("lemma2_check: p, q must be >= 1");
    return std::exp(std::lgamma(p + q + 1.0) - std::lgamma(p + 1.0) - std::lgamma(q + 1.0) - (p + q) * std::log(2.0));
}

} // namespace conekit
