#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "conekit/eval_result.hpp"

namespace conekit::quad {

struct Options {
    double abs_tol = 1e-14;
    double rel_tol = 1e-12;
    int max_panels = 4000;
};

struct Result {
    double value = 0.0;
    double abs_error = 0.0;
    int panels = 0;
    bool converged = true;
    operator EvalResult() const { return {value, abs_error}; }
};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

// Nodes and weights of the 21-point Kronrod rule and its embedded 10-point
// Gauss rule, taken from Boost and flattened once.
struct GK21Table {
    double x[11];
    double wk[11];
    double wg[11]; // zero at Kronrod-only nodes
    GK21Table() {
        using GK = boost::math::quadrature::gauss_kronrod<double, 21>;
        using G = boost::math::quadrature::gauss<double, 10>;
        for (int i = 0; i < 11; ++i) {
            x[i] = GK::abscissa()[i];
            wk[i] = GK::weights()[i];
            wg[i] = (i % 2 == 1) ? G::weights()[i / 2] : 0.0;
        }
    }
};

inline const GK21Table& gk21_table() {
    static const GK21Table t;
    return t;
}

// One Gauss-Kronrod panel with the QUADPACK local error heuristic.
template <class F>
Panel gk21(F& f, double a, double b) {
    const auto& t = gk21_table();
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double fv[21];
    fv[0] = f(c);
    for (int i = 1; i < 11; ++i) {
        fv[2 * i - 1] = f(c + h * t.x[i]);
        fv[2 * i] = f(c - h * t.x[i]);
    }
    double K = fv[0] * t.wk[0], G = 0.0, L1 = std::abs(fv[0]) * t.wk[0];
    for (int i = 1; i < 11; ++i) {
        const double s = fv[2 * i - 1] + fv[2 * i];
        K += s * t.wk[i];
        G += s * t.wg[i];
        L1 += (std::abs(fv[2 * i - 1]) + std::abs(fv[2 * i])) * t.wk[i];
    }
    const double mean = K * 0.5;
    double asc = std::abs(fv[0] - mean) * t.wk[0];
    for (int i = 1; i < 11; ++i)
        asc += (std::abs(fv[2 * i - 1] - mean) + std::abs(fv[2 * i] - mean)) * t.wk[i];
    K *= h;
    G *= h;
    L1 *= std::abs(h);
    asc *= std::abs(h);
    double err = std::abs(K - G);
    if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
    err = std::max(err, 50.0 * std::numeric_limits<double>::epsilon() * L1);
    if (!std::isfinite(K)) err = std::numeric_limits<double>::infinity();
    return {a, b, K, err};
}

// Globally adaptive GK21 over consecutive panels [breaks[i], breaks[i+1]].
// The panel with the largest local error is bisected until the total error
// meets max(abs_tol, rel_tol*|value|) or the panel budget is exhausted.
template <class F>
Result integrate(F&& f, const std::vector<double>& breaks, const Options& opt = {}) {
    Result res;
    if (breaks.size() < 2) return res;
    std::priority_queue<Panel> heap;
    double total = 0.0, err = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        if (breaks[i + 1] == breaks[i]) continue;
        Panel p = gk21(f, breaks[i], breaks[i + 1]);
        total += p.value;
        err += p.error;
        heap.push(p);
    }
    int n = static_cast<int>(heap.size());
    while (err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total)) && n < opt.max_panels) {
        Panel p = heap.top();
        heap.pop();
        const double m = 0.5 * (p.a + p.b);
        if (!(m > p.a && m < p.b)) {
            heap.push(p);
            break;
        }
        Panel l = gk21(f, p.a, m), r = gk21(f, m, p.b);
        total += l.value + r.value - p.value;
        err += l.error + r.error - p.error;
        heap.push(l);
        heap.push(r);
        ++n;
    }
    // re-sum in a fixed order so the value does not carry the running-update
    // round-off of the refinement history
    std::vector<Panel> all;
    all.reserve(heap.size());
    while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    total = 0.0;
    err = 0.0;
    for (const auto& p : all) {
        total += p.value;
        err += p.error;
    }
    res.value = total;
    res.abs_error = err;
    res.panels = n;
    res.converged = std::isfinite(total) && err <= std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
    return res;
}

// Vector-valued variant: N integrands sharing nodes. Local error of a panel
// is the max over components; tolerance is relative to the largest |value|.
template <std::size_t N>
struct VecResult {
    std::array<double, N> value{};
    std::array<double, N> abs_error{};
    int panels = 0;
    bool converged = true;
};

template <std::size_t N>
struct VecPanel {
    double a, b;
    std::array<double, N> value, error;
    double emax;
    bool operator<(const VecPanel& o) const { return emax < o.emax; }
};

template <std::size_t N, class F>
VecPanel<N> gk21_vec(F& f, double a, double b, std::size_t n_used) {
    const auto& t = gk21_table();
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    std::array<std::array<double, N>, 21> fv;
    fv[0] = f(c);
    for (int i = 1; i < 11; ++i) {
        fv[2 * i - 1] = f(c + h * t.x[i]);
        fv[2 * i] = f(c - h * t.x[i]);
    }
    VecPanel<N> p{a, b, {}, {}, 0.0};
    for (std::size_t q = 0; q < n_used; ++q) {
        double K = fv[0][q] * t.wk[0], G = 0.0, L1 = std::abs(fv[0][q]) * t.wk[0];
        for (int i = 1; i < 11; ++i) {
            const double s = fv[2 * i - 1][q] + fv[2 * i][q];
            K += s * t.wk[i];
            G += s * t.wg[i];
            L1 += (std::abs(fv[2 * i - 1][q]) + std::abs(fv[2 * i][q])) * t.wk[i];
        }
        const double mean = K * 0.5;
        double asc = std::abs(fv[0][q] - mean) * t.wk[0];
        for (int i = 1; i < 11; ++i)
            asc += (std::abs(fv[2 * i - 1][q] - mean) + std::abs(fv[2 * i][q] - mean)) * t.wk[i];
        K *= h;
        G *= h;
        L1 *= std::abs(h);
        asc *= std::abs(h);
        double err = std::abs(K - G);
        if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
        err = std::max(err, 50.0 * std::numeric_limits<double>::epsilon() * L1);
        if (!std::isfinite(K)) err = std::numeric_limits<double>::infinity();
        p.value[q] = K;
        p.error[q] = err;
    }
    return p;
}

// Each component q is held to max(abs_tol*scale[q], rel_tol*|value[q]|)
// where scale[q] defaults to 1; the worst ratio drives refinement.
template <std::size_t N, class F>
VecResult<N> integrate_vec(F&& f, const std::vector<double>& breaks, std::size_t n_used, const Options& opt = {}) {
    VecResult<N> res;
    std::priority_queue<VecPanel<N>> heap;
    std::array<double, N> total{}, err{};
    auto push = [&](VecPanel<N> p, double sign) {
        for (std::size_t q = 0; q < n_used; ++q) {
            total[q] += sign * p.value[q];
            err[q] += sign * p.error[q];
        }
        if (sign > 0) heap.push(p);
    };
    auto weight = [&](std::size_t q) { return 1.0 / std::max(opt.abs_tol, opt.rel_tol * std::abs(total[q])); };
    auto rescore = [&](VecPanel<N>& p) {
        p.emax = 0.0;
        for (std::size_t q = 0; q < n_used; ++q) p.emax = std::max(p.emax, p.error[q] * weight(q));
    };
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        if (breaks[i + 1] == breaks[i]) continue;
        auto p = gk21_vec<N>(f, breaks[i], breaks[i + 1], n_used);
        p.emax = 0.0;
        push(p, 1.0);
    }
    auto done = [&] {
        for (std::size_t q = 0; q < n_used; ++q)
            if (!(err[q] <= std::max(opt.abs_tol, opt.rel_tol * std::abs(total[q])))) return false;
        return true;
    };
    // scores are relative to the running totals, so rebuild the heap once
    // after the initial pass
    {
        std::vector<VecPanel<N>> all;
        while (!heap.empty()) {
            all.push_back(heap.top());
            heap.pop();
        }
        for (auto& p : all) {
            rescore(p);
            heap.push(p);
        }
    }
    int n = static_cast<int>(heap.size());
    while (!done() && n < opt.max_panels) {
        VecPanel<N> p = heap.top();
        heap.pop();
        const double mid = 0.5 * (p.a + p.b);
        if (!(mid > p.a && mid < p.b)) {
            heap.push(p);
            break;
        }
        auto l = gk21_vec<N>(f, p.a, mid, n_used), r = gk21_vec<N>(f, mid, p.b, n_used);
        for (std::size_t q = 0; q < n_used; ++q) {
            total[q] -= p.value[q];
            err[q] -= p.error[q];
        }
        rescore(l);
        rescore(r);
        push(l, 1.0);
        push(r, 1.0);
        ++n;
    }
    std::vector<VecPanel<N>> all;
    while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
    }
    std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) { return x.a < y.a; });
    total.fill(0.0);
    err.fill(0.0);
    for (const auto& p : all)
        for (std::size_t q = 0; q < n_used; ++q) {
            total[q] += p.value[q];
            err[q] += p.error[q];
        }
    res.value = total;
    res.abs_error = err;
    res.panels = n;
    res.converged = done();
    for (std::size_t q = 0; q < n_used; ++q)
        if (!std::isfinite(total[q])) res.converged = false;
    return res;
}

template <class F>
Result integrate(F&& f, double a, double b, const Options& opt = {}) {
    return integrate(std::forward<F>(f), std::vector<double>{a, b}, opt);
}

// Breakpoints 0 < lo*q^0 ... up to hi, geometric, preceded by 0. Used for
// integrands with an integrable endpoint singularity at 0.
inline std::vector<double> graded_breaks(double lo, double hi, double ratio = 2.0) {
    std::vector<double> b{0.0};
    double x = lo;
    while (x < hi) {
        b.push_back(x);
        x *= ratio;
    }
    b.push_back(hi);
    return b;
}

// Append uniform panels of width <= w covering [b.back(), hi].
inline void append_uniform(std::vector<double>& b, double hi, double w) {
    const double lo = b.back();
    if (hi <= lo) return;
    const int n = std::max(1, static_cast<int>(std::ceil((hi - lo) / w)));
    for (int i = 1; i <= n; ++i) b.push_back(lo + (hi - lo) * i / n);
}

} // namespace conekit::quad
