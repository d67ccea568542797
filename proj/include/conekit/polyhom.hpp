#pragma once

#include <vector>

#include "conekit/cone_geometry.hpp"
#include "conekit/cone_green.hpp"
#include "conekit/eval_result.hpp"

namespace conekit {

// Coefficient bounds of the expansion near S, with r' scaled to 2:
//   a_{j,k}(R) = 2^{-nu-2j} / (j! (nu+j)!) int lam^{nu+2j+m-3} F(R lam) K_nu(2 lam) dlam
struct ExpansionTail {
    ConeParams params;
    double C_univ = 1.1; // empirical constant of the binomial-ratio bound
    double C_prime = 0.0; // sup |F| = F(0)

    // C' (nu+2j+m-3)! / (2^{nu+2j} j! (nu+j)!), rigorous by the K moment bound
    double moment_bound(int j, int k) const;
    // C C' (nu+2j+m-3)! / (nu+2j)!, the looser form after the binomial bound
    double bound(int j, int k) const;
};

ExpansionTail expansion_tail(const ConeParams& p);

// a_{j,k}(R), with r' normalised to 2.
EvalResult polyhom_coeff(const ConeParams& p, int j, int k, double R);

struct PolyhomValue {
    double value = 0.0;
    double abs_error = 0.0; // quadrature error plus tail bound
    double tail_bound = 0.0;
    int terms = 0;
    int j_max = 0, k_max = 0;
    operator EvalResult() const { return {value, abs_error}; }
};

// Normalised G by the expansion around y; needs r < r'/2. J_max and K_max
// below zero choose the truncation from the tail bound.
PolyhomValue polyhom_eval(const ConeParams& p, const ConePoint& x, const ConePoint& y, int J_max = -1, int K_max = -1,
                          double tol = 1e-11);

// Term-wise derivatives of the expansion (order <= 2).
GreenJet polyhom_jet(const ConeParams& p, const ConePoint& x, const ConePoint& y, int order, double tol = 1e-11);

// The expansion re-expressed in chart coordinates, Z = r^c e^{i(theta-theta')},
// X = r^2: sum a_{j,k} Re(Z^k) X^j. Defined off the image of the chart too.
class ChartFunction {
public:
    ChartFunction(const ConeParams& p, const ConePoint& y, double s_offset, int J_max, int K_max);
    double operator()(double z_re, double z_im, double X) const;

private:
    std::vector<std::vector<double>> coef_; // [k][j]
};

// max |f(P+he) - 2f(P) + f(P-he)| / h^2 over a fixed direction set at the
// chart origin, for the chart function and for G in developed coordinates.
struct SmoothnessProbe {
    double chart = 0.0;
    double developed = 0.0;
};
SmoothnessProbe beta_smooth_probe(const ConeParams& p, const ConePoint& y, double h);

// Convergence audit of the double expansion in r and r' (K representation
// expanded in both radii). M-bounds use the exponent p = m - 3.
struct DoubleExpansionAudit {
    std::vector<double> partial_b; // partial sums of |b_{j,j',k}| r^{..} r'^{..} by shells j + j' = n
    std::vector<double> partial_M; // same with the M bounds
    bool b_dominated = true;       // |b| <= M termwise
    bool converged = false;        // shells of the M series fall below 1e-14 of the sum
};
DoubleExpansionAudit double_expansion_audit(const ConeParams& p, int k, double r, double rp, double R, int shells);

} // namespace conekit
