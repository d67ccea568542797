#pragma once

#include <cstdint>
#include <vector>

#include "conekit/cone_geometry.hpp"
#include "conekit/cone_green.hpp"
#include "conekit/eval_result.hpp"

namespace conekit {

enum class KernelRoute { automatic, expansion, closed_form };

struct KernelOptions {
    KernelRoute route = KernelRoute::automatic;
    bool fd_check = false; // cross-check against central differences of green_eval
    double tol = 1e-10;
};

struct KernelValue {
    double value = 0.0;
    double abs_error = 0.0;
    KernelRoute route = KernelRoute::closed_form;
    bool fd_checked = false;
    double fd_value = 0.0;
    double fd_error = 0.0;
    bool fd_agrees = true;
    operator EvalResult() const { return {value, abs_error}; }
};

// K(x, y) = D_x G(x, y) for D one of d2/ds_i ds_j, d2/dr ds_i, r^{-1} d2/dtheta ds_i.
// Automatic routing uses the expansion for r_x < 0.45 r_y and the closed
// form elsewhere. On S the r and theta kinds take their limits.
KernelValue deriv_kernel(const ConeParams& p, const DerivSelector& D, const ConePoint& x, const ConePoint& y,
                         const KernelOptions& opt = {});

// Empirical suprema for the four kernel bounds, on sample grids whose
// density grows with level.
struct KernelBoundReport {
    double kappa1 = 0.0; // |K(0,z)|, |z| = 1
    double kappa2 = 0.0; // |K(w1,z) - K(w2,z)| / |w1-w2|^mu, |w_i| <= 1/2
    double kappa3 = 0.0; // |K(z,w)| |z-w|^m, |pi(z)| >= 1/2, |w| <= 5
    double kappa4 = 0.0; // |grad_z K(z,w)| |z-w|^{m+1}
    int samples = 0;
};
KernelBoundReport kernel_bounds(const ConeParams& p, const DerivSelector& D, int level);

// Compactly supported test field (1 - |y-y0|^2/w^2)^3 in developed
// coordinates (r cos beta theta, r sin beta theta, s), centred at r = dist, theta = 0.
struct BumpField {
    double centre_r = 1.0;
    double width = 0.5;
    double scale = 1.0; // dilation factor lambda: rho_lambda(x) = rho(x / lambda)
    double operator()(const ConeParams& p, const ConePoint& x) const;
};

struct SchauderOptions {
    int points = 80;
    int pair_budget = 1500;
    std::uint64_t point_seed = 7;
    std::uint64_t pair_seed = 1;
    int radial_nodes = 12, polar_nodes = 12, azimuth_nodes = 24;
    bool flat_kernel = false; // Newton kernel in place of G (classical oracle)
};

struct SchauderReport {
    double ratio = 0.0;
    double holder_T = 0.0;
    double holder_rho = 0.0;
    std::vector<ConePoint> points;
    std::vector<double> T_values;
};

// T rho = D(G * rho) at sampled points, by quadrature over the support of rho
// (one s-derivative moved onto rho), then [T rho]_alpha / [rho]_alpha over
// sampled pairs. m = 3 only.
SchauderReport schauder_probe(const ConeParams& p, const BumpField& rho, const DerivSelector& D, double alpha,
                              const SchauderOptions& opt = {});

// Re-samples pairs of an existing report with a new seed and budget.
double schauder_resample(const ConeParams& p, const SchauderReport& rep, const BumpField& rho, double alpha,
                         int pair_budget, std::uint64_t seed);

// The same pipeline without the alpha < mu precondition, for the flat oracle.
SchauderReport schauder_ratio_unchecked(const ConeParams& p, const BumpField& rho, const DerivSelector& D,
                                        double alpha, const SchauderOptions& opt);

} // namespace conekit
