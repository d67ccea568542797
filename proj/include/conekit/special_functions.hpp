#pragma once

#include "conekit/eval_result.hpp"

namespace conekit {

// Generalised factorial a! = Gamma(a+1).
EvalResult gamma_fact(double a);
double log_gamma_fact(double a);

// Bessel functions of real order nu >= 0 and real argument.
EvalResult bessel_j(double nu, double x);
EvalResult bessel_i(double nu, double x);
EvalResult bessel_k(double nu, double x);

// e^{-x} I_nu(x) and e^{x} K_nu(x); never overflow for moderate orders.
EvalResult bessel_i_scaled(double nu, double x);
EvalResult bessel_k_scaled(double nu, double x);

// Logarithms of the scaled functions with a relative error estimate, for
// products like I_nu(a) K_nu(b) at large nu.
struct LogEval {
    double log_value = 0.0;
    double rel_error = 0.0;
};
LogEval log_bessel_i_scaled(double nu, double x);
LogEval log_bessel_k_scaled(double nu, double x);

// K_nu through the reflection formula built on the I series.  Throws
// NearIntegerOrder when nu is within 1e-3 of an integer.
EvalResult bessel_k_reflect(double nu, double x);

// x^{-a} J_a(x) for a > -1, i.e. the bounded function F of the modal
// representation.  Its supremum over x >= 0 is the value at 0.
EvalResult bessel_j_reduced(double a, double x);
double bessel_j_reduced_sup(double a);

struct Lemma1Report {
    EvalResult integral;
    double bound = 0.0;
    bool holds = false;
};
// int_0^inf K_p(2x) x^{p+q} dx against the bound (p+q)!.
Lemma1Report lemma1_check(double p, double q);

// (p+q)! / (p! q! 2^{p+q}), evaluated in log space.
double lemma2_check(double p, double q);

namespace detail {
// J_nu for nu > -1 (negative orders are needed by the reduced function).
EvalResult bessel_j_any(double nu, double x);
}

} // namespace conekit
