#pragma once

#include <complex>

namespace explicit_lab {

using Complex = std::complex<double>;

template <class T>
struct EvalWithError {
    T value{};
    double err_bound = 0.0;  // conservative absolute error estimate
};

// Principal branch of log Gamma. Lifts z by the recurrence until |z| >= 10
// and Re z >= 0, then applies the Stirling series. Throws DomainError at the
// poles z = 0, -1, -2, ...
Complex log_gamma(Complex z);

// Gamma'/Gamma with the same lifting scheme.
Complex digamma(Complex z);

// Riemann-Siegel theta: Im log Gamma(1/4 + it/2) - (t/2) log pi. Odd.
double riemann_siegel_theta(double t);

// theta'(t) = Re digamma(1/4 + it/2)/2 - log(pi)/2. Even.
double theta_prime(double t);

struct EulerMaclaurinOptions {
    int cutoff = 0;         // N; 0 selects max(20, ceil(2|s|))
    int bernoulli_depth = 10;
};

// zeta(s) and zeta'(s) by Euler-Maclaurin summation for Re s > 0, s != 1.
// err_bound covers the first omitted Bernoulli term (Rademacher's factor
// included) times 2 plus a rounding allowance.
EvalWithError<Complex> zeta_em(Complex s, const EulerMaclaurinOptions& opts = {});
EvalWithError<Complex> zeta_prime_em(Complex s, const EulerMaclaurinOptions& opts = {});

// zeta'(s)/zeta(s) with propagated error. Throws IllConditionedError when
// |zeta(s)| < 10 err_bound.
EvalWithError<Complex> zeta_logderiv(Complex s, const EulerMaclaurinOptions& opts = {});

// Below this height rs_z evaluates exp(i theta) zeta(1/2 + it) directly.
inline constexpr double kRiemannSiegelMinHeight = 60.0;

// Hardy's Z function. Riemann-Siegel main sum with corrections C0..C4 for
// |t| >= kRiemannSiegelMinHeight, Euler-Maclaurin otherwise. Even.
double rs_z(double t);

// Riemann-Siegel sum truncated after `terms` correction terms (0..5), for any
// t >= 2 pi. Exposed so tests can watch each correction shrink the error.
double rs_z_asymptotic(double t, int terms);

}  // namespace explicit_lab
