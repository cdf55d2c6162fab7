#pragma once

#include <complex>
#include <string_view>

#include "explicit_lab/measures.hpp"
#include "explicit_lab/special_functions.hpp"

namespace explicit_lab {

// Zero side <nu, g> against prime side <mu, ghat>:
//   sum_gamma g(gamma/2pi) - 2 int g(t) theta'(2 pi t) dt
//     = -sum Lambda(n)/sqrt(n) (ghat(log n) + ghat(-log n)) + 2 int ghat(x) cosh(x/2) dx
struct VerificationReport {
    PairingReport zero_side;
    PairingReport prime_side;
    double residual = 0.0;  // zero_side.total - prime_side.total
    double budget = 0.0;    // sum of the four error bounds
    double tolerance = 0.0;
    bool pass = false;      // |residual| <= budget + tolerance
};

// fn must have pure parity (even or odd). Throws AdmissibilityError for a
// mixed-parity fn and CoverageError when zeros or primes do not reach far
// enough for fn's decay.
VerificationReport verify_pair(const TestFunction& fn, const ZeroTable& zeros,
                               const MangoldtTable& primes, double tol);
VerificationReport verify_pair(const TestFunction& fn, const SignedMeasure& nu,
                               const SignedMeasure& mu, double tol);

// Minimum distance of Re s above 1/2 for the probe.
inline constexpr double kProbeMargin = 0.05;

enum class ProbeMode {
    automatic,        // plain when its tail bound is below 1e-9, else head_subtracted
    plain,            // -sum Lambda(n) n^{-1/2} / (n^s + n^{-s}) over the sieve
    head_subtracted,  // leading Dirichlet series replaced by zeta'/zeta(1/2 + s)
};

std::string_view to_string(ProbeMode m);

struct ProbeDirect {
    Complex value;             // atom_part + integral_quadrature
    Complex atom_part;
    Complex integral_quadrature;
    Complex integral_closed_form;  // pi / (2 s cos(pi / 4s))
    double integral_mismatch = 0.0;
    double atom_err_bound = 0.0;
    double quad_err_bound = 0.0;
    ProbeMode mode = ProbeMode::plain;
};

// <f_s, mu> with f_s(x) = 1 / (4 cosh(s x)), computed by pairing. Needs
// Re s > 1/2 + kProbeMargin (DomainError otherwise).
ProbeDirect probe_direct(Complex s, const MangoldtTable& primes, ProbeMode mode = ProbeMode::automatic);

struct ProbeSeries {
    Complex value;        // alternating sum + closed form
    Complex alternating;  // sum_k (-1)^k zeta'/zeta(1/2 + (2k+1) s)
    Complex closed_form;
    int k_used = 0;       // number of series terms summed
    double tail_bound = 0.0;
};

// Alternating zeta'/zeta series for <f_s, mu>. k_max < 0 sums until a term
// drops below 1e-13; otherwise terms k = 0..k_max are used.
ProbeSeries probe_series(Complex s, int k_max = -1);

// One series term (-1)^k zeta'/zeta(1/2 + (2k+1) s).
Complex probe_series_term(Complex s, int k);

// pi / (2 s cos(pi / 4s)); IllConditionedError near its poles s = 1/(2+4m)
// other than s = 1/2 is impossible on the probe's domain but checked anyway.
Complex probe_closed_form(Complex s);

struct ProbeResult {
    Complex s;
    ProbeDirect direct;
    ProbeSeries series;
    double mismatch = 0.0;  // |direct.value - series.value|
};

ProbeResult probe(Complex s, const MangoldtTable& primes, ProbeMode mode = ProbeMode::automatic);

struct PoleReport {
    double radius = 0.0;
    int samples = 0;
    double max_abs_sum = 0.0;      // max |P(s)| on the circle
    Complex residue_sum;           // of P(s) = zeta'/zeta(1/2+s) + pi/(2 s cos(pi/4s))
    Complex residue_logderiv;      // expected -1
    Complex residue_closed_form;   // expected +1
    bool pass = false;
};

inline constexpr double kPoleSumTolerance = 1e-6;
inline constexpr double kPoleResidueTolerance = 1e-4;

// Trapezoid rule on |s - 1/2| = radius, 0.01 <= radius <= 0.2. Throws
// AccuracyError for fewer than 64 samples.
PoleReport pole_cancellation(double radius, int n_samples = 256);

}  // namespace explicit_lab
