#include "explicit_lab/explicit_formula.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "explicit_lab/error.hpp"
#include "explicit_lab/quadrature.hpp"
#include "explicit_lab/summation.hpp"

namespace explicit_lab {
namespace {

using std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPlainTailTarget = 1e-9;
constexpr double kSeriesTermFloor = 1e-13;

}  // namespace

VerificationReport verify_pair(const TestFunction& fn, const SignedMeasure& nu, const SignedMeasure& mu,
                               double tol) {
    if (fn.parity() == Parity::none) {
        throw AdmissibilityError("explicit-formula runs need an even or odd test function");
    }
    VerificationReport r;
    r.zero_side = pair(nu, fn, Side::time);
    r.prime_side = pair(mu, fn, Side::freq);
    r.residual = r.zero_side.total - r.prime_side.total;
    r.budget = r.zero_side.atom_tail_bound + r.zero_side.quad_err_bound + r.prime_side.atom_tail_bound +
               r.prime_side.quad_err_bound;
    r.tolerance = tol;
    r.pass = std::abs(r.residual) <= r.budget + tol;
    return r;
}

VerificationReport verify_pair(const TestFunction& fn, const ZeroTable& zeros, const MangoldtTable& primes,
                               double tol) {
    return verify_pair(fn, nu_zero_side(zeros), mu_prime_side(primes), tol);
}

std::string_view to_string(ProbeMode m) {
    switch (m) {
        case ProbeMode::automatic: return "automatic";
        case ProbeMode::plain: return "plain";
        case ProbeMode::head_subtracted: return "head_subtracted";
    }
    return "automatic";
}

Complex probe_closed_form(Complex s) {
    const Complex c = std::cos(pi / (4.0 * s));
    if (std::abs(c) < 1e-8) throw IllConditionedError("cos(pi / 4s) vanishes; closed form has a pole");
    return pi / (2.0 * s * c);
}

ProbeDirect probe_direct(Complex s, const MangoldtTable& primes, ProbeMode mode) {
    const double sigma = s.real();
    if (!(sigma > 0.5 + kProbeMargin)) {
        throw DomainError("probe needs Re s > 1/2 + " + std::to_string(kProbeMargin));
    }
    ProbeDirect out;
    out.integral_closed_form = probe_closed_form(s);

    // int cosh(x/2) / (2 cosh(s x)) dx = int_0^inf e^{(1/2 - s) x} (1 + e^{-x}) / (1 + e^{-2 s x}) dx
    const double decay = sigma - 0.5;
    const double reach = 40.0 / decay;
    const auto integrand = [&](double x) {
        return std::exp((0.5 - s) * x) * (1.0 + std::exp(-x)) / (1.0 + std::exp(-2.0 * s * x));
    };
    quadrature::Options qopts;
    qopts.abs_tol = 1e-13;
    qopts.rel_tol = 1e-14;
    qopts.max_intervals = 20000;
    double quad_err = 0.0;
    Complex integral = 0.0;
    for (const auto& [a, b] : {std::pair{0.0, 1.0}, std::pair{1.0, reach}}) {
        const auto re = quadrature::integrate([&](double x) { return integrand(x).real(); }, a, b, qopts);
        const auto im = quadrature::integrate([&](double x) { return integrand(x).imag(); }, a, b, qopts);
        integral += Complex(re.value, im.value);
        quad_err += re.error + im.error;
    }
    // |integrand| <= 2 e^{-decay x} / (1 - e^{-2 sigma x}) beyond reach.
    quad_err += 2.0 * std::exp(-decay * reach) / (decay * (1.0 - std::exp(-2.0 * sigma * reach)));
    out.integral_quadrature = integral;
    out.quad_err_bound = quad_err;
    out.integral_mismatch = std::abs(integral - out.integral_closed_form);

    const double limit = static_cast<double>(primes.limit());
    const double geometric = 1.0 / (1.0 - std::pow(limit, -2.0 * sigma));
    const double plain_tail = geometric * dirichlet_tail_bound(0.5 + sigma, limit);
    if (mode == ProbeMode::automatic) {
        mode = plain_tail <= kPlainTailTarget ? ProbeMode::plain : ProbeMode::head_subtracted;
    }
    out.mode = mode;

    CompensatedComplexSum atoms;
    double abs_sum = 0.0;
    for (const auto& pp : primes.prime_powers()) {
        const double ln = std::log(static_cast<double>(pp.n));
        const Complex u = std::exp(-s * ln);  // n^{-s}
        const double root = 1.0 / std::sqrt(static_cast<double>(pp.n));
        Complex term;
        if (mode == ProbeMode::plain) {
            // -Lambda(n)/sqrt(n) * 1/(2 cosh(s log n)) = -Lambda(n) n^{-1/2} u / (1 + u^2)
            term = -pp.log_p * root * u / (1.0 + u * u);
        } else {
            // the same minus its leading term -Lambda(n) n^{-1/2-s}
            term = pp.log_p * root * u * u * u / (1.0 + u * u);
        }
        atoms.add(term);
        abs_sum += std::abs(term);
    }
    out.atom_err_bound = 4.0 * kEps * abs_sum;
    if (mode == ProbeMode::plain) {
        out.atom_part = atoms.value();
        out.atom_err_bound += plain_tail;
    } else {
        const auto head = zeta_logderiv(0.5 + s);
        out.atom_part = head.value + atoms.value();
        out.atom_err_bound += head.err_bound + geometric * dirichlet_tail_bound(0.5 + 3.0 * sigma, limit);
    }
    out.value = out.atom_part + out.integral_quadrature;
    return out;
}

Complex probe_series_term(Complex s, int k) {
    const Complex w = 0.5 + (2.0 * k + 1.0) * s;
    const Complex q = zeta_logderiv(w).value;
    return k % 2 == 0 ? q : -q;
}

ProbeSeries probe_series(Complex s, int k_max) {
    if (!(s.real() > 0.5)) throw DomainError("probe series needs Re s > 1/2");
    ProbeSeries out;
    out.closed_form = probe_closed_form(s);
    CompensatedComplexSum sum;
    double err = 0.0;
    int k = 0;
    for (;; ++k) {
        const Complex w = 0.5 + (2.0 * k + 1.0) * s;
        const auto q = zeta_logderiv(w);
        const Complex term = k % 2 == 0 ? q.value : -q.value;
        const bool stop = k_max < 0 ? std::abs(term) < kSeriesTermFloor : k > k_max;
        if (stop) {
            // Terms shrink at least geometrically with ratio below 1/2 for
            // Re s > 1/2, so twice the first omitted term bounds the rest.
            out.tail_bound = 2.0 * std::abs(term) + err;
            break;
        }
        sum.add(term);
        err += q.err_bound;
        if (k > 10000) throw AccuracyError("probe series failed to converge");
    }
    out.k_used = k;
    out.alternating = sum.value();
    out.value = out.alternating + out.closed_form;
    return out;
}

ProbeResult probe(Complex s, const MangoldtTable& primes, ProbeMode mode) {
    ProbeResult r;
    r.s = s;
    r.direct = probe_direct(s, primes, mode);
    r.series = probe_series(s);
    r.mismatch = std::abs(r.direct.value - r.series.value);
    return r;
}

PoleReport pole_cancellation(double radius, int n_samples) {
    if (!(radius >= 0.01 && radius <= 0.2)) throw DomainError("pole radius must lie in [0.01, 0.2]");
    if (n_samples < 64) throw AccuracyError("pole contour needs at least 64 samples");
    PoleReport r;
    r.radius = radius;
    r.samples = n_samples;
    CompensatedComplexSum sum_l, sum_c;
    for (int j = 0; j < n_samples; ++j) {
        const Complex e = std::polar(1.0, 2.0 * pi * j / n_samples);
        const Complex s = 0.5 + radius * e;
        const Complex l = zeta_logderiv(0.5 + s).value;
        const Complex c = pi / (2.0 * s * std::cos(pi / (4.0 * s)));
        r.max_abs_sum = std::max(r.max_abs_sum, std::abs(l + c));
        // (1/2 pi i) oint f ds with ds = i radius e dtheta
        sum_l.add(l * e);
        sum_c.add(c * e);
    }
    const double scale = radius / n_samples;
    r.residue_logderiv = sum_l.value() * scale;
    r.residue_closed_form = sum_c.value() * scale;
    r.residue_sum = r.residue_logderiv + r.residue_closed_form;
    r.pass = std::abs(r.residue_sum) < kPoleSumTolerance &&
             std::abs(r.residue_logderiv + 1.0) < kPoleResidueTolerance &&
             std::abs(r.residue_closed_form - 1.0) < kPoleResidueTolerance;
    return r;
}

}  // namespace explicit_lab
