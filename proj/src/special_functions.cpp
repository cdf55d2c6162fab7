#include "explicit_lab/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "explicit_lab/error.hpp"
#include "explicit_lab/summation.hpp"

namespace explicit_lab {
namespace {

using std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// B_2, B_4, ..., B_26
constexpr std::array<double, 13> kBernoulli = {
    1.0 / 6.0,          -1.0 / 30.0,         1.0 / 42.0,          -1.0 / 30.0,
    5.0 / 66.0,         -691.0 / 2730.0,     7.0 / 6.0,           -3617.0 / 510.0,
    43867.0 / 798.0,    -174611.0 / 330.0,   854513.0 / 138.0,    -236364091.0 / 2730.0,
    8553103.0 / 6.0};

bool is_nonpositive_integer(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// Shifts z to w = z + m with |w| >= 10 and Re w >= 0.
int lift_count(Complex z) {
    int m = 0;
    Complex w = z;
    while (std::abs(w) < 10.0 || w.real() < 0.0) {
        w += 1.0;
        ++m;
    }
    return m;
}

void require_finite(Complex z, const char* what) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw AccuracyError(std::string(what) + " produced a non-finite value");
    }
}

}  // namespace

Complex log_gamma(Complex z) {
    if (is_nonpositive_integer(z)) throw DomainError("log_gamma pole at nonpositive integer");
    const int m = lift_count(z);
    CompensatedComplexSum shift;
    for (int k = 0; k < m; ++k) shift.add(std::log(z + static_cast<double>(k)));
    const Complex w = z + static_cast<double>(m);

    const Complex inv = 1.0 / w;
    const Complex inv2 = inv * inv;
    Complex series = 0.0;
    Complex power = inv;
    for (int k = 1; k <= 12; ++k) {
        series += kBernoulli[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * power;
        power *= inv2;
    }
    const Complex stirling = (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * pi) + series;
    const Complex out = stirling - shift.value();
    require_finite(out, "log_gamma");
    return out;
}

Complex digamma(Complex z) {
    if (is_nonpositive_integer(z)) throw DomainError("digamma pole at nonpositive integer");
    const int m = lift_count(z);
    CompensatedComplexSum shift;
    for (int k = 0; k < m; ++k) shift.add(1.0 / (z + static_cast<double>(k)));
    const Complex w = z + static_cast<double>(m);

    const Complex inv2 = 1.0 / (w * w);
    Complex series = 0.0;
    Complex power = inv2;
    for (int k = 1; k <= 12; ++k) {
        series += kBernoulli[k - 1] / (2.0 * k) * power;
        power *= inv2;
    }
    const Complex out = std::log(w) - 0.5 / w - series - shift.value();
    require_finite(out, "digamma");
    return out;
}

double riemann_siegel_theta(double t) {
    if (t == 0.0) return 0.0;
    const double a = std::abs(t);
    const double value = log_gamma(Complex(0.25, 0.5 * a)).imag() - 0.5 * a * std::log(pi);
    return t < 0.0 ? -value : value;
}

double theta_prime(double t) {
    return 0.5 * digamma(Complex(0.25, 0.5 * std::abs(t))).real() - 0.5 * std::log(pi);
}

namespace {

struct ZetaPair {
    Complex zeta, dzeta;
    double err_zeta, err_dzeta;
};

ZetaPair euler_maclaurin(Complex s, const EulerMaclaurinOptions& opts) {
    if (s.real() <= 0.0) throw DomainError("Euler-Maclaurin zeta requires Re s > 0");
    if (s == Complex(1.0, 0.0)) throw DomainError("zeta has a pole at s = 1");
    const int depth = opts.bernoulli_depth;
    if (depth < 1 || depth > static_cast<int>(kBernoulli.size()) - 1) {
        throw DomainError("Bernoulli depth outside [1, 12]");
    }
    const int cutoff = opts.cutoff > 0
                           ? opts.cutoff
                           : std::max(20, static_cast<int>(std::ceil(2.0 * std::abs(s))));

    CompensatedComplexSum head, dhead;
    double abs_head = 0.0;
    for (int n = 1; n < cutoff; ++n) {
        const double ln = std::log(static_cast<double>(n));
        const Complex term = std::exp(-s * ln);
        head.add(term);
        dhead.add(-ln * term);
        abs_head += std::abs(term) * (1.0 + ln);
    }

    const double big_n = cutoff;
    const double log_n = std::log(big_n);
    const Complex n_pow = std::exp(-s * log_n);  // N^{-s}
    const Complex sm1 = s - 1.0;
    const Complex pole = big_n * n_pow / sm1;
    const Complex dpole = -log_n * pole - pole / sm1;
    const Complex half = 0.5 * n_pow;
    const Complex dhalf = -log_n * half;

    // T_k = B_2k/(2k)! (s)_{2k-1} N^{-s-2k+1}; rising carries (s)_{2k-1},
    // rising_log its logarithmic derivative sum 1/(s+i).
    Complex rising = s;
    Complex rising_log = 1.0 / s;
    double factorial = 2.0;  // (2k)!
    Complex tail = 0.0, dtail = 0.0;
    Complex omitted = 0.0, domitted = 0.0;
    double n_scale = 1.0 / big_n;  // N^{1-2k}
    for (int k = 1; k <= depth + 1; ++k) {
        const Complex term = kBernoulli[k - 1] / factorial * rising * n_pow * n_scale;
        const Complex dterm = term * (rising_log - log_n);
        if (k <= depth) {
            tail += term;
            dtail += dterm;
        } else {
            omitted = term;
            domitted = dterm;
        }
        const Complex a = s + (2.0 * k - 1.0);
        const Complex b = s + 2.0 * k;
        rising *= a * b;
        rising_log += 1.0 / a + 1.0 / b;
        factorial *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
        n_scale /= big_n * big_n;
    }

    const double sigma = s.real();
    const double rademacher =
        std::max(1.0, std::abs(s + (2.0 * depth + 1.0)) / (sigma + 2.0 * depth + 1.0));
    const double rounding =
        8.0 * kEps * (abs_head + std::abs(pole) + std::abs(dpole) + std::abs(half) + 1.0) * cutoff;

    ZetaPair out;
    out.zeta = head.value() + pole + half + tail;
    out.dzeta = dhead.value() + dpole + dhalf + dtail;
    out.err_zeta = 2.0 * rademacher * std::abs(omitted) + rounding;
    out.err_dzeta = 2.0 * rademacher * (std::abs(domitted) + log_n * std::abs(omitted)) + rounding;
    require_finite(out.zeta, "zeta_em");
    require_finite(out.dzeta, "zeta_prime_em");
    return out;
}

}  // namespace

EvalWithError<Complex> zeta_em(Complex s, const EulerMaclaurinOptions& opts) {
    const ZetaPair r = euler_maclaurin(s, opts);
    return {r.zeta, r.err_zeta};
}

EvalWithError<Complex> zeta_prime_em(Complex s, const EulerMaclaurinOptions& opts) {
    const ZetaPair r = euler_maclaurin(s, opts);
    return {r.dzeta, r.err_dzeta};
}

EvalWithError<Complex> zeta_logderiv(Complex s, const EulerMaclaurinOptions& opts) {
    const ZetaPair r = euler_maclaurin(s, opts);
    const double mag = std::abs(r.zeta);
    if (mag < 10.0 * r.err_zeta) {
        throw IllConditionedError("|zeta(s)| below 10x its error bound; near a zero or pole");
    }
    const Complex q = r.dzeta / r.zeta;
    const double err = (r.err_dzeta + std::abs(q) * r.err_zeta) / (mag - r.err_zeta) +
                       4.0 * kEps * std::abs(q);
    return {q, err};
}

namespace {

// Taylor coefficients of Psi(1/2 + w) = -cos(2 pi (w^2 - 5/16)) / cos(2 pi w),
// an even entire function, from a Cauchy integral over |w| = 1.
const std::vector<double>& psi_taylor() {
    static const std::vector<double> coeffs = [] {
        constexpr int kPoints = 256;
        constexpr int kTerms = 100;
        std::vector<Complex> samples(kPoints);
        for (int k = 0; k < kPoints; ++k) {
            const Complex w = std::polar(1.0, 2.0 * pi * k / kPoints);
            samples[k] = -std::cos(2.0 * pi * (w * w - 5.0 / 16.0)) / std::cos(2.0 * pi * w);
        }
        std::vector<double> c(kTerms, 0.0);
        for (int j = 0; j < kTerms; j += 2) {
            CompensatedSum acc;
            for (int k = 0; k < kPoints; ++k) {
                acc.add((samples[k] * std::polar(1.0, -2.0 * pi * j * k / kPoints)).real());
            }
            c[j] = acc.value() / kPoints;
        }
        return c;
    }();
    return coeffs;
}

// m-th derivative of Psi at p, p in [0, 1).
double psi_derivative(int m, double p) {
    const auto& c = psi_taylor();
    const double w = p - 0.5;
    double sum = 0.0;
    // Horner on sum_j c_j j!/(j-m)! w^{j-m}
    for (int j = static_cast<int>(c.size()) - 1; j >= m; --j) {
        double falling = 1.0;
        for (int i = 0; i < m; ++i) falling *= j - i;
        sum = sum * w + c[j] * falling;
    }
    return sum;
}

}  // namespace

double rs_z_asymptotic(double t, int terms) {
    t = std::abs(t);
    if (t < 2.0 * pi) throw DomainError("Riemann-Siegel sum needs t >= 2 pi");
    const double a = std::sqrt(t / (2.0 * pi));
    const auto n_terms = static_cast<long>(std::floor(a));
    const double p = a - static_cast<double>(n_terms);
    const double theta = riemann_siegel_theta(t);

    CompensatedSum main;
    for (long n = 1; n <= n_terms; ++n) {
        const double dn = static_cast<double>(n);
        main.add(std::cos(theta - t * std::log(dn)) / std::sqrt(dn));
    }

    const double pi2 = pi * pi, pi4 = pi2 * pi2, pi6 = pi4 * pi2, pi8 = pi4 * pi4;
    auto d = [p](int m) { return psi_derivative(m, p); };
    std::array<double, 5> c{};
    if (terms > 0) c[0] = d(0);
    if (terms > 1) c[1] = -d(3) / (96.0 * pi2);
    if (terms > 2) c[2] = d(2) / (64.0 * pi2) + d(6) / (18432.0 * pi4);
    if (terms > 3) c[3] = -d(1) / (64.0 * pi2) - d(5) / (3840.0 * pi4) - d(9) / (5308416.0 * pi6);
    if (terms > 4) {
        c[4] = d(0) / (128.0 * pi2) + 19.0 * d(4) / (24576.0 * pi4) +
               11.0 * d(8) / (5898240.0 * pi6) + d(12) / (2038431744.0 * pi8);
    }
    const double u = 1.0 / a;  // (2 pi / t)^{1/2}
    double correction = 0.0;
    for (int k = std::min(terms, 5) - 1; k >= 0; --k) correction = correction * u + c[k];
    const double sign = (n_terms - 1) % 2 == 0 ? 1.0 : -1.0;
    return 2.0 * main.value() + sign * std::sqrt(u) * correction;
}

double rs_z(double t) {
    t = std::abs(t);
    if (t >= kRiemannSiegelMinHeight) return rs_z_asymptotic(t, 5);
    const Complex zeta = zeta_em(Complex(0.5, t)).value;
    return (std::polar(1.0, riemann_siegel_theta(t)) * zeta).real();
}

}  // namespace explicit_lab
