#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace explicit_lab {

// Fourier convention used throughout the library:
//     F g(xi) = integral g(x) exp(-2 pi i x xi) dx.

// L2-normalised Hermite function 2^{1/4} (2^n n!)^{-1/2} H_n(sqrt(2 pi) x) exp(-pi x^2),
// an eigenfunction of F with eigenvalue (-i)^n. Valid for 0 <= n <= 64.
double hermite_fn(int n, double x);
inline constexpr int kMaxHermiteOrder = 64;

struct HermiteCombo {
    std::vector<double> coefficients;  // c_0 .. c_N
};

struct DilatedGaussian {
    double a;  // g(t) = exp(-pi t^2 / a), ghat(x) = sqrt(a) exp(-pi a x^2)
};

struct GaussianPair {
    double x0;    // ghat(x) = exp(-pi (x-x0)^2/beta) + exp(-pi (x+x0)^2/beta)
    double beta;  // g(t) = 2 sqrt(beta) exp(-pi beta t^2) cos(2 pi x0 t)
};

enum class Parity { even, odd, none };

std::string_view to_string(Parity p);

class TestFunction {
public:
    using Variant = std::variant<HermiteCombo, DilatedGaussian, GaussianPair>;

    // Throws DomainError for invalid parameters (a <= 0, beta <= 0, x0 < 0,
    // Hermite order beyond kMaxHermiteOrder, empty combo).
    explicit TestFunction(Variant v);

    const Variant& variant() const noexcept { return variant_; }
    Parity parity() const noexcept { return parity_; }

    double time_value(double t) const;
    std::complex<double> freq_value_complex(double x) const;
    // Real part of the transform; the imaginary part comes only from odd
    // Hermite components.
    double freq_value(double x) const { return freq_value_complex(x).real(); }
    bool real_transform() const noexcept { return real_transform_; }

    // Upper envelopes of |g| and |ghat|, nonincreasing in |x| beyond the
    // bulk of the function. Used for windows and tail bounds.
    double time_envelope(double t) const;
    double freq_envelope(double x) const;

    // Smallest X >= 0 with envelope(x) < threshold for all |x| >= X.
    double time_cutoff(double threshold) const;
    double freq_cutoff(double threshold) const;

    // Canonical spec string, e.g. "gausspair:x0=0.6931,beta=0.25".
    std::string spec() const;

private:
    Variant variant_;
    Parity parity_ = Parity::none;
    bool real_transform_ = true;
};

TestFunction dilated_gaussian(double a);
TestFunction gaussian_pair(double x0, double beta);
TestFunction hermite_combo(std::vector<double> coefficients);

// Grammar: name ':' key '=' decimal (',' key '=' decimal)*, with names
// dgauss{a}, gausspair{x0,beta}, hermite{c<n>}. Unknown or repeated keys,
// missing keys and non-decimal values raise DomainError.
TestFunction parse_test_function(std::string_view spec);

struct FourierValue {
    std::complex<double> value;
    double err_bound;
};

// Integral of g(x) exp(-2 pi i x xi) over |x| <= cutoff where the envelope of
// g drops below 1e-16, by adaptive Gauss-Kronrod. |xi| <= 1e3.
FourierValue fourier_quadrature(const TestFunction& fn, double xi, double abs_tol = 1e-12);

struct AdmissibilityReport {
    bool admissible = true;
    Parity parity = Parity::none;
    bool real_transform = true;
    std::string note;
};

AdmissibilityReport admissibility(const TestFunction& fn);

}  // namespace explicit_lab
