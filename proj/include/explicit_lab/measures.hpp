#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "explicit_lab/number_theory.hpp"
#include "explicit_lab/test_functions.hpp"
#include "explicit_lab/zeros.hpp"

namespace explicit_lab {

struct Atom {
    double position;
    double weight;
    double position_error = 0.0;  // data precision of the position
};

enum class DensityKind { none, cosh_half, neg_two_theta_prime, custom };

struct Density {
    DensityKind kind = DensityKind::none;
    std::function<double(double)> custom;  // only for DensityKind::custom
    std::string custom_name;

    double value(double x) const;
    std::string name() const;
};

// How the atom sum is bounded beyond the pairing window.
enum class AtomTail {
    none,          // the atom list is the whole measure
    prime_powers,  // mu: S(x) <= 3 sqrt(x) envelope
    zeros,         // nu: zero-count envelope from theta
    unit_comb      // integer comb continued past n_max
};

enum class Side { time, freq };

// Atoms plus a continuous density. Atoms are kept sorted by position.
class SignedMeasure {
public:
    SignedMeasure(std::string name, std::vector<Atom> atoms, Density density, bool even,
                  double coverage, AtomTail tail, std::string resource);

    const std::string& name() const noexcept { return name_; }
    std::span<const Atom> atoms() const noexcept { return atoms_; }
    const Density& density() const noexcept { return density_; }
    bool even() const noexcept { return even_; }
    // Atoms are complete on |x| <= coverage.
    double coverage() const noexcept { return coverage_; }
    AtomTail tail() const noexcept { return tail_; }
    // Name of the data behind the atoms, for coverage errors.
    const std::string& resource() const noexcept { return resource_; }

private:
    std::string name_;
    std::vector<Atom> atoms_;
    Density density_;
    bool even_;
    double coverage_;
    AtomTail tail_;
    std::string resource_;
};

// -sum Lambda(n)/sqrt(n) (delta_{log n} + delta_{-log n}) + 2 cosh(x/2) dx over
// n <= max_n (default: the sieve limit). Checks S(x) <= 3 sqrt(x) on the
// sieve, since the tail bound relies on it.
SignedMeasure mu_prime_side(const MangoldtTable& table, std::uint64_t max_n = 0);

// sum_gamma (delta_{gamma/2pi} + delta_{-gamma/2pi}) - 2 theta'(2 pi t) dt.
SignedMeasure nu_zero_side(const ZeroTable& zeros);

// Unit atoms at the integers |n| <= n_max, no density.
SignedMeasure dirac_comb(std::int64_t n_max);

inline constexpr double kPairingCutoff = 1e-18;

struct PairingReport {
    double atom_sum = 0.0;
    double density_integral = 0.0;
    double total = 0.0;
    double atom_tail_bound = 0.0;  // truncation, skipped atoms, rounding, data precision
    double quad_err_bound = 0.0;
    double window_min = 0.0;
    double window_max = 0.0;
    std::size_t atoms_used = 0;
};

// <measure, g> (side = time) or <measure, ghat> (side = freq, real part).
// Throws CoverageError when the window where |fn| > 1e-18 extends past the
// measure's coverage, AdmissibilityError for a complex transform against a
// measure that is not even.
PairingReport pair(const SignedMeasure& measure, const TestFunction& fn, Side side);

struct PairOptions {
    double cutoff = kPairingCutoff;
    double quad_abs_tol = 1e-12;
};
PairingReport pair(const SignedMeasure& measure, const TestFunction& fn, Side side,
                   const PairOptions& opts);

struct GrowthPoint {
    double x;
    double net_mass;  // measure((0, x]); -measure((x, 0]) for x < 0
};

// Atoms are counted right-continuously; the density part is integrated by
// adaptive quadrature.
std::vector<GrowthPoint> growth_profile(const SignedMeasure& measure, std::span<const double> xs);

}  // namespace explicit_lab
