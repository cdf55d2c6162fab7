#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace explicit_lab {

// Default memory guard for sieve_lambda.
inline constexpr std::uint64_t kMaxSieveLimit = 100'000'000;

struct PrimePower {
    std::uint32_t n;  // p^k
    std::uint32_t p;
    double log_p;     // Lambda(n)
};

// Smallest-prime-factor sieve answering the von Mangoldt function exactly.
// Immutable after construction; safe to share between threads.
class MangoldtTable {
public:
    std::uint64_t limit() const noexcept { return limit_; }

    std::uint32_t smallest_prime_factor(std::uint64_t n) const;
    double lambda(std::uint64_t n) const;

    // Prime powers <= limit in ascending order.
    std::span<const PrimePower> prime_powers() const noexcept { return powers_; }

    // Prefix sums over prime_powers(): entry i is the sum over the first i+1
    // prime powers. Built with compensated accumulation.
    std::span<const double> prefix_psi() const noexcept { return prefix_psi_; }
    std::span<const double> prefix_weighted() const noexcept { return prefix_weighted_; }

    // Number of prime powers n <= x.
    std::size_t count_upto(double x) const;

private:
    friend MangoldtTable sieve_lambda(std::uint64_t limit, std::uint64_t max_limit);

    std::uint64_t limit_ = 0;
    std::vector<std::uint32_t> spf_;
    std::vector<PrimePower> powers_;
    std::vector<double> prefix_psi_;
    std::vector<double> prefix_weighted_;
};

// Throws CapacityError unless 2 <= limit <= max_limit.
MangoldtTable sieve_lambda(std::uint64_t limit, std::uint64_t max_limit = kMaxSieveLimit);

// psi(x) = sum_{n<=x} Lambda(n). Throws RangeError unless 1 <= x <= limit.
double chebyshev_psi(double x, const MangoldtTable& table);

// S(x) = sum_{n<=x} Lambda(n)/sqrt(n).
double weighted_psum(double x, const MangoldtTable& table);

// Same sums with an explicit chunk size for the parallel reduction; the
// result must not depend on it beyond rounding of the final merge.
double chebyshev_psi_chunked(double x, const MangoldtTable& table, std::size_t chunk);
double weighted_psum_chunked(double x, const MangoldtTable& table, std::size_t chunk);

struct PartialSumProfile {
    std::vector<double> checkpoints;
    std::vector<double> sums;    // S(x)
    std::vector<double> errors;  // S(x) - 2 sqrt(x)
    std::vector<double> ratios;  // E(x) / log^3 x  (NaN at x == 1)
    double sup_abs_ratio = 0.0;  // over checkpoints with x >= 100
    bool within_log_cube = true; // |E(x)| <= log^3 x for every x >= 100
};

PartialSumProfile lemma_error_profile(std::span<const double> checkpoints,
                                      const MangoldtTable& table);

// alpha(x) = sum_{log n <= x} Lambda(n)/sqrt(n) - 4 sinh(x/2) for x > 0,
// extended oddly; right-continuous at atoms. Throws RangeError when
// |x| > log(limit).
double alpha(double x, const MangoldtTable& table);

// S(x) from the direct sum and from psi(x)/sqrt(x) + (1/2) int_1^x psi(t) t^{-3/2} dt
// with the integral taken exactly over the steps of psi.
struct PartialSummationCheck {
    double direct;
    double via_psi;
    double relative_difference;
};
PartialSummationCheck partial_summation_check(double x, const MangoldtTable& table);

// Upper bound for sum_{n > x} Lambda(n) n^{-w}, real w > 1, from psi(t) <= 1.04 t.
double dirichlet_tail_bound(double w, double x);

}  // namespace explicit_lab
