#include "explicit_lab/number_theory.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "explicit_lab/error.hpp"
#include "explicit_lab/parallel.hpp"
#include "explicit_lab/summation.hpp"

namespace explicit_lab {
namespace {

constexpr std::size_t kDefaultChunk = 1 << 15;

void check_range(double x, const MangoldtTable& table) {
    if (!(x >= 1.0) || x > static_cast<double>(table.limit())) {
        throw RangeError("x = " + std::to_string(x) + " outside [1, " +
                         std::to_string(table.limit()) + "]");
    }
}

template <class Term>
double chunked_sum(std::span<const PrimePower> powers, std::size_t count, std::size_t chunk,
                   Term term) {
    chunk = std::max<std::size_t>(chunk, 1);
    const std::size_t n_chunks = (count + chunk - 1) / chunk;
    std::vector<CompensatedSum> partial(n_chunks);
    parallel::for_each_task(n_chunks, [&](std::size_t c) {
        const std::size_t lo = c * chunk;
        const std::size_t hi = std::min(count, lo + chunk);
        CompensatedSum acc;
        for (std::size_t i = lo; i < hi; ++i) acc.add(term(powers[i]));
        partial[c] = acc;
    });
    CompensatedSum total;
    for (const auto& p : partial) total.merge(p);
    return total.value();
}

}  // namespace

MangoldtTable sieve_lambda(std::uint64_t limit, std::uint64_t max_limit) {
    if (limit < 2 || limit > max_limit) {
        throw CapacityError("sieve limit " + std::to_string(limit) + " outside [2, " +
                            std::to_string(max_limit) + "]");
    }
    MangoldtTable table;
    table.limit_ = limit;
    const auto n_max = static_cast<std::uint32_t>(limit);
    table.spf_.assign(n_max + 1, 0);

    // Linear sieve: every composite is crossed out exactly once, by its
    // smallest prime factor.
    std::vector<std::uint32_t> primes;
    for (std::uint32_t i = 2; i <= n_max; ++i) {
        if (table.spf_[i] == 0) {
            table.spf_[i] = i;
            primes.push_back(i);
        }
        const std::uint32_t spf_i = table.spf_[i];
        for (std::uint32_t p : primes) {
            if (p > spf_i) break;
            const std::uint64_t m = static_cast<std::uint64_t>(p) * i;
            if (m > n_max) break;
            table.spf_[m] = p;
        }
    }

    for (std::uint32_t p : primes) {
        const double lp = std::log(static_cast<double>(p));
        for (std::uint64_t q = p; q <= n_max; q *= p) {
            table.powers_.push_back({static_cast<std::uint32_t>(q), p, lp});
        }
    }
    std::sort(table.powers_.begin(), table.powers_.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.n < b.n; });

    table.prefix_psi_.reserve(table.powers_.size());
    table.prefix_weighted_.reserve(table.powers_.size());
    CompensatedSum psi, weighted;
    for (const auto& pp : table.powers_) {
        psi.add(pp.log_p);
        weighted.add(pp.log_p / std::sqrt(static_cast<double>(pp.n)));
        table.prefix_psi_.push_back(psi.value());
        table.prefix_weighted_.push_back(weighted.value());
    }
    return table;
}

std::uint32_t MangoldtTable::smallest_prime_factor(std::uint64_t n) const {
    if (n < 2 || n > limit_) throw RangeError("n = " + std::to_string(n) + " outside sieve range");
    return spf_[n];
}

double MangoldtTable::lambda(std::uint64_t n) const {
    if (n == 0 || n > limit_) throw RangeError("n = " + std::to_string(n) + " outside sieve range");
    if (n == 1) return 0.0;
    const std::uint32_t p = spf_[n];
    std::uint64_t m = n;
    while (m % p == 0) m /= p;
    return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

std::size_t MangoldtTable::count_upto(double x) const {
    const auto it = std::upper_bound(powers_.begin(), powers_.end(), x,
                                     [](double v, const PrimePower& pp) { return v < pp.n; });
    return static_cast<std::size_t>(it - powers_.begin());
}

double chebyshev_psi_chunked(double x, const MangoldtTable& table, std::size_t chunk) {
    check_range(x, table);
    return chunked_sum(table.prime_powers(), table.count_upto(x), chunk,
                       [](const PrimePower& pp) { return pp.log_p; });
}

double weighted_psum_chunked(double x, const MangoldtTable& table, std::size_t chunk) {
    check_range(x, table);
    return chunked_sum(table.prime_powers(), table.count_upto(x), chunk, [](const PrimePower& pp) {
        return pp.log_p / std::sqrt(static_cast<double>(pp.n));
    });
}

double chebyshev_psi(double x, const MangoldtTable& table) {
    return chebyshev_psi_chunked(x, table, kDefaultChunk);
}

double weighted_psum(double x, const MangoldtTable& table) {
    return weighted_psum_chunked(x, table, kDefaultChunk);
}

PartialSumProfile lemma_error_profile(std::span<const double> checkpoints,
                                      const MangoldtTable& table) {
    PartialSumProfile out;
    double prev = -INFINITY;
    for (double x : checkpoints) {
        if (x < prev) throw DomainError("checkpoints must be ascending");
        prev = x;
        const double s = weighted_psum(x, table);
        const double e = s - 2.0 * std::sqrt(x);
        const double l3 = std::pow(std::log(x), 3);
        const double r = l3 > 0.0 ? e / l3 : NAN;
        out.checkpoints.push_back(x);
        out.sums.push_back(s);
        out.errors.push_back(e);
        out.ratios.push_back(r);
        if (x >= 100.0) {
            out.sup_abs_ratio = std::max(out.sup_abs_ratio, std::abs(r));
            if (std::abs(e) > l3) out.within_log_cube = false;
        }
    }
    return out;
}

double alpha(double x, const MangoldtTable& table) {
    const double cover = std::log(static_cast<double>(table.limit()));
    if (std::abs(x) > cover) {
        throw RangeError("|x| = " + std::to_string(std::abs(x)) + " exceeds log(limit) = " +
                         std::to_string(cover));
    }
    if (x == 0.0) return 0.0;
    if (x < 0.0) return -alpha(-x, table);

    // Atoms at log n <= x. Exact comparison against log n avoids rounding
    // e^x across an integer at the atom itself.
    const auto powers = table.prime_powers();
    auto it = std::upper_bound(powers.begin(), powers.end(), x, [](double v, const PrimePower& pp) {
        return v < std::log(static_cast<double>(pp.n));
    });
    const std::size_t k = static_cast<std::size_t>(it - powers.begin());
    const double atoms = k == 0 ? 0.0 : table.prefix_weighted()[k - 1];
    return atoms - 4.0 * std::sinh(0.5 * x);
}

PartialSummationCheck partial_summation_check(double x, const MangoldtTable& table) {
    check_range(x, table);
    const double direct = weighted_psum(x, table);

    // psi is constant between consecutive prime powers q_i <= x, so
    // (1/2) int psi(t) t^{-3/2} dt = sum psi(q_i) (q_i^{-1/2} - q_{i+1}^{-1/2}).
    const auto powers = table.prime_powers();
    const std::size_t k = table.count_upto(x);
    CompensatedSum integral;
    for (std::size_t i = 0; i < k; ++i) {
        const double upper = i + 1 < k ? static_cast<double>(powers[i + 1].n) : x;
        const double psi_i = table.prefix_psi()[i];
        integral.add(psi_i * (1.0 / std::sqrt(static_cast<double>(powers[i].n)) - 1.0 / std::sqrt(upper)));
    }
    const double psi_x = k == 0 ? 0.0 : table.prefix_psi()[k - 1];
    CompensatedSum via;
    via.add(psi_x / std::sqrt(x));
    via.merge(integral);
    const double v = via.value();
    const double rel = direct == 0.0 ? std::abs(v) : std::abs(v - direct) / std::abs(direct);
    return {direct, v, rel};
}

double dirichlet_tail_bound(double w, double x) {
    if (!(w > 1.0)) throw DomainError("dirichlet_tail_bound needs w > 1");
    // sum_{n>x} Lambda(n) n^{-w} = int_x^inf t^{-w} dpsi <= w int_x^inf psi(t) t^{-w-1} dt
    // and psi(t) < 1.03883 t for all t > 0 (Rosser-Schoenfeld).
    constexpr double c = 1.04;
    return c * w / (w - 1.0) * std::pow(x, 1.0 - w);
}

}  // namespace explicit_lab
