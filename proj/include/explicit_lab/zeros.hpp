#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace explicit_lab {

// Ordinates 0 < gamma_1 < gamma_2 < ... of nontrivial zeta zeros, each with
// weight one. Every zero with 0 < gamma <= height_limit is assumed present.
class ZeroTable {
public:
    ZeroTable() = default;
    // Validates ordering and positivity; throws OrderError / DomainError with
    // the 1-based index as the line number.
    ZeroTable(std::vector<double> ordinates, std::string source = {},
              std::vector<double> uncertainty = {});

    std::span<const double> ordinates() const noexcept { return ordinates_; }
    // Half-unit in the last printed digit of each ordinate (0 when exact).
    std::span<const double> uncertainty() const noexcept { return uncertainty_; }
    double height_limit() const noexcept { return ordinates_.empty() ? 0.0 : ordinates_.back(); }
    const std::string& source() const noexcept { return source_; }
    std::size_t size() const noexcept { return ordinates_.size(); }
    bool empty() const noexcept { return ordinates_.empty(); }

    // N(T) = #{gamma <= T}
    std::size_t count_upto(double t) const;

    // Copy without the ordinate at `index` (used by negative controls).
    ZeroTable without(std::size_t index) const;
    ZeroTable prefix(std::size_t count) const;

    // Uncertainty is inferred from printed digits, so it is not part of identity.
    friend bool operator==(const ZeroTable& a, const ZeroTable& b) {
        return a.ordinates_ == b.ordinates_ && a.source_ == b.source_;
    }

private:
    std::vector<double> ordinates_;
    std::vector<double> uncertainty_;
    std::string source_;
};

// Duplicate threshold for ingest.
inline constexpr double kDuplicateTolerance = 1e-9;

// Parses the zero-table text format: UTF-8, LF or CRLF line ends, '#'
// comment lines, one base-10 decimal per data line, strictly ascending.
// Blank lines are skipped. A "# source: ..." comment sets the table source.
ZeroTable ingest_zeros(std::istream& in, std::string source = {});
ZeroTable ingest_zeros_text(std::string_view text, std::string source = {});
ZeroTable load_zeros(const std::string& path);

// One ordinate per line with 12 significant digits, preceded by a source
// comment when the table has one.
void serialize_zeros(const ZeroTable& table, std::ostream& out);
std::string serialize_zeros(const ZeroTable& table);

struct GapFlag {
    double lower;  // ordinate before the suspected gap
    double upper;  // ordinate after it
    double shift;  // drop of the counting deviation across the gap
};

struct CountingReport {
    std::size_t samples = 0;
    double max_deviation = 0.0;  // max |N(T) - theta(T)/pi - 1|
    double argmax_height = 0.0;
    bool pass = false;           // max_deviation <= 3
    std::vector<GapFlag> gaps;
};

inline constexpr double kCountingTolerance = 3.0;

// Samples T at the midpoints of `samples` equal cells of (0, height_limit].
// Gaps are flagged where the mean deviation over the following zeros sits
// at least 0.6 below the mean over the preceding ones.
CountingReport counting_check(const ZeroTable& table, std::size_t samples);

// max over the sampled T plus a list; exposed for the N=0 branch tests.
double counting_deviation(const ZeroTable& table, double t);

struct FindZerosOptions {
    double step = 0.05;
    std::size_t max_evaluations = 20'000'000;
    double z_tolerance = 1e-8;
};

// Zeros of Z(t) in [t_min, t_max] from sign changes on a uniform grid,
// refined by bisection. Stretches where |Z| dips to a local minimum without a
// sign change are rescanned at a finer step so close pairs are not lost.
std::vector<double> find_zeros(double t_min, double t_max, const FindZerosOptions& opts = {});

}  // namespace explicit_lab
