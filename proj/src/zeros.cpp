#include "explicit_lab/zeros.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numbers>
#include <sstream>

#include "explicit_lab/decimal.hpp"
#include "explicit_lab/error.hpp"
#include "explicit_lab/parallel.hpp"
#include "explicit_lab/special_functions.hpp"

namespace explicit_lab {
namespace {

void validate(std::span<const double> ordinates) {
    for (std::size_t i = 0; i < ordinates.size(); ++i) {
        const double g = ordinates[i];
        if (!std::isfinite(g) || g <= 0.0) {
            throw DomainError("ordinate " + std::to_string(i + 1) + " is not a positive number");
        }
        if (i > 0) {
            const double prev = ordinates[i - 1];
            if (std::abs(g - prev) <= kDuplicateTolerance) {
                throw OrderError(i + 1, "duplicate ordinate");
            }
            if (g < prev) throw OrderError(i + 1, "ordinates not ascending");
        }
    }
}

std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

}  // namespace

ZeroTable::ZeroTable(std::vector<double> ordinates, std::string source,
                     std::vector<double> uncertainty)
    : ordinates_(std::move(ordinates)), uncertainty_(std::move(uncertainty)), source_(std::move(source)) {
    validate(ordinates_);
    if (uncertainty_.empty()) uncertainty_.assign(ordinates_.size(), 0.0);
    if (uncertainty_.size() != ordinates_.size()) {
        throw DomainError("uncertainty vector size does not match ordinates");
    }
}

std::size_t ZeroTable::count_upto(double t) const {
    return static_cast<std::size_t>(std::upper_bound(ordinates_.begin(), ordinates_.end(), t) -
                                    ordinates_.begin());
}

ZeroTable ZeroTable::without(std::size_t index) const {
    if (index >= ordinates_.size()) throw RangeError("zero index out of range");
    ZeroTable out = *this;
    out.ordinates_.erase(out.ordinates_.begin() + static_cast<std::ptrdiff_t>(index));
    out.uncertainty_.erase(out.uncertainty_.begin() + static_cast<std::ptrdiff_t>(index));
    return out;
}

ZeroTable ZeroTable::prefix(std::size_t count) const {
    count = std::min(count, ordinates_.size());
    ZeroTable out;
    out.ordinates_.assign(ordinates_.begin(), ordinates_.begin() + static_cast<std::ptrdiff_t>(count));
    out.uncertainty_.assign(uncertainty_.begin(), uncertainty_.begin() + static_cast<std::ptrdiff_t>(count));
    out.source_ = source_;
    return out;
}

ZeroTable ingest_zeros(std::istream& in, std::string source) {
    std::vector<double> values, half_ulps;
    std::string line;
    std::size_t line_no = 0;
    bool source_from_file = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view body = trim(line);
        if (body.empty()) continue;
        if (body.front() == '#') {
            constexpr std::string_view tag = "# source:";
            if (!source_from_file && body.substr(0, tag.size()) == tag) {
                source = std::string(trim(body.substr(tag.size())));
                source_from_file = true;
            }
            continue;
        }
        const auto parsed = parse_decimal(body);
        if (!parsed) throw ParseError(line_no, "not a decimal number: '" + std::string(body) + "'");
        const double v = parsed->value, h = parsed->half_ulp;
        if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("line " + std::to_string(line_no) + ": nonpositive ordinate");
        if (!values.empty()) {
            if (std::abs(v - values.back()) <= kDuplicateTolerance) {
                throw OrderError(line_no, "duplicate ordinate");
            }
            if (v < values.back()) throw OrderError(line_no, "ordinates not ascending");
        }
        values.push_back(v);
        half_ulps.push_back(h);
    }
    return ZeroTable(std::move(values), std::move(source), std::move(half_ulps));
}

ZeroTable ingest_zeros_text(std::string_view text, std::string source) {
    std::istringstream in{std::string(text)};
    return ingest_zeros(in, std::move(source));
}

ZeroTable load_zeros(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ResourceError("cannot open zero table '" + path + "'");
    return ingest_zeros(in, path);
}

void serialize_zeros(const ZeroTable& table, std::ostream& out) {
    if (!table.source().empty()) out << "# source: " << table.source() << '\n';
    char buf[64];
    for (double g : table.ordinates()) {
        const auto r = std::to_chars(buf, buf + sizeof buf, g, std::chars_format::fixed);
        out.write(buf, r.ptr - buf) << '\n';
    }
}

std::string serialize_zeros(const ZeroTable& table) {
    std::ostringstream out;
    serialize_zeros(table, out);
    return out.str();
}

double counting_deviation(const ZeroTable& table, double t) {
    return static_cast<double>(table.count_upto(t)) - riemann_siegel_theta(t) / std::numbers::pi - 1.0;
}

CountingReport counting_check(const ZeroTable& table, std::size_t samples) {
    if (table.empty()) throw DomainError("counting_check needs a nonempty table");
    if (samples == 0) throw DomainError("counting_check needs at least one sample");
    CountingReport report;
    report.samples = samples;
    const double height = table.height_limit();
    for (std::size_t i = 0; i < samples; ++i) {
        const double t = height * (static_cast<double>(i) + 0.5) / static_cast<double>(samples);
        const double dev = std::abs(counting_deviation(table, t));
        if (dev > report.max_deviation) {
            report.max_deviation = dev;
            report.argmax_height = t;
        }
    }
    report.pass = report.max_deviation <= kCountingTolerance;

    // Deviation evaluated just past each ordinate: N = i+1 exactly there.
    const auto g = table.ordinates();
    std::vector<double> dev(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        dev[i] = static_cast<double>(i + 1) - riemann_siegel_theta(g[i]) / std::numbers::pi - 1.0;
    }
    constexpr std::size_t kWindow = 8;
    constexpr double kShift = 0.6;
    std::vector<double> shift(g.size(), 0.0);
    for (std::size_t i = kWindow; i + kWindow <= g.size(); ++i) {
        double before = 0.0, after = 0.0;
        for (std::size_t k = 0; k < kWindow; ++k) {
            before += dev[i - 1 - k];
            after += dev[i + k];
        }
        shift[i] = (after - before) / kWindow;
    }
    // Keep only the local extreme of each run below the threshold.
    for (std::size_t i = kWindow; i + kWindow <= g.size(); ++i) {
        if (shift[i] > -kShift) continue;
        if (shift[i - 1] < shift[i]) continue;
        if (i + 1 < g.size() && shift[i + 1] < shift[i]) continue;
        report.gaps.push_back({g[i - 1], g[i], shift[i]});
    }
    return report;
}

namespace {

double bisect_zero(double lo, double hi, double z_lo, double tol) {
    double mid = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double zm = rs_z(mid);
        if (zm == 0.0) return mid;
        if ((zm > 0.0) == (z_lo > 0.0)) {
            lo = mid;
            z_lo = zm;
        } else {
            hi = mid;
        }
        if (hi - lo < 1e-13 * std::max(1.0, mid) && std::abs(zm) < tol) break;
    }
    return 0.5 * (lo + hi);
}

struct Scan {
    std::vector<double> zeros;
    std::size_t evaluations = 0;
};

void scan(double a, double b, double step, double tol, std::size_t budget, Scan& out, int depth);

void scan(double a, double b, double step, double tol, std::size_t budget, Scan& out, int depth) {
    const auto cells = static_cast<std::size_t>(std::ceil((b - a) / step));
    std::vector<double> ts(cells + 1), zs(cells + 1);
    for (std::size_t i = 0; i <= cells; ++i) {
        ts[i] = i == cells ? b : a + static_cast<double>(i) * step;
        zs[i] = rs_z(ts[i]);
    }
    out.evaluations += cells + 1;
    if (out.evaluations > budget) throw ResourceError("find_zeros evaluation budget exceeded");

    for (std::size_t i = 0; i < cells; ++i) {
        const double za = zs[i], zb = zs[i + 1];
        if (za == 0.0) {
            out.zeros.push_back(ts[i]);
            continue;
        }
        if ((za > 0.0) != (zb > 0.0) && zb != 0.0) {
            out.zeros.push_back(bisect_zero(ts[i], ts[i + 1], za, tol));
        }
    }
    if (depth >= 4) return;
    // A local minimum of |Z| without a sign change on either side can hide a
    // pair of close zeros; rescan the two cells around it more finely.
    for (std::size_t i = 1; i < cells; ++i) {
        const double zl = zs[i - 1], zm = zs[i], zr = zs[i + 1];
        const bool same_sign = (zl > 0.0) == (zm > 0.0) && (zm > 0.0) == (zr > 0.0);
        if (same_sign && std::abs(zm) < std::abs(zl) && std::abs(zm) < std::abs(zr) &&
            std::abs(zm) < 0.5) {
            Scan fine;
            fine.evaluations = out.evaluations;
            scan(ts[i - 1], ts[i + 1], step / 8.0, tol, budget, fine, depth + 1);
            out.evaluations = fine.evaluations;
            out.zeros.insert(out.zeros.end(), fine.zeros.begin(), fine.zeros.end());
        }
    }
}

}  // namespace

std::vector<double> find_zeros(double t_min, double t_max, const FindZerosOptions& opts) {
    if (!(t_min >= 10.0) || !(t_max <= 1e4) || !(t_min < t_max)) {
        throw DomainError("find_zeros needs 10 <= t_min < t_max <= 1e4");
    }
    if (!(opts.step > 0.0)) throw DomainError("scan step must be positive");

    // Fixed subranges so the result does not depend on the thread count.
    constexpr double kSpan = 50.0;
    const auto n_ranges = static_cast<std::size_t>(std::ceil((t_max - t_min) / kSpan));
    std::vector<Scan> parts(n_ranges);
    std::atomic<std::size_t> used{0};
    parallel::for_each_task(n_ranges, [&](std::size_t r) {
        const double a = t_min + static_cast<double>(r) * kSpan;
        const double b = std::min(t_max, a + kSpan);
        const std::size_t remaining = opts.max_evaluations > used.load() ? opts.max_evaluations - used.load() : 0;
        scan(a, b, opts.step, opts.z_tolerance, remaining, parts[r], 0);
        used += parts[r].evaluations;
    });
    if (used.load() > opts.max_evaluations) throw ResourceError("find_zeros evaluation budget exceeded");

    std::vector<double> zeros;
    for (auto& p : parts) zeros.insert(zeros.end(), p.zeros.begin(), p.zeros.end());
    std::sort(zeros.begin(), zeros.end());
    // A zero sitting on a subrange boundary can be reported from both sides.
    zeros.erase(std::unique(zeros.begin(), zeros.end(),
                            [](double x, double y) { return std::abs(x - y) < 1e-9; }),
                zeros.end());
    return zeros;
}

}  // namespace explicit_lab
