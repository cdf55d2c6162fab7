#include "explicit_lab/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "explicit_lab/error.hpp"
#include "explicit_lab/parallel.hpp"
#include "explicit_lab/quadrature.hpp"
#include "explicit_lab/special_functions.hpp"
#include "explicit_lab/summation.hpp"

namespace explicit_lab {
namespace {

using std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::size_t kAtomChunk = 1 << 14;

// Integral of a nonnegative, eventually decreasing f over [start, inf),
// integrated in unit panels until they stop contributing.
double tail_integral(const std::function<double(double)>& f, double start) {
    quadrature::Options opts;
    opts.abs_tol = 1e-30;
    opts.rel_tol = 1e-6;
    CompensatedSum total;
    double a = start;
    for (int panel = 0; panel < 4096; ++panel) {
        const auto r = quadrature::integrate(f, a, a + 1.0, opts);
        total.add(r.value + r.error);
        a += 1.0;
        if (r.value <= 1e-40 + 1e-20 * total.value() && f(a) <= 1e-40 + 1e-20 * total.value()) break;
    }
    return total.value();
}

// Smallest X >= start with f(x) < threshold, for f nonincreasing beyond start.
double extend_cutoff(const std::function<double(double)>& f, double start, double threshold) {
    if (f(start) < threshold) return start;
    double lo = start, hi = start, step = 0.25;
    while (f(hi) >= threshold) {
        lo = hi;
        hi += step;
        step *= 1.5;
        if (hi > 1e6) throw AccuracyError("integrand does not decay below the pairing cutoff");
    }
    for (int i = 0; i < 80 && hi - lo > 1e-9; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) >= threshold ? lo : hi) = mid;
    }
    return hi;
}

struct AtomRange {
    std::size_t begin, end;
};

AtomRange atoms_within(std::span<const Atom> atoms, double lo, double hi) {
    const auto b = std::lower_bound(atoms.begin(), atoms.end(), lo,
                                    [](const Atom& a, double v) { return a.position < v; });
    const auto e = std::upper_bound(atoms.begin(), atoms.end(), hi,
                                    [](double v, const Atom& a) { return v < a.position; });
    return {static_cast<std::size_t>(b - atoms.begin()), static_cast<std::size_t>(e - atoms.begin())};
}

}  // namespace

double Density::value(double x) const {
    switch (kind) {
        case DensityKind::none: return 0.0;
        case DensityKind::cosh_half: return 2.0 * std::cosh(0.5 * x);
        case DensityKind::neg_two_theta_prime: return -2.0 * theta_prime(2.0 * pi * x);
        case DensityKind::custom: return custom(x);
    }
    return 0.0;
}

std::string Density::name() const {
    switch (kind) {
        case DensityKind::none: return "none";
        case DensityKind::cosh_half: return "cosh_half";
        case DensityKind::neg_two_theta_prime: return "neg_two_theta_prime";
        case DensityKind::custom: return custom_name.empty() ? "custom" : custom_name;
    }
    return "none";
}

SignedMeasure::SignedMeasure(std::string name, std::vector<Atom> atoms, Density density, bool even,
                             double coverage, AtomTail tail, std::string resource)
    : name_(std::move(name)),
      atoms_(std::move(atoms)),
      density_(std::move(density)),
      even_(even),
      coverage_(coverage),
      tail_(tail),
      resource_(std::move(resource)) {
    for (const auto& a : atoms_) {
        if (!std::isfinite(a.position) || !std::isfinite(a.weight) || a.weight == 0.0) {
            throw DomainError("atoms need finite positions and finite nonzero weights");
        }
    }
    std::sort(atoms_.begin(), atoms_.end(), [](const Atom& a, const Atom& b) { return a.position < b.position; });
    if (density_.kind == DensityKind::custom && !density_.custom) {
        throw DomainError("custom density needs an evaluator");
    }
    if (even_) {
        const std::size_t n = atoms_.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Atom& a = atoms_[i];
            const Atom& b = atoms_[n - 1 - i];
            if (a.position != -b.position || a.weight != b.weight) {
                throw DomainError("measure flagged even but atoms are not symmetric");
            }
        }
    }
}

SignedMeasure mu_prime_side(const MangoldtTable& table, std::uint64_t max_n) {
    if (max_n == 0) max_n = table.limit();
    max_n = std::min<std::uint64_t>(max_n, table.limit());

    const auto powers = table.prime_powers();
    const auto prefix = table.prefix_weighted();
    for (std::size_t i = 0; i < powers.size(); ++i) {
        if (prefix[i] > 3.0 * std::sqrt(static_cast<double>(powers[i].n))) {
            throw AccuracyError("S(x) <= 3 sqrt(x) envelope violated on the sieve");
        }
    }

    std::vector<Atom> atoms;
    for (const auto& pp : powers) {
        if (pp.n > max_n) break;
        const double pos = std::log(static_cast<double>(pp.n));
        const double w = -pp.log_p / std::sqrt(static_cast<double>(pp.n));
        atoms.push_back({pos, w});
        atoms.push_back({-pos, w});
    }
    const double coverage = std::log(static_cast<double>(max_n));
    return SignedMeasure("mu", std::move(atoms), Density{DensityKind::cosh_half, {}, {}}, true, coverage,
                         AtomTail::prime_powers, "primes");
}

SignedMeasure nu_zero_side(const ZeroTable& zeros) {
    if (zeros.empty()) throw DomainError("nu needs a nonempty zero table");
    std::vector<Atom> atoms;
    atoms.reserve(2 * zeros.size());
    const auto g = zeros.ordinates();
    const auto u = zeros.uncertainty();
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double pos = g[i] / (2.0 * pi);
        const double err = u[i] / (2.0 * pi);
        atoms.push_back({pos, 1.0, err});
        atoms.push_back({-pos, 1.0, err});
    }
    return SignedMeasure("nu", std::move(atoms), Density{DensityKind::neg_two_theta_prime, {}, {}}, true,
                         zeros.height_limit() / (2.0 * pi), AtomTail::zeros, "zeros");
}

SignedMeasure dirac_comb(std::int64_t n_max) {
    if (n_max < 0) throw DomainError("dirac_comb needs n_max >= 0");
    std::vector<Atom> atoms;
    atoms.reserve(static_cast<std::size_t>(2 * n_max + 1));
    for (std::int64_t n = -n_max; n <= n_max; ++n) atoms.push_back({static_cast<double>(n), 1.0});
    return SignedMeasure("comb", std::move(atoms), Density{}, true, static_cast<double>(n_max),
                         AtomTail::unit_comb, "comb");
}

PairingReport pair(const SignedMeasure& measure, const TestFunction& fn, Side side) {
    return pair(measure, fn, side, PairOptions{});
}

PairingReport pair(const SignedMeasure& measure, const TestFunction& fn, Side side, const PairOptions& opts) {
    const bool time = side == Side::time;
    if (!time && !fn.real_transform() && !measure.even()) {
        throw AdmissibilityError("complex transform can only be paired with an even measure");
    }
    const std::function<double(double)> eval = [&](double x) {
        return time ? fn.time_value(x) : fn.freq_value(x);
    };
    const std::function<double(double)> env = [&](double x) {
        return time ? fn.time_envelope(x) : fn.freq_envelope(x);
    };
    const double window = time ? fn.time_cutoff(opts.cutoff) : fn.freq_cutoff(opts.cutoff);

    if (measure.tail() != AtomTail::none && window > measure.coverage()) {
        throw CoverageError(measure.resource(),
                            "pairing window " + std::to_string(window) + " exceeds coverage " +
                                std::to_string(measure.coverage()) + " of " + measure.name());
    }

    PairingReport report;

    // Atom part, chunked with an order-fixed merge.
    const auto atoms = measure.atoms();
    const AtomRange range = atoms_within(atoms, -window, window);
    const std::size_t count = range.end - range.begin;
    const std::size_t n_chunks = (count + kAtomChunk - 1) / kAtomChunk;
    struct Partial {
        CompensatedSum sum;
        double abs_sum = 0.0;
        double data_err = 0.0;
        std::size_t used = 0, skipped = 0;
    };
    std::vector<Partial> parts(n_chunks);
    parallel::for_each_task(n_chunks, [&](std::size_t c) {
        Partial& p = parts[c];
        const std::size_t lo = range.begin + c * kAtomChunk;
        const std::size_t hi = std::min(range.end, lo + kAtomChunk);
        for (std::size_t i = lo; i < hi; ++i) {
            const Atom& a = atoms[i];
            const double term = a.weight * eval(a.position);
            if (std::abs(term) <= opts.cutoff) {
                ++p.skipped;
                continue;
            }
            p.sum.add(term);
            p.abs_sum += std::abs(term);
            ++p.used;
            if (a.position_error > 0.0) {
                constexpr double h = 1e-6;
                const double slope = (eval(a.position + h) - eval(a.position - h)) / (2.0 * h);
                p.data_err += 2.0 * std::abs(a.weight * slope) * a.position_error;
            }
        }
    });
    CompensatedSum atom_sum;
    double abs_sum = 0.0, data_err = 0.0;
    std::size_t skipped = 0;
    for (const auto& p : parts) {
        atom_sum.merge(p.sum);
        abs_sum += p.abs_sum;
        data_err += p.data_err;
        skipped += p.skipped;
        report.atoms_used += p.used;
    }
    report.atom_sum = atom_sum.value();

    double tail = 0.0;
    switch (measure.tail()) {
        case AtomTail::none: break;
        case AtomTail::prime_powers: {
            // sum_{n > X} Lambda(n)/sqrt(n) phi(log n) <= 3 (e^{W/2} phi(W) + 1/2 int_W^inf e^{u/2} phi(u) du)
            const double head = std::exp(0.5 * window) * env(window);
            const double rest = tail_integral([&](double u) { return std::exp(0.5 * u) * env(u); }, window);
            tail = 2.0 * 3.0 * (head + 0.5 * rest);
            break;
        }
        case AtomTail::zeros: {
            // N(t) - N(T) <= (theta(t) - theta(T))/pi + 6, doubled for safety, then
            // integrated by parts against the decreasing envelope (u = gamma / 2 pi).
            const double rest = tail_integral(
                [&](double u) { return env(u) * std::max(0.0, theta_prime(2.0 * pi * u)); }, window);
            tail = 2.0 * (12.0 * env(window) + 4.0 * rest);
            break;
        }
        case AtomTail::unit_comb: {
            const double start = std::floor(window);
            tail = 2.0 * tail_integral(env, start);
            break;
        }
    }
    report.atom_tail_bound = tail + static_cast<double>(skipped) * opts.cutoff + 4.0 * kEps * abs_sum + data_err;

    // Density part.
    double density_window = 0.0;
    if (measure.density().kind != DensityKind::none) {
        const Density& dens = measure.density();
        const std::function<double(double)> env_dens = [&](double x) { return env(x) * std::abs(dens.value(x)); };
        density_window = extend_cutoff(env_dens, window, opts.cutoff);
        const auto integrand = [&](double x) { return eval(x) * dens.value(x); };
        quadrature::Options qopts;
        qopts.abs_tol = opts.quad_abs_tol;
        const auto left = quadrature::integrate(integrand, -density_window, 0.0, qopts);
        const auto right = quadrature::integrate(integrand, 0.0, density_window, qopts);
        const double beyond = tail_integral(env_dens, density_window);
        report.density_integral = left.value + right.value;
        report.quad_err_bound = left.error + right.error + 2.0 * beyond;
    }

    report.total = report.atom_sum + report.density_integral;
    const double reach = std::max(window, density_window);
    report.window_min = -reach;
    report.window_max = reach;
    return report;
}

std::vector<GrowthPoint> growth_profile(const SignedMeasure& measure, std::span<const double> xs) {
    std::vector<GrowthPoint> out;
    out.reserve(xs.size());
    double prev = -INFINITY;
    const auto atoms = measure.atoms();
    quadrature::Options qopts;
    qopts.abs_tol = 1e-13;
    qopts.rel_tol = 1e-13;
    for (double x : xs) {
        if (x < prev) throw DomainError("growth_profile needs ascending xs");
        prev = x;
        if (measure.tail() != AtomTail::none && std::abs(x) > measure.coverage()) {
            throw CoverageError(measure.resource(), "x = " + std::to_string(x) + " beyond coverage " +
                                                        std::to_string(measure.coverage()));
        }
        CompensatedSum mass;
        if (x >= 0.0) {
            // (0, x]
            const auto b = std::upper_bound(atoms.begin(), atoms.end(), 0.0,
                                            [](double v, const Atom& a) { return v < a.position; });
            const auto e = std::upper_bound(atoms.begin(), atoms.end(), x,
                                            [](double v, const Atom& a) { return v < a.position; });
            for (auto it = b; it < e; ++it) mass.add(it->weight);
        } else {
            // -(x, 0]
            const auto b = std::upper_bound(atoms.begin(), atoms.end(), x,
                                            [](double v, const Atom& a) { return v < a.position; });
            const auto e = std::upper_bound(atoms.begin(), atoms.end(), 0.0,
                                            [](double v, const Atom& a) { return v < a.position; });
            for (auto it = b; it < e; ++it) mass.add(-it->weight);
        }
        if (measure.density().kind != DensityKind::none && x != 0.0) {
            const Density& dens = measure.density();
            const auto r = quadrature::integrate([&](double t) { return dens.value(t); }, 0.0, x, qopts);
            mass.add(r.value);
        }
        out.push_back({x, mass.value()});
    }
    return out;
}

}  // namespace explicit_lab
