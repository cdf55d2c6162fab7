#include "explicit_lab/cli.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "explicit_lab/decimal.hpp"
#include "explicit_lab/error.hpp"
#include "explicit_lab/explicit_formula.hpp"
#include "explicit_lab/measures.hpp"
#include "explicit_lab/number_theory.hpp"
#include "explicit_lab/parallel.hpp"
#include "explicit_lab/report.hpp"
#include "explicit_lab/special_functions.hpp"
#include "explicit_lab/test_functions.hpp"
#include "explicit_lab/zeros.hpp"

namespace explicit_lab::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

double parse_real(const std::string& text, const std::string& flag) {
    auto d = parse_decimal(text);
    if (!d) throw DomainError(flag + ": not a decimal number: '" + text + "'");
    return d->value;
}

// "1", "-0.5", "1+0.5i", "1-2i", "0.5i"
Complex parse_complex(const std::string& text, const std::string& flag) {
    if (text.empty() || text.back() != 'i') return {parse_real(text, flag), 0.0};
    const std::string body = text.substr(0, text.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) return {0.0, parse_real(body, flag)};
    return {parse_real(body.substr(0, split), flag), parse_real(body.substr(split), flag)};
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

int exit_code_for(const Error& e) {
    if (dynamic_cast<const DomainError*>(&e) || dynamic_cast<const ParseError*>(&e) ||
        dynamic_cast<const OrderError*>(&e) || dynamic_cast<const AdmissibilityError*>(&e))
        return kExitUsage;
    return kExitResource;
}

struct Options {
    std::string zeros;
    long long sieve_limit = 1'000'000;
    std::string testfn;
    std::string tol;
    std::vector<std::string> a{"1"};
    long long nmax = 50;
    std::vector<std::string> s{"0.75", "1", "1.5", "2", "1+0.5i"};
    std::string mode = "auto";
    std::string measure = "mu";
    std::string side = "time";
    std::vector<std::string> xs;
    std::vector<std::string> ts;
    std::size_t points = 64;
    std::string growth_constant = "1.6";
    std::size_t samples = 100;
    std::string tmin, tmax, step = "0.05";
    std::string table;
    std::string radius = "0.1";
    int pole_samples = 256;
    long long drop_zero = 0;
};

double tolerance_or(const Options& o, double fallback) {
    if (o.tol.empty()) return fallback;
    const double tol = parse_real(o.tol, "--tol");
    if (tol < 0.0) throw DomainError("--tol must be nonnegative");
    return tol;
}

MangoldtTable primes_for(const Options& o) {
    if (o.sieve_limit < 2) throw CapacityError("--sieve-limit must be at least 2");
    return sieve_lambda(static_cast<std::uint64_t>(o.sieve_limit));
}

ZeroTable zeros_for(const Options& o) {
    if (o.zeros.empty()) throw DomainError("--zeros is required");
    return load_zeros(o.zeros);
}

using Rows = std::vector<Record>;

bool cmd_psum(const Options& o, Rows& rows) {
    const auto table = primes_for(o);
    std::vector<double> xs;
    for (const auto& x : o.xs) xs.push_back(parse_real(x, "--x"));
    if (xs.empty()) {
        for (double x = 100.0; x <= static_cast<double>(table.limit()); x *= 10.0) xs.push_back(x);
        if (xs.empty()) xs.push_back(static_cast<double>(table.limit()));
    }
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1])) throw DomainError("--x checkpoints must be ascending");
    const auto profile = lemma_error_profile(xs, table);
    bool ok = true;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double x = xs[i];
        const bool checked = x >= 100.0;
        const bool within = !checked || std::abs(profile.errors[i]) <= std::pow(std::log(x), 3);
        ok = ok && within;
        const auto ps = partial_summation_check(x, table);
        Record r;
        r.add("x", x)
            .add("psi", chebyshev_psi(x, table))
            .add("weighted_sum", profile.sums[i])
            .add("error", profile.errors[i])
            .add("ratio", profile.ratios[i])
            .add("within_log_cube", within)
            .add("partial_summation_rel_diff", ps.relative_difference);
        rows.push_back(std::move(r));
    }
    return ok;
}

bool cmd_alpha(const Options& o, Rows& rows) {
    const auto table = primes_for(o);
    const double c = parse_real(o.growth_constant, "--c");
    std::vector<double> xs;
    for (const auto& x : o.xs) xs.push_back(parse_real(x, "--x"));
    if (xs.empty()) {
        const double hi = std::log(static_cast<double>(table.limit()));
        if (o.points < 2) throw DomainError("--points must be at least 2");
        if (hi <= 1.0) throw RangeError("sieve limit too small for the default grid [1, log limit]");
        for (std::size_t i = 0; i < o.points; ++i)
            xs.push_back(1.0 + (hi - 1.0) * static_cast<double>(i) / static_cast<double>(o.points - 1));
    }
    bool ok = true;
    for (double x : xs) {
        const double a = alpha(x, table);
        const double bound = c * std::abs(x * x * x);
        const bool within = std::abs(x) < 1.0 || std::abs(a) <= bound;
        ok = ok && within;
        Record r;
        r.add("x", x).add("alpha", a).add("alpha_neg", alpha(-x, table));
        r.add("ratio", x != 0.0 ? std::abs(a) / std::abs(x * x * x) : 0.0).add("growth_constant", c);
        r.add("within_bound", within);
        rows.push_back(std::move(r));
    }
    return ok;
}

bool cmd_theta(const Options& o, Rows& rows) {
    if (o.ts.empty()) throw DomainError("--t is required");
    for (const auto& text : o.ts) {
        const double t = parse_real(text, "--t");
        const auto zeta = zeta_em(Complex(0.5, t));
        Record r;
        r.add("t", t)
            .add("theta", riemann_siegel_theta(t))
            .add("theta_prime", theta_prime(t))
            .add("z", rs_z(t))
            .add("abs_zeta", std::abs(zeta.value))
            .add("abs_zeta_err_bound", zeta.err_bound);
        rows.push_back(std::move(r));
    }
    return true;
}

bool cmd_zeros_check(const Options& o, Rows& rows) {
    const auto zeros = zeros_for(o);
    if (zeros.empty()) throw DomainError("zero table is empty");
    const auto rep = counting_check(zeros, o.samples);
    Record r;
    r.add("size", zeros.size()).add("height_limit", zeros.height_limit()).append(to_record(rep));
    rows.push_back(std::move(r));
    return rep.pass;
}

bool cmd_zeros_find(const Options& o, Rows& rows) {
    if (o.tmin.empty() || o.tmax.empty()) throw DomainError("--tmin and --tmax are required");
    FindZerosOptions fo;
    fo.step = parse_real(o.step, "--step");
    const auto found = find_zeros(parse_real(o.tmin, "--tmin"), parse_real(o.tmax, "--tmax"), fo);
    for (std::size_t i = 0; i < found.size(); ++i) {
        Record r;
        r.add("index", i + 1).add("gamma", found[i]).add("z", rs_z(found[i]));
        rows.push_back(std::move(r));
    }
    if (!o.table.empty()) {
        std::ofstream f(o.table, std::ios::binary);
        if (!f) throw ResourceError("cannot write '" + o.table + "'");
        serialize_zeros(ZeroTable(found, "explicit-lab zeros-find"), f);
    }
    return true;
}

bool cmd_pair(const Options& o, Rows& rows) {
    if (o.testfn.empty()) throw DomainError("--testfn is required");
    const auto fn = parse_test_function(o.testfn);
    Side side;
    if (o.side == "time") side = Side::time;
    else side = Side::freq;
    std::optional<SignedMeasure> m;
    if (o.measure == "mu") m.emplace(mu_prime_side(primes_for(o)));
    else if (o.measure == "nu") m.emplace(nu_zero_side(zeros_for(o)));
    else m.emplace(dirac_comb(o.nmax));
    const auto rep = pair(*m, fn, side);
    Record r;
    r.add("measure", m->name()).add("side", o.side).add("testfn", fn.spec()).append(to_record(rep));
    rows.push_back(std::move(r));
    return true;
}

bool cmd_verify(const Options& o, Rows& rows) {
    if (o.testfn.empty()) throw DomainError("--testfn is required");
    const auto fn = parse_test_function(o.testfn);
    auto zeros = zeros_for(o);
    if (o.drop_zero < 0 || static_cast<std::size_t>(o.drop_zero) > zeros.size())
        throw DomainError("--drop-zero out of range");
    if (o.drop_zero > 0) zeros = zeros.without(static_cast<std::size_t>(o.drop_zero - 1));
    const auto primes = primes_for(o);
    const auto rep = verify_pair(fn, zeros, primes, tolerance_or(o, 1e-6));
    Record r;
    r.add("testfn", fn.spec()).add("zeros", zeros.size()).add("sieve_limit", static_cast<std::int64_t>(primes.limit()));
    r.append(to_record(rep));
    rows.push_back(std::move(r));
    return rep.pass;
}

bool cmd_probe(const Options& o, Rows& rows) {
    ProbeMode mode = ProbeMode::automatic;
    if (o.mode == "plain") mode = ProbeMode::plain;
    else if (o.mode == "head") mode = ProbeMode::head_subtracted;
    const double tol = tolerance_or(o, 1e-8);
    std::vector<Complex> ss;
    for (const auto& text : o.s) ss.push_back(parse_complex(text, "--s"));
    for (const auto& s : ss)
        if (!(s.real() > 0.5 + kProbeMargin)) throw DomainError("--s needs Re s > 0.55");
    const auto primes = primes_for(o);
    bool ok = true;
    for (const auto& s : ss) {
        const auto res = probe(s, primes, mode);
        const bool pass = res.mismatch <= tol;
        ok = ok && pass;
        Record r = to_record(res);
        r.add("tolerance", tol).add("pass", pass);
        rows.push_back(std::move(r));
    }
    return ok;
}

bool cmd_poles(const Options& o, Rows& rows) {
    const auto rep = pole_cancellation(parse_real(o.radius, "--radius"), o.pole_samples);
    rows.push_back(to_record(rep));
    return rep.pass;
}

bool cmd_comb(const Options& o, Rows& rows) {
    const double tol = tolerance_or(o, 1e-10);
    const auto comb = dirac_comb(o.nmax);
    bool ok = true;
    for (const auto& text : o.a) {
        const double a = parse_real(text, "--a");
        const auto fn = dilated_gaussian(a);
        const auto t = pair(comb, fn, Side::time);
        const auto f = pair(comb, fn, Side::freq);
        const double diff = std::abs(t.total - f.total);
        const bool pass = diff <= tol;
        ok = ok && pass;
        Record r;
        r.add("a", a)
            .add("nmax", static_cast<std::int64_t>(o.nmax))
            .add("time_side", t.total)
            .add("freq_side", f.total)
            .add("difference", diff)
            .add("time_tail_bound", t.atom_tail_bound)
            .add("freq_tail_bound", f.atom_tail_bound)
            .add("tolerance", tol)
            .add("pass", pass);
        rows.push_back(std::move(r));
    }
    return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical checks of the explicit formula pairing zeta zeros with prime powers.",
                 "explicit-lab"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    Options o;
    app.add_option("--format", cfg.output_format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output", cfg.output_path, "Write reports to this file instead of standard output");
    app.add_flag("--no-meta", "Omit version, thread count, timestamp and timing fields");

    auto sieve = [&](CLI::App* sub) {
        sub->add_option("--sieve-limit", o.sieve_limit, "Sieve the von Mangoldt function up to this n");
    };
    auto zeros = [&](CLI::App* sub) { sub->add_option("--zeros", o.zeros, "Zero-table file"); };
    auto testfn = [&](CLI::App* sub) {
        sub->add_option("--testfn", o.testfn, "Test function, e.g. dgauss:a=4 or gausspair:x0=0.6931,beta=0.25");
    };
    auto tol = [&](CLI::App* sub) { sub->add_option("--tol", o.tol, "Pass tolerance"); };

    std::map<std::string, std::function<bool(const Options&, Rows&)>> handlers;
    auto add = [&](const std::string& name, const std::string& help, auto fn) {
        handlers[name] = fn;
        return app.add_subcommand(name, help);
    };

    auto* psum = add("psum", "Weighted prime-power sums against 2 sqrt(x)", cmd_psum);
    sieve(psum);
    psum->add_option("--x", o.xs, "Checkpoints (default powers of ten from 100)");

    auto* alp = add("alpha", "Growth profile alpha(x) of the prime-side measure", cmd_alpha);
    sieve(alp);
    alp->add_option("--x", o.xs, "Evaluation points");
    alp->add_option("--points", o.points, "Grid size on [1, log limit] when --x is absent");
    alp->add_option("--c", o.growth_constant, "Growth constant C in |alpha(x)| <= C x^3");

    auto* th = add("theta", "Riemann-Siegel theta, its derivative, Z and |zeta| on the critical line", cmd_theta);
    th->add_option("--t", o.ts, "Heights t");

    auto* zc = add("zeros-check", "Counting consistency of a zero table", cmd_zeros_check);
    zeros(zc);
    zc->add_option("--samples", o.samples, "Number of sampled heights");

    auto* zf = add("zeros-find", "Locate zeros of Z(t) by sign changes", cmd_zeros_find);
    zf->add_option("--tmin", o.tmin, "Lower height (>= 10)");
    zf->add_option("--tmax", o.tmax, "Upper height (<= 1e4)");
    zf->add_option("--step", o.step, "Scan step");
    zf->add_option("--table", o.table, "Also write the zeros in zero-table format");

    auto* pr = add("pair", "Pair one measure with a test function", cmd_pair);
    pr->add_option("--measure", o.measure, "mu, nu or comb")->check(CLI::IsMember({"mu", "nu", "comb"}));
    pr->add_option("--side", o.side, "time or freq")->check(CLI::IsMember({"time", "freq"}));
    sieve(pr);
    zeros(pr);
    testfn(pr);
    pr->add_option("--nmax", o.nmax, "Comb half-width");

    auto* ver = add("verify", "Zero side against prime side of the explicit formula", cmd_verify);
    zeros(ver);
    sieve(ver);
    testfn(ver);
    tol(ver);
    ver->add_option("--drop-zero", o.drop_zero, "Remove the k-th ordinate (1-based) before pairing");

    auto* pb = add("probe", "Prime-side pairing with 1/(4 cosh(s x)) against its zeta series", cmd_probe);
    sieve(pb);
    tol(pb);
    pb->add_option("--s", o.s, "Complex s, e.g. 1 or 1+0.5i");
    pb->add_option("--mode", o.mode, "auto, plain or head")->check(CLI::IsMember({"auto", "plain", "head"}));

    auto* pl = add("poles", "Residues of the probe summands at s = 1/2", cmd_poles);
    pl->add_option("--radius", o.radius, "Circle radius in [0.01, 0.2]");
    pl->add_option("--samples", o.pole_samples, "Trapezoid samples (>= 64)");

    auto* cb = add("comb", "Poisson summation of a Gaussian over the integer comb", cmd_comb);
    cb->add_option("--a", o.a, "Gaussian dilation, repeatable");
    cb->add_option("--nmax", o.nmax, "Comb half-width");
    tol(cb);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    cfg.meta = app.count("--no-meta") == 0;
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.sieve_limit = o.sieve_limit;
    cfg.zeros_path = o.zeros;

    const auto t0 = std::chrono::steady_clock::now();
    Rows rows;
    bool pass = false;
    try {
        if (!o.testfn.empty()) cfg.testfn_spec = parse_test_function(o.testfn).spec();
        pass = handlers.at(cfg.command)(o, rows);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::bad_alloc&) {
        err << "error: out of memory\n";
        return kExitResource;
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    for (auto& r : rows) {
        Record full;
        full.add("command", cfg.command).append(r);
        if (cfg.meta) {
            full.add("version", kVersion)
                .add("threads", static_cast<std::int64_t>(parallel::thread_limit()))
                .add("timestamp", utc_timestamp())
                .add("elapsed_seconds", elapsed);
        }
        r = std::move(full);
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.output_path.empty()) {
        file.open(cfg.output_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write '" << cfg.output_path << "'\n";
            return kExitResource;
        }
        sink = &file;
    }
    if (cfg.output_format == "csv") write_csv(rows, *sink);
    else write_json_lines(rows, *sink);
    sink->flush();
    if (!*sink) {
        err << "error: failed writing reports\n";
        return kExitResource;
    }
    return pass ? kExitPass : kExitFail;
}

}  // namespace explicit_lab::cli
