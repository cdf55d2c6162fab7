#include "explicit_lab/report.hpp"

#include <cmath>
#include <ostream>

#include <json.hpp>

#include "explicit_lab/decimal.hpp"

namespace explicit_lab {

Record& Record::put(std::string key, Value value) {
    fields_.emplace_back(std::move(key), std::move(value));
    return *this;
}

Record& Record::add_complex(const std::string& key, Complex value) {
    add(key + "_re", value.real());
    return add(key + "_im", value.imag());
}

Record& Record::append(const Record& other, std::string_view prefix) {
    for (const auto& [k, v] : other.fields_) fields_.emplace_back(std::string(prefix) + k, v);
    return *this;
}

const Record::Value* Record::find(std::string_view key) const {
    for (const auto& [k, v] : fields_)
        if (k == key) return &v;
    return nullptr;
}

namespace {

std::string json_value(const Record::Value& v) {
    struct Visitor {
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(std::int64_t i) const { return std::to_string(i); }
        std::string operator()(double d) const { return std::isfinite(d) ? format_17g(d) : "null"; }
        std::string operator()(const std::string& s) const { return nlohmann::json(s).dump(); }
    };
    return std::visit(Visitor{}, v);
}

std::string csv_value(const Record::Value& v) {
    struct Visitor {
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(std::int64_t i) const { return std::to_string(i); }
        std::string operator()(double d) const { return std::isfinite(d) ? format_17g(d) : ""; }
        std::string operator()(const std::string& s) const { return s; }
    };
    return std::visit(Visitor{}, v);
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

}  // namespace

std::string to_json(const Record& row) {
    std::string out = "{";
    bool first = true;
    for (const auto& [k, v] : row.fields()) {
        if (!first) out += ',';
        first = false;
        out += nlohmann::json(k).dump();
        out += ':';
        out += json_value(v);
    }
    return out + '}';
}

void write_json_lines(const std::vector<Record>& rows, std::ostream& out) {
    for (const auto& r : rows) out << to_json(r) << '\n';
}

void write_csv(const std::vector<Record>& rows, std::ostream& out) {
    if (rows.empty()) return;
    const auto& header = rows.front().fields();
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << csv_quote(header[i].first);
    out << "\r\n";
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < header.size(); ++i) {
            const auto* v = r.find(header[i].first);
            out << (i ? "," : "") << (v ? csv_quote(csv_value(*v)) : std::string());
        }
        out << "\r\n";
    }
}

Record to_record(const PairingReport& r) {
    Record rec;
    rec.add("atom_sum", r.atom_sum)
        .add("density_integral", r.density_integral)
        .add("total", r.total)
        .add("atom_tail_bound", r.atom_tail_bound)
        .add("quad_err_bound", r.quad_err_bound)
        .add("window_min", r.window_min)
        .add("window_max", r.window_max)
        .add("atoms_used", r.atoms_used);
    return rec;
}

Record to_record(const VerificationReport& r) {
    Record rec;
    rec.add("zero_side", r.zero_side.total)
        .add("prime_side", r.prime_side.total)
        .add("residual", r.residual)
        .add("budget", r.budget)
        .add("tolerance", r.tolerance)
        .add("pass", r.pass)
        .append(to_record(r.zero_side), "zero_")
        .append(to_record(r.prime_side), "prime_");
    return rec;
}

Record to_record(const ProbeResult& r) {
    Record rec;
    rec.add_complex("s", r.s)
        .add_complex("direct", r.direct.value)
        .add_complex("series", r.series.value)
        .add("mismatch", r.mismatch)
        .add("mode", std::string(to_string(r.direct.mode)))
        .add("k_used", r.series.k_used)
        .add("series_tail_bound", r.series.tail_bound)
        .add_complex("atom_part", r.direct.atom_part)
        .add_complex("integral_quadrature", r.direct.integral_quadrature)
        .add_complex("integral_closed_form", r.direct.integral_closed_form)
        .add("integral_mismatch", r.direct.integral_mismatch)
        .add("atom_err_bound", r.direct.atom_err_bound)
        .add("quad_err_bound", r.direct.quad_err_bound);
    return rec;
}

Record to_record(const PoleReport& r) {
    Record rec;
    rec.add("radius", r.radius)
        .add("samples", r.samples)
        .add("max_abs_sum", r.max_abs_sum)
        .add_complex("residue_sum", r.residue_sum)
        .add_complex("residue_logderiv", r.residue_logderiv)
        .add_complex("residue_closed_form", r.residue_closed_form)
        .add("pass", r.pass);
    return rec;
}

Record to_record(const CountingReport& r) {
    std::string gaps;
    for (const auto& g : r.gaps) {
        if (!gaps.empty()) gaps += ';';
        gaps += format_17g(g.lower) + ':' + format_17g(g.upper);
    }
    Record rec;
    rec.add("samples", r.samples)
        .add("max_deviation", r.max_deviation)
        .add("argmax_height", r.argmax_height)
        .add("pass", r.pass)
        .add("gap_count", r.gaps.size())
        .add("gaps", gaps);
    return rec;
}

}  // namespace explicit_lab
