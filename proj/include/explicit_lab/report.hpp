#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "explicit_lab/explicit_formula.hpp"
#include "explicit_lab/number_theory.hpp"
#include "explicit_lab/zeros.hpp"

namespace explicit_lab {

// A flat, ordered key/value row. Keys are snake_case; reals are written with
// 17 significant digits so every row round-trips exactly.
class Record {
public:
    using Value = std::variant<bool, std::int64_t, double, std::string>;

    Record& add(std::string key, bool value) { return put(std::move(key), value); }
    Record& add(std::string key, double value) { return put(std::move(key), value); }
    Record& add(std::string key, std::int64_t value) { return put(std::move(key), value); }
    Record& add(std::string key, int value) { return put(std::move(key), std::int64_t{value}); }
    Record& add(std::string key, std::size_t value) { return put(std::move(key), static_cast<std::int64_t>(value)); }
    Record& add(std::string key, std::string value) { return put(std::move(key), std::move(value)); }
    Record& add(std::string key, const char* value) { return put(std::move(key), std::string(value)); }
    // Adds key_re and key_im.
    Record& add_complex(const std::string& key, Complex value);
    // Appends every field of `other` with `prefix` prepended to its keys.
    Record& append(const Record& other, std::string_view prefix = {});

    const std::vector<std::pair<std::string, Value>>& fields() const noexcept { return fields_; }
    const Value* find(std::string_view key) const;

private:
    Record& put(std::string key, Value value);

    std::vector<std::pair<std::string, Value>> fields_;
};

// One JSON object per line. Non-finite reals become null.
std::string to_json(const Record& row);
void write_json_lines(const std::vector<Record>& rows, std::ostream& out);

// RFC 4180: header from the first row's keys, CRLF line ends, fields quoted
// when they contain a comma, quote, CR or LF.
void write_csv(const std::vector<Record>& rows, std::ostream& out);

Record to_record(const PairingReport& r);
Record to_record(const VerificationReport& r);
Record to_record(const ProbeResult& r);
Record to_record(const PoleReport& r);
Record to_record(const CountingReport& r);

}  // namespace explicit_lab
