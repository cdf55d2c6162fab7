#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace explicit_lab {

struct Decimal {
    double value;
    double half_ulp;  // half a unit in the last written digit
};

// Strict base-10 decimal: [+-]digits[.digits][(e|E)[+-]digits]. No
// whitespace, hex, inf or nan.
std::optional<Decimal> parse_decimal(std::string_view text);

// Shortest text that parses back to exactly `value`.
std::string format_shortest(double value);

// printf("%.17g"): 17 significant digits, round-trip exact for binary64.
std::string format_17g(double value);

}  // namespace explicit_lab
