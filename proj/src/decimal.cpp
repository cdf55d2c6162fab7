#include "explicit_lab/decimal.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace explicit_lab {

std::optional<Decimal> parse_decimal(std::string_view s) {
    std::size_t i = 0;
    const auto digit = [&](std::size_t k) {
        return k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]));
    };
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t int_digits = 0, frac_digits = 0;
    while (digit(i)) ++i, ++int_digits;
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (digit(i)) ++i, ++frac_digits;
    }
    if (int_digits + frac_digits == 0) return std::nullopt;
    long exponent = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool negative = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) negative = s[i++] == '-';
        if (!digit(i)) return std::nullopt;
        const std::size_t start = i;
        while (digit(i)) ++i;
        auto [p, ec] = std::from_chars(s.data() + start, s.data() + i, exponent);
        if (ec != std::errc()) return std::nullopt;
        if (negative) exponent = -exponent;
    }
    if (i != s.size()) return std::nullopt;

    const std::size_t skip = s.front() == '+' ? 1 : 0;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data() + skip, s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) return std::nullopt;
    const double half = 0.5 * std::pow(10.0, static_cast<double>(exponent - static_cast<long>(frac_digits)));
    return Decimal{value, half};
}

std::string format_shortest(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

std::string format_17g(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

}  // namespace explicit_lab
