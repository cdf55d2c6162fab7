#pragma once

#include <string>

#include "explicit_lab/number_theory.hpp"
#include "explicit_lab/zeros.hpp"

namespace support {

inline std::string data_path(const std::string& name) { return std::string(EXPLICIT_LAB_DATA_DIR) + "/" + name; }

inline const explicit_lab::ZeroTable& zeros_10k() {
    static const auto table = explicit_lab::load_zeros(data_path("zeros_10k.txt"));
    return table;
}

inline const explicit_lab::MangoldtTable& sieve_1e6() {
    static const auto table = explicit_lab::sieve_lambda(1'000'000);
    return table;
}

}  // namespace support
