#pragma once

#include "oracles.hpp"
#include "sl3coh/charring.hpp"

inline oracle::Char as_map(const sl3coh::Character& c) {
    oracle::Char out;
    for (const auto& [w, m] : c.terms()) out[{w.a, w.b}] = m;
    return out;
}
