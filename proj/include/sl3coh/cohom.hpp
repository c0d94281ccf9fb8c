#pragma once

// T-characters of H^i(G/B, mu) for SL3 in characteristic p.

#include "sl3coh/charring.hpp"

#include <array>
#include <cstddef>
#include <string>

namespace sl3coh {

struct CohKey {
    Int m;
    Int n;
    Int p;
    auto operator<=>(const CohKey&) const = default;
};

// H^2 and H^1 of (m, -n-2) for m >= n >= 0.
Character core_h2(Int m, Int n, Int p);
Character core_h1(Int m, Int n, Int p);

Character coh_char(int i, const Weight& mu, Int p);
std::array<Character, 4> coh_all(const Weight& mu, Int p);

// Persistent cache of core entries. load merges a file into memory; save
// writes every entry computed so far for p. Both throw DomainError on
// version or prime mismatch or malformed input.
void cache_load(const std::string& path, Int p);
void cache_save(const std::string& path, Int p);
std::size_t cache_size(Int p);

} // namespace sl3coh
