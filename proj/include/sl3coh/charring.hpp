#pragma once

// The character ring Z[X(T)]: sparse integer combinations of formal
// exponentials e^w, kept sorted by weight with no zero entries.

#include "sl3coh/lattice.hpp"

#include <map>
#include <vector>

namespace sl3coh {

class Character {
public:
    using Term = std::pair<Weight, Int>;

    Character() = default;
    static Character monomial(const Weight& w, Int mult = 1);
    // Entries may repeat and may be zero; they are merged.
    static Character from_terms(std::vector<Term> terms);
    static Character from_map(const std::map<Weight, Int>& m);

    const std::vector<Term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Int coeff(const Weight& w) const;
    Int dim() const;
    bool is_genuine() const;
    Int max_multiplicity() const;
    // Coefficient-wise comparison.
    bool leq(const Character& o) const;

    Character operator+(const Character& o) const;
    Character operator-(const Character& o) const;
    Character operator-() const;
    Character& operator+=(const Character& o) { return *this = *this + o; }
    Character& operator-=(const Character& o) { return *this = *this - o; }
    Character operator*(const Character& o) const;
    Character scaled(Int k) const;
    Character shifted(const Weight& w) const;

    bool operator==(const Character& o) const = default;

private:
    std::vector<Term> terms_;
};

inline Character convolve(const Character& f, const Character& g) { return f * g; }
Character twist(const Character& f, int d, Int p);
Character transpose(const Character& f);
Character dual(const Character& f);

Int kostant_partition(Int x, Int y);

// Euler characteristic of the line bundle mu (Weyl character, signed).
Character chi(const Weight& mu);
Character weyl_module_char(const Weight& lambda);
Int weyl_dimension(const Weight& lambda);
Character simple_char(const Weight& lambda, Int p);
Character zhat_char(const Weight& mu, Int p);

struct SimpleDecomposition {
    std::vector<std::pair<Weight, Int>> parts;
    bool operator==(const SimpleDecomposition&) const = default;
};

SimpleDecomposition simple_decompose(const Character& f, Int p);
Int simple_multiplicity(const SimpleDecomposition& d, const Weight& lambda);

} // namespace sl3coh
