#pragma once

// Layers of the filtration of Zhat(mu) by modules Lhat(nu0) (x) E_delta(nu1)^(1).

#include "sl3coh/charring.hpp"

#include <string>
#include <vector>

namespace sl3coh {

enum class Delta { zero, alpha, beta };

std::string to_string(Delta d);
Weight delta_weight(Delta d);
Delta transpose_delta(Delta d);

// E_delta(nu): the character nu when delta = 0, otherwise the non-split
// two-dimensional B-module with socle nu - delta and head nu.
struct EDescriptor {
    Delta delta = Delta::zero;
    Weight nu;
    auto operator<=>(const EDescriptor&) const = default;
};

std::string to_string(const EDescriptor& e);

struct DLayer {
    Weight nu0;
    EDescriptor e;
    auto operator<=>(const DLayer&) const = default;
};

std::vector<DLayer> d_filtration(const Weight& mu, Int p);
Character d_layer_char(const DLayer& layer, Int p);

} // namespace sl3coh
