#pragma once

#include "sl3coh/charring.hpp"

#include <string>

#include <json.hpp>

namespace sl3coh {

// {"dim":N,"character":[{"w":[a,b],"m":k},...]} in lexicographic weight order.
nlohmann::ordered_json character_to_json(const Character& c);
Character character_from_json(const nlohmann::json& j);
nlohmann::ordered_json weight_to_json(const Weight& w);

// One "a b mult" row per weight with aligned columns, then the dimension.
std::string character_to_text(const Character& c);
// Sum of monomials e^{(a,b)} with signed integer coefficients.
std::string character_to_latex(const Character& c);

} // namespace sl3coh
