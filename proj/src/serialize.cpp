#include "sl3coh/serialize.hpp"

#include "sl3coh/errors.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace sl3coh {

nlohmann::ordered_json weight_to_json(const Weight& w) { return nlohmann::ordered_json::array({w.a, w.b}); }

nlohmann::ordered_json character_to_json(const Character& c) {
    nlohmann::ordered_json out;
    out["dim"] = c.dim();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [w, k] : c.terms()) {
        nlohmann::ordered_json t;
        t["w"] = weight_to_json(w);
        t["m"] = k;
        arr.push_back(std::move(t));
    }
    out["character"] = std::move(arr);
    return out;
}

Character character_from_json(const nlohmann::json& j) {
    std::vector<Character::Term> ts;
    for (const auto& t : j.at("character")) {
        const auto& w = t.at("w");
        ts.push_back({{w.at(0).get<Int>(), w.at(1).get<Int>()}, t.at("m").get<Int>()});
    }
    Character c = Character::from_terms(std::move(ts));
    if (j.contains("dim") && j.at("dim").get<Int>() != c.dim())
        throw DomainError("serialized character has inconsistent dim");
    return c;
}

std::string character_to_text(const Character& c) {
    std::size_t wa = 1, wb = 1, wm = 4;
    for (const auto& [w, k] : c.terms()) {
        wa = std::max(wa, std::to_string(w.a).size());
        wb = std::max(wb, std::to_string(w.b).size());
        wm = std::max(wm, std::to_string(k).size());
    }
    std::ostringstream os;
    for (const auto& [w, k] : c.terms())
        os << std::setw(static_cast<int>(wa)) << w.a << ' ' << std::setw(static_cast<int>(wb)) << w.b << "  "
           << std::setw(static_cast<int>(wm)) << k << '\n';
    os << "dim " << c.dim() << '\n';
    return os.str();
}

std::string character_to_latex(const Character& c) {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, k] : c.terms()) {
        Int mag = k < 0 ? -k : k;
        if (first)
            os << (k < 0 ? "-" : "");
        else
            os << (k < 0 ? " - " : " + ");
        if (mag != 1) os << mag;
        os << "e^{(" << w.a << "," << w.b << ")}";
        first = false;
    }
    return os.str();
}

} // namespace sl3coh
