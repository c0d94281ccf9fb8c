#include "sl3coh/dfilt.hpp"

#include "sl3coh/errors.hpp"

namespace sl3coh {

std::string to_string(Delta d) {
    switch (d) {
    case Delta::zero: return "0";
    case Delta::alpha: return "alpha";
    case Delta::beta: return "beta";
    }
    return "?";
}

Weight delta_weight(Delta d) {
    switch (d) {
    case Delta::zero: return {0, 0};
    case Delta::alpha: return kAlpha;
    case Delta::beta: return kBeta;
    }
    return {};
}

Delta transpose_delta(Delta d) {
    if (d == Delta::alpha) return Delta::beta;
    if (d == Delta::beta) return Delta::alpha;
    return d;
}

std::string to_string(const EDescriptor& e) {
    if (e.delta == Delta::zero) return to_string(e.nu);
    return std::string("E_") + to_string(e.delta) + to_string(e.nu);
}

namespace {

// k + kp*p + kr*r + ks*s
struct Lin {
    int k, kp, kr, ks;
    Int eval(Int p, Int r, Int s) const { return k + kp * p + kr * r + ks * s; }
};

struct Row {
    Lin a, b;
    Delta delta;
    Weight shift;
};

// named linear forms in (p, r, s)
constexpr Lin R{0, 0, 1, 0}, S{0, 0, 0, 1};
constexpr Lin RBAR{-2, 1, -1, 0}, SBAR{-2, 1, 0, -1};
constexpr Lin PM1{-1, 1, 0, 0};
constexpr Lin P3RS{-3, 1, -1, -1}; // p-3-r-s
constexpr Lin RS1{1, 0, 1, 1};     // r+s+1
constexpr Lin P2R{-2, 1, -1, 0};   // p-2-r

const std::vector<Row> kAlphaSing = {
    {PM1, S, Delta::zero, {0, 0}},
    {S, SBAR, Delta::alpha, {1, -1}},
    {SBAR, PM1, Delta::zero, {0, -1}},
};

const std::vector<Row> kBetaSing = {
    {R, PM1, Delta::zero, {0, 0}},
    {RBAR, R, Delta::beta, {-1, 1}},
    {PM1, RBAR, Delta::zero, {-1, 0}},
};

// parameters: mu0 = (rbar, sbar)
const std::vector<Row> kDelta = {
    {RBAR, SBAR, Delta::zero, {0, 0}},
    {S, R, Delta::zero, {0, 0}},
    {P3RS, S, Delta::alpha, {1, -1}},
    {R, P3RS, Delta::beta, {-1, 1}},
    {RS1, RBAR, Delta::zero, {0, -1}},
    {SBAR, RS1, Delta::zero, {-1, 0}},
    {S, R, Delta::zero, {-1, -1}},
};

// parameters: mu0 = (r, s)
const std::vector<Row> kNabla = {
    {R, S, Delta::zero, {0, 0}},
    {RBAR, RS1, Delta::zero, {-1, 0}},
    {RS1, SBAR, Delta::zero, {0, -1}},
    {S, P3RS, Delta::alpha, {0, -1}},
    {P3RS, R, Delta::beta, {-1, 0}},
    {R, S, Delta::zero, {-1, -1}},
    {SBAR, RBAR, Delta::zero, {-1, -1}},
};

const std::vector<Row> kGammaSing = {
    {R, P2R, Delta::zero, {0, 0}},
    {PM1, R, Delta::zero, {0, -1}},
    {P2R, PM1, Delta::zero, {-1, 0}},
    {R, P2R, Delta::zero, {-1, -1}},
};

const std::vector<Row> kAlphaBetaSing = {
    {PM1, PM1, Delta::zero, {0, 0}},
};

} // namespace

std::vector<DLayer> d_filtration(const Weight& mu, Int p) {
    require_prime(p);
    auto [mu0, mu1] = weight_digits(mu, p);
    const std::vector<Row>* table = nullptr;
    Int r = 0, s = 0;
    switch (restricted_type(mu0, p)) {
    case RestrictedType::AlphaSing:
        table = &kAlphaSing;
        s = mu0.b;
        break;
    case RestrictedType::BetaSing:
        table = &kBetaSing;
        r = mu0.a;
        break;
    case RestrictedType::Delta:
        table = &kDelta;
        r = p - 2 - mu0.a;
        s = p - 2 - mu0.b;
        break;
    case RestrictedType::Nabla:
        table = &kNabla;
        r = mu0.a;
        s = mu0.b;
        break;
    case RestrictedType::GammaSing:
        table = &kGammaSing;
        r = mu0.a;
        break;
    case RestrictedType::AlphaBetaSing:
        table = &kAlphaBetaSing;
        break;
    }
    std::vector<DLayer> out;
    for (const auto& row : *table)
        out.push_back({{row.a.eval(p, r, s), row.b.eval(p, r, s)}, {row.delta, row.shift + mu1}});
    return out;
}

Character d_layer_char(const DLayer& layer, Int p) {
    Character top = Character::monomial(layer.e.nu.scaled(p));
    if (layer.e.delta != Delta::zero)
        top += Character::monomial((layer.e.nu - delta_weight(layer.e.delta)).scaled(p));
    return simple_char(layer.nu0, p) * top;
}

} // namespace sl3coh
