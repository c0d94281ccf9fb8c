#include "sl3coh/lattice.hpp"

#include "sl3coh/errors.hpp"

#include <sstream>

namespace sl3coh {

Int checked_add(Int x, Int y) {
    Int out;
    if (__builtin_add_overflow(x, y, &out)) throw ArithmeticOverflow("integer addition overflow");
    return out;
}

Int checked_mul(Int x, Int y) {
    Int out;
    if (__builtin_mul_overflow(x, y, &out)) throw ArithmeticOverflow("integer multiplication overflow");
    return out;
}

Int ipow(Int base, int exp) {
    if (exp < 0) throw DomainError("negative exponent");
    Int out = 1;
    for (int i = 0; i < exp; ++i) out = checked_mul(out, base);
    return out;
}

Int floor_div(Int x, Int y) {
    Int q = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
    return q;
}

Int floor_mod(Int x, Int y) { return x - floor_div(x, y) * y; }

std::ostream& operator<<(std::ostream& os, const Weight& w) {
    return os << '(' << w.a << ',' << w.b << ')';
}

std::string to_string(const Weight& w) {
    std::ostringstream os;
    os << w;
    return os.str();
}

Weight root_weight(Root r) {
    switch (r) {
    case Root::alpha: return kAlpha;
    case Root::beta: return kBeta;
    case Root::gamma: return kGamma;
    }
    return {};
}

Int pairing(const Weight& mu, Root r) {
    switch (r) {
    case Root::alpha: return mu.a;
    case Root::beta: return mu.b;
    case Root::gamma: return checked_add(mu.a, mu.b);
    }
    return 0;
}

std::optional<std::pair<Int, Int>> root_coordinates(const Weight& w) {
    // a = 2i - j, b = -i + 2j
    Int x = 2 * w.a + w.b;
    Int y = w.a + 2 * w.b;
    if (floor_mod(x, 3) != 0 || floor_mod(y, 3) != 0) return std::nullopt;
    return std::make_pair(x / 3, y / 3);
}

bool weight_leq(const Weight& mu, const Weight& lambda) {
    auto rc = root_coordinates(lambda - mu);
    return rc && rc->first >= 0 && rc->second >= 0;
}

namespace {

WeylElement make(int len, Int a, Int b, Int c, Int d, const char* name) {
    WeylElement w;
    w.length = len;
    w.m[0][0] = a;
    w.m[0][1] = b;
    w.m[1][0] = c;
    w.m[1][1] = d;
    w.name = name;
    return w;
}

} // namespace

WeylElement compose(const WeylElement& x, const WeylElement& y) {
    WeylElement out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.m[i][j] = x.m[i][0] * y.m[0][j] + x.m[i][1] * y.m[1][j];
    for (const auto& w : weyl_group()) {
        if (w.m[0][0] == out.m[0][0] && w.m[0][1] == out.m[0][1] && w.m[1][0] == out.m[1][0] &&
            w.m[1][1] == out.m[1][1])
            return w;
    }
    throw DomainError("composition left the Weyl group");
}

const std::array<WeylElement, 6>& weyl_group() {
    // s_a(a,b) = (-a, a+b), s_b(a,b) = (a+b, -b)
    static const std::array<WeylElement, 6> group = {
        make(0, 1, 0, 0, 1, "e"),
        make(1, -1, 0, 1, 1, "s_alpha"),
        make(1, 1, 1, 0, -1, "s_beta"),
        make(2, -1, -1, 1, 0, "s_alpha s_beta"),
        make(2, 0, 1, -1, -1, "s_beta s_alpha"),
        make(3, 0, -1, -1, 0, "w0"),
    };
    return group;
}

const WeylElement& w0() { return weyl_group()[5]; }

DominantForm to_dominant_dot(const Weight& mu) {
    DominantForm out;
    Weight x = mu + kRho;
    if (x.a == 0 || x.b == 0 || x.a + x.b == 0) {
        out.singular = true;
        return out;
    }
    for (const auto& w : weyl_group()) {
        Weight y = w.apply(x);
        if (y.a > 0 && y.b > 0) {
            out.lambda = y - kRho;
            out.sign = w.sign();
            // keep the element sending lambda + rho back to mu + rho
            for (const auto& v : weyl_group()) {
                if (v.apply(y) == x) {
                    out.w = v;
                    break;
                }
            }
            return out;
        }
    }
    throw DomainError("no dominant representative for " + to_string(mu));
}

bool is_prime(Int p) {
    if (p < 2) return false;
    for (Int q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

void require_prime(Int p) {
    if (!is_prime(p)) throw InvalidPrime("p = " + std::to_string(p) + " is not prime");
}

std::optional<int> degree_of(Int n, Int p) {
    if (n < 0) throw DomainError("degree of a negative integer");
    if (n == 0) return std::nullopt;
    int d = 0;
    Int q = p;
    while (q <= n) {
        ++d;
        if (q > n / p) break;
        q *= p;
    }
    return d;
}

LeadingSplit leading_split(Int x, Int p) {
    if (x < 1) throw DomainError("leading_split needs x >= 1, got " + std::to_string(x));
    int d = *degree_of(x, p);
    Int pd = ipow(p, d);
    return {d, x / pd, x % pd};
}

std::pair<Int, Int> digit_split(Int x, Int p, int d) {
    if (x < 0) throw DomainError("digit_split needs x >= 0");
    Int pd = ipow(p, d);
    return {x / pd, x % pd};
}

bool is_single_digit_power(Int x, Int p) {
    if (x < 1) return false;
    auto ls = leading_split(x, p);
    return ls.r == 0;
}

int valuation(Int x, Int p) {
    if (x == 0) throw DomainError("valuation of zero");
    int k = 0;
    while (x % p == 0) {
        x /= p;
        ++k;
    }
    return k;
}

std::string to_string(Region r) {
    switch (r) {
    case Region::Singular: return "singular";
    case Region::Dominant: return "dominant";
    case Region::AntiDominant: return "antidominant";
    case Region::H1Chamber: return "h1_chamber";
    case Region::H2Chamber: return "h2_chamber";
    case Region::GammaWall: return "gamma_wall";
    }
    return "?";
}

std::string to_string(RestrictedType t) {
    switch (t) {
    case RestrictedType::Delta: return "delta";
    case RestrictedType::Nabla: return "nabla";
    case RestrictedType::AlphaSing: return "alpha_singular";
    case RestrictedType::BetaSing: return "beta_singular";
    case RestrictedType::GammaSing: return "gamma_singular";
    case RestrictedType::AlphaBetaSing: return "alpha_beta_singular";
    }
    return "?";
}

std::string to_string(GriffithClass g) {
    switch (g) {
    case GriffithClass::None: return "none";
    case GriffithClass::Gr: return "gr";
    case GriffithClass::GrBarOnly: return "gr_bar_only";
    case GriffithClass::GrHatOnly: return "gr_hat_only";
    }
    return "?";
}

RestrictedType restricted_type(const Weight& mu0, Int p) {
    if (mu0.a < 0 || mu0.a >= p || mu0.b < 0 || mu0.b >= p)
        throw DomainError("weight " + to_string(mu0) + " is not restricted");
    Int r = mu0.a, s = mu0.b;
    if (r == p - 1 && s == p - 1) return RestrictedType::AlphaBetaSing;
    if (r == p - 1) return RestrictedType::AlphaSing;
    if (s == p - 1) return RestrictedType::BetaSing;
    if (r + s == p - 2) return RestrictedType::GammaSing;
    if (r + s > p - 2) return RestrictedType::Delta;
    return RestrictedType::Nabla;
}

std::pair<Weight, Weight> weight_digits(const Weight& mu, Int p) {
    Weight hi{floor_div(mu.a, p), floor_div(mu.b, p)};
    Weight lo{floor_mod(mu.a, p), floor_mod(mu.b, p)};
    return {lo, hi};
}

namespace {

// Window [a p^d + lo_off, (a+1) p^d + hi_off] pinned by the leading split of x.
bool in_window(Int m, Int n, Int x, Int p, Int lo_off, Int hi_off, GriffithParams* out) {
    if (x < 1) return false;
    auto ls = leading_split(x, p);
    if (ls.d < 1) return false;
    Int pd = ipow(p, ls.d);
    Int lo = ls.a * pd + lo_off, hi = (ls.a + 1) * pd + hi_off;
    if (m < lo || m > hi || n < lo || n > hi) return false;
    if (out) *out = {ls.d, ls.a, m - ls.a * pd, n - ls.a * pd};
    return true;
}

} // namespace

bool in_gr(Int m, Int n, Int p) {
    if (m < 1 || n < 1) return false;
    return in_window(m, n, m, p, 0, -2, nullptr);
}

bool in_gr_hat(Int m, Int n, Int p) {
    if (m < 1 || n < 1) return false;
    return in_window(m, n, m, p, 0, -1, nullptr);
}

bool in_gr_bar(Int m, Int n, Int p) {
    if (m < 1 || n < 1) return false;
    return in_window(m, n, m, p, -1, -1, nullptr) || in_window(m, n, m + 1, p, -1, -1, nullptr);
}

GriffithInfo griffith_info(const Weight& mu, Int p) {
    GriffithInfo out;
    Int m, n;
    if (mu.a >= 1 && mu.b <= -3) {
        m = mu.a;
        n = -mu.b - 2;
    } else if (mu.b >= 1 && mu.a <= -3) {
        m = mu.b;
        n = -mu.a - 2;
    } else {
        return out;
    }
    GriffithParams gp{};
    if (in_window(m, n, m, p, 0, -2, &gp)) {
        out.cls = GriffithClass::Gr;
        out.params = gp;
    } else if (in_window(m, n, m, p, 0, -1, &gp)) {
        out.cls = GriffithClass::GrHatOnly;
        out.params = gp;
    } else if (in_window(m, n, m, p, -1, -1, &gp) || in_window(m, n, m + 1, p, -1, -1, &gp)) {
        out.cls = GriffithClass::GrBarOnly;
        out.params = gp;
    }
    return out;
}

std::optional<int> weight_degree(const Weight& mu, Int p) {
    Weight x = mu + kRho;
    for (const auto& w : weyl_group()) {
        Weight y = w.apply(x);
        if (y.a >= 0 && y.b >= 0) {
            Int n = y.a + y.b - 1;
            if (n <= 0) return std::nullopt;
            return degree_of(n, p);
        }
    }
    return std::nullopt;
}

Region region_of(const Weight& mu) {
    if (mu.a == -1 || mu.b == -1) return Region::Singular;
    if (mu.a + mu.b == -2) return Region::GammaWall;
    if (mu.a >= 0 && mu.b >= 0) return Region::Dominant;
    if (mu.a <= -2 && mu.b <= -2) return Region::AntiDominant;
    Int m, n;
    if (mu.a >= 0) {
        m = mu.a;
        n = -mu.b - 2;
    } else {
        m = mu.b;
        n = -mu.a - 2;
    }
    return m > n ? Region::H1Chamber : Region::H2Chamber;
}

WeightProfile classify(const Weight& mu, Int p) {
    require_prime(p);
    WeightProfile out;
    out.region = region_of(mu);
    auto [lo, hi] = weight_digits(mu, p);
    out.mu0 = lo;
    out.mu1 = hi;
    out.restricted = restricted_type(lo, p);
    out.degree = weight_degree(mu, p);
    out.griffith = griffith_info(mu, p);
    return out;
}

} // namespace sl3coh
