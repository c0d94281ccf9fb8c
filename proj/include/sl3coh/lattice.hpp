#pragma once

// Weight lattice of SL3 in fundamental-weight coordinates, the Weyl group and
// its dot action, and the classification of weights used by the cohomology
// engine.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

namespace sl3coh {

using Int = std::int64_t;

// Checked integer helpers; overflow raises ArithmeticOverflow.
Int checked_add(Int x, Int y);
Int checked_mul(Int x, Int y);
Int ipow(Int base, int exp);
Int floor_div(Int x, Int y);
Int floor_mod(Int x, Int y);

struct Weight {
    Int a = 0;
    Int b = 0;

    auto operator<=>(const Weight&) const = default;

    Weight operator+(const Weight& o) const { return {checked_add(a, o.a), checked_add(b, o.b)}; }
    Weight operator-(const Weight& o) const { return {checked_add(a, -o.a), checked_add(b, -o.b)}; }
    Weight operator-() const { return {-a, -b}; }
    Weight scaled(Int k) const { return {checked_mul(a, k), checked_mul(b, k)}; }
    Weight transposed() const { return {b, a}; }
    bool dominant() const { return a >= 0 && b >= 0; }
};

std::ostream& operator<<(std::ostream& os, const Weight& w);
std::string to_string(const Weight& w);

enum class Root { alpha, beta, gamma };

inline constexpr Weight kRho{1, 1};
inline constexpr Weight kAlpha{2, -1};
inline constexpr Weight kBeta{-1, 2};
inline constexpr Weight kGamma{1, 1};

Weight root_weight(Root r);
Int pairing(const Weight& mu, Root r);

// Root coordinates (i, j) with w = i*alpha + j*beta, if integral.
std::optional<std::pair<Int, Int>> root_coordinates(const Weight& w);

// mu <= lambda iff lambda - mu is a nonnegative integer combination of alpha, beta.
bool weight_leq(const Weight& mu, const Weight& lambda);

struct WeylElement {
    int length = 0;
    Int m[2][2] = {{1, 0}, {0, 1}};
    const char* name = "e";

    Weight apply(const Weight& w) const {
        return {m[0][0] * w.a + m[0][1] * w.b, m[1][0] * w.a + m[1][1] * w.b};
    }
    Weight dot(const Weight& w) const { return apply(w + kRho) - kRho; }
    int sign() const { return (length % 2) ? -1 : 1; }
};

const std::array<WeylElement, 6>& weyl_group();
const WeylElement& w0();
WeylElement compose(const WeylElement& x, const WeylElement& y); // x after y

inline Weight w0_dot(const Weight& mu) { return {-mu.b - 2, -mu.a - 2}; }

struct DominantForm {
    Weight lambda;
    int sign = 1;
    bool singular = false;
    WeylElement w; // w.lambda == mu when regular
};

DominantForm to_dominant_dot(const Weight& mu);

bool is_prime(Int p);
void require_prime(Int p);

// Degree of n >= 0: p^d <= n < p^{d+1}; nullopt stands for -infinity (n = 0).
std::optional<int> degree_of(Int n, Int p);

struct LeadingSplit {
    int d;
    Int a;
    Int r;
};
// x >= 1: x = a p^d + r with a in [1,p-1], 0 <= r < p^d.
LeadingSplit leading_split(Int x, Int p);
// x = high * p^d + low with 0 <= low < p^d.
std::pair<Int, Int> digit_split(Int x, Int p, int d);
// True when x = a p^d with a in [1, p-1] for some d >= 0.
bool is_single_digit_power(Int x, Int p);
// p-adic valuation of x != 0.
int valuation(Int x, Int p);

enum class Region { Singular, Dominant, AntiDominant, H1Chamber, H2Chamber, GammaWall };
enum class RestrictedType { Delta, Nabla, AlphaSing, BetaSing, GammaSing, AlphaBetaSing };
enum class GriffithClass { None, Gr, GrBarOnly, GrHatOnly };

std::string to_string(Region r);
std::string to_string(RestrictedType t);
std::string to_string(GriffithClass g);

struct GriffithParams {
    int d;
    Int a;
    Int r;
    Int s;
    auto operator<=>(const GriffithParams&) const = default;
};

struct GriffithInfo {
    GriffithClass cls = GriffithClass::None;
    std::optional<GriffithParams> params;
};

// Type of a restricted weight (both coordinates in [0, p-1]).
RestrictedType restricted_type(const Weight& mu0, Int p);

// mu = mu0 + p * mu1 with mu0 restricted.
std::pair<Weight, Weight> weight_digits(const Weight& mu, Int p);

// Membership tests for weights (m, -n-2) with m, n >= 1 (either orientation
// handled by griffith_info).
bool in_gr(Int m, Int n, Int p);
bool in_gr_hat(Int m, Int n, Int p);
bool in_gr_bar(Int m, Int n, Int p);
GriffithInfo griffith_info(const Weight& mu, Int p);

// Degree of a weight; nullopt is -infinity.
std::optional<int> weight_degree(const Weight& mu, Int p);

struct WeightProfile {
    Region region;
    RestrictedType restricted;
    std::optional<int> degree;
    GriffithInfo griffith;
    Weight mu0;
    Weight mu1;
};

Region region_of(const Weight& mu);
WeightProfile classify(const Weight& mu, Int p);

} // namespace sl3coh
