#pragma once

// Reference computations that share no code with the library: weight
// multiplicities from Gelfand-Tsetlin patterns, the Euler character from an
// explicit orbit search, and region membership straight from the inequalities.

#include <cstdint>
#include <map>
#include <utility>

namespace oracle {

using I = std::int64_t;
using Char = std::map<std::pair<I, I>, I>;

inline void add(Char& c, std::pair<I, I> w, I m) {
    if ((c[w] += m) == 0) c.erase(w);
}

// Weights of the Weyl module V(a,b): GT patterns with top row (a+b, b, 0).
inline Char gt_char(I a, I b) {
    Char c;
    if (a < 0 || b < 0) return c;
    I t1 = a + b, t2 = b, t3 = 0;
    for (I x1 = t2; x1 <= t1; ++x1)
        for (I x2 = t3; x2 <= t2; ++x2)
            for (I y = x2; y <= x1; ++y) {
                I e1 = y, e2 = x1 + x2 - y, e3 = t1 + t2 + t3 - x1 - x2;
                add(c, {e1 - e2, e2 - e3}, 1);
            }
    return c;
}

// Euler character: reflect mu + rho into the dominant chamber by simple
// reflections, tracking the sign.
inline Char chi(I x, I y) {
    I u = x + 1, v = y + 1;
    int sign = 1;
    for (int step = 0; step < 6; ++step) {
        if (u == 0 || v == 0 || u + v == 0) return {};
        if (u < 0) {
            v = u + v;
            u = -u;
            sign = -sign;
        } else if (v < 0) {
            u = u + v;
            v = -v;
            sign = -sign;
        } else {
            break;
        }
    }
    Char c = gt_char(u - 1, v - 1);
    if (sign < 0)
        for (auto& [w, m] : c) m = -m;
    return c;
}

// Signed dimension of chi(x, y) from the Weyl dimension formula.
inline I chi_dim(I x, I y) {
    I u = x + 1, v = y + 1;
    // product over positive roots of <mu + rho, coroot> / <rho, coroot>
    return u * v * (u + v) / 2;
}

inline Char scaled(const Char& c, I k) {
    Char out;
    for (const auto& [w, m] : c) add(out, {w.first * k, w.second * k}, m);
    return out;
}

inline Char product(const Char& f, const Char& g) {
    Char out;
    for (const auto& [w1, m1] : f)
        for (const auto& [w2, m2] : g) add(out, {w1.first + w2.first, w1.second + w2.second}, m1 * m2);
    return out;
}

inline Char sum(const Char& f, const Char& g, I k = 1) {
    Char out = f;
    for (const auto& [w, m] : g) add(out, w, k * m);
    return out;
}

inline I dim(const Char& c) {
    I d = 0;
    for (const auto& [w, m] : c) d += m;
    return d;
}

inline I power(I p, int d) {
    I r = 1;
    while (d-- > 0) r *= p;
    return r;
}

// (m, -n-2) with ap^d <= m, n <= (a+1)p^d - 2 for some d >= 0, 1 <= a <= p-1.
inline bool in_gr(I m, I n, I p) {
    for (int d = 0; power(p, d) <= m + 1; ++d)
        for (I a = 1; a < p; ++a) {
            I lo = a * power(p, d), hi = (a + 1) * power(p, d) - 2;
            if (lo <= m && m <= hi && lo <= n && n <= hi) return true;
        }
    return false;
}

} // namespace oracle
