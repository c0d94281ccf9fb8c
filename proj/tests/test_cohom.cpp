#include "sl3coh/cohom.hpp"
#include "sl3coh/errors.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace sl3coh;

TEST_CASE("named cohomology values") {
    CHECK(coh_char(2, {4, -6}, 3) == chi({1, 0}));
    CHECK(coh_char(2, {4, -6}, 3).dim() == 3);
    CHECK(coh_char(1, {4, -6}, 3) == chi({1, 0}));
    auto l03 = Character::from_terms({{{0, 3}, 1}, {{3, -3}, 1}, {{-3, 0}, 1}});
    CHECK(coh_char(2, {7, -8}, 3) == l03);
    CHECK(core_h2(4, 4, 3) == chi({1, 0}));
    CHECK(core_h2(5, 3, 3).empty());
    for (Int p : {2, 3, 5})
        for (Int m = 0; m < 40; ++m) CHECK(core_h2(m, 0, p).empty());
}

TEST_CASE("small weights follow Borel-Weil-Bott") {
    for (Int p : {2, 3, 5, 7})
        for (Int m = 0; m < p; ++m)
            for (Int n = 0; n <= m; ++n) {
                CHECK(as_map(coh_char(1, {m, -n - 2}, p)) == oracle::chi(m - n - 1, n));
                CHECK(coh_char(2, {m, -n - 2}, p).empty());
            }
}

TEST_CASE("singular columns vanish") {
    for (Int p : {2, 3})
        for (Int y = -20; y <= 20; ++y)
            for (int i = 0; i < 4; ++i) {
                CHECK(coh_char(i, {-1, y}, p).empty());
                CHECK(coh_char(i, {y, -1}, p).empty());
            }
}

TEST_CASE("dominant and antidominant weights") {
    for (Int a = 0; a < 10; ++a)
        for (Int b = 0; b < 10; ++b) {
            CHECK(as_map(coh_char(0, {a, b}, 5)) == oracle::gt_char(a, b));
            CHECK(coh_char(1, {a, b}, 5).empty());
            CHECK(as_map(coh_char(3, w0_dot({a, b}), 5)) == oracle::gt_char(a, b));
            CHECK(coh_char(0, w0_dot({a, b}), 5).empty());
        }
}

TEST_CASE("Euler identity against the orbit oracle") {
    for (Int p : {2, 3, 5})
        for (Int x = -30; x <= 30; ++x)
            for (Int y = -30; y <= 30; ++y) {
                auto h = coh_all({x, y}, p);
                auto e = oracle::sum(oracle::sum(as_map(h[0]), as_map(h[1]), -1), oracle::sum(as_map(h[2]), as_map(h[3]), -1));
                CHECK(e == oracle::chi(x, y));
            }
}

TEST_CASE("dualities and genuineness") {
    for (Int p : {2, 3, 5})
        for (Int x = -25; x <= 25; ++x)
            for (Int y = -25; y <= 25; ++y)
                for (int i = 0; i < 4; ++i) {
                    auto h = coh_char(i, {x, y}, p);
                    CHECK(h.is_genuine());
                    CHECK(h == coh_char(3 - i, {-y - 2, -x - 2}, p));
                    CHECK(h == dual(coh_char(3 - i, {-2 - x, -2 - y}, p)));
                    CHECK(transpose(h) == coh_char(i, {y, x}, p));
                }
}

TEST_CASE("wall self-duality") {
    for (Int p : {2, 3, 5})
        for (Int n = 0; n <= 60; ++n) CHECK(coh_char(1, {n, -n - 2}, p) == coh_char(2, {n, -n - 2}, p));
}

TEST_CASE("both middle degrees are nonzero exactly on Gr") {
    for (Int p : {2, 3, 5})
        for (Int m = 0; m <= 60; ++m)
            for (Int n = 0; n <= 60; ++n) {
                bool both = !coh_char(1, {m, -n - 2}, p).empty() && !coh_char(2, {m, -n - 2}, p).empty();
                CHECK(both == oracle::in_gr(m, n, p));
            }
}

TEST_CASE("degree-one closed form") {
    for (Int p : {3, 5})
        for (Int a = 1; a < p; ++a)
            for (Int r = 0; r < p; ++r)
                for (Int s = 0; s <= r; ++s) {
                    Weight mu{a * p + r, -a * p - s - 2};
                    auto t = restricted_type(weight_digits(mu, p).first, p);
                    if (t != RestrictedType::Delta && t != RestrictedType::GammaSing) continue;
                    // L(s, ap-r-2) = L(s, p-r-2) (x) L(0, a-1)^(1), both factors in the lowest alcove
                    auto lower = oracle::gt_char(s, p - r - 2);
                    auto upper = oracle::scaled(oracle::gt_char(0, a - 1), p);
                    CHECK(as_map(core_h2(a * p + r, a * p + s, p)) == oracle::product(lower, upper));
                }
}

TEST_CASE("core arguments are checked") {
    CHECK_THROWS_AS(core_h2(2, 3, 3), DomainError);
    CHECK_THROWS_AS(core_h1(2, -1, 3), DomainError);
    CHECK_THROWS_AS(coh_char(4, {0, 0}, 3), DomainError);
    CHECK_THROWS_AS(coh_char(1, {0, 0}, 9), InvalidPrime);
}

TEST_CASE("cache persistence") {
    std::string path = "sl3coh_cache_test.jsonl";
    std::remove(path.c_str());
    auto before = coh_char(2, {40, -31}, 7);
    cache_save(path, 7);
    CHECK(cache_size(7) > 0);
    cache_load(path, 7);
    CHECK(coh_char(2, {40, -31}, 7) == before);
    CHECK_THROWS_AS(cache_load(path, 5), DomainError);
    {
        std::ofstream out(path, std::ios::trunc);
        out << R"({"version":2,"p":7})" << '\n';
    }
    CHECK_THROWS_AS(cache_load(path, 7), DomainError);
    {
        std::ofstream out(path, std::ios::trunc);
        out << R"({"version":1,"p":7})" << '\n' << "{not json" << '\n';
    }
    CHECK_THROWS_AS(cache_load(path, 7), DomainError);
    cache_load("no_such_cache_file.jsonl", 7);
    std::remove(path.c_str());
}
