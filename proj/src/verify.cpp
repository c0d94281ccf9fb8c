#include "sl3coh/verify.hpp"

#include "sl3coh/errors.hpp"
#include "sl3coh/hifilt.hpp"

#include <functional>
#include <sstream>

namespace sl3coh {

namespace {

struct Fail {
    std::string what;
};

std::string at(const Weight& mu, Int p, const std::string& identity) {
    std::ostringstream os;
    os << "mu=" << mu << " p=" << p << ": " << identity;
    return os.str();
}

void expect(bool cond, const Weight& mu, Int p, const std::string& identity) {
    if (!cond) throw Fail{at(mu, p, identity)};
}

using Body = std::function<long(Int p, Int box)>;

long euler(Int p, Int box) {
    long n = 0;
    for (Int x = -box; x <= box; ++x)
        for (Int y = -box; y <= box; ++y, ++n) {
            auto h = coh_all({x, y}, p);
            expect(h[0] - h[1] + h[2] - h[3] == chi({x, y}), {x, y}, p, "sum (-1)^i H^i = chi");
        }
    return n;
}

long duality(Int p, Int box) {
    long n = 0;
    for (Int x = -box; x <= box; ++x)
        for (Int y = -box; y <= box; ++y, ++n) {
            Weight mu{x, y};
            for (int i = 0; i < 4; ++i) {
                Character h = coh_char(i, mu, p);
                expect(h == coh_char(3 - i, w0_dot(mu), p), mu, p, "H^i(mu) = H^{3-i}(w0.mu)");
                expect(h == dual(coh_char(3 - i, Weight{-2, -2} - mu, p)), mu, p, "H^i(mu) = H^{3-i}(-2rho-mu)^*");
                expect(coh_char(i, mu.transposed(), p) == transpose(h), mu, p, "transpose symmetry");
            }
        }
    return n;
}

long griffith(Int p, Int box) {
    long n = 0;
    for (Int m = 0; m <= box; ++m)
        for (Int k = 0; k <= box; ++k, ++n) {
            Weight mu{m, -k - 2};
            bool both = !coh_char(1, mu, p).empty() && !coh_char(2, mu, p).empty();
            expect(both == in_gr(m, k, p), mu, p, "H^1 and H^2 both nonzero iff mu in Gr");
        }
    return n;
}

long degree1(Int p, Int) {
    long n = 0;
    for (Int a = 1; a <= p - 1; ++a)
        for (Int r = 0; r <= p - 1; ++r)
            for (Int s = 0; s <= r; ++s) {
                Weight mu{a * p + r, -a * p - s - 2};
                auto t = restricted_type(weight_digits(mu, p).first, p);
                if (t != RestrictedType::Delta && t != RestrictedType::GammaSing) continue;
                ++n;
                expect(core_h2(a * p + r, a * p + s, p) == simple_char({s, a * p - r - 2}, p),
                       mu, p, "H^2 = L(s, ap-r-2)");
            }
    return n;
}

long named(Int p, Int) {
    if (p != 3) return 0;
    expect(coh_char(2, {4, -6}, 3) == chi({1, 0}), {4, -6}, 3, "H^2 = chi(1,0)");
    expect(coh_char(1, {4, -6}, 3) == chi({1, 0}), {4, -6}, 3, "H^1 = chi(1,0)");
    expect(coh_char(2, {7, -8}, 3) == simple_char({0, 3}, 3), {7, -8}, 3, "H^2 = L(0,3)");
    expect(i_delta_char(Delta::alpha, {15, -12}, 3).character.empty(), {15, -12}, 3, "I_alpha = 0");
    expect(i_delta_char(Delta::alpha, {6, -6}, 3).character == Character::monomial({0, 0}), {6, -6}, 3,
           "I_alpha = e^0");
    return 5;
}

long dfilt(Int p, Int box) {
    long n = 0;
    for (Int x = -box; x <= box; ++x)
        for (Int y = -box; y <= box; ++y, ++n) {
            Weight mu{x, y};
            auto layers = d_filtration(mu, p);
            Character s;
            for (const auto& l : layers) s += d_layer_char(l, p);
            expect(s == zhat_char(mu, p), mu, p, "sum of layers = Zhat");
            expect(s.dim() == p * p * p, mu, p, "dim Zhat = p^3");
            static const int counts[] = {7, 7, 3, 3, 4, 1};
            auto t = restricted_type(weight_digits(mu, p).first, p);
            expect(layers.size() == static_cast<std::size_t>(counts[static_cast<int>(t)]), mu, p, "layer count");
        }
    return n;
}

long grand(Int p, Int box) {
    long n = 0;
    for (Int m = 0; m <= box; ++m)
        for (Int k = 0; k <= m; ++k)
            for (int j = 1; j <= 2; ++j, ++n) {
                Weight mu{m, -k - 2};
                Character s;
                for (const auto& l : p_hi_d_filtration(j, mu, p)) {
                    expect(l.resolved.is_genuine(), mu, p, "layer genuine");
                    s += l.resolved;
                }
                expect(s == coh_char(j, mu, p), mu, p, "sum of p-H^j-D layers = H^j");
            }
    return n;
}

long jantzen(Int p, Int box) {
    long n = 0;
    for (Int a = 0; a <= box; ++a)
        for (Int b = 0; b <= box; ++b, ++n) {
            Weight l{a, b};
            Character s;
            for (const auto& h : jantzen_p_filtration(l, p)) s += h.resolved;
            expect(s == chi(l), l, p, "sum of Jantzen layers = chi");
        }
    return n;
}

long idelta(Int p, Int box) {
    long n = 0;
    for (Int m = 1; m <= box; ++m)
        for (Int k = 0; k < m; ++k)
            for (Delta d : {Delta::alpha, Delta::beta}) {
                ++n;
                Weight mu{m, -k - 2};
                Character img = i_delta_char(d, mu, p).character;
                Character target = coh_char(2, mu - delta_weight(d), p);
                expect(img.is_genuine() && img.max_multiplicity() <= 1, mu, p, "I_delta multiplicity free");
                expect(img.leq(target), mu, p, "I_delta inside H^2(mu - delta)");
                auto di = simple_decompose(img, p), dt = simple_decompose(target, p);
                for (const auto& [lambda, k2] : di.parts)
                    expect(simple_multiplicity(dt, lambda) == k2, mu, p, "[I : L] = [H^2(mu-delta) : L]");
            }
    return n;
}

long wall(Int p, Int box) {
    long n = 0;
    for (Int k = 1; k <= box; ++k, ++n) {
        Weight mu{k, -k - 2};
        auto wf = wall_h2_filtration(k, p);
        Character h = core_h2(k, k, p), s1, s2;
        for (const auto& l : wf.layers) s1 += l.character;
        std::size_t ell = wf.levels.size();
        for (std::size_t i = 0; i < ell; ++i) {
            expect(wf.levels[i].size() <= (std::size_t{1} << (ell - 1 - i)), mu, p, "q_i <= 2^(l-i)");
            for (const auto& it : wf.levels[i]) s2 += it.character;
        }
        expect(s1 == h, mu, p, "digit layers sum to H^2");
        expect(s2 == h, mu, p, "tilting-style layers sum to H^2");
        if (k <= p - 1) expect(h.empty(), mu, p, "H^2 = 0 below p");
    }
    return n;
}

long genuine(Int p, Int box) {
    long n = 0;
    for (Int x = -box; x <= box; ++x)
        for (Int y = -box; y <= box; ++y, ++n)
            for (int i = 0; i < 4; ++i) {
                Character h = coh_char(i, {x, y}, p);
                expect(h.is_genuine(), {x, y}, p, "H^i genuine");
                simple_decompose(h, p);
            }
    return n;
}

long report(Int p, Int box) {
    long n = 0;
    for (Int m = p; m <= box; ++m)
        for (Int k = 0; k <= m; ++k)
            for (int i = 1; i <= 2; ++i, ++n) {
                Weight mu{m, -k - 2};
                Character s;
                for (const auto& l : hi_layer_report(i, mu, p).layers) s += l.character;
                expect(s == coh_char(i, mu, p), mu, p, "report layers sum to H^i");
            }
    return n;
}

struct Entry {
    SuiteInfo info;
    Body body;
    std::function<Int(Int)> box_for; // default extent per prime
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> r = {
        {{"euler", "sum_i (-1)^i ch H^i(mu) = chi(mu)", 60, {2, 3, 5}}, euler, [](Int) { return 60; }},
        {{"duality", "contravariant, Serre and transpose dualities", 60, {2, 3, 5}}, duality, [](Int) { return 60; }},
        {{"griffith", "H^1, H^2 both nonzero iff mu in Gr", 100, {2, 3, 5}}, griffith, [](Int) { return 100; }},
        {{"degree1", "degree-one closed form H^2 = L(s, ap-r-2)", 0, {3, 5}}, degree1, [](Int) { return 0; }},
        {{"named", "named values at p = 3", 0, {3}}, named, [](Int) { return 0; }},
        {{"dfilt", "D-filtration layers sum to ch Zhat(mu)", 20, {2, 3, 5}}, dfilt, [](Int) { return 20; }},
        {{"grand", "p-H^j-D-filtration layers sum to ch H^j(mu), m <= box", 0, {2, 3, 5}}, grand,
         [](Int p) { return p * p + p; }},
        {{"jantzen", "Jantzen p-filtration layers sum to chi(lambda)", 0, {3, 5}}, jantzen,
         [](Int p) { return p * p; }},
        {{"idelta", "boundary images: multiplicity free, contained, same simple multiplicities", 80, {2, 3}}, idelta,
         [](Int) { return 80; }},
        {{"wall", "wall filtrations sum to H^2(n, -n-2)", 0, {2, 3, 5}}, wall, [](Int p) { return p * p * p; }},
        {{"genuine", "cohomology characters are module characters", 30, {2, 3, 5}}, genuine,
         [](Int) { return 30; }},
        {{"report", "structure report layers sum to H^i(mu)", 0, {2, 3, 5}}, report,
         [](Int p) { return p * p + p; }},
    };
    return r;
}

} // namespace

const std::vector<SuiteInfo>& suites() {
    static const std::vector<SuiteInfo> s = [] {
        std::vector<SuiteInfo> out;
        for (const auto& e : registry()) out.push_back(e.info);
        return out;
    }();
    return s;
}

const SuiteInfo* find_suite(const std::string& name) {
    for (const auto& s : suites())
        if (s.name == name) return &s;
    return nullptr;
}

SuiteResult run_suite(const std::string& name, Int p, std::optional<Int> box) {
    require_prime(p);
    for (const auto& e : registry()) {
        if (e.info.name != name) continue;
        SuiteResult res{name, p, true, 0, {}};
        try {
            res.checked = e.body(p, box ? *box : e.box_for(p));
        } catch (const Fail& f) {
            res.ok = false;
            res.counterexample = f.what;
        } catch (const Error& err) {
            res.ok = false;
            res.counterexample = err.name() + ": " + err.what();
        }
        return res;
    }
    throw DomainError("unknown suite " + name);
}

} // namespace sl3coh
