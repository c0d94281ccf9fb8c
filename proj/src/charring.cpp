#include "sl3coh/charring.hpp"

#include "sl3coh/errors.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace sl3coh {

Character Character::monomial(const Weight& w, Int mult) {
    Character c;
    if (mult != 0) c.terms_.push_back({w, mult});
    return c;
}

Character Character::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    Character c;
    for (const auto& t : terms) {
        if (!c.terms_.empty() && c.terms_.back().first == t.first)
            c.terms_.back().second = checked_add(c.terms_.back().second, t.second);
        else
            c.terms_.push_back(t);
    }
    std::erase_if(c.terms_, [](const Term& t) { return t.second == 0; });
    return c;
}

Character Character::from_map(const std::map<Weight, Int>& m) {
    Character c;
    for (const auto& [w, k] : m)
        if (k != 0) c.terms_.push_back({w, k});
    return c;
}

Int Character::coeff(const Weight& w) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                               [](const Term& t, const Weight& x) { return t.first < x; });
    return (it != terms_.end() && it->first == w) ? it->second : 0;
}

Int Character::dim() const {
    Int s = 0;
    for (const auto& t : terms_) s = checked_add(s, t.second);
    return s;
}

bool Character::is_genuine() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second > 0; });
}

Int Character::max_multiplicity() const {
    Int m = 0;
    for (const auto& t : terms_) m = std::max(m, t.second);
    return m;
}

bool Character::leq(const Character& o) const { return (o - *this).is_genuine(); }

Character Character::operator+(const Character& o) const {
    Character c;
    c.terms_.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin(), j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
        if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
            c.terms_.push_back(*i++);
        } else if (i == terms_.end() || j->first < i->first) {
            c.terms_.push_back(*j++);
        } else {
            Int k = checked_add(i->second, j->second);
            if (k != 0) c.terms_.push_back({i->first, k});
            ++i;
            ++j;
        }
    }
    return c;
}

Character Character::operator-() const { return scaled(-1); }

Character Character::operator-(const Character& o) const { return *this + (-o); }

Character Character::scaled(Int k) const {
    if (k == 0) return {};
    Character c = *this;
    for (auto& t : c.terms_) t.second = checked_mul(t.second, k);
    return c;
}

Character Character::shifted(const Weight& w) const {
    Character c = *this;
    for (auto& t : c.terms_) t.first = t.first + w;
    return c;
}

Character Character::operator*(const Character& o) const {
    if (empty() || o.empty()) return {};
    if (terms_.size() == 1 && terms_[0].second == 1) return o.shifted(terms_[0].first);
    if (o.terms_.size() == 1 && o.terms_[0].second == 1) return shifted(o.terms_[0].first);

    auto box = [](const std::vector<Term>& ts) {
        Int a0 = ts.front().first.a, a1 = ts.back().first.a;
        Int b0 = ts.front().first.b, b1 = b0;
        for (const auto& t : ts) {
            b0 = std::min(b0, t.first.b);
            b1 = std::max(b1, t.first.b);
        }
        return std::array<Int, 4>{a0, a1, b0, b1};
    };
    auto x = box(terms_), y = box(o.terms_);
    Int a0 = x[0] + y[0], a1 = x[1] + y[1], b0 = x[2] + y[2], b1 = x[3] + y[3];
    Int wa = a1 - a0 + 1, wb = b1 - b0 + 1;

    std::vector<Term> out;
    if (wa * wb <= 4'000'000) {
        // dense accumulation over the bounding box; row-major in (a, b) keeps the output sorted
        std::vector<Int> acc(static_cast<std::size_t>(wa * wb), 0);
        for (const auto& s : terms_)
            for (const auto& t : o.terms_) {
                Int& cell = acc[static_cast<std::size_t>((s.first.a + t.first.a - a0) * wb +
                                                         (s.first.b + t.first.b - b0))];
                cell = checked_add(cell, checked_mul(s.second, t.second));
            }
        Character c;
        for (Int i = 0; i < wa; ++i)
            for (Int j = 0; j < wb; ++j) {
                Int k = acc[static_cast<std::size_t>(i * wb + j)];
                if (k != 0) c.terms_.push_back({{a0 + i, b0 + j}, k});
            }
        return c;
    }
    out.reserve(terms_.size() * o.terms_.size());
    for (const auto& s : terms_)
        for (const auto& t : o.terms_) out.push_back({s.first + t.first, checked_mul(s.second, t.second)});
    return from_terms(std::move(out));
}

Character twist(const Character& f, int d, Int p) {
    Int q = ipow(p, d);
    std::vector<Character::Term> ts;
    ts.reserve(f.size());
    for (const auto& [w, k] : f.terms()) ts.push_back({w.scaled(q), k});
    return Character::from_terms(std::move(ts));
}

Character transpose(const Character& f) {
    std::vector<Character::Term> ts;
    ts.reserve(f.size());
    for (const auto& [w, k] : f.terms()) ts.push_back({w.transposed(), k});
    return Character::from_terms(std::move(ts));
}

Character dual(const Character& f) {
    std::vector<Character::Term> ts;
    ts.reserve(f.size());
    for (const auto& [w, k] : f.terms()) ts.push_back({-w, k});
    return Character::from_terms(std::move(ts));
}

Int kostant_partition(Int x, Int y) {
    if (x < 0 || y < 0) return 0;
    return std::min(x, y) + 1;
}

namespace {

struct WeightHash {
    std::size_t operator()(const Weight& w) const {
        return std::hash<Int>()(w.a * 1'000'003 + w.b);
    }
};

// Memo for dominant Weyl characters; safe for concurrent use.
class ChiCache {
public:
    Character get(const Weight& lambda) {
        {
            std::shared_lock lock(mu_);
            auto it = map_.find(lambda);
            if (it != map_.end()) return it->second;
        }
        Character c = compute(lambda);
        std::unique_lock lock(mu_);
        return map_.emplace(lambda, std::move(c)).first->second;
    }

private:
    static Character compute(const Weight& lambda) {
        // Kostant: m(nu) = sum_w sgn(w) P(w(lambda+rho) - (nu+rho)).
        Weight lr = lambda + kRho;
        std::array<std::pair<Weight, int>, 6> orbit;
        for (int i = 0; i < 6; ++i) orbit[i] = {weyl_group()[i].apply(lr), weyl_group()[i].sign()};
        Int h = lambda.a + lambda.b;
        std::vector<Character::Term> ts;
        for (Int i = 0; i <= h; ++i)
            for (Int j = 0; j <= h; ++j) {
                Weight nu = lambda - kAlpha.scaled(i) - kBeta.scaled(j);
                Weight nr = nu + kRho;
                Int m = 0;
                for (const auto& [x, sg] : orbit) {
                    auto rc = root_coordinates(x - nr);
                    if (rc) m += sg * kostant_partition(rc->first, rc->second);
                }
                if (m != 0) ts.push_back({nu, m});
            }
        return Character::from_terms(std::move(ts));
    }

    std::shared_mutex mu_;
    std::unordered_map<Weight, Character, WeightHash> map_;
};

ChiCache& chi_cache() {
    static ChiCache c;
    return c;
}

} // namespace

Character chi(const Weight& mu) {
    auto df = to_dominant_dot(mu);
    if (df.singular) return {};
    Character c = chi_cache().get(df.lambda);
    return df.sign == 1 ? c : -c;
}

Character weyl_module_char(const Weight& lambda) {
    if (!lambda.dominant()) return {};
    return chi(lambda);
}

Int weyl_dimension(const Weight& lambda) {
    return (lambda.a + 1) * (lambda.b + 1) * (lambda.a + lambda.b + 2) / 2;
}

namespace {

Character restricted_simple(const Weight& l, Int p) {
    if (l.a + l.b <= p - 2) return chi(l);
    return chi(l) - chi(Weight{p - l.b - 2, p - l.a - 2});
}

} // namespace

Character simple_char(const Weight& lambda, Int p) {
    require_prime(p);
    if (!lambda.dominant()) return {};
    Character out = Character::monomial({0, 0});
    Weight rest = lambda;
    int level = 0;
    while (rest.a != 0 || rest.b != 0) {
        Weight digit{rest.a % p, rest.b % p};
        out = out * twist(restricted_simple(digit, p), level, p);
        rest = {rest.a / p, rest.b / p};
        ++level;
    }
    return out;
}

Character zhat_char(const Weight& mu, Int p) {
    require_prime(p);
    Character out = Character::monomial(mu);
    for (Weight delta : {kAlpha, kBeta, kGamma}) {
        std::vector<Character::Term> ts;
        for (Int i = 0; i < p; ++i) ts.push_back({-delta.scaled(i), 1});
        out = out * Character::from_terms(std::move(ts));
    }
    return out;
}

SimpleDecomposition simple_decompose(const Character& f, Int p) {
    require_prime(p);
    SimpleDecomposition out;
    Character rest = f;
    while (!rest.empty()) {
        // height a+b is strictly monotone along the order, so its argmax is maximal
        const auto* top = &rest.terms().front();
        for (const auto& t : rest.terms())
            if (t.first.a + t.first.b > top->first.a + top->first.b) top = &t;
        Weight lambda = top->first;
        Int k = top->second;
        if (k < 0)
            throw NotAModuleCharacter("negative multiplicity at maximal weight " + to_string(lambda));
        if (!lambda.dominant())
            throw NotAModuleCharacter("maximal weight " + to_string(lambda) + " is not dominant");
        out.parts.push_back({lambda, k});
        rest -= simple_char(lambda, p).scaled(k);
    }
    std::sort(out.parts.begin(), out.parts.end());
    return out;
}

Int simple_multiplicity(const SimpleDecomposition& d, const Weight& lambda) {
    for (const auto& [w, k] : d.parts)
        if (w == lambda) return k;
    return 0;
}

} // namespace sl3coh
