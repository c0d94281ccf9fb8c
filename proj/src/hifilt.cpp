#include "sl3coh/hifilt.hpp"

#include "sl3coh/errors.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace sl3coh {

std::string to_string(ERule r) {
    switch (r) {
    case ERule::LineBundle: return "line_bundle";
    case ERule::EdgeVanish: return "edge_vanishing";
    case ERule::Coprime: return "coprime";
    case ERule::DegreeSplit: return "degree_split";
    case ERule::H2Vanish: return "h2_vanishing";
    case ERule::ValuationSplit: return "valuation_split";
    case ERule::Recursion: return "recursion";
    }
    return "?";
}

std::string to_string(Annotation a) {
    switch (a) {
    case Annotation::Plain: return "plain";
    case Annotation::Effaced: return "effaced";
    case Annotation::PartialQuotient: return "partial";
    }
    return "?";
}

namespace {

Character twisted_column(Int k, int d, Int p) {
    if (k < 0) return {};
    return twist(simple_char({0, k}, p), d, p);
}

// ---- parameter families, one orientation ----

// nu = (x, -y-2) with x = a p^d and y <= x - 1 (alpha), or y + 2 = a p^d and
// x >= y + 1 (beta).
bool vanishing_oriented(Delta d, const Weight& nu, Int p) {
    if (d == Delta::alpha) return is_single_digit_power(nu.a, p) && nu.b >= -nu.a - 1;
    if (d == Delta::beta) return is_single_digit_power(-nu.b, p) && nu.a >= -nu.b - 1;
    return false;
}

bool valuation_oriented(Delta d, const Weight& nu, Int p) {
    Int m = nu.a, n = -nu.b - 2;
    if (!(m > n && n >= 0)) return false;
    Int x = d == Delta::alpha ? m : n + 2;
    int k = valuation(x, p);
    if (k < 1) return false;
    return m - n >= ipow(p, k);
}

struct Window {
    int d;
    Int a;
};

std::optional<Window> window_oriented(Delta d, const Weight& nu, Int p) {
    Int m = nu.a, n = -nu.b - 2;
    if (d == Delta::alpha) {
        if (n < 1) return std::nullopt;
        auto ls = leading_split(n, p);
        Int pd = ipow(p, ls.d);
        Int r = m - ls.a * pd;
        if (r < 1 || r > pd) return std::nullopt;
        return Window{ls.d, ls.a};
    }
    if (d == Delta::beta) {
        if (n + 2 < 1) return std::nullopt;
        auto ls = leading_split(n + 2, p);
        Int pd = ipow(p, ls.d);
        Int r = m - ls.a * pd;
        if (r < -1 || r > pd - 2) return std::nullopt;
        return Window{ls.d, ls.a};
    }
    return std::nullopt;
}

// ---- memo ----

struct EKey {
    Delta d;
    Weight nu;
    auto operator<=>(const EKey&) const = default;
};

class ECache {
public:
    bool find(const EKey& k, ECohomology& out) {
        std::shared_lock lock(mu_);
        auto it = map_.find(k);
        if (it == map_.end()) return false;
        out = it->second;
        return true;
    }
    ECohomology insert(const EKey& k, ECohomology v) {
        std::unique_lock lock(mu_);
        return map_.emplace(k, std::move(v)).first->second;
    }

private:
    std::shared_mutex mu_;
    std::map<EKey, ECohomology> map_;
};

ECache& ecache_for(Int p) {
    static std::mutex mu;
    static std::map<Int, std::unique_ptr<ECache>> caches;
    std::lock_guard lock(mu);
    auto& slot = caches[p];
    if (!slot) slot = std::make_unique<ECache>();
    return *slot;
}

// Three-step recursion for H^2(E_d(nu)) inside the window.
Character h2_recursion(Delta d, const Weight& nu, const Window& w, Int p) {
    Int pd = ipow(p, w.d);
    Int a = w.a;
    Character out = twisted_column(a - 1, w.d, p) *
                    e_coh_char(3, {d, nu + Weight{-a - 1, a}.scaled(pd)}, p);
    out += twisted_column(a, w.d, p) * e_coh_char(2, {d, nu + Weight{-a, a}.scaled(pd)}, p);
    if (a >= 2)
        out += twisted_column(a - 2, w.d, p) * e_coh_char(2, {d, nu + Weight{-a - 1, a + 1}.scaled(pd)}, p);
    return out;
}

std::array<Character, 3> les_images(const std::array<Character, 4>& L, const std::array<Character, 4>& S,
                                    const std::array<Character, 4>& H) {
    Character c0 = S[0] + L[0] - H[0];
    Character c2 = S[3] + L[3] - H[3];
    Character c1 = S[2] + L[2] - c2 - H[2];
    return {c0, c1, c2};
}

void require_consistent(const EDescriptor& e, const ECohomology& out, const std::array<Character, 4>& L,
                        const std::array<Character, 4>& S) {
    bool ok = true;
    for (const auto& c : out.h) ok = ok && c.is_genuine();
    for (int k = 0; k < 3; ++k) {
        const auto& c = out.images[k];
        ok = ok && c.is_genuine() && c.leq(L[k]) && c.leq(S[k + 1]);
    }
    if (!ok) throw DomainError("internal: inconsistent long exact sequence for " + to_string(e));
}

ECohomology compute_e(const EDescriptor& e, Int p) {
    ECohomology out;
    if (e.delta == Delta::zero) {
        out.h = coh_all(e.nu, p);
        out.rule = ERule::LineBundle;
        return out;
    }
    Weight socle = e.nu - delta_weight(e.delta);
    auto L = coh_all(e.nu, p);
    auto S = coh_all(socle, p);
    auto finish = [&](ERule rule) {
        out.rule = rule;
        out.images = les_images(L, S, out.h);
        require_consistent(e, out, L, S);
        return out;
    };
    auto split = [&](ERule rule) {
        for (int k = 0; k < 4; ++k) out.h[k] = L[k] + S[k];
        return finish(rule);
    };

    if ((e.delta == Delta::alpha && e.nu.a == 0) || (e.delta == Delta::beta && e.nu.b == 0)) {
        return finish(ERule::EdgeVanish); // all cohomology vanishes
    }
    Int pr = e.delta == Delta::alpha ? e.nu.a : e.nu.b;
    if (pr % p != 0) return split(ERule::Coprime);

    bool free0 = L[0].empty() || S[1].empty();
    bool free1 = L[1].empty() || S[2].empty();
    bool free2 = L[2].empty() || S[3].empty();
    if (free0 && free1 && free2) return split(ERule::DegreeSplit);
    if (!free0 || !free2)
        throw OutsideSupportedFamily("E cohomology of " + to_string(e) + " has an undetermined outer boundary map");

    Character h2;
    ERule rule;
    if (e_h2_vanishing_family(e.delta, e.nu, p)) {
        rule = ERule::H2Vanish;
    } else if (boundary_vanishing_family(e.delta, e.nu, p)) {
        return split(ERule::ValuationSplit);
    } else if (auto w = window_oriented(e.delta, e.nu, p)) {
        h2 = h2_recursion(e.delta, e.nu, *w, p);
        rule = ERule::Recursion;
    } else if (auto wt = window_oriented(transpose_delta(e.delta), e.nu.transposed(), p)) {
        h2 = transpose(h2_recursion(transpose_delta(e.delta), e.nu.transposed(), *wt, p));
        rule = ERule::Recursion;
    } else {
        throw OutsideSupportedFamily("no rule determines H^2 of " + to_string(e) + " at p=" + std::to_string(p));
    }
    Character c1 = S[2] + L[2] - h2;
    out.h[0] = L[0] + S[0];
    out.h[1] = S[1] + L[1] - c1;
    out.h[2] = h2;
    out.h[3] = L[3] + S[3];
    return finish(rule);
}

} // namespace

bool e_h2_vanishing_family(Delta d, const Weight& nu, Int p) {
    return vanishing_oriented(d, nu, p) || vanishing_oriented(transpose_delta(d), nu.transposed(), p);
}

bool boundary_vanishing_family(Delta d, const Weight& nu, Int p) {
    if (d == Delta::zero) return false;
    return valuation_oriented(d, nu, p) || valuation_oriented(transpose_delta(d), nu.transposed(), p);
}

std::optional<Character> e_h2_by_recursion(Delta d, const Weight& nu, Int p) {
    require_prime(p);
    if (d == Delta::zero) return std::nullopt;
    if (auto w = window_oriented(d, nu, p)) return h2_recursion(d, nu, *w, p);
    if (auto wt = window_oriented(transpose_delta(d), nu.transposed(), p))
        return transpose(h2_recursion(transpose_delta(d), nu.transposed(), *wt, p));
    return std::nullopt;
}

bool e_recursion_window(Delta d, const Weight& nu, Int p) {
    if (d == Delta::zero) return false;
    return window_oriented(d, nu, p).has_value() ||
           window_oriented(transpose_delta(d), nu.transposed(), p).has_value();
}

ECohomology e_cohomology(const EDescriptor& e, Int p) {
    require_prime(p);
    auto& cache = ecache_for(p);
    EKey key{e.delta, e.nu};
    ECohomology out;
    if (cache.find(key, out)) return out;
    return cache.insert(key, compute_e(e, p));
}

Character e_coh_char(int i, const EDescriptor& e, Int p) {
    if (i < 0 || i > 3) throw DomainError("cohomology degree must be in 0..3");
    return e_cohomology(e, p).h[i];
}

BoundaryImage i_delta_char(Delta delta, const Weight& mu, Int p) {
    require_prime(p);
    if (delta == Delta::zero) throw DomainError("boundary image needs delta = alpha or beta");
    Int m = mu.a, n = -mu.b - 2;
    if (!(m > n && n >= 0))
        throw DomainError("boundary image needs mu = (m, -n-2) with m > n >= 0, got " + to_string(mu));
    BoundaryImage out{delta, mu, {}};
    Int pr = delta == Delta::alpha ? m : n + 2;
    if (pr % p != 0) return out;
    if (boundary_vanishing_family(delta, mu, p)) return out;
    if (e_h2_vanishing_family(delta, mu, p)) {
        out.character = coh_char(2, mu - delta_weight(delta), p);
        return out;
    }
    out.character = e_cohomology({delta, mu}, p).images[1];
    return out;
}

std::vector<HLayer> p_hi_d_filtration(int j, const Weight& mu, Int p) {
    require_prime(p);
    if (j < 0 || j > 3) throw DomainError("cohomology degree must be in 0..3");
    if (j == 0 && !mu.dominant()) throw DomainError("degree 0 filtration needs a dominant weight");
    if (j == 3 && !w0_dot(mu).dominant()) throw DomainError("degree 3 filtration needs an antidominant weight");
    if (j == 1 || j == 2) {
        // H^j(m,-n-2) with m < n has the character of H^{3-j}(n,-m-2); the
        // (-n-2, m) orientation is the transpose of (m, -n-2)
        if (mu.a <= -2 && mu.b >= 0) {
            auto layers = p_hi_d_filtration(j, mu.transposed(), p);
            for (auto& h : layers) {
                h.nu0 = h.nu0.transposed();
                h.e = {transpose_delta(h.e.delta), h.e.nu.transposed()};
                h.resolved = transpose(h.resolved);
            }
            return layers;
        }
        if (mu.a >= 0 && mu.b <= -2 && mu.a < -mu.b - 2) return p_hi_d_filtration(3 - j, w0_dot(mu), p);
    }
    std::vector<HLayer> out;
    for (const auto& dl : d_filtration(mu, p)) {
        HLayer h;
        h.nu0 = dl.nu0;
        h.e = dl.e;
        h.j = j;
        h.resolved = simple_char(dl.nu0, p) * twist(e_coh_char(j, dl.e, p), 1, p);
        out.push_back(std::move(h));
    }
    return out;
}

std::vector<HLayer> jantzen_p_filtration(const Weight& lambda, Int p) {
    require_prime(p);
    if (!lambda.dominant()) throw DomainError("Jantzen filtration needs a dominant weight, got " + to_string(lambda));
    auto [l0, l1] = weight_digits(lambda, p);
    bool nabla = restricted_type(l0, p) == RestrictedType::Nabla;
    std::vector<HLayer> out;
    auto emit = [&](const DLayer& dl, const Weight& nu1, bool head) {
        HLayer h;
        h.nu0 = dl.nu0;
        h.e = {Delta::zero, nu1};
        h.j = 0;
        Character m = nu1.dominant() ? chi(nu1) : Character{};
        Character layer = simple_char(dl.nu0, p) * twist(m, 1, p);
        bool effaced = nabla && head && !m.empty() &&
                       ((dl.e.delta == Delta::alpha && l1.a == 0) || (dl.e.delta == Delta::beta && l1.b == 0));
        if (effaced) {
            h.annotation = Annotation::Effaced;
            h.suppressed = layer;
        } else {
            h.resolved = layer;
        }
        out.push_back(std::move(h));
    };
    for (const auto& dl : d_filtration(lambda, p)) {
        if (dl.e.delta == Delta::zero) {
            emit(dl, dl.e.nu, false);
        } else {
            emit(dl, dl.e.nu - delta_weight(dl.e.delta), false);
            emit(dl, dl.e.nu, true);
        }
    }
    return out;
}

namespace {

std::vector<std::vector<WallItem>> wall_levels(Int n, Int p) {
    if (n <= p - 1) return {};
    auto ls = leading_split(n, p);
    int d = ls.d;
    Int a = ls.a, r = ls.r;
    Int pd = ipow(p, d);
    auto lower = wall_levels(r, p);
    std::vector<std::vector<WallItem>> upper;
    if (a >= 2 && pd - r - 2 >= 0) upper = wall_levels(pd - r - 2, p);
    std::size_t ell = std::max(lower.size(), upper.size()) + 1;
    std::vector<std::vector<WallItem>> out(ell);
    auto lift = [&](const WallItem& it, Int k, bool flip) {
        // L(0,k)^(d) (x) L(nu)^(t) = L(nu + (0,k) p^{d-t})^(t)
        WallItem x = it;
        if (flip) {
            x.nu = x.nu.transposed();
            x.lambda = x.lambda.transposed();
        }
        x.nu = x.nu + Weight{0, k}.scaled(ipow(p, d - x.twist));
        x.character = twist(simple_char(x.nu, p), x.twist, p) * weyl_module_char(x.lambda);
        return x;
    };
    for (std::size_t i = 0; i < lower.size(); ++i)
        for (const auto& it : lower[i]) out[i].push_back(lift(it, a, false));
    for (std::size_t i = 0; i < upper.size(); ++i)
        for (const auto& it : upper[i]) out[i].push_back(lift(it, a - 2, true));
    Weight lambda{r, pd - r - 2};
    if (lambda.dominant()) {
        WallItem top{{0, a - 1}, d, lambda, {}};
        top.character = twist(simple_char(top.nu, p), d, p) * weyl_module_char(lambda);
        out[ell - 1].push_back(top);
    }
    return out;
}

} // namespace

WallFiltration wall_h2_filtration(Int n, Int p) {
    require_prime(p);
    if (n < 1) throw DomainError("wall filtration needs n >= 1");
    WallFiltration out;
    std::vector<Int> digits;
    for (Int x = n; x > 0; x /= p) digits.push_back(x % p);
    int d = static_cast<int>(digits.size()) - 1;
    std::vector<Int> partial(digits.size());
    Int acc = 0;
    for (int k = 0; k <= d; ++k) {
        acc += digits[k] * ipow(p, k);
        partial[k] = acc;
    }
    for (int i = 1; i <= d; ++i) {
        WallLayer l;
        l.level = i;
        Int ri = partial[i], rp = partial[i - 1];
        l.outer = {0, n - ri};
        l.quotient = {rp, ri - 2 * rp - 2};
        l.quotient_char = core_h2(ri, ri, p) - twist(simple_char({0, digits[i]}, p), i, p) * core_h2(rp, rp, p);
        l.character = simple_char(l.outer, p) * l.quotient_char;
        out.layers.push_back(std::move(l));
    }
    out.levels = wall_levels(n, p);
    return out;
}

LayerReport hi_layer_report(int i, const Weight& mu, Int p) {
    require_prime(p);
    if (i != 1 && i != 2) throw DomainError("reports exist for degrees 1 and 2");
    Int m = mu.a, n = -mu.b - 2;
    if (!(m >= n && n >= 0)) throw DomainError("report needs mu = (m, -n-2) with m >= n >= 0");
    if (m < p) throw DomainError("report needs m >= p; below p, H^1(m,-n-2) = H^0(m-n-1, n) and H^2 = 0");
    LayerReport rep;
    rep.degree = i;
    rep.mu = mu;
    auto [mu0, mu1] = weight_digits(mu, p);
    rep.case_tag = to_string(restricted_type(mu0, p));
    auto ls = leading_split(m, p);
    Int apd = ls.a * ipow(p, ls.d);
    rep.R = (m - apd) / p;
    rep.S = floor_div(n - apd, p);

    int index = 0;
    auto entry = [&](const DLayer& dl, const Weight& nu1, const Character& full1, const Character& cut1) {
        ReportLayer r;
        r.index = ++index;
        r.nu0 = dl.nu0;
        r.nu1 = nu1;
        r.nu = dl.nu0 + nu1.scaled(p);
        r.delta = dl.e.delta;
        Character l0 = simple_char(dl.nu0, p);
        r.full = l0 * twist(full1, 1, p);
        r.image = l0 * twist(cut1, 1, p);
        r.character = r.full - r.image;
        if (cut1.empty())
            r.status = Annotation::Plain;
        else if (cut1 == full1)
            r.status = Annotation::Effaced;
        else
            r.status = Annotation::PartialQuotient;
        rep.layers.push_back(std::move(r));
    };
    for (const auto& dl : d_filtration(mu, p)) {
        if (dl.e.delta == Delta::zero) {
            entry(dl, dl.e.nu, coh_char(i, dl.e.nu, p), {});
            continue;
        }
        Weight s = dl.e.nu - delta_weight(dl.e.delta);
        auto ec = e_cohomology(dl.e, p);
        // socle loses the image arriving from degree i-1, head loses the image it sends to degree i+1
        entry(dl, s, coh_char(i, s, p), ec.images[i - 1]);
        entry(dl, dl.e.nu, coh_char(i, dl.e.nu, p), ec.images[i]);
    }
    return rep;
}

} // namespace sl3coh
