#include "sl3coh/cohom.hpp"

#include "sl3coh/errors.hpp"
#include "sl3coh/serialize.hpp"

#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include <json.hpp>

namespace sl3coh {

namespace {

struct CoreEntry {
    Character h1;
    Character h2;
};

class CoreCache {
public:
    bool find(Int m, Int n, CoreEntry& out) {
        std::shared_lock lock(mu_);
        auto it = map_.find({m, n});
        if (it == map_.end()) return false;
        out = it->second;
        return true;
    }
    // First writer wins; racing writers carry identical values.
    CoreEntry insert(Int m, Int n, CoreEntry e) {
        std::unique_lock lock(mu_);
        return map_.emplace(std::make_pair(m, n), std::move(e)).first->second;
    }
    std::map<std::pair<Int, Int>, CoreEntry> snapshot() {
        std::shared_lock lock(mu_);
        return map_;
    }
    std::size_t size() {
        std::shared_lock lock(mu_);
        return map_.size();
    }

private:
    std::shared_mutex mu_;
    std::map<std::pair<Int, Int>, CoreEntry> map_;
};

CoreCache& cache_for(Int p) {
    static std::mutex mu;
    static std::map<Int, std::unique_ptr<CoreCache>> caches;
    std::lock_guard lock(mu);
    auto& slot = caches[p];
    if (!slot) slot = std::make_unique<CoreCache>();
    return *slot;
}

// L(0, k) twisted by d; zero for k < 0.
Character twisted_column(Int k, int d, Int p) {
    if (k < 0) return {};
    return twist(simple_char({0, k}, p), d, p);
}

CoreEntry core_entry(Int m, Int n, Int p);

Character h2_general(const Weight& mu, Int p) { return coh_char(2, mu, p); }

Character core_h2_compute(Int m, Int n, Int p) {
    if (n == 0) return {};
    if (m <= p - 1) return {};
    if (!in_gr_hat(m, n, p)) return {};
    auto ls = leading_split(m, p);
    int d = ls.d;
    Int a = ls.a;
    Int pd = ipow(p, d);
    Int r = m - a * pd, s = n - a * pd;

    Character top = twisted_column(a - 1, d, p) * chi({s, pd - r - 2});
    Character mid = twisted_column(a, d, p) * h2_general({r, -s - 2}, p);
    Character low;
    if (a >= 2) low = twisted_column(a - 2, d, p) * h2_general({r - pd, pd - s - 2}, p);
    return top + mid + low;
}

CoreEntry core_entry(Int m, Int n, Int p) {
    auto& cache = cache_for(p);
    CoreEntry e;
    if (cache.find(m, n, e)) return e;
    e.h2 = core_h2_compute(m, n, p);
    e.h1 = e.h2 - chi({m, -n - 2});
    if (!e.h1.is_genuine() && !e.h1.empty())
        throw DomainError("internal: H^1 of " + to_string(Weight{m, -n - 2}) + " is not genuine");
    return cache.insert(m, n, std::move(e));
}

void check_core_args(Int m, Int n) {
    if (n < 0 || m < n)
        throw DomainError("core instance needs m >= n >= 0, got m=" + std::to_string(m) +
                          " n=" + std::to_string(n));
}

} // namespace

Character core_h2(Int m, Int n, Int p) {
    require_prime(p);
    check_core_args(m, n);
    return core_entry(m, n, p).h2;
}

Character core_h1(Int m, Int n, Int p) {
    require_prime(p);
    check_core_args(m, n);
    return core_entry(m, n, p).h1;
}

Character coh_char(int i, const Weight& mu, Int p) {
    require_prime(p);
    if (i < 0 || i > 3) throw DomainError("cohomology degree must be in 0..3");
    // orthogonal to a simple coroot: zero in every characteristic; the gamma
    // wall (m, -m-2) is not, and carries H^1 = H^2 in characteristic p
    if (mu.a == -1 || mu.b == -1) return {};
    if (mu.dominant()) return i == 0 ? chi(mu) : Character{};
    Weight w = w0_dot(mu);
    if (w.dominant()) return i == 3 ? chi(w) : Character{};
    if (mu.a >= 0) {
        Int m = mu.a, n = -mu.b - 2;
        if (m >= n) {
            if (i == 1) return core_entry(m, n, p).h1;
            if (i == 2) return core_entry(m, n, p).h2;
            return {};
        }
        return coh_char(3 - i, w, p);
    }
    return transpose(coh_char(i, mu.transposed(), p));
}

std::array<Character, 4> coh_all(const Weight& mu, Int p) {
    return {coh_char(0, mu, p), coh_char(1, mu, p), coh_char(2, mu, p), coh_char(3, mu, p)};
}

std::size_t cache_size(Int p) { return cache_for(p).size(); }

void cache_load(const std::string& path, Int p) {
    require_prime(p);
    std::ifstream in(path);
    if (!in) return; // nothing persisted yet
    std::string line;
    if (!std::getline(in, line)) return;
    nlohmann::json header;
    try {
        header = nlohmann::json::parse(line);
    } catch (const std::exception& e) {
        throw DomainError("cache header unreadable: " + std::string(e.what()));
    }
    if (header.value("version", -1) != 1) throw DomainError("cache version mismatch in " + path);
    if (header.value("p", Int{-1}) != p)
        throw DomainError("cache in " + path + " was written for another prime");
    auto& cache = cache_for(p);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            auto rec = nlohmann::json::parse(line);
            CoreEntry e{character_from_json(rec.at("h1")), character_from_json(rec.at("h2"))};
            cache.insert(rec.at("m").get<Int>(), rec.at("n").get<Int>(), std::move(e));
        } catch (const Error&) {
            throw;
        } catch (const std::exception& e) {
            throw DomainError("malformed cache record: " + std::string(e.what()));
        }
    }
}

void cache_save(const std::string& path, Int p) {
    require_prime(p);
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw DomainError("cannot write cache file " + path);
    nlohmann::ordered_json header;
    header["version"] = 1;
    header["p"] = p;
    out << header.dump() << '\n';
    for (const auto& [key, e] : cache_for(p).snapshot()) {
        nlohmann::ordered_json rec;
        rec["m"] = key.first;
        rec["n"] = key.second;
        rec["h1"] = character_to_json(e.h1);
        rec["h2"] = character_to_json(e.h2);
        out << rec.dump() << '\n';
    }
}

} // namespace sl3coh
