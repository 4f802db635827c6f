#include "qchar/fm_engine.hpp"

#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "qchar/errors.hpp"
#include "qchar/standard.hpp"
#include "qchar/store.hpp"

namespace qchar {

namespace {

std::string describe(const VWMonomial& m) {
    std::string s;
    for (const auto& e : m.entries()) {
        if (e.w != 0)
            s += " W[" + std::to_string(e.node) + "," +
                 std::to_string(e.shift) + "]^" + std::to_string(e.w);
        if (e.v != 0)
            s += " V[" + std::to_string(e.node) + "," +
                 std::to_string(e.shift) + "]^" + std::to_string(e.v);
    }
    return s.empty() ? " 1" : s;
}

}  // namespace

Character special_character(const CartanDatum& c, const VWMonomial& top,
                            const EngineOptions& opts) {
    if (!top.spec().generic())
        throw RootOfUnityUnsupported(
            "special_character runs at generic spectral parameter; fold the "
            "result instead");
    if (!top.pure_w())
        throw ArgumentOutOfRange("top monomial must involve only W factors");
    for (const auto& e : top.entries())
        if (e.w < 0)
            throw ArgumentOutOfRange("top monomial has a negative W exponent");

    const int cap =
        opts.v_degree_cap > 0 ? opts.v_degree_cap : 4 * c.num_positive_roots();

    Character coeff;                           // the answer
    std::vector<Character> contrib(c.rank + 1);  // per node, lead terms excluded
    std::map<int, std::set<VWMonomial>> frontier;  // v-degree -> candidates

    auto register_source = [&](int node, const VWMonomial& m,
                               const TPoly& amount) {
        for (const auto& [m2, p2] : e_expansion(c, m, node)) {
            if (m2 == m) continue;
            add_term(contrib[node], m2, amount * p2);
            frontier[m2.v_degree()].insert(m2);
        }
    };

    add_term(coeff, top, TPoly(1));
    for (int i = 1; i <= c.rank; ++i) register_source(i, top, TPoly(1));

    while (!frontier.empty()) {
        auto level_it = frontier.begin();
        const int level = level_it->first;
        if (level > cap)
            throw CapExceeded("expansion reached V-degree " +
                              std::to_string(level) + " (cap " +
                              std::to_string(cap) + ")");
        const std::set<VWMonomial> batch = std::move(level_it->second);
        frontier.erase(level_it);

        for (const VWMonomial& m : batch) {
            std::vector<int> non_dominant;
            for (int i = 1; i <= c.rank; ++i)
                if (!is_i_dominant(c, m, i)) non_dominant.push_back(i);

            auto contribution = [&](int i) -> TPoly {
                auto it = contrib[i].find(m);
                return it == contrib[i].end() ? TPoly(0) : it->second;
            };

            if (non_dominant.empty()) {
                // A second dominant monomial: admissible only with no support.
                for (int i = 1; i <= c.rank; ++i)
                    if (!contribution(i).is_zero())
                        throw NotSpecial(
                            "coefficient of the dominant monomial" +
                            describe(m) + " is not forced by dominance");
                continue;
            }

            const TPoly value = contribution(non_dominant.front());
            for (size_t k = 1; k < non_dominant.size(); ++k)
                if (contribution(non_dominant[k]) != value)
                    throw InternalInconsistency(
                        "nodes " + std::to_string(non_dominant.front()) +
                        " and " + std::to_string(non_dominant[k]) +
                        " disagree on the coefficient of" + describe(m));

            add_term(coeff, m, value);
            for (int j = 1; j <= c.rank; ++j) {
                if (!is_i_dominant(c, m, j)) continue;
                TPoly source = value - contribution(j);
                if (!source.is_zero()) register_source(j, m, source);
            }
        }
    }
    return coeff;
}

namespace {

std::mutex cache_mutex;
std::map<std::pair<std::string, int>, Character> fundamental_cache;

}  // namespace

Character fundamental_character(const CartanDatum& c, int node, int shift,
                                SpectralSpec spec, const EngineOptions& opts) {
    if (!c.valid_node(node))
        throw ArgumentOutOfRange("node " + std::to_string(node) +
                                 " outside rank " + std::to_string(c.rank));
    if (!spec.generic()) {
        // Compute at the representative shift, then fold.
        Character generic =
            fundamental_character(c, node, spec.reduce(shift), {}, opts);
        return specialize(c, generic, spec.order);
    }

    const bool default_cap = opts.v_degree_cap <= 0;
    const CacheKey disk_key{c.label, "fundamental",
                            std::to_string(node) + ":0", 0};
    if (default_cap) {
        {
            std::lock_guard<std::mutex> lock(cache_mutex);
            auto it = fundamental_cache.find({c.label, node});
            if (it != fundamental_cache.end())
                return shift_by(it->second, shift);
        }
        if (auto store = open_default_store()) {
            try {
                if (auto hit = store->get(disk_key)) {
                    std::lock_guard<std::mutex> lock(cache_mutex);
                    auto it =
                        fundamental_cache.insert({{c.label, node}, *hit});
                    return shift_by(it.first->second, shift);
                }
            } catch (const CorruptEntry& bad) {
                std::cerr << "qchar: discarding bad cache entry: "
                          << bad.what() << "\n";
            }
        }
    }
    VWMonomial top{SpectralSpec{}};
    top.mul_w(node, 0, 1);
    Character base = special_character(c, top, opts);
    if (default_cap) {
        {
            std::lock_guard<std::mutex> lock(cache_mutex);
            fundamental_cache.insert({{c.label, node}, base});
        }
        if (auto store = open_default_store()) store->put(disk_key, base);
    }
    return shift_by(base, shift);
}

}  // namespace qchar
