#include "qchar/kl.hpp"

#include <algorithm>
#include <iostream>
#include <mutex>
#include <set>
#include <string>

#include "qchar/errors.hpp"
#include "qchar/store.hpp"

namespace qchar {

namespace {

std::mutex cache_mutex;
using Key = std::pair<std::string, DrinfeldPoly>;
std::map<Key, Character> standard_cache;
std::map<Key, KLTable> table_cache;
std::map<Key, YCharacter> simple_cache;

Character compute_standard(const CartanDatum& c, const DrinfeldPoly& P,
                           const EngineOptions& opts) {
    return P.spec().generic() ? standard_character(c, P, opts)
                              : standard_character_at_root(c, P, opts);
}

Character cached_standard(const CartanDatum& c, const DrinfeldPoly& P,
                          const EngineOptions& opts) {
    if (opts.v_degree_cap > 0) return compute_standard(c, P, opts);
    Key key{c.label, P};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = standard_cache.find(key);
        if (it != standard_cache.end()) return it->second;
    }
    const CacheKey disk_key{c.label, "standard", P.str(),
                            P.spec().order};
    const bool on_disk = !P.empty();  // the trivial datum has no root list
    if (on_disk) {
        if (auto store = open_default_store()) {
            try {
                if (auto hit = store->get(disk_key)) {
                    std::lock_guard<std::mutex> lock(cache_mutex);
                    return standard_cache.emplace(std::move(key), *hit)
                        .first->second;
                }
            } catch (const CorruptEntry& bad) {
                std::cerr << "qchar: discarding bad cache entry: "
                          << bad.what() << "\n";
            }
        }
    }
    Character x = compute_standard(c, P, opts);
    if (on_disk)
        if (auto store = open_default_store()) store->put(disk_key, x);
    std::lock_guard<std::mutex> lock(cache_mutex);
    return standard_cache.emplace(std::move(key), std::move(x))
        .first->second;
}

VWMonomial v_part(const VWMonomial& m) {
    VWMonomial out(m.spec());
    for (const auto& e : m.entries())
        if (e.v != 0) out.mul_v(e.node, e.shift, e.v);
    return out;
}

TPoly entry_or_zero(const std::map<std::pair<int, int>, TPoly>& mat, int row,
                    int col) {
    auto it = mat.find({row, col});
    return it == mat.end() ? TPoly(0) : it->second;
}

}  // namespace

int KLTable::position(const VWMonomial& m) const {
    for (size_t i = 0; i < index.size(); ++i)
        if (index[i] == m) return static_cast<int>(i);
    return -1;
}

TPoly KLTable::c_at(int row, int col) const { return entry_or_zero(c, row, col); }
TPoly KLTable::u_at(int row, int col) const { return entry_or_zero(u, row, col); }
TPoly KLTable::z_at(int row, int col) const { return entry_or_zero(z, row, col); }

DrinfeldPoly datum_of(const CartanDatum& c, const VWMonomial& m) {
    DrinfeldPoly P(m.spec());
    for (const auto& [slot, u] : u_family(c, m)) {
        if (u < 0)
            throw ArgumentOutOfRange(
                "monomial is not l-dominant: negative exponent at node " +
                std::to_string(slot.first) + ", shift " +
                std::to_string(slot.second));
        P.add_root(slot.first, slot.second, u);
    }
    return P;
}

std::vector<VWMonomial> build_index_set(const CartanDatum& c,
                                        const DrinfeldPoly& P,
                                        const EngineOptions& opts) {
    std::set<VWMonomial> seen;
    std::vector<VWMonomial> todo{P.top_monomial()};
    seen.insert(todo.back());
    while (!todo.empty()) {
        VWMonomial m = std::move(todo.back());
        todo.pop_back();
        Character x = cached_standard(c, datum_of(c, m), opts);
        for (const auto& [term, a] : x) {
            VWMonomial candidate = m * v_part(term);
            if (!is_l_dominant(c, candidate)) continue;
            if (seen.insert(candidate).second) todo.push_back(candidate);
        }
    }
    std::vector<VWMonomial> index(seen.begin(), seen.end());
    std::sort(index.begin(), index.end(),
              [](const VWMonomial& a, const VWMonomial& b) {
                  if (a.v_degree() != b.v_degree())
                      return a.v_degree() < b.v_degree();
                  return a < b;
              });
    return index;
}

void c_matrix(const CartanDatum& c, KLTable& table,
              const EngineOptions& opts) {
    table.c.clear();
    for (size_t row = 0; row < table.index.size(); ++row) {
        const VWMonomial& m = table.index[row];
        Character x = cached_standard(c, datum_of(c, m), opts);
        for (const auto& [term, a] : x) {
            VWMonomial candidate = m * v_part(term);
            if (!is_l_dominant(c, candidate)) continue;
            int col = table.position(candidate);
            if (col < 0)
                throw InternalInconsistency(
                    "dominant monomial escaped the index set");
            TPoly& slot = table.c[{static_cast<int>(row), col}];
            slot += a * TPoly::t_power(-pairing_d(c, term, term));
            if (slot.is_zero()) table.c.erase({static_cast<int>(row), col});
        }
    }
}

void u_matrix(KLTable& table) {
    const int n = static_cast<int>(table.index.size());
    // inv = c^{-1}, by increasing column distance.
    std::map<std::pair<int, int>, TPoly> inv;
    for (int i = 0; i < n; ++i) inv[{i, i}] = TPoly(1);
    for (int len = 1; len < n; ++len) {
        for (int i = 0; i + len < n; ++i) {
            const int j = i + len;
            TPoly sum;
            for (int s = i + 1; s <= j; ++s)
                sum += entry_or_zero(table.c, i, s) * entry_or_zero(inv, s, j);
            if (!sum.is_zero()) inv[{i, j}] = -sum;
        }
    }
    table.u.clear();
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            TPoly sum;
            for (int s = i; s <= j; ++s)
                sum += entry_or_zero(table.c, i, s).bar() *
                       entry_or_zero(inv, s, j);
            if (!sum.is_zero()) table.u[{i, j}] = sum;
        }
    }
}

void kl_solve(KLTable& table) {
    const int n = static_cast<int>(table.index.size());
    table.z.clear();
    for (int i = 0; i < n; ++i) table.z[{i, i}] = TPoly(1);
    for (int len = 1; len < n; ++len) {
        for (int i = 0; i + len < n; ++i) {
            const int j = i + len;
            TPoly f;
            for (int s = i + 1; s <= j; ++s)
                f += entry_or_zero(table.u, i, s) * entry_or_zero(table.z, s, j);
            if (f.bar() != -f)
                throw AntisymmetryViolation(
                    "running sum at (" + std::to_string(i) + ", " +
                    std::to_string(j) + ") is not bar-antisymmetric: " +
                    f.str());
            TPoly zij = -f.negative_part();
            if (!zij.is_zero()) table.z[{i, j}] = zij;
        }
    }
}

KLTable kl_table(const CartanDatum& c, const DrinfeldPoly& P,
                 const EngineOptions& opts) {
    if (opts.v_degree_cap <= 0) {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = table_cache.find({c.label, P});
        if (it != table_cache.end()) return it->second;
    }
    KLTable table;
    table.spec = P.spec();
    table.index = build_index_set(c, P, opts);
    c_matrix(c, table, opts);
    u_matrix(table);
    kl_solve(table);
    if (opts.v_degree_cap <= 0) {
        std::lock_guard<std::mutex> lock(cache_mutex);
        table_cache.emplace(Key{c.label, P}, table);
    }
    return table;
}

std::map<YMonomial, BigInt> multiplicities(const CartanDatum& c,
                                           const DrinfeldPoly& P,
                                           const EngineOptions& opts) {
    KLTable table = kl_table(c, P, opts);
    std::map<YMonomial, BigInt> out;
    for (size_t col = 0; col < table.index.size(); ++col) {
        TPoly zval = table.z_at(0, static_cast<int>(col));
        if (zval.is_zero()) continue;
        out[project_pi(c, table.index[col]).first] += zval.eval_at_one();
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

YCharacter simple_character(const CartanDatum& c, const DrinfeldPoly& P,
                            const EngineOptions& opts) {
    if (!P.spec().generic())
        throw RootOfUnityUnsupported(
            "simple characters are only computed at generic spectral "
            "parameter");
    if (opts.v_degree_cap <= 0) {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = simple_cache.find({c.label, P});
        if (it != simple_cache.end()) return it->second;
    }
    KLTable table = kl_table(c, P, opts);
    YCharacter out = project_pi(c, cached_standard(c, P, opts));
    for (size_t col = 1; col < table.index.size(); ++col) {
        TPoly zval = table.z_at(0, static_cast<int>(col));
        if (zval.is_zero()) continue;
        YCharacter child =
            simple_character(c, datum_of(c, table.index[col]), opts);
        for (const auto& [y, p] : child) add_term(out, y, -(zval * p));
    }
    if (opts.v_degree_cap <= 0) {
        std::lock_guard<std::mutex> lock(cache_mutex);
        simple_cache.emplace(Key{c.label, P}, out);
    }
    return out;
}

bool is_special(const CartanDatum& c, const DrinfeldPoly& P,
                const EngineOptions& opts) {
    int dominant = 0;
    for (const auto& [y, p] : simple_character(c, P, opts)) {
        bool ok = true;
        for (const auto& e : y.entries())
            if (e.u < 0) ok = false;
        if (ok) ++dominant;
    }
    return dominant == 1;
}

bool is_small(const CartanDatum& c, const DrinfeldPoly& P,
              const EngineOptions& opts) {
    KLTable table = kl_table(c, P, opts);
    for (const auto& [pos, p] : table.c)
        if (pos.first != pos.second && p.max_exp() > -1) return false;
    return true;
}

bool is_semismall(const CartanDatum& c, const DrinfeldPoly& P,
                  const EngineOptions& opts) {
    KLTable table = kl_table(c, P, opts);
    for (const auto& [pos, p] : table.c)
        if (p.max_exp() > 0) return false;
    return true;
}

}  // namespace qchar
