#include "qchar/yring.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "qchar/errors.hpp"

namespace qchar {

void require_same_spec(const SpectralSpec& a, const SpectralSpec& b) {
    if (!(a == b))
        throw SpecMismatch("spectral orders differ: " +
                           std::to_string(a.order) + " vs " +
                           std::to_string(b.order));
}

namespace {

void require_generic(const SpectralSpec& s, const char* op) {
    if (!s.generic())
        throw RootOfUnityUnsupported(std::string(op) +
                                     " needs a generic spectral parameter");
}

}  // namespace

// ---------------------------------------------------------------------------
// VWMonomial

int VWMonomial::w(int node, int shift) const {
    shift = spec_.reduce(shift);
    auto it = std::lower_bound(entries_.begin(), entries_.end(),
                               std::pair{node, shift},
                               [](const Entry& e, const std::pair<int, int>& k) {
                                   return std::pair{e.node, e.shift} < k;
                               });
    if (it != entries_.end() && it->node == node && it->shift == shift)
        return it->w;
    return 0;
}

int VWMonomial::v(int node, int shift) const {
    shift = spec_.reduce(shift);
    auto it = std::lower_bound(entries_.begin(), entries_.end(),
                               std::pair{node, shift},
                               [](const Entry& e, const std::pair<int, int>& k) {
                                   return std::pair{e.node, e.shift} < k;
                               });
    if (it != entries_.end() && it->node == node && it->shift == shift)
        return it->v;
    return 0;
}

namespace {

void bump(std::vector<VWMonomial::Entry>& entries, int node, int shift,
          int dw, int dv) {
    if (dw == 0 && dv == 0) return;
    auto it = std::lower_bound(
        entries.begin(), entries.end(), std::pair{node, shift},
        [](const VWMonomial::Entry& e, const std::pair<int, int>& k) {
            return std::pair{e.node, e.shift} < k;
        });
    if (it != entries.end() && it->node == node && it->shift == shift) {
        it->w += dw;
        it->v += dv;
        if (it->w == 0 && it->v == 0) entries.erase(it);
    } else {
        entries.insert(it, {node, shift, dw, dv});
    }
}

}  // namespace

void VWMonomial::mul_w(int node, int shift, int exp) {
    bump(entries_, node, spec_.reduce(shift), exp, 0);
}

void VWMonomial::mul_v(int node, int shift, int exp) {
    bump(entries_, node, spec_.reduce(shift), 0, exp);
}

bool VWMonomial::pure_w() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Entry& e) { return e.v == 0; });
}

int VWMonomial::v_degree() const {
    int d = 0;
    for (const Entry& e : entries_) d += e.v;
    return d;
}

int VWMonomial::w_degree() const {
    int d = 0;
    for (const Entry& e : entries_) d += e.w;
    return d;
}

int VWMonomial::min_shift() const {
    assert(!entries_.empty());
    int m = entries_.front().shift;
    for (const Entry& e : entries_) m = std::min(m, e.shift);
    return m;
}

int VWMonomial::max_shift() const {
    assert(!entries_.empty());
    int m = entries_.front().shift;
    for (const Entry& e : entries_) m = std::max(m, e.shift);
    return m;
}

VWMonomial VWMonomial::operator*(const VWMonomial& rhs) const {
    require_same_spec(spec_, rhs.spec_);
    VWMonomial out = *this;
    for (const Entry& e : rhs.entries_)
        bump(out.entries_, e.node, e.shift, e.w, e.v);
    return out;
}

// ---------------------------------------------------------------------------
// YMonomial

int YMonomial::u(int node, int shift) const {
    shift = spec_.reduce(shift);
    for (const Entry& e : entries_)
        if (e.node == node && e.shift == shift) return e.u;
    return 0;
}

void YMonomial::mul_u(int node, int shift, int exp) {
    if (exp == 0) return;
    shift = spec_.reduce(shift);
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), std::pair{node, shift},
        [](const Entry& e, const std::pair<int, int>& k) {
            return std::pair{e.node, e.shift} < k;
        });
    if (it != entries_.end() && it->node == node && it->shift == shift) {
        it->u += exp;
        if (it->u == 0) entries_.erase(it);
    } else {
        entries_.insert(it, {node, shift, exp});
    }
}

YMonomial YMonomial::operator*(const YMonomial& rhs) const {
    require_same_spec(spec_, rhs.spec_);
    YMonomial out = *this;
    for (const Entry& e : rhs.entries_) out.mul_u(e.node, e.shift, e.u);
    return out;
}

// ---------------------------------------------------------------------------
// Characters

void add_term(Character& x, const VWMonomial& m, const TPoly& p) {
    if (p.is_zero()) return;
    auto [it, fresh] = x.try_emplace(m, p);
    if (!fresh) {
        it->second += p;
        if (it->second.is_zero()) x.erase(it);
    }
}

void add_term(YCharacter& x, const YMonomial& m, const TPoly& p) {
    if (p.is_zero()) return;
    auto [it, fresh] = x.try_emplace(m, p);
    if (!fresh) {
        it->second += p;
        if (it->second.is_zero()) x.erase(it);
    }
}

// ---------------------------------------------------------------------------
// u-exponents and dominance

int u_exponent(const CartanDatum& c, const VWMonomial& m, int node, int shift) {
    int u = m.w(node, shift) - m.v(node, shift - 1) - m.v(node, shift + 1);
    for (int j : c.neighbors(node)) u += m.v(j, shift);
    return u;
}

std::map<std::pair<int, int>, int> u_family(const CartanDatum& c,
                                            const VWMonomial& m) {
    // u can only be nonzero at a slot fed by some entry of m: the slot
    // itself, one step away in the shift direction, or an adjacent node.
    std::set<std::pair<int, int>> slots;
    const SpectralSpec& spec = m.spec();
    for (const auto& e : m.entries()) {
        if (e.w != 0) slots.insert({e.node, e.shift});
        if (e.v != 0) {
            slots.insert({e.node, spec.reduce(e.shift - 1)});
            slots.insert({e.node, spec.reduce(e.shift + 1)});
            for (int j : c.neighbors(e.node)) slots.insert({j, e.shift});
        }
    }
    std::map<std::pair<int, int>, int> out;
    for (auto [node, shift] : slots) {
        int u = u_exponent(c, m, node, shift);
        if (u != 0) out[{node, shift}] = u;
    }
    return out;
}

bool is_i_dominant(const CartanDatum& c, const VWMonomial& m, int node) {
    const SpectralSpec& spec = m.spec();
    std::set<int> shifts;
    for (const auto& e : m.entries()) {
        if (e.node == node && e.w != 0) shifts.insert(e.shift);
        if (e.v != 0) {
            if (e.node == node) {
                shifts.insert(spec.reduce(e.shift - 1));
                shifts.insert(spec.reduce(e.shift + 1));
            }
            for (int j : c.neighbors(e.node))
                if (j == node) shifts.insert(e.shift);
        }
    }
    for (int n : shifts)
        if (u_exponent(c, m, node, n) < 0) return false;
    return true;
}

bool is_l_dominant(const CartanDatum& c, const VWMonomial& m) {
    for (const auto& [slot, u] : u_family(c, m))
        if (u < 0) return false;
    return true;
}

bool leq(const CartanDatum&, const VWMonomial& m1, const VWMonomial& m2) {
    require_same_spec(m1.spec(), m2.spec());
    // Same W-exponents everywhere, at least as many V's everywhere.
    auto i1 = m1.entries().begin(), e1 = m1.entries().end();
    auto i2 = m2.entries().begin(), e2 = m2.entries().end();
    while (i1 != e1 || i2 != e2) {
        if (i2 == e2 || (i1 != e1 && std::pair{i1->node, i1->shift} <
                                         std::pair{i2->node, i2->shift})) {
            if (i1->w != 0 || i1->v < 0) return false;
            ++i1;
        } else if (i1 == e1 || std::pair{i2->node, i2->shift} <
                                   std::pair{i1->node, i1->shift}) {
            if (i2->w != 0 || i2->v > 0) return false;
            ++i2;
        } else {
            if (i1->w != i2->w || i1->v < i2->v) return false;
            ++i1;
            ++i2;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Pairing, twisted product, bar

int pairing_d(const CartanDatum& c, const VWMonomial& m1,
              const VWMonomial& m2) {
    require_same_spec(m1.spec(), m2.spec());
    int d = 0;
    for (const auto& e : m1.entries()) {
        if (e.v != 0) d += e.v * u_exponent(c, m2, e.node, e.shift - 1);
        if (e.w != 0) d += e.w * m2.v(e.node, e.shift - 1);
    }
    return d;
}

Character star_product(const CartanDatum& c, const Character& x,
                       const Character& y) {
    Character out;
    for (const auto& [m1, p1] : x)
        for (const auto& [m2, p2] : y) {
            int d = pairing_d(c, m1, m2);
            add_term(out, m1 * m2, (p1 * p2).shifted(2 * d));
        }
    return out;
}

Character bar(const CartanDatum& c, const Character& x) {
    Character out;
    for (const auto& [m, p] : x)
        add_term(out, m, p.bar().shifted(2 * pairing_d(c, m, m)));
    return out;
}

// ---------------------------------------------------------------------------
// Node expansion

Character e_expansion(const CartanDatum& c, const VWMonomial& m, int node) {
    std::map<int, int> u_slice;  // shift -> u_{node,shift}(m), nonzero
    for (const auto& [slot, u] : u_family(c, m))
        if (slot.first == node) u_slice[slot.second] = u;
    for (const auto& [n, u] : u_slice)
        if (u < 0)
            throw NotIDominant("monomial is not dominant at node " +
                               std::to_string(node) + ", shift " +
                               std::to_string(n));
    Character out;
    add_term(out, m, TPoly(1));
    for (const auto& [n, u] : u_slice) {
        Character next;
        for (const auto& [mon, poly] : out)
            for (int r = 0; r <= u; ++r) {
                VWMonomial mr = mon;
                mr.mul_v(node, n + 1, r);
                add_term(next, mr,
                         (poly * t_binomial(u, r)).shifted(r * (u - r)));
            }
        out = std::move(next);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Projection to Y-variables

std::pair<YMonomial, TPoly> project_pi(const CartanDatum& c,
                                       const VWMonomial& m) {
    YMonomial y(m.spec());
    for (const auto& [slot, u] : u_family(c, m))
        y.mul_u(slot.first, slot.second, u);
    return {y, TPoly::t_power(-pairing_d(c, m, m))};
}

YCharacter project_pi(const CartanDatum& c, const Character& x) {
    YCharacter out;
    for (const auto& [m, p] : x) {
        auto [y, scale] = project_pi(c, m);
        add_term(out, y, p * scale);
    }
    return out;
}

std::map<std::vector<int>, BigInt> weight_project(const CartanDatum& c,
                                                  const Character& x) {
    std::map<std::vector<int>, BigInt> out;
    for (const auto& [m, p] : x) {
        std::vector<int> lambda(c.rank, 0);
        for (const auto& [slot, u] : u_family(c, m)) lambda[slot.first - 1] += u;
        out[lambda] += p.eval_at_one();
        if (out[lambda] == 0) out.erase(lambda);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Tilde machinery (generic spectral parameter only)

namespace {

using Family = std::map<std::pair<int, int>, int>;

Family w_family(const VWMonomial& m) {
    Family f;
    for (const auto& e : m.entries())
        if (e.w != 0) f[{e.node, e.shift}] = e.w;
    return f;
}

// Values of the transformed family on shifts min..up_to, where min is
// the bottom of f's support.  The transform vanishes at and below min.
std::vector<std::vector<int>> tilde_table(const CartanDatum& c,
                                          const Family& f, int& base,
                                          int up_to) {
    assert(!f.empty());
    base = f.begin()->first.second;
    for (const auto& [slot, val] : f) base = std::min(base, slot.second);
    int len = std::max(0, up_to - base + 1);
    std::vector<std::vector<int>> table(c.rank + 1, std::vector<int>(len, 0));
    auto at = [&](const std::vector<std::vector<int>>& t, int node,
                  int n) -> int {
        int idx = n - base;
        return (idx >= 0 && idx < len) ? t[node][idx] : 0;
    };
    for (int n = base; n < up_to; ++n)
        for (int i = 1; i <= c.rank; ++i) {
            auto it = f.find({i, n});
            int val = (it == f.end() ? 0 : it->second) - at(table, i, n - 1);
            for (int j : c.neighbors(i)) val += at(table, j, n);
            table[i][n - base + 1] = val;
        }
    return table;
}

int tilde_value(const CartanDatum& c, const Family& f, int node, int shift) {
    if (f.empty()) return 0;
    int base = 0;
    auto table = tilde_table(c, f, base, shift);
    if (shift <= base) return 0;
    return table[node][shift - base];
}

// d~(f1, f2) = -sum f1_{i,n} f2~_{i,n-1}.
int tilde_d_families(const CartanDatum& c, const Family& f1, const Family& f2) {
    if (f1.empty() || f2.empty()) return 0;
    int up_to = f1.begin()->first.second;
    for (const auto& [slot, val] : f1) up_to = std::max(up_to, slot.second);
    int base = 0;
    auto table = tilde_table(c, f2, base, up_to - 1);
    int d = 0;
    for (const auto& [slot, val] : f1) {
        int n = slot.second - 1;
        if (n > base && n - base < static_cast<int>(table[slot.first].size()))
            d -= val * table[slot.first][n - base];
    }
    return d;
}

Family y_family(const YMonomial& y) {
    Family f;
    for (const auto& e : y.entries()) f[{e.node, e.shift}] = e.u;
    return f;
}

}  // namespace

int u_tilde(const CartanDatum& c, const VWMonomial& m, int node, int shift) {
    require_generic(m.spec(), "u_tilde");
    return tilde_value(c, u_family(c, m), node, shift);
}

int tilde_d(const CartanDatum& c, const VWMonomial& m1, const VWMonomial& m2) {
    require_same_spec(m1.spec(), m2.spec());
    require_generic(m1.spec(), "tilde_d");
    return tilde_d_families(c, u_family(c, m1), u_family(c, m2));
}

int tilde_d_w(const CartanDatum& c, const VWMonomial& m1,
              const VWMonomial& m2) {
    require_same_spec(m1.spec(), m2.spec());
    require_generic(m1.spec(), "tilde_d_w");
    return tilde_d_families(c, w_family(m1), w_family(m2));
}

Character tilde_product(const CartanDatum& c, const Character& x,
                        const Character& y) {
    Character out;
    for (const auto& [m1, p1] : x)
        for (const auto& [m2, p2] : y) {
            int tw = tilde_d(c, m1, m2) - tilde_d(c, m2, m1);
            add_term(out, m1 * m2, (p1 * p2).shifted(tw));
        }
    return out;
}

YCharacter tilde_product(const CartanDatum& c, const YCharacter& x,
                         const YCharacter& y) {
    YCharacter out;
    for (const auto& [y1, p1] : x)
        for (const auto& [y2, p2] : y) {
            require_same_spec(y1.spec(), y2.spec());
            require_generic(y1.spec(), "tilde_product");
            int tw = tilde_d_families(c, y_family(y1), y_family(y2)) -
                     tilde_d_families(c, y_family(y2), y_family(y1));
            add_term(out, y1 * y2, (p1 * p2).shifted(tw));
        }
    return out;
}

}  // namespace qchar
