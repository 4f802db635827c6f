#include "qchar/standard.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

#include "qchar/errors.hpp"

namespace qchar {

// ---------------------------------------------------------------------------
// DrinfeldPoly

DrinfeldPoly::DrinfeldPoly(SpectralSpec spec, const Roots& roots)
    : spec_(spec) {
    for (const auto& [slot, mult] : roots)
        add_root(slot.first, slot.second, mult);
}

void DrinfeldPoly::add_root(int node, int shift, int mult) {
    if (mult <= 0)
        throw ArgumentOutOfRange("root multiplicity must be positive, got " +
                                 std::to_string(mult));
    if (node <= 0)
        throw ArgumentOutOfRange("node index must be positive, got " +
                                 std::to_string(node));
    roots_[{node, spec_.reduce(shift)}] += mult;
}

DrinfeldPoly DrinfeldPoly::parse(const std::string& text, SpectralSpec spec) {
    DrinfeldPoly P(spec);
    std::stringstream ss(text);
    std::string item;
    auto to_int = [&](const std::string& field) {
        int value = 0;
        auto [ptr, ec] =
            std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc{} || ptr != field.data() + field.size())
            throw ArgumentOutOfRange("bad integer '" + field +
                                     "' in root list '" + text + "'");
        return value;
    };
    while (std::getline(ss, item, ',')) {
        std::vector<std::string> fields;
        std::stringstream is(item);
        std::string f;
        while (std::getline(is, f, ':')) fields.push_back(f);
        if (fields.size() != 2 && fields.size() != 3)
            throw ArgumentOutOfRange("root item '" + item +
                                     "' is not node:shift[:mult]");
        int mult = fields.size() == 3 ? to_int(fields[2]) : 1;
        P.add_root(to_int(fields[0]), to_int(fields[1]), mult);
    }
    if (P.empty())
        throw ArgumentOutOfRange("empty root list '" + text + "'");
    return P;
}

int DrinfeldPoly::degree() const {
    int d = 0;
    for (const auto& [slot, mult] : roots_) d += mult;
    return d;
}

VWMonomial DrinfeldPoly::top_monomial() const {
    VWMonomial m(spec_);
    for (const auto& [slot, mult] : roots_)
        m.mul_w(slot.first, slot.second, mult);
    return m;
}

std::string DrinfeldPoly::str() const {
    std::string s;
    for (const auto& [slot, mult] : roots_) {
        if (!s.empty()) s += ",";
        s += std::to_string(slot.first) + ":" + std::to_string(slot.second);
        if (mult != 1) s += ":" + std::to_string(mult);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Shifting and folding

VWMonomial shift_by(const VWMonomial& m, int k) {
    VWMonomial out(m.spec());
    for (const auto& e : m.entries()) {
        out.mul_w(e.node, e.shift + k, e.w);
        out.mul_v(e.node, e.shift + k, e.v);
    }
    return out;
}

Character shift_by(const Character& x, int k) {
    Character out;
    for (const auto& [m, p] : x) add_term(out, shift_by(m, k), p);
    return out;
}

int d_shifted_overlap(const CartanDatum& c, const VWMonomial& m, int k,
                      int s) {
    if (!m.spec().generic())
        throw RootOfUnityUnsupported(
            "d_shifted_overlap expects a generic monomial");
    if (s < 1)
        throw ArgumentOutOfRange("spectral order must be >= 1, got " +
                                 std::to_string(s));
    // The copy with its slot at n holding what m holds at n + k s.
    return pairing_d(c, m, shift_by(m, -k * s));
}

Character specialize(const CartanDatum& c, const Character& x, int s) {
    if (s < 1)
        throw ArgumentOutOfRange("spectral order must be >= 1, got " +
                                 std::to_string(s));
    Character out;
    SpectralSpec folded_spec{s};
    for (const auto& [m, p] : x) {
        int correction = 0;
        if (!m.is_identity()) {
            int width = m.max_shift() - m.min_shift();
            for (int k = -1; -k * s <= width + 1; --k)
                correction += d_shifted_overlap(c, m, k, s);
        }
        VWMonomial folded(folded_spec);
        for (const auto& e : m.entries()) {
            folded.mul_w(e.node, e.shift, e.w);
            folded.mul_v(e.node, e.shift, e.v);
        }
        add_term(out, folded, p.shifted(2 * correction));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Standard characters

Character standard_character(const CartanDatum& c, const DrinfeldPoly& P,
                             const EngineOptions& opts) {
    if (!P.spec().generic())
        throw RootOfUnityUnsupported(
            "standard_character expects generic roots; use "
            "standard_character_at_root");
    for (const auto& [slot, mult] : P.roots())
        if (!c.valid_node(slot.first))
            throw ArgumentOutOfRange("node " + std::to_string(slot.first) +
                                     " outside rank " +
                                     std::to_string(c.rank));

    // One factor per root, ascending shift, ties by node.
    std::vector<std::pair<int, int>> factors;  // (shift, node)
    for (const auto& [slot, mult] : P.roots())
        for (int r = 0; r < mult; ++r)
            factors.emplace_back(slot.second, slot.first);
    std::sort(factors.begin(), factors.end());

    Character x;
    add_term(x, VWMonomial{SpectralSpec{}}, TPoly(1));
    for (auto [shift, node] : factors)
        x = star_product(c, x,
                         fundamental_character(c, node, shift, {}, opts));
    return x;
}

Character standard_character_at_root(const CartanDatum& c,
                                     const DrinfeldPoly& P,
                                     const EngineOptions& opts) {
    if (P.spec().generic())
        throw ArgumentOutOfRange(
            "standard_character_at_root expects a finite spectral order");
    DrinfeldPoly lift{SpectralSpec{}};
    for (const auto& [slot, mult] : P.roots())
        lift.add_root(slot.first, slot.second, mult);  // already in [0, s)
    return specialize(c, standard_character(c, lift, opts), P.spec().order);
}

// ---------------------------------------------------------------------------
// Membership

MembershipReport membership_check(const CartanDatum& c, const Character& x) {
    MembershipReport report;
    for (int node = 1; node <= c.rank; ++node) {
        // Highest monomial first = lowest total V-degree first.
        std::map<std::pair<int, VWMonomial>, TPoly> residual;
        for (const auto& [m, p] : x) residual[{m.v_degree(), m}] = p;

        long iterations_left = 10000 + 20 * static_cast<long>(x.size());
        while (!residual.empty()) {
            if (--iterations_left < 0) {
                report.failing_node = node;
                report.witness = residual.begin()->first.second;
                report.detail = "node " + std::to_string(node) +
                                ": decomposition did not terminate";
                return report;
            }
            const auto [key, head_coeff] = *residual.begin();
            const VWMonomial& head = key.second;
            if (!is_i_dominant(c, head, node)) {
                report.failing_node = node;
                report.witness = head;
                report.detail = "node " + std::to_string(node) +
                                ": residual head is not dominant there";
                return report;
            }
            for (const auto& [m2, p2] : e_expansion(c, head, node)) {
                auto it = residual.find({m2.v_degree(), m2});
                TPoly delta = head_coeff * p2;
                if (it == residual.end()) {
                    residual.emplace(std::pair{m2.v_degree(), m2},
                                     -delta);
                } else {
                    it->second -= delta;
                    if (it->second.is_zero()) residual.erase(it);
                }
            }
        }
    }
    report.member = true;
    return report;
}

}  // namespace qchar
