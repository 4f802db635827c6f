#pragma once

#include <map>
#include <string>
#include <utility>

#include "qchar/cartan.hpp"
#include "qchar/fm_engine.hpp"
#include "qchar/yring.hpp"

namespace qchar {

/// Multiset of spectral shifts per node, i.e. the root data (with
/// multiplicities) of one polynomial per node.  Shifts are reduced mod s
/// when the spectral order is finite.
class DrinfeldPoly {
  public:
    using Roots = std::map<std::pair<int, int>, int>;  // (node, shift) -> mult

    explicit DrinfeldPoly(SpectralSpec spec = {}) : spec_(spec) {}
    DrinfeldPoly(SpectralSpec spec, const Roots& roots);

    /// Parse a comma list of "node:shift" or "node:shift:mult" items;
    /// repeated slots accumulate.  Throws ArgumentOutOfRange on
    /// malformed items or nonpositive multiplicities.
    static DrinfeldPoly parse(const std::string& text, SpectralSpec spec);

    const SpectralSpec& spec() const { return spec_; }
    const Roots& roots() const { return roots_; }
    void add_root(int node, int shift, int mult);

    bool empty() const { return roots_.empty(); }
    int degree() const;

    /// The monomial prod W_{i,n}^{mult}.
    VWMonomial top_monomial() const;

    std::string str() const;

    auto operator<=>(const DrinfeldPoly& rhs) const {
        if (auto c = spec_.order <=> rhs.spec_.order; c != 0) return c;
        return roots_ <=> rhs.roots_;
    }
    bool operator==(const DrinfeldPoly&) const = default;

  private:
    SpectralSpec spec_;
    Roots roots_;
};

/// Translate every spectral shift by k (mod s at finite order).
VWMonomial shift_by(const VWMonomial& m, int k);
Character shift_by(const Character& x, int k);

/// chi(M(P)) for generic spectral parameter: the twisted product of the
/// single-root fundamental characters taken in ascending-shift order
/// (ties by node index).  Throws RootOfUnityUnsupported at finite order;
/// see standard_character_at_root.
Character standard_character(const CartanDatum& c, const DrinfeldPoly& P,
                             const EngineOptions& opts = {});

/// d(m, copy of m translated by -k*s); the k < 0 terms sum to the
/// folding correction D^-(m).  Requires a generic m and s >= 1.
int d_shifted_overlap(const CartanDatum& c, const VWMonomial& m, int k, int s);

/// Fold a generic character to spectral order s: each term a(t) m
/// becomes t^{2 D^-(m)} a(t) on m with shifts reduced mod s, where
/// D^-(m) = sum_{k<0} d_shifted_overlap(m, k, s).  Coefficients landing
/// on one folded monomial accumulate.
Character specialize(const CartanDatum& c, const Character& x, int s);

/// chi(M(P)) at a finite spectral order: lift the roots to their
/// representatives in [0, s), compute generically, fold.
Character standard_character_at_root(const CartanDatum& c,
                                     const DrinfeldPoly& P,
                                     const EngineOptions& opts = {});

struct MembershipReport {
    bool member = false;
    /// First node whose greedy decomposition got stuck; 0 when member.
    int failing_node = 0;
    /// Offending monomial at that node (non-dominant head, or a head
    /// left over when the iteration cap was hit).
    VWMonomial witness;
    std::string detail;
};

/// Does x lie in the span of the expansions E_i for every node i?
/// Per node: repeatedly take the highest remaining monomial (lowest
/// V-degree), require it i-dominant, subtract coefficient * E_i; the
/// node passes iff the residual reaches exactly zero.
MembershipReport membership_check(const CartanDatum& c, const Character& x);

}  // namespace qchar
