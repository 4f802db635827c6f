#pragma once

#include "qchar/cartan.hpp"
#include "qchar/yring.hpp"

namespace qchar {

struct EngineOptions {
    /// Largest total V-degree the expansion may reach before the run is
    /// aborted with CapExceeded.  0 picks the default,
    /// 4 * (number of positive roots).
    int v_degree_cap = 0;
};

/// Character whose coefficients are all forced by dominance from the
/// given pure-W top monomial, i.e. the unique element of every node's
/// expansion span with that single dominant monomial.
///
/// Works level by level in the total V-degree.  A monomial enters the
/// frontier when it shows up in the expansion E_i of an already-placed
/// source; its coefficient is read off at any node where it fails
/// dominance, and the surplus over each dominant node's contribution is
/// registered as a new source there.
///
/// Throws NotSpecial when a second dominant monomial would acquire a
/// nonzero coefficient, CapExceeded past the V-degree cap, and
/// RootOfUnityUnsupported unless the spectral parameter is generic.
Character special_character(const CartanDatum& c, const VWMonomial& top,
                            const EngineOptions& opts = {});

/// Character generated by the single generator W_{node,shift}.  Generic
/// results are cached per (type, node) at shift 0 and translated; at a
/// finite spectral order the generic character at the representative
/// shift is folded.
Character fundamental_character(const CartanDatum& c, int node, int shift,
                                SpectralSpec spec,
                                const EngineOptions& opts = {});

}  // namespace qchar
