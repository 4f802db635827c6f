#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qchar/cartan.hpp"
#include "qchar/standard.hpp"
#include "qchar/tpoly.hpp"
#include "qchar/yring.hpp"

namespace qchar {

/// Triangular data describing how one standard character decomposes.
/// Rows and columns are positions into `index`, which lists the dominant
/// monomials reachable from the top, highest (fewest V factors) first.
/// Matrix entries absent from the maps are zero; all three matrices are
/// upper triangular with unit diagonal.
struct KLTable {
    SpectralSpec spec;
    std::vector<VWMonomial> index;
    std::map<std::pair<int, int>, TPoly> c;  // graded branching data
    std::map<std::pair<int, int>, TPoly> u;  // bar(c) * c^{-1}
    std::map<std::pair<int, int>, TPoly> z;  // canonical triangular solution

    /// Position of m in `index`, or -1 when absent.
    int position(const VWMonomial& m) const;

    TPoly c_at(int row, int col) const;
    TPoly u_at(int row, int col) const;
    TPoly z_at(int row, int col) const;
};

/// Root datum read off the Y-exponents of an l-dominant monomial.
/// Throws ArgumentOutOfRange when some exponent is negative.
DrinfeldPoly datum_of(const CartanDatum& c, const VWMonomial& m);

/// Closure of {top of P} under "multiply by the V-part of a term of the
/// standard character of the re-graded datum, keep if l-dominant",
/// sorted by increasing V-degree.
std::vector<VWMonomial> build_index_set(const CartanDatum& c,
                                        const DrinfeldPoly& P,
                                        const EngineOptions& opts = {});

/// Fill table.c from table.index: the entry at (row m, col m n*) is
/// a(t) t^{-d(m', m')} where m' runs over the terms a(t) m' of the
/// standard character attached to the re-grading of m and n* is the
/// V-part of m'.  Columns that are not l-dominant are dropped; a dominant
/// column outside the index set raises InternalInconsistency.
void c_matrix(const CartanDatum& c, KLTable& table,
              const EngineOptions& opts = {});

/// Fill table.u = bar(table.c) * table.c^{-1}.
void u_matrix(KLTable& table);

/// Fill table.z: the unique unitriangular solution of
///   z(row,col)(t^{-1}) = sum_s u(row,s)(t) z(s,col)(t)
/// whose off-diagonal entries have only negative powers of t.  Raises
/// AntisymmetryViolation if the running sums fail bar-antisymmetry.
void kl_solve(KLTable& table);

/// The full pipeline: index set, c, u, z.
KLTable kl_table(const CartanDatum& c, const DrinfeldPoly& P,
                 const EngineOptions& opts = {});

/// Composition multiplicities of the standard module of P, keyed by the
/// Y-form of the dominant datum of each constituent.
std::map<YMonomial, BigInt> multiplicities(const CartanDatum& c,
                                           const DrinfeldPoly& P,
                                           const EngineOptions& opts = {});

/// Graded character of the simple quotient, via
///   proj(standard(P)) - sum_{col > 0} z(0,col) simple(datum(col)).
/// Generic spectral parameter only.
YCharacter simple_character(const CartanDatum& c, const DrinfeldPoly& P,
                            const EngineOptions& opts = {});

/// Exactly one monomial of simple_character(P) has all exponents >= 0.
bool is_special(const CartanDatum& c, const DrinfeldPoly& P,
                const EngineOptions& opts = {});

/// Off-diagonal c entries carry only negative powers of t.
bool is_small(const CartanDatum& c, const DrinfeldPoly& P,
              const EngineOptions& opts = {});

/// All c entries carry no positive power of t.
bool is_semismall(const CartanDatum& c, const DrinfeldPoly& P,
                  const EngineOptions& opts = {});

}  // namespace qchar
