#pragma once

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "qchar/cartan.hpp"
#include "qchar/tpoly.hpp"

namespace qchar {

/// Order of the spectral parameter.  0 means generic (shifts range over
/// all of Z); s >= 1 means a primitive s-th root of unity (shifts live
/// in Z/s, canonical representatives 0..s-1).
struct SpectralSpec {
    int order = 0;

    bool generic() const { return order == 0; }
    int reduce(int shift) const {
        if (order == 0) return shift;
        int r = shift % order;
        return r < 0 ? r + order : r;
    }
    bool operator==(const SpectralSpec&) const = default;
};

/// Throws SpecMismatch unless both operands share one spectral order.
void require_same_spec(const SpectralSpec& a, const SpectralSpec& b);

/// Commutative monomial in the W and V generators.  Each (node, shift)
/// slot stores the pair of exponents; slots with both exponents zero are
/// never kept, so equal monomials have equal representations.
class VWMonomial {
  public:
    struct Entry {
        int node;
        int shift;
        int w;
        int v;
        auto operator<=>(const Entry&) const = default;
    };

    explicit VWMonomial(SpectralSpec spec = {}) : spec_(spec) {}

    const SpectralSpec& spec() const { return spec_; }
    const std::vector<Entry>& entries() const { return entries_; }

    int w(int node, int shift) const;
    int v(int node, int shift) const;

    /// Multiply by W_{node,shift}^exp resp. V_{node,shift}^exp.
    void mul_w(int node, int shift, int exp);
    void mul_v(int node, int shift, int exp);

    bool is_identity() const { return entries_.empty(); }
    bool pure_w() const;
    int v_degree() const;
    int w_degree() const;

    /// Support bounds over all slots; identity monomial has none.
    int min_shift() const;
    int max_shift() const;

    VWMonomial operator*(const VWMonomial& rhs) const;

    auto operator<=>(const VWMonomial& rhs) const {
        if (auto c = spec_.order <=> rhs.spec_.order; c != 0) return c;
        return entries_ <=> rhs.entries_;
    }
    bool operator==(const VWMonomial&) const = default;

  private:
    SpectralSpec spec_;
    std::vector<Entry> entries_;  // sorted by (node, shift)
};

/// Monomial in the Y generators (exponents u, never zero).
class YMonomial {
  public:
    struct Entry {
        int node;
        int shift;
        int u;
        auto operator<=>(const Entry&) const = default;
    };

    explicit YMonomial(SpectralSpec spec = {}) : spec_(spec) {}

    const SpectralSpec& spec() const { return spec_; }
    const std::vector<Entry>& entries() const { return entries_; }

    int u(int node, int shift) const;
    void mul_u(int node, int shift, int exp);

    bool is_identity() const { return entries_.empty(); }

    YMonomial operator*(const YMonomial& rhs) const;

    auto operator<=>(const YMonomial& rhs) const {
        if (auto c = spec_.order <=> rhs.spec_.order; c != 0) return c;
        return entries_ <=> rhs.entries_;
    }
    bool operator==(const YMonomial&) const = default;

  private:
    SpectralSpec spec_;
    std::vector<Entry> entries_;
};

/// Linear combination of monomials with Laurent coefficients; zero
/// polynomials are never stored.
using Character = std::map<VWMonomial, TPoly>;
using YCharacter = std::map<YMonomial, TPoly>;

void add_term(Character& x, const VWMonomial& m, const TPoly& p);
void add_term(YCharacter& x, const YMonomial& m, const TPoly& p);

/// Exponent of Y_{node,shift} in the Y-form of m:
///   u_{i,n} = w_{i,n} - v_{i,n-1} - v_{i,n+1} + sum_{j ~ i} v_{j,n},
/// shifts taken mod the spectral order when it is finite.
int u_exponent(const CartanDatum& c, const VWMonomial& m, int node, int shift);

/// All nonzero u-exponents of m, keyed by (node, shift).
std::map<std::pair<int, int>, int> u_family(const CartanDatum& c,
                                            const VWMonomial& m);

bool is_i_dominant(const CartanDatum& c, const VWMonomial& m, int node);
bool is_l_dominant(const CartanDatum& c, const VWMonomial& m);

/// Partial order used for triangularity: m1 <= m2 iff they carry the
/// same W-exponents and m1 has at least as many V's in every slot.
bool leq(const CartanDatum& c, const VWMonomial& m1, const VWMonomial& m2);

/// The bilinear form behind the twisted product:
///   d(m1, m2) = sum_{i,n} v_{i,n+1}(m1) u_{i,n}(m2)
///             + sum_{i,n} w_{i,n+1}(m1) v_{i,n}(m2).
int pairing_d(const CartanDatum& c, const VWMonomial& m1, const VWMonomial& m2);

/// m1 * m2 = t^{2 d(m1,m2)} m1 m2, extended bilinearly.
Character star_product(const CartanDatum& c, const Character& x,
                       const Character& y);

/// The bar involution: t -> t^{-1} and m -> t^{2 d(m,m)} m termwise.
Character bar(const CartanDatum& c, const Character& x);

/// Expansion attached to one node:
///   E_i(m) = m * prod_n sum_{r=0}^{u_{i,n}} t^{r(u_{i,n}-r)}
///                        binom_t(u_{i,n}, r) V_{i,n+1}^r.
/// Throws NotIDominant unless every u_{i,n}(m) >= 0.
Character e_expansion(const CartanDatum& c, const VWMonomial& m, int node);

/// Y-form of a monomial together with its normalization factor:
///   m -> (prod Y_{i,n}^{u_{i,n}(m)}, t^{-d(m,m)}).
std::pair<YMonomial, TPoly> project_pi(const CartanDatum& c,
                                       const VWMonomial& m);
YCharacter project_pi(const CartanDatum& c, const Character& x);

/// Collapse spectral shifts and set t = 1: the exponent of y_i is
/// sum_n u_{i,n}(m).  Keys are weight vectors in the fundamental-weight
/// basis, one slot per node.
std::map<std::vector<int>, BigInt> weight_project(const CartanDatum& c,
                                                  const Character& x);

// Auxiliary family behind the commutative-product comparison.  The
// transform of an integer family f vanishes far below its support and
// satisfies f~_{i,n+1} = f_{i,n} - f~_{i,n-1} + sum_{j ~ i} f~_{j,n}.
// All of these require a generic spectral parameter and throw
// RootOfUnityUnsupported otherwise.

int u_tilde(const CartanDatum& c, const VWMonomial& m, int node, int shift);

/// d~(m1, m2) = -sum_{i,n} u_{i,n}(m1) u~_{i,n-1}(m2).
int tilde_d(const CartanDatum& c, const VWMonomial& m1, const VWMonomial& m2);

/// Same as tilde_d but fed with the W-exponent families.
int tilde_d_w(const CartanDatum& c, const VWMonomial& m1, const VWMonomial& m2);

/// m1 *~ m2 = t^{d~(m1,m2) - d~(m2,m1)} m1 m2.
Character tilde_product(const CartanDatum& c, const Character& x,
                        const Character& y);

/// Y-level twisted product; the twist only reads the Y-exponents.
YCharacter tilde_product(const CartanDatum& c, const YCharacter& x,
                         const YCharacter& y);

}  // namespace qchar
