#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

namespace qchar {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse Laurent polynomial in t with arbitrary-precision integer
/// coefficients.  Stored as (exponent, coefficient) pairs sorted by
/// exponent, zero coefficients never kept.
class TPoly {
  public:
    using Term = std::pair<int, BigInt>;

    TPoly() = default;
    TPoly(long long constant);
    TPoly(BigInt constant);

    static TPoly term(BigInt coeff, int exp);
    static TPoly t_power(int exp);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    const std::vector<Term>& terms() const { return terms_; }
    BigInt coeff(int exp) const;
    int min_exp() const;  // requires nonzero
    int max_exp() const;  // requires nonzero

    TPoly& operator+=(const TPoly& rhs);
    TPoly& operator-=(const TPoly& rhs);
    TPoly operator-() const;
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator*(const TPoly& a, const TPoly& b);

    bool operator==(const TPoly& rhs) const = default;

    /// Multiply by t^k.
    TPoly shifted(int k) const;

    /// The involution t -> t^{-1}.
    TPoly bar() const;

    /// The part with strictly negative exponents of t.
    TPoly negative_part() const;

    BigInt eval_at_one() const;

    /// Human-readable form, highest power first: "t^2 + 1 - 3t^-1".
    std::string str() const;

  private:
    std::vector<Term> terms_;

    void add_term(int exp, const BigInt& c);
};

/// Balanced Gaussian binomial coefficient, symmetric under t -> t^{-1}.
/// Throws ArgumentOutOfRange unless 0 <= r <= n.
TPoly t_binomial(int n, int r);

}  // namespace qchar
