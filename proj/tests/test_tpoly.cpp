#include <random>
#include <vector>

#include "doctest.h"
#include "qchar/errors.hpp"
#include "qchar/tpoly.hpp"

using qchar::BigInt;
using qchar::t_binomial;
using qchar::TPoly;

namespace {

// Independent oracle for the balanced Gaussian binomial: the coefficient
// of q^k in the classical Gaussian binomial counts partitions of k inside
// an r x (n-r) box, and the balanced form is q = t^2 recentered by
// t^{-r(n-r)}.  Partition counts come from brute-force enumeration.
long long partitions_in_box(int sum, int max_part, int max_count) {
    if (sum == 0) return 1;
    if (max_part == 0 || max_count == 0) return 0;
    long long total = 0;
    for (int first = std::min(sum, max_part); first >= 1; --first)
        total += partitions_in_box(sum - first, first, max_count - 1);
    return total;
}

TPoly binomial_oracle(int n, int r) {
    TPoly out;
    const int box = r * (n - r);
    for (int k = 0; k <= box; ++k) {
        long long cnt = partitions_in_box(k, n - r, r);
        out += TPoly::term(cnt, 2 * k - box);
    }
    return out;
}

TPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), exp(-5, 5), coeff(-4, 4);
    TPoly p;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) p += TPoly::term(coeff(rng), exp(rng));
    return p;
}

}  // namespace

TEST_CASE("tpoly basic arithmetic") {
    TPoly a = TPoly::term(2, 3) + TPoly::term(-1, 0);  // 2t^3 - 1
    TPoly b = TPoly::t_power(-3);

    CHECK((a * b) == (TPoly::term(2, 0) + TPoly::term(-1, -3)));
    CHECK((a - a).is_zero());
    CHECK(a.shifted(-3) == a * b);
    CHECK(TPoly(0).is_zero());
    CHECK(TPoly(1).is_one());
    CHECK(a.coeff(3) == 2);
    CHECK(a.coeff(1) == 0);
    CHECK(a.min_exp() == 0);
    CHECK(a.max_exp() == 3);
}

TEST_CASE("tpoly cancellation keeps representation sparse") {
    TPoly a = TPoly::term(5, 2);
    a += TPoly::term(-5, 2);
    CHECK(a.is_zero());
    CHECK(a.terms().empty());
}

TEST_CASE("tpoly bar and negative part") {
    TPoly p = TPoly::term(1, 2) + TPoly(1) + TPoly::term(3, -1);
    CHECK(p.bar() == (TPoly::term(1, -2) + TPoly(1) + TPoly::term(3, 1)));
    CHECK(p.negative_part() == TPoly::term(3, -1));
    CHECK(p.bar().bar() == p);
    CHECK(p.eval_at_one() == 5);
}

TEST_CASE("tpoly printing") {
    CHECK(TPoly(0).str() == "0");
    CHECK(TPoly(-2).str() == "-2");
    CHECK((TPoly::t_power(1) - TPoly::t_power(-1)).str() == "t - t^-1");
    CHECK((TPoly::t_power(2) + TPoly(1)).str() == "t^2 + 1");
    CHECK(TPoly::term(-3, -4).str() == "-3t^-4");
}

TEST_CASE("t_binomial pinned values") {
    CHECK(t_binomial(2, 1) == (TPoly::t_power(1) + TPoly::t_power(-1)));
    CHECK(t_binomial(3, 1) ==
          (TPoly::t_power(2) + TPoly(1) + TPoly::t_power(-2)));
    CHECK(t_binomial(0, 0) == TPoly(1));
    CHECK(t_binomial(6, 0) == TPoly(1));
    CHECK(t_binomial(6, 6) == TPoly(1));
}

TEST_CASE("t_binomial against partition-count oracle") {
    for (int n = 0; n <= 8; ++n)
        for (int r = 0; r <= n; ++r) {
            CAPTURE(n);
            CAPTURE(r);
            CHECK(t_binomial(n, r) == binomial_oracle(n, r));
        }
}

TEST_CASE("t_binomial symmetry and Pascal recursion") {
    for (int n = 1; n <= 8; ++n)
        for (int r = 0; r <= n; ++r) {
            TPoly b = t_binomial(n, r);
            CHECK(b == b.bar());
            CHECK(b == t_binomial(n, n - r));
            TPoly pascal = (r <= n - 1 ? t_binomial(n - 1, r).shifted(r)
                                       : TPoly(0));
            if (r >= 1) pascal += t_binomial(n - 1, r - 1).shifted(r - n);
            CHECK(b == pascal);
            CHECK(b.eval_at_one() ==
                  binomial_oracle(n, r).eval_at_one());
        }
}

TEST_CASE("t_binomial rejects bad arguments") {
    CHECK_THROWS_AS(t_binomial(2, 3), qchar::ArgumentOutOfRange);
    CHECK_THROWS_AS(t_binomial(-1, 0), qchar::ArgumentOutOfRange);
    CHECK_THROWS_AS(t_binomial(3, -1), qchar::ArgumentOutOfRange);
}

TEST_CASE("tpoly ring laws on random inputs") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        TPoly f = random_poly(rng), g = random_poly(rng), h = random_poly(rng);
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK((f * g).bar() == f.bar() * g.bar());
        CHECK((f + g).eval_at_one() == f.eval_at_one() + g.eval_at_one());
        CHECK((f * g).eval_at_one() == f.eval_at_one() * g.eval_at_one());
    }
}

TEST_CASE("tpoly handles coefficients beyond 64 bits") {
    TPoly big = TPoly(1);
    TPoly base = TPoly(3) + TPoly::t_power(1);
    for (int i = 0; i < 50; ++i) big = big * base;
    BigInt three_pow_50("717897987691852588770249");
    CHECK(big.coeff(0) == three_pow_50);
    CHECK(big.coeff(50) == 1);
}
