#include "doctest.h"

#include "qchar/cartan.hpp"
#include "qchar/errors.hpp"
#include "qchar/fm_engine.hpp"
#include "qchar/standard.hpp"
#include "qchar/yring.hpp"

using namespace qchar;

namespace {

struct Slot {
    int node, shift, w, v;
};

VWMonomial wv(SpectralSpec spec, std::initializer_list<Slot> slots) {
    VWMonomial m(spec);
    for (const auto& s : slots) {
        m.mul_w(s.node, s.shift, s.w);
        m.mul_v(s.node, s.shift, s.v);
    }
    return m;
}

YMonomial ym(std::initializer_list<std::pair<std::pair<int, int>, int>> us) {
    YMonomial y{SpectralSpec{}};
    for (const auto& [slot, e] : us) y.mul_u(slot.first, slot.second, e);
    return y;
}

}  // namespace

TEST_CASE("rank-one fundamental has two monomials") {
    auto c = make_cartan("A1");
    Character x = fundamental_character(c, 1, 0, {});
    Character want;
    add_term(want, wv({}, {{1, 0, 1, 0}}), TPoly(1));
    add_term(want, wv({}, {{1, 0, 1, 0}, {1, 1, 0, 1}}), TPoly(1));
    CHECK(x == want);
}

TEST_CASE("fundamental at a nonzero shift is the translated character") {
    auto c = make_cartan("A1");
    Character x = fundamental_character(c, 1, 5, {});
    Character want;
    add_term(want, wv({}, {{1, 5, 1, 0}}), TPoly(1));
    add_term(want, wv({}, {{1, 5, 1, 0}, {1, 6, 0, 1}}), TPoly(1));
    CHECK(x == want);
    CHECK(x == shift_by(fundamental_character(c, 1, 0, {}), 5));
}

TEST_CASE("A2 first fundamental and its Y-image") {
    auto c = make_cartan("A2");
    Character x = fundamental_character(c, 1, 0, {});
    Character want;
    add_term(want, wv({}, {{1, 0, 1, 0}}), TPoly(1));
    add_term(want, wv({}, {{1, 0, 1, 0}, {1, 1, 0, 1}}), TPoly(1));
    add_term(want, wv({}, {{1, 0, 1, 0}, {1, 1, 0, 1}, {2, 2, 0, 1}}),
             TPoly(1));
    CHECK(x == want);

    YCharacter y = project_pi(c, x);
    YCharacter want_y;
    add_term(want_y, ym({{{1, 0}, 1}}), TPoly(1));
    add_term(want_y, ym({{{1, 2}, -1}, {{2, 1}, 1}}), TPoly(1));
    add_term(want_y, ym({{{2, 3}, -1}}), TPoly(1));
    CHECK(y == want_y);
}

TEST_CASE("A3 middle node and D4 node sizes") {
    auto a3 = make_cartan("A3");
    CHECK(fundamental_character(a3, 2, 0, {}).size() == 6);
    auto d4 = make_cartan("D4");
    // Outer nodes of D4 carry the three 8-dimensional representations.
    CHECK(fundamental_character(d4, 1, 0, {}).size() == 8);
    CHECK(fundamental_character(d4, 3, 0, {}).size() == 8);
    CHECK(fundamental_character(d4, 4, 0, {}).size() == 8);
}

TEST_CASE("trivalent D4 node: 28 monomials, one with coefficient t^2+1") {
    auto d4 = make_cartan("D4");
    Character x = fundamental_character(d4, 2, 0, {});
    CHECK(x.size() == 28);
    BigInt dim = 0;
    for (const auto& [m, p] : x) dim += p.eval_at_one();
    CHECK(dim == 29);
    VWMonomial zero_weight = wv({}, {{2, 0, 1, 0},
                                     {2, 1, 0, 1},
                                     {1, 2, 0, 1},
                                     {3, 2, 0, 1},
                                     {4, 2, 0, 1},
                                     {2, 3, 0, 1}});
    auto it = x.find(zero_weight);
    REQUIRE(it != x.end());
    CHECK(it->second == TPoly::t_power(2) + TPoly(1));
}

TEST_CASE("engine accepts a doubled top and matches the star square") {
    auto c = make_cartan("A1");
    Character x = special_character(c, wv({}, {{1, 0, 2, 0}}));
    Character want;
    add_term(want, wv({}, {{1, 0, 2, 0}}), TPoly(1));
    add_term(want, wv({}, {{1, 0, 2, 0}, {1, 1, 0, 1}}),
             TPoly::t_power(2) + TPoly(1));
    add_term(want, wv({}, {{1, 0, 2, 0}, {1, 1, 0, 2}}), TPoly(1));
    CHECK(x == want);
    CHECK(x == standard_character(c, DrinfeldPoly({}, {{{1, 0}, 2}})));
}

TEST_CASE("spread-out rank-one top is rejected as non-special") {
    auto c = make_cartan("A1");
    // The true character of this module has a second dominant monomial,
    // so the single-seed engine must refuse rather than drop terms.
    CHECK_THROWS_AS(special_character(c, wv({}, {{1, 0, 1, 0}, {1, 2, 1, 0}})),
                    NotSpecial);
}

TEST_CASE("engine argument checks") {
    auto c = make_cartan("A2");
    CHECK_THROWS_AS(special_character(c, wv({}, {{1, 0, 1, 1}})),
                    ArgumentOutOfRange);  // not pure W
    CHECK_THROWS_AS(special_character(c, wv(SpectralSpec{2}, {{1, 0, 1, 0}})),
                    RootOfUnityUnsupported);
    CHECK_THROWS_AS(fundamental_character(c, 0, 0, {}), ArgumentOutOfRange);
    CHECK_THROWS_AS(fundamental_character(c, 3, 0, {}), ArgumentOutOfRange);
}

TEST_CASE("tight degree cap aborts the expansion") {
    auto c = make_cartan("A2");
    EngineOptions opts;
    opts.v_degree_cap = 1;
    CHECK_THROWS_AS(fundamental_character(c, 1, 0, {}, opts), CapExceeded);
}

TEST_CASE("fundamental characters have a unique dominant monomial") {
    for (const char* label : {"A1", "A2", "A3", "D4"}) {
        auto c = make_cartan(label);
        for (int node = 1; node <= c.rank; ++node) {
            Character x = fundamental_character(c, node, 0, {});
            int dominant = 0;
            for (const auto& [m, p] : x) {
                if (is_l_dominant(c, m)) ++dominant;
                // Coefficients live in N[t^2].
                for (const auto& [exp, coeff] : p.terms()) {
                    CHECK(exp % 2 == 0);
                    CHECK(exp >= 0);
                    CHECK(coeff > 0);
                }
            }
            CHECK(dominant == 1);
        }
    }
}

TEST_CASE("repeated calls reuse the cached table") {
    auto c = make_cartan("D4");
    Character a = fundamental_character(c, 2, 3, {});
    Character b = fundamental_character(c, 2, 3, {});
    CHECK(a == b);
    CHECK(a.size() == 28);
}

TEST_CASE("fundamental at a root of unity folds the generic character") {
    auto c = make_cartan("A1");
    SpectralSpec s1{1};
    Character x = fundamental_character(c, 1, 0, s1);
    Character want;
    add_term(want, wv(s1, {{1, 0, 1, 0}}), TPoly(1));
    add_term(want, wv(s1, {{1, 0, 1, 1}}), TPoly(1));
    CHECK(x == want);
}
