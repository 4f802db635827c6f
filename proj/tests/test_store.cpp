#include "doctest.h"

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qchar/cartan.hpp"
#include "qchar/errors.hpp"
#include "qchar/fm_engine.hpp"
#include "qchar/kl.hpp"
#include "qchar/store.hpp"

using namespace qchar;

namespace {

std::filesystem::path fresh_dir(const char* tag) {
    auto dir = std::filesystem::temp_directory_path() /
               ("qchar_" + std::string(tag) + "_" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    return dir;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::trunc);
    out << text;
}

}  // namespace

TEST_CASE("polynomials survive the JSON round trip") {
    TPoly p = TPoly::t_power(3) - TPoly(2) + TPoly::term(BigInt(5), -4);
    CHECK(tpoly_from_json(tpoly_to_json(p)) == p);
    CHECK(tpoly_from_json(tpoly_to_json(TPoly())) == TPoly());

    // Coefficients beyond 64 bits travel as decimal strings.
    TPoly big = TPoly::term(BigInt("717897987691852588770249"), 1);
    Json j = tpoly_to_json(big);
    REQUIRE(j.size() == 1);
    CHECK(j[0][1].is_string());
    CHECK(tpoly_from_json(j) == big);
    CHECK_THROWS_AS(tpoly_from_json(Json::object()), CorruptEntry);
}

TEST_CASE("monomials survive the JSON round trip") {
    for (int order : {0, 3}) {
        SpectralSpec spec{order};
        VWMonomial m(spec);
        m.mul_w(1, 0, 2);
        m.mul_v(2, 2, 1);
        m.mul_w(2, 1, 1);
        CHECK(monomial_from_json(monomial_to_json(m), spec) == m);

        YMonomial y(spec);
        y.mul_u(1, 0, 2);
        y.mul_u(2, 1, -1);
        CHECK(y_monomial_from_json(y_monomial_to_json(y), spec) == y);
    }
    CHECK_THROWS_AS(monomial_from_json(Json::array(), SpectralSpec{}),
                    CorruptEntry);
}

TEST_CASE("character payloads carry the full schema") {
    auto c = make_cartan("A1");
    Character x = fundamental_character(c, 1, 0, {});
    Json drinfeld = drinfeld_to_json(DrinfeldPoly::parse("1:0", {}));
    Json payload = character_payload("A1", 0, "fundamental", drinfeld, x);

    CHECK(payload["format_version"] == 1);
    CHECK(payload["cartan"] == "A1");
    CHECK(payload["epsilon_order"] == 0);
    CHECK(payload["kind"] == "fundamental");
    CHECK(payload["drinfeld"][0]["node"] == 1);
    CHECK(payload["drinfeld"][0]["mult"] == 1);
    REQUIRE(payload["terms"].size() == 2);
    CHECK(character_from_payload(payload) == x);

    // Field order and term order are fixed, so equal characters give
    // byte-identical payloads.
    Character y;
    for (auto it = x.rbegin(); it != x.rend(); ++it)
        add_term(y, it->first, it->second);
    CHECK(character_payload("A1", 0, "fundamental", drinfeld, y).dump() ==
          payload.dump());

    Json bad = payload;
    bad["format_version"] = 99;
    CHECK_THROWS_AS(character_from_payload(bad), CorruptEntry);
}

TEST_CASE("Y-character payloads round-trip simples") {
    auto c = make_cartan("A2");
    auto P = DrinfeldPoly::parse("1:0,1:2", {});
    YCharacter s = simple_character(c, P);
    Json payload =
        y_character_payload("A2", 0, "simple", drinfeld_to_json(P), s);
    CHECK(y_character_from_payload(payload) == s);
}

TEST_CASE("hash function matches its reference values") {
    CHECK(fnv1a("") == 14695981039346656037ULL);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("entries round-trip through the filesystem") {
    auto dir = fresh_dir("store");
    CharacterStore store(dir.string());
    auto c = make_cartan("A2");
    Character x = fundamental_character(c, 1, 0, {});
    CacheKey key{"A2", "fundamental", "1:0", 0};

    CHECK_FALSE(store.get(key).has_value());
    store.put(key, x);
    REQUIRE(store.get(key).has_value());
    CHECK(*store.get(key) == x);

    std::string path = store.entry_path(key);
    CHECK(std::filesystem::exists(path));
    std::string bytes = slurp(path);
    store.put(key, x);  // canonical rewrite
    CHECK(slurp(path) == bytes);

    CacheKey other{"A2", "fundamental", "2:0", 0};
    CHECK(store.entry_path(other) != path);
    CHECK_FALSE(store.get(other).has_value());

    std::filesystem::remove_all(dir);
}

TEST_CASE("validation rejects tampered entries") {
    auto dir = fresh_dir("tamper");
    CharacterStore store(dir.string());
    auto c = make_cartan("A1");
    Character x = fundamental_character(c, 1, 0, {});
    CacheKey key{"A1", "fundamental", "1:0", 0};
    store.put(key, x);
    const std::string path = store.entry_path(key);
    const std::string original = slurp(path);

    // Flip a byte inside the payload (its cartan label).
    std::string hacked = original;
    auto payload_at = hacked.find("\"payload\"");
    REQUIRE(payload_at != std::string::npos);
    auto at = hacked.find("\"A1\"", payload_at);
    REQUIRE(at != std::string::npos);
    hacked.replace(at, 4, "\"A9\"");
    spit(path, hacked);
    CHECK_THROWS_AS(store.get(key), CorruptEntry);

    // Unknown container version.
    std::string reversioned = original;
    at = reversioned.find("\"version\": 1");
    REQUIRE(at != std::string::npos);
    reversioned.replace(at, 12, "\"version\": 9");
    spit(path, reversioned);
    CHECK_THROWS_AS(store.get(key), CorruptEntry);

    // Not JSON at all.
    spit(path, "not json");
    CHECK_THROWS_AS(store.get(key), CorruptEntry);

    // A checksum-consistent entry whose top coefficient is wrong.
    Character off;
    add_term(off, x.begin()->first, TPoly::t_power(2));
    store.put(key, off);
    CHECK_THROWS_AS(store.get(key), CorruptEntry);

    std::filesystem::remove_all(dir);
}

TEST_CASE("cache directory resolution prefers the explicit setting") {
    unsetenv("QCHAR_CACHE_DIR");
    set_cache_directory("");
    CHECK_FALSE(cache_directory().has_value());

    setenv("QCHAR_CACHE_DIR", "/tmp/from-env", 1);
    CHECK(cache_directory() == std::string("/tmp/from-env"));
    set_cache_directory("/tmp/explicit");
    CHECK(cache_directory() == std::string("/tmp/explicit"));
    set_cache_directory("");
    CHECK(cache_directory() == std::string("/tmp/from-env"));
    unsetenv("QCHAR_CACHE_DIR");
    CHECK_FALSE(cache_directory().has_value());
    CHECK_FALSE(open_default_store().has_value());
}

TEST_CASE("the engine fills a configured cache directory") {
    auto dir = fresh_dir("engine");
    set_cache_directory(dir.string());
    auto c = make_cartan("A4");  // not used by any other test case
    Character x = fundamental_character(c, 2, 0, {});

    CharacterStore store(dir.string());
    CacheKey key{"A4", "fundamental", "2:0", 0};
    REQUIRE(store.get(key).has_value());
    CHECK(*store.get(key) == x);

    set_cache_directory("");
    std::filesystem::remove_all(dir);
}
