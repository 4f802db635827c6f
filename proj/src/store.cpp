#include "qchar/store.hpp"

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>

#include "qchar/errors.hpp"

namespace qchar {

namespace {

constexpr int kFormatVersion = 1;
constexpr long long kInt64Max = 9223372036854775807LL;

Json coeff_to_json(const BigInt& n) {
    if (n <= kInt64Max && n >= -kInt64Max - 1)
        return static_cast<std::int64_t>(n);
    return n.str();
}

BigInt coeff_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw CorruptEntry("coefficient is neither integer nor decimal string");
}

Json exponent_triples(auto&& entries, auto&& pick) {
    Json out = Json::array();
    for (const auto& e : entries) {
        int exp = pick(e);
        if (exp != 0) out.push_back(Json::array({e.node, e.shift, exp}));
    }
    return out;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw CorruptEntry(what);
}

Json frame(const std::string& cartan, int epsilon_order,
           const std::string& kind, const Json& drinfeld) {
    Json payload;
    payload["format_version"] = kFormatVersion;
    payload["cartan"] = cartan;
    payload["epsilon_order"] = epsilon_order;
    payload["kind"] = kind;
    payload["drinfeld"] = drinfeld;
    return payload;
}

SpectralSpec payload_spec(const Json& payload) {
    require(payload.is_object(), "payload is not an object");
    require(payload.contains("format_version") &&
                payload["format_version"].is_number_integer() &&
                payload["format_version"].get<int>() == kFormatVersion,
            "unsupported format version");
    require(payload.contains("epsilon_order") &&
                payload["epsilon_order"].is_number_integer(),
            "missing epsilon_order");
    int order = payload["epsilon_order"].get<int>();
    require(order >= 0, "negative epsilon_order");
    return SpectralSpec{order};
}

}  // namespace

Json tpoly_to_json(const TPoly& p) {
    Json out = Json::array();
    for (const auto& [exp, coeff] : p.terms())
        out.push_back(Json::array({Json(exp), coeff_to_json(coeff)}));
    return out;
}

TPoly tpoly_from_json(const Json& j) {
    require(j.is_array(), "coefficient polynomial is not an array");
    TPoly p;
    for (const auto& term : j) {
        require(term.is_array() && term.size() == 2 &&
                    term[0].is_number_integer(),
                "bad polynomial term");
        p += TPoly::term(coeff_from_json(term[1]), term[0].get<int>());
    }
    return p;
}

Json monomial_to_json(const VWMonomial& m) {
    Json out;
    out["w"] = exponent_triples(m.entries(), [](const auto& e) { return e.w; });
    out["v"] = exponent_triples(m.entries(), [](const auto& e) { return e.v; });
    return out;
}

VWMonomial monomial_from_json(const Json& j, SpectralSpec spec) {
    require(j.is_object() && j.contains("w") && j.contains("v"),
            "monomial needs w and v arrays");
    VWMonomial m(spec);
    for (const char* part : {"w", "v"}) {
        require(j[part].is_array(), "monomial part is not an array");
        for (const auto& triple : j[part]) {
            require(triple.is_array() && triple.size() == 3 &&
                        triple[0].is_number_integer() &&
                        triple[1].is_number_integer() &&
                        triple[2].is_number_integer(),
                    "bad exponent triple");
            int node = triple[0].get<int>();
            int shift = triple[1].get<int>();
            int exp = triple[2].get<int>();
            if (part[0] == 'w')
                m.mul_w(node, shift, exp);
            else
                m.mul_v(node, shift, exp);
        }
    }
    return m;
}

Json y_monomial_to_json(const YMonomial& m) {
    return exponent_triples(m.entries(), [](const auto& e) { return e.u; });
}

YMonomial y_monomial_from_json(const Json& j, SpectralSpec spec) {
    require(j.is_array(), "Y-monomial is not an array");
    YMonomial m(spec);
    for (const auto& triple : j) {
        require(triple.is_array() && triple.size() == 3 &&
                    triple[0].is_number_integer() &&
                    triple[1].is_number_integer() &&
                    triple[2].is_number_integer(),
                "bad exponent triple");
        m.mul_u(triple[0].get<int>(), triple[1].get<int>(),
                triple[2].get<int>());
    }
    return m;
}

Json drinfeld_to_json(const DrinfeldPoly& P) {
    Json out = Json::array();
    for (const auto& [slot, mult] : P.roots()) {
        Json root;
        root["node"] = slot.first;
        root["shift"] = slot.second;
        root["mult"] = mult;
        out.push_back(root);
    }
    return out;
}

Json character_payload(const std::string& cartan, int epsilon_order,
                       const std::string& kind, const Json& drinfeld,
                       const Character& x) {
    Json payload = frame(cartan, epsilon_order, kind, drinfeld);
    Json terms = Json::array();
    for (const auto& [m, p] : x) {
        Json term = monomial_to_json(m);
        term["coeff"] = tpoly_to_json(p);
        terms.push_back(std::move(term));
    }
    payload["terms"] = std::move(terms);
    return payload;
}

Character character_from_payload(const Json& payload) {
    SpectralSpec spec = payload_spec(payload);
    require(payload.contains("terms") && payload["terms"].is_array(),
            "missing terms array");
    Character x;
    for (const auto& term : payload["terms"]) {
        require(term.is_object() && term.contains("coeff"),
                "term without coefficient");
        add_term(x, monomial_from_json(term, spec),
                 tpoly_from_json(term["coeff"]));
    }
    return x;
}

Json y_character_payload(const std::string& cartan, int epsilon_order,
                         const std::string& kind, const Json& drinfeld,
                         const YCharacter& x) {
    Json payload = frame(cartan, epsilon_order, kind, drinfeld);
    Json terms = Json::array();
    for (const auto& [m, p] : x) {
        Json term;
        term["y"] = y_monomial_to_json(m);
        term["coeff"] = tpoly_to_json(p);
        terms.push_back(std::move(term));
    }
    payload["terms"] = std::move(terms);
    return payload;
}

YCharacter y_character_from_payload(const Json& payload) {
    SpectralSpec spec = payload_spec(payload);
    require(payload.contains("terms") && payload["terms"].is_array(),
            "missing terms array");
    YCharacter x;
    for (const auto& term : payload["terms"]) {
        require(term.is_object() && term.contains("y") &&
                    term.contains("coeff"),
                "term without y part or coefficient");
        add_term(x, y_monomial_from_json(term["y"], spec),
                 tpoly_from_json(term["coeff"]));
    }
    return x;
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    return h;
}

// ---------------------------------------------------------------------------

CharacterStore::CharacterStore(std::string directory)
    : dir_(std::move(directory)) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec || !std::filesystem::is_directory(dir_))
        throw IoError("cannot create cache directory " + dir_ + ": " +
                      ec.message());
}

namespace {

std::string key_string(const CacheKey& key) {
    return key.cartan + "|" + key.kind + "|" + key.datum + "|" +
           std::to_string(key.epsilon_order);
}

std::string hex16(std::uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) s[i] = digits[h & 0xf];
    return s;
}

}  // namespace

std::string CharacterStore::entry_path(const CacheKey& key) const {
    std::string datum = key.datum;
    for (char& ch : datum) {
        if (ch == ':') ch = '_';
        if (ch == ',') ch = '-';
        if (ch == '-') ch = 'm';
    }
    std::string name = key.cartan + "-" + key.kind + "-" + datum + "-s" +
                       std::to_string(key.epsilon_order) + "-" +
                       hex16(fnv1a(key_string(key))) + ".json";
    return (std::filesystem::path(dir_) / name).string();
}

std::optional<Character> CharacterStore::get(const CacheKey& key) const {
    const std::string path = entry_path(key);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::stringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("cannot read " + path);

    Json entry = Json::parse(buffer.str(), nullptr, false);
    if (entry.is_discarded())
        throw CorruptEntry("unparsable cache entry " + path);
    require(entry.is_object() && entry.contains("version") &&
                entry["version"].is_number_integer() &&
                entry["version"].get<int>() == kFormatVersion,
            "cache entry version mismatch in " + path);
    require(entry.contains("checksum") && entry["checksum"].is_string() &&
                entry.contains("payload"),
            "cache entry missing checksum or payload in " + path);
    if (entry["checksum"].get<std::string>() !=
        hex16(fnv1a(entry["payload"].dump())))
        throw CorruptEntry("checksum mismatch in " + path);

    Character x = character_from_payload(entry["payload"]);
    require(!x.empty(), "empty character in " + path);
    auto top = x.begin();
    for (auto it = std::next(x.begin()); it != x.end(); ++it)
        if (it->first.v_degree() < top->first.v_degree()) top = it;
    require(top->second == TPoly(1),
            "leading coefficient is not one in " + path);
    return x;
}

void CharacterStore::put(const CacheKey& key, const Character& x) const {
    SpectralSpec spec{key.epsilon_order};
    Json payload =
        character_payload(key.cartan, key.epsilon_order, key.kind,
                          drinfeld_to_json(DrinfeldPoly::parse(key.datum, spec)),
                          x);
    Json entry;
    entry["version"] = kFormatVersion;
    Json key_json;
    key_json["cartan"] = key.cartan;
    key_json["kind"] = key.kind;
    key_json["datum"] = key.datum;
    key_json["epsilon_order"] = key.epsilon_order;
    entry["key"] = std::move(key_json);
    entry["checksum"] = hex16(fnv1a(payload.dump()));
    entry["payload"] = std::move(payload);

    const std::string path = entry_path(key);
    const std::string tmp =
        path + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp + " for writing");
        out << entry.dump(1) << "\n";
        if (!out.good()) throw IoError("short write to " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError("cannot move " + tmp + " into place: " + ec.message());
}

// ---------------------------------------------------------------------------

namespace {

std::mutex dir_mutex;
std::string dir_override;

}  // namespace

void set_cache_directory(const std::string& dir) {
    std::lock_guard<std::mutex> lock(dir_mutex);
    dir_override = dir;
}

std::optional<std::string> cache_directory() {
    {
        std::lock_guard<std::mutex> lock(dir_mutex);
        if (!dir_override.empty()) return dir_override;
    }
    if (const char* env = std::getenv("QCHAR_CACHE_DIR"); env && *env)
        return std::string(env);
    return std::nullopt;
}

std::optional<CharacterStore> open_default_store() {
    auto dir = cache_directory();
    if (!dir) return std::nullopt;
    return CharacterStore(*dir);
}

}  // namespace qchar
