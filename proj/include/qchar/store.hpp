#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "qchar/standard.hpp"
#include "qchar/tpoly.hpp"
#include "qchar/yring.hpp"

namespace qchar {

/// Field order in emitted objects is fixed so that equal values always
/// serialize to identical bytes.
using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Canonical JSON forms.  Coefficients are emitted as plain integers when
// they fit in 64 bits and as decimal strings otherwise; readers accept
// both.

Json tpoly_to_json(const TPoly& p);
TPoly tpoly_from_json(const Json& j);

/// {"w":[[node,shift,exp]...], "v":[[node,shift,exp]...]}
Json monomial_to_json(const VWMonomial& m);
VWMonomial monomial_from_json(const Json& j, SpectralSpec spec);

/// [[node,shift,exp]...]
Json y_monomial_to_json(const YMonomial& m);
YMonomial y_monomial_from_json(const Json& j, SpectralSpec spec);

/// [{"node":i,"shift":n,"mult":k}...]
Json drinfeld_to_json(const DrinfeldPoly& P);

/// {"format_version":1,"cartan":...,"epsilon_order":...,"kind":...,
///  "drinfeld":[...],"terms":[{"w":...,"v":...,"coeff":...}...]}
Json character_payload(const std::string& cartan, int epsilon_order,
                       const std::string& kind, const Json& drinfeld,
                       const Character& x);
Character character_from_payload(const Json& payload);

/// Same framing with "y" term keys for characters in the Y variables.
Json y_character_payload(const std::string& cartan, int epsilon_order,
                         const std::string& kind, const Json& drinfeld,
                         const YCharacter& x);
YCharacter y_character_from_payload(const Json& payload);

/// FNV-1a over the raw bytes; used for checksums and file names.
std::uint64_t fnv1a(const std::string& bytes);

// ---------------------------------------------------------------------------
// On-disk cache: one JSON file per entry under a name derived from the
// key, with a checksum over the payload.  Readers validate version,
// checksum, and that the leading term has coefficient one.

struct CacheKey {
    std::string cartan;
    std::string kind;   // "fundamental" or "standard"
    std::string datum;  // root list, e.g. "1:0" or "1:0:2,2:3"
    int epsilon_order = 0;
};

class CharacterStore {
  public:
    /// Creates the directory if needed; throws IoError when impossible.
    explicit CharacterStore(std::string directory);

    const std::string& directory() const { return dir_; }
    std::string entry_path(const CacheKey& key) const;

    /// Absent when no entry exists; CorruptEntry when one exists but
    /// fails validation.
    std::optional<Character> get(const CacheKey& key) const;
    void put(const CacheKey& key, const Character& x) const;

  private:
    std::string dir_;
};

/// Process-wide cache location: an explicit setting wins over the
/// QCHAR_CACHE_DIR environment variable; empty string clears the
/// setting.
void set_cache_directory(const std::string& dir);
std::optional<std::string> cache_directory();

/// A store at cache_directory(), or absent when none is configured.
std::optional<CharacterStore> open_default_store();

}  // namespace qchar
