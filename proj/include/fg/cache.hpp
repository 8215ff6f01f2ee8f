#pragma once

// On-disk cache of simple-character documents: one JSON file per
// (algebra, lambda+rho, method, with-terms) under a cache directory.  Writes
// go to a temporary file in the same directory followed by rename(), so a
// reader never sees a partial document.

#include <filesystem>
#include <optional>
#include <string>

#include "fg/characters.hpp"

namespace fg {

class CharacterCache {
  public:
    // Disabled cache: every lookup misses, stores are dropped.
    CharacterCache() = default;
    explicit CharacterCache(std::filesystem::path dir);

    // Directory from FG_CACHE_DIR, else $XDG_CACHE_HOME/fg, else ~/.cache/fg.
    static std::filesystem::path default_directory();

    bool enabled() const { return dir_.has_value(); }
    const std::optional<std::filesystem::path>& directory() const { return dir_; }

    static std::string key(const Weight& lambda, const std::string& method, bool with_terms);
    std::optional<std::string> load(const std::string& key) const;
    void store(const std::string& key, const std::string& document) const;

  private:
    std::optional<std::filesystem::path> dir_;
};

// The simple-character document for lambda, through the cache.  `method` is
// "direct" or "recursion" (recursion requires an atypical weight).
std::string character_document(const Weight& lambda, const std::string& method, bool with_terms,
                               const CharacterCache& cache);
// Fresh computation, bypassing any cache.
std::string compute_character_document(const Weight& lambda, const std::string& method, bool with_terms);

}  // namespace fg
