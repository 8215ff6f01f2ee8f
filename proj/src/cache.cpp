#include "fg/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "fg/errors.hpp"
#include "fg/json_io.hpp"

namespace fg {

namespace fs = std::filesystem;

CharacterCache::CharacterCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path CharacterCache::default_directory() {
    if (const char* env = std::getenv("FG_CACHE_DIR"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "fg";
    if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "fg";
    return fs::temp_directory_path() / "fg-cache";
}

std::string CharacterCache::key(const Weight& lambda, const std::string& method, bool with_terms) {
    const Weight lr = lambda + root_system(lambda.algebra()).rho;
    std::ostringstream os;
    os << "v" << kSchemaVersion << "_" << algebra_name(lambda.algebra());
    for (auto x : lr.scaled_vector()) os << "_" << x;
    os << "_" << method << (with_terms ? "_terms" : "");
    return os.str();
}

std::optional<std::string> CharacterCache::load(const std::string& key) const {
    if (!dir_) return std::nullopt;
    std::ifstream in(*dir_ / (key + ".json"), std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void CharacterCache::store(const std::string& key, const std::string& document) const {
    if (!dir_) return;
    std::error_code ec;
    fs::create_directories(*dir_, ec);
    if (ec) return;  // an unwritable cache only costs recomputation
    std::random_device rd;
    const fs::path tmp = *dir_ / (key + ".tmp" + std::to_string(rd()));
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) return;
        out << document;
        if (!out) {
            fs::remove(tmp, ec);
            return;
        }
    }
    fs::rename(tmp, *dir_ / (key + ".json"), ec);
    if (ec) fs::remove(tmp, ec);
}

std::string compute_character_document(const Weight& lambda, const std::string& method, bool with_terms) {
    if (method == "direct") return dump(simple_character_json(simple_character(lambda), with_terms));
    if (method == "recursion") {
        const auto bw = locate(lambda);
        if (!bw) throw UsageError("--method recursion needs an atypical weight");
        return dump(simple_character_json(character_by_recursion(*bw), with_terms));
    }
    throw UsageError("unknown method '" + method + "' (direct|recursion)");
}

std::string character_document(const Weight& lambda, const std::string& method, bool with_terms,
                               const CharacterCache& cache) {
    const std::string k = CharacterCache::key(lambda, method, with_terms);
    if (auto hit = cache.load(k)) return *hit;
    std::string doc = compute_character_document(lambda, method, with_terms);
    cache.store(k, doc);
    return doc;
}

}  // namespace fg
