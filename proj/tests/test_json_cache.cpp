// JSON encodings (round trips, schema tag, determinism) and the character
// cache.

#include <filesystem>
#include <random>

#include <doctest.h>

#include "fg/cache.hpp"
#include "fg/category.hpp"
#include "fg/errors.hpp"
#include "fg/json_io.hpp"

using namespace fg;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        std::random_device rd;
        path = fs::temp_directory_path() / ("fg-test-" + std::to_string(rd()));
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

}  // namespace

TEST_CASE("rationals and weights round-trip") {
    for (const Rational& r : {Rational(5, 2), Rational(-3), Rational(0), Rational(-7, 2)}) {
        CHECK(rational_from_json(rational_json(r)) == r);
    }
    CHECK(rational_json(Rational(-3, 2)) == json("-3/2"));
    CHECK(rational_from_json(json(4)) == Rational(4));

    const Weight w = block_weight(BlockId::f4(1, 1), Rational(2)).lambda_rho();
    const json j = weight_json(w);
    CHECK(j["scale"] == 2);
    CHECK(j["scaled"] == json::array({6, 4, 2, 4}));
    CHECK(j["text"] == "(3,2,1|2)");
    CHECK(weight_from_json(j) == w);
    CHECK(weight_from_json(json::parse(j.dump())) == w);
}

TEST_CASE("property: characters round-trip through JSON") {
    for (const auto& bw : weights_of_block(BlockId::g3(1), Rational(-3), Rational(5))) {
        const SimpleCharacter ch = simple_character(bw.lambda);
        const json j = character_json(ch.character());
        CHECK(character_from_json(json::parse(dump(j))) == ch.character());
    }
}

TEST_CASE("documents carry the schema tag and are deterministic") {
    const BlockId b = BlockId::f4(1, 1);
    CHECK(root_system_json(root_system(AlgebraId::F4))["schema"] == kSchemaVersion);
    CHECK(quiver_json(build_quiver(b, Rational(4)))["schema"] == kSchemaVersion);
    CHECK(bwb_json(bwb_table(b, Rational(4)))["schema"] == kSchemaVersion);
    CHECK(translation_json(translation_map(b, Rational(4)))["schema"] == kSchemaVersion);
    CHECK(relations_json(emit_relations(b, Rational(4)))["schema"] == kSchemaVersion);

    const Weight l = block_weight(b, Rational(5, 2)).lambda;
    const std::string a = compute_character_document(l, "direct", true);
    const std::string c = compute_character_document(l, "direct", true);
    CHECK(a == c);
    const json j = json::parse(a);
    CHECK(j["schema"] == 1);
    CHECK(j["sdim"] == 2);
    CHECK(j["method"] == "direct_BLM");
    CHECK(j.contains("character"));
    CHECK_FALSE(json::parse(compute_character_document(l, "direct", false)).contains("character"));
    // direct and recursion differ only in the method tag
    json r = json::parse(compute_character_document(l, "recursion", true));
    CHECK(r["method"] == "recursion");
    r["method"] = j["method"];
    CHECK(r == j);

    CHECK_THROWS_AS(compute_character_document(l, "magic", true), UsageError);
}

TEST_CASE("cache keys") {
    const Weight l = block_weight(BlockId::f4(1, 1), Rational(2)).lambda;
    CHECK(CharacterCache::key(l, "direct", true) == "v1_F4_6_4_2_4_direct_terms");
    CHECK(CharacterCache::key(l, "recursion", false) == "v1_F4_6_4_2_4_recursion");
}

TEST_CASE("cache transparency and atomic writes") {
    TempDir dir;
    const CharacterCache cache(dir.path);
    const Weight l = block_weight(BlockId::g3(1), Rational(9, 2)).lambda;
    const std::string fresh = compute_character_document(l, "direct", true);
    CHECK(character_document(l, "direct", true, cache) == fresh);  // cold
    const std::string key = CharacterCache::key(l, "direct", true);
    CHECK(fs::exists(dir.path / (key + ".json")));
    CHECK(character_document(l, "direct", true, cache) == fresh);  // warm
    // no temporary files are left behind
    int files = 0;
    for (const auto& e : fs::directory_iterator(dir.path)) {
        ++files;
        CHECK(e.path().extension() == ".json");
    }
    CHECK(files == 1);

    const CharacterCache disabled;
    CHECK_FALSE(disabled.enabled());
    CHECK(character_document(l, "direct", true, disabled) == fresh);
    CHECK_FALSE(disabled.load(key));
}
