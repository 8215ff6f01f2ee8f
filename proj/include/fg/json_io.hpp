#pragma once

// JSON documents for every library object.  Conventions: rationals are
// "p/q" strings, weights are doubled integer vectors with "scale": 2, term
// lists are sorted, object keys are sorted (nlohmann::json's default map),
// and every top-level document carries "schema": 1.  Identical inputs give
// byte-identical dumps.

#include <string>

#include <nlohmann/json.hpp>

#include "fg/blocks.hpp"
#include "fg/category.hpp"
#include "fg/characters.hpp"
#include "fg/rootsystems.hpp"
#include "fg/weightspace.hpp"

namespace fg {

using json = nlohmann::json;

constexpr int kSchemaVersion = 1;

json rational_json(const Rational& r);
Rational rational_from_json(const json& j);

// {"algebra": "F4", "scaled": [..], "scale": 2, "text": "(..)"}
json weight_json(const Weight& w);
Weight weight_from_json(const json& j);

// {"algebra": "F4", "terms": [{"exp": [..], "coeff": n}, ..]}, exponents doubled.
json character_json(const FormalCharacter& ch);
FormalCharacter character_from_json(const json& j);

json decomposition_json(AlgebraId algebra, const G0Decomposition& d);
json block_json(const BlockId& b);
json block_weight_json(const BlockWeight& bw);
json root_json(const Root& r);

// Top-level documents (carry "schema").
json root_system_json(const RootSystem& rs);
// `with_terms` adds the materialized formal character.
json simple_character_json(const SimpleCharacter& ch, bool with_terms);
json quiver_json(const BlockQuiver& q);
std::string quiver_dot(const BlockQuiver& q);
json bwb_json(const BWBTable& t);
json projectives_json(const std::vector<ProjectiveStructure>& ps);
json translation_json(const TranslationMap& m);
json relations_json(const RelationSet& rs);

// Stable text form: dump(2) plus a trailing newline.
std::string dump(const json& j);

}  // namespace fg
