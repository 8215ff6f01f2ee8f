#include "fg/json_io.hpp"

#include <sstream>

#include "fg/errors.hpp"

namespace fg {

namespace {

std::vector<std::int64_t> exponent_vector(const Exponent& e, int rank) {
    return std::vector<std::int64_t>(e.begin(), e.begin() + rank);
}

Exponent exponent_from(const json& arr, int rank) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != rank) {
        throw UsageError("expected an exponent vector of length " + std::to_string(rank));
    }
    Exponent e{};
    for (int i = 0; i < rank; ++i) e[i] = arr[i].get<std::int32_t>();
    return e;
}

json with_schema(json j) {
    j["schema"] = kSchemaVersion;
    return j;
}

json weight_list(const std::vector<BlockWeight>& v) {
    json arr = json::array();
    for (const auto& bw : v) arr.push_back(rational_json(bw.c));
    return arr;
}

}  // namespace

json rational_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw UsageError("expected a rational \"p/q\"");
}

json weight_json(const Weight& w) {
    return json{{"algebra", std::string(algebra_name(w.algebra()))},
                {"scaled", w.scaled_vector()},
                {"scale", 2},
                {"text", w.to_string()}};
}

Weight weight_from_json(const json& j) {
    const AlgebraId a = parse_algebra(j.at("algebra").get<std::string>());
    if (j.value("scale", 2) != 2) throw UsageError("weights are serialized with scale 2");
    return Weight::from_scaled(a, exponent_from(j.at("scaled"), rank_of(a)));
}

json character_json(const FormalCharacter& ch) {
    json terms = json::array();
    for (const auto& [e, n] : ch.sorted_terms()) terms.push_back(json{{"exp", exponent_vector(e, ch.rank())}, {"coeff", n}});
    return json{{"algebra", std::string(algebra_name(ch.algebra()))}, {"terms", std::move(terms)}};
}

FormalCharacter character_from_json(const json& j) {
    const AlgebraId a = parse_algebra(j.at("algebra").get<std::string>());
    FormalCharacter ch(a);
    for (const auto& t : j.at("terms")) ch.add_term(exponent_from(t.at("exp"), rank_of(a)), t.at("coeff").get<std::int64_t>());
    return ch;
}

json decomposition_json(AlgebraId algebra, const G0Decomposition& d) {
    json arr = json::array();
    for (const auto& [e, n] : d) {
        arr.push_back(json{{"highest_weight", weight_json(Weight::from_scaled(algebra, e))}, {"mult", n}});
    }
    return arr;
}

json block_json(const BlockId& b) {
    json j{{"algebra", std::string(algebra_name(b.algebra))}, {"label", b.to_string()}, {"typical", b.typical}};
    if (!b.typical) {
        j["a"] = b.a;
        if (b.algebra == AlgebraId::F4) j["b"] = b.b;
    }
    return j;
}

json root_json(const Root& r) {
    return json{{"weight", weight_json(r.weight)}, {"parity", r.parity.value}, {"isotropic", r.isotropic}};
}

json block_weight_json(const BlockWeight& bw) {
    return json{{"block", bw.block.to_string()},
                {"c", rational_json(bw.c)},
                {"lambda", weight_json(bw.lambda)},
                {"lambda_rho", weight_json(bw.lambda_rho())},
                {"interval", bw.interval},
                {"special", special_name(bw.special)},
                {"vanishing_root", weight_json(bw.vanishing_root.weight)}};
}

json root_system_json(const RootSystem& rs) {
    auto roots = [](const std::vector<Root>& v) {
        json arr = json::array();
        for (const auto& r : v) arr.push_back(root_json(r));
        return arr;
    };
    return with_schema(json{{"algebra", std::string(algebra_name(rs.algebra))},
                            {"even_roots", roots(rs.delta0)},
                            {"odd_roots", roots(rs.delta1)},
                            {"even_positive", roots(rs.delta0_plus)},
                            {"odd_positive", roots(rs.delta1_plus)},
                            {"base", roots(rs.base)},
                            {"cartan", rs.cartan},
                            {"rho0", weight_json(rs.rho0)},
                            {"rho1", weight_json(rs.rho1)},
                            {"rho", weight_json(rs.rho)}});
}

json simple_character_json(const SimpleCharacter& ch, bool with_terms) {
    const AlgebraId a = ch.lambda.algebra();
    json j{{"lambda", weight_json(ch.lambda)},
           {"lambda_rho", weight_json(ch.lambda + root_system(a).rho)},
           {"method", method_name(ch.method)},
           {"dim", ch.dim},
           {"sdim", ch.sdim},
           {"decomposition", decomposition_json(a, ch.decomposition)}};
    j["block_weight"] = ch.block_weight ? block_weight_json(*ch.block_weight) : json(nullptr);
    if (with_terms) j["character"] = character_json(ch.character());
    return with_schema(std::move(j));
}

json quiver_json(const BlockQuiver& q) {
    json verts = json::array(), edges = json::array();
    for (const auto& v : q.vertices) verts.push_back(block_weight_json(v));
    for (const auto& e : q.edges) {
        edges.push_back(json{{"u", rational_json(e.u.c)}, {"v", rational_json(e.v.c)}, {"ext_dim", e.ext_dim}});
    }
    return with_schema(json{{"block", block_json(q.block)},
                            {"c_max", rational_json(q.c_hi)},
                            {"shape", shape_name(q.shape)},
                            {"vertices", std::move(verts)},
                            {"edges", std::move(edges)}});
}

std::string quiver_dot(const BlockQuiver& q) {
    std::ostringstream os;
    auto id = [](const BlockWeight& v) {
        const std::string c = v.c.denominator() == 1 ? std::to_string(v.c.numerator()) : to_string(v.c);
        return "\"c=" + c + "\"";
    };
    os << "graph \"" << q.block.to_string() << "\" {\n";
    os << "  label=\"" << algebra_name(q.block.algebra) << " block " << q.block.to_string() << " (" << shape_name(q.shape)
       << ")\";\n";
    for (const auto& v : q.vertices) {
        os << "  " << id(v) << " [label=\"" << (v.special != Special::None ? special_name(v.special) + "\\n" : "")
           << v.lambda_rho().to_string() << "\"];\n";
    }
    for (const auto& e : q.edges) os << "  " << id(e.u) << " -- " << id(e.v) << ";\n";
    os << "}\n";
    return os.str();
}

json bwb_json(const BWBTable& t) {
    json rows = json::array();
    for (const auto& r : t.rows) {
        rows.push_back(json{{"weight", block_weight_json(r.weight)},
                            {"H0", weight_list(r.h0)},
                            {"H1", weight_list(r.h1)},
                            {"higher", json::array()},
                            {"citation", r.citation}});
    }
    return with_schema(json{{"block", block_json(t.block)}, {"c_max", rational_json(t.c_hi)}, {"rows", std::move(rows)}});
}

json projectives_json(const std::vector<ProjectiveStructure>& ps) {
    json arr = json::array();
    for (const auto& p : ps) {
        arr.push_back(json{{"vertex", block_weight_json(p.vertex)},
                           {"layers", json::array({weight_list(p.top), weight_list(p.middle), weight_list(p.socle)})}});
    }
    json j{{"projectives", std::move(arr)}};
    if (!ps.empty()) j["block"] = block_json(ps.front().vertex.block);
    return with_schema(std::move(j));
}

json translation_json(const TranslationMap& m) {
    json pairs = json::array();
    for (const auto& p : m.pairs) {
        json alts = json::array();
        for (const auto& a : p.alternatives) alts.push_back(block_weight_json(a));
        json entry{{"source", block_weight_json(p.source)},
                   {"target", block_weight_json(p.target)},
                   {"gamma", weight_json(p.gamma)},
                   {"alternatives", std::move(alts)}};
        if (!p.citation.empty()) entry["citation"] = p.citation;
        pairs.push_back(std::move(entry));
    }
    return with_schema(json{{"source", block_json(m.source)},
                            {"target", block_json(m.target)},
                            {"c_max", rational_json(m.c_hi)},
                            {"pairs", std::move(pairs)}});
}

json relations_json(const RelationSet& rs) {
    json labels = json::array(), arrows = json::array(), rels = json::array();
    for (const auto& [name, c] : rs.vertex_labels) labels.push_back(json{{"label", name}, {"c", rational_json(c)}});
    for (const auto& a : rs.arrows) {
        arrows.push_back(json{{"name", a.name}, {"source", rational_json(a.source.c)}, {"target", rational_json(a.target.c)}});
    }
    for (const auto& r : rs.relations) rels.push_back(json{{"text", r.text}, {"paths", r.paths}, {"composable", r.composable}});
    return with_schema(json{{"block", block_json(rs.block)},
                            {"shape", shape_name(rs.shape)},
                            {"composition", "right to left: \"x y\" is y followed by x"},
                            {"families", rs.families},
                            {"vertex_labels", std::move(labels)},
                            {"arrows", std::move(arrows)},
                            {"relations", std::move(rels)}});
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace fg
