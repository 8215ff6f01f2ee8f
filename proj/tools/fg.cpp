// fg: command-line front end of the F(4) / G(3) library.
//
//   fg rootsys dump|bases --algebra f4|g3
//   fg weyl order|orbit --algebra f4|g3 [--weight W]
//   fg blocks list|locate --algebra f4 --block 1,1 [--c-min --c-max] [--weight W]
//   fg char compute|sdim --algebra f4 (--block a,b --c C | --weight W) [--method direct|recursion]
//   fg quiver|bwb|projectives --algebra f4 --block 1,1 [--c-max C] [--relations]
//   fg translate --algebra f4 --from 1,1 [--to 3,3] [--c-max C]
//   fg verify [all|dominance|characters|quiver|translation] [--cache]
//
// Results go to standard output (JSON by default, `--format table` for a
// line-per-record view, `--format dot` for quivers).  Exit status: 0 on
// success, 1 when the library reports a mathematical inconsistency (the
// witness is printed as a JSON error document), 2 on usage errors.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>

#include "fg/blocks.hpp"
#include "fg/cache.hpp"
#include "fg/category.hpp"
#include "fg/characters.hpp"
#include "fg/errors.hpp"
#include "fg/json_io.hpp"
#include "fg/rootsystems.hpp"
#include "fg/verify.hpp"
#include "fg/weightspace.hpp"
#include "fg/weylgroup.hpp"

namespace {

using namespace fg;

struct Options {
    std::string algebra = "f4";
    std::string format = "json";
    std::string block;
    std::string weight;
    std::string c;
    std::string c_min = "-3";
    std::string c_max = "6";
    std::string method = "direct";
    std::string from, to;
    std::string suite = "all";
    std::string cache_dir;
    bool no_cache = false;
    bool no_terms = false;
    bool relations = false;
    bool verify_cache = false;
};

AlgebraId algebra_of(const Options& o) { return parse_algebra(o.algebra); }

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed) {
        if (o.format == f) return;
    }
    throw UsageError("--format " + o.format + " is not available for this command");
}

BlockId block_arg(const Options& o, const std::string& text) {
    if (text.empty()) throw UsageError("a block label is required (--block a,b for F4, --block a for G3)");
    return parse_block(algebra_of(o), text);
}

// A weight given as text "(a,b,c|d)" or as the JSON weight encoding.
Weight weight_arg(const Options& o) {
    const std::string& w = o.weight;
    if (w.empty()) throw UsageError("--weight is required");
    if (w.front() == '{') {
        try {
            return weight_from_json(json::parse(w));
        } catch (const json::exception& e) {
            throw UsageError(std::string("bad weight JSON: ") + e.what());
        }
    }
    return parse_weight(algebra_of(o), w);
}

CharacterCache cache_of(const Options& o) {
    if (o.no_cache) return CharacterCache();
    if (!o.cache_dir.empty()) return CharacterCache(o.cache_dir);
    return CharacterCache(CharacterCache::default_directory());
}

// Table views print integers without the "/1".
std::string short_text(const Rational& r) {
    return r.denominator() == 1 ? std::to_string(r.numerator()) : to_string(r);
}

std::string rational_list(const std::vector<BlockWeight>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + short_text(v[i].c);
    return s + "}";
}

std::string vertex_text(const BlockWeight& bw) {
    std::string s = "c=" + short_text(bw.c) + " " + bw.lambda_rho().to_string();
    if (bw.special != Special::None) s += " " + special_name(bw.special);
    return s;
}

// --- verbs -------------------------------------------------------------------

int cmd_rootsys(const Options& o, const std::string& what) {
    const AlgebraId a = algebra_of(o);
    require_format(o, {"json", "table"});
    const RootSystem& rs = root_system(a);
    if (what == "dump") {
        if (o.format == "json") {
            std::cout << dump(root_system_json(rs));
            return 0;
        }
        std::cout << "algebra " << algebra_name(a) << "\n";
        std::cout << "even roots " << rs.delta0.size() << ", odd roots " << rs.delta1.size() << "\n";
        for (const auto& r : rs.positive_roots()) {
            std::cout << (r.parity.value ? "odd  " : "even ") << r.weight.to_string() << (r.isotropic ? " isotropic" : "")
                      << "\n";
        }
        std::cout << "base";
        for (const auto& r : rs.base) std::cout << " " << r.weight.to_string();
        std::cout << "\nrho0 " << rs.rho0.to_string() << "\nrho1 " << rs.rho1.to_string() << "\nrho  "
                  << rs.rho.to_string() << "\n";
        return 0;
    }
    // bases: the odd-reflection orbit of the distinguished base
    const auto orbit = odd_base_orbit(a);
    json arr = json::array();
    for (const auto& st : orbit) {
        json base = json::array();
        for (const auto& r : st.base) base.push_back(root_json(r));
        arr.push_back(json{{"base", std::move(base)}, {"cartan", cartan_matrix(st.base)}});
    }
    if (o.format == "json") {
        std::cout << dump(json{{"algebra", std::string(algebra_name(a))}, {"bases", std::move(arr)}, {"schema", kSchemaVersion}});
        return 0;
    }
    for (const auto& st : orbit) {
        for (const auto& r : st.base) std::cout << r.weight.to_string() << (r.isotropic ? "* " : " ");
        std::cout << "\n";
    }
    return 0;
}

int cmd_weyl(const Options& o, const std::string& what) {
    require_format(o, {"json", "table"});
    if (what == "order") {
        std::cout << weyl_group(algebra_of(o)).elements.size() << "\n";
        return 0;
    }
    const Weight w = weight_arg(o);
    const WeylGroup& g = weyl_group(w.algebra());
    json arr = json::array();
    for (std::size_t i = 0; i < g.elements.size(); ++i) {
        const auto& e = g.elements[i];
        if (o.format == "table") {
            std::cout << i << " " << e.apply(w).to_string() << " " << e.sign() << "\n";
        } else {
            arr.push_back(json{{"index", i}, {"image", weight_json(e.apply(w))}, {"sign", e.sign()}});
        }
    }
    if (o.format == "json") std::cout << dump(json{{"weight", weight_json(w)}, {"orbit", std::move(arr)}, {"schema", kSchemaVersion}});
    return 0;
}

int cmd_blocks(const Options& o, const std::string& what) {
    require_format(o, {"json", "table"});
    if (what == "locate") {
        const Weight w = weight_arg(o);
        const auto bw = locate(w);
        if (o.format == "table") {
            std::cout << block_of(w).to_string() << (bw ? " " + vertex_text(*bw) : std::string()) << "\n";
            return 0;
        }
        json j{{"weight", weight_json(w)}, {"block", block_json(block_of(w))}, {"atypicality", atypicality(w)}};
        j["block_weight"] = bw ? block_weight_json(*bw) : json(nullptr);
        j["schema"] = kSchemaVersion;
        std::cout << dump(j);
        return 0;
    }
    const BlockId b = block_arg(o, o.block);
    const auto ws = weights_of_block(b, parse_rational(o.c_min), parse_rational(o.c_max));
    if (o.format == "table") {
        for (const auto& bw : ws) std::cout << vertex_text(bw) << " " << bw.interval << "\n";
        return 0;
    }
    json arr = json::array();
    for (const auto& bw : ws) arr.push_back(block_weight_json(bw));
    std::cout << dump(json{{"block", block_json(b)}, {"weights", std::move(arr)}, {"schema", kSchemaVersion}});
    return 0;
}

int cmd_char(const Options& o, const std::string& what) {
    require_format(o, {"json", "table"});
    std::optional<Weight> lambda;
    if (!o.weight.empty()) {
        if (!o.block.empty() || !o.c.empty()) throw UsageError("give either --weight or --block/--c, not both");
        lambda = weight_arg(o);
    } else {
        if (o.c.empty()) throw UsageError("--c is required with --block");
        lambda = block_weight(block_arg(o, o.block), parse_rational(o.c)).lambda;
    }
    const bool terms = !o.no_terms && what == "compute" && o.format == "json";
    const std::string doc = character_document(*lambda, o.method, terms, cache_of(o));
    const json j = json::parse(doc);
    if (what == "sdim") {
        std::cout << j.at("sdim").get<std::int64_t>() << "\n";
        return 0;
    }
    if (o.format == "json") {
        std::cout << doc;
        return 0;
    }
    std::cout << "lambda      " << j["lambda"]["text"].get<std::string>() << "\n";
    std::cout << "lambda+rho  " << j["lambda_rho"]["text"].get<std::string>() << "\n";
    std::cout << "method      " << j["method"].get<std::string>() << "\n";
    std::cout << "dim         " << j["dim"].get<std::int64_t>() << "\n";
    std::cout << "sdim        " << j["sdim"].get<std::int64_t>() << "\n";
    for (const auto& d : j["decomposition"]) {
        std::cout << "  L0" << d["highest_weight"]["text"].get<std::string>() << " x " << d["mult"].get<std::int64_t>() << "\n";
    }
    return 0;
}

int cmd_quiver(const Options& o) {
    const BlockId b = block_arg(o, o.block);
    const Rational hi = parse_rational(o.c_max);
    if (o.relations) {
        require_format(o, {"json", "table"});
        const RelationSet rs = emit_relations(b, hi);
        if (o.format == "json") {
            std::cout << dump(relations_json(rs));
            return 0;
        }
        for (const auto& a : rs.arrows) std::cout << a.name << ": c=" << short_text(a.source.c) << " -> c=" << short_text(a.target.c) << "\n";
        for (const auto& r : rs.relations) std::cout << r.text << (r.composable ? "" : "   [not composable]") << "\n";
        return 0;
    }
    require_format(o, {"json", "table", "dot"});
    const BlockQuiver q = build_quiver(b, hi);
    if (o.format == "json") {
        std::cout << dump(quiver_json(q));
    } else if (o.format == "dot") {
        std::cout << quiver_dot(q);
    } else {
        std::cout << "shape " << shape_name(q.shape) << "\n";
        for (const auto& e : q.edges) std::cout << short_text(e.u.c) << " -- " << short_text(e.v.c) << "\n";
    }
    return 0;
}

int cmd_bwb(const Options& o) {
    require_format(o, {"json", "table"});
    const BWBTable t = bwb_table(block_arg(o, o.block), parse_rational(o.c_max));
    if (o.format == "json") {
        std::cout << dump(bwb_json(t));
        return 0;
    }
    for (const auto& r : t.rows) {
        std::cout << vertex_text(r.weight) << "  H0=" << rational_list(r.h0) << " H1=" << rational_list(r.h1) << "\n";
    }
    return 0;
}

int cmd_projectives(const Options& o) {
    require_format(o, {"json", "table"});
    const BlockQuiver q = build_quiver(block_arg(o, o.block), parse_rational(o.c_max));
    std::vector<ProjectiveStructure> ps;
    for (const auto& v : q.vertices) ps.push_back(projective(v));
    if (o.format == "json") {
        std::cout << dump(projectives_json(ps));
        return 0;
    }
    for (const auto& p : ps) {
        std::cout << vertex_text(p.vertex) << "  " << rational_list(p.top) << " / " << rational_list(p.middle) << " / "
                  << rational_list(p.socle) << "\n";
    }
    return 0;
}

int cmd_translate(const Options& o) {
    require_format(o, {"json", "table"});
    const BlockId from = block_arg(o, o.from);
    const Rational hi = parse_rational(o.c_max);
    const BlockId next = translation_target(from);
    if (!o.to.empty() && !(block_arg(o, o.to) == next)) {
        const BlockBijection bij = block_equivalence(from, block_arg(o, o.to), hi);
        json arr = json::array();
        for (const auto& [u, v] : bij.pairs) {
            if (o.format == "table") std::cout << vertex_text(u) << "  ->  " << vertex_text(v) << "\n";
            arr.push_back(json{{"source", block_weight_json(u)}, {"target", block_weight_json(v)}});
        }
        if (o.format == "json") {
            std::cout << dump(json{{"source", block_json(bij.from)}, {"target", block_json(bij.to)}, {"pairs", std::move(arr)},
                                   {"schema", kSchemaVersion}});
        }
        return 0;
    }
    const TranslationMap m = translation_map(from, hi);
    if (o.format == "json") {
        std::cout << dump(translation_json(m));
        return 0;
    }
    for (const auto& p : m.pairs) {
        std::cout << vertex_text(p.source) << "  ->  " << vertex_text(p.target) << "   gamma " << p.gamma.to_string() << "\n";
    }
    return 0;
}

int cmd_verify(const Options& o) {
    const auto t0 = std::chrono::steady_clock::now();
    Report r = run_verify(o.suite);
    if (o.verify_cache) {
        if (o.no_cache) {
            // Exercise the cache anyway, in a throw-away directory.
            const auto dir = std::filesystem::temp_directory_path() / ("fg-verify-cache-" + std::to_string(::getpid()));
            r.checks.push_back(cache_transparency(CharacterCache(dir)));
            std::error_code ec;
            std::filesystem::remove_all(dir, ec);
        } else {
            r.checks.push_back(cache_transparency(cache_of(o)));
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << r.text();
    std::ostringstream tail;
    tail.precision(2);
    tail << std::fixed << secs;
    std::cout << "elapsed " << tail.str() << " s\n";
    return r.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Blocks, characters and category-level data for the Lie superalgebras F(4) and G(3)"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;

    app.add_option("--cache-dir", o.cache_dir, "character cache directory (default: $FG_CACHE_DIR, else per-user cache)");
    app.add_flag("--no-cache", o.no_cache, "bypass the character cache");
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "table", "dot"}));
    app.add_option("--algebra", o.algebra, "f4 or g3")->check(CLI::IsMember({"f4", "g3", "F4", "G3"}));

    std::string action;
    auto* rootsys = app.add_subcommand("rootsys", "root system data");
    rootsys->add_option("action", action, "dump | bases")->required()->check(CLI::IsMember({"dump", "bases"}));

    auto* weyl = app.add_subcommand("weyl", "Weyl group of the even part");
    weyl->add_option("action", action, "order | orbit")->required()->check(CLI::IsMember({"order", "orbit"}));
    weyl->add_option("--weight", o.weight, "weight as (a,b,c|d) text or weight JSON");

    auto* blocks = app.add_subcommand("blocks", "atypical block parametrization");
    blocks->add_option("action", action, "list | locate")->required()->check(CLI::IsMember({"list", "locate"}));
    blocks->add_option("--block", o.block, "block label: a,b (F4) or a (G3)");
    blocks->add_option("--c-min", o.c_min, "lower end of the c-window");
    blocks->add_option("--c-max", o.c_max, "upper end of the c-window");
    blocks->add_option("--weight", o.weight, "weight to locate");

    auto* chr = app.add_subcommand("char", "simple characters");
    chr->add_option("action", action, "compute | sdim")->required()->check(CLI::IsMember({"compute", "sdim"}));
    chr->add_option("--block", o.block, "block label");
    chr->add_option("--c", o.c, "parameter c of the block weight");
    chr->add_option("--weight", o.weight, "highest weight instead of --block/--c");
    chr->add_option("--method", o.method, "direct | recursion")->check(CLI::IsMember({"direct", "recursion"}));
    chr->add_flag("--no-terms", o.no_terms, "omit the materialized character from the JSON");

    auto* quiver = app.add_subcommand("quiver", "Ext-quiver of a block");
    quiver->add_option("--block", o.block, "block label")->required();
    quiver->add_option("--c-max", o.c_max, "upper end of the c-window");
    quiver->add_flag("--relations", o.relations, "emit the path-algebra relations instead");

    auto* bwb = app.add_subcommand("bwb", "cohomology of line bundles on G/B");
    bwb->add_option("--block", o.block, "block label")->required();
    bwb->add_option("--c-max", o.c_max, "upper end of the c-window");

    auto* proj = app.add_subcommand("projectives", "radical layers of projective covers");
    proj->add_option("--block", o.block, "block label")->required();
    proj->add_option("--c-max", o.c_max, "upper end of the c-window");

    auto* translate = app.add_subcommand("translate", "translation functor on highest weights");
    translate->add_option("--from", o.from, "source block")->required();
    translate->add_option("--to", o.to, "target block (default: the neighbouring block)");
    translate->add_option("--c-max", o.c_max, "upper end of the c-window");

    auto* verify = app.add_subcommand("verify", "cross-validation suites");
    verify->add_option("suite", o.suite, "all | dominance | characters | quiver | translation")
        ->check(CLI::IsMember({"all", "dominance", "characters", "quiver", "translation"}));
    verify->add_flag("--cache", o.verify_cache, "also check cache transparency");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*rootsys) return cmd_rootsys(o, action);
        if (*weyl) return cmd_weyl(o, action);
        if (*blocks) return cmd_blocks(o, action);
        if (*chr) return cmd_char(o, action);
        if (*quiver) return cmd_quiver(o);
        if (*bwb) return cmd_bwb(o);
        if (*proj) return cmd_projectives(o);
        if (*translate) return cmd_translate(o);
        if (*verify) return cmd_verify(o);
    } catch (const UsageError& e) {
        std::cerr << "fg: " << e.what() << "\n";
        return 2;
    } catch (const ConsistencyError& e) {
        std::cout << dump(json{{"error", "consistency"}, {"witness", e.what()}, {"schema", kSchemaVersion}});
        std::cerr << "fg: consistency failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
