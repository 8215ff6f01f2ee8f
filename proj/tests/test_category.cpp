// Quivers, projective covers, cohomology tables, translation maps and
// relations.

#include <algorithm>

#include <doctest.h>

#include "fg/category.hpp"
#include "fg/characters.hpp"
#include "fg/errors.hpp"

using namespace fg;

namespace {

BlockWeight bw(const BlockId& b, Rational c) { return block_weight(b, c); }

std::vector<Rational> cs(const std::vector<BlockWeight>& v) {
    std::vector<Rational> out;
    for (const auto& w : v) out.push_back(w.c);
    return out;
}

std::vector<BlockId> blocks() {
    return {BlockId::f4(1, 1), BlockId::f4(2, 2), BlockId::f4(4, 1), BlockId::f4(5, 2), BlockId::g3(1), BlockId::g3(3)};
}

}  // namespace

TEST_CASE("quiver shapes") {
    const BlockQuiver q = build_quiver(BlockId::f4(1, 1), Rational(4));
    CHECK(q.shape == QuiverShape::D_inf);
    const BlockWeight l0 = bw(BlockId::f4(1, 1), Rational(2));
    CHECK(q.degree(l0) == 3);
    CHECK(q.degree(bw(BlockId::f4(1, 1), Rational(-3, 2))) == 1);
    CHECK(q.degree(bw(BlockId::f4(1, 1), Rational(3, 2))) == 1);
    CHECK(cs(quiver_neighbors(bw(BlockId::f4(1, 1), Rational(-3, 2)))) == std::vector<Rational>{Rational(2)});

    const BlockQuiver a = build_quiver(BlockId::f4(4, 1), Rational(4));
    CHECK(a.shape == QuiverShape::A_inf);
    for (const auto& v : a.vertices) CHECK(a.degree(v) <= 2);

    CHECK(build_quiver(BlockId::g3(1), Rational(11, 2)).shape == QuiverShape::D_inf);
    CHECK(shape_name(QuiverShape::A_inf) == "A_inf");
}

TEST_CASE("Ext^1 dimensions") {
    const BlockId b = BlockId::f4(1, 1);
    CHECK(ext_dim(bw(b, Rational(2)), bw(b, Rational(-3, 2))) == 1);
    CHECK(ext_dim(bw(b, Rational(-3, 2)), bw(b, Rational(3, 2))) == 0);
    CHECK(ext_dim(bw(b, Rational(3)), bw(b, Rational(7, 2))) == 1);
    CHECK(ext_dim(bw(b, Rational(3)), bw(b, Rational(4))) == 0);
    CHECK_THROWS_AS(ext_dim(bw(b, Rational(2)), bw(BlockId::f4(2, 2), Rational(3, 2))), UsageError);
}

TEST_CASE("projective covers") {
    const BlockId b = BlockId::f4(1, 1);
    const ProjectiveStructure p1 = projective(bw(b, Rational(-3, 2)));
    CHECK(cs(p1.top) == std::vector<Rational>{Rational(-3, 2)});
    CHECK(cs(p1.middle) == std::vector<Rational>{Rational(2)});
    CHECK(cs(p1.socle) == std::vector<Rational>{Rational(-3, 2)});
    const ProjectiveStructure p0 = projective(bw(b, Rational(2)));
    CHECK(cs(p0.middle) == std::vector<Rational>{Rational(-3, 2), Rational(3, 2), Rational(5, 2)});
    const ProjectiveStructure p4 = projective(bw(b, Rational(4)));
    CHECK(cs(p4.middle) == std::vector<Rational>{Rational(7, 2), Rational(9, 2)});
    CHECK(p4.multiplicity(bw(b, Rational(4))) == 2);
    CHECK(p4.multiplicity(bw(b, Rational(9, 2))) == 1);
    CHECK(p4.multiplicity(bw(b, Rational(5))) == 0);
    // A-infinity lambda0
    const ProjectiveStructure a0 = projective(bw(BlockId::f4(4, 1), Rational(0)));
    CHECK(cs(a0.middle) == std::vector<Rational>{Rational(-3, 2), Rational(1, 2)});
}

TEST_CASE("cohomology tables") {
    const BlockId b = BlockId::f4(1, 1);
    const BWBRow r1 = bwb_row(bw(b, Rational(-3, 2)));
    CHECK(cs(r1.h0) == std::vector<Rational>{Rational(-3, 2)});
    CHECK(cs(r1.h1) == std::vector<Rational>{Rational(3, 2)});
    const BWBRow r3 = bwb_row(bw(b, Rational(5, 2)));
    auto h0 = cs(r3.h0);
    std::sort(h0.begin(), h0.end());
    CHECK(h0 == std::vector<Rational>{Rational(2), Rational(5, 2)});
    CHECK(r3.h1.empty());
    const BWBRow a0 = bwb_row(bw(BlockId::f4(4, 1), Rational(0)));
    CHECK(cs(a0.h0) == std::vector<Rational>{Rational(0)});
    CHECK(cs(a0.h1) == std::vector<Rational>{Rational(0)});
    CHECK(specialize_dim(euler_char(bw(BlockId::f4(4, 1), Rational(0)).lambda)) == 0);
}

TEST_CASE("translation maps") {
    const TranslationMap m = translation_map(BlockId::f4(1, 1), Rational(4));
    CHECK(m.target == BlockId::f4(2, 2));
    const auto it = std::find_if(m.pairs.begin(), m.pairs.end(), [](const TranslationPair& p) { return p.source.c == Rational(2); });
    REQUIRE(it != m.pairs.end());
    const Rational h(1, 2);
    CHECK(it->gamma == Weight(AlgebraId::F4, std::vector<Rational>{h, -h, -h, -h}));
    CHECK(it->target.special == Special::L0);
    CHECK(translation_target(BlockId::g3(1)) == BlockId::g3(3));
    CHECK(translation_target(BlockId::f4(4, 1)) == BlockId::f4(5, 2));
}

TEST_CASE("relations") {
    const RelationSet d = emit_relations(BlockId::f4(1, 1), Rational(4));
    CHECK(relations_closed(d));
    CHECK(std::find(d.families.begin(), d.families.end(), "d_1^+ d_1^- = d_2^+ d_2^- = d_0^- d_0^+") != d.families.end());
    const RelationSet a = emit_relations(BlockId::f4(4, 1), Rational(4));
    CHECK(a.families.size() == 3);
    CHECK(relations_closed(a));
}

TEST_CASE("property: Ext is symmetric, at most 1, and local") {
    for (const auto& b : blocks()) {
        const BlockQuiver q = build_quiver(b, Rational(5));
        for (const auto& u : q.vertices) {
            for (const auto& v : q.vertices) {
                CHECK(ext_dim(u, v) == ext_dim(v, u));
                CHECK(ext_dim(u, v) <= 1);
            }
            CHECK(ext_dim(u, u) == 0);
        }
    }
}

TEST_CASE("property: BGG reciprocity and the Euler identity of every BWB row") {
    for (const auto& b : blocks()) {
        const BlockQuiver q = build_quiver(b, Rational(4));
        for (const auto& v : q.vertices) {
            CHECK(bwb_euler_check(bwb_row(v)));
            const ProjectiveStructure p = projective(v);
            for (const auto& mu : q.vertices) {
                const int m = p.multiplicity(mu);
                CHECK(m >= 0);
                CHECK(m <= 2);
                CHECK(bgg_multiplicity(v, mu) == m);
            }
        }
    }
}

TEST_CASE("property: translation maps are bijections on the window") {
    for (const auto& b : {BlockId::f4(1, 1), BlockId::f4(2, 2), BlockId::f4(4, 1), BlockId::g3(1), BlockId::g3(3)}) {
        const TranslationMap m = translation_map(b, Rational(6));
        const BijectionReport r = check_bijection(m, Rational(4));
        CHECK(r.injective);
        CHECK(r.surjective);
        for (const auto& p : m.pairs) {
            CHECK(p.target.lambda - p.source.lambda == p.gamma);
            CHECK(root_system(b.algebra).is_root(p.gamma));
            CHECK(p.alternatives.empty() == !is_documented_ambiguity(p.source));
        }
    }
}
