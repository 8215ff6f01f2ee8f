#pragma once

// Block-level structure of the atypical blocks: ext-quivers, Ext^1
// dimensions, radical layers of projective covers, the cohomology table of
// the line bundles O_lambda on G/B (distinguished Borel), translation-functor
// weight maps between neighbouring blocks, and the path-algebra relations.
//
// Everything here is local in c: a quiver vertex only talks to its chain
// neighbours, so infinite quivers are materialized on a caller-chosen window
// [window_low(block, c_hi), c_hi] (A-infinity blocks use [-c_hi, c_hi]).

#include <string>
#include <utility>
#include <vector>

#include "fg/blocks.hpp"
#include "fg/weightspace.hpp"

namespace fg {

enum class QuiverShape { A_inf, D_inf };
std::string shape_name(QuiverShape s);  // "A_inf" / "D_inf"
QuiverShape shape_of(const BlockId& block);

// Lower end of the c-window for a block.
Rational window_low(const BlockId& block, const Rational& c_hi);

struct QuiverEdge {
    BlockWeight u, v;  // u.c < v.c
    int ext_dim = 1;
};

struct BlockQuiver {
    BlockId block;
    Rational c_hi;
    QuiverShape shape = QuiverShape::D_inf;
    std::vector<BlockWeight> vertices;  // ascending in c
    std::vector<QuiverEdge> edges;      // sorted by (u.c, v.c)

    // Degree inside the window (vertices at the window edge lose a neighbour).
    int degree(const BlockWeight& v) const;
};

BlockQuiver build_quiver(const BlockId& block, const Rational& c_hi);

// Exact neighbours of v in the infinite quiver, ascending in c.
std::vector<BlockWeight> quiver_neighbors(const BlockWeight& v);
// The next vertex of the chain on the side away from lambda0 (none for
// lambda1 / lambda2).  For lambda0 of a D-infinity block this is lambda3.
std::optional<BlockWeight> away_from_branch(const BlockWeight& v);
// 1 if u, v adjacent, else 0.  Throws UsageError for weights of different
// blocks.
int ext_dim(const BlockWeight& u, const BlockWeight& v);

struct ProjectiveStructure {
    BlockWeight vertex;
    std::vector<BlockWeight> top, middle, socle;

    // [P_lambda : L_mu] read off the layers.
    int multiplicity(const BlockWeight& mu) const;
};

ProjectiveStructure projective(const BlockWeight& v);

// Simple constituents of H^0 and H^1 of O_lambda (higher groups vanish).
struct BWBRow {
    BlockWeight weight;
    std::vector<BlockWeight> h0, h1;
    std::string citation;
};

struct BWBTable {
    BlockId block;
    Rational c_hi;
    std::vector<BWBRow> rows;
};

BWBRow bwb_row(const BlockWeight& v);
BWBTable bwb_table(const BlockId& block, const Rational& c_hi);
// ch(H0) - ch(H1) == eps(lambda), compared as even-part decompositions built
// from the direct (BLM / BLSM / pair-sum) characters.
bool bwb_euler_check(const BWBRow& row);

// [P_lambda : L_mu] = sum_nu [H0(nu) : L_lambda] * ([H0(nu) : L_mu] - [H1(nu) : L_mu]),
// with the rows of bwb_table as the standard filtration data.
int bgg_multiplicity(const BlockWeight& lambda, const BlockWeight& mu);

// Translation functor T = (- (x) g)^{target} at the level of highest weights.
struct TranslationPair {
    BlockWeight source, target;
    Weight gamma;                          // target.lambda - source.lambda
    std::vector<BlockWeight> alternatives;  // other dominant lambda + root in the target block
    std::string citation;                   // non-empty when a choice was made
};

struct TranslationMap {
    BlockId source, target;
    Rational c_hi;
    std::vector<TranslationPair> pairs;  // ascending in source c
};

// (a,b) -> (a+1,b+1) for F4, a -> a+2 for G3.
BlockId translation_target(const BlockId& source);
// Dominant weights lambda + gamma (gamma a root) of the target block, sorted
// by |c'| then c'.
std::vector<std::pair<BlockWeight, Weight>> translation_candidates(const BlockWeight& lambda, const BlockId& target);
// True at the vertices where the case analysis expects two candidates:
// c = a + 1/2 (symmetric F4); c = -(t1 + 1/2) and c = t2 + 1/2 (other F4
// blocks: delta-coefficient t1 + 1/2 on I5..I8, t2 + 1/2 on I1);
// c = 3a/2 + 1 and 3a/2 + 2 (G3).
bool is_documented_ambiguity(const BlockWeight& lambda);
// Throws ConsistencyError (with the witness) if a vertex has no candidate or
// an undocumented vertex has several.
TranslationMap translation_map(const BlockId& source, const Rational& c_hi);

struct BijectionReport {
    bool injective = true;
    bool surjective = true;
    std::vector<std::string> witnesses;
};
// Injectivity on the whole window; surjectivity onto the target weights with
// c' in [window_low(target, inner), inner].
BijectionReport check_bijection(const TranslationMap& map, const Rational& inner);

struct BlockBijection {
    BlockId from, to;
    std::vector<std::pair<BlockWeight, BlockWeight>> pairs;  // ascending in from-c
};

// Composite of translation maps between two blocks of the same family
// (both symmetric F4, both F4 with equal a-b, or both G3).  Covers the
// from-block weights with c in its window for c_hi.
BlockBijection block_equivalence(const BlockId& b1, const BlockId& b2, const Rational& c_hi);

// Path-algebra presentation.  Paths compose right to left: "x y" means
// first y, then x.
struct Arrow {
    std::string name;  // "d_3^+"
    BlockWeight source, target;
};

struct Relation {
    std::string text;                 // "d_1^- d_2^+ = 0"
    std::vector<std::string> paths;   // the length-2 words occurring in `text`
    bool composable = true;           // every word is a path, and the words of
                                      // an equation share source and target
};

struct RelationSet {
    BlockId block;
    QuiverShape shape = QuiverShape::D_inf;
    std::vector<std::string> families;  // the relation families as stated
    std::vector<std::pair<std::string, Rational>> vertex_labels;  // "lambda_3" -> c
    std::vector<Arrow> arrows;
    std::vector<Relation> relations;  // instances inside the window
};

RelationSet emit_relations(const BlockId& block, const Rational& c_hi);
// Every arrow name used by a relation belongs to the alphabet.
bool relations_closed(const RelationSet& rs);

}  // namespace fg
