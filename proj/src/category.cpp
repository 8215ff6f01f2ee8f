#include "fg/category.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "fg/characters.hpp"
#include "fg/errors.hpp"
#include "fg/rootsystems.hpp"
#include "fg/weylgroup.hpp"

namespace fg {

namespace {

Rational R(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }
Rational abs_r(const Rational& r) { return r < Rational(0) ? -r : r; }

void require_atypical(const BlockId& b) {
    if (b.typical) throw UsageError("typical blocks have no quiver (block " + b.to_string() + ")");
}

// The next realized weight of the block strictly beyond c in direction
// `step` (+-1/2).  Excluded values sit in gaps of bounded length, so the walk
// is short; the bound only guards against a broken parametrization.
BlockWeight next_realized(const BlockId& block, const Rational& c, const Rational& step) {
    Rational x = c;
    for (int i = 0; i < 64; ++i) {
        x += step;
        if (block_weight_formula(block, x)) return block_weight(block, x);
    }
    throw ConsistencyError("no realized weight after c = " + to_string(c) + " in block " + block.to_string());
}

bool same(const BlockWeight& a, const BlockWeight& b) { return a.block == b.block && a.c == b.c; }

int count_in(const std::vector<BlockWeight>& list, const BlockWeight& v) {
    return static_cast<int>(std::count_if(list.begin(), list.end(), [&](const BlockWeight& x) { return same(x, v); }));
}

BlockWeight special_weight(const BlockId& block, Special s) {
    const SpecialValues sv = special_values(block);
    switch (s) {
        case Special::L1: return block_weight(block, *sv.lambda1);
        case Special::L2: return block_weight(block, *sv.lambda2);
        default: return block_weight(block, sv.lambda0);
    }
}

void sort_by_c(std::vector<BlockWeight>& v) {
    std::sort(v.begin(), v.end(), [](const BlockWeight& x, const BlockWeight& y) { return x.c < y.c; });
}

}  // namespace

std::string shape_name(QuiverShape s) { return s == QuiverShape::A_inf ? "A_inf" : "D_inf"; }

QuiverShape shape_of(const BlockId& block) {
    require_atypical(block);
    return block.is_d_infinity() ? QuiverShape::D_inf : QuiverShape::A_inf;
}

Rational window_low(const BlockId& block, const Rational& c_hi) {
    if (shape_of(block) == QuiverShape::A_inf) return -c_hi;
    return *special_values(block).lambda1;
}

// ---------------------------------------------------------------------------
// Quiver

std::optional<BlockWeight> away_from_branch(const BlockWeight& v) {
    require_atypical(v.block);
    if (v.special == Special::L1 || v.special == Special::L2) return std::nullopt;
    const SpecialValues sv = special_values(v.block);
    if (v.special == Special::L0) {
        if (shape_of(v.block) == QuiverShape::A_inf) return std::nullopt;  // two sides; see quiver_neighbors
        return next_realized(v.block, v.c, R(1, 2));
    }
    return next_realized(v.block, v.c, v.c > sv.lambda0 ? R(1, 2) : R(-1, 2));
}

std::vector<BlockWeight> quiver_neighbors(const BlockWeight& v) {
    require_atypical(v.block);
    std::vector<BlockWeight> out;
    const bool d_inf = shape_of(v.block) == QuiverShape::D_inf;
    if (v.special == Special::L1 || v.special == Special::L2) {
        out.push_back(special_weight(v.block, Special::L0));
    } else if (v.special == Special::L0) {
        if (d_inf) {
            out.push_back(special_weight(v.block, Special::L1));
            out.push_back(special_weight(v.block, Special::L2));
            out.push_back(next_realized(v.block, v.c, R(1, 2)));
        } else {
            out.push_back(next_realized(v.block, v.c, R(-1, 2)));
            out.push_back(next_realized(v.block, v.c, R(1, 2)));
        }
    } else {
        out.push_back(*toward_branch(v));
        out.push_back(*away_from_branch(v));
    }
    sort_by_c(out);
    return out;
}

int BlockQuiver::degree(const BlockWeight& v) const {
    int d = 0;
    for (const auto& e : edges) d += same(e.u, v) + same(e.v, v);
    return d;
}

BlockQuiver build_quiver(const BlockId& block, const Rational& c_hi) {
    BlockQuiver q;
    q.block = block;
    q.c_hi = c_hi;
    q.shape = shape_of(block);
    const Rational lo = window_low(block, c_hi);
    q.vertices = weights_of_block(block, lo, c_hi);
    for (const auto& v : q.vertices) {
        for (const auto& n : quiver_neighbors(v)) {
            if (n.c > v.c && n.c <= c_hi) q.edges.push_back(QuiverEdge{v, n, ext_dim(v, n)});
        }
    }
    std::sort(q.edges.begin(), q.edges.end(), [](const QuiverEdge& x, const QuiverEdge& y) {
        return std::tie(x.u.c, x.v.c) < std::tie(y.u.c, y.v.c);
    });
    return q;
}

int ext_dim(const BlockWeight& u, const BlockWeight& v) {
    if (!(u.block == v.block)) {
        throw UsageError("ext_dim across blocks " + u.block.to_string() + " and " + v.block.to_string());
    }
    return count_in(quiver_neighbors(u), v) > 0 ? 1 : 0;
}

// ---------------------------------------------------------------------------
// Projectives

int ProjectiveStructure::multiplicity(const BlockWeight& mu) const {
    return count_in(top, mu) + count_in(middle, mu) + count_in(socle, mu);
}

ProjectiveStructure projective(const BlockWeight& v) {
    return ProjectiveStructure{v, {v}, quiver_neighbors(v), {v}};
}

// ---------------------------------------------------------------------------
// Cohomology of line bundles

BWBRow bwb_row(const BlockWeight& v) {
    require_atypical(v.block);
    BWBRow row{v, {}, {}, {}};
    const bool d_inf = shape_of(v.block) == QuiverShape::D_inf;
    switch (v.special) {
        case Special::L1:
            row.h0 = {v};
            row.h1 = {special_weight(v.block, Special::L2)};
            row.citation = "H0(O_lambda1) = L_lambda1 and H1(O_lambda1) = L_lambda2 (exact sequence argument for lambda1)";
            break;
        case Special::L2:
            row.h0 = {v};
            row.h1 = {special_weight(v.block, Special::L1)};
            row.citation =
                "H0(O_lambda2) = L_lambda2 and H1(O_lambda2) = L_lambda1 as stated in the cohomology theorem; "
                "the exact-sequence proof in the text covers lambda1 only (weaker support for lambda2)";
            break;
        case Special::L0:
            if (d_inf) {
                row.h0 = {v, special_weight(v.block, Special::L1), special_weight(v.block, Special::L2)};
                row.citation = "branch vertex: H0(O_lambda0) has simple subquotients L_lambda0, L_lambda1, L_lambda2";
            } else {
                row.h0 = {v};
                row.h1 = {v};
                row.citation = "H0(O_lambda0) = L_lambda0 and H1(O_lambda0) = L_lambda0, so eps(lambda0) = 0";
            }
            break;
        case Special::None:
            row.h0 = {v, *toward_branch(v)};
            row.citation =
                "0 -> L_lambda -> H0(O_lambda) -> L_mu -> 0 with mu the neighbour toward lambda0; higher cohomology vanishes";
            break;
    }
    return row;
}

BWBTable bwb_table(const BlockId& block, const Rational& c_hi) {
    BWBTable t{block, c_hi, {}};
    for (const auto& v : weights_of_block(block, window_low(block, c_hi), c_hi)) t.rows.push_back(bwb_row(v));
    return t;
}

bool bwb_euler_check(const BWBRow& row) {
    G0Decomposition lhs;
    for (const auto& v : row.h0) lhs = decomposition_add(lhs, direct_character(v).decomposition, 1);
    for (const auto& v : row.h1) lhs = decomposition_add(lhs, direct_character(v).decomposition, -1);
    return lhs == euler_decomposition(row.weight.lambda);
}

int bgg_multiplicity(const BlockWeight& lambda, const BlockWeight& mu) {
    if (!(lambda.block == mu.block)) return 0;
    // Only rows nu whose H0 contains L_lambda contribute: nu = lambda and
    // the neighbours of lambda.
    std::vector<BlockWeight> nus = quiver_neighbors(lambda);
    nus.push_back(lambda);
    int total = 0;
    for (const auto& nu : nus) {
        const BWBRow row = bwb_row(nu);
        total += count_in(row.h0, lambda) * (count_in(row.h0, mu) - count_in(row.h1, mu));
    }
    return total;
}

// ---------------------------------------------------------------------------
// Translation functors

BlockId translation_target(const BlockId& source) {
    require_atypical(source);
    if (source.algebra == AlgebraId::F4) return BlockId::f4(source.a + 1, source.b + 1);
    return BlockId::g3(source.a + 2);
}

std::vector<std::pair<BlockWeight, Weight>> translation_candidates(const BlockWeight& lambda, const BlockId& target) {
    const RootSystem& rs = root_system(lambda.block.algebra);
    std::vector<std::pair<BlockWeight, Weight>> out;
    for (const Root& g : rs.all_roots()) {
        const Weight w = lambda.lambda + g.weight;
        if (!is_dominant_coordinates(w) || atypicality(w) == 0) continue;
        if (!(block_of(w) == target)) continue;
        out.emplace_back(*locate(w), g.weight);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        const Rational ax = abs_r(x.first.c), ay = abs_r(y.first.c);
        return ax != ay ? ax < ay : x.first.c < y.first.c;
    });
    return out;
}

bool is_documented_ambiguity(const BlockWeight& lambda) {
    const BlockId& b = lambda.block;
    const Rational& c = lambda.c;
    if (b.algebra == AlgebraId::F4) {
        if (b.a == b.b) return c == Rational(b.a) + R(1, 2);
        const Rational t1(2 * b.a + b.b, 3), t2(b.a + 2 * b.b, 3);
        // c is negated on I5..I8, where the t1 + 1/2 vertex lives.
        return c == -(t1 + R(1, 2)) || c == t2 + R(1, 2);
    }
    return c == R(3 * b.a, 2) + R(1) || c == R(3 * b.a, 2) + R(2);
}

namespace {

std::string ambiguity_citation(const BlockWeight& lambda) {
    const BlockId& b = lambda.block;
    std::string s =
        "two dominant weights lambda + gamma lie in the target block; T(L_lambda) is simple with highest weight the "
        "candidate nearest the branch vertex (smallest |c'|): the other candidate is excluded because it is the unique "
        "simple quotient of H0 of the neighbouring translated weight";
    if (b.algebra == AlgebraId::F4 && b.a == b.b) {
        s += b.a == 1 ? " (symmetric block (1,1): T(L_lambda2) = L_mu2 via -delta, not L_mu0)"
                      : " (symmetric block: c = a + 1/2 maps by +1/2(e1 - e2 + e3 - delta), the dotted +e1 arrow is not taken)";
    } else if (b.algebra == AlgebraId::F4) {
        s += " (non-symmetric block: delta-coefficient t1 + 1/2 or t2 + 1/2 of lambda + rho)";
    } else {
        s += " (G(3): c = 3a/2 + 1 and c = 3a/2 + 2)";
    }
    return s;
}

std::string candidates_witness(const BlockWeight& lambda, const std::vector<std::pair<BlockWeight, Weight>>& cands) {
    std::ostringstream os;
    os << "block " << lambda.block.to_string() << " c = " << to_string(lambda.c) << " lambda+rho = "
       << lambda.lambda_rho().to_string() << ": " << cands.size() << " candidate(s)";
    for (const auto& [bw, g] : cands) os << " [c' = " << to_string(bw.c) << " gamma = " << g.to_string() << "]";
    return os.str();
}

}  // namespace

TranslationMap translation_map(const BlockId& source, const Rational& c_hi) {
    TranslationMap m{source, translation_target(source), c_hi, {}};
    for (const auto& v : weights_of_block(source, window_low(source, c_hi), c_hi)) {
        const auto cands = translation_candidates(v, m.target);
        if (cands.empty()) throw ConsistencyError("translation: no image; " + candidates_witness(v, cands));
        if (cands.size() > 1 && !is_documented_ambiguity(v)) {
            throw ConsistencyError("translation: undocumented ambiguity; " + candidates_witness(v, cands));
        }
        TranslationPair p{v, cands.front().first, cands.front().second, {}, {}};
        for (std::size_t i = 1; i < cands.size(); ++i) p.alternatives.push_back(cands[i].first);
        if (cands.size() > 1) p.citation = ambiguity_citation(v);
        m.pairs.push_back(std::move(p));
    }
    return m;
}

BijectionReport check_bijection(const TranslationMap& map, const Rational& inner) {
    BijectionReport r;
    std::map<Rational, Rational> seen;  // target c -> source c
    for (const auto& p : map.pairs) {
        auto [it, fresh] = seen.emplace(p.target.c, p.source.c);
        if (!fresh) {
            r.injective = false;
            r.witnesses.push_back("c = " + to_string(it->second) + " and c = " + to_string(p.source.c) +
                                  " both map to c' = " + to_string(p.target.c));
        }
    }
    for (const auto& w : weights_of_block(map.target, window_low(map.target, inner), inner)) {
        if (!seen.count(w.c)) {
            r.surjective = false;
            r.witnesses.push_back("target c' = " + to_string(w.c) + " (" + w.lambda_rho().to_string() + ") is not hit");
        }
    }
    return r;
}

BlockBijection block_equivalence(const BlockId& b1, const BlockId& b2, const Rational& c_hi) {
    require_atypical(b1);
    require_atypical(b2);
    if (b1.algebra != b2.algebra) throw UsageError("block_equivalence: blocks of different algebras");
    int steps = 0;
    if (b1.algebra == AlgebraId::F4) {
        if ((b1.a == b1.b) != (b2.a == b2.b) || b1.a - b1.b != b2.a - b2.b) {
            throw UsageError("block_equivalence: " + b1.to_string() + " and " + b2.to_string() +
                             " are not related by translation (need equal a - b)");
        }
        steps = b2.a - b1.a;
    } else {
        steps = (b2.a - b1.a) / 2;
    }
    if (steps < 0) {
        // Build the forward bijection on a wider window and invert it.
        const BlockBijection fwd = block_equivalence(b2, b1, c_hi + R(3 * -steps));
        BlockBijection out{b1, b2, {}};
        const Rational lo = window_low(b1, c_hi);
        for (const auto& [x, y] : fwd.pairs)
            if (y.c >= lo && y.c <= c_hi) out.pairs.emplace_back(y, x);
        std::sort(out.pairs.begin(), out.pairs.end(), [](const auto& x, const auto& y) { return x.first.c < y.first.c; });
        if (out.pairs.size() != weights_of_block(b1, lo, c_hi).size()) {
            throw ConsistencyError("block_equivalence: inverse does not cover block " + b1.to_string());
        }
        return out;
    }
    BlockBijection out{b1, b2, {}};
    std::vector<BlockWeight> from = weights_of_block(b1, window_low(b1, c_hi), c_hi);
    std::vector<BlockWeight> cur = from;
    BlockId block = b1;
    for (int s = 0; s < steps; ++s) {
        const TranslationMap m = translation_map(block, c_hi + R(3 * (steps - s)));
        std::map<Rational, BlockWeight> image;
        for (const auto& p : m.pairs) image.emplace(p.source.c, p.target);
        for (auto& w : cur) {
            auto it = image.find(w.c);
            if (it == image.end()) throw ConsistencyError("block_equivalence: c = " + to_string(w.c) + " outside window");
            w = it->second;
        }
        block = m.target;
    }
    for (std::size_t i = 0; i < from.size(); ++i) out.pairs.emplace_back(from[i], cur[i]);
    return out;
}

// ---------------------------------------------------------------------------
// Relations

namespace {

std::string arrow_name(int l, char sign) {
    const std::string idx = std::to_string(l);
    return "d_" + (idx.size() == 1 ? idx : "{" + idx + "}") + "^" + sign;
}

struct RelationBuilder {
    RelationSet& rs;
    std::map<std::string, const Arrow*> by_name;

    explicit RelationBuilder(RelationSet& r) : rs(r) {
        for (const auto& a : rs.arrows) by_name[a.name] = &a;
    }
    bool has(const std::vector<std::string>& names) const {
        return std::all_of(names.begin(), names.end(), [&](const std::string& n) { return by_name.count(n) > 0; });
    }
    // `words` are pairs (x, y) meaning "x y"; joined by `sep`, ending "= 0"
    // when `zero` is set.
    void add(const std::vector<std::pair<std::string, std::string>>& words, const std::string& sep, bool zero) {
        std::vector<std::string> names;
        for (const auto& [x, y] : words) {
            names.push_back(x);
            names.push_back(y);
        }
        if (!has(names)) return;  // leaves the window
        Relation r;
        bool ok = true;
        std::optional<std::pair<Rational, Rational>> ends;
        for (std::size_t i = 0; i < words.size(); ++i) {
            const auto& [x, y] = words[i];
            r.paths.push_back(x + " " + y);
            r.text += (i ? sep : "") + x + " " + y;
            const Arrow* first = by_name.at(y);
            const Arrow* second = by_name.at(x);
            if (!same(first->target, second->source)) ok = false;
            const std::pair<Rational, Rational> e{first->source.c, second->target.c};
            if (ends && *ends != e) ok = false;
            ends = e;
        }
        if (zero) r.text += " = 0";
        r.composable = ok;
        rs.relations.push_back(std::move(r));
    }
};

}  // namespace

RelationSet emit_relations(const BlockId& block, const Rational& c_hi) {
    RelationSet rs;
    rs.block = block;
    rs.shape = shape_of(block);
    const auto verts = weights_of_block(block, window_low(block, c_hi), c_hi);
    auto arrow = [&](const std::string& name, const BlockWeight& s, const BlockWeight& t) {
        rs.arrows.push_back(Arrow{name, s, t});
    };

    if (rs.shape == QuiverShape::A_inf) {
        // d^+- = sum over l of d_l^+-
        rs.families = {"d^+ d^- + d^- d^+ = 0", "(d^+)^2 = 0", "(d^-)^2 = 0"};
        // lambda_l indexed by position with lambda_0 at c = 0, l increasing with c;
        // d_l^+ : lambda_l -> lambda_{l+1}, d_l^- : lambda_{l+1} -> lambda_l.
        const auto zero = std::find_if(verts.begin(), verts.end(), [](const BlockWeight& v) { return v.special == Special::L0; });
        const int z = static_cast<int>(zero - verts.begin());
        for (std::size_t i = 0; i < verts.size(); ++i) {
            const int l = static_cast<int>(i) - z;
            rs.vertex_labels.emplace_back("lambda_" + std::to_string(l), verts[i].c);
            if (i + 1 < verts.size()) {
                arrow(arrow_name(l, '+'), verts[i], verts[i + 1]);
                arrow(arrow_name(l, '-'), verts[i + 1], verts[i]);
            }
        }
        RelationBuilder b(rs);
        const int lo = -z, hi = static_cast<int>(verts.size()) - 1 - z;
        for (int l = lo; l <= hi; ++l) {
            b.add({{arrow_name(l + 1, '+'), arrow_name(l, '+')}}, "", true);
            b.add({{arrow_name(l, '-'), arrow_name(l + 1, '-')}}, "", true);
            b.add({{arrow_name(l, '-'), arrow_name(l, '+')}, {arrow_name(l - 1, '+'), arrow_name(l - 1, '-')}}, " + ",
                  true);
        }
        return rs;
    }

    rs.families = {
        "d_l^- d_{l+1}^- = d_{l+1}^+ d_l^+ = 0, for l >= 3",
        "d_1^- d_2^+ = d_2^- d_1^+ = d_0^+ d_2^+ = d_2^- d_0^- = d_0^- d_3^- = d_3^+ d_0^+ = d_1^- d_0^- = d_0^+ d_1^+ = 0",
        "d_l^- d_l^+ = d_{l+1}^+ d_{l+1}^- for l >= 3",
        "d_1^+ d_1^- = d_2^+ d_2^- = d_0^- d_0^+",
    };
    // lambda1, lambda2, lambda0, then lambda3, lambda4, ... outward.
    // d_i^+ : lambda_i -> lambda0 (i = 1, 2), d_0^+ : lambda0 -> lambda3,
    // d_l^+ : lambda_l -> lambda_{l+1} (l >= 3); d^- reverses each.
    std::vector<std::pair<int, BlockWeight>> labelled;
    int next = 3;
    for (const auto& v : verts) {
        const int l = v.special == Special::L1 ? 1 : v.special == Special::L2 ? 2 : v.special == Special::L0 ? 0 : next++;
        labelled.emplace_back(l, v);
        rs.vertex_labels.emplace_back("lambda_" + std::to_string(l), v.c);
    }
    auto vertex = [&](int l) -> const BlockWeight* {
        for (const auto& [k, v] : labelled)
            if (k == l) return &v;
        return nullptr;
    };
    const BlockWeight* l0 = vertex(0);
    for (int i : {1, 2}) {
        arrow(arrow_name(i, '+'), *vertex(i), *l0);
        arrow(arrow_name(i, '-'), *l0, *vertex(i));
    }
    if (const BlockWeight* l3 = vertex(3)) {
        arrow(arrow_name(0, '+'), *l0, *l3);
        arrow(arrow_name(0, '-'), *l3, *l0);
    }
    for (int l = 3; vertex(l + 1); ++l) {
        arrow(arrow_name(l, '+'), *vertex(l), *vertex(l + 1));
        arrow(arrow_name(l, '-'), *vertex(l + 1), *vertex(l));
    }
    RelationBuilder b(rs);
    for (int l = 3; vertex(l); ++l) {
        b.add({{arrow_name(l, '-'), arrow_name(l + 1, '-')}}, "", true);
        b.add({{arrow_name(l + 1, '+'), arrow_name(l, '+')}}, "", true);
    }
    for (const auto& [x, y] : std::vector<std::pair<std::string, std::string>>{
             {"d_1^-", "d_2^+"}, {"d_2^-", "d_1^+"}, {"d_0^+", "d_2^+"}, {"d_2^-", "d_0^-"},
             {"d_0^-", "d_3^-"}, {"d_3^+", "d_0^+"}, {"d_1^-", "d_0^-"}, {"d_0^+", "d_1^+"}}) {
        b.add({{x, y}}, "", true);
    }
    for (int l = 3; vertex(l); ++l) {
        b.add({{arrow_name(l, '-'), arrow_name(l, '+')}, {arrow_name(l + 1, '+'), arrow_name(l + 1, '-')}}, " = ", false);
    }
    b.add({{"d_1^+", "d_1^-"}, {"d_2^+", "d_2^-"}, {"d_0^-", "d_0^+"}}, " = ", false);
    return rs;
}

bool relations_closed(const RelationSet& rs) {
    std::set<std::string> names;
    for (const auto& a : rs.arrows) names.insert(a.name);
    for (const auto& r : rs.relations) {
        std::istringstream is(r.text);
        std::string tok;
        while (is >> tok)
            if (tok.rfind("d_", 0) == 0 && !names.count(tok)) return false;
    }
    return true;
}

}  // namespace fg
