#pragma once

// Atypicality, block labels and the c-parametrization of the dominant weights
// in an atypical block.
//
// Conventions:
//  * F4 blocks are labelled (a,b) with a >= b >= 1 and a = b (mod 3); G3
//    blocks by an odd a >= 1.
//  * c is the delta-coefficient of lambda_c + rho on the J- and I1..I4
//    intervals and its negative on I5..I8 (so on the non-symmetric F4 blocks
//    the delta-coefficient is |c|).
//  * Special vertices: on the D-infinity blocks (symmetric F4, all G3) the
//    three smallest realized c are lambda1, lambda2 and the branch lambda0;
//    on the A-infinity blocks lambda0 is the vertex c = 0.

#include <optional>
#include <string>
#include <vector>

#include "fg/rootsystems.hpp"
#include "fg/weightspace.hpp"

namespace fg {

struct BlockId {
    AlgebraId algebra = AlgebraId::F4;
    bool typical = false;
    int a = 0;
    int b = 0;  // 0 for G3
    std::optional<Weight> typical_weight;

    static BlockId f4(int a, int b);  // normalizes to a >= b; validates
    static BlockId g3(int a);         // validates a odd >= 1
    static BlockId make_typical(const Weight& lambda);

    bool is_f4() const { return algebra == AlgebraId::F4; }
    // D-infinity shape: symmetric F4 blocks and every G3 block.
    bool is_d_infinity() const { return !typical && (algebra == AlgebraId::G3 || a == b); }
    // "(1,1)", "3" or "typical(3,2,1|1)".
    std::string to_string() const;
    bool operator==(const BlockId& o) const;
};

// Parses "a,b" (F4) or "a" (G3).
BlockId parse_block(AlgebraId algebra, const std::string& text);

enum class Special { None, L0, L1, L2 };
std::string special_name(Special s);  // "", "lambda0", ...

struct BlockWeight {
    BlockId block;
    Rational c;
    Weight lambda;
    Root vanishing_root;   // positive isotropic, (lambda+rho, root) = 0
    std::string interval;  // "J1".."J3", "I1".."I8" or "special"
    Special special = Special::None;

    Weight lambda_rho() const;
    bool operator==(const BlockWeight& o) const { return block == o.block && c == o.c; }
};

// Positive isotropic roots alpha with (lambda+rho, alpha) = 0.
std::vector<Root> vanishing_roots(const Weight& lambda);
// 1 iff some isotropic root is orthogonal to lambda+rho.
int atypicality(const Weight& lambda);
// Throws ConsistencyError if no Weyl element brings the vanishing root to the
// reference root (signals inconsistent input).
BlockId block_of(const Weight& lambda);

// c values permitted by the parametrization theorem (its excluded sets
// applied), in [lo, hi], ascending.
std::vector<Rational> allowed_c(const BlockId& block, const Rational& lo, const Rational& hi);
// Permitted c for which the explicit interval formulas give no weight (the
// value c = -1 on symmetric F4 blocks with a > 1).
std::vector<Rational> unrealized_c(const BlockId& block, const Rational& lo, const Rational& hi);
// lambda_c + rho by the interval formulas, with its interval label; none for
// excluded or unrealized c.
std::optional<std::pair<Weight, std::string>> block_weight_formula(const BlockId& block, const Rational& c);

// The realized block weights with lo <= c <= hi, ascending in c.
std::vector<BlockWeight> weights_of_block(const BlockId& block, const Rational& lo, const Rational& hi);
BlockWeight block_weight(const BlockId& block, const Rational& c);  // throws UsageError if not realized

struct SpecialValues {
    std::optional<Rational> lambda1, lambda2;
    Rational lambda0;
};
SpecialValues special_values(const BlockId& block);

// The block weight record of a dominant atypical weight; none if lambda is
// typical.
std::optional<BlockWeight> locate(const Weight& lambda);

// The neighbour of bw one step toward the branch vertex lambda0 along the
// quiver (the mu with eps(lambda) = ch L_lambda + ch L_mu); none for lambda0,
// lambda1 and lambda2.
std::optional<BlockWeight> toward_branch(const BlockWeight& bw);

bool is_generic(const BlockWeight& bw);
// Throws UsageError on lambda1 / lambda2.
Parity sign_s(const BlockWeight& bw);
// dim of the fiber module over sl(3) / sl(2): ab(a+b)/2 or a.
std::int64_t fiber_dimension(const BlockId& block);

}  // namespace fg
