#pragma once

// Characters.  Every character of F4 / G3 computed here is a finite sum of
// rho0-shifted even-part Euler characteristics
//
//     chi0(nu) = sign(w) ch L0(w(nu + rho0) - rho0),
//
// taken over subsets S of the positive odd roots:
//
//     typical  ch L = sum_{S in Delta1+}            chi0(lambda - |S|)
//     atypical ch L = sum_{S in Delta1+ \ {alpha}}  chi0(lambda - |S|)
//     special  ch L = (eps(lambda) + atypical sum) / 2
//
// where |S| is the sum of the roots in S.  The factor 1/(1 + e^-alpha) of the
// atypical formula is never expanded: it cancels against the matching factor
// of the odd product.  Characters are first assembled as a decomposition into
// even-part irreducibles (dominant highest weight -> integer) and materialized
// as formal characters only on demand, from cached Freudenthal characters of
// the simple factors of the even part.

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "fg/blocks.hpp"
#include "fg/weightspace.hpp"

namespace fg {

// Even-part irreducibles by (doubled) dominant highest weight.
using G0Decomposition = std::map<Exponent, std::int64_t>;

struct G0Character {
    Weight highest_weight;
    FormalCharacter character;
    std::int64_t dim = 0;
};

// Irreducible character of a reductive algebra (B3xA1, G2xA1, SL3, SL2; the
// super algebras F4 / G3 stand for their even parts).  Throws UsageError
// unless nu is dominant integral.  The result is cross-checked against the
// Weyl dimension formula.
G0Character freudenthal_character(AlgebraId g0, const Weight& nu);
// Weyl dimension formula; 0 if nu + rho0 is singular.
std::int64_t weyl_dimension(AlgebraId g0, const Weight& nu);

// chi0 as a decomposition (empty if singular) and as a character.
G0Decomposition chi0_decomposition(const Weight& nu);
FormalCharacter chi0(const Weight& nu);

// Euler characteristic eps(lambda) = sum over all subsets of Delta1+.
G0Decomposition euler_decomposition(const Weight& lambda);
FormalCharacter euler_char(const Weight& lambda);

FormalCharacter materialize(AlgebraId algebra, const G0Decomposition& d);
std::int64_t decomposition_dim(AlgebraId algebra, const G0Decomposition& d);
std::int64_t decomposition_sdim(AlgebraId algebra, const G0Decomposition& d);
G0Decomposition decomposition_add(const G0Decomposition& a, const G0Decomposition& b, std::int64_t sign = 1);

enum class Method { Typical, Recursion, DirectBLM, DirectBLSM, PairSum };
std::string method_name(Method m);

class SimpleCharacter {
  public:
    explicit SimpleCharacter(const Weight& l) : lambda(l) {}

    Weight lambda;
    std::optional<BlockWeight> block_weight;
    Method method = Method::Typical;
    G0Decomposition decomposition;
    std::int64_t dim = 0;
    std::int64_t sdim = 0;

    // Materialized (and cached) on first use.
    const FormalCharacter& character() const;

  private:
    mutable std::optional<FormalCharacter> character_;
};

// Throws UsageError on atypical input; ConsistencyError if the result is
// not a genuine character.
SimpleCharacter typical_character(const Weight& lambda);
// The BLM subset sum; throws UsageError for lambda1 / lambda2.
SimpleCharacter atypical_character(const BlockWeight& bw);
// The BLSM formula, verbatim; throws UsageError unless bw is lambda1 or
// lambda2, and ConsistencyError if halving leaves a remainder.  (It holds at
// lambda2; at lambda1 the numerator has odd coefficients.)
SimpleCharacter special_character(const BlockWeight& bw);
// ch L_{lambda1} = BLM(lambda2) - ch L_{lambda2}: the BLM sum at lambda2 is
// ch L_{lambda1} + ch L_{lambda2}.  Throws UsageError unless bw is lambda1.
SimpleCharacter pair_sum_character(const BlockWeight& bw);
// Direct formula for bw: BLM, BLSM at lambda2, the pair sum at lambda1.
SimpleCharacter direct_character(const BlockWeight& bw);
// ch L = eps(lambda) - ch L_mu down the quiver toward the branch vertex.
// Base cases: lambda2 via BLSM, lambda1 via eps(lambda1) + ch L_{lambda2}
// (H0 = L_{lambda1}, H1 = L_{lambda2}), lambda0 via BLM.  Memoized.
SimpleCharacter character_by_recursion(const BlockWeight& bw);
// Any dominant weight: typical formula or the block weight's direct formula.
SimpleCharacter simple_character(const Weight& lambda);

// The BLSM numerator eps(lambda) + BLM-sum before halving.
G0Decomposition blsm_numerator(const BlockWeight& bw);

// Closed form: (-1)^{s(lambda)} 2 dim L(g_x), or dim L(g_x) at lambda1 / lambda2.
std::int64_t superdimension(const BlockWeight& bw);
// Brute-force signed Weyl-dimension subset sum, independent of the character
// engine.  Throws UsageError unless bw is generic and not special.
std::int64_t generic_superdimension_oracle(const BlockWeight& bw);
// (sdim L_lambda != 0) == (atypicality(lambda) == 1).
bool kac_wakimoto_check(const Weight& lambda);

// Positivity / top-coefficient validation of a module character.
bool is_module_character(const FormalCharacter& ch, const Weight& top);

}  // namespace fg
