#pragma once

// Cross-validation suites.  Each routine runs one family of invariants on a
// caller-chosen window and returns a Check: pass/fail, a one-line detail,
// the statements it exercises ("anchors") and witnesses for every failure.
// `fg verify` runs them at desk scale; the acceptance test reuses them with
// the larger windows of the acceptance criteria.

#include <string>
#include <vector>

#include "fg/blocks.hpp"
#include "fg/cache.hpp"
#include "fg/weightspace.hpp"

namespace fg {

struct Check {
    std::string name;
    bool pass = true;
    std::string detail;
    std::vector<std::string> anchors;
    std::vector<std::string> witnesses;
};

struct Report {
    std::string suite;
    std::vector<Check> checks;
    bool pass() const;
    std::string text() const;  // one line per check, then witnesses
};

// --- dominance ---------------------------------------------------------------
// Coordinate test vs Kac-label test on every lattice weight with |lambda_i| <=
// bound (half-integer steps).  Every disagreement is kept in `witnesses`
// (other checks keep at most a dozen); the check fails
// only if a disagreement escapes the witness list (never, by construction)
// and reports how many are explained by the literal k = 1 reading.
Check dominance_cross_check(AlgebraId algebra, int bound);

// --- characters ----------------------------------------------------------------
// Direct vs recursion characters, term for term, with positivity and top
// coefficient 1, on every block weight with c in [lo, hi].  `weights` counts
// the weights compared.
Check character_paths(const BlockId& block, const Rational& lo, const Rational& hi, int* weights = nullptr);
// Euler identities: sdim eps = 0; eps = L + L_mu off specials; eps(lambda0)
// = L0 + L1 + L2 (D-infinity) or 0 (A-infinity).
Check euler_identities(const BlockId& block, const Rational& lo, const Rational& hi);
// Brute-force oracle vs computed superdimension on the generic weights.
Check superdimension_oracle(const BlockId& block, const Rational& lo, const Rational& hi);
// The closed form (-1)^{s(lambda)} 2 dim L(g_x) (or dim L(g_x) at lambda1,
// lambda2) vs the computed superdimension.
Check superdimension_closed_form(const BlockId& block, const Rational& lo, const Rational& hi);
// The special-weight formula (eps + BLM-sum) / 2, verbatim, at lambda1 and
// lambda2 compared with the recursion characters.
Check verbatim_special_formula(const BlockId& block);
// sdim L != 0 iff atypical, on every dominant weight with |(lambda+rho)_i| <= bound.
Check kac_wakimoto_grid(AlgebraId algebra, int bound);

// --- category ------------------------------------------------------------------
Check quiver_checks(const BlockId& block, const Rational& c_hi);
// Bijectivity of the translation map source -> target on the window, plus
// every pair listed in `expected` (lambda+rho -> mu+rho, as text).
Check translation_check(const BlockId& source, const Rational& c_hi,
                        const std::vector<std::pair<std::string, std::string>>& expected = {});
// The labelled arrows of the translation pictures for (1,1) -> (2,2),
// (4,1) -> (5,2) and G3 1 -> 3, as (lambda+rho, mu+rho) text pairs.
std::vector<std::pair<std::string, std::string>> pictured_arrows(const BlockId& source);

// --- cache ---------------------------------------------------------------------
// Documents served through `cache` (cold then warm) equal fresh computation
// byte for byte.
Check cache_transparency(const CharacterCache& cache);

// Suites: "dominance", "characters", "quiver", "translation", and "all"
// (the four plus the verbatim closed-form checks).  Throws UsageError on an
// unknown tag.
Report run_verify(const std::string& suite);

}  // namespace fg
