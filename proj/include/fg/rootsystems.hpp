#pragma once

// Root data for F(4), G(3), their even parts B3xA1 / G2xA1 and the fiber
// algebras sl(3), sl(2): typed root lists, bases, Cartan matrices, rho
// vectors, and odd reflections of bases.

#include <cstdint>
#include <optional>
#include <vector>

#include "fg/weightspace.hpp"

namespace fg {

struct Root {
    Weight weight;
    Parity parity;
    bool isotropic = false;

    bool operator==(const Root& o) const { return weight == o.weight; }
};

using Matrix = std::vector<std::vector<std::int64_t>>;

struct RootSystem {
    AlgebraId algebra;
    std::vector<Root> delta0, delta1;            // all even / odd roots
    std::vector<Root> delta0_plus, delta1_plus;  // positive w.r.t. `base`
    std::vector<Root> base;                      // the distinguished base
    Matrix cartan;
    Weight rho0, rho1, rho;
    // Simple roots of the even part: they generate the Weyl group.
    std::vector<Root> even_simple;
    // Coordinate blocks of the simple ideals of the even part (e.g. {0,1,2}
    // and {3} for B3xA1).  Filled for every algebra.
    std::vector<std::vector<int>> factor_coords;

    const BilinearForm& form() const { return form_of(algebra); }
    std::vector<Root> positive_roots() const;  // delta0_plus followed by delta1_plus
    std::vector<Root> all_roots() const;       // delta0 followed by delta1
    std::optional<Root> find_root(const Weight& w) const;
    bool is_root(const Weight& w) const { return find_root(w).has_value(); }
};

RootSystem build_root_system(AlgebraId algebra);
// Cached, immutable instance.
const RootSystem& root_system(AlgebraId algebra);

struct CartanData {
    Matrix matrix;
    // Row i of `matrix` equals row_scale[i] * ((beta_i, beta_j))_j.
    std::vector<Rational> row_scale;
};

// Row i is the pairing against the coroot of beta_i: 2(beta_i,beta_j)/(beta_i,beta_i)
// for non-isotropic beta_i.  An isotropic row is scaled to the primitive
// integer vector whose first nonzero entry is positive.  Throws UsageError on a
// degenerate base.
CartanData cartan_data(const std::vector<Root>& base);
Matrix cartan_matrix(const std::vector<Root>& base);

// Coordinates of w in the basis `base` (throws UsageError if degenerate).
std::vector<Rational> base_coordinates(const std::vector<Root>& base, const Weight& w);

struct BaseState {
    std::vector<Root> base;
    std::vector<Root> positive;  // all positive roots, even and odd
};

BaseState distinguished_state(AlgebraId algebra);
// Roots of `system` that are nonnegative combinations of `base`.
std::vector<Root> positive_from_base(const RootSystem& system, const std::vector<Root>& base);
// Throws UsageError unless alpha is an odd isotropic root of the base.
BaseState odd_reflection(const BaseState& state, const Root& alpha);
// Closure of the distinguished base under odd reflections, deduplicated as
// sets; the distinguished base comes first.
std::vector<BaseState> odd_base_orbit(AlgebraId algebra);
bool same_base(const std::vector<Root>& a, const std::vector<Root>& b);

}  // namespace fg
