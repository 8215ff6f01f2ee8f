#pragma once

// The Weyl group of the even part as an explicit element list, the
// rho0-shifted regularization used by every alternating Weyl sum, and the two
// independent dominant-integral tests (coordinate conditions on lambda+rho and
// Kac's Dynkin-label conditions).

#include <array>
#include <optional>
#include <vector>

#include "fg/rootsystems.hpp"
#include "fg/weightspace.hpp"

namespace fg {

class WeylElement {
  public:
    using Mat = std::array<std::array<std::int64_t, kMaxRank>, kMaxRank>;

    WeylElement(AlgebraId algebra, const Mat& m);
    static WeylElement identity(AlgebraId algebra);
    // Reflection in a non-isotropic root.
    static WeylElement reflection(const Weight& root);

    AlgebraId algebra() const { return algebra_; }
    const Mat& matrix() const { return m_; }
    int sign() const { return sign_; }  // determinant, +-1

    Exponent apply(const Exponent& v) const;
    Weight apply(const Weight& w) const;
    WeylElement operator*(const WeylElement& o) const;  // (this o other)(v) = this(other(v))
    bool operator==(const WeylElement& o) const { return m_ == o.m_; }

  private:
    AlgebraId algebra_;
    Mat m_{};
    int sign_ = 1;
};

struct WeylGroup {
    AlgebraId algebra;
    std::vector<WeylElement> generators;  // reflections in the even simple roots
    std::vector<WeylElement> elements;    // identity first
};

// Throws ConsistencyError if the closure exceeds a safety bound.
WeylGroup generate_weyl(AlgebraId algebra);
// Cached instance for the super algebra (or even part) `algebra`.
const WeylGroup& weyl_group(AlgebraId algebra);

struct Regularization {
    WeylElement w;
    Weight image;
};

// None if nu lies on a wall of some even root; otherwise the unique w with
// w(nu) strictly dominant for the even part.  `g0_system` may be the super
// algebra's system (its even roots are used) or the even part's.
std::optional<Regularization> regularize_dominant(const RootSystem& g0_system, const Weight& nu);

// Hot-path variant on doubled coordinates: moves v into the dominant chamber
// and returns sign(w), or 0 if v is singular.
int regularize_scaled(const RootSystem& g0_system, Exponent& v);

struct KacLabels {
    std::vector<Rational> a;  // a_i = lambda(h_i) in base order
    int odd_index = 0;        // position of the isotropic simple root
    Rational k;
};

KacLabels kac_labels(const Weight& lambda);
bool is_dominant_coordinates(const Weight& lambda);
bool is_dominant_kac(const Weight& lambda);

}  // namespace fg
