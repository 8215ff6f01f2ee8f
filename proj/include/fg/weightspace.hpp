#pragma once

// Exact weights, the invariant bilinear forms, parity, and formal characters
// (finitely supported Laurent polynomials on the weight lattice).
//
// Coordinates are stored doubled ("scaled") as 32-bit integers: every weight
// this library meets lies in the half-integer lattice, so doubling makes all
// keys integral and hashing exact.  Rationals appear only at the API surface.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace fg {

using Rational = boost::rational<std::int64_t>;

// "p/q" with q >= 1 always present, e.g. "-3/2", "2/1".
std::string to_string(const Rational& r);
// Accepts "p/q", "p" and decimal halves such as "2.5".
Rational parse_rational(std::string_view text);
bool is_integer(const Rational& r);
bool is_half_integer(const Rational& r);  // r in (1/2)Z

enum class AlgebraId { F4, G3, B3xA1, G2xA1, SL3, SL2 };

std::string_view algebra_name(AlgebraId a);
AlgebraId parse_algebra(std::string_view text);
int rank_of(AlgebraId a);
// The algebra whose Cartan dual a weight of `a` lives in (F4 and its even
// part share coordinates, likewise G3 and G2xA1).
AlgebraId space_of(AlgebraId a);
AlgebraId even_part(AlgebraId a);
bool is_super(AlgebraId a);

constexpr int kMaxRank = 4;
// Doubled coordinates; slots past the rank are zero.
using Exponent = std::array<std::int32_t, kMaxRank>;

struct ExponentHash {
    std::size_t operator()(const Exponent& e) const noexcept;
};

class Weight {
  public:
    // Throws UsageError unless coords.size() == rank and every denominator
    // divides 2.
    Weight(AlgebraId algebra, const std::vector<Rational>& coords);
    static Weight from_scaled(AlgebraId algebra, const Exponent& scaled);
    static Weight zero(AlgebraId algebra);
    // G3 input written with three epsilons is normalized via e3 = -e1 - e2.
    static Weight g3_from_epsilons(const Rational& e1, const Rational& e2, const Rational& e3,
                                   const Rational& d);

    AlgebraId algebra() const { return algebra_; }
    int rank() const { return rank_of(algebra_); }
    Rational coord(int i) const { return Rational(scaled_[i], 2); }
    std::vector<Rational> coords() const;
    const Exponent& scaled() const { return scaled_; }
    std::vector<std::int64_t> scaled_vector() const;

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    Weight operator*(std::int64_t k) const;
    // Multiplication by a rational; the result must stay in the half lattice.
    Weight scaled_by(const Rational& r) const;
    // Same vector viewed in a compatible algebra (same coordinate space).
    Weight as(AlgebraId algebra) const;
    bool is_zero() const;

    bool operator==(const Weight& o) const { return algebra_ == o.algebra_ && scaled_ == o.scaled_; }
    // Lexicographic on scaled coordinates (display order and tie-breaking).
    std::strong_ordering operator<=>(const Weight& o) const;

    // "(5/2,3/2,1/2|-3/2)" for the super algebras and their even parts,
    // "(1,1)" for the fiber algebras.
    std::string to_string() const;

  private:
    Weight(AlgebraId algebra, const Exponent& scaled) : algebra_(algebra), scaled_(scaled) {}
    AlgebraId algebra_;
    Exponent scaled_{};
};

// Inverse of Weight::to_string: "(5/2,3/2,1/2|-3/2)"; also accepts plain
// comma-separated lists.  Throws UsageError on malformed text.
Weight parse_weight(AlgebraId algebra, std::string_view text);

class BilinearForm {
  public:
    explicit BilinearForm(AlgebraId algebra);
    AlgebraId algebra() const { return algebra_; }
    const std::vector<std::vector<Rational>>& gram() const { return gram_; }
    // Integer matrix G with (u,v) = (2u)^T G (2v) / (4 * denominator()).
    const std::vector<std::vector<std::int64_t>>& scaled_gram() const { return scaled_gram_; }
    std::int64_t denominator() const { return denominator_; }
    // 4 * denominator() * (u, v), computed on doubled coordinates.
    std::int64_t pair_scaled(const Exponent& u, const Exponent& v) const;

  private:
    AlgebraId algebra_;
    std::vector<std::vector<Rational>> gram_;
    std::vector<std::vector<std::int64_t>> scaled_gram_;
    std::int64_t denominator_ = 1;
};

const BilinearForm& form_of(AlgebraId algebra);

// Throws UsageError if u, v and form live in different coordinate spaces.
Rational pair(const BilinearForm& form, const Weight& u, const Weight& v);
Rational pair(const Weight& u, const Weight& v);

struct Parity {
    int value = 0;  // 0 even, 1 odd
    Parity operator+(Parity o) const { return Parity{(value + o.value) % 2}; }
    bool operator==(const Parity&) const = default;
};

// Membership in the integral lattice Lambda of the algebra.
bool in_lattice(AlgebraId algebra, const Exponent& scaled);
bool in_lattice(const Weight& w);
// Throws UsageError outside Lambda.
Parity parity_of(const Weight& w);
int exponent_parity(AlgebraId algebra, const Exponent& scaled);

class FormalCharacter {
  public:
    using Map = std::unordered_map<Exponent, std::int64_t, ExponentHash>;

    explicit FormalCharacter(AlgebraId algebra) : algebra_(algebra) {}
    static FormalCharacter monomial(const Weight& w, std::int64_t coeff = 1);

    AlgebraId algebra() const { return algebra_; }
    int rank() const { return rank_of(algebra_); }
    void add_term(const Exponent& e, std::int64_t coeff);
    std::int64_t coefficient(const Exponent& e) const;
    std::int64_t coefficient(const Weight& w) const { return coefficient(w.scaled()); }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    const Map& terms() const { return terms_; }
    // Terms sorted lexicographically by exponent.
    std::vector<std::pair<Exponent, std::int64_t>> sorted_terms() const;
    void reserve(std::size_t n) { terms_.reserve(n); }

    FormalCharacter& operator+=(const FormalCharacter& o);
    FormalCharacter& operator-=(const FormalCharacter& o);
    FormalCharacter& operator*=(std::int64_t k);
    bool operator==(const FormalCharacter& o) const;

    FormalCharacter as(AlgebraId algebra) const;

  private:
    AlgebraId algebra_;
    Map terms_;
};

FormalCharacter char_add(const FormalCharacter& a, const FormalCharacter& b);
FormalCharacter char_sub(const FormalCharacter& a, const FormalCharacter& b);
FormalCharacter char_mul(const FormalCharacter& a, const FormalCharacter& b);
FormalCharacter char_scale(const FormalCharacter& a, std::int64_t k);
std::int64_t specialize_dim(const FormalCharacter& c);
// Throws UsageError if a support weight is outside Lambda.
std::int64_t specialize_sdim(const FormalCharacter& c);

}  // namespace fg
