#include "fg/weightspace.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "fg/errors.hpp"

namespace fg {

std::string to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
            s.end());
    if (s.empty()) throw UsageError("empty rational");
    try {
        std::size_t used = 0;
        if (auto slash = s.find('/'); slash != std::string::npos) {
            std::int64_t p = std::stoll(s.substr(0, slash), &used);
            if (used != slash) throw UsageError("bad rational '" + s + "'");
            std::string qs = s.substr(slash + 1);
            std::int64_t q = std::stoll(qs, &used);
            if (used != qs.size() || q == 0) throw UsageError("bad rational '" + s + "'");
            return Rational(p, q);
        }
        if (auto dot = s.find('.'); dot != std::string::npos) {
            // Decimal input; only finitely many digits, so scale by 10^k.
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            std::int64_t p = std::stoll(digits, &used);
            if (used != digits.size()) throw UsageError("bad rational '" + s + "'");
            std::int64_t q = 1;
            for (std::size_t i = dot + 1; i < s.size(); ++i) q *= 10;
            return Rational(p, q);
        }
        std::int64_t p = std::stoll(s, &used);
        if (used != s.size()) throw UsageError("bad rational '" + s + "'");
        return Rational(p);
    } catch (const std::logic_error&) {
        throw UsageError("bad rational '" + s + "'");
    }
}

bool is_integer(const Rational& r) { return r.denominator() == 1; }
bool is_half_integer(const Rational& r) { return r.denominator() == 1 || r.denominator() == 2; }

std::string_view algebra_name(AlgebraId a) {
    switch (a) {
        case AlgebraId::F4: return "F4";
        case AlgebraId::G3: return "G3";
        case AlgebraId::B3xA1: return "B3xA1";
        case AlgebraId::G2xA1: return "G2xA1";
        case AlgebraId::SL3: return "SL3";
        case AlgebraId::SL2: return "SL2";
    }
    return "?";
}

AlgebraId parse_algebra(std::string_view text) {
    std::string s(text);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
    if (s == "f4") return AlgebraId::F4;
    if (s == "g3") return AlgebraId::G3;
    if (s == "b3xa1") return AlgebraId::B3xA1;
    if (s == "g2xa1") return AlgebraId::G2xA1;
    if (s == "sl3") return AlgebraId::SL3;
    if (s == "sl2") return AlgebraId::SL2;
    throw UsageError("unknown algebra '" + std::string(text) + "'");
}

int rank_of(AlgebraId a) {
    switch (a) {
        case AlgebraId::F4:
        case AlgebraId::B3xA1: return 4;
        case AlgebraId::G3:
        case AlgebraId::G2xA1: return 3;
        case AlgebraId::SL3: return 2;
        case AlgebraId::SL2: return 1;
    }
    return 0;
}

AlgebraId space_of(AlgebraId a) {
    switch (a) {
        case AlgebraId::B3xA1: return AlgebraId::F4;
        case AlgebraId::G2xA1: return AlgebraId::G3;
        default: return a;
    }
}

AlgebraId even_part(AlgebraId a) {
    switch (a) {
        case AlgebraId::F4: return AlgebraId::B3xA1;
        case AlgebraId::G3: return AlgebraId::G2xA1;
        default: return a;
    }
}

bool is_super(AlgebraId a) { return a == AlgebraId::F4 || a == AlgebraId::G3; }

std::size_t ExponentHash::operator()(const Exponent& e) const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL;
    for (auto x : e) {
        h ^= static_cast<std::uint32_t>(x) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------
// Weight

Weight::Weight(AlgebraId algebra, const std::vector<Rational>& coords) : algebra_(algebra) {
    if (static_cast<int>(coords.size()) != rank_of(algebra)) {
        throw UsageError("weight for " + std::string(algebra_name(algebra)) + " needs " +
                         std::to_string(rank_of(algebra)) + " coordinates, got " +
                         std::to_string(coords.size()));
    }
    for (std::size_t i = 0; i < coords.size(); ++i) {
        Rational twice = coords[i] * Rational(2);
        if (!is_integer(twice)) {
            throw UsageError("coordinate " + fg::to_string(coords[i]) + " is not a half-integer");
        }
        scaled_[i] = static_cast<std::int32_t>(twice.numerator());
    }
}

Weight Weight::from_scaled(AlgebraId algebra, const Exponent& scaled) {
    Exponent e{};
    for (int i = 0; i < rank_of(algebra); ++i) e[i] = scaled[i];
    return Weight(algebra, e);
}

Weight Weight::zero(AlgebraId algebra) { return Weight(algebra, Exponent{}); }

Weight Weight::g3_from_epsilons(const Rational& e1, const Rational& e2, const Rational& e3,
                                const Rational& d) {
    return Weight(AlgebraId::G3, {e1 - e3, e2 - e3, d});
}

std::vector<Rational> Weight::coords() const {
    std::vector<Rational> out;
    for (int i = 0; i < rank(); ++i) out.push_back(coord(i));
    return out;
}

std::vector<std::int64_t> Weight::scaled_vector() const {
    return std::vector<std::int64_t>(scaled_.begin(), scaled_.begin() + rank());
}

static void require_same_space(AlgebraId a, AlgebraId b) {
    if (space_of(a) != space_of(b)) {
        throw UsageError("algebra mismatch: " + std::string(algebra_name(a)) + " vs " +
                         std::string(algebra_name(b)));
    }
}

Weight Weight::operator+(const Weight& o) const {
    require_same_space(algebra_, o.algebra_);
    Exponent e{};
    for (int i = 0; i < kMaxRank; ++i) e[i] = scaled_[i] + o.scaled_[i];
    return Weight(algebra_, e);
}

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

Weight Weight::operator-() const {
    Exponent e{};
    for (int i = 0; i < kMaxRank; ++i) e[i] = -scaled_[i];
    return Weight(algebra_, e);
}

Weight Weight::operator*(std::int64_t k) const {
    Exponent e{};
    for (int i = 0; i < kMaxRank; ++i) e[i] = static_cast<std::int32_t>(scaled_[i] * k);
    return Weight(algebra_, e);
}

Weight Weight::scaled_by(const Rational& r) const {
    std::vector<Rational> c;
    for (int i = 0; i < rank(); ++i) c.push_back(coord(i) * r);
    return Weight(algebra_, c);
}

Weight Weight::as(AlgebraId algebra) const {
    require_same_space(algebra_, algebra);
    return Weight(algebra, scaled_);
}

bool Weight::is_zero() const {
    return std::all_of(scaled_.begin(), scaled_.end(), [](std::int32_t x) { return x == 0; });
}

std::strong_ordering Weight::operator<=>(const Weight& o) const {
    if (auto c = static_cast<int>(algebra_) <=> static_cast<int>(o.algebra_); c != 0) return c;
    return scaled_ <=> o.scaled_;
}

static std::string half_string(std::int64_t scaled) {
    if (scaled % 2 == 0) return std::to_string(scaled / 2);
    return std::to_string(scaled) + "/2";
}

std::string Weight::to_string() const {
    std::ostringstream out;
    out << '(';
    const bool super_space = space_of(algebra_) == AlgebraId::F4 || space_of(algebra_) == AlgebraId::G3;
    for (int i = 0; i < rank(); ++i) {
        if (i > 0) out << ((super_space && i == rank() - 1) ? '|' : ',');
        out << half_string(scaled_[i]);
    }
    out << ')';
    return out.str();
}

Weight parse_weight(AlgebraId algebra, std::string_view text) {
    // Accepts "(a,b,c|d)" or "a,b,c,d"; the bar is an ordinary separator.
    std::string s(text);
    for (char& ch : s) {
        if (ch == '|' || ch == ';') ch = ',';
        if (ch == '(' || ch == ')' || ch == '[' || ch == ']') ch = ' ';
    }
    std::vector<Rational> coords;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = s.find(',', start);
        coords.push_back(parse_rational(std::string_view(s).substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (static_cast<int>(coords.size()) != rank_of(algebra)) {
        throw UsageError("weight '" + std::string(text) + "' needs " + std::to_string(rank_of(algebra)) +
                         " coordinates for " + std::string(algebra_name(algebra)));
    }
    return Weight(algebra, coords);
}

// ---------------------------------------------------------------------------
// Bilinear forms

BilinearForm::BilinearForm(AlgebraId algebra) : algebra_(algebra) {
    const int n = rank_of(algebra);
    gram_.assign(n, std::vector<Rational>(n, Rational(0)));
    switch (space_of(algebra)) {
        case AlgebraId::F4:
            for (int i = 0; i < 3; ++i) gram_[i][i] = 1;
            gram_[3][3] = -3;
            break;
        case AlgebraId::G3:
            gram_[0][0] = gram_[1][1] = 2;
            gram_[0][1] = gram_[1][0] = -1;
            gram_[2][2] = -2;
            break;
        case AlgebraId::SL3:
            // Fundamental-weight basis: the inverse Cartan matrix of A2.
            gram_[0][0] = gram_[1][1] = Rational(2, 3);
            gram_[0][1] = gram_[1][0] = Rational(1, 3);
            break;
        case AlgebraId::SL2:
            gram_[0][0] = Rational(1, 2);
            break;
        default: break;
    }
    for (const auto& row : gram_)
        for (const auto& x : row) denominator_ = std::lcm(denominator_, x.denominator());
    scaled_gram_.assign(n, std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            scaled_gram_[i][j] = boost::rational_cast<std::int64_t>(gram_[i][j] * denominator_);
}

std::int64_t BilinearForm::pair_scaled(const Exponent& u, const Exponent& v) const {
    const int n = rank_of(algebra_);
    std::int64_t s = 0;
    for (int i = 0; i < n; ++i) {
        if (u[i] == 0) continue;
        for (int j = 0; j < n; ++j) s += std::int64_t(u[i]) * scaled_gram_[i][j] * v[j];
    }
    return s;
}

const BilinearForm& form_of(AlgebraId algebra) {
    static const BilinearForm forms[] = {
        BilinearForm(AlgebraId::F4),    BilinearForm(AlgebraId::G3),  BilinearForm(AlgebraId::B3xA1),
        BilinearForm(AlgebraId::G2xA1), BilinearForm(AlgebraId::SL3), BilinearForm(AlgebraId::SL2)};
    return forms[static_cast<int>(algebra)];
}

Rational pair(const BilinearForm& form, const Weight& u, const Weight& v) {
    require_same_space(form.algebra(), u.algebra());
    require_same_space(form.algebra(), v.algebra());
    return Rational(form.pair_scaled(u.scaled(), v.scaled()), 4 * form.denominator());
}

Rational pair(const Weight& u, const Weight& v) { return pair(form_of(u.algebra()), u, v); }

// ---------------------------------------------------------------------------
// Lattice and parity

bool in_lattice(AlgebraId algebra, const Exponent& s) {
    switch (space_of(algebra)) {
        case AlgebraId::F4: {
            // Lambda = Z(e1+e2+e3)/2 + Ze1 + Ze2 + Z delta/2: the epsilon
            // coordinates are all integers or all half-odd.
            const int p = s[0] & 1;
            return (s[1] & 1) == p && (s[2] & 1) == p;
        }
        default:
            for (int i = 0; i < rank_of(algebra); ++i)
                if (s[i] & 1) return false;
            return true;
    }
}

bool in_lattice(const Weight& w) { return in_lattice(w.algebra(), w.scaled()); }

int exponent_parity(AlgebraId algebra, const Exponent& s) {
    switch (space_of(algebra)) {
        case AlgebraId::F4: return s[3] & 1;               // p(delta/2) = 1
        case AlgebraId::G3: return (s[2] / 2) & 1;         // p(delta) = 1
        default: return 0;
    }
}

Parity parity_of(const Weight& w) {
    if (!in_lattice(w)) throw UsageError("weight " + w.to_string() + " is outside the integral lattice");
    return Parity{exponent_parity(w.algebra(), w.scaled())};
}

// ---------------------------------------------------------------------------
// Formal characters

FormalCharacter FormalCharacter::monomial(const Weight& w, std::int64_t coeff) {
    FormalCharacter c(w.algebra());
    c.add_term(w.scaled(), coeff);
    return c;
}

void FormalCharacter::add_term(const Exponent& e, std::int64_t coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

std::int64_t FormalCharacter::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

std::vector<std::pair<Exponent, std::int64_t>> FormalCharacter::sorted_terms() const {
    std::vector<std::pair<Exponent, std::int64_t>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

static void require_same_algebra(const FormalCharacter& a, const FormalCharacter& b) {
    if (a.algebra() != b.algebra()) {
        throw UsageError("character algebra mismatch: " + std::string(algebra_name(a.algebra())) +
                         " vs " + std::string(algebra_name(b.algebra())));
    }
}

FormalCharacter& FormalCharacter::operator+=(const FormalCharacter& o) {
    require_same_algebra(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

FormalCharacter& FormalCharacter::operator-=(const FormalCharacter& o) {
    require_same_algebra(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

FormalCharacter& FormalCharacter::operator*=(std::int64_t k) {
    if (k == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= k;
    return *this;
}

bool FormalCharacter::operator==(const FormalCharacter& o) const {
    return algebra_ == o.algebra_ && terms_ == o.terms_;
}

FormalCharacter FormalCharacter::as(AlgebraId algebra) const {
    require_same_space(algebra_, algebra);
    FormalCharacter c(algebra);
    c.terms_ = terms_;
    return c;
}

FormalCharacter char_add(const FormalCharacter& a, const FormalCharacter& b) {
    FormalCharacter c = a;
    c += b;
    return c;
}

FormalCharacter char_sub(const FormalCharacter& a, const FormalCharacter& b) {
    FormalCharacter c = a;
    c -= b;
    return c;
}

FormalCharacter char_mul(const FormalCharacter& a, const FormalCharacter& b) {
    require_same_algebra(a, b);
    FormalCharacter c(a.algebra());
    c.reserve(a.size() * b.size());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            Exponent e{};
            for (int i = 0; i < kMaxRank; ++i) e[i] = ea[i] + eb[i];
            c.add_term(e, ca * cb);
        }
    }
    return c;
}

FormalCharacter char_scale(const FormalCharacter& a, std::int64_t k) {
    FormalCharacter c = a;
    c *= k;
    return c;
}

std::int64_t specialize_dim(const FormalCharacter& c) {
    std::int64_t s = 0;
    for (const auto& [e, k] : c.terms()) s += k;
    return s;
}

std::int64_t specialize_sdim(const FormalCharacter& c) {
    std::int64_t s = 0;
    for (const auto& [e, k] : c.terms()) {
        if (!in_lattice(c.algebra(), e)) {
            throw UsageError("support weight " + Weight::from_scaled(c.algebra(), e).to_string() +
                             " has no parity");
        }
        s += exponent_parity(c.algebra(), e) ? -k : k;
    }
    return s;
}

}  // namespace fg
