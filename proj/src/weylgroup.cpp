#include "fg/weylgroup.hpp"

#include <algorithm>
#include <map>

#include "fg/errors.hpp"

namespace fg {

namespace {

std::int64_t determinant(WeylElement::Mat m, int n) {
    // Fraction-free Bareiss elimination; entries stay integral.
    std::int64_t sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[r], m[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

constexpr std::size_t kWeylSafetyBound = 10000;

}  // namespace

WeylElement::WeylElement(AlgebraId algebra, const Mat& m) : algebra_(algebra), m_(m) {
    const std::int64_t d = determinant(m_, rank_of(algebra));
    if (d != 1 && d != -1) throw ConsistencyError("Weyl element with determinant " + std::to_string(d));
    sign_ = static_cast<int>(d);
}

WeylElement WeylElement::identity(AlgebraId algebra) {
    Mat m{};
    for (int i = 0; i < rank_of(algebra); ++i) m[i][i] = 1;
    return WeylElement(algebra, m);
}

WeylElement WeylElement::reflection(const Weight& root) {
    const AlgebraId a = root.algebra();
    const int n = rank_of(a);
    const Rational norm = pair(root, root);
    if (norm == Rational(0)) throw UsageError("cannot reflect in the isotropic root " + root.to_string());
    Mat m{};
    for (int j = 0; j < n; ++j) {
        std::vector<Rational> e(n, Rational(0));
        e[j] = 1;
        const Weight basis(a, e);
        const Weight image = basis - root.scaled_by(Rational(2) * pair(basis, root) / norm);
        for (int i = 0; i < n; ++i) {
            if (image.scaled()[i] % 2 != 0) throw ConsistencyError("non-integral reflection matrix");
            m[i][j] = image.scaled()[i] / 2;
        }
    }
    return WeylElement(a, m);
}

Exponent WeylElement::apply(const Exponent& v) const {
    const int n = rank_of(algebra_);
    Exponent out{};
    for (int i = 0; i < n; ++i) {
        std::int64_t s = 0;
        for (int j = 0; j < n; ++j) s += m_[i][j] * v[j];
        out[i] = static_cast<std::int32_t>(s);
    }
    return out;
}

Weight WeylElement::apply(const Weight& w) const {
    if (space_of(w.algebra()) != space_of(algebra_)) throw UsageError("Weyl element applied across algebras");
    return Weight::from_scaled(w.algebra(), apply(w.scaled()));
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
    const int n = rank_of(algebra_);
    Mat m{};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) m[i][j] += m_[i][k] * o.m_[k][j];
    return WeylElement(algebra_, m);
}

WeylGroup generate_weyl(AlgebraId algebra) {
    const RootSystem& rs = root_system(algebra);
    WeylGroup g{algebra, {}, {WeylElement::identity(algebra)}};
    for (const auto& r : rs.even_simple) g.generators.push_back(WeylElement::reflection(r.weight));
    std::map<WeylElement::Mat, bool> seen{{g.elements.front().matrix(), true}};
    for (std::size_t i = 0; i < g.elements.size(); ++i) {
        for (const auto& s : g.generators) {
            WeylElement next = s * g.elements[i];
            if (seen.emplace(next.matrix(), true).second) {
                g.elements.push_back(next);
                if (g.elements.size() > kWeylSafetyBound) {
                    throw ConsistencyError("Weyl group closure exceeded the safety bound");
                }
            }
        }
    }
    return g;
}

const WeylGroup& weyl_group(AlgebraId algebra) {
    static const WeylGroup groups[] = {generate_weyl(AlgebraId::F4),    generate_weyl(AlgebraId::G3),
                                       generate_weyl(AlgebraId::B3xA1), generate_weyl(AlgebraId::G2xA1),
                                       generate_weyl(AlgebraId::SL3),   generate_weyl(AlgebraId::SL2)};
    return groups[static_cast<int>(algebra)];
}

int regularize_scaled(const RootSystem& g0, Exponent& v) {
    const BilinearForm& form = g0.form();
    int sign = 1;
    bool moved = true;
    while (moved) {
        moved = false;
        for (const auto& r : g0.even_simple) {
            const Exponent& a = r.weight.scaled();
            const std::int64_t p = form.pair_scaled(v, a);
            const std::int64_t q = form.pair_scaled(a, a);
            // Coroot pairing 2(v,a)/(a,a) on doubled coordinates.
            if (p == 0 || (p < 0) == (q < 0)) continue;
            if ((2 * p) % q != 0) throw UsageError("weight is not integral for the even part");
            const std::int64_t n = 2 * p / q;
            for (int i = 0; i < kMaxRank; ++i) v[i] = static_cast<std::int32_t>(v[i] - n * a[i]);
            sign = -sign;
            moved = true;
        }
    }
    for (const auto& r : g0.even_simple)
        if (form.pair_scaled(v, r.weight.scaled()) == 0) return 0;
    return sign;
}

std::optional<Regularization> regularize_dominant(const RootSystem& g0, const Weight& nu) {
    Exponent v = nu.scaled();
    if (regularize_scaled(g0, v) == 0) return std::nullopt;
    // Recover the unique w by search: the explicit element list is tiny.
    for (const auto& w : weyl_group(g0.algebra).elements) {
        if (w.apply(nu.scaled()) == v) return Regularization{w, Weight::from_scaled(nu.algebra(), v)};
    }
    throw ConsistencyError("regularization found no Weyl element for " + nu.to_string());
}

KacLabels kac_labels(const Weight& lambda) {
    const RootSystem& rs = root_system(lambda.algebra());
    if (!is_super(rs.algebra)) throw UsageError("Kac labels are defined for F4 and G3 only");
    const CartanData cd = cartan_data(rs.base);
    KacLabels out;
    for (std::size_t i = 0; i < rs.base.size(); ++i) {
        out.a.push_back(cd.row_scale[i] * pair(lambda, rs.base[i].weight));
        if (rs.base[i].isotropic) out.odd_index = static_cast<int>(i);
    }
    const auto& a = out.a;
    if (rs.algebra == AlgebraId::F4) {
        out.k = (Rational(2) * a[0] - Rational(3) * a[1] - Rational(4) * a[2] - Rational(2) * a[3]) / Rational(3);
    } else {
        out.k = (a[0] - Rational(2) * a[1] - Rational(3) * a[2]) / Rational(2);
    }
    return out;
}

bool is_dominant_kac(const Weight& lambda) {
    if (!in_lattice(lambda)) return false;
    const KacLabels kl = kac_labels(lambda);
    const auto& a = kl.a;
    // Condition 1: even labels in Z+, the odd label nonnegative (its
    // integrality is not part of the integral-weight notion).
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < Rational(0)) return false;
        if (static_cast<int>(i) != kl.odd_index && !is_integer(a[i])) return false;
    }
    // Condition 2.
    if (!is_integer(kl.k) || kl.k < Rational(0)) return false;
    // Condition 3, read literally: the "k != 0" fragment adds nothing for k = 1.
    const std::int64_t k = kl.k.numerator();
    if (lambda.algebra() == AlgebraId::F4) {
        if (k == 0) return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == Rational(0); });
        if (k == 2) return a[1] == Rational(0) && a[3] == Rational(0);
        if (k == 3) return a[1] == Rational(2) * a[3] + Rational(1);
        return true;
    }
    if (k == 0) return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == Rational(0); });
    if (k == 2) return a[1] == Rational(0);
    return true;
}

bool is_dominant_coordinates(const Weight& lambda) {
    if (!in_lattice(lambda)) return false;
    const RootSystem& rs = root_system(lambda.algebra());
    const Exponent b = (lambda + rs.rho).scaled();  // doubled lambda + rho
    if (lambda.algebra() == AlgebraId::F4) {
        if (!(b[0] > b[1] && b[1] > b[2] && b[2] > 0)) return false;
        if ((b[0] - b[1]) % 2 != 0 || (b[1] - b[2]) % 2 != 0) return false;
        // The trivial weight (b = rho, b4 = -3/2) is dominant; the listed
        // conditions omit this case.
        if (lambda.is_zero()) return true;
        if (b[3] < -1) return false;
        if (b[3] == -1) return b[0] == b[1] + 2 && b[2] == 1;
        if (b[3] == 0) return b[0] - b[1] - b[2] == 0;
        return true;
    }
    if (lambda.algebra() == AlgebraId::G3) {
        if (b[0] % 2 != 0 || b[1] % 2 != 0 || b[2] % 2 == 0) return false;
        if (!(2 * b[0] > b[1] && b[1] > b[0] && b[0] > 0)) return false;
        if (b[2] > 0) return true;
        if (b[2] == -1) return b[1] == 2 * b[0] - 2;
        if (b[2] == -5) return b[0] == 4 && b[1] == 6;
        return false;
    }
    throw UsageError("dominance tests are defined for F4 and G3 only");
}

}  // namespace fg
