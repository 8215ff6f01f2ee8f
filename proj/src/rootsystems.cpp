#include "fg/rootsystems.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "fg/errors.hpp"

namespace fg {

namespace {

Rational R(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

Root make_root(const Weight& w, int parity) {
    return Root{w, Parity{parity}, pair(w, w) == Rational(0)};
}

Weight W(AlgebraId a, std::vector<Rational> c) { return Weight(a, c); }

// Even and odd root lists in the coordinates of `space`.
void f4_roots(AlgebraId a, std::vector<Root>& even, std::vector<Root>& odd, bool with_odd) {
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            for (int si : {1, -1}) {
                for (int sj : {1, -1}) {
                    std::vector<Rational> c(4, R(0));
                    c[i] = si;
                    c[j] = sj;
                    even.push_back(make_root(W(a, c), 0));
                }
            }
        }
        for (int s : {1, -1}) {
            std::vector<Rational> c(4, R(0));
            c[i] = s;
            even.push_back(make_root(W(a, c), 0));
        }
    }
    even.push_back(make_root(W(a, {0, 0, 0, 1}), 0));
    even.push_back(make_root(W(a, {0, 0, 0, -1}), 0));
    if (!with_odd) return;
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<Rational> c;
        for (int k = 0; k < 4; ++k) c.push_back((mask >> k) & 1 ? R(-1, 2) : R(1, 2));
        odd.push_back(make_root(W(a, c), 1));
    }
}

void g3_roots(AlgebraId a, std::vector<Root>& even, std::vector<Root>& odd, bool with_odd) {
    // eps_i in the (e1, e2, delta) coordinates, with e3 = -e1 - e2.
    const std::vector<std::vector<Rational>> eps = {{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}};
    auto vec = [&](int i, int s, int d) {
        std::vector<Rational> c(3, R(0));
        if (i >= 0)
            for (int k = 0; k < 3; ++k) c[k] = eps[i][k] * s;
        c[2] += d;
        return W(a, c);
    };
    for (int i = 0; i < 3; ++i)
        for (int s : {1, -1}) even.push_back(make_root(vec(i, s, 0), 0));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) even.push_back(make_root(vec(i, 1, 0) - vec(j, 1, 0), 0));
    even.push_back(make_root(vec(-1, 0, 2), 0));
    even.push_back(make_root(vec(-1, 0, -2), 0));
    if (!with_odd) return;
    odd.push_back(make_root(vec(-1, 0, 1), 1));
    odd.push_back(make_root(vec(-1, 0, -1), 1));
    for (int i = 0; i < 3; ++i)
        for (int s : {1, -1})
            for (int d : {1, -1}) odd.push_back(make_root(vec(i, s, d), 1));
}

std::vector<std::vector<int>> factor_blocks(const std::vector<Root>& simple, int rank) {
    const int n = static_cast<int>(simple.size());
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int i = 0; i < n; ++i) {
        if (comp[i] >= 0) continue;
        std::deque<int> queue{i};
        comp[i] = ncomp;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v = 0; v < n; ++v) {
                if (comp[v] < 0 && pair(simple[u].weight, simple[v].weight) != Rational(0)) {
                    comp[v] = ncomp;
                    queue.push_back(v);
                }
            }
        }
        ++ncomp;
    }
    std::vector<std::vector<int>> blocks(ncomp);
    std::vector<int> owner(rank, -1);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < rank; ++k) {
            if (simple[i].weight.scaled()[k] == 0) continue;
            if (owner[k] >= 0 && owner[k] != comp[i]) {
                throw ConsistencyError("simple ideals of the even part share a coordinate");
            }
            owner[k] = comp[i];
        }
    }
    for (int k = 0; k < rank; ++k)
        if (owner[k] >= 0) blocks[owner[k]].push_back(k);
    return blocks;
}

Weight half_sum(AlgebraId a, const std::vector<Root>& roots) {
    Weight s = Weight::zero(a);
    for (const auto& r : roots) s = s + r.weight;
    return s.scaled_by(R(1, 2));
}

bool contains(const std::vector<Root>& roots, const Weight& w) {
    return std::any_of(roots.begin(), roots.end(), [&](const Root& r) { return r.weight == w; });
}

}  // namespace

std::vector<Root> RootSystem::positive_roots() const {
    std::vector<Root> out = delta0_plus;
    out.insert(out.end(), delta1_plus.begin(), delta1_plus.end());
    return out;
}

std::vector<Root> RootSystem::all_roots() const {
    std::vector<Root> out = delta0;
    out.insert(out.end(), delta1.begin(), delta1.end());
    return out;
}

std::optional<Root> RootSystem::find_root(const Weight& w) const {
    for (const auto* list : {&delta0, &delta1})
        for (const auto& r : *list)
            if (r.weight.scaled() == w.scaled() && space_of(r.weight.algebra()) == space_of(w.algebra()))
                return r;
    return std::nullopt;
}

std::vector<Rational> base_coordinates(const std::vector<Root>& base, const Weight& w) {
    const int n = w.rank();
    if (static_cast<int>(base.size()) != n) throw UsageError("base size does not match the rank");
    // Augmented system [B | w] with the base vectors as columns.
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = base[j].weight.coord(i);
        m[i][n] = w.coord(i);
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && m[piv][col] == Rational(0)) ++piv;
        if (piv == n) throw UsageError("degenerate base");
        std::swap(m[piv], m[col]);
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == Rational(0)) continue;
            Rational f = m[r][col] / m[col][col];
            for (int k = col; k <= n; ++k) m[r][k] -= f * m[col][k];
        }
    }
    std::vector<Rational> x(n);
    for (int i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
    return x;
}

CartanData cartan_data(const std::vector<Root>& base) {
    if (base.empty()) throw UsageError("empty base");
    // Linear independence check (throws on degeneracy).
    base_coordinates(base, base.front().weight);
    const std::size_t n = base.size();
    CartanData out;
    out.matrix.assign(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = pair(base[i].weight, base[j].weight);
        Rational scale;
        const Rational norm = row[i];
        if (norm != Rational(0)) {
            scale = Rational(2) / norm;
        } else {
            std::int64_t den = 1, num = 0;
            for (const auto& x : row) {
                den = std::lcm(den, x.denominator());
                num = std::gcd(num, x.numerator());
            }
            if (num == 0) throw UsageError("degenerate base: isotropic root orthogonal to the base");
            // First nonzero entry positive, primitive integer vector.
            scale = Rational(den) / Rational(num);
            auto first = std::find_if(row.begin(), row.end(), [](const Rational& x) { return x != Rational(0); });
            if (*first * scale < Rational(0)) scale = -scale;
        }
        out.row_scale.push_back(scale);
        for (std::size_t j = 0; j < n; ++j) {
            Rational e = row[j] * scale;
            if (!is_integer(e)) throw ConsistencyError("non-integral Cartan entry");
            out.matrix[i][j] = e.numerator();
        }
    }
    return out;
}

Matrix cartan_matrix(const std::vector<Root>& base) { return cartan_data(base).matrix; }

std::vector<Root> positive_from_base(const RootSystem& system, const std::vector<Root>& base) {
    std::vector<Root> out;
    for (const auto& r : system.all_roots()) {
        auto x = base_coordinates(base, r.weight);
        if (std::all_of(x.begin(), x.end(), [](const Rational& q) { return q >= Rational(0); })) out.push_back(r);
    }
    return out;
}

RootSystem build_root_system(AlgebraId a) {
    std::vector<Root> even, odd, base, even_simple;
    const AlgebraId s = space_of(a);
    if (s == AlgebraId::F4) {
        f4_roots(a, even, odd, a == AlgebraId::F4);
        even_simple = {make_root(W(a, {0, 0, 1, 0}), 0), make_root(W(a, {0, 1, -1, 0}), 0),
                       make_root(W(a, {1, -1, 0, 0}), 0), make_root(W(a, {0, 0, 0, 1}), 0)};
        if (a == AlgebraId::F4) {
            base = {make_root(W(a, {R(-1, 2), R(-1, 2), R(-1, 2), R(1, 2)}), 1), even_simple[0],
                    even_simple[1], even_simple[2]};
        } else {
            base = even_simple;
        }
    } else if (s == AlgebraId::G3) {
        g3_roots(a, even, odd, a == AlgebraId::G3);
        even_simple = {make_root(W(a, {1, 0, 0}), 0), make_root(W(a, {-1, 1, 0}), 0),
                       make_root(W(a, {0, 0, 2}), 0)};
        if (a == AlgebraId::G3) {
            // e3 + delta = (-1, -1 | 1).
            base = {make_root(W(a, {-1, -1, 1}), 1), even_simple[0], even_simple[1]};
        } else {
            base = even_simple;
        }
    } else if (s == AlgebraId::SL3) {
        for (auto v : {std::vector<Rational>{2, -1}, {-1, 2}, {1, 1}}) {
            Weight w = W(a, v);
            even.push_back(make_root(w, 0));
            even.push_back(make_root(-w, 0));
        }
        even_simple = {make_root(W(a, {2, -1}), 0), make_root(W(a, {-1, 2}), 0)};
        base = even_simple;
    } else {
        even = {make_root(W(a, {2}), 0), make_root(W(a, {-2}), 0)};
        even_simple = {even[0]};
        base = even_simple;
    }

    RootSystem rs{a, even, odd, {}, {}, base, {}, Weight::zero(a), Weight::zero(a), Weight::zero(a),
                  even_simple, {}};
    for (const auto& r : positive_from_base(rs, base)) {
        (r.parity.value == 0 ? rs.delta0_plus : rs.delta1_plus).push_back(r);
    }
    rs.cartan = cartan_matrix(base);
    rs.rho0 = half_sum(a, rs.delta0_plus);
    rs.rho1 = half_sum(a, rs.delta1_plus);
    rs.rho = rs.rho0 - rs.rho1;
    rs.factor_coords = factor_blocks(even_simple, rank_of(a));
    return rs;
}

const RootSystem& root_system(AlgebraId a) {
    static const RootSystem systems[] = {
        build_root_system(AlgebraId::F4),    build_root_system(AlgebraId::G3),
        build_root_system(AlgebraId::B3xA1), build_root_system(AlgebraId::G2xA1),
        build_root_system(AlgebraId::SL3),   build_root_system(AlgebraId::SL2)};
    return systems[static_cast<int>(a)];
}

BaseState distinguished_state(AlgebraId a) {
    const RootSystem& rs = root_system(a);
    return BaseState{rs.base, rs.positive_roots()};
}

BaseState odd_reflection(const BaseState& state, const Root& alpha) {
    if (!contains(state.base, alpha.weight)) {
        throw UsageError("odd reflection: " + alpha.weight.to_string() + " is not in the base");
    }
    if (alpha.parity.value != 1 || !alpha.isotropic) {
        throw UsageError("odd reflection: " + alpha.weight.to_string() + " is not odd isotropic");
    }
    const RootSystem& rs = root_system(alpha.weight.algebra());
    BaseState out;
    for (const auto& beta : state.base) {
        if (beta.weight == alpha.weight) {
            out.base.push_back(*rs.find_root(-alpha.weight));
        } else if (pair(alpha.weight, beta.weight) != Rational(0)) {
            auto shifted = rs.find_root(beta.weight + alpha.weight);
            if (!shifted) throw ConsistencyError("odd reflection produced a non-root");
            out.base.push_back(*shifted);
        } else {
            out.base.push_back(beta);
        }
    }
    // Positive roots: drop alpha (and 2 alpha), add -alpha (and -2 alpha).
    const Weight two_alpha = alpha.weight * 2;
    for (const auto& r : state.positive)
        if (!(r.weight == alpha.weight) && !(r.weight == two_alpha)) out.positive.push_back(r);
    out.positive.push_back(*rs.find_root(-alpha.weight));
    if (auto r = rs.find_root(-two_alpha)) out.positive.push_back(*r);
    return out;
}

bool same_base(const std::vector<Root>& a, const std::vector<Root>& b) {
    if (a.size() != b.size()) return false;
    return std::all_of(a.begin(), a.end(), [&](const Root& r) { return contains(b, r.weight); });
}

std::vector<BaseState> odd_base_orbit(AlgebraId a) {
    std::vector<BaseState> seen{distinguished_state(a)};
    for (std::size_t i = 0; i < seen.size(); ++i) {
        const BaseState current = seen[i];
        for (const auto& alpha : current.base) {
            if (alpha.parity.value != 1 || !alpha.isotropic) continue;
            BaseState next = odd_reflection(current, alpha);
            bool known = std::any_of(seen.begin(), seen.end(),
                                     [&](const BaseState& s) { return same_base(s.base, next.base); });
            if (!known) seen.push_back(next);
        }
    }
    return seen;
}

}  // namespace fg
