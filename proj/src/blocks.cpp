#include "fg/blocks.hpp"

#include <algorithm>
#include <cstdlib>

#include "fg/errors.hpp"
#include "fg/weylgroup.hpp"

namespace fg {

namespace {

Rational R(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

Weight f4_weight(const Rational& e1, const Rational& e2, const Rational& e3, const Rational& d) {
    return Weight(AlgebraId::F4, {e1, e2, e3, d});
}

Weight g3_weight(const Rational& e1, const Rational& e2, const Rational& d) {
    return Weight(AlgebraId::G3, {e1, e2, d});
}

bool is_half_step(const Rational& c) { return c.denominator() == 1 || c.denominator() == 2; }

// t1, t2, t3 of a non-symmetric F4 block (integers since a = b mod 3).
struct Ts {
    Rational t1, t2, t3;
};
Ts ts_of(const BlockId& b) {
    return Ts{R(2 * b.a + b.b, 3), R(b.a + 2 * b.b, 3), R(b.a - b.b, 3)};
}

// Every half-integer (F4) or half-odd integer (G3) in [lo, hi].
std::vector<Rational> lattice_c(const BlockId& block, const Rational& lo, const Rational& hi) {
    std::vector<Rational> out;
    // Work with doubled values to enumerate.
    auto floor2 = [](const Rational& r) {
        const Rational d = r * R(2);
        std::int64_t q = d.numerator() / d.denominator();
        if (q * d.denominator() > d.numerator()) --q;
        return q;
    };
    const std::int64_t start = floor2(lo) - 1, stop = floor2(hi) + 1;
    for (std::int64_t n = start; n <= stop; ++n) {
        const Rational c(n, 2);
        if (c < lo || c > hi) continue;
        if (block.algebra == AlgebraId::G3 && n % 2 == 0) continue;  // c in 1/2 + Z
        out.push_back(c);
    }
    return out;
}

bool permitted(const BlockId& block, const Rational& c) {
    if (!is_half_step(c)) return false;
    if (block.algebra == AlgebraId::F4) {
        if (block.a == block.b) {
            const Rational a(block.a);
            if (block.a == 1) return c >= R(3, 2) || c == R(-3, 2);
            return c >= R(-1) && c != a && c != a / R(2) && c != R(0);
        }
        const Ts t = ts_of(block);
        for (const Rational& x : {t.t2, t.t1 / R(2), t.t3, -t.t3 / R(2), -t.t2 / R(2), -t.t1}) {
            if (c == x) return false;
        }
        return true;
    }
    if (c.denominator() != 2) return false;
    const Rational a(block.a);
    if (block.a == 1) return c >= R(5, 2) || c == R(-5, 2);
    return c >= R(-1, 2) && c != R(0) && c != a / R(2) && c != R(3) * a / R(2);
}

void require_atypical(const BlockId& b) {
    if (b.typical) throw UsageError("typical blocks carry no c-parametrization");
}

}  // namespace

BlockId BlockId::f4(int a, int b) {
    if (a < b) std::swap(a, b);
    if (b < 1) throw UsageError("F4 block labels must be positive");
    if ((a - b) % 3 != 0) throw UsageError("F4 block labels need a = b (mod 3)");
    BlockId id;
    id.algebra = AlgebraId::F4;
    id.a = a;
    id.b = b;
    return id;
}

BlockId BlockId::g3(int a) {
    if (a < 1 || a % 2 == 0) throw UsageError("G3 block labels are odd positive integers");
    BlockId id;
    id.algebra = AlgebraId::G3;
    id.a = a;
    return id;
}

BlockId BlockId::make_typical(const Weight& lambda) {
    BlockId id;
    id.algebra = lambda.algebra();
    id.typical = true;
    id.typical_weight = lambda;
    return id;
}

std::string BlockId::to_string() const {
    if (typical) return "typical" + typical_weight->to_string();
    if (algebra == AlgebraId::F4) return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    return std::to_string(a);
}

bool BlockId::operator==(const BlockId& o) const {
    if (algebra != o.algebra || typical != o.typical) return false;
    if (typical) return *typical_weight == *o.typical_weight;
    return a == o.a && b == o.b;
}

BlockId parse_block(AlgebraId algebra, const std::string& text) {
    try {
        if (algebra == AlgebraId::F4) {
            const auto comma = text.find(',');
            if (comma == std::string::npos) throw UsageError("F4 blocks are given as a,b");
            std::size_t used = 0;
            const int a = std::stoi(text.substr(0, comma), &used);
            if (used != comma) throw UsageError("bad block label '" + text + "'");
            const std::string rest = text.substr(comma + 1);
            const int b = std::stoi(rest, &used);
            if (used != rest.size()) throw UsageError("bad block label '" + text + "'");
            return BlockId::f4(a, b);
        }
        if (algebra == AlgebraId::G3) {
            std::size_t used = 0;
            const int a = std::stoi(text, &used);
            if (used != text.size()) throw UsageError("bad block label '" + text + "'");
            return BlockId::g3(a);
        }
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const UsageError*>(&e)) throw;
        throw UsageError("bad block label '" + text + "'");
    }
    throw UsageError("blocks are defined for F4 and G3 only");
}

std::string special_name(Special s) {
    switch (s) {
        case Special::L0: return "lambda0";
        case Special::L1: return "lambda1";
        case Special::L2: return "lambda2";
        default: return "";
    }
}

Weight BlockWeight::lambda_rho() const { return lambda + root_system(lambda.algebra()).rho; }

std::vector<Root> vanishing_roots(const Weight& lambda) {
    const RootSystem& rs = root_system(lambda.algebra());
    if (!is_super(rs.algebra)) throw UsageError("atypicality is defined for F4 and G3 only");
    const Weight lr = lambda + rs.rho;
    std::vector<Root> out;
    for (const auto& r : rs.delta1_plus) {
        if (r.isotropic && pair(lr, r.weight) == Rational(0)) out.push_back(r);
    }
    // On a wall of delta (e.g. lambda+rho = (3,2,1|0)) two non-orthogonal
    // roots vanish; the lexicographically largest comes first.
    std::sort(out.begin(), out.end(), [](const Root& x, const Root& y) { return x.weight > y.weight; });
    return out;
}

int atypicality(const Weight& lambda) { return vanishing_roots(lambda).empty() ? 0 : 1; }

BlockId block_of(const Weight& lambda) {
    const auto roots = vanishing_roots(lambda);
    if (roots.empty()) return BlockId::make_typical(lambda);
    const RootSystem& rs = root_system(lambda.algebra());
    const Weight lr = lambda + rs.rho;
    const Weight& beta = roots.front().weight;
    const Weight reference = rs.algebra == AlgebraId::F4 ? f4_weight(R(1, 2), R(1, 2), R(1, 2), R(-1, 2))
                                                         : g3_weight(R(1), R(1), R(1));
    for (const auto& w : weyl_group(rs.algebra).elements) {
        if (w.apply(beta) != reference) continue;
        const Exponent v = w.apply(lr.scaled());
        if (rs.algebra == AlgebraId::F4) {
            // The stabilizer of the reference root permutes e1, e2, e3.
            std::array<std::int32_t, 3> e{v[0], v[1], v[2]};
            std::sort(e.begin(), e.end(), std::greater<>());
            const std::int32_t da = e[0] - e[1], db = e[1] - e[2];
            if (da % 2 != 0 || db % 2 != 0 || da <= 0 || db <= 0 || (da / 2 - db / 2) % 3 != 0) {
                throw ConsistencyError("no valid F4 block label for " + lambda.to_string());
            }
            return BlockId::f4(da / 2, db / 2);
        }
        // G3: the sl(2) label is |2(v, e1-e2)/(e1-e2, e1-e2)| = |(v, e1-e2)| / 3.
        const Rational p = pair(Weight::from_scaled(AlgebraId::G3, v), g3_weight(R(1), R(-1), R(0)));
        const Rational a = (p < Rational(0) ? -p : p) / R(3);
        if (!is_integer(a) || a.numerator() % 2 == 0) {
            throw ConsistencyError("no valid G3 block label for " + lambda.to_string());
        }
        return BlockId::g3(static_cast<int>(a.numerator()));
    }
    throw ConsistencyError("no Weyl element moves the vanishing root of " + lambda.to_string() +
                           " to the reference root");
}

std::vector<Rational> allowed_c(const BlockId& block, const Rational& lo, const Rational& hi) {
    require_atypical(block);
    std::vector<Rational> out;
    for (const auto& c : lattice_c(block, lo, hi))
        if (permitted(block, c)) out.push_back(c);
    return out;
}

std::optional<std::pair<Weight, std::string>> block_weight_formula(const BlockId& block, const Rational& c) {
    require_atypical(block);
    if (!permitted(block, c)) return std::nullopt;
    using P = std::pair<Weight, std::string>;
    const Rational half = R(1, 2);
    if (block.algebra == AlgebraId::F4 && block.a == block.b) {
        const Rational a(block.a);
        if (block.a == 1 && c == R(-3, 2)) return P{f4_weight(R(5, 2), R(3, 2), half, c), "special"};
        if (block.a > 1 && c == -half) return P{f4_weight(a + half, a - half, half, c), "special"};
        if (c > a) return P{f4_weight(a + c, c, c - a, c), "J1"};
        if (c > a / R(2) && c < a) return P{f4_weight(a + c, c, a - c, c), "J2"};
        if (c > R(0) && c < a / R(2)) return P{f4_weight(a + c, a - c, c, c), "J3"};
        return std::nullopt;
    }
    if (block.algebra == AlgebraId::F4) {
        const auto [t1, t2, t3] = ts_of(block);
        if (c > t2) return P{f4_weight(t1 + c, c - t3, c - t2, c), "I1"};
        if (c > t1 / R(2)) return P{f4_weight(t1 + c, c - t3, t2 - c, c), "I2"};
        if (c > t3) return P{f4_weight(t1 + c, t2 - c, c - t3, c), "I3"};
        if (c >= R(0)) return P{f4_weight(t1 + c, t2 - c, t3 - c, c), "I4"};
        if (c > -t3 / R(2)) return P{f4_weight(t1 + c, t2 - c, t3 - c, -c), "I5"};
        if (c > -t2 / R(2)) return P{f4_weight(t2 - c, t1 + c, t3 - c, -c), "I6"};
        if (c > -t1) return P{f4_weight(t2 - c, t3 - c, t1 + c, -c), "I7"};
        return P{f4_weight(t2 - c, t3 - c, -t1 - c, -c), "I8"};
    }
    const Rational a(block.a);
    if (block.a == 1) {
        if (c == R(-5, 2)) return P{g3_weight(R(2), R(3), c), "special"};
        return P{g3_weight(c - half, c + half, c), "J1"};
    }
    if (c == -half) return P{g3_weight(a / R(2) + half, a, c), "special"};
    if (c > R(3) * a / R(2)) return P{g3_weight(c - a / R(2), c + a / R(2), c), "J1"};
    if (c > a / R(2)) return P{g3_weight(a, c + a / R(2), c), "J2"};
    if (c > R(0)) return P{g3_weight(c + a / R(2), a, c), "J3"};
    return std::nullopt;
}

std::vector<Rational> unrealized_c(const BlockId& block, const Rational& lo, const Rational& hi) {
    std::vector<Rational> out;
    for (const auto& c : allowed_c(block, lo, hi))
        if (!block_weight_formula(block, c)) out.push_back(c);
    return out;
}

SpecialValues special_values(const BlockId& block) {
    require_atypical(block);
    SpecialValues sv;
    if (!block.is_d_infinity()) {
        sv.lambda0 = R(0);
        return sv;
    }
    std::vector<Rational> first;
    const Rational lo = block.algebra == AlgebraId::F4 ? R(-3, 2) : R(-5, 2);
    for (const auto& c : allowed_c(block, lo, Rational(3 * block.a + 4))) {
        if (block_weight_formula(block, c)) first.push_back(c);
        if (first.size() == 3) break;
    }
    if (first.size() != 3) throw ConsistencyError("block " + block.to_string() + " has fewer than three vertices");
    sv.lambda1 = first[0];
    sv.lambda2 = first[1];
    sv.lambda0 = first[2];
    return sv;
}

BlockWeight block_weight(const BlockId& block, const Rational& c) {
    const auto f = block_weight_formula(block, c);
    if (!f) throw UsageError("c = " + to_string(c) + " gives no dominant weight in block " + block.to_string());
    const RootSystem& rs = root_system(block.algebra);
    const Weight lambda = f->first - rs.rho;
    const auto roots = vanishing_roots(lambda);
    if (roots.empty()) throw ConsistencyError("block weight " + f->first.to_string() + " is typical");
    BlockWeight bw{block, c, lambda, roots.front(), f->second, Special::None};
    const SpecialValues sv = special_values(block);
    if (c == sv.lambda0) bw.special = Special::L0;
    if (sv.lambda1 && c == *sv.lambda1) bw.special = Special::L1;
    if (sv.lambda2 && c == *sv.lambda2) bw.special = Special::L2;
    return bw;
}

std::vector<BlockWeight> weights_of_block(const BlockId& block, const Rational& lo, const Rational& hi) {
    std::vector<BlockWeight> out;
    for (const auto& c : allowed_c(block, lo, hi))
        if (block_weight_formula(block, c)) out.push_back(block_weight(block, c));
    return out;
}

std::optional<BlockWeight> locate(const Weight& lambda) {
    const BlockId block = block_of(lambda);
    if (block.typical) return std::nullopt;
    const Weight lr = lambda + root_system(lambda.algebra()).rho;
    const Rational d = lr.coord(lr.rank() - 1);
    for (const Rational& c : {d, -d}) {
        const auto f = block_weight_formula(block, c);
        if (f && f->first == lr) return block_weight(block, c);
    }
    throw ConsistencyError("dominant weight " + lr.to_string() + " (lambda+rho) is missing from the parametrization of block " +
                           block.to_string());
}

std::optional<BlockWeight> toward_branch(const BlockWeight& bw) {
    if (bw.special != Special::None) return std::nullopt;
    const SpecialValues sv = special_values(bw.block);
    // Walk from c toward lambda0 in half steps to the next realized weight.
    const Rational step = bw.c > sv.lambda0 ? R(-1, 2) : R(1, 2);
    for (Rational c = bw.c + step; c != sv.lambda0 + step; c += step) {
        if (block_weight_formula(bw.block, c)) return block_weight(bw.block, c);
    }
    throw ConsistencyError("no chain neighbour toward lambda0 for c = " + to_string(bw.c));
}

bool is_generic(const BlockWeight& bw) {
    const BlockId& b = bw.block;
    require_atypical(b);
    if (b.algebra == AlgebraId::F4) {
        const auto [t1, t2, t3] = ts_of(b);
        return bw.c > t2 + R(3, 2) || bw.c < R(-3, 2) - t1;
    }
    return bw.c > R(3 * b.a, 2) - R(2);
}

Parity sign_s(const BlockWeight& bw) {
    if (bw.special == Special::L1 || bw.special == Special::L2 || bw.interval == "special") {
        throw UsageError("s(lambda) is undefined at the special weights lambda1, lambda2");
    }
    const int i = bw.interval.back() - '0';
    const Parity p = parity_of(bw.lambda);
    const bool shifted = i == 2 || i == 4 || i == 5 || i == 7;
    return shifted ? p + Parity{1} : p;
}

std::int64_t fiber_dimension(const BlockId& block) {
    require_atypical(block);
    if (block.algebra == AlgebraId::F4) return static_cast<std::int64_t>(block.a) * block.b * (block.a + block.b) / 2;
    return block.a;
}

}  // namespace fg
