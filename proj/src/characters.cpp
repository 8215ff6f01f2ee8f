#include "fg/characters.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "fg/errors.hpp"
#include "fg/weylgroup.hpp"

namespace fg {

namespace {

// ---------------------------------------------------------------------------
// Simple factors of the even part and their Freudenthal characters.
//
// Each factor works on its own coordinates (doubled, so everything is an
// integer) with a positive-definite integer Gram matrix: the restriction of
// the algebra's form, negated on the delta line where the form is negative.

using Vec = Exponent;  // first `dim` slots used

struct Factor {
    std::vector<int> coords;  // slots in the algebra's coordinates
    std::vector<std::vector<std::int64_t>> gram;
    std::vector<Vec> positive, simple;
    Vec rho2{};  // doubled rho of the factor

    int dim() const { return static_cast<int>(coords.size()); }
    std::int64_t dot(const Vec& u, const Vec& v) const {
        std::int64_t s = 0;
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j) s += std::int64_t(u[i]) * gram[i][j] * v[j];
        return s;
    }
    bool dominant(const Vec& v) const {
        return std::all_of(simple.begin(), simple.end(), [&](const Vec& s) { return dot(v, s) >= 0; });
    }
    Vec reflect(const Vec& v, const Vec& s) const {
        const std::int64_t n = 2 * dot(v, s) / dot(s, s);
        Vec out = v;
        for (int i = 0; i < dim(); ++i) out[i] = static_cast<std::int32_t>(v[i] - n * s[i]);
        return out;
    }
    Vec to_dominant(Vec v) const {
        bool moved = true;
        while (moved) {
            moved = false;
            for (const auto& s : simple) {
                if (dot(v, s) < 0) {
                    v = reflect(v, s);
                    moved = true;
                }
            }
        }
        return v;
    }
};

struct FactorCharacter {
    std::vector<std::pair<Vec, std::int64_t>> terms;
    std::int64_t dim = 0;
    Vec lo{}, hi{};  // bounding box of the support
};

Vec add(const Vec& a, const Vec& b, int k = 1) {
    Vec out{};
    for (int i = 0; i < kMaxRank; ++i) out[i] = a[i] + k * b[i];
    return out;
}

std::vector<Factor> build_factors(AlgebraId g0) {
    const RootSystem& rs = root_system(g0);
    const BilinearForm& form = rs.form();
    std::vector<Factor> out;
    for (const auto& coords : rs.factor_coords) {
        Factor f;
        f.coords = coords;
        const int d = f.dim();
        f.gram.assign(d, std::vector<std::int64_t>(d));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) f.gram[i][j] = form.scaled_gram()[coords[i]][coords[j]];
        if (f.gram[0][0] < 0)
            for (auto& row : f.gram)
                for (auto& x : row) x = -x;
        auto restrict_to = [&](const Weight& w, Vec& v) {
            for (int k = 0; k < w.rank(); ++k) {
                const auto it = std::find(coords.begin(), coords.end(), k);
                if (it == coords.end()) {
                    if (w.scaled()[k] != 0) return false;
                } else {
                    v[it - coords.begin()] = w.scaled()[k];
                }
            }
            return true;
        };
        for (const auto& r : rs.delta0_plus) {
            Vec v{};
            if (restrict_to(r.weight, v)) f.positive.push_back(v);
        }
        for (const auto& r : rs.even_simple) {
            Vec v{};
            if (restrict_to(r.weight, v)) f.simple.push_back(v);
        }
        Vec sum{};
        for (const auto& p : f.positive) sum = add(sum, p);
        for (int i = 0; i < d; ++i) f.rho2[i] = sum[i] / 2;
        out.push_back(std::move(f));
    }
    return out;
}

const std::vector<Factor>& factors_of(AlgebraId g0) {
    static const std::vector<Factor> all[] = {{},
                                              {},
                                              build_factors(AlgebraId::B3xA1),
                                              build_factors(AlgebraId::G2xA1),
                                              build_factors(AlgebraId::SL3),
                                              build_factors(AlgebraId::SL2)};
    return all[static_cast<int>(g0)];
}

// Freudenthal's recursion over the dominant weights, then W-orbit expansion.
FactorCharacter freudenthal(const Factor& f, const Vec& top) {
    if (!f.dominant(top)) throw UsageError("highest weight is not dominant for the factor");
    // Dominant weights below `top`: closure under subtracting positive roots
    // while staying dominant.
    std::vector<Vec> dominant{top};
    std::unordered_set<Vec, ExponentHash> seen{top};
    for (std::size_t i = 0; i < dominant.size(); ++i) {
        for (const auto& a : f.positive) {
            const Vec next = add(dominant[i], a, -1);
            if (f.dominant(next) && seen.insert(next).second) dominant.push_back(next);
        }
    }
    // Higher weights first: (mu, rho) strictly decreases along positive roots.
    std::sort(dominant.begin(), dominant.end(),
              [&](const Vec& x, const Vec& y) { return f.dot(x, f.rho2) > f.dot(y, f.rho2); });
    const Vec top_rho = add(top, f.rho2);
    const std::int64_t top_norm = f.dot(top_rho, top_rho);
    std::unordered_map<Vec, std::int64_t, ExponentHash> mult;
    mult[top] = 1;
    for (std::size_t i = 1; i < dominant.size(); ++i) {
        const Vec& mu = dominant[i];
        std::int64_t num = 0;
        for (const auto& a : f.positive) {
            for (int k = 1;; ++k) {
                const Vec nu = add(mu, a, k);
                const auto it = mult.find(f.to_dominant(nu));
                if (it == mult.end()) break;
                num += it->second * f.dot(nu, a);
            }
        }
        num *= 2;
        const Vec mu_rho = add(mu, f.rho2);
        const std::int64_t den = top_norm - f.dot(mu_rho, mu_rho);
        if (den <= 0 || num % den != 0) throw ConsistencyError("Freudenthal recursion produced a non-integer multiplicity");
        if (num / den > 0) mult[mu] = num / den;
    }
    FactorCharacter out;
    for (int i = 0; i < f.dim(); ++i) out.lo[i] = out.hi[i] = top[i];
    for (const auto& [mu, m] : mult) {
        std::vector<Vec> orbit{mu};
        std::unordered_set<Vec, ExponentHash> in_orbit{mu};
        for (std::size_t i = 0; i < orbit.size(); ++i) {
            for (const auto& s : f.simple) {
                const Vec r = f.reflect(orbit[i], s);
                if (in_orbit.insert(r).second) orbit.push_back(r);
            }
        }
        for (const auto& v : orbit) {
            out.terms.emplace_back(v, m);
            out.dim += m;
            for (int i = 0; i < f.dim(); ++i) {
                out.lo[i] = std::min(out.lo[i], v[i]);
                out.hi[i] = std::max(out.hi[i], v[i]);
            }
        }
    }
    std::sort(out.terms.begin(), out.terms.end());
    return out;
}

// Thread-safe memo of factor characters: compute outside the lock, first
// writer wins (recomputation is pure, so a lost race is harmless).
std::shared_ptr<const FactorCharacter> factor_character(AlgebraId g0, int index, const Vec& top) {
    struct Key {
        int algebra, index;
        Vec top;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept {
            return ExponentHash{}(k.top) * 31 + static_cast<std::size_t>(k.algebra * 7 + k.index);
        }
    };
    static std::mutex mu;
    static std::unordered_map<Key, std::shared_ptr<const FactorCharacter>, KeyHash> cache;
    const Key key{static_cast<int>(g0), index, top};
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto value = std::make_shared<const FactorCharacter>(freudenthal(factors_of(g0)[index], top));
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, value).first->second;
}

AlgebraId g0_of(AlgebraId a) { return is_super(a) ? even_part(a) : a; }

Vec project(const Factor& f, const Exponent& e) {
    Vec v{};
    for (int i = 0; i < f.dim(); ++i) v[i] = e[f.coords[i]];
    return v;
}

// Dense accumulator over the bounding box of a sum of factor products.
class DenseAccumulator {
  public:
    DenseAccumulator(int rank, const Exponent& lo, const Exponent& hi) : rank_(rank), lo_(lo) {
        std::size_t size = 1;
        for (int i = 0; i < rank; ++i) {
            extent_[i] = hi[i] - lo[i] + 1;
            size *= static_cast<std::size_t>(extent_[i]);
        }
        data_.assign(size, 0);
    }
    void add(const Exponent& e, std::int64_t c) { data_[index(e)] += c; }
    FormalCharacter collect(AlgebraId algebra) const {
        FormalCharacter out(algebra);
        Exponent e{};
        for (std::size_t i = 0; i < data_.size(); ++i) {
            if (data_[i] == 0) continue;
            std::size_t r = i;
            for (int k = rank_ - 1; k >= 0; --k) {
                e[k] = static_cast<std::int32_t>(r % extent_[k]) + lo_[k];
                r /= extent_[k];
            }
            out.add_term(e, data_[i]);
        }
        return out;
    }

  private:
    std::size_t index(const Exponent& e) const {
        std::size_t i = 0;
        for (int k = 0; k < rank_; ++k) i = i * extent_[k] + static_cast<std::size_t>(e[k] - lo_[k]);
        return i;
    }
    int rank_;
    Exponent lo_;
    std::array<std::int64_t, kMaxRank> extent_{1, 1, 1, 1};
    std::vector<std::int64_t> data_;
};

// Adds coeff * (product of factor characters) to the accumulator.
template <typename Sink>
void expand_product(const std::vector<Factor>& factors,
                    const std::vector<std::shared_ptr<const FactorCharacter>>& parts, std::int64_t coeff,
                    Sink&& sink) {
    Exponent e{};
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t k, std::int64_t c) {
        if (k == parts.size()) {
            sink(e, c);
            return;
        }
        const Factor& f = factors[k];
        for (const auto& [v, m] : parts[k]->terms) {
            for (int i = 0; i < f.dim(); ++i) e[f.coords[i]] = v[i];
            rec(k + 1, c * m);
        }
    };
    rec(0, coeff);
}

// Positive odd roots as doubled vectors, optionally skipping one root.
std::vector<Exponent> odd_positive(AlgebraId a, const std::optional<Weight>& skip) {
    std::vector<Exponent> out;
    for (const auto& r : root_system(a).delta1_plus)
        if (!skip || r.weight != *skip) out.push_back(r.weight.scaled());
    return out;
}

// sum over subsets S of `odd` of chi0(lambda - |S|), as a decomposition.
G0Decomposition subset_sum(const Weight& lambda, const std::vector<Exponent>& odd) {
    const AlgebraId a = lambda.algebra();
    const RootSystem& rs = root_system(a);
    const Exponent base = (lambda + rs.rho0).scaled();
    const Exponent rho0 = rs.rho0.scaled();
    G0Decomposition out;
    const std::size_t n = odd.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Exponent v = base;
        for (std::size_t j = 0; j < n; ++j)
            if (mask >> j & 1)
                for (int i = 0; i < kMaxRank; ++i) v[i] -= odd[j][i];
        const int sign = regularize_scaled(rs, v);
        if (sign == 0) continue;
        for (int i = 0; i < kMaxRank; ++i) v[i] -= rho0[i];
        if ((out[v] += sign) == 0) out.erase(v);
    }
    return out;
}

void require_lattice(const Weight& lambda) {
    if (!is_super(lambda.algebra())) throw UsageError("characters are computed for F4 and G3 weights");
    if (!in_lattice(lambda)) throw UsageError("weight " + lambda.to_string() + " is outside the integral lattice");
}

void require_dominant(const Weight& lambda) {
    require_lattice(lambda);
    if (!is_dominant_coordinates(lambda)) throw UsageError("weight " + lambda.to_string() + " is not dominant integral");
}

SimpleCharacter finish(const Weight& lambda, std::optional<BlockWeight> bw, Method method, G0Decomposition d) {
    for (const auto& [nu, n] : d) {
        if (n < 0) {
            throw ConsistencyError(method_name(method) + " character of " + lambda.to_string() +
                                   " has a negative even-part multiplicity");
        }
    }
    const auto top = d.find(lambda.scaled());
    if (top == d.end() || top->second != 1) {
        throw ConsistencyError(method_name(method) + " character of " + lambda.to_string() +
                               " does not have top coefficient 1");
    }
    SimpleCharacter out{lambda};
    out.block_weight = std::move(bw);
    out.method = method;
    out.decomposition = std::move(d);
    out.dim = decomposition_dim(lambda.algebra(), out.decomposition);
    out.sdim = decomposition_sdim(lambda.algebra(), out.decomposition);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------

G0Character freudenthal_character(AlgebraId algebra, const Weight& nu) {
    const AlgebraId g0 = g0_of(algebra);
    if (space_of(nu.algebra()) != space_of(g0)) throw UsageError("weight and algebra live in different spaces");
    const auto& factors = factors_of(g0);
    std::vector<std::shared_ptr<const FactorCharacter>> parts;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        const Vec top = project(factors[k], nu.scaled());
        if (!factors[k].dominant(top)) throw UsageError("weight " + nu.to_string() + " is not dominant for the even part");
        parts.push_back(factor_character(g0, static_cast<int>(k), top));
    }
    // Integrality: the orbit expansion only stays integral on the lattice.
    if (weyl_dimension(g0, nu.as(g0)) <= 0) throw UsageError("weight " + nu.to_string() + " is not integral");
    FormalCharacter ch(space_of(g0) == g0 ? g0 : nu.algebra());
    expand_product(factors, parts, 1, [&](const Exponent& e, std::int64_t c) { ch.add_term(e, c); });
    G0Character out{nu, std::move(ch), 0};
    out.dim = specialize_dim(out.character);
    if (out.dim != weyl_dimension(g0, nu.as(g0))) {
        throw ConsistencyError("Freudenthal dimension disagrees with the Weyl dimension formula for " + nu.to_string());
    }
    return out;
}

std::int64_t weyl_dimension(AlgebraId algebra, const Weight& nu) {
    const AlgebraId g0 = g0_of(algebra);
    const RootSystem& rs = root_system(g0);
    const BilinearForm& form = rs.form();
    const Exponent v = (nu.as(g0) + rs.rho0).scaled();
    Rational d(1);
    for (const auto& r : rs.delta0_plus) {
        const std::int64_t num = form.pair_scaled(v, r.weight.scaled());
        if (num == 0) return 0;
        d *= Rational(num, form.pair_scaled(rs.rho0.scaled(), r.weight.scaled()));
    }
    if (!is_integer(d)) throw UsageError("weight " + nu.to_string() + " is not integral for the even part");
    return d.numerator();
}

G0Decomposition chi0_decomposition(const Weight& nu) {
    require_lattice(nu);
    return subset_sum(nu, {});
}

FormalCharacter chi0(const Weight& nu) { return materialize(nu.algebra(), chi0_decomposition(nu)); }

G0Decomposition euler_decomposition(const Weight& lambda) {
    require_lattice(lambda);
    return subset_sum(lambda, odd_positive(lambda.algebra(), std::nullopt));
}

FormalCharacter euler_char(const Weight& lambda) { return materialize(lambda.algebra(), euler_decomposition(lambda)); }

FormalCharacter materialize(AlgebraId algebra, const G0Decomposition& d) {
    const AlgebraId g0 = g0_of(algebra);
    const auto& factors = factors_of(g0);
    const int rank = rank_of(algebra);
    if (d.empty()) return FormalCharacter(algebra);
    std::vector<std::vector<std::shared_ptr<const FactorCharacter>>> all_parts;
    Exponent lo{}, hi{};
    bool first = true;
    for (const auto& [nu, n] : d) {
        std::vector<std::shared_ptr<const FactorCharacter>> parts;
        for (std::size_t k = 0; k < factors.size(); ++k) {
            parts.push_back(factor_character(g0, static_cast<int>(k), project(factors[k], nu)));
            const Factor& f = factors[k];
            for (int i = 0; i < f.dim(); ++i) {
                const int slot = f.coords[i];
                if (first || parts.back()->lo[i] < lo[slot]) lo[slot] = parts.back()->lo[i];
                if (first || parts.back()->hi[i] > hi[slot]) hi[slot] = parts.back()->hi[i];
            }
        }
        first = false;
        all_parts.push_back(std::move(parts));
    }
    DenseAccumulator acc(rank, lo, hi);
    std::size_t i = 0;
    for (const auto& [nu, n] : d) {
        expand_product(factors, all_parts[i++], n, [&](const Exponent& e, std::int64_t c) { acc.add(e, c); });
    }
    return acc.collect(algebra);
}

std::int64_t decomposition_dim(AlgebraId algebra, const G0Decomposition& d) {
    std::int64_t s = 0;
    for (const auto& [nu, n] : d) s += n * weyl_dimension(algebra, Weight::from_scaled(algebra, nu));
    return s;
}

std::int64_t decomposition_sdim(AlgebraId algebra, const G0Decomposition& d) {
    std::int64_t s = 0;
    for (const auto& [nu, n] : d) {
        const std::int64_t dim = weyl_dimension(algebra, Weight::from_scaled(algebra, nu));
        s += (exponent_parity(algebra, nu) ? -1 : 1) * n * dim;
    }
    return s;
}

G0Decomposition decomposition_add(const G0Decomposition& a, const G0Decomposition& b, std::int64_t sign) {
    G0Decomposition out = a;
    for (const auto& [nu, n] : b)
        if ((out[nu] += sign * n) == 0) out.erase(nu);
    return out;
}

std::string method_name(Method m) {
    switch (m) {
        case Method::Typical: return "typical";
        case Method::Recursion: return "recursion";
        case Method::DirectBLM: return "direct_BLM";
        case Method::DirectBLSM: return "direct_BLSM";
        case Method::PairSum: return "pair_sum";
    }
    return "";
}

const FormalCharacter& SimpleCharacter::character() const {
    if (!character_) {
        character_ = materialize(lambda.algebra(), decomposition);
        if (!is_module_character(*character_, lambda)) {
            throw ConsistencyError("materialized character of " + lambda.to_string() + " is not a module character");
        }
    }
    return *character_;
}

SimpleCharacter typical_character(const Weight& lambda) {
    require_dominant(lambda);
    if (atypicality(lambda) != 0) throw UsageError("weight " + lambda.to_string() + " is atypical");
    return finish(lambda, std::nullopt, Method::Typical, euler_decomposition(lambda));
}

SimpleCharacter atypical_character(const BlockWeight& bw) {
    if (bw.special == Special::L1 || bw.special == Special::L2) {
        throw UsageError("lambda1 / lambda2 need the special character formula");
    }
    auto d = subset_sum(bw.lambda, odd_positive(bw.lambda.algebra(), bw.vanishing_root.weight));
    return finish(bw.lambda, bw, Method::DirectBLM, std::move(d));
}

G0Decomposition blsm_numerator(const BlockWeight& bw) {
    const AlgebraId a = bw.lambda.algebra();
    return decomposition_add(subset_sum(bw.lambda, odd_positive(a, std::nullopt)),
                             subset_sum(bw.lambda, odd_positive(a, bw.vanishing_root.weight)));
}

SimpleCharacter special_character(const BlockWeight& bw) {
    if (bw.special != Special::L1 && bw.special != Special::L2) {
        throw UsageError("the special character formula applies to lambda1 / lambda2 only");
    }
    G0Decomposition d = blsm_numerator(bw);
    for (auto& [nu, n] : d) {
        if (n % 2 != 0) throw ConsistencyError("special character formula leaves an odd coefficient");
        n /= 2;
    }
    return finish(bw.lambda, bw, Method::DirectBLSM, std::move(d));
}

SimpleCharacter pair_sum_character(const BlockWeight& bw) {
    if (bw.special != Special::L1) throw UsageError("the pair-sum formula applies to lambda1 only");
    const BlockWeight l2 = block_weight(bw.block, *special_values(bw.block).lambda2);
    const auto blm = subset_sum(l2.lambda, odd_positive(l2.lambda.algebra(), l2.vanishing_root.weight));
    return finish(bw.lambda, bw, Method::PairSum, decomposition_add(blm, special_character(l2).decomposition, -1));
}

SimpleCharacter direct_character(const BlockWeight& bw) {
    if (bw.special == Special::L1) return pair_sum_character(bw);
    if (bw.special == Special::L2) return special_character(bw);
    return atypical_character(bw);
}

SimpleCharacter character_by_recursion(const BlockWeight& bw) {
    struct Key {
        int algebra, a, b;
        Rational c;
        bool operator<(const Key& o) const {
            return std::tie(algebra, a, b, c) < std::tie(o.algebra, o.a, o.b, o.c);
        }
    };
    static std::mutex mu;
    static std::map<Key, G0Decomposition> memo;
    const Key key{static_cast<int>(bw.block.algebra), bw.block.a, bw.block.b, bw.c};
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = memo.find(key); it != memo.end()) return finish(bw.lambda, bw, Method::Recursion, it->second);
    }
    G0Decomposition d;
    if (bw.special == Special::L0 || bw.special == Special::L2) {
        d = direct_character(bw).decomposition;
    } else if (bw.special == Special::L1) {
        const BlockWeight l2 = block_weight(bw.block, *special_values(bw.block).lambda2);
        d = decomposition_add(euler_decomposition(bw.lambda), character_by_recursion(l2).decomposition);
    } else {
        const auto mu_bw = toward_branch(bw);
        d = decomposition_add(euler_decomposition(bw.lambda), character_by_recursion(*mu_bw).decomposition, -1);
    }
    {
        std::lock_guard<std::mutex> lock(mu);
        memo.emplace(key, d);
    }
    return finish(bw.lambda, bw, Method::Recursion, std::move(d));
}

SimpleCharacter simple_character(const Weight& lambda) {
    require_dominant(lambda);
    const auto bw = locate(lambda);
    if (!bw) return typical_character(lambda);
    return direct_character(*bw);
}

std::int64_t superdimension(const BlockWeight& bw) {
    const std::int64_t d = fiber_dimension(bw.block);
    if (bw.special == Special::L1 || bw.special == Special::L2) return d;
    return (sign_s(bw).value ? -2 : 2) * d;
}

std::int64_t generic_superdimension_oracle(const BlockWeight& bw) {
    if (!is_generic(bw)) throw UsageError("the oracle applies to generic weights only");
    if (bw.special != Special::None) throw UsageError("the oracle does not apply to special weights");
    // sum_S (-1)^{p(lambda) + |S|} prod_{alpha in Delta0+} (lambda - |S| + rho0, alpha) / (rho0, alpha):
    // the product is already alternating under W, so no regularization is needed.
    const AlgebraId a = bw.lambda.algebra();
    const RootSystem& rs = root_system(a);
    std::vector<Weight> odd;
    for (const auto& r : rs.delta1_plus)
        if (r.weight != bw.vanishing_root.weight) odd.push_back(r.weight);
    const int p = parity_of(bw.lambda).value;
    Rational total(0);
    for (std::size_t mask = 0; mask < (std::size_t{1} << odd.size()); ++mask) {
        Weight nu = bw.lambda + rs.rho0;
        int size = 0;
        for (std::size_t j = 0; j < odd.size(); ++j) {
            if (mask >> j & 1) {
                nu = nu - odd[j];
                ++size;
            }
        }
        Rational term((p + size) % 2 ? -1 : 1);
        for (const auto& r : rs.delta0_plus) term *= pair(nu, r.weight) / pair(rs.rho0, r.weight);
        total += term;
    }
    if (!is_integer(total)) throw ConsistencyError("oracle sum is not an integer");
    return total.numerator();
}

bool kac_wakimoto_check(const Weight& lambda) {
    const SimpleCharacter ch = simple_character(lambda);
    return (ch.sdim != 0) == (atypicality(lambda) == 1);
}

bool is_module_character(const FormalCharacter& ch, const Weight& top) {
    if (ch.coefficient(top) != 1) return false;
    const RootSystem& rs = root_system(top.algebra());
    const int n = rs.algebra == top.algebra() ? top.rank() : 0;
    // Integer inverse of the base matrix: coordinates * det = adj * v.
    std::vector<std::vector<Rational>> inv;
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> e(n, Rational(0));
        e[i] = 1;
        inv.push_back(base_coordinates(rs.base, Weight(top.algebra(), e)));
    }
    std::int64_t den = 1;
    for (const auto& row : inv)
        for (const auto& x : row) den = std::lcm(den, x.denominator());
    std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[j][i] = boost::rational_cast<std::int64_t>(inv[i][j] * den);
    for (const auto& [e, c] : ch.terms()) {
        if (c <= 0) return false;
        for (int j = 0; j < n; ++j) {
            std::int64_t s = 0;
            for (int i = 0; i < n; ++i) s += m[j][i] * (top.scaled()[i] - e[i]);
            if (s < 0) return false;
        }
    }
    return true;
}

}  // namespace fg
