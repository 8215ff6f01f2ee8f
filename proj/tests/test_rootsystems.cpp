// Root systems, Cartan matrices and odd reflections.

#include <doctest.h>

#include "fg/errors.hpp"
#include "fg/rootsystems.hpp"

using namespace fg;

namespace {

const Rational half(1, 2);

Weight f4(Rational a, Rational b, Rational c, Rational d) { return Weight(AlgebraId::F4, std::vector<Rational>{a, b, c, d}); }
Weight g3(Rational a, Rational b, Rational d) { return Weight(AlgebraId::G3, std::vector<Rational>{a, b, d}); }

std::vector<Root> roots(AlgebraId a, const std::vector<Weight>& ws) {
    std::vector<Root> out;
    for (const auto& w : ws) out.push_back(*root_system(a).find_root(w));
    return out;
}

bool in_orbit(const std::vector<BaseState>& orbit, const std::vector<Root>& base) {
    for (const auto& st : orbit) {
        if (same_base(st.base, base)) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("root counts and rho") {
    const RootSystem& f = root_system(AlgebraId::F4);
    CHECK(f.delta1.size() == 16);
    CHECK(f.delta0_plus.size() == 10);
    CHECK(f.delta1_plus.size() == 8);
    CHECK(f.rho == f4(Rational(5, 2), Rational(3, 2), half, Rational(-3, 2)));

    const RootSystem& g = root_system(AlgebraId::G3);
    CHECK(g.delta1.size() == 14);
    CHECK(g.delta0_plus.size() == 7);
    CHECK(g.rho == g3(2, 3, Rational(-5, 2)));
    CHECK(g.rho1 == g3(0, 0, Rational(7, 2)));
    CHECK(g.rho0 == g3(2, 3, 1));
}

TEST_CASE("Cartan matrices of the distinguished bases") {
    CHECK(root_system(AlgebraId::F4).cartan == Matrix{{0, 1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}});
    CHECK(root_system(AlgebraId::G3).cartan == Matrix{{0, 1, 0}, {-1, 2, -3}, {0, -1, 2}});
    CHECK(root_system(AlgebraId::SL2).cartan == Matrix{{2}});
}

TEST_CASE("property: every root is +-positive and positives are closed under base expansion") {
    for (AlgebraId a : {AlgebraId::F4, AlgebraId::G3}) {
        const RootSystem& rs = root_system(a);
        const auto pos = rs.positive_roots();
        for (const auto& r : rs.all_roots()) {
            const bool p = std::find(pos.begin(), pos.end(), r) != pos.end();
            const bool n = std::find(pos.begin(), pos.end(), Root{-r.weight, r.parity, r.isotropic}) != pos.end();
            CHECK(p != n);
        }
        CHECK(positive_from_base(rs, rs.base).size() == pos.size());
    }
}

TEST_CASE("odd reflections") {
    const BaseState sigma = distinguished_state(AlgebraId::F4);
    const Root a1 = sigma.base.front();
    CHECK(a1.weight == f4(-half, -half, -half, half));
    const BaseState s1 = odd_reflection(sigma, a1);
    CHECK(s1.base.front().weight == f4(half, half, half, -half));
    // involution
    CHECK(same_base(odd_reflection(s1, s1.base.front()).base, sigma.base));
    // only odd isotropic simple roots reflect
    CHECK_THROWS_AS(odd_reflection(sigma, sigma.base[1]), UsageError);

    const BaseState pi = distinguished_state(AlgebraId::G3);
    CHECK(pi.base.front().weight == g3(-1, -1, 1));  // e3 + delta with e3 = -e1 - e2
    const BaseState p1 = odd_reflection(pi, pi.base.front());
    CHECK(p1.base.front().weight == g3(1, 1, -1));
}

TEST_CASE("odd-reflection orbits contain the listed bases") {
    const auto orbit = odd_base_orbit(AlgebraId::F4);
    CHECK(orbit.size() == 6);
    const AlgebraId F = AlgebraId::F4;
    const std::vector<std::vector<Weight>> listed = {
        {f4(half, half, half, -half), f4(-half, -half, half, half), f4(0, 1, -1, 0), f4(1, -1, 0, 0)},
        {f4(0, 0, 1, 0), f4(half, half, -half, -half), f4(-half, half, -half, half), f4(1, -1, 0, 0)},
        {f4(-half, half, half, half), f4(0, 1, -1, 0), f4(half, -half, half, -half), f4(half, -half, -half, half)},
        {f4(half, -half, -half, -half), f4(0, 1, -1, 0), f4(0, 0, 1, 0), f4(0, 0, 0, 1)},
        {f4(0, 0, 0, 1), f4(0, 1, -1, 0), f4(1, -1, 0, 0), f4(-half, half, half, -half)},
    };
    for (const auto& b : listed) CHECK(in_orbit(orbit, roots(F, b)));

    const auto gorbit = odd_base_orbit(AlgebraId::G3);
    CHECK(gorbit.size() == 4);
    const AlgebraId G = AlgebraId::G3;
    CHECK(in_orbit(gorbit, roots(G, {g3(1, 1, -1), g3(0, -1, 1), g3(-1, 1, 0)})));
    CHECK(in_orbit(gorbit, roots(G, {g3(1, 0, 0), g3(0, 1, -1), g3(-1, 0, 1)})));
    CHECK(in_orbit(gorbit, roots(G, {g3(0, 0, 1), g3(1, 0, -1), g3(-1, 1, 0)})));
}
