// Atypicality, block labels and the c-parametrization of the atypical blocks.

#include <functional>

#include <doctest.h>

#include "fg/blocks.hpp"
#include "fg/errors.hpp"
#include "fg/weylgroup.hpp"

using namespace fg;

namespace {

const Rational half(1, 2);

Weight f4(Rational a, Rational b, Rational c, Rational d) { return Weight(AlgebraId::F4, std::vector<Rational>{a, b, c, d}); }
Weight g3(Rational a, Rational b, Rational d) { return Weight(AlgebraId::G3, std::vector<Rational>{a, b, d}); }
Weight from_lr(const Weight& lr) { return lr - root_system(lr.algebra()).rho; }

std::vector<BlockId> sample_blocks() {
    return {BlockId::f4(1, 1), BlockId::f4(2, 2), BlockId::f4(4, 1), BlockId::f4(5, 2), BlockId::f4(4, 4),
            BlockId::f4(7, 1), BlockId::g3(1),    BlockId::g3(3),    BlockId::g3(5)};
}

}  // namespace

TEST_CASE("atypicality") {
    CHECK(atypicality(from_lr(f4(3, 2, 1, 1))) == 0);
    CHECK(atypicality(from_lr(f4(3, 2, 1, 2))) == 1);
    CHECK(atypicality(from_lr(g3(2, 3, Rational(5, 2)))) == 1);
    const auto roots = vanishing_roots(from_lr(f4(3, 2, 1, 2)));
    REQUIRE(roots.size() == 1);
    CHECK(roots.front().weight == f4(half, half, half, half));
}

TEST_CASE("block labels") {
    CHECK(block_of(from_lr(f4(3, 2, 1, 2))) == BlockId::f4(1, 1));
    CHECK(block_of(from_lr(g3(3, 4, Rational(7, 2)))) == BlockId::g3(1));
    for (int a = 0; a <= 6; ++a) {
        for (int b = 1; b <= a; ++b) {
            if ((a - b) % 3 != 0) continue;
            // lambda + rho = (a+b+1, b+1, 1 | (a+2b)/3 + 1)
            const Weight lr = f4(a + b + 1, b + 1, 1, Rational(a + 2 * b, 3) + Rational(1));
            CHECK(block_of(from_lr(lr)) == BlockId::f4(a, b));
        }
    }
    CHECK_THROWS_AS(BlockId::f4(2, 1), UsageError);
    CHECK_THROWS_AS(BlockId::g3(2), UsageError);
    CHECK(parse_block(AlgebraId::F4, "1,4") == BlockId::f4(4, 1));
}

TEST_CASE("block weights") {
    const BlockWeight l0 = block_weight(BlockId::f4(1, 1), Rational(2));
    CHECK(l0.lambda_rho() == f4(3, 2, 1, 2));
    CHECK(l0.special == Special::L0);
    const BlockWeight l1 = block_weight(BlockId::f4(1, 1), Rational(-3, 2));
    CHECK(l1.lambda_rho() == f4(Rational(5, 2), Rational(3, 2), half, Rational(-3, 2)));
    CHECK(l1.special == Special::L1);
    CHECK(block_weight(BlockId::g3(1), Rational(9, 2)).lambda_rho() == g3(4, 5, Rational(9, 2)));
    CHECK(block_weight(BlockId::g3(1), Rational(7, 2)).lambda_rho() == g3(3, 4, Rational(7, 2)));
    CHECK_THROWS_AS(block_weight(BlockId::f4(1, 1), Rational(-1)), UsageError);
}

TEST_CASE("the (1,1) weights with -2 <= c <= 3") {
    const auto ws = weights_of_block(BlockId::f4(1, 1), Rational(-2), Rational(3));
    REQUIRE(ws.size() == 5);
    CHECK(ws[0].special == Special::L1);
    CHECK(ws[1].special == Special::L2);
    CHECK(ws[2].special == Special::L0);
    CHECK(ws[3].lambda_rho() == f4(Rational(7, 2), Rational(5, 2), Rational(3, 2), Rational(5, 2)));
    CHECK(ws[4].lambda_rho() == f4(4, 3, 2, 3));
}

TEST_CASE("special vertices") {
    const SpecialValues s11 = special_values(BlockId::f4(1, 1));
    CHECK(*s11.lambda1 == Rational(-3, 2));
    CHECK(*s11.lambda2 == Rational(3, 2));
    CHECK(s11.lambda0 == Rational(2));
    CHECK(special_values(BlockId::f4(2, 2)).lambda0 == Rational(3, 2));
    CHECK(special_values(BlockId::g3(1)).lambda0 == Rational(7, 2));
    CHECK(special_values(BlockId::g3(3)).lambda0 == Rational(5, 2));
    const SpecialValues s41 = special_values(BlockId::f4(4, 1));
    CHECK_FALSE(s41.lambda1);
    CHECK(s41.lambda0 == Rational(0));
}

TEST_CASE("genericity and the sign s") {
    CHECK(is_generic(block_weight(BlockId::f4(1, 1), Rational(3))));
    CHECK_FALSE(is_generic(block_weight(BlockId::f4(1, 1), Rational(2))));
    CHECK(is_generic(block_weight(BlockId::g3(1), Rational(5, 2))));

    const BlockWeight j1 = block_weight(BlockId::f4(1, 1), Rational(3));
    CHECK(j1.interval == "J1");
    CHECK(sign_s(j1) == parity_of(j1.lambda));
    const BlockWeight i4 = block_weight(BlockId::f4(4, 1), half);
    CHECK(i4.interval == "I4");
    CHECK(sign_s(i4) == parity_of(i4.lambda) + Parity{1});
    const BlockWeight i6 = block_weight(BlockId::f4(5, 2), Rational(-1));
    CHECK(i6.interval == "I6");
    CHECK(sign_s(i6) == parity_of(i6.lambda));

    CHECK(fiber_dimension(BlockId::f4(4, 1)) == 10);
    CHECK(fiber_dimension(BlockId::g3(3)) == 3);
}

TEST_CASE("property: every block weight is dominant, atypical and locates back to itself") {
    for (const auto& b : sample_blocks()) {
        for (const auto& bw : weights_of_block(b, Rational(-8), Rational(8))) {
            CHECK(is_dominant_coordinates(bw.lambda));
            CHECK(atypicality(bw.lambda) == 1);
            CHECK(block_of(bw.lambda) == b);
            CHECK(pair(bw.lambda_rho(), bw.vanishing_root.weight) == Rational(0));
            const auto back = locate(bw.lambda);
            REQUIRE(back);
            CHECK(back->c == bw.c);
        }
    }
}

TEST_CASE("property: the parametrization is complete on a grid") {
    // Every dominant atypical weight with small lambda + rho is some block weight.
    for (AlgebraId a : {AlgebraId::F4, AlgebraId::G3}) {
        const int n = rank_of(a);
        Exponent e{};
        int seen = 0;
        std::function<void(int)> rec = [&](int i) {
            if (i == n) {
                const Weight l = from_lr(Weight::from_scaled(a, e));
                if (!in_lattice(l)) return;
                if (!is_dominant_coordinates(l) || atypicality(l) != 1) return;
                ++seen;
                const auto bw = locate(l);
                REQUIRE(bw);
                CHECK(bw->lambda == l);
                return;
            }
            for (int x = -12; x <= 12; ++x) {
                e[i] = x;
                rec(i + 1);
            }
        };
        rec(0);
        CHECK(seen > 10);
    }
}
