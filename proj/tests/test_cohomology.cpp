#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cmg/cohomology/torsion.hpp"

using namespace cmg;
using namespace cmg::coh;

namespace
{

GroupWord random_word(std::mt19937 &rng, int max_len)
{
    static const char letters[] = "STst";
    std::uniform_int_distribution<int> len(0, max_len), pick(0, 3);
    GroupWord w;
    for (int k = len(rng); k > 0; --k) w.letters += letters[pick(rng)];
    return w;
}

} // namespace

TEST_CASE("action reproduces the boundary displays")
{
    IntV2 v(1, 1, 1);
    CHECK(act(GroupWord::S(), v) - v == IntV2(0, -2, 0));
    CHECK(act(GroupWord::T(), IntV2(0, 0, 1)) - IntV2(0, 0, 1) == IntV2(1, -2, 0));
    CHECK(act(GroupWord{""}, v) == v);
    CHECK(act(GroupWord::S(), IntV2(1, 0, 0)) == IntV2(0, 0, 1));
    CHECK(act(GroupWord::S(), IntV2(0, 1, 0)) == IntV2(0, -1, 0));

    std::mt19937 rng(3);
    std::uniform_int_distribution<long> c(-9, 9);
    for (int k = 0; k < 50; ++k) {
        long v0 = c(rng), v1 = c(rng), v2 = c(rng);
        IntV2 p(v0, v1, v2);
        // S v - v = (v0 - v2)(X^2 - 1) - 2 v1 X and T v - v = -2 v2 X + v2 - v1
        CHECK(act(GroupWord::S(), p) - p == IntV2(v2 - v0, -2 * v1, v0 - v2));
        CHECK(act(GroupWord::T(), p) - p == IntV2(v2 - v1, -2 * v2, 0));
    }
}

TEST_CASE("relations and left action")
{
    for (int k = 0; k < 3; ++k) {
        IntV2 e;
        e.p[k] = 1;
        CHECK(act(GroupWord{"SS"}, e) == e);
        CHECK(act(GroupWord{"STSTST"}, e) == e);
        CHECK(act(GroupWord{"Tt"}, e) == e);
        CHECK(act(GroupWord{"sS"}, e) == e);
    }
    std::mt19937 rng(4);
    std::uniform_int_distribution<long> c(-20, 20);
    for (int k = 0; k < 100; ++k) {
        GroupWord g = random_word(rng, 6), h = random_word(rng, 6);
        IntV2 p(c(rng), c(rng), c(rng)), q(c(rng), c(rng), c(rng));
        // left action: (gh) p = g (h p)
        CHECK(act(GroupWord{g.letters + h.letters}, p) == act(g, act(h, p)));
        // invariant pairing
        CHECK(pairing(act(g, p), act(g, q)) == pairing(p, q));
    }
}

TEST_CASE("Smith normal form")
{
    IntMatrix A = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    SmithForm s = smith_normal_form(A);
    CHECK(s.invariant_factors == std::vector<long>{2, 6, 12});
    // U A V = D
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            long acc = 0;
            for (size_t k = 0; k < 3; ++k)
                for (size_t l = 0; l < 3; ++l) acc += s.U[i][k] * A[k][l] * s.V[l][j];
            CHECK(acc == s.D[i][j]);
        }
}

TEST_CASE("coinvariants")
{
    H0Result h = h0_coinvariants();
    CHECK(h.invariant_factors == std::vector<long>{1, 1, 2});
    CHECK(h.torsion_order == 2);
    CHECK(h.generator == IntV2(0, 1, 0));
    CHECK(!in_boundary_lattice(IntV2(0, 1, 0)));
    CHECK(in_boundary_lattice(IntV2(0, 2, 0)));
    std::mt19937 rng(6);
    std::uniform_int_distribution<long> c(-50, 50);
    for (int k = 0; k < 50; ++k) {
        long A = c(rng), B = c(rng), C = c(rng);
        CHECK(in_boundary_lattice(IntV2(2 * C, 2 * B, 2 * A)));
        CHECK(in_boundary_lattice(IntV2(A, B, C)) == (B % 2 == 0));
    }
}

TEST_CASE("parabolic H1 with torsion coefficients")
{
    H1Result h = h1_parabolic();
    // (1 + S) v = (v0 + v2)(1 + X^2)
    CHECK(h.relation_S == IntMatrix{{1, 0, 1}, {0, 0, 0}, {1, 0, 1}});
    // (1 + ST + (ST)^2) v = (2 v0 - v1 + 2 v2)(1 + X + X^2); with v0 + v2 = 0 mod Z this forces v1 = 0
    CHECK(h.relation_ST == IntMatrix{{2, -1, 2}, {2, -1, 2}, {2, -1, 2}});
    CHECK(h.levels.size() == 12);
    for (const auto &[L, z, b] : h.levels) {
        CHECK(z == b);
        (void)L;
    }
    CHECK(h.order == 1);
    TorsionConstants t = torsion_constants();
    CHECK(t.NA == 1);
    CHECK(t.NB == 2);
    CHECK(t.N == 2);
}
