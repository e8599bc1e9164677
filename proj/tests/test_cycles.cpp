#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "cmg/cycles/intersect.hpp"
#include "cmg/errors.hpp"

using namespace cmg;
using namespace cmg::cyc;

namespace
{

const CurveParams kCurve{Rational(-35), Rational(-98)};

BiField mu() { return BiField::mu(); }
BiField I() { return BiField::i(); }
BiField u_unit() { return BiField(-1, 1, -2, -1); }

Endomorphism tau7()
{
    Endomorphism e = load_endo(std::string(CMG_DATA_DIR) + "/endo/tau7.endo");
    validate(e);
    return e;
}

PolyK lin(const BiField &c0, const BiField &c1) { return PolyK(std::vector<BiField>{c0, c1}); }

} // namespace

TEST_CASE("curve parameters")
{
    CHECK(j_invariant(kCurve) == Rational(-3375));
    CHECK(kCurve.discriminant() == Rational(-16) * (Rational(4) * Rational(-42875) + Rational(27) * Rational(9604)));
    CHECK_THROWS_AS((CurveParams{Rational(-3), Rational(2)}).require_valid(), DegenerateCurve);
    CHECK_THROWS_AS((CurveParams{Rational(-1), Rational(0)}).require_valid(), DegenerateCurve);
    // the cubic splits as (x - 7)(x + mu + 4)(x - mu + 3)
    PolyK split = lin(-7, 1) * lin(mu() + BiField(4), 1) * lin(BiField(3) - mu(), 1);
    CHECK(split == kCurve.cubic());
}

TEST_CASE("endomorphism file and validation")
{
    Endomorphism e = tau7();
    CHECK(e.name == "tau7");
    CHECK(e.validated);
    CHECK(e.degree == 2);
    CHECK(e.tangent == mu());
    EndoCheck c = check_endo(e);
    CHECK(c.curve_equation);
    CHECK(c.tangent);
    CHECK(c.degree);
    CHECK(c.triple);

    // the file agrees with the closed form
    //   X = mu^-2 (x + (3mu+5)^2/(x+mu+4)),  Y = mu^-3 (1 - (3mu+5)^2/(x+mu+4)^2)
    BiField k = BiField(5) + BiField(3) * mu();
    PolyK s = lin(mu() + BiField(4), 1);
    PolyK x = PolyK::x();
    CHECK(e.x_num * s * (mu() * mu()) == e.x_den * (x * s + PolyK(k * k)));
    CHECK(e.y_num * s * s * mu().pow(3) == e.y_den * (s * s - PolyK(k * k)));

    // finite points: roots of t^2 + (mu + 4) t - 7 mu - 21
    PolyK R = graph_root_poly(e);
    PolyK expect(std::vector<BiField>{BiField(-21) - BiField(7) * mu(), mu() + BiField(4), BiField(1)});
    CHECK(R.monic() == expect);

    // a corrupted file is rejected
    Endomorphism bad = e;
    bad.validated = false;
    bad.y_num = bad.y_num + PolyK(BiField(1));
    CHECK_THROWS_AS(validate(bad), UnvalidatedEndo);
    CHECK_THROWS_AS(intersect_graph(bad), UnvalidatedEndo);

    std::istringstream missing("curve -35 -98\ntangent 0,1,0,0\n");
    CHECK_THROWS_AS(parse_endo(missing), ParseError);
    std::istringstream other_field("cm_minpoly 1 0 1\n");
    CHECK_THROWS_AS(parse_endo(other_field), ParseError);
}

TEST_CASE("intersections with Z1, Z2 and the diagonal")
{
    BiField b(kCurve.b);
    CHECK(intersect_basic(BasicCycle::Z1, kCurve) == BiField(-196));
    CHECK(intersect_basic(BasicCycle::Z2, kCurve) == BiField(196));
    CHECK(intersect_basic(BasicCycle::DiagE, kCurve) == BiField(-38416));

    // branch leading terms
    auto br = branch_leads(kCurve);
    CHECK(br[0].z2_slope == I());
    CHECK(br[1].z2_slope == -I());
    CHECK(br[0].f_ord == -3);
    CHECK(br[1].f_ord == 3);
    CHECK(br[0].f_lead == BiField(-2));
    CHECK(br[1].f_lead == -b);

    // oracle for the diagonal: at infinity (4 + 4i) * (1 + i) b / 4, and the two
    // finite points (0, +-sqrt b) where f = (1 - i) y
    BiField inf = (BiField(4) + BiField(4) * I()) * (BiField(1) + I()) * b / BiField(4);
    BiField fin = (BiField(1) - I()) * (BiField(1) - I()) * (-b);
    CHECK(inf * fin == BiField(-4) * b * b);

    std::mt19937 rng(5);
    std::uniform_int_distribution<int> dist(-40, 40);
    int done = 0;
    while (done < 6) {
        CurveParams p{Rational(dist(rng), 1 + (dist(rng) & 3)), Rational(dist(rng), 1 + (dist(rng) & 7))};
        if (p.b.is_zero() || p.discriminant().is_zero()) continue;
        BiField bb(p.b);
        BiField z1 = intersect_basic(BasicCycle::Z1, p);
        BiField z2 = intersect_basic(BasicCycle::Z2, p);
        CHECK(z1 == BiField(2) * bb);
        CHECK(z2 == BiField(-2) * bb);
        CHECK(z1 * z2 == BiField(-4) * bb * bb);
        CHECK(intersect_basic(BasicCycle::DiagE, p) == BiField(-4) * bb * bb);
        GraphIntersection g = intersect_graph(identity_endo(p));
        CHECK(g.norms_available);
        CHECK(g.finite_norms == g.finite_resultant);
        ++done;
    }
}

TEST_CASE("graph of the CM endomorphism")
{
    Endomorphism e = tau7();
    GraphIntersection g = intersect_graph(e);
    BiField u = u_unit();
    BiField b(kCurve.b);
    CHECK(g.finite_points == 4);
    CHECK(g.norms_available);
    CHECK(g.finite_norms == g.finite_resultant);
    CHECK(g.finite == BiField(38416) * u);
    CHECK(g.at_infinity == BiField(-2) * b * u.pow(3));
    CHECK(g.total == BiField(7529536) * u.pow(4));

    // leading terms of the two deformed branches
    BiField m = mu();
    BiField l1 = BiField(-2) * ((m - I()) / m).pow(3);
    BiField l2 = -b * (m / (m + I())).pow(3);
    CHECK(l1 * l2 == g.at_infinity);
    CHECK(BiField(2) * b * ((m - I()) / (m + I())).pow(3) == g.at_infinity);

    // the unit
    CHECK(u.norm_to_q() == Rational(1));
    CHECK(u * u == I() * (BiField(8) - BiField(3) * sqrt_7()));
    CHECK(sqrt_m7() * sqrt_m7() == BiField(-7));
    CHECK(sqrt_7() * sqrt_7() == BiField(7));
    CHECK(sqrt_7().to_complex().real() > 0);
}

TEST_CASE("cohomology class coefficients")
{
    Endomorphism e = tau7();
    ClassCoeffs c = cycle_class_coeffs(e);
    CHECK(c.c1 == Rational(5, 2));
    CHECK(c.c2 == Rational(3, 2));
    CHECK(c.c3 == Rational(-1, 2));
    CHECK(c.c4 == sqrt_m7());
    // round trip to the intersection numbers
    CHECK(c.c2 + c.c3 == Rational(1));
    CHECK(c.c1 + c.c3 == Rational(2));
    CHECK(c.c1 + c.c2 == Rational(4));
    BiField self = BiField(c.c1 + c.c2 * Rational(2) + c.c3 * Rational(4)) +
                   c.c4 * (mu() - mu().complex_conj()) / BiField(2);
    CHECK(self.is_zero());

    ClassCoeffs id = cycle_class_coeffs(identity_endo(kCurve));
    CHECK(id.c1 == Rational(0));
    CHECK(id.c2 == Rational(0));
    CHECK(id.c3 == Rational(1));
    CHECK(id.c4.is_zero());

    ClassCoeffs neg = cycle_class_coeffs(negation_endo(kCurve));
    CHECK(neg.c4.is_zero());
    CHECK(neg.c1 == Rational(2));
    CHECK(neg.c2 == Rational(2));
    CHECK(neg.c3 == Rational(-1));

    CHECK_THROWS_AS(cycle_class_coeffs({1, 2, 5}, BiField(1)), SingularSystem);
}

TEST_CASE("intersection with Z_tau")
{
    Endomorphism e = tau7();
    AlgCycle z = z_tau_cycle(e);
    CHECK(z.z1 == -5);
    CHECK(z.z2 == -3);
    CHECK(z.diag == 1);
    CHECK(z.str() == "2*Gamma[tau7] - 5*Z1 - 3*Z2 + Delta");
    CHECK(intersect_cycle(z, kCurve) == u_unit().pow(8));
    CHECK(intersect_cycle(AlgCycle{}, kCurve) == BiField(1));

    // homomorphism from cycle addition to multiplication
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int trial = 0; trial < 5; ++trial) {
        AlgCycle c1, c2, s;
        c1.z1 = dist(rng);
        c1.z2 = dist(rng);
        c1.diag = dist(rng);
        c1.graphs = {{&e, dist(rng)}};
        c2.z1 = dist(rng);
        c2.z2 = dist(rng);
        c2.diag = dist(rng);
        c2.graphs = {{&e, dist(rng)}};
        s.z1 = c1.z1 + c2.z1;
        s.z2 = c1.z2 + c2.z2;
        s.diag = c1.diag + c2.diag;
        s.graphs = {{&e, c1.graphs[0].second + c2.graphs[0].second}};
        CHECK(intersect_cycle(s, kCurve) == intersect_cycle(c1, kCurve) * intersect_cycle(c2, kCurve));
    }
}
