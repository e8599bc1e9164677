#include "cmg/cycles/intersect.hpp"

#include <sstream>

#include "cmg/errors.hpp"
#include "cmg/exact/tower.hpp"
#include "cmg/hypercover/branch.hpp"

namespace cmg::cyc
{

namespace
{

BiField specialize(const ws::Coef &c, const CurveParams &p)
{
    BiField a(p.a), b(p.b);
    return c.substitute<BiField>({a, b, BiField(0)}, {std::nullopt, b.inverse(), std::nullopt},
                                 [](const Gaussian &g) { return BiField(g); });
}

// prod over the roots of R of g, i.e. res(R, g) / lead(R)^deg g.
BiField prod_over_roots(const PolyK &R, const PolyK &g)
{
    return resultant(R, g) / R.lead().pow(g.is_zero() ? 0 : g.degree());
}

} // namespace

std::array<BranchLead, 2> branch_leads(const CurveParams &p)
{
    p.require_valid();
    auto W = hc::branches_W(16);
    std::array<BranchLead, 2> r;
    for (int k = 0; k < 2; ++k) {
        r[k].z2_slope = specialize(W[k].z2.coeff(1), p);
        r[k].f_ord = W[k].f.ord();
        r[k].f_lead = specialize(W[k].f.lead(), p);
    }
    return r;
}

BiField infinity_contribution(const CurveParams &p, const BiField &alpha, const BiField &beta)
{
    BiField prod(1);
    int total_ord = 0;
    for (const auto &br : branch_leads(p)) {
        BiField s = alpha + beta * br.z2_slope;
        if (s.is_zero()) throw NonProperIntersection("deformed curve is tangent to a branch of W at infinity");
        // z1 ~ kappa z with kappa = 1/s
        prod *= br.f_lead * s.pow(-br.f_ord);
        total_ord += br.f_ord;
    }
    if (total_ord != 0) throw NonProperIntersection("product of leading terms depends on the deformation");
    return prod;
}

PolyK graph_root_poly(const Endomorphism &e) { return e.x_num + PolyK::x() * e.x_den; }

GraphIntersection intersect_graph(const Endomorphism &e)
{
    if (!e.validated) throw UnvalidatedEndo(e.name + " has not been validated");
    const CurveParams &p = e.curve;
    p.require_valid();
    PolyK R = graph_root_poly(e);
    if (R.degree() < 1) throw NonProperIntersection("graph meets W only at infinity");
    PolyK Rp = R.derivative();
    if (gcd(R, Rp).degree() != 0) throw NonProperIntersection("X(x) + x has a repeated root");

    PolyK c = p.cubic();
    PolyK one_minus_iY = e.y_den - e.y_num * BiField::i();
    for (const auto &[g, why] : {std::pair{c, "a finite point is 2-torsion (y1 = 0)"},
                                 std::pair{one_minus_iY, "f vanishes at a finite point"},
                                 std::pair{e.y_den, "the y-factor has a pole at a finite point"},
                                 std::pair{e.x_den, "X has a pole at a finite point"}})
        if (resultant(R, g).is_zero()) throw NonProperIntersection(why);

    GraphIntersection r;
    r.finite_points = 2 * R.degree();
    // Over each root t the two points y1 = +-sqrt(c(t)) give f = y1 (1 - i Y(t)), so
    // the pair contributes -c(t) (1 - i Y(t))^2.
    PolyK num = -(c * one_minus_iY * one_minus_iY);
    PolyK den = e.y_den * e.y_den;
    r.finite_resultant = prod_over_roots(R, num) / prod_over_roots(R, den);

    if (R.degree() == 1) {
        BiField t = -R.coeff(0) / R.coeff(1);
        r.finite_norms = num(t) / den(t);
        r.norms_available = true;
    } else if (R.degree() == 2) {
        BiField l = R.lead();
        QuadMinpoly m{R.coeff(1) / l, R.coeff(0) / l};
        TowerElem t = TowerElem::t(m);
        auto ev = [&](const PolyK &q) {
            TowerElem acc(m);
            for (int k = q.degree(); k >= 0; --k) acc = acc * t + TowerElem(q.coeff(k), 0, m);
            return acc;
        };
        r.finite_norms = field_norm(ev(num)) / field_norm(ev(den));
        r.norms_available = true;
    }
    if (r.norms_available && !(r.finite_norms == r.finite_resultant))
        throw NonProperIntersection("norm and resultant routes disagree: " + r.finite_norms.str() + " vs " +
                                    r.finite_resultant.str());
    r.finite = r.finite_resultant;

    // deformation Gamma + (z, 0): z2 = tangent (z1 - z), i.e. z1 - z2 / tangent = z
    r.at_infinity = infinity_contribution(p, BiField(1), -e.tangent.inverse());
    r.total = r.finite * r.at_infinity;
    return r;
}

BiField intersect_basic(BasicCycle which, const CurveParams &p)
{
    p.require_valid();
    switch (which) {
    case BasicCycle::Z1: return infinity_contribution(p, BiField(1), BiField(0));
    case BasicCycle::Z2: return infinity_contribution(p, BiField(0), BiField(1));
    case BasicCycle::DiagE: return intersect_graph(identity_endo(p)).total;
    }
    return BiField(1);
}

ClassCoeffs cycle_class_coeffs(const std::array<long, 3> &t, const BiField &tangent)
{
    // Z1.Z2 = 1, Zi.Zi = 0, Delta.Zi = 1, Delta.Delta = 0, and the transcendental
    // class is orthogonal to all three.
    ClassCoeffs c;
    Rational t1(t[0]), t2(t[1]), t3(t[2]);
    c.c1 = (t2 + t3 - t1) / Rational(2);
    c.c2 = (t1 + t3 - t2) / Rational(2);
    c.c3 = (t1 + t2 - t3) / Rational(2);
    // Gamma.Gamma = 0 and the transcendental class contributes c4 (mu - conj mu)/2
    Rational s = c.c1 * t1 + c.c2 * t2 + c.c3 * t3;
    BiField im = tangent - tangent.complex_conj();
    if (im.is_zero()) {
        if (!s.is_zero()) throw SingularSystem("real tangent with nonzero algebraic self-intersection");
        c.c4 = BiField(0);
    } else {
        c.c4 = BiField(Rational(-2) * s) / im;
    }
    return c;
}

ClassCoeffs cycle_class_coeffs(const Endomorphism &e) { return cycle_class_coeffs(e.triple, e.tangent); }

std::string AlgCycle::str() const
{
    std::ostringstream os;
    bool first = true;
    auto put = [&](long n, const std::string &name) {
        if (!n) return;
        if (!first) os << (n > 0 ? " + " : " - ");
        else if (n < 0) os << "-";
        long m = n < 0 ? -n : n;
        if (m != 1) os << m << "*";
        os << name;
        first = false;
    };
    for (const auto &[e, n] : graphs) put(n, "Gamma[" + e->name + "]");
    put(z1, "Z1");
    put(z2, "Z2");
    put(diag, "Delta");
    return first ? "0" : os.str();
}

BiField intersect_cycle(const AlgCycle &c, const CurveParams &p)
{
    BiField r(1);
    if (c.z1) r *= intersect_basic(BasicCycle::Z1, p).pow(c.z1);
    if (c.z2) r *= intersect_basic(BasicCycle::Z2, p).pow(c.z2);
    if (c.diag) r *= intersect_basic(BasicCycle::DiagE, p).pow(c.diag);
    for (const auto &[e, n] : c.graphs) {
        if (!(e->curve.a == p.a) || !(e->curve.b == p.b)) throw FieldMismatch("endomorphism of a different curve");
        if (n) r *= intersect_graph(*e).total.pow(n);
    }
    return r;
}

AlgCycle z_tau_cycle(const Endomorphism &e)
{
    ClassCoeffs c = cycle_class_coeffs(e);
    auto twice = [](const Rational &q) {
        Rational t = q * Rational(2);
        if (!t.is_integer()) throw SingularSystem("class coefficients are not half-integers");
        return t.num().get_si();
    };
    AlgCycle z;
    z.graphs.push_back({&e, 2});
    z.z1 = -twice(c.c1);
    z.z2 = -twice(c.c2);
    z.diag = -twice(c.c3);
    return z;
}

BiField sqrt_m7() { return BiField(1, 2, 0, 0); }
BiField sqrt_7() { return -BiField::i() * sqrt_m7(); }

} // namespace cmg::cyc
