#ifndef CMG_CYCLES_INTERSECT_HPP
#define CMG_CYCLES_INTERSECT_HPP

#include <array>
#include <string>
#include <vector>

#include "cmg/cycles/endomorphism.hpp"

namespace cmg::cyc
{

// The higher cycle (W, f): W = {x1 + x2 = 0}, f = y1 - i y2. Intersections
// with algebraic curves are products of f over the intersection points; the
// point at infinity x infinity is handled by deforming the curve.

// Leading data of f on one branch of W at infinity x infinity.
struct BranchLead {
    BiField z2_slope; // z2 ~ slope * z1
    BiField f_lead;   // f ~ f_lead * z1^f_ord
    int f_ord;
};
std::array<BranchLead, 2> branch_leads(const CurveParams &p);

// Contribution at infinity of a curve deformed to alpha z1 + beta z2 = z.
// Asserts that the product is of degree 0 in the deformation parameter.
BiField infinity_contribution(const CurveParams &p, const BiField &alpha, const BiField &beta);

enum class BasicCycle { Z1, Z2, DiagE };
BiField intersect_basic(BasicCycle which, const CurveParams &p);

struct GraphIntersection {
    BiField finite;        // product over the finite points
    BiField at_infinity;   // deformation contribution
    BiField total;
    BiField finite_norms;      // finite product through the tower norms (quadratic case)
    bool norms_available = false;
    BiField finite_resultant;  // finite product through resultants
    int finite_points = 0;     // number of points (x1, y1) on W and the graph
};
// Throws UnvalidatedEndo unless `validate` succeeded, NonProperIntersection if a
// finite point is not simple or lies on the divisor of f.
GraphIntersection intersect_graph(const Endomorphism &e);

// Polynomial R whose roots are the x1 of the finite points: numerator of X(x) + x.
PolyK graph_root_poly(const Endomorphism &e);

// [Gamma] = c1 [Z1] + c2 [Z2] + c3 [Delta] + c4 (X - tau)(X - conj tau)/(tau - conj tau).
struct ClassCoeffs {
    Rational c1, c2, c3;
    BiField c4;
};
ClassCoeffs cycle_class_coeffs(const Endomorphism &e);
ClassCoeffs cycle_class_coeffs(const std::array<long, 3> &triple, const BiField &tangent);

// Integer combination of Z1, Z2, Delta and graphs of endomorphisms.
struct AlgCycle {
    long z1 = 0, z2 = 0, diag = 0;
    std::vector<std::pair<const Endomorphism *, long>> graphs;
    std::string str() const;
};
BiField intersect_cycle(const AlgCycle &c, const CurveParams &p);

// Z_tau = 2 Gamma - 5 Z1 - 3 Z2 + Delta for an endomorphism with coefficients (5/2, 3/2, -1/2).
AlgCycle z_tau_cycle(const Endomorphism &e);

// sqrt(-7) = 2 mu + 1 and sqrt(7) = -i sqrt(-7) in the standard embedding.
BiField sqrt_m7();
BiField sqrt_7();

} // namespace cmg::cyc

#endif
