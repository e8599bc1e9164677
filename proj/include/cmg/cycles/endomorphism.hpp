#ifndef CMG_CYCLES_ENDOMORPHISM_HPP
#define CMG_CYCLES_ENDOMORPHISM_HPP

#include <array>
#include <istream>
#include <string>

#include "cmg/exact/bifield.hpp"
#include "cmg/exact/poly1.hpp"

namespace cmg::cyc
{

using PolyK = Poly1<BiField>;

// y^2 = x^3 + a x + b over Q.
struct CurveParams {
    Rational a, b;

    Rational discriminant() const; // -16 (4a^3 + 27b^2)
    // Throws DegenerateCurve when the discriminant or b vanishes.
    void require_valid() const;
    PolyK cubic() const;
};

// j = -2^12 3^3 a^3 / disc
Rational j_invariant(const CurveParams &p);

// phi(x, y) = (X(x), y Y(x)) with X = x_num/x_den and Y = y_num/y_den over Q(mu, i),
// mu^2 + mu + 2 = 0. The tangent map is multiplication by `tangent`.
struct Endomorphism {
    std::string name;
    CurveParams curve;
    BiField tangent;
    long degree = 1;
    std::array<long, 3> triple{1, 1, 0}; // intersections with Z1, Z2, Delta_E
    PolyK x_num, x_den, y_num, y_den;
    bool validated = false;
};

// The identity map (graph = diagonal) and [-1] of a curve.
Endomorphism identity_endo(const CurveParams &p);
Endomorphism negation_endo(const CurveParams &p);

// Text format, one record per line, '#' starts a comment:
//   cm_minpoly c0 c1 c2        (must be 2 1 1)
//   curve a b
//   tangent t                  (t a field literal "c0,c1,c2,c3" on 1, mu, i, i*mu)
//   degree d
//   triple n1 n2 n3
//   x_num p0 p1 ...            (coefficients in increasing degree, field literals)
//   x_den ..., y_num ..., y_den ...
Endomorphism parse_endo(std::istream &in, const std::string &name = "");
Endomorphism load_endo(const std::string &path);

struct EndoCheck {
    bool curve_equation = false; // (y Y)^2 = X^3 + a X + b as polynomial identity
    bool tangent = false;        // X ~ tangent^-2 x, Y ~ tangent^-3 at infinity
    bool degree = false;         // degree = N(tangent) = max(deg x_num, deg x_den)
    bool triple = false;         // (1, deg, N(tangent - 1))
    bool ok() const { return curve_equation && tangent && degree && triple; }
    std::string detail;
};
EndoCheck check_endo(const Endomorphism &e);
// Runs check_endo and marks the endomorphism validated, or throws UnvalidatedEndo.
void validate(Endomorphism &e);

// Norm from Q(mu) to Q of an element with no i-component.
Rational norm_q_mu(const BiField &x);

} // namespace cmg::cyc

#endif
