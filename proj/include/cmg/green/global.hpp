#ifndef CMG_GREEN_GLOBAL_HPP
#define CMG_GREEN_GLOBAL_HPP

#include <array>
#include <string>

#include "cmg/cohomology/torsion.hpp"
#include "cmg/green/kernel.hpp"
#include "cmg/green/local.hpp"
#include "cmg/numeric/modular.hpp"

namespace cmg::green
{

// p0 + p1 X + p2 X^2 with complex coefficients.
struct V2C {
    std::array<Complex, 3> p;

    explicit V2C(mpfr_prec_t prec) : p{Complex(prec), Complex(prec), Complex(prec)} {}
    V2C(Complex p0, Complex p1, Complex p2) : p{std::move(p0), std::move(p1), std::move(p2)} {}
    static V2C from_int(const coh::IntV2 &v, mpfr_prec_t prec);

    V2C operator+(const V2C &o) const { return {p[0] + o.p[0], p[1] + o.p[1], p[2] + o.p[2]}; }
    V2C operator-(const V2C &o) const { return {p[0] - o.p[0], p[1] - o.p[1], p[2] - o.p[2]}; }
    V2C operator*(const Complex &c) const { return {p[0] * c, p[1] * c, p[2] * c}; }
    Complex operator()(const Complex &x) const { return p[0] + x * (p[1] + x * p[2]); }
    // (X - a)(X - b) * s
    static V2C product(const Complex &a, const Complex &b, const Complex &s);
};

// (p, q) = p0 q2 - p1 q1 / 2 + p2 q0
Complex pairing(const V2C &a, const V2C &b);
// Left weight -2 action, same convention as coh::act.
V2C act(const num::Mat2 &g, const V2C &v);

struct GlobalGreen {
    Real value;     // partial sum plus the mean tail correction
    Real partial;   // raw sum over t <= cutoff
    Real tail;      // size of the tail beyond the cutoff (error bound used by callers)
    long terms = 0;
    long near_terms = 0;  // terms evaluated in multiprecision (t < kFarT)
    double cutoff = 0;
    Kernel kernel = Kernel::Scalar;
};

// Sum of G_2(z1, g z2) over g in PSL2(Z) with t(z1, g z2) <= cutoff. The terms
// beyond the cutoff are replaced by their mean, 6 dt orbit points per unit of
// t, which gives the correction -12 int_T^oo Q_1. The reported tail is the
// size of that correction, 4/T to leading order.
GlobalGreen global_green(int k, const Complex &z1, const Complex &z2, double cutoff, mpfr_prec_t P,
                         Kernel kernel = Kernel::Auto);

// Cutoff T whose tail bound is below `tail`.
double cutoff_for_tail(double tail);

struct GlobalGreenDz {
    Complex value; // delta_1 of the global function at z1 (no tail correction: the mean is zero)
    Real tail;     // absolute bound 4 / (Im z1 T) for the omitted terms
};
GlobalGreenDz global_green_dz(const Complex &z1, const Complex &z2, double cutoff, mpfr_prec_t P);

// The V2-valued function built from G and delta G at z:
//   -2 [ ((X - zb)/(z - zb))^2 d^-1 G + (X - z)(X - zb)/(z - zb) G + (X - z)^2/2 dG ],
// with d^-1 G = -(1/2) (z - zb)^2 conj(dG) for real G of weight 0.
V2C extended_from(const Complex &z, const Real &G, const Complex &dG);
V2C extended_G(const Complex &z, const Complex &z0, double cutoff, mpfr_prec_t P);

} // namespace cmg::green

#endif
