#ifndef CMG_GREEN_LOCAL_HPP
#define CMG_GREEN_LOCAL_HPP

#include "cmg/numeric/mp.hpp"

namespace cmg::green
{

using num::Complex;
using num::Real;

// Hyperbolic cosine of the distance: 1 + |z1 - z2|^2 / (2 y1 y2).
// Throws CoincidentPoints when z1 == z2.
Real hyp_t(const Complex &z1, const Complex &z2);

// Gauss hypergeometric series sum (a)_n (b)_n / (c)_n x^n / n! for |x| < 1.
Real gauss_2f1(const Real &a, const Real &b, const Real &c, const Real &x, mpfr_prec_t P);

enum class QMethod { Auto, Hypergeometric, Closed, Recurrence };
// Legendre function of the second kind Q_n(t), t > 1, n >= 0. Closed is only
// available for n <= 1.
Real legendre_q(int n, const Real &t, mpfr_prec_t P, QMethod method = QMethod::Auto);

// Q_w(z) = (z - w)(z - conj w) / (w - conj w)
Complex q_point(const Complex &z, const Complex &w);

// G_k(z1, z2) = -2 Q_{k-1}(t) on the upper half plane.
Real local_green(int k, const Complex &z1, const Complex &z2, mpfr_prec_t P);

// delta_2^m delta_1^n G_k(z1, z2) for n, m >= 1 - k by the hypergeometric formula.
Complex local_green_deriv(int k, int n, int m, const Complex &z1, const Complex &z2, mpfr_prec_t P);
// Closed form of the n = k case.
Complex local_green_second(int k, int m, const Complex &z1, const Complex &z2, mpfr_prec_t P);

// delta_1 G_2(z1, z2) = -2 Q_1'(t) * d t / d z1.
Complex local_green_dz(const Complex &z1, const Complex &z2, mpfr_prec_t P);

} // namespace cmg::green

#endif
