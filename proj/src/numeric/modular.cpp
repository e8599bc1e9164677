#include "cmg/numeric/modular.hpp"

#include <cstdlib>
#include <sstream>

#include "cmg/errors.hpp"

namespace cmg::num
{

namespace
{

constexpr mpfr_prec_t kGuard = 32;

Complex at_prec(const Complex &z, mpfr_prec_t p)
{
    Real re(p), im(p);
    mpfr_set(re.get(), z.re().get(), MPFR_RNDN);
    mpfr_set(im.get(), z.im().get(), MPFR_RNDN);
    return Complex(re, im);
}

Complex rounded(const Complex &z, mpfr_prec_t p) { return at_prec(z, p); }

// sigma_r(n)
long sigma(long n, int r)
{
    long s = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        long e = n / d;
        long pd = 1, pe = 1;
        for (int k = 0; k < r; ++k) {
            pd *= d;
            pe *= e;
        }
        s += pd;
        if (e != d) s += pe;
    }
    return s;
}

// E2, E4, E6 at a reduced point by the Lambert-type q-series.
Eisenstein eisenstein_reduced(const Complex &tau, mpfr_prec_t W)
{
    Real two_pi = Real::pi(W) * 2L;
    Complex q = exp(Complex(-two_pi * tau.im(), two_pi * tau.re()));
    Real eps = Real::pow2(-static_cast<long>(W) - 8, W);
    Complex s1(W), s3(W), s5(W);
    Complex qn = q;
    for (long n = 1;; ++n) {
        Real mag = abs(qn);
        // the largest term is 504 sigma_5(n) |q|^n <= 1008 n^5 |q|^n
        Real bound = mag * pow(Real(n, W), 5) * 1008L;
        if (bound < eps) break;
        if (n > 100000) throw PrecisionUnreachable("q-series did not converge");
        s1 += qn * Real(sigma(n, 1), W);
        s3 += qn * Real(sigma(n, 3), W);
        s5 += qn * Real(sigma(n, 5), W);
        qn *= q;
    }
    Complex one(Real::one(W));
    return {one - s1 * 24L, one + s3 * 240L, one - s5 * 504L};
}

} // namespace

Complex Mat2::apply(const Complex &z) const
{
    mpfr_prec_t p = z.prec();
    Complex num = z * Real(a, p) + Complex(Real(b, p));
    Complex den = z * Real(c, p) + Complex(Real(d, p));
    return num / den;
}

Complex Mat2::cocycle(const Complex &z) const
{
    mpfr_prec_t p = z.prec();
    return z * Real(c, p) + Complex(Real(d, p));
}

std::string Mat2::str() const
{
    std::ostringstream os;
    os << "[[" << a << "," << b << "],[" << c << "," << d << "]]";
    return os.str();
}

Reduced reduce_fundamental(const Complex &tau)
{
    if (tau.im().sign() <= 0) throw DomainError("point is not in the upper half plane");
    Reduced r{tau, Mat2::identity()};
    mpfr_prec_t p = tau.prec();
    Real half(0.5, p);
    for (int iter = 0;; ++iter) {
        if (iter > 100000) throw PrecisionUnreachable("reduction to the fundamental domain did not terminate");
        long n = r.tau.re().to_long_round();
        if (n != 0) {
            r.tau = r.tau - Complex(Real(n, p));
            r.gamma = Mat2::T(-n) * r.gamma;
        }
        if (r.tau.norm() < Real::one(p)) {
            r.tau = Mat2::S().apply(r.tau);
            r.gamma = Mat2::S() * r.gamma;
            continue;
        }
        if (abs(r.tau.re()) <= half) break;
    }
    // normalize the sign of the witness so that it reads as a PSL2 representative with c >= 0
    if (r.gamma.c < 0 || (r.gamma.c == 0 && r.gamma.d < 0))
        r.gamma = {-r.gamma.a, -r.gamma.b, -r.gamma.c, -r.gamma.d};
    return r;
}

Eisenstein eisenstein_all(const Complex &tau, mpfr_prec_t P)
{
    mpfr_prec_t W = P + kGuard;
    Complex t = at_prec(tau, W);
    Reduced red = reduce_fundamental(t);
    Eisenstein e = eisenstein_reduced(red.tau, W);
    // E_k(g tau) = (c tau + d)^k E_k(tau) for k = 4, 6 and
    // E2(g tau) = (c tau + d)^2 E2(tau) - 6 i c (c tau + d) / pi.
    const Mat2 &g = red.gamma;
    if (!(g.c == 0 && (g.d == 1 || g.d == -1))) {
        Complex j = g.cocycle(t);
        Complex j2 = j * j;
        Complex j4 = j2 * j2;
        Complex j6 = j4 * j2;
        Complex corr = Complex::i(W) * j * Real(6 * g.c, W) / Real::pi(W);
        e.e2 = (e.e2 + corr) / j2;
        e.e4 = e.e4 / j4;
        e.e6 = e.e6 / j6;
    }
    return {rounded(e.e2, P), rounded(e.e4, P), rounded(e.e6, P)};
}

Complex eisenstein(int k, const Complex &tau, mpfr_prec_t P)
{
    if (k != 2 && k != 4 && k != 6) throw DomainError("Eisenstein series of weight " + std::to_string(k));
    Eisenstein e = eisenstein_all(tau, P);
    return k == 2 ? e.e2 : k == 4 ? e.e4 : e.e6;
}

Complex j_invariant(const Complex &tau, mpfr_prec_t P)
{
    // j is invariant, so evaluate at the reduced point only
    mpfr_prec_t W = P + kGuard;
    Reduced red = reduce_fundamental(at_prec(tau, W));
    Eisenstein e = eisenstein_reduced(red.tau, W);
    Complex e43 = e.e4 * e.e4 * e.e4;
    Complex disc = e43 - e.e6 * e.e6;
    return rounded(e43 * 1728L / disc, P);
}

Complex j_from_ab(const Complex &a, const Complex &b)
{
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    Complex a3 = a * a * a;
    Complex s = a3 * 4L + b * b * 27L;
    Real scale = abs(a3) * 4L + abs(b * b) * 27L;
    if (abs(s) <= scale * Real::pow2(-static_cast<long>(p) + 8, p))
        throw DegenerateCurve("4a^3 + 27b^2 vanishes");
    // -2^12 3^3 a^3 / (-16 (4a^3 + 27b^2)) = 6912 a^3 / (4a^3 + 27b^2)
    return a3 * 6912L / s;
}

Complex g_target(const Complex &tau, mpfr_prec_t P)
{
    mpfr_prec_t W = P + kGuard;
    Complex t = at_prec(tau, W);
    Reduced red = reduce_fundamental(t);
    Complex d = red.tau - Complex::i(W);
    if (abs(d) < Real::pow2(-static_cast<long>(P) / 2, W)) throw PoleAtI("point is on the orbit of i");
    Eisenstein e = eisenstein_reduced(red.tau, W);
    Complex e62 = e.e6 * e.e6;
    Real pi = Real::pi(W);
    Complex g = e.e4 * (e.e4 * e.e4 * e.e4 - e62) / e62 * (pi * pi * 2L);
    // weight 4
    const Mat2 &m = red.gamma;
    if (!(m.c == 0)) g /= pow(m.cocycle(t), 4);
    return rounded(g, P);
}

CurveAB curve_from_tau(const Complex &tau, mpfr_prec_t P)
{
    mpfr_prec_t W = P + kGuard;
    Eisenstein e = eisenstein_all(at_prec(tau, W), W);
    Real pi = Real::pi(W);
    Real pi2 = pi * pi;
    Real pi4 = pi2 * pi2;
    Real pi6 = pi4 * pi2;
    Complex a = -(e.e4 * pi4) / 3L;
    Complex b = -(e.e6 * pi6 * 2L) / 27L;
    return {rounded(a, P), rounded(b, P)};
}

Complex cm_tau(long A, long B, long C, mpfr_prec_t P)
{
    long D = B * B - 4 * A * C;
    if (A <= 0 || D >= 0) throw DomainError("not a positive definite form");
    Real den(2 * A, P);
    return Complex(Real(-B, P) / den, sqrt(Real(-D, P)) / den);
}

Real hyperbolic_distance(const Complex &z1, const Complex &z2)
{
    Complex dz = z1 - z2;
    Real t = dz.norm() / (z1.im() * z2.im() * 2L) + 1L;
    Real one = Real::one(t.prec());
    return log(t + sqrt(max(t * t - one, Real::zero(t.prec()))));
}

Real distance_to_orbit_of_i(const Complex &z)
{
    Reduced r = reduce_fundamental(z);
    mpfr_prec_t p = z.prec();
    Real half(0.5, p);
    Complex cands[] = {Complex::i(p), Complex(Real::one(p), Real::one(p)), Complex(-Real::one(p), Real::one(p)),
                       Complex(half, half), Complex(-half, half)};
    Real best = hyperbolic_distance(r.tau, cands[0]);
    for (const auto &c : cands) best = min(best, hyperbolic_distance(r.tau, c));
    return best;
}

} // namespace cmg::num
