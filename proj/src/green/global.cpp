#include "cmg/green/global.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "cmg/errors.hpp"

namespace cmg::green
{

using num::Mat2;

namespace
{

long ext_gcd(long a, long b, long &x, long &y)
{
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return std::labs(a);
    }
    long x1, y1;
    long g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

// Visits every g in PSL2(Z) with t(z1, g z2) <= T. Near terms (t < kFarT) get
// the exact matrix, far terms only their double-precision data.
template <class Near, class Far>
void enumerate_orbit(const Complex &z1, const Complex &z2, double T, Near near, Far far)
{
    const double x1 = z1.re().to_double(), y1 = z1.im().to_double();
    const double x2 = z2.re().to_double(), y2 = z2.im().to_double();
    const double n2 = x2 * x2 + y2 * y2;
    // |c z2 + d|^2 <= y2 (T + sqrt(T^2 - 1)) / y1, slightly enlarged
    const double bound = y2 * (T + std::sqrt(T * T - 1)) / y1 * (1 + 1e-9);
    const long cmax = static_cast<long>(std::floor(std::sqrt(bound) / y2));
    for (long c = 0; c <= cmax; ++c) {
        long dlo, dhi;
        if (c == 0) {
            dlo = dhi = 1;
        } else {
            double s = std::sqrt(std::max(0.0, bound - c * c * y2 * y2));
            dlo = static_cast<long>(std::ceil(-c * x2 - s));
            dhi = static_cast<long>(std::floor(-c * x2 + s));
        }
        for (long d = dlo; d <= dhi; ++d) {
            long a, mb;
            if (ext_gcd(d, c, a, mb) != 1) continue;
            long b = -mb; // a d - b c = 1
            double den = (c * x2 + d) * (c * x2 + d) + c * c * y2 * y2;
            double yw = y2 / den;
            double xw = (a * c * n2 + (a * d + b * c) * x2 + b * d) / den;
            double R = 2 * y1 * yw * (T - 1) - (y1 - yw) * (y1 - yw);
            if (R < 0) continue;
            double sr = std::sqrt(R);
            long nlo = static_cast<long>(std::ceil(x1 - xw - sr)), nhi = static_cast<long>(std::floor(x1 - xw + sr));
            for (long n = nlo; n <= nhi; ++n) {
                double dx = x1 - xw - n;
                double t = 1 + (dx * dx + (y1 - yw) * (y1 - yw)) / (2 * y1 * yw);
                if (t > T) continue;
                if (t < kFarT) near(Mat2{a + n * c, b + n * d, c, d});
                else far(t, xw + n, yw);
            }
        }
    }
}

void check_cutoff(double T)
{
    if (!(T > kFarT) || !std::isfinite(T)) throw DomainError("cutoff must be a finite number above 4");
}

// -12 int_T^oo Q_1(t) dt = -12 (T/2 - (T^2 - 1)/2 atanh(1/T))
Real tail_correction(double T, mpfr_prec_t W)
{
    Real t(T, W);
    Real one = Real::one(W);
    Real integral = t / 2L - (t * t - one) / 2L * atanh(one / t);
    return integral * -12L;
}

} // namespace

V2C V2C::from_int(const coh::IntV2 &v, mpfr_prec_t prec)
{
    return V2C(Complex(Real(v[0], prec)), Complex(Real(v[1], prec)), Complex(Real(v[2], prec)));
}

V2C V2C::product(const Complex &a, const Complex &b, const Complex &s)
{
    return V2C(a * b * s, -(a + b) * s, s);
}

Complex pairing(const V2C &a, const V2C &b)
{
    return a.p[0] * b.p[2] + a.p[2] * b.p[0] - a.p[1] * b.p[1] / 2L;
}

V2C act(const Mat2 &g, const V2C &v)
{
    mpfr_prec_t p = v.p[0].prec();
    auto R = [&](long x) { return Complex(Real(x, p)); };
    long a = g.a, b = g.b, c = g.c, d = g.d;
    V2C e0(R(a * a), R(-2 * a * c), R(c * c));
    V2C e1(R(-a * b), R(a * d + b * c), R(-c * d));
    V2C e2(R(b * b), R(-2 * b * d), R(d * d));
    return e0 * v.p[0] + e1 * v.p[1] + e2 * v.p[2];
}

double cutoff_for_tail(double tail)
{
    if (!(tail > 0)) throw DomainError("tail target must be positive");
    // 4/T is the leading term; the exact correction is smaller
    return std::max(8.0, std::ceil(4.0 / tail));
}

GlobalGreen global_green(int k, const Complex &z1, const Complex &z2, double cutoff, mpfr_prec_t P, Kernel kernel)
{
    if (k != 2) throw DomainError("the global sum is implemented for k = 2");
    check_cutoff(cutoff);
    if (z1.im().sign() <= 0 || z2.im().sign() <= 0) throw DomainError("points must lie in the upper half plane");
    mpfr_prec_t W = P + 32;
    Real collide = Real::pow2(-static_cast<long>(P) / 2, W);
    GlobalGreen r{Real(W), Real(W), Real(W)};
    r.cutoff = cutoff;
    r.kernel = resolve_kernel(kernel);
    Real near_sum(W);
    std::vector<double> far_t;
    far_t.reserve(static_cast<size_t>(8 * cutoff));
    Complex Z1 = z1 * Real::one(W), Z2 = z2 * Real::one(W);

    enumerate_orbit(
        Z1, Z2, cutoff,
        [&](const Mat2 &g) {
            Complex w = g.apply(Z2);
            if (abs(w - Z1) < collide) throw OrbitCollision("z1 lies on the orbit of z2");
            near_sum += legendre_q(1, hyp_t(Z1, w), W);
            ++r.near_terms;
        },
        [&](double t, double, double) { far_t.push_back(t); });

    r.terms = r.near_terms + static_cast<long>(far_t.size());
    Real far_sum(q1_sum(far_t.data(), far_t.size(), r.kernel), W);
    r.partial = (near_sum + far_sum) * -2L;
    Real corr = tail_correction(cutoff, W);
    r.value = r.partial + corr;
    r.tail = abs(corr);
    auto round = [&](Real &x) {
        Real y(P);
        mpfr_set(y.get(), x.get(), MPFR_RNDN);
        x = y;
    };
    round(r.value);
    round(r.partial);
    round(r.tail);
    return r;
}

GlobalGreenDz global_green_dz(const Complex &z1, const Complex &z2, double cutoff, mpfr_prec_t P)
{
    check_cutoff(cutoff);
    mpfr_prec_t W = P + 32;
    Real collide = Real::pow2(-static_cast<long>(P) / 2, W);
    Complex Z1 = z1 * Real::one(W), Z2 = z2 * Real::one(W);
    Complex near_sum(W);
    std::complex<double> far_sum = 0;
    const std::complex<double> zd(z1.re().to_double(), z1.im().to_double());
    enumerate_orbit(
        Z1, Z2, cutoff,
        [&](const Mat2 &g) {
            Complex w = g.apply(Z2);
            if (abs(w - Z1) < collide) throw OrbitCollision("z1 lies on the orbit of z2");
            near_sum += local_green_dz(Z1, w, W);
        },
        [&](double t, double xw, double yw) {
            // -2 Q1'(t) (t^2 - 1) / (2 Q_w(z1)), Q1'(t) = -(2/t) sum j u^j / (2j + 1)
            double u = 1.0 / (t * t), q = 0, uj = u;
            for (int j = 1; j <= 14; ++j, uj *= u) q += j * uj / (2 * j + 1);
            double dq = -2.0 / t * q;
            std::complex<double> w(xw, yw);
            std::complex<double> Q = (zd - w) * (zd - std::conj(w)) / (w - std::conj(w));
            far_sum += -dq * (t * t - 1) / Q;
        });
    Complex v = near_sum + Complex(far_sum.real(), far_sum.imag(), W);
    Real tail(4.0 / (z1.im().to_double() * cutoff), P);
    return {v, tail};
}

V2C extended_from(const Complex &z, const Real &G, const Complex &dG)
{
    mpfr_prec_t p = z.prec();
    Complex zb = z.conj();
    Complex diff = z - zb;
    Complex one(Real::one(p));
    Complex dinv = diff * diff * dG.conj() * Complex(Real(-0.5, p));
    V2C e = V2C::product(zb, zb, one / (diff * diff));
    V2C m = V2C::product(z, zb, one / diff);
    V2C q = V2C::product(z, z, Complex(Real(0.5, p)));
    V2C sum = e * dinv + m * Complex(G) + q * dG;
    return sum * Complex(Real(-2L, p));
}

V2C extended_G(const Complex &z, const Complex &z0, double cutoff, mpfr_prec_t P)
{
    GlobalGreen g = global_green(2, z, z0, cutoff, P);
    GlobalGreenDz d = global_green_dz(z, z0, cutoff, P);
    return extended_from(z, g.value, d.value);
}

} // namespace cmg::green
