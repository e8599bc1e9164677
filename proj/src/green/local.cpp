#include "cmg/green/local.hpp"

#include "cmg/errors.hpp"

namespace cmg::green
{

namespace
{

constexpr mpfr_prec_t kGuard = 32;

Real factorial(int n, mpfr_prec_t p)
{
    Real r = Real::one(p);
    for (int k = 2; k <= n; ++k) r *= static_cast<long>(k);
    return r;
}

Real at_prec(const Real &x, mpfr_prec_t p)
{
    Real r(p);
    mpfr_set(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Complex at_prec(const Complex &z, mpfr_prec_t p) { return Complex(at_prec(z.re(), p), at_prec(z.im(), p)); }

} // namespace

Real hyp_t(const Complex &z1, const Complex &z2)
{
    if (z1.im().sign() <= 0 || z2.im().sign() <= 0) throw DomainError("points must lie in the upper half plane");
    Complex d = z1 - z2;
    Real n = d.norm();
    if (n.is_zero()) throw CoincidentPoints("t(z, z) = 1");
    return n / (z1.im() * z2.im() * 2L) + 1L;
}

Real gauss_2f1(const Real &a, const Real &b, const Real &c, const Real &x, mpfr_prec_t P)
{
    mpfr_prec_t W = P + kGuard;
    Real one = Real::one(W);
    if (abs(x) >= one) throw NonConvergent("|x| >= 1");
    if (c <= Real::zero(W) && round_to_long(c) == c) throw DomainError("c is a nonpositive integer");
    Real A = at_prec(a, W), B = at_prec(b, W), Cc = at_prec(c, W), X = at_prec(x, W);
    Real sum = one, term = one;
    Real eps = Real::pow2(-static_cast<long>(P) - 8, W);
    Real ax = abs(X);
    for (long j = 0; j < 2000000; ++j) {
        Real jr(j, W);
        Real ratio = (A + jr) * (B + jr) / ((Cc + jr) * (jr + 1L)) * X;
        term *= ratio;
        sum += term;
        if (term.is_zero()) return at_prec(sum, P);
        // the ratio tends to x; bound the geometric tail by the larger of the two
        Real rho = max(abs(ratio), ax);
        if (rho < one) {
            Real tail = abs(term) * rho / (one - rho);
            if (tail <= eps * abs(sum)) return at_prec(sum, P);
        }
    }
    throw NonConvergent("hypergeometric series needs more than 2e6 terms");
}

Real legendre_q(int n, const Real &t, mpfr_prec_t P, QMethod method)
{
    if (n < 0) throw DomainError("negative Legendre index");
    mpfr_prec_t W = P + kGuard;
    Real T = at_prec(t, W);
    Real one = Real::one(W);
    if (T <= one) throw DomainError("Q_n(t) needs t > 1");
    Real x = Real(2L, W) / (T + one);
    if (method == QMethod::Auto) method = (x > Real(0.8, W)) ? QMethod::Recurrence : QMethod::Hypergeometric;
    if (method == QMethod::Closed && n > 1) throw DomainError("closed form only for n <= 1");

    if (method == QMethod::Hypergeometric) {
        // 2^n n!^2 / (2n+1)! (t+1)^(-n-1) F(n+1, n+1; 2n+2; 2/(1+t))
        Real pre = Real::pow2(n, W) * factorial(n, W) * factorial(n, W) / factorial(2 * n + 1, W);
        pre *= pow(T + one, -(n + 1));
        Real np1(static_cast<long>(n + 1), W);
        return at_prec(pre * gauss_2f1(np1, np1, np1 * 2L, x, W), P);
    }
    // Q0 = (1/2) log((t+1)/(t-1)) = atanh(1/t), Q1 = t Q0 - 1, then the three-term recurrence
    Real q0 = atanh(one / T);
    if (n == 0) return at_prec(q0, P);
    Real q1 = T * q0 - one;
    for (int k = 1; k < n; ++k) {
        Real q2 = (T * q1 * static_cast<long>(2 * k + 1) - q0 * static_cast<long>(k)) / static_cast<long>(k + 1);
        q0 = std::move(q1);
        q1 = std::move(q2);
    }
    return at_prec(q1, P);
}

Complex q_point(const Complex &z, const Complex &w)
{
    Complex wc = w.conj();
    return (z - w) * (z - wc) / (w - wc);
}

Real local_green(int k, const Complex &z1, const Complex &z2, mpfr_prec_t P)
{
    if (k < 1) throw DomainError("weight parameter k must be positive");
    return legendre_q(k - 1, hyp_t(z1, z2), P) * -2L;
}

Complex local_green_deriv(int k, int n, int m, const Complex &z1, const Complex &z2, mpfr_prec_t P)
{
    if (k < 1 || n < 1 - k || m < 1 - k) throw DomainError("need k >= 1 and n, m >= 1 - k");
    mpfr_prec_t W = P + kGuard;
    Complex Z1 = at_prec(z1, W), Z2 = at_prec(z2, W);
    Real t = hyp_t(Z1, Z2);
    Real one = Real::one(W);
    Real x = Real(2L, W) / (t + one);
    // (-1)^(m+n+1) (k+m-1)! (k+n-1)! / (2k-1)! ((t+1)/2)^-k ((t-1)/2)^(m+n) F(k+m, k+n; 2k; 2/(t+1))
    Real pre = factorial(k + m - 1, W) * factorial(k + n - 1, W) / factorial(2 * k - 1, W);
    if ((m + n + 1) % 2) pre = -pre;
    pre *= pow(x, k);
    pre *= pow((t - one) / 2L, m + n);
    Real F = gauss_2f1(Real(static_cast<long>(k + m), W), Real(static_cast<long>(k + n), W),
                       Real(static_cast<long>(2 * k), W), x, W);
    Complex r(pre * F);
    // Q_{z2}(z1)^-n Q_{z1}(z2)^-m
    if (n) r *= pow(q_point(Z1, Z2), -n);
    if (m) r *= pow(q_point(Z2, Z1), -m);
    return at_prec(r, P);
}

Complex local_green_second(int k, int m, const Complex &z1, const Complex &z2, mpfr_prec_t P)
{
    if (k < 1 || m < 1 - k) throw DomainError("need k >= 1 and m >= 1 - k");
    mpfr_prec_t W = P + kGuard;
    Complex Z1 = at_prec(z1, W), Z2 = at_prec(z2, W);
    hyp_t(Z1, Z2);
    // (-1)^(k-1) (k+m-1)! (z2 - conj z2)^(k-m) / ((z1 - z2)^(k+m) (z1 - conj z2)^(k-m))
    Complex d2 = Z2 - Z2.conj();
    Complex r = pow(d2, k - m) / (pow(Z1 - Z2, k + m) * pow(Z1 - Z2.conj(), k - m));
    r *= factorial(k + m - 1, W);
    if ((k - 1) % 2) r = -r;
    return at_prec(r, P);
}

Complex local_green_dz(const Complex &z1, const Complex &z2, mpfr_prec_t P)
{
    mpfr_prec_t W = P + kGuard;
    Complex Z1 = at_prec(z1, W), Z2 = at_prec(z2, W);
    Real t = hyp_t(Z1, Z2);
    Real one = Real::one(W);
    // -2 Q1'(t) dt/dz1 with Q1'(t) = atanh(1/t) - t/(t^2 - 1) and dt/dz1 = (t^2 - 1)/2 / Q_{z2}(z1)
    Real t2m1 = t * t - one;
    Real num = t - t2m1 * atanh(one / t);
    return at_prec(Complex(num) / q_point(Z1, Z2), P);
}

} // namespace cmg::green
