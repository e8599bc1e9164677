#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cmg/errors.hpp"
#include "cmg/green/conjecture.hpp"
#include "cmg/green/numdiff.hpp"

using namespace cmg;
using namespace cmg::green;
using num::Mat2;

namespace
{

constexpr mpfr_prec_t P = 192;

Complex C(double re, double im, mpfr_prec_t p = P) { return Complex(re, im, p); }
Complex R(const Real &x) { return Complex(x); }
double err(const Complex &a, const Complex &b) { return abs(a - b).to_double(); }
double rel(const Complex &a, const Complex &b) { return (abs(a - b) / abs(b)).to_double(); }

Real headline(mpfr_prec_t p)
{
    // (8 / sqrt 7) log(8 - 3 sqrt 7)
    return Real(8L, p) / sqrt(Real(7L, p)) * log(Real(8L, p) - sqrt(Real(63L, p)));
}

Mat2 random_gamma(std::mt19937 &rng)
{
    std::uniform_int_distribution<int> pick(0, 2);
    Mat2 g;
    for (int k = 0; k < 6; ++k) {
        int c = pick(rng);
        g = g * (c == 0 ? Mat2::S() : c == 1 ? Mat2::T() : Mat2::T(-1));
    }
    return g;
}

// Second-order Wirtinger derivative of a real-analytic function, nested differences.
Complex d_dz2(const CFun &f, const Complex &z, mpfr_prec_t p)
{
    CFun g = [&](const Complex &w) { return d_dz(f, w, p); };
    return d_dz(g, z, p);
}

} // namespace

TEST_CASE("hyperbolic cosine of the distance")
{
    CHECK(err(R(hyp_t(C(0, 1), C(0, 2))), R(Real(1.25, P))) < 1e-50);
    Real eps(1e-20, P);
    Complex z = C(0.3, 0.7);
    Real t = hyp_t(z, z + Complex(eps, eps));
    CHECK((t - 1L).to_double() < 1e-38);
    CHECK_THROWS_AS(hyp_t(z, z), CoincidentPoints);
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> u(-1, 1), v(0.2, 2);
    for (int k = 0; k < 20; ++k) {
        Complex a = C(u(rng), v(rng)), b = C(u(rng), v(rng));
        Mat2 g = random_gamma(rng);
        CHECK(rel(R(hyp_t(g.apply(a), g.apply(b))), R(hyp_t(a, b))) < 1e-45);
    }
}

TEST_CASE("hypergeometric series")
{
    Real x(0.37, P);
    Real a(2.5, P), b(1.25, P);
    // F(a, b; b; x) = (1 - x)^-a
    Real lhs = gauss_2f1(a, b, b, x, P);
    Real rhs = exp(-a * log(Real::one(P) - x));
    CHECK(abs(lhs - rhs).to_double() < 1e-50);
    CHECK(gauss_2f1(a, b, Real(3L, P), Real::zero(P), P) == Real::one(P));
    // F(1, 2; 4; 1/2) against a direct partial sum at doubled precision
    mpfr_prec_t P2 = 2 * P;
    Real s = Real::one(P2), term = Real::one(P2), h(0.5, P2);
    for (long n = 0; n < 1000; ++n) {
        term *= Real(1 + n, P2) * Real(2 + n, P2) / (Real(4 + n, P2) * Real(n + 1, P2)) * h;
        s += term;
    }
    CHECK(abs(gauss_2f1(Real(1L, P), Real(2L, P), Real(4L, P), Real(0.5, P), P) - s).to_double() < 1e-50);
    CHECK_THROWS_AS(gauss_2f1(a, b, b, Real(1.5, P), P), NonConvergent);
    CHECK_THROWS_AS(gauss_2f1(a, b, Real(-2L, P), x, P), DomainError);
}

TEST_CASE("Legendre function of the second kind")
{
    // Q1(3) = (3/2) log 2 - 1, Q1(5/4) = (5/8) log 9 - 1
    Real q3 = legendre_q(1, Real(3L, P), P, QMethod::Hypergeometric);
    CHECK(abs(q3 - (log(Real(2L, P)) * Real(1.5, P) - 1L)).to_double() < 1e-50);
    CHECK(q3.to_double() == doctest::Approx(0.0397207).epsilon(1e-6));
    Real q54 = legendre_q(1, Real(1.25, P), P, QMethod::Hypergeometric);
    CHECK(abs(q54 - (log(Real(9L, P)) * Real(0.625, P) - 1L)).to_double() < 1e-45);
    CHECK(q54.to_double() == doctest::Approx(0.3732655).epsilon(1e-6));

    double worst = 0;
    for (int k = 0; k <= 89; ++k) {
        Real t(1.1 + 0.1 * k, P);
        Real s = legendre_q(1, t, P, QMethod::Hypergeometric), c = legendre_q(1, t, P, QMethod::Closed);
        worst = std::max(worst, abs(s - c).to_double());
        for (int n : {0, 2, 3, 5}) {
            Real a = legendre_q(n, t, P, QMethod::Hypergeometric), b = legendre_q(n, t, P, QMethod::Recurrence);
            CHECK(abs(a - b).to_double() < 1e-30);
        }
    }
    CHECK(worst < 1e-12);
    CHECK_THROWS_AS(legendre_q(1, Real(1L, P), P), DomainError);
    CHECK_THROWS_AS(legendre_q(2, Real(3L, P), P, QMethod::Closed), DomainError);
}

TEST_CASE("local Green function and its derivatives")
{
    Complex i = Complex::i(P);
    Complex z1 = C(0.4, 1.3), z2 = C(-0.2, 0.8);
    CHECK(err(local_green_deriv(2, 0, 0, z1, z2, P), R(local_green(2, z1, z2, P))) < 1e-50);
    CHECK(err(R(local_green(2, z1, z2, P)), R(legendre_q(1, hyp_t(z1, z2), P) * -2L)) < 1e-50);
    // delta_1^2 G_2 at (2i, i) is -Q_i(2i)^-2 = 4/9
    Complex v = local_green_deriv(2, 2, 0, C(0, 2), i, P);
    CHECK(err(v, R(Real(4L, P) / 9L)) < 1e-50);
    CHECK(err(q_point(C(0, 2), i), C(0, 1.5)) < 1e-50);

    // the n = k closed form
    for (int k : {2, 3})
        for (int m = 1 - k; m <= 2; ++m)
            CHECK(rel(local_green_deriv(k, k, m, z1, z2, P), local_green_second(k, m, z1, z2, P)) < 1e-40);
    CHECK(rel(local_green_deriv(2, 1, 0, z1, z2, P), local_green_dz(z1, z2, P)) < 1e-40);
    CHECK_THROWS_AS(local_green_deriv(2, -2, 0, z1, z2, P), DomainError);

    // finite differences of -2 Q1(t): delta_1^2 = (d/dz + 2/(z - zb)) d/dz at weight 0
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-1, 1), y(0.3, 2);
    for (int k = 0; k < 20; ++k) {
        Complex a = C(u(rng), y(rng)), b = C(u(rng), y(rng));
        CFun G = [&](const Complex &w) { return R(local_green(2, w, b, P)); };
        Complex d1 = d_dz(G, a, P);
        Complex d2 = d_dz2(G, a, P) + d1 * 2L / (a - a.conj());
        CHECK(rel(d2, local_green_deriv(2, 2, 0, a, b, P)) < 1e-6);
        CHECK(rel(d1, local_green_dz(a, b, P)) < 1e-6);
        // delta_2 acts on the second variable
        CFun G2 = [&](const Complex &w) { return R(local_green(2, a, w, P)); };
        CHECK(rel(d_dz(G2, b, P), local_green_deriv(2, 0, 1, a, b, P)) < 1e-6);
    }
}

TEST_CASE("local expansion near the diagonal")
{
    Complex z = C(0.1, 0.9);
    std::vector<double> vals;
    for (double e : {1e-3, 1e-6, 1e-9, 1e-12}) {
        Complex w = z + C(e, 0.5 * e);
        Real g = local_green(2, z, w, P);
        vals.push_back((g - log(abs(z - w) * abs(z - w))).to_double());
    }
    for (double x : vals) CHECK(std::abs(x) < 10);
    CHECK(std::abs(vals[3] - vals[2]) < 1e-5);
}

TEST_CASE("V2 calculus")
{
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-2, 2), y(0.3, 2);
    for (int k = 0; k < 10; ++k) {
        Complex z = C(u(rng), y(rng)), X = C(u(rng), u(rng));
        // delta_{-1}(X - z) = -(X - zb)/(z - zb)
        CFun f = [&](const Complex &w) { return X - w; };
        Complex lhs = d_dz(f, z, P) - (X - z) / (z - z.conj());
        CHECK(err(lhs, -(X - z.conj()) / (z - z.conj())) < 1e-30);

        V2C p(C(u(rng), u(rng)), C(u(rng), u(rng)), C(u(rng), u(rng)));
        Complex one = C(1, 0);
        // ((z - X)^2, p) = p(z)
        CHECK(err(pairing(V2C::product(z, z, one), p), p(z)) < 1e-40);
        V2C q(C(u(rng), u(rng)), C(u(rng), u(rng)), C(u(rng), u(rng)));
        Mat2 g = random_gamma(rng);
        CHECK(err(pairing(act(g, p), act(g, q)), pairing(p, q)) < 1e-30);
    }
    // (delta^-1 Q_z, delta Q_z) = 1/2 with delta^-1 = -(1/2)(z - zb)^2 d/dzb and delta = d/dz - 2/(z - zb)
    Complex z = C(0.3, 1.1);
    auto Qcoef = [&](int c) {
        return CFun([c](const Complex &w) {
            V2C q = V2C::product(w, w.conj(), Complex(Real::one(w.prec())) / (w - w.conj()));
            return q.p[c];
        });
    };
    V2C dm(z.prec()), dp(z.prec());
    for (int c = 0; c < 3; ++c) {
        Complex diff = z - z.conj();
        dm.p[c] = d_dzbar(Qcoef(c), z, P) * diff * diff / -2L;
        dp.p[c] = d_dz(Qcoef(c), z, P) - Qcoef(c)(z) * 2L / diff;
    }
    CHECK(err(pairing(dm, dp), R(Real(0.5, P))) < 1e-30);
}

TEST_CASE("far-term kernels agree")
{
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(4, 1e5);
    for (size_t n : {0u, 1u, 3u, 4u, 7u, 1000u, 100003u}) {
        std::vector<double> t(n);
        for (auto &x : t) x = u(rng);
        double a = q1_sum_scalar(t.data(), n), b = q1_sum_avx2(t.data(), n);
        CHECK(std::abs(a - b) <= 1e-13 * std::max(1.0, std::abs(a)));
    }
    // against the closed form at a few points
    for (double t : {4.0, 7.5, 100.0, 12345.0}) {
        double closed = t / 2 * std::log((t + 1) / (t - 1)) - 1;
        CHECK(detail::q1_far(t) == doctest::Approx(closed).epsilon(1e-12));
    }
    INFO("avx2 available: " << avx2_available());
    CHECK((resolve_kernel(Kernel::Auto) == Kernel::Avx2) == avx2_available());
}

TEST_CASE("global Green function")
{
    Complex tau7 = num::cm_tau(1, 1, 2, P);
    Complex i = Complex::i(P);
    double T = 2e5;
    GlobalGreen g = global_green(2, tau7, i, T, P);
    CHECK(g.tail.to_double() < 1e-4);
    CHECK(std::abs((g.value - headline(P)).to_double()) < g.tail.to_double());
    CHECK(std::abs((g.value - headline(P)).to_double()) < 1e-8);
    CHECK(g.value.to_double() == doctest::Approx(-8.3725).epsilon(1e-3));

    GlobalGreen s = global_green(2, tau7, i, T, P, Kernel::Scalar);
    GlobalGreen v = global_green(2, tau7, i, T, P, Kernel::Avx2);
    CHECK(std::abs((s.value - v.value).to_double()) < 1e-12);
    CHECK(s.terms == v.terms);

    // symmetry and invariance
    Complex a = C(0.23, 1.7), b = C(-0.4, 0.6);
    GlobalGreen ab = global_green(2, a, b, T, P), ba = global_green(2, b, a, T, P);
    CHECK(std::abs((ab.value - ba.value).to_double()) < ab.tail.to_double());
    GlobalGreen shifted = global_green(2, a, b + C(1, 0), T, P);
    CHECK(std::abs((shifted.value - ab.value).to_double()) < 1e-12);
    GlobalGreen moved = global_green(2, Mat2::S().apply(a), b, T, P);
    CHECK(std::abs((moved.value - ab.value).to_double()) < ab.tail.to_double());

    // decay at the cusp, like 1/Im z1
    double prev = 1e9, scaled = 0;
    for (double y : {6.0, 24.0, 96.0}) {
        double val = global_green(2, C(0.1, y), b, T, P).value.to_double();
        CHECK(std::abs(val) < prev);
        if (scaled != 0) CHECK(val * y == doctest::Approx(scaled).epsilon(1e-4));
        scaled = val * y;
        prev = std::abs(val);
    }
    CHECK(prev < 0.2);

    CHECK_THROWS_AS(global_green(2, a, a, T, P), OrbitCollision);
    CHECK_THROWS_AS(global_green(2, Mat2::S().apply(a), a, T, P), OrbitCollision);
    CHECK_THROWS_AS(global_green(3, a, b, T, P), DomainError);
    CHECK(cutoff_for_tail(1e-2) >= 400);
}

TEST_CASE("extended function")
{
    Complex z = C(0.21, 1.13), z0 = Complex::i(P);
    double T = 5e4;
    V2C ext = extended_G(z, z0, T, P);
    GlobalGreen g = global_green(2, z, z0, T, P);
    Complex one(Real::one(P));
    V2C Q = V2C::product(z, z.conj(), one / (z - z.conj()));
    CHECK(err(pairing(ext, Q), R(g.value)) < 1e-40);
    for (const auto &c : ext.p) CHECK(abs((c * Complex::i(P)).im()).to_double() < 1e-40);

    // the z-bar derivative of the local extended function is divisible by (X - zb)^2
    Complex w = C(-0.3, 0.7);
    auto local = [&](const Complex &x) { return extended_from(x, local_green(2, x, w, P), local_green_dz(x, w, P)); };
    V2C dz(P);
    for (int c = 0; c < 3; ++c) dz.p[c] = d_dzbar([&](const Complex &x) { return local(x).p[c]; }, z, P);
    Complex zb = z.conj();
    Complex at = dz(zb);
    Complex slope = dz.p[1] + dz.p[2] * zb * 2L;
    CHECK(abs(at).to_double() < 1e-20);
    CHECK(abs(slope).to_double() < 1e-20);
    CHECK(abs(dz.p[2]).to_double() > 1e-6);
}

TEST_CASE("boundary decomposition")
{
    using coh::IntV2;
    auto d7 = boundary_decompose(IntV2(4, 2, 2));
    CHECK(d7 == std::vector<BoundaryTerm>{{'S', IntV2(2, 0, 0)}, {'S', IntV2(0, -1, 0)}, {'T', IntV2(0, -6, 0)}});
    CHECK(boundary_decompose(IntV2()).empty());
    CHECK(boundary_decompose(IntV2(1, 0, 1)) == std::vector<BoundaryTerm>{{'S', IntV2(1, 0, 0)}, {'T', IntV2(0, -2, 0)}});
    CHECK_THROWS_AS(boundary_decompose(IntV2(0, 1, 0)), NotInBoundaryLattice);

    std::mt19937 rng(5);
    std::uniform_int_distribution<long> c(-30, 30);
    int done = 0;
    while (done < 50) {
        long A = std::abs(c(rng)) + 1, B = c(rng), Cc = c(rng);
        if (B * B - 4 * A * Cc >= 0 || std::gcd(std::gcd(A, std::labs(B)), std::labs(Cc)) != 1) continue;
        CMPoint z = CMPoint::make(A, B, Cc);
        CHECK(boundary_sum(boundary_decompose(z.boundary_target())) == z.boundary_target());
        CHECK(boundary_sum(boundary_decompose_alt(z.boundary_target())) == z.boundary_target());
        ++done;
    }
    CHECK_THROWS_AS(CMPoint::make(1, 0, -1), DomainError);
    CHECK_THROWS_AS(CMPoint::make(2, 2, 2), DomainError);
}

TEST_CASE("Eichler integral")
{
    CMPoint z = CMPoint::make(1, 1, 2);
    EichlerResult r = eichler_lift(z, P);
    CHECK(r.min_clearance >= 0.2);
    Real G = headline(P);
    CHECK(std::abs((r.value.re() - G / 2L).to_double()) < 1e-6);
    Real pi = Real::pi(P);
    Complex lhs = r.value * sqrt(Real(28L, P));
    Real target = Real(8L, P) * log(Real(8L, P) - sqrt(Real(63L, P)));
    CHECK(abs(reduce_mod_i(lhs - R(target), pi)).to_double() < 1e-6);

    // another decomposition of the same boundary
    auto alt = boundary_decompose_alt(z.boundary_target());
    EichlerResult r2 = eichler_lift(z, P, {}, &alt);
    CHECK(abs(reduce_mod_i((r2.value - r.value) * sqrt(Real(28L, P)), pi)).to_double() < 1e-6);

    // a nearby path in the same homotopy class
    PathOptions high;
    high.policy = PathPolicy::UpOverDown;
    high.height = 2.5;
    EichlerResult r3 = eichler_lift(z, P, high);
    CHECK(err(r3.value, r.value) < 1e-6);

    PathOptions straight;
    straight.policy = PathPolicy::Straight;
    CHECK_THROWS_AS(eichler_lift(z, P, straight), PathTooClosePole);
    CHECK_THROWS_AS(eichler_lift(CMPoint::make(1, 0, 1), P), DomainError);
    std::vector<BoundaryTerm> wrong{{'S', coh::IntV2(1, 0, 0)}};
    CHECK_THROWS_AS(eichler_lift(z, P, {}, &wrong), DecompositionMissing);
}

TEST_CASE("conjecture check")
{
    CMPoint z = builtin_point(-7);
    ConjectureReport rep = conjecture_check(z, builtin_endo("tau7"), P);
    CHECK(rep.cycle == "2*Gamma[tau7] - 5*Z1 - 3*Z2 + Delta");
    CHECK(rep.residual_abs.to_double() < 1e-6);
    ConjectureReport hi = conjecture_check(z, builtin_endo("tau7"), 2 * P);
    CHECK(hi.residual_abs.to_double() <= std::max(rep.residual_abs.to_double(), 1e-6));

    ConjectureReport file = conjecture_check(z, std::string(CMG_DATA_DIR) + "/endo/tau7.endo", P);
    CHECK(file.intersection == rep.intersection);
    CHECK_THROWS_AS(conjecture_check(z, std::string("/nonexistent.endo"), P), DecompositionMissing);
    CHECK_THROWS_AS(builtin_point(-11), DecompositionMissing);
    CHECK(err(to_complex(cyc::sqrt_7(), P), R(sqrt(Real(7L, P)))) < 1e-50);
}

TEST_CASE("Eichler paths that must step around the orbit of i")
{
    // i sqrt 2 and i / sqrt 2 lie on the imaginary axis on either side of i
    CMPoint z = CMPoint::make(1, 0, 2);
    Complex tau = z.tau(P);
    auto path = make_path(tau, Mat2::S().inverse().apply(tau), {});
    CHECK(path.size() > 4);
    CHECK(path_clearance(path) >= 0.2);
    EichlerResult r = eichler_lift(z, P);
    GlobalGreen g = global_green(2, tau, Complex::i(P), 2e4, P);
    CHECK(std::abs((r.value.re() * 2L - g.value).to_double()) <= g.tail.to_double());
}
