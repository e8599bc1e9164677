#include "cmg/green/eichler.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "cmg/errors.hpp"

namespace cmg::green
{

using coh::IntV2;
using num::Mat2;

namespace
{

constexpr int kNodes = 40;
constexpr int kMaxDepth = 48;

struct GaussLegendre {
    std::vector<Real> x, w; // nodes and weights on [-1, 1]
};

const GaussLegendre &gauss_legendre(mpfr_prec_t W)
{
    static std::mutex mu;
    static std::map<mpfr_prec_t, GaussLegendre> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(W);
    if (it != cache.end()) return it->second;
    GaussLegendre g;
    Real one = Real::one(W);
    Real eps = Real::pow2(-static_cast<long>(W) + 4, W);
    for (int i = 1; i <= kNodes; ++i) {
        Real x(std::cos(M_PI * (i - 0.25) / (kNodes + 0.5)), W);
        Real dp(W);
        for (int iter = 0; iter < 100; ++iter) {
            // P_n(x) and P_n'(x) by the three-term recurrence
            Real p0 = one, p1 = x;
            for (int k = 2; k <= kNodes; ++k) {
                Real p2 = (x * p1 * static_cast<long>(2 * k - 1) - p0 * static_cast<long>(k - 1)) / static_cast<long>(k);
                p0 = std::move(p1);
                p1 = std::move(p2);
            }
            dp = (x * p1 - p0) * static_cast<long>(kNodes) / (x * x - one);
            Real dx = p1 / dp;
            x -= dx;
            if (abs(dx) < eps) break;
        }
        g.x.push_back(x);
        g.w.push_back(Real(2L, W) / ((one - x * x) * dp * dp));
    }
    return cache.emplace(W, std::move(g)).first->second;
}

struct Triple {
    Complex m0, m1, m2;
};

Triple gl_segment(const Complex &a, const Complex &b, mpfr_prec_t W, long &evals)
{
    const GaussLegendre &g = gauss_legendre(W);
    Complex mid = (a + b) / 2L, half = (b - a) / 2L;
    Triple r{Complex(W), Complex(W), Complex(W)};
    for (int i = 0; i < kNodes; ++i) {
        Complex tau = mid + half * g.x[i];
        Complex f = num::g_target(tau, W) * g.w[i];
        r.m0 += f;
        f *= tau;
        r.m1 += f;
        f *= tau;
        r.m2 += f;
        ++evals;
    }
    r.m0 *= half;
    r.m1 *= half;
    r.m2 *= half;
    return r;
}

Real triple_diff(const Triple &x, const Triple &y)
{
    return max(max(abs(x.m0 - y.m0), abs(x.m1 - y.m1)), abs(x.m2 - y.m2));
}

Real triple_size(const Triple &x) { return max(max(abs(x.m0), abs(x.m1)), abs(x.m2)); }

void adaptive(const Complex &a, const Complex &b, const Triple &whole, mpfr_prec_t W, const Real &tol, int depth,
              Triple &acc, long &evals)
{
    Complex mid = (a + b) / 2L;
    Triple left = gl_segment(a, mid, W, evals), right = gl_segment(mid, b, W, evals);
    Triple both{left.m0 + right.m0, left.m1 + right.m1, left.m2 + right.m2};
    Real scale = max(triple_size(both), Real::one(W));
    if (triple_diff(both, whole) <= tol * scale) {
        acc.m0 += both.m0;
        acc.m1 += both.m1;
        acc.m2 += both.m2;
        return;
    }
    if (depth >= kMaxDepth) throw NonConvergent("quadrature did not converge; the path runs too close to a pole");
    adaptive(a, mid, left, W, tol, depth + 1, acc, evals);
    adaptive(mid, b, right, W, tol, depth + 1, acc, evals);
}

bool path_ok(const std::vector<Complex> &path, double clearance) { return path_clearance(path) >= clearance; }

} // namespace

CMPoint CMPoint::make(long A, long B, long C)
{
    if (A <= 0) throw DomainError("A must be positive");
    if (std::gcd(std::gcd(A, std::labs(B)), std::labs(C)) != 1) throw DomainError("form is not primitive");
    if (B * B - 4 * A * C >= 0) throw DomainError("discriminant must be negative");
    return {A, B, C};
}

std::vector<BoundaryTerm> boundary_decompose(const IntV2 &p)
{
    if (p[1] % 2) throw NotInBoundaryLattice("X coefficient " + std::to_string(p[1]) + " is odd");
    // (S, p2) gives p2 (X^2 - 1), (S, -(p1/2) X) gives p1 X, (T, -(p0 + p2) X) gives p0 + p2
    std::vector<BoundaryTerm> r;
    if (p[2]) r.push_back({'S', IntV2(p[2], 0, 0)});
    if (p[1]) r.push_back({'S', IntV2(0, -p[1] / 2, 0)});
    if (p[0] + p[2]) r.push_back({'T', IntV2(0, -(p[0] + p[2]), 0)});
    return r;
}

std::vector<BoundaryTerm> boundary_decompose_alt(const IntV2 &p)
{
    if (p[1] % 2) throw NotInBoundaryLattice("X coefficient " + std::to_string(p[1]) + " is odd");
    // S X^2 - X^2 = -(S 1 - 1), and (S, 1) + (S, X^2) has zero boundary
    std::vector<BoundaryTerm> r;
    if (p[2]) r.push_back({'S', IntV2(0, 0, -p[2])});
    if (p[1]) r.push_back({'S', IntV2(0, -p[1] / 2, 0)});
    if (p[0] + p[2]) r.push_back({'T', IntV2(0, -(p[0] + p[2]), 0)});
    r.push_back({'S', IntV2(1, 0, 0)});
    r.push_back({'S', IntV2(0, 0, 1)});
    return r;
}

IntV2 boundary_sum(const std::vector<BoundaryTerm> &terms)
{
    IntV2 s;
    for (const auto &t : terms) {
        coh::GroupWord w{std::string(1, t.gen)};
        s = s + (coh::act(w, t.u) - t.u);
    }
    return s;
}

double path_clearance(const std::vector<Complex> &path)
{
    constexpr int kSamples = 64;
    double best = 1e300;
    for (size_t s = 0; s + 1 < path.size(); ++s) {
        Complex a = path[s] * Real::one(64), b = path[s + 1] * Real::one(64);
        for (int j = 0; j <= kSamples; ++j) {
            Complex pt = a + (b - a) * Real(static_cast<double>(j) / kSamples, 64);
            Complex p64(Real(pt.re().to_double(), 64), Real(pt.im().to_double(), 64));
            best = std::min(best, num::distance_to_orbit_of_i(p64).to_double());
        }
    }
    return best;
}

std::vector<Complex> make_path(const Complex &a, const Complex &b, const PathOptions &opt)
{
    std::vector<Complex> straight{a, b};
    if (opt.policy != PathPolicy::UpOverDown && path_ok(straight, opt.clearance)) return straight;
    if (opt.policy == PathPolicy::Straight) throw PathTooClosePole("straight path passes too close to the orbit of i");
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    // vertical legs shifted sideways when the endpoints sit above a point of the orbit
    for (double s : {0.0, 0.25, -0.25, 0.5, -0.5})
        for (double h = opt.height; h <= opt.height + 8; h += 1.0) {
            Real H(std::max({h, a.im().to_double(), b.im().to_double()}), p);
            Real shift(s, p);
            std::vector<Complex> path{a};
            if (s != 0) path.push_back(Complex(a.re() + shift, a.im()));
            if (a.im() < H) path.push_back(Complex(a.re() + shift, H));
            if (b.im() < H) path.push_back(Complex(b.re() + shift, H));
            if (s != 0) path.push_back(Complex(b.re() + shift, b.im()));
            path.push_back(b);
            if (path_ok(path, opt.clearance)) return path;
        }
    throw PathTooClosePole("no polygonal path with the requested clearance");
}

Moments integrate_moments(const std::vector<Complex> &path, mpfr_prec_t P)
{
    mpfr_prec_t W = P + 32;
    Real tol = Real::pow2(-static_cast<long>(P) / 2, W);
    Triple acc{Complex(W), Complex(W), Complex(W)};
    long evals = 0;
    for (size_t s = 0; s + 1 < path.size(); ++s) {
        Complex a = path[s] * Real::one(W), b = path[s + 1] * Real::one(W);
        Triple whole = gl_segment(a, b, W, evals);
        adaptive(a, b, whole, W, tol, 0, acc, evals);
    }
    return {acc.m0, acc.m1, acc.m2, evals};
}

EichlerResult eichler_lift(const CMPoint &z, mpfr_prec_t P, const PathOptions &opt,
                           const std::vector<BoundaryTerm> *decomposition)
{
    long D = z.disc();
    if (z.A <= 0 || D >= 0) throw DomainError("not a CM point");
    mpfr_prec_t W = P + 32;
    Complex tau = z.tau(W);
    if (num::distance_to_orbit_of_i(tau) < Real(1e-30, W)) throw DomainError("z is equivalent to i");

    EichlerResult r{Complex(W), Complex(W), {}, 0, 1e300};
    IntV2 target = z.boundary_target();
    r.decomposition = decomposition ? *decomposition : boundary_decompose(target);
    if (!(boundary_sum(r.decomposition) == target))
        throw DecompositionMissing("decomposition does not sum to " + target.str());

    // group the u_i by generator; each generator needs one path integral
    for (char gen : {'S', 'T'}) {
        IntV2 u;
        bool used = false;
        for (const auto &t : r.decomposition)
            if (t.gen == gen) {
                u = u + t.u;
                used = true;
            }
        if (!used || u.is_zero()) continue;
        Mat2 g = gen == 'S' ? Mat2::S() : Mat2::T();
        Complex end = g.inverse().apply(tau);
        std::vector<Complex> path = make_path(tau, end, opt);
        r.min_clearance = std::min(r.min_clearance, path_clearance(path));
        Moments m = integrate_moments(path, P);
        r.evaluations += m.evaluations;
        // ((X - tau)^2 g, u) = u(tau) g
        r.raw += m.m0 * Real(u[0], W) + m.m1 * Real(u[1], W) + m.m2 * Real(u[2], W);
    }
    // -(1/2) raw / sqrt(D), sqrt(D) = i sqrt|D|
    Complex sqrtD(Real::zero(W), sqrt(Real(-D, W)));
    r.value = -r.raw / (sqrtD * 2L);
    return r;
}

Complex reduce_mod_i(const Complex &v, const Real &period)
{
    Real k = round_to_long(v.im() / period);
    Real im = v.im() - k * period;
    if (im <= -(period / 2L)) im += period;
    return Complex(v.re(), im);
}

} // namespace cmg::green
