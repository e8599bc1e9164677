#ifndef CMG_GREEN_EICHLER_HPP
#define CMG_GREEN_EICHLER_HPP

#include <string>
#include <vector>

#include "cmg/green/global.hpp"

namespace cmg::green
{

// Positive definite primitive form A X^2 + B X + C with root tau in the upper half plane.
struct CMPoint {
    long A = 1, B = 1, C = 2;

    // Throws DomainError unless A > 0, gcd(A, B, C) = 1 and D < 0.
    static CMPoint make(long A, long B, long C);
    long disc() const { return B * B - 4 * A * C; }
    Complex tau(mpfr_prec_t P) const { return num::cm_tau(A, B, C, P); }
    // 2 (A X^2 + B X + C) = 2 sqrt(D) Q_tau
    coh::IntV2 boundary_target() const { return {2 * C, 2 * B, 2 * A}; }
};

struct BoundaryTerm {
    char gen; // 'S' or 'T'
    coh::IntV2 u;
    bool operator==(const BoundaryTerm &o) const { return gen == o.gen && u == o.u; }
};

// sum_i (g_i u_i - u_i) = p with g_i in {S, T}. Throws NotInBoundaryLattice when
// the X coefficient is odd.
std::vector<BoundaryTerm> boundary_decompose(const coh::IntV2 &p);
// A second valid decomposition, differing from the first by (S, 1 + p2 X^2 + ...)-type
// terms whose boundaries cancel.
std::vector<BoundaryTerm> boundary_decompose_alt(const coh::IntV2 &p);
coh::IntV2 boundary_sum(const std::vector<BoundaryTerm> &terms);

enum class PathPolicy { Auto, Straight, UpOverDown };

struct PathOptions {
    PathPolicy policy = PathPolicy::Auto;
    double height = 2.0;     // level of the horizontal leg of up-over-down paths
    double clearance = 0.2;  // minimal hyperbolic distance to the orbit of i
};

// Polygonal path from a to b avoiding the orbit of i; throws PathTooClosePole.
std::vector<Complex> make_path(const Complex &a, const Complex &b, const PathOptions &opt);
// Smallest distance to the orbit of i over sample points of the polygon.
double path_clearance(const std::vector<Complex> &path);

struct Moments {
    Complex m0, m1, m2; // integrals of g, tau g, tau^2 g
    long evaluations = 0;
};
// Integrals of tau^k g_target(tau) d tau along a polygon, adaptive Gauss-Legendre
// until every segment error is below 2^(-P/2) (relative to the segment size).
Moments integrate_moments(const std::vector<Complex> &path, mpfr_prec_t P);

struct EichlerResult {
    Complex value;   // G-hat
    Complex raw;     // sum_i (int_z^{g_i^-1 z} (X - tau)^2 g d tau, u_i)
    std::vector<BoundaryTerm> decomposition;
    long evaluations = 0;
    double min_clearance = 0;
};
// G-hat_2(z, i) = -(1 / (2 sqrt D)) raw, with sqrt D = i sqrt|D|. Throws
// DomainError at points of the orbit of i and DecompositionMissing if the
// supplied decomposition does not sum to 2 (A X^2 + B X + C).
EichlerResult eichler_lift(const CMPoint &z, mpfr_prec_t P, const PathOptions &opt = {},
                           const std::vector<BoundaryTerm> *decomposition = nullptr);

// Representative of v modulo period * i * Z with imaginary part in (-period/2, period/2].
Complex reduce_mod_i(const Complex &v, const Real &period);

} // namespace cmg::green

#endif
