#ifndef CMG_COHOMOLOGY_TORSION_HPP
#define CMG_COHOMOLOGY_TORSION_HPP

#include <array>
#include <string>
#include <vector>

#include "cmg/exact/rational.hpp"

namespace cmg::coh
{

// p0 + p1 X + p2 X^2 with integer coefficients.
struct IntV2 {
    std::array<long, 3> p{0, 0, 0};

    IntV2() = default;
    IntV2(long p0, long p1, long p2) : p{p0, p1, p2} {}
    long operator[](int k) const { return p[k]; }
    IntV2 operator+(const IntV2 &o) const { return {p[0] + o.p[0], p[1] + o.p[1], p[2] + o.p[2]}; }
    IntV2 operator-(const IntV2 &o) const { return {p[0] - o.p[0], p[1] - o.p[1], p[2] - o.p[2]}; }
    IntV2 operator*(long k) const { return {k * p[0], k * p[1], k * p[2]}; }
    bool operator==(const IntV2 &o) const { return p == o.p; }
    bool is_zero() const { return p[0] == 0 && p[1] == 0 && p[2] == 0; }
    std::string str() const;
};

// Word in S, T and their inverses, written with the letters S, T, s, t
// (lowercase = inverse). The leftmost letter acts last.
struct GroupWord {
    std::string letters;

    static GroupWord S() { return {"S"}; }
    static GroupWord T() { return {"T"}; }
    // Matrix in SL2(Z) as {a, b, c, d}.
    std::array<long, 4> matrix() const;
};

// Left action of weight -2: (g p)(X) = (a - cX)^2 p((dX - b)/(a - cX)).
// S 1 = X^2, S X = -X, S X^2 = 1, T p(X) = p(X - 1).
IntV2 act(const std::array<long, 4> &g, const IntV2 &p);
IntV2 act(const GroupWord &w, const IntV2 &p);

// Invariant pairing (p, q) = p0 q2 - p1 q1 / 2 + p2 q0.
Rational pairing(const IntV2 &p, const IntV2 &q);

using IntMatrix = std::vector<std::vector<long>>;

struct SmithForm {
    IntMatrix D, U, V; // U A V = D, U and V unimodular
    std::vector<long> invariant_factors; // nonzero diagonal entries
};
SmithForm smith_normal_form(const IntMatrix &A);

// Boundary matrix [S - 1 | T - 1] on the basis {1, X, X^2}: 3 x 6.
IntMatrix boundary_matrix();

struct H0Result {
    std::vector<long> invariant_factors; // [1, 1, 2]
    long torsion_order;                  // 2
    IntV2 generator;                     // X
};
H0Result h0_coinvariants();

// Membership in the image of the boundary map (the lattice sum_g (g - 1) V2^Z).
bool in_boundary_lattice(const IntV2 &p);

struct H1Result {
    IntMatrix relation_S;   // 1 + S
    IntMatrix relation_ST;  // 1 + ST + (ST)^2
    // Level-L counts for the torsion module (1/L)Z^3 / Z^3: parabolic cocycles
    // (c(T) = 0) and coboundaries of T-invariant vectors.
    std::vector<std::array<long, 3>> levels; // {L, cocycles, coboundaries}
    long order;
};
// Order of H^1_par(PSL2(Z), V2 (x) Q/Z), computed level by level for L up to max_level.
H1Result h1_parabolic(long max_level = 12);

struct TorsionConstants {
    long NA, NB, N;
};
TorsionConstants torsion_constants();

} // namespace cmg::coh

#endif
