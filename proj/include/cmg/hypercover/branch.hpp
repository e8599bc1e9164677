#ifndef CMG_HYPERCOVER_BRANCH_HPP
#define CMG_HYPERCOVER_BRANCH_HPP

#include <array>
#include <string>
#include <vector>

#include "cmg/hypercover/hyperform.hpp"

namespace cmg::hc
{

// The two branches of the curve W: x1 + x2 = 0 through infinity x infinity,
// parametrised by z1 = z, z2 = z2(z). Case 1 has z2 = +i z + ..., case 2 is
// its negative. f = y1 - i y2 restricted to the branch.
enum class BranchId { Case1, Case2 };

struct BranchData {
    BranchId id;
    Series z2;
    Series f;
    Form dlogf; // df/f as a 1-form in dz, d_e, d_s
};

// Branch data known below z^N.
BranchData make_branch(BranchId id, int N = ws::kDefaultOrder);
std::array<BranchData, 2> branches_W(int N = ws::kDefaultOrder);

// The unsymmetrised square z2^2 as a series in z (shared by both branches).
Series branch_z2_squared(int N = ws::kDefaultOrder);

// Restriction of theta_{0,int} + theta_{int,1} to the branch.
Form theta_on_branch(const Hyperform2 &theta, const BranchData &br, int cap);

// Residues along W of df/f ^ theta_s for theta of any degree; the result is a
// form on the base (monomials without dz).
Form psi_residue(const Hyperform2 &theta, const std::vector<BranchData> &W);

struct PsiPair {
    Coef de, ds;
};
// Sum over branches of res( df/f ^ theta_s ) on d_e^dz and d_s^dz.
PsiPair psi1(const Hyperform2 &theta, const std::vector<BranchData> &W);
// Same residue engine one degree lower: theta of degree 1 on E x E.
Coef psi0(const Hyperform2 &theta, const std::vector<BranchData> &W);

// theta^0 = omega x omega, theta^1 = eta x omega + omega x eta, theta^2 = eta x eta.
std::array<Hyperform2, 3> theta_basis(int N = ws::kDefaultOrder);

// Element c + sum_k c_k theta^k of the extension module, coefficients in Q(i)[a, b, 1/b].
struct DModElem {
    Coef scalar;
    std::array<Coef, 3> th;

    static DModElem theta(int k);
    static DModElem one();
    DModElem &operator+=(const DModElem &o);
    friend DModElem operator+(DModElem x, const DModElem &y) { return x += y; }
    DModElem scaled(const Coef &c) const;
    bool operator==(const DModElem &o) const;
    std::string str() const;
};

enum class DPrime { De, Ds };

// Action of delta' on the basis theta^k (delta' of the scalar 1 is 0), as
// computed from Gauss-Manin and Psi1. The table is fixed once at startup.
struct DModTable {
    std::array<DModElem, 3> de, ds;
};
// Derived from the connection and Psi1 on the branch data.
DModTable derive_dmod_table(int N = ws::kDefaultOrder);
// The literal table.
const DModTable &dmod_table();

DModElem dmod_apply(DPrime d, const DModElem &x, const DModTable &t = dmod_table());

// Monic operator delta_s^3 + c2 delta_s^2 + c1 delta_s + c0 killing theta^0
// modulo the scalar part, found by a triangular solve.
struct DOperator {
    std::array<Coef, 3> c; // c0, c1, c2
};
DOperator annihilator_theta0(const DModTable &t = dmod_table());

// Quotient of two quasi-modular polynomials in E2, E4, 1/E6.
struct QMFrac {
    QMPoly num, den;
    bool equals(const QMFrac &o) const { return num * o.den == o.num * den; }
    std::string str() const;
};

struct EvalB {
    Coef scalar;         // scalar component of B(theta^0)
    QMPoly pi_coeff;     // 2 i mu(scalar): the transported value is pi * pi_coeff
    QMFrac closed_form;  // -E4 (E4^3 - E6^2) / E6^2
    QMFrac j_form;       // -1728 E4 / (j - 1728) with j - 1728 = 1728 E6^2 / (E4^3 - E6^2)
    bool closed_form_ok = false;
    bool j_form_ok = false;
    TwoPiI multiplier{-3, ws::cq(1)}; // times [omega]^4
};
EvalB eval_B(const DModTable &t = dmod_table());

} // namespace cmg::hc

#endif
