#ifndef CMG_HYPERCOVER_HYPERFORM_HPP
#define CMG_HYPERCOVER_HYPERFORM_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "cmg/hypercover/forms.hpp"

namespace cmg::hc
{

// Cells of the cover {U0, U1, U_int} of one curve; U_int has dimension 1.
enum class Cell { C0 = 0, C1 = 1, Int = 2 };
inline int cell_dim(Cell c) { return c == Cell::Int ? 1 : 0; }
const char *cell_name(Cell c);
inline constexpr std::array<Cell, 3> kCells{Cell::C0, Cell::C1, Cell::Int};

// p-hyperform on one curve: p-forms on U0 and U1, a (p-1)-form on U_int.
struct Hyperform1 {
    int degree = 1;
    Form c0{1}, c1{1}, cint{0};

    const Form &at(Cell c) const { return c == Cell::C0 ? c0 : (c == Cell::C1 ? c1 : cint); }
};

// omega = (dz + z d_e + v0 d_s, dz + z d_e + O(z^N), 0) and
// eta = (x dz + x z d_e + (x v0 + y) d_s, -(a/3) z d_s + O(z^N), v0 + O(z^N)).
std::pair<Hyperform1, Hyperform1> make_omega_eta(int N = ws::kDefaultOrder);
// The constant function 1 as a 0-hyperform.
Hyperform1 hyper_one();

// d(f0, f1, 0) = (df0, df1, f1 - f0); d(t0, t1, ti) = (dt0, dt1, dti - t1 + t0).
Hyperform1 hd(const Hyperform1 &h);
// u ^ h for a form u on the base (d_e, d_s only), componentwise.
Hyperform1 base_wedge(const Form &u, const Hyperform1 &h);
Hyperform1 operator+(const Hyperform1 &a, const Hyperform1 &b);
Hyperform1 operator-(const Hyperform1 &a, const Hyperform1 &b);
Hyperform1 scaled(const Hyperform1 &h, const Coef &c);

struct GMEquation {
    std::string name;
    std::array<Form, 3> residual; // on U0, U1, U_int
    bool ok = false;               // residual vanishes on all certified coefficients
    int certified_order = 0;       // lowest truncation among the residual parts
    std::string detail;
};
struct GMReport {
    bool ok = true;
    std::vector<GMEquation> equations;
};
// d omega = -d_e ^ omega + d_s ^ eta and d eta = d_e ^ eta + (a/3) d_s ^ omega
// modulo G^2 and the declared O(z^N) tails.
GMReport gauss_manin_check(int N = ws::kDefaultOrder);

// One summand c * pr1^*(left) ^ pr2^*(right) of a component on E x E. The left
// form is written in z1, the right one in z2.
struct ProductTerm {
    Coef coef;
    Form left, right;
};

// Hyperform on E x E stored lazily as sums of exterior products per cell pair.
class Hyperform2
{
public:
    explicit Hyperform2(int degree = 2) : deg_(degree) {}
    int degree() const { return deg_; }
    const std::vector<ProductTerm> &terms(Cell a, Cell b) const { return comp_[idx(a)][idx(b)]; }
    void add_term(Cell a, Cell b, ProductTerm t);

    Hyperform2 &operator+=(const Hyperform2 &o);
    friend Hyperform2 operator+(Hyperform2 a, const Hyperform2 &b) { return a += b; }
    Hyperform2 scaled(const Coef &c) const;

    // Restriction of the (a,b) component to the curve z1 = z, z2 = phi(z).
    Form restrict(Cell a, Cell b, const Series &phi, int cap) const;

private:
    static int idx(Cell c) { return static_cast<int>(c); }
    int deg_;
    std::array<std::array<std::vector<ProductTerm>, 3>, 3> comp_;
};

// (f x g)_{a x a'} = (-1)^{dim a (deg g - dim a')} f_a x g_{a'}
Hyperform2 hproduct(const Hyperform1 &f, const Hyperform1 &g);
int product_sign(Cell a, Cell ap, int deg_g);
// u ^ h componentwise for a base form u.
Hyperform2 base_wedge(const Form &u, const Hyperform2 &h);

// Power of 2 pi i times an exact value.
struct TwoPiI {
    int power = 0;
    Coef value;
    std::string str() const;
};

// The cells whose residues make up the trace along a flag through infinity x infinity.
struct FlagCell {
    Cell a, b;
    int sign = 1;
};
std::vector<FlagCell> default_flag_cells();

// Tr_Delta h: sum over flag cells of the residue of the dz-part of the
// component restricted to the diagonal z1 = z2 = z.
Coef trace_diagonal(const Hyperform2 &h, const std::vector<FlagCell> &cells = default_flag_cells(),
                    int cap = ws::kDefaultOrder);
// <f, g> = 2 pi i Tr_Delta (f x g)
TwoPiI poincare_pairing(const Hyperform1 &f, const Hyperform1 &g);

} // namespace cmg::hc

#endif
