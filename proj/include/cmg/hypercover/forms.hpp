#ifndef CMG_HYPERCOVER_FORMS_HPP
#define CMG_HYPERCOVER_FORMS_HPP

#include <map>
#include <string>

#include "cmg/weierstrass/series.hpp"

namespace cmg::hc
{

using ws::Coef;
using ws::Series;

// Exterior algebra on d_s, d_e, dz (in that basis order), modulo anything that
// contains d_e ^ d_s. A monomial is a bit mask; its canonical orientation lists
// the basis elements in increasing order.
enum Basis : int { DS = 1, DE = 2, DZ = 4 };

int popcount3(int mask);
// Sign of m1 ^ m2 relative to the canonical orientation of m1 | m2, or 0 if the
// product vanishes (repeated factor or a d_e ^ d_s term).
int wedge_sign(int m1, int m2);

// Differential form whose coefficients are Laurent series in the local
// parameter z of one curve (or of a curve on E x E after restriction).
class Form
{
public:
    explicit Form(int degree = 0) : deg_(degree) {}
    static Form function(const Series &f);
    static Form one_form(const Series &dz, const Series &de, const Series &ds);
    static Form base(int mask, const Coef &c = ws::cq(1));

    int degree() const { return deg_; }
    bool empty() const { return parts_.empty(); }
    const std::map<int, Series> &parts() const { return parts_; }
    // Coefficient of a monomial; a missing part is the exact zero series.
    Series part(int mask) const;
    void add(int mask, const Series &s);

    Form operator-() const;
    Form &operator+=(const Form &o);
    friend Form operator+(Form a, const Form &b) { return a += b; }
    friend Form operator-(Form a, const Form &b) { return a += -b; }
    Form scaled(const Coef &c) const;
    Form times(const Series &s) const;

    // Every stored coefficient vanishes on its validity range.
    bool is_zero_known() const;
    // Lowest truncation among the parts (kExact if all exact).
    int trunc() const;
    std::string str() const;

private:
    int deg_;
    std::map<int, Series> parts_;
};

Form wedge(const Form &a, const Form &b);

// Exterior derivative of a 0- or 1-form on the total space, modulo G^2.
Form d(const Form &f);

// Pull back a form written in the coordinate z2 of the second factor along
// z2 = phi(z): coefficients are composed and dz2 -> phi' dz + delta_e(phi) d_e + delta_s(phi) d_s.
Form pullback(const Form &f, const Series &phi, int cap);

} // namespace cmg::hc

#endif
