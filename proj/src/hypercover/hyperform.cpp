#include "cmg/hypercover/hyperform.hpp"

#include <algorithm>

namespace cmg::hc
{

using ws::Basic;
using ws::cq;
using ws::expand_basic;

const char *cell_name(Cell c)
{
    switch (c) {
    case Cell::C0: return "0";
    case Cell::C1: return "1";
    case Cell::Int: return "int";
    }
    return "?";
}

std::pair<Hyperform1, Hyperform1> make_omega_eta(int N)
{
    if (N < 16) throw DomainError("make_omega_eta needs N >= 16");
    Series x = expand_basic(Basic::X, N + 2).s;
    Series y = expand_basic(Basic::Y, N + 2).s;
    Series v0 = expand_basic(Basic::V0, N + 2).s;
    Series z = Series::z();
    Series tail = Series::zero(N);

    Hyperform1 om;
    om.degree = 1;
    om.c0 = Form::one_form(Series::constant(cq(1)), z, v0);
    om.c1 = Form::one_form(Series::constant(cq(1)), Series::z(N), tail);
    om.cint = Form(0);

    Hyperform1 et;
    et.degree = 1;
    et.c0 = Form::one_form(x, x * z, x * v0 + y);
    et.c1 = Form::one_form(tail, tail, Series::monomial(-ws::a() * cq(1, 3), 1, N));
    et.cint = Form::function(v0.truncated(N));
    return {om, et};
}

Hyperform1 hyper_one()
{
    Hyperform1 h;
    h.degree = 0;
    h.c0 = Form::function(Series::constant(cq(1)));
    h.c1 = Form::function(Series::constant(cq(1)));
    h.cint = Form(-1);
    return h;
}

Hyperform1 hd(const Hyperform1 &h)
{
    Hyperform1 r;
    r.degree = h.degree + 1;
    r.c0 = d(h.c0);
    r.c1 = d(h.c1);
    if (h.degree == 0) {
        r.cint = h.c1 - h.c0;
    } else {
        r.cint = d(h.cint) - h.c1 + h.c0;
    }
    return r;
}

Hyperform1 base_wedge(const Form &u, const Hyperform1 &h)
{
    Hyperform1 r;
    r.degree = h.degree + u.degree();
    r.c0 = wedge(u, h.c0);
    r.c1 = wedge(u, h.c1);
    r.cint = h.cint.degree() < 0 ? Form(r.degree - 1) : wedge(u, h.cint);
    return r;
}

Hyperform1 operator+(const Hyperform1 &a, const Hyperform1 &b)
{
    if (a.degree != b.degree) throw DomainError("adding hyperforms of different degree");
    Hyperform1 r = a;
    r.c0 += b.c0;
    r.c1 += b.c1;
    r.cint += b.cint;
    return r;
}

Hyperform1 scaled(const Hyperform1 &h, const Coef &c)
{
    Hyperform1 r = h;
    r.c0 = h.c0.scaled(c);
    r.c1 = h.c1.scaled(c);
    r.cint = h.cint.scaled(c);
    return r;
}

Hyperform1 operator-(const Hyperform1 &a, const Hyperform1 &b) { return a + scaled(b, cq(-1)); }

namespace
{

GMEquation close_equation(std::string name, const Hyperform1 &res)
{
    GMEquation e;
    e.name = std::move(name);
    e.residual = {res.c0, res.c1, res.cint};
    e.ok = true;
    e.certified_order = Series::kExact;
    for (Cell c : kCells) {
        const Form &f = res.at(c);
        e.certified_order = std::min(e.certified_order, f.trunc());
        for (const auto &[m, s] : f.parts()) {
            if (s.is_zero_known()) continue;
            e.ok = false;
            if (e.detail.empty())
                e.detail = std::string("cell ") + cell_name(c) + ": first surviving coefficient z^" +
                           std::to_string(s.ord()) + " = " + to_string(s.lead());
        }
    }
    return e;
}

} // namespace

GMReport gauss_manin_check(int N)
{
    auto [om, et] = make_omega_eta(N);
    Form de = Form::base(DE), ds = Form::base(DS);
    GMReport rep;
    // nabla omega = -d_e (x) omega + d_s (x) eta, i.e. d omega + d_e ^ omega - d_s ^ eta = 0
    Hyperform1 r1 = hd(om) + base_wedge(de, om) - base_wedge(ds, et);
    // nabla eta = d_e (x) eta + (a/3) d_s (x) omega
    Hyperform1 r2 = hd(et) - base_wedge(de, et) - base_wedge(ds.scaled(ws::a() * cq(1, 3)), om);
    rep.equations.push_back(close_equation("omega", r1));
    rep.equations.push_back(close_equation("eta", r2));
    for (const auto &e : rep.equations) rep.ok = rep.ok && e.ok && e.certified_order >= N - 2;
    return rep;
}

void Hyperform2::add_term(Cell a, Cell b, ProductTerm t)
{
    if (t.left.empty() || t.right.empty() || detail::coeff_is_zero(t.coef)) return;
    comp_[idx(a)][idx(b)].push_back(std::move(t));
}

Hyperform2 &Hyperform2::operator+=(const Hyperform2 &o)
{
    if (deg_ != o.deg_) throw DomainError("adding hyperforms of different degree");
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (const auto &t : o.comp_[i][j]) comp_[i][j].push_back(t);
    return *this;
}

Hyperform2 Hyperform2::scaled(const Coef &c) const
{
    Hyperform2 r = *this;
    for (auto &row : r.comp_)
        for (auto &v : row)
            for (auto &t : v) t.coef = t.coef * c;
    return r;
}

Form Hyperform2::restrict(Cell a, Cell b, const Series &phi, int cap) const
{
    int fdeg = deg_ - cell_dim(a) - cell_dim(b);
    Form r(fdeg);
    for (const auto &t : terms(a, b)) r += wedge(t.left, pullback(t.right, phi, cap)).scaled(t.coef);
    return r;
}

int product_sign(Cell a, Cell ap, int deg_g)
{
    int e = cell_dim(a) * (deg_g - cell_dim(ap));
    return e % 2 ? -1 : 1;
}

Hyperform2 hproduct(const Hyperform1 &f, const Hyperform1 &g)
{
    Hyperform2 h(f.degree + g.degree);
    for (Cell a : kCells)
        for (Cell ap : kCells) {
            const Form &fa = f.at(a);
            const Form &ga = g.at(ap);
            if (fa.degree() < 0 || ga.degree() < 0) continue;
            h.add_term(a, ap, ProductTerm{cq(product_sign(a, ap, g.degree)), fa, ga});
        }
    return h;
}

Hyperform2 base_wedge(const Form &u, const Hyperform2 &h)
{
    Hyperform2 r(h.degree() + u.degree());
    for (Cell a : kCells)
        for (Cell b : kCells)
            for (const auto &t : h.terms(a, b)) r.add_term(a, b, ProductTerm{t.coef, wedge(u, t.left), t.right});
    return r;
}

std::string TwoPiI::str() const
{
    std::string v = value.str();
    if (power == 0) return v;
    return "(2*pi*i)^" + std::to_string(power) + " * (" + v + ")";
}

std::vector<FlagCell> default_flag_cells() { return {{Cell::Int, Cell::C1, 1}, {Cell::C0, Cell::Int, 1}}; }

Coef trace_diagonal(const Hyperform2 &h, const std::vector<FlagCell> &cells, int cap)
{
    Coef r;
    Series diag = Series::z();
    for (const auto &fc : cells) {
        Form f = h.restrict(fc.a, fc.b, diag, cap);
        Coef res = f.part(DZ).residue();
        r += fc.sign > 0 ? res : -res;
    }
    return r;
}

TwoPiI poincare_pairing(const Hyperform1 &f, const Hyperform1 &g)
{
    return TwoPiI{1, trace_diagonal(hproduct(f, g))};
}

} // namespace cmg::hc
