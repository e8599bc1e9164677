#include "cmg/hypercover/forms.hpp"

#include <algorithm>

namespace cmg::hc
{

int popcount3(int mask) { return (mask & 1) + ((mask >> 1) & 1) + ((mask >> 2) & 1); }

int wedge_sign(int m1, int m2)
{
    if (m1 & m2) return 0;
    int m = m1 | m2;
    if ((m & DS) && (m & DE)) return 0;
    int inv = 0;
    for (int i = 0; i < 3; ++i)
        if (m1 & (1 << i))
            for (int j = 0; j < i; ++j)
                if (m2 & (1 << j)) ++inv;
    return inv % 2 ? -1 : 1;
}

Form Form::function(const Series &f)
{
    Form r(0);
    r.add(0, f);
    return r;
}

Form Form::one_form(const Series &dz, const Series &de, const Series &ds)
{
    Form r(1);
    r.add(DZ, dz);
    r.add(DE, de);
    r.add(DS, ds);
    return r;
}

Form Form::base(int mask, const Coef &c)
{
    Form r(popcount3(mask));
    r.add(mask, Series::constant(c));
    return r;
}

Series Form::part(int mask) const
{
    auto it = parts_.find(mask);
    return it == parts_.end() ? Series() : it->second;
}

void Form::add(int mask, const Series &s)
{
    if (popcount3(mask) != deg_) throw DomainError("form part of wrong degree");
    auto it = parts_.find(mask);
    if (it == parts_.end()) {
        // keep exact zeros out, but remember truncated zeros: they carry a certificate
        if (s.is_zero_known() && s.is_exact()) return;
        parts_.emplace(mask, s);
    } else {
        it->second = it->second + s;
    }
}

Form Form::operator-() const
{
    Form r = *this;
    for (auto &[m, s] : r.parts_) s = -s;
    return r;
}

Form &Form::operator+=(const Form &o)
{
    if (o.empty()) return *this;
    if (empty() && deg_ != o.deg_) deg_ = o.deg_;
    if (deg_ != o.deg_) throw DomainError("adding forms of different degree");
    for (const auto &[m, s] : o.parts_) add(m, s);
    return *this;
}

Form Form::scaled(const Coef &c) const
{
    Form r = *this;
    for (auto &[m, s] : r.parts_) s = s * c;
    return r;
}

Form Form::times(const Series &f) const
{
    Form r = *this;
    for (auto &[m, s] : r.parts_) s = s * f;
    return r;
}

bool Form::is_zero_known() const
{
    return std::all_of(parts_.begin(), parts_.end(), [](const auto &p) { return p.second.is_zero_known(); });
}

int Form::trunc() const
{
    int t = Series::kExact;
    for (const auto &[m, s] : parts_) t = std::min(t, s.trunc());
    return t;
}

std::string Form::str() const
{
    static const char *names[] = {"1", "ds", "de", "ds^de", "dz", "ds^dz", "de^dz", "ds^de^dz"};
    std::string out;
    for (const auto &[m, s] : parts_) {
        if (!out.empty()) out += " + ";
        out += "(" + s.str() + ")" + (m ? std::string(" ") + names[m] : "");
    }
    return out.empty() ? "0" : out;
}

Form wedge(const Form &a, const Form &b)
{
    Form r(a.degree() + b.degree());
    for (const auto &[m1, s1] : a.parts())
        for (const auto &[m2, s2] : b.parts()) {
            int sg = wedge_sign(m1, m2);
            if (!sg) continue;
            Series p = s1 * s2;
            r.add(m1 | m2, sg > 0 ? p : -p);
        }
    return r;
}

Form d(const Form &f)
{
    if (f.degree() == 0) {
        Series g = f.part(0);
        return Form::one_form(g.derive(), ws::delta_e_coef(g), ws::delta_s_coef(g));
    }
    if (f.degree() == 1) {
        Series P = f.part(DZ), Q = f.part(DE), R = f.part(DS);
        Form r(2);
        r.add(DE | DZ, ws::delta_e_coef(P) - Q.derive());
        r.add(DS | DZ, ws::delta_s_coef(P) - R.derive());
        return r;
    }
    // 2-forms are top degree modulo G^2 on a relative curve
    return Form(f.degree() + 1);
}

Form pullback(const Form &f, const Series &phi, int cap)
{
    Form dphi = Form::one_form(phi.derive(), ws::delta_e_coef(phi), ws::delta_s_coef(phi));
    Form r(f.degree());
    for (const auto &[m, s] : f.parts()) {
        Series g = s.compose(phi, cap);
        if (m & DZ) {
            Form rest(popcount3(m & ~DZ));
            rest.add(m & ~DZ, g);
            // dz is last in the basis order, so the monomial is rest ^ dz
            r += wedge(rest, dphi);
        } else {
            r.add(m, g);
        }
    }
    return r;
}

} // namespace cmg::hc
