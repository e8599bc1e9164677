#include "cmg/hypercover/branch.hpp"

#include <map>
#include <mutex>

namespace cmg::hc
{

using ws::a;
using ws::b;
using ws::Basic;
using ws::ci;
using ws::cq;
using ws::expand_basic;

namespace
{

// Extra working order: the case-2 function loses six orders to cancellation
// and the division by it loses six more.
constexpr int kSlack = 14;

Series even_part_in_w(const Series &s)
{
    int end = s.is_exact() ? s.stored_end() : s.trunc();
    if (s.ord() % 2 != 0) throw DomainError("expected an even series");
    std::vector<Coef> c;
    for (int k = s.ord(); k < end; k += 2) c.push_back(s.coeff(k));
    int tw = s.is_exact() ? Series::kExact : (s.trunc() + 1) / 2;
    return Series(s.ord() / 2, c, tw);
}

Form total_d(const Series &f) { return Form::one_form(f.derive(), ws::delta_e_coef(f), ws::delta_s_coef(f)); }

} // namespace

Series branch_z2_squared(int N)
{
    int M = N + kSlack;
    Series x = expand_basic(Basic::X, M).s;
    Series s = x.inv(M);              // 1/x = z^2 + ..., even
    Series S = even_part_in_w(s);     // as a series in w = z^2
    Series Sinv = S.revert((M + 1) / 2);
    return Sinv.compose(-s, M);
}

BranchData make_branch(BranchId id, int N)
{
    int M = N + kSlack;
    Series sq = branch_z2_squared(N);
    Series z2 = sq.sqrt(M);
    Coef lead = z2.lead();
    bool plus_i = lead == ci();
    if ((id == BranchId::Case1) != plus_i) z2 = -z2;

    Series y = expand_basic(Basic::Y, M).s;
    Series y2 = y.compose(z2, M);
    Series f = y - y2 * ci();

    Form dy = total_d(y);
    Form dy2 = pullback(dy, z2, M);
    Form df = dy - dy2.scaled(ci());
    Form dlogf = df.times(f.inv(M));

    BranchData br{id, z2.truncated(N), f.truncated(N), Form(1)};
    for (const auto &[m, s] : dlogf.parts()) br.dlogf.add(m, s.truncated(N));
    return br;
}

std::array<BranchData, 2> branches_W(int N)
{
    static std::mutex mu;
    static std::map<int, std::array<BranchData, 2>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    std::array<BranchData, 2> r{make_branch(BranchId::Case1, N), make_branch(BranchId::Case2, N)};
    cache.emplace(N, r);
    return r;
}

Form theta_on_branch(const Hyperform2 &theta, const BranchData &br, int cap)
{
    Form r = theta.restrict(Cell::C0, Cell::Int, br.z2, cap);
    r += theta.restrict(Cell::Int, Cell::C1, br.z2, cap);
    return r;
}

Form psi_residue(const Hyperform2 &theta, const std::vector<BranchData> &W)
{
    Form r(theta.degree() - 1);
    for (const auto &br : W) {
        int cap = br.z2.trunc();
        Form w = wedge(br.dlogf, theta_on_branch(theta, br, cap));
        for (const auto &[m, s] : w.parts()) {
            if (!(m & DZ)) continue;
            Coef res = s.residue();
            if (!res.is_zero()) r.add(m & ~DZ, Series::constant(res));
        }
    }
    // drop parts that cancelled between branches
    Form out(r.degree());
    for (const auto &[m, s] : r.parts())
        if (!s.coeff(0).is_zero()) out.add(m, s);
    return out;
}

PsiPair psi1(const Hyperform2 &theta, const std::vector<BranchData> &W)
{
    if (theta.degree() != 2) throw DomainError("psi1 expects a degree-2 hyperform on E x E");
    Form f = psi_residue(theta, W);
    return PsiPair{f.part(DE).coeff(0), f.part(DS).coeff(0)};
}

Coef psi0(const Hyperform2 &theta, const std::vector<BranchData> &W)
{
    if (theta.degree() != 1) throw DomainError("psi0 expects a degree-1 hyperform on E x E");
    return psi_residue(theta, W).part(0).coeff(0);
}

std::array<Hyperform2, 3> theta_basis(int N)
{
    auto [om, et] = make_omega_eta(N);
    return {hproduct(om, om), hproduct(et, om) + hproduct(om, et), hproduct(et, et)};
}

DModElem DModElem::theta(int k)
{
    DModElem e;
    e.th[k] = cq(1);
    return e;
}

DModElem DModElem::one()
{
    DModElem e;
    e.scalar = cq(1);
    return e;
}

DModElem &DModElem::operator+=(const DModElem &o)
{
    scalar += o.scalar;
    for (int k = 0; k < 3; ++k) th[k] += o.th[k];
    return *this;
}

DModElem DModElem::scaled(const Coef &c) const
{
    DModElem r;
    r.scalar = scalar * c;
    for (int k = 0; k < 3; ++k) r.th[k] = th[k] * c;
    return r;
}

bool DModElem::operator==(const DModElem &o) const
{
    return scalar == o.scalar && th[0] == o.th[0] && th[1] == o.th[1] && th[2] == o.th[2];
}

std::string DModElem::str() const
{
    std::string out;
    auto put = [&](const Coef &c, const std::string &basis) {
        if (c.is_zero()) return;
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")" + basis;
    };
    put(scalar, "");
    for (int k = 0; k < 3; ++k) put(th[k], "*theta" + std::to_string(k));
    return out.empty() ? "0" : out;
}

DModTable derive_dmod_table(int N)
{
    // connection on (omega, eta): nabla_e = diag(-1, 1), nabla_s omega = eta, nabla_s eta = (a/3) omega.
    // Leibniz on the products theta^0 = w.w, theta^1 = e.w + w.e, theta^2 = e.e.
    Coef a3 = a() * cq(1, 3);
    DModTable t;
    t.de[0] = DModElem::theta(0).scaled(cq(-2));
    t.de[1] = DModElem{};
    t.de[2] = DModElem::theta(2).scaled(cq(2));
    t.ds[0] = DModElem::theta(1);
    t.ds[1] = DModElem::theta(2).scaled(cq(2)) + DModElem::theta(0).scaled(cq(2) * a3);
    t.ds[2] = DModElem::theta(1).scaled(a3);

    auto th = theta_basis(N);
    auto br = branches_W(N);
    std::vector<BranchData> W(br.begin(), br.end());
    for (int k = 0; k < 3; ++k) {
        PsiPair p = psi1(th[k], W);
        t.de[k].scalar -= p.de;
        t.ds[k].scalar -= p.ds;
    }
    return t;
}

const DModTable &dmod_table()
{
    static const DModTable t = [] {
        Coef i = ci();
        Coef binv = b().pow(-1);
        DModTable r;
        r.de[0] = DModElem::theta(0).scaled(cq(-2));
        r.de[1] = DModElem{};
        r.de[2] = DModElem::theta(2).scaled(cq(2));
        r.ds[0] = DModElem::theta(1);
        r.ds[1] = DModElem::theta(2).scaled(cq(2)) + DModElem::theta(0).scaled(a() * cq(2, 3)) +
                  DModElem::one().scaled(i * cq(8, 3) * a() * a() * binv);
        r.ds[2] = DModElem::theta(1).scaled(a() * cq(1, 3)) + DModElem::one().scaled(i * cq(-4) * a());
        return r;
    }();
    return t;
}

DModElem dmod_apply(DPrime d, const DModElem &x, const DModTable &t)
{
    auto der = [d](const Coef &c) { return d == DPrime::De ? ws::delta_e(c) : ws::delta_s(c); };
    const auto &row = d == DPrime::De ? t.de : t.ds;
    DModElem r;
    r.scalar = der(x.scalar);
    for (int k = 0; k < 3; ++k) {
        r.th[k] += der(x.th[k]);
        r += row[k].scaled(x.th[k]);
    }
    return r;
}

DOperator annihilator_theta0(const DModTable &t)
{
    DModElem v0 = DModElem::theta(0);
    DModElem v1 = dmod_apply(DPrime::Ds, v0, t);
    DModElem v2 = dmod_apply(DPrime::Ds, v1, t);
    DModElem v3 = dmod_apply(DPrime::Ds, v2, t);
    // v_k has theta-components in a triangular pattern: v_k[k] is the leading unit
    auto unit = [](const Coef &c) {
        auto r = try_inverse(c);
        if (!r) throw NonInvertibleLead("non-unit pivot in the annihilator solve");
        return *r;
    };
    if (!v0.th[1].is_zero() || !v0.th[2].is_zero() || !v1.th[2].is_zero())
        throw DomainError("iterates of theta^0 are not triangular");
    DOperator op;
    op.c[2] = -v3.th[2] * unit(v2.th[2]);
    op.c[1] = -(v3.th[1] + op.c[2] * v2.th[1]) * unit(v1.th[1]);
    op.c[0] = -(v3.th[0] + op.c[2] * v2.th[0] + op.c[1] * v1.th[0]) * unit(v0.th[0]);
    return op;
}

std::string QMFrac::str() const { return "(" + num.str() + ")/(" + den.str() + ")"; }

EvalB eval_B(const DModTable &t)
{
    DOperator op = annihilator_theta0(t);
    DModElem v0 = DModElem::theta(0);
    DModElem v1 = dmod_apply(DPrime::Ds, v0, t);
    DModElem v2 = dmod_apply(DPrime::Ds, v1, t);
    DModElem v3 = dmod_apply(DPrime::Ds, v2, t);
    DModElem B = v3 + v2.scaled(op.c[2]) + v1.scaled(op.c[1]) + v0.scaled(op.c[0]);
    for (int k = 0; k < 3; ++k)
        if (!B.th[k].is_zero()) throw DomainError("annihilator leaves a theta component");

    EvalB r;
    r.scalar = B.scalar;
    r.pi_coeff = QMPoly(Gaussian(Rational(0), Rational(2))) * ws::mu(B.scalar);

    QMPoly E4 = ws::E4q(), E6 = ws::E6q();
    QMPoly one(Gaussian(Rational(1)));
    QMPoly disc = E4.pow(3) - E6 * E6;
    r.closed_form = QMFrac{-(E4 * disc), E6 * E6};
    // j - 1728 = p / q, so -1728 E4 / (j - 1728) = -1728 E4 q / p
    QMPoly p = QMPoly(Gaussian(Rational(1728))) * E6 * E6;
    QMPoly q = disc;
    r.j_form = QMFrac{QMPoly(Gaussian(Rational(-1728))) * E4 * q, p};
    QMFrac computed{r.pi_coeff, one};
    r.closed_form_ok = computed.equals(r.closed_form);
    r.j_form_ok = computed.equals(r.j_form);
    return r;
}

} // namespace cmg::hc
