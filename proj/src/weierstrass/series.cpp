#include "cmg/weierstrass/series.hpp"

#include <map>
#include <mutex>

namespace cmg::ws
{

Coef a() { return Coef::var(0); }
Coef b() { return Coef::var(1); }
Coef E2() { return Coef::var(2); }
Coef cq(long num, long den) { return Coef(Gaussian(Rational(num, den))); }
Coef ci() { return Coef(Gaussian::root()); }

Coef delta_e(const Coef &c)
{
    Coef r;
    for (const auto &[e, v] : c.terms()) r += Coef::monomial(e, v * Gaussian(Coef::monomial_weight(e)));
    return r;
}

Coef delta_s(const Coef &c)
{
    static const std::array<Coef, 3> images{cq(6) * b(), cq(-4, 3) * a() * a(), cq(4) * a() - cq(1, 12) * E2() * E2()};
    return c.derive(images);
}

Series delta_e_coef(const Series &s) { return s.map([](const Coef &c) { return delta_e(c); }); }
Series delta_s_coef(const Series &s) { return s.map([](const Coef &c) { return delta_s(c); }); }

bool weight_consistent(const Series &s, int w)
{
    int end = s.is_exact() ? s.stored_end() : s.trunc();
    for (int k = s.ord(); k < end; ++k)
        if (!s.coeff(k).is_homogeneous_of(w + k)) return false;
    return true;
}

bool parity_consistent(const Series &s, Parity p)
{
    if (p == Parity::Mixed) return true;
    int end = s.is_exact() ? s.stored_end() : s.trunc();
    for (int k = s.ord(); k < end; ++k) {
        bool odd = (k % 2 != 0);
        if (odd != (p == Parity::Odd) && !s.coeff(k).is_zero()) return false;
    }
    return true;
}

std::string basic_name(Basic b)
{
    switch (b) {
    case Basic::X: return "x";
    case Basic::Y: return "y";
    case Basic::U: return "u";
    case Basic::T: return "t";
    case Basic::ZOfT: return "z_of_t";
    case Basic::V0: return "v0";
    case Basic::V: return "v";
    case Basic::XOfT: return "x_of_t";
    case Basic::YOfT: return "y_of_t";
    case Basic::UOfT: return "u_of_t";
    case Basic::OmegaOfT: return "omega_of_t";
    }
    return "?";
}

namespace
{

struct Expansions {
    Series w_t, x_t, y_t, omega_t, z_t, t_z, x_z, y_z, u_z, v0, v;
};

// All basic expansions at working order M (the local parameter t = -x/y,
// w = -1/y satisfies w = t^3 + a t w^2 + b w^3).
Expansions compute(int M)
{
    Expansions E;
    Series t = Series::z();
    Series t3 = Series::monomial(cq(1), 3);
    Series w = t3.truncated(M);
    for (int it = 0; it < M + 2; ++it) {
        Series wn = (t3 + t * w * w * a() + w * w * w * b()).truncated(M);
        bool fixed = wn.agrees_with(w) && wn.trunc() == w.trunc();
        w = wn;
        if (fixed) break;
    }
    E.w_t = w;
    E.x_t = t * w.inv(M);
    E.y_t = -(E.x_t * Series::monomial(cq(1), -1));
    E.omega_t = E.x_t.derive() * (E.y_t * cq(2)).inv(M);
    E.z_t = E.omega_t.integrate();
    E.t_z = E.z_t.revert(M);
    E.x_z = E.x_t.compose(E.t_z, M);
    E.y_z = E.x_z.derive() * cq(1, 2);
    E.u_z = w.compose(E.t_z, M);
    E.v0 = -E.x_z.integrate();
    E.v = E.v0 + Series::monomial(cq(1, 12) * E2(), 1);
    return E;
}

const Series &pick(const Expansions &E, Basic n)
{
    switch (n) {
    case Basic::X: return E.x_z;
    case Basic::Y: return E.y_z;
    case Basic::U: return E.u_z;
    case Basic::T: return E.t_z;
    case Basic::ZOfT: return E.z_t;
    case Basic::V0: return E.v0;
    case Basic::V: return E.v;
    case Basic::XOfT: return E.x_t;
    case Basic::YOfT: return E.y_t;
    case Basic::UOfT: return E.w_t;
    case Basic::OmegaOfT: return E.omega_t;
    }
    return E.x_z;
}

int weight_of(Basic n)
{
    switch (n) {
    case Basic::X:
    case Basic::XOfT: return 2;
    case Basic::Y:
    case Basic::YOfT: return 3;
    case Basic::U:
    case Basic::UOfT: return -3;
    case Basic::T:
    case Basic::ZOfT: return -1;
    case Basic::V0:
    case Basic::V: return 1;
    case Basic::OmegaOfT: return 0;
    }
    return 0;
}

Parity parity_of(Basic n)
{
    switch (n) {
    case Basic::X:
    case Basic::XOfT:
    case Basic::OmegaOfT: return Parity::Even;
    default: return Parity::Odd;
    }
}

std::mutex cache_mutex;
std::map<int, Expansions> cache;

} // namespace

WSeries expand_basic(Basic name, int N)
{
    std::lock_guard<std::mutex> lock(cache_mutex);
    // the whole chain loses at most six orders, so N + 6 always suffices
    int M = N + 6;
    auto it = cache.lower_bound(M);
    if (it == cache.end()) it = cache.emplace(M, compute(M)).first;
    Series s = pick(it->second, name);
    if (s.trunc() < N) throw TruncationExhausted("internal expansion order too small for " + basic_name(name));
    return WSeries{s.truncated(N), weight_of(name), parity_of(name)};
}

WSeries derive(DerivOp op, const WSeries &s)
{
    if (!s.weight) throw UnknownWeight("derivation applied to a series without weight tag");
    int w = *s.weight;
    switch (op) {
    case DerivOp::DDz: {
        Parity p = s.parity == Parity::Mixed ? Parity::Mixed : (s.parity == Parity::Odd ? Parity::Even : Parity::Odd);
        return WSeries{s.s.derive(), w + 1, p};
    }
    case DerivOp::DeltaEStar: {
        Series r = delta_e_coef(s.s) - Series::z() * s.s.derive();
        return WSeries{r, w, s.parity};
    }
    case DerivOp::DeltaSStar: {
        int need = s.s.is_exact() ? std::max(kDefaultOrder, s.s.stored_end() - s.s.ord() + 2)
                                  : s.s.trunc() - std::min(0, s.s.ord()) + 2;
        Series v0 = expand_basic(Basic::V0, std::max(need, 4)).s;
        Series r = delta_s_coef(s.s) - v0 * s.s.derive();
        return WSeries{r, w + 2, s.parity};
    }
    }
    return s;
}

RelForm total_differential(const Series &f) { return RelForm{f.derive(), delta_e_coef(f), delta_s_coef(f)}; }

RelForm total_differential(Fn name, int N)
{
    return total_differential(expand_basic(name == Fn::X ? Basic::X : Basic::Y, N).s);
}

QMPoly E2q() { return QMPoly::var(0); }
QMPoly E4q() { return QMPoly::var(1); }
QMPoly E6q() { return QMPoly::var(2); }

QMPoly mu(const Coef &p)
{
    std::array<QMPoly, 3> img{QMPoly(Gaussian(Rational(-1, 48))) * E4q(), QMPoly(Gaussian(Rational(1, 864))) * E6q(), E2q()};
    std::array<std::optional<QMPoly>, 3> inv{std::nullopt, QMPoly(Gaussian(Rational(864))) * QMPoly::var(2, -1),
                                             std::nullopt};
    return p.substitute<QMPoly>(img, inv, [](const Gaussian &g) { return QMPoly(g); });
}

QMPoly qm_delta_s(const QMPoly &p)
{
    QMPoly m12(Gaussian(Rational(-1, 12)));
    std::array<QMPoly, 3> images{m12 * (E2q() * E2q() + E4q()), QMPoly(Gaussian(Rational(-1, 3))) * E6q(),
                                 QMPoly(Gaussian(Rational(-1, 2))) * E4q() * E4q()};
    return p.derive(images);
}

QMPoly qm_delta_e(const QMPoly &p)
{
    QMPoly r;
    for (const auto &[e, v] : p.terms()) r += QMPoly::monomial(e, v * Gaussian(QMPoly::monomial_weight(e)));
    return r;
}

CommuteReport mu_commutes_check()
{
    CommuteReport rep;
    std::vector<std::pair<std::string, Coef>> gens{{"1", cq(1)}, {"a", a()}, {"b", b()}, {"1/b", b().pow(-1)}, {"E2", E2()}};
    for (const auto &[name, g] : gens) {
        QMPoly lhs = mu(delta_s(g));
        QMPoly rhs = qm_delta_s(mu(g));
        if (!(lhs == rhs)) {
            rep.ok = false;
            rep.detail += "mismatch on " + name + ": " + lhs.str() + " vs " + rhs.str() + "; ";
        }
    }
    return rep;
}

} // namespace cmg::ws
