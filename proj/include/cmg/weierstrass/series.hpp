#ifndef CMG_WEIERSTRASS_SERIES_HPP
#define CMG_WEIERSTRASS_SERIES_HPP

#include <optional>
#include <string>

#include "cmg/exact/laurent.hpp"
#include "cmg/exact/sparse_poly.hpp"

namespace cmg::ws
{

// Coefficients live in Q(i)[a, b, 1/b, E2].
using Coef = WeightedPoly;
using Series = TruncatedLaurent<Coef>;

inline constexpr int kDefaultOrder = 30;

Coef a();
Coef b();
Coef E2();
Coef cq(long num, long den = 1);
Coef ci(); // the Gaussian unit i as a constant

// Derivations of the base ring. delta_e multiplies homogeneous parts by their
// weight; delta_s is the Serre derivation a -> 6b, b -> -4a^2/3, E2 -> 4a - E2^2/12.
Coef delta_e(const Coef &c);
Coef delta_s(const Coef &c);

// Coefficientwise base derivations of a series (z held fixed).
Series delta_e_coef(const Series &s);
Series delta_s_coef(const Series &s);

enum class Parity { Even, Odd, Mixed };

// A series together with its G_m weight and parity. The weight is optional only
// so that callers building series by hand must tag them before differentiating.
struct WSeries {
    Series s;
    std::optional<int> weight;
    Parity parity = Parity::Mixed;
};

// Checks every stored coefficient of z^k is homogeneous of weight w + k.
bool weight_consistent(const Series &s, int w);
bool parity_consistent(const Series &s, Parity p);

enum class Basic { X, Y, U, T, ZOfT, V0, V, XOfT, YOfT, UOfT, OmegaOfT };
std::string basic_name(Basic b);

// Expansion known below z^N (or t^N for the *OfT series). Cached per (name, N).
WSeries expand_basic(Basic name, int N = kDefaultOrder);

enum class DerivOp { DeltaEStar, DeltaSStar, DDz };

// delta_e* = delta_e - z d/dz and delta_s* = delta_s - v0 d/dz on functions
// expanded in z; DDz is the plain z-derivative.
WSeries derive(DerivOp op, const WSeries &s);

// Coefficients of dz, d_e, d_s.
struct RelForm {
    Series dz, de, ds;
};

// d F = F' dz + (delta_e F) d_e + (delta_s F) d_s for a function expanded in z.
RelForm total_differential(const Series &f);
enum class Fn { X, Y };
RelForm total_differential(Fn name, int N = kDefaultOrder);

// mu: Q(i)[a, b, 1/b, E2] -> Q(i)[E2, E4, 1/E6].
QMPoly mu(const Coef &p);
// delta_s on the quasi-modular side: E2 -> -(E2^2 + E4)/12, E4 -> -E6/3, E6 -> -E4^2/2.
QMPoly qm_delta_s(const QMPoly &p);
QMPoly qm_delta_e(const QMPoly &p);
QMPoly E2q();
QMPoly E4q();
QMPoly E6q();

struct CommuteReport {
    bool ok = true;
    std::string detail;
};
// mu(delta_s g) == delta_s(mu g) for g in {1, a, b, 1/b, E2}.
CommuteReport mu_commutes_check();

} // namespace cmg::ws

#endif
