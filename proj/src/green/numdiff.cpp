#include "cmg/green/numdiff.hpp"

namespace cmg::green
{

using num::Complex;
using num::Real;

namespace
{

// {df/dx, df/dy}
std::pair<Complex, Complex> partials(const CFun &f, const Complex &z, mpfr_prec_t P)
{
    Real h = Real::pow2(-static_cast<long>(P) / 3, z.prec());
    auto central = [&](const Real &s) {
        Complex hx(s), hy(Real::zero(z.prec()), s);
        Complex dx = (f(z + hx) - f(z - hx)) / (s * 2L);
        Complex dy = (f(z + hy) - f(z - hy)) / (s * 2L);
        return std::pair{dx, dy};
    };
    auto [x1, y1] = central(h);
    auto [x2, y2] = central(h / 2L);
    // (4 D(h/2) - D(h)) / 3
    return {(x2 * 4L - x1) / 3L, (y2 * 4L - y1) / 3L};
}

} // namespace

Complex d_dz(const CFun &f, const Complex &z, mpfr_prec_t P)
{
    auto [fx, fy] = partials(f, z, P);
    return (fx - Complex::i(z.prec()) * fy) / 2L;
}

Complex d_dzbar(const CFun &f, const Complex &z, mpfr_prec_t P)
{
    auto [fx, fy] = partials(f, z, P);
    return (fx + Complex::i(z.prec()) * fy) / 2L;
}

} // namespace cmg::green
