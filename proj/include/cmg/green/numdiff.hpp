#ifndef CMG_GREEN_NUMDIFF_HPP
#define CMG_GREEN_NUMDIFF_HPP

#include <functional>

#include "cmg/numeric/mp.hpp"

namespace cmg::green
{

using CFun = std::function<num::Complex(const num::Complex &)>;

// Wirtinger derivatives d/dz = (d/dx - i d/dy)/2 and d/dzbar = (d/dx + i d/dy)/2
// by centered differences with step 2^(-P/3), Richardson-extrapolated once.
num::Complex d_dz(const CFun &f, const num::Complex &z, mpfr_prec_t P);
num::Complex d_dzbar(const CFun &f, const num::Complex &z, mpfr_prec_t P);

} // namespace cmg::green

#endif
