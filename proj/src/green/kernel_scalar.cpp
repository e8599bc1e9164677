#include "cmg/green/kernel.hpp"

namespace cmg::green
{

double q1_sum_scalar(const double *t, std::size_t n)
{
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) s += detail::q1_far(t[i]);
    return s;
}

bool avx2_available()
{
#if defined(__x86_64__) || defined(__i386__)
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Kernel resolve_kernel(Kernel k)
{
    if (k == Kernel::Auto) return avx2_available() ? Kernel::Avx2 : Kernel::Scalar;
    if (k == Kernel::Avx2 && !avx2_available()) return Kernel::Scalar;
    return k;
}

double q1_sum(const double *t, std::size_t n, Kernel k)
{
    return resolve_kernel(k) == Kernel::Avx2 ? q1_sum_avx2(t, n) : q1_sum_scalar(t, n);
}

} // namespace cmg::green
