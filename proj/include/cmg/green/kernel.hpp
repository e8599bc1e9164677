#ifndef CMG_GREEN_KERNEL_HPP
#define CMG_GREEN_KERNEL_HPP

#include <cstddef>

namespace cmg::green
{

// Summation of Q_1(t) over far orbit points (t >= kFarT) in double precision.
// Q_1(t) = sum_{j >= 1} u^j / (2j + 1) with u = 1/t^2; 14 terms reach 1e-17
// relative accuracy for t >= 4.
constexpr double kFarT = 4.0;

enum class Kernel { Auto, Scalar, Avx2 };

double q1_sum_scalar(const double *t, std::size_t n);
double q1_sum_avx2(const double *t, std::size_t n);
bool avx2_available();
// Resolves Auto through a runtime CPU check.
Kernel resolve_kernel(Kernel k);
double q1_sum(const double *t, std::size_t n, Kernel k);

namespace detail
{
// Horner coefficients 1/(2j+1), j = 14 down to 1.
inline constexpr double kQ1Coef[14] = {1.0 / 29, 1.0 / 27, 1.0 / 25, 1.0 / 23, 1.0 / 21, 1.0 / 19, 1.0 / 17,
                                       1.0 / 15, 1.0 / 13, 1.0 / 11, 1.0 / 9,  1.0 / 7,  1.0 / 5,  1.0 / 3};
inline double q1_far(double t)
{
    double u = 1.0 / (t * t);
    double q = kQ1Coef[0];
    for (int j = 1; j < 14; ++j) q = q * u + kQ1Coef[j];
    return q * u;
}
} // namespace detail

} // namespace cmg::green

#endif
