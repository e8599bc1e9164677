#include "cmg/green/kernel.hpp"

#if defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>
#endif

namespace cmg::green
{

#if defined(__AVX2__) && defined(__FMA__)

double q1_sum_avx2(const double *t, std::size_t n)
{
    const __m256d one = _mm256_set1_pd(1.0);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d tv = _mm256_loadu_pd(t + i);
        __m256d u = _mm256_div_pd(one, _mm256_mul_pd(tv, tv));
        __m256d q = _mm256_set1_pd(detail::kQ1Coef[0]);
        for (int j = 1; j < 14; ++j) q = _mm256_fmadd_pd(q, u, _mm256_set1_pd(detail::kQ1Coef[j]));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(q, u));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; ++i) s += detail::q1_far(t[i]);
    return s;
}

#else

double q1_sum_avx2(const double *t, std::size_t n) { return q1_sum_scalar(t, n); }

#endif

} // namespace cmg::green
