#include <immintrin.h>

#include <cfloat>
#include <cmath>

#include "imflow/kernels/kernels.hpp"

// AVX2 variants of the arithmetic kernels. plogp_sum needs a vector log2;
// the one below uses the classic argument reduction x = 2^e * m with
// m in (sqrt(1/2), sqrt(2)], followed by the msun log1p polynomial in
// s = f/(2+f). Exact for powers of two (f == 0), ~1 ulp elsewhere, which is
// what the equivalence tests against the scalar reference rely on.

namespace imflow::kernels::avx2 {

namespace {

// msun k_log coefficients
constexpr double kLg1 = 6.666666666666735130e-01;
constexpr double kLg2 = 3.999999999940941908e-01;
constexpr double kLg3 = 2.857142874366239149e-01;
constexpr double kLg4 = 2.222219843214978396e-01;
constexpr double kLg5 = 1.818357216161805012e-01;
constexpr double kLg6 = 1.531383769920937332e-01;
constexpr double kLg7 = 1.479819860511658591e-01;

constexpr double kInvLn2 = 1.4426950408889634074;
constexpr double kSqrt2 = 1.4142135623730951;

// log2 of 4 positive normal doubles; callers mask out other lanes.
inline __m256d log2_pd(__m256d x) {
    const __m256i bits = _mm256_castpd_si256(x);

    // biased exponent as double, via the 2^52 magic-number trick
    __m256i eb = _mm256_and_si256(_mm256_srli_epi64(bits, 52), _mm256_set1_epi64x(0x7ff));
    eb = _mm256_or_si256(eb, _mm256_set1_epi64x(0x4330000000000000LL));
    __m256d e = _mm256_sub_pd(_mm256_castsi256_pd(eb),
                              _mm256_set1_pd(0x1.0p52 + 1023.0));

    // mantissa normalized to [1, 2)
    __m256i mbits = _mm256_and_si256(bits, _mm256_set1_epi64x(0x000fffffffffffffLL));
    mbits = _mm256_or_si256(mbits, _mm256_set1_epi64x(0x3ff0000000000000LL));
    __m256d m = _mm256_castsi256_pd(mbits);

    // shift m into (sqrt(1/2), sqrt(2)]
    const __m256d gt = _mm256_cmp_pd(m, _mm256_set1_pd(kSqrt2), _CMP_GT_OQ);
    m = _mm256_blendv_pd(m, _mm256_mul_pd(m, _mm256_set1_pd(0.5)), gt);
    e = _mm256_add_pd(e, _mm256_and_pd(gt, _mm256_set1_pd(1.0)));

    const __m256d f = _mm256_sub_pd(m, _mm256_set1_pd(1.0));
    const __m256d s = _mm256_div_pd(f, _mm256_add_pd(_mm256_set1_pd(2.0), f));
    const __m256d z = _mm256_mul_pd(s, s);
    const __m256d w = _mm256_mul_pd(z, z);

    __m256d t1 = _mm256_fmadd_pd(w, _mm256_set1_pd(kLg6), _mm256_set1_pd(kLg4));
    t1 = _mm256_fmadd_pd(w, t1, _mm256_set1_pd(kLg2));
    t1 = _mm256_mul_pd(w, t1);

    __m256d t2 = _mm256_fmadd_pd(w, _mm256_set1_pd(kLg7), _mm256_set1_pd(kLg5));
    t2 = _mm256_fmadd_pd(w, t2, _mm256_set1_pd(kLg3));
    t2 = _mm256_fmadd_pd(w, t2, _mm256_set1_pd(kLg1));
    t2 = _mm256_mul_pd(z, t2);

    const __m256d r = _mm256_add_pd(t1, t2);
    const __m256d hfsq = _mm256_mul_pd(_mm256_set1_pd(0.5), _mm256_mul_pd(f, f));

    // ln(1+f) = f - (hfsq - s*(hfsq + R))
    const __m256d ln_m =
        _mm256_sub_pd(f, _mm256_sub_pd(hfsq, _mm256_mul_pd(s, _mm256_add_pd(hfsq, r))));

    return _mm256_fmadd_pd(ln_m, _mm256_set1_pd(kInvLn2), e);
}

inline double hsum_pd(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(lo) + _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
}

}  // namespace

double plogp_sum(std::span<const double> mass) {
    const std::size_t n = mass.size();
    const double* p = mass.data();
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    const __m256d tiny = _mm256_set1_pd(DBL_MIN);
    for (; i + 4 <= n; i += 4) {
        const __m256d m = _mm256_loadu_pd(p + i);
        const __m256d ok = _mm256_cmp_pd(m, tiny, _CMP_GE_OQ);
        // masked lanes are fed 1.0 so log2 stays finite, then zeroed
        const __m256d safe = _mm256_blendv_pd(_mm256_set1_pd(1.0), m, ok);
        const __m256d term = _mm256_and_pd(_mm256_mul_pd(m, log2_pd(safe)), ok);
        acc = _mm256_add_pd(acc, term);
    }
    double s = hsum_pd(acc);
    for (; i < n; ++i) {
        if (p[i] >= DBL_MIN) s += p[i] * std::log2(p[i]);
    }
    return s;
}

double dot(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = a.size();
    const double* pa = a.data();
    const double* pb = b.data();
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(pa + i), _mm256_loadu_pd(pb + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(pa + i + 4), _mm256_loadu_pd(pb + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(pa + i), _mm256_loadu_pd(pb + i), acc0);
    }
    double s = hsum_pd(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) s += pa[i] * pb[i];
    return s;
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    const std::size_t n = x.size();
    const double* px = x.data();
    double* py = y.data();
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d r = _mm256_fmadd_pd(va, _mm256_loadu_pd(px + i), _mm256_loadu_pd(py + i));
        _mm256_storeu_pd(py + i, r);
    }
    for (; i < n; ++i) py[i] += alpha * px[i];
}

}  // namespace imflow::kernels::avx2
