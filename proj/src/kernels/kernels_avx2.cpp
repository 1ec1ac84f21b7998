// AVX2/FMA variants of the complex kernels. Two complex doubles per
// 256-bit vector, interleaved re/im. Compiled with -mavx2 -mfma and only
// dispatched to after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>

#include "kernels_internal.hpp"

#if defined(SGTWIN_HAVE_AVX2)

namespace sgtwin::kernels {

namespace {

// result lanes: [re0, im0, re1, im1] of s * b for scalar s = (sr, si)
inline __m256d cmul_broadcast(__m256d sr, __m256d si, __m256d b) {
    const __m256d bswap = _mm256_permute_pd(b, 0x5);
    return _mm256_fmaddsub_pd(sr, b, _mm256_mul_pd(si, bswap));
}

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(lo) + _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
}

// sum of even lanes and sum of odd lanes
inline void hsum_even_odd(__m256d v, double& even, double& odd) {
    alignas(32) double lane[4];
    _mm256_store_pd(lane, v);
    even = lane[0] + lane[2];
    odd = lane[1] + lane[3];
}

}  // namespace

void cmat_mul_avx2(int n, const cplx* a, const cplx* b, cplx* c) {
    std::fill(c, c + static_cast<std::size_t>(n) * n, cplx{});
    const double* B = reinterpret_cast<const double*>(b);
    double* C = reinterpret_cast<double*>(c);
    const int nv = n & ~1;
    for (int i = 0; i < n; ++i) {
        double* crow = C + 2 * static_cast<std::size_t>(n) * i;
        for (int k = 0; k < n; ++k) {
            const cplx aik = a[i * n + k];
            const __m256d ar = _mm256_set1_pd(aik.real());
            const __m256d ai = _mm256_set1_pd(aik.imag());
            const double* brow = B + 2 * static_cast<std::size_t>(n) * k;
            int j = 0;
            for (; j < nv; j += 2) {
                __m256d cv = _mm256_loadu_pd(crow + 2 * j);
                cv = _mm256_add_pd(cv, cmul_broadcast(ar, ai, _mm256_loadu_pd(brow + 2 * j)));
                _mm256_storeu_pd(crow + 2 * j, cv);
            }
            if (j < n) c[i * n + j] += aik * b[k * n + j];
        }
    }
}

void cmat_mul_adjB_avx2(int n, const cplx* a, const cplx* b, cplx* c) {
    const double* A = reinterpret_cast<const double*>(a);
    const double* B = reinterpret_cast<const double*>(b);
    const int nv = n & ~1;
    for (int i = 0; i < n; ++i) {
        const double* arow = A + 2 * static_cast<std::size_t>(n) * i;
        for (int j = 0; j < n; ++j) {
            const double* brow = B + 2 * static_cast<std::size_t>(n) * j;
            // x * conj(y): re = xr yr + xi yi, im = xi yr - xr yi
            __m256d acc1 = _mm256_setzero_pd();  // x * y
            __m256d acc2 = _mm256_setzero_pd();  // x * swap(y)
            int k = 0;
            for (; k < nv; k += 2) {
                const __m256d xv = _mm256_loadu_pd(arow + 2 * k);
                const __m256d yv = _mm256_loadu_pd(brow + 2 * k);
                acc1 = _mm256_fmadd_pd(xv, yv, acc1);
                acc2 = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0x5), acc2);
            }
            double re = hsum(acc1);
            double e2, o2;
            hsum_even_odd(acc2, e2, o2);
            double im = o2 - e2;
            for (; k < n; ++k) {
                const cplx t = a[i * n + k] * std::conj(b[j * n + k]);
                re += t.real();
                im += t.imag();
            }
            c[i * n + j] = cplx{re, im};
        }
    }
}

void cmat_vec_avx2(int n, const cplx* a, const cplx* x, cplx* y) {
    const double* A = reinterpret_cast<const double*>(a);
    const double* X = reinterpret_cast<const double*>(x);
    const int nv = n & ~1;
    for (int i = 0; i < n; ++i) {
        const double* arow = A + 2 * static_cast<std::size_t>(n) * i;
        // a * x: re = ar xr - ai xi, im = ar xi + ai xr
        __m256d acc1 = _mm256_setzero_pd();  // a * x
        __m256d acc2 = _mm256_setzero_pd();  // a * swap(x)
        int k = 0;
        for (; k < nv; k += 2) {
            const __m256d av = _mm256_loadu_pd(arow + 2 * k);
            const __m256d xv = _mm256_loadu_pd(X + 2 * k);
            acc1 = _mm256_fmadd_pd(av, xv, acc1);
            acc2 = _mm256_fmadd_pd(av, _mm256_permute_pd(xv, 0x5), acc2);
        }
        double e1, o1;
        hsum_even_odd(acc1, e1, o1);
        double re = e1 - o1;
        double im = hsum(acc2);
        for (; k < n; ++k) {
            const cplx t = a[i * n + k] * x[k];
            re += t.real();
            im += t.imag();
        }
        y[i] = cplx{re, im};
    }
}

cplx cvec_dot_avx2(int n, const cplx* x, const cplx* y) {
    const double* X = reinterpret_cast<const double*>(x);
    const double* Y = reinterpret_cast<const double*>(y);
    const int nv = n & ~1;
    // conj(x) * y: re = xr yr + xi yi, im = xr yi - xi yr
    __m256d acc1 = _mm256_setzero_pd();  // x * y
    __m256d acc2 = _mm256_setzero_pd();  // x * swap(y)
    int k = 0;
    for (; k < nv; k += 2) {
        const __m256d xv = _mm256_loadu_pd(X + 2 * k);
        const __m256d yv = _mm256_loadu_pd(Y + 2 * k);
        acc1 = _mm256_fmadd_pd(xv, yv, acc1);
        acc2 = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0x5), acc2);
    }
    double re = hsum(acc1);
    double e2, o2;
    hsum_even_odd(acc2, e2, o2);
    double im = e2 - o2;
    for (; k < n; ++k) {
        const cplx t = std::conj(x[k]) * y[k];
        re += t.real();
        im += t.imag();
    }
    return cplx{re, im};
}

void ckron_avx2(int na, int nb, const cplx* a, const cplx* b, cplx* c) {
    const int n = na * nb;
    const double* B = reinterpret_cast<const double*>(b);
    double* C = reinterpret_cast<double*>(c);
    const int nbv = nb & ~1;
    for (int ia = 0; ia < na; ++ia) {
        for (int ja = 0; ja < na; ++ja) {
            const cplx av = a[ia * na + ja];
            const __m256d ar = _mm256_set1_pd(av.real());
            const __m256d ai = _mm256_set1_pd(av.imag());
            for (int ib = 0; ib < nb; ++ib) {
                double* crow = C + 2 * (static_cast<std::size_t>(ia * nb + ib) * n + ja * nb);
                const double* brow = B + 2 * static_cast<std::size_t>(nb) * ib;
                int jb = 0;
                for (; jb < nbv; jb += 2) {
                    _mm256_storeu_pd(crow + 2 * jb,
                                     cmul_broadcast(ar, ai, _mm256_loadu_pd(brow + 2 * jb)));
                }
                for (; jb < nb; ++jb) {
                    c[(ia * nb + ib) * n + ja * nb + jb] = av * b[ib * nb + jb];
                }
            }
        }
    }
}

}  // namespace sgtwin::kernels

#endif  // SGTWIN_HAVE_AVX2
