#include "sgtwin/kernels.hpp"

#include <algorithm>
#include <stdexcept>

#include "kernels_internal.hpp"

namespace sgtwin::kernels {

void cmat_mul_scalar(int n, const cplx* a, const cplx* b, cplx* c) {
    std::fill(c, c + static_cast<std::size_t>(n) * n, cplx{});
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const cplx aik = a[i * n + k];
            const cplx* brow = b + k * n;
            cplx* crow = c + i * n;
            for (int j = 0; j < n; ++j) crow[j] += aik * brow[j];
        }
    }
}

void cmat_mul_adjB_scalar(int n, const cplx* a, const cplx* b, cplx* c) {
    for (int i = 0; i < n; ++i) {
        const cplx* arow = a + i * n;
        for (int j = 0; j < n; ++j) {
            const cplx* brow = b + j * n;
            cplx s{};
            for (int k = 0; k < n; ++k) s += arow[k] * std::conj(brow[k]);
            c[i * n + j] = s;
        }
    }
}

void cmat_vec_scalar(int n, const cplx* a, const cplx* x, cplx* y) {
    for (int i = 0; i < n; ++i) {
        const cplx* arow = a + i * n;
        cplx s{};
        for (int k = 0; k < n; ++k) s += arow[k] * x[k];
        y[i] = s;
    }
}

cplx cvec_dot_scalar(int n, const cplx* x, const cplx* y) {
    cplx s{};
    for (int i = 0; i < n; ++i) s += std::conj(x[i]) * y[i];
    return s;
}

void ckron_scalar(int na, int nb, const cplx* a, const cplx* b, cplx* c) {
    const int n = na * nb;
    for (int ia = 0; ia < na; ++ia) {
        for (int ja = 0; ja < na; ++ja) {
            const cplx av = a[ia * na + ja];
            for (int ib = 0; ib < nb; ++ib) {
                cplx* crow = c + (ia * nb + ib) * n + ja * nb;
                const cplx* brow = b + ib * nb;
                for (int jb = 0; jb < nb; ++jb) crow[jb] = av * brow[jb];
            }
        }
    }
}

void (*cmat_mul)(int, const cplx*, const cplx*, cplx*) = cmat_mul_scalar;
void (*cmat_mul_adjB)(int, const cplx*, const cplx*, cplx*) = cmat_mul_adjB_scalar;
void (*cmat_vec)(int, const cplx*, const cplx*, cplx*) = cmat_vec_scalar;
cplx (*cvec_dot)(int, const cplx*, const cplx*) = cvec_dot_scalar;
void (*ckron)(int, int, const cplx*, const cplx*, cplx*) = ckron_scalar;

namespace {

std::string g_level = "scalar";

bool cpu_has_avx2() {
#if defined(SGTWIN_HAVE_AVX2)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

void install(const std::string& level) {
#if defined(SGTWIN_HAVE_AVX2)
    if (level == "avx2") {
        cmat_mul = cmat_mul_avx2;
        cmat_mul_adjB = cmat_mul_adjB_avx2;
        cmat_vec = cmat_vec_avx2;
        cvec_dot = cvec_dot_avx2;
        ckron = ckron_avx2;
        g_level = "avx2";
        return;
    }
#endif
    cmat_mul = cmat_mul_scalar;
    cmat_mul_adjB = cmat_mul_adjB_scalar;
    cmat_vec = cmat_vec_scalar;
    cvec_dot = cvec_dot_scalar;
    ckron = ckron_scalar;
    g_level = "scalar";
    (void)level;
}

struct AutoSelect {
    AutoSelect() { install(cpu_has_avx2() ? "avx2" : "scalar"); }
} g_auto_select;

}  // namespace

std::string active_level() { return g_level; }

bool avx2_available() { return cpu_has_avx2(); }

bool select_level(const std::string& level) {
    if (level == "scalar") {
        install("scalar");
        return true;
    }
    if (level == "avx2" && cpu_has_avx2()) {
        install("avx2");
        return true;
    }
    return false;
}

cplx quad_form(int n, const cplx* m, const cplx* v) {
    if (n > 64) throw std::invalid_argument("quad_form: n > 64");
    cplx tmp[64];
    cmat_vec(n, m, v, tmp);
    return cvec_dot(n, v, tmp);
}

}  // namespace sgtwin::kernels
