#ifndef SGTWIN_KERNELS_INTERNAL_HPP
#define SGTWIN_KERNELS_INTERNAL_HPP

#include "sgtwin/kernels.hpp"

namespace sgtwin::kernels {

#if defined(SGTWIN_HAVE_AVX2)
void cmat_mul_avx2(int n, const cplx* a, const cplx* b, cplx* c);
void cmat_mul_adjB_avx2(int n, const cplx* a, const cplx* b, cplx* c);
void cmat_vec_avx2(int n, const cplx* a, const cplx* x, cplx* y);
cplx cvec_dot_avx2(int n, const cplx* x, const cplx* y);
void ckron_avx2(int na, int nb, const cplx* a, const cplx* b, cplx* c);
#endif

}  // namespace sgtwin::kernels

#endif
