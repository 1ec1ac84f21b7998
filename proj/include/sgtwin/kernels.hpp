#ifndef SGTWIN_KERNELS_HPP
#define SGTWIN_KERNELS_HPP

#include <complex>
#include <string>

// Dense complex kernels for the small fixed-size matrices the simulator
// lives on (3x3 spin blocks up to the 36x36 sided two-atom space).
// A scalar reference implementation always exists; AVX2 variants are
// selected at runtime when the CPU supports them and are required to agree
// with the reference to floating-point roundoff (see the kernel tests).
//
// Layout: row-major, interleaved re/im (std::complex<double>).
// Output buffers must not alias inputs.

namespace sgtwin::kernels {

using cplx = std::complex<double>;

// c = a * b, both n x n
extern void (*cmat_mul)(int n, const cplx* a, const cplx* b, cplx* c);
// c = a * b^H, both n x n
extern void (*cmat_mul_adjB)(int n, const cplx* a, const cplx* b, cplx* c);
// y = a * x
extern void (*cmat_vec)(int n, const cplx* a, const cplx* x, cplx* y);
// sum_i conj(x_i) * y_i
extern cplx (*cvec_dot)(int n, const cplx* x, const cplx* y);
// c = a kron b, a is na x na, b is nb x nb, c is (na*nb) x (na*nb)
extern void (*ckron)(int na, int nb, const cplx* a, const cplx* b, cplx* c);

// Reference implementations, kept callable for the equivalence tests.
void cmat_mul_scalar(int n, const cplx* a, const cplx* b, cplx* c);
void cmat_mul_adjB_scalar(int n, const cplx* a, const cplx* b, cplx* c);
void cmat_vec_scalar(int n, const cplx* a, const cplx* x, cplx* y);
cplx cvec_dot_scalar(int n, const cplx* x, const cplx* y);
void ckron_scalar(int na, int nb, const cplx* a, const cplx* b, cplx* c);

// Name of the active variant: "avx2" or "scalar".
std::string active_level();
// True if AVX2 variants were compiled in and the CPU supports them.
bool avx2_available();
// Force a variant ("scalar" or "avx2"). Returns false if unavailable.
// Intended for tests and benchmarking; the default is picked at startup.
bool select_level(const std::string& level);

// v^H m v for an n x n matrix (n <= 64). Real part is the physical value
// when m is Hermitian.
cplx quad_form(int n, const cplx* m, const cplx* v);

}  // namespace sgtwin::kernels

#endif
