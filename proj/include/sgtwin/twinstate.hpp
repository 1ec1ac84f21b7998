#ifndef SGTWIN_TWINSTATE_HPP
#define SGTWIN_TWINSTATE_HPP

#include <vector>

#include "sgtwin/smallmat.hpp"

// Two-atom spin states over |m1 m2>, index = 3*i1 + i2 with the spinops
// basis ordering, and the lambda-parametrized initial density matrix of a
// partially spin-coherent dissociation.

namespace sgtwin {

using TwoAtomSpinState = Vec9;
using TwoAtomDensity = Mat9;

// Spin-coherence weight of the psi0/psi1 cross term. Valid range is
// [0, 1]; outside it the density matrix loses positivity, so construction
// throws std::invalid_argument instead of clamping.
struct CoherenceParam {
    double value;

    CoherenceParam(double v);  // NOLINT: implicit by design, validates
};

// |0,0>
TwoAtomSpinState psi0();
// (|1,-1> + |-1,1>) / sqrt(2)
TwoAtomSpinState psi1();
// -sqrt(1/3)|psi0> + sqrt(2/3)|psi1>, the F=0, M=0 combination
TwoAtomSpinState singlet();

// Permutation |m1 m2> -> |m2 m1>
Mat9 exchange_operator();

// rho0 = 1/3 |psi0><psi0| + 2/3 |psi1><psi1|
//        - lambda sqrt(2)/3 (|psi0><psi1| + |psi1><psi0|)
TwoAtomDensity rho0(CoherenceParam lambda);

// Tr(rho^2)
double purity(const TwoAtomDensity& rho);
// 1 - Tr(rho^2)
double linear_entropy(const TwoAtomDensity& rho);

// Eigenvalues of the Hermitian part of a, ascending. Cyclic Jacobi.
std::vector<double> hermitian_eigenvalues(int n, const cplx* a);

struct DensityCheck {
    bool hermitian = false;
    bool unit_trace = false;
    bool positive = false;
    double hermiticity_error = 0;  // max |rho - rho^H|
    double trace_error = 0;        // |Tr rho - 1|
    double min_eigenvalue = 0;

    bool ok() const { return hermitian && unit_trace && positive; }
};

// Reports violations instead of throwing; positivity allows eigensolver
// noise down to -positivity_tol.
DensityCheck check_density(int n, const cplx* rho, double tol = 1e-12,
                           double positivity_tol = 1e-10);

template <int N>
DensityCheck is_physical_density(const CMat<N>& rho, double tol = 1e-12,
                                 double positivity_tol = 1e-10) {
    return check_density(N, rho.data(), tol, positivity_tol);
}

}  // namespace sgtwin

#endif
