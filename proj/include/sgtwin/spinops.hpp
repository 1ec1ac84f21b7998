#ifndef SGTWIN_SPINOPS_HPP
#define SGTWIN_SPINOPS_HPP

#include "sgtwin/smallmat.hpp"

// Spin-1 operator algebra in the m_z basis. Basis ordering is fixed
// project-wide: index 0 <-> m_z = +1, 1 <-> m_z = 0, 2 <-> m_z = -1.
// Angular momentum is dimensionless (units of hbar) everywhere except
// zeeman_phase, which is the single entry point for SI quantities.

namespace sgtwin {

using SpinOperator = Mat3;

SpinOperator f_z();
SpinOperator f_x();
SpinOperator f_y();

// j=1 small-d rotation matrix d^1(beta) = exp(-i beta F_y).
// Throws std::invalid_argument for non-finite beta.
SpinOperator wigner_d1(double beta);

// Sign convention for the quantization-axis switch between O_z and O_x.
// The rotation axis is O_y; beta_sign records which sign of the rotation
// angle makes rotation(-pi/2) * F_z * rotation(pi/2) come out as F_x.
// The paper-facing identity fixes beta_sign = -1; a selftest check locks it.
struct RotationConvention {
    int beta_sign = -1;

    static RotationConvention locked() { return RotationConvention{}; }

    SpinOperator rotation(double beta) const { return wigner_d1(beta_sign * beta); }
};

// exp(i phi F_z) = diag(e^{i phi}, 1, e^{-i phi})
Mat3 expi_fz(double phi);

// exp(i phi F_x), evaluated as rotation(-pi/2) exp(i phi F_z) rotation(pi/2)
// under the locked convention.
Mat3 expi_fx(double phi);

// <1 m1; 1 m2 | F M> for two spin-1 particles, Condon-Shortley phases.
// Throws std::invalid_argument when a quantum number is out of range.
double clebsch_gordan_11(int m1, int m2, int F, int M);

// Beam and field parameters for the Zeeman phase imprinted by one
// phase-object zone. SI units.
struct PhysicalBeamParams {
    double p0 = 0;              // longitudinal momentum [kg m/s]
    double atom_mass = 0;       // [kg]
    double g_factor = 0;        // dimensionless
    double field_integral = 0;  // integral of B over the zone [T m]
    double bohr_magneton = 9.2740100783e-24;  // [J/T]
    double hbar = 1.054571817e-34;            // [J s]
};

// phi = (p0/hbar) * dx with dx = m g mu_B (integral B)/(2 E_x),
// E_x = p0^2 / (2 m). Faster beams pick up less phase.
// Throws std::invalid_argument for non-positive p0 or mass.
double zeeman_phase(const PhysicalBeamParams& params);

}  // namespace sgtwin

#endif
