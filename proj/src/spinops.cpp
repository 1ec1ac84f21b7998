#include "sgtwin/spinops.hpp"

#include <cmath>
#include <stdexcept>

namespace sgtwin {

namespace {
constexpr cplx kI{0.0, 1.0};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}  // namespace

SpinOperator f_z() {
    SpinOperator m;
    m(0, 0) = 1.0;
    m(2, 2) = -1.0;
    return m;
}

SpinOperator f_x() {
    SpinOperator m;
    m(0, 1) = m(1, 0) = m(1, 2) = m(2, 1) = kInvSqrt2;
    return m;
}

SpinOperator f_y() {
    SpinOperator m;
    m(0, 1) = -kI * kInvSqrt2;
    m(1, 0) = kI * kInvSqrt2;
    m(1, 2) = -kI * kInvSqrt2;
    m(2, 1) = kI * kInvSqrt2;
    return m;
}

SpinOperator wigner_d1(double beta) {
    if (!std::isfinite(beta)) throw std::invalid_argument("wigner_d1: non-finite angle");
    const double c = std::cos(beta);
    const double s = std::sin(beta);
    SpinOperator m;
    m(0, 0) = 0.5 * (1.0 + c);
    m(0, 1) = -s * kInvSqrt2;
    m(0, 2) = 0.5 * (1.0 - c);
    m(1, 0) = s * kInvSqrt2;
    m(1, 1) = c;
    m(1, 2) = -s * kInvSqrt2;
    m(2, 0) = 0.5 * (1.0 - c);
    m(2, 1) = s * kInvSqrt2;
    m(2, 2) = 0.5 * (1.0 + c);
    return m;
}

Mat3 expi_fz(double phi) {
    Mat3 m;
    m(0, 0) = std::exp(kI * phi);
    m(1, 1) = 1.0;
    m(2, 2) = std::exp(-kI * phi);
    return m;
}

Mat3 expi_fx(double phi) {
    // rotation(-pi/2) and rotation(pi/2) under the locked convention
    static const Mat3 rot_to_z = RotationConvention::locked().rotation(-M_PI / 2);
    static const Mat3 rot_to_x = RotationConvention::locked().rotation(M_PI / 2);
    return rot_to_z * expi_fz(phi) * rot_to_x;
}

double clebsch_gordan_11(int m1, int m2, int F, int M) {
    if (m1 < -1 || m1 > 1 || m2 < -1 || m2 > 1)
        throw std::invalid_argument("clebsch_gordan_11: m out of range");
    if (F < 0 || F > 2) throw std::invalid_argument("clebsch_gordan_11: F out of range");
    if (M < -F || M > F) throw std::invalid_argument("clebsch_gordan_11: M out of range");
    if (m1 + m2 != M) return 0.0;

    static const double sqrt13 = std::sqrt(1.0 / 3.0);
    static const double sqrt12 = std::sqrt(1.0 / 2.0);
    static const double sqrt16 = std::sqrt(1.0 / 6.0);
    static const double sqrt23 = std::sqrt(2.0 / 3.0);

    switch (F) {
        case 0:
            // (1,-1) -> +, (0,0) -> -, (-1,1) -> +
            return (m1 == 0) ? -sqrt13 : sqrt13;
        case 1:
            if (m1 == m2) return 0.0;  // covers (0,0); stretched |M|=1 pairs differ
            return (m1 > m2) ? sqrt12 : -sqrt12;
        case 2:
            if (M == 2 || M == -2) return 1.0;
            if (M == 1 || M == -1) return sqrt12;
            return (m1 == 0) ? sqrt23 : sqrt16;  // M = 0
    }
    return 0.0;
}

double zeeman_phase(const PhysicalBeamParams& params) {
    if (!(params.p0 > 0)) throw std::invalid_argument("zeeman_phase: p0 must be positive");
    if (!(params.atom_mass > 0))
        throw std::invalid_argument("zeeman_phase: atom mass must be positive");
    const double kinetic = params.p0 * params.p0 / (2.0 * params.atom_mass);
    const double dx = params.atom_mass * params.g_factor * params.bohr_magneton *
                      params.field_integral / (2.0 * kinetic);
    return params.p0 * dx / params.hbar;
}

}  // namespace sgtwin
