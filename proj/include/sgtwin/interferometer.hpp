#ifndef SGTWIN_INTERFEROMETER_HPP
#define SGTWIN_INTERFEROMETER_HPP

#include <span>
#include <vector>

#include "sgtwin/errors.hpp"
#include "sgtwin/twinstate.hpp"

// The device pipeline on the 36-dimensional sided space
// (atom1 side x atom1 spin x atom2 side x atom2 spin), the coincidence
// counting rate, its closed-form counterpart, phi_R scans and the
// coherence-parameter estimators.
//
// External motion is abstracted to a two-valued side label per atom:
// Left <-> x < 0, Right <-> x > 0. Index of a basis state is
// 18*s1 + 6*m1 + 3*s2 + m2 with side index Left = 0, Right = 1.

namespace sgtwin {

enum class SideLabel { Left = 0, Right = 1 };

// Side-resolved Zeeman phases, radians. Finite values required; scans
// report on [0, 2pi).
struct PhaseSettings {
    double phi_l = 0;
    double phi_r = 0;
};

struct SidedDensity {
    Mat36 mat;

    double trace() const;
};

struct Evolved {
    SidedDensity rho;  // renormalized to unit trace
    double survival;   // trace before renormalization
};

// (|L>1|R>2 + |R>1|L>2)/sqrt(2) (x) rho0(lambda), rearranged to the
// sided ordering.
SidedDensity initial_state(CoherenceParam lambda);

// Q (x) Q with per-atom Q = |L><L| (x) (|0><0| + |-1><-1|)
//                         + |R><R| (x) (|0><0| + |+1><+1|).
Mat36 polarizer_operator();

// O1 (x) O2 with per-atom O = |L><L| (x) exp(i phi_l F_x)
//                           + |R><R| (x) exp(i phi_r F_x).
Mat36 phase_object_operator(const PhaseSettings& phases);

// (|L,+1>1 |R,-1>2 + |R,-1>1 |L,+1>2)/sqrt(2): the left detector selects
// m_z = +1, the right one m_z = -1.
Vec36 detection_state();

// Swaps the full (side, spin) labels of the two atoms.
Mat36 joint_exchange_operator();

// N * O P rho_init P^H O^H with trace renormalization N after the
// projective polarizer stage. Throws DegenerateStateError if nothing
// survives the polarizer.
Evolved evolve(CoherenceParam lambda, const PhaseSettings& phases);

// <det| rho |det>
double coincidence(const SidedDensity& rho);

// coincidence(evolve(lambda, phases)); proportional to the closed form
// below with one lambda-independent constant.
double signal(CoherenceParam lambda, const PhaseSettings& phases);

// C sin^2(phi_l/2) sin^2(phi_r/2) [ 4 lambda sin(phi_l) sin(phi_r)
//   + cos(phi_l)(5 cos(phi_r) + 3) + 3 cos(phi_r) + 5 ]
double analytic_signal(CoherenceParam lambda, const PhaseSettings& phases,
                       double c = 1.0);

// |<U psi0|U psi1>| / (|U psi0| |U psi1|) with U = O P on the sided space
// and psi0, psi1 embedded with the symmetric side state. Throws
// DegenerateStateError if an evolved norm falls below 1e-14.
double evolved_overlap(const PhaseSettings& phases);

struct ScanResult {
    double phi_l = 0;
    double lambda = 0;
    std::vector<double> phi_r;      // strictly increasing
    std::vector<double> intensity;  // signal at each grid point
    double normalization = 0;       // least-squares ratio to the C=1 closed form
};

// Uniform n-point grid over [0, 2pi), k * 2pi/n.
std::vector<double> uniform_grid(int n);

// Signal over a grid of phi_r values at fixed phi_l. Grid must be
// nonempty, strictly increasing and within [0, 2pi].
ScanResult scan(CoherenceParam lambda, double phi_l, std::span<const double> grid);

struct LambdaEstimate {
    double lambda = 0;  // clamped to [0, 1]
    double raw = 0;     // unclamped value
    bool clamped = false;
};

// Inverts the peak asymmetry measured at (phi_l, phi_r) = (pi/2, pi/2)
// and (pi/2, 3pi/2): lambda = (5/4) (I1 - I2)/(I1 + I2).
// Throws std::invalid_argument for non-positive inputs.
LambdaEstimate estimate_lambda_from_ratio(double i_first, double i_second);

struct LambdaFit {
    double lambda = 0;
    double scale = 0;  // fitted C
    double residual = 0;
};

// Least-squares inversion of a scan against the closed form. Bounded
// scalar search on lambda in [0,1]; the scale is eliminated in closed
// form per candidate. Needs >= 8 points; throws FitError when the scan
// carries no signal.
LambdaFit fit_lambda(const ScanResult& scan_data);

struct Peak {
    double position = 0;
    double height = 0;
    std::size_t grid_index = 0;
};

// Argmax over [lo, hi) refined by a three-point parabola.
Peak refined_peak(std::span<const double> grid, std::span<const double> values,
                  std::size_t lo, std::size_t hi);

}  // namespace sgtwin

#endif
