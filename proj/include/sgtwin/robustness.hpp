#ifndef SGTWIN_ROBUSTNESS_HPP
#define SGTWIN_ROBUSTNESS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "sgtwin/interferometer.hpp"

// Monte Carlo study of multiplicative phase fluctuations: how well the
// asymmetry readout separates coherent from incoherent dissociation when
// phi_L and phi_R are only known up to a relative uncertainty.

namespace sgtwin {

enum class NoiseDistribution { Uniform, Gaussian };

// Phase fluctuation model. Each sample draws one independent factor per
// phase from a substream derived from (seed, sample index), so results are
// reproducible regardless of evaluation order.
struct NoiseSpec {
    double rel_amplitude = 0.15;  // in [0, 1)
    NoiseDistribution distribution = NoiseDistribution::Uniform;
    int n_samples = 1000;
    std::uint64_t seed = 0;

    // Throws std::invalid_argument on a bad field.
    void validate() const;

    bool operator==(const NoiseSpec&) const = default;
};

struct PhaseFactors {
    double f_l = 1;
    double f_r = 1;
};

// The multiplicative factors of one sample. Uniform: 1 + a*(2u-1).
// Gaussian: 1 + a*z with z truncated at +-3 by rejection.
PhaseFactors draw_phase_factors(const NoiseSpec& noise, int sample_index);

// signal(lambda, {phi_l * f_l, phi_r * f_r}) for the given sample.
double perturbed_signal(CoherenceParam lambda, const PhaseSettings& phases,
                        const NoiseSpec& noise, int sample_index);

// Per-grid-point ensemble summaries plus the per-sample asymmetry
// statistic (I(pi/2) - I(3pi/2)) / (I(pi/2) + I(3pi/2)) at the scan's
// phi_l, both canonical angles perturbed by the sample's factors.
struct EnsembleStats {
    double lambda = 0;
    double phi_l = 0;
    NoiseSpec noise;
    std::vector<double> grid;
    std::vector<double> mean;
    std::vector<double> stddev;
    std::vector<double> p05, p25, p50, p75, p95;
    std::vector<double> asymmetry;  // one entry per sample, insertion order
};

EnsembleStats ensemble_scan(CoherenceParam lambda, double phi_l,
                            std::span<const double> grid, const NoiseSpec& noise);

struct SeparationReport {
    double gap = 0;  // p5 of the higher asymmetry distribution minus p95 of the lower
    bool distinguishable = false;
};

// Requires both ensembles on the same grid and noise spec.
SeparationReport separation_report(const EnsembleStats& a, const EnsembleStats& b);

// Linear-interpolation percentile (type 7); p in [0, 100], data unsorted.
double percentile(std::span<const double> data, double p);

}  // namespace sgtwin

#endif
