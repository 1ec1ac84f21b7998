#include "sgtwin/robustness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sgtwin {

namespace {

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Counter-based substream: the state is a hash of (seed, sample index),
// draws advance splitmix-style. Samples can be evaluated in any order.
struct SampleStream {
    std::uint64_t state;

    SampleStream(std::uint64_t seed, std::uint64_t index)
        : state(mix64(seed ^ mix64(index + 0x9E3779B97F4A7C15ull))) {}

    std::uint64_t next_bits() {
        state += 0x9E3779B97F4A7C15ull;
        return mix64(state);
    }

    // [0, 1)
    double next_unit() { return static_cast<double>(next_bits() >> 11) * 0x1.0p-53; }

    // (0, 1]
    double next_unit_open_low() {
        return static_cast<double>((next_bits() >> 11) + 1) * 0x1.0p-53;
    }

    // standard normal truncated at +-3, by rejection
    double next_truncated_normal() {
        for (;;) {
            const double u1 = next_unit_open_low();
            const double u2 = next_unit();
            const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
            if (std::abs(z) <= 3.0) return z;
        }
    }
};

}  // namespace

void NoiseSpec::validate() const {
    if (!(rel_amplitude >= 0.0 && rel_amplitude < 1.0))
        throw std::invalid_argument("noise relative amplitude must lie in [0, 1)");
    if (n_samples < 1) throw std::invalid_argument("noise needs at least one sample");
}

PhaseFactors draw_phase_factors(const NoiseSpec& noise, int sample_index) {
    noise.validate();
    if (sample_index < 0 || sample_index >= noise.n_samples)
        throw std::invalid_argument("sample index out of range");
    SampleStream stream(noise.seed, static_cast<std::uint64_t>(sample_index));
    PhaseFactors f;
    if (noise.distribution == NoiseDistribution::Uniform) {
        f.f_l = 1.0 + noise.rel_amplitude * (2.0 * stream.next_unit() - 1.0);
        f.f_r = 1.0 + noise.rel_amplitude * (2.0 * stream.next_unit() - 1.0);
    } else {
        f.f_l = 1.0 + noise.rel_amplitude * stream.next_truncated_normal();
        f.f_r = 1.0 + noise.rel_amplitude * stream.next_truncated_normal();
    }
    return f;
}

double perturbed_signal(CoherenceParam lambda, const PhaseSettings& phases,
                        const NoiseSpec& noise, int sample_index) {
    const PhaseFactors f = draw_phase_factors(noise, sample_index);
    return signal(lambda, {phases.phi_l * f.f_l, phases.phi_r * f.f_r});
}

double percentile(std::span<const double> data, double p) {
    if (data.empty()) throw std::invalid_argument("percentile: empty data");
    if (!(p >= 0.0 && p <= 100.0)) throw std::invalid_argument("percentile: p out of range");
    std::vector<double> v(data.begin(), data.end());
    std::sort(v.begin(), v.end());
    const double h = (v.size() - 1) * p / 100.0;
    const std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= v.size()) return v.back();
    const double frac = h - static_cast<double>(lo);
    return v[lo] + frac * (v[lo + 1] - v[lo]);
}

EnsembleStats ensemble_scan(CoherenceParam lambda, double phi_l,
                            std::span<const double> grid, const NoiseSpec& noise) {
    noise.validate();
    if (grid.empty()) throw std::invalid_argument("ensemble_scan: empty grid");

    EnsembleStats out;
    out.lambda = lambda.value;
    out.phi_l = phi_l;
    out.noise = noise;
    out.grid.assign(grid.begin(), grid.end());

    const std::size_t np = grid.size();
    const int ns = noise.n_samples;
    // column-major: all samples of one grid point are contiguous
    std::vector<double> samples(np * static_cast<std::size_t>(ns));
    out.asymmetry.resize(ns);

    for (int s = 0; s < ns; ++s) {
        const PhaseFactors f = draw_phase_factors(noise, s);
        const double pl = phi_l * f.f_l;
        for (std::size_t i = 0; i < np; ++i)
            samples[i * ns + s] = signal(lambda, {pl, grid[i] * f.f_r});

        const double i1 = signal(lambda, {pl, (M_PI / 2) * f.f_r});
        const double i2 = signal(lambda, {pl, (3 * M_PI / 2) * f.f_r});
        const double denom = i1 + i2;
        out.asymmetry[s] = denom > 1e-300 ? (i1 - i2) / denom : 0.0;
    }

    out.mean.resize(np);
    out.stddev.resize(np);
    out.p05.resize(np);
    out.p25.resize(np);
    out.p50.resize(np);
    out.p75.resize(np);
    out.p95.resize(np);
    for (std::size_t i = 0; i < np; ++i) {
        const std::span<const double> col(samples.data() + i * ns, static_cast<std::size_t>(ns));
        double m = 0;
        for (double v : col) m += v;
        m /= ns;
        double var = 0;
        for (double v : col) var += (v - m) * (v - m);
        out.mean[i] = m;
        out.stddev[i] = ns > 1 ? std::sqrt(var / (ns - 1)) : 0.0;
        out.p05[i] = percentile(col, 5);
        out.p25[i] = percentile(col, 25);
        out.p50[i] = percentile(col, 50);
        out.p75[i] = percentile(col, 75);
        out.p95[i] = percentile(col, 95);
    }
    return out;
}

SeparationReport separation_report(const EnsembleStats& a, const EnsembleStats& b) {
    if (a.grid != b.grid) throw std::invalid_argument("separation_report: grids differ");
    if (!(a.noise == b.noise)) throw std::invalid_argument("separation_report: noise specs differ");

    const double med_a = percentile(a.asymmetry, 50);
    const double med_b = percentile(b.asymmetry, 50);
    const EnsembleStats& lower = med_a <= med_b ? a : b;
    const EnsembleStats& higher = med_a <= med_b ? b : a;

    SeparationReport rep;
    rep.gap = percentile(higher.asymmetry, 5) - percentile(lower.asymmetry, 95);
    rep.distinguishable = rep.gap > 0;
    return rep;
}

}  // namespace sgtwin
