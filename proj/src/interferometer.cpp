#include "sgtwin/interferometer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sgtwin/spinops.hpp"

namespace sgtwin {

namespace {

constexpr int kLeft = 0;
constexpr int kRight = 1;

inline int sided_index(int s1, int m1, int s2, int m2) {
    return 18 * s1 + 6 * m1 + 3 * s2 + m2;
}

// Per-atom spin projector of the polarizer on each side. Basis index
// 0 <-> m=+1, 1 <-> m=0, 2 <-> m=-1: the left side drops m=+1, the right
// side drops m=-1.
inline bool polarizer_keeps(int side, int m) {
    return side == kLeft ? (m != 0) : (m != 2);
}

void require_finite(const PhaseSettings& phases) {
    if (!std::isfinite(phases.phi_l) || !std::isfinite(phases.phi_r))
        throw std::invalid_argument("phase settings must be finite");
}

// Side state (|LR> + |RL>)/sqrt(2): amplitude per (s1, s2).
inline double side_amp(int s1, int s2) {
    return s1 != s2 ? 1.0 / std::sqrt(2.0) : 0.0;
}

Mat3 masked_device(const Mat3& w, int side) {
    Mat3 a = w;
    const int dropped = (side == kLeft) ? 0 : 2;
    for (int r = 0; r < 3; ++r) a(r, dropped) = 0.0;
    return a;
}

}  // namespace

double SidedDensity::trace() const { return mat.trace().real(); }

SidedDensity initial_state(CoherenceParam lambda) {
    const TwoAtomDensity r0 = rho0(lambda);
    SidedDensity out;
    const int sides[2][2] = {{kLeft, kRight}, {kRight, kLeft}};
    for (const auto& a : sides) {
        for (const auto& b : sides) {
            const double w = side_amp(a[0], a[1]) * side_amp(b[0], b[1]);
            for (int m1 = 0; m1 < 3; ++m1)
                for (int m2 = 0; m2 < 3; ++m2)
                    for (int n1 = 0; n1 < 3; ++n1)
                        for (int n2 = 0; n2 < 3; ++n2)
                            out.mat(sided_index(a[0], m1, a[1], m2),
                                    sided_index(b[0], n1, b[1], n2)) +=
                                w * r0(3 * m1 + m2, 3 * n1 + n2);
        }
    }
    return out;
}

Mat36 polarizer_operator() {
    Mat36 p;
    for (int s1 = 0; s1 < 2; ++s1)
        for (int m1 = 0; m1 < 3; ++m1)
            for (int s2 = 0; s2 < 2; ++s2)
                for (int m2 = 0; m2 < 3; ++m2)
                    if (polarizer_keeps(s1, m1) && polarizer_keeps(s2, m2)) {
                        const int i = sided_index(s1, m1, s2, m2);
                        p(i, i) = 1.0;
                    }
    return p;
}

Mat36 phase_object_operator(const PhaseSettings& phases) {
    require_finite(phases);
    const Mat3 w[2] = {expi_fx(phases.phi_l), expi_fx(phases.phi_r)};
    CMat<6> atom;
    for (int s = 0; s < 2; ++s)
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) atom(3 * s + r, 3 * s + c) = w[s](r, c);
    return kron(atom, atom);
}

Vec36 detection_state() {
    Vec36 v;
    const double a = 1.0 / std::sqrt(2.0);
    v[sided_index(kLeft, 0, kRight, 2)] = a;   // |L,+1>|R,-1>
    v[sided_index(kRight, 2, kLeft, 0)] = a;   // |R,-1>|L,+1>
    return v;
}

Mat36 joint_exchange_operator() {
    Mat36 e;
    for (int s1 = 0; s1 < 2; ++s1)
        for (int m1 = 0; m1 < 3; ++m1)
            for (int s2 = 0; s2 < 2; ++s2)
                for (int m2 = 0; m2 < 3; ++m2)
                    e(sided_index(s2, m2, s1, m1), sided_index(s1, m1, s2, m2)) = 1.0;
    return e;
}

Evolved evolve(CoherenceParam lambda, const PhaseSettings& phases) {
    require_finite(phases);
    const TwoAtomDensity r0 = rho0(lambda);

    // Survival under the polarizer: the initial state only populates the
    // LR and RL side sectors, each with weight 1/2.
    double survival = 0;
    const int sides[2][2] = {{kLeft, kRight}, {kRight, kLeft}};
    for (const auto& sc : sides) {
        for (int m1 = 0; m1 < 3; ++m1)
            for (int m2 = 0; m2 < 3; ++m2)
                if (polarizer_keeps(sc[0], m1) && polarizer_keeps(sc[1], m2))
                    survival += 0.5 * r0(3 * m1 + m2, 3 * m1 + m2).real();
    }
    if (survival < 1e-14)
        throw DegenerateStateError("evolve: polarizer leaves zero survival probability");

    // Side-diagonal device action: per atom W(phi_side) after the
    // polarizer mask, combined per side sector as a 9x9 operator.
    const Mat3 w_l = expi_fx(phases.phi_l);
    const Mat3 w_r = expi_fx(phases.phi_r);
    const Mat3 dev[2] = {masked_device(w_l, kLeft), masked_device(w_r, kRight)};

    Mat9 b[2];  // 0: LR sector, 1: RL sector
    b[0] = kron(dev[kLeft], dev[kRight]);
    b[1] = kron(dev[kRight], dev[kLeft]);

    Mat9 t[2];
    t[0] = b[0] * r0;
    t[1] = b[1] * r0;

    Evolved out{SidedDensity{}, survival};
    const double scale = 0.5 / survival;
    for (int sa = 0; sa < 2; ++sa) {
        for (int sb = 0; sb < 2; ++sb) {
            const Mat9 blk = mul_adjB(t[sa], b[sb]);
            const int* ra = sides[sa];
            const int* rb = sides[sb];
            for (int m1 = 0; m1 < 3; ++m1)
                for (int m2 = 0; m2 < 3; ++m2)
                    for (int n1 = 0; n1 < 3; ++n1)
                        for (int n2 = 0; n2 < 3; ++n2)
                            out.rho.mat(sided_index(ra[0], m1, ra[1], m2),
                                        sided_index(rb[0], n1, rb[1], n2)) =
                                scale * blk(3 * m1 + m2, 3 * n1 + n2);
        }
    }
    return out;
}

double coincidence(const SidedDensity& rho) {
    static const Vec36 det = detection_state();
    return kernels::quad_form(36, rho.mat.data(), det.data()).real();
}

double signal(CoherenceParam lambda, const PhaseSettings& phases) {
    return coincidence(evolve(lambda, phases).rho);
}

double analytic_signal(CoherenceParam lambda, const PhaseSettings& phases, double c) {
    require_finite(phases);
    const double sl = std::sin(phases.phi_l / 2);
    const double sr = std::sin(phases.phi_r / 2);
    const double cos_l = std::cos(phases.phi_l);
    const double cos_r = std::cos(phases.phi_r);
    const double bracket = 4.0 * lambda.value * std::sin(phases.phi_l) * std::sin(phases.phi_r) +
                           cos_l * (5.0 * cos_r + 3.0) + 3.0 * cos_r + 5.0;
    return c * sl * sl * sr * sr * bracket;
}

double evolved_overlap(const PhaseSettings& phases) {
    require_finite(phases);
    const Mat36 u = phase_object_operator(phases) * polarizer_operator();
    const double side = 1.0 / std::sqrt(2.0);

    auto embed = [&](const TwoAtomSpinState& spin) {
        Vec36 v;
        const int sides[2][2] = {{kLeft, kRight}, {kRight, kLeft}};
        for (const auto& sc : sides)
            for (int m1 = 0; m1 < 3; ++m1)
                for (int m2 = 0; m2 < 3; ++m2)
                    v[sided_index(sc[0], m1, sc[1], m2)] = side * spin[3 * m1 + m2];
        return v;
    };

    const Vec36 v0 = u * embed(psi0());
    const Vec36 v1 = u * embed(psi1());
    const double n0 = v0.norm();
    const double n1 = v1.norm();
    if (n0 < 1e-14 || n1 < 1e-14)
        throw DegenerateStateError("evolved_overlap: evolved state has vanishing norm");
    return std::abs(dot(v0, v1)) / (n0 * n1);
}

std::vector<double> uniform_grid(int n) {
    if (n < 1) throw std::invalid_argument("uniform_grid: need at least one point");
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = 2.0 * M_PI * i / n;
    return g;
}

namespace {

void validate_grid(std::span<const double> grid) {
    if (grid.empty()) throw std::invalid_argument("scan grid is empty");
    const double two_pi = 2.0 * M_PI;
    double prev = -1.0;
    for (double v : grid) {
        if (!(v >= 0.0 && v <= two_pi))
            throw std::invalid_argument("scan grid must lie within [0, 2pi]");
        if (v <= prev) throw std::invalid_argument("scan grid must be strictly increasing");
        prev = v;
    }
}

}  // namespace

ScanResult scan(CoherenceParam lambda, double phi_l, std::span<const double> grid) {
    if (!std::isfinite(phi_l)) throw std::invalid_argument("phi_l must be finite");
    validate_grid(grid);

    ScanResult out;
    out.phi_l = phi_l;
    out.lambda = lambda.value;
    out.phi_r.assign(grid.begin(), grid.end());
    out.intensity.resize(grid.size());

    double num = 0, den = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const PhaseSettings ph{phi_l, grid[i]};
        out.intensity[i] = signal(lambda, ph);
        const double g = analytic_signal(lambda, ph, 1.0);
        num += out.intensity[i] * g;
        den += g * g;
    }
    out.normalization = den > 1e-300 ? num / den : 0.0;
    return out;
}

LambdaEstimate estimate_lambda_from_ratio(double i_first, double i_second) {
    if (!(i_first > 0) || !(i_second > 0) || !std::isfinite(i_first) || !std::isfinite(i_second))
        throw std::invalid_argument("peak intensities must be positive finite");
    LambdaEstimate est;
    est.raw = 1.25 * (i_first - i_second) / (i_first + i_second);
    est.lambda = std::clamp(est.raw, 0.0, 1.0);
    est.clamped = est.raw < 0.0 || est.raw > 1.0;
    return est;
}

namespace {

struct FitEval {
    double scale;
    double residual;
};

FitEval eval_fit(const ScanResult& sc, double lambda) {
    double num = 0, den = 0;
    std::vector<double> model(sc.phi_r.size());
    for (std::size_t i = 0; i < sc.phi_r.size(); ++i) {
        model[i] = analytic_signal(lambda, {sc.phi_l, sc.phi_r[i]}, 1.0);
        num += sc.intensity[i] * model[i];
        den += model[i] * model[i];
    }
    const double c = den > 1e-300 ? num / den : 0.0;
    double res = 0;
    for (std::size_t i = 0; i < sc.phi_r.size(); ++i) {
        const double d = sc.intensity[i] - c * model[i];
        res += d * d;
    }
    return {c, res};
}

}  // namespace

LambdaFit fit_lambda(const ScanResult& scan_data) {
    if (scan_data.phi_r.size() < 8 || scan_data.phi_r.size() != scan_data.intensity.size())
        throw std::invalid_argument("fit_lambda: need at least 8 scan points");
    double peak = 0;
    for (double v : scan_data.intensity) peak = std::max(peak, std::abs(v));
    if (peak < 1e-14) throw FitError("fit_lambda: scan carries no signal");

    // Coarse bracket, then golden-section; the scale is linear and is
    // re-solved in closed form at every candidate lambda.
    constexpr int kCoarse = 64;
    double best_l = 0, best_r = std::numeric_limits<double>::max();
    for (int i = 0; i <= kCoarse; ++i) {
        const double l = static_cast<double>(i) / kCoarse;
        const double r = eval_fit(scan_data, l).residual;
        if (r < best_r) {
            best_r = r;
            best_l = l;
        }
    }
    double lo = std::max(0.0, best_l - 1.0 / kCoarse);
    double hi = std::min(1.0, best_l + 1.0 / kCoarse);
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - gr * (hi - lo);
    double x2 = lo + gr * (hi - lo);
    double f1 = eval_fit(scan_data, x1).residual;
    double f2 = eval_fit(scan_data, x2).residual;
    while (hi - lo > 1e-12) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = eval_fit(scan_data, x1).residual;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = eval_fit(scan_data, x2).residual;
        }
    }
    const double lambda = 0.5 * (lo + hi);
    const FitEval fin = eval_fit(scan_data, lambda);
    if (!(fin.scale > 0)) throw FitError("fit_lambda: non-positive fitted scale");
    return {lambda, fin.scale, fin.residual};
}

Peak refined_peak(std::span<const double> grid, std::span<const double> values,
                  std::size_t lo, std::size_t hi) {
    if (lo >= hi || hi > values.size() || grid.size() != values.size())
        throw std::invalid_argument("refined_peak: bad search range");
    std::size_t arg = lo;
    for (std::size_t i = lo; i < hi; ++i)
        if (values[i] > values[arg]) arg = i;

    Peak p{grid[arg], values[arg], arg};
    if (arg == 0 || arg + 1 >= values.size()) return p;

    const double vm = values[arg - 1], v0 = values[arg], vp = values[arg + 1];
    const double denom = vm - 2.0 * v0 + vp;
    if (std::abs(denom) < 1e-300) return p;
    const double delta = 0.5 * (vm - vp) / denom;
    const double h = grid[arg + 1] - grid[arg];
    p.position = grid[arg] + delta * h;
    p.height = v0 - 0.25 * (vm - vp) * delta;
    return p;
}

}  // namespace sgtwin
