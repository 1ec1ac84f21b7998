#include "sgtwin/twinstate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sgtwin {

CoherenceParam::CoherenceParam(double v) : value(v) {
    if (!(v >= 0.0 && v <= 1.0))
        throw std::invalid_argument("coherence parameter must lie in [0, 1]");
}

TwoAtomSpinState psi0() {
    TwoAtomSpinState s;
    s[4] = 1.0;  // |0,0>
    return s;
}

TwoAtomSpinState psi1() {
    TwoAtomSpinState s;
    const double a = 1.0 / std::sqrt(2.0);
    s[2] = a;  // |+1,-1>
    s[6] = a;  // |-1,+1>
    return s;
}

TwoAtomSpinState singlet() {
    const double a0 = -std::sqrt(1.0 / 3.0);
    const double a1 = std::sqrt(2.0 / 3.0);
    return a0 * psi0() + a1 * psi1();
}

Mat9 exchange_operator() {
    Mat9 m;
    for (int i1 = 0; i1 < 3; ++i1)
        for (int i2 = 0; i2 < 3; ++i2) m(3 * i2 + i1, 3 * i1 + i2) = 1.0;
    return m;
}

TwoAtomDensity rho0(CoherenceParam lambda) {
    const TwoAtomSpinState s0 = psi0();
    const TwoAtomSpinState s1 = psi1();
    const double w = lambda.value * std::sqrt(2.0) / 3.0;
    TwoAtomDensity r = (cplx{1.0 / 3.0} * outer(s0, s0)) + (cplx{2.0 / 3.0} * outer(s1, s1));
    r = r - (cplx{w} * (outer(s0, s1) + outer(s1, s0)));
    return r;
}

double purity(const TwoAtomDensity& rho) {
    // Tr(rho^2) = sum_ij rho_ij rho_ji
    cplx t = 0;
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) t += rho(i, j) * rho(j, i);
    return t.real();
}

double linear_entropy(const TwoAtomDensity& rho) { return 1.0 - purity(rho); }

std::vector<double> hermitian_eigenvalues(int n, const cplx* a) {
    std::vector<cplx> m(a, a + static_cast<std::size_t>(n) * n);
    // work on the Hermitian part
    for (int r = 0; r < n; ++r) {
        m[r * n + r] = cplx{m[r * n + r].real(), 0.0};
        for (int c = r + 1; c < n; ++c) {
            const cplx h = 0.5 * (m[r * n + c] + std::conj(m[c * n + r]));
            m[r * n + c] = h;
            m[c * n + r] = std::conj(h);
        }
    }

    double scale = 0;
    for (int i = 0; i < n * n; ++i) scale = std::max(scale, std::abs(m[i]));
    if (scale == 0) return std::vector<double>(n, 0.0);

    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(m[p * n + q]));
        if (off < 1e-15 * scale) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx apq = m[p * n + q];
                const double b = std::abs(apq);
                if (b < 1e-300) continue;
                const cplx u = apq / b;  // phase of the pivot
                const double app = m[p * n + p].real();
                const double aqq = m[q * n + q].real();
                const double theta = (app - aqq) / (2.0 * b);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // columns: new_p = c*u*col_p + s*col_q, new_q = -s*u*col_p + c*col_q
                for (int i = 0; i < n; ++i) {
                    const cplx ip = m[i * n + p];
                    const cplx iq = m[i * n + q];
                    m[i * n + p] = c * u * ip + s * iq;
                    m[i * n + q] = -s * u * ip + c * iq;
                }
                // rows: new_p = c*conj(u)*row_p + s*row_q, new_q = -s*conj(u)*row_p + c*row_q
                const cplx uc = std::conj(u);
                for (int i = 0; i < n; ++i) {
                    const cplx pi = m[p * n + i];
                    const cplx qi = m[q * n + i];
                    m[p * n + i] = c * uc * pi + s * qi;
                    m[q * n + i] = -s * uc * pi + c * qi;
                }
                m[p * n + q] = 0;
                m[q * n + p] = 0;
            }
        }
    }

    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = m[i * n + i].real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

DensityCheck check_density(int n, const cplx* rho, double tol, double positivity_tol) {
    DensityCheck out;
    double herm = 0;
    cplx tr = 0;
    for (int r = 0; r < n; ++r) {
        tr += rho[r * n + r];
        for (int c = 0; c < n; ++c)
            herm = std::max(herm, std::abs(rho[r * n + c] - std::conj(rho[c * n + r])));
    }
    out.hermiticity_error = herm;
    out.trace_error = std::abs(tr - cplx{1.0});
    const auto ev = hermitian_eigenvalues(n, rho);
    out.min_eigenvalue = ev.empty() ? 0.0 : ev.front();

    out.hermitian = herm <= tol;
    out.unit_trace = out.trace_error <= tol;
    out.positive = out.min_eigenvalue >= -positivity_tol;
    return out;
}

}  // namespace sgtwin
