#ifndef SGTWIN_SMALLMAT_HPP
#define SGTWIN_SMALLMAT_HPP

#include <array>
#include <cmath>
#include <complex>

#include "sgtwin/kernels.hpp"

// Fixed-size complex matrices and vectors. Value types, no allocation;
// products go through the runtime-dispatched kernels.

namespace sgtwin {

using cplx = std::complex<double>;

template <int N>
struct CVec {
    std::array<cplx, N> e{};

    static constexpr int dim = N;
    cplx& operator[](int i) { return e[i]; }
    const cplx& operator[](int i) const { return e[i]; }
    cplx* data() { return e.data(); }
    const cplx* data() const { return e.data(); }

    double norm() const {
        double s = 0;
        for (const auto& v : e) s += std::norm(v);
        return std::sqrt(s);
    }
};

template <int N>
struct CMat {
    std::array<cplx, N * N> e{};

    static constexpr int dim = N;
    cplx& operator()(int r, int c) { return e[r * N + c]; }
    const cplx& operator()(int r, int c) const { return e[r * N + c]; }
    cplx* data() { return e.data(); }
    const cplx* data() const { return e.data(); }

    static CMat identity() {
        CMat m;
        for (int i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }

    CMat adjoint() const {
        CMat m;
        for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c) m(r, c) = std::conj((*this)(c, r));
        return m;
    }

    cplx trace() const {
        cplx t = 0;
        for (int i = 0; i < N; ++i) t += (*this)(i, i);
        return t;
    }
};

template <int N>
CMat<N> operator*(const CMat<N>& a, const CMat<N>& b) {
    CMat<N> c;
    kernels::cmat_mul(N, a.data(), b.data(), c.data());
    return c;
}

// a * b^H without forming the adjoint
template <int N>
CMat<N> mul_adjB(const CMat<N>& a, const CMat<N>& b) {
    CMat<N> c;
    kernels::cmat_mul_adjB(N, a.data(), b.data(), c.data());
    return c;
}

template <int N>
CVec<N> operator*(const CMat<N>& a, const CVec<N>& x) {
    CVec<N> y;
    kernels::cmat_vec(N, a.data(), x.data(), y.data());
    return y;
}

template <int N>
CMat<N> operator+(const CMat<N>& a, const CMat<N>& b) {
    CMat<N> c;
    for (int i = 0; i < N * N; ++i) c.e[i] = a.e[i] + b.e[i];
    return c;
}

template <int N>
CMat<N> operator-(const CMat<N>& a, const CMat<N>& b) {
    CMat<N> c;
    for (int i = 0; i < N * N; ++i) c.e[i] = a.e[i] - b.e[i];
    return c;
}

template <int N>
CMat<N> operator*(cplx s, const CMat<N>& a) {
    CMat<N> c;
    for (int i = 0; i < N * N; ++i) c.e[i] = s * a.e[i];
    return c;
}

template <int N>
CVec<N> operator+(const CVec<N>& a, const CVec<N>& b) {
    CVec<N> c;
    for (int i = 0; i < N; ++i) c.e[i] = a.e[i] + b.e[i];
    return c;
}

template <int N>
CVec<N> operator*(cplx s, const CVec<N>& a) {
    CVec<N> c;
    for (int i = 0; i < N; ++i) c.e[i] = s * a.e[i];
    return c;
}

// <x|y> with conjugation on x
template <int N>
cplx dot(const CVec<N>& x, const CVec<N>& y) {
    return kernels::cvec_dot(N, x.data(), y.data());
}

template <int N>
CMat<N> outer(const CVec<N>& x, const CVec<N>& y) {
    CMat<N> m;
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c) m(r, c) = x[r] * std::conj(y[c]);
    return m;
}

template <int NA, int NB>
CMat<NA * NB> kron(const CMat<NA>& a, const CMat<NB>& b) {
    CMat<NA * NB> c;
    kernels::ckron(NA, NB, a.data(), b.data(), c.data());
    return c;
}

template <int N>
double max_abs(const CMat<N>& a) {
    double m = 0;
    for (const auto& v : a.e) m = std::max(m, std::abs(v));
    return m;
}

template <int N>
double max_abs_diff(const CMat<N>& a, const CMat<N>& b) {
    double m = 0;
    for (int i = 0; i < N * N; ++i) m = std::max(m, std::abs(a.e[i] - b.e[i]));
    return m;
}

using Vec3 = CVec<3>;
using Vec9 = CVec<9>;
using Vec36 = CVec<36>;
using Mat3 = CMat<3>;
using Mat9 = CMat<9>;
using Mat36 = CMat<36>;

}  // namespace sgtwin

#endif
