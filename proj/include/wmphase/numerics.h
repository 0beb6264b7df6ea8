// Copyright 2026 The wmphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WMPHASE_NUMERICS_H
#define WMPHASE_NUMERICS_H

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <numbers>
#include <utility>

namespace wmphase {

using Complex = std::complex<double>;

constexpr double kPi = std::numbers::pi;

/// Dense row-major square complex matrix of fixed size.
template <size_t N>
struct SquareMatrix {
    std::array<Complex, N * N> e{};

    static SquareMatrix zero() {
        return {};
    }
    static SquareMatrix identity() {
        SquareMatrix m;
        for (size_t k = 0; k < N; k++) {
            m(k, k) = 1.0;
        }
        return m;
    }
    static SquareMatrix diag(const std::array<Complex, N> &d) {
        SquareMatrix m;
        for (size_t k = 0; k < N; k++) {
            m(k, k) = d[k];
        }
        return m;
    }

    Complex &operator()(size_t r, size_t c) {
        return e[r * N + c];
    }
    const Complex &operator()(size_t r, size_t c) const {
        return e[r * N + c];
    }

    SquareMatrix operator*(const SquareMatrix &other) const {
        SquareMatrix out;
        for (size_t r = 0; r < N; r++) {
            for (size_t k = 0; k < N; k++) {
                Complex a = (*this)(r, k);
                if (a == Complex{}) {
                    continue;
                }
                for (size_t c = 0; c < N; c++) {
                    out(r, c) += a * other(k, c);
                }
            }
        }
        return out;
    }
    std::array<Complex, N> operator*(const std::array<Complex, N> &v) const {
        std::array<Complex, N> out{};
        for (size_t r = 0; r < N; r++) {
            for (size_t c = 0; c < N; c++) {
                out[r] += (*this)(r, c) * v[c];
            }
        }
        return out;
    }
    SquareMatrix operator+(const SquareMatrix &other) const {
        SquareMatrix out = *this;
        for (size_t k = 0; k < N * N; k++) {
            out.e[k] += other.e[k];
        }
        return out;
    }
    SquareMatrix operator-(const SquareMatrix &other) const {
        SquareMatrix out = *this;
        for (size_t k = 0; k < N * N; k++) {
            out.e[k] -= other.e[k];
        }
        return out;
    }
    SquareMatrix operator*(Complex s) const {
        SquareMatrix out = *this;
        for (auto &x : out.e) {
            x *= s;
        }
        return out;
    }

    SquareMatrix adjoint() const {
        SquareMatrix out;
        for (size_t r = 0; r < N; r++) {
            for (size_t c = 0; c < N; c++) {
                out(c, r) = std::conj((*this)(r, c));
            }
        }
        return out;
    }
    SquareMatrix conjugate() const {
        SquareMatrix out = *this;
        for (auto &x : out.e) {
            x = std::conj(x);
        }
        return out;
    }

    /// Largest entry modulus.
    double max_abs() const {
        double m = 0;
        for (const auto &x : e) {
            m = std::max(m, std::abs(x));
        }
        return m;
    }
    /// Induced infinity norm (max row sum).
    double inf_norm() const {
        double m = 0;
        for (size_t r = 0; r < N; r++) {
            double s = 0;
            for (size_t c = 0; c < N; c++) {
                s += std::abs((*this)(r, c));
            }
            m = std::max(m, s);
        }
        return m;
    }
    bool is_finite() const {
        for (const auto &x : e) {
            if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
                return false;
            }
        }
        return true;
    }
};

using CMat2 = SquareMatrix<2>;
using CMat4 = SquareMatrix<4>;
using CVec2 = std::array<Complex, 2>;
using CVec4 = std::array<Complex, 4>;

template <size_t N>
double max_abs_diff(const SquareMatrix<N> &a, const SquareMatrix<N> &b) {
    return (a - b).max_abs();
}

/// Kronecker product, index (2i+j, 2k+l) = a(i,k) b(j,l).
CMat4 kron(const CMat2 &a, const CMat2 &b);

/// m^p by repeated squaring.
template <size_t N>
SquareMatrix<N> mat_pow(SquareMatrix<N> m, uint64_t p) {
    SquareMatrix<N> acc = SquareMatrix<N>::identity();
    while (p) {
        if (p & 1) {
            acc = acc * m;
        }
        p >>= 1;
        if (p) {
            m = m * m;
        }
    }
    return acc;
}

/// Shortest decimal text that parses back to x.
std::string format_real(double x);

/// Wraps an angle into (-pi, pi].
double wrap_angle(double x);

/// Matrix exponential by scaling and squaring of a truncated Taylor series.
/// Throws NonFinite if g has NaN/Inf entries.
CMat4 mat_exp_4(const CMat4 &g, double tol = 1e-10);
CMat2 mat_exp_2(const CMat2 &g, double tol = 1e-10);

/// Bisection root of f on [lo, hi]. Requires f(lo) f(hi) <= 0, else throws NoSignChange.
double solve_scalar_root(const std::function<double(double)> &f, double lo, double hi, double tol = 1e-12);

struct Newton2dOptions {
    double tol = 1e-10;
    int max_iter = 200;
    double fd_step = 1e-7;
};

/// Damped Newton on (Re f, Im f) with a central-difference Jacobian.
/// Throws NoConvergence when the iteration cap is hit or no descent step exists.
std::pair<double, double> solve_complex_zero_2d(
    const std::function<Complex(double, double)> &f, std::pair<double, double> seed, const Newton2dOptions &options);
std::pair<double, double> solve_complex_zero_2d(
    const std::function<Complex(double, double)> &f, std::pair<double, double> seed, double tol = 1e-10);

}  // namespace wmphase

#endif
