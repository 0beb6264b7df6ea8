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

#include "wmphase/numerics.h"

#include <charconv>
#include <cmath>

#include "wmphase/error.h"

namespace wmphase {

CMat4 kron(const CMat2 &a, const CMat2 &b) {
    CMat4 out;
    for (size_t i = 0; i < 2; i++) {
        for (size_t j = 0; j < 2; j++) {
            for (size_t k = 0; k < 2; k++) {
                for (size_t l = 0; l < 2; l++) {
                    out(2 * i + j, 2 * k + l) = a(i, k) * b(j, l);
                }
            }
        }
    }
    return out;
}

std::string format_real(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

double wrap_angle(double x) {
    double y = std::remainder(x, 2 * kPi);
    if (y <= -kPi) {
        y += 2 * kPi;
    }
    return y;
}

template <size_t N>
static SquareMatrix<N> mat_exp(const SquareMatrix<N> &g, double tol) {
    if (!g.is_finite()) {
        throw Error(ErrorCode::kNonFinite, "matrix exponential of a non-finite matrix");
    }
    if (!(tol > 0)) {
        throw Error(ErrorCode::kInvalidArgument, "matrix exponential tolerance must be positive");
    }
    int squarings = 0;
    double norm = g.inf_norm();
    while (norm >= 0.5) {
        norm *= 0.5;
        squarings++;
    }
    SquareMatrix<N> x = g * Complex(std::ldexp(1.0, -squarings));
    SquareMatrix<N> sum = SquareMatrix<N>::identity();
    SquareMatrix<N> term = sum;
    double stop = std::min(1e-18, tol);
    for (int k = 1; k < 100; k++) {
        term = (term * x) * Complex(1.0 / k);
        sum = sum + term;
        if (term.max_abs() < stop) {
            break;
        }
    }
    for (int k = 0; k < squarings; k++) {
        sum = sum * sum;
    }
    return sum;
}

CMat4 mat_exp_4(const CMat4 &g, double tol) {
    return mat_exp(g, tol);
}

CMat2 mat_exp_2(const CMat2 &g, double tol) {
    return mat_exp(g, tol);
}

double solve_scalar_root(const std::function<double(double)> &f, double lo, double hi, double tol) {
    if (!(lo < hi) || !(tol > 0)) {
        throw Error(ErrorCode::kInvalidArgument, "root bracket must satisfy lo < hi with tol > 0");
    }
    double flo = f(lo);
    double fhi = f(hi);
    if (!std::isfinite(flo) || !std::isfinite(fhi)) {
        throw Error(ErrorCode::kNonFinite, "root function is not finite at the bracket ends");
    }
    if (flo == 0) {
        return lo;
    }
    if (fhi == 0) {
        return hi;
    }
    if ((flo > 0) == (fhi > 0)) {
        throw Error(
            ErrorCode::kNoSignChange,
            "no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    // Width halves each pass; 2000 passes is far beyond any double bracket.
    for (int it = 0; it < 2000 && hi - lo > tol; it++) {
        double mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi) {
            break;
        }
        double fm = f(mid);
        if (fm == 0) {
            return mid;
        }
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return lo + (hi - lo) / 2;
}

std::pair<double, double> solve_complex_zero_2d(
    const std::function<Complex(double, double)> &f, std::pair<double, double> seed, const Newton2dOptions &options) {
    auto [x, y] = seed;
    Complex fz = f(x, y);
    for (int it = 0; it < options.max_iter; it++) {
        if (!std::isfinite(std::abs(fz))) {
            break;
        }
        if (std::abs(fz) <= options.tol) {
            return {x, y};
        }
        double hx = options.fd_step * std::max(1.0, std::abs(x));
        double hy = options.fd_step * std::max(1.0, std::abs(y));
        Complex dfx = (f(x + hx, y) - f(x - hx, y)) / (2 * hx);
        Complex dfy = (f(x, y + hy) - f(x, y - hy)) / (2 * hy);
        double j11 = dfx.real(), j12 = dfy.real();
        double j21 = dfx.imag(), j22 = dfy.imag();
        double det = j11 * j22 - j12 * j21;
        if (det == 0 || !std::isfinite(det)) {
            break;
        }
        double dx = -(j22 * fz.real() - j12 * fz.imag()) / det;
        double dy = -(-j21 * fz.real() + j11 * fz.imag()) / det;

        double step = 1;
        bool moved = false;
        for (int k = 0; k < 40; k++, step *= 0.5) {
            Complex trial = f(x + step * dx, y + step * dy);
            if (std::abs(trial) < std::abs(fz)) {
                x += step * dx;
                y += step * dy;
                fz = trial;
                moved = true;
                break;
            }
        }
        if (!moved) {
            break;
        }
    }
    if (std::abs(fz) <= options.tol) {
        return {x, y};
    }
    throw Error(
        ErrorCode::kNoConvergence,
        "complex zero search from (" + std::to_string(seed.first) + ", " + std::to_string(seed.second) +
            ") stalled at |f| = " + std::to_string(std::abs(fz)));
}

std::pair<double, double> solve_complex_zero_2d(
    const std::function<Complex(double, double)> &f, std::pair<double, double> seed, double tol) {
    Newton2dOptions options;
    options.tol = tol;
    return solve_complex_zero_2d(f, seed, options);
}

}  // namespace wmphase
