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

#include "wmphase/averaged.h"

#include <cmath>
#include <vector>

#include "wmphase/error.h"

namespace wmphase {

AveragedResult AveragedResult::from(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw Error(ErrorCode::kNonFinite, "non-finite averaged amplitude");
    }
    AveragedResult r;
    r.amplitude = z;
    double m = std::abs(z);
    r.alpha = m == 0 ? INFINITY : -std::log(m);
    if (m > 0) {
        double half = std::arg(z) / 2;  // in [-pi/2, pi/2]
        r.chi_bar = half <= -kPi / 2 ? half + kPi : half;
    }
    return r;
}

CMat4 generator(const ProtocolParams &pp) {
    double ct = std::cos(pp.theta);
    Complex s(0, -kPi * pp.d * std::sin(pp.theta));
    Complex w = -2.0 * Complex(pp.c, pp.a);
    CMat4 g;
    g(0, 0) = Complex(0, 2 * kPi * pp.d * ct);
    g(0, 1) = s;
    g(0, 2) = s;
    g(1, 0) = s;
    g(1, 1) = w;
    g(1, 3) = s;
    g(2, 0) = s;
    g(2, 2) = w;
    g(2, 3) = s;
    g(3, 1) = s;
    g(3, 2) = s;
    g(3, 3) = Complex(0, -2 * kPi * pp.d * ct - 4 * pp.a);
    return g;
}

CMat4 transfer_matrix(const ProtocolParams &pp, KrausModel model) {
    CMat2 dr = delta_r(pp);
    CMat4 sum = kron(kraus_model(pp, 0, model), kraus_model(pp, 0, model)) +
                kron(kraus_model(pp, 1, model), kraus_model(pp, 1, model));
    return sum * kron(dr, dr);
}

Complex averaged_limit_amplitude(double c, double a, double theta, int d) {
    return mat_exp_4(generator({c, a, theta, d, std::nullopt}))(0, 0);
}

AveragedResult averaged_amplitude(const ProtocolParams &pp) {
    pp.validate();
    if (!pp.infinite()) {
        throw Error(ErrorCode::kInvalidArgument, "limit amplitude is the N -> infinity value " + pp.describe());
    }
    Complex z = mat_exp_4(generator(pp))(0, 0);
    if (std::abs(z) < 1e-14) {
        throw Error(ErrorCode::kUndefinedPhase, "averaged amplitude vanishes (critical point) " + pp.describe());
    }
    return AveragedResult::from(z);
}

// Depth-first enumeration sharing prefixes: each node holds the state after k weak readouts.
static Complex brute_force_sum(const ProtocolParams &pp, KrausModel model) {
    int64_t n = pp.steps();
    CMat2 dr = delta_r(pp);
    Complex m0 = kraus_model(pp, 0, model)(1, 1);
    Complex m1 = n > 0 ? kraus_model(pp, 1, model)(1, 1) : Complex{};
    std::vector<CVec2> level(n + 1);
    level[0] = dr * CVec2{1.0, 0.0};
    Complex total = 0;
    // bits encodes r_1..r_k in the low k bits; walk all leaves in lexicographic order.
    uint64_t leaves = uint64_t{1} << n;
    int64_t depth = 0;
    for (uint64_t leaf = 0; leaf < leaves; leaf++) {
        // Rebuild from the deepest level shared with the previous leaf.
        if (leaf != 0) {
            int64_t flipped = 0;
            uint64_t diff = leaf ^ (leaf - 1);
            while (diff >>= 1) {
                flipped++;
            }
            depth = n - 1 - flipped;
        }
        for (int64_t k = depth; k < n; k++) {
            bool one = (leaf >> (n - 1 - k)) & 1;
            CVec2 v = level[k];
            if (one) {
                v = {0.0, v[1] * m1};
            } else {
                v[1] *= m0;
            }
            level[k + 1] = dr * v;
        }
        Complex amp = level[n][0];
        total += amp * amp;
    }
    return total;
}

AveragedResult averaged_finite_n(const ProtocolParams &pp, AveragedMethod method, KrausModel model) {
    pp.validate();
    int64_t n = pp.steps();
    if (method == AveragedMethod::kBruteForce) {
        if (n > 20) {
            throw Error(ErrorCode::kTooLargeForBruteForce, "brute force needs N <= 20 " + pp.describe());
        }
        return AveragedResult::from(brute_force_sum(pp, model));
    }
    CMat2 dr = delta_r(pp);
    CMat4 lead = kron(dr, dr);
    CMat4 chain = n > 0 ? lead * mat_pow(transfer_matrix(pp, model), (uint64_t)n) : lead;
    return AveragedResult::from(chain(0, 0));
}

PhaseCurve averaged_phase_curve(double c, double a, int d, int grid_hint) {
    ProtocolParams pp{c, a, 0.0, d, std::nullopt};
    pp.validate();
    if (grid_hint < 16) {
        throw Error(ErrorCode::kInvalidArgument, "grid_hint must be >= 16 " + pp.describe());
    }
    return trace_phase_curve(
        [&](double theta) {
            return averaged_limit_amplitude(c, a, theta, d);
        },
        grid_hint,
        pp.describe());
}

int averaged_winding(const PhaseCurve &curve) {
    return winding_number(curve);
}

}  // namespace wmphase
