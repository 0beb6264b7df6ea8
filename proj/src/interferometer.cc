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

#include "wmphase/interferometer.h"

#include <cmath>

#include "wmphase/averaged.h"
#include "wmphase/error.h"
#include "wmphase/postselected.h"

namespace wmphase {

static double surviving_weight_brute_force(const ProtocolParams &pp, KrausModel model) {
    int64_t n = pp.steps();
    CMat2 dr = delta_r(pp);
    Complex m0 = n > 0 ? kraus_model(pp, 0, model)(1, 1) : Complex(1);
    Complex m1 = n > 0 ? kraus_model(pp, 1, model)(1, 1) : Complex{};
    double total = 0;
    for (uint64_t bits = 0; bits < (uint64_t{1} << n); bits++) {
        CVec2 v = dr * CVec2{1.0, 0.0};
        for (int64_t k = 0; k < n; k++) {
            if ((bits >> k) & 1) {
                v = {0.0, v[1] * m1};
            } else {
                v[1] *= m0;
            }
            v = dr * v;
        }
        total += std::norm(v[0]);
    }
    return total;
}

double surviving_weight(const ProtocolParams &pp, KrausModel model) {
    pp.validate();
    int64_t n = pp.steps();
    if (n > 10000) {
        throw Error(ErrorCode::kTooLargeForExactS, "surviving weight needs N <= 10^4 " + pp.describe());
    }
    if (n <= 14) {
        return surviving_weight_brute_force(pp, model);
    }
    CMat2 dr = delta_r(pp);
    CMat4 lead = kron(dr, dr.conjugate());
    CMat4 step = CMat4::zero();
    for (int r = 0; r < 2; r++) {
        CMat2 m = kraus_model(pp, r, model);
        step = step + kron(m, m.conjugate());
    }
    CMat4 chain = lead * mat_pow(step * lead, (uint64_t)n);
    return chain(0, 0).real();
}

static IntensityPair split(double i0, double base, Complex interference, double s) {
    if (!(i0 > 0)) {
        throw Error(ErrorCode::kInvalidArgument, "input intensity must be positive");
    }
    IntensityPair out;
    out.i0 = i0;
    out.surviving_weight = s;
    out.interference = interference;
    out.i1 = i0 / 2 * (base + interference.real());
    out.i2 = i0 / 2 * (base - interference.real());
    return out;
}

IntensityPair intensities_postselected(const ProtocolParams &pp, double i0, KrausModel model) {
    double s = surviving_weight(pp, model);
    Complex amp = amplitude_finite_n(pp, model).amplitude;
    return split(i0, 0.5 + s / 2, amp, s);
}

IntensityPair intensities_averaged(const ProtocolParams &pp, double i0, KrausModel model) {
    double s = surviving_weight(pp, model);
    Complex sum = averaged_finite_n(pp, AveragedMethod::kTransfer, model).amplitude;
    return split(i0, s, sum, s);
}

CMat2 kraus_mirrored(const DetectorParams &p, int r) {
    return kraus_finite(p, r).adjoint();
}

double verify_arm_identity(const ProtocolParams &pp, const ReadoutSequence &seq) {
    pp.validate();
    int64_t n = pp.steps();
    if ((int64_t)seq.bits.size() != n) {
        throw Error(ErrorCode::kInvalidArgument, "sequence length differs from N " + pp.describe());
    }
    CMat2 upper[2] = {CMat2::identity(), CMat2::zero()};
    CMat2 lower[2] = {CMat2::identity(), CMat2::zero()};
    if (n > 0) {
        DetectorParams det = detector_for(pp);
        for (int r = 0; r < 2; r++) {
            upper[r] = kraus_finite(det, r);
            lower[r] = kraus_mirrored(det, r);
        }
    }
    CMat2 sx;
    sx(0, 1) = 1;
    sx(1, 0) = 1;
    CMat2 r0 = rotation(axis_sequence(pp, 0));
    CMat2 flip = r0.adjoint() * sx * r0;

    QubitState psi0 = initial_state(pp.theta);
    QubitState up = psi0;
    QubitState low = apply(flip, psi0);
    for (int64_t k = 1; k <= n; k++) {
        MeasurementAxis ax = axis_sequence(pp, k);
        int r = seq.bits[(size_t)k - 1];
        if (r != 0 && r != 1) {
            throw Error(ErrorCode::kBadReadout, "readout must be 0 or 1 at step " + std::to_string(k));
        }
        up = apply(kraus_on_axis(upper[r], ax), up);
        // lower arm measures -n: sigma_x sandwiches the mirrored Kraus inside the rotated frame
        low = apply(kraus_on_axis(sx * lower[r] * sx, ax), low);
    }
    low = apply(flip, low);
    return std::abs(inner(psi0, low) - std::conj(inner(psi0, up)));
}

}  // namespace wmphase
