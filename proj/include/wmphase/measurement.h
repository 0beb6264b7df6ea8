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

#ifndef WMPHASE_MEASUREMENT_H
#define WMPHASE_MEASUREMENT_H

#include <cstdint>
#include <optional>
#include <string>

#include "wmphase/numerics.h"

namespace wmphase {

/// Detector coupling g, polarization angles theta_d and phi_d.
struct DetectorParams {
    double g = 0;
    double theta_d = kPi / 2;
    double phi_d = -kPi / 2;
};

struct MeasurementAxis {
    double theta_s = 0;
    double phi_s = 0;
};

/// One protocol run. An empty n means the N -> infinity limit.
struct ProtocolParams {
    double c = 0;
    double a = 0;
    double theta = 0;
    int d = 1;
    std::optional<int64_t> n;

    /// Throws InvalidArgument when c < 0, theta outside [0, pi], d not +-1, n < 0, or non-finite values.
    void validate() const;
    /// Returns n, or throws InfiniteN.
    int64_t steps() const;
    bool infinite() const {
        return !n.has_value();
    }
    /// "(C=.., A=.., theta=.., d=.., N=..)" for diagnostics.
    std::string describe() const;

    ProtocolParams with_n(std::optional<int64_t> new_n) const {
        ProtocolParams p = *this;
        p.n = new_n;
        return p;
    }
};

/// Unnormalized two-component state in the computational basis.
struct QubitState {
    Complex amp0;
    Complex amp1;

    double norm_sq() const {
        return std::norm(amp0) + std::norm(amp1);
    }
    bool is_null() const {
        return norm_sq() == 0;
    }
};

/// Finite-N back-action used by chain computations.
/// kScaled: the leading-order scaled matrices (not exactly complete).
/// kExact: the same r=0 matrix with M^(1) completed so that sum M^dag M = I; equivalent to a finite detector.
enum class KrausModel {
    kScaled,
    kExact,
};

CMat2 kraus_finite(const DetectorParams &p, int r);
CMat2 kraus_scaled(const ProtocolParams &pp, int r);
CMat2 kraus_exact(const ProtocolParams &pp, int r);
/// Dispatches on the model. Matrices are in the frame of the measurement axis.
CMat2 kraus_model(const ProtocolParams &pp, int r, KrausModel model);
/// Finite detector whose Kraus pair equals kraus_exact(pp, .).
DetectorParams detector_for(const ProtocolParams &pp);

CMat2 rotation(const MeasurementAxis &ax);
/// Axis k of the protocol, for 0 <= k <= N+1 (k = 0 and k = N+1 are the initial axis).
MeasurementAxis axis_sequence(const ProtocolParams &pp, int64_t k);
/// R(n_k) R^-1(n_{k-1}); the same for every k.
CMat2 delta_r(const ProtocolParams &pp);
/// R^-1(n) M R(n): a frame-k Kraus matrix expressed in the computational basis.
CMat2 kraus_on_axis(const CMat2 &kraus, const MeasurementAxis &ax);

/// cos(theta/2)|0> + sin(theta/2)|1>, the +1 eigenstate of the initial axis.
QubitState initial_state(double theta);
QubitState apply(const CMat2 &m, const QubitState &s);
/// <a|b>
Complex inner(const QubitState &a, const QubitState &b);
/// <psi|M^dag M|psi> / <psi|psi>. Throws NullState for a zero state.
double born_probability(const QubitState &state, const CMat2 &kraus);

}  // namespace wmphase

#endif
