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

#include "wmphase/measurement.h"

#include <cmath>

#include "wmphase/error.h"

namespace wmphase {

void ProtocolParams::validate() const {
    auto bad = [&](const std::string &why) {
        throw Error(ErrorCode::kInvalidArgument, why + " " + describe());
    };
    if (!std::isfinite(c) || !std::isfinite(a) || !std::isfinite(theta)) {
        bad("non-finite parameter");
    }
    if (c < 0) {
        bad("measurement strength C must be >= 0");
    }
    if (theta < 0 || theta > kPi) {
        bad("theta must lie in [0, pi]");
    }
    if (d != 1 && d != -1) {
        bad("direction d must be +1 or -1");
    }
    if (n.has_value() && *n < 0) {
        bad("N must be >= 0");
    }
}

int64_t ProtocolParams::steps() const {
    if (!n.has_value()) {
        throw Error(ErrorCode::kInfiniteN, "finite N required " + describe());
    }
    return *n;
}

std::string ProtocolParams::describe() const {
    return "(C=" + format_real(c) + ", A=" + format_real(a) + ", theta=" + format_real(theta) +
           ", d=" + std::to_string(d) + ", N=" + (n.has_value() ? std::to_string(*n) : std::string("inf")) + ")";
}

static void check_readout(int r) {
    if (r != 0 && r != 1) {
        throw Error(ErrorCode::kBadReadout, "readout must be 0 or 1, got " + std::to_string(r));
    }
}

CMat2 kraus_finite(const DetectorParams &p, int r) {
    check_readout(r);
    CMat2 m;
    if (r == 0) {
        m(0, 0) = 1;
        m(1, 1) = Complex(std::cos(p.g), std::sin(p.g) * std::cos(p.theta_d));
    } else {
        m(1, 1) = Complex(0, std::sin(p.g) * std::sin(p.theta_d)) * std::polar(1.0, p.phi_d);
    }
    return m;
}

static int64_t positive_steps(const ProtocolParams &pp) {
    int64_t n = pp.steps();
    if (n < 1) {
        throw Error(ErrorCode::kInvalidArgument, "per-step Kraus matrices need N >= 1 " + pp.describe());
    }
    return n;
}

CMat2 kraus_scaled(const ProtocolParams &pp, int r) {
    check_readout(r);
    double n = (double)positive_steps(pp);
    CMat2 m;
    if (r == 0) {
        m(0, 0) = 1;
        m(1, 1) = std::exp(Complex(-2 * pp.c / n, -2 * pp.a / n));
    } else {
        m(1, 1) = std::sqrt(4 * pp.c / n);
    }
    return m;
}

CMat2 kraus_exact(const ProtocolParams &pp, int r) {
    check_readout(r);
    double n = (double)positive_steps(pp);
    CMat2 m;
    if (r == 0) {
        m(0, 0) = 1;
        m(1, 1) = std::exp(Complex(-2 * pp.c / n, -2 * pp.a / n));
    } else {
        m(1, 1) = std::sqrt(std::max(0.0, -std::expm1(-4 * pp.c / n)));
    }
    return m;
}

CMat2 kraus_model(const ProtocolParams &pp, int r, KrausModel model) {
    return model == KrausModel::kScaled ? kraus_scaled(pp, r) : kraus_exact(pp, r);
}

DetectorParams detector_for(const ProtocolParams &pp) {
    double n = (double)positive_steps(pp);
    Complex m = std::exp(Complex(-2 * pp.c / n, -2 * pp.a / n));
    DetectorParams p;
    p.g = std::acos(std::clamp(m.real(), -1.0, 1.0));
    double sg = std::sin(p.g);
    p.theta_d = sg > 0 ? std::acos(std::clamp(m.imag() / sg, -1.0, 1.0)) : kPi / 2;
    p.phi_d = -kPi / 2;
    return p;
}

CMat2 rotation(const MeasurementAxis &ax) {
    double ch = std::cos(ax.theta_s / 2);
    double sh = std::sin(ax.theta_s / 2);
    Complex ph = std::polar(1.0, -ax.phi_s);
    CMat2 m;
    m(0, 0) = ch;
    m(0, 1) = sh * ph;
    m(1, 0) = sh;
    m(1, 1) = -ch * ph;
    return m;
}

MeasurementAxis axis_sequence(const ProtocolParams &pp, int64_t k) {
    int64_t n = pp.steps();
    if (k < 0 || k > n + 1) {
        throw Error(
            ErrorCode::kIndexOutOfRange,
            "axis index " + std::to_string(k) + " outside [0, N+1] " + pp.describe());
    }
    return {pp.theta, 2 * kPi * (double)k * pp.d / (double)(n + 1)};
}

CMat2 delta_r(const ProtocolParams &pp) {
    double n = (double)pp.steps();
    Complex e = std::polar(1.0, -2 * kPi * pp.d / (n + 1));
    double c2 = std::cos(pp.theta / 2) * std::cos(pp.theta / 2);
    double s2 = std::sin(pp.theta / 2) * std::sin(pp.theta / 2);
    Complex off = 0.5 * (1.0 - e) * std::sin(pp.theta);
    CMat2 m;
    m(0, 0) = c2 + s2 * e;
    m(0, 1) = off;
    m(1, 0) = off;
    m(1, 1) = s2 + c2 * e;
    return m;
}

CMat2 kraus_on_axis(const CMat2 &kraus, const MeasurementAxis &ax) {
    CMat2 r = rotation(ax);
    return r.adjoint() * kraus * r;
}

QubitState initial_state(double theta) {
    return {std::cos(theta / 2), std::sin(theta / 2)};
}

QubitState apply(const CMat2 &m, const QubitState &s) {
    return {m(0, 0) * s.amp0 + m(0, 1) * s.amp1, m(1, 0) * s.amp0 + m(1, 1) * s.amp1};
}

Complex inner(const QubitState &a, const QubitState &b) {
    return std::conj(a.amp0) * b.amp0 + std::conj(a.amp1) * b.amp1;
}

double born_probability(const QubitState &state, const CMat2 &kraus) {
    double norm = state.norm_sq();
    if (norm == 0) {
        throw Error(ErrorCode::kNullState, "Born probability of a null state");
    }
    return apply(kraus, state).norm_sq() / norm;
}

}  // namespace wmphase
