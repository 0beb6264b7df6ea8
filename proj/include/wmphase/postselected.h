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

#ifndef WMPHASE_POSTSELECTED_H
#define WMPHASE_POSTSELECTED_H

#include <functional>
#include <vector>

#include "wmphase/measurement.h"
#include "wmphase/numerics.h"

namespace wmphase {

struct PhaseResult {
    Complex amplitude;
    double phase = 0;      // principal value in (-pi, pi]
    double magnitude = 0;  // |amplitude|

    static PhaseResult from(Complex z);
    double probability() const {
        return magnitude * magnitude;
    }
};

/// A phase traced continuously over theta in [0, pi].
struct PhaseCurve {
    std::vector<double> thetas;
    std::vector<Complex> values;
    std::vector<double> unwrapped_phase;
    std::vector<double> magnitude;
};

/// e^{-Z}(cosh tau + Z sinh tau / tau) with Z = C + iA + i pi d cos(theta), tau^2 = Z^2 - pi^2 sin^2(theta),
/// multiplied by e^{i pi d (cos(theta) - 1)}. No validation; flip_tau picks the other root.
Complex closed_form_amplitude(double c, double a, double theta, int d, bool flip_tau = false);
/// cosh tau + Z sinh tau / tau alone (vanishes exactly on the critical set).
Complex closed_form_bracket(double c, double a, double theta, int d);

/// N -> infinity all-zeros amplitude. Requires pp.n empty.
PhaseResult amplitude_closed_form(const ProtocolParams &pp);
/// (1 0) dR (M0 dR)^N (1 0)^T by sequential multiplication.
PhaseResult amplitude_finite_n(const ProtocolParams &pp, KrausModel model = KrausModel::kScaled);

struct TraceOptions {
    double max_step = kPi / 2;
    double small_magnitude = 1e-6;
    double min_interval = 1e-9;
    double critical_magnitude = 1e-12;
    size_t max_nodes = size_t{1} << 20;
};

/// Adaptively samples f on [0, pi] starting from grid_hint uniform nodes and follows arg f continuously.
/// Throws UndefinedAtCriticalPoint if f passes through zero within the minimum interval.
/// `context` is appended to error messages.
PhaseCurve trace_phase_curve(
    const std::function<Complex(double)> &f,
    int grid_hint,
    const std::string &context,
    const TraceOptions &options = {});

PhaseCurve phase_curve(double c, double a, int d, int grid_hint = 64);

/// round((phase(pi) - phase(0)) / 2pi). Throws NotQuantized if the endpoint is off a multiple of 2pi by > 1e-3.
int winding_number(const PhaseCurve &curve);

}  // namespace wmphase

#endif
