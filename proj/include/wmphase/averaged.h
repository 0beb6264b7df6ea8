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

#ifndef WMPHASE_AVERAGED_H
#define WMPHASE_AVERAGED_H

#include "wmphase/measurement.h"
#include "wmphase/numerics.h"
#include "wmphase/postselected.h"

namespace wmphase {

/// amplitude = e^{2i chi_bar - alpha}.
struct AveragedResult {
    Complex amplitude;
    double chi_bar = 0;  // in (-pi/2, pi/2]
    double alpha = 0;    // +inf when amplitude is exactly zero

    static AveragedResult from(Complex z);
};

enum class AveragedMethod {
    kBruteForce,
    kTransfer,
};

/// N-independent generator G of the 4x4 transfer matrix (ignores pp.n).
CMat4 generator(const ProtocolParams &pp);
/// Exact finite-N transfer matrix sum_r (M_r x M_r)(dR x dR).
CMat4 transfer_matrix(const ProtocolParams &pp, KrausModel model = KrausModel::kScaled);

/// [exp G]_11 without validation, for root searches.
Complex averaged_limit_amplitude(double c, double a, double theta, int d);

/// N -> infinity value. Throws UndefinedPhase if |amplitude| < 1e-14.
AveragedResult averaged_amplitude(const ProtocolParams &pp);
/// Sum over readout sequences of (postselected amplitude)^2 at finite N.
/// Brute force needs N <= 20 (TooLargeForBruteForce otherwise).
AveragedResult averaged_finite_n(
    const ProtocolParams &pp, AveragedMethod method, KrausModel model = KrausModel::kScaled);

/// Continuous branch of arg [exp G]_11 = 2 chi_bar over theta.
PhaseCurve averaged_phase_curve(double c, double a, int d, int grid_hint = 64);
int averaged_winding(const PhaseCurve &curve);

}  // namespace wmphase

#endif
