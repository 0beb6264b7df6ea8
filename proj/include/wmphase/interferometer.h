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

#ifndef WMPHASE_INTERFEROMETER_H
#define WMPHASE_INTERFEROMETER_H

#include "wmphase/measurement.h"
#include "wmphase/trajectories.h"

namespace wmphase {

struct IntensityPair {
    double i1 = 0;
    double i2 = 0;
    double i0 = 1;
    double surviving_weight = 0;  // S
    Complex interference;         // amplitude entering the +- term
};

/// S = sum over sequences with r_{N+1} = 0 of |amp|^2. Brute force for N <= 14, doubled transfer chain up to N = 10^4.
double surviving_weight(const ProtocolParams &pp, KrausModel model = KrausModel::kExact);

IntensityPair intensities_postselected(const ProtocolParams &pp, double i0, KrausModel model = KrausModel::kExact);
IntensityPair intensities_averaged(const ProtocolParams &pp, double i0, KrausModel model = KrausModel::kExact);

/// Lower-arm detector: the adjoint of kraus_finite(p, r).
CMat2 kraus_mirrored(const DetectorParams &p, int r);

/// Distance between the lower-arm amplitude <psi_0|X M~_N..M~_1 X|psi_0> (X the flip about the initial axis) and
/// the conjugate of the upper-arm amplitude, for the finite detector equivalent to pp.
double verify_arm_identity(const ProtocolParams &pp, const ReadoutSequence &seq);

}  // namespace wmphase

#endif
