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

#ifndef WMPHASE_TRAJECTORIES_H
#define WMPHASE_TRAJECTORIES_H

#include <array>
#include <cstdint>
#include <vector>

#include "wmphase/measurement.h"
#include "wmphase/postselected.h"

namespace wmphase {

struct ReadoutSequence {
    std::vector<uint8_t> bits;  // r_1 .. r_N
    int final_projective = 0;   // r_{N+1}

    static ReadoutSequence all_zeros(int64_t n);
};

struct Trajectory {
    std::vector<QubitState> states;  // psi_0 .. psi_N, unnormalized
    std::vector<std::array<double, 3>> bloch_points;  // one per state up to the first null state
    int64_t first_null = -1;  // index of the first null state, or -1
    /// <psi_0|M_N..M_1|psi_0> if final_projective == 0, else 0.
    Complex amplitude;
};

std::array<double, 3> bloch_vector(const QubitState &s);

/// Applies R^-1(n_k) M^(r_k) R(n_k) step by step.
Trajectory evolve(const ProtocolParams &pp, const ReadoutSequence &seq, KrausModel model = KrausModel::kScaled);
/// Same, with an explicit frame-k Kraus pair (used for finite detectors).
Trajectory evolve_with(const ProtocolParams &pp, const ReadoutSequence &seq, const CMat2 &m0, const CMat2 &m1);

/// <psi_0|psi_N> prod_k <psi_{k+1}|psi_k> over normalized states, as a complex number.
/// Throws OrthogonalNeighbors when an overlap vanishes.
Complex pancharatnam_product(const Trajectory &traj);
double pancharatnam_phase(const Trajectory &traj);

/// arg <psi_0|M..M|psi_0> minus the Pancharatnam phase, in (-pi, pi].
double dynamical_component(const ProtocolParams &pp, const ReadoutSequence &seq, KrausModel model = KrausModel::kScaled);

/// Winding of the Pancharatnam phase of all-zeros trajectories at N = n, followed over theta.
int family_winding_classifier(double c, double a, int d, int theta_grid, int64_t n);

}  // namespace wmphase

#endif
