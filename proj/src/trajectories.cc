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

#include "wmphase/trajectories.h"

#include <cmath>

#include "wmphase/error.h"

namespace wmphase {

ReadoutSequence ReadoutSequence::all_zeros(int64_t n) {
    ReadoutSequence seq;
    seq.bits.assign((size_t)n, 0);
    return seq;
}

std::array<double, 3> bloch_vector(const QubitState &s) {
    double norm = s.norm_sq();
    Complex cross = std::conj(s.amp0) * s.amp1;
    return {2 * cross.real() / norm, 2 * cross.imag() / norm, (std::norm(s.amp0) - std::norm(s.amp1)) / norm};
}

Trajectory evolve_with(const ProtocolParams &pp, const ReadoutSequence &seq, const CMat2 &m0, const CMat2 &m1) {
    pp.validate();
    int64_t n = pp.steps();
    if ((int64_t)seq.bits.size() != n) {
        throw Error(
            ErrorCode::kInvalidArgument,
            "sequence length " + std::to_string(seq.bits.size()) + " differs from N " + pp.describe());
    }
    Trajectory traj;
    traj.states.reserve(n + 1);
    traj.states.push_back(initial_state(pp.theta));
    for (int64_t k = 1; k <= n; k++) {
        int r = seq.bits[k - 1];
        if (r != 0 && r != 1) {
            throw Error(ErrorCode::kBadReadout, "readout must be 0 or 1 at step " + std::to_string(k));
        }
        CMat2 m = kraus_on_axis(r == 0 ? m0 : m1, axis_sequence(pp, k));
        traj.states.push_back(apply(m, traj.states.back()));
    }
    for (size_t k = 0; k < traj.states.size(); k++) {
        if (traj.states[k].is_null()) {
            traj.first_null = (int64_t)k;
            break;
        }
        traj.bloch_points.push_back(bloch_vector(traj.states[k]));
    }
    traj.amplitude = seq.final_projective == 0 ? inner(traj.states.front(), traj.states.back()) : Complex{};
    return traj;
}

Trajectory evolve(const ProtocolParams &pp, const ReadoutSequence &seq, KrausModel model) {
    pp.validate();
    if (pp.steps() == 0) {
        return evolve_with(pp, seq, CMat2::identity(), CMat2::zero());
    }
    return evolve_with(pp, seq, kraus_model(pp, 0, model), kraus_model(pp, 1, model));
}

Complex pancharatnam_product(const Trajectory &traj) {
    Complex acc = 1;
    auto link = [&](const QubitState &to, const QubitState &from) {
        double scale = std::sqrt(to.norm_sq() * from.norm_sq());
        Complex o = scale > 0 ? inner(to, from) / scale : Complex{};
        if (std::abs(o) < 1e-14) {
            throw Error(ErrorCode::kOrthogonalNeighbors, "consecutive trajectory states are orthogonal");
        }
        acc *= o;
    };
    const auto &s = traj.states;
    for (size_t k = 0; k + 1 < s.size(); k++) {
        link(s[k + 1], s[k]);
    }
    link(s.front(), s.back());
    return acc;
}

double pancharatnam_phase(const Trajectory &traj) {
    return wrap_angle(std::arg(pancharatnam_product(traj)));
}

double dynamical_component(const ProtocolParams &pp, const ReadoutSequence &seq, KrausModel model) {
    Trajectory traj = evolve(pp, seq, model);
    if (traj.amplitude == Complex{}) {
        throw Error(ErrorCode::kUndefinedPhase, "sequence amplitude is zero " + pp.describe());
    }
    return wrap_angle(std::arg(traj.amplitude) - pancharatnam_phase(traj));
}

int family_winding_classifier(double c, double a, int d, int theta_grid, int64_t n) {
    ProtocolParams base{c, a, 0.0, d, n};
    base.validate();
    if (n < 1000 || theta_grid < 64) {
        throw Error(ErrorCode::kInvalidArgument, "classifier needs n >= 1000 and theta_grid >= 64 " + base.describe());
    }
    ReadoutSequence zeros = ReadoutSequence::all_zeros(n);
    auto f = [&](double theta) -> Complex {
        ProtocolParams pp = base;
        pp.theta = theta;
        Trajectory traj = evolve(pp, zeros);
        try {
            return pancharatnam_product(traj);
        } catch (const Error &) {
            return 0.0;
        }
    };
    return winding_number(trace_phase_curve(f, theta_grid, base.describe()));
}

}  // namespace wmphase
