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

#ifndef WMPHASE_MONTECARLO_H
#define WMPHASE_MONTECARLO_H

#include <array>
#include <cstdint>
#include <limits>

#include "wmphase/measurement.h"
#include "wmphase/trajectories.h"

namespace wmphase {

/// Philox4x64-10 counter-based generator. Each (key, counter) pair maps to an independent block of four
/// 64-bit words; operator() walks blocks by incrementing the first counter word.
class Philox4x64 {
   public:
    using result_type = uint64_t;
    using Block = std::array<uint64_t, 4>;
    using Key = std::array<uint64_t, 2>;

    Philox4x64(Key key, Block counter) : key_(key), counter_(counter) {
    }
    /// Substream for one sample: key = (seed, stream), counter starts at zero.
    static Philox4x64 substream(uint64_t seed, uint64_t stream) {
        return Philox4x64({seed, stream}, {0, 0, 0, 0});
    }

    static Block block(Block counter, Key key);

    static constexpr result_type min() {
        return 0;
    }
    static constexpr result_type max() {
        return std::numeric_limits<uint64_t>::max();
    }
    result_type operator()();
    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();

   private:
    Key key_;
    Block counter_;
    Block buffer_{};
    int used_ = 4;
};

struct SampledSequence {
    ReadoutSequence seq;
    /// <psi_0|M..M|psi_0>, or 0 when the final projective readout is 1. May underflow for long sequences.
    Complex amp;
    /// Phase of amp, computed from normalized states (valid even if amp underflows). 0 when rejected.
    double phase = 0;
};

/// Draws r_1..r_N from conditional Born probabilities, then r_{N+1} against |psi_0>.
SampledSequence sample_sequence(const ProtocolParams &pp, Philox4x64 &rng, KrausModel model = KrausModel::kExact);

struct McEstimate {
    Complex estimate;
    double standard_error = 0;
    int64_t n_samples = 0;
    uint64_t seed = 0;
    double accepted_fraction = 0;
};

/// Mean of e^{2i chi} over n_rs sampled sequences (rejected samples count as 0) with a jackknife error.
McEstimate estimate_averaged(
    const ProtocolParams &pp, int64_t n_rs, uint64_t seed, KrausModel model = KrausModel::kExact);

}  // namespace wmphase

#endif
