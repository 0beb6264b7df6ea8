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

#include "wmphase/montecarlo.h"

#include <cmath>
#include <vector>

#include "wmphase/error.h"

namespace wmphase {

static inline void mulhilo(uint64_t a, uint64_t b, uint64_t &hi, uint64_t &lo) {
    unsigned __int128 p = (unsigned __int128)a * b;
    hi = (uint64_t)(p >> 64);
    lo = (uint64_t)p;
}

Philox4x64::Block Philox4x64::block(Block ctr, Key key) {
    constexpr uint64_t kMul0 = 0xD2E7470EE14C6C93ULL;
    constexpr uint64_t kMul1 = 0xCA5A826395121157ULL;
    constexpr uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
    constexpr uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;
    for (int round = 0; round < 10; round++) {
        if (round > 0) {
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        uint64_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, ctr[0], hi0, lo0);
        mulhilo(kMul1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
}

Philox4x64::result_type Philox4x64::operator()() {
    if (used_ == 4) {
        buffer_ = block(counter_, key_);
        for (auto &w : counter_) {
            if (++w != 0) {
                break;
            }
        }
        used_ = 0;
    }
    return buffer_[used_++];
}

double Philox4x64::uniform() {
    return (double)((*this)() >> 11) * 0x1.0p-53;
}

SampledSequence sample_sequence(const ProtocolParams &pp, Philox4x64 &rng, KrausModel model) {
    pp.validate();
    int64_t n = pp.steps();
    CMat2 m[2] = {CMat2::identity(), CMat2::zero()};
    if (n > 0) {
        m[0] = kraus_model(pp, 0, model);
        m[1] = kraus_model(pp, 1, model);
    }
    SampledSequence out;
    out.seq.bits.resize((size_t)n);
    QubitState psi0 = initial_state(pp.theta);
    QubitState psi = psi0;
    double log_norm = 0;  // ln of the norm divided out so far
    for (int64_t k = 1; k <= n; k++) {
        MeasurementAxis ax = axis_sequence(pp, k);
        QubitState next[2];
        double w[2];
        for (int r = 0; r < 2; r++) {
            next[r] = apply(kraus_on_axis(m[r], ax), psi);
            w[r] = next[r].norm_sq();
        }
        int r = rng.uniform() * (w[0] + w[1]) < w[0] ? 0 : 1;
        out.seq.bits[(size_t)k - 1] = (uint8_t)r;
        double norm = std::sqrt(w[r]);
        psi = {next[r].amp0 / norm, next[r].amp1 / norm};
        log_norm += std::log(norm);
    }
    Complex overlap = inner(psi0, psi);
    out.seq.final_projective = rng.uniform() < std::norm(overlap) ? 0 : 1;
    if (out.seq.final_projective == 0) {
        out.phase = wrap_angle(std::arg(overlap));
        out.amp = overlap * std::exp(log_norm);
    }
    return out;
}

McEstimate estimate_averaged(const ProtocolParams &pp, int64_t n_rs, uint64_t seed, KrausModel model) {
    pp.validate();
    if (n_rs < 1) {
        throw Error(ErrorCode::kInvalidArgument, "n_rs must be >= 1 " + pp.describe());
    }
    std::vector<Complex> x((size_t)n_rs);
    int64_t accepted = 0;
    for (int64_t i = 0; i < n_rs; i++) {
        Philox4x64 rng = Philox4x64::substream(seed, (uint64_t)i);
        SampledSequence s = sample_sequence(pp, rng, model);
        if (s.seq.final_projective == 0) {
            accepted++;
            x[(size_t)i] = std::polar(1.0, 2 * s.phase);
        }
    }
    Complex sum = 0;
    for (const auto &v : x) {
        sum += v;
    }
    McEstimate est;
    est.n_samples = n_rs;
    est.seed = seed;
    est.estimate = sum / (double)n_rs;
    est.accepted_fraction = (double)accepted / (double)n_rs;
    if (n_rs > 1) {
        double nn = (double)n_rs;
        double ss = 0;
        for (const auto &v : x) {
            Complex leave_out = (sum - v) / (nn - 1);
            ss += std::norm(leave_out - est.estimate);
        }
        est.standard_error = std::sqrt((nn - 1) / nn * ss);
    }
    return est;
}

}  // namespace wmphase
