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

#include "wmphase/averaged.h"

#include <gtest/gtest.h>

#include <random>

#include "wmphase/error.h"
#include "wmphase/trajectories.h"

using namespace wmphase;

namespace {

ProtocolParams random_params(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> uc(0, 5), ua(-5, 5), ut(0, kPi);
    return {uc(rng), ua(rng), ut(rng), rng() % 2 ? 1 : -1, std::nullopt};
}

// Sum of squared lab-frame amplitudes over every readout sequence.
Complex lab_frame_sum(const ProtocolParams &pp) {
    int64_t n = *pp.n;
    Complex total = 0;
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); mask++) {
        ReadoutSequence seq = ReadoutSequence::all_zeros(n);
        for (int64_t k = 0; k < n; k++) {
            seq.bits[k] = (mask >> k) & 1;
        }
        Complex amp = evolve(pp, seq).amplitude;
        total += amp * amp;
    }
    return total;
}

ErrorCode code_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    return ErrorCode::kIoError;
}

}  // namespace

TEST(generator, diagonal_on_pole) {
    ProtocolParams p{1.3, -0.7, 0, 1, std::nullopt};
    CMat4 g = generator(p);
    Complex i(0, 1);
    Complex z = -2.0 * Complex(1.3, -0.7);
    CMat4 want = CMat4::diag({2.0 * i * kPi, z, z, -2.0 * i * kPi - 4.0 * i * -0.7});
    EXPECT_LT(max_abs_diff(g, want), 1e-15);
}

TEST(generator, reversal_symmetry) {
    CMat4 u = CMat4::diag({1.0, -1.0, -1.0, 1.0});
    std::mt19937_64 rng(2);
    for (int k = 0; k < 50; k++) {
        ProtocolParams p = random_params(rng);
        ProtocolParams q = p;
        q.d = -p.d;
        q.theta = kPi - p.theta;
        EXPECT_LT(max_abs_diff(u * generator(q) * u, generator(p)), 1e-14);
    }
}

TEST(generator, limit_of_transfer_powers) {
    // [T^N]_11 -> [exp G]_11 with O(1/N) error
    std::mt19937_64 rng(4);
    for (int k = 0; k < 10; k++) {
        ProtocolParams p = random_params(rng);
        Complex lim = averaged_limit_amplitude(p.c, p.a, p.theta, p.d);
        double e3 = std::abs(averaged_finite_n(p.with_n(1000), AveragedMethod::kTransfer).amplitude - lim);
        double e4 = std::abs(averaged_finite_n(p.with_n(10000), AveragedMethod::kTransfer).amplitude - lim);
        EXPECT_LT(e4, 0.2 * e3 + 1e-9) << p.describe();
    }
}

TEST(averaged_amplitude, trivial_cases) {
    std::mt19937_64 rng(6);
    for (int k = 0; k < 30; k++) {
        ProtocolParams p = random_params(rng);
        p.theta = 0;
        AveragedResult r = averaged_amplitude(p);
        EXPECT_LT(std::abs(r.amplitude - 1.0), 1e-12);
        EXPECT_NEAR(r.alpha, 0, 1e-12);
        p = random_params(rng);
        p.c = p.a = 0;
        EXPECT_LT(std::abs(averaged_amplitude(p).amplitude - 1.0), 1e-12);
    }
}

TEST(averaged_amplitude, large_n_example) {
    ProtocolParams p{3, 1, kPi / 2, 1, std::nullopt};
    Complex lim = averaged_amplitude(p).amplitude;
    Complex fin = averaged_finite_n(p.with_n(10000), AveragedMethod::kTransfer).amplitude;
    EXPECT_LT(std::abs(lim - fin), 5e-3);
}

TEST(averaged_amplitude, symmetries_and_bound) {
    std::mt19937_64 rng(10);
    for (int k = 0; k < 100; k++) {
        ProtocolParams p = random_params(rng);
        Complex z = averaged_limit_amplitude(p.c, p.a, p.theta, p.d);
        EXPECT_LT(std::abs(averaged_limit_amplitude(p.c, p.a, kPi - p.theta, -p.d) - z), 1e-12);
        EXPECT_LT(std::abs(averaged_limit_amplitude(p.c, -p.a, p.theta, -p.d) - std::conj(z)), 1e-12);
        AveragedResult r = AveragedResult::from(z);
        EXPECT_GE(r.alpha, -1e-9) << p.describe();
        EXPECT_GT(r.chi_bar, -kPi / 2);
        EXPECT_LE(r.chi_bar, kPi / 2);
        EXPECT_LT(std::abs(std::exp(Complex(-r.alpha, 2 * r.chi_bar)) - z), 1e-12);
    }
}

TEST(averaged_amplitude, zero_amplitude) {
    AveragedResult r = AveragedResult::from(0.0);
    EXPECT_TRUE(std::isinf(r.alpha));
}

TEST(averaged_finite_n, single_step_by_hand) {
    ProtocolParams p{0.8, 0.3, 1.1, 1, 1};
    CMat2 r = delta_r(p);
    Complex want = 0;
    for (int k = 0; k < 2; k++) {
        Complex a = (r * kraus_scaled(p, k) * r)(0, 0);
        want += a * a;
    }
    EXPECT_LT(std::abs(averaged_finite_n(p, AveragedMethod::kBruteForce).amplitude - want), 1e-15);
    EXPECT_LT(std::abs(averaged_finite_n(p, AveragedMethod::kTransfer).amplitude - want), 1e-15);
}

TEST(averaged_finite_n, brute_force_equals_transfer) {
    ProtocolParams ex{3, 1, 3 * kPi / 4, 1, 12};
    EXPECT_LT(std::abs(averaged_finite_n(ex, AveragedMethod::kBruteForce).amplitude -
                       averaged_finite_n(ex, AveragedMethod::kTransfer).amplitude),
              1e-12);
    std::mt19937_64 rng(12);
    for (int k = 0; k < 30; k++) {
        ProtocolParams p = random_params(rng).with_n(1 + k % 14);
        for (KrausModel m : {KrausModel::kScaled, KrausModel::kExact}) {
            Complex b = averaged_finite_n(p, AveragedMethod::kBruteForce, m).amplitude;
            Complex t = averaged_finite_n(p, AveragedMethod::kTransfer, m).amplitude;
            EXPECT_LT(std::abs(b - t), 1e-12) << p.describe();
        }
    }
}

TEST(averaged_finite_n, matches_lab_frame_enumeration) {
    std::mt19937_64 rng(14);
    for (int k = 0; k < 10; k++) {
        ProtocolParams p = random_params(rng).with_n(1 + k % 8);
        EXPECT_LT(std::abs(averaged_finite_n(p, AveragedMethod::kBruteForce).amplitude - lab_frame_sum(p)), 1e-12);
    }
}

TEST(averaged_finite_n, zero_strength_is_postselected_squared) {
    std::mt19937_64 rng(16);
    for (int k = 0; k < 20; k++) {
        ProtocolParams p = random_params(rng).with_n(5 + k * 50);
        p.c = 0;
        Complex ps = amplitude_finite_n(p).amplitude;
        EXPECT_LT(std::abs(averaged_finite_n(p, AveragedMethod::kTransfer).amplitude - ps * ps), 1e-12);
    }
}

TEST(averaged_finite_n, large_n_consistency) {
    std::mt19937_64 rng(18);
    for (int k = 0; k < 10; k++) {
        ProtocolParams p = random_params(rng);
        Complex lim = averaged_limit_amplitude(p.c, p.a, p.theta, p.d);
        Complex fin = averaged_finite_n(p.with_n(100000), AveragedMethod::kTransfer).amplitude;
        EXPECT_LT(std::abs(fin - lim), 1e-3) << p.describe();
    }
}

TEST(averaged_finite_n, errors) {
    EXPECT_EQ(code_of([] {
                  averaged_finite_n({1, 1, 1, 1, 21}, AveragedMethod::kBruteForce);
              }),
              ErrorCode::kTooLargeForBruteForce);
    EXPECT_EQ(code_of([] {
                  averaged_finite_n({1, 1, 1, 1, std::nullopt}, AveragedMethod::kTransfer);
              }),
              ErrorCode::kInfiniteN);
}

TEST(averaged_phase_curve, flat_at_origin) {
    PhaseCurve curve = averaged_phase_curve(0, 0, 1, 16);
    for (double v : curve.unwrapped_phase) {
        EXPECT_NEAR(v, 0, 1e-12);
    }
}

TEST(averaged_winding, examples) {
    EXPECT_EQ(averaged_winding(averaged_phase_curve(0.1, 0, 1)), 0);
    EXPECT_EQ(averaged_winding(averaged_phase_curve(6, 0, 1)), -2);
    EXPECT_EQ(averaged_winding(averaged_phase_curve(6, 0, -1)), 2);
    PhaseCurve strong = averaged_phase_curve(6, 0, 1);
    EXPECT_NEAR(strong.unwrapped_phase.back(), -4 * kPi, 1e-9);
}

TEST(averaged_winding, three_sectors_at_a_equal_one) {
    // critical C at A=1 sit near 1.949 and 4.122
    EXPECT_EQ(averaged_winding(averaged_phase_curve(1.5, 1, 1)), 0);
    EXPECT_EQ(averaged_winding(averaged_phase_curve(1.9, 1, 1)), 0);
    EXPECT_EQ(averaged_winding(averaged_phase_curve(2.0, 1, 1)), -1);
    EXPECT_EQ(averaged_winding(averaged_phase_curve(3, 1, 1)), -1);
    EXPECT_EQ(averaged_winding(averaged_phase_curve(4.0, 1, 1)), -1);
    EXPECT_EQ(averaged_winding(averaged_phase_curve(4.2, 1, 1)), -2);
}

TEST(averaged_winding, middle_sector_seen_at_finite_n) {
    // transfer-matrix products at N=1000 give the same winding as the limit
    for (double c : {1.5, 3.0}) {
        PhaseCurve curve = trace_phase_curve(
            [c](double theta) {
                return averaged_finite_n({c, 1, theta, 1, 1000}, AveragedMethod::kTransfer).amplitude;
            },
            64, "finite-N");
        double end = curve.unwrapped_phase.back() / (2 * kPi);
        EXPECT_EQ(std::lround(end), averaged_winding(averaged_phase_curve(c, 1, 1))) << c;
    }
}
