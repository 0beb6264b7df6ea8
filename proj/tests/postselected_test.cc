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

#include "wmphase/postselected.h"

#include <gtest/gtest.h>

#include <random>

#include "wmphase/error.h"

using namespace wmphase;

namespace {

// Lab-frame evolution: measure along each axis in turn, then overlap with the
// final axis eigenstate. Shares no code with the rotating-frame product.
Complex lab_frame_amplitude(const ProtocolParams &pp) {
    int64_t n = *pp.n;
    QubitState psi = apply(rotation(axis_sequence(pp, 0)).adjoint(), {1.0, 0.0});
    CMat2 m0 = kraus_scaled(pp, 0);
    for (int64_t k = 1; k <= n; k++) {
        psi = apply(kraus_on_axis(m0, axis_sequence(pp, k)), psi);
    }
    QubitState fin = apply(rotation(axis_sequence(pp, n + 1)).adjoint(), {1.0, 0.0});
    return inner(fin, psi);
}

ProtocolParams random_params(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> uc(0, 5), ua(-5, 5), ut(0, kPi);
    return {uc(rng), ua(rng), ut(rng), rng() % 2 ? 1 : -1, std::nullopt};
}

}  // namespace

TEST(amplitude_closed_form, trivial_cases) {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 50; k++) {
        ProtocolParams p = random_params(rng);
        p.theta = 0;
        EXPECT_LT(std::abs(amplitude_closed_form(p).amplitude - 1.0), 1e-12) << p.describe();
        ProtocolParams q = random_params(rng);
        q.c = q.a = 0;
        EXPECT_LT(std::abs(amplitude_closed_form(q).amplitude - 1.0), 1e-12) << q.describe();
    }
}

TEST(amplitude_closed_form, weak_example) {
    PhaseResult r = amplitude_closed_form({1, 0, kPi / 2, 1, std::nullopt});
    EXPECT_NEAR(r.amplitude.real(), 0.34285, 5e-5);
    EXPECT_NEAR(r.amplitude.imag(), 0, 1e-14);
    EXPECT_NEAR(r.phase, 0, 1e-14);
    EXPECT_NEAR(r.probability(), 0.11755, 5e-5);
    // finite-N cross-check of the same value
    PhaseResult f = amplitude_finite_n({1, 0, kPi / 2, 1, 100000});
    EXPECT_LT(std::abs(f.amplitude - r.amplitude), 1e-4);
}

TEST(amplitude_closed_form, symmetries) {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 100; k++) {
        ProtocolParams p = random_params(rng);
        Complex z = closed_form_amplitude(p.c, p.a, p.theta, p.d);
        EXPECT_LT(std::abs(closed_form_amplitude(p.c, p.a, kPi - p.theta, -p.d) - z), 1e-12) << p.describe();
        EXPECT_LT(std::abs(closed_form_amplitude(p.c, -p.a, p.theta, -p.d) - std::conj(z)), 1e-12) << p.describe();
        EXPECT_LT(std::abs(closed_form_amplitude(p.c, p.a, p.theta, p.d, true) - z), 1e-13) << p.describe();
        EXPECT_LE(std::abs(z), 1 + 1e-9);
    }
}

TEST(amplitude_closed_form, symmetric_part_vanishes_without_a) {
    std::mt19937_64 rng(8);
    for (int k = 0; k < 100; k++) {
        ProtocolParams p = random_params(rng);
        p.a = 0;
        Complex zp = closed_form_amplitude(p.c, 0, p.theta, 1);
        Complex zm = closed_form_amplitude(p.c, 0, p.theta, -1);
        EXPECT_NEAR(std::abs(zp), std::abs(zm), 1e-12);
        // chi(+1) + chi(-1) = 0 mod 2pi
        EXPECT_NEAR(std::abs(wrap_angle(std::arg(zp) + std::arg(zm))), 0, 1e-9);
    }
}

TEST(amplitude_closed_form, tau_series_matches_exponentials) {
    // tau crosses zero at C=pi sin(theta), A=-pi d cos(theta); probe either side.
    double theta = 1.0;
    double a = -kPi * std::cos(theta);
    double c0 = kPi * std::sin(theta);
    Complex mid = closed_form_amplitude(c0, a, theta, 1);
    for (double dc : {1e-3, 1e-5, 1e-7}) {
        Complex lo = closed_form_amplitude(c0 - dc, a, theta, 1);
        Complex hi = closed_form_amplitude(c0 + dc, a, theta, 1);
        EXPECT_LT(std::abs(lo - mid), 10 * dc);
        EXPECT_LT(std::abs(hi - mid), 10 * dc);
    }
}

TEST(amplitude_finite_n, matches_lab_frame_evolution) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 40; k++) {
        ProtocolParams p = random_params(rng);
        p.n = 1 + k;
        EXPECT_LT(std::abs(amplitude_finite_n(p).amplitude - lab_frame_amplitude(p)), 1e-12) << p.describe();
    }
}

TEST(amplitude_finite_n, single_step_by_hand) {
    ProtocolParams p{0, 0, kPi / 3, 1, 1};
    // C=A=0 leaves only two rotations; |psi_0> carried to the final axis.
    double c = std::cos(kPi / 6), s = std::sin(kPi / 6);
    Complex e = std::polar(1.0, -kPi);  // 2 pi / (N+1)
    Complex r11 = c * c + s * s * e;
    Complex r12 = 0.5 * (1.0 - e) * std::sin(kPi / 3);
    Complex r21 = r12;
    Complex want = r11 * r11 + r12 * r21;
    EXPECT_LT(std::abs(amplitude_finite_n(p).amplitude - want), 1e-15);
    EXPECT_LT(std::abs(lab_frame_amplitude(p) - want), 1e-15);
}

TEST(amplitude_finite_n, example_convergence) {
    ProtocolParams p{1, 1, 3 * kPi / 4, 1, 10000};
    Complex z = amplitude_closed_form(p.with_n(std::nullopt)).amplitude;
    EXPECT_LT(std::abs(amplitude_finite_n(p).amplitude - z) / std::abs(z), 5.0 / 10000);
}

TEST(amplitude_finite_n, convergence_constant) {
    std::mt19937_64 rng(19);
    for (int k = 0; k < 20; k++) {
        ProtocolParams p = random_params(rng);
        Complex z = amplitude_closed_form(p).amplitude;
        for (int64_t n : {1000, 10000, 100000}) {
            double err = std::abs(amplitude_finite_n(p.with_n(n)).amplitude - z);
            EXPECT_LT(err * n, 50) << p.describe() << " N=" << n;
        }
    }
}

TEST(amplitude_finite_n, projective_chain_gives_pancharatnam_phase) {
    for (double theta : {0.5, 1.3, 2.2}) {
        for (int d : {1, -1}) {
            ProtocolParams p{0, 0, theta, d, 100000};
            CMat2 r = delta_r(p);
            CMat2 m0 = CMat2::diag({1.0, 0.0});
            CMat2 chain = r * mat_pow(m0 * r, *p.n);
            double want = d * kPi * (std::cos(theta) - 1);
            EXPECT_NEAR(wrap_angle(std::arg(chain(0, 0)) - want), 0, 1e-4);
        }
    }
}

TEST(phase_curve, flat_at_origin) {
    PhaseCurve curve = phase_curve(0, 0, 1, 16);
    for (double v : curve.unwrapped_phase) {
        EXPECT_NEAR(v, 0, 1e-12);
    }
    EXPECT_EQ(winding_number(curve), 0);
}

TEST(phase_curve, strong_measurement_follows_geometric_phase) {
    PhaseCurve curve = phase_curve(5, 0, 1, 64);
    ASSERT_EQ(curve.thetas.size(), curve.unwrapped_phase.size());
    EXPECT_EQ(curve.thetas.front(), 0);
    EXPECT_EQ(curve.thetas.back(), kPi);
    EXPECT_EQ(curve.unwrapped_phase.front(), 0);
    EXPECT_NEAR(curve.unwrapped_phase.back(), -2 * kPi, 1e-9);
    for (size_t k = 0; k < curve.thetas.size(); k++) {
        EXPECT_NEAR(curve.unwrapped_phase[k], kPi * (std::cos(curve.thetas[k]) - 1), 0.3);
        if (k > 0) {
            EXPECT_LT(std::abs(curve.unwrapped_phase[k] - curve.unwrapped_phase[k - 1]), kPi);
            EXPECT_GT(curve.thetas[k], curve.thetas[k - 1]);
        }
    }
}

TEST(phase_curve, critical_point_is_reported) {
    try {
        phase_curve(1.9240910313277555, 1.0, 1, 64);
        FAIL() << "expected UndefinedAtCriticalPoint";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kUndefinedAtCriticalPoint);
    }
}

TEST(phase_curve, rejects_coarse_grid) {
    try {
        phase_curve(1, 1, 1, 8);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
    }
}

TEST(winding_number, examples) {
    EXPECT_EQ(winding_number(phase_curve(0.1, 0, 1)), 0);
    EXPECT_EQ(winding_number(phase_curve(5, 0, 1)), -1);
    EXPECT_EQ(winding_number(phase_curve(5, 0, -1)), 1);
    // either side of the A=1 critical point
    EXPECT_EQ(winding_number(phase_curve(1.9, 1, 1)), 0);
    EXPECT_EQ(winding_number(phase_curve(1.95, 1, 1)), -1);
}

TEST(winding_number, not_quantized) {
    PhaseCurve bad;
    bad.thetas = {0, kPi};
    bad.values = {1.0, std::polar(1.0, 0.5)};
    bad.unwrapped_phase = {0, 0.5};
    bad.magnitude = {1, 1};
    try {
        winding_number(bad);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kNotQuantized);
    }
}

TEST(winding_number, endpoints_quantized_across_box) {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> uc(0, 5), ua(-5, 5);
    for (int k = 0; k < 30; k++) {
        double c = uc(rng), a = ua(rng);
        PhaseCurve curve = phase_curve(c, a, 1);
        double end = curve.unwrapped_phase.back() / (2 * kPi);
        EXPECT_NEAR(end, std::round(end), 1e-6) << c << " " << a;
    }
}
