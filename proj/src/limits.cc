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

#include "wmphase/limits.h"

#include <cmath>

#include "wmphase/error.h"

namespace wmphase {

ExpansionResult large_a_expansion(const ProtocolParams &pp, Protocol which) {
    pp.validate();
    if (pp.a == 0) {
        throw Error(ErrorCode::kInvalidArgument, "large-A series needs A != 0 " + pp.describe());
    }
    double s2 = std::sin(pp.theta) * std::sin(pp.theta);
    double ct = std::cos(pp.theta);
    double a = pp.a;
    double e2c = std::exp(-2 * pp.c);
    double arg = 2 * a + 2 * kPi * pp.d * ct;
    double k = kPi * kPi * s2;

    ExpansionResult r;
    r.order = 2;
    // Second-order term from expanding pi^2 sin^2(theta) / (2 (A + pi d cos(theta))) in 1/A.
    r.phase_approx = kPi * pp.d * (ct - 1) + k / (2 * a) -
                     k / (4 * a * a) * (e2c * std::sin(arg) + 2 * kPi * pp.d * ct);
    double log_p = -k / (2 * a * a) * (1 + 2 * pp.c - e2c * std::cos(arg));
    r.logmag_approx = which == Protocol::kPostselected ? log_p / 2 : log_p;
    return r;
}

ExpansionResult large_c_expansion(const ProtocolParams &pp, Protocol which) {
    pp.validate();
    if (!(pp.c > 0)) {
        throw Error(ErrorCode::kInvalidArgument, "large-C series needs C > 0 " + pp.describe());
    }
    double s2 = std::sin(pp.theta) * std::sin(pp.theta);
    double ct = std::cos(pp.theta);
    double c = pp.c;
    double q = pp.a + kPi * pp.d * ct;
    double k = kPi * kPi * s2;
    double log_p = -(k / c) * (1 - 1 / (2 * c));

    ExpansionResult r;
    r.order = 2;
    if (which == Protocol::kPostselected) {
        r.phase_approx = kPi * pp.d * (ct - 1) + k / (2 * c * c) * q;
        r.logmag_approx = log_p / 2;
        return r;
    }
    if (std::abs(q) < 1e-8) {
        throw Error(ErrorCode::kDegenerateDenominator, "A + pi d cos(theta) vanishes " + pp.describe());
    }
    // Sign of the sin(4q) correction matched against the exact averaged phase at large C.
    r.phase_approx = kPi * pp.d * (ct - 1) +
                     k / (2 * c * c) * (q + k * (std::sin(4 * q) - 4 * q) / (16 * q * q));
    double sinc = std::sin(2 * q) / (2 * q);
    r.logmag_approx = log_p + k * k / (2 * c * c) * sinc * sinc;
    return r;
}

CZeroResult c_zero_exact(double a, double theta, int d) {
    double q = a + kPi * d * std::cos(theta);
    double ps = kPi * std::sin(theta);
    double zeta = std::sqrt(q * q + ps * ps);
    Complex z(0, q);
    // sinc = sin(zeta)/zeta; weight = (pi sin(theta)/zeta)^2 (1 - sin(2 zeta)/(2 zeta)).
    double sinc, weight;
    if (zeta < 1e-4) {
        double z2 = zeta * zeta;
        sinc = 1 - z2 / 6 + z2 * z2 / 120;
        weight = ps * ps * (2.0 / 3 - 2 * z2 / 15);
    } else {
        sinc = std::sin(zeta) / zeta;
        weight = ps * ps / (zeta * zeta) * (1 - std::sin(2 * zeta) / (2 * zeta));
    }
    CZeroResult r;
    r.amplitude = -std::polar(1.0, -a) * (std::cos(zeta) + z * sinc);
    r.dynamical = -a * weight;
    r.geometric = wrap_angle(std::arg(r.amplitude * std::polar(1.0, a * weight)));
    return r;
}

ScalingStudyResult scaling_study(
    double a_exp, double b_exp, double c_prime, double a_prime, double theta, int d, int64_t n) {
    ProtocolParams pp{c_prime * c_prime / 4, -a_prime * c_prime / 2, theta, d, n};
    pp.validate();
    if (a_exp < 0 || b_exp < 0 || n < 100) {
        throw Error(ErrorCode::kInvalidArgument, "scaling study needs a, b >= 0 and n >= 100 " + pp.describe());
    }
    ScalingStudyResult out;
    out.c = pp.c;
    out.a = pp.a;
    out.detector.g = c_prime * std::pow((double)n, -a_exp);
    out.detector.theta_d = kPi / 2 - a_prime * std::pow((double)n, -b_exp);
    out.detector.phi_d = -kPi / 2;
    out.traj = evolve_with(
        pp, ReadoutSequence::all_zeros(n), kraus_finite(out.detector, 0), kraus_finite(out.detector, 1));
    out.result = PhaseResult::from(out.traj.amplitude);
    return out;
}

}  // namespace wmphase
