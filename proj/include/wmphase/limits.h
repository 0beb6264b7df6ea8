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

#ifndef WMPHASE_LIMITS_H
#define WMPHASE_LIMITS_H

#include "wmphase/measurement.h"
#include "wmphase/postselected.h"
#include "wmphase/trajectories.h"

namespace wmphase {

enum class Protocol {
    kPostselected,
    kAveraged,
};

/// Truncated asymptotic series. For the postselected protocol phase is chi and logmag is ln sqrt(P);
/// for the averaged protocol phase is chi_bar and logmag is ln e^{-alpha}.
struct ExpansionResult {
    double phase_approx = 0;
    double logmag_approx = 0;
    int order = 0;
};

/// Series in 1/A through A^-2. Throws InvalidArgument for A = 0.
ExpansionResult large_a_expansion(const ProtocolParams &pp, Protocol which = Protocol::kPostselected);
/// Series in 1/C through C^-2. Throws DegenerateDenominator in the averaged branch when |A + pi d cos(theta)| < 1e-8.
ExpansionResult large_c_expansion(const ProtocolParams &pp, Protocol which = Protocol::kPostselected);

struct CZeroResult {
    Complex amplitude;
    double geometric = 0;
    double dynamical = 0;
};

/// Exact C = 0 amplitude with its geometric / dynamical split.
CZeroResult c_zero_exact(double a, double theta, int d);

struct ScalingStudyResult {
    Trajectory traj;
    PhaseResult result;
    double c = 0;  // induced C = C'^2 / 4
    double a = 0;  // induced A = -A' C' / 2
    DetectorParams detector;
};

/// All-zeros chain of n finite detectors with g = C' n^-a_exp and theta_d = pi/2 - A' n^-b_exp.
ScalingStudyResult scaling_study(
    double a_exp, double b_exp, double c_prime, double a_prime, double theta, int d, int64_t n);

}  // namespace wmphase

#endif
