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

#ifndef WMPHASE_CRITICAL_H
#define WMPHASE_CRITICAL_H

#include <functional>
#include <vector>

#include "wmphase/numerics.h"

namespace wmphase {

enum class CriticalBranch {
    kPostselected,
    kAveragedFirst,   // lowest critical C found at this A
    kAveragedSecond,  // any other averaged critical point
};

const char *branch_name(CriticalBranch branch);

struct CriticalPoint {
    double c_crit = 0;
    double a_crit = 0;
    double theta_crit = 0;
    CriticalBranch branch = CriticalBranch::kPostselected;
    int d = 1;
};

/// Root b_c of sin(b)/b = 1/pi on [pi/2, pi].
double critical_b_bound(double tol = 1e-12);

/// Postselected critical point on the parallel theta_ref in [pi/2, 5pi/6], where A = -pi cos(theta_ref) >= 0.
/// For d = -1 the point is reported at theta = pi - theta_ref (same C and A).
CriticalPoint postselected_critical_point(double theta_ref, int d, double tol = 1e-12);
/// The postselected critical point with A_crit = a, for 0 <= a <= pi sqrt(3) / 2.
CriticalPoint postselected_critical_point_at_a(double a, int d, double tol = 1e-12);
/// n_points samples of theta_ref uniformly on [pi/2, 5pi/6], ordered by theta_ref.
/// include_negative_a appends the A < 0 mirror branch.
std::vector<CriticalPoint> postselected_critical_line(int d, int n_points, bool include_negative_a = false);
/// |cosh tau + Z sinh tau / tau| at the point.
double verify_critical_point(const CriticalPoint &p);

struct CriticalSearchOptions {
    double c_min = 0;
    double c_max = 8;
    double c_step = 0.05;
    int theta_steps = 256;
    double seed_threshold = 0.5;
    double tol = 1e-10;
};

struct CriticalSearchResult {
    std::vector<CriticalPoint> points;  // sorted by theta_crit
    int skipped_seeds = 0;              // grid minima whose Newton polish did not converge
};

/// Zeros of amp(C, theta) at fixed A found from local minima of |amp| on the (C, theta) grid.
CriticalSearchResult find_critical_points(
    const std::function<Complex(double, double)> &amp,
    double a,
    int d,
    CriticalBranch branch,
    const CriticalSearchOptions &options);

CriticalSearchResult averaged_critical_points(double a, int d, const CriticalSearchOptions &options = {});
CriticalSearchResult postselected_critical_points_numeric(double a, int d, const CriticalSearchOptions &options = {});

/// Largest A with an averaged critical point, by bisection on [lo, hi] (points must exist at lo and not at hi).
double averaged_threshold(int d, double lo, double hi, double tol = 1e-3, const CriticalSearchOptions &options = {});

/// Net number of turns of arg f along a circle around (x0, y0).
int phase_winding_on_loop(
    const std::function<Complex(double, double)> &f, double x0, double y0, double radius, int samples = 256);

}  // namespace wmphase

#endif
