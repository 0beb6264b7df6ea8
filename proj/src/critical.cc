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

#include "wmphase/critical.h"

#include <algorithm>
#include <cmath>

#include "wmphase/averaged.h"
#include "wmphase/error.h"
#include "wmphase/postselected.h"

namespace wmphase {

const char *branch_name(CriticalBranch branch) {
    switch (branch) {
        case CriticalBranch::kPostselected:
            return "postselected";
        case CriticalBranch::kAveragedFirst:
            return "averaged_first";
        case CriticalBranch::kAveragedSecond:
            return "averaged_second";
    }
    return "unknown";
}

static void check_direction(int d) {
    if (d != 1 && d != -1) {
        throw Error(ErrorCode::kInvalidArgument, "direction d must be +1 or -1");
    }
}

double critical_b_bound(double tol) {
    return solve_scalar_root(
        [](double b) {
            return std::sin(b) / b - 1 / kPi;
        },
        kPi / 2,
        kPi,
        tol);
}

CriticalPoint postselected_critical_point(double theta_ref, int d, double tol) {
    check_direction(d);
    if (!(theta_ref >= kPi / 2 && theta_ref <= 5 * kPi / 6)) {
        throw Error(ErrorCode::kInvalidArgument, "theta_ref must lie in [pi/2, 5pi/6]");
    }
    double ps = kPi * std::sin(theta_ref);
    double target = 1 / ps;
    double b_c = critical_b_bound(tol);
    double b;
    // Ends of the bracket are hit exactly at theta_ref = 5pi/6 (b = pi/2) and pi/2 (b = b_c).
    if (target >= 2 / kPi - 1e-15) {
        b = kPi / 2;
    } else if (target <= 1 / kPi + 1e-15) {
        b = b_c;
    } else {
        b = solve_scalar_root(
            [&](double x) {
                return std::sin(x) / x - target;
            },
            kPi / 2,
            b_c,
            tol);
    }
    CriticalPoint p;
    p.c_crit = std::sqrt(std::max(0.0, ps * ps - b * b));
    p.a_crit = -kPi * std::cos(theta_ref);
    p.theta_crit = d == 1 ? theta_ref : kPi - theta_ref;
    p.branch = CriticalBranch::kPostselected;
    p.d = d;
    return p;
}

CriticalPoint postselected_critical_point_at_a(double a, int d, double tol) {
    double a0 = kPi * std::sqrt(3.0) / 2;
    if (!(a >= 0 && a <= a0 + 1e-12)) {
        throw Error(ErrorCode::kInvalidArgument, "no postselected critical point at A=" + format_real(a));
    }
    double theta_ref = std::clamp(std::acos(-a / kPi), kPi / 2, 5 * kPi / 6);
    return postselected_critical_point(theta_ref, d, tol);
}

std::vector<CriticalPoint> postselected_critical_line(int d, int n_points, bool include_negative_a) {
    check_direction(d);
    if (n_points < 2) {
        throw Error(ErrorCode::kInvalidArgument, "critical line needs n_points >= 2");
    }
    std::vector<CriticalPoint> line;
    for (int i = 0; i < n_points; i++) {
        double t = i == n_points - 1 ? 5 * kPi / 6 : kPi / 2 + (kPi / 3) * i / (n_points - 1);
        line.push_back(postselected_critical_point(t, d));
    }
    if (include_negative_a) {
        // amp(C, -A, theta, d) = conj amp(C, A, pi - theta, d).
        for (int i = 0; i < n_points; i++) {
            CriticalPoint p = line[i];
            p.a_crit = -p.a_crit;
            p.theta_crit = kPi - p.theta_crit;
            line.push_back(p);
        }
    }
    return line;
}

double verify_critical_point(const CriticalPoint &p) {
    return std::abs(closed_form_bracket(p.c_crit, p.a_crit, p.theta_crit, p.d));
}

CriticalSearchResult find_critical_points(
    const std::function<Complex(double, double)> &amp,
    double a,
    int d,
    CriticalBranch branch,
    const CriticalSearchOptions &options) {
    check_direction(d);
    if (!(options.c_step > 0) || options.c_max < options.c_min || options.theta_steps < 4) {
        throw Error(ErrorCode::kInvalidArgument, "bad critical search grid");
    }
    int nc = (int)std::floor((options.c_max - options.c_min) / options.c_step + 1e-9) + 1;
    int nt = options.theta_steps - 1;
    std::vector<double> mag((size_t)nc * nt);
    auto c_at = [&](int i) {
        return options.c_min + i * options.c_step;
    };
    auto t_at = [&](int j) {
        return kPi * (j + 1) / options.theta_steps;
    };
    for (int i = 0; i < nc; i++) {
        for (int j = 0; j < nt; j++) {
            mag[(size_t)i * nt + j] = std::abs(amp(c_at(i), t_at(j)));
        }
    }

    CriticalSearchResult result;
    for (int i = 0; i < nc; i++) {
        for (int j = 0; j < nt; j++) {
            double v = mag[(size_t)i * nt + j];
            if (!(v < options.seed_threshold)) {
                continue;
            }
            bool is_min = true;
            for (int di = -1; di <= 1 && is_min; di++) {
                for (int dj = -1; dj <= 1; dj++) {
                    int ii = i + di, jj = j + dj;
                    if ((di || dj) && ii >= 0 && ii < nc && jj >= 0 && jj < nt && mag[(size_t)ii * nt + jj] < v) {
                        is_min = false;
                        break;
                    }
                }
            }
            if (!is_min) {
                continue;
            }
            std::pair<double, double> root;
            try {
                root = solve_complex_zero_2d(amp, {c_at(i), t_at(j)}, options.tol);
            } catch (const Error &) {
                result.skipped_seeds++;
                continue;
            }
            auto [c, t] = root;
            if (c < -1e-9 || !(t > 0 && t < kPi) || c > options.c_max + options.c_step) {
                continue;
            }
            c = std::max(c, 0.0);
            bool seen = false;
            for (const auto &p : result.points) {
                if (std::abs(p.c_crit - c) < 1e-6 && std::abs(p.theta_crit - t) < 1e-6) {
                    seen = true;
                }
            }
            if (!seen) {
                result.points.push_back({c, a, t, branch, d});
            }
        }
    }
    std::sort(result.points.begin(), result.points.end(), [](const CriticalPoint &x, const CriticalPoint &y) {
        return x.theta_crit < y.theta_crit;
    });
    return result;
}

CriticalSearchResult averaged_critical_points(double a, int d, const CriticalSearchOptions &options) {
    auto result = find_critical_points(
        [&](double c, double theta) {
            return averaged_limit_amplitude(c, a, theta, d);
        },
        a,
        d,
        CriticalBranch::kAveragedFirst,
        options);
    if (!result.points.empty()) {
        double c_low = result.points.front().c_crit;
        for (const auto &p : result.points) {
            c_low = std::min(c_low, p.c_crit);
        }
        for (auto &p : result.points) {
            p.branch = p.c_crit - c_low < 1e-6 ? CriticalBranch::kAveragedFirst : CriticalBranch::kAveragedSecond;
        }
    }
    return result;
}

CriticalSearchResult postselected_critical_points_numeric(double a, int d, const CriticalSearchOptions &options) {
    return find_critical_points(
        [&](double c, double theta) {
            return closed_form_amplitude(c, a, theta, d);
        },
        a,
        d,
        CriticalBranch::kPostselected,
        options);
}

double averaged_threshold(int d, double lo, double hi, double tol, const CriticalSearchOptions &options) {
    auto has_points = [&](double a) {
        return !averaged_critical_points(a, d, options).points.empty();
    };
    if (!(lo < hi) || !has_points(lo) || has_points(hi)) {
        throw Error(ErrorCode::kNoSignChange, "threshold bracket must have points at lo and none at hi");
    }
    while (hi - lo > tol) {
        double mid = (lo + hi) / 2;
        if (has_points(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2;
}

int phase_winding_on_loop(
    const std::function<Complex(double, double)> &f, double x0, double y0, double radius, int samples) {
    double total = 0;
    Complex prev = f(x0 + radius, y0);
    for (int k = 1; k <= samples; k++) {
        double t = 2 * kPi * k / samples;
        Complex cur = f(x0 + radius * std::cos(t), y0 + radius * std::sin(t));
        total += wrap_angle(std::arg(cur) - std::arg(prev));
        prev = cur;
    }
    return (int)std::lround(total / (2 * kPi));
}

}  // namespace wmphase
