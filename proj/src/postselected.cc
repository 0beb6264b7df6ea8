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

#include <cmath>

#include "wmphase/error.h"

namespace wmphase {

PhaseResult PhaseResult::from(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw Error(ErrorCode::kNonFinite, "non-finite amplitude");
    }
    PhaseResult r;
    r.amplitude = z;
    r.magnitude = std::abs(z);
    r.phase = z == Complex{} ? 0.0 : wrap_angle(std::arg(z));
    return r;
}

static void z_and_tau(double c, double a, double theta, int d, Complex &z, Complex &tau) {
    z = Complex(c, a + kPi * d * std::cos(theta));
    double ps = kPi * std::sin(theta);
    tau = std::sqrt(z * z - ps * ps);
}

Complex closed_form_amplitude(double c, double a, double theta, int d, bool flip_tau) {
    Complex z, tau;
    z_and_tau(c, a, theta, d, z, tau);
    if (flip_tau) {
        tau = -tau;
    }
    Complex body;
    if (std::abs(tau) < 1e-4) {
        Complex t2 = tau * tau;
        body = std::exp(-z) * ((1.0 + t2 / 2.0 + t2 * t2 / 24.0) + z * (1.0 + t2 / 6.0 + t2 * t2 / 120.0));
    } else {
        // Exponents stay bounded: Re(tau) and C have the same scale, so neither term overflows at large C.
        body = 0.5 * (std::exp(tau - z) * (1.0 + z / tau) + std::exp(-tau - z) * (1.0 - z / tau));
    }
    return std::polar(1.0, kPi * d * (std::cos(theta) - 1)) * body;
}

Complex closed_form_bracket(double c, double a, double theta, int d) {
    Complex z, tau;
    z_and_tau(c, a, theta, d, z, tau);
    if (std::abs(tau) < 1e-4) {
        Complex t2 = tau * tau;
        return (1.0 + t2 / 2.0 + t2 * t2 / 24.0) + z * (1.0 + t2 / 6.0 + t2 * t2 / 120.0);
    }
    return std::cosh(tau) + z * std::sinh(tau) / tau;
}

PhaseResult amplitude_closed_form(const ProtocolParams &pp) {
    pp.validate();
    if (!pp.infinite()) {
        throw Error(ErrorCode::kInvalidArgument, "closed form is the N -> infinity limit " + pp.describe());
    }
    return PhaseResult::from(closed_form_amplitude(pp.c, pp.a, pp.theta, pp.d));
}

PhaseResult amplitude_finite_n(const ProtocolParams &pp, KrausModel model) {
    pp.validate();
    int64_t n = pp.steps();
    CMat2 dr = delta_r(pp);
    CVec2 v = dr * CVec2{1.0, 0.0};
    if (n > 0) {
        Complex m0 = kraus_model(pp, 0, model)(1, 1);
        for (int64_t k = 0; k < n; k++) {
            v[1] *= m0;
            v = dr * v;
        }
    }
    return PhaseResult::from(v[0]);
}

static double segment_distance_to_origin(Complex z0, Complex z1) {
    Complex dz = z1 - z0;
    double len2 = std::norm(dz);
    if (len2 == 0) {
        return std::abs(z0);
    }
    double t = std::clamp(-(std::conj(z0) * dz).real() / len2, 0.0, 1.0);
    return std::abs(z0 + t * dz);
}

PhaseCurve trace_phase_curve(
    const std::function<Complex(double)> &f, int grid_hint, const std::string &context, const TraceOptions &options) {
    if (grid_hint < 2) {
        throw Error(ErrorCode::kInvalidArgument, "phase curve needs at least 2 nodes " + context);
    }
    struct Node {
        double t;
        Complex z;
    };
    auto eval = [&](double t) -> Node {
        Complex z = f(t);
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(ErrorCode::kNonFinite, "non-finite value at theta=" + format_real(t) + " " + context);
        }
        return {t, z};
    };

    PhaseCurve curve;
    auto push = [&](const Node &node, double phase) {
        curve.thetas.push_back(node.t);
        curve.values.push_back(node.z);
        curve.unwrapped_phase.push_back(phase);
        curve.magnitude.push_back(std::abs(node.z));
    };

    Node left = eval(0.0);
    double phase = left.z == Complex{} ? 0.0 : std::arg(left.z);
    push(left, phase);
    size_t evaluations = 1;

    std::vector<std::pair<Node, Node>> stack;
    for (int i = 1; i < grid_hint; i++) {
        double t = i == grid_hint - 1 ? kPi : kPi * i / (grid_hint - 1);
        Node right = eval(t);
        evaluations++;
        stack.push_back({left, right});
        while (!stack.empty()) {
            auto [l, r] = stack.back();
            stack.pop_back();
            double step = (l.z == Complex{} || r.z == Complex{}) ? kPi : wrap_angle(std::arg(r.z) - std::arg(l.z));
            bool refine = std::abs(step) > options.max_step ||
                          std::min(std::abs(l.z), std::abs(r.z)) < options.small_magnitude;
            if (refine && r.t - l.t > options.min_interval) {
                Node m = eval(l.t + (r.t - l.t) / 2);
                if (++evaluations > options.max_nodes) {
                    throw Error(ErrorCode::kNoConvergence, "phase curve refinement exceeded node budget " + context);
                }
                stack.push_back({m, r});
                stack.push_back({l, m});
                continue;
            }
            if (refine && segment_distance_to_origin(l.z, r.z) < options.critical_magnitude) {
                throw Error(
                    ErrorCode::kUndefinedAtCriticalPoint,
                    "amplitude vanishes near theta=" + format_real(l.t) + " " + context);
            }
            phase += step;
            push(r, phase);
        }
        left = right;
    }
    return curve;
}

PhaseCurve phase_curve(double c, double a, int d, int grid_hint) {
    ProtocolParams pp{c, a, 0.0, d, std::nullopt};
    pp.validate();
    if (grid_hint < 16) {
        throw Error(ErrorCode::kInvalidArgument, "grid_hint must be >= 16 " + pp.describe());
    }
    return trace_phase_curve(
        [&](double theta) {
            return closed_form_amplitude(c, a, theta, d);
        },
        grid_hint,
        pp.describe());
}

int winding_number(const PhaseCurve &curve) {
    if (curve.thetas.size() < 2 || curve.thetas.front() != 0.0 || curve.thetas.back() != kPi) {
        throw Error(ErrorCode::kInvalidArgument, "winding number needs a curve covering [0, pi]");
    }
    double w = (curve.unwrapped_phase.back() - curve.unwrapped_phase.front()) / (2 * kPi);
    double r = std::round(w);
    if (std::abs(w - r) > 1e-3) {
        throw Error(ErrorCode::kNotQuantized, "phase change " + format_real(w) + " x 2pi is not an integer");
    }
    return (int)r;
}

}  // namespace wmphase
