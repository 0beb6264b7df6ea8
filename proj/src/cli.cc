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

#include "wmphase/cli.h"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "wmphase/averaged.h"
#include "wmphase/critical.h"
#include "wmphase/error.h"
#include "wmphase/interferometer.h"
#include "wmphase/limits.h"
#include "wmphase/montecarlo.h"
#include "wmphase/postselected.h"
#include "wmphase/trajectories.h"

namespace wmphase::cli {

using json = nlohmann::ordered_json;

namespace {

const std::vector<std::string> kCommands = {
    "postselected",
    "averaged",
    "winding",
    "phase-diagram",
    "critical-line",
    "trajectory",
    "montecarlo",
    "interferometer",
    "scaling",
};

std::string csv_field(const Value &v) {
    if (const double *x = std::get_if<double>(&v)) {
        return format_real(*x);
    }
    if (const int64_t *x = std::get_if<int64_t>(&v)) {
        return std::to_string(*x);
    }
    const std::string &s = std::get<std::string>(v);
    if (s.find_first_of(",\"\r\n") == std::string::npos) {
        return s;
    }
    std::string quoted = "\"";
    for (char ch : s) {
        if (ch == '"') {
            quoted += '"';
        }
        quoted += ch;
    }
    return quoted + "\"";
}

json json_value(const Value &v) {
    return std::visit(
        [](const auto &x) -> json {
            return json(x);
        },
        v);
}

[[noreturn]] void invalid(const std::string &message) {
    throw Error(ErrorCode::kInvalidArgument, message);
}

}  // namespace

std::string emit(const Table &table, Format format, bool as_object) {
    for (const auto &row : table.rows) {
        if (row.size() != table.columns.size()) {
            invalid("row width differs from header width");
        }
    }
    if (format == Format::kCsv) {
        std::string out;
        for (size_t k = 0; k < table.columns.size(); k++) {
            out += (k ? "," : "") + csv_field(table.columns[k]);
        }
        out += "\n";
        for (const auto &row : table.rows) {
            for (size_t k = 0; k < row.size(); k++) {
                out += (k ? "," : "") + csv_field(row[k]);
            }
            out += "\n";
        }
        return out;
    }
    json rows = json::array();
    for (const auto &row : table.rows) {
        json obj = json::object();
        for (size_t k = 0; k < row.size(); k++) {
            obj[table.columns[k]] = json_value(row[k]);
        }
        rows.push_back(std::move(obj));
    }
    if (as_object && rows.size() == 1) {
        return rows[0].dump(2) + "\n";
    }
    return rows.dump(2) + "\n";
}

Table parse_json_table(const std::string &text) {
    json doc = json::parse(text);
    if (doc.is_object()) {
        doc = json::array({doc});
    }
    Table table;
    for (const auto &obj : doc) {
        if (table.columns.empty()) {
            for (const auto &item : obj.items()) {
                table.columns.push_back(item.key());
            }
        }
        std::vector<Value> row;
        for (const auto &item : obj.items()) {
            const json &v = item.value();
            if (v.is_number_integer()) {
                row.push_back(v.get<int64_t>());
            } else if (v.is_number()) {
                row.push_back(v.get<double>());
            } else if (v.is_null()) {
                row.push_back(NAN);
            } else {
                row.push_back(v.get<std::string>());
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

double parse_angle(const std::string &text) {
    std::string s = text;
    double scale = 1;
    if (s.size() >= 2 && s.compare(s.size() - 2, 2, "pi") == 0) {
        s.resize(s.size() - 2);
        scale = kPi;
        if (s.empty() || s == "+") {
            return scale;
        }
        if (s == "-") {
            return -scale;
        }
    }
    try {
        size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) {
            invalid("bad angle '" + text + "'");
        }
        return v * scale;
    } catch (const std::logic_error &) {
        invalid("bad angle '" + text + "'");
    }
}

std::optional<int64_t> parse_n(const std::string &text) {
    if (text == "inf" || text == "infinity") {
        return std::nullopt;
    }
    try {
        size_t used = 0;
        long long v = std::stoll(text, &used);
        if (used != text.size() || v < 0) {
            invalid("bad N '" + text + "'");
        }
        return (int64_t)v;
    } catch (const std::logic_error &) {
        invalid("bad N '" + text + "'");
    }
}

void write_atomic(const std::string &path, const std::string &bytes) {
    std::string tmp = path + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw Error(ErrorCode::kIoError, "cannot open '" + tmp + "' for writing");
        }
        f << bytes;
        f.flush();
        if (!f) {
            throw Error(ErrorCode::kIoError, "write to '" + tmp + "' failed");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw Error(ErrorCode::kIoError, "cannot move output into '" + path + "'");
    }
}

void RunConfig::validate() const {
    if (curve && (command != "winding" || !sweeps.empty())) {
        invalid("--curve applies to a single winding point");
    }
    if (std::find(kCommands.begin(), kCommands.end(), command) == kCommands.end()) {
        invalid("unknown command '" + command + "'");
    }
    if (sweeps.size() > 2) {
        invalid("at most two swept variables");
    }
    for (size_t i = 0; i < sweeps.size(); i++) {
        const Sweep &s = sweeps[i];
        if (s.var != "C" && s.var != "A" && s.var != "theta" && s.var != "d" && s.var != "N") {
            invalid("cannot sweep '" + s.var + "'");
        }
        if (s.steps < 2) {
            invalid("sweep of " + s.var + " needs steps >= 2");
        }
        if (!std::isfinite(s.min) || !std::isfinite(s.max)) {
            invalid("sweep of " + s.var + " has non-finite bounds");
        }
        for (size_t j = 0; j < i; j++) {
            if (sweeps[j].var == s.var) {
                invalid("swept variables must be distinct");
            }
        }
    }
    if (!model.empty() && model != "scaled" && model != "exact") {
        invalid("model must be 'scaled' or 'exact'");
    }
    if (workers < 1) {
        invalid("worker count must be >= 1");
    }
}

namespace {

struct CellOutput {
    std::vector<std::vector<Value>> rows;
    std::string note;
};

KrausModel model_for(const RunConfig &cfg, KrausModel fallback) {
    if (cfg.model.empty()) {
        return fallback;
    }
    return cfg.model == "exact" ? KrausModel::kExact : KrausModel::kScaled;
}

Value n_value(const ProtocolParams &pp) {
    return pp.n.has_value() ? Value(*pp.n) : Value(std::string("inf"));
}

std::vector<Value> param_values(const ProtocolParams &pp) {
    return {pp.c, pp.a, pp.theta, (int64_t)pp.d, n_value(pp)};
}

const std::vector<std::string> kParamColumns = {"C", "A", "theta", "d", "N"};

std::vector<std::string> with_params(std::vector<std::string> extra) {
    std::vector<std::string> cols = kParamColumns;
    cols.insert(cols.end(), extra.begin(), extra.end());
    return cols;
}

std::vector<std::string> columns_for(const RunConfig &cfg) {
    const std::string &c = cfg.command;
    if (c == "postselected") {
        return with_params({"re", "im", "phase", "prob"});
    }
    if (c == "averaged") {
        return with_params({"re", "im", "chi_bar", "alpha"});
    }
    if (c == "winding") {
        if (cfg.curve) {
            return {"theta", "re", "im", "phase_unwrapped", "magnitude"};
        }
        return {"C", "A", "d", "protocol", "winding"};
    }
    if (c == "phase-diagram") {
        return with_params({cfg.quantity});
    }
    if (c == "critical-line") {
        return {"branch", "theta_crit", "a_crit", "c_crit"};
    }
    if (c == "trajectory") {
        return {"theta", "k", "x", "y", "z"};
    }
    if (c == "montecarlo") {
        return with_params(
            {"n_rs", "seed", "estimate_re", "estimate_im", "stderr", "accepted_fraction", "exact_re", "exact_im"});
    }
    if (c == "interferometer") {
        return with_params({"setup", "i0", "i1", "i2", "S", "interference_re", "interference_im"});
    }
    return {"a_exp", "b_exp", "c_prime", "a_prime", "theta", "d", "N", "C", "A", "re", "im", "phase", "prob", "berry"};
}

bool single_row_command(const std::string &c) {
    return c != "critical-line" && c != "trajectory";
}

Complex postselected_value(const ProtocolParams &pp, KrausModel model) {
    return pp.infinite() ? amplitude_closed_form(pp).amplitude : amplitude_finite_n(pp, model).amplitude;
}

AveragedResult averaged_value(const RunConfig &cfg, const ProtocolParams &pp) {
    if (pp.infinite()) {
        return averaged_amplitude(pp);
    }
    AveragedMethod method = cfg.method == "bruteforce" ? AveragedMethod::kBruteForce : AveragedMethod::kTransfer;
    return averaged_finite_n(pp, method, model_for(cfg, KrausModel::kScaled));
}

CellOutput compute_cell(const RunConfig &cfg, const ProtocolParams &pp) {
    CellOutput out;
    const std::string &c = cfg.command;
    pp.validate();
    if (c == "postselected") {
        PhaseResult r = PhaseResult::from(postselected_value(pp, model_for(cfg, KrausModel::kScaled)));
        auto row = param_values(pp);
        row.insert(row.end(), {r.amplitude.real(), r.amplitude.imag(), r.phase, r.probability()});
        out.rows.push_back(row);
    } else if (c == "averaged") {
        AveragedResult r = averaged_value(cfg, pp);
        auto row = param_values(pp);
        row.insert(row.end(), {r.amplitude.real(), r.amplitude.imag(), r.chi_bar, r.alpha});
        out.rows.push_back(row);
    } else if (c == "winding" && cfg.curve) {
        PhaseCurve curve;
        if (cfg.protocol == "postselected") {
            curve = phase_curve(pp.c, pp.a, pp.d, cfg.grid);
        } else if (cfg.protocol == "averaged") {
            curve = averaged_phase_curve(pp.c, pp.a, pp.d, cfg.grid);
        } else {
            invalid("--curve needs protocol postselected or averaged");
        }
        for (size_t k = 0; k < curve.thetas.size(); k++) {
            out.rows.push_back({curve.thetas[k], curve.values[k].real(), curve.values[k].imag(),
                                curve.unwrapped_phase[k], curve.magnitude[k]});
        }
    } else if (c == "winding") {
        int w;
        if (cfg.protocol == "postselected") {
            w = winding_number(phase_curve(pp.c, pp.a, pp.d, cfg.grid));
        } else if (cfg.protocol == "averaged") {
            w = averaged_winding(averaged_phase_curve(pp.c, pp.a, pp.d, cfg.grid));
        } else if (cfg.protocol == "family") {
            w = family_winding_classifier(pp.c, pp.a, pp.d, std::max(cfg.grid, 64), pp.n.value_or(1000));
        } else {
            invalid("winding protocol must be postselected, averaged or family");
        }
        out.rows.push_back({pp.c, pp.a, (int64_t)pp.d, cfg.protocol, (int64_t)w});
    } else if (c == "phase-diagram") {
        double v;
        const std::string &q = cfg.quantity;
        if (q == "logP" || q == "prob" || q == "phase") {
            Complex z = postselected_value(pp, model_for(cfg, KrausModel::kScaled));
            double p = std::norm(z);
            v = q == "logP" ? std::log(p) : q == "prob" ? p : (z == Complex{} ? NAN : wrap_angle(std::arg(z)));
        } else if (q == "alpha" || q == "chi_bar" || q == "abs") {
            Complex z = pp.infinite() ? averaged_limit_amplitude(pp.c, pp.a, pp.theta, pp.d)
                                      : averaged_value(cfg, pp).amplitude;
            AveragedResult r = AveragedResult::from(z);
            v = q == "alpha" ? r.alpha : q == "abs" ? std::abs(z) : r.chi_bar;
        } else {
            invalid("quantity must be one of logP, prob, phase, alpha, chi_bar, abs");
        }
        auto row = param_values(pp);
        row.push_back(v);
        out.rows.push_back(row);
    } else if (c == "critical-line") {
        std::vector<CriticalPoint> pts;
        if (cfg.protocol == "postselected") {
            pts = postselected_critical_line(pp.d, cfg.points, cfg.mirror);
        } else if (cfg.protocol == "averaged") {
            auto found = averaged_critical_points(pp.a, pp.d);
            pts = found.points;
            out.note = "skipped seeds " + std::to_string(found.skipped_seeds);
        } else {
            invalid("critical-line protocol must be postselected or averaged");
        }
        for (const auto &p : pts) {
            out.rows.push_back({std::string(branch_name(p.branch)), p.theta_crit, p.a_crit, p.c_crit});
        }
    } else if (c == "trajectory") {
        ReadoutSequence seq;
        if (!cfg.readouts.empty()) {
            for (char ch : cfg.readouts) {
                if (ch != '0' && ch != '1') {
                    throw Error(ErrorCode::kBadReadout, "readouts must be a string of 0 and 1");
                }
                seq.bits.push_back((uint8_t)(ch - '0'));
            }
            if (pp.n.has_value() && *pp.n != (int64_t)seq.bits.size()) {
                invalid("--N disagrees with the readout string length " + pp.describe());
            }
        } else {
            seq = ReadoutSequence::all_zeros(pp.steps());
        }
        seq.final_projective = cfg.final_readout;
        ProtocolParams q = pp.with_n((int64_t)seq.bits.size());
        Trajectory traj = evolve(q, seq, model_for(cfg, KrausModel::kScaled));
        for (size_t k = 0; k < traj.bloch_points.size(); k++) {
            const auto &b = traj.bloch_points[k];
            out.rows.push_back({q.theta, (int64_t)k, b[0], b[1], b[2]});
        }
        if (traj.amplitude != Complex{} && traj.first_null < 0) {
            try {
                double total = std::arg(traj.amplitude);
                double geo = pancharatnam_phase(traj);
                out.note = "total " + format_real(total) + ", pancharatnam " + format_real(geo) + ", dynamical " +
                           format_real(wrap_angle(total - geo));
            } catch (const Error &) {
                out.note = "pancharatnam phase undefined (orthogonal neighbours)";
            }
        }
    } else if (c == "montecarlo") {
        KrausModel model = model_for(cfg, KrausModel::kExact);
        McEstimate est = estimate_averaged(pp, cfg.n_rs, cfg.seed, model);
        Complex exact = averaged_finite_n(pp, AveragedMethod::kTransfer, model).amplitude;
        auto row = param_values(pp);
        row.insert(
            row.end(),
            {(int64_t)est.n_samples,
             (int64_t)est.seed,
             est.estimate.real(),
             est.estimate.imag(),
             est.standard_error,
             est.accepted_fraction,
             exact.real(),
             exact.imag()});
        out.rows.push_back(row);
    } else if (c == "interferometer") {
        KrausModel model = model_for(cfg, KrausModel::kExact);
        IntensityPair ip;
        if (cfg.protocol == "postselected") {
            ip = intensities_postselected(pp, cfg.i0, model);
        } else if (cfg.protocol == "averaged") {
            ip = intensities_averaged(pp, cfg.i0, model);
        } else {
            invalid("interferometer setup must be postselected or averaged");
        }
        auto row = param_values(pp);
        row.insert(
            row.end(),
            {cfg.protocol, ip.i0, ip.i1, ip.i2, ip.surviving_weight, ip.interference.real(), ip.interference.imag()});
        out.rows.push_back(row);
    } else {
        ScalingStudyResult r =
            scaling_study(cfg.a_exp, cfg.b_exp, cfg.c_prime, cfg.a_prime, pp.theta, pp.d, pp.n.value_or(10000));
        out.rows.push_back(
            {cfg.a_exp,
             cfg.b_exp,
             cfg.c_prime,
             cfg.a_prime,
             pp.theta,
             (int64_t)pp.d,
             (int64_t)r.traj.states.size() - 1,
             r.c,
             r.a,
             r.result.amplitude.real(),
             r.result.amplitude.imag(),
             r.result.phase,
             r.result.probability(),
             -kPi * pp.d * (1 - std::cos(pp.theta))});
    }
    return out;
}

std::vector<ProtocolParams> expand_sweeps(const RunConfig &cfg) {
    std::vector<ProtocolParams> cells = {cfg.params};
    for (const Sweep &s : cfg.sweeps) {
        std::vector<ProtocolParams> next;
        for (const auto &base : cells) {
            for (int i = 0; i < s.steps; i++) {
                double v = i == s.steps - 1 ? s.max : s.min + (s.max - s.min) * i / (s.steps - 1);
                ProtocolParams pp = base;
                if (s.var == "C") {
                    pp.c = v;
                } else if (s.var == "A") {
                    pp.a = v;
                } else if (s.var == "theta") {
                    pp.theta = v;
                } else if (s.var == "d") {
                    pp.d = (int)std::lround(v);
                } else {
                    pp.n = (int64_t)std::llround(v);
                }
                next.push_back(pp);
            }
        }
        cells = std::move(next);
    }
    return cells;
}

}  // namespace

int run(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    try {
        cfg.validate();
        std::vector<ProtocolParams> cells = expand_sweeps(cfg);
        std::vector<CellOutput> results(cells.size());
        std::vector<std::exception_ptr> failures(cells.size());

        size_t workers = std::min<size_t>((size_t)cfg.workers, cells.size());
        std::atomic<size_t> next{0};
        auto work = [&]() {
            for (size_t i = next++; i < cells.size(); i = next++) {
                try {
                    results[i] = compute_cell(cfg, cells[i]);
                } catch (...) {
                    failures[i] = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        for (size_t t = 1; t < workers; t++) {
            pool.emplace_back(work);
        }
        work();
        for (auto &t : pool) {
            t.join();
        }
        for (const auto &f : failures) {
            if (f) {
                std::rethrow_exception(f);
            }
        }

        Table table;
        table.columns = columns_for(cfg);
        for (auto &r : results) {
            for (auto &row : r.rows) {
                table.rows.push_back(std::move(row));
            }
        }
        bool point = cfg.sweeps.empty() && single_row_command(cfg.command) && !cfg.curve;
        Format format = cfg.format.value_or(point ? Format::kJson : Format::kCsv);
        std::string bytes;
        if (cfg.command == "montecarlo" && point && format == Format::kJson) {
            const auto &row = table.rows.front();
            const ProtocolParams &pp = cells.front();
            json obj = json::object();
            obj["params"] = {{"C", pp.c}, {"A", pp.a}, {"theta", pp.theta}, {"d", pp.d}, {"N", *pp.n}};
            obj["n_rs"] = std::get<int64_t>(row[5]);
            obj["seed"] = cfg.seed;
            obj["estimate"] = {{"re", std::get<double>(row[7])}, {"im", std::get<double>(row[8])}};
            obj["stderr"] = std::get<double>(row[9]);
            obj["accepted_fraction"] = std::get<double>(row[10]);
            obj["exact"] = {{"re", std::get<double>(row[11])}, {"im", std::get<double>(row[12])}};
            bytes = obj.dump(2) + "\n";
        } else {
            bytes = emit(table, format, point);
        }
        if (cfg.output_path.empty()) {
            out << bytes;
        } else {
            write_atomic(cfg.output_path, bytes);
        }
        err << cfg.command << ": " << table.rows.size() << " row(s) -> "
            << (cfg.output_path.empty() ? std::string("stdout") : cfg.output_path);
        if (results.size() == 1 && !results.front().note.empty()) {
            err << " [" << results.front().note << "]";
        }
        err << "\n";
        return 0;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return is_validation_error(e.code()) ? 2 : 3;
    } catch (const std::bad_optional_access &) {
        err << "error: this command needs a finite --N\n";
        return 2;
    }
}

namespace {

void build_app(CLI::App &app, RunConfig &cfg, std::string &theta, std::string &n, std::vector<std::string> &sweep,
               std::string &format) {
    app.set_config("--config", "", "key=value file with the same names as the long flags");
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--C", cfg.params.c, "measurement strength C");
    app.add_option("--A", cfg.params.a, "asymmetry A");
    app.add_option("--theta", theta, "polar angle in radians; suffix pi allowed (0.75pi)");
    app.add_option("--d", cfg.params.d, "direction +1 or -1");
    app.add_option("--N", n, "number of weak measurements, or inf");
    app.add_option("--sweep", sweep, "VAR MIN MAX STEPS; repeat for a second variable")
        ->type_size(4)
        ->expected(1, 2)
        ->allow_extra_args(false);
    app.add_option("--output", cfg.output_path, "output file (written atomically); default stdout");
    app.add_option("--format", format, "csv or json");
    app.add_option("--seed", cfg.seed, "Monte Carlo seed");
    app.add_option("--protocol,--setup", cfg.protocol, "postselected, averaged or family");
    app.add_option("--method", cfg.method, "averaged: limit, transfer or bruteforce");
    app.add_option("--model", cfg.model, "finite-N Kraus model: scaled or exact");
    app.add_option("--quantity", cfg.quantity, "phase-diagram value: logP, prob, phase, alpha, chi_bar, abs");
    app.add_option("--grid", cfg.grid, "initial theta nodes for phase curves");
    app.add_option("--points", cfg.points, "points along the postselected critical line");
    app.add_flag("--mirror", cfg.mirror, "also emit the A < 0 critical branch");
    app.add_flag("--curve", cfg.curve, "winding: emit theta,re,im,phase_unwrapped,magnitude rows");
    app.add_option("--n-rs", cfg.n_rs, "Monte Carlo sample count");
    app.add_option("--I0", cfg.i0, "input beam intensity");
    app.add_option("--readouts", cfg.readouts, "readout string such as 0010");
    app.add_option("--final", cfg.final_readout, "final projective readout (0 or 1)");
    app.add_option("--a-exp", cfg.a_exp, "scaling exponent for g");
    app.add_option("--b-exp", cfg.b_exp, "scaling exponent for theta_D");
    app.add_option("--c-prime", cfg.c_prime, "scaling prefactor C'");
    app.add_option("--a-prime", cfg.a_prime, "scaling prefactor A'");
    app.add_option("--tol", cfg.tol, "root-finding tolerance");
    for (const auto &name : kCommands) {
        app.add_subcommand(name, "run " + name)->fallthrough();
    }
}

void finish_config(CLI::App &app, RunConfig &cfg, const std::string &theta, const std::string &n,
                   const std::vector<std::string> &sweep, const std::string &format) {
    cfg.command = app.get_subcommands().front()->get_name();
    if (!theta.empty()) {
        cfg.params.theta = parse_angle(theta);
    }
    cfg.params.n = n.empty() ? std::nullopt : parse_n(n);
    if (sweep.size() % 4 != 0) {
        invalid("--sweep takes VAR MIN MAX STEPS");
    }
    for (size_t k = 0; k < sweep.size(); k += 4) {
        Sweep s;
        s.var = sweep[k];
        s.min = s.var == "theta" ? parse_angle(sweep[k + 1]) : std::stod(sweep[k + 1]);
        s.max = s.var == "theta" ? parse_angle(sweep[k + 2]) : std::stod(sweep[k + 2]);
        s.steps = std::stoi(sweep[k + 3]);
        cfg.sweeps.push_back(s);
    }
    if (format == "csv") {
        cfg.format = Format::kCsv;
    } else if (format == "json") {
        cfg.format = Format::kJson;
    } else if (!format.empty()) {
        invalid("format must be csv or json");
    }
    if (const char *w = std::getenv("WMPHASE_WORKERS")) {
        cfg.workers = std::max(1, std::atoi(w));
    } else {
        cfg.workers = std::max(1u, std::thread::hardware_concurrency());
    }
}

}  // namespace

RunConfig parse_args(int argc, const char *const *argv) {
    CLI::App app{"weak-measurement-induced phases"};
    RunConfig cfg;
    std::string theta, n, format;
    std::vector<std::string> sweep;
    build_app(app, cfg, theta, n, sweep, format);
    app.parse(argc, argv);
    finish_config(app, cfg, theta, n, sweep, format);
    return cfg;
}

int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"weak-measurement-induced phases"};
    RunConfig cfg;
    std::string theta, n, format;
    std::vector<std::string> sweep;
    build_app(app, cfg, theta, n, sweep, format);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    try {
        finish_config(app, cfg, theta, n, sweep, format);
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error &e) {
        err << "error: bad numeric argument (" << e.what() << ")\n";
        return 2;
    }
    return run(cfg, out, err);
}

}  // namespace wmphase::cli
