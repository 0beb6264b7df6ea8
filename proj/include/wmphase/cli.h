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

#ifndef WMPHASE_CLI_H
#define WMPHASE_CLI_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wmphase/measurement.h"

namespace wmphase::cli {

using Value = std::variant<double, int64_t, std::string>;

/// Homogeneous records: every row has one value per column.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Value>> rows;
};

enum class Format {
    kCsv,
    kJson,
};

/// CSV: header plus one line per row, RFC-4180 quoting, shortest round-trip floats.
/// JSON: array of row objects with keys in column order, or a single object when as_object is set.
std::string emit(const Table &table, Format format, bool as_object = false);
/// Inverse of the JSON path of emit (arrays of row objects, or a single object).
Table parse_json_table(const std::string &text);

/// Radians, with an optional "pi" suffix multiplying the prefix (e.g. "0.75pi", "-pi").
double parse_angle(const std::string &text);
/// Integer N, or "inf" for the N -> infinity limit.
std::optional<int64_t> parse_n(const std::string &text);

/// Writes to a temporary file next to path, then renames it into place. Throws IoError.
void write_atomic(const std::string &path, const std::string &bytes);

struct Sweep {
    std::string var;  // C, A, theta, d or N
    double min = 0;
    double max = 0;
    int steps = 2;
};

struct RunConfig {
    std::string command;
    ProtocolParams params;
    std::vector<Sweep> sweeps;
    std::string output_path;  // empty: stdout
    std::optional<Format> format;
    uint64_t seed = 1;

    std::string protocol = "postselected";  // winding, critical-line, interferometer setup
    std::string method = "limit";           // averaged: limit, transfer, bruteforce
    std::string model;                      // scaled or exact; empty picks the command default
    std::string quantity = "logP";          // phase-diagram
    int grid = 64;
    int points = 200;
    bool mirror = false;
    bool curve = false;  // winding: emit the traced phase curve instead of the integer
    int64_t n_rs = 100;
    double i0 = 1;
    std::string readouts;
    int final_readout = 0;
    double a_exp = 0.5;
    double b_exp = 0.5;
    double c_prime = 2;
    double a_prime = -1;
    double tol = 1e-12;
    int workers = 1;

    /// Throws InvalidArgument on inconsistent settings.
    void validate() const;
};

/// Parses argv into a RunConfig (CLI11). Throws CLI::ParseError subclasses on bad syntax.
RunConfig parse_args(int argc, const char *const *argv);

/// Runs the configured command. Returns 0 on success, 2 on validation errors, 3 on numerical failures.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Full entry point: parse, run, map errors to exit codes.
int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace wmphase::cli

#endif
