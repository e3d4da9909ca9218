// Copyright 2026 The uurbound Authors
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


// uurbound — lower bounds on products of unitary variances.
//
//   uurbound bounds  --example ex1 --dim 3 --theta 1.0
//   uurbound sweep   --example ex1 --dim 6 --m 3 --steps 200 --output ex1.csv
//   uurbound compare --example ex3
//   uurbound check   --seed 42 --trials 1000
//
// Exit codes: 0 ok, 1 invariant violation, 2 input error, 3 search cap hit.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "uur/error.hpp"
#include "uur/runs.hpp"

int main(int argc, char** argv) {
    using namespace uur;

    CLI::App app{"Lower bounds on products of unitary variances"};
    app.set_version_flag("--version", "uurbound 1.0.0");

    RunConfig cfg;
    std::string command;
    std::string example, flavor, format;
    app.add_option("command", command, "bounds | sweep | compare | check")
        ->required()
        ->check(CLI::IsMember({"bounds", "sweep", "compare", "check"}));

    auto* input = app.add_option("--input", cfg.input_path, "scenario JSON file");
    auto* ex = app.add_option("--example", example, "built-in scenario ex1..ex6")
                   ->check(CLI::IsMember({"ex1", "ex2", "ex3", "ex4", "ex5", "ex6"}));
    input->excludes(ex);
    app.add_option("--dim", cfg.dim, "dimension for scenarios that accept one")->check(CLI::PositiveNumber);
    app.add_option("--theta", cfg.theta, "state parameter for `bounds`");
    app.add_option("--theta-min", cfg.theta_min, "sweep start");
    app.add_option("--theta-max", cfg.theta_max, "sweep end");
    app.add_option("--steps", cfg.steps, "number of θ points (≥ 1)");
    app.add_option("--m", cfg.m, "block size")->check(CLI::PositiveNumber);
    app.add_option("--v", cfg.v, "convex weight in [0, 1]");
    app.add_option("--flavor", flavor, "multi-operator flavor")
        ->check(CLI::IsMember({"plain", "convex", "tilde"}));
    app.add_option("--cap", cfg.cap, "max subsets enumerated per block size")->check(CLI::PositiveNumber);
    app.add_flag("--greedy", cfg.greedy, "heuristic block search instead of exact enumeration");
    app.add_option("--seed", cfg.seed, "check: RNG seed");
    app.add_option("--trials", cfg.trials, "check: instances per suite")->check(CLI::PositiveNumber);
    app.add_option("--max-dim", cfg.max_dim, "check: largest random dimension")->check(CLI::Range(2, 16));
    app.add_option("--inject-fault", cfg.inject_fault, "check: corrupt a quantity to exercise the harness")
        ->check(CLI::IsMember({"k_m"}));
    app.add_option("--minuend", cfg.minuend, "compare: column to subtract from (default k_m_v)");
    app.add_option("--subtrahends", cfg.subtrahends, "compare: comma-separated columns")->delimiter(',');
    app.add_option("--output", cfg.output_path, "write the report here instead of stdout");
    app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    static const std::map<std::string, Command> commands{
        {"bounds", Command::Bounds}, {"sweep", Command::Sweep}, {"compare", Command::Compare}, {"check", Command::Check}};
    cfg.command = commands.at(command);
    try {
        if (!example.empty()) cfg.example = example_from_string(example);
        if (!flavor.empty()) cfg.flavor = flavor_from_string(flavor);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    if (!format.empty()) cfg.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;

    return run(cfg, std::cout, std::cerr);
}
