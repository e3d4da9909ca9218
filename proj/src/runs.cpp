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


#include "uur/runs.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"
#include "uur/check.hpp"
#include "uur/error.hpp"

namespace uur {

using nlohmann::ordered_json;

namespace {

// Raised when an emitted row fails its chain re-assertion.
class InvariantViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Everything a command needs once --example / --input is resolved.
struct Source {
    std::string label;
    std::size_t dimension = 0;
    std::vector<NamedOperator> operators;
    std::function<StateSpec(double)> state;  // built-in scenarios only
    std::optional<StateSpec> fixed_state;    // --input
    ScenarioDefaults defaults;
    io::InputParams params;
    bool state_normalized = false;
    std::string notes;
};

Source resolve_source(const RunConfig& config) {
    Source src;
    if (config.input_path) {
        io::InputDocument doc = io::load_input(*config.input_path);
        src.label = "input";
        src.dimension = doc.dimension;
        src.operators = std::move(doc.operators);
        src.fixed_state = std::move(doc.state);
        src.params = doc.params;
        return src;
    }
    const ExampleId id = *config.example;
    Scenario sc = make_scenario(id, config.dim.value_or(default_dimension(id)));
    src.label = to_string(id);
    src.dimension = sc.dimension;
    src.operators = std::move(sc.operators);
    src.state = std::move(sc.state);
    src.defaults = sc.defaults;
    src.state_normalized = sc.state_normalized;
    src.notes = std::move(sc.notes);
    return src;
}

struct Effective {
    std::size_t m = 1;
    double v = kDefaultWeight;
    Flavor flavor = Flavor::Tilde;
    std::uint64_t cap = kDefaultSearchCap;
    SearchMode mode = SearchMode::Exact;
};

Effective effective_params(const RunConfig& config, const Source& src, std::size_t resolved_dim) {
    Effective e;
    const std::size_t fallback_m = src.state ? src.defaults.m : std::max<std::size_t>(1, resolved_dim / 2);
    e.m = config.m.value_or(src.params.m.value_or(fallback_m));
    e.v = config.v.value_or(src.params.v.value_or(src.state ? src.defaults.v : kDefaultWeight));
    e.flavor = config.flavor.value_or(src.params.flavor.value_or(Flavor::Tilde));
    e.cap = config.cap.value_or(src.params.cap.value_or(kDefaultSearchCap));
    e.mode = config.greedy ? SearchMode::Greedy : SearchMode::Exact;
    if (e.v < 0.0 || e.v > 1.0) {
        throw Error(ErrorCode::WeightOutOfRange, "v = " + io::format_double(e.v) + " is outside [0, 1]");
    }
    if (e.m < 1 || e.m > resolved_dim) {
        throw Error(ErrorCode::InvalidArgument, "m = " + std::to_string(e.m) + " is outside [1, " +
                                                    std::to_string(resolved_dim) + "]");
    }
    return e;
}

std::vector<ComplexMatrix> matrices(const std::vector<NamedOperator>& ops, std::size_t count) {
    std::vector<ComplexMatrix> out;
    for (std::size_t k = 0; k < std::min(count, ops.size()); ++k) out.push_back(ops[k].matrix);
    return out;
}

// Geometric mean over pairs of I_2, matching the multi-operator form.
double prod_i_2(const std::vector<ComplexMatrix>& ops, const PureState& psi) {
    double product = 1.0;
    for (std::size_t i = 0; i < ops.size(); ++i)
        for (std::size_t j = i + 1; j < ops.size(); ++j) {
            const ModulusPair pair = modulus_pair(ops[i], ops[j], psi);
            product *= pair.dim() >= 2 ? yu_i_d(pair, 2) : yu_i_d(pair, 1);
        }
    return std::pow(product, 1.0 / static_cast<double>(ops.size() - 1));
}

void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
    if (!config.output_path) {
        out << text;
        return;
    }
    std::ofstream file(*config.output_path, std::ios::binary | std::ios::trunc);
    if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write " + *config.output_path);
    file << text;
    if (!file) throw Error(ErrorCode::InvalidArgument, "write failed for " + *config.output_path);
}

OutputFormat format_or(const RunConfig& config, OutputFormat fallback) {
    return config.format.value_or(fallback);
}

ordered_json one_based_json(const SubsetSelection& s) { return s.one_based(); }

std::string join_subset(const SubsetSelection& s) {
    std::string out;
    for (std::size_t i : s.one_based()) out += (out.empty() ? "" : ";") + std::to_string(i);
    return out;
}

template <class F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const SearchSpaceTooLarge& e) {
        err << "error: " << e.what() << '\n';
        return kExitCap;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << '\n';
        return kExitInvariant;
    }
}

void assert_rows(const std::vector<io::SweepRow>& rows) {
    for (const auto& row : rows) {
        const auto bad = row_violations(row);
        if (!bad.empty()) {
            throw InvariantViolation("theta = " + io::format_double(row.theta) + ": " + bad.front());
        }
    }
}

ordered_json sweep_meta(const RunConfig& config, const Source& src, const Effective& e, double tmin,
                        double tmax, std::size_t steps, std::size_t resolved_dim, bool purified) {
    ordered_json meta;
    meta["source"] = src.label;
    meta["dimension"] = src.dimension;
    meta["resolved_dimension"] = resolved_dim;
    meta["purified"] = purified;
    std::vector<std::string> names;
    for (const auto& op : src.operators) names.push_back(op.name);
    meta["operators"] = names;
    meta["m"] = e.m;
    meta["v"] = e.v;
    meta["cap"] = e.cap;
    meta["search"] = e.mode == SearchMode::Exact ? "exact" : "greedy";
    meta["theta_min"] = tmin;
    meta["theta_max"] = tmax;
    meta["steps"] = steps;
    meta["state_normalized"] = src.state_normalized;
    if (!src.notes.empty()) meta["notes"] = src.notes;
    (void)config;
    return meta;
}

ordered_json nullable(std::optional<double> v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

}  // namespace

// --- configuration ----------------------------------------------------------

void validate(const RunConfig& config) {
    if (config.command != Command::Check) {
        if (config.input_path.has_value() == config.example.has_value()) {
            throw Error(ErrorCode::InvalidArgument, "exactly one of --input and --example is required");
        }
    }
    if (config.steps && *config.steps < 1) throw Error(ErrorCode::InvalidArgument, "steps must be ≥ 1");
    if (config.theta_min && config.theta_max && *config.theta_min > *config.theta_max) {
        throw Error(ErrorCode::InvalidArgument, "theta-min exceeds theta-max");
    }
    if (config.v && (*config.v < 0.0 || *config.v > 1.0)) {
        throw Error(ErrorCode::WeightOutOfRange, "v = " + io::format_double(*config.v) + " is outside [0, 1]");
    }
    if (config.cap && *config.cap < 1) throw Error(ErrorCode::InvalidArgument, "cap must be ≥ 1");
    if (config.trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be ≥ 1");
}

std::vector<double> theta_grid(double theta_min, double theta_max, std::size_t steps) {
    if (steps < 1) throw Error(ErrorCode::InvalidArgument, "steps must be ≥ 1");
    if (!(theta_min <= theta_max)) throw Error(ErrorCode::InvalidArgument, "theta-min exceeds theta-max");
    std::vector<double> grid(steps, theta_min);
    const double span = theta_max - theta_min;
    for (std::size_t k = 1; k < steps; ++k) {
        grid[k] = theta_min + span * static_cast<double>(k) / static_cast<double>(steps - 1);
    }
    return grid;
}

// --- rows -------------------------------------------------------------------

io::SweepRow sweep_row(double theta, const PurePoint& point, std::size_t m, double v,
                       std::uint64_t cap, SearchMode mode) {
    const auto& ops = point.operators;
    const BoundSet bs = bound_report(ops[0].matrix, ops[1].matrix, point.state, m, v, cap, mode);
    const auto bad = chain_violations(bs);
    if (!bad.empty()) throw InvariantViolation("theta = " + io::format_double(theta) + ": " + bad.front());

    io::SweepRow row;
    row.theta = theta;
    row.variance_product = bs.variance_product;
    row.lb = bs.lb;
    row.k_m = bs.k_m;
    row.k_m_v = bs.k_m_v;
    row.k_tilde = bs.k_tilde;
    row.i_2 = bs.i_d.size() >= 2 ? bs.i_d[1] : bs.i_d[0];
    row.i_1_prime = bs.i_1_prime;
    if (ops.size() >= 3) {
        const auto three = matrices(ops, 3);
        io::ThreeOpColumns t;
        t.variance_triple = variance_pure(three[0], point.state) * variance_pure(three[1], point.state) *
                            variance_pure(three[2], point.state);
        t.bong3 = bong_three_op_rhs(three[0], three[1], three[2], point.state);
        t.prod_k = multi_op_bound(three, point.state, m, v, Flavor::Plain, cap);
        t.prod_k_v = multi_op_bound(three, point.state, m, v, Flavor::Convex, cap);
        t.prod_k_tilde = multi_op_bound(three, point.state, m, v, Flavor::Tilde, cap, mode);
        t.prod_i_2 = prod_i_2(three, point.state);
        row.three = t;
    }
    return row;
}

std::vector<std::string> row_violations(const io::SweepRow& row, double slack) {
    std::vector<std::string> out;
    const auto le = [&](double a, const char* an, double b, const char* bn) {
        if (!(a <= b + slack)) {
            out.push_back(std::string(an) + " = " + io::format_double(a) + " exceeds " + bn + " = " +
                          io::format_double(b));
        }
    };
    le(row.lb, "lb", row.k_m, "k_m");
    le(row.k_m, "k_m", row.k_m_v, "k_m_v");
    le(row.k_m_v, "k_m_v", row.variance_product, "variance_product");
    le(row.k_m, "k_m", row.k_tilde, "k_tilde");
    le(row.k_tilde, "k_tilde", row.variance_product, "variance_product");
    le(row.lb, "lb", row.i_2, "i_2");
    le(row.i_2, "i_2", row.variance_product, "variance_product");
    if (row.three) {
        const auto& t = *row.three;
        le(t.bong3, "bong3", t.variance_triple, "variance_triple");
        le(t.prod_k, "prod_k", t.variance_triple, "variance_triple");
        le(t.prod_k_v, "prod_k_v", t.variance_triple, "variance_triple");
        le(t.prod_k_tilde, "prod_k_tilde", t.variance_triple, "variance_triple");
        le(t.prod_i_2, "prod_i_2", t.variance_triple, "variance_triple");
    }
    return out;
}

namespace {

struct SweepPlan {
    Source src;
    Effective eff;
    double tmin = 0.0, tmax = 0.0;
    std::size_t steps = 1;
    std::size_t resolved_dim = 0;
    bool purified = false;
};

SweepPlan plan_sweep(const RunConfig& config) {
    validate(config);
    if (config.input_path) {
        throw Error(ErrorCode::InvalidArgument,
                    "sweep and compare need --example; an input scenario has no θ parameter");
    }
    SweepPlan plan;
    plan.src = resolve_source(config);
    plan.tmin = config.theta_min.value_or(plan.src.defaults.theta_min);
    plan.tmax = config.theta_max.value_or(plan.src.defaults.theta_max);
    plan.steps = config.steps.value_or(plan.src.defaults.steps);
    const PurePoint probe = resolve(plan.src.operators, plan.src.state(plan.tmin));
    plan.resolved_dim = probe.state.dim();
    plan.purified = probe.purified;
    plan.eff = effective_params(config, plan.src, plan.resolved_dim);
    return plan;
}

std::vector<io::SweepRow> rows_for(const SweepPlan& plan) {
    std::vector<io::SweepRow> rows;
    for (double theta : theta_grid(plan.tmin, plan.tmax, plan.steps)) {
        const PurePoint point = resolve(plan.src.operators, plan.src.state(theta));
        rows.push_back(sweep_row(theta, point, plan.eff.m, plan.eff.v, plan.eff.cap, plan.eff.mode));
    }
    return rows;
}

}  // namespace

std::vector<io::SweepRow> sweep_rows(const RunConfig& config) { return rows_for(plan_sweep(config)); }

// --- commands ---------------------------------------------------------------

int run_bounds(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        validate(config);
        const Source src = resolve_source(config);
        std::optional<double> theta;
        StateSpec state = src.fixed_state ? *src.fixed_state : StateSpec{PureState(ComplexVector{1.0, 0.0})};
        if (src.state) {
            theta = config.theta ? *config.theta : config.theta_min.value_or(src.defaults.theta_min);
            state = src.state(*theta);
        }
        const PurePoint point = resolve(src.operators, state);
        const std::size_t n = point.state.dim();
        const Effective e = effective_params(config, src, n);
        const auto& ops = point.operators;
        const BoundSet bs = bound_report(ops[0].matrix, ops[1].matrix, point.state, e.m, e.v, e.cap, e.mode);
        const auto bad = chain_violations(bs);
        if (!bad.empty()) throw InvariantViolation(bad.front());

        const auto all = matrices(ops, ops.size());
        const double selected = multi_op_bound(all, point.state, e.m, e.v, e.flavor, e.cap, e.mode);

        ordered_json j;
        j["source"] = src.label;
        if (theta) j["theta"] = *theta;
        j["dimension"] = src.dimension;
        j["resolved_dimension"] = n;
        j["purified"] = point.purified;
        std::vector<std::string> names;
        for (const auto& op : ops) names.push_back(op.name);
        j["operators"] = names;
        j["m"] = bs.m;
        j["v"] = bs.v;
        j["flavor"] = to_string(e.flavor);
        j["heuristic"] = bs.heuristic;
        j["variance_product"] = bs.variance_product;
        j["lb"] = bs.lb;
        j["k_m"] = bs.k_m;
        j["k_m_v"] = bs.k_m_v;
        j["k_tilde_m"] = bs.k_tilde_m;
        j["k_tilde_m_subset"] = one_based_json(bs.k_tilde_m_subset);
        j["k_tilde"] = bs.k_tilde;
        j["k_tilde_m_index"] = bs.k_tilde_m_index;
        j["k_tilde_argmax"] = one_based_json(bs.k_tilde_argmax);
        j["i_d"] = bs.i_d;
        j["i_1_prime"] = nullable(bs.i_1_prime);
        j["selected_bound"] = selected;
        if (ops.size() >= 3) {
            const auto three = matrices(ops, 3);
            ordered_json t;
            t["variance_triple"] = variance_pure(three[0], point.state) * variance_pure(three[1], point.state) *
                                   variance_pure(three[2], point.state);
            t["bong3"] = bong_three_op_rhs(three[0], three[1], three[2], point.state);
            const auto gram = hermitian_eig(gram_matrix(all, point.state));
            t["gram_min_eigenvalue"] = gram.eigenvalues.front();
            for (Flavor f : {Flavor::Plain, Flavor::Convex, Flavor::Tilde}) {
                t["multi_" + to_string(f)] = multi_op_bound(all, point.state, e.m, e.v, f, e.cap, e.mode);
            }
            j["multi_operator"] = t;
        }
        if (src.state_normalized) j["state_normalized"] = true;
        if (!src.notes.empty()) j["notes"] = src.notes;

        std::string text;
        if (format_or(config, OutputFormat::Json) == OutputFormat::Json) {
            text = j.dump(2) + "\n";
        } else {
            std::ostringstream os;
            os << "source,theta,m,v,variance_product,lb,k_m,k_m_v,k_tilde_m,k_tilde_m_subset,k_tilde,"
                  "k_tilde_m_index,k_tilde_argmax,i_d,i_1_prime,selected_bound\n";
            std::string id_cells;
            for (double x : bs.i_d) id_cells += (id_cells.empty() ? "" : ";") + io::format_double(x);
            os << src.label << ',' << (theta ? io::format_double(*theta) : "") << ',' << bs.m << ','
               << io::format_double(bs.v) << ',' << io::format_double(bs.variance_product) << ','
               << io::format_double(bs.lb) << ',' << io::format_double(bs.k_m) << ','
               << io::format_double(bs.k_m_v) << ',' << io::format_double(bs.k_tilde_m) << ','
               << join_subset(bs.k_tilde_m_subset) << ',' << io::format_double(bs.k_tilde) << ','
               << bs.k_tilde_m_index << ',' << join_subset(bs.k_tilde_argmax) << ',' << id_cells << ','
               << (bs.i_1_prime ? io::format_double(*bs.i_1_prime) : "") << ','
               << io::format_double(selected) << '\n';
            text = os.str();
        }
        emit(config, out, text);
        return kExitOk;
    });
}

int run_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const SweepPlan plan = plan_sweep(config);
        const auto rows = rows_for(plan);
        assert_rows(rows);
        const bool three = plan.src.operators.size() >= 3;
        std::string text;
        if (format_or(config, OutputFormat::Csv) == OutputFormat::Csv) {
            std::ostringstream os;
            io::write_sweep_csv(os, rows, three);
            text = os.str();
        } else {
            ordered_json j;
            j["meta"] = sweep_meta(config, plan.src, plan.eff, plan.tmin, plan.tmax, plan.steps,
                                   plan.resolved_dim, plan.purified);
            j["columns"] = io::sweep_columns(three);
            ordered_json arr = ordered_json::array();
            for (const auto& row : rows) {
                ordered_json r;
                for (const auto& c : io::sweep_columns(three)) r[c] = nullable(io::column_value(row, c));
                arr.push_back(std::move(r));
            }
            j["rows"] = std::move(arr);
            text = j.dump(2) + "\n";
        }
        emit(config, out, text);
        return kExitOk;
    });
}

int run_compare(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const SweepPlan plan = plan_sweep(config);
        const bool three = plan.src.operators.size() >= 3;

        std::vector<std::pair<std::string, std::string>> pairs;
        const std::string minuend = config.minuend.value_or("k_m_v");
        std::vector<std::string> subs = config.subtrahends;
        if (subs.empty()) subs = {"lb", "i_2", "i_1_prime"};
        for (const auto& s : subs) pairs.emplace_back(minuend, s);
        if (three && !config.minuend && config.subtrahends.empty()) {
            pairs.emplace_back("prod_k_v", "bong3");
            pairs.emplace_back("prod_k_v", "prod_i_2");
        }
        const io::SweepRow probe;  // rejects unknown names before any work
        for (const auto& [a, b] : pairs) {
            (void)io::column_value(probe, a);
            (void)io::column_value(probe, b);
        }

        const auto rows = rows_for(plan);
        assert_rows(rows);
        std::vector<std::string> cols{"theta"};
        for (const auto& [a, b] : pairs) cols.push_back(a + "_minus_" + b);

        // Raw differences; a missing operand leaves the cell empty.
        const auto diff = [](const io::SweepRow& row, const std::string& a,
                             const std::string& b) -> std::optional<double> {
            const auto x = io::column_value(row, a);
            const auto y = io::column_value(row, b);
            if (!x || !y) return std::nullopt;
            return *x - *y;
        };

        std::string text;
        if (format_or(config, OutputFormat::Csv) == OutputFormat::Csv) {
            std::ostringstream os;
            for (std::size_t c = 0; c < cols.size(); ++c) os << (c ? "," : "") << cols[c];
            os << '\n';
            for (const auto& row : rows) {
                os << io::format_double(row.theta);
                for (const auto& [a, b] : pairs) {
                    os << ',';
                    if (const auto d = diff(row, a, b)) os << io::format_double(*d);
                }
                os << '\n';
            }
            text = os.str();
        } else {
            ordered_json j;
            j["meta"] = sweep_meta(config, plan.src, plan.eff, plan.tmin, plan.tmax, plan.steps,
                                   plan.resolved_dim, plan.purified);
            j["columns"] = cols;
            ordered_json arr = ordered_json::array();
            for (const auto& row : rows) {
                ordered_json r;
                r["theta"] = row.theta;
                for (std::size_t k = 0; k < pairs.size(); ++k) {
                    r[cols[k + 1]] = nullable(diff(row, pairs[k].first, pairs[k].second));
                }
                arr.push_back(std::move(r));
            }
            j["rows"] = std::move(arr);
            text = j.dump(2) + "\n";
        }
        emit(config, out, text);
        return kExitOk;
    });
}

int run_check(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        validate(config);
        CheckOptions opts;
        opts.seed = config.seed;
        opts.trials = config.trials;
        opts.max_dim = config.max_dim;
        opts.fault = config.inject_fault;
        const CheckReport report = run_checks(opts);
        std::ostringstream os;
        write_check_report(os, report);
        emit(config, out, os.str());
        return report.ok() ? kExitOk : kExitInvariant;
    });
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    switch (config.command) {
        case Command::Bounds: return run_bounds(config, out, err);
        case Command::Sweep: return run_sweep(config, out, err);
        case Command::Compare: return run_compare(config, out, err);
        case Command::Check: return run_check(config, out, err);
    }
    return kExitInput;
}

}  // namespace uur
