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


#include "uur/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

#include "json.hpp"
#include "uur/error.hpp"

namespace uur::io {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

Complex parse_complex(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        parse_fail(where + ": expected [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

ComplexVector parse_vector(const json& j, const std::string& where) {
    if (!j.is_array()) parse_fail(where + ": expected a list of [re, im] pairs");
    std::vector<Complex> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(parse_complex(j[i], where + "[" + std::to_string(i) + "]"));
    }
    return ComplexVector(std::move(out));
}

ComplexMatrix parse_matrix(const json& j, std::size_t n, const std::string& where) {
    if (!j.is_array() || j.size() != n) {
        throw Error(ErrorCode::DimensionMismatch, where + ": expected " + std::to_string(n) + " rows");
    }
    std::vector<std::vector<Complex>> rows;
    for (std::size_t i = 0; i < n; ++i) {
        const std::string at = where + "[" + std::to_string(i) + "]";
        ComplexVector row = parse_vector(j[i], at);
        if (row.dim() != n) {
            throw Error(ErrorCode::DimensionMismatch, at + ": expected " + std::to_string(n) + " entries");
        }
        rows.emplace_back(row.begin(), row.end());
    }
    return ComplexMatrix::from_rows(rows);
}

StateSpec parse_state(const json& j, std::size_t n) {
    if (!j.is_object() || j.size() != 1) {
        parse_fail("state: expected exactly one of \"pure\", \"density\", \"bloch\"");
    }
    if (j.contains("pure")) {
        ComplexVector v = parse_vector(j["pure"], "state.pure");
        if (v.dim() != n) throw Error(ErrorCode::DimensionMismatch, "state.pure: expected " + std::to_string(n) + " amplitudes");
        return PureState(std::move(v));
    }
    if (j.contains("density")) return DensityMatrix(parse_matrix(j["density"], n, "state.density"));
    if (j.contains("bloch")) {
        const json& r = j["bloch"];
        if (!r.is_array() || r.size() != 3 || !r[0].is_number() || !r[1].is_number() || !r[2].is_number()) {
            parse_fail("state.bloch: expected [r1, r2, r3]");
        }
        if (n != 2) throw Error(ErrorCode::DimensionMismatch, "state.bloch requires dimension 2");
        return bloch_density({r[0].get<double>(), r[1].get<double>(), r[2].get<double>()});
    }
    parse_fail("state: expected one of \"pure\", \"density\", \"bloch\"");
}

InputParams parse_params(const json& j) {
    InputParams p;
    if (!j.is_object()) parse_fail("params: expected an object");
    for (const auto& [key, val] : j.items()) {
        if (key == "m") {
            if (!val.is_number_integer() || val.get<long long>() < 1) parse_fail("params.m: expected a positive integer");
            p.m = val.get<std::size_t>();
        } else if (key == "v") {
            if (!val.is_number()) parse_fail("params.v: expected a number");
            p.v = val.get<double>();
        } else if (key == "flavor") {
            if (!val.is_string()) parse_fail("params.flavor: expected a string");
            p.flavor = flavor_from_string(val.get<std::string>());
        } else if (key == "cap") {
            if (!val.is_number_integer() || val.get<long long>() < 1) parse_fail("params.cap: expected a positive integer");
            p.cap = val.get<std::uint64_t>();
        } else {
            parse_fail("params: unknown key \"" + key + "\"");
        }
    }
    return p;
}

}  // namespace

InputDocument parse_input(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        parse_fail(e.what());
    }
    if (!doc.is_object()) parse_fail("top level: expected an object");
    for (const char* key : {"dimension", "operators", "state"}) {
        if (!doc.contains(key)) parse_fail(std::string("missing \"") + key + "\"");
    }
    InputDocument out;
    const json& dim = doc["dimension"];
    if (!dim.is_number_integer() || dim.get<long long>() < 2) parse_fail("dimension: expected an integer ≥ 2");
    out.dimension = dim.get<std::size_t>();

    const json& ops = doc["operators"];
    if (!ops.is_array() || ops.size() < 2) parse_fail("operators: expected a list of at least two operators");
    for (std::size_t k = 0; k < ops.size(); ++k) {
        const json& op = ops[k];
        if (!op.is_object() || !op.contains("matrix")) parse_fail("operators[" + std::to_string(k) + "]: missing \"matrix\"");
        std::string name = "U" + std::to_string(k + 1);
        if (op.contains("name")) {
            if (!op["name"].is_string()) parse_fail("operators[" + std::to_string(k) + "].name: expected a string");
            name = op["name"].get<std::string>();
        }
        ComplexMatrix m = parse_matrix(op["matrix"], out.dimension, "operator " + name);
        const double defect = unitarity_defect(m);
        if (!(defect <= kOperatorUnitaryTol)) {
            std::ostringstream msg;
            msg << "operator " << name << " is not unitary: max |(A†A − I)_ij| = " << format_double(defect);
            throw Error(ErrorCode::NotUnitary, msg.str());
        }
        out.operators.push_back({std::move(name), std::move(m)});
    }
    out.state = parse_state(doc["state"], out.dimension);
    if (doc.contains("params")) out.params = parse_params(doc["params"]);
    return out;
}

InputDocument load_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) parse_fail("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_input(buf.str());
}

// --- sweep tables -----------------------------------------------------------

std::vector<std::string> sweep_columns(bool three_op) {
    std::vector<std::string> cols{"theta", "variance_product", "lb", "k_m", "k_m_v", "k_tilde", "i_2", "i_1_prime"};
    if (three_op) {
        for (const char* c : {"variance_triple", "bong3", "prod_k", "prod_k_v", "prod_k_tilde", "prod_i_2"}) cols.emplace_back(c);
    }
    return cols;
}

std::optional<double> column_value(const SweepRow& row, std::string_view name) {
    if (name == "theta") return row.theta;
    if (name == "variance_product") return row.variance_product;
    if (name == "lb") return row.lb;
    if (name == "k_m") return row.k_m;
    if (name == "k_m_v") return row.k_m_v;
    if (name == "k_tilde") return row.k_tilde;
    if (name == "i_2") return row.i_2;
    if (name == "i_1_prime") return row.i_1_prime;
    const auto three = [&](double ThreeOpColumns::*field) -> std::optional<double> {
        if (!row.three) return std::nullopt;
        return (*row.three).*field;
    };
    if (name == "variance_triple") return three(&ThreeOpColumns::variance_triple);
    if (name == "bong3") return three(&ThreeOpColumns::bong3);
    if (name == "prod_k") return three(&ThreeOpColumns::prod_k);
    if (name == "prod_k_v") return three(&ThreeOpColumns::prod_k_v);
    if (name == "prod_k_tilde") return three(&ThreeOpColumns::prod_k_tilde);
    if (name == "prod_i_2") return three(&ThreeOpColumns::prod_i_2);
    throw Error(ErrorCode::InvalidArgument, "unknown column '" + std::string(name) + "'");
}

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view text) {
    double x = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), x);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
        parse_fail("not a number: '" + std::string(text) + "'");
    }
    return x;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows, bool three_op) {
    const auto cols = sweep_columns(three_op);
    for (std::size_t c = 0; c < cols.size(); ++c) os << (c ? "," : "") << cols[c];
    os << '\n';
    for (const SweepRow& row : rows) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (c) os << ',';
            if (const auto v = column_value(row, cols[c])) os << format_double(*v);
        }
        os << '\n';
    }
}

namespace {

std::vector<std::string_view> split_commas(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        out.push_back(line.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

std::vector<SweepRow> read_sweep_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) parse_fail("csv: missing header");
    const auto header = split_commas(line);
    const bool three_op = header.size() > sweep_columns(false).size();
    const auto expected = sweep_columns(three_op);
    if (header.size() != expected.size()) parse_fail("csv: unexpected column count");
    for (std::size_t c = 0; c < expected.size(); ++c) {
        if (header[c] != expected[c]) parse_fail("csv: unexpected column '" + std::string(header[c]) + "'");
    }

    std::vector<SweepRow> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto cells = split_commas(line);
        if (cells.size() != expected.size()) parse_fail("csv: row " + std::to_string(rows.size() + 1) + " has the wrong width");
        std::vector<double> v(cells.size(), 0.0);
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (cells[c].empty()) {
                if (expected[c] != "i_1_prime") parse_fail("csv: empty cell in column " + expected[c]);
                continue;
            }
            v[c] = parse_double(cells[c]);
        }
        SweepRow row{v[0], v[1], v[2], v[3], v[4], v[5], v[6], std::nullopt, std::nullopt};
        if (!cells[7].empty()) row.i_1_prime = v[7];
        if (three_op) row.three = ThreeOpColumns{v[8], v[9], v[10], v[11], v[12], v[13]};
        rows.push_back(row);
    }
    return rows;
}

}  // namespace uur::io
