// Copyright 2026 The QSS Authors
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

#include "qss/io.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace qss {

namespace {

[[noreturn]] void fail(const std::string &source, const std::string &field, const std::string &what) {
    throw InputError(source + ": field '" + field + "': " + what);
}

const Json &require(const Json &j, const std::string &source, const std::string &field) {
    if (!j.is_object()) {
        throw InputError(source + ": expected a JSON object");
    }
    auto it = j.find(field);
    if (it == j.end()) {
        fail(source, field, "missing");
    }
    return *it;
}

std::int64_t require_int(const Json &j, const std::string &source, const std::string &field) {
    if (!j.is_number_integer()) {
        fail(source, field, "expected an integer");
    }
    return j.get<std::int64_t>();
}

std::vector<int> int_list(const Json &j, const std::string &source, const std::string &field) {
    if (!j.is_array()) {
        fail(source, field, "expected an array of integers");
    }
    std::vector<int> out;
    for (std::size_t k = 0; k < j.size(); k++) {
        out.push_back(static_cast<int>(require_int(j[k], source, field + "[" + std::to_string(k) + "]")));
    }
    return out;
}

PauliOperator pauli_field(const Json &j, const std::string &source, const std::string &field) {
    if (!j.is_string()) {
        fail(source, field, "expected a Pauli string");
    }
    try {
        return pauli_parse(j.get<std::string>());
    } catch (const std::invalid_argument &e) {
        fail(source, field, e.what());
    }
}

std::string fixed(double v, int digits = 6) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v == 0.0 ? 0.0 : v);
    return buf;
}

std::string scientific(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) {
        s.append(width - s.size(), ' ');
    }
    return s;
}

}  // namespace

Json load_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError(path + ": cannot open file");
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw InputError(path + ": " + e.what());
    }
}

StabilizerCode code_from_json(const Json &j, const std::string &source) {
    StabilizerCode code;
    code.name = source;
    std::int64_t n = require_int(require(j, source, "n"), source, "n");
    if (n < 1 || n > 13) {
        fail(source, "n", "must be in 1..13");
    }
    code.n = static_cast<std::size_t>(n);
    const Json &gens = require(j, source, "generators");
    if (!gens.is_array()) {
        fail(source, "generators", "expected an array of Pauli strings");
    }
    for (std::size_t k = 0; k < gens.size(); k++) {
        code.generators.push_back(pauli_field(gens[k], source, "generators[" + std::to_string(k) + "]"));
    }
    code.logical_x = pauli_field(require(j, source, "logical_x"), source, "logical_x");
    code.logical_z = pauli_field(require(j, source, "logical_z"), source, "logical_z");
    try {
        code.validate();
    } catch (const std::invalid_argument &e) {
        throw InputError(source + ": invalid stabilizer code: " + e.what());
    }
    return code;
}

StabilizerCode load_code(const std::string &name_or_path) {
    if (name_or_path == "trivial") {
        return StabilizerCode::trivial();
    }
    if (name_or_path == "five_qubit") {
        return StabilizerCode::five_qubit();
    }
    return code_from_json(load_json_file(name_or_path), name_or_path);
}

Json code_to_json(const StabilizerCode &code) {
    Json gens = Json::array();
    for (const auto &g : code.generators) {
        gens.push_back(g.to_string());
    }
    return Json{{"n", code.n},
                {"generators", gens},
                {"logical_x", code.logical_x.to_string()},
                {"logical_z", code.logical_z.to_string()}};
}

MSP msp_from_json(const Json &j, const std::string &source) {
    std::int64_t q = require_int(require(j, source, "q"), source, "q");
    if (q < 2 || q > kMaxFieldOrder || !is_prime(static_cast<std::uint32_t>(q))) {
        fail(source, "q", "must be a prime in 2..97");
    }
    const Json &rows = require(j, source, "matrix");
    if (!rows.is_array() || rows.empty()) {
        fail(source, "matrix", "expected a nonempty array of rows");
    }
    std::vector<std::vector<std::int64_t>> entries;
    std::size_t cols = 0;
    for (std::size_t r = 0; r < rows.size(); r++) {
        std::string field = "matrix[" + std::to_string(r) + "]";
        if (!rows[r].is_array() || rows[r].empty()) {
            fail(source, field, "expected a nonempty array of integers");
        }
        if (r == 0) {
            cols = rows[r].size();
        } else if (rows[r].size() != cols) {
            fail(source, field, "has " + std::to_string(rows[r].size()) + " entries, expected " + std::to_string(cols));
        }
        std::vector<std::int64_t> row;
        for (std::size_t c = 0; c < rows[r].size(); c++) {
            row.push_back(require_int(rows[r][c], source, field + "[" + std::to_string(c) + "]"));
        }
        entries.push_back(std::move(row));
    }
    std::vector<int> labels = int_list(require(j, source, "labels"), source, "labels");
    try {
        return MSP(GFMatrix(PrimeField(static_cast<std::uint32_t>(q)), entries, cols), std::move(labels));
    } catch (const std::invalid_argument &e) {
        throw InputError(source + ": invalid MSP: " + e.what());
    }
}

Json msp_to_json(const MSP &msp) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < msp.rows(); r++) {
        rows.push_back(msp.matrix().row(r));
    }
    return Json{{"q", msp.field().order()}, {"matrix", rows}, {"labels", msp.labels()}};
}

SecretSpec secret_from_json(const Json &j, const std::string &source) {
    SecretSpec s;
    std::int64_t dim = require_int(require(j, source, "dim"), source, "dim");
    if (dim < 2) {
        fail(source, "dim", "must be at least 2");
    }
    s.dim = static_cast<std::size_t>(dim);
    const Json &probs = require(j, source, "probs");
    if (!probs.is_array()) {
        fail(source, "probs", "expected an array of numbers");
    }
    for (std::size_t k = 0; k < probs.size(); k++) {
        if (!probs[k].is_number()) {
            fail(source, "probs[" + std::to_string(k) + "]", "expected a number");
        }
        s.probs.push_back(probs[k].get<double>());
    }
    try {
        s.validate();
    } catch (const std::invalid_argument &e) {
        fail(source, "probs", e.what());
    }
    return s;
}

AdversaryStructure structure_from_json(const Json &j, const std::string &source) {
    try {
        if (j.is_object() && j.contains("threshold")) {
            const Json &th = j["threshold"];
            std::int64_t t = require_int(require(th, source, "t"), source, "threshold.t");
            std::int64_t n = require_int(require(th, source, "n"), source, "threshold.n");
            if (t < 1 || n < 1) {
                fail(source, "threshold", "t and n must be positive");
            }
            return threshold_structure(static_cast<std::size_t>(t), static_cast<std::size_t>(n));
        }
        std::int64_t n = require_int(require(j, source, "n"), source, "n");
        if (n < 1 || n > static_cast<std::int64_t>(kMaxPlayers)) {
            fail(source, "n", "must be in 1..12");
        }
        const Json &maximal = require(j, source, "maximal_unauthorized");
        if (!maximal.is_array()) {
            fail(source, "maximal_unauthorized", "expected an array of player lists");
        }
        std::vector<PlayerSet> sets;
        for (std::size_t k = 0; k < maximal.size(); k++) {
            std::string field = "maximal_unauthorized[" + std::to_string(k) + "]";
            sets.push_back(PlayerSet::from_members(int_list(maximal[k], source, field)));
        }
        return AdversaryStructure::from_maximal(static_cast<std::size_t>(n), sets);
    } catch (const std::invalid_argument &e) {
        throw InputError(source + ": invalid structure: " + e.what());
    }
}

Json structure_to_json(const AdversaryStructure &s) {
    Json maximal = Json::array();
    for (PlayerSet m : s.maximal_unauthorized()) {
        maximal.push_back(m.members());
    }
    return Json{{"n", s.n_players()}, {"maximal_unauthorized", maximal}};
}

double round_sig12(double v) {
    if (v == 0.0 || !std::isfinite(v)) {
        return v == 0.0 ? 0.0 : v;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

Json player_set_to_json(PlayerSet s) { return Json(s.members()); }

Json report_to_json(const VerificationReport &report) {
    Json subsets = Json::array();
    for (const auto &r : report.results) {
        subsets.push_back(Json{{"players", player_set_to_json(r.players)},
                               {"entropy", round_sig12(r.entropy_bits)},
                               {"mutual_info", round_sig12(r.mutual_info_bits)},
                               {"class", to_string(r.cls)}});
    }
    Json witnesses = Json::array();
    for (PlayerSet w : report.verdict.witnesses) {
        witnesses.push_back(player_set_to_json(w));
    }
    Json out{{"secret_entropy", round_sig12(report.secret_entropy_bits)},
             {"reference_mutual", round_sig12(report.reference_mutual_bits)},
             {"pure", report.pure},
             {"players", report.n_players},
             {"subsets", subsets},
             {"verdict", to_string(report.verdict.kind)},
             {"witnesses", witnesses},
             {"tolerances", Json{{"eps", report.tol.eps()}, {"spectrum", kSpectrumTolerance}}}};
    if (report.verdict.structure) {
        out["structure"] = structure_to_json(*report.verdict.structure);
    }
    if (!report.verdict.diagnostics.empty()) {
        out["diagnostics"] = report.verdict.diagnostics;
    }
    return out;
}

Json audit_to_json(const AuditTable &table) {
    Json rows = Json::array();
    for (const auto &r : table.rows) {
        rows.push_back(Json{{"players", player_set_to_json(r.players)},
                            {"quantity", r.quantity},
                            {"expected", round_sig12(r.expected)},
                            {"actual", round_sig12(r.actual)},
                            {"pass", r.passed}});
    }
    return Json{{"title", table.title}, {"passed", table.passed()}, {"rows", rows}};
}

Json check_to_json(const CheckResult &check) {
    Json out{{"passed", check.passed}, {"message", check.message}};
    if (check.witness) {
        out["witness"] = player_set_to_json(*check.witness);
    }
    return out;
}

std::string report_to_table(const VerificationReport &report) {
    std::ostringstream os;
    os << "S(S) = " << fixed(report.secret_entropy_bits) << " bits, I(R:S) = " << fixed(report.reference_mutual_bits)
       << " bits" << (report.pure ? "" : " (mixed scheme)") << "\n";
    os << pad("players", 28) << pad("S(A)", 14) << pad("I(R:A)", 14) << "class\n";
    for (const auto &r : report.results) {
        os << pad(r.players.to_string(), 28) << pad(fixed(r.entropy_bits), 14) << pad(fixed(r.mutual_info_bits), 14)
           << to_string(r.cls) << "\n";
    }
    os << "verdict: " << to_string(report.verdict.kind);
    if (report.verdict.structure) {
        os << ", maximal unauthorized:";
        for (PlayerSet m : report.verdict.structure->maximal_unauthorized()) {
            os << " " << m.to_string();
        }
    }
    if (!report.verdict.witnesses.empty()) {
        os << ", partial:";
        for (PlayerSet w : report.verdict.witnesses) {
            os << " " << w.to_string();
        }
    }
    for (const auto &d : report.verdict.diagnostics) {
        os << "\n  " << d;
    }
    os << "\n";
    return os.str();
}

std::string audit_to_table(const AuditTable &table) {
    std::ostringstream os;
    os << table.title << "\n";
    os << pad("players", 28) << pad("quantity", 24) << pad("expected", 14) << pad("actual", 14) << "result\n";
    for (const auto &r : table.rows) {
        os << pad(r.players.to_string(), 28) << pad(r.quantity, 24) << pad(fixed(r.expected), 14)
           << pad(r.quantity == "spectrum deviation" ? scientific(r.actual) : fixed(r.actual), 14)
           << (r.passed ? "pass" : "FAIL") << "\n";
    }
    os << "audit: " << (table.passed() ? "pass" : "FAIL") << "\n";
    return os.str();
}

}  // namespace qss
