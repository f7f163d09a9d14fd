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

#include "qss/cli.h"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "qss/io.h"
#include "qss/schemes.h"
#include "qss/verifier.h"

namespace qss {

namespace {

struct Options {
    std::string code;
    std::string msp;
    std::string secret;
    std::string expect;
    std::string out_path;
    std::string format = "json";
    std::string outcome;
    std::size_t players = 0;
    std::uint64_t seed = 0;
    bool audit = false;
    std::optional<double> tol;
};

std::size_t parse_count(const std::string &text, const std::string &what) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(text, &pos);
    } catch (const std::exception &) {
        pos = 0;
    }
    if (pos == 0 || pos != text.size()) {
        throw InputError(what + ": expected a positive integer, got '" + text + "'");
    }
    return v;
}

Tolerance resolve_tolerance(const Options &opts) {
    double eps = Tolerance::kDefault;
    if (const char *env = std::getenv("QSS_TOL"); env != nullptr && *env != '\0') {
        char *end = nullptr;
        eps = std::strtod(env, &end);
        if (end == env || *end != '\0') {
            throw InputError("QSS_TOL: not a number: '" + std::string(env) + "'");
        }
    }
    if (opts.tol) {
        eps = *opts.tol;
    }
    try {
        return Tolerance(eps);
    } catch (const std::invalid_argument &e) {
        throw InputError(std::string("tolerance: ") + e.what());
    }
}

SecretSpec resolve_secret(const Options &opts, std::size_t default_dim) {
    if (opts.secret.empty()) {
        return SecretSpec::uniform(default_dim);
    }
    return secret_from_json(load_json_file(opts.secret), opts.secret);
}

AdversaryStructure resolve_expectation(const std::string &spec, const MSP *msp) {
    const std::string prefix = "threshold:";
    if (spec.rfind(prefix, 0) == 0) {
        std::string body = spec.substr(prefix.size());
        auto comma = body.find(',');
        if (comma == std::string::npos) {
            throw InputError("--expect: expected threshold:t,n, got '" + spec + "'");
        }
        std::size_t t = parse_count(body.substr(0, comma), "--expect threshold t");
        std::size_t n = parse_count(body.substr(comma + 1), "--expect threshold n");
        try {
            return threshold_structure(t, n);
        } catch (const std::invalid_argument &e) {
            throw InputError(std::string("--expect: ") + e.what());
        }
    }
    if (spec == "msp") {
        if (msp == nullptr) {
            throw InputError("--expect msp needs an MSP scheme");
        }
        return msp_structure(*msp, msp->n_players());
    }
    return structure_from_json(load_json_file(spec), spec);
}

BellOutcome parse_outcome(const std::string &text) {
    if (text.size() != 2 || (text[0] != '0' && text[0] != '1') || (text[1] != '0' && text[1] != '1')) {
        throw InputError("--outcome: expected two bits 'ab' (phase bit, flip bit), got '" + text + "'");
    }
    return {text[0] - '0', text[1] - '0'};
}

class Pipeline {
   public:
    Pipeline(std::string command, Options opts, std::ostream &err)
        : command_(std::move(command)), opts_(std::move(opts)), err_(err) {}

    int execute(std::ostream &out) {
        tol_ = resolve_tolerance(opts_);
        if (opts_.format != "json" && opts_.format != "table") {
            throw InputError("--format: expected json or table, got '" + opts_.format + "'");
        }
        doc_["command"] = command_;
        build_scheme();
        report_ = subset_report(*scheme_, tol_);
        const Json report_json = report_to_json(*report_);
        for (auto it = report_json.begin(); it != report_json.end(); ++it) {
            doc_[it.key()] = it.value();
        }
        text_ += report_to_table(*report_);

        if (report_->verdict.kind == VerdictKind::kInvalid) {
            fail("verdict INVALID" +
                 (report_->verdict.diagnostics.empty() ? std::string() : ": " + report_->verdict.diagnostics.front()));
        }
        if (!opts_.expect.empty()) {
            check_expectation();
        }
        if (opts_.audit || command_ == "audit") {
            run_audit();
        }
        if (command_ == "verify") {
            run_consistency_checks();
        }
        emit(out);
        return exit_code_;
    }

   private:
    void build_scheme() {
        Json scheme;
        const bool has_code = !opts_.code.empty();
        const bool has_msp = !opts_.msp.empty();
        const bool has_players = opts_.players > 0;
        const int sources = int(has_code) + int(has_msp) + int(has_players);
        if (command_ == "verify" || command_ == "audit") {
            if (sources != 1) {
                throw InputError(command_ + ": give exactly one of --code, --msp" +
                                 std::string(command_ == "verify" ? ", --players" : ""));
            }
        }
        if (has_code) {
            StabilizerCode code = load_code(opts_.code);
            scheme_ = encode_stabilizer_qts(code, resolve_secret(opts_, 2));
            scheme = Json{{"kind", "stabilizer"}, {"code", opts_.code}, {"t", (code.n + 1) / 2}, {"n", code.n}};
        } else if (has_msp) {
            msp_ = msp_from_json(load_json_file(opts_.msp), opts_.msp);
            try {
                scheme_ = encode_msp(*msp_, resolve_secret(opts_, msp_->field().order()));
            } catch (const std::invalid_argument &e) {
                throw InputError(opts_.msp + ": " + e.what());
            }
            scheme = Json{{"kind", "msp"}, {"msp", msp_to_json(*msp_)}};
        } else if (has_players) {
            const SecretSpec secret = resolve_secret(opts_, 2);
            if (command_ == "teleport") {
                TeleportOptions topts;
                if (!opts_.outcome.empty()) {
                    topts.forced_outcome = parse_outcome(opts_.outcome);
                }
                topts.seed = opts_.seed;
                TeleportResult result = teleport_protocol(opts_.players, secret, topts);
                const SchemeInstance direct = encode_ghz_direct(opts_.players, secret);
                doc_["teleport"] = Json{
                    {"outcome", std::to_string(result.outcome.phase_bit) + std::to_string(result.outcome.flip_bit)},
                    {"probability", round_sig12(result.probability)},
                    {"fidelity_with_direct_encoding", round_sig12(fidelity(result.scheme.state, direct.state))}};
                text_ += "teleport: outcome " + doc_["teleport"]["outcome"].get<std::string>() +
                         ", probability " + std::to_string(result.probability) + "\n";
                scheme_ = std::move(result.scheme);
            } else {
                scheme_ = encode_ghz_direct(opts_.players, secret);
            }
            scheme = Json{{"kind", "ghz"}, {"n", opts_.players}};
        } else {
            throw InputError(command_ + ": no scheme given");
        }
        doc_["scheme"] = scheme;
        text_ = "scheme: " + scheme.dump() + "\n" + text_;
    }

    void check_expectation() {
        AdversaryStructure expected = resolve_expectation(opts_.expect, msp_ ? &*msp_ : nullptr);
        CheckResult check;
        try {
            check = verify_against(*report_, expected, tol_);
        } catch (const std::invalid_argument &e) {
            throw InputError(std::string("--expect: ") + e.what());
        }
        Json j = check_to_json(check);
        j["spec"] = opts_.expect;
        doc_["expect"] = j;
        text_ += "expect " + opts_.expect + ": " + (check.passed ? "pass" : "FAIL") + " (" + check.message + ")\n";
        if (!check.passed) {
            fail("expectation " + opts_.expect + " failed at " + check.message);
        }
    }

    void run_audit() {
        AuditTable table;
        if (scheme_->kind == SchemeKind::kStabilizer) {
            table = audit_stabilizer_entropies(*scheme_, tol_);
        } else if (scheme_->kind == SchemeKind::kMsp) {
            table = audit_msp_entropies(*scheme_, tol_);
        } else {
            throw InputError("--audit applies to stabilizer and msp schemes");
        }
        doc_["audit"] = audit_to_json(table);
        text_ += audit_to_table(table);
        if (const AuditRow *row = table.first_failure()) {
            fail("audit failed at " + row->players.to_string() + ": " + row->quantity + " expected " +
                 std::to_string(row->expected) + ", got " + std::to_string(row->actual));
        }
    }

    void run_consistency_checks() {
        CheckResult duality = check_pure_duality(*scheme_, tol_);
        doc_["duality"] = check_to_json(duality);
        text_ += std::string("duality: ") + (duality.passed ? "pass" : "FAIL") + " (" + duality.message + ")\n";
        if (!duality.passed) {
            fail("duality failed: " + duality.message);
        }

        std::size_t mismatches = 0;
        for (const auto &r : report_->results) {
            bool correctable = erasure_correctable(scheme_->state, scheme_->shares_of(r.players), tol_);
            bool zero = r.mutual_info_bits < tol_.eps();
            if (correctable != zero) {
                if (mismatches++ == 0) {
                    fail("erasure bridge mismatch at " + describe(r));
                }
            }
        }
        doc_["erasure_bridge"] = Json{{"passed", mismatches == 0}, {"mismatches", mismatches}};
        text_ += std::string("erasure bridge: ") + (mismatches == 0 ? "pass" : "FAIL") + "\n";
    }

    void fail(const std::string &message) {
        err_ << "qss: " << message << "\n";
        exit_code_ = kExitVerificationFailed;
    }

    void emit(std::ostream &out) {
        std::string payload = opts_.format == "json" ? doc_.dump(2) + "\n" : text_;
        if (opts_.out_path.empty()) {
            out << payload;
            return;
        }
        std::ofstream file(opts_.out_path);
        if (!file) {
            throw InputError("--out: cannot write " + opts_.out_path);
        }
        file << payload;
    }

    std::string command_;
    Options opts_;
    std::ostream &err_;
    Tolerance tol_;
    Json doc_ = Json::object();
    std::string text_;
    std::optional<MSP> msp_;
    std::optional<SchemeInstance> scheme_;
    std::optional<VerificationReport> report_;
    int exit_code_ = kExitPass;
};

void add_common(CLI::App *sub, Options &opts) {
    sub->add_option("--secret", opts.secret, "secret file {\"dim\", \"probs\"}; uniform when omitted");
    sub->add_option("--expect", opts.expect, "threshold:t,n | msp | structure file");
    sub->add_option("--tol", opts.tol, "classification tolerance in bits (0 < eps < 1e-2)");
    sub->add_option("--out", opts.out_path, "write the report to this file");
    sub->add_option("--format", opts.format, "json or table");
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum secret-sharing scheme construction and verification", "qss"};
    app.require_subcommand(1);
    Options opts;

    auto *stab = app.add_subcommand("stabilizer", "encode with a stabilizer code and verify");
    stab->add_option("--code", opts.code, "built-in name (trivial, five_qubit) or code file")->required();
    stab->add_flag("--audit", opts.audit, "audit the closed-form entropy ladder");
    add_common(stab, opts);

    auto *msp = app.add_subcommand("msp", "encode with a monotone span program and verify");
    msp->add_option("--msp", opts.msp, "MSP file {\"q\", \"matrix\", \"labels\"}")->required();
    msp->add_flag("--audit", opts.audit, "audit the rank-based entropy formulas");
    add_common(msp, opts);

    auto *tele = app.add_subcommand("teleport", "simulate the GHZ teleportation scheme and verify");
    tele->add_option("--players", opts.players, "number of players")->required();
    tele->add_option("--outcome", opts.outcome, "force the Bell outcome 'ab' (phase bit, flip bit)");
    tele->add_option("--seed", opts.seed, "seed for sampling the Bell outcome");
    add_common(tele, opts);

    auto *verify = app.add_subcommand("verify", "subset report plus duality and erasure checks");
    verify->add_option("--code", opts.code, "stabilizer code name or file");
    verify->add_option("--msp", opts.msp, "MSP file");
    verify->add_option("--players", opts.players, "GHZ scheme with this many players");
    add_common(verify, opts);

    auto *audit = app.add_subcommand("audit", "entropy-formula audit");
    audit->add_option("--code", opts.code, "stabilizer code name or file");
    audit->add_option("--msp", opts.msp, "MSP file");
    add_common(audit, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitInputError;
    }

    std::string command = app.get_subcommands().front()->get_name();
    try {
        Pipeline pipeline(command, opts, err);
        return pipeline.execute(out);
    } catch (const InputError &e) {
        err << "qss: " << e.what() << "\n";
    } catch (const std::invalid_argument &e) {
        err << "qss: invalid input: " << e.what() << "\n";
    } catch (const std::exception &e) {
        err << "qss: error: " << e.what() << "\n";
    }
    return kExitInputError;
}

}  // namespace qss
