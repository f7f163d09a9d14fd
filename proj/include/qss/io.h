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

#ifndef QSS_IO_H
#define QSS_IO_H

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qss/paulistab.h"
#include "qss/schemes.h"
#include "qss/structures.h"
#include "qss/verifier.h"

namespace qss {

using Json = nlohmann::ordered_json;

/// Malformed or invalid input file; the message names the file and field.
class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Parses a JSON file, reporting line/column on syntax errors.
Json load_json_file(const std::string &path);

/// {"n": int, "generators": [str], "logical_x": str, "logical_z": str}
StabilizerCode code_from_json(const Json &j, const std::string &source = "code");
/// Built-in name ("trivial", "five_qubit") or a path to a code file.
StabilizerCode load_code(const std::string &name_or_path);
Json code_to_json(const StabilizerCode &code);

/// {"q": int, "matrix": [[int]], "labels": [int]}
MSP msp_from_json(const Json &j, const std::string &source = "msp");
Json msp_to_json(const MSP &msp);

/// {"dim": int, "probs": [real]}
SecretSpec secret_from_json(const Json &j, const std::string &source = "secret");

/// {"n": int, "maximal_unauthorized": [[int]]} or {"threshold": {"t": int, "n": int}}
AdversaryStructure structure_from_json(const Json &j, const std::string &source = "structure");
Json structure_to_json(const AdversaryStructure &s);

/// Rounds to 12 significant digits; negative zero becomes zero.
double round_sig12(double v);

Json player_set_to_json(PlayerSet s);
Json report_to_json(const VerificationReport &report);
Json audit_to_json(const AuditTable &table);
Json check_to_json(const CheckResult &check);

std::string report_to_table(const VerificationReport &report);
std::string audit_to_table(const AuditTable &table);

}  // namespace qss

#endif  // QSS_IO_H
