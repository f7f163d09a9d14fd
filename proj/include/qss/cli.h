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

#ifndef QSS_CLI_H
#define QSS_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace qss {

inline constexpr int kExitPass = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInputError = 2;

/// Runs one `qss` command. argv[0] is the program name. Reports go to `out`
/// (or the --out file); diagnostics and failure witnesses go to `err`.
///
///   qss stabilizer --code NAME|PATH [--secret PATH] [--expect SPEC] [--audit]
///   qss msp        --msp PATH [--secret PATH] [--expect SPEC] [--audit]
///   qss teleport   --players N [--secret PATH] [--outcome ab] [--seed S] [--expect SPEC]
///   qss verify     (--code X | --msp PATH | --players N) [--secret PATH] [--expect SPEC]
///   qss audit      (--code X | --msp PATH) [--secret PATH]
///
/// Common flags: --tol REAL, --out PATH, --format json|table. SPEC is
/// `threshold:t,n`, `msp`, or a structure file. QSS_TOL sets the default
/// tolerance; --tol wins.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qss

#endif  // QSS_CLI_H
