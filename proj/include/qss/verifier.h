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

#ifndef QSS_VERIFIER_H
#define QSS_VERIFIER_H

#include <optional>
#include <string>
#include <vector>

#include "qss/schemes.h"
#include "qss/structures.h"
#include "qss/tensorlab.h"

namespace qss {

/// Classification threshold for entropies and mutual informations, in bits.
class Tolerance {
   public:
    static constexpr double kDefault = 1e-6;

    Tolerance() = default;
    /// Throws unless 0 < eps < 1e-2.
    explicit Tolerance(double eps);

    double eps() const { return eps_; }

   private:
    double eps_ = kDefault;
};

/// Spectra are compared at this fixed tolerance, independent of Tolerance.
inline constexpr double kSpectrumTolerance = 1e-9;

enum class SubsetClass { kFull, kZero, kPartial };
const char *to_string(SubsetClass c);

struct SubsetResult {
    PlayerSet players;
    double entropy_bits;
    double mutual_info_bits;
    SubsetClass cls;
};

enum class VerdictKind { kPerfect, kNonPerfect, kInvalid };
const char *to_string(VerdictKind v);

struct Verdict {
    VerdictKind kind = VerdictKind::kInvalid;
    /// Realized structure (the ZERO sets) when kind is kPerfect.
    std::optional<AdversaryStructure> structure;
    /// PARTIAL subsets when kind is kNonPerfect.
    std::vector<PlayerSet> witnesses;
    std::vector<std::string> diagnostics;
};

struct VerificationReport {
    double secret_entropy_bits = 0.0;
    /// I(R:S) of the pure scheme; 2 S(S).
    double reference_mutual_bits = 0.0;
    std::size_t n_players = 0;
    /// Players that own shares; results range over its nonempty subsets.
    PlayerSet players;
    bool pure = true;
    std::vector<SubsetResult> results;
    Verdict verdict;
    Tolerance tol;

    /// Throws std::out_of_range for a subset not in the report.
    const SubsetResult &find(PlayerSet s) const;
};

/// "{1}: PARTIAL I=1.0"
std::string describe(const SubsetResult &r);

/// Mutual information and entropy for every nonempty player subset, in
/// size-then-lexicographic order, with the Def.-1 trichotomy and a verdict.
VerificationReport subset_report(const SchemeInstance &scheme, Tolerance tol = {});
VerificationReport subset_report(const MixedScheme &scheme, Tolerance tol = {});

struct CheckResult {
    bool passed = true;
    std::optional<PlayerSet> witness;
    std::string message;
};

/// Every expected-unauthorized subset must carry zero information and every
/// expected-authorized subset the full I(R:S).
CheckResult verify_against(const VerificationReport &report, const AdversaryStructure &expected, Tolerance tol = {});

/// Erasures on `shares` are correctable iff I(R:shares) < eps.
bool erasure_correctable(const PureState &state, const LabelSet &shares, Tolerance tol = {});

/// |I(R:S) - I(R:A) - I(R:B)| < eps over all complementary pairs of nonempty sets.
CheckResult check_pure_duality(const SchemeInstance &scheme, Tolerance tol = {});

struct AuditRow {
    PlayerSet players;
    std::string quantity;
    double expected;
    double actual;
    bool passed;
};

struct AuditTable {
    std::string title;
    std::vector<AuditRow> rows;

    bool passed() const;
    /// First failing row, if any.
    const AuditRow *first_failure() const;
};

/// Checks S(B) = |B| for |B| <= t-1, S(A) = S(S) + (2t-1-|A|) for |A| >= t,
/// and the two-valued spectrum of rho_A for |A| = t.
AuditTable audit_stabilizer_entropies(const SchemeInstance &scheme, Tolerance tol = {});

/// For every authorized A with complement B and (l, m) = ranks:
/// S(A) = S(S) + (m+l-e) log2 q and S(B) = (m+l-e) log2 q.
AuditTable audit_msp_entropies(const SchemeInstance &scheme, Tolerance tol = {});

}  // namespace qss

#endif  // QSS_VERIFIER_H
