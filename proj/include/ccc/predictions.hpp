#pragma once

#include <string>
#include <vector>

#include "ccc/families.hpp"
#include "ccc/graph.hpp"
#include "ccc/zagreb.hpp"

namespace ccc {

struct DivisibilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A predicted CCC structure with its closed-form indices. The
/// decomposition is the source of truth; closed_m1/closed_m2 always equal
/// zagreb_from_decomposition(decomposition).
struct PredictedStructure {
  std::string case_label;
  CliqueDecomposition decomposition;
  Int closed_m1;
  Int closed_m2;
  bool expected_equality = false;
};

/// The per-family clique decomposition with its parity case split.
PredictedStructure predicted_decomposition(const FamilySpec& spec);

/// Independent evaluation of the published per-case index formulas (the
/// expanded polynomials, not the decomposition route).
std::pair<Int, Int> closed_form_indices(const FamilySpec& spec);

/// Central-quotient cases. x = |Z(G)|.
struct QuotientCase {
  enum class Kind {
    DihedralQuotient,        // G/Z = D_{2m}
    ElemAbelianQuotient,     // G/Z = Z_p x Z_p
    FrobeniusPQ,             // G/Z Frobenius of order pq
    FrobeniusP2Q_A4,         // G/Z = A4
    FrobeniusP2Q_PltQ,       // G/Z Frobenius of order p^2 q, p < q, order != 12
    FrobeniusP2Q_PgtQ,       // G/Z Frobenius of order p^2 q, p > q
    P3QuotientAbelian,       // G/Z abelian of order p^3
    P3QuotientNonabelian,    // G/Z non-abelian of order p^3
  };
  Kind kind;
  long m = 0;
  long p = 0;
  long q = 0;
  long k = 0;  // P3QuotientNonabelian only; 0 = all 1 <= k <= p
  Int x = 1;

  std::string label() const;
  /// CLI syntax: `qdihedral:m,x`, `qzpzp:p,x`, `qfrobenius:p,q,x`, `qa4:x`,
  /// `qp2q:p,q,x` (p<q vs p>q picked by comparison), `qp3a:p,x`,
  /// `qp3na:p,x` or `qp3na:p,k,x`.
  static QuotientCase parse(const std::string& text);
};

/// Picks the applicable central-quotient case for G by recognizing G/Z(G):
/// dihedral and Z_p x Z_p quotients take precedence, then order-p^3
/// quotients, then Frobenius quotients of order pq / 12 / p^2 q. Throws
/// InvalidParams when no covered case applies (e.g. abelian G).
QuotientCase infer_quotient_case(const FiniteGroup& g);

/// All candidate structures the applicable theorem allows for the case.
/// Candidates whose clique sizes would be non-integral for this x are
/// dropped; if none survives, a DivisibilityError names the condition.
std::vector<PredictedStructure> quotient_prediction(const QuotientCase& c);

/// The published order-p^3 corollary polynomials, as printed. The M2
/// polynomial disagrees with the decomposition route (see
/// p3_corollary_discrepancy); it is kept verbatim so reports can surface
/// the mismatch instead of silently reconciling it.
std::pair<Int, Int> p3_corollary_printed(long p);

/// Decomposition-derived order-p^3 values: (p+1)K_{p-1}.
std::pair<Int, Int> p3_corollary_derived(long p);

/// Non-empty note when the printed polynomial disagrees at this p.
std::vector<std::string> p3_corollary_discrepancy(long p);

struct VerificationRecord {
  std::string group_name;
  CliqueDecomposition brute_decomposition;
  bool brute_is_clique_union = true;
  PredictedStructure predicted;  // the matched candidate, or the first one
  bool structure_match = false;
  bool m1_match = false;
  bool m2_match = false;
  ZagrebReport report;  // from brute-force indices
  bool equality_as_predicted = false;
  std::vector<std::string> discrepancy_notes;

  bool ok() const {
    return structure_match && m1_match && m2_match && equality_as_predicted &&
           verdict_ok(report.verdict);
  }
  nlohmann::json to_json() const;
};

/// End-to-end check: brute-force CCC vs a non-empty candidate list.
/// Mismatches are recorded, never thrown.
VerificationRecord verify_group(const FiniteGroup& g,
                                const std::vector<PredictedStructure>& predicted);

/// Convenience: verify a family member against its own prediction.
VerificationRecord verify_family(const FamilySpec& spec);

}  // namespace ccc
