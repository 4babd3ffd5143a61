#pragma once

#include <optional>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "ccc/arith.hpp"
#include "ccc/graph.hpp"

namespace ccc {

enum class Verdict { StrictlySatisfied, Equality, Violated, VacuousEquality };

std::string verdict_name(Verdict v);  // "strict", "equality", "violated", "vacuous-equality"

bool verdict_is_equality(Verdict v);  // Equality or VacuousEquality
bool verdict_ok(Verdict v);           // anything but Violated

/// M1 = sum deg(v)^2, M2 = sum over edges of deg(u)deg(v).
std::pair<Int, Int> zagreb_generic(const SimpleGraph& g);

/// M1 = sum l_i m_i (m_i-1)^2, M2 = sum l_i m_i (m_i-1)^3 / 2.
std::pair<Int, Int> zagreb_from_decomposition(const CliqueDecomposition& d);

/// Decides M2/|E| >= M1/|V| by cross-multiplication, so the |E| = 0 cases
/// still get a definite (vacuous) verdict.
Verdict conjecture_verdict(const Int& m1, const Int& m2, const Int& num_vertices,
                           const Int& num_edges);

struct ZagrebReport {
  Int m1;
  Int m2;
  Int num_vertices;
  Int num_edges;
  Int lhs;  // m2 * |V|
  Int rhs;  // m1 * |E|
  Verdict verdict;
  std::optional<std::pair<Rat, Rat>> ratios;  // (M2/|E|, M1/|V|) when defined

  nlohmann::json to_json() const;
};

ZagrebReport zagreb_report(const SimpleGraph& g);
ZagrebReport report_from_decomposition(const CliqueDecomposition& d);
ZagrebReport make_report(const Int& m1, const Int& m2, const Int& num_vertices,
                         const Int& num_edges);

}  // namespace ccc
