#pragma once

#include <string>

#include "ccc/group.hpp"
#include "ccc/presentation.hpp"

namespace ccc {

struct InvalidParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// One of the two-generator families the closed forms quantify over.
struct FamilySpec {
  enum class Family { Dihedral, Dicyclic, Semidihedral, V8m, Unm, Gpmn };
  Family family;
  long m = 0;
  long n = 0;  // Unm, Gpmn
  long p = 0;  // Gpmn

  void validate() const;
  long group_order() const;
  std::string label() const;  // e.g. "dihedral:12", "gpmn:3,1,2"

  static FamilySpec dihedral(long m) { return {Family::Dihedral, m}; }
  static FamilySpec dicyclic(long m) { return {Family::Dicyclic, m}; }
  static FamilySpec semidihedral(long m) { return {Family::Semidihedral, m}; }
  static FamilySpec v8m(long m) { return {Family::V8m, m}; }
  static FamilySpec unm(long n, long m) {
    FamilySpec s{Family::Unm, m};
    s.n = n;
    return s;
  }
  static FamilySpec gpmn(long p, long m, long n) {
    FamilySpec s{Family::Gpmn, m, n, p};
    return s;
  }
  /// Parses the CLI syntax, e.g. `dihedral:12`, `unm:2,6`, `gpmn:3,1,2`.
  static FamilySpec parse(const std::string& text);
};

FiniteGroup build_family(const FamilySpec& spec);

/// The defining presentation of the family member, for cross-checking the
/// normal-form constructor against coset enumeration.
Presentation family_presentation(const FamilySpec& spec);

/// Auxiliary groups instantiating the central-quotient theorems.
struct AuxSpec {
  enum class Kind {
    Heisenberg,           // upper unitriangular 3x3 mod p, order p^3
    ExtraspecialP2,       // Z_{p^2} x| Z_p acting by 1+p, order p^3
    FrobeniusPQ,          // Z_q x| Z_p, needs p | q-1
    F20Style,             // Z_q x| Z_{c} with cyclic complement of order c | q-1
    GeneralizedDihedral,  // (Z_p x Z_p) x| Z_2 by inversion
    AltFour,
    Cyclic,
    Modular16,                // <a,b | a^8, b^2, b a b^-1 = a^5>
    DirectProductWithCyclic,  // base family member times Z_c
  };
  Kind kind;
  long p = 0;
  long q = 0;
  long c = 0;
  FamilySpec base{};  // DirectProductWithCyclic only

  std::string label() const;
  /// CLI syntax: `frobenius:7,3`, `f20:5,4`, `gendihedral:3`, `heisenberg:3`,
  /// `extraspecial:3`, `a4`, `cyclic:5`, `modular16`,
  /// `productc:dihedral:4:2`.
  static AuxSpec parse(const std::string& text);
};

FiniteGroup build_aux(const AuxSpec& spec);

}  // namespace ccc
