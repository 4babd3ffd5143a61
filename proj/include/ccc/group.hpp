#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ccc/arith.hpp"

namespace ccc {

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A concrete finite group: dense element ids 0..order-1 with a full
/// multiplication table. All target groups have order at most a few
/// thousand, so O(1) multiplication wins over any implicit representation.
class FiniteGroup {
 public:
  /// Validates the table: Latin square, identity, inverses, associativity
  /// (exhaustive for order <= 512, 10^6 sampled triples above).
  FiniteGroup(std::string name, int order, std::vector<int> mul,
              std::vector<int> generators = {},
              std::map<int, std::string> generator_labels = {});

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int g, int h) const { return mul_[static_cast<std::size_t>(g) * order_ + h]; }
  int inv(int g) const { return inv_[g]; }
  const std::vector<int>& mul_table() const { return mul_; }
  const std::vector<int>& generators() const { return generators_; }
  const std::map<int, std::string>& generator_labels() const { return generator_labels_; }

  int conjugate(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int element_order(int g) const;
  bool commutes(int g, int h) const { return mul(g, h) == mul(h, g); }

  nlohmann::json to_json() const;
  static FiniteGroup from_json(const nlohmann::json& j);

 private:
  std::string name_;
  int order_;
  std::vector<int> mul_;
  int identity_;
  std::vector<int> inv_;
  std::vector<int> generators_;
  std::map<int, std::string> generator_labels_;
};

struct ConjugacyClass {
  int representative;        // least member id
  std::vector<int> members;  // sorted
  int size() const { return static_cast<int>(members.size()); }
};

struct ClassData {
  std::vector<ConjugacyClass> classes;  // ordered by least member id
  std::vector<int> class_of;            // element id -> class index
  std::vector<int> center;              // sorted element ids

  std::vector<int> class_size_multiset() const;  // sorted ascending
};

ClassData conjugacy_data(const FiniteGroup& g);

std::vector<int> centralizer(const FiniteGroup& g, int elem);

/// k(G)/|G|; internally cross-checked against the commuting pair count.
Rat commuting_probability(const FiniteGroup& g);

int distinct_centralizer_count(const FiniteGroup& g);

FiniteGroup quotient_by_center(const FiniteGroup& g);

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

struct StructureTag {
  enum class Kind { Trivial, Cyclic, ElementaryAbelian, Abelian, Dihedral, Other };
  Kind kind = Kind::Other;
  long n = 0;     // Cyclic(n) / Dihedral(n): cyclic part order
  long p = 0;     // ElementaryAbelian prime
  long rank = 0;  // ElementaryAbelian rank
  std::vector<long> invariant_factors;  // Abelian (and the two special cases)

  std::string to_string() const;
  bool is_dihedral(long m) const { return kind == Kind::Dihedral && n == m; }
  bool is_elementary_abelian(long pr, long rk) const {
    return kind == Kind::ElementaryAbelian && p == pr && rank == rk;
  }
};

/// Tag-based recognizer; never general isomorphism testing. `Other` is the
/// fallback, not an error.
StructureTag recognize_structure(const FiniteGroup& g);

struct FrobeniusDecomposition {
  long kernel_order;
  long complement_order;
};

/// Brute-force Frobenius complement search over the subgroup lattice.
/// Throws CapExceeded when the lattice walk exceeds its budget.
std::optional<FrobeniusDecomposition> frobenius_decomposition(const FiniteGroup& g);

}  // namespace ccc
