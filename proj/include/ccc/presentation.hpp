#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ccc/group.hpp"

namespace ccc {

struct LimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A letter in a relator word: generator index, inverted or not.
struct Letter {
  int gen;
  bool inverse;
  bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

Word inverse_word(const Word& w);
Word commutator(const Word& a, const Word& b);  // a^-1 b^-1 a b
Word power(const Word& w, long e);              // e may be negative
void free_reduce(Word& w);

/// A finite presentation <generators | relators>. Relator words are kept
/// freely reduced; every letter must name a listed generator.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  void add_relator(Word w);
  int generator_index(const std::string& name) const;

  /// Compact text syntax: `a, b | a^5, b^2, b a b^-1 a`.
  /// Generators are comma-separated names; each relator is a
  /// whitespace-separated word of `name`, `name^k` (k possibly negative)
  /// factors, all equal to the identity.
  static Presentation parse(const std::string& text);
  std::string to_string() const;
};

inline constexpr int kDefaultCosetLimit = 1'000'000;

/// Process-wide default coset limit, adjustable by front ends (flag or
/// environment variable). Starts at kDefaultCosetLimit.
int default_coset_limit();
void set_default_coset_limit(int limit);

/// HLT-style Todd-Coxeter enumeration over the trivial subgroup.
/// Returns the regular permutation representation as a Cayley table; every
/// relator is re-verified on the result. Throws LimitExceeded when the coset
/// table grows past `coset_limit` before closing. The single-argument form
/// uses default_coset_limit().
FiniteGroup coset_enumerate(const Presentation& p);
FiniteGroup coset_enumerate(const Presentation& p, int coset_limit);

}  // namespace ccc
