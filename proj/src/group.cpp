#include "ccc/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace ccc {

namespace {

constexpr int kFullAssocCheckLimit = 512;
constexpr long kSampledAssocTriples = 1'000'000;

}  // namespace

FiniteGroup::FiniteGroup(std::string name, int order, std::vector<int> mul,
                         std::vector<int> generators,
                         std::map<int, std::string> generator_labels)
    : name_(std::move(name)),
      order_(order),
      mul_(std::move(mul)),
      generators_(std::move(generators)),
      generator_labels_(std::move(generator_labels)) {
  if (order_ <= 0) throw std::invalid_argument("group order must be positive");
  if (mul_.size() != static_cast<std::size_t>(order_) * order_)
    throw std::invalid_argument("multiplication table has wrong size");
  for (int v : mul_)
    if (v < 0 || v >= order_)
      throw std::invalid_argument("multiplication table entry out of range");

  // Latin square: every row and column is a permutation.
  std::vector<char> seen(order_);
  for (int g = 0; g < order_; ++g) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int h = 0; h < order_; ++h) seen[this->mul(g, h)] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw std::invalid_argument("row " + std::to_string(g) + " is not a permutation");
    std::fill(seen.begin(), seen.end(), 0);
    for (int h = 0; h < order_; ++h) seen[this->mul(h, g)] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw std::invalid_argument("column " + std::to_string(g) + " is not a permutation");
  }

  identity_ = -1;
  for (int e = 0; e < order_; ++e) {
    bool ok = true;
    for (int g = 0; g < order_ && ok; ++g)
      ok = this->mul(e, g) == g && this->mul(g, e) == g;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw std::invalid_argument("no identity element");

  inv_.assign(order_, -1);
  for (int g = 0; g < order_; ++g) {
    for (int h = 0; h < order_; ++h) {
      if (this->mul(g, h) == identity_) {
        if (this->mul(h, g) != identity_)
          throw std::invalid_argument("one-sided inverse found");
        inv_[g] = h;
        break;
      }
    }
    if (inv_[g] < 0) throw std::invalid_argument("element without inverse");
  }

  // Hand-written normal forms must be distrusted: verify associativity.
  auto assoc = [this](int a, int b, int c) {
    return this->mul(this->mul(a, b), c) == this->mul(a, this->mul(b, c));
  };
  if (order_ <= kFullAssocCheckLimit) {
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        for (int c = 0; c < order_; ++c)
          if (!assoc(a, b, c))
            throw std::invalid_argument("associativity fails at (" + std::to_string(a) +
                                        "," + std::to_string(b) + "," + std::to_string(c) + ")");
  } else {
    std::mt19937_64 rng(0x5eed5eed);  // fixed seed: reproducible validation
    std::uniform_int_distribution<int> pick(0, order_ - 1);
    for (long i = 0; i < kSampledAssocTriples; ++i)
      if (!assoc(pick(rng), pick(rng), pick(rng)))
        throw std::invalid_argument("associativity fails (sampled)");
  }

  for (int g : generators_)
    if (g < 0 || g >= order_) throw std::invalid_argument("generator id out of range");
}

int FiniteGroup::element_order(int g) const {
  int n = 1;
  int x = g;
  while (x != identity_) {
    x = mul(x, g);
    ++n;
  }
  return n;
}

nlohmann::json FiniteGroup::to_json() const {
  nlohmann::json j;
  j["name"] = name_;
  j["order"] = order_;
  j["mul"] = mul_;
  j["generators"] = generators_;
  return j;
}

FiniteGroup FiniteGroup::from_json(const nlohmann::json& j) {
  return FiniteGroup(j.at("name").get<std::string>(), j.at("order").get<int>(),
                     j.at("mul").get<std::vector<int>>(),
                     j.value("generators", std::vector<int>{}));
}

std::vector<int> ClassData::class_size_multiset() const {
  std::vector<int> sizes;
  sizes.reserve(classes.size());
  for (const auto& c : classes) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

ClassData conjugacy_data(const FiniteGroup& g) {
  const int n = g.order();
  // Conjugating set: attached generators if any, else all elements. Orbit
  // closure under generator conjugation reaches the whole class because
  // conjugation by a word is the composite of generator conjugations.
  std::vector<int> conjugators = g.generators();
  if (conjugators.empty()) {
    conjugators.resize(n);
    std::iota(conjugators.begin(), conjugators.end(), 0);
  }

  ClassData data;
  data.class_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (data.class_of[x] >= 0) continue;  // x is the least member of a new class
    int idx = static_cast<int>(data.classes.size());
    std::vector<int> orbit{x};
    data.class_of[x] = idx;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (int c : conjugators) {
        int y = g.conjugate(c, orbit[i]);
        if (data.class_of[y] < 0) {
          data.class_of[y] = idx;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    data.classes.push_back({orbit.front(), std::move(orbit)});
  }

  long total = 0;
  for (const auto& c : data.classes) {
    total += c.size();
    if (c.size() == 1) data.center.push_back(c.representative);
  }
  if (total != n) throw std::logic_error("class equation violated");
  std::sort(data.center.begin(), data.center.end());
  return data;
}

std::vector<int> centralizer(const FiniteGroup& g, int elem) {
  std::vector<int> c;
  for (int h = 0; h < g.order(); ++h)
    if (g.commutes(h, elem)) c.push_back(h);
  return c;
}

Rat commuting_probability(const FiniteGroup& g) {
  const int n = g.order();
  long long pairs = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.commutes(a, b)) ++pairs;

  Int k = static_cast<long long>(conjugacy_data(g).classes.size());
  Rat by_classes(k, Int(n));
  Rat by_pairs(Int(pairs), Int(n) * n);
  if (by_classes != by_pairs)
    throw std::logic_error("commuting probability definitions disagree");
  return by_classes;
}

int distinct_centralizer_count(const FiniteGroup& g) {
  std::set<std::vector<int>> seen;
  for (int x = 0; x < g.order(); ++x) seen.insert(centralizer(g, x));
  return static_cast<int>(seen.size());
}

FiniteGroup quotient_by_center(const FiniteGroup& g) {
  const int n = g.order();
  ClassData data = conjugacy_data(g);
  const std::vector<int>& z = data.center;

  // Coset of x = sorted xZ; coset id = least member.
  std::vector<int> coset_min(n, -1);
  std::vector<int> reps;  // least members, ascending
  for (int x = 0; x < n; ++x) {
    if (coset_min[x] >= 0) continue;
    int least = x;
    for (int c : z) coset_min[g.mul(x, c)] = least;
    reps.push_back(least);
  }

  std::vector<int> rep_index(n, -1);
  for (std::size_t i = 0; i < reps.size(); ++i) rep_index[reps[i]] = static_cast<int>(i);

  const int q = static_cast<int>(reps.size());
  std::vector<int> mul(static_cast<std::size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      mul[static_cast<std::size_t>(i) * q + j] = rep_index[coset_min[g.mul(reps[i], reps[j])]];

  std::vector<int> gens;
  for (int gen : g.generators()) {
    int img = rep_index[coset_min[gen]];
    if (std::find(gens.begin(), gens.end(), img) == gens.end()) gens.push_back(img);
  }
  return FiniteGroup(g.name() + "/Z", q, std::move(mul), std::move(gens));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int ng = g.order(), nh = h.order();
  const int n = ng * nh;
  auto id = [nh](int a, int b) { return a * nh + b; };
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int a1 = 0; a1 < ng; ++a1)
    for (int b1 = 0; b1 < nh; ++b1)
      for (int a2 = 0; a2 < ng; ++a2)
        for (int b2 = 0; b2 < nh; ++b2)
          mul[static_cast<std::size_t>(id(a1, b1)) * n + id(a2, b2)] =
              id(g.mul(a1, a2), h.mul(b1, b2));

  // A factor without a recorded generating set contributes all its elements,
  // so the product's generator list always generates.
  std::vector<int> gens;
  auto side = [](const FiniteGroup& f) {
    if (!f.generators().empty()) return f.generators();
    std::vector<int> all(f.order());
    std::iota(all.begin(), all.end(), 0);
    return all;
  };
  for (int x : side(g)) gens.push_back(id(x, h.identity()));
  for (int x : side(h)) gens.push_back(id(g.identity(), x));
  return FiniteGroup(g.name() + "x" + h.name(), n, std::move(mul), std::move(gens));
}

namespace {

bool is_abelian(const FiniteGroup& g) {
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      if (!g.commutes(a, b)) return false;
  return true;
}

std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> f;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      f.emplace_back(p, e);
    }
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

// Finite abelian groups are determined by their element-order statistics:
// |{g : g^{p^k} = 1}| = p^{sum_i min(k, e_i)} recovers the p-partition.
std::vector<long> abelian_invariant_factors(const FiniteGroup& g) {
  std::vector<int> orders(g.order());
  for (int x = 0; x < g.order(); ++x) orders[x] = g.element_order(x);

  std::map<long, std::vector<int>> p_partitions;  // prime -> exponents descending
  for (auto [p, e] : factorize(g.order())) {
    // s_k = log_p |{g : order divides p^k}|; the partition of e recording the
    // p-component exponents has exactly s_k - s_{k-1} parts of size >= k.
    std::vector<int> s{0};
    long long pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      long long count = 0;
      for (int x = 0; x < g.order(); ++x)
        if (pk % orders[x] == 0) ++count;
      int sk = 0;
      long long c = count;
      while (c > 1) {
        c /= p;
        ++sk;
      }
      s.push_back(sk);
      if (sk == e) break;
    }
    // Number of partition parts >= k equals s_k - s_{k-1}.
    std::vector<int> parts;
    for (std::size_t k = 1; k < s.size(); ++k) {
      int count_ge_k = s[k] - s[k - 1];
      while (static_cast<int>(parts.size()) < count_ge_k) parts.push_back(0);
      for (int i = 0; i < count_ge_k; ++i) ++parts[i];
    }
    std::sort(parts.rbegin(), parts.rend());
    p_partitions[p] = parts;
  }

  std::size_t nfactors = 0;
  for (auto& [p, parts] : p_partitions) nfactors = std::max(nfactors, parts.size());
  std::vector<long> factors(nfactors, 1);
  for (auto& [p, parts] : p_partitions)
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (int j = 0; j < parts[i]; ++j) factors[i] *= p;
  // factors[0] is the largest invariant factor; report ascending.
  std::sort(factors.begin(), factors.end());
  return factors;
}

}  // namespace

std::string StructureTag::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Trivial:
      return "trivial";
    case Kind::Cyclic:
      os << "Z" << n;
      return os.str();
    case Kind::ElementaryAbelian:
      os << "Z" << p;
      for (long i = 1; i < rank; ++i) os << "xZ" << p;
      return os.str();
    case Kind::Abelian: {
      for (std::size_t i = 0; i < invariant_factors.size(); ++i)
        os << (i ? "xZ" : "Z") << invariant_factors[i];
      return os.str();
    }
    case Kind::Dihedral:
      os << "D" << 2 * n;
      return os.str();
    case Kind::Other:
      return "other";
  }
  return "other";
}

StructureTag recognize_structure(const FiniteGroup& g) {
  StructureTag tag;
  const long n = g.order();
  if (n == 1) {
    tag.kind = StructureTag::Kind::Trivial;
    return tag;
  }
  if (is_abelian(g)) {
    auto factors = abelian_invariant_factors(g);
    tag.invariant_factors = factors;
    if (factors.size() == 1) {
      tag.kind = StructureTag::Kind::Cyclic;
      tag.n = factors[0];
      return tag;
    }
    auto f = factorize(n);
    if (f.size() == 1 && std::all_of(factors.begin(), factors.end(),
                                     [&](long v) { return v == f[0].first; })) {
      tag.kind = StructureTag::Kind::ElementaryAbelian;
      tag.p = f[0].first;
      tag.rank = static_cast<long>(factors.size());
      return tag;
    }
    tag.kind = StructureTag::Kind::Abelian;
    return tag;
  }
  // Dihedral(m): order 2m, m >= 3, a cyclic subgroup of order m inverted by
  // an involution outside it.
  if (n % 2 == 0 && n >= 6) {
    const long m = n / 2;
    for (int c = 0; c < n; ++c) {
      if (g.element_order(c) != m) continue;
      std::vector<char> in_cyc(n, 0);
      int x = g.identity();
      for (long i = 0; i < m; ++i) {
        in_cyc[x] = 1;
        x = g.mul(x, c);
      }
      for (int t = 0; t < n; ++t) {
        if (in_cyc[t] || g.element_order(t) != 2) continue;
        if (g.conjugate(t, c) == g.inv(c)) {
          tag.kind = StructureTag::Kind::Dihedral;
          tag.n = m;
          return tag;
        }
      }
      break;  // all order-m elements generate conjugate cyclic subgroups; one try suffices
    }
  }
  tag.kind = StructureTag::Kind::Other;
  return tag;
}

namespace {

std::vector<int> subgroup_closure(const FiniteGroup& g, std::vector<int> gens,
                                  long& budget) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> elems{g.identity()};
  in[g.identity()] = 1;
  for (int x : gens)
    if (!in[x]) {
      in[x] = 1;
      elems.push_back(x);
    }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (--budget < 0) throw CapExceeded("subgroup enumeration budget exhausted");
      int p = g.mul(elems[i], elems[j]);
      if (!in[p]) {
        in[p] = 1;
        elems.push_back(p);
      }
      p = g.mul(elems[j], elems[i]);
      if (!in[p]) {
        in[p] = 1;
        elems.push_back(p);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

}  // namespace

std::optional<FrobeniusDecomposition> frobenius_decomposition(const FiniteGroup& g) {
  const int n = g.order();
  if (n > 10'000) throw CapExceeded("frobenius_decomposition: order above brute-force cap");
  // Frobenius groups have trivial center; cheap rejection first.
  if (conjugacy_data(g).center.size() != 1) return std::nullopt;

  long budget = 20'000'000;
  // Full subgroup lattice by closure BFS: cyclic subgroups, then extend by
  // single elements until fixpoint.
  std::set<std::vector<int>> subgroups;
  std::vector<std::vector<int>> queue;
  for (int x = 0; x < n; ++x) {
    auto s = subgroup_closure(g, {x}, budget);
    if (subgroups.insert(s).second) queue.push_back(s);
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto base = queue[i];
    if (static_cast<int>(base.size()) == n) continue;
    for (int x = 0; x < n; ++x) {
      if (std::binary_search(base.begin(), base.end(), x)) continue;
      auto gens = base;
      gens.push_back(x);
      auto s = subgroup_closure(g, gens, budget);
      if (subgroups.insert(s).second) queue.push_back(s);
    }
  }

  for (const auto& h : subgroups) {
    const int hs = static_cast<int>(h.size());
    if (hs == 1 || hs == n || n % hs != 0) continue;
    bool malnormal = true;
    for (int c = 0; c < n && malnormal; ++c) {
      if (std::binary_search(h.begin(), h.end(), c)) continue;
      int common = 0;
      for (int x : h) {
        int y = g.conjugate(c, x);
        if (std::binary_search(h.begin(), h.end(), y)) ++common;
      }
      if (common > 1) malnormal = false;
    }
    if (malnormal) return FrobeniusDecomposition{n / hs, hs};
  }
  return std::nullopt;
}

}  // namespace ccc
