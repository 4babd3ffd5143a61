#include "ccc/predictions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ccc {

namespace {

long long to_ll(const Int& v) {
  if (v > std::numeric_limits<long long>::max() || v < 0)
    throw InvalidParams("clique size out of supported range");
  return static_cast<long long>(v);
}

// Normalizes (multiplicity, size) pairs: drops empty parts, merges equal
// sizes, sorts by decreasing size.
CliqueDecomposition make_decomp(const std::vector<std::pair<Int, Int>>& raw) {
  std::map<long long, long long> count;
  for (const auto& [l, m] : raw) {
    if (l == 0) continue;
    if (l < 0 || m < 1) throw InvalidParams("invalid decomposition part");
    count[to_ll(m)] += to_ll(l);
  }
  CliqueDecomposition d;
  for (auto it = count.rbegin(); it != count.rend(); ++it)
    d.parts.emplace_back(it->second, it->first);
  return d;
}

Int exact_div(const Int& num, const Int& den, const std::string& condition) {
  if (den == 0 || num % den != 0)
    throw DivisibilityError("divisibility condition failed: " + condition);
  return num / den;
}

Int ipow(long base, long exp) { return pow_int(Int(base), static_cast<unsigned long>(exp)); }

PredictedStructure finish(std::string label, CliqueDecomposition d, bool expected_equality) {
  auto [m1, m2] = zagreb_from_decomposition(d);
  return PredictedStructure{std::move(label), std::move(d), m1, m2, expected_equality};
}

// expected_equality computed from the predicted structure itself: equality
// holds exactly when all clique sizes coincide (a single K_n is tight in the
// cross-multiplied inequality, and disjoint unions of equal cliques scale it).
PredictedStructure finish_auto(std::string label, CliqueDecomposition d) {
  auto rep = report_from_decomposition(d);
  return finish(std::move(label), std::move(d), verdict_is_equality(rep.verdict));
}

}  // namespace

PredictedStructure predicted_decomposition(const FamilySpec& spec) {
  spec.validate();
  const long m = spec.m, n = spec.n, p = spec.p;
  switch (spec.family) {
    case FamilySpec::Family::Dihedral: {
      bool eq = m == 3 || m == 4 || m == 6;
      if (m % 2 == 1)
        return finish("dihedral/m-odd", make_decomp({{1, (m - 1) / 2}, {1, 1}}), eq);
      if ((m / 2) % 2 == 0)
        return finish("dihedral/m-even/half-even", make_decomp({{1, m / 2 - 1}, {2, 1}}), eq);
      return finish("dihedral/m-even/half-odd", make_decomp({{1, m / 2 - 1}, {1, 2}}), eq);
    }
    case FamilySpec::Family::Dicyclic: {
      bool eq = m == 2 || m == 3;
      if (m % 2 == 0)
        return finish("dicyclic/m-even", make_decomp({{1, m - 1}, {2, 1}}), eq);
      return finish("dicyclic/m-odd", make_decomp({{1, m - 1}, {1, 2}}), eq);
    }
    case FamilySpec::Family::Semidihedral: {
      bool eq = m == 3;
      if (m % 2 == 0)
        return finish("semidihedral/m-even", make_decomp({{1, 2 * m - 1}, {2, 1}}), eq);
      return finish("semidihedral/m-odd", make_decomp({{1, 2 * m - 2}, {1, 4}}), eq);
    }
    case FamilySpec::Family::V8m: {
      bool eq = m == 1 || m == 2;
      if (m % 2 == 0)
        return finish("v8m/m-even", make_decomp({{1, 2 * m - 2}, {2, 2}}), eq);
      return finish("v8m/m-odd", make_decomp({{1, 2 * m - 1}, {2, 1}}), eq);
    }
    case FamilySpec::Family::Unm: {
      // Equality parameters are independent of n.
      bool eq = m == 3 || m == 4 || m == 6;
      if (m % 2 == 1)
        return finish("unm/m-odd", make_decomp({{1, n}, {1, n * (m - 1) / 2}}), eq);
      if ((m / 2) % 2 == 0)
        return finish("unm/m-even/half-even",
                      make_decomp({{2, n}, {1, n * (m / 2 - 1)}}), eq);
      return finish("unm/m-even/half-odd",
                    make_decomp({{1, 2 * n}, {1, n * (m / 2 - 1)}}), eq);
    }
    case FamilySpec::Family::Gpmn: {
      bool eq = n == 1;
      Int big = ipow(p, m + n - 1) - ipow(p, m + n - 2);
      Int small = ipow(p, m) - ipow(p, m - 1);
      Int copies = ipow(p, n) - ipow(p, n - 1);
      return finish("gpmn", make_decomp({{2, big}, {copies, small}}), eq);
    }
  }
  throw InvalidParams("unknown family");
}

namespace {

Int exact_int(const Rat& r, const std::string& what) {
  if (boost::multiprecision::denominator(r) != 1)
    throw std::logic_error("non-integral closed form for " + what);
  return boost::multiprecision::numerator(r);
}

}  // namespace

std::pair<Int, Int> closed_form_indices(const FamilySpec& spec) {
  spec.validate();
  const Int m = spec.m, n = spec.n;
  switch (spec.family) {
    case FamilySpec::Family::Dihedral: {
      Rat m1, m2;
      if (spec.m % 2 == 1) {
        m1 = Rat((m - 1) * (m - 3) * (m - 3), 8);
        m2 = Rat((m - 1) * (m - 3) * (m - 3) * (m - 3), 32);
      } else if ((spec.m / 2) % 2 == 0) {
        m1 = Rat((m - 2) * (m - 4) * (m - 4), 8);
        m2 = Rat((m - 2) * (m - 4) * (m - 4) * (m - 4), 32);
      } else {
        m1 = Rat((m - 2) * (m - 4) * (m - 4), 8) + 2;
        m2 = Rat((m - 2) * (m - 4) * (m - 4) * (m - 4), 32) + 1;
      }
      return {exact_int(m1, "dihedral M1"), exact_int(m2, "dihedral M2")};
    }
    case FamilySpec::Family::Dicyclic: {
      Rat m1 = Rat((m - 1) * (m - 2) * (m - 2));
      Rat m2 = Rat((m - 1) * (m - 2) * (m - 2) * (m - 2), 2);
      if (spec.m % 2 == 1) {
        m1 += 2;
        m2 += 1;
      }
      return {exact_int(m1, "dicyclic M1"), exact_int(m2, "dicyclic M2")};
    }
    case FamilySpec::Family::Semidihedral: {
      if (spec.m % 2 == 0) {
        Int a = 2 * m - 1, b = 2 * m - 2;
        return {a * b * b, exact_int(Rat(a * b * b * b, 2), "semidihedral M2")};
      }
      Int c = 2 * m - 3;
      return {(2 * m - 2) * c * c + 36, (m - 1) * c * c * c + 54};
    }
    case FamilySpec::Family::V8m: {
      if (spec.m % 2 == 0) {
        Int c = 2 * m - 3;
        return {(2 * m - 2) * c * c + 4, (m - 1) * c * c * c + 2};
      }
      // m odd reduces to the semidihedral even case: K_{2m-1} u 2K_1.
      Int a = 2 * m - 1, b = 2 * m - 2;
      return {a * b * b, exact_int(Rat(a * b * b * b, 2), "v8m M2")};
    }
    case FamilySpec::Family::Unm: {
      Rat m1, m2;
      if (spec.m % 2 == 1) {
        Int t = m * n - n;
        m1 = Rat(8 * n * (n - 1) * (n - 1) + t * (t - 2) * (t - 2), 8);
        m2 = Rat(16 * n * (n - 1) * (n - 1) * (n - 1) + t * (t - 2) * (t - 2) * (t - 2), 32);
      } else if ((spec.m / 2) % 2 == 0) {
        Int t = m * n - 2 * n;
        m1 = Rat(16 * n * (n - 1) * (n - 1) + t * (t - 2) * (t - 2), 8);
        m2 = Rat(32 * n * (n - 1) * (n - 1) * (n - 1) + t * (t - 2) * (t - 2) * (t - 2), 32);
      } else {
        Int t = m * n - 2 * n;
        m1 = Rat(16 * n * (2 * n - 1) * (2 * n - 1) + t * (t - 2) * (t - 2), 8);
        m2 = Rat(32 * n * (2 * n - 1) * (2 * n - 1) * (2 * n - 1) +
                     t * (t - 2) * (t - 2) * (t - 2),
                 32);
      }
      return {exact_int(m1, "unm M1"), exact_int(m2, "unm M2")};
    }
    case FamilySpec::Family::Gpmn: {
      const long mm = spec.m, nn = spec.n;
      auto P = [&](long e) { return ipow(spec.p, e); };
      Int m1 = 2 * P(3 * mm + 3 * nn - 3) - 6 * P(3 * mm + 3 * nn - 4) +
               6 * P(3 * mm + 3 * nn - 5) - 2 * P(3 * mm + 3 * nn - 6) -
               4 * P(2 * mm + 2 * nn - 2) + P(3 * mm + nn - 4) -
               4 * P(2 * mm + 2 * nn - 4) + P(3 * mm + nn) - 4 * P(3 * mm + nn - 1) +
               6 * P(3 * mm + nn - 2) - 4 * P(3 * mm + nn - 3) +
               8 * P(2 * mm + 2 * nn - 3) - 2 * P(2 * mm + nn) + 6 * P(2 * mm + nn - 1) -
               6 * P(2 * mm + nn - 2) + 2 * P(2 * mm + nn - 3) + P(mm + nn) -
               P(mm + nn - 2);
      Int m2_twice = 2 * P(4 * mm + 4 * nn - 4) - 8 * P(4 * mm + 4 * nn - 5) +
                     6 * P(3 * mm + 3 * nn - 6) - 8 * P(4 * mm + 4 * nn - 7) +
                     2 * P(4 * mm + 4 * nn - 8) - P(mm + nn) - 6 * P(3 * mm + 3 * nn - 3) +
                     18 * P(3 * mm + 3 * nn - 4) - 18 * P(3 * mm + 3 * nn - 5) +
                     12 * P(4 * mm + 4 * nn - 6) + 6 * P(2 * mm + 2 * nn - 2) +
                     6 * P(2 * mm + 2 * nn - 4) + P(4 * mm + nn) - 5 * P(4 * mm + nn - 1) +
                     10 * P(4 * mm + nn - 2) - 10 * P(4 * mm + nn - 3) +
                     5 * P(4 * mm + nn - 4) + 12 * P(3 * mm + nn - 1) -
                     18 * P(3 * mm + nn - 2) + 12 * P(3 * mm + nn - 3) -
                     3 * P(3 * mm + nn - 4) + 3 * P(2 * mm + nn) - 9 * P(2 * mm + nn - 1) -
                     12 * P(2 * mm + 2 * nn - 3) - 3 * P(3 * mm + nn) - P(4 * mm + nn - 5) +
                     9 * P(2 * mm + nn - 2) - 3 * P(2 * mm + nn - 3) + P(mm + nn - 2);
      return {m1, exact_int(Rat(m2_twice, 2), "gpmn M2")};
    }
  }
  throw InvalidParams("unknown family");
}

std::string QuotientCase::label() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::DihedralQuotient:
      os << "quotient-dihedral:" << m;
      break;
    case Kind::ElemAbelianQuotient:
      os << "quotient-zpzp:" << p;
      break;
    case Kind::FrobeniusPQ:
      os << "quotient-frobenius-pq:" << p << "," << q;
      break;
    case Kind::FrobeniusP2Q_A4:
      os << "quotient-a4";
      break;
    case Kind::FrobeniusP2Q_PltQ:
      os << "quotient-frobenius-p2q-pltq:" << p << "," << q;
      break;
    case Kind::FrobeniusP2Q_PgtQ:
      os << "quotient-frobenius-p2q-pgtq:" << p << "," << q;
      break;
    case Kind::P3QuotientAbelian:
      os << "quotient-p3-abelian:" << p;
      break;
    case Kind::P3QuotientNonabelian:
      os << "quotient-p3-nonabelian:" << p << ",k=" << k;
      break;
  }
  os << ",x=" << x.str();
  return os.str();
}

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Returns p if n = p^3 for a prime p, else 0.
long cube_root_prime(long n) {
  for (long p = 2; p * p * p <= n; ++p)
    if (p * p * p == n) return is_prime(p) ? p : 0;
  return 0;
}

}  // namespace

QuotientCase QuotientCase::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw InvalidParams("quotient case must be <kind>:<params>, got '" + text + "'");
  const std::string kind = text.substr(0, colon);
  std::vector<long> args;
  std::istringstream is(text.substr(colon + 1));
  std::string piece;
  while (std::getline(is, piece, ',')) {
    try {
      args.push_back(std::stol(piece));
    } catch (const std::exception&) {
      throw InvalidParams("bad quotient-case parameter '" + piece + "'");
    }
  }
  auto expect = [&](std::size_t n) {
    if (args.size() != n)
      throw InvalidParams("quotient case '" + kind + "' takes " + std::to_string(n) +
                          " parameters");
  };
  QuotientCase c;
  if (kind == "qdihedral") {
    expect(2);
    c.kind = Kind::DihedralQuotient;
    c.m = args[0];
    c.x = args[1];
  } else if (kind == "qzpzp") {
    expect(2);
    c.kind = Kind::ElemAbelianQuotient;
    c.p = args[0];
    c.x = args[1];
  } else if (kind == "qfrobenius") {
    expect(3);
    c.kind = Kind::FrobeniusPQ;
    c.p = args[0];
    c.q = args[1];
    c.x = args[2];
  } else if (kind == "qa4") {
    expect(1);
    c.kind = Kind::FrobeniusP2Q_A4;
    c.x = args[0];
  } else if (kind == "qp2q") {
    expect(3);
    c.p = args[0];
    c.q = args[1];
    c.x = args[2];
    c.kind = c.p < c.q ? Kind::FrobeniusP2Q_PltQ : Kind::FrobeniusP2Q_PgtQ;
  } else if (kind == "qp3a") {
    expect(2);
    c.kind = Kind::P3QuotientAbelian;
    c.p = args[0];
    c.x = args[1];
  } else if (kind == "qp3na") {
    if (args.size() == 2) {
      c.p = args[0];
      c.x = args[1];
    } else {
      expect(3);
      c.p = args[0];
      c.k = args[1];
      c.x = args[2];
    }
    c.kind = Kind::P3QuotientNonabelian;
  } else {
    throw InvalidParams("unknown quotient case kind '" + kind + "'");
  }
  return c;
}

QuotientCase infer_quotient_case(const FiniteGroup& g) {
  FiniteGroup q = quotient_by_center(g);
  if (q.order() == 1) throw InvalidParams("G is abelian; no quotient case applies");
  const Int x = g.order() / q.order();
  StructureTag tag = recognize_structure(q);

  QuotientCase c;
  c.x = x;
  if (tag.kind == StructureTag::Kind::Dihedral && tag.n >= 3) {
    c.kind = QuotientCase::Kind::DihedralQuotient;
    c.m = tag.n;
    return c;
  }
  if (tag.kind == StructureTag::Kind::ElementaryAbelian && tag.rank == 2) {
    c.kind = QuotientCase::Kind::ElemAbelianQuotient;
    c.p = tag.p;
    return c;
  }
  if (long p = cube_root_prime(q.order()); p != 0) {
    bool abelian = tag.kind != StructureTag::Kind::Other &&
                   tag.kind != StructureTag::Kind::Dihedral;
    c.kind = abelian ? QuotientCase::Kind::P3QuotientAbelian
                     : QuotientCase::Kind::P3QuotientNonabelian;
    c.p = p;
    return c;
  }
  if (auto f = frobenius_decomposition(q)) {
    if (f->kernel_order == 4 && f->complement_order == 3) {
      c.kind = QuotientCase::Kind::FrobeniusP2Q_A4;
      return c;
    }
    if (is_prime(f->kernel_order) && is_prime(f->complement_order)) {
      c.kind = QuotientCase::Kind::FrobeniusPQ;
      c.p = f->complement_order;
      c.q = f->kernel_order;
      return c;
    }
    // Order p^2 q: the square factor may be the complement (Z_q x| Z_{p^2},
    // forcing p < q) or the kernel ((Z_p x Z_p) x| Z_q, forcing p > q once
    // the order-12 case is excluded above).
    auto square_root_prime = [](long n) -> long {
      for (long p = 2; p * p <= n; ++p)
        if (p * p == n) return p;
      return 0;
    };
    if (long p = square_root_prime(f->complement_order);
        p != 0 && is_prime(p) && is_prime(f->kernel_order) && p < f->kernel_order) {
      c.kind = QuotientCase::Kind::FrobeniusP2Q_PltQ;
      c.p = p;
      c.q = f->kernel_order;
      return c;
    }
    if (long p = square_root_prime(f->kernel_order);
        p != 0 && is_prime(p) && is_prime(f->complement_order) &&
        p > f->complement_order) {
      c.kind = QuotientCase::Kind::FrobeniusP2Q_PgtQ;
      c.p = p;
      c.q = f->complement_order;
      return c;
    }
  }
  throw InvalidParams("G/Z(G) (" + tag.to_string() + ", order " +
                      std::to_string(q.order()) + ") matches no covered quotient case");
}

std::vector<PredictedStructure> quotient_prediction(const QuotientCase& c) {
  const Int& x = c.x;
  if (x < 1) throw InvalidParams("x = |Z(G)| must be positive");
  std::vector<PredictedStructure> out;
  std::vector<std::string> failures;
  auto attempt = [&](const std::string& label, auto&& build) {
    try {
      out.push_back(finish_auto(label, build()));
    } catch (const DivisibilityError& e) {
      failures.push_back(e.what());
    }
  };

  switch (c.kind) {
    case QuotientCase::Kind::DihedralQuotient: {
      if (c.m < 3) throw InvalidParams("dihedral quotient requires m >= 3");
      const Int m = c.m;
      if (c.m % 2 == 0) {
        attempt(c.label() + "/m-even", [&] {
          return make_decomp({{1, exact_div(x * (m - 1), 2, "2 | x(m-1)")},
                              {2, exact_div(x, 2, "2 | x")}});
        });
      } else {
        attempt(c.label() + "/m-odd", [&] {
          return make_decomp({{1, exact_div(x * (m - 1), 2, "2 | x(m-1)")}, {1, x}});
        });
      }
      break;
    }
    case QuotientCase::Kind::ElemAbelianQuotient: {
      const Int p = c.p;
      attempt(c.label(), [&] {
        return make_decomp({{p + 1, exact_div(x * (p - 1), p, "p | x")}});
      });
      break;
    }
    case QuotientCase::Kind::FrobeniusPQ: {
      const Int p = c.p, q = c.q;
      attempt(c.label(), [&] {
        return make_decomp(
            {{1, exact_div(x * (q - 1), p, "p | x(q-1)")}, {1, x * (p - 1)}});
      });
      break;
    }
    case QuotientCase::Kind::FrobeniusP2Q_A4: {
      attempt(c.label() + "/Kx", [&] { return make_decomp({{1, 2 * x}, {1, x}}); });
      attempt(c.label() + "/Kx-half",
              [&] { return make_decomp({{1, 2 * x}, {1, exact_div(x, 2, "2 | x")}}); });
      break;
    }
    case QuotientCase::Kind::FrobeniusP2Q_PltQ: {
      const Int p = c.p, q = c.q;
      if (c.p >= c.q) throw InvalidParams("case requires p < q");
      if (c.p * c.p * c.q == 12) throw InvalidParams("case excludes |G/Z| = 12");
      attempt(c.label(), [&] {
        return make_decomp({{1, exact_div(x * (q - 1), p * p, "p^2 | x(q-1)")},
                            {1, x * (p * p - 1)}});
      });
      break;
    }
    case QuotientCase::Kind::FrobeniusP2Q_PgtQ: {
      const Int p = c.p, q = c.q;
      if (c.p <= c.q) throw InvalidParams("case requires p > q");
      attempt(c.label() + "/single", [&] {
        return make_decomp({{1, x * (q - 1)},
                            {1, exact_div(x * (p * p - 1), q, "q | x(p^2-1)")}});
      });
      attempt(c.label() + "/split", [&] {
        return make_decomp({{1, x * (q - 1)},
                            {p + 1, exact_div(x * (p - 1), p * q, "pq | x(p-1)")}});
      });
      break;
    }
    case QuotientCase::Kind::P3QuotientAbelian: {
      const Int p = c.p;
      attempt(c.label() + "/Km", [&] {
        return make_decomp({{1, exact_div(x * (p * p - 1), p, "p | x")},
                            {p * p, exact_div(x * (p - 1), p * p, "p^2 | x")}});
      });
      attempt(c.label() + "/uniform", [&] {
        return make_decomp(
            {{p * p + p + 1, exact_div(x * (p - 1), p * p, "p^2 | x")}});
      });
      break;
    }
    case QuotientCase::Kind::P3QuotientNonabelian: {
      const Int p = c.p;
      std::vector<long> ks;
      if (c.k > 0)
        ks.push_back(c.k);
      else
        for (long kk = 1; kk <= c.p; ++kk) ks.push_back(kk);
      auto m_part = [&] { return exact_div(x * (p * p - 1), p, "p | x"); };
      auto n1 = [&] { return exact_div(x * (p - 1), p * p, "p^2 | x"); };
      auto n2 = [&] { return exact_div(x * (p - 1), p, "p | x"); };
      for (long kk : ks) {
        attempt(c.label() + "/Km-split,k=" + std::to_string(kk), [&] {
          return make_decomp({{1, m_part()}, {kk * p, n1()}, {p - kk, n2()}});
        });
        attempt(c.label() + "/two-tier,k=" + std::to_string(kk), [&] {
          return make_decomp({{kk * p + 1, n1()}, {p + 1 - kk, n2()}});
        });
      }
      attempt(c.label() + "/Km-coarse",
              [&] { return make_decomp({{1, m_part()}, {p, n2()}}); });
      attempt(c.label() + "/uniform",
              [&] { return make_decomp({{p * p + p + 1, n1()}}); });
      attempt(c.label() + "/fine-coarse",
              [&] { return make_decomp({{1, n1()}, {p + 1, n2()}}); });
      break;
    }
  }

  if (out.empty()) {
    std::string msg = "no candidate admissible for " + c.label();
    for (const auto& f : failures) msg += "; " + f;
    throw DivisibilityError(msg);
  }
  // Drop duplicate shapes (different k can collide).
  std::vector<PredictedStructure> unique;
  for (auto& s : out) {
    bool dup = std::any_of(unique.begin(), unique.end(), [&](const PredictedStructure& u) {
      return u.decomposition == s.decomposition;
    });
    if (!dup) unique.push_back(std::move(s));
  }
  return unique;
}

std::pair<Int, Int> p3_corollary_printed(long p) {
  Int P(p);
  Int m1 = P * P * P * P - 4 * P * P * P + 3 * P * P + 4 * P - 4;
  // Transcribed verbatim, including the two cubic terms.
  Int m2 = P * P * P * P * P - 6 * P * P * P * P + 2 * P * P * P + 9 * P * P * P -
           2 * P * P - 12 * P + 8;
  return {m1, m2};
}

std::pair<Int, Int> p3_corollary_derived(long p) {
  CliqueDecomposition d = CliqueDecomposition::from_sizes(
      std::vector<long long>(static_cast<std::size_t>(p + 1), p - 1));
  return zagreb_from_decomposition(d);
}

std::vector<std::string> p3_corollary_discrepancy(long p) {
  auto [pm1, pm2] = p3_corollary_printed(p);
  auto [dm1, dm2] = p3_corollary_derived(p);
  std::vector<std::string> notes;
  if (pm1 != dm1)
    notes.push_back("order-p^3 corollary M1 polynomial gives " + pm1.str() +
                    " but decomposition (p+1)K_{p-1} gives " + dm1.str() + " at p=" +
                    std::to_string(p));
  if (pm2 != dm2)
    notes.push_back("order-p^3 corollary M2 polynomial gives " + pm2.str() +
                    " but decomposition (p+1)K_{p-1} gives " + dm2.str() + " at p=" +
                    std::to_string(p));
  return notes;
}

nlohmann::json VerificationRecord::to_json() const {
  nlohmann::json j;
  j["group"] = group_name;
  j["brute_decomposition"] =
      brute_is_clique_union ? brute_decomposition.to_string() : "not-a-clique-union";
  j["predicted"] = predicted.decomposition.to_string();
  j["case_label"] = predicted.case_label;
  j["structure_match"] = structure_match;
  j["m1_match"] = m1_match;
  j["m2_match"] = m2_match;
  j["equality_as_predicted"] = equality_as_predicted;
  j["report"] = report.to_json();
  j["closed_m1"] = predicted.closed_m1.str();
  j["closed_m2"] = predicted.closed_m2.str();
  j["discrepancy_notes"] = discrepancy_notes;
  return j;
}

VerificationRecord verify_group(const FiniteGroup& g,
                                const std::vector<PredictedStructure>& predicted) {
  if (predicted.empty()) throw std::invalid_argument("empty candidate list");
  VerificationRecord rec;
  rec.group_name = g.name();

  SimpleGraph graph = ccc_graph(g);
  rec.report = zagreb_report(graph);
  auto brute = detect_clique_union(graph);
  rec.brute_is_clique_union = brute.has_value();
  if (brute) rec.brute_decomposition = *brute;

  rec.predicted = predicted.front();
  if (brute) {
    for (const auto& cand : predicted) {
      if (cand.decomposition == *brute) {
        rec.predicted = cand;
        rec.structure_match = true;
        break;
      }
    }
  }
  if (!rec.structure_match) {
    rec.discrepancy_notes.push_back(
        "brute-force CCC is " +
        (brute ? brute->to_string() : std::string("not a clique union")) +
        "; no predicted candidate matches (first candidate: " +
        rec.predicted.decomposition.to_string() + ")");
  }

  rec.m1_match = rec.predicted.closed_m1 == rec.report.m1;
  rec.m2_match = rec.predicted.closed_m2 == rec.report.m2;
  if (!rec.m1_match)
    rec.discrepancy_notes.push_back("M1: closed " + rec.predicted.closed_m1.str() +
                                    " vs brute " + rec.report.m1.str());
  if (!rec.m2_match)
    rec.discrepancy_notes.push_back("M2: closed " + rec.predicted.closed_m2.str() +
                                    " vs brute " + rec.report.m2.str());

  rec.equality_as_predicted =
      verdict_is_equality(rec.report.verdict) == rec.predicted.expected_equality;
  if (!rec.equality_as_predicted)
    rec.discrepancy_notes.push_back(
        "verdict " + verdict_name(rec.report.verdict) + " but equality expected to be " +
        (rec.predicted.expected_equality ? "true" : "false"));
  return rec;
}

VerificationRecord verify_family(const FamilySpec& spec) {
  FiniteGroup g = build_family(spec);
  PredictedStructure pred = predicted_decomposition(spec);
  VerificationRecord rec = verify_group(g, {pred});

  // Three-way agreement: the published polynomial route must match too.
  auto [f1, f2] = closed_form_indices(spec);
  if (f1 != pred.closed_m1 || f2 != pred.closed_m2) {
    rec.m1_match = rec.m1_match && f1 == pred.closed_m1;
    rec.m2_match = rec.m2_match && f2 == pred.closed_m2;
    rec.discrepancy_notes.push_back("published formula gives (" + f1.str() + ", " +
                                    f2.str() + ") but decomposition gives (" +
                                    pred.closed_m1.str() + ", " + pred.closed_m2.str() +
                                    ")");
  }
  return rec;
}

}  // namespace ccc
