#include "ccc/families.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <sstream>

namespace ccc {

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long pow_long(long b, long e) {
  long r = 1;
  for (long i = 0; i < e; ++i) {
    if (r > (1L << 40) / std::max(b, 2L)) throw InvalidParams("parameter overflow");
    r *= b;
  }
  return r;
}

long mod(long a, long m) { return ((a % m) + m) % m; }

// Multiplicative order of h mod q.
long mult_order(long h, long q) {
  long x = h % q;
  long o = 1;
  while (x != 1) {
    x = (x * h) % q;
    ++o;
  }
  return o;
}

// Smallest h with multiplicative order exactly d mod prime q.
long multiplier_of_order(long d, long q) {
  for (long h = 2; h < q; ++h)
    if (mult_order(h, q) == d) return h;
  throw InvalidParams("no multiplier of order " + std::to_string(d) + " mod " +
                      std::to_string(q));
}

FiniteGroup group_from_law(const std::string& name, int n,
                           const std::function<int(int, int)>& law,
                           std::vector<int> gens) {
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mul[static_cast<std::size_t>(i) * n + j] = law(i, j);
  return FiniteGroup(name, n, std::move(mul), std::move(gens));
}

}  // namespace

void FamilySpec::validate() const {
  switch (family) {
    case Family::Dihedral:
      if (m < 3) throw InvalidParams("dihedral requires m >= 3");
      return;
    case Family::Dicyclic:
      if (m < 2) throw InvalidParams("dicyclic requires m >= 2");
      return;
    case Family::Semidihedral:
      if (m < 2) throw InvalidParams("semidihedral requires m >= 2");
      return;
    case Family::V8m:
      if (m < 1) throw InvalidParams("v8m requires m >= 1");
      return;
    case Family::Unm:
      if (m < 3 || n < 2) throw InvalidParams("unm requires m >= 3, n >= 2");
      return;
    case Family::Gpmn:
      if (!is_prime(p)) throw InvalidParams("gpmn requires prime p");
      if (m < 1 || n < 1) throw InvalidParams("gpmn requires m, n >= 1");
      return;
  }
  throw InvalidParams("unknown family");
}

long FamilySpec::group_order() const {
  validate();
  switch (family) {
    case Family::Dihedral:
      return 2 * m;
    case Family::Dicyclic:
      return 4 * m;
    case Family::Semidihedral:
    case Family::V8m:
      return 8 * m;
    case Family::Unm:
      return 2 * n * m;
    case Family::Gpmn:
      return pow_long(p, m + n + 1);
  }
  throw InvalidParams("unknown family");
}

std::string FamilySpec::label() const {
  std::ostringstream os;
  switch (family) {
    case Family::Dihedral:
      os << "dihedral:" << m;
      break;
    case Family::Dicyclic:
      os << "dicyclic:" << m;
      break;
    case Family::Semidihedral:
      os << "semidihedral:" << m;
      break;
    case Family::V8m:
      os << "v8m:" << m;
      break;
    case Family::Unm:
      os << "unm:" << n << "," << m;
      break;
    case Family::Gpmn:
      os << "gpmn:" << p << "," << m << "," << n;
      break;
  }
  return os.str();
}

FamilySpec FamilySpec::parse(const std::string& text) {
  auto colon = text.find(':');
  std::string name = text.substr(0, colon);
  std::vector<long> args;
  if (colon != std::string::npos) {
    std::istringstream is(text.substr(colon + 1));
    std::string tok;
    while (std::getline(is, tok, ',')) {
      try {
        args.push_back(std::stol(tok));
      } catch (const std::exception&) {
        throw InvalidParams("bad family parameter '" + tok + "'");
      }
    }
  }
  auto want = [&](std::size_t k) {
    if (args.size() != k)
      throw InvalidParams("family '" + name + "' takes " + std::to_string(k) +
                          " parameter(s)");
  };
  if (name == "dihedral") {
    want(1);
    return dihedral(args[0]);
  }
  if (name == "dicyclic") {
    want(1);
    return dicyclic(args[0]);
  }
  if (name == "semidihedral") {
    want(1);
    return semidihedral(args[0]);
  }
  if (name == "v8m") {
    want(1);
    return v8m(args[0]);
  }
  if (name == "unm") {
    want(2);
    return unm(args[0], args[1]);
  }
  if (name == "gpmn") {
    want(3);
    return gpmn(args[0], args[1], args[2]);
  }
  throw InvalidParams("unknown family '" + name + "'");
}

namespace {

// Dihedral of order 2m: a^i b^j with b a = a^-1 b.
FiniteGroup build_dihedral(long m) {
  const int n = static_cast<int>(2 * m);
  auto id = [m](long i, long j) { return static_cast<int>(j * m + i); };
  auto law = [m, id](int x, int y) {
    long i1 = x % m, j1 = x / m, i2 = y % m, j2 = y / m;
    long i = mod(i1 + (j1 ? -i2 : i2), m);
    return id(i, (j1 + j2) % 2);
  };
  return group_from_law("D" + std::to_string(n), n, law, {id(1, 0), id(0, 1)});
}

// Dicyclic of order 4m: a of order 2m, b^2 = a^m, b a = a^-1 b.
FiniteGroup build_dicyclic(long m) {
  const int n = static_cast<int>(4 * m);
  const long am = 2 * m;
  auto id = [am](long i, long j) { return static_cast<int>(j * am + i); };
  auto law = [m, am, id](int x, int y) {
    long i1 = x % am, j1 = x / am, i2 = y % am, j2 = y / am;
    long i = mod(i1 + (j1 ? -i2 : i2), am);
    long j = j1 + j2;
    if (j >= 2) {
      j -= 2;
      i = mod(i + m, am);  // b^2 = a^m
    }
    return id(i, j);
  };
  return group_from_law("Q" + std::to_string(n), n, law, {id(1, 0), id(0, 1)});
}

// Semidihedral of order 8m: a of order 4m, b a = a^{2m-1} b.
FiniteGroup build_semidihedral(long m) {
  const int n = static_cast<int>(8 * m);
  const long am = 4 * m;
  const long s = 2 * m - 1;
  auto id = [am](long i, long j) { return static_cast<int>(j * am + i); };
  auto law = [am, s, id](int x, int y) {
    long i1 = x % am, j1 = x / am, i2 = y % am, j2 = y / am;
    long i = mod(i1 + (j1 ? s * i2 : i2), am);
    return id(i, (j1 + j2) % 2);
  };
  return group_from_law("SD" + std::to_string(n), n, law, {id(1, 0), id(0, 1)});
}

// U(n,m) of order 2nm: b^i a^j with a b = b^-1 a.
FiniteGroup build_unm(long nn, long m) {
  const int n = static_cast<int>(2 * nn * m);
  const long an = 2 * nn;
  auto id = [an](long i, long j) { return static_cast<int>(i * an + j); };
  auto law = [m, an, id](int x, int y) {
    long i1 = x / an, j1 = x % an, i2 = y / an, j2 = y % an;
    long i = mod(i1 + (j1 % 2 ? -i2 : i2), m);
    return id(i, (j1 + j2) % an);
  };
  return group_from_law("U(" + std::to_string(nn) + "," + std::to_string(m) + ")", n,
                        law, {id(0, 1), id(1, 0)});
}

// G(p,m,n) of order p^{m+n+1}: a^i b^j c^k with c = [a,b] central of order p.
FiniteGroup build_gpmn(long p, long mm, long nn) {
  const long pm = pow_long(p, mm), pn = pow_long(p, nn);
  const long total = pm * pn * p;
  if (total > 1'000'000) throw InvalidParams("gpmn order too large");
  const int n = static_cast<int>(total);
  auto id = [pn, p](long i, long j, long k) {
    return static_cast<int>((i * pn + j) * p + k);
  };
  auto law = [pm, pn, p, id](int x, int y) {
    long k1 = x % p, j1 = (x / p) % pn, i1 = x / (p * pn);
    long k2 = y % p, j2 = (y / p) % pn, i2 = y / (p * pn);
    return id(mod(i1 + i2, pm), mod(j1 + j2, pn), mod(k1 + k2 - j1 * i2, p));
  };
  std::ostringstream name;
  name << "G(" << p << "," << mm << "," << nn << ")";
  return group_from_law(name.str(), n, law, {id(1, 0, 0), id(0, 1, 0)});
}

}  // namespace

Presentation family_presentation(const FamilySpec& spec) {
  spec.validate();
  Presentation pr;
  pr.generators = {"a", "b"};
  const Word a{{0, false}};
  const Word b{{1, false}};
  auto cat = [](std::initializer_list<Word> ws) {
    Word r;
    for (const Word& w : ws) r.insert(r.end(), w.begin(), w.end());
    return r;
  };
  switch (spec.family) {
    case FamilySpec::Family::Dihedral:
      pr.add_relator(power(a, spec.m));
      pr.add_relator(power(b, 2));
      pr.add_relator(cat({b, a, inverse_word(b), a}));  // bab^-1 = a^-1
      break;
    case FamilySpec::Family::Dicyclic:
      pr.add_relator(power(a, 2 * spec.m));
      pr.add_relator(cat({power(b, 2), power(a, -spec.m)}));  // b^2 = a^m
      pr.add_relator(cat({b, a, inverse_word(b), a}));
      break;
    case FamilySpec::Family::Semidihedral:
      pr.add_relator(power(a, 4 * spec.m));
      pr.add_relator(power(b, 2));
      pr.add_relator(cat({b, a, b, power(a, -(2 * spec.m - 1))}));  // bab = a^{2m-1}
      break;
    case FamilySpec::Family::V8m:
      pr.add_relator(power(a, 2 * spec.m));
      pr.add_relator(power(b, 4));
      // aba = b^-1 and ab^-1a = b, moved to one side. The first relation is
      // sometimes quoted with its sides swapped, which collapses the group
      // to order <= 8; this orientation is the one that enumerates to 8m.
      pr.add_relator(cat({a, b, a, b}));
      pr.add_relator(cat({a, inverse_word(b), a, inverse_word(b)}));
      break;
    case FamilySpec::Family::Unm:
      pr.add_relator(power(a, 2 * spec.n));
      pr.add_relator(power(b, spec.m));
      pr.add_relator(cat({inverse_word(a), b, a, b}));  // a^-1 b a = b^-1
      break;
    case FamilySpec::Family::Gpmn: {
      Word c = commutator(a, b);  // [a,b] = a^-1 b^-1 a b
      pr.add_relator(power(a, pow_long(spec.p, spec.m)));
      pr.add_relator(power(b, pow_long(spec.p, spec.n)));
      pr.add_relator(power(c, spec.p));
      pr.add_relator(commutator(a, c));
      pr.add_relator(commutator(b, c));
      break;
    }
  }
  return pr;
}

FiniteGroup build_family(const FamilySpec& spec) {
  spec.validate();
  FiniteGroup g = [&] {
    switch (spec.family) {
      case FamilySpec::Family::Dihedral:
        return build_dihedral(spec.m);
      case FamilySpec::Family::Dicyclic:
        return build_dicyclic(spec.m);
      case FamilySpec::Family::Semidihedral:
        return build_semidihedral(spec.m);
      case FamilySpec::Family::V8m:
        // No hand-written normal form: the relators are unusual, the
        // presentation engine is the safer source of truth.
        return coset_enumerate(family_presentation(spec));
      case FamilySpec::Family::Unm:
        return build_unm(spec.n, spec.m);
      case FamilySpec::Family::Gpmn:
        return build_gpmn(spec.p, spec.m, spec.n);
    }
    throw InvalidParams("unknown family");
  }();
  if (g.order() != spec.group_order())
    throw std::logic_error(spec.label() + ": built order " + std::to_string(g.order()) +
                           " != expected " + std::to_string(spec.group_order()));
  return g;
}

std::string AuxSpec::label() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Heisenberg:
      os << "heisenberg:" << p;
      break;
    case Kind::ExtraspecialP2:
      os << "extraspecial:" << p;
      break;
    case Kind::FrobeniusPQ:
      os << "frobenius:" << q << "," << p;
      break;
    case Kind::F20Style:
      os << "f20:" << q << "," << c;
      break;
    case Kind::GeneralizedDihedral:
      os << "gendihedral:" << p;
      break;
    case Kind::AltFour:
      os << "a4";
      break;
    case Kind::Cyclic:
      os << "cyclic:" << c;
      break;
    case Kind::Modular16:
      os << "modular16";
      break;
    case Kind::DirectProductWithCyclic:
      os << "productc:" << base.label() << ":" << c;
      break;
  }
  return os.str();
}

AuxSpec AuxSpec::parse(const std::string& text) {
  auto colon = text.find(':');
  std::string name = text.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
  auto nums = [&rest]() {
    std::vector<long> args;
    std::istringstream is(rest);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      try {
        args.push_back(std::stol(tok));
      } catch (const std::exception&) {
        throw InvalidParams("bad aux parameter '" + tok + "'");
      }
    }
    return args;
  };
  if (name == "heisenberg") {
    auto a = nums();
    if (a.size() != 1) throw InvalidParams("heisenberg:p");
    return {Kind::Heisenberg, a[0]};
  }
  if (name == "extraspecial") {
    auto a = nums();
    if (a.size() != 1) throw InvalidParams("extraspecial:p");
    return {Kind::ExtraspecialP2, a[0]};
  }
  if (name == "frobenius") {
    auto a = nums();
    if (a.size() != 2) throw InvalidParams("frobenius:q,p");
    AuxSpec s{Kind::FrobeniusPQ, a[1], a[0]};
    return s;
  }
  if (name == "f20") {
    auto a = nums();
    if (a.size() != 2) throw InvalidParams("f20:q,c");
    AuxSpec s{Kind::F20Style};
    s.q = a[0];
    s.c = a[1];
    return s;
  }
  if (name == "gendihedral") {
    auto a = nums();
    if (a.size() != 1) throw InvalidParams("gendihedral:p");
    return {Kind::GeneralizedDihedral, a[0]};
  }
  if (name == "a4") return {Kind::AltFour};
  if (name == "modular16") return {Kind::Modular16};
  if (name == "cyclic") {
    auto a = nums();
    if (a.size() != 1) throw InvalidParams("cyclic:n");
    AuxSpec s{Kind::Cyclic};
    s.c = a[0];
    return s;
  }
  if (name == "productc") {
    // productc:<family>:<params>:<c>
    auto last = rest.rfind(':');
    if (last == std::string::npos) throw InvalidParams("productc:<family>:<params>:<c>");
    AuxSpec s{Kind::DirectProductWithCyclic};
    s.base = FamilySpec::parse(rest.substr(0, last));
    try {
      s.c = std::stol(rest.substr(last + 1));
    } catch (const std::exception&) {
      throw InvalidParams("bad cyclic factor in '" + text + "'");
    }
    return s;
  }
  throw InvalidParams("unknown aux group '" + name + "'");
}

namespace {

FiniteGroup build_cyclic(long n) {
  if (n < 1) throw InvalidParams("cyclic order must be >= 1");
  auto law = [n](int x, int y) { return static_cast<int>((x + y) % n); };
  return group_from_law("Z" + std::to_string(n), static_cast<int>(n), law,
                        n > 1 ? std::vector<int>{1} : std::vector<int>{});
}

FiniteGroup build_heisenberg(long p) {
  if (!is_prime(p)) throw InvalidParams("heisenberg requires prime p");
  const long total = p * p * p;
  const int n = static_cast<int>(total);
  // (a,b,c) ~ unitriangular [[1,a,c],[0,1,b],[0,0,1]] mod p.
  auto id = [p](long a, long b, long c) { return static_cast<int>((a * p + b) * p + c); };
  auto law = [p, id](int x, int y) {
    long c1 = x % p, b1 = (x / p) % p, a1 = x / (p * p);
    long c2 = y % p, b2 = (y / p) % p, a2 = y / (p * p);
    return id(mod(a1 + a2, p), mod(b1 + b2, p), mod(c1 + c2 + a1 * b2, p));
  };
  return group_from_law("Heis(" + std::to_string(p) + ")", n, law,
                        {id(1, 0, 0), id(0, 1, 0)});
}

FiniteGroup build_extraspecial_p2(long p) {
  if (!is_prime(p)) throw InvalidParams("extraspecial requires prime p");
  const long p2 = p * p;
  const int n = static_cast<int>(p2 * p);
  // a of order p^2, b a b^-1 = a^{1+p}.
  auto id = [p](long i, long j) { return static_cast<int>(i * p + j); };
  auto law = [p, p2, id](int x, int y) {
    long i1 = x / p, j1 = x % p;
    long i2 = y / p, j2 = y % p;
    long mult = 1;
    for (long t = 0; t < j1; ++t) mult = (mult * (1 + p)) % p2;
    return id(mod(i1 + i2 * mult, p2), mod(j1 + j2, p));
  };
  return group_from_law("ES(" + std::to_string(p2) + "x|" + std::to_string(p) + ")", n,
                        law, {id(1, 0), id(0, 1)});
}

// Z_q x| (cyclic complement of order c), multiplier h = smallest element of
// multiplicative order c mod q. Frobenius whenever c > 1.
FiniteGroup build_metacyclic_frobenius(long q, long c, const std::string& name) {
  if (!is_prime(q)) throw InvalidParams("kernel order must be prime");
  if (c < 2 || (q - 1) % c != 0)
    throw InvalidParams("complement order must divide q-1");
  const long h = multiplier_of_order(c, q);
  const int n = static_cast<int>(q * c);
  auto id = [c](long i, long j) { return static_cast<int>(i * c + j); };
  auto law = [q, c, h, id](int x, int y) {
    long i1 = x / c, j1 = x % c;
    long i2 = y / c, j2 = y % c;
    long mult = 1;
    for (long t = 0; t < j1; ++t) mult = (mult * h) % q;
    return id(mod(i1 + mult * i2, q), mod(j1 + j2, c));
  };
  return group_from_law(name, n, law, {id(1, 0), id(0, 1)});
}

FiniteGroup build_generalized_dihedral(long p) {
  if (!is_prime(p)) throw InvalidParams("gendihedral requires prime p");
  const int n = static_cast<int>(2 * p * p);
  auto id = [p](long u, long v, long e) {
    return static_cast<int>((u * p + v) * 2 + e);
  };
  auto law = [p, id](int x, int y) {
    long e1 = x % 2, v1 = (x / 2) % p, u1 = x / (2 * p);
    long e2 = y % 2, v2 = (y / 2) % p, u2 = y / (2 * p);
    long s = e1 ? -1 : 1;
    return id(mod(u1 + s * u2, p), mod(v1 + s * v2, p), (e1 + e2) % 2);
  };
  std::ostringstream name;
  name << "(Z" << p << "xZ" << p << ")x|Z2";
  return group_from_law(name.str(), n, law, {id(1, 0, 0), id(0, 1, 0), id(0, 0, 1)});
}

FiniteGroup build_alt_four() {
  // Even permutations of 4 points, indexed in lexicographic order.
  std::vector<std::array<int, 4>> perms;
  std::array<int, 4> base{0, 1, 2, 3};
  std::array<int, 4> q = base;
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (q[i] > q[j]) ++inversions;
    if (inversions % 2 == 0) perms.push_back(q);
  } while (std::next_permutation(q.begin(), q.end()));

  const int n = static_cast<int>(perms.size());
  auto index_of = [&perms](const std::array<int, 4>& target) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), target) -
                            perms.begin());
  };
  auto law = [&](int x, int y) {
    std::array<int, 4> r;
    for (int i = 0; i < 4; ++i) r[i] = perms[x][perms[y][i]];
    return index_of(r);
  };
  std::vector<int> gens{index_of({1, 0, 3, 2}), index_of({1, 2, 0, 3})};
  return group_from_law("A4", n, law, gens);
}

}  // namespace

FiniteGroup build_aux(const AuxSpec& spec) {
  switch (spec.kind) {
    case AuxSpec::Kind::Heisenberg:
      return build_heisenberg(spec.p);
    case AuxSpec::Kind::ExtraspecialP2:
      return build_extraspecial_p2(spec.p);
    case AuxSpec::Kind::FrobeniusPQ: {
      if (!is_prime(spec.p)) throw InvalidParams("frobenius complement order must be prime");
      std::ostringstream name;
      name << "Z" << spec.q << "x|Z" << spec.p;
      return build_metacyclic_frobenius(spec.q, spec.p, name.str());
    }
    case AuxSpec::Kind::F20Style: {
      std::ostringstream name;
      name << "Z" << spec.q << "x|Z" << spec.c;
      return build_metacyclic_frobenius(spec.q, spec.c, name.str());
    }
    case AuxSpec::Kind::GeneralizedDihedral:
      return build_generalized_dihedral(spec.p);
    case AuxSpec::Kind::AltFour:
      return build_alt_four();
    case AuxSpec::Kind::Cyclic:
      return build_cyclic(spec.c);
    case AuxSpec::Kind::Modular16:
      return coset_enumerate(Presentation::parse("a, b | a^8, b^2, b a b^-1 a^-5"));
    case AuxSpec::Kind::DirectProductWithCyclic:
      return direct_product(build_family(spec.base), build_cyclic(spec.c));
  }
  throw InvalidParams("unknown aux kind");
}

}  // namespace ccc
