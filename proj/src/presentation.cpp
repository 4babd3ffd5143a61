#include "ccc/presentation.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>

namespace ccc {

Word inverse_word(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->gen, !it->inverse});
  return r;
}

Word commutator(const Word& a, const Word& b) {
  Word r = inverse_word(a);
  Word bi = inverse_word(b);
  r.insert(r.end(), bi.begin(), bi.end());
  r.insert(r.end(), a.begin(), a.end());
  r.insert(r.end(), b.begin(), b.end());
  free_reduce(r);
  return r;
}

Word power(const Word& w, long e) {
  Word base = e < 0 ? inverse_word(w) : w;
  long reps = e < 0 ? -e : e;
  Word r;
  for (long i = 0; i < reps; ++i) r.insert(r.end(), base.begin(), base.end());
  free_reduce(r);
  return r;
}

void free_reduce(Word& w) {
  Word out;
  for (const Letter& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().inverse != l.inverse)
      out.pop_back();
    else
      out.push_back(l);
  }
  w = std::move(out);
}

void Presentation::add_relator(Word w) {
  free_reduce(w);
  for (const Letter& l : w)
    if (l.gen < 0 || l.gen >= static_cast<int>(generators.size()))
      throw std::invalid_argument("relator uses unknown generator");
  relators.push_back(std::move(w));
}

int Presentation::generator_index(const std::string& name) const {
  auto it = std::find(generators.begin(), generators.end(), name);
  if (it == generators.end())
    throw std::invalid_argument("unknown generator '" + name + "'");
  return static_cast<int>(it - generators.begin());
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, sep)) out.push_back(trim(item));
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty() || (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_'))
    return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

}  // namespace

Presentation Presentation::parse(const std::string& text) {
  auto bar = text.find('|');
  if (bar == std::string::npos)
    throw std::invalid_argument("presentation must contain '|'");

  Presentation p;
  for (const std::string& name : split(text.substr(0, bar), ',')) {
    if (!valid_name(name))
      throw std::invalid_argument("invalid generator name '" + name + "'");
    if (std::find(p.generators.begin(), p.generators.end(), name) != p.generators.end())
      throw std::invalid_argument("duplicate generator '" + name + "'");
    p.generators.push_back(name);
  }
  if (p.generators.empty()) throw std::invalid_argument("no generators");

  for (const std::string& rel : split(text.substr(bar + 1), ',')) {
    if (rel.empty()) continue;
    Word w;
    std::istringstream is(rel);
    std::string tok;
    while (is >> tok) {
      std::string name = tok;
      long exp = 1;
      if (auto caret = tok.find('^'); caret != std::string::npos) {
        name = tok.substr(0, caret);
        std::string es = tok.substr(caret + 1);
        std::size_t pos = 0;
        try {
          exp = std::stol(es, &pos);
        } catch (const std::exception&) {
          pos = 0;
        }
        if (pos == 0 || pos != es.size())
          throw std::invalid_argument("bad exponent in '" + tok + "'");
      }
      int gi = p.generator_index(name);
      Word letter{{gi, false}};
      Word factor = power(letter, exp);
      w.insert(w.end(), factor.begin(), factor.end());
    }
    p.add_relator(std::move(w));
  }
  return p;
}

std::string Presentation::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < generators.size(); ++i)
    os << (i ? ", " : "") << generators[i];
  os << " | ";
  for (std::size_t r = 0; r < relators.size(); ++r) {
    if (r) os << ", ";
    for (std::size_t i = 0; i < relators[r].size(); ++i) {
      const Letter& l = relators[r][i];
      if (i) os << ' ';
      os << generators[l.gen];
      if (l.inverse) os << "^-1";
    }
  }
  return os.str();
}

namespace {

// Coset table with union-find coincidence handling. Edge index encodes a
// generator action: 2*gen for the generator, 2*gen+1 for its inverse.
class CosetTable {
 public:
  CosetTable(int ngens, int limit) : ngens_(ngens), limit_(limit) { new_coset(); }

  int edge(const Letter& l) const { return 2 * l.gen + (l.inverse ? 1 : 0); }

  int find(int c) {
    while (parent_[c] != c) {
      parent_[c] = parent_[parent_[c]];
      c = parent_[c];
    }
    return c;
  }

  int get(int c, int e) {
    int d = table_[c][e];
    return d < 0 ? -1 : find(d);
  }

  int new_coset() {
    if (static_cast<int>(table_.size()) >= limit_)
      throw LimitExceeded("coset table exceeded limit of " + std::to_string(limit_));
    table_.emplace_back(2 * ngens_, -1);
    parent_.push_back(static_cast<int>(parent_.size()));
    return static_cast<int>(table_.size()) - 1;
  }

  // Install x --e--> y, reconciling any prior entries via coincidences.
  void join(int x, int e, int y) {
    x = find(x);
    y = find(y);
    int ei = e ^ 1;
    int cur = get(x, e);
    if (cur >= 0) {
      coincide(cur, y);
      return;
    }
    table_[x][e] = y;
    int rev = get(y, ei);
    if (rev < 0)
      table_[y][ei] = x;
    else if (rev != x)
      coincide(rev, x);
  }

  void coincide(int a, int b) {
    std::deque<std::pair<int, int>> pending{{a, b}};
    while (!pending.empty()) {
      auto [x, y] = pending.front();
      pending.pop_front();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (y < x) std::swap(x, y);
      parent_[y] = x;
      for (int e = 0; e < 2 * ngens_; ++e) {
        int d = table_[y][e];
        if (d < 0) continue;
        int dd = find(d);
        int ei = e ^ 1;
        int slot = get(x, e);
        if (slot < 0) {
          table_[x][e] = dd;
          int rev = get(dd, ei);
          if (rev < 0)
            table_[dd][ei] = x;
          else if (rev != x)
            pending.emplace_back(rev, x);
        } else if (slot != dd) {
          pending.emplace_back(slot, dd);
        }
      }
    }
  }

  // Trace relator w from alpha, defining cosets to fill gaps (HLT).
  void scan_and_fill(int alpha, const Word& w) {
    if (w.empty()) return;
    int f = find(alpha);
    int b = f;
    int i = 0;
    int j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j) {
        int nxt = get(f, edge(w[i]));
        if (nxt < 0) break;
        f = nxt;
        ++i;
      }
      if (i > j) {
        if (f != b) coincide(f, b);
        return;
      }
      while (j >= i) {
        int prv = get(b, edge(w[j]) ^ 1);
        if (prv < 0) break;
        b = prv;
        --j;
      }
      if (j < i) {
        coincide(f, b);
        return;
      }
      if (i == j) {
        join(f, edge(w[i]), b);
        return;
      }
      int c = new_coset();
      join(f, edge(w[i]), c);
      f = find(f);
      b = find(b);
      int nf = get(f, edge(w[i]));
      if (nf < 0) return;  // join collapsed into an already-scanned state
      f = nf;
      ++i;
    }
  }

  int total_defined() const { return static_cast<int>(table_.size()); }
  bool alive(int c) { return find(c) == c; }

 private:
  int ngens_;
  int limit_;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
};

std::atomic<int> g_default_coset_limit{kDefaultCosetLimit};

}  // namespace

int default_coset_limit() { return g_default_coset_limit.load(); }

void set_default_coset_limit(int limit) {
  if (limit < 1) throw std::invalid_argument("coset_limit must be >= 1");
  g_default_coset_limit.store(limit);
}

FiniteGroup coset_enumerate(const Presentation& p) {
  return coset_enumerate(p, default_coset_limit());
}

FiniteGroup coset_enumerate(const Presentation& p, int coset_limit) {
  if (coset_limit < 1) throw std::invalid_argument("coset_limit must be >= 1");
  const int ngens = static_cast<int>(p.generators.size());
  CosetTable t(ngens, coset_limit);

  for (int alpha = 0; alpha < t.total_defined(); ++alpha) {
    if (!t.alive(alpha)) continue;
    for (const Word& r : p.relators) {
      t.scan_and_fill(alpha, r);
      if (!t.alive(alpha)) break;
    }
    if (!t.alive(alpha)) continue;
    for (int e = 0; e < 2 * ngens; ++e) {
      if (!t.alive(alpha)) break;
      if (t.get(t.find(alpha), e) < 0) {
        int c = t.new_coset();
        t.join(alpha, e, c);
      }
    }
  }

  // Compact live cosets; coset 0 survives every merge and is the identity.
  std::vector<int> live;
  std::vector<int> index(t.total_defined(), -1);
  for (int c = 0; c < t.total_defined(); ++c) {
    if (t.alive(c)) {
      index[c] = static_cast<int>(live.size());
      live.push_back(c);
    }
  }
  const int n = static_cast<int>(live.size());

  // Generator actions as permutations of live cosets.
  std::vector<std::vector<int>> act(2 * ngens, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int e = 0; e < 2 * ngens; ++e) {
      int d = t.get(live[i], e);
      if (d < 0) throw std::logic_error("coset table failed to close");
      act[e][i] = index[d];
    }

  // Representative words by BFS from the identity coset.
  std::vector<Word> rep(n);
  std::vector<char> seen(n, 0);
  std::deque<int> bfs{0};
  seen[0] = 1;
  while (!bfs.empty()) {
    int c = bfs.front();
    bfs.pop_front();
    for (int e = 0; e < 2 * ngens; ++e) {
      int d = act[e][c];
      if (!seen[d]) {
        seen[d] = 1;
        rep[d] = rep[c];
        rep[d].push_back({e / 2, (e & 1) != 0});
        bfs.push_back(d);
      }
    }
  }

  auto apply = [&](int c, const Word& w) {
    for (const Letter& l : w) c = act[2 * l.gen + (l.inverse ? 1 : 0)][c];
    return c;
  };

  // Every relator must act trivially; the table is not trusted blindly.
  for (const Word& r : p.relators)
    for (int c = 0; c < n; ++c)
      if (apply(c, r) != c) throw std::logic_error("relator fails on enumerated group");

  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mul[static_cast<std::size_t>(i) * n + j] = apply(i, rep[j]);

  std::vector<int> gens;
  std::map<int, std::string> labels;
  for (int g = 0; g < ngens; ++g) {
    int img = act[2 * g][0];
    gens.push_back(img);
    labels[img] = p.generators[g];
  }
  return FiniteGroup("<" + p.to_string() + ">", n, std::move(mul), std::move(gens),
                     std::move(labels));
}

}  // namespace ccc
