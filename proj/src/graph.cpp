#include "ccc/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace ccc {

SimpleGraph::SimpleGraph(std::vector<std::string> labels)
    : labels_(std::move(labels)),
      adj_(labels_.size(), std::vector<char>(labels_.size(), 0)) {}

long long SimpleGraph::num_edges() const {
  long long e = 0;
  for (int u = 0; u < num_vertices(); ++u)
    for (int v = u + 1; v < num_vertices(); ++v)
      if (adj_[u][v]) ++e;
  return e;
}

void SimpleGraph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("no self-loops in a simple graph");
  adj_[u][v] = adj_[v][u] = 1;
}

int SimpleGraph::degree(int v) const {
  int d = 0;
  for (int u = 0; u < num_vertices(); ++u)
    if (adj_[v][u]) ++d;
  return d;
}

nlohmann::json SimpleGraph::to_json() const {
  nlohmann::json j;
  j["labels"] = labels_;
  auto edges = nlohmann::json::array();
  for (int u = 0; u < num_vertices(); ++u)
    for (int v = u + 1; v < num_vertices(); ++v)
      if (adj_[u][v]) edges.push_back({u, v});
  j["edges"] = edges;
  return j;
}

Int CliqueDecomposition::total_vertices() const {
  Int t = 0;
  for (auto [l, m] : parts) t += Int(l) * m;
  return t;
}

Int CliqueDecomposition::total_edges() const {
  Int t = 0;
  for (auto [l, m] : parts) t += Int(l) * m * (m - 1) / 2;
  return t;
}

std::string CliqueDecomposition::to_string() const {
  if (parts.empty()) return "empty";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << " + ";
    if (parts[i].first != 1) os << parts[i].first;
    os << "K" << parts[i].second;
  }
  return os.str();
}

CliqueDecomposition CliqueDecomposition::from_sizes(std::vector<long long> sizes) {
  std::map<long long, long long> count;
  for (long long m : sizes) {
    if (m < 1) throw std::invalid_argument("clique size must be positive");
    ++count[m];
  }
  CliqueDecomposition d;
  for (auto it = count.rbegin(); it != count.rend(); ++it)
    d.parts.emplace_back(it->second, it->first);
  return d;
}

CliqueDecomposition CliqueDecomposition::parse(const std::string& text) {
  std::vector<long long> sizes;
  std::istringstream is(text);
  std::string term;
  while (std::getline(is, term, '+')) {
    term.erase(std::remove_if(term.begin(), term.end(), ::isspace), term.end());
    long long mult = 1;
    if (auto star = term.find('*'); star != std::string::npos) {
      try {
        mult = std::stoll(term.substr(0, star));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad multiplicity in '" + term + "'");
      }
      term = term.substr(star + 1);
    }
    if (term.rfind("K:", 0) != 0)
      throw std::invalid_argument("decomposition term must be K:<n>, got '" + term + "'");
    long long m = 0;
    try {
      m = std::stoll(term.substr(2));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad clique size in '" + term + "'");
    }
    if (mult < 1 || m < 1) throw std::invalid_argument("sizes must be positive");
    for (long long i = 0; i < mult; ++i) sizes.push_back(m);
  }
  if (sizes.empty()) throw std::invalid_argument("empty decomposition");
  return from_sizes(std::move(sizes));
}

SimpleGraph ccc_graph(const FiniteGroup& g) { return ccc_graph(g, conjugacy_data(g)); }

SimpleGraph ccc_graph(const FiniteGroup& g, const ClassData& data) {
  std::vector<int> vertex_class;  // class indices of non-central classes
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < data.classes.size(); ++i) {
    if (data.classes[i].size() == 1) continue;
    vertex_class.push_back(static_cast<int>(i));
    labels.push_back("g" + std::to_string(data.classes[i].representative));
  }
  SimpleGraph graph(std::move(labels));
  for (std::size_t u = 0; u < vertex_class.size(); ++u) {
    const int x = data.classes[vertex_class[u]].representative;
    for (std::size_t v = u + 1; v < vertex_class.size(); ++v) {
      for (int y : data.classes[vertex_class[v]].members) {
        if (g.commutes(x, y)) {
          graph.add_edge(static_cast<int>(u), static_cast<int>(v));
          break;
        }
      }
    }
  }
  return graph;
}

std::optional<CliqueDecomposition> detect_clique_union(const SimpleGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> comp(n, -1);
  std::vector<long long> sizes;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int c = static_cast<int>(sizes.size());
    std::deque<int> q{s};
    comp[s] = c;
    std::vector<int> members{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v = 0; v < n; ++v) {
        if (g.adjacent(u, v) && comp[v] < 0) {
          comp[v] = c;
          members.push_back(v);
          q.push_back(v);
        }
      }
    }
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (!g.adjacent(members[i], members[j])) return std::nullopt;
    sizes.push_back(static_cast<long long>(members.size()));
  }
  return CliqueDecomposition::from_sizes(std::move(sizes));
}

SimpleGraph graph_from_decomposition(const CliqueDecomposition& d) {
  Int total = d.total_vertices();
  if (total > 100'000) throw std::invalid_argument("decomposition too large to materialize");
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> ranges;
  int next = 0;
  for (auto [l, m] : d.parts) {
    for (long long copy = 0; copy < l; ++copy) {
      ranges.emplace_back(next, next + static_cast<int>(m));
      for (long long i = 0; i < m; ++i) labels.push_back("v" + std::to_string(next++));
    }
  }
  SimpleGraph g(std::move(labels));
  for (auto [lo, hi] : ranges)
    for (int u = lo; u < hi; ++u)
      for (int v = u + 1; v < hi; ++v) g.add_edge(u, v);
  return g;
}

std::string export_dot(const SimpleGraph& g) {
  std::ostringstream os;
  os << "graph ccc {\n";
  for (int v = 0; v < g.num_vertices(); ++v)
    os << "  n" << v << " [label=\"" << g.labels()[v] << "\"];\n";
  for (int u = 0; u < g.num_vertices(); ++u)
    for (int v = u + 1; v < g.num_vertices(); ++v)
      if (g.adjacent(u, v)) os << "  n" << u << " -- n" << v << ";\n";
  os << "}\n";
  return os.str();
}

SimpleGraph parse_graph_expr(const std::string& text) {
  struct Term {
    bool star;
    long long size;
    long long mult;
  };
  std::vector<Term> terms;
  long long total = 0;
  std::istringstream is(text);
  std::string raw;
  while (std::getline(is, raw, '+')) {
    raw.erase(std::remove_if(raw.begin(), raw.end(), ::isspace), raw.end());
    long long mult = 1;
    if (auto star = raw.find('*'); star != std::string::npos) {
      try {
        mult = std::stoll(raw.substr(0, star));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad multiplicity in '" + raw + "'");
      }
      raw = raw.substr(star + 1);
    }
    bool is_star;
    long long size;
    try {
      if (raw.rfind("K:", 0) == 0) {
        is_star = false;
        size = std::stoll(raw.substr(2));
      } else if (raw.rfind("star:", 0) == 0) {
        is_star = true;
        size = std::stoll(raw.substr(5));
      } else {
        throw std::invalid_argument("");
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("graph term must be K:<n> or star:<n>, got '" + raw + "'");
    }
    if (mult < 1 || size < 1) throw std::invalid_argument("sizes must be positive");
    terms.push_back({is_star, size, mult});
    total += mult * (is_star ? size + 1 : size);
    if (total > 100'000) throw std::invalid_argument("graph too large to materialize");
  }
  if (terms.empty()) throw std::invalid_argument("empty graph expression");
  if (!text.empty() && text.find_last_not_of(" \t") != std::string::npos &&
      text[text.find_last_not_of(" \t")] == '+')
    throw std::invalid_argument("trailing '+' in graph expression");

  std::vector<std::string> labels(static_cast<std::size_t>(total));
  for (long long v = 0; v < total; ++v) labels[v] = "v" + std::to_string(v);
  SimpleGraph g(std::move(labels));
  int next = 0;
  for (const Term& t : terms) {
    for (long long copy = 0; copy < t.mult; ++copy) {
      if (t.star) {
        int hub = next++;
        for (long long i = 0; i < t.size; ++i) g.add_edge(hub, next++);
      } else {
        int lo = next;
        next += static_cast<int>(t.size);
        for (int u = lo; u < next; ++u)
          for (int v = u + 1; v < next; ++v) g.add_edge(u, v);
      }
    }
  }
  return g;
}

}  // namespace ccc
