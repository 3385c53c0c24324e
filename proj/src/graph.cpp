#include "fextremal/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace fextremal {

long long EdgeTypeMatrix::at(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = counts.find({i, j});
  return it == counts.end() ? 0 : it->second;
}

long long EdgeTypeMatrix::total() const {
  long long s = 0;
  for (const auto& [key, c] : counts) s += c;
  return s;
}

Tree validate_tree(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1) throw DomainError("vertex count must be positive, got " + std::to_string(n));
  std::set<std::pair<int, int>> seen;
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw DomainError("vertex id out of range in edge (" + std::to_string(u) + "," +
                        std::to_string(v) + ") with n=" + std::to_string(n));
    if (u == v) throw SelfLoop("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw DuplicateEdge("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }

  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  // Reachability from vertex 0. A simple graph that covers all vertices
  // with fewer than n-1 edges cannot be connected, so this also rejects
  // every under-count.
  std::vector<char> visited(n, 0);
  std::queue<int> q;
  q.push(0);
  visited[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : adj[u]) {
      if (!visited[w]) {
        visited[w] = 1;
        ++reached;
        q.push(w);
      }
    }
  }
  if (reached != n)
    throw NotConnected("only " + std::to_string(reached) + " of " + std::to_string(n) +
                       " vertices reachable from vertex 0");

  // Connected with more than n-1 edges means some edge closes a cycle.
  if (static_cast<int>(edges.size()) >= n && n >= 1)
    throw HasCycle("connected graph with " + std::to_string(edges.size()) + " edges on " +
                   std::to_string(n) + " vertices contains a cycle");
  if (static_cast<int>(edges.size()) != n - 1)
    throw WrongEdgeCount("expected " + std::to_string(n - 1) + " edges, got " +
                         std::to_string(edges.size()));

  Tree t;
  t.n = n;
  t.edges = std::move(edges);
  t.adj = std::move(adj);
  return t;
}

std::vector<int> vertex_degrees(const Tree& t) {
  std::vector<int> deg(t.n, 0);
  for (const auto& [u, v] : t.edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

DegreeSequence degrees(const Tree& t) {
  if (t.n == 1) return {};  // one-vertex tree: empty by convention
  std::vector<int> deg = vertex_degrees(t);
  std::sort(deg.begin(), deg.end(), std::greater<int>());
  return {std::move(deg)};
}

DegreeSpec degree_spec(const DegreeSequence& s) {
  DegreeSpec spec;
  for (size_t i = 0; i < s.degrees.size();) {
    size_t j = i;
    while (j < s.degrees.size() && s.degrees[j] == s.degrees[i]) ++j;
    if (i > 0 && s.degrees[i] > s.degrees[i - 1])
      throw DomainError("degree sequence is not non-increasing");
    spec.entries.push_back({s.degrees[i], static_cast<long long>(j - i)});
    i = j;
  }
  return spec;
}

DegreeSequence expand(const DegreeSpec& spec, long long n) {
  long long total = 0;
  int prev = 0;
  bool first = true;
  for (const auto& e : spec.entries) {
    if (e.count <= 0 || e.degree <= 0)
      throw DomainError("degree spec entries must have positive degree and count");
    if (!first && e.degree >= prev)
      throw DomainError("degree spec degrees must be strictly decreasing");
    prev = e.degree;
    first = false;
    total += e.count;
  }
  if (total != n)
    throw InconsistentTotal("degree spec expands to " + std::to_string(total) +
                            " entries, expected " + std::to_string(n));
  if (n < 0 || n > (1LL << 31))
    throw DomainError("expansion of " + std::to_string(n) + " entries is not materializable");
  DegreeSequence s;
  s.degrees.reserve(static_cast<size_t>(n));
  for (const auto& e : spec.entries)
    s.degrees.insert(s.degrees.end(), static_cast<size_t>(e.count), e.degree);
  return s;
}

bool is_tree_degree_sequence(const DegreeSequence& s) {
  if (s.degrees.empty()) return true;  // the one-vertex tree
  long long n = static_cast<long long>(s.degrees.size());
  long long sum = 0;
  for (int d : s.degrees) {
    if (d < 1) return false;
    sum += d;
  }
  return n >= 2 && sum == 2 * (n - 1);
}

Tree tree_from_degree_sequence(const DegreeSequence& s) {
  if (!is_tree_degree_sequence(s))
    throw NotRealizable("degree sequence is not realizable as a tree");
  int n = static_cast<int>(s.degrees.size());
  if (n == 0) return validate_tree(1, {});
  std::vector<int> d = s.degrees;
  std::sort(d.begin(), d.end(), std::greater<int>());
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  int next_child = 1;
  for (int k = 0; k < n && next_child < n; ++k) {
    int slots = k == 0 ? d[k] : d[k] - 1;
    for (int c = 0; c < slots; ++c) edges.push_back({k, next_child++});
  }
  return validate_tree(n, std::move(edges));
}

std::vector<int> tree_center(const Tree& t) {
  if (t.n == 1) return {0};
  std::vector<int> deg = vertex_degrees(t);
  std::vector<int> layer;
  for (int v = 0; v < t.n; ++v)
    if (deg[v] == 1) layer.push_back(v);
  int remaining = t.n;
  while (remaining > 2) {
    std::vector<int> next;
    remaining -= static_cast<int>(layer.size());
    for (int v : layer) {
      deg[v] = 0;
      for (int w : t.adj[v]) {
        if (deg[w] > 0 && --deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

namespace {

// Rooted subtree code, computed bottom-up over a BFS order so deep paths
// cannot overflow the call stack.
std::string rooted_code(const Tree& t, int root) {
  std::vector<int> parent(t.n, -1), order;
  order.reserve(t.n);
  order.push_back(root);
  parent[root] = root;
  for (size_t i = 0; i < order.size(); ++i) {
    int u = order[i];
    for (int w : t.adj[u]) {
      if (parent[w] == -1) {
        parent[w] = u;
        order.push_back(w);
      }
    }
  }
  std::vector<std::string> code(t.n);
  for (size_t i = order.size(); i-- > 0;) {
    int u = order[i];
    std::vector<std::string> child_codes;
    for (int w : t.adj[u])
      if (parent[w] == u) child_codes.push_back(std::move(code[w]));
    std::sort(child_codes.begin(), child_codes.end());
    std::string c = "(";
    for (const auto& cc : child_codes) c += cc;
    c += ")";
    code[u] = std::move(c);
  }
  return code[root];
}

}  // namespace

std::string canonical_code(const Tree& t) {
  std::vector<int> centers = tree_center(t);
  std::string best = rooted_code(t, centers[0]);
  for (size_t i = 1; i < centers.size(); ++i) {
    std::string c = rooted_code(t, centers[i]);
    if (c < best) best = std::move(c);
  }
  return best;
}

EdgeTypeMatrix edge_type_counts(const Tree& t) {
  std::vector<int> deg = vertex_degrees(t);
  EdgeTypeMatrix m;
  for (const auto& [u, v] : t.edges) {
    int i = deg[u], j = deg[v];
    if (i > j) std::swap(i, j);
    ++m.counts[{i, j}];
  }
  return m;
}

std::string format_degree_spec(const DegreeSpec& spec) {
  std::ostringstream out;
  for (size_t i = 0; i < spec.entries.size(); ++i) {
    if (i) out << ',';
    out << spec.entries[i].degree << '^' << spec.entries[i].count;
  }
  return out.str();
}

DegreeSpec parse_degree_spec(const std::string& text) {
  DegreeSpec spec;
  if (text.empty()) return spec;
  std::istringstream in(text);
  std::string term;
  while (std::getline(in, term, ',')) {
    size_t caret = term.find('^');
    if (caret == std::string::npos)
      throw ParseError("degree spec term '" + term + "' is missing '^'");
    try {
      size_t used = 0;
      int degree = std::stoi(term.substr(0, caret), &used);
      if (used != caret) throw std::invalid_argument(term);
      long long count = std::stoll(term.substr(caret + 1), &used);
      if (used != term.size() - caret - 1) throw std::invalid_argument(term);
      spec.entries.push_back({degree, count});
    } catch (const std::logic_error&) {
      throw ParseError("cannot parse degree spec term '" + term + "'");
    }
  }
  // validate shape the same way expand does
  int prev = 0;
  bool first = true;
  for (const auto& e : spec.entries) {
    if (e.degree <= 0 || e.count <= 0)
      throw ParseError("degree spec entries must be positive in '" + text + "'");
    if (!first && e.degree >= prev)
      throw ParseError("degree spec degrees must be strictly decreasing in '" + text + "'");
    prev = e.degree;
    first = false;
  }
  return spec;
}

}  // namespace fextremal
