#include "symstress/graph.hpp"

#include "symstress/scalar.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace symstress {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("loop at vertex " + std::to_string(a + 1));
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second)
      throw std::invalid_argument("duplicate edge " + std::to_string(a + 1) + "-" + std::to_string(b + 1));
  }
  adj_.assign(static_cast<std::size_t>(n), {});
  for (auto [a, b] : seen) {
    index_[{a, b}] = static_cast<int>(edges_.size());
    edges_.push_back({a, b});
    adj_[static_cast<std::size_t>(a)].push_back(b);
    adj_[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph Graph::from_one_based(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::pair<int, int>> e;
  e.reserve(edges.size());
  for (auto [a, b] : edges) e.emplace_back(a - 1, b - 1);
  return Graph(n, std::move(e));
}

bool Graph::adjacent(int a, int b) const { return edge_index(a, b) >= 0; }

int Graph::edge_index(int a, int b) const {
  if (a > b) std::swap(a, b);
  auto it = index_.find({a, b});
  return it == index_.end() ? -1 : it->second;
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (int x : image_) {
    if (x < 0 || x >= size() || hit[static_cast<std::size_t>(x)])
      throw std::invalid_argument("not a permutation");
    hit[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::from_one_based(const std::vector<int>& image) {
  std::vector<int> im;
  im.reserve(image.size());
  for (int x : image) im.push_back(x - 1);
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k)
      im[static_cast<std::size_t>(c[k] - 1)] = c[(k + 1) % c.size()] - 1;
  return Permutation(std::move(im));
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out;
  out.reserve(image_.size());
  for (int x : image_) out.push_back(x + 1);
  return out;
}

Permutation Permutation::operator*(const Permutation& b) const {
  std::vector<int> im(image_.size());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = image_[static_cast<std::size_t>(b.image_[i])];
  Permutation p;
  p.image_ = std::move(im);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> im(image_.size());
  for (std::size_t i = 0; i < im.size(); ++i) im[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
  Permutation p;
  p.image_ = std::move(im);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != static_cast<int>(i)) return false;
  return true;
}

int Permutation::order() const {
  int ord = 1;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(image_[j])) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Permutation::cycles() const {
  std::string s;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (seen[i] || image_[i] == static_cast<int>(i)) continue;
    s += "(";
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(image_[j])) {
      seen[j] = true;
      if (!first) s += " ";
      s += std::to_string(j + 1);
      first = false;
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.size() != g.n()) return false;
  for (const auto& e : g.edges())
    if (!g.adjacent(p(e.u), p(e.v))) return false;
  return true;
}

std::vector<Permutation> closure(int n, const std::vector<Permutation>& gens, std::size_t cap) {
  std::set<Permutation> seen;
  std::deque<Permutation> todo;
  Permutation id = Permutation::identity(n);
  seen.insert(id);
  todo.push_back(id);
  while (!todo.empty()) {
    Permutation x = todo.front();
    todo.pop_front();
    for (const auto& s : gens) {
      Permutation y = x * s;
      if (seen.insert(y).second) {
        if (cap && seen.size() > cap)
          throw DomainError("AutGroupTooLarge", "group exceeds " + std::to_string(cap) + " elements");
        todo.push_back(std::move(y));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

Subgroup::Subgroup(std::vector<Permutation> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (elements_.empty()) throw std::invalid_argument("empty subgroup");
  degree_ = elements_.front().size();
  // Greedy irredundant generating set, in element order.
  std::set<Permutation> span{elements_.front()};
  for (const auto& x : elements_) {
    if (span.count(x)) continue;
    generators_.push_back(x);
    auto c = closure(degree_, generators_);
    span = std::set<Permutation>(c.begin(), c.end());
  }
  if (span.size() != elements_.size()) throw std::invalid_argument("element set is not a group");
}

Subgroup Subgroup::generated_by(int n, const std::vector<Permutation>& gens) {
  return Subgroup(closure(n, gens));
}

Subgroup Subgroup::trivial(int n) { return Subgroup({Permutation::identity(n)}); }

bool Subgroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::size_t Subgroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) throw std::out_of_range("element not in subgroup");
  return static_cast<std::size_t>(it - elements_.begin());
}

bool Subgroup::is_cyclic() const {
  for (const auto& x : elements_)
    if (static_cast<std::size_t>(x.order()) == order()) return true;
  return false;
}

bool Subgroup::is_abelian() const {
  for (const auto& a : generators_)
    for (const auto& b : generators_)
      if (a * b != b * a) return false;
  return true;
}

bool Subgroup::operator<(const Subgroup& o) const {
  if (order() != o.order()) return order() < o.order();
  return elements_ < o.elements_;
}

namespace {

struct VertexInvariant {
  int degree;
  std::vector<int> nbr_degrees;
  auto operator<=>(const VertexInvariant&) const = default;
};

struct AutSearch {
  const Graph& g;
  std::size_t cap;
  std::vector<int> order;                 // assignment order
  std::vector<VertexInvariant> inv;
  std::vector<int> map, used;
  std::vector<Permutation> found;

  void run(std::size_t k) {
    if (k == order.size()) {
      found.emplace_back(map);
      if (found.size() > cap)
        throw DomainError("AutGroupTooLarge",
                          "automorphism group exceeds " + std::to_string(cap) + " elements");
      return;
    }
    int v = order[k];
    for (int w = 0; w < g.n(); ++w) {
      if (used[static_cast<std::size_t>(w)] || inv[static_cast<std::size_t>(w)] != inv[static_cast<std::size_t>(v)])
        continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        int u = order[j];
        ok = g.adjacent(u, v) == g.adjacent(map[static_cast<std::size_t>(u)], w);
      }
      if (!ok) continue;
      map[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = 1;
      run(k + 1);
      used[static_cast<std::size_t>(w)] = 0;
    }
  }
};

}  // namespace

Subgroup automorphism_group(const Graph& g, std::size_t cap) {
  const int n = g.n();
  if (n == 0) return Subgroup({Permutation(std::vector<int>{})});
  AutSearch s{g, cap, {}, {}, std::vector<int>(static_cast<std::size_t>(n), -1),
              std::vector<int>(static_cast<std::size_t>(n), 0), {}};
  for (int v = 0; v < n; ++v) {
    VertexInvariant vi{g.degree(v), {}};
    for (int w : g.neighbours(v)) vi.nbr_degrees.push_back(g.degree(w));
    std::sort(vi.nbr_degrees.begin(), vi.nbr_degrees.end());
    s.inv.push_back(std::move(vi));
  }
  // BFS order so that each vertex (after the first of its component) has an
  // assigned neighbour, which makes the adjacency test prune early.
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  for (int root = 0; root < n; ++root) {
    if (placed[static_cast<std::size_t>(root)]) continue;
    std::deque<int> q{root};
    placed[static_cast<std::size_t>(root)] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      s.order.push_back(v);
      for (int w : g.neighbours(v))
        if (!placed[static_cast<std::size_t>(w)]) {
          placed[static_cast<std::size_t>(w)] = true;
          q.push_back(w);
        }
    }
  }
  s.run(0);
  return Subgroup(std::move(s.found));
}

std::vector<Subgroup> subgroups(const Subgroup& a) {
  const int n = a.degree();
  using Key = std::vector<Permutation>;
  std::map<Key, std::vector<Permutation>> found;  // elements -> generators
  std::vector<Permutation> cyclic_gens;
  for (const auto& g : a.elements()) {
    auto c = closure(n, {g});
    if (found.emplace(c, std::vector<Permutation>{g}).second && !g.is_identity()) cyclic_gens.push_back(g);
  }
  std::deque<Key> todo;
  for (const auto& [k, v] : found) todo.push_back(k);
  while (!todo.empty()) {
    Key h = todo.front();
    todo.pop_front();
    std::vector<Permutation> gens = found.at(h);
    for (const auto& g : cyclic_gens) {
      if (std::binary_search(h.begin(), h.end(), g)) continue;
      auto ng = gens;
      ng.push_back(g);
      auto c = closure(n, ng);
      if (found.emplace(c, ng).second) todo.push_back(c);
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& [k, v] : found) out.emplace_back(k);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Permutation>> conjugacy_classes(const Subgroup& a) {
  std::vector<std::vector<Permutation>> classes;
  std::set<Permutation> done;
  for (const auto& x : a.elements()) {
    if (done.count(x)) continue;
    std::set<Permutation> cls;
    for (const auto& g : a.elements()) cls.insert(g * x * g.inverse());
    done.insert(cls.begin(), cls.end());
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

FixedElements fixed_elements(const Permutation& p, const Graph& g) {
  FixedElements f;
  for (int v = 0; v < g.n(); ++v)
    if (p(v) == v) f.vertices.push_back(v);
  for (int k = 0; k < g.m(); ++k) {
    const auto& e = g.edge(k);
    int a = p(e.u), b = p(e.v);
    if ((a == e.u && b == e.v) || (a == e.v && b == e.u)) f.edges.push_back(k);
  }
  return f;
}

int edge_image(const Graph& g, const Permutation& p, int k) {
  const auto& e = g.edge(k);
  int idx = g.edge_index(p(e.u), p(e.v));
  if (idx < 0) throw std::invalid_argument("permutation is not an automorphism");
  return idx;
}

Subgraph subgraph_from_edges(const Graph& g, const std::vector<int>& edges) {
  Subgraph h;
  std::set<int> vs;
  for (int k : edges) {
    vs.insert(g.edge(k).u);
    vs.insert(g.edge(k).v);
  }
  h.vertices.assign(vs.begin(), vs.end());
  h.edges = edges;
  std::sort(h.edges.begin(), h.edges.end());
  return h;
}

SubgraphOrbit orbit_of_subgraph(const Subgroup& s, const Graph& g, const Subgraph& h) {
  SubgraphOrbit out;
  std::set<std::pair<std::vector<int>, std::vector<int>>> copies;
  std::set<int> uv, ue;
  for (const auto& gamma : s.elements()) {
    Subgraph c;
    for (int v : h.vertices) c.vertices.push_back(gamma(v));
    for (int k : h.edges) c.edges.push_back(edge_image(g, gamma, k));
    std::sort(c.vertices.begin(), c.vertices.end());
    std::sort(c.edges.begin(), c.edges.end());
    uv.insert(c.vertices.begin(), c.vertices.end());
    ue.insert(c.edges.begin(), c.edges.end());
    if (copies.insert({c.vertices, c.edges}).second) out.copies.push_back(c);
  }
  out.unite.vertices.assign(uv.begin(), uv.end());
  out.unite.edges.assign(ue.begin(), ue.end());
  bool disjoint = out.copies.size() == s.order();
  if (disjoint) {
    std::size_t total = 0;
    for (const auto& c : out.copies) total += c.vertices.size();
    disjoint = total == uv.size();
  }
  out.disjoint_copies = disjoint;
  return out;
}

Orbits edge_and_vertex_orbits(const Subgroup& s, const Graph& g) {
  Orbits o;
  std::vector<bool> seen(static_cast<std::size_t>(g.n()), false);
  for (int v = 0; v < g.n(); ++v) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    std::set<int> orb;
    for (const auto& gamma : s.elements()) orb.insert(gamma(v));
    for (int w : orb) seen[static_cast<std::size_t>(w)] = true;
    o.vertex_orbits.emplace_back(orb.begin(), orb.end());
  }
  std::vector<bool> eseen(static_cast<std::size_t>(g.m()), false);
  for (int k = 0; k < g.m(); ++k) {
    if (eseen[static_cast<std::size_t>(k)]) continue;
    std::set<int> orb;
    for (const auto& gamma : s.elements()) orb.insert(edge_image(g, gamma, k));
    for (int w : orb) eseen[static_cast<std::size_t>(w)] = true;
    o.edge_orbits.emplace_back(orb.begin(), orb.end());
  }
  return o;
}

bool peels_to_empty(const Graph& g, int d, int skip_edge) {
  std::vector<int> deg(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  if (skip_edge >= 0) {
    --deg[static_cast<std::size_t>(g.edge(skip_edge).u)];
    --deg[static_cast<std::size_t>(g.edge(skip_edge).v)];
  }
  std::vector<bool> gone(static_cast<std::size_t>(g.n()), false);
  std::deque<int> q;
  for (int v = 0; v < g.n(); ++v)
    if (deg[static_cast<std::size_t>(v)] <= d) q.push_back(v);
  int removed = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    if (gone[static_cast<std::size_t>(v)]) continue;
    gone[static_cast<std::size_t>(v)] = true;
    ++removed;
    for (int w : g.neighbours(v)) {
      if (gone[static_cast<std::size_t>(w)]) continue;
      if (skip_edge >= 0 && g.edge_index(v, w) == skip_edge) continue;
      if (--deg[static_cast<std::size_t>(w)] == d) q.push_back(w);
    }
  }
  return removed == g.n();
}

bool is_peelable_without_edge(const Graph& g, int d) {
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  for (int k = 0; k < g.m(); ++k)
    if (!peels_to_empty(g, d, k)) return false;
  return true;
}

namespace {

bool connected_without(const Graph& g, const std::vector<bool>& removed) {
  int start = -1, alive = 0;
  for (int v = 0; v < g.n(); ++v)
    if (!removed[static_cast<std::size_t>(v)]) {
      ++alive;
      if (start < 0) start = v;
    }
  if (alive <= 1) return true;
  std::vector<bool> seen(removed);
  std::deque<int> q{start};
  seen[static_cast<std::size_t>(start)] = true;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : g.neighbours(v))
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++reached;
        q.push_back(w);
      }
  }
  return reached == alive;
}

bool remove_subsets(const Graph& g, std::vector<bool>& removed, int start, int left) {
  if (!connected_without(g, removed)) return false;
  if (left == 0) return true;
  for (int v = start; v < g.n(); ++v) {
    removed[static_cast<std::size_t>(v)] = true;
    bool ok = remove_subsets(g, removed, v + 1, left - 1);
    removed[static_cast<std::size_t>(v)] = false;
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool is_connected(const Graph& g) {
  return connected_without(g, std::vector<bool>(static_cast<std::size_t>(g.n()), false));
}

bool is_k_connected(const Graph& g, int k) {
  if (g.n() <= k) return false;
  std::vector<bool> removed(static_cast<std::size_t>(g.n()), false);
  return remove_subsets(g, removed, 0, k - 1);
}

}  // namespace symstress
