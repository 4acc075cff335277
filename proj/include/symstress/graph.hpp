#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symstress {

// Vertices are 0-based internally; every serialised form is 1-based.
struct Edge {
  int u = 0, v = 0;  // u < v
  auto operator<=>(const Edge&) const = default;
};

class Graph {
public:
  Graph() = default;
  // Edges may be given in any order/orientation; stored sorted lexicographically.
  Graph(int n, std::vector<std::pair<int, int>> edges);
  static Graph from_one_based(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int k) const { return edges_[static_cast<std::size_t>(k)]; }
  const std::vector<int>& neighbours(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(int a, int b) const;
  // Index of edge {a,b} in the sorted edge list, or -1.
  int edge_index(int a, int b) const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::map<std::pair<int, int>, int> index_;
};

class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int n);
  static Permutation from_one_based(const std::vector<int>& image);
  // Cycle notation, 1-based, e.g. "(1 2)(4 5)"; n fixes the degree.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles_one_based);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& image() const { return image_; }
  std::vector<int> one_based() const;

  // (a*b)(i) = a(b(i))
  Permutation operator*(const Permutation& b) const;
  Permutation inverse() const;
  bool is_identity() const;
  int order() const;
  std::string cycles() const;

  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<int> image_;
};

bool is_automorphism(const Graph& g, const Permutation& p);

class Subgroup {
public:
  Subgroup() = default;
  // elements must form a group; sorted on construction (identity first).
  explicit Subgroup(std::vector<Permutation> elements);
  static Subgroup generated_by(int n, const std::vector<Permutation>& gens);
  static Subgroup trivial(int n);

  std::size_t order() const { return elements_.size(); }
  int degree() const { return degree_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  bool contains(const Permutation& p) const;
  std::size_t index_of(const Permutation& p) const;
  bool is_cyclic() const;
  bool is_abelian() const;

  bool operator==(const Subgroup& o) const { return elements_ == o.elements_; }
  bool operator<(const Subgroup& o) const;

private:
  int degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
};

// Closure of gens under composition.
std::vector<Permutation> closure(int n, const std::vector<Permutation>& gens, std::size_t cap = 0);

inline constexpr std::size_t kMaxAutomorphisms = 10000;

Subgroup automorphism_group(const Graph& g, std::size_t cap = kMaxAutomorphisms);
std::vector<Subgroup> subgroups(const Subgroup& a);
std::vector<std::vector<Permutation>> conjugacy_classes(const Subgroup& a);

struct FixedElements {
  std::vector<int> vertices;
  std::vector<int> edges;  // edge indices
};
FixedElements fixed_elements(const Permutation& p, const Graph& g);

// Image of edge k under p, as an edge index.
int edge_image(const Graph& g, const Permutation& p, int k);

struct Subgraph {
  std::vector<int> vertices;  // sorted
  std::vector<int> edges;     // sorted edge indices
  bool operator==(const Subgraph&) const = default;
};
Subgraph subgraph_from_edges(const Graph& g, const std::vector<int>& edges);

struct SubgraphOrbit {
  Subgraph unite;                   // union of all images
  std::vector<Subgraph> copies;     // distinct images
  bool disjoint_copies = false;     // |copies| = |group| and pairwise vertex-disjoint
};
SubgraphOrbit orbit_of_subgraph(const Subgroup& s, const Graph& g, const Subgraph& h);

struct Orbits {
  std::vector<std::vector<int>> vertex_orbits;
  std::vector<std::vector<int>> edge_orbits;  // edge indices
};
Orbits edge_and_vertex_orbits(const Subgroup& s, const Graph& g);

bool peels_to_empty(const Graph& g, int d, int skip_edge = -1);
bool is_peelable_without_edge(const Graph& g, int d);

bool is_k_connected(const Graph& g, int k);
bool is_connected(const Graph& g);

}  // namespace symstress
