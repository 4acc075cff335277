#include "symstress/symmetry.hpp"

#include "symstress/random.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace symstress {

namespace {

Rational floor_q(const Rational& x) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Rational(f);
}

Rational mod_q(const Rational& x, const Rational& m) { return x - m * floor_q(x / m); }

// cos and sin of 2*pi*t for t a multiple of 1/4.
std::array<int, 2> quarter_cos_sin(const Rational& t) {
  Rational u = mod_q(t, 1) * 4;
  int k = static_cast<int>(u.get_num().get_si());
  static const int cs[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return {cs[k][0], cs[k][1]};
}

bool multiple_of_quarter(const Rational& t) {
  Rational u = t * 4;
  return u.get_den() == 1;
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

OrthogonalElement OrthogonalElement::rotation(Rational turns) {
  OrthogonalElement e;
  e.kind_ = Kind::Rotation;
  e.angle_ = mod_q(turns, 1);
  return e;
}

OrthogonalElement OrthogonalElement::reflection(Rational axis_turns) {
  OrthogonalElement e;
  e.kind_ = Kind::Reflection;
  e.angle_ = mod_q(axis_turns, Rational(1, 2));
  return e;
}

bool OrthogonalElement::exact() const {
  return multiple_of_quarter(is_rotation() ? angle_ : Rational(angle_ * 2));
}

std::array<Rational, 4> OrthogonalElement::exact_matrix() const {
  if (!exact()) throw DomainError("InexactRepresentation", "orthogonal element " + describe() + " has irrational entries");
  if (is_rotation()) {
    auto [c, s] = quarter_cos_sin(angle_);
    return {Rational(c), Rational(-s), Rational(s), Rational(c)};
  }
  auto [c, s] = quarter_cos_sin(angle_ * 2);
  return {Rational(c), Rational(s), Rational(s), Rational(-c)};
}

std::array<double, 4> OrthogonalElement::matrix() const {
  if (exact()) {
    auto m = exact_matrix();
    return {m[0].get_d(), m[1].get_d(), m[2].get_d(), m[3].get_d()};
  }
  long double th = static_cast<long double>(kTwoPi) * static_cast<long double>((is_rotation() ? angle_ : Rational(angle_ * 2)).get_d());
  double c = static_cast<double>(std::cos(th)), s = static_cast<double>(std::sin(th));
  if (is_rotation()) return {c, -s, s, c};
  return {c, s, s, -c};
}

double OrthogonalElement::trace() const {
  if (is_reflection()) return 0.0;
  auto m = matrix();
  return m[0] + m[3];
}

int OrthogonalElement::order() const {
  if (is_reflection()) return 2;
  return static_cast<int>(angle_.get_den().get_si());
}

OrthogonalElement OrthogonalElement::operator*(const OrthogonalElement& b) const {
  if (is_rotation() && b.is_rotation()) return rotation(angle_ + b.angle_);
  if (is_rotation()) return reflection(b.angle_ + angle_ / 2);
  if (b.is_rotation()) return reflection(angle_ - b.angle_ / 2);
  return rotation((angle_ - b.angle_) * 2);
}

OrthogonalElement OrthogonalElement::inverse() const {
  if (is_reflection()) return *this;
  return rotation(-angle_);
}

std::string OrthogonalElement::describe() const {
  if (is_identity()) return "E";
  if (is_rotation()) return "C" + angle_.get_den().get_str() + "^" + angle_.get_num().get_str();
  return "sigma[" + to_string(Rational(angle_ * 360)) + "deg]";
}

template <class T> std::array<T, 4> element_matrix(const OrthogonalElement& e) {
  if constexpr (std::is_same_v<T, Rational>)
    return e.exact_matrix();
  else
    return e.matrix();
}

bool SymmetryPair::exact() const {
  for (const auto& e : images)
    if (!e.exact()) return false;
  return true;
}

bool SymmetryPair::has_reflection() const {
  for (const auto& e : images)
    if (e.is_reflection()) return true;
  return false;
}

namespace {

void finish_labels(SymmetryPair& sp) {
  int rotations = 0, reflections = 0;
  for (const auto& e : sp.images) (e.is_rotation() ? rotations : reflections)++;
  sp.rotation_order = rotations;
  if (reflections == 0)
    sp.label = "C" + std::to_string(rotations);
  else if (rotations == 1)
    sp.label = "Cs";
  else
    sp.label = "C" + std::to_string(rotations) + "v";
  sp.rotation_index = 1;
  for (const auto& e : sp.generator_images)
    if (e.is_rotation() && !e.is_identity()) {
      Rational k = e.angle() * rotations;
      sp.rotation_index = static_cast<int>(k.get_num().get_si());
      break;
    }
}

}  // namespace

SymmetryPair make_symmetry_pair(const Graph& g, const std::vector<Permutation>& gens,
                                const std::vector<OrthogonalElement>& images) {
  if (gens.size() != images.size()) throw std::invalid_argument("generators and images differ in length");
  for (const auto& p : gens) {
    if (p.size() != g.n()) throw std::invalid_argument("generator has wrong degree");
    if (!is_automorphism(g, p))
      throw DomainError("NotAnAutomorphism", "generator " + p.cycles() + " is not a graph automorphism");
  }
  std::map<Permutation, OrthogonalElement> tau;
  std::vector<Permutation> todo{Permutation::identity(g.n())};
  tau[todo.front()] = OrthogonalElement::identity();
  for (std::size_t at = 0; at < todo.size(); ++at) {
    Permutation x = todo[at];
    OrthogonalElement tx = tau.at(x);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Permutation y = x * gens[k];
      OrthogonalElement ty = tx * images[k];
      auto it = tau.find(y);
      if (it == tau.end()) {
        tau.emplace(y, ty);
        todo.push_back(y);
        if (todo.size() > kMaxAutomorphisms) throw DomainError("AutGroupTooLarge", "symmetry group too large");
      } else if (!(it->second == ty)) {
        throw DomainError("NotAHomomorphism", "images do not define a homomorphism (conflict at " + y.cycles() + ")");
      }
    }
  }
  SymmetryPair sp;
  sp.graph = g;
  std::vector<Permutation> elems;
  for (const auto& [p, e] : tau) elems.push_back(p);
  sp.group = Subgroup(elems);
  for (const auto& p : sp.group.elements()) {
    const auto& e = tau.at(p);
    if (e.is_identity() && !p.is_identity())
      throw DomainError("NotFaithful", "representation is not faithful: " + p.cycles() + " maps to the identity");
    sp.images.push_back(e);
  }
  sp.generators = gens;
  sp.generator_images = images;
  finish_labels(sp);
  return sp;
}

SymmetryPair trivial_pair(const Graph& g) { return make_symmetry_pair(g, {}, {}); }

namespace {

const Permutation& smallest_of_order(const std::vector<Permutation>& elems, int ord) {
  for (const auto& x : elems)
    if (x.order() == ord) return x;
  throw std::logic_error("no element of requested order");
}

}  // namespace

std::vector<SymmetryPair> enumerate_faithful_reps(const Graph& g, const Subgroup& group) {
  std::vector<SymmetryPair> out;
  const int order = static_cast<int>(group.order());
  const auto& elems = group.elements();
  if (order == 1) {
    out.push_back(trivial_pair(g));
    return out;
  }
  if (group.is_cyclic()) {
    const Permutation& gen = smallest_of_order(elems, order);
    for (int k = 1; 2 * k <= order; ++k) {
      if (std::gcd(k, order) != 1) continue;
      out.push_back(make_symmetry_pair(g, {gen}, {OrthogonalElement::rotation(k, order)}));
    }
    if (order == 2) out.push_back(make_symmetry_pair(g, {gen}, {OrthogonalElement::reflection(Rational(1, 4))}));
    return out;
  }
  if (order % 2 != 0 || order < 4) return out;
  const int q = order / 2;
  // Candidate rotation subgroups: cyclic of index 2, all other elements
  // involutions inverting the rotation generator.
  std::set<std::vector<Permutation>> seen;
  for (const auto& r : elems) {
    if (r.order() != q) continue;
    auto rot = closure(g.n(), {r});
    if (!seen.insert(rot).second) continue;
    const Permutation& rgen = smallest_of_order(rot, q);
    const Permutation* x0 = nullptr;
    bool ok = true;
    for (const auto& x : elems) {
      if (std::binary_search(rot.begin(), rot.end(), x)) continue;
      if (x.order() != 2 || x * rgen * x != rgen.inverse()) {
        ok = false;
        break;
      }
      if (!x0) x0 = &x;
    }
    if (!ok || !x0) continue;
    for (int k = 1; 2 * k <= q; ++k) {
      if (std::gcd(k, q) != 1) continue;
      out.push_back(make_symmetry_pair(
          g, {rgen, *x0}, {OrthogonalElement::rotation(k, q), OrthogonalElement::reflection(Rational(1, 4))}));
    }
  }
  return out;
}

template <class T> Configuration<T> act(const SymmetryPair& pair, const Permutation& gamma, const Configuration<T>& p) {
  if (p.d != 2) throw std::invalid_argument("symmetry actions need d = 2");
  auto m = element_matrix<T>(pair.tau(gamma.inverse()));
  Configuration<T> out(2, p.n());
  for (std::size_t i = 0; i < p.n(); ++i) {
    auto j = static_cast<std::size_t>(gamma(static_cast<int>(i)));
    out.at(i, 0) = m[0] * p.at(j, 0) + m[1] * p.at(j, 1);
    out.at(i, 1) = m[2] * p.at(j, 0) + m[3] * p.at(j, 1);
  }
  return out;
}

template <class T> Configuration<T> average(const SymmetryPair& pair, const Configuration<T>& p) {
  if (p.n() != static_cast<std::size_t>(pair.graph.n())) throw std::invalid_argument("configuration size mismatch");
  Configuration<T> sum(2, p.n());
  for (const auto& gamma : pair.group.elements()) {
    auto q = act(pair, gamma, p);
    for (std::size_t k = 0; k < sum.coords.size(); ++k) sum.coords[k] += q.coords[k];
  }
  T inv = T(1) / T(static_cast<long>(pair.group.order()));
  for (auto& x : sum.coords) x *= inv;
  return sum;
}

template <class T> Matrix<T> averaging_matrix(const SymmetryPair& pair) {
  const std::size_t n = static_cast<std::size_t>(pair.graph.n());
  Matrix<T> a(2 * n, 2 * n);
  T inv = T(1) / T(static_cast<long>(pair.group.order()));
  for (std::size_t e = 0; e < pair.group.order(); ++e) {
    const auto& gamma = pair.group.elements()[e];
    auto m = element_matrix<T>(pair.images[e]);
    for (std::size_t i = 0; i < n; ++i) {
      auto gi = static_cast<std::size_t>(gamma(static_cast<int>(i)));
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) a(2 * gi + r, 2 * i + c) += m[2 * r + c] * inv;
    }
  }
  return a;
}

template <class T> bool is_symmetric(const SymmetryPair& pair, const Configuration<T>& p, double tol) {
  double scale = std::max(1.0, norm_inf(p.coords));
  for (std::size_t e = 0; e < pair.group.order(); ++e) {
    const auto& gamma = pair.group.elements()[e];
    auto m = element_matrix<T>(pair.images[e]);
    for (std::size_t i = 0; i < p.n(); ++i) {
      auto j = static_cast<std::size_t>(gamma(static_cast<int>(i)));
      T x = m[0] * p.at(i, 0) + m[1] * p.at(i, 1) - p.at(j, 0);
      T y = m[2] * p.at(i, 0) + m[3] * p.at(i, 1) - p.at(j, 1);
      if constexpr (std::is_same_v<T, Rational>) {
        if (sgn(x) != 0 || sgn(y) != 0) return false;
      } else {
        if (std::abs(x) > tol * scale || std::abs(y) > tol * scale) return false;
      }
    }
  }
  return true;
}

template <class T> Configuration<T> random_symmetric_configuration(const SymmetryPair& pair, std::uint64_t seed) {
  auto p = random_generic_configuration(pair.graph.n(), 2, derive_seed(seed, "symmetric-configuration"));
  if constexpr (std::is_same_v<T, Rational>)
    return average(pair, p);
  else
    return average(pair, to_double(p));
}

FilterVerdict degeneracy_filter(const SymmetryPair& pair) {
  FilterVerdict v;
  const Graph& g = pair.graph;
  auto reject = [&](const std::string& why) {
    v.accepted = false;
    if (std::find(v.reasons.begin(), v.reasons.end(), why) == v.reasons.end()) v.reasons.push_back(why);
  };
  bool rotation_fixes_vertex = false, half_turn_fixes_edge = false;
  for (std::size_t e = 0; e < pair.group.order(); ++e) {
    const auto& gamma = pair.group.elements()[e];
    const auto& img = pair.images[e];
    if (img.is_identity()) continue;
    auto fx = fixed_elements(gamma, g);
    if (img.is_rotation()) {
      if (fx.vertices.size() >= 2) reject("rotation fixes 2 vertices");
      if (!fx.vertices.empty()) rotation_fixes_vertex = true;
      if (img.is_half_turn()) {
        if (fx.edges.size() >= 2) reject("half-turn fixes 2 edges");
        if (!fx.edges.empty()) half_turn_fixes_edge = true;
      }
      continue;
    }
    // Reflection: fixed vertices lie on the mirror and must induce paths.
    std::vector<bool> fixed(static_cast<std::size_t>(g.n()), false);
    for (int u : fx.vertices) fixed[static_cast<std::size_t>(u)] = true;
    int induced_edges = 0;
    bool deg_ok = true;
    for (int u : fx.vertices) {
      int deg = 0;
      for (int w : g.neighbours(u))
        if (fixed[static_cast<std::size_t>(w)]) ++deg;
      if (deg > 2) deg_ok = false;
      induced_edges += deg;
    }
    induced_edges /= 2;
    // components of the induced subgraph
    std::vector<int> comp(static_cast<std::size_t>(g.n()), -1);
    int ncomp = 0;
    for (int u : fx.vertices) {
      if (comp[static_cast<std::size_t>(u)] >= 0) continue;
      std::vector<int> stack{u};
      comp[static_cast<std::size_t>(u)] = ncomp;
      while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        for (int b : g.neighbours(a))
          if (fixed[static_cast<std::size_t>(b)] && comp[static_cast<std::size_t>(b)] < 0) {
            comp[static_cast<std::size_t>(b)] = ncomp;
            stack.push_back(b);
          }
      }
      ++ncomp;
    }
    if (!deg_ok || induced_edges != static_cast<int>(fx.vertices.size()) - ncomp) reject("fixed subgraph not paths");

    // Side parity: u and gamma(u) lie on opposite sides of the mirror; an edge
    // uv (v != gamma(u)) between moved vertices must not cross the mirror,
    // otherwise it meets its own mirror image there.
    std::vector<int> parent(static_cast<std::size_t>(g.n())), parity(static_cast<std::size_t>(g.n()), 0);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::pair<int, int>(int)> find = [&](int x) -> std::pair<int, int> {
      if (parent[static_cast<std::size_t>(x)] == x) return {x, 0};
      auto [r, p] = find(parent[static_cast<std::size_t>(x)]);
      parent[static_cast<std::size_t>(x)] = r;
      parity[static_cast<std::size_t>(x)] ^= p;
      return {r, parity[static_cast<std::size_t>(x)]};
    };
    bool consistent = true;
    auto unite = [&](int a, int b, int rel) {
      auto [ra, pa] = find(a);
      auto [rb, pb] = find(b);
      if (ra == rb) {
        if ((pa ^ pb) != rel) consistent = false;
        return;
      }
      parent[static_cast<std::size_t>(ra)] = rb;
      parity[static_cast<std::size_t>(ra)] = pa ^ pb ^ rel;
    };
    for (int u = 0; u < g.n(); ++u)
      if (!fixed[static_cast<std::size_t>(u)]) unite(u, gamma(u), 1);
    for (const auto& ed : g.edges()) {
      if (fixed[static_cast<std::size_t>(ed.u)] || fixed[static_cast<std::size_t>(ed.v)]) continue;
      if (gamma(ed.u) == ed.v) continue;
      unite(ed.u, ed.v, 0);
    }
    if (!consistent) reject("reflection forces an edge crossing on the mirror");
  }
  if (rotation_fixes_vertex && half_turn_fixes_edge) reject("rotation-fixed vertex on a half-turn-fixed edge");
  return v;
}

#define SYMSTRESS_INSTANTIATE(T)                                                                       \
  template std::array<T, 4> element_matrix<T>(const OrthogonalElement&);                               \
  template Configuration<T> act(const SymmetryPair&, const Permutation&, const Configuration<T>&);      \
  template Configuration<T> average(const SymmetryPair&, const Configuration<T>&);                     \
  template Matrix<T> averaging_matrix<T>(const SymmetryPair&);                                         \
  template bool is_symmetric(const SymmetryPair&, const Configuration<T>&, double);                    \
  template Configuration<T> random_symmetric_configuration<T>(const SymmetryPair&, std::uint64_t);

SYMSTRESS_INSTANTIATE(Rational)
SYMSTRESS_INSTANTIATE(double)

}  // namespace symstress
