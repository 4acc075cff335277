#pragma once

#include "symstress/framework.hpp"

#include <array>
#include <string>
#include <vector>

namespace symstress {

// Element of O(2), stored by a rational angle so that composition is exact.
// Rotations carry their angle in turns (t means 2*pi*t); reflections carry
// the angle of their mirror line in turns, reduced mod 1/2.
class OrthogonalElement {
public:
  enum class Kind { Rotation, Reflection };

  OrthogonalElement() = default;
  static OrthogonalElement identity() { return {}; }
  static OrthogonalElement rotation(Rational turns);
  static OrthogonalElement rotation(long k, long q) { return rotation(Rational(k) / q); }
  static OrthogonalElement reflection(Rational axis_turns);
  static OrthogonalElement reflection_deg(const Rational& axis_degrees) { return reflection(axis_degrees / 360); }

  Kind kind() const { return kind_; }
  const Rational& angle() const { return angle_; }
  bool is_identity() const { return kind_ == Kind::Rotation && sgn(angle_) == 0; }
  bool is_rotation() const { return kind_ == Kind::Rotation; }
  bool is_reflection() const { return kind_ == Kind::Reflection; }
  bool is_half_turn() const { return kind_ == Kind::Rotation && angle_ == Rational(1, 2); }

  // Entries are rational (quarter-turn rotations, mirrors at multiples of 45 degrees).
  bool exact() const;
  std::array<Rational, 4> exact_matrix() const;  // row-major; throws when !exact()
  std::array<double, 4> matrix() const;
  double trace() const;
  int det() const { return is_rotation() ? 1 : -1; }
  int order() const;

  OrthogonalElement operator*(const OrthogonalElement& b) const;
  OrthogonalElement inverse() const;
  bool operator==(const OrthogonalElement& o) const { return kind_ == o.kind_ && angle_ == o.angle_; }

  std::string describe() const;

private:
  Kind kind_ = Kind::Rotation;
  Rational angle_ = 0;
};

template <class T> std::array<T, 4> element_matrix(const OrthogonalElement& e);

struct SymmetryPair {
  Graph graph;
  Subgroup group;
  std::vector<OrthogonalElement> images;  // parallel to group.elements()
  std::string label;                      // C1, Cs, C2, C3, C2v, C3v, ...
  int rotation_order = 1;                 // q
  int rotation_index = 1;                 // k in rotation by 2*pi*k/q
  std::vector<Permutation> generators;    // as supplied / chosen
  std::vector<OrthogonalElement> generator_images;

  const OrthogonalElement& tau(const Permutation& g) const { return images[group.index_of(g)]; }
  bool exact() const;
  bool has_reflection() const;
};

// Builds Γ = <gens> and extends τ multiplicatively; verifies that every
// generator is an automorphism, that τ is a well-defined homomorphism and
// that it is faithful.
SymmetryPair make_symmetry_pair(const Graph& g, const std::vector<Permutation>& gens,
                                const std::vector<OrthogonalElement>& images);

SymmetryPair trivial_pair(const Graph& g);

std::vector<SymmetryPair> enumerate_faithful_reps(const Graph& g, const Subgroup& group);

template <class T> Configuration<T> act(const SymmetryPair& pair, const Permutation& gamma, const Configuration<T>& p);
template <class T> Configuration<T> average(const SymmetryPair& pair, const Configuration<T>& p);
template <class T> Matrix<T> averaging_matrix(const SymmetryPair& pair);
template <class T> bool is_symmetric(const SymmetryPair& pair, const Configuration<T>& p, double tol = 0);
template <class T> Configuration<T> random_symmetric_configuration(const SymmetryPair& pair, std::uint64_t seed);

// <p,q> = sum_i <p_i,q_i>
template <class T> T inner(const Configuration<T>& p, const Configuration<T>& q) { return dot(p.coords, q.coords); }

struct FilterVerdict {
  bool accepted = true;
  std::vector<std::string> reasons;
};
FilterVerdict degeneracy_filter(const SymmetryPair& pair);

}  // namespace symstress
