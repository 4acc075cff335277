#pragma once

#include "symstress/framework.hpp"

#include <array>
#include <optional>
#include <vector>

namespace symstress {

// Faces of a crossing-free straight-line drawing; each face is a closed walk
// listed counterclockwise for bounded faces (clockwise for the outer face).
struct FaceStructure {
  std::vector<std::vector<int>> faces;
  int outer = -1;
};

template <class T> FaceStructure trace_faces(const Graph& g, const Configuration<T>& p);

template <class T> struct LiftedFramework {
  Graph graph;
  Configuration<T> config;  // d = 3
  std::optional<FaceStructure> faces;
  std::vector<std::array<T, 3>> planes;  // per face (gx, gy, c): z = gx*x + gy*y + c
};

template <class T> struct Projection {
  Framework<T> framework;
  std::vector<std::pair<int, int>> coincident;
};

template <class T> Projection<T> project(const LiftedFramework<T>& lf);

template <class T> struct LoadVector {
  std::vector<T> f;  // 3n
  bool vertical() const;
};

template <class T> LoadVector<T> vertical_load(const std::vector<T>& beta);

template <class T> struct ProjectionStress {
  bool feasible = false;
  Vec<T> omega;
  double residual = 0;              // |R(p~)^T w - f|
  bool certificate = false;         // w^T R(p) = 0 for the projection
  double certificate_residual = 0;
};

template <class T>
ProjectionStress<T> projection_stress(const LiftedFramework<T>& lf, const LoadVector<T>& load,
                                      double rel_tol = kDefaultRelTol);

// w^T R(p~) for a stress of the projection (the vertical load it resolves).
template <class T> LoadVector<T> induced_load(const LiftedFramework<T>& lf, const Vec<T>& omega);

struct Resolvability {
  std::vector<bool> feasible;
  std::size_t resolvable_dim = 0;   // dim of {w^T R(p~) : w stress of the projection}
  std::size_t equilibrium_dim = 0;  // vertical loads orthogonal to trivial motions
};

template <class T>
Resolvability vertical_resolvability(const LiftedFramework<T>& lf, const std::vector<LoadVector<T>>& loads,
                                     double rel_tol = kDefaultRelTol);

// Lift a planar self-stressed framework; the outer face stays at z = 0.
template <class T>
LiftedFramework<T> maxwell_cremona_lift(const Framework<T>& fw, const Vec<T>& omega,
                                        std::optional<FaceStructure> faces = std::nullopt,
                                        double rel_tol = kDefaultRelTol);

// Every face's vertices lie on one plane.
template <class T> bool faces_coplanar(const LiftedFramework<T>& lf, double rel_tol = kDefaultRelTol);

// Plane (gx, gy, c) through a face, from the 3D coordinates.
template <class T> std::optional<std::array<T, 3>> face_plane(const LiftedFramework<T>& lf, std::size_t face);

// Index of the face to the left of the directed edge u->v.
int face_left_of(const FaceStructure& fs, int u, int v);

double perturbation_bound(std::size_t m, double omega_norm, double eps);
double diameter(const Configuration<double>& e);

struct ResidualCheck {
  double observed = 0;
  double bound = 0;
  double diam = 0;
  bool holds = true;
};

// |w^T R(p+e) - f| against 2 sqrt(m) diam(e) |w|.
ResidualCheck residual_check(const Graph& g, const Vec<double>& omega, const Configuration<double>& p,
                             const Configuration<double>& e, const std::vector<double>& f);

}  // namespace symstress
