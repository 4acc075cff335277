#pragma once

#include "symstress/graph.hpp"
#include "symstress/random.hpp"

#include <array>
#include <set>
#include <utility>
#include <vector>

namespace fx {

// Random triangulation of a triangle with outer face {0,1,2}: stacked
// insertions followed by edge flips. Every result is 3-connected.
inline symstress::Graph random_triangulation(int n, std::uint64_t seed) {
  symstress::Rng rng(seed);
  std::vector<std::array<int, 3>> faces{{0, 1, 2}};
  for (int v = 3; v < n; ++v) {
    auto k = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(faces.size()) - 1));
    auto [a, b, c] = faces[k];
    faces[k] = {a, b, v};
    faces.push_back({b, c, v});
    faces.push_back({c, a, v});
  }
  auto edge_set = [&] {
    std::set<std::pair<int, int>> e;
    for (const auto& f : faces)
      for (int i = 0; i < 3; ++i) e.insert(std::minmax(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>((i + 1) % 3)]));
    return e;
  };
  for (int t = 0; t < 2 * n; ++t) {
    auto k = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(faces.size()) - 1));
    int i = static_cast<int>(rng.uniform_int(0, 2));
    int a = faces[k][static_cast<std::size_t>(i)], b = faces[k][static_cast<std::size_t>((i + 1) % 3)];
    int c = faces[k][static_cast<std::size_t>((i + 2) % 3)];
    // the face on the other side traverses b -> a
    for (std::size_t j = 0; j < faces.size(); ++j) {
      if (j == k) continue;
      for (int r = 0; r < 3; ++r) {
        if (faces[j][static_cast<std::size_t>(r)] != b || faces[j][static_cast<std::size_t>((r + 1) % 3)] != a) continue;
        int d = faces[j][static_cast<std::size_t>((r + 2) % 3)];
        if (edge_set().count(std::minmax(c, d))) break;
        faces[k] = {c, a, d};
        faces[j] = {d, b, c};
        break;
      }
    }
  }
  auto e = edge_set();
  return symstress::Graph(n, std::vector<std::pair<int, int>>(e.begin(), e.end()));
}

}  // namespace fx
