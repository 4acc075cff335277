#pragma once

#include "symstress/framework.hpp"
#include "symstress/symmetry.hpp"

#include <optional>
#include <string>

namespace symstress {

struct SvgOptions {
  double size = 480;        // canvas width and height in px
  double margin = 32;
  double vertex_radius = 4;
  bool labels = true;       // one-based vertex numbers
};

// Edges coloured by stress sign: red negative, blue positive, dashed grey zero.
// Mirror lines and rotation centres are drawn when a symmetry is given.
std::string render_svg(const Graph& g, const Configuration<double>& p, const std::optional<Vec<double>>& stress = {},
                       const SymmetryPair* pair = nullptr, const SvgOptions& opt = {});

}  // namespace symstress
