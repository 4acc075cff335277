#include "symstress/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <sstream>

namespace symstress {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kZeroRel = 1e-9;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::abs(x) < 5e-4 ? 0.0 : x);
  return buf;
}

}  // namespace

std::string render_svg(const Graph& g, const Configuration<double>& p, const std::optional<Vec<double>>& stress,
                       const SymmetryPair* pair, const SvgOptions& opt) {
  double lo_x = std::numeric_limits<double>::infinity(), hi_x = -lo_x, lo_y = lo_x, hi_y = -lo_x;
  for (std::size_t i = 0; i < p.n(); ++i) {
    lo_x = std::min(lo_x, p.at(i, 0));
    hi_x = std::max(hi_x, p.at(i, 0));
    lo_y = std::min(lo_y, p.at(i, 1));
    hi_y = std::max(hi_y, p.at(i, 1));
  }
  if (pair) {  // keep the symmetry centre in view
    lo_x = std::min(lo_x, 0.0), hi_x = std::max(hi_x, 0.0);
    lo_y = std::min(lo_y, 0.0), hi_y = std::max(hi_y, 0.0);
  }
  if (p.n() == 0) lo_x = hi_x = lo_y = hi_y = 0;
  double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  double scale = (opt.size - 2 * opt.margin) / span;
  double cx = (lo_x + hi_x) / 2, cy = (lo_y + hi_y) / 2;
  auto X = [&](double x) { return opt.size / 2 + (x - cx) * scale; };
  auto Y = [&](double y) { return opt.size / 2 - (y - cy) * scale; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(opt.size) << "\" height=\""
     << num(opt.size) << "\" viewBox=\"0 0 " << num(opt.size) << " " << num(opt.size) << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (pair) {
    double reach = span;
    std::set<std::string> drawn;
    for (const auto& e : pair->images) {
      if (e.is_reflection()) {
        double a = kTwoPi * e.angle().get_d();
        std::string key = to_string(e.angle());
        if (!drawn.insert(key).second) continue;
        os << "<line class=\"axis\" x1=\"" << num(X(-reach * std::cos(a))) << "\" y1=\"" << num(Y(-reach * std::sin(a)))
           << "\" x2=\"" << num(X(reach * std::cos(a))) << "\" y2=\"" << num(Y(reach * std::sin(a)))
           << "\" stroke=\"#2a9d8f\" stroke-width=\"1\" stroke-dasharray=\"8 4 2 4\"/>\n";
      }
    }
    if (pair->rotation_order > 1)
      os << "<circle class=\"centre\" cx=\"" << num(X(0)) << "\" cy=\"" << num(Y(0))
         << "\" r=\"6\" fill=\"none\" stroke=\"#2a9d8f\" stroke-width=\"1.5\"/>\n";
  }

  double wmax = 0;
  if (stress)
    for (double w : *stress) wmax = std::max(wmax, std::abs(w));
  for (int k = 0; k < g.m(); ++k) {
    const auto& e = g.edge(k);
    auto u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
    std::string style = "stroke=\"black\" stroke-width=\"2\"";
    if (stress) {
      double w = (*stress)[static_cast<std::size_t>(k)];
      if (wmax == 0 || std::abs(w) <= kZeroRel * wmax)
        style = "stroke=\"#999999\" stroke-width=\"1.5\" stroke-dasharray=\"5 4\"";
      else if (w < 0)
        style = "stroke=\"#d62828\" stroke-width=\"2.5\"";
      else
        style = "stroke=\"#1d4ed8\" stroke-width=\"2.5\"";
    }
    os << "<line class=\"edge\" data-edge=\"" << e.u + 1 << "-" << e.v + 1 << "\" x1=\"" << num(X(p.at(u, 0)))
       << "\" y1=\"" << num(Y(p.at(u, 1))) << "\" x2=\"" << num(X(p.at(v, 0))) << "\" y2=\"" << num(Y(p.at(v, 1)))
       << "\" " << style << "/>\n";
  }
  for (std::size_t i = 0; i < p.n(); ++i) {
    os << "<circle class=\"vertex\" cx=\"" << num(X(p.at(i, 0))) << "\" cy=\"" << num(Y(p.at(i, 1))) << "\" r=\""
       << num(opt.vertex_radius) << "\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    if (opt.labels)
      os << "<text x=\"" << num(X(p.at(i, 0)) + 6) << "\" y=\"" << num(Y(p.at(i, 1)) - 6)
         << "\" font-family=\"sans-serif\" font-size=\"12\">" << i + 1 << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace symstress
