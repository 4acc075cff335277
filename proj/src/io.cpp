#include "symstress/io.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace symstress {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Json scalar_to_json(const Rational& q) { return to_string(q); }
Json scalar_to_json(double d) { return d; }

Rational scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number_float()) return rational_from_double(j.get<double>());
  bad("expected a number or a rational string");
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u + 1, e.v + 1});
  return Json{{"n", g.n()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  int n = need(j, "n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : need(j, "edges")) {
    if (!e.is_array() || e.size() != 2) bad("edge must be a pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph::from_one_based(n, edges);
}

Json permutation_to_json(const Permutation& p) { return p.one_based(); }

Permutation permutation_from_json(const Json& j) {
  if (!j.is_array()) bad("permutation must be an image array");
  return Permutation::from_one_based(j.get<std::vector<int>>());
}

template <class T> Json configuration_to_json(const Configuration<T>& p) {
  Json pts = Json::array();
  for (std::size_t i = 0; i < p.n(); ++i) {
    Json pt = Json::array();
    for (int k = 0; k < p.d; ++k) pt.push_back(scalar_to_json(p.at(i, k)));
    pts.push_back(pt);
  }
  return Json{{"d", p.d},
              {"points", pts},
              {"scalar", std::is_same_v<T, Rational> ? "rational" : "float"}};
}

Configuration<Rational> configuration_from_json(const Json& j) {
  const auto& pts = need(j, "points");
  int d = j.contains("d") ? j.at("d").get<int>() : (pts.empty() ? 2 : static_cast<int>(pts.at(0).size()));
  Configuration<Rational> p(d, pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!pts[i].is_array() || static_cast<int>(pts[i].size()) != d) bad("point has the wrong dimension");
    for (int k = 0; k < d; ++k) p.at(i, k) = scalar_from_json(pts[i][static_cast<std::size_t>(k)]);
  }
  return p;
}

Json element_to_json(const OrthogonalElement& e) {
  if (e.is_rotation())
    return Json{{"kind", "rotation"}, {"k", e.angle().get_num().get_si()}, {"q", e.angle().get_den().get_si()}};
  Rational deg = e.angle() * 360;
  Json a = deg.get_den() == 1 ? Json(deg.get_num().get_si()) : Json(to_string(deg));
  return Json{{"kind", "reflection"}, {"axis_deg", a}};
}

OrthogonalElement element_from_json(const Json& j) {
  std::string kind = need(j, "kind").get<std::string>();
  if (kind == "rotation") return OrthogonalElement::rotation(need(j, "k").get<long>(), need(j, "q").get<long>());
  if (kind == "reflection") return OrthogonalElement::reflection_deg(scalar_from_json(need(j, "axis_deg")));
  if (kind == "identity") return OrthogonalElement::identity();
  bad("unknown element kind \"" + kind + "\"");
}

Json symmetry_to_json(const SymmetryPair& pair) {
  Json gens = Json::array(), imgs = Json::array();
  for (const auto& g : pair.generators) gens.push_back(permutation_to_json(g));
  for (const auto& e : pair.generator_images) imgs.push_back(element_to_json(e));
  return Json{{"label", pair.label}, {"order", pair.group.order()}, {"generators", gens}, {"images", imgs}};
}

SymmetryPair symmetry_from_json(const Graph& g, const Json& j) {
  std::vector<Permutation> gens;
  std::vector<OrthogonalElement> imgs;
  for (const auto& x : need(j, "generators")) gens.push_back(permutation_from_json(x));
  for (const auto& x : need(j, "images")) imgs.push_back(element_from_json(x));
  if (gens.size() != imgs.size()) bad("generators and images differ in length");
  for (const auto& p : gens)
    if (p.size() != g.n()) bad("generator has the wrong degree");
  return make_symmetry_pair(g, gens, imgs);
}

Json poly_to_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> exp(p.nvars());
    for (std::size_t i = 0; i < p.nvars(); ++i) exp[i] = m.e[i];
    terms.push_back(Json{{"exp", exp}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  }
  return Json{{"vars", configuration_variable_names(static_cast<int>(p.nvars() / 2))}, {"terms", terms}};
}

MultiPoly poly_from_json(const Json& j) {
  std::size_t nv = need(j, "vars").size();
  MultiPoly p(nv);
  for (const auto& t : need(j, "terms")) {
    auto exp = need(t, "exp").get<std::vector<int>>();
    if (exp.size() != nv) bad("exponent vector has the wrong length");
    Monomial m;
    for (std::size_t i = 0; i < nv; ++i) {
      if (exp[i] < 0 || exp[i] > 255) bad("exponent out of range");
      m.e[i] = static_cast<std::uint8_t>(exp[i]);
      m.deg = static_cast<std::uint16_t>(m.deg + exp[i]);
    }
    Rational c(Integer(need(t, "num").get<std::string>()), Integer(need(t, "den").get<std::string>()));
    c.canonicalize();
    p.add_term(m, c);
  }
  return p;
}

template <class T> Json edge_vector_to_json(const Graph& g, const Vec<T>& w) {
  Json out = Json::array();
  for (int e = 0; e < g.m(); ++e)
    out.push_back(Json{{"edge", {g.edge(e).u + 1, g.edge(e).v + 1}}, {"w", scalar_to_json(w[static_cast<std::size_t>(e)])}});
  return out;
}

Vec<Rational> edge_vector_from_json(const Graph& g, const Json& j) {
  const Json& arr = j.is_object() ? need(j, "weights") : j;
  if (!arr.is_array()) bad("expected an array of edge values");
  Vec<Rational> w(static_cast<std::size_t>(g.m()), Rational(0));
  if (!arr.empty() && arr[0].is_object()) {
    for (const auto& x : arr) {
      const auto& e = need(x, "edge");
      int k = g.edge_index(e[0].get<int>() - 1, e[1].get<int>() - 1);
      if (k < 0) bad("value given for a non-edge");
      w[static_cast<std::size_t>(k)] = scalar_from_json(need(x, "w"));
    }
  } else {
    if (arr.size() != static_cast<std::size_t>(g.m())) bad("expected one value per edge");
    for (std::size_t k = 0; k < arr.size(); ++k) w[k] = scalar_from_json(arr[k]);
  }
  return w;
}

Json faces_to_json(const FaceStructure& fs) {
  Json faces = Json::array();
  for (const auto& f : fs.faces) {
    Json face = Json::array();
    for (int v : f) face.push_back(v + 1);
    faces.push_back(face);
  }
  return faces;
}

FaceStructure faces_from_json(const Json& j) {
  FaceStructure fs;
  for (const auto& f : j) {
    std::vector<int> face;
    for (const auto& v : f) face.push_back(v.get<int>() - 1);
    fs.faces.push_back(std::move(face));
  }
  return fs;
}

template <class T> Json lift_to_json(const LiftedFramework<T>& lf) {
  Configuration<T> planar(2, lf.config.n());
  Json z = Json::array();
  for (std::size_t i = 0; i < lf.config.n(); ++i) {
    planar.at(i, 0) = lf.config.at(i, 0);
    planar.at(i, 1) = lf.config.at(i, 1);
    z.push_back(scalar_to_json(lf.config.at(i, 2)));
  }
  Json j = configuration_to_json(planar);
  j["z"] = z;
  if (lf.faces) {
    j["faces"] = faces_to_json(*lf.faces);
    j["outer_face"] = lf.faces->outer + 1;
  }
  return j;
}

LiftedFramework<Rational> lift_from_json(const Graph& g, const Json& j) {
  auto p = configuration_from_json(j);
  LiftedFramework<Rational> lf;
  lf.graph = g;
  if (p.d == 3) {
    lf.config = p;
  } else {
    if (p.d != 2) bad("lift needs planar points plus z, or 3D points");
    const auto& z = need(j, "z");
    if (z.size() != p.n()) bad("z has the wrong length");
    lf.config = Configuration<Rational>(3, p.n());
    for (std::size_t i = 0; i < p.n(); ++i) {
      lf.config.at(i, 0) = p.at(i, 0);
      lf.config.at(i, 1) = p.at(i, 1);
      lf.config.at(i, 2) = scalar_from_json(z[i]);
    }
  }
  if (lf.config.n() != static_cast<std::size_t>(g.n())) bad("lift and graph differ in vertex count");
  if (j.contains("faces")) {
    FaceStructure fs = faces_from_json(j.at("faces"));
    fs.outer = j.contains("outer_face") ? j.at("outer_face").get<int>() - 1 : -1;
    lf.faces = fs;
  }
  return lf;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    bad(path + ": " + e.what());
  }
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    out += buf;
  }
  return out;
}

template Json configuration_to_json(const Configuration<Rational>&);
template Json configuration_to_json(const Configuration<double>&);
template Json edge_vector_to_json(const Graph&, const Vec<Rational>&);
template Json edge_vector_to_json(const Graph&, const Vec<double>&);
template Json lift_to_json(const LiftedFramework<Rational>&);
template Json lift_to_json(const LiftedFramework<double>&);

}  // namespace symstress
