#include "fixtures.hpp"

#include "symstress/io.hpp"
#include "symstress/pure_condition.hpp"
#include "symstress/svg.hpp"

#include <doctest.h>

using namespace symstress;

TEST_CASE("graph and configuration round trips") {
  Graph g = fx::prism();
  CHECK(graph_from_json(graph_to_json(g)) == g);
  auto p = fx::prism_desargues();
  auto j = configuration_to_json(p);
  CHECK(j["points"][0][1] == "-2/3");
  CHECK(configuration_from_json(j) == p);
  CHECK(configuration_from_json(Json::parse(R"({"points": [[0.5, 1], [2, "3/4"]]})")) ==
        fx::cfg({{"1/2", "1"}, {"2", "3/4"}}));
}

TEST_CASE("symmetry round trip") {
  Graph g = fx::prism();
  auto pair = make_symmetry_pair(g, {fx::cyc(6, {{1, 2, 3}, {4, 5, 6}}), fx::cyc(6, {{1, 2}, {4, 5}})},
                                 {OrthogonalElement::rotation(1, 3), OrthogonalElement::reflection_deg(90)});
  auto back = symmetry_from_json(g, symmetry_to_json(pair));
  CHECK(back.group == pair.group);
  CHECK(back.images == pair.images);
  CHECK(back.label == "C3v");
  CHECK_THROWS(symmetry_from_json(g, Json::parse(R"({"generators": [[2,1,3,4,5,6]], "images": [{"kind":"reflection","axis_deg":90}]})")));
}

TEST_CASE("polynomial round trip") {
  auto c = pure_condition(fx::k3());
  CHECK(poly_from_json(poly_to_json(c)) == c);
}

TEST_CASE("edge vectors accept both layouts") {
  Graph g = fx::k3();
  Vec<Rational> w = {1, Rational(-1, 2), 3};
  auto j = edge_vector_to_json(g, w);
  CHECK(edge_vector_from_json(g, j) == w);
  CHECK(edge_vector_from_json(g, Json::parse(R"([1, "-1/2", 3])")) == w);
  CHECK(edge_vector_from_json(g, Json::parse(R"({"weights": [1, "-1/2", 3]})")) == w);
  CHECK_THROWS(edge_vector_from_json(g, Json::parse(R"([1, 2])")));
  CHECK_THROWS(edge_vector_from_json(g, Json::parse(R"([{"edge": [1, 4], "w": 1}])")));
}

TEST_CASE("lift round trip") {
  Graph g = fx::prism();
  auto p = fx::prism_desargues();
  auto w = self_stress_basis(g, p).basis.front();
  auto lf = maxwell_cremona_lift(Framework<Rational>{g, p}, w);
  auto back = lift_from_json(g, lift_to_json(lf));
  CHECK(back.config == lf.config);
  REQUIRE(back.faces);
  CHECK(back.faces->faces == lf.faces->faces);
  CHECK(back.faces->outer == lf.faces->outer);
}

TEST_CASE("digest is standard SHA-256") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("svg colours edges by stress sign") {
  Graph g = fx::prism();
  auto p = to_double(fx::prism_desargues());
  Vec<double> w;
  auto exact_w = self_stress_basis(g, fx::prism_desargues()).basis.front();
  for (const auto& x : exact_w) w.push_back(x.get_d());
  auto svg = render_svg(g, p, w);
  auto count = [&](const std::string& s) {
    std::size_t c = 0;
    for (auto pos = svg.find(s); pos != std::string::npos; pos = svg.find(s, pos + 1)) ++c;
    return c;
  };
  CHECK(count("class=\"edge\"") == 9);
  CHECK(count("#d62828") + count("#1d4ed8") == 9);
  CHECK(count("#999999") == 0);
  auto zero = render_svg(g, p, Vec<double>(9, 0.0));
  std::size_t grey = 0;
  for (auto pos = zero.find("#999999"); pos != std::string::npos; pos = zero.find("#999999", pos + 1)) ++grey;
  CHECK(grey == 9);
  auto pair = fx::prism_mirror(g);
  CHECK(render_svg(g, p, std::nullopt, &pair).find("class=\"axis\"") != std::string::npos);
}
