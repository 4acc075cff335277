#include "symstress/maxwell.hpp"

#include "symstress/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace symstress {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kIntegralTol = 1e-6;

int parity_of(const Rational& integral) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), integral.get_num_mpz_t(), 2);
  return static_cast<int>(r.get_si());
}

std::vector<std::string> e_labels(int count) {
  if (count == 1) return {"E"};
  std::vector<std::string> out;
  for (int l = 1; l <= count; ++l) out.push_back("E" + std::to_string(l));
  return out;
}

}  // namespace

CharacterTable character_table(const SymmetryPair& pair) {
  CharacterTable t;
  t.group_label = pair.label;
  t.order = pair.group.order();
  for (auto& members : conjugacy_classes(pair.group)) {
    ConjugacyClass c;
    c.representative = members.front();
    c.size = members.size();
    c.members = std::move(members);
    t.classes.push_back(std::move(c));
  }
  const int q = pair.rotation_order;
  const bool dihedral = pair.has_reflection();
  Rational a0 = 0;
  for (std::size_t e = 0; e < pair.images.size(); ++e)
    if (pair.images[e].is_reflection()) {
      a0 = pair.images[e].angle();
      break;
    }

  auto add = [&](std::string label, int dim, auto chi_of) {
    Irrep ir;
    ir.label = std::move(label);
    ir.dim = dim;
    for (const auto& c : t.classes) ir.chi.push_back(chi_of(pair.tau(c.representative)));
    double sq = 0;
    for (std::size_t k = 0; k < t.classes.size(); ++k)
      sq += static_cast<double>(t.classes[k].size) * ir.chi[k] * ir.chi[k];
    ir.norm = static_cast<int>(std::lround(sq / static_cast<double>(t.order)));
    t.irreps.push_back(std::move(ir));
  };
  auto rot_sign = [q](const OrthogonalElement& e) {
    Rational tq = e.angle() * q;
    return parity_of(tq) ? -1.0 : 1.0;
  };
  auto refl_sign = [q, a0](const OrthogonalElement& e) {
    Rational m = (e.angle() - a0) * (2 * q);
    return parity_of(m) ? -1.0 : 1.0;
  };
  const int ecount = (q - 1) / 2;
  auto elabels = e_labels(ecount);

  if (dihedral && q == 1) {
    add("A'", 1, [](const OrthogonalElement&) { return 1.0; });
    add("A''", 1, [](const OrthogonalElement& e) { return e.is_reflection() ? -1.0 : 1.0; });
    return t;
  }
  if (!dihedral) {
    add("A", 1, [](const OrthogonalElement&) { return 1.0; });
    if (q % 2 == 0) add("B", 1, rot_sign);
  } else {
    add("A1", 1, [](const OrthogonalElement&) { return 1.0; });
    add("A2", 1, [](const OrthogonalElement& e) { return e.is_reflection() ? -1.0 : 1.0; });
    if (q % 2 == 0) {
      add("B1", 1, [&](const OrthogonalElement& e) { return e.is_reflection() ? refl_sign(e) : rot_sign(e); });
      add("B2", 1, [&](const OrthogonalElement& e) { return e.is_reflection() ? -refl_sign(e) : rot_sign(e); });
    }
  }
  for (int l = 1; l <= ecount; ++l)
    add(elabels[static_cast<std::size_t>(l - 1)], 2, [l](const OrthogonalElement& e) {
      if (e.is_reflection()) return 0.0;
      return 2.0 * std::cos(kTwoPi * l * e.angle().get_d());
    });
  return t;
}

CharacterVector rigidity_character(const SymmetryPair& pair, const CharacterTable& table) {
  CharacterVector v;
  for (const auto& c : table.classes) {
    const auto& img = pair.tau(c.representative);
    auto fx = fixed_elements(c.representative, pair.graph);
    double chi_t = img.trace();
    double chi_rot = img.is_rotation() ? 1.0 : -1.0;
    v.values.push_back(static_cast<double>(fx.vertices.size()) * chi_t - static_cast<double>(fx.edges.size()) -
                       (chi_t + chi_rot));
  }
  return v;
}

CharacterVector rigidity_character(const SymmetryPair& pair) { return rigidity_character(pair, character_table(pair)); }

MaxwellReport decompose(const CharacterVector& v, const CharacterTable& t) {
  MaxwellReport r;
  std::vector<double> rebuilt(t.classes.size(), 0.0);
  for (const auto& ir : t.irreps) {
    double s = 0;
    for (std::size_t k = 0; k < t.classes.size(); ++k)
      s += static_cast<double>(t.classes[k].size) * v.values[k] * ir.chi[k];
    double a = s / (static_cast<double>(t.order) * ir.norm);
    long ai = std::lround(a);
    if (std::abs(a - static_cast<double>(ai)) > kIntegralTol)
      throw DomainError("NonIntegralCoefficient", "irrep " + ir.label + " has coefficient " + std::to_string(a));
    r.labels.push_back(ir.label);
    r.alpha.push_back(ai);
    r.dims.push_back(ir.dim);
    for (std::size_t k = 0; k < t.classes.size(); ++k) rebuilt[k] += static_cast<double>(ai) * ir.chi[k];
    if (ai < 0) {
      r.detected_s += static_cast<int>(-ai) * ir.dim;
      for (long j = 0; j < -ai; ++j) r.stress_types.push_back(ir.label);
    } else if (ai > 0) {
      r.detected_flexes += static_cast<int>(ai) * ir.dim;
      for (long j = 0; j < ai; ++j) r.flex_types.push_back(ir.label);
    }
  }
  for (std::size_t k = 0; k < t.classes.size(); ++k)
    if (std::abs(rebuilt[k] - v.values[k]) > kIntegralTol * (1 + std::abs(v.values[k])))
      throw DomainError("NonIntegralCoefficient", "character is not a combination of the table rows");
  return r;
}

std::vector<ScanEntry> algorithm1(const Graph& g, const Algorithm1Options& opt) {
  auto aut = automorphism_group(g);
  std::vector<SymmetryPair> pairs;
  for (const auto& h : subgroups(aut))
    for (auto& p : enumerate_faithful_reps(g, h)) pairs.push_back(std::move(p));

  auto entries = parallel_map<ScanEntry>(pairs.size(), opt.jobs, [&](std::size_t i) {
    ScanEntry e;
    e.pair = pairs[i];
    e.filter = degeneracy_filter(e.pair);
    if (e.filter.accepted) {
      auto table = character_table(e.pair);
      e.report = decompose(rigidity_character(e.pair, table), table);
    }
    return e;
  });
  if (!opt.include_rejected)
    entries.erase(std::remove_if(entries.begin(), entries.end(), [](const ScanEntry& e) { return !e.filter.accepted; }),
                  entries.end());
  auto key = [](const ScanEntry& e) {
    std::vector<std::vector<int>> gens;
    for (const auto& p : e.pair.generators) gens.push_back(p.one_based());
    return std::make_tuple(e.filter.accepted ? 0 : 1, e.report ? -e.report->detected_s : 0, e.pair.group.order(),
                           e.pair.label, gens, e.pair.rotation_index);
  };
  std::stable_sort(entries.begin(), entries.end(),
                   [&](const ScanEntry& a, const ScanEntry& b) { return key(a) < key(b); });
  return entries;
}

}  // namespace symstress
