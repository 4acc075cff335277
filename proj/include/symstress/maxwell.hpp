#pragma once

#include "symstress/symmetry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symstress {

struct ConjugacyClass {
  Permutation representative;
  std::size_t size = 0;
  std::vector<Permutation> members;
};

struct Irrep {
  std::string label;
  int dim = 1;
  // 1 for absolutely irreducible characters; 2 for a real character that
  // merges a complex-conjugate pair (cyclic groups of order >= 3).
  int norm = 1;
  std::vector<double> chi;  // per class
};

struct CharacterTable {
  std::string group_label;
  std::size_t order = 0;
  std::vector<ConjugacyClass> classes;
  std::vector<Irrep> irreps;
};

struct CharacterVector {
  std::vector<double> values;  // per class, aligned with CharacterTable::classes
};

struct MaxwellReport {
  std::vector<std::string> labels;
  std::vector<long> alpha;
  std::vector<int> dims;
  int detected_s = 0;
  int detected_flexes = 0;
  std::vector<std::string> stress_types;  // irreps with alpha < 0, repeated |alpha| times
  std::vector<std::string> flex_types;
};

CharacterTable character_table(const SymmetryPair& pair);
// Rigidity character on the classes of character_table(pair).
CharacterVector rigidity_character(const SymmetryPair& pair, const CharacterTable& table);
CharacterVector rigidity_character(const SymmetryPair& pair);
MaxwellReport decompose(const CharacterVector& v, const CharacterTable& t);

struct ScanEntry {
  SymmetryPair pair;
  FilterVerdict filter;
  std::optional<MaxwellReport> report;  // absent for rejected pairs
};

struct Algorithm1Options {
  bool include_rejected = false;
  int jobs = 1;
};

std::vector<ScanEntry> algorithm1(const Graph& g, const Algorithm1Options& opt = {});

}  // namespace symstress
