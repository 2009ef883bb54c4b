#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flavorbench/chem/molgraph.hpp"

namespace flavorbench::chem {

// Substructure pattern notation, a small SMARTS-flavored dialect:
//   C, O, Cl ...    aliphatic element        c, n, o, s, p   aromatic element
//   *               any atom
//   [...]           constrained atom: element alternatives separated by ','
//                   (uppercase aliphatic, lowercase aromatic, #<num> = element
//                   by atomic number with either aromaticity), plus
//                   D<n> heavy-atom degree, H<n> total hydrogen count,
//                   +/-<n> formal charge
//   - = # :         explicit bond orders; an unwritten bond is aromatic when
//                   both pattern atoms are aromatic-only, single otherwise
//   ( ) 1-9 %nn     branches and ring closures as in the molecule notation
struct PatternAtom {
  struct Alternative {
    std::string element;
    enum class Aromaticity { Any, Aromatic, Aliphatic } aromaticity = Aromaticity::Aliphatic;
  };
  bool any_element = false;
  std::vector<Alternative> alternatives;
  std::optional<int> heavy_degree;
  std::optional<int> hydrogens;
  std::optional<int> charge;
};

struct PatternBond {
  int a = 0;
  int b = 0;
  BondOrder order = BondOrder::Single;
};

struct PatternGraph {
  std::vector<PatternAtom> atoms;
  std::vector<PatternBond> bonds;
};

PatternGraph parse_pattern(const std::string& pattern);

bool atom_matches(const PatternAtom& pattern, const Atom& atom, int heavy_degree);

// All embeddings of the pattern into the molecule, reported as sorted,
// deduplicated sets of molecule atom indices.
std::vector<std::vector<int>> match_pattern(const PatternGraph& pattern, const MolGraph& mol);

}  // namespace flavorbench::chem
