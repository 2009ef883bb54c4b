#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace flavorbench::chem {

enum class BondOrder : std::uint8_t { Single = 1, Double = 2, Triple = 3, Aromatic = 4 };

struct Atom {
  std::string element;
  bool aromatic = false;
  int charge = 0;
  int hydrogens = 0;   // total H count after valence resolution
  bool in_ring = false;
};

struct Bond {
  int a = 0;
  int b = 0;
  BondOrder order = BondOrder::Single;
  bool in_ring = false;
};

struct MolGraph {
  std::vector<Atom> atoms;
  std::vector<Bond> bonds;
  std::vector<std::vector<int>> adjacency;  // atom index -> incident bond indices

  int heavy_degree(int atom) const { return static_cast<int>(adjacency[atom].size()); }
  int other_end(int bond, int atom) const {
    return bonds[bond].a == atom ? bonds[bond].b : bonds[bond].a;
  }
  const Bond* bond_between(int a, int b) const;
};

// Marks ring bonds (non-bridges) and ring atoms. Called by the parser; also
// usable on hand-built graphs.
void mark_rings(MolGraph& graph);

// True when some cycle consists entirely of aromatic bonds. Each cyclic
// aromatic component's atom set is appended to `sites` when non-null.
bool has_aromatic_ring(const MolGraph& graph, std::vector<std::vector<int>>* sites = nullptr);

}  // namespace flavorbench::chem
