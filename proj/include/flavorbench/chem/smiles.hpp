#pragma once

#include <cstddef>
#include <string>

#include "flavorbench/chem/molgraph.hpp"
#include "flavorbench/util/errors.hpp"

namespace flavorbench::chem {

class SmilesError : public DataError {
 public:
  SmilesError(const std::string& what, std::size_t offset)
      : DataError(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Practical subset: organic-subset atoms (C N O P S F Cl Br I, aromatic
// c n o s p), bracket atoms with charge and H count, branches, ring closures
// 1-9 and %nn, '.' component separators. Stereo markers (/ \ @) are accepted
// and ignored. Implicit hydrogens are resolved by standard valence
// (C4, N3, O2, S 2/4/6, P 3/5, halogens 1); bracket atoms carry an explicit
// H count (default 0). Errors name the 0-based character offset.
MolGraph parse_smiles(const std::string& smiles);

}  // namespace flavorbench::chem
