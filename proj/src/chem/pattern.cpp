#include "flavorbench/chem/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "flavorbench/util/errors.hpp"

namespace flavorbench::chem {

namespace {

using Aromaticity = PatternAtom::Alternative::Aromaticity;

bool is_digit(char c) { return c >= '0' && c <= '9'; }

const std::map<int, std::string>& atomic_numbers() {
  static const std::map<int, std::string> table = {
      {5, "B"},  {6, "C"},  {7, "N"},  {8, "O"},  {9, "F"},
      {15, "P"}, {16, "S"}, {17, "Cl"}, {35, "Br"}, {53, "I"},
  };
  return table;
}

struct PatternParser {
  const std::string& source;
  std::size_t pos = 0;
  PatternGraph graph;
  int prev_atom = -1;
  std::optional<BondOrder> pending_bond;
  std::vector<int> branch_stack;
  std::map<int, std::pair<int, std::optional<BondOrder>>> open_rings;

  [[noreturn]] void fail(const std::string& what) const {
    throw DataError("pattern '" + source + "': " + what + " at offset " + std::to_string(pos));
  }

  bool aromatic_only(const PatternAtom& atom) const {
    if (atom.any_element || atom.alternatives.empty()) return false;
    return std::all_of(atom.alternatives.begin(), atom.alternatives.end(), [](const auto& alt) {
      return alt.aromaticity == Aromaticity::Aromatic;
    });
  }

  void add_bond(int a, int b, std::optional<BondOrder> order) {
    BondOrder resolved = order.value_or(
        aromatic_only(graph.atoms[a]) && aromatic_only(graph.atoms[b]) ? BondOrder::Aromatic
                                                                       : BondOrder::Single);
    graph.bonds.push_back({a, b, resolved});
  }

  void attach(int atom) {
    if (prev_atom >= 0) add_bond(prev_atom, atom, pending_bond);
    pending_bond.reset();
    prev_atom = atom;
  }

  void ring_closure(int digit) {
    if (prev_atom < 0) fail("ring-closure digit before any atom");
    const auto it = open_rings.find(digit);
    if (it == open_rings.end()) {
      open_rings[digit] = {prev_atom, pending_bond};
      pending_bond.reset();
      return;
    }
    auto [atom, order] = it->second;
    open_rings.erase(it);
    if (pending_bond) order = pending_bond;
    pending_bond.reset();
    add_bond(atom, prev_atom, order);
  }

  PatternAtom::Alternative read_element() {
    const char c = source[pos];
    PatternAtom::Alternative alternative;
    if (c == '#') {
      ++pos;
      int number = 0;
      if (pos >= source.size() || !is_digit(source[pos])) fail("'#' requires an atomic number");
      while (pos < source.size() && is_digit(source[pos])) {
        number = number * 10 + (source[pos] - '0');
        ++pos;
      }
      const auto it = atomic_numbers().find(number);
      if (it == atomic_numbers().end()) fail("unsupported atomic number " + std::to_string(number));
      alternative.element = it->second;
      alternative.aromaticity = Aromaticity::Any;
      return alternative;
    }
    if (std::isupper(static_cast<unsigned char>(c))) {
      alternative.element = std::string(1, c);
      ++pos;
      if (pos < source.size() && std::islower(static_cast<unsigned char>(source[pos])) &&
          (alternative.element + source[pos] == "Cl" || alternative.element + source[pos] == "Br")) {
        alternative.element += source[pos];
        ++pos;
      }
      alternative.aromaticity = Aromaticity::Aliphatic;
      return alternative;
    }
    if (c == 'c' || c == 'n' || c == 'o' || c == 's' || c == 'p') {
      alternative.element = std::string(1, static_cast<char>(std::toupper(c)));
      alternative.aromaticity = Aromaticity::Aromatic;
      ++pos;
      return alternative;
    }
    fail(std::string("unknown element token '") + c + "'");
  }

  int read_digit_after(char token) {
    ++pos;  // consume token letter
    int value = token == 'H' ? 1 : -1;
    if (pos < source.size() && is_digit(source[pos])) {
      value = source[pos] - '0';
      ++pos;
    } else if (value < 0) {
      fail(std::string("'") + token + "' requires a digit");
    }
    return value;
  }

  PatternAtom read_bracket_atom() {
    ++pos;  // consume '['
    PatternAtom atom;
    bool expect_element = true;
    while (pos < source.size() && source[pos] != ']') {
      const char c = source[pos];
      if (expect_element || c == ',') {
        if (c == ',') {
          ++pos;
          if (pos >= source.size()) break;
        }
        atom.alternatives.push_back(read_element());
        expect_element = false;
      } else if (c == 'D') {
        atom.heavy_degree = read_digit_after('D');
      } else if (c == 'H') {
        atom.hydrogens = read_digit_after('H');
      } else if (c == '+' || c == '-') {
        ++pos;
        int magnitude = 1;
        if (pos < source.size() && is_digit(source[pos])) {
          magnitude = source[pos] - '0';
          ++pos;
        }
        atom.charge = c == '+' ? magnitude : -magnitude;
      } else {
        fail(std::string("unexpected character '") + c + "' in bracket atom");
      }
    }
    if (pos >= source.size()) fail("unbalanced brackets");
    ++pos;  // consume ']'
    if (atom.alternatives.empty()) fail("bracket atom without an element");
    return atom;
  }

  void run() {
    while (pos < source.size()) {
      const char c = source[pos];
      if (c == '(') {
        if (prev_atom < 0) fail("branch before any atom");
        branch_stack.push_back(prev_atom);
        ++pos;
      } else if (c == ')') {
        if (branch_stack.empty()) fail("unbalanced parentheses");
        prev_atom = branch_stack.back();
        branch_stack.pop_back();
        ++pos;
      } else if (c == '-' || c == '=' || c == '#' || c == ':') {
        switch (c) {
          case '=': pending_bond = BondOrder::Double; break;
          case '#': pending_bond = BondOrder::Triple; break;
          case ':': pending_bond = BondOrder::Aromatic; break;
          default: pending_bond = BondOrder::Single; break;
        }
        ++pos;
      } else if (is_digit(c)) {
        ring_closure(c - '0');
        ++pos;
      } else if (c == '%') {
        if (pos + 2 >= source.size() || !is_digit(source[pos + 1]) || !is_digit(source[pos + 2])) {
          fail("'%' must be followed by two digits");
        }
        ring_closure((source[pos + 1] - '0') * 10 + (source[pos + 2] - '0'));
        pos += 3;
      } else if (c == '*') {
        PatternAtom atom;
        atom.any_element = true;
        graph.atoms.push_back(atom);
        attach(static_cast<int>(graph.atoms.size()) - 1);
        ++pos;
      } else if (c == '[') {
        graph.atoms.push_back(read_bracket_atom());
        attach(static_cast<int>(graph.atoms.size()) - 1);
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        PatternAtom atom;
        atom.alternatives.push_back(read_element());
        graph.atoms.push_back(atom);
        attach(static_cast<int>(graph.atoms.size()) - 1);
      } else {
        fail(std::string("unknown token '") + c + "'");
      }
    }
    if (!branch_stack.empty()) fail("unbalanced parentheses");
    if (!open_rings.empty()) fail("unpaired ring-closure digit");
    if (pending_bond) fail("dangling bond symbol");
    if (graph.atoms.empty()) fail("empty pattern");
  }
};

}  // namespace

PatternGraph parse_pattern(const std::string& pattern) {
  PatternParser parser{pattern};
  parser.run();
  return std::move(parser.graph);
}

bool atom_matches(const PatternAtom& pattern, const Atom& atom, int heavy_degree) {
  if (pattern.heavy_degree && *pattern.heavy_degree != heavy_degree) return false;
  if (pattern.hydrogens && *pattern.hydrogens != atom.hydrogens) return false;
  if (pattern.charge && *pattern.charge != atom.charge) return false;
  if (pattern.any_element) return true;
  for (const auto& alternative : pattern.alternatives) {
    if (alternative.element != atom.element) continue;
    switch (alternative.aromaticity) {
      case Aromaticity::Any: return true;
      case Aromaticity::Aromatic: if (atom.aromatic) return true; break;
      case Aromaticity::Aliphatic: if (!atom.aromatic) return true; break;
    }
  }
  return false;
}

namespace {

struct Matcher {
  const PatternGraph& pattern;
  const MolGraph& mol;
  std::vector<std::vector<std::pair<int, BondOrder>>> pattern_adjacency;
  std::vector<int> order;           // pattern atoms in DFS visit order
  std::vector<int> assignment;      // pattern atom -> molecule atom (-1 unset)
  std::vector<bool> used;           // molecule atom taken
  std::set<std::vector<int>> sites;

  explicit Matcher(const PatternGraph& p, const MolGraph& m) : pattern(p), mol(m) {
    pattern_adjacency.resize(pattern.atoms.size());
    for (const auto& bond : pattern.bonds) {
      pattern_adjacency[bond.a].emplace_back(bond.b, bond.order);
      pattern_adjacency[bond.b].emplace_back(bond.a, bond.order);
    }
    // DFS order so every atom after the first connects to an earlier one;
    // taxonomy patterns are connected.
    std::vector<bool> visited(pattern.atoms.size(), false);
    std::vector<int> stack{0};
    while (!stack.empty()) {
      const int atom = stack.back();
      stack.pop_back();
      if (visited[atom]) continue;
      visited[atom] = true;
      order.push_back(atom);
      for (const auto& [next, bond_order] : pattern_adjacency[atom]) {
        if (!visited[next]) stack.push_back(next);
      }
    }
    if (order.size() != pattern.atoms.size()) {
      throw DataError("pattern graph must be connected");
    }
    assignment.assign(pattern.atoms.size(), -1);
    used.assign(mol.atoms.size(), false);
  }

  bool bonds_consistent(int pattern_atom, int mol_atom) const {
    for (const auto& [other, required_order] : pattern_adjacency[pattern_atom]) {
      const int mapped = assignment[other];
      if (mapped < 0) continue;
      const Bond* bond = mol.bond_between(mol_atom, mapped);
      if (bond == nullptr || bond->order != required_order) return false;
    }
    return true;
  }

  void extend(std::size_t depth) {
    if (depth == order.size()) {
      std::vector<int> site(assignment.begin(), assignment.end());
      std::sort(site.begin(), site.end());
      sites.insert(std::move(site));
      return;
    }
    const int pattern_atom = order[depth];
    // Anchor on any already-mapped neighbor to bound the candidate set.
    int anchor = -1;
    for (const auto& [other, bond_order] : pattern_adjacency[pattern_atom]) {
      if (assignment[other] >= 0) {
        anchor = assignment[other];
        break;
      }
    }
    if (anchor < 0) {
      for (int candidate = 0; candidate < static_cast<int>(mol.atoms.size()); ++candidate) {
        try_candidate(pattern_atom, candidate, depth);
      }
    } else {
      for (const int bond_index : mol.adjacency[anchor]) {
        try_candidate(pattern_atom, mol.other_end(bond_index, anchor), depth);
      }
    }
  }

  void try_candidate(int pattern_atom, int mol_atom, std::size_t depth) {
    if (used[mol_atom]) return;
    if (!atom_matches(pattern.atoms[pattern_atom], mol.atoms[mol_atom],
                      mol.heavy_degree(mol_atom))) {
      return;
    }
    if (!bonds_consistent(pattern_atom, mol_atom)) return;
    assignment[pattern_atom] = mol_atom;
    used[mol_atom] = true;
    extend(depth + 1);
    used[mol_atom] = false;
    assignment[pattern_atom] = -1;
  }
};

}  // namespace

std::vector<std::vector<int>> match_pattern(const PatternGraph& pattern, const MolGraph& mol) {
  if (pattern.atoms.empty() || mol.atoms.empty()) return {};
  Matcher matcher(pattern, mol);
  matcher.extend(0);
  return {matcher.sites.begin(), matcher.sites.end()};
}

}  // namespace flavorbench::chem
