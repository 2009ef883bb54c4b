#include "flavorbench/chem/smiles.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <optional>

namespace flavorbench::chem {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

struct RingOpening {
  int atom = -1;
  std::optional<BondOrder> order;
  std::size_t offset = 0;
};

struct Parser {
  const std::string& source;
  std::size_t pos = 0;
  MolGraph graph;
  int prev_atom = -1;
  std::optional<BondOrder> pending_bond;
  std::size_t pending_bond_offset = 0;
  std::vector<std::pair<int, std::size_t>> branch_stack;  // (atom, '(' offset)
  std::map<int, RingOpening> open_rings;

  [[noreturn]] void fail(const std::string& what, std::size_t offset) const {
    throw SmilesError(what, offset);
  }

  int add_atom(Atom atom) {
    graph.atoms.push_back(std::move(atom));
    graph.adjacency.emplace_back();
    return static_cast<int>(graph.atoms.size()) - 1;
  }

  void add_bond(int a, int b, BondOrder order, std::size_t offset) {
    if (a == b) fail("ring closure bonds an atom to itself", offset);
    if (graph.bond_between(a, b) != nullptr) fail("duplicate bond", offset);
    Bond bond{a, b, order, false};
    graph.bonds.push_back(bond);
    const int bond_index = static_cast<int>(graph.bonds.size()) - 1;
    graph.adjacency[a].push_back(bond_index);
    graph.adjacency[b].push_back(bond_index);
  }

  BondOrder default_order(int a, int b) const {
    return graph.atoms[a].aromatic && graph.atoms[b].aromatic ? BondOrder::Aromatic
                                                              : BondOrder::Single;
  }

  void attach(int atom, std::size_t offset) {
    if (prev_atom >= 0) {
      const BondOrder order = pending_bond.value_or(default_order(prev_atom, atom));
      add_bond(prev_atom, atom, order, offset);
    } else if (pending_bond) {
      fail("bond symbol with no preceding atom", pending_bond_offset);
    }
    pending_bond.reset();
    prev_atom = atom;
  }

  void ring_closure(int digit, std::size_t offset) {
    if (prev_atom < 0) fail("ring-closure digit before any atom", offset);
    const auto it = open_rings.find(digit);
    if (it == open_rings.end()) {
      open_rings[digit] = {prev_atom, pending_bond, offset};
      pending_bond.reset();
      return;
    }
    const RingOpening opening = it->second;
    open_rings.erase(it);
    std::optional<BondOrder> order = opening.order;
    if (pending_bond) {
      if (order && *order != *pending_bond) fail("ring bond order mismatch", offset);
      order = pending_bond;
    }
    pending_bond.reset();
    add_bond(opening.atom, prev_atom,
             order.value_or(default_order(opening.atom, prev_atom)), offset);
  }

  // Element token at pos; handles two-letter Cl/Br and aromatic lowercase.
  Atom read_organic_atom() {
    const std::size_t offset = pos;
    const char c = source[pos];
    Atom atom;
    if (c == 'C' && pos + 1 < source.size() && source[pos + 1] == 'l') {
      atom.element = "Cl";
      pos += 2;
      return atom;
    }
    if (c == 'B' && pos + 1 < source.size() && source[pos + 1] == 'r') {
      atom.element = "Br";
      pos += 2;
      return atom;
    }
    switch (c) {
      case 'C': case 'N': case 'O': case 'P': case 'S': case 'F': case 'I':
        atom.element = std::string(1, c);
        ++pos;
        return atom;
      case 'c': case 'n': case 'o': case 'p': case 's':
        atom.element = std::string(1, static_cast<char>(std::toupper(c)));
        atom.aromatic = true;
        ++pos;
        return atom;
      default:
        fail(std::string("unknown element token '") + c + "'", offset);
    }
  }

  Atom read_bracket_atom() {
    const std::size_t open_offset = pos;
    ++pos;  // consume '['
    if (pos >= source.size()) fail("unbalanced brackets", open_offset);
    if (is_digit(source[pos])) fail("isotope specifications are not supported", pos);

    Atom atom = read_organic_atom();
    atom.hydrogens = 0;  // bracket atoms: explicit H count only
    bool explicit_h = false;

    while (pos < source.size() && source[pos] != ']') {
      const char c = source[pos];
      if (c == '@') {
        ++pos;  // chirality ignored
      } else if (c == 'H') {
        if (explicit_h) fail("repeated H count", pos);
        explicit_h = true;
        ++pos;
        int count = 1;
        if (pos < source.size() && is_digit(source[pos])) {
          count = source[pos] - '0';
          ++pos;
        }
        atom.hydrogens = count;
      } else if (c == '+' || c == '-') {
        const int sign = c == '+' ? 1 : -1;
        ++pos;
        int magnitude = 1;
        if (pos < source.size() && is_digit(source[pos])) {
          magnitude = source[pos] - '0';
          ++pos;
        } else {
          while (pos < source.size() && source[pos] == c) {
            ++magnitude;
            ++pos;
          }
        }
        atom.charge = sign * magnitude;
      } else {
        fail(std::string("unexpected character '") + c + "' in bracket atom", pos);
      }
    }
    if (pos >= source.size()) fail("unbalanced brackets", open_offset);
    ++pos;  // consume ']'
    atom.hydrogens = explicit_h ? atom.hydrogens : 0;
    return atom;
  }

  void run() {
    while (pos < source.size()) {
      const char c = source[pos];
      const std::size_t offset = pos;
      if (c == '(') {
        if (prev_atom < 0) fail("branch before any atom", offset);
        branch_stack.emplace_back(prev_atom, offset);
        ++pos;
      } else if (c == ')') {
        if (branch_stack.empty()) fail("unbalanced parentheses", offset);
        prev_atom = branch_stack.back().first;
        branch_stack.pop_back();
        ++pos;
      } else if (c == '-' || c == '=' || c == '#' || c == ':' || c == '/' || c == '\\') {
        if (pending_bond) fail("consecutive bond symbols", offset);
        switch (c) {
          case '=': pending_bond = BondOrder::Double; break;
          case '#': pending_bond = BondOrder::Triple; break;
          case ':': pending_bond = BondOrder::Aromatic; break;
          default: pending_bond = BondOrder::Single; break;  // '-' and stereo slashes
        }
        pending_bond_offset = offset;
        ++pos;
      } else if (c == '.') {
        if (pending_bond) fail("bond symbol before component separator", offset);
        prev_atom = -1;
        ++pos;
      } else if (is_digit(c)) {
        ring_closure(c - '0', offset);
        ++pos;
      } else if (c == '%') {
        if (pos + 2 >= source.size() || !is_digit(source[pos + 1]) || !is_digit(source[pos + 2])) {
          fail("'%' must be followed by two digits", offset);
        }
        ring_closure((source[pos + 1] - '0') * 10 + (source[pos + 2] - '0'), offset);
        pos += 3;
      } else if (c == '[') {
        Atom atom = read_bracket_atom();
        const int index = add_atom(std::move(atom));
        bracket_atoms.push_back(index);
        attach(index, offset);
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        Atom atom = read_organic_atom();
        const int index = add_atom(std::move(atom));
        attach(index, offset);
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        fail("whitespace inside SMILES", offset);
      } else {
        fail(std::string("unknown token '") + c + "'", offset);
      }
    }

    if (!branch_stack.empty()) fail("unbalanced parentheses", branch_stack.back().second);
    if (!open_rings.empty()) {
      std::size_t first_offset = std::string::npos;
      for (const auto& [digit, opening] : open_rings) {
        first_offset = std::min(first_offset, opening.offset);
      }
      fail("unpaired ring-closure digit", first_offset);
    }
    if (pending_bond) fail("dangling bond symbol", pending_bond_offset);
    if (graph.atoms.empty()) fail("empty SMILES", 0);
  }

  std::vector<int> bracket_atoms;
};

int smallest_valence_at_least(const std::string& element, int degree) {
  static const std::map<std::string, std::vector<int>> valences = {
      {"C", {4}}, {"N", {3}}, {"O", {2}}, {"S", {2, 4, 6}}, {"P", {3, 5}},
      {"F", {1}}, {"Cl", {1}}, {"Br", {1}}, {"I", {1}},
  };
  const auto it = valences.find(element);
  if (it == valences.end()) return degree;
  for (const int valence : it->second) {
    if (valence >= degree) return valence;
  }
  return it->second.back();
}

void resolve_implicit_hydrogens(MolGraph& graph, const std::vector<int>& bracket_atoms) {
  std::vector<bool> is_bracket(graph.atoms.size(), false);
  for (const int index : bracket_atoms) is_bracket[index] = true;

  for (std::size_t i = 0; i < graph.atoms.size(); ++i) {
    if (is_bracket[i]) continue;  // explicit count (possibly zero) already set
    double order_sum = 0.0;
    for (const int bond_index : graph.adjacency[i]) {
      switch (graph.bonds[bond_index].order) {
        case BondOrder::Single: order_sum += 1.0; break;
        case BondOrder::Double: order_sum += 2.0; break;
        case BondOrder::Triple: order_sum += 3.0; break;
        case BondOrder::Aromatic: order_sum += 1.5; break;
      }
    }
    const int degree = static_cast<int>(std::lround(order_sum));
    const int valence = smallest_valence_at_least(graph.atoms[i].element, degree);
    graph.atoms[i].hydrogens = std::max(0, valence - degree);
  }
}

}  // namespace

MolGraph parse_smiles(const std::string& smiles) {
  if (smiles.empty()) throw SmilesError("empty SMILES", 0);
  Parser parser{smiles};
  parser.run();
  MolGraph graph = std::move(parser.graph);
  resolve_implicit_hydrogens(graph, parser.bracket_atoms);
  mark_rings(graph);
  return graph;
}

}  // namespace flavorbench::chem
