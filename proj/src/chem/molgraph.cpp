#include "flavorbench/chem/molgraph.hpp"

#include <algorithm>
#include <functional>

namespace flavorbench::chem {

const Bond* MolGraph::bond_between(int a, int b) const {
  for (const int bond_index : adjacency[a]) {
    const Bond& bond = bonds[bond_index];
    if ((bond.a == a && bond.b == b) || (bond.a == b && bond.b == a)) return &bond;
  }
  return nullptr;
}

void mark_rings(MolGraph& graph) {
  // A bond is in a ring iff it is not a bridge (Tarjan lowlink).
  const int n = static_cast<int>(graph.atoms.size());
  std::vector<int> discovery(n, -1), low(n, 0);
  int timer = 0;

  std::function<void(int, int)> dfs = [&](int atom, int parent_bond) {
    discovery[atom] = low[atom] = timer++;
    for (const int bond_index : graph.adjacency[atom]) {
      if (bond_index == parent_bond) continue;
      const int next = graph.other_end(bond_index, atom);
      if (discovery[next] == -1) {
        dfs(next, bond_index);
        low[atom] = std::min(low[atom], low[next]);
        if (low[next] <= discovery[atom]) graph.bonds[bond_index].in_ring = true;
      } else {
        low[atom] = std::min(low[atom], discovery[next]);
        if (discovery[next] < discovery[atom]) graph.bonds[bond_index].in_ring = true;
      }
    }
  };
  for (int atom = 0; atom < n; ++atom) {
    if (discovery[atom] == -1) dfs(atom, -1);
  }
  for (auto& atom : graph.atoms) atom.in_ring = false;
  for (const auto& bond : graph.bonds) {
    if (bond.in_ring) {
      graph.atoms[bond.a].in_ring = true;
      graph.atoms[bond.b].in_ring = true;
    }
  }
}

bool has_aromatic_ring(const MolGraph& graph, std::vector<std::vector<int>>* sites) {
  // Consider the subgraph of aromatic bonds; a connected component with as
  // many edges as vertices (or more) contains a cycle.
  const int n = static_cast<int>(graph.atoms.size());
  std::vector<int> component(n, -1);
  int component_count = 0;
  for (int start = 0; start < n; ++start) {
    if (component[start] != -1) continue;
    component[start] = component_count;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int atom = stack.back();
      stack.pop_back();
      for (const int bond_index : graph.adjacency[atom]) {
        if (graph.bonds[bond_index].order != BondOrder::Aromatic) continue;
        const int next = graph.other_end(bond_index, atom);
        if (component[next] == -1) {
          component[next] = component_count;
          stack.push_back(next);
        }
      }
    }
    ++component_count;
  }

  std::vector<int> vertex_count(component_count, 0), edge_count(component_count, 0);
  for (int atom = 0; atom < n; ++atom) vertex_count[component[atom]]++;
  for (const auto& bond : graph.bonds) {
    if (bond.order == BondOrder::Aromatic) edge_count[component[bond.a]]++;
  }

  bool found = false;
  for (int c = 0; c < component_count; ++c) {
    if (vertex_count[c] >= 3 && edge_count[c] >= vertex_count[c]) {
      found = true;
      if (sites != nullptr) {
        std::vector<int> atoms;
        for (int atom = 0; atom < n; ++atom) {
          if (component[atom] == c) atoms.push_back(atom);
        }
        sites->push_back(std::move(atoms));
      }
    }
  }
  return found;
}

}  // namespace flavorbench::chem
