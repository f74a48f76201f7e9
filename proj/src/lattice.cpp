#include "finring/lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace finring {

SubringLattice subring_lattice(const Extension& ext) {
  const FiniteRing& t = *ext.big;
  if (t.order() > kLatticeMaxOrder) throw CapExceeded("export_lattice", t.order(), kLatticeMaxOrder);

  // Breadth-first over single adjunctions reaches the closure of the base with
  // every subset of outside elements.
  std::map<Mask, std::vector<Elem>> found{{ext.image, {}}};
  std::vector<Mask> queue{ext.image};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Mask current = queue[i];
    const std::vector<Elem> gens = found[current];
    for (Elem x = 0; x < t.order(); ++x) {
      if (current.test(x)) continue;
      const Elem g[] = {x};
      Mask next = closure(t, current, g);
      if (found.contains(next)) continue;
      std::vector<Elem> next_gens = gens;
      next_gens.push_back(x);
      found.emplace(next, std::move(next_gens));
      queue.push_back(std::move(next));
    }
  }

  SubringLattice lattice;
  for (auto& [mask, gens] : found) lattice.nodes.push_back(LatticeNode{mask, gens});
  std::stable_sort(lattice.nodes.begin(), lattice.nodes.end(), [](const LatticeNode& a, const LatticeNode& b) {
    const auto ca = a.members.count(), cb = b.members.count();
    if (ca != cb) return ca < cb;
    return a.members < b.members;
  });

  const std::size_t n = lattice.nodes.size();
  auto strictly_below = [&](std::size_t i, std::size_t j) {
    return i != j && lattice.nodes[i].members.subset_of(lattice.nodes[j].members) &&
           lattice.nodes[i].members != lattice.nodes[j].members;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!strictly_below(i, j)) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k) covered = !(strictly_below(i, k) && strictly_below(k, j));
      if (covered) lattice.covers.emplace_back(i, j);
    }
  return lattice;
}

std::string lattice_dot(const SubringLattice& lattice, const std::string& title) {
  std::ostringstream out;
  out << "digraph \"" << title << "\" {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (std::size_t i = 0; i < lattice.nodes.size(); ++i) {
    const LatticeNode& node = lattice.nodes[i];
    out << "  n" << i << " [label=\"order " << node.members.count() << "\\nR";
    if (!node.generators.empty()) {
      out << "[";
      for (std::size_t g = 0; g < node.generators.size(); ++g) out << (g ? "," : "") << node.generators[g];
      out << "]";
    }
    out << "\"];\n";
  }
  for (auto [lo, hi] : lattice.covers) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_lattice(const Extension& ext, const std::string& title) {
  return lattice_dot(subring_lattice(ext), title);
}

}  // namespace finring
