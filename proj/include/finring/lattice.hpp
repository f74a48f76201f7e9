#pragma once

#include <string>
#include <utility>
#include <vector>

#include "finring/extension.hpp"

namespace finring {

inline constexpr std::size_t kLatticeMaxOrder = 16;

struct LatticeNode {
  Mask members;
  std::vector<Elem> generators;  // elements of T adjoined to the base ring
};

/// Every subring between the base image and T, ordered by (size, members),
/// with the covering pairs (lower, upper) of the containment order.
struct SubringLattice {
  std::vector<LatticeNode> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
};

/// Throws CapExceeded when |T| > kLatticeMaxOrder.
SubringLattice subring_lattice(const Extension& ext);

/// DOT digraph of the Hasse diagram, one node per subring labeled with its
/// order and generators, edges for covering relations only.
std::string lattice_dot(const SubringLattice& lattice, const std::string& title);

/// subring_lattice followed by lattice_dot.
std::string export_lattice(const Extension& ext, const std::string& title = "lattice");

}  // namespace finring
