#pragma once

#include <sstream>
#include <string>

#include "tormap/torusmap.hpp"

namespace tormap::dot_export {

// Deterministic DOT rendering of the 1-skeleton: vertices in id order, then
// edges in id order, one per line.
inline std::string to_dot(const torusmap::ToroidalMap& m,
                          const std::string& name = "tormap") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  os << "  // tiling " << tilings::tag(m.tiling) << ", lattice "
     << to_csv(m.lattice) << "\n";
  for (std::size_t v = 0; v < m.vertices.size(); ++v) os << "  v" << v << ";\n";
  for (const auto& e : m.edges)
    os << "  v" << e.v1 << " -- v" << e.v2 << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace tormap::dot_export
