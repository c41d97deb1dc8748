#pragma once

#include <string>

#include "nbrecon/graph_io.hpp"

namespace nbrecon::testing {

inline std::string fixture_path(const std::string& name) { return std::string(NBRECON_FIXTURE_DIR) + "/" + name + ".graph"; }

inline Graph fixture(const std::string& name) { return read_graph_file(fixture_path(name)); }

inline Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Permutation perm(std::initializer_list<int> images) { return Permutation::from_images(images); }

}  // namespace nbrecon::testing
