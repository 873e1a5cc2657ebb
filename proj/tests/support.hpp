#pragma once

#include <string>
#include <vector>

#include "brauer/io.hpp"

namespace brauer::test {

inline PlaneTree ex_tree() { return read_tree_file(std::string(BRAUER_TEST_DATA) + "/ex_tree.json"); }

inline GVector gv(std::initializer_list<int> xs) { return GVector(xs); }

inline PlaneTree single_edge() { return line_tree(1); }

struct CorpusTree {
  std::string name;
  PlaneTree tree;
};

/// Every plane tree up to `exhaustive` edges, then seeded random trees.
inline std::vector<CorpusTree> corpus(std::size_t exhaustive, std::size_t random_6 = 0,
                                      std::size_t random_7 = 0, std::size_t random_8 = 0) {
  std::vector<CorpusTree> out;
  for (std::size_t n = 1; n <= exhaustive; ++n) {
    auto all = all_plane_trees(n);
    for (std::size_t i = 0; i < all.size(); ++i)
      out.push_back({"n" + std::to_string(n) + "#" + std::to_string(i), all[i]});
  }
  auto add_random = [&](std::size_t n, std::size_t count) {
    for (std::uint64_t s = 1; s <= count; ++s)
      out.push_back({"n" + std::to_string(n) + " seed " + std::to_string(s), random_tree(n, s)});
  };
  add_random(6, random_6);
  add_random(7, random_7);
  add_random(8, random_8);
  return out;
}

}  // namespace brauer::test
