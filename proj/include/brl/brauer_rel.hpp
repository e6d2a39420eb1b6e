#pragma once

// Relation checker for the Brauer algebra, its affine extension and the
// degenerate (beta = 2) algebra, all realized as matrices over Z[beta]
// (plain Z for the degenerate case) on the span of link patterns.

#include <string>
#include <vector>

#include "brl/linkpat.hpp"

namespace brl {

enum class AlgebraKind { brauer, affine_brauer, degenerate };

struct RelationReport {
  struct Item {
    std::string relation;
    bool pass;
  };
  std::vector<Item> items;

  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
};

AlgebraKind parse_algebra(const std::string& name);  // brauer | affine | degenerate

RelationReport check_brauer_relations(int N, AlgebraKind kind);

}  // namespace brl
