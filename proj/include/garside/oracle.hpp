#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "garside/context.hpp"

namespace garside {

enum class OracleAnswer { kYes, kNo, kInconclusive };

struct OracleCaps {
  std::size_t max_length = 12;
  std::size_t max_class = 50000;
};

// Outcome of the bounded congruence closure, reporting which caps fired.
struct OracleReport {
  OracleAnswer answer = OracleAnswer::kInconclusive;
  bool length_capped = false;
  bool class_capped = false;
  std::size_t class_size = 0;
};

// Decides whether two positive words from the same object are equal in the
// groupoid by saturating the rewrite closure of u under elementary relations,
// applied in both directions at any position, within the caps. Words are arc
// id sequences read from the source object. Answers no only when the closure
// is provably complete; never calls the word reversing engine.
OracleReport oracle_equal(Context& ctx, const std::string& source,
                          const std::vector<int>& u, const std::vector<int>& v,
                          const OracleCaps& caps = {});

// A reference poset given by its covering digraph.
struct OracleLattice {
  std::vector<std::string> elements;
  std::vector<std::pair<int, int>> covers;  // (lower, upper)
};

// The right weak order on permutations of 0..n-1, covers given by adjacent
// transpositions that add one inversion.
OracleLattice weak_order(int n);

// The Tamari lattice on binary trees with k internal nodes, covers given by
// one right rotation ((ab)c -> a(bc)).
OracleLattice classical_tamari(int k);

// Hasse digraph isomorphism, decided by color refinement plus backtracking.
bool order_isomorphic(const OracleLattice& a, const OracleLattice& b);

}  // namespace garside
