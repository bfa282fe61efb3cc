#pragma once

#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

#include "garside/engine.hpp"
#include "garside/oracle.hpp"

namespace garside {

// The divisors of delta at one object, one canonical representative per
// class. Elements are ordered by cover distance from the bottom, ties broken
// by the representative's letters, so equal inputs render identically.
struct IntervalLattice {
  std::string base;
  std::vector<PositiveWord> elements;
  std::vector<std::tuple<int, int, int>> covers;  // (element, arc, element)
  int bottom = 0;
  int top = 0;
};

// Builds the interval by extending divisors one atom at a time. Throws
// CapExceeded past node_cap elements. With threads > 1 each breadth first
// layer is expanded by workers holding their own contexts; the output is
// identical to the single threaded run because elements are reordered by
// layer and letters at the end either way.
IntervalLattice interval(Engine& eng, const std::string& base_key,
                         std::size_t node_cap = 10000, int threads = 1);

struct LatticeCheck {
  bool is_lattice = false;      // unique bounds for every pair
  bool matches_engine = false;  // join and meet of representatives agree
  std::string detail;           // first failure, empty when both hold
};

// Checks the cover relation by brute force: antisymmetry, reduced covers,
// unique top and bottom, and a unique minimal upper bound and maximal lower
// bound per pair. When the order is a lattice, every pairwise bound is then
// compared against the engine's join and meet of the representatives.
LatticeCheck verify_lattice(Engine& eng, const IntervalLattice& lat);

// The interval order carried over to the objects of an all-threes labelling
// through the map sending a divisor class to its target object.
struct TamariOrder {
  std::string base;
  std::vector<std::string> objects;
  std::vector<std::tuple<int, int, int>> covers;  // (object, arc, object)
  int bottom = 0;
  int top = 0;
};

// Requires every label of the base to be three, and that divisor classes hit
// every object of the labelling exactly once.
TamariOrder tamari(Engine& eng, const std::string& base_key,
                   std::size_t node_cap = 10000, int threads = 1);

// Forgets labels and arcs, keeping the bare cover digraph for isomorphism
// comparisons against the reference lattices.
OracleLattice order_of(const IntervalLattice& lat);
OracleLattice order_of(const TamariOrder& order);

enum class HasseFormat { kDot, kJson };

// Deterministic Hasse diagram text: a digraph in DOT, or a JSON object with
// elements, covers, top, and bottom. Interval nodes are labelled by their
// representative letters, Tamari nodes by their canonical object keys.
std::string render_hasse(const IntervalLattice& lat, HasseFormat format);
std::string render_hasse(const TamariOrder& order, HasseFormat format);

// Writes render_hasse output to a file, throwing UsageError on failure.
void hasse_export(const IntervalLattice& lat, HasseFormat format,
                  const std::string& path);
void hasse_export(const TamariOrder& order, HasseFormat format,
                  const std::string& path);

}  // namespace garside
