#pragma once

#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

#include "garside/context.hpp"

namespace garside {

// The four shapes of elementary relation between two atoms at one object:
//   ER1: square, the arcs interact through no common region or only through
//        a region that keeps them apart (sides two letters each).
//   ER2: the square case where one of the arcs cuts off a bigon; only the
//        tag differs from ER1, the algebra is the same.
//   ER3: pentagon, the arcs are adjacent around exactly one common region
//        on one side (sides two and three letters).
//   ER4: hexagon, parallel arcs around a common bigon (sides three letters).
enum class RelationKind { ER1, ER2, ER3, ER4 };

const char* relation_kind_name(RelationKind k);

// One elementary relation: a followed by a_tail equals b followed by b_tail,
// both composable words from the shared source of a and b to a shared target.
struct ElementaryRelation {
  RelationKind kind;
  Move a;
  Move b;
  std::vector<Move> a_tail;
  std::vector<Move> b_tail;
};

// Builds the unique elementary relation whose sides start with the atoms
// rotating arc_a and arc_b at the given object. The dispatch is purely local
// (how the two arcs sit around their regions); the result is checked for
// equal endpoints and equal weight sums before it is returned.
ElementaryRelation complement(Context& ctx, const std::string& source_key,
                              int arc_a, int arc_b);

// The relation closure spanned by a set of atoms at one object. Nodes are
// word classes labelled with object keys; edges (from, arc, to) are atomic
// moves. The base node carries one outgoing edge per chosen arc, every pair
// of outgoing edges anywhere is closed by its elementary relation, and
// matching edges force identifications. Nodes are numbered by breadth first
// search from the base, following edges in arc order.
struct CharacteristicGraph {
  std::vector<std::string> node_keys;
  std::vector<std::tuple<int, int, int>> edges;
  int base = 0;
  int rank = 0;
};

CharacteristicGraph characteristic_graph(Context& ctx,
                                         const std::string& source_key,
                                         std::vector<int> arcs,
                                         std::size_t node_cap = 10000);

}  // namespace garside
