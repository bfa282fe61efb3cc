#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "garside/disk.hpp"
#include "garside/errors.hpp"
#include "garside/oracle.hpp"
#include "garside/presentation.hpp"

using namespace garside;

namespace {

std::vector<int> side_arcs(const Move& head, const std::vector<Move>& tail) {
  std::vector<int> out{head.arc};
  for (const Move& m : tail) out.push_back(m.arc);
  return out;
}

// Relabels an oracle lattice by a fixed permutation of its indices.
OracleLattice shuffled(const OracleLattice& lat) {
  int n = static_cast<int>(lat.elements.size());
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = (3 * i + 1) % n;
  bool ok = true;
  std::vector<char> hit(n, 0);
  for (int i = 0; i < n; ++i) {
    if (hit[perm[i]]) ok = false;
    hit[perm[i]] = 1;
  }
  if (!ok) {
    for (int i = 0; i < n; ++i) perm[i] = n - 1 - i;
  }
  OracleLattice out;
  out.elements.resize(n);
  for (int i = 0; i < n; ++i) out.elements[perm[i]] = lat.elements[i];
  for (const auto& [a, b] : lat.covers)
    out.covers.emplace_back(perm[a], perm[b]);
  std::sort(out.covers.begin(), out.covers.end());
  return out;
}

}  // namespace

TEST_CASE("the braid relation is found by rewriting") {
  Context ctx;
  std::string key = "v1:2,2,2;[0 1],[1 0]";
  OracleReport r = oracle_equal(ctx, key, {0, 1, 0}, {1, 0, 1});
  CHECK(r.answer == OracleAnswer::kYes);
  OracleReport back = oracle_equal(ctx, key, {1, 0, 1}, {0, 1, 0});
  CHECK(back.answer == OracleAnswer::kYes);
}

TEST_CASE("distinct atoms are distinguished") {
  Context ctx;
  std::string key = "v1:2,2,2;[0 1],[1 0]";
  CHECK(oracle_equal(ctx, key, {0}, {1}).answer == OracleAnswer::kNo);
  CHECK(oracle_equal(ctx, key, {}, {0}).answer == OracleAnswer::kNo);
  CHECK(oracle_equal(ctx, key, {}, {}).answer == OracleAnswer::kYes);
  // Atoms at the fan over three triangles go to different objects.
  std::string fan = "v1:3,3,3;[0 1],[],[0],[1],[]";
  OracleReport r = oracle_equal(ctx, fan, {0}, {1});
  CHECK(r.answer == OracleAnswer::kNo);
  CHECK(r.class_size == 1);
}

TEST_CASE("every relation side pair is confirmed") {
  Context ctx;
  std::vector<std::vector<int>> labellings = {{2, 3}, {3, 4}, {2, 2, 3}};
  for (const auto& labels : labellings) {
    for (const DiskObject& x : enumerate_objects(validate(labels))) {
      for (int i = 0; i < x.arc_count(); ++i) {
        for (int j = i + 1; j < x.arc_count(); ++j) {
          ElementaryRelation rel = complement(ctx, x.key(), i, j);
          OracleReport r =
              oracle_equal(ctx, x.key(), side_arcs(rel.a, rel.a_tail),
                           side_arcs(rel.b, rel.b_tail));
          CHECK(r.answer == OracleAnswer::kYes);
        }
      }
    }
  }
}

TEST_CASE("pentagon sides of different lengths are equal") {
  Context ctx;
  std::string fan = "v1:3,3,3;[0 1],[],[0],[1],[]";
  ElementaryRelation rel = complement(ctx, fan, 0, 1);
  OracleReport r = oracle_equal(ctx, fan, side_arcs(rel.a, rel.a_tail),
                                side_arcs(rel.b, rel.b_tail));
  CHECK(r.answer == OracleAnswer::kYes);
}

TEST_CASE("caps surface as inconclusive answers") {
  Context ctx;
  std::string key = "v1:2,2,2;[0 1],[1 0]";
  OracleCaps tight;
  tight.max_length = 2;
  OracleReport r = oracle_equal(ctx, key, {0, 1, 0}, {1, 0, 1}, tight);
  CHECK(r.answer == OracleAnswer::kInconclusive);
  CHECK(r.length_capped);
  OracleCaps tiny;
  tiny.max_class = 1;
  OracleReport s = oracle_equal(ctx, key, {0, 1, 0}, {1, 0, 1}, tiny);
  CHECK(s.answer == OracleAnswer::kInconclusive);
  CHECK(s.class_capped);
  CHECK_THROWS_AS(oracle_equal(ctx, key, {5}, {}), UsageError);
}

TEST_CASE("weak order sizes and covers") {
  OracleLattice w2 = weak_order(2);
  CHECK(w2.elements.size() == 2);
  CHECK(w2.covers.size() == 1);
  OracleLattice w3 = weak_order(3);
  CHECK(w3.elements.size() == 6);
  CHECK(w3.covers.size() == 6);
  OracleLattice w4 = weak_order(4);
  CHECK(w4.elements.size() == 24);
  CHECK(w4.covers.size() == 36);
  // The identity permutation has two covers upward in S3.
  int id_index = -1;
  for (std::size_t i = 0; i < w3.elements.size(); ++i)
    if (w3.elements[i] == "0,1,2") id_index = static_cast<int>(i);
  REQUIRE(id_index >= 0);
  int up = 0;
  for (const auto& [a, b] : w3.covers)
    if (a == id_index) up += 1;
  CHECK(up == 2);
}

TEST_CASE("tamari lattice sizes and covers") {
  OracleLattice t2 = classical_tamari(2);
  CHECK(t2.elements.size() == 2);
  CHECK(t2.covers.size() == 1);
  OracleLattice t3 = classical_tamari(3);
  CHECK(t3.elements.size() == 5);
  CHECK(t3.covers.size() == 5);
  OracleLattice t4 = classical_tamari(4);
  CHECK(t4.elements.size() == 14);
  CHECK(t4.covers.size() == 21);
  OracleLattice t5 = classical_tamari(5);
  CHECK(t5.elements.size() == 42);
}

TEST_CASE("order isomorphism accepts relabellings") {
  OracleLattice w3 = weak_order(3);
  CHECK(order_isomorphic(w3, w3));
  CHECK(order_isomorphic(w3, shuffled(w3)));
  OracleLattice t4 = classical_tamari(4);
  CHECK(order_isomorphic(t4, shuffled(t4)));
}

TEST_CASE("order isomorphism separates different shapes") {
  OracleLattice w3 = weak_order(3);
  OracleLattice t3 = classical_tamari(3);
  CHECK_FALSE(order_isomorphic(w3, t3));
  // Same size and edge count as the S3 hexagon, but a lopsided cycle.
  OracleLattice lop;
  lop.elements = {"a", "b", "c", "d", "e", "f"};
  lop.covers = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}};
  CHECK_FALSE(order_isomorphic(w3, lop));
  CHECK(order_isomorphic(lop, shuffled(lop)));
}
