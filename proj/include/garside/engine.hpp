#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "garside/context.hpp"
#include "garside/oracle.hpp"

namespace garside {

// A positive word: a composable sequence of moves, recorded as the source
// object key plus the arc rotated at each successive station.
struct PositiveWord {
  std::string source;
  std::vector<int> arcs;

  friend bool operator==(const PositiveWord&, const PositiveWord&) = default;
};

// The objects a word visits: the source, then the target of each letter.
// Throws UsageError if a letter is not an arc of its station.
std::vector<std::string> word_stations(Context& ctx, const PositiveWord& w);
std::string word_target(Context& ctx, const PositiveWord& w);
int word_weight(Context& ctx, const PositiveWord& w);

struct ReversingResult {
  bool diverged = false;
  PositiveWord u_under_v;  // u\v, a word from the target of u
  PositiveWord v_under_u;  // v\u, a word from the target of v
};

// Rewrites u^-1 v to the fraction (u\v)(v\u)^-1 by the reversing rule:
// a^-1 a cancels, and a^-1 b becomes f(a,b) f(b,a)^-1 where a f(a,b) and
// b f(b,a) are the two sides of the elementary relation on a, b. The words
// must share a source. A negative strategy_seed picks the leftmost
// reversible pair each step; a non-negative seed picks randomly, which must
// not change the result.
ReversingResult reverse_words(Context& ctx, const PositiveWord& u,
                              const PositiveWord& v,
                              std::size_t step_cap = 100000,
                              int strategy_seed = -1);

// A groupoid element written as the fraction denominator^-1 numerator. Both
// words start at the same object; the element runs from the target of the
// denominator to the target of the numerator.
struct GroupoidElement {
  PositiveWord denominator;
  PositiveWord numerator;
};

struct CubeTriple {
  int a = 0;
  int b = 0;
  int c = 0;
};

struct CubeReport {
  int triples = 0;
  int undefined = 0;  // both sides of the comparison diverged
  std::vector<CubeTriple> failures;
  std::vector<CubeTriple> inconclusive;  // the oracle hit a cap

  bool passed() const { return failures.empty(); }
};

// Word and element operations built on reversing, plus the cached Garside
// elements delta(x) with their validity checks.
class Engine {
 public:
  explicit Engine(Context& ctx, std::size_t step_cap = 100000)
      : ctx_(ctx), step_cap_(step_cap) {}

  Context& context() { return ctx_; }
  std::size_t step_cap() const { return step_cap_; }

  ReversingResult reverse(const PositiveWord& u, const PositiveWord& v,
                          int strategy_seed = -1);

  // True when u and v represent the same positive element. Throws Divergence
  // if reversing runs past the step cap.
  bool equal_positive(const PositiveWord& u, const PositiveWord& v);

  // The complement u\v when u left-divides v, nothing otherwise.
  std::optional<PositiveWord> left_divides(const PositiveWord& u,
                                           const PositiveWord& v);

  // Least common right multiple u (u\v) and greatest common left divisor.
  // The meet extends greedily by atoms, by arc id unless an explicit trial
  // order is given; the result does not depend on that order.
  PositiveWord join(const PositiveWord& u, const PositiveWord& v);
  PositiveWord meet(const PositiveWord& u, const PositiveWord& v,
                    const std::vector<int>* atom_order = nullptr);

  // The Garside element at x: the join of all atoms at x. Cached per object.
  // Postconditions, enforced on first construction: the target is the shift
  // of x by one, every atom at x left-divides it, and for every atom a the
  // words a delta(target(a)) and delta(x) phi(a) are equal.
  const PositiveWord& delta(const std::string& source_key);

  // The shift automorphism on moves and words. k is +1 or -1 for words.
  Move phi_move(const Move& a);
  PositiveWord word_phi(const PositiveWord& w, int k);

  // The left-greedy normal form: factors meet(rest, delta) until the rest is
  // empty. Factors are returned as canonical representatives. Two words are
  // equal iff their normal forms match letter for letter.
  std::vector<PositiveWord> greedy_normal_form(const PositiveWord& u);

  // The lexicographically least word equal to u: repeatedly take the
  // smallest atom left-dividing the rest. Depends only on the class of u.
  PositiveWord canonical_word(const PositiveWord& u);

  // Fraction arithmetic. simplify cancels the common left divisor of the
  // denominator and numerator; multiply composes two fractions, which needs
  // the target of a's numerator to be the shared source of b's words;
  // is_identity decides the word problem. Results come back simplified.
  GroupoidElement simplify(GroupoidElement g);
  GroupoidElement invert(GroupoidElement g);
  GroupoidElement multiply(const GroupoidElement& a, const GroupoidElement& b);
  bool is_identity(const GroupoidElement& g);

  // Checks the cube condition at one object: for ordered triples of distinct
  // atoms a, b, c the words (a\b)\(a\c) and (b\a)\(b\c) agree. Equality is
  // decided by the independent oracle, never by reversing itself.
  CubeReport cube_check(const std::string& source_key,
                        const OracleCaps& caps = {});

 private:
  const PositiveWord& delta_unchecked(const std::string& key);

  Context& ctx_;
  std::size_t step_cap_;
  std::map<std::string, PositiveWord> delta_;
  std::set<std::string> delta_shift_checked_;
};

}  // namespace garside
