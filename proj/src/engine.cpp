#include "garside/engine.hpp"

#include <algorithm>
#include <list>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "garside/errors.hpp"
#include "garside/presentation.hpp"

namespace garside {

std::vector<std::string> word_stations(Context& ctx, const PositiveWord& w) {
  std::vector<std::string> out;
  out.reserve(w.arcs.size() + 1);
  out.push_back(ctx.object(w.source).key());
  for (int arc : w.arcs) {
    const DiskObject& x = ctx.object(out.back());
    if (arc < 0 || arc >= x.arc_count()) {
      throw UsageError("word letter is not an arc of its station");
    }
    out.push_back(ctx.move(out.back(), arc).target);
  }
  return out;
}

std::string word_target(Context& ctx, const PositiveWord& w) {
  return word_stations(ctx, w).back();
}

int word_weight(Context& ctx, const PositiveWord& w) {
  std::vector<std::string> st = word_stations(ctx, w);
  int total = 0;
  for (std::size_t i = 0; i < w.arcs.size(); ++i) {
    total += ctx.move(st[i], w.arcs[i]).weight;
  }
  return total;
}

namespace {

// One letter of a partially reversed fraction. A positive entry is the move
// (source, arc); a negative entry is its inverse, running from the move's
// target back to its source.
struct SignedLetter {
  std::string source;
  int arc = 0;
  bool positive = true;
};

}  // namespace

ReversingResult reverse_words(Context& ctx, const PositiveWord& u,
                              const PositiveWord& v, std::size_t step_cap,
                              int strategy_seed) {
  if (ctx.object(u.source).key() != ctx.object(v.source).key()) {
    throw UsageError("only words with a common source can be reversed");
  }
  std::vector<std::string> su = word_stations(ctx, u);
  std::vector<std::string> sv = word_stations(ctx, v);

  // The list spells u^-1 v, a path from the target of u to the target of v.
  std::list<SignedLetter> word;
  for (std::size_t i = u.arcs.size(); i-- > 0;) {
    word.push_back({su[i], u.arcs[i], false});
  }
  for (std::size_t i = 0; i < v.arcs.size(); ++i) {
    word.push_back({sv[i], v.arcs[i], true});
  }

  std::mt19937 rng(strategy_seed < 0 ? 0u
                                     : static_cast<unsigned>(strategy_seed));
  ReversingResult result;
  std::size_t steps = 0;
  for (;;) {
    // Collect the reversible positions: a negative letter directly followed
    // by a positive one.
    std::vector<std::list<SignedLetter>::iterator> frontier;
    for (auto it = word.begin(); it != word.end(); ++it) {
      auto next = std::next(it);
      if (next == word.end()) break;
      if (!it->positive && next->positive) {
        frontier.push_back(it);
        if (strategy_seed < 0) break;
      }
    }
    if (frontier.empty()) break;
    if (steps >= step_cap) {
      result.diverged = true;
      return result;
    }
    ++steps;

    auto neg = strategy_seed < 0
                   ? frontier.front()
                   : frontier[rng() % frontier.size()];
    auto pos = std::next(neg);
    if (neg->source != pos->source) {
      throw PropertyViolation("reversing letters lost their common source");
    }
    if (neg->arc == pos->arc) {
      word.erase(word.erase(neg));
      continue;
    }
    ElementaryRelation rel = complement(ctx, neg->source, neg->arc, pos->arc);
    auto insert_at = word.erase(neg, std::next(pos));
    for (const Move& m : rel.a_tail) {
      word.insert(insert_at, {m.source, m.arc, true});
    }
    for (auto it = rel.b_tail.rbegin(); it != rel.b_tail.rend(); ++it) {
      word.insert(insert_at, {it->source, it->arc, false});
    }
  }

  // Fully reversed: every positive letter precedes every negative one, so
  // the list reads (u\v) (v\u)^-1.
  result.u_under_v.source = su.back();
  result.v_under_u.source = sv.back();
  bool seen_negative = false;
  for (const SignedLetter& letter : word) {
    if (letter.positive) {
      if (seen_negative) {
        throw PropertyViolation("reversing stopped on a mixed word");
      }
      result.u_under_v.arcs.push_back(letter.arc);
    } else {
      seen_negative = true;
      result.v_under_u.arcs.push_back(letter.arc);
    }
  }
  std::reverse(result.v_under_u.arcs.begin(), result.v_under_u.arcs.end());
  return result;
}

ReversingResult Engine::reverse(const PositiveWord& u, const PositiveWord& v,
                                int strategy_seed) {
  return reverse_words(ctx_, u, v, step_cap_, strategy_seed);
}

bool Engine::equal_positive(const PositiveWord& u, const PositiveWord& v) {
  if (ctx_.object(u.source).key() != ctx_.object(v.source).key()) {
    throw UsageError("only words with a common source can be compared");
  }
  if (u.arcs == v.arcs) {
    word_stations(ctx_, u);
    return true;
  }
  if (word_target(ctx_, u) != word_target(ctx_, v)) return false;
  ReversingResult r = reverse(u, v);
  if (r.diverged) {
    throw Divergence("word comparison ran past the reversing step cap");
  }
  return r.u_under_v.arcs.empty() && r.v_under_u.arcs.empty();
}

std::optional<PositiveWord> Engine::left_divides(const PositiveWord& u,
                                                 const PositiveWord& v) {
  ReversingResult r = reverse(u, v);
  if (r.diverged) {
    throw Divergence("divisibility test ran past the reversing step cap");
  }
  if (!r.v_under_u.arcs.empty()) return std::nullopt;
  return r.u_under_v;
}

PositiveWord Engine::join(const PositiveWord& u, const PositiveWord& v) {
  ReversingResult r = reverse(u, v);
  if (r.diverged) {
    throw Divergence("join ran past the reversing step cap");
  }
  PositiveWord out{u.source, u.arcs};
  out.arcs.insert(out.arcs.end(), r.u_under_v.arcs.begin(),
                  r.u_under_v.arcs.end());
  PositiveWord other{v.source, v.arcs};
  other.arcs.insert(other.arcs.end(), r.v_under_u.arcs.begin(),
                    r.v_under_u.arcs.end());
  if (word_target(ctx_, out) != word_target(ctx_, other)) {
    throw PropertyViolation("the two completions of a join disagree");
  }
  return out;
}

PositiveWord Engine::meet(const PositiveWord& u, const PositiveWord& v,
                          const std::vector<int>* atom_order) {
  if (ctx_.object(u.source).key() != ctx_.object(v.source).key()) {
    throw UsageError("only words with a common source have a meet");
  }
  int rank = ctx_.object(u.source).arc_count();
  std::vector<int> order;
  if (atom_order == nullptr) {
    order.resize(rank);
    std::iota(order.begin(), order.end(), 0);
  } else {
    order = *atom_order;
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expect(rank);
    std::iota(expect.begin(), expect.end(), 0);
    if (sorted != expect) {
      throw UsageError("the meet trial order must permute the arc ids");
    }
  }

  PositiveWord result{ctx_.object(u.source).key(), {}};
  PositiveWord ru{result.source, u.arcs};
  PositiveWord rv{result.source, v.arcs};
  std::string cur = result.source;
  std::size_t cap = 16 * (u.arcs.size() + v.arcs.size()) + 64;
  for (std::size_t round = 0; round <= cap; ++round) {
    if (round == cap) {
      throw Divergence("meet ran past its extension cap");
    }
    bool extended = false;
    for (int arc : order) {
      PositiveWord atom{cur, {arc}};
      std::optional<PositiveWord> du = left_divides(atom, ru);
      if (!du) continue;
      std::optional<PositiveWord> dv = left_divides(atom, rv);
      if (!dv) continue;
      result.arcs.push_back(arc);
      cur = ctx_.move(cur, arc).target;
      ru = *du;
      rv = *dv;
      extended = true;
      break;
    }
    if (!extended) break;
  }
  return result;
}

const PositiveWord& Engine::delta_unchecked(const std::string& key) {
  std::string canon = ctx_.object(key).key();
  auto found = delta_.find(canon);
  if (found != delta_.end()) return found->second;

  const DiskObject& x = ctx_.object(canon);
  PositiveWord d{canon, {}};
  std::vector<Move> atoms = ctx_.atoms(canon);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i == 0) {
      d.arcs.assign(1, atoms[i].arc);
    } else {
      d = join(d, PositiveWord{canon, {atoms[i].arc}});
    }
  }
  std::string expected = shift_object(x, 1).first.key();
  if (word_target(ctx_, d) != expected) {
    throw PropertyViolation("delta does not end at the shifted object");
  }
  for (const Move& a : atoms) {
    if (!left_divides(PositiveWord{canon, {a.arc}}, d)) {
      throw PropertyViolation("an atom fails to divide delta");
    }
  }
  return delta_.emplace(canon, std::move(d)).first->second;
}

const PositiveWord& Engine::delta(const std::string& source_key) {
  std::string canon = ctx_.object(source_key).key();
  const PositiveWord& d = delta_unchecked(canon);
  if (delta_shift_checked_.insert(canon).second) {
    for (const Move& a : ctx_.atoms(canon)) {
      const PositiveWord& dy = delta_unchecked(a.target);
      PositiveWord lhs{canon, {a.arc}};
      lhs.arcs.insert(lhs.arcs.end(), dy.arcs.begin(), dy.arcs.end());
      PositiveWord rhs{canon, d.arcs};
      rhs.arcs.push_back(phi_move(a).arc);
      if (!equal_positive(lhs, rhs)) {
        throw PropertyViolation("delta does not intertwine the shift");
      }
    }
  }
  return d;
}

Move Engine::phi_move(const Move& a) {
  const DiskObject& x = ctx_.object(a.source);
  auto shifted = shift_object(x, 1);
  const DiskObject& sx = ctx_.intern(shifted.first);
  return ctx_.move(sx.key(), shifted.second[a.arc]);
}

PositiveWord Engine::word_phi(const PositiveWord& w, int k) {
  if (k != 1 && k != -1) {
    throw UsageError("the shift on words moves by plus or minus one");
  }
  std::vector<std::string> st = word_stations(ctx_, w);
  PositiveWord out;
  out.source = ctx_.intern(shift_object(ctx_.object(st[0]), k).first).key();
  std::string cur = out.source;
  for (std::size_t i = 0; i < w.arcs.size(); ++i) {
    auto shifted = shift_object(ctx_.object(st[i]), k);
    int arc = shifted.second[w.arcs[i]];
    out.arcs.push_back(arc);
    const Move& m = ctx_.move(cur, arc);
    std::string next = ctx_.intern(shift_object(ctx_.object(st[i + 1]), k).first).key();
    if (m.target != next) {
      throw PropertyViolation("the shift broke a move correspondence");
    }
    cur = next;
  }
  return out;
}

PositiveWord Engine::canonical_word(const PositiveWord& u) {
  PositiveWord rest{ctx_.object(u.source).key(), u.arcs};
  PositiveWord out{rest.source, {}};
  std::size_t cap = 4 * u.arcs.size() + 16;
  while (!rest.arcs.empty()) {
    if (out.arcs.size() >= cap) {
      throw Divergence("canonical word ran past its length cap");
    }
    int rank = ctx_.object(rest.source).arc_count();
    bool found = false;
    for (int arc = 0; arc < rank; ++arc) {
      std::optional<PositiveWord> div =
          left_divides(PositiveWord{rest.source, {arc}}, rest);
      if (!div) continue;
      out.arcs.push_back(arc);
      rest = *div;
      found = true;
      break;
    }
    if (!found) {
      throw PropertyViolation("a nonempty word has no dividing atom");
    }
  }
  return out;
}

std::vector<PositiveWord> Engine::greedy_normal_form(const PositiveWord& u) {
  std::vector<PositiveWord> factors;
  PositiveWord rest{ctx_.object(u.source).key(), u.arcs};
  std::size_t cap = 4 * u.arcs.size() + 16;
  while (!rest.arcs.empty()) {
    if (factors.size() >= cap) {
      throw Divergence("normal form ran past its factor cap");
    }
    PositiveWord head = meet(rest, delta(rest.source));
    if (head.arcs.empty()) {
      throw PropertyViolation("a nonempty word has an empty greedy factor");
    }
    std::optional<PositiveWord> tail = left_divides(head, rest);
    if (!tail) {
      throw PropertyViolation("a greedy factor fails to divide its word");
    }
    factors.push_back(canonical_word(head));
    rest = *tail;
  }
  return factors;
}

GroupoidElement Engine::simplify(GroupoidElement g) {
  if (ctx_.object(g.denominator.source).key() !=
      ctx_.object(g.numerator.source).key()) {
    throw UsageError("fraction words must share a source");
  }
  PositiveWord common = meet(g.denominator, g.numerator);
  if (common.arcs.empty()) {
    word_stations(ctx_, g.denominator);
    word_stations(ctx_, g.numerator);
    return g;
  }
  std::optional<PositiveWord> den = left_divides(common, g.denominator);
  std::optional<PositiveWord> num = left_divides(common, g.numerator);
  if (!den || !num) {
    throw PropertyViolation("the common divisor fails to divide a fraction");
  }
  return GroupoidElement{*den, *num};
}

GroupoidElement Engine::invert(GroupoidElement g) {
  g = simplify(std::move(g));
  std::swap(g.denominator, g.numerator);
  return g;
}

GroupoidElement Engine::multiply(const GroupoidElement& a,
                                 const GroupoidElement& b) {
  GroupoidElement left = simplify(a);
  GroupoidElement right = simplify(b);
  if (word_target(ctx_, left.numerator) !=
      word_target(ctx_, right.denominator)) {
    throw UsageError("fractions do not compose at a common object");
  }

  // Rewrite d1^-1 n1 d2^-1 n2 as a single fraction. With k the length of
  // d2 and D the k-fold delta power, d2 divides D, so d2^-1 is c D^-1 with
  // c = d2\D, and pushing D^-1 through n2 with the shift gives
  //   d1^-1 n1 c (n2 phi^k) Dend^-1  =  (Dfront d1)^-1 (n1 c (n2 phi^k)) phi^-k.
  int k = static_cast<int>(right.denominator.arcs.size());
  std::string s2 = ctx_.object(right.denominator.source).key();

  PositiveWord power{s2, {}};
  for (int i = 0; i < k; ++i) {
    const PositiveWord& step = delta_unchecked(word_target(ctx_, power));
    power.arcs.insert(power.arcs.end(), step.arcs.begin(), step.arcs.end());
  }
  std::optional<PositiveWord> c = left_divides(right.denominator, power);
  if (!c) {
    throw PropertyViolation("a word fails to divide the delta power of its length");
  }

  PositiveWord p{ctx_.object(left.numerator.source).key(),
                 left.numerator.arcs};
  p.arcs.insert(p.arcs.end(), c->arcs.begin(), c->arcs.end());
  PositiveWord shifted_num = right.numerator;
  for (int i = 0; i < k; ++i) shifted_num = word_phi(shifted_num, 1);
  p.arcs.insert(p.arcs.end(), shifted_num.arcs.begin(),
                shifted_num.arcs.end());

  PositiveWord numerator = p;
  for (int i = 0; i < k; ++i) numerator = word_phi(numerator, -1);

  std::string front = ctx_.object(numerator.source).key();
  PositiveWord denominator{front, {}};
  for (int i = 0; i < k; ++i) {
    const PositiveWord& step = delta_unchecked(word_target(ctx_, denominator));
    denominator.arcs.insert(denominator.arcs.end(), step.arcs.begin(),
                            step.arcs.end());
  }
  if (word_target(ctx_, denominator) != ctx_.object(left.denominator.source).key()) {
    throw PropertyViolation("the delta power does not land at the left source");
  }
  denominator.arcs.insert(denominator.arcs.end(),
                          left.denominator.arcs.begin(),
                          left.denominator.arcs.end());
  return simplify(GroupoidElement{denominator, numerator});
}

bool Engine::is_identity(const GroupoidElement& g) {
  GroupoidElement reduced = simplify(g);
  return reduced.denominator.arcs.empty() && reduced.numerator.arcs.empty();
}

CubeReport Engine::cube_check(const std::string& source_key,
                              const OracleCaps& caps) {
  std::string canon = ctx_.object(source_key).key();
  std::vector<Move> atoms = ctx_.atoms(canon);
  int rank = static_cast<int>(atoms.size());
  CubeReport report;

  // One side of the comparison, nothing when its reversing diverges.
  auto side = [&](int first, int second,
                  int third) -> std::optional<PositiveWord> {
    PositiveWord wa{canon, {atoms[first].arc}};
    PositiveWord wb{canon, {atoms[second].arc}};
    PositiveWord wc{canon, {atoms[third].arc}};
    ReversingResult ab = reverse(wa, wb);
    ReversingResult ac = reverse(wa, wc);
    if (ab.diverged || ac.diverged) return std::nullopt;
    ReversingResult inner = reverse(ab.u_under_v, ac.u_under_v);
    if (inner.diverged) return std::nullopt;
    return inner.u_under_v;
  };

  for (int a = 0; a < rank; ++a) {
    for (int b = 0; b < rank; ++b) {
      for (int c = 0; c < rank; ++c) {
        if (a == b || a == c || b == c) continue;
        ++report.triples;
        CubeTriple triple{atoms[a].arc, atoms[b].arc, atoms[c].arc};
        std::optional<PositiveWord> lhs = side(a, b, c);
        std::optional<PositiveWord> rhs = side(b, a, c);
        if (!lhs && !rhs) {
          ++report.undefined;
          continue;
        }
        if (!lhs || !rhs) {
          report.failures.push_back(triple);
          continue;
        }
        if (ctx_.object(lhs->source).key() != ctx_.object(rhs->source).key()) {
          report.failures.push_back(triple);
          continue;
        }
        OracleReport answer =
            oracle_equal(ctx_, lhs->source, lhs->arcs, rhs->arcs, caps);
        if (answer.answer == OracleAnswer::kYes) continue;
        if (answer.answer == OracleAnswer::kNo) {
          report.failures.push_back(triple);
        } else {
          report.inconclusive.push_back(triple);
        }
      }
    }
  }
  return report;
}

}  // namespace garside
