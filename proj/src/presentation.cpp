#include "garside/presentation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "garside/errors.hpp"

namespace garside {

const DiskObject& Context::object(const std::string& key) {
  auto it = objects_.find(key);
  if (it != objects_.end()) return it->second;
  DiskObject x = DiskObject::parse_key(key);
  if (x.key() != key)
    throw UsageError("object key is not in canonical form: " + key);
  return objects_.emplace(key, std::move(x)).first->second;
}

const DiskObject& Context::intern(const DiskObject& x) {
  auto it = objects_.find(x.key());
  if (it != objects_.end()) return it->second;
  return objects_.emplace(x.key(), x).first->second;
}

const Move& Context::move(const std::string& source_key, int arc) {
  auto key = std::make_pair(source_key, arc);
  auto it = moves_.find(key);
  if (it != moves_.end()) return it->second;
  const DiskObject& x = object(source_key);
  MoveGeometry mg = rotate_arc(x, arc, true);
  Move mv{source_key, arc, mg.target.key(), std::move(mg.corr),
          x.m() - mg.d0 - mg.d1};
  intern(mg.target);
  return moves_.emplace(std::move(key), std::move(mv)).first->second;
}

std::vector<Move> Context::atoms(const std::string& source_key) {
  const DiskObject& x = object(source_key);
  std::vector<Move> out;
  out.reserve(x.arc_count());
  for (int a = 0; a < x.arc_count(); ++a) out.push_back(move(source_key, a));
  return out;
}

const char* relation_kind_name(RelationKind k) {
  switch (k) {
    case RelationKind::ER1: return "ER1";
    case RelationKind::ER2: return "ER2";
    case RelationKind::ER3: return "ER3";
    case RelationKind::ER4: return "ER4";
  }
  return "?";
}

namespace {

// A face, identified independently of the dart the walk started at.
std::vector<int> face_id(const DiskObject& x, int dart) {
  std::vector<int> f = x.face_of(dart);
  auto least = std::min_element(f.begin(), f.end());
  std::rotate(f.begin(), least, f.end());
  return f;
}

int weight_sum(const Move& head, const std::vector<Move>& tail) {
  int s = head.weight;
  for (const Move& m : tail) s += m.weight;
  return s;
}

}  // namespace

ElementaryRelation complement(Context& ctx, const std::string& source_key,
                              int arc_a, int arc_b) {
  const DiskObject& x = ctx.object(source_key);
  if (arc_a == arc_b)
    throw UsageError("an elementary relation needs two distinct arcs");
  if (arc_a < 0 || arc_a >= x.arc_count() || arc_b < 0 ||
      arc_b >= x.arc_count())
    throw UsageError("arc id out of range");

  const Move& a = ctx.move(source_key, arc_a);
  const Move& b = ctx.move(source_key, arc_b);

  // The first tail letter is always the image of the other arc; a long side
  // continues with the image of the image of its own arc.
  auto tail = [&ctx](const Move& first, int other_arc, bool long_side) {
    std::vector<Move> out;
    const Move& m2 = ctx.move(first.target, first.corr[other_arc]);
    out.push_back(m2);
    if (long_side) {
      int self_img = m2.corr[first.corr[first.arc]];
      out.push_back(ctx.move(m2.target, self_img));
    }
    return out;
  };

  std::vector<int> fa0 = face_id(x, x.arc_dart(arc_a, 0));
  std::vector<int> fa1 = face_id(x, x.arc_dart(arc_a, 1));
  std::vector<int> fb0 = face_id(x, x.arc_dart(arc_b, 0));
  std::vector<int> fb1 = face_id(x, x.arc_dart(arc_b, 1));

  const std::vector<int>* shared = nullptr;
  int a_other_size = 0;
  int b_other_size = 0;
  int shared_count = 0;
  for (const auto* fa : {&fa0, &fa1}) {
    for (const auto* fb : {&fb0, &fb1}) {
      if (*fa == *fb) {
        shared_count += 1;
        shared = fa;
        a_other_size =
            static_cast<int>((fa == &fa0 ? fa1 : fa0).size());
        b_other_size =
            static_cast<int>((fb == &fb0 ? fb1 : fb0).size());
      }
    }
  }
  if (shared_count > 1)
    throw PropertyViolation("two arcs share both of their regions");

  ElementaryRelation rel;
  rel.a = a;
  rel.b = b;
  if (shared == nullptr) {
    rel.kind = RelationKind::ER1;
    rel.a_tail = tail(a, arc_b, false);
    rel.b_tail = tail(b, arc_a, false);
  } else {
    int len = static_cast<int>(shared->size());
    int pos_a = -1;
    int pos_b = -1;
    for (int i = 0; i < len; ++i) {
      int d = (*shared)[i];
      if (x.dart_is_arc(d) && x.dart_arc(d) == arc_a) pos_a = i;
      if (x.dart_is_arc(d) && x.dart_arc(d) == arc_b) pos_b = i;
    }
    if (pos_a < 0 || pos_b < 0)
      throw PropertyViolation("shared region walk lost an arc dart");
    int gap_ab = ((pos_b - pos_a - 1) % len + len) % len;
    int gap_ba = ((pos_a - pos_b - 1) % len + len) % len;
    if (gap_ab == 0 && gap_ba == 0) {
      rel.kind = RelationKind::ER4;
      rel.a_tail = tail(a, arc_b, true);
      rel.b_tail = tail(b, arc_a, true);
    } else if (gap_ab == 0) {
      rel.kind = RelationKind::ER3;
      rel.a_tail = tail(a, arc_b, true);
      rel.b_tail = tail(b, arc_a, false);
    } else if (gap_ba == 0) {
      rel.kind = RelationKind::ER3;
      rel.a_tail = tail(a, arc_b, false);
      rel.b_tail = tail(b, arc_a, true);
    } else {
      rel.kind = std::min(a_other_size, b_other_size) == 2
                     ? RelationKind::ER2
                     : RelationKind::ER1;
      rel.a_tail = tail(a, arc_b, false);
      rel.b_tail = tail(b, arc_a, false);
    }
  }

  if (rel.a_tail.back().target != rel.b_tail.back().target)
    throw PropertyViolation("relation sides end at different objects");
  if (weight_sum(rel.a, rel.a_tail) != weight_sum(rel.b, rel.b_tail))
    throw PropertyViolation("relation sides have different weight sums");
  const Move* prev = &rel.a;
  for (const Move& m : rel.a_tail) {
    if (m.source != prev->target)
      throw PropertyViolation("relation side does not compose");
    prev = &m;
  }
  prev = &rel.b;
  for (const Move& m : rel.b_tail) {
    if (m.source != prev->target)
      throw PropertyViolation("relation side does not compose");
    prev = &m;
  }
  return rel;
}

namespace {

// Union-find node store for the relation closure. Each class keeps the
// object key it represents and one outgoing edge per arc id.
struct Closure {
  std::vector<int> parent;
  std::vector<std::string> key;
  std::vector<std::map<int, int>> out;
  std::size_t cap;
  bool changed = false;

  explicit Closure(std::size_t node_cap) : cap(node_cap) {}

  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }

  int make(const std::string& k) {
    if (key.size() >= cap)
      throw CapExceeded("characteristic graph exceeded the node limit");
    parent.push_back(static_cast<int>(parent.size()));
    key.push_back(k);
    out.emplace_back();
    changed = true;
    return static_cast<int>(parent.size()) - 1;
  }

  void unite(int a, int b) {
    std::deque<std::pair<int, int>> work{{a, b}};
    while (!work.empty()) {
      auto [x, y] = work.front();
      work.pop_front();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (key[x] != key[y])
        throw PropertyViolation(
            "relation closure identified nodes with different objects");
      if (out[x].size() < out[y].size()) std::swap(x, y);
      parent[y] = x;
      changed = true;
      for (const auto& [arc, head] : out[y]) {
        auto it = out[x].find(arc);
        if (it == out[x].end()) {
          out[x][arc] = head;
        } else {
          work.emplace_back(it->second, head);
        }
      }
      out[y].clear();
    }
  }

  // Follows the moves from a class, creating nodes and edges as needed, and
  // returns the class reached.
  int walk(int from, const Move& head, const std::vector<Move>& tail) {
    int cur = find(from);
    auto step = [&](const Move& m) {
      cur = find(cur);
      if (key[cur] != m.source)
        throw PropertyViolation("relation closure walk left its object");
      auto it = out[cur].find(m.arc);
      if (it == out[cur].end()) {
        int nxt = make(m.target);
        out[cur][m.arc] = nxt;
        cur = nxt;
      } else {
        cur = find(it->second);
        if (key[cur] != m.target)
          throw PropertyViolation("relation closure edge has a stale head");
      }
    };
    step(head);
    for (const Move& m : tail) step(m);
    return find(cur);
  }
};

}  // namespace

CharacteristicGraph characteristic_graph(Context& ctx,
                                         const std::string& source_key,
                                         std::vector<int> arcs,
                                         std::size_t node_cap) {
  const DiskObject& x = ctx.object(source_key);
  if (arcs.empty()) throw UsageError("the spanning arc set is empty");
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  if (arcs.front() < 0 || arcs.back() >= x.arc_count())
    throw UsageError("arc id out of range");
  Closure cl(node_cap);
  int base = cl.make(source_key);
  for (int a : arcs) {
    const Move& mv = ctx.move(source_key, a);
    cl.out[base][a] = cl.make(mv.target);
  }
  // Close every pair of outgoing edges at every class until stable.
  do {
    cl.changed = false;
    int count = static_cast<int>(cl.parent.size());
    for (int i = 0; i < count; ++i) {
      if (cl.find(i) != i) continue;
      std::vector<int> arcs;
      arcs.reserve(cl.out[i].size());
      for (const auto& [arc, head] : cl.out[i]) arcs.push_back(arc);
      for (std::size_t p = 0; p < arcs.size(); ++p) {
        for (std::size_t q = p + 1; q < arcs.size(); ++q) {
          if (cl.find(i) != i) break;  // merged away during this pass
          ElementaryRelation rel =
              complement(ctx, cl.key[i], arcs[p], arcs[q]);
          int end_a = cl.walk(i, rel.a, rel.a_tail);
          int end_b = cl.walk(i, rel.b, rel.b_tail);
          cl.unite(end_a, end_b);
        }
      }
    }
  } while (cl.changed);

  // Renumber reachable classes breadth-first from the base, edges in arc
  // order, for a deterministic result.
  CharacteristicGraph g;
  std::map<int, int> index;
  std::deque<int> queue{cl.find(base)};
  index[cl.find(base)] = 0;
  g.node_keys.push_back(cl.key[cl.find(base)]);
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (const auto& [arc, head] : cl.out[c]) {
      int h = cl.find(head);
      auto it = index.find(h);
      if (it == index.end()) {
        index[h] = static_cast<int>(g.node_keys.size());
        g.node_keys.push_back(cl.key[h]);
        queue.push_back(h);
      }
      g.edges.emplace_back(index[c], arc, index[h]);
    }
  }
  std::size_t roots = 0;
  for (std::size_t i = 0; i < cl.parent.size(); ++i) {
    if (cl.find(static_cast<int>(i)) == static_cast<int>(i)) roots += 1;
  }
  if (roots != g.node_keys.size())
    throw PropertyViolation("relation closure left unreachable nodes");
  std::sort(g.edges.begin(), g.edges.end());
  g.base = 0;
  g.rank = static_cast<int>(arcs.size());
  return g;
}

}  // namespace garside
