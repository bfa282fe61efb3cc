#include "garside/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "garside/disk.hpp"
#include "garside/errors.hpp"
#include "garside/presentation.hpp"

namespace garside {

namespace {

// Object keys met along a word, one per letter position plus the target.
std::vector<std::string> word_stations(Context& ctx, const std::string& source,
                                       const std::vector<int>& w) {
  std::vector<std::string> keys{source};
  for (int arc : w) {
    const DiskObject& x = ctx.object(keys.back());
    if (arc < 0 || arc >= x.arc_count())
      throw UsageError("word letter is not an arc of its object");
    keys.push_back(ctx.move(keys.back(), arc).target);
  }
  return keys;
}

std::vector<int> side_arcs(const Move& head, const std::vector<Move>& tail) {
  std::vector<int> out{head.arc};
  for (const Move& m : tail) out.push_back(m.arc);
  return out;
}

}  // namespace

OracleReport oracle_equal(Context& ctx, const std::string& source,
                          const std::vector<int>& u, const std::vector<int>& v,
                          const OracleCaps& caps) {
  OracleReport report;
  std::vector<std::string> su = word_stations(ctx, source, u);
  std::vector<std::string> sv = word_stations(ctx, source, v);
  if (su.back() != sv.back()) {
    // Words to different objects are never equal; no closure needed.
    report.answer = OracleAnswer::kNo;
    report.class_size = 1;
    return report;
  }

  std::set<std::vector<int>> seen{u};
  std::deque<std::vector<int>> queue{u};
  bool found = (u == v);
  while (!queue.empty() && !found) {
    if (seen.size() >= caps.max_class) {
      report.class_capped = true;
      break;
    }
    std::vector<int> w = queue.front();
    queue.pop_front();
    std::vector<std::string> stations = word_stations(ctx, source, w);
    for (std::size_t p = 0; p < w.size() && !found; ++p) {
      const DiskObject& x = ctx.object(stations[p]);
      for (int q = 0; q < x.arc_count() && !found; ++q) {
        if (q == w[p]) continue;
        ElementaryRelation rel = complement(ctx, stations[p], w[p], q);
        std::vector<int> lhs = side_arcs(rel.a, rel.a_tail);
        if (p + lhs.size() > w.size()) continue;
        if (!std::equal(lhs.begin(), lhs.end(), w.begin() + p)) continue;
        std::vector<int> rhs = side_arcs(rel.b, rel.b_tail);
        std::vector<int> next(w.begin(), w.begin() + p);
        next.insert(next.end(), rhs.begin(), rhs.end());
        next.insert(next.end(), w.begin() + p + lhs.size(), w.end());
        if (next.size() > caps.max_length) {
          report.length_capped = true;
          continue;
        }
        if (seen.insert(next).second) {
          if (next == v) found = true;
          queue.push_back(next);
        }
      }
    }
  }
  report.class_size = seen.size();
  if (found) {
    report.answer = OracleAnswer::kYes;
  } else if (!report.class_capped && !report.length_capped) {
    report.answer = OracleAnswer::kNo;
  } else {
    report.answer = OracleAnswer::kInconclusive;
  }
  return report;
}

OracleLattice weak_order(int n) {
  if (n < 1) throw UsageError("the weak order needs n >= 1");
  OracleLattice lat;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> perms;
  do {
    index[perm] = static_cast<int>(perms.size());
    perms.push_back(perm);
    std::string name;
    for (int i = 0; i < n; ++i) {
      if (i) name += ',';
      name += std::to_string(perm[i]);
    }
    lat.elements.push_back(name);
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (std::size_t i = 0; i < perms.size(); ++i) {
    for (int p = 0; p + 1 < n; ++p) {
      if (perms[i][p] < perms[i][p + 1]) {
        std::vector<int> up = perms[i];
        std::swap(up[p], up[p + 1]);
        lat.covers.emplace_back(static_cast<int>(i), index.at(up));
      }
    }
  }
  std::sort(lat.covers.begin(), lat.covers.end());
  return lat;
}

namespace {

// Full binary trees as nested strings, e.g. "((xx)x)" for two internal nodes.
std::vector<std::string> binary_trees(int internal) {
  if (internal == 0) return {"x"};
  std::vector<std::string> out;
  for (int left = 0; left < internal; ++left) {
    for (const std::string& a : binary_trees(left))
      for (const std::string& b : binary_trees(internal - 1 - left))
        out.push_back("(" + a + b + ")");
  }
  return out;
}

struct TreeNode {
  int left = -1;
  int right = -1;
};

int parse_tree(const std::string& s, std::size_t& pos,
               std::vector<TreeNode>& pool) {
  if (s.at(pos) == 'x') {
    pos += 1;
    pool.push_back({});
    return static_cast<int>(pool.size()) - 1;
  }
  pos += 1;  // '('
  int left = parse_tree(s, pos, pool);
  int right = parse_tree(s, pos, pool);
  pos += 1;  // ')'
  pool.push_back({left, right});
  return static_cast<int>(pool.size()) - 1;
}

std::string unparse_tree(int node, const std::vector<TreeNode>& pool) {
  if (pool[node].left < 0) return "x";
  return "(" + unparse_tree(pool[node].left, pool) +
         unparse_tree(pool[node].right, pool) + ")";
}

}  // namespace

OracleLattice classical_tamari(int k) {
  if (k < 1) throw UsageError("the Tamari lattice needs k >= 1");
  OracleLattice lat;
  lat.elements = binary_trees(k);
  std::sort(lat.elements.begin(), lat.elements.end());
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < lat.elements.size(); ++i)
    index[lat.elements[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < lat.elements.size(); ++i) {
    std::vector<TreeNode> pool;
    std::size_t pos = 0;
    int root = parse_tree(lat.elements[i], pos, pool);
    // One right rotation at every internal node whose left child is internal.
    for (std::size_t node = 0; node < pool.size(); ++node) {
      int l = pool[node].left;
      if (l < 0 || pool[l].left < 0) continue;
      std::vector<TreeNode> copy = pool;
      copy.push_back({copy[l].right, copy[node].right});
      int fresh = static_cast<int>(copy.size()) - 1;
      copy[node].left = copy[l].left;
      copy[node].right = fresh;
      lat.covers.emplace_back(static_cast<int>(i),
                              index.at(unparse_tree(root, copy)));
    }
  }
  std::sort(lat.covers.begin(), lat.covers.end());
  return lat;
}

namespace {

struct Digraph {
  int n = 0;
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> in;
  std::vector<std::vector<char>> adj;

  explicit Digraph(const OracleLattice& lat)
      : n(static_cast<int>(lat.elements.size())),
        out(n),
        in(n),
        adj(n, std::vector<char>(n, 0)) {
    for (const auto& [a, b] : lat.covers) {
      out[a].push_back(b);
      in[b].push_back(a);
      adj[a][b] = 1;
    }
  }
};

// One round of shared color refinement; returns the new color vectors.
bool refine(const Digraph& ga, const Digraph& gb, std::vector<int>& ca,
            std::vector<int>& cb) {
  using Sig = std::tuple<int, std::vector<int>, std::vector<int>>;
  auto signature = [](const Digraph& g, const std::vector<int>& c, int v) {
    std::vector<int> outs;
    std::vector<int> ins;
    for (int w : g.out[v]) outs.push_back(c[w]);
    for (int w : g.in[v]) ins.push_back(c[w]);
    std::sort(outs.begin(), outs.end());
    std::sort(ins.begin(), ins.end());
    return Sig{c[v], std::move(outs), std::move(ins)};
  };
  std::map<Sig, int> ids;
  auto id_of = [&ids](Sig s) {
    auto it = ids.find(s);
    if (it != ids.end()) return it->second;
    int fresh = static_cast<int>(ids.size());
    ids.emplace(std::move(s), fresh);
    return fresh;
  };
  std::vector<int> na(ga.n);
  std::vector<int> nb(gb.n);
  for (int v = 0; v < ga.n; ++v) na[v] = id_of(signature(ga, ca, v));
  for (int v = 0; v < gb.n; ++v) nb[v] = id_of(signature(gb, cb, v));
  bool changed = (na != ca || nb != cb);
  ca = std::move(na);
  cb = std::move(nb);
  return changed;
}

bool extend(const Digraph& ga, const Digraph& gb, const std::vector<int>& ca,
            const std::vector<int>& cb, std::vector<int>& map_ab,
            std::vector<char>& used_b) {
  // Most constrained first: the unmapped node with the rarest color.
  int best = -1;
  int best_count = ga.n + 1;
  for (int v = 0; v < ga.n; ++v) {
    if (map_ab[v] >= 0) continue;
    int count = 0;
    for (int w = 0; w < gb.n; ++w)
      if (!used_b[w] && cb[w] == ca[v]) count += 1;
    if (count < best_count) {
      best_count = count;
      best = v;
    }
  }
  if (best < 0) return true;
  if (best_count == 0) return false;
  for (int w = 0; w < gb.n; ++w) {
    if (used_b[w] || cb[w] != ca[best]) continue;
    bool ok = true;
    for (int v = 0; v < ga.n && ok; ++v) {
      if (map_ab[v] < 0) continue;
      if (ga.adj[best][v] != gb.adj[w][map_ab[v]]) ok = false;
      if (ga.adj[v][best] != gb.adj[map_ab[v]][w]) ok = false;
    }
    if (!ok) continue;
    map_ab[best] = w;
    used_b[w] = 1;
    if (extend(ga, gb, ca, cb, map_ab, used_b)) return true;
    map_ab[best] = -1;
    used_b[w] = 0;
  }
  return false;
}

}  // namespace

bool order_isomorphic(const OracleLattice& a, const OracleLattice& b) {
  if (a.elements.size() != b.elements.size()) return false;
  if (a.covers.size() != b.covers.size()) return false;
  Digraph ga(a);
  Digraph gb(b);
  std::vector<int> ca(ga.n, 0);
  std::vector<int> cb(gb.n, 0);
  while (refine(ga, gb, ca, cb)) {
  }
  std::vector<int> sa = ca;
  std::vector<int> sb = cb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  std::vector<int> map_ab(ga.n, -1);
  std::vector<char> used_b(gb.n, 0);
  return extend(ga, gb, ca, cb, map_ab, used_b);
}

}  // namespace garside
