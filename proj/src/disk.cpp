#include "garside/disk.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "garside/errors.hpp"

namespace garside {

namespace {

// Bare dart geometry over (m, ends, rot). DiskObject wraps a validated one;
// move operations also run face walks on intermediate reduced maps, which
// deliberately have a different face multiset.
struct Geometry {
  int m = 0;
  std::vector<std::array<int, 2>> ends;
  std::vector<std::vector<ArcEnd>> rot;

  int arc_dart(int a, int e) const { return 2 * m + 2 * a + e; }
  bool dart_is_arc(int d) const { return d >= 2 * m; }
  int dart_arc(int d) const { return (d - 2 * m) / 2; }
  int dart_arc_end(int d) const { return (d - 2 * m) % 2; }

  int dart_tail(int d) const {
    if (d < m) return d;
    if (d < 2 * m) return d - m;
    return ends[dart_arc(d)][dart_arc_end(d)];
  }
  int dart_head(int d) const {
    if (d < m) return (d + 1) % m;
    if (d < 2 * m) return (d - m + m - 1) % m;
    return ends[dart_arc(d)][1 - dart_arc_end(d)];
  }
  int dart_alpha(int d) const {
    if (d < m) return m + (d + 1) % m;
    if (d < 2 * m) return (d - m + m - 1) % m;
    return 2 * m + ((d - 2 * m) ^ 1);
  }

  std::vector<int> vertex_darts(int v) const {
    std::vector<int> out;
    out.reserve(rot[v].size() + 2);
    out.push_back(v);
    for (const ArcEnd& ae : rot[v]) out.push_back(arc_dart(ae.arc, ae.end));
    out.push_back(m + v);
    return out;
  }

  // Next dart of the face on the left of d: the counterclockwise predecessor,
  // around head(d), of the reversal of d.
  int next_face_dart(int d) const {
    int v = dart_head(d);
    int back = dart_alpha(d);
    std::vector<int> cyc = vertex_darts(v);
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (cyc[i] == back) return cyc[(i + cyc.size() - 1) % cyc.size()];
    }
    throw PropertyViolation("dart missing from its vertex rotation");
  }

  std::vector<int> face_of(int d) const {
    std::size_t limit = 2 * static_cast<std::size_t>(m) + 2 * ends.size() + 1;
    std::vector<int> walk{d};
    for (int cur = next_face_dart(d); cur != d; cur = next_face_dart(cur)) {
      walk.push_back(cur);
      if (walk.size() > limit)
        throw PropertyViolation("face walk does not close; object is corrupt");
    }
    return walk;
  }

  // All interior face walks. Throws if the map is not a disk decomposition
  // (wrong outer face, stray darts, non-planar rotation data).
  std::vector<std::vector<int>> interior_faces() const {
    std::set<int> seen;
    std::vector<int> outer = face_of(m);  // clockwise dart at vertex 0
    for (int d : outer) {
      if (d < m || d >= 2 * m)
        throw PropertyViolation("outer walk strays into the disk interior");
      seen.insert(d);
    }
    if (static_cast<int>(outer.size()) != m)
      throw PropertyViolation("outer walk does not cover the whole boundary");
    std::vector<std::vector<int>> out;
    int total = 2 * m + 2 * static_cast<int>(ends.size());
    for (int d = 0; d < total; ++d) {
      if (d >= m && d < 2 * m) continue;  // clockwise darts belong outside
      if (seen.count(d)) continue;
      std::vector<int> f = face_of(d);
      for (int fd : f) {
        if (fd >= m && fd < 2 * m)
          throw PropertyViolation("interior face crosses the disk boundary");
        if (!seen.insert(fd).second)
          throw PropertyViolation("face walks overlap; object is corrupt");
      }
      out.push_back(std::move(f));
    }
    return out;
  }
};

struct Canonical {
  std::vector<std::array<int, 2>> ends;
  std::vector<std::vector<ArcEnd>> rot;
  std::vector<int> old_to_new;
  std::string key;
};

std::string build_key(const std::vector<int>& labels,
                      const std::vector<std::vector<ArcEnd>>& rot) {
  std::ostringstream os;
  os << "v1:";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) os << ",";
    os << labels[i];
  }
  os << ";";
  for (std::size_t v = 0; v < rot.size(); ++v) {
    if (v) os << ",";
    os << "[";
    for (std::size_t i = 0; i < rot[v].size(); ++i) {
      if (i) os << " ";
      os << rot[v][i].arc;
    }
    os << "]";
  }
  return os.str();
}

// Renumbers arcs by first occurrence in a vertex-order scan of the rotation
// lists; the first-seen end of each arc becomes its end 0.
Canonical canonicalize(const std::vector<int>& labels_sorted, int m,
                       const std::vector<std::array<int, 2>>& ends,
                       const std::vector<std::vector<ArcEnd>>& rot) {
  int a_count = static_cast<int>(ends.size());
  Canonical c;
  c.old_to_new.assign(a_count, -1);
  std::vector<bool> flip(a_count, false);
  int next = 0;
  for (int v = 0; v < m; ++v) {
    for (const ArcEnd& ae : rot[v]) {
      if (ae.arc < 0 || ae.arc >= a_count)
        throw PropertyViolation("rotation list references unknown arc");
      if (c.old_to_new[ae.arc] == -1) {
        c.old_to_new[ae.arc] = next++;
        flip[ae.arc] = (ae.end == 1);
      }
    }
  }
  if (next != a_count)
    throw PropertyViolation("arc missing from every rotation list");
  c.ends.resize(a_count);
  for (int a = 0; a < a_count; ++a) {
    c.ends[c.old_to_new[a]] =
        flip[a] ? std::array<int, 2>{ends[a][1], ends[a][0]} : ends[a];
  }
  c.rot.resize(m);
  for (int v = 0; v < m; ++v) {
    c.rot[v].reserve(rot[v].size());
    for (const ArcEnd& ae : rot[v]) {
      c.rot[v].push_back(
          ArcEnd{c.old_to_new[ae.arc], flip[ae.arc] ? 1 - ae.end : ae.end});
    }
  }
  c.key = build_key(labels_sorted, c.rot);
  return c;
}

void validate_geometry(const Geometry& g, const std::vector<int>& labels) {
  int a_count = static_cast<int>(g.ends.size());
  if (a_count != static_cast<int>(labels.size()) - 1)
    throw PropertyViolation("arc count must be one less than region count");
  for (int a = 0; a < a_count; ++a) {
    for (int e = 0; e < 2; ++e) {
      int v = g.ends[a][e];
      if (v < 0 || v >= g.m)
        throw PropertyViolation("arc endpoint out of range");
    }
    if (g.ends[a][0] == g.ends[a][1])
      throw PropertyViolation("arc with equal endpoints");
  }
  std::vector<int> end_seen(2 * a_count, 0);
  for (int v = 0; v < g.m; ++v) {
    for (const ArcEnd& ae : g.rot[v]) {
      if (ae.arc < 0 || ae.arc >= a_count || ae.end < 0 || ae.end > 1)
        throw PropertyViolation("bad rotation entry");
      if (g.ends[ae.arc][ae.end] != v)
        throw PropertyViolation("rotation entry at the wrong vertex");
      end_seen[2 * ae.arc + ae.end] += 1;
    }
  }
  for (int i = 0; i < 2 * a_count; ++i) {
    if (end_seen[i] != 1)
      throw PropertyViolation("each arc end must appear exactly once");
  }
  std::vector<std::vector<int>> faces = g.interior_faces();
  std::vector<int> sizes;
  sizes.reserve(faces.size());
  for (const auto& f : faces) sizes.push_back(static_cast<int>(f.size()));
  std::sort(sizes.begin(), sizes.end());
  if (sizes != labels)
    throw PropertyViolation("face perimeters do not match the labels");
}

Geometry geometry_of(const DiskObject& x) {
  Geometry g;
  g.m = x.m();
  g.ends.reserve(x.arc_count());
  for (int a = 0; a < x.arc_count(); ++a) g.ends.push_back(x.arc_ends(a));
  g.rot.reserve(x.m());
  for (int v = 0; v < x.m(); ++v) g.rot.push_back(x.rotation(v));
  return g;
}

// Inserts a new arc end at vertex w immediately counterclockwise after the
// region's outgoing boundary dart at w: list front when that dart is the
// boundary edge toward w+1, right after the referenced arc end otherwise.
void insert_end_after(std::vector<std::vector<ArcEnd>>& rot, const Geometry& g,
                      int w, ArcEnd ne, int anchor_dart) {
  if (anchor_dart < g.m) {
    if (anchor_dart != w)
      throw PropertyViolation("anchor dart does not leave the landing vertex");
    rot[w].insert(rot[w].begin(), ne);
    return;
  }
  if (!g.dart_is_arc(anchor_dart))
    throw PropertyViolation("region boundary uses an outer dart");
  ArcEnd anchor{g.dart_arc(anchor_dart), g.dart_arc_end(anchor_dart)};
  auto it = std::find(rot[w].begin(), rot[w].end(), anchor);
  if (it == rot[w].end())
    throw PropertyViolation("anchor arc end missing at the landing vertex");
  rot[w].insert(it + 1, ne);
}

}  // namespace

Labelling validate(const std::vector<int>& labels) {
  if (labels.empty())
    throw UsageError("labelling must have at least one label");
  Labelling l;
  l.labels = labels;
  l.n = static_cast<int>(labels.size());
  int m = 2;
  for (int v : labels) {
    if (v < 2) throw UsageError("every label must be at least 2");
    m += v - 2;
  }
  l.m = m;
  return l;
}

int DiskObject::dart_tail(int d) const {
  if (d < m_) return d;
  if (d < 2 * m_) return d - m_;
  return ends_[dart_arc(d)][dart_arc_end(d)];
}

int DiskObject::dart_head(int d) const {
  if (d < m_) return (d + 1) % m_;
  if (d < 2 * m_) return (d - m_ + m_ - 1) % m_;
  return ends_[dart_arc(d)][1 - dart_arc_end(d)];
}

int DiskObject::dart_alpha(int d) const {
  if (d < m_) return m_ + (d + 1) % m_;
  if (d < 2 * m_) return (d - m_ + m_ - 1) % m_;
  return 2 * m_ + ((d - 2 * m_) ^ 1);
}

std::vector<int> DiskObject::vertex_darts(int v) const {
  return geometry_of(*this).vertex_darts(v);
}

std::vector<int> DiskObject::face_of(int d) const {
  return geometry_of(*this).face_of(d);
}

std::vector<std::vector<int>> DiskObject::faces() const {
  std::vector<std::vector<int>> fs = geometry_of(*this).interior_faces();
  for (auto& f : fs) {
    auto least = std::min_element(f.begin(), f.end());
    std::rotate(f.begin(), least, f.end());
  }
  std::sort(fs.begin(), fs.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return fs;
}

std::vector<int> DiskObject::face_sizes() const {
  std::vector<int> sizes;
  for (const auto& f : faces()) sizes.push_back(static_cast<int>(f.size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::pair<DiskObject, std::vector<int>> DiskObject::from_parts_with_map(
    std::vector<int> labels, std::vector<std::array<int, 2>> ends,
    std::vector<std::vector<ArcEnd>> rot) {
  Labelling l = validate(labels);
  std::sort(labels.begin(), labels.end());
  if (static_cast<int>(rot.size()) != l.m)
    throw PropertyViolation("rotation table size must equal the vertex count");
  Canonical c = canonicalize(labels, l.m, ends, rot);
  DiskObject x;
  x.m_ = l.m;
  x.labels_ = std::move(labels);
  x.ends_ = std::move(c.ends);
  x.rot_ = std::move(c.rot);
  x.key_ = std::move(c.key);
  validate_geometry(geometry_of(x), x.labels_);
  return {std::move(x), std::move(c.old_to_new)};
}

DiskObject DiskObject::from_parts(std::vector<int> labels,
                                  std::vector<std::array<int, 2>> ends,
                                  std::vector<std::vector<ArcEnd>> rot) {
  return from_parts_with_map(std::move(labels), std::move(ends),
                             std::move(rot))
      .first;
}

DiskObject DiskObject::parse_key(const std::string& key) {
  if (key.rfind("v1:", 0) != 0)
    throw UsageError("object key must start with v1:");
  auto semi = key.find(';');
  if (semi == std::string::npos)
    throw UsageError("object key is missing the rotation section");
  std::vector<int> labels;
  {
    std::stringstream ls(key.substr(3, semi - 3));
    std::string tok;
    while (std::getline(ls, tok, ',')) {
      try {
        labels.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw UsageError("bad label in object key");
      }
    }
  }
  Labelling l = validate(labels);
  std::vector<std::vector<int>> lists;
  const std::string rest = key.substr(semi + 1);
  std::size_t i = 0;
  while (i < rest.size()) {
    if (rest[i] != '[') throw UsageError("expected [ in object key");
    std::size_t close = rest.find(']', i);
    if (close == std::string::npos)
      throw UsageError("unbalanced bracket in object key");
    std::vector<int> ids;
    std::stringstream es(rest.substr(i + 1, close - i - 1));
    std::string tok;
    while (es >> tok) {
      try {
        ids.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw UsageError("bad arc id in object key");
      }
    }
    lists.push_back(std::move(ids));
    i = close + 1;
    if (i < rest.size()) {
      if (rest[i] != ',')
        throw UsageError("expected comma between vertex lists");
      ++i;
    }
  }
  if (static_cast<int>(lists.size()) != l.m)
    throw UsageError("object key has the wrong number of vertex lists");
  std::map<int, std::vector<int>> where;
  for (int v = 0; v < l.m; ++v)
    for (int a : lists[v]) where[a].push_back(v);
  int a_count = static_cast<int>(where.size());
  std::vector<std::array<int, 2>> ends(a_count);
  for (const auto& [a, vs] : where) {
    if (a < 0 || a >= a_count || vs.size() != 2)
      throw UsageError("arc ids in key must be 0..k-1, each at two vertices");
    ends[a] = {vs[0], vs[1]};  // first occurrence is end 0
  }
  std::vector<std::vector<ArcEnd>> rot(l.m);
  std::vector<int> seen(a_count, 0);
  for (int v = 0; v < l.m; ++v) {
    for (int a : lists[v]) {
      rot[v].push_back(ArcEnd{a, seen[a]});
      seen[a] += 1;
    }
  }
  try {
    return from_parts(std::move(labels), std::move(ends), std::move(rot));
  } catch (const PropertyViolation& e) {
    throw UsageError(std::string("key does not describe a valid object: ") +
                     e.what());
  }
}

MoveGeometry rotate_arc(const DiskObject& x, int arc, bool counterclockwise) {
  if (arc < 0 || arc >= x.arc_count())
    throw UsageError("arc id out of range");
  Geometry g = geometry_of(x);
  int d0 = g.arc_dart(arc, 0);
  int d1 = g.arc_dart(arc, 1);
  std::vector<int> f0 = g.face_of(d0);
  if (std::find(f0.begin(), f0.end(), d1) != f0.end())
    throw PropertyViolation("arc bounds the same face on both sides");
  std::vector<int> f1 = g.face_of(d1);
  int u = g.dart_tail(d0);
  int v = g.dart_head(d0);
  // Merged region boundary, counterclockwise, starting at u: the walk of the
  // face left of d1 minus d1 itself (u to v), then the walk of the face left
  // of d0 minus d0 (v back to u).
  std::vector<int> w(f1.begin() + 1, f1.end());
  std::size_t iv = w.size();
  w.insert(w.end(), f0.begin() + 1, f0.end());
  int nu, nv, eu, ev;
  if (counterclockwise) {
    nu = g.dart_head(w[0]);
    eu = w[1 % w.size()];
    nv = g.dart_head(w[iv]);
    ev = w[(iv + 1) % w.size()];
  } else {
    nu = g.dart_tail(w.back());
    eu = w.back();
    nv = g.dart_tail(w[iv - 1]);
    ev = w[iv - 1];
  }
  std::vector<std::array<int, 2>> ends2 = g.ends;
  ends2[arc] = {nu, nv};
  std::vector<std::vector<ArcEnd>> rot2 = g.rot;
  auto erase_end = [&](int at, ArcEnd ae) {
    auto it = std::find(rot2[at].begin(), rot2[at].end(), ae);
    if (it == rot2[at].end())
      throw PropertyViolation("arc end missing at its recorded vertex");
    rot2[at].erase(it);
  };
  erase_end(u, ArcEnd{arc, 0});
  erase_end(v, ArcEnd{arc, 1});
  insert_end_after(rot2, g, nu, ArcEnd{arc, 0}, eu);
  insert_end_after(rot2, g, nv, ArcEnd{arc, 1}, ev);
  // Each region keeps its perimeter: the face now left of the arc's end 0
  // dart is the image of the face that was left of it before.
  Geometry raw{g.m, ends2, rot2};
  if (raw.face_of(raw.arc_dart(arc, 0)).size() != f0.size())
    throw PropertyViolation("rotation did not preserve region perimeters");
  auto [target, corr] = DiskObject::from_parts_with_map(
      x.labels(), std::move(ends2), std::move(rot2));
  return MoveGeometry{std::move(target), std::move(corr),
                      ((nu - u) % g.m + g.m) % g.m,
                      ((nv - v) % g.m + g.m) % g.m};
}

std::pair<DiskObject, std::vector<int>> diagonal_move(const DiskObject& x,
                                                      std::vector<int> arcs) {
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  for (int a : arcs) {
    if (a < 0 || a >= x.arc_count()) throw UsageError("arc id out of range");
  }
  if (arcs.empty()) {
    std::vector<int> id(x.arc_count());
    std::iota(id.begin(), id.end(), 0);
    return {x, id};
  }
  Geometry g = geometry_of(x);
  std::vector<std::vector<int>> faces = g.interior_faces();
  std::unordered_map<int, int> face_idx;
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (int d : faces[i]) face_idx[d] = static_cast<int>(i);
  // Merge faces across every removed arc (union-find over face indices).
  std::vector<int> parent(faces.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::vector<bool> removed(x.arc_count(), false);
  for (int a : arcs) {
    removed[a] = true;
    parent[find(face_idx[g.arc_dart(a, 0)])] =
        find(face_idx[g.arc_dart(a, 1)]);
  }
  // Reduced map: same arc slots, removed ends dropped from the rotations.
  Geometry red = g;
  for (int v = 0; v < g.m; ++v) {
    std::vector<ArcEnd> keep;
    for (const ArcEnd& ae : red.rot[v])
      if (!removed[ae.arc]) keep.push_back(ae);
    red.rot[v] = std::move(keep);
  }
  // One surviving dart per merged region locates its boundary walk.
  std::unordered_map<int, std::vector<int>> region_walk;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    int c = find(static_cast<int>(i));
    if (region_walk.count(c)) continue;
    for (int d : faces[i]) {
      if (g.dart_is_arc(d) && removed[g.dart_arc(d)]) continue;
      region_walk[c] = red.face_of(d);
      break;
    }
  }
  struct Landing {
    int anchor;   // outgoing region dart at the landing vertex
    int dist;     // walk distance to the arc's other new endpoint
    int old_pos;  // rotation index the moving end had at its old vertex
    ArcEnd ae;
  };
  std::vector<std::array<int, 2>> ends2 = g.ends;
  std::vector<std::vector<Landing>> pending(g.m);
  for (int a : arcs) {
    int c = find(face_idx[g.arc_dart(a, 0)]);
    auto it = region_walk.find(c);
    if (it == region_walk.end())
      throw PropertyViolation("merged region has no surviving boundary dart");
    const std::vector<int>& walk = it->second;
    int len = static_cast<int>(walk.size());
    std::unordered_map<int, int> pos;  // vertex -> outgoing dart index
    for (int i = 0; i < len; ++i) pos[red.dart_tail(walk[i])] = i;
    std::array<int, 2> nw;
    std::array<int, 2> anchor;
    std::array<int, 2> old_idx;
    for (int e = 0; e < 2; ++e) {
      auto pit = pos.find(g.ends[a][e]);
      if (pit == pos.end())
        throw PropertyViolation("arc endpoint missing from its region walk");
      nw[e] = red.dart_head(walk[pit->second]);
      anchor[e] = walk[(pit->second + 1) % len];
      old_idx[e] = pit->second;
    }
    ends2[a] = nw;
    for (int e = 0; e < 2; ++e) {
      int dist = (old_idx[1 - e] - old_idx[e] + len) % len;
      int old_v = g.ends[a][e];
      int old_pos = 0;
      for (std::size_t i = 0; i < g.rot[old_v].size(); ++i)
        if (g.rot[old_v][i] == ArcEnd{a, e}) old_pos = static_cast<int>(i);
      pending[nw[e]].push_back(Landing{anchor[e], dist, old_pos, ArcEnd{a, e}});
    }
  }
  // Rebuild each touched rotation list: a group of new ends goes right after
  // its region's outgoing dart, nearer other-endpoint first; parallel ties
  // keep the relative order the ends had at the vertex they moved from.
  std::vector<std::vector<ArcEnd>> rot2 = red.rot;
  for (int w = 0; w < g.m; ++w) {
    if (pending[w].empty()) continue;
    std::map<int, std::vector<Landing>> groups;
    for (const Landing& p : pending[w]) groups[p.anchor].push_back(p);
    for (auto& [anchor, grp] : groups) {
      std::sort(grp.begin(), grp.end(),
                [](const Landing& a, const Landing& b) {
                  if (a.dist != b.dist) return a.dist < b.dist;
                  return a.old_pos < b.old_pos;
                });
    }
    std::vector<ArcEnd> list;
    auto emit_group = [&](int anchor) {
      auto git = groups.find(anchor);
      if (git == groups.end()) return;
      for (const Landing& p : git->second) list.push_back(p.ae);
      groups.erase(git);
    };
    emit_group(w);  // group anchored at the boundary dart toward w+1
    for (const ArcEnd& ae : red.rot[w]) {
      list.push_back(ae);
      emit_group(red.arc_dart(ae.arc, ae.end));
    }
    if (!groups.empty())
      throw PropertyViolation("new arc end anchored at a missing dart");
    rot2[w] = std::move(list);
  }
  return DiskObject::from_parts_with_map(x.labels(), std::move(ends2),
                                         std::move(rot2));
}

std::pair<DiskObject, std::vector<int>> shift_object(const DiskObject& x,
                                                     int k) {
  int m = x.m();
  k = ((k % m) + m) % m;
  std::vector<std::array<int, 2>> ends2(x.arc_count());
  for (int a = 0; a < x.arc_count(); ++a) {
    ends2[a] = {(x.arc_ends(a)[0] + k) % m, (x.arc_ends(a)[1] + k) % m};
  }
  std::vector<std::vector<ArcEnd>> rot2(m);
  for (int v = 0; v < m; ++v) rot2[(v + k) % m] = x.rotation(v);
  return DiskObject::from_parts_with_map(x.labels(), std::move(ends2),
                                         std::move(rot2));
}

DiskObject fan_object(const Labelling& l, int q0,
                      const std::vector<int>& region_order) {
  if (q0 < 0 || q0 >= l.m) throw UsageError("fan base vertex out of range");
  if (static_cast<int>(region_order.size()) != l.n)
    throw UsageError("region order must list every region exactly once");
  std::vector<int> check = region_order;
  std::sort(check.begin(), check.end());
  for (int i = 0; i < l.n; ++i) {
    if (check[i] != i)
      throw UsageError("region order must be a permutation of 0..n-1");
  }
  int a_count = l.n - 1;
  std::vector<std::array<int, 2>> ends(a_count);
  std::vector<std::vector<ArcEnd>> rot(l.m);
  if (a_count > 0) {
    // Chord j-1 joins q0 to c_j; regions appear counterclockwise from the
    // boundary edge leaving q0, in the prescribed label order.
    std::vector<int> c(l.n, 0);
    c[1] = q0 + l.labels[region_order[0]] - 1;
    for (int j = 2; j < l.n; ++j)
      c[j] = c[j - 1] + l.labels[region_order[j - 1]] - 2;
    if (c[l.n - 1] != q0 + l.m - l.labels[region_order[l.n - 1]] + 1)
      throw PropertyViolation("fan construction is inconsistent");
    for (int j = 1; j < l.n; ++j) {
      ends[j - 1] = {q0, c[j] % l.m};
      rot[q0].push_back(ArcEnd{j - 1, 0});
    }
    // At a shared far vertex the later chord sits nearer the outgoing
    // boundary edge, so far ends are listed in decreasing chord order.
    for (int j = l.n - 1; j >= 1; --j)
      rot[c[j] % l.m].push_back(ArcEnd{j - 1, 1});
  }
  return DiskObject::from_parts(l.labels, std::move(ends), std::move(rot));
}

namespace {

// Face peeling state shared across the enumeration recursion. Edges carry
// ids: boundary edge v is id v, chords get fresh ids on a stack that unwinds
// with the recursion. A dart is (edge id, forward flag).
struct Peel {
  int m = 0;
  std::vector<std::array<int, 2>> edge_vs;
  std::vector<std::vector<std::pair<int, bool>>> faces;
  std::size_t cap = 0;
  std::set<std::string> keys;
  std::vector<DiskObject> out;
  std::vector<int> labels_sorted;
};

struct SubDisk {
  std::vector<int> verts;                   // boundary vertices, ccw
  std::vector<std::pair<int, bool>> edges;  // edge i runs verts[i] -> verts[i+1]
  std::map<int, int> labels;                // label value -> count
};

int label_sum(const std::map<int, int>& ls) {
  int s = 0;
  for (const auto& [v, c] : ls) s += (v - 2) * c;
  return s;
}

// Enumerates nonempty sub-multisets of items whose (value - 2) sum equals the
// target; f runs with the choice in `chosen` and the remainder in `items`.
void split_rec(std::vector<std::pair<int, int>>& items, std::size_t i,
               std::map<int, int>& chosen, int target,
               const std::function<void()>& f) {
  if (i == items.size()) {
    if (target == 0 && !chosen.empty()) f();
    return;
  }
  int value = items[i].first;
  int count = items[i].second;
  for (int take = 0; take <= count; ++take) {
    int cost = (value - 2) * take;
    if (cost > target) break;
    if (take) chosen[value] = take;
    items[i].second = count - take;
    split_rec(items, i + 1, chosen, target - cost, f);
    items[i].second = count;
  }
  chosen.erase(value);
}

void peel(Peel& st, std::vector<SubDisk> pending);

void finalize_object(Peel& st) {
  // Rebuild the rotation system from the face walks: a face corner (d1, d2)
  // at vertex v says the counterclockwise successor of d2 at v is the
  // reversal of d1.
  auto tail = [&](std::pair<int, bool> d) {
    return d.second ? st.edge_vs[d.first][0] : st.edge_vs[d.first][1];
  };
  auto enc = [](std::pair<int, bool> d) {
    return d.first * 2 + (d.second ? 1 : 0);
  };
  std::unordered_map<int, std::pair<int, bool>> succ;
  auto corner = [&](std::pair<int, bool> d1, std::pair<int, bool> d2) {
    succ[enc(d2)] = {d1.first, !d1.second};
  };
  for (const auto& f : st.faces) {
    for (std::size_t i = 0; i < f.size(); ++i)
      corner(f[i], f[(i + 1) % f.size()]);
  }
  for (int v = 0; v < st.m; ++v) {
    // Outer face corner at v: arrive backward along boundary edge v, leave
    // backward along boundary edge v-1.
    corner({v, false}, {(v - 1 + st.m) % st.m, false});
  }
  int chord_count = static_cast<int>(st.edge_vs.size()) - st.m;
  std::vector<std::array<int, 2>> ends(chord_count);
  for (int c = 0; c < chord_count; ++c) ends[c] = st.edge_vs[st.m + c];
  std::vector<std::vector<ArcEnd>> rot(st.m);
  for (int v = 0; v < st.m; ++v) {
    std::pair<int, bool> stop{(v - 1 + st.m) % st.m, false};
    std::pair<int, bool> cur{v, true};
    int guard = 0;
    while (true) {
      auto it = succ.find(enc(cur));
      if (it == succ.end())
        throw PropertyViolation("enumeration lost a dart corner");
      cur = it->second;
      if (cur == stop) break;
      if (cur.first < st.m || tail(cur) != v)
        throw PropertyViolation("enumeration produced a bad rotation");
      rot[v].push_back(ArcEnd{cur.first - st.m, cur.second ? 0 : 1});
      if (++guard > 2 * chord_count + 2)
        throw PropertyViolation("rotation reconstruction does not terminate");
    }
  }
  DiskObject obj = DiskObject::from_parts(st.labels_sorted, std::move(ends),
                                          std::move(rot));
  if (st.keys.insert(obj.key()).second) {
    if (st.keys.size() > st.cap)
      throw CapExceeded("object enumeration exceeded the configured limit");
    st.out.push_back(std::move(obj));
  }
}

// Peels the face containing the first boundary edge of the given sub-disk,
// in every admissible way, recursing into the cut-off pockets.
void peel_first(Peel& st, SubDisk disk, std::vector<SubDisk> rest) {
  int k = static_cast<int>(disk.verts.size());
  std::vector<int> values;
  for (const auto& [v, c] : disk.labels) values.push_back(v);
  for (int s : values) {
    if (s > k) continue;
    std::vector<int> extra_idx;
    // The face contains vertices 0 and 1 (it owns edge 0) plus s-2 more.
    std::function<void(int, int)> choose = [&](int start, int need) {
      if (need > 0) {
        for (int i = start; i < k; ++i) {
          extra_idx.push_back(i);
          choose(i + 1, need - 1);
          extra_idx.pop_back();
        }
        return;
      }
      std::vector<int> chosen{0, 1};
      chosen.insert(chosen.end(), extra_idx.begin(), extra_idx.end());
      int steps = s;
      // Between consecutive chosen vertices the face either follows the
      // boundary edge (adjacent steps only, and forced for the first step)
      // or crosses a fresh chord that cuts off a pocket.
      std::vector<int> variant(steps, 0);
      std::function<void(int)> run = [&](int step) {
        if (step < steps) {
          int p = chosen[step];
          int q = (step + 1 < steps) ? chosen[step + 1] : k;
          if (q == p + 1 && step > 0) {
            variant[step] = 0;
            run(step + 1);
            variant[step] = 1;
            run(step + 1);
          } else {
            variant[step] = q == p + 1 ? 0 : 1;
            run(step + 1);
          }
          return;
        }
        std::map<int, int> remaining = disk.labels;
        if (--remaining[s] == 0) remaining.erase(s);
        std::vector<std::pair<int, bool>> face;
        std::vector<SubDisk> pockets;
        std::vector<int> targets;
        std::size_t chords_added = 0;
        for (int t = 0; t < steps; ++t) {
          int p = chosen[t];
          int q = (t + 1 < steps) ? chosen[t + 1] : k;
          if (variant[t] == 0) {
            face.push_back(disk.edges[p]);
            continue;
          }
          int qa = q % k;
          int chord = static_cast<int>(st.edge_vs.size());
          st.edge_vs.push_back({disk.verts[p], disk.verts[qa]});
          chords_added += 1;
          face.push_back({chord, true});
          SubDisk pocket;
          for (int i = p; i < q; ++i) {
            pocket.verts.push_back(disk.verts[i]);
            pocket.edges.push_back(disk.edges[i]);
          }
          pocket.verts.push_back(disk.verts[qa]);
          pocket.edges.push_back({chord, false});
          targets.push_back(static_cast<int>(pocket.verts.size()) - 2);
          pockets.push_back(std::move(pocket));
        }
        int want = 0;
        for (int t : targets) want += t;
        bool feasible = want == label_sum(remaining) &&
                        (!pockets.empty() || remaining.empty());
        if (feasible) {
          st.faces.push_back(face);
          std::function<void(std::size_t, std::map<int, int>)> assign =
              [&](std::size_t pi, std::map<int, int> avail) {
                if (pi == pockets.size()) {
                  if (!avail.empty()) return;
                  std::vector<SubDisk> next = rest;
                  for (const SubDisk& p : pockets) next.push_back(p);
                  peel(st, std::move(next));
                  return;
                }
                std::vector<std::pair<int, int>> items(avail.begin(),
                                                       avail.end());
                std::map<int, int> chosen_ls;
                split_rec(items, 0, chosen_ls, targets[pi], [&]() {
                  pockets[pi].labels = chosen_ls;
                  std::map<int, int> rest_ls;
                  for (const auto& [v, c] : items)
                    if (c > 0) rest_ls[v] = c;
                  assign(pi + 1, rest_ls);
                });
              };
          assign(0, remaining);
          st.faces.pop_back();
        }
        for (std::size_t j = 0; j < chords_added; ++j) st.edge_vs.pop_back();
      };
      run(0);
    };
    choose(2, s - 2);
  }
}

void peel(Peel& st, std::vector<SubDisk> pending) {
  if (pending.empty()) {
    finalize_object(st);
    return;
  }
  SubDisk disk = std::move(pending.back());
  pending.pop_back();
  peel_first(st, std::move(disk), std::move(pending));
}

}  // namespace

std::vector<DiskObject> enumerate_objects(const Labelling& l,
                                          std::size_t max_objects) {
  Peel st;
  st.m = l.m;
  st.cap = max_objects;
  st.labels_sorted = l.labels;
  std::sort(st.labels_sorted.begin(), st.labels_sorted.end());
  for (int v = 0; v < l.m; ++v) st.edge_vs.push_back({v, (v + 1) % l.m});
  SubDisk whole;
  for (int v = 0; v < l.m; ++v) {
    whole.verts.push_back(v);
    whole.edges.push_back({v, true});
  }
  for (int lab : l.labels) whole.labels[lab] += 1;
  peel(st, {whole});
  std::sort(st.out.begin(), st.out.end(),
            [](const DiskObject& a, const DiskObject& b) {
              return a.key() < b.key();
            });
  return st.out;
}

}  // namespace garside
