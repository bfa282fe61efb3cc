#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace garside {

// Orientation convention, fixed once for the whole library: every rotation
// list stores the arc ends incident to a boundary vertex in counterclockwise
// order, starting just after the boundary edge toward the next vertex
// (v -> v+1) and ending just before the boundary edge toward the previous one
// (v -> v-1). Interior faces are traced with the region on the left, so their
// walks run counterclockwise. Flipping this constant is not supported; it
// would mirror every rotation and complement in the library.
inline constexpr bool kCounterclockwise = true;

// A multiset of puncture labels together with the derived disk sizes.
struct Labelling {
  std::vector<int> labels;  // caller order, each >= 2
  int n = 0;                // number of punctures
  int m = 0;                // boundary vertices: 2 + sum over labels of (l - 2)
};

// Checks the label list (nonempty, every entry >= 2) and computes n and m.
// Throws UsageError on bad input.
Labelling validate(const std::vector<int>& labels);

// One end of an arc as it appears in a rotation list.
struct ArcEnd {
  int arc = 0;
  int end = 0;  // 0 or 1
  friend bool operator==(const ArcEnd&, const ArcEnd&) = default;
};

// An admissible decomposition of the labelled disk: m boundary vertices on a
// counterclockwise circle, boundary edge i joining vertices i and i+1 mod m,
// and n-1 arcs (chords with distinct endpoints, parallel arcs allowed) whose
// attachment order at each vertex is given by the rotation lists. Valid means
// the interior face perimeter multiset equals the label multiset.
//
// Instances are immutable after construction and identified by a canonical
// key: labels sorted ascending, arcs renumbered by first occurrence in a scan
// of the rotation lists in vertex order.
//
// Darts (directed edge sides) are encoded as ints:
//   [0, m)      boundary edge v traversed v -> v+1
//   [m, 2m)     boundary edge v-1 traversed v -> v-1 (outer side)
//   [2m, ...)   arc darts: 2m + 2*arc + end leaves endpoint `end` of `arc`
class DiskObject {
 public:
  int m() const { return m_; }
  int n() const { return static_cast<int>(labels_.size()); }
  const std::vector<int>& labels() const { return labels_; }  // sorted
  int arc_count() const { return static_cast<int>(ends_.size()); }
  const std::array<int, 2>& arc_ends(int arc) const { return ends_[arc]; }
  const std::vector<ArcEnd>& rotation(int v) const { return rot_[v]; }
  const std::string& key() const { return key_; }

  bool dart_is_arc(int d) const { return d >= 2 * m_; }
  int dart_arc(int d) const { return (d - 2 * m_) / 2; }
  int dart_arc_end(int d) const { return (d - 2 * m_) % 2; }
  int arc_dart(int arc, int end) const { return 2 * m_ + 2 * arc + end; }
  int dart_tail(int d) const;
  int dart_head(int d) const;
  int dart_alpha(int d) const;  // same edge, opposite direction

  // Full counterclockwise cyclic dart order around a vertex:
  // [v -> v+1], arc ends per rotation list, [v -> v-1].
  std::vector<int> vertex_darts(int v) const;

  // The face walk containing dart d, starting at d, region on the left.
  std::vector<int> face_of(int d) const;

  // All interior face walks, each starting at its least dart, ordered by that
  // dart. The outer face (the m clockwise boundary darts) is omitted.
  std::vector<std::vector<int>> faces() const;

  // Perimeters of the interior faces, sorted ascending. Always equals
  // labels() for a validated object.
  std::vector<int> face_sizes() const;

  // Canonicalizes and fully validates; throws PropertyViolation if the data
  // does not describe an admissible decomposition of the labelled disk.
  static DiskObject from_parts(std::vector<int> labels,
                               std::vector<std::array<int, 2>> ends,
                               std::vector<std::vector<ArcEnd>> rot);

  // Same, but also reports the arc renumbering applied by canonicalization
  // (input arc id -> canonical arc id).
  static std::pair<DiskObject, std::vector<int>> from_parts_with_map(
      std::vector<int> labels, std::vector<std::array<int, 2>> ends,
      std::vector<std::vector<ArcEnd>> rot);

  // Parses a canonical key ("v1:...") back into an object. Accepts any
  // well-formed key and re-canonicalizes. Throws UsageError on parse errors.
  static DiskObject parse_key(const std::string& key);

  friend bool operator==(const DiskObject& a, const DiskObject& b) {
    return a.key_ == b.key_;
  }

 private:
  DiskObject() = default;

  int m_ = 0;
  std::vector<int> labels_;                 // sorted ascending
  std::vector<std::array<int, 2>> ends_;    // arc -> endpoint vertices
  std::vector<std::vector<ArcEnd>> rot_;    // vertex -> ccw arc end list
  std::string key_;
};

// Result of rotating one arc: the new object, the induced arc identity map
// (source id -> target id, defined for every arc including the rotated one),
// and the counterclockwise boundary distances travelled by the two endpoints.
struct MoveGeometry {
  DiskObject target;
  std::vector<int> corr;
  int d0 = 0;
  int d1 = 0;
};

// Rotates one arc one edge counterclockwise (or clockwise) along the boundary
// of the region obtained by merging its two faces. Face sizes are preserved
// region by region; this is asserted internally.
MoveGeometry rotate_arc(const DiskObject& x, int arc,
                        bool counterclockwise = true);

// Removes all chosen arcs simultaneously, advances each endpoint one edge
// counterclockwise along the boundary of its own merged region, and reinserts
// them. A singleton set agrees with rotate_arc; the full arc set agrees with
// shift_object(x, 1). Returns the target and the arc identity map.
std::pair<DiskObject, std::vector<int>> diagonal_move(const DiskObject& x,
                                                      std::vector<int> arcs);

// Relabels every vertex v as v + k mod m (a rigid rotation of the disk).
std::pair<DiskObject, std::vector<int>> shift_object(const DiskObject& x,
                                                     int k);

// The fan object: all arcs share the vertex q0 and the regions appear
// counterclockwise from q0 in the prescribed order of label indices
// (region_order is a permutation of 0..n-1).
DiskObject fan_object(const Labelling& l, int q0,
                      const std::vector<int>& region_order);

// All valid objects for the labelling, in canonical key order. Enumerates by
// recursive face peeling (the face containing boundary edge 0 first) and
// deduplicates by canonical key. Throws CapExceeded past max_objects.
std::vector<DiskObject> enumerate_objects(const Labelling& l,
                                          std::size_t max_objects = 100000);

}  // namespace garside
