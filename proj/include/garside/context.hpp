#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "garside/disk.hpp"

namespace garside {

// One atomic morphism: rotate `arc` counterclockwise at the source object.
// Two moves are the same morphism exactly when source and arc agree.
struct Move {
  std::string source;
  int arc = 0;
  std::string target;
  std::vector<int> corr;  // source arc id -> target arc id
  int weight = 0;         // m minus the two endpoint displacements

  friend bool operator==(const Move& a, const Move& b) {
    return a.source == b.source && a.arc == b.arc;
  }
};

// Memoizing workspace shared by the presentation, engine, and lattice
// layers. Objects are interned by canonical key; atomic moves are computed
// once per (source, arc).
class Context {
 public:
  const DiskObject& object(const std::string& key);
  const DiskObject& intern(const DiskObject& x);
  const Move& move(const std::string& source_key, int arc);
  std::vector<Move> atoms(const std::string& source_key);

 private:
  std::map<std::string, DiskObject> objects_;
  std::map<std::pair<std::string, int>, Move> moves_;
};

}  // namespace garside
