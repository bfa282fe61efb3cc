#include "garside/lattice.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "garside/errors.hpp"
#include "json.hpp"

namespace garside {

namespace {

std::string arcs_text(const std::vector<int>& arcs) {
  std::string out;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(arcs[i]);
  }
  return out;
}

// Reachability over the cover digraph, reflexive by convention.
std::vector<std::vector<char>> reach_table(
    int n, const std::vector<std::tuple<int, int, int>>& covers) {
  std::vector<std::vector<int>> up(n);
  for (const auto& [from, arc, to] : covers) {
    (void)arc;
    up[from].push_back(to);
  }
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (int start = 0; start < n; ++start) {
    std::vector<int> stack{start};
    reach[start][start] = 1;
    while (!stack.empty()) {
      int at = stack.back();
      stack.pop_back();
      for (int next : up[at]) {
        if (reach[start][next]) continue;
        reach[start][next] = 1;
        stack.push_back(next);
      }
    }
  }
  return reach;
}

}  // namespace

IntervalLattice interval(Engine& eng, const std::string& base_key,
                         std::size_t node_cap, int threads) {
  Context& ctx = eng.context();
  std::string base = ctx.object(base_key).key();
  const PositiveWord top_word = eng.delta(base);

  struct Node {
    PositiveWord canon;     // canonical representative from the base
    PositiveWord residual;  // canon\delta, a word from the target of canon
  };
  struct Child {
    int arc = 0;
    PositiveWord canon;
    PositiveWord residual;
  };
  std::vector<Node> nodes;
  std::map<std::string, int> by_canon;
  std::set<std::tuple<int, int, int>> cover_set;

  nodes.push_back({PositiveWord{base, {}}, top_word});
  by_canon.emplace("", 0);

  // Extends one divisor by every atom dividing its residual. Pure given the
  // node, so any engine over any context computes the same children.
  auto expand = [&base](Engine& worker, const Node& node) {
    std::vector<Child> out;
    const std::string& cur = node.residual.source;
    int rank = worker.context().object(cur).arc_count();
    for (int arc = 0; arc < rank; ++arc) {
      std::optional<PositiveWord> rest =
          worker.left_divides(PositiveWord{cur, {arc}}, node.residual);
      if (!rest) continue;
      PositiveWord extended{base, node.canon.arcs};
      extended.arcs.push_back(arc);
      out.push_back({arc, worker.canonical_word(extended), std::move(*rest)});
    }
    return out;
  };
  auto absorb = [&](int parent, std::vector<Child> children,
                    std::vector<int>* fresh) {
    for (Child& child : children) {
      std::string key = arcs_text(child.canon.arcs);
      auto found = by_canon.find(key);
      int at;
      if (found != by_canon.end()) {
        at = found->second;
      } else {
        if (nodes.size() >= node_cap) {
          throw CapExceeded("interval exceeded the node limit");
        }
        at = static_cast<int>(nodes.size());
        by_canon.emplace(key, at);
        nodes.push_back({std::move(child.canon), std::move(child.residual)});
        if (fresh) fresh->push_back(at);
      }
      cover_set.insert({parent, child.arc, at});
    }
  };

  if (threads <= 1) {
    for (std::size_t head = 0; head < nodes.size(); ++head) {
      Node snapshot = nodes[head];
      absorb(static_cast<int>(head), expand(eng, snapshot), nullptr);
    }
  } else {
    std::vector<std::unique_ptr<Context>> worker_ctx;
    std::vector<std::unique_ptr<Engine>> worker_eng;
    for (int t = 0; t < threads; ++t) {
      worker_ctx.push_back(std::make_unique<Context>());
      worker_eng.push_back(
          std::make_unique<Engine>(*worker_ctx.back(), eng.step_cap()));
    }
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
      std::vector<std::vector<Child>> results(frontier.size());
      std::vector<std::exception_ptr> errors(threads);
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t]() {
          try {
            for (std::size_t p = static_cast<std::size_t>(t);
                 p < frontier.size(); p += static_cast<std::size_t>(threads)) {
              results[p] = expand(*worker_eng[t], nodes[frontier[p]]);
            }
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
      for (std::thread& worker : pool) worker.join();
      for (const std::exception_ptr& error : errors) {
        if (error) std::rethrow_exception(error);
      }
      // Merging in frontier order keeps node numbering independent of the
      // thread interleaving, so runs agree for every thread count.
      std::vector<int> next;
      for (std::size_t p = 0; p < frontier.size(); ++p) {
        absorb(frontier[p], std::move(results[p]), &next);
      }
      frontier = std::move(next);
    }
  }

  int n = static_cast<int>(nodes.size());
  int top_at = -1;
  for (int i = 0; i < n; ++i) {
    if (!nodes[i].residual.arcs.empty()) continue;
    if (top_at != -1) {
      throw PropertyViolation("the interval has two maximal divisor classes");
    }
    top_at = i;
  }
  if (top_at == -1) {
    throw PropertyViolation("the interval has no maximal divisor class");
  }

  // Order elements by cover distance from the bottom, then by letters.
  std::vector<std::vector<int>> up(n);
  for (const auto& [from, arc, to] : cover_set) {
    (void)arc;
    up[from].push_back(to);
  }
  std::vector<int> layer(n, -1);
  std::vector<int> queue{0};
  layer[0] = 0;
  for (std::size_t at = 0; at < queue.size(); ++at) {
    for (int next : up[queue[at]]) {
      if (layer[next] != -1) continue;
      layer[next] = layer[queue[at]] + 1;
      queue.push_back(next);
    }
  }
  for (int i = 0; i < n; ++i) {
    if (layer[i] == -1) {
      throw PropertyViolation("an interval element is unreachable");
    }
  }
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (layer[a] != layer[b]) return layer[a] < layer[b];
    return nodes[a].canon.arcs < nodes[b].canon.arcs;
  });
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;

  IntervalLattice out;
  out.base = base;
  out.elements.reserve(n);
  for (int i = 0; i < n; ++i) out.elements.push_back(nodes[order[i]].canon);
  for (const auto& [from, arc, to] : cover_set) {
    out.covers.emplace_back(position[from], arc, position[to]);
  }
  std::sort(out.covers.begin(), out.covers.end());
  out.bottom = position[0];
  out.top = position[top_at];
  return out;
}

LatticeCheck verify_lattice(Engine& eng, const IntervalLattice& lat) {
  LatticeCheck check;
  int n = static_cast<int>(lat.elements.size());
  if (n == 0) {
    check.detail = "the lattice has no elements";
    return check;
  }
  for (const auto& [from, arc, to] : lat.covers) {
    (void)arc;
    if (from < 0 || from >= n || to < 0 || to >= n) {
      check.detail = "a cover leaves the element range";
      return check;
    }
  }
  std::vector<std::vector<char>> reach = reach_table(n, lat.covers);
  auto leq = [&](int a, int b) { return reach[a][b] != 0; };

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && leq(i, j) && leq(j, i)) {
        check.detail = "the cover digraph has a cycle";
        return check;
      }
    }
  }
  for (const auto& [from, arc, to] : lat.covers) {
    (void)arc;
    if (from == to) {
      check.detail = "a cover loops at one element";
      return check;
    }
    for (int k = 0; k < n; ++k) {
      if (k != from && k != to && leq(from, k) && leq(k, to)) {
        check.detail = "a cover skips an intermediate element";
        return check;
      }
    }
  }
  for (int j = 0; j < n; ++j) {
    if (!leq(lat.bottom, j)) {
      check.detail = "the bottom does not divide every element";
      return check;
    }
    if (!leq(j, lat.top)) {
      check.detail = "the top is not divided by every element";
      return check;
    }
  }

  std::vector<std::vector<int>> lub(n, std::vector<int>(n, -1));
  std::vector<std::vector<int>> glb(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      std::vector<int> uppers;
      std::vector<int> lowers;
      for (int k = 0; k < n; ++k) {
        if (leq(i, k) && leq(j, k)) uppers.push_back(k);
        if (leq(k, i) && leq(k, j)) lowers.push_back(k);
      }
      int least = -1;
      for (int k : uppers) {
        bool minimal = true;
        for (int other : uppers) {
          if (other != k && leq(other, k)) minimal = false;
        }
        if (!minimal) continue;
        if (least != -1) {
          check.detail = "two elements have no unique least upper bound";
          return check;
        }
        least = k;
      }
      int greatest = -1;
      for (int k : lowers) {
        bool maximal = true;
        for (int other : lowers) {
          if (other != k && leq(k, other)) maximal = false;
        }
        if (!maximal) continue;
        if (greatest != -1) {
          check.detail = "two elements have no unique greatest lower bound";
          return check;
        }
        greatest = k;
      }
      if (least == -1 || greatest == -1) {
        check.detail = "a pair of elements has no bound at all";
        return check;
      }
      lub[i][j] = least;
      glb[i][j] = greatest;
    }
  }
  check.is_lattice = true;

  // The order-theoretic bounds must be the engine's join and meet, and every
  // cover must append exactly its arc.
  try {
    for (const auto& [from, arc, to] : lat.covers) {
      PositiveWord stepped{lat.elements[from].source,
                           lat.elements[from].arcs};
      stepped.arcs.push_back(arc);
      if (!eng.equal_positive(stepped, lat.elements[to])) {
        check.detail = "a cover does not append its own arc";
        return check;
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        PositiveWord joined = eng.join(lat.elements[i], lat.elements[j]);
        if (!eng.equal_positive(joined, lat.elements[lub[i][j]])) {
          check.detail = "the engine join disagrees with the order";
          return check;
        }
        PositiveWord met = eng.meet(lat.elements[i], lat.elements[j]);
        if (!eng.equal_positive(met, lat.elements[glb[i][j]])) {
          check.detail = "the engine meet disagrees with the order";
          return check;
        }
      }
    }
  } catch (const std::runtime_error& err) {
    check.detail = err.what();
    return check;
  }
  check.matches_engine = true;
  return check;
}

TamariOrder tamari(Engine& eng, const std::string& base_key,
                   std::size_t node_cap, int threads) {
  Context& ctx = eng.context();
  const DiskObject& x = ctx.object(base_key);
  for (int label : x.labels()) {
    if (label != 3) {
      throw UsageError("the tamari order needs every label to be three");
    }
  }
  IntervalLattice lat = interval(eng, base_key, node_cap, threads);

  TamariOrder out;
  out.base = lat.base;
  out.covers = lat.covers;
  out.bottom = lat.bottom;
  out.top = lat.top;
  std::set<std::string> seen;
  for (const PositiveWord& element : lat.elements) {
    std::string target = word_target(ctx, element);
    if (!seen.insert(target).second) {
      throw PropertyViolation("two divisor classes share a target object");
    }
    out.objects.push_back(target);
  }
  std::size_t total = enumerate_objects(validate(x.labels())).size();
  if (total != out.objects.size()) {
    throw PropertyViolation("the divisor classes miss some objects");
  }
  return out;
}

OracleLattice order_of(const IntervalLattice& lat) {
  OracleLattice out;
  for (const PositiveWord& element : lat.elements) {
    out.elements.push_back(arcs_text(element.arcs));
  }
  for (const auto& [from, arc, to] : lat.covers) {
    (void)arc;
    out.covers.emplace_back(from, to);
  }
  return out;
}

OracleLattice order_of(const TamariOrder& order) {
  OracleLattice out;
  out.elements = order.objects;
  for (const auto& [from, arc, to] : order.covers) {
    (void)arc;
    out.covers.emplace_back(from, to);
  }
  return out;
}

std::string render_hasse(const IntervalLattice& lat, HasseFormat format) {
  if (format == HasseFormat::kDot) {
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < lat.elements.size(); ++i) {
      std::string label = lat.elements[i].arcs.empty()
                              ? "e"
                              : arcs_text(lat.elements[i].arcs);
      out << "  n" << i << " [label=\"" << label << "\"];\n";
    }
    for (const auto& [from, arc, to] : lat.covers) {
      out << "  n" << from << " -> n" << to << " [label=\"" << arc
          << "\"];\n";
    }
    out << "}\n";
    return out.str();
  }
  nlohmann::json doc;
  doc["elements"] = nlohmann::json::array();
  for (const PositiveWord& element : lat.elements) {
    doc["elements"].push_back(element.arcs);
  }
  doc["covers"] = nlohmann::json::array();
  for (const auto& [from, arc, to] : lat.covers) {
    doc["covers"].push_back({from, arc, to});
  }
  doc["top"] = lat.top;
  doc["bottom"] = lat.bottom;
  return doc.dump(2) + "\n";
}

std::string render_hasse(const TamariOrder& order, HasseFormat format) {
  if (format == HasseFormat::kDot) {
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < order.objects.size(); ++i) {
      out << "  n" << i << " [label=\"" << order.objects[i] << "\"];\n";
    }
    for (const auto& [from, arc, to] : order.covers) {
      out << "  n" << from << " -> n" << to << " [label=\"" << arc
          << "\"];\n";
    }
    out << "}\n";
    return out.str();
  }
  nlohmann::json doc;
  doc["elements"] = order.objects;
  doc["covers"] = nlohmann::json::array();
  for (const auto& [from, arc, to] : order.covers) {
    doc["covers"].push_back({from, arc, to});
  }
  doc["top"] = order.top;
  doc["bottom"] = order.bottom;
  return doc.dump(2) + "\n";
}

namespace {

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) {
    throw UsageError("cannot open the hasse output file: " + path);
  }
  file << text;
  if (!file.good()) {
    throw UsageError("writing the hasse output failed: " + path);
  }
}

}  // namespace

void hasse_export(const IntervalLattice& lat, HasseFormat format,
                  const std::string& path) {
  write_text_file(path, render_hasse(lat, format));
}

void hasse_export(const TamariOrder& order, HasseFormat format,
                  const std::string& path) {
  write_text_file(path, render_hasse(order, format));
}

}  // namespace garside
