#include "garside/cli.hpp"

#include <algorithm>
#include <cstddef>
#include <exception>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "garside/disk.hpp"
#include "garside/engine.hpp"
#include "garside/errors.hpp"
#include "garside/json_io.hpp"
#include "garside/lattice.hpp"
#include "garside/oracle.hpp"
#include "garside/presentation.hpp"

namespace garside {

namespace {

std::string arcs_line(const std::vector<int>& arcs) {
  std::string out;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(arcs[i]);
  }
  return out;
}

// Loads objects, words, and fractions from canonical keys, JSON files, or
// standard input ("-", usable at most once per command).
class InputLoader {
 public:
  std::string slurp(const std::string& path) {
    if (path == "-") {
      if (stdin_used_) {
        throw UsageError("standard input can only be read once");
      }
      stdin_used_ = true;
    }
    return read_text(path);
  }

  const DiskObject& object(Context& ctx, const std::string& value) {
    if (value.rfind("v1:", 0) == 0) {
      return ctx.intern(DiskObject::parse_key(value));
    }
    return ctx.intern(object_from_json(parse_json(slurp(value))));
  }

  PositiveWord word(Context& ctx, const std::string& path) {
    return adopt(ctx, word_from_json(parse_json(slurp(path))));
  }

  GroupoidElement fraction(Context& ctx, const std::string& path) {
    nlohmann::json doc = parse_json(slurp(path));
    GroupoidElement g = fraction_from_json(doc);
    g.denominator = adopt(ctx, g.denominator);
    g.numerator = adopt(ctx, g.numerator);
    return g;
  }

 private:
  PositiveWord adopt(Context& ctx, PositiveWord w) {
    w.source = ctx.intern(DiskObject::parse_key(w.source)).key();
    word_stations(ctx, w);
    return w;
  }

  bool stdin_used_ = false;
};

void emit(const nlohmann::json& doc) { std::cout << doc.dump(2) << "\n"; }

struct Caps {
  std::size_t steps = 100000;
  std::size_t nodes = 10000;
  std::size_t oracle_length = 12;
  std::size_t oracle_class = 50000;
  int threads = 1;
};

void add_steps(CLI::App* sub, Caps& caps) {
  sub->add_option("--steps", caps.steps, "word reversing step cap")
      ->capture_default_str();
}

void add_threads(CLI::App* sub, Caps& caps) {
  sub->add_option("--threads", caps.threads, "worker thread count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void add_oracle_caps(CLI::App* sub, Caps& caps) {
  sub->add_option("--oracle-length", caps.oracle_length,
                  "oracle rewrite length cap")
      ->capture_default_str();
  sub->add_option("--oracle-class", caps.oracle_class,
                  "oracle congruence class size cap")
      ->capture_default_str();
}

const char* answer_name(OracleAnswer answer) {
  switch (answer) {
    case OracleAnswer::kYes: return "yes";
    case OracleAnswer::kNo: return "no";
    case OracleAnswer::kInconclusive: return "inconclusive";
  }
  return "?";
}

// Resolves the objects a sweeping verb runs over: one explicit object, or
// every object of a labelling.
std::vector<std::string> sweep_objects(Context& ctx, InputLoader& in,
                                       const std::string& object_value,
                                       const std::vector<int>& labels) {
  if (!object_value.empty() && !labels.empty()) {
    throw UsageError("pass either --object or --labels, not both");
  }
  std::vector<std::string> keys;
  if (!object_value.empty()) {
    keys.push_back(in.object(ctx, object_value).key());
  } else if (!labels.empty()) {
    for (const DiskObject& x : enumerate_objects(validate(labels))) {
      keys.push_back(ctx.intern(x).key());
    }
  } else {
    throw UsageError("pass --object or --labels");
  }
  return keys;
}

// The single base object a verb like interval needs. A labelling works only
// when it determines the object uniquely.
std::string single_base(Context& ctx, InputLoader& in,
                        const std::string& object_value,
                        const std::vector<int>& labels) {
  std::vector<std::string> keys = sweep_objects(ctx, in, object_value, labels);
  if (keys.size() != 1) {
    throw UsageError("the labelling has " + std::to_string(keys.size()) +
                     " objects; pick one with --object");
  }
  return keys.front();
}

int run_cube_check(Context& ctx, InputLoader& in, const Caps& caps,
                   const std::string& object_value,
                   const std::vector<int>& labels, bool json) {
  std::vector<std::string> keys = sweep_objects(ctx, in, object_value, labels);
  std::vector<CubeReport> reports(keys.size());
  if (caps.threads <= 1) {
    Engine eng(ctx, caps.steps);
    for (std::size_t i = 0; i < keys.size(); ++i) {
      reports[i] = eng.cube_check(
          keys[i], OracleCaps{caps.oracle_length, caps.oracle_class});
    }
  } else {
    std::vector<std::exception_ptr> errors(caps.threads);
    std::vector<std::thread> pool;
    for (int t = 0; t < caps.threads; ++t) {
      pool.emplace_back([&, t]() {
        try {
          Context worker_ctx;
          Engine worker(worker_ctx, caps.steps);
          for (std::size_t i = static_cast<std::size_t>(t); i < keys.size();
               i += static_cast<std::size_t>(caps.threads)) {
            reports[i] = worker.cube_check(
                keys[i], OracleCaps{caps.oracle_length, caps.oracle_class});
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
  }

  std::size_t failures = 0;
  std::size_t unresolved = 0;
  for (const CubeReport& report : reports) {
    failures += report.failures.size();
    unresolved += report.inconclusive.size();
    unresolved += static_cast<std::size_t>(report.undefined);
  }
  if (json) {
    nlohmann::json doc;
    doc["objects"] = nlohmann::json::array();
    for (std::size_t i = 0; i < keys.size(); ++i) {
      nlohmann::json entry;
      entry["object"] = keys[i];
      entry["triples"] = reports[i].triples;
      entry["undefined"] = reports[i].undefined;
      entry["failures"] = nlohmann::json::array();
      for (const CubeTriple& triple : reports[i].failures) {
        entry["failures"].push_back({triple.a, triple.b, triple.c});
      }
      entry["inconclusive"] = nlohmann::json::array();
      for (const CubeTriple& triple : reports[i].inconclusive) {
        entry["inconclusive"].push_back({triple.a, triple.b, triple.c});
      }
      doc["objects"].push_back(std::move(entry));
    }
    doc["passed"] = failures == 0;
    doc["conclusive"] = unresolved == 0;
    emit(doc);
  } else {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      std::cout << keys[i] << ": triples " << reports[i].triples
                << ", failures " << reports[i].failures.size()
                << ", inconclusive " << reports[i].inconclusive.size()
                << ", undefined " << reports[i].undefined << "\n";
    }
    std::cout << "cube condition: "
              << (failures != 0 ? "fail"
                                : (unresolved != 0 ? "unresolved" : "pass"))
              << " (" << keys.size() << " objects)\n";
  }
  if (failures != 0) return 1;
  if (unresolved != 0) return 3;
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"labelled disk groupoid tool", "garside"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "read option defaults from an INI file (flags win)");
  bool json = false;
  app.add_flag("--json", json, "machine readable output");

  int code = 0;
  auto in = std::make_shared<InputLoader>();

  // objects
  {
    auto* sub = app.add_subcommand("objects", "list the objects of a labelling");
    sub->fallthrough();
    auto labels = std::make_shared<std::vector<int>>();
    auto max_objects = std::make_shared<std::size_t>(100000);
    sub->add_option("--labels", *labels, "puncture labels, e.g. 3,3,3")
        ->required()
        ->delimiter(',');
    sub->add_option("--max", *max_objects, "object count cap")
        ->capture_default_str();
    sub->callback([labels, max_objects, &json]() {
      std::vector<DiskObject> all =
          enumerate_objects(validate(*labels), *max_objects);
      if (json) {
        nlohmann::json doc;
        doc["count"] = all.size();
        doc["objects"] = nlohmann::json::array();
        for (const DiskObject& x : all) doc["objects"].push_back(x.key());
        emit(doc);
      } else {
        for (const DiskObject& x : all) std::cout << x.key() << "\n";
      }
    });
  }

  // atoms
  {
    auto* sub = app.add_subcommand("atoms", "list the atomic moves at an object");
    sub->fallthrough();
    auto object_value = std::make_shared<std::string>();
    sub->add_option("--object", *object_value,
                    "canonical key, JSON file, or - for stdin")
        ->required();
    sub->callback([object_value, in, &json]() {
      Context ctx;
      const DiskObject& x = in->object(ctx, *object_value);
      std::vector<Move> moves = ctx.atoms(x.key());
      if (json) {
        nlohmann::json doc;
        doc["source"] = x.key();
        doc["atoms"] = nlohmann::json::array();
        for (const Move& move : moves) {
          nlohmann::json entry;
          entry["arc"] = move.arc;
          entry["weight"] = move.weight;
          entry["target"] = move.target;
          entry["corr"] = move.corr;
          doc["atoms"].push_back(std::move(entry));
        }
        emit(doc);
      } else {
        for (const Move& move : moves) {
          std::cout << "arc " << move.arc << ": weight " << move.weight
                    << ", target " << move.target << "\n";
        }
      }
    });
  }

  // rotate
  {
    auto* sub = app.add_subcommand("rotate", "rotate one arc along the boundary");
    sub->fallthrough();
    auto object_value = std::make_shared<std::string>();
    auto arc = std::make_shared<int>(0);
    auto clockwise = std::make_shared<bool>(false);
    sub->add_option("--object", *object_value,
                    "canonical key, JSON file, or - for stdin")
        ->required();
    sub->add_option("--arc", *arc, "arc id to rotate")->required();
    sub->add_flag("--cw", *clockwise, "rotate clockwise instead");
    sub->callback([object_value, arc, clockwise, in, &json]() {
      Context ctx;
      const DiskObject& x = in->object(ctx, *object_value);
      if (*arc < 0 || *arc >= x.arc_count()) {
        throw UsageError("arc id out of range: " + std::to_string(*arc));
      }
      MoveGeometry geometry = rotate_arc(x, *arc, !*clockwise);
      if (json) {
        nlohmann::json doc;
        doc["source"] = x.key();
        doc["arc"] = *arc;
        doc["counterclockwise"] = !*clockwise;
        doc["target"] = geometry.target.key();
        doc["corr"] = geometry.corr;
        doc["d0"] = geometry.d0;
        doc["d1"] = geometry.d1;
        if (!*clockwise) doc["weight"] = x.m() - geometry.d0 - geometry.d1;
        emit(doc);
      } else {
        std::cout << "target: " << geometry.target.key() << "\n";
      }
    });
  }

  // complement
  {
    auto* sub = app.add_subcommand(
        "complement", "the elementary relation closing two atoms");
    sub->fallthrough();
    auto object_value = std::make_shared<std::string>();
    auto arcs = std::make_shared<std::vector<int>>();
    sub->add_option("--object", *object_value,
                    "canonical key, JSON file, or - for stdin")
        ->required();
    sub->add_option("--arcs", *arcs, "the two arc ids, e.g. 0,2")
        ->required()
        ->delimiter(',');
    sub->callback([object_value, arcs, in, &json]() {
      if (arcs->size() != 2 || (*arcs)[0] == (*arcs)[1]) {
        throw UsageError("pass exactly two distinct arc ids");
      }
      Context ctx;
      const DiskObject& x = in->object(ctx, *object_value);
      ElementaryRelation rel = complement(ctx, x.key(), (*arcs)[0], (*arcs)[1]);
      PositiveWord left{x.key(), {rel.a.arc}};
      for (const Move& move : rel.a_tail) left.arcs.push_back(move.arc);
      PositiveWord right{x.key(), {rel.b.arc}};
      for (const Move& move : rel.b_tail) right.arcs.push_back(move.arc);
      std::string target =
          rel.a_tail.empty() ? rel.a.target : rel.a_tail.back().target;
      if (json) {
        nlohmann::json doc;
        doc["kind"] = relation_kind_name(rel.kind);
        doc["left"] = word_to_json(left);
        doc["right"] = word_to_json(right);
        doc["target"] = target;
        emit(doc);
      } else {
        std::cout << "kind: " << relation_kind_name(rel.kind) << "\n"
                  << "left: " << arcs_line(left.arcs) << "\n"
                  << "right: " << arcs_line(right.arcs) << "\n"
                  << "target: " << target << "\n";
      }
    });
  }

  // delta
  {
    auto* sub = app.add_subcommand("delta", "the Garside element at an object");
    sub->fallthrough();
    auto object_value = std::make_shared<std::string>();
    auto caps = std::make_shared<Caps>();
    sub->add_option("--object", *object_value,
                    "canonical key, JSON file, or - for stdin")
        ->required();
    add_steps(sub, *caps);
    sub->callback([object_value, caps, in, &json]() {
      Context ctx;
      Engine eng(ctx, caps->steps);
      const DiskObject& x = in->object(ctx, *object_value);
      const PositiveWord& delta = eng.delta(x.key());
      if (json) {
        nlohmann::json doc;
        doc["word"] = word_to_json(delta);
        doc["target"] = word_target(ctx, delta);
        doc["weight"] = word_weight(ctx, delta);
        emit(doc);
      } else {
        std::cout << "arcs: " << arcs_line(delta.arcs) << "\n"
                  << "target: " << word_target(ctx, delta) << "\n"
                  << "weight: " << word_weight(ctx, delta) << "\n";
      }
    });
  }

  // nf
  {
    auto* sub = app.add_subcommand("nf", "greedy normal form of a word");
    sub->fallthrough();
    auto word_path = std::make_shared<std::string>();
    auto caps = std::make_shared<Caps>();
    sub->add_option("--word", *word_path, "word JSON file, or - for stdin")
        ->required();
    add_steps(sub, *caps);
    sub->callback([word_path, caps, in, &json]() {
      Context ctx;
      Engine eng(ctx, caps->steps);
      PositiveWord w = in->word(ctx, *word_path);
      std::vector<PositiveWord> factors = eng.greedy_normal_form(w);
      if (json) {
        nlohmann::json doc = nlohmann::json::array();
        for (const PositiveWord& factor : factors) {
          doc.push_back(word_to_json(factor));
        }
        emit(doc);
      } else {
        std::cout << "factors: " << factors.size() << "\n";
        for (const PositiveWord& factor : factors) {
          std::cout << arcs_line(factor.arcs) << "\n";
        }
      }
    });
  }

  // equal
  {
    auto* sub = app.add_subcommand("equal", "compare two positive words");
    sub->fallthrough();
    auto left_path = std::make_shared<std::string>();
    auto right_path = std::make_shared<std::string>();
    auto use_oracle = std::make_shared<bool>(false);
    auto caps = std::make_shared<Caps>();
    sub->add_option("--left", *left_path, "word JSON file, or - for stdin")
        ->required();
    sub->add_option("--right", *right_path, "word JSON file, or - for stdin")
        ->required();
    sub->add_flag("--oracle", *use_oracle,
                  "cross check with the rewrite closure oracle");
    add_steps(sub, *caps);
    add_oracle_caps(sub, *caps);
    sub->callback([left_path, right_path, use_oracle, caps, in, &json]() {
      Context ctx;
      Engine eng(ctx, caps->steps);
      PositiveWord left = in->word(ctx, *left_path);
      PositiveWord right = in->word(ctx, *right_path);
      bool equal = eng.equal_positive(left, right);
      std::optional<OracleAnswer> oracle;
      if (*use_oracle) {
        OracleReport report =
            oracle_equal(ctx, left.source, left.arcs, right.arcs,
                         OracleCaps{caps->oracle_length, caps->oracle_class});
        oracle = report.answer;
        if ((report.answer == OracleAnswer::kYes && !equal) ||
            (report.answer == OracleAnswer::kNo && equal)) {
          throw PropertyViolation(
              "the oracle disagrees with word reversing on this pair");
        }
      }
      if (json) {
        nlohmann::json doc;
        doc["equal"] = equal;
        if (oracle) doc["oracle"] = answer_name(*oracle);
        emit(doc);
      } else {
        std::cout << (equal ? "equal" : "different") << "\n";
        if (oracle) std::cout << "oracle: " << answer_name(*oracle) << "\n";
      }
    });
  }

  // word-problem
  {
    auto* sub = app.add_subcommand(
        "word-problem", "decide whether a fraction is the identity");
    sub->fallthrough();
    auto fraction_path = std::make_shared<std::string>();
    auto caps = std::make_shared<Caps>();
    sub->add_option("--fraction", *fraction_path,
                    "fraction JSON file, or - for stdin")
        ->required();
    add_steps(sub, *caps);
    sub->callback([fraction_path, caps, in, &json]() {
      Context ctx;
      Engine eng(ctx, caps->steps);
      GroupoidElement g = in->fraction(ctx, *fraction_path);
      GroupoidElement reduced = eng.simplify(g);
      bool identity =
          reduced.denominator.arcs.empty() && reduced.numerator.arcs.empty();
      if (json) {
        nlohmann::json doc;
        doc["identity"] = identity;
        doc["simplified"] = fraction_to_json(reduced);
        emit(doc);
      } else {
        std::cout << (identity ? "identity" : "not the identity") << "\n"
                  << "denominator: " << arcs_line(reduced.denominator.arcs)
                  << "\n"
                  << "numerator: " << arcs_line(reduced.numerator.arcs)
                  << "\n";
      }
    });
  }

  // cube-check
  {
    auto* sub = app.add_subcommand(
        "cube-check", "verify the cube condition over objects");
    sub->fallthrough();
    auto object_value = std::make_shared<std::string>();
    auto labels = std::make_shared<std::vector<int>>();
    auto caps = std::make_shared<Caps>();
    sub->add_option("--object", *object_value,
                    "canonical key, JSON file, or - for stdin");
    sub->add_option("--labels", *labels, "check every object of a labelling")
        ->delimiter(',');
    add_steps(sub, *caps);
    add_threads(sub, *caps);
    add_oracle_caps(sub, *caps);
    sub->callback([object_value, labels, caps, in, &json, &code]() {
      Context ctx;
      code = run_cube_check(ctx, *in, *caps, *object_value, *labels, json);
    });
  }

  // interval
  {
    auto* sub = app.add_subcommand(
        "interval", "the lattice of divisors of delta at a base object");
    sub->fallthrough();
    auto object_value = std::make_shared<std::string>();
    auto labels = std::make_shared<std::vector<int>>();
    auto dot_path = std::make_shared<std::string>();
    auto verify = std::make_shared<bool>(false);
    auto caps = std::make_shared<Caps>();
    sub->add_option("--object", *object_value,
                    "canonical key, JSON file, or - for stdin");
    sub->add_option("--labels", *labels,
                    "labelling with a unique object, e.g. 2,2,2")
        ->delimiter(',');
    sub->add_option("--dot", *dot_path, "write the Hasse diagram as DOT");
    sub->add_flag("--verify", *verify,
                  "brute force the lattice property and engine agreement");
    sub->add_option("--cap", caps->nodes, "node count cap")
        ->capture_default_str();
    add_steps(sub, *caps);
    add_threads(sub, *caps);
    sub->callback(
        [object_value, labels, dot_path, verify, caps, in, &json]() {
          Context ctx;
          Engine eng(ctx, caps->steps);
          std::string base = single_base(ctx, *in, *object_value, *labels);
          IntervalLattice lat =
              interval(eng, base, caps->nodes, caps->threads);
          if (!dot_path->empty()) {
            hasse_export(lat, HasseFormat::kDot, *dot_path);
          }
          std::optional<LatticeCheck> check;
          if (*verify) check = verify_lattice(eng, lat);
          if (check && (!check->is_lattice || !check->matches_engine)) {
            throw PropertyViolation("the interval fails verification: " +
                                    check->detail);
          }
          if (json) {
            nlohmann::json doc = parse_json(render_hasse(lat, HasseFormat::kJson));
            doc["base"] = lat.base;
            if (check) doc["verified"] = true;
            emit(doc);
          } else {
            std::cout << "base: " << lat.base << "\n"
                      << "elements: " << lat.elements.size() << "\n"
                      << "covers: " << lat.covers.size() << "\n"
                      << "bottom: " << lat.bottom << "\n"
                      << "top: " << lat.top << "\n";
            if (check) std::cout << "verified: yes\n";
          }
        });
  }

  // tamari
  {
    auto* sub = app.add_subcommand(
        "tamari", "the interval order on the objects of an all threes labelling");
    sub->fallthrough();
    auto labels = std::make_shared<std::vector<int>>();
    auto base_value = std::make_shared<std::string>("fan");
    auto dot_path = std::make_shared<std::string>();
    auto caps = std::make_shared<Caps>();
    sub->add_option("--labels", *labels, "puncture labels, e.g. 3,3,3")
        ->delimiter(',');
    sub->add_option("--base", *base_value,
                    "fan (default), a canonical key, a JSON file, or -")
        ->capture_default_str();
    sub->add_option("--dot", *dot_path, "write the Hasse diagram as DOT");
    sub->add_option("--cap", caps->nodes, "node count cap")
        ->capture_default_str();
    add_steps(sub, *caps);
    add_threads(sub, *caps);
    sub->callback([labels, base_value, dot_path, caps, in, &json]() {
      Context ctx;
      Engine eng(ctx, caps->steps);
      std::string base;
      if (*base_value == "fan") {
        if (labels->empty()) {
          throw UsageError("the fan base needs --labels");
        }
        Labelling labelling = validate(*labels);
        std::vector<int> order(labelling.n);
        for (int i = 0; i < labelling.n; ++i) order[i] = i;
        base = ctx.intern(fan_object(labelling, 0, order)).key();
      } else {
        const DiskObject& x = in->object(ctx, *base_value);
        if (!labels->empty()) {
          std::vector<int> sorted = *labels;
          std::sort(sorted.begin(), sorted.end());
          if (sorted != x.labels()) {
            throw UsageError("--labels disagrees with the base object");
          }
        }
        base = x.key();
      }
      TamariOrder order = tamari(eng, base, caps->nodes, caps->threads);
      if (!dot_path->empty()) {
        hasse_export(order, HasseFormat::kDot, *dot_path);
      }
      if (json) {
        nlohmann::json doc = parse_json(render_hasse(order, HasseFormat::kJson));
        doc["base"] = order.base;
        emit(doc);
      } else {
        std::cout << "base: " << order.base << "\n"
                  << "objects: " << order.objects.size() << "\n"
                  << "covers: " << order.covers.size() << "\n"
                  << "bottom: " << order.objects[order.bottom] << "\n"
                  << "top: " << order.objects[order.top] << "\n";
      }
    });
  }

  // chargraph
  {
    auto* sub = app.add_subcommand(
        "chargraph", "the relation closure spanned by atoms at an object");
    sub->fallthrough();
    auto object_value = std::make_shared<std::string>();
    auto arcs = std::make_shared<std::vector<int>>();
    auto dot_path = std::make_shared<std::string>();
    auto caps = std::make_shared<Caps>();
    sub->add_option("--object", *object_value,
                    "canonical key, JSON file, or - for stdin")
        ->required();
    sub->add_option("--arcs", *arcs, "the spanning arc ids, e.g. 0,1,2")
        ->required()
        ->delimiter(',');
    sub->add_option("--dot", *dot_path, "write the graph as DOT");
    sub->add_option("--cap", caps->nodes, "node count cap")
        ->capture_default_str();
    sub->callback([object_value, arcs, dot_path, caps, in, &json]() {
      Context ctx;
      const DiskObject& x = in->object(ctx, *object_value);
      CharacteristicGraph graph =
          characteristic_graph(ctx, x.key(), *arcs, caps->nodes);
      if (!dot_path->empty()) {
        std::ofstream file(*dot_path);
        if (!file) {
          throw UsageError("cannot open the DOT output file: " + *dot_path);
        }
        file << render_chargraph(graph, HasseFormat::kDot);
        if (!file.good()) {
          throw UsageError("writing the DOT output failed: " + *dot_path);
        }
      }
      if (json) {
        std::cout << render_chargraph(graph, HasseFormat::kJson);
      } else {
        std::cout << "nodes: " << graph.node_keys.size() << "\n"
                  << "edges: " << graph.edges.size() << "\n";
      }
    });
  }

  // weight
  {
    auto* sub = app.add_subcommand("weight", "the weight of one atomic move");
    sub->fallthrough();
    auto object_value = std::make_shared<std::string>();
    auto arc = std::make_shared<int>(0);
    sub->add_option("--object", *object_value,
                    "canonical key, JSON file, or - for stdin")
        ->required();
    sub->add_option("--arc", *arc, "arc id to rotate")->required();
    sub->callback([object_value, arc, in, &json]() {
      Context ctx;
      const DiskObject& x = in->object(ctx, *object_value);
      if (*arc < 0 || *arc >= x.arc_count()) {
        throw UsageError("arc id out of range: " + std::to_string(*arc));
      }
      const Move& move = ctx.move(x.key(), *arc);
      if (json) {
        nlohmann::json doc;
        doc["object"] = x.key();
        doc["arc"] = *arc;
        doc["weight"] = move.weight;
        emit(doc);
      } else {
        std::cout << move.weight << "\n";
      }
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::CallForAllHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  } catch (const UsageError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  } catch (const CapExceeded& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 3;
  } catch (const PropertyViolation& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return code;
}

}  // namespace garside
