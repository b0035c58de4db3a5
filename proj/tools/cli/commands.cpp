// Copyright 2026 The Pancake Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/commands.hpp"

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "cli/report_json.hpp"
#include "pancake/atomic_file.hpp"
#include "pancake/pancake.hpp"

namespace pancake::cli {
namespace {

struct Options : RunConfig {
  std::string perm;
  std::string input_path;
  bool check = false;
  bool cycle = false;
  bool trace = false;
  int threshold = -1;
  std::uint64_t node_budget = ChunkOptions{}.node_budget;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 1;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string format_of(const Options& o, const char* fallback) {
  return o.output_format.empty() ? fallback : o.output_format;
}

BfsOptions bfs_options(const Options& o) {
  BfsOptions b;
  b.workers = o.worker_count;
  b.memory_budget = o.memory_budget_bytes;
  b.allow_large = o.allow_large;
  return b;
}

void write_text_file(const std::string& path, const std::string& text) {
  write_file_atomically(path, [&](std::ostream& os) { os << text; });
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

void require_degree(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi) {
    throw UsageError(std::string(what) + " requires " + std::to_string(lo) +
                     " <= n <= " + std::to_string(hi) + " (got n=" + std::to_string(n) +
                     ")");
  }
}

int cmd_diameter(const Options& o, std::ostream& out) {
  require_degree(o.n, 2, kMaxDegree, "diameter");
  const DistanceField field = bfs(Permutation::identity(o.n), bfs_options(o));
  const LayerProfile profile = field.layer_profile();
  const int ecc = profile.eccentricity();
  const auto tabulated = table1_diameter(o.n);
  const bool match = !tabulated || *tabulated == ecc;

  const std::string format = format_of(o, "json");
  if (format == "csv") {
    out << profile.to_csv();
  } else if (format == "text") {
    out << "n=" << o.n << " diameter=" << ecc;
    if (tabulated) out << " table1=" << *tabulated << (match ? " match" : " MISMATCH");
    out << "\nlayers:";
    for (auto c : profile.counts) out << ' ' << c;
    out << '\n';
  } else {
    Json j;
    j["command"] = "diameter";
    j["n"] = o.n;
    j["eccentricity"] = ecc;
    j["table1"] = tabulated ? Json(*tabulated) : Json(nullptr);
    j["matches_table1"] = match;
    j["layer_profile"] = profile.counts;
    j["distance_field"] = o.output_path.empty() ? Json(nullptr) : Json(o.output_path);
    out << render(j);
  }
  if (!o.output_path.empty()) field.save(o.output_path);
  return match ? kExitOk : kExitVerifiedFalse;
}

int cmd_profile(const Options& o, std::ostream& out) {
  require_degree(o.n, 2, kMaxDegree, "profile");
  const LayerProfile profile = bfs(Permutation::identity(o.n), bfs_options(o)).layer_profile();
  const std::string format = format_of(o, "csv");
  std::string text;
  if (format == "json") {
    text = render(to_json(profile));
  } else {
    text = profile.to_csv();
  }
  out << text;
  if (!o.output_path.empty()) write_text_file(o.output_path, text);
  return kExitOk;
}

std::string bound_text(const BoundReport& r) {
  std::ostringstream s;
  s << "n: " << r.n << "\n"
    << "threshold (diam P_{n-1}): " << r.threshold << " [" << r.threshold_source << "]\n"
    << "M: " << r.mset_size << " vertices (" << to_string(r.mset_method) << ")\n"
    << "components: " << r.component_sizes.size() << ", induced edges: " << r.induced_edges
    << "\n"
    << "longest segment T: " << r.longest_segment_T << "\n"
    << "d_n: " << r.d_n << "  bound: " << r.bound << "\n"
    << "d_n refined (extension): " << r.d_n_refined << "  bound: " << r.bound_refined << "\n";
  if (r.exact_diameter) s << "exact diameter: " << *r.exact_diameter << "\n";
  if (r.sound) s << "sound: " << (*r.sound ? "yes" : "NO") << "\n";
  if (r.mset_comparison) {
    s << "chunked vs exact: " << r.mset_comparison->missing.size() << " missing, "
      << r.mset_comparison->extra.size() << " extra\n";
  }
  return s.str();
}

int cmd_bound(const Options& o, std::ostream& out) {
  require_degree(o.n, 4, kMaxDegree, "bound");
  BoundOptions options;
  options.bfs = bfs_options(o);
  options.method = o.mset_method == "chunked" ? MSetMethod::kChunked : MSetMethod::kExact;
  options.chunk.chunk_size = o.chunk_size;
  options.chunk.node_budget = o.node_budget;
  if (o.threshold >= 0) options.threshold_override = o.threshold;
  const BoundReport report = certify_bound(o.n, options);

  const std::string text =
      format_of(o, "json") == "text" ? bound_text(report) : render(to_json(report));
  out << text;
  if (!o.output_path.empty()) write_text_file(o.output_path, text);

  const bool disagree = report.mset_comparison && !report.mset_comparison->agree();
  return (report.sound.value_or(true) && !disagree) ? kExitOk : kExitVerifiedFalse;
}

int cmd_trees(const Options& o, std::ostream& out) {
  require_degree(o.n, 3, 7, "trees");
  const HamOrder h = build_ham(o.n, false);
  const QuotientGapTable table = translate_position_index(h, o.worker_count);
  const DistanceField field = bfs(Permutation::identity(o.n), bfs_options(o));
  const PathCoveringReport report = verify_prop2(table, field);

  std::string text;
  if (format_of(o, "json") == "text") {
    const std::uint64_t equal = report.elements - report.counterexamples -
                                report.lower_bound_violations;
    text = "n=" + std::to_string(o.n) + " path-covering equality: " +
           (report.equality ? "holds" : "fails") + " (" + std::to_string(equal) + "/" +
           std::to_string(report.elements) + ")\n";
  } else {
    text = render(to_json(report));
  }
  out << text;
  if (!o.output_path.empty()) write_text_file(o.output_path, text);
  return report.equality ? kExitOk : kExitVerifiedFalse;
}

int cmd_ham(const Options& o, std::ostream& out) {
  HamOrder h;
  if (!o.input_path.empty()) {
    std::ifstream in(o.input_path);
    if (!in) throw UsageError("cannot open " + o.input_path);
    h = read_ham(in);
  } else {
    require_degree(o.n, 3, 8, "ham");
    h = build_ham(o.n, o.cycle);
  }
  const HamValidation validation = validate_ham(h);

  if (format_of(o, "json") == "text") {
    out << "n=" << h.n << " vertices=" << h.order.size() << " cyclic=" << h.cyclic << ' '
        << (validation.valid ? "valid" : "INVALID: " + validation.reason) << '\n';
  } else {
    Json j;
    j["n"] = h.n;
    j["cyclic"] = h.cyclic;
    j["vertices"] = h.order.size();
    j["validation"] = to_json(validation);
    out << render(j);
  }
  if (!o.output_path.empty()) {
    write_file_atomically(o.output_path, [&](std::ostream& os) { write_ham(os, h); });
  }
  return validation.valid ? kExitOk : kExitVerifiedFalse;
}

int cmd_sort(const Options& o, std::ostream& out) {
  const FlipSequence f = greedy_sort(Permutation::parse(o.perm));
  const bool ok = verify_flip_sequence(f);
  std::string text;
  if (format_of(o, "json") == "text") {
    text = f.to_string() + "\n";
    if (o.trace) {
      for (const auto& p : replay(f)) text += p.to_string() + "\n";
    }
  } else {
    Json j = to_json(f);
    if (o.trace) {
      Json trace = Json::array();
      for (const auto& p : replay(f)) trace.push_back(p.to_string());
      j["trace"] = trace;
    }
    text = render(j);
  }
  out << text;
  if (!o.output_path.empty()) write_text_file(o.output_path, text);
  return ok ? kExitOk : kExitVerifiedFalse;
}

int cmd_stats(const Options& o, std::ostream& out) {
  const Permutation p = Permutation::parse(o.perm);
  const GpStats stats = gp_stats(p);
  std::string text;
  if (format_of(o, "json") == "text") {
    std::ostringstream s;
    s << "adjacencies:";
    for (int j : stats.adjacency_positions) s << " (" << j << ',' << j + 1 << ')';
    s << "\nblocks:";
    for (const auto& b : stats.blocks) s << " [" << b.first << ".." << b.last << ']';
    s << "\nfree:";
    for (int j : stats.free_positions) s << ' ' << j;
    s << '\n';
    text = s.str();
  } else {
    Json j;
    j["perm"] = p.to_string();
    j["n"] = p.degree();
    j.update(to_json(stats));
    text = render(j);
  }
  out << text;
  if (!o.output_path.empty()) write_text_file(o.output_path, text);
  return kExitOk;
}

int cmd_structure(const Options& o, std::ostream& out) {
  require_degree(o.n, 3, 8, "structure");
  const HierarchyReport hierarchy = verify_hierarchy(o.n);
  std::optional<VertexTransitivityReport> transitivity;
  if (o.n <= 6) transitivity = verify_prop3(o.n, o.samples, o.seed);

  Json j;
  j["n"] = o.n;
  j["hierarchy"] = to_json(hierarchy);
  j["vertex_transitivity"] = transitivity ? to_json(*transitivity) : Json(nullptr);
  const std::string text = render(j);
  out << text;
  if (!o.output_path.empty()) write_text_file(o.output_path, text);
  const bool ok = hierarchy.ok() && (!transitivity || transitivity->ok());
  return ok ? kExitOk : kExitVerifiedFalse;
}

void add_common(CLI::App* sub, Options& o, bool with_n) {
  if (with_n) {
    sub->add_option("--n", o.n, "Degree of the pancake graph")->envname("PANCAKE_N");
  }
  sub->add_option("--memory-budget", o.memory_budget_bytes,
                  "Memory budget for searches, e.g. 1GiB")
      ->transform(CLI::AsSizeValue(false))
      ->envname("PANCAKE_MEMORY_BUDGET");
  sub->add_option("--workers", o.worker_count, "Worker threads")
      ->check(CLI::Range(1, 1024))
      ->envname("PANCAKE_WORKERS");
  sub->add_option("--out", o.output_path, "Output file (written atomically)")
      ->envname("PANCAKE_OUT");
  sub->add_option("--format", o.output_format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->envname("PANCAKE_FORMAT");
  sub->add_flag("--allow-large", o.allow_large, "Permit n = 13 searches")
      ->envname("PANCAKE_ALLOW_LARGE");
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pancake graph distances, diameters and diameter bounds", "pancake"};
  app.require_subcommand(1);
  Options o;

  auto* diameter = app.add_subcommand("diameter", "Exact diameter by BFS from the identity");
  add_common(diameter, o, true);

  auto* profile = app.add_subcommand("profile", "Layer profile of the BFS from the identity");
  add_common(profile, o, true);

  auto* bound = app.add_subcommand("bound", "Run the M-set diameter bound pipeline");
  add_common(bound, o, true);
  bound->add_option("--mset-method", o.mset_method, "exact | chunked")
      ->check(CLI::IsMember({"exact", "chunked"}))
      ->envname("PANCAKE_MSET_METHOD");
  bound->add_option("--chunk-size", o.chunk_size, "Walk length per chunk")
      ->check(CLI::Range(1, 16))
      ->envname("PANCAKE_CHUNK_SIZE");
  bound->add_option("--threshold", o.threshold, "Override diam(P_{n-1})")
      ->check(CLI::Range(0, 254));
  bound->add_option("--node-budget", o.node_budget, "Walk enumeration node budget");

  auto* trees = app.add_subcommand("trees", "Translate-tree distance experiment");
  add_common(trees, o, true);

  auto* ham = app.add_subcommand("ham", "Build and validate a Hamiltonian order");
  add_common(ham, o, true);
  ham->add_flag("--check", o.check, "Validate the order (always performed)");
  ham->add_flag("--cycle", o.cycle, "Mark the order as a cycle");
  ham->add_option("--in", o.input_path, "Validate an existing PNKH file instead");

  auto* sort = app.add_subcommand("sort", "Greedy prefix-reversal sort");
  add_common(sort, o, false);
  sort->add_option("--perm", o.perm, "Permutation, e.g. \"3 1 2\"")->required();
  sort->add_flag("--trace", o.trace, "Print every intermediate permutation");

  auto* stats = app.add_subcommand("stats", "Adjacencies, blocks and free elements");
  add_common(stats, o, false);
  stats->add_option("--perm", o.perm, "Permutation, e.g. \"3 1 2\"")->required();

  auto* structure = app.add_subcommand("structure", "Hierarchy and vertex-transitivity checks");
  add_common(structure, o, true);
  structure->add_option("--samples", o.samples, "Translation-invariance samples");
  structure->add_option("--seed", o.seed, "Sampling seed");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  const std::vector<std::pair<CLI::App*, std::function<int(const Options&, std::ostream&)>>>
      commands = {{diameter, cmd_diameter}, {profile, cmd_profile}, {bound, cmd_bound},
                  {trees, cmd_trees},       {ham, cmd_ham},         {sort, cmd_sort},
                  {stats, cmd_stats},       {structure, cmd_structure}};
  try {
    for (const auto& [sub, handler] : commands) {
      if (sub->parsed()) {
        o.command = sub->get_name();
        return handler(o, out);
      }
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (required bytes: " << e.required_bytes() << ")\n";
    return kExitResource;
  } catch (const NodeBudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pancake::cli
