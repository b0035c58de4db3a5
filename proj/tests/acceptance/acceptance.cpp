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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Set PANCAKE_ACCEPT_N12=1 to include the n = 12 search.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli/commands.hpp"
#include "cli/report_json.hpp"
#include "pancake/pancake.hpp"

namespace {

using namespace pancake;
namespace fs = std::filesystem;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failure notes; the first few are kept for the summary line.
class Notes {
 public:
  void fail(const std::string& what) {
    pass_ = false;
    if (kept_++ < 5) text_ += (text_.empty() ? "" : "; ") + what;
  }
  void info(const std::string& what) { info_ += (info_.empty() ? "" : ", ") + what; }
  Outcome done() const { return {pass_, pass_ ? info_ : text_}; }

 private:
  bool pass_ = true;
  int kept_ = 0;
  std::string text_;
  std::string info_;
};

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "pancake");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

int table_value(int n) { return table1_diameter(n).value(); }

std::vector<int> identity_eccentricities(int max_n) {
  static std::vector<int> cache(2, 0);
  for (int n = static_cast<int>(cache.size()); n <= max_n; ++n) {
    cache.push_back(eccentricity_of_identity(n));
  }
  return cache;
}

int max_table_degree() {
  const char* v = std::getenv("PANCAKE_ACCEPT_N12");
  return v != nullptr && std::string(v) == "1" ? 12 : 11;
}

Outcome tabulated_diameters() {
  Notes notes;
  const int top = max_table_degree();
  const auto ecc = identity_eccentricities(top);
  for (int n = 2; n <= top; ++n) {
    if (ecc[n] != table_value(n)) {
      notes.fail("n=" + std::to_string(n) + " got " + std::to_string(ecc[n]) +
                 " expected " + std::to_string(table_value(n)));
    }
  }
  notes.info("n=2.." + std::to_string(top) + " match");
  if (top < 12) notes.info("n=12 skipped");
  return notes.done();
}

Outcome classical_bounds() {
  Notes notes;
  const auto ecc = identity_eccentricities(max_table_degree());
  int checked = 0;
  for (int n = 2; n <= 19; ++n) {
    std::vector<int> values{table_value(n)};
    if (n < static_cast<int>(ecc.size())) values.push_back(ecc[n]);
    for (int d : values) {
      for (const ClassicalBound& b : check_classical_bounds(n, d)) {
        if (!b.applies) continue;
        ++checked;
        if (!b.holds) notes.fail(b.name + " at n=" + std::to_string(n));
      }
    }
  }
  notes.info(std::to_string(checked) + " inequalities");
  return notes.done();
}

Outcome vertex_transitivity() {
  Notes notes;
  for (int n = 2; n <= 6; ++n) {
    const VertexTransitivityReport r = verify_prop3(n, 0, 1);
    if (!r.all_equal) notes.fail("eccentricities differ at n=" + std::to_string(n));
  }
  const TranslationReport t = verify_translation_invariance(7, 10000, 20260415);
  if (t.checked != 10000) notes.fail("checked " + std::to_string(t.checked) + " pairs");
  if (!t.failures.empty()) {
    const TranslationCheck& f = t.failures.front();
    notes.fail(std::to_string(t.failures.size()) + " pairs differ, first " + f.u.to_string() +
               " / " + f.v.to_string());
  }
  notes.info("n<=6 all sources, 10000 pairs at n=7");
  return notes.done();
}

Outcome monotonicity() {
  Notes notes;
  const auto ecc = identity_eccentricities(max_table_degree());
  for (int n = 3; n < static_cast<int>(ecc.size()); ++n) {
    if (ecc[n] < ecc[n - 1]) notes.fail("drop at n=" + std::to_string(n));
    if ((ecc[n] >= ecc[n - 1]) != (table_value(n) >= table_value(n - 1))) {
      notes.fail("profile differs at n=" + std::to_string(n));
    }
  }
  for (int n = 3; n <= 19; ++n) {
    if (table_value(n) < table_value(n - 1)) notes.fail("tabulated drop at n=" + std::to_string(n));
  }
  std::string profile;
  for (std::size_t n = 2; n < ecc.size(); ++n) profile += (n > 2 ? " " : "") + std::to_string(ecc[n]);
  notes.info("computed " + profile);
  return notes.done();
}

Outcome translate_paths() {
  Notes notes;
  std::uint64_t checked = 0;
  const HamOrder h4 = build_ham(4, false);
  for (const Permutation& g : all_permutations(4)) {
    ++checked;
    const HamValidation v = validate_ham(TranslateTree(g, h4).materialize());
    if (!v) notes.fail("n=4 g=" + g.to_string() + ": " + v.reason);
  }
  std::mt19937_64 rng(4242);
  for (int n : {5, 6}) {
    const HamOrder h = build_ham(n, false);
    std::uniform_int_distribution<Rank> pick(0, factorial(n) - 1);
    for (int s = 0; s < 1000; ++s) {
      ++checked;
      const Permutation g = unrank(pick(rng), n);
      const HamValidation v = validate_ham(TranslateTree(g, h).materialize());
      if (!v) notes.fail("n=" + std::to_string(n) + " g=" + g.to_string() + ": " + v.reason);
    }
  }
  notes.info(std::to_string(checked) + " translates valid");
  return notes.done();
}

Outcome path_covering() {
  Notes notes;
  for (int n = 3; n <= 6; ++n) {
    const QuotientGapTable table = translate_position_index(build_ham(n, false));
    const PathCoveringReport r = verify_prop2(table, bfs(Permutation::identity(n)));
    const std::string tag = "n=" + std::to_string(n);
    if (r.elements != factorial(n)) notes.fail(tag + " incomplete report");
    if (r.lower_bound_violations != 0) {
      notes.fail(tag + " " + std::to_string(r.lower_bound_violations) + " lower-bound violations");
    }
    std::uint64_t total = 0;
    std::uint64_t positive = 0;
    for (const auto& [gap, count] : r.gap_histogram) {
      if (gap < 0) notes.fail(tag + " negative gap");
      total += count;
      if (gap > 0) positive += count;
    }
    if (total != r.elements || positive != r.counterexamples ||
        r.counterexample_ranks.size() != r.counterexamples ||
        r.equality != (r.counterexamples == 0)) {
      notes.fail(tag + " report inconsistent");
    }
    if (n == 3 && !(r.equality && r.elements == 6)) notes.fail("n=3 equality does not hold");
    notes.info(tag + (r.equality ? " equal" : " " + std::to_string(r.counterexamples) +
                                                  " counterexamples"));
  }
  return notes.done();
}

Outcome bound_soundness() {
  Notes notes;
  for (int n = 4; n <= 9; ++n) {
    const BoundReport r = certify_bound(n);
    const std::string tag = "n=" + std::to_string(n);
    if (!r.exact_diameter) {
      notes.fail(tag + " no exact diameter");
      continue;
    }
    const int exact = *r.exact_diameter;
    const int refined = r.threshold + static_cast<int>(r.d_n_refined);
    const int plain = r.threshold + static_cast<int>(r.d_n);
    if (!(exact <= refined && refined <= plain) || r.sound != true) {
      notes.fail(tag + " exact=" + std::to_string(exact) + " refined=" +
                 std::to_string(refined) + " bound=" + std::to_string(plain) + "\n" +
                 cli::to_json(r).dump(2));
    }
    notes.info(tag + " " + std::to_string(exact) + "<=" + std::to_string(refined) + "<=" +
               std::to_string(plain));
  }
  return notes.done();
}

Outcome mset_agreement() {
  Notes notes;
  int discrepancies = 0;
  for (int n = 4; n <= 7; ++n) {
    const DistanceField field = bfs(Permutation::identity(n));
    for (int t = 1; t <= table_value(n - 1); ++t) {
      const std::string tag = "n=" + std::to_string(n) + " t=" + std::to_string(t);
      const CliResult res = run_cli({"bound", "--n", std::to_string(n), "--threshold",
                                     std::to_string(t), "--mset-method", "chunked"});
      nlohmann::ordered_json j;
      try {
        j = nlohmann::ordered_json::parse(res.out);
      } catch (const std::exception&) {
        notes.fail(tag + " no report (exit " + std::to_string(res.code) + ")");
        continue;
      }
      const auto& cmp = j.at("mset_comparison");
      const auto& missing = cmp.at("missing");
      const auto& extra = cmp.at("extra");
      // Each itemized entry must really be on the wrong side of t.
      for (const auto& s : missing) {
        if (field.at(Permutation::parse(s.get<std::string>())) < t) {
          notes.fail(tag + " missing entry is not far");
        }
      }
      for (const auto& s : extra) {
        if (field.at(Permutation::parse(s.get<std::string>())) >= t) {
          notes.fail(tag + " extra entry is far");
        }
      }
      std::uint64_t exact_size = 0;
      for (Rank r = 0; r < field.size(); ++r) exact_size += field[r] >= t;
      const std::uint64_t reported = j.at("mset_size").get<std::uint64_t>();
      if (reported + missing.size() != exact_size + extra.size()) {
        notes.fail(tag + " sizes do not reconcile");
      }
      const bool empty = missing.empty() && extra.empty();
      const bool sound = j.at("sound").get<bool>();
      const int want = empty && sound ? cli::kExitOk : cli::kExitVerifiedFalse;
      if (res.code != want) {
        notes.fail(tag + " exit " + std::to_string(res.code) + " expected " +
                   std::to_string(want));
      }
      if (!empty) {
        ++discrepancies;
        std::cout << "  discrepancy " << tag << ": " << missing.size() << " missing, "
                  << extra.size() << " extra\n";
      }
    }
  }
  notes.info(std::to_string(discrepancies) + " (n, t) pairs with itemized discrepancies");
  return notes.done();
}

Outcome sorter() {
  Notes notes;
  std::uint64_t checked = 0;
  for (int n = 2; n <= 7; ++n) {
    const DistanceField dist = bfs(Permutation::identity(n));
    for (Rank r = 0; r < factorial(n); ++r) {
      ++checked;
      const FlipSequence f = greedy_sort(unrank(r, n));
      const int len = static_cast<int>(f.flips.size());
      if (len < dist[r] || len > greedy_flip_bound(n) || !verify_flip_sequence(f)) {
        notes.fail(f.source.to_string() + " -> " + f.to_string());
      }
    }
  }
  notes.info(std::to_string(checked) + " permutations");
  return notes.done();
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism() {
  Notes notes;
  const fs::path dir = fs::temp_directory_path() / "pancake_acceptance";
  fs::create_directories(dir);
  std::vector<std::string> contents;
  for (const char* workers : {"1", "8"}) {
    const fs::path out = dir / (std::string("d9_w") + workers + ".pnkd");
    fs::remove(out);
    const CliResult res =
        run_cli({"diameter", "--n", "9", "--workers", workers, "--out", out.string()});
    if (res.code != 0) notes.fail(std::string("workers=") + workers + ": " + res.err);
    contents.push_back(slurp(out));
  }
  if (contents[0].empty() || contents[0] != contents[1]) {
    notes.fail("files differ");
  }
  std::ostringstream hash;
  hash << std::hex << fnv1a(contents[0]) << " / " << fnv1a(contents[1]);
  notes.info("fnv1a " + hash.str() + ", " + std::to_string(contents[0].size()) + " bytes");
  fs::remove_all(dir);
  return notes.done();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"tabulated diameters reproduced", tabulated_diameters},
      {"classical bounds", classical_bounds},
      {"vertex transitivity", vertex_transitivity},
      {"monotonicity", monotonicity},
      {"translate trees are spanning paths", translate_paths},
      {"path-covering experiment", path_covering},
      {"bound soundness", bound_soundness},
      {"M-set method agreement", mset_agreement},
      {"greedy sorter", sorter},
      {"distance-field determinism", determinism},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (k + 1) << ": "
              << criteria[k].first << " (" << o.detail << ") [" << std::fixed
              << std::setprecision(1) << secs << "s]" << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
