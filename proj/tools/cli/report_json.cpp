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

#include "cli/report_json.hpp"

#include <string>

namespace pancake::cli {
namespace {

Json perm_list(const std::vector<Rank>& ranks, int n) {
  Json out = Json::array();
  for (Rank r : ranks) out.push_back(unrank(r, n).to_string());
  return out;
}

}  // namespace

Json to_json(const LayerProfile& profile) {
  Json j;
  j["n"] = profile.n;
  j["eccentricity"] = profile.eccentricity();
  j["counts"] = profile.counts;
  return j;
}

Json to_json(const ClassicalBound& bound) {
  Json j;
  j["name"] = bound.name;
  j["relation"] = bound.relation;
  j["applies"] = bound.applies;
  j["holds"] = bound.applies ? Json(bound.holds) : Json(nullptr);
  j["slack"] = bound.applies ? Json(bound.slack) : Json(nullptr);
  return j;
}

Json to_json(const MSetComparison& cmp) {
  Json j;
  j["n"] = cmp.n;
  j["threshold"] = cmp.threshold;
  j["agree"] = cmp.agree();
  j["missing_count"] = cmp.missing.size();
  j["extra_count"] = cmp.extra.size();
  j["missing"] = perm_list(cmp.missing, cmp.n);
  j["extra"] = perm_list(cmp.extra, cmp.n);
  return j;
}

Json to_json(const BoundReport& report) {
  Json j;
  j["n"] = report.n;
  j["threshold"] = report.threshold;
  j["threshold_source"] = report.threshold_source;
  j["mset_size"] = report.mset_size;
  j["mset_method"] = to_string(report.mset_method);
  j["component_sizes"] = report.component_sizes;
  j["induced_edges"] = report.induced_edges;
  j["longest_segment_T"] = report.longest_segment_T;
  j["d_n"] = report.d_n;
  j["d_n_refined"] = report.d_n_refined;
  j["d_n_refined_is_extension"] = true;
  j["unreachable_from_frontier"] = report.unreachable_from_frontier;
  j["bound"] = report.bound;
  j["bound_refined"] = report.bound_refined;
  j["exact_diameter"] = report.exact_diameter ? Json(*report.exact_diameter) : Json(nullptr);
  j["sound"] = report.sound ? Json(*report.sound) : Json(nullptr);
  j["monotone"] = report.monotone ? Json(*report.monotone) : Json(nullptr);
  j["tree_family"] = report.tree_family;
  Json bounds = Json::array();
  for (const auto& b : report.classical_bounds) bounds.push_back(to_json(b));
  j["classical_bounds"] = bounds;
  j["mset_comparison"] =
      report.mset_comparison ? to_json(*report.mset_comparison) : Json(nullptr);
  return j;
}

Json to_json(const PathCoveringReport& report) {
  Json j;
  j["n"] = report.n;
  j["elements"] = report.elements;
  j["equality"] = report.equality;
  j["counterexamples"] = report.counterexamples;
  j["lower_bound_violations"] = report.lower_bound_violations;
  j["max_gap"] = report.max_gap;
  Json hist = Json::object();
  for (const auto& [gap, count] : report.gap_histogram) hist[std::to_string(gap)] = count;
  j["gap_histogram"] = hist;
  j["counterexample_elements"] = perm_list(report.counterexample_ranks, report.n);
  j["tie_break"] = "minimum gap, then smallest from-index";
  return j;
}

Json to_json(const GpStats& stats) {
  Json j;
  Json adj = Json::array();
  for (int p : stats.adjacency_positions) adj.push_back(Json::array({p, p + 1}));
  j["adjacencies"] = adj;
  Json blocks = Json::array();
  for (const auto& b : stats.blocks) blocks.push_back(Json::array({b.first, b.last}));
  j["blocks"] = blocks;
  j["free_positions"] = stats.free_positions;
  return j;
}

Json to_json(const FlipSequence& flips) {
  Json j;
  j["source"] = flips.source.to_string();
  j["flips"] = flips.flips;
  j["length"] = flips.flips.size();
  j["bound_2n_minus_3"] = greedy_flip_bound(flips.source.degree());
  j["verified"] = verify_flip_sequence(flips);
  return j;
}

Json to_json(const HamValidation& validation) {
  Json j;
  j["valid"] = validation.valid;
  j["first_bad_index"] =
      validation.first_bad_index ? Json(*validation.first_bad_index) : Json(nullptr);
  j["reason"] = validation.reason;
  return j;
}

Json to_json(const HierarchyReport& report) {
  Json j;
  j["n"] = report.n;
  j["class_sizes"] = report.class_sizes;
  j["sizes_ok"] = report.sizes_ok;
  j["closed"] = report.closed;
  j["isomorphic"] = report.isomorphic;
  j["crossing_ok"] = report.crossing_ok;
  j["failure"] = report.failure;
  return j;
}

Json to_json(const VertexTransitivityReport& report) {
  Json j;
  j["n"] = report.n;
  j["identity_eccentricity"] = report.identity_eccentricity;
  j["all_equal"] = report.all_equal;
  j["counterexample"] = report.counterexample
                            ? Json(unrank(*report.counterexample, report.n).to_string())
                            : Json(nullptr);
  j["translation_checks"] = report.translation_checks;
  j["translation_failures"] = report.translation_failures;
  return j;
}

}  // namespace pancake::cli
