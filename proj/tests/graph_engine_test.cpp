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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "oracle.hpp"
#include "pancake/bfs.hpp"
#include "pancake/error.hpp"
#include "pancake/structure.hpp"
#include "pancake/table1.hpp"

namespace pancake {
namespace {

Permutation P(std::initializer_list<int> e) { return Permutation::from_entries(e); }

TEST(Neighbors, Examples) {
  EXPECT_EQ(neighbors(Permutation::identity(3)),
            (std::vector<Permutation>{P({2, 1, 3}), P({3, 2, 1})}));
  for (const auto& p : all_permutations(4)) {
    const auto nb = neighbors(p);
    EXPECT_EQ(nb.size(), 3u);
    for (const auto& q : nb) {
      const auto back = neighbors(q);
      EXPECT_NE(std::find(back.begin(), back.end(), p), back.end());
    }
  }
}

TEST(Bfs, FrozenProfiles) {
  // Values computed by oracle::profile and, for n = 2, the tabulated
  // diameter 1.
  EXPECT_EQ(bfs(Permutation::identity(2)).layer_profile().counts,
            (std::vector<std::uint64_t>{1, 1}));
  EXPECT_EQ(bfs(Permutation::identity(3)).layer_profile().counts,
            (std::vector<std::uint64_t>{1, 2, 2, 1}));
  EXPECT_EQ(bfs(Permutation::identity(4)).layer_profile().counts,
            (std::vector<std::uint64_t>{1, 3, 6, 11, 3}));
}

TEST(Bfs, MatchesOracleDistances) {
  std::mt19937_64 rng(17);
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      const Rank s = trial == 0 ? 0 : rng() % factorial(n);
      const Permutation source = unrank(s, n);
      const DistanceField field = bfs(source);
      const auto expected =
          oracle::distances(oracle::Perm(source.entries().begin(), source.entries().end()));
      ASSERT_EQ(expected.size(), field.size());
      for (const auto& [perm, d] : expected) {
        EXPECT_EQ(field.at(Permutation::from_entries(perm)), d);
      }
      EXPECT_EQ(field.source(), s);
      EXPECT_EQ(field[s], 0);
    }
  }
}

TEST(Bfs, EccentricityOfIdentity) {
  EXPECT_EQ(eccentricity_of_identity(5), 5);
  EXPECT_EQ(eccentricity_of_identity(9), 10);
}

TEST(Bfs, TriangleStepAndLayerRecurrence) {
  for (int n = 2; n <= 7; ++n) {
    const DistanceField field = bfs(Permutation::identity(n));
    ASSERT_TRUE(field.complete());
    for (Rank r = 0; r < field.size(); ++r) {
      const Permutation p = unrank(r, n);
      bool has_parent = field[r] == 0;
      for (const auto& q : neighbors(p)) {
        const int du = field[r];
        const int dv = field.at(q);
        EXPECT_LE(std::abs(du - dv), 1);
        if (dv == du - 1) has_parent = true;
      }
      EXPECT_TRUE(has_parent) << p.to_string();
    }
  }
}

TEST(Bfs, WorkerCountDoesNotChangeResult) {
  const Permutation source = P({3, 7, 1, 8, 2, 6, 4, 5});
  BfsOptions one;
  BfsOptions many;
  many.workers = 8;
  BfsOptions three;
  three.workers = 3;
  const auto a = bfs(source, one).bytes();
  EXPECT_EQ(a, bfs(source, many).bytes());
  EXPECT_EQ(a, bfs(source, three).bytes());
}

TEST(Bfs, BudgetRefusal) {
  BfsOptions tight;
  tight.memory_budget = 1000;
  try {
    bfs(Permutation::identity(7), tight);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.required_bytes(), bfs_required_bytes(7));
    EXPECT_EQ(e.required_bytes(), 5040u + 2 * 79 * 8);
  }
  EXPECT_THROW(check_bfs_budget(13, {}), BudgetExceeded);
  EXPECT_NO_THROW(check_bfs_budget(12, {}));
  BfsOptions zero;
  zero.workers = 0;
  EXPECT_THROW(bfs(Permutation::identity(4), zero), PreconditionError);
}

TEST(Bfs, ProfileInvariants) {
  for (int n = 2; n <= 8; ++n) {
    const LayerProfile profile = bfs(Permutation::identity(n)).layer_profile();
    EXPECT_EQ(profile.total(), factorial(n));
    EXPECT_EQ(profile.counts[0], 1u);
    EXPECT_EQ(profile.counts[1], static_cast<std::uint64_t>(n - 1));
    EXPECT_LE(profile.eccentricity(), *table1_diameter(n));
  }
}

TEST(LayerProfile, Csv) {
  EXPECT_EQ(bfs(Permutation::identity(3)).layer_profile().to_csv(),
            "distance,count\n0,1\n1,2\n2,2\n3,1\n");
}

TEST(DistanceFieldFile, HeaderIsBitExact) {
  const DistanceField field = bfs(P({2, 1, 3, 4}));
  std::ostringstream out;
  field.write(out);
  const std::string bytes = out.str();
  ASSERT_EQ(bytes.size(), 20u + 24u);
  EXPECT_EQ(bytes.substr(0, 4), "PNKD");
  EXPECT_EQ(bytes[4], 1);
  EXPECT_EQ(bytes[5], 4);
  EXPECT_EQ(bytes[6], 6);  // rank of [2 1 3 4]
  for (int b = 7; b < 20; ++b) EXPECT_EQ(bytes[b], 0) << b;
  for (Rank r = 0; r < 24; ++r) EXPECT_EQ(static_cast<std::uint8_t>(bytes[20 + r]), field[r]);
}

TEST(DistanceFieldFile, SaveLoadRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "pancake_df_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "p6.pnkd";
  const DistanceField field = bfs(P({6, 5, 4, 3, 2, 1}));
  field.save(path);
  EXPECT_FALSE(std::filesystem::exists(dir / "p6.pnkd.tmp"));
  const DistanceField loaded = DistanceField::load(path);
  EXPECT_EQ(loaded.degree(), 6);
  EXPECT_EQ(loaded.source(), field.source());
  EXPECT_EQ(loaded.bytes(), field.bytes());
  std::filesystem::remove_all(dir);
}

TEST(DistanceFieldFile, RejectsCorruptInput) {
  std::ostringstream out;
  bfs(Permutation::identity(3)).write(out);
  std::string good = out.str();

  std::string bad_magic = good;
  bad_magic[0] = 'X';
  std::istringstream a(bad_magic);
  EXPECT_THROW(DistanceField::read(a), ParseError);

  std::string bad_version = good;
  bad_version[4] = 2;
  std::istringstream b(bad_version);
  EXPECT_THROW(DistanceField::read(b), ParseError);

  std::string reserved = good;
  reserved[19] = 1;
  std::istringstream c(reserved);
  EXPECT_THROW(DistanceField::read(c), ParseError);

  std::istringstream d(good.substr(0, good.size() - 1));
  EXPECT_THROW(DistanceField::read(d), ParseError);
}

TEST(VertexTransitivity, AllEccentricitiesEqual) {
  const auto r3 = verify_prop3(3, 100, 1);
  EXPECT_TRUE(r3.ok());
  EXPECT_EQ(r3.identity_eccentricity, 3);
  EXPECT_EQ(r3.eccentricities, std::vector<int>(6, 3));

  const auto r4 = verify_prop3(4, 500, 2);
  EXPECT_TRUE(r4.ok());
  EXPECT_EQ(r4.eccentricities, std::vector<int>(24, 4));
  EXPECT_EQ(r4.translation_checks, 500u);

  EXPECT_THROW(verify_prop3(7, 1, 1), PreconditionError);
}

TEST(VertexTransitivity, TranslationInstance) {
  const Permutation u = P({2, 1, 3});
  const Permutation v = P({3, 2, 1});
  EXPECT_EQ(bfs(u).at(v), bfs(Permutation::identity(3)).at(compose(inverse(u), v)));
}

TEST(VertexTransitivity, SampledTranslationInvariance) {
  const TranslationReport report = verify_translation_invariance(6, 300, 9);
  EXPECT_EQ(report.checked, 300u);
  EXPECT_TRUE(report.failures.empty());
}

TEST(Hierarchy, CopiesOfSmallerGraph) {
  for (int n = 3; n <= 7; ++n) {
    const HierarchyReport report = verify_hierarchy(n);
    EXPECT_TRUE(report.ok()) << report.failure;
    EXPECT_EQ(report.class_sizes, std::vector<std::uint64_t>(n, factorial(n - 1)));
  }
  EXPECT_THROW(verify_hierarchy(2), PreconditionError);
}

TEST(Hierarchy, ClassesOfP4AreSixCycles) {
  // Each class is closed under r_2, r_3 so every vertex has degree 2
  // inside it; one walk around must return after exactly 6 steps.
  for (int k = 1; k <= 4; ++k) {
    std::vector<int> entries;
    for (int v = 1; v <= 4; ++v) {
      if (v != k) entries.push_back(v);
    }
    entries.push_back(k);
    const Permutation start = Permutation::from_entries(entries);
    Permutation cur = start;
    int steps = 0;
    do {
      cur = apply_reversal(cur, steps % 2 == 0 ? 2 : 3);
      EXPECT_EQ(cur[3], k);
      ++steps;
    } while (cur != start);
    EXPECT_EQ(steps, 6);
  }
}

TEST(ClassicalBounds, Examples) {
  auto find = [](const std::vector<ClassicalBound>& all, const std::string& name) {
    for (const auto& b : all) {
      if (b.name == name) return b;
    }
    return ClassicalBound{};
  };
  const auto n11 = check_classical_bounds(11, 13);
  EXPECT_TRUE(find(n11, "upper_5n+5_over_3").holds);
  EXPECT_DOUBLE_EQ(find(n11, "upper_5n+5_over_3").slack, 7.0);
  EXPECT_TRUE(find(n11, "upper_18n_over_11").holds);
  EXPECT_DOUBLE_EQ(find(n11, "upper_18n_over_11").slack, 5.0);
  EXPECT_FALSE(find(n11, "lower_17n_over_16").applies);
  EXPECT_FALSE(find(n11, "lower_15n_over_14").applies);

  const auto n16 = check_classical_bounds(16, 18);
  EXPECT_TRUE(find(n16, "lower_17n_over_16").applies);
  EXPECT_TRUE(find(n16, "lower_17n_over_16").holds);
  EXPECT_DOUBLE_EQ(find(n16, "lower_17n_over_16").slack, 1.0);

  const auto n14 = check_classical_bounds(14, 16);
  EXPECT_TRUE(find(n14, "lower_15n_over_14").applies);
  EXPECT_TRUE(find(n14, "lower_15n_over_14").holds);

  EXPECT_FALSE(find(check_classical_bounds(16, 16), "lower_17n_over_16").holds);
  EXPECT_FALSE(find(check_classical_bounds(3, 9), "upper_5n+5_over_3").holds);
}

TEST(TabulatedDiameters, FixtureMatchesPublishedValues) {
  const std::vector<int> expected = {1, 3, 4, 5, 7, 8, 9, 10, 11, 13, 14, 15, 16, 17, 18,
                                     19, 20, 22};
  const auto table = table1();
  ASSERT_EQ(table.size(), expected.size());
  int checksum = 0;
  for (std::size_t k = 0; k < table.size(); ++k) {
    EXPECT_EQ(table[k].n, static_cast<int>(k) + 2);
    EXPECT_EQ(table[k].diameter, expected[k]);
    checksum += table[k].n * table[k].diameter;
  }
  EXPECT_EQ(checksum, 2796);
  EXPECT_FALSE(table1_diameter(1));
  EXPECT_FALSE(table1_diameter(20));
}

TEST(TabulatedDiameters, MonotoneInDegree) {
  int previous = 0;
  for (int n = 2; n <= 9; ++n) {
    const int ecc = eccentricity_of_identity(n);
    EXPECT_EQ(ecc, *table1_diameter(n));
    EXPECT_GE(ecc, previous);
    previous = ecc;
  }
}

}  // namespace
}  // namespace pancake
