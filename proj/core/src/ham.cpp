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

#include "pancake/ham.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "pancake/error.hpp"

namespace pancake {
namespace {

// Generator word of a Hamiltonian cycle of P_n whose last letter is r_n.
std::vector<int> cycle_word(int n) {
  std::vector<int> word = {2, 3, 2, 3, 2, 3};
  for (int k = 4; k <= n; ++k) {
    std::vector<int> sweep(word.begin(), word.end() - 1);
    sweep.push_back(k);
    word.clear();
    word.reserve(sweep.size() * k);
    for (int copy = 0; copy < k; ++copy) word.insert(word.end(), sweep.begin(), sweep.end());
  }
  return word;
}

}  // namespace

bool adjacent(const Permutation& p, const Permutation& q) noexcept {
  if (p.degree() != q.degree()) return false;
  int m = p.degree() - 1;
  while (m >= 0 && p[m] == q[m]) --m;
  if (m < 1) return false;  // equal, or differing only at position 0
  for (int j = 0; j <= m; ++j) {
    if (q[j] != p[m - j]) return false;
  }
  return true;
}

HamOrder build_ham(int n, bool want_cycle) {
  if (n < 3 || n > 8) {
    throw PreconditionError("Hamiltonian construction supports 3 <= n <= 8");
  }
  const std::vector<int> word = cycle_word(n);
  HamOrder h;
  h.n = n;
  h.cyclic = want_cycle;
  h.order.reserve(word.size());
  Permutation p = Permutation::identity(n);
  h.order.push_back(rank(p));
  // The last letter closes the cycle back to the identity.
  for (std::size_t k = 0; k + 1 < word.size(); ++k) {
    p = apply_reversal(p, word[k]);
    h.order.push_back(rank(p));
  }
  if (const HamValidation check = validate_ham(h); !check) {
    throw std::logic_error("Hamiltonian construction failed at index " +
                           std::to_string(check.first_bad_index.value_or(0)) + ": " +
                           check.reason);
  }
  return h;
}

HamValidation validate_ham(const HamOrder& h) {
  HamValidation result;
  if (h.n < 2 || h.n > kMaxDegree) {
    result.reason = "degree " + std::to_string(h.n) + " out of range";
    return result;
  }
  const Rank total = factorial(h.n);
  if (h.order.size() != total) {
    result.reason = "length " + std::to_string(h.order.size()) + " != n! = " +
                    std::to_string(total);
    return result;
  }
  std::vector<bool> seen(total, false);
  for (std::size_t k = 0; k < h.order.size(); ++k) {
    const Rank r = h.order[k];
    if (r >= total) {
      result.first_bad_index = k;
      result.reason = "rank " + std::to_string(r) + " out of range";
      return result;
    }
    if (seen[r]) {
      result.first_bad_index = k;
      result.reason = "rank " + std::to_string(r) + " repeated";
      return result;
    }
    seen[r] = true;
  }
  Permutation prev = unrank(h.order[0], h.n);
  for (std::size_t k = 0; k + 1 < h.order.size(); ++k) {
    Permutation cur = unrank(h.order[k + 1], h.n);
    if (!adjacent(prev, cur)) {
      result.first_bad_index = k;
      result.reason = "entries " + std::to_string(k) + " and " + std::to_string(k + 1) +
                      " are not adjacent";
      return result;
    }
    prev = cur;
  }
  if (h.cyclic && total > 2 && !adjacent(prev, unrank(h.order[0], h.n))) {
    result.first_bad_index = h.order.size() - 1;
    result.reason = "closing edge missing";
    return result;
  }
  result.valid = true;
  return result;
}

TranslateTree::TranslateTree(Permutation g, const HamOrder& base)
    : g_(std::move(g)), base_(base) {
  if (g_.degree() != base.n) {
    throw DegreeMismatch("translation of degree " + std::to_string(g_.degree()) +
                         " applied to an order of degree " + std::to_string(base.n));
  }
}

Permutation TranslateTree::vertex(std::size_t k) const {
  const HamOrder& base = base_.get();
  return compose(g_, unrank(base.order.at(k), base.n));
}

HamOrder TranslateTree::materialize() const {
  const HamOrder& base = base_.get();
  HamOrder out;
  out.n = base.n;
  out.cyclic = base.cyclic;
  out.order.reserve(base.order.size());
  for (std::size_t k = 0; k < base.order.size(); ++k) out.order.push_back(rank(vertex(k)));
  return out;
}

void write_ham(std::ostream& out, const HamOrder& h) {
  out << "# PNKH n=" << h.n << " cyclic=" << (h.cyclic ? 1 : 0) << '\n';
  for (Rank r : h.order) out << r << '\n';
}

HamOrder read_ham(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError("Hamiltonian order: empty input");
  HamOrder h;
  int cyclic = -1;
  {
    std::istringstream hs(header);
    std::string hash, tag, nfield, cfield;
    hs >> hash >> tag >> nfield >> cfield;
    if (hash != "#" || tag != "PNKH" || nfield.rfind("n=", 0) != 0 ||
        cfield.rfind("cyclic=", 0) != 0) {
      throw ParseError("Hamiltonian order: bad header '" + header + "'");
    }
    try {
      h.n = std::stoi(nfield.substr(2));
      cyclic = std::stoi(cfield.substr(7));
    } catch (const std::exception&) {
      throw ParseError("Hamiltonian order: bad header '" + header + "'");
    }
    if (cyclic != 0 && cyclic != 1) {
      throw ParseError("Hamiltonian order: cyclic must be 0 or 1");
    }
  }
  h.cyclic = cyclic == 1;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      std::size_t used = 0;
      h.order.push_back(std::stoull(line, &used));
      if (used != line.size()) throw std::invalid_argument(line);
    } catch (const std::exception&) {
      throw ParseError("Hamiltonian order: invalid rank '" + line + "'");
    }
  }
  return h;
}

}  // namespace pancake
