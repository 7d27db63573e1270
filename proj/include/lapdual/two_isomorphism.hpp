// Copyright 2026 The lapdual Authors
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

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "lapdual/graph.hpp"

namespace lapdual {

struct TwoIsoResult {
  enum class Status { TwoIsomorphic, NotTwoIsomorphic, BudgetExceeded };

  Status status = Status::BudgetExceeded;
  /// beta[e] = image in g2 of edge e of g1, when TwoIsomorphic.
  std::optional<std::vector<EdgeId>> bijection;
  /// Why the answer is negative (an invariant, or "exhausted search").
  std::string reason;
  std::uint64_t steps = 0;
};

namespace detail {

inline std::uint64_t map_mask(std::uint64_t mask, const std::vector<EdgeId>& beta) {
  std::uint64_t out = 0;
  while (mask) {
    int e = std::countr_zero(mask);
    mask &= mask - 1;
    out |= std::uint64_t{1} << beta[static_cast<std::size_t>(e)];
  }
  return out;
}

/// Searches for an edge bijection carrying one family of edge sets onto
/// another. Shared by 2-isomorphism (forests to forests) and duality checks.
class FamilyMatcher {
 public:
  FamilyMatcher(std::size_t m, std::vector<std::uint64_t> fam1, std::vector<std::uint64_t> fam2,
                std::vector<int> class1, std::vector<int> class2, std::uint64_t budget)
      : m_(m), fam1_(std::move(fam1)), fam2_(std::move(fam2)), class1_(std::move(class1)),
        class2_(std::move(class2)), budget_(budget), set2_(fam2_.begin(), fam2_.end()),
        count1_(m, 0), count2_(m, 0), pair1_(m * m, 0), pair2_(m * m, 0) {
    tally(fam1_, count1_, pair1_);
    tally(fam2_, count2_, pair2_);
  }

  TwoIsoResult run() {
    TwoIsoResult res;
    std::vector<EdgeId> beta(m_);
    std::vector<bool> used(m_, false);
    auto outcome = search(0, beta, used);
    res.steps = steps_;
    if (outcome == Outcome::Found) {
      res.status = TwoIsoResult::Status::TwoIsomorphic;
      res.bijection = found_;
    } else if (outcome == Outcome::Budget) {
      res.status = TwoIsoResult::Status::BudgetExceeded;
      res.reason = "search budget exhausted";
    } else {
      res.status = TwoIsoResult::Status::NotTwoIsomorphic;
      res.reason = "exhausted search over edge bijections";
    }
    return res;
  }

  bool per_edge_counts_match() const {
    auto a = count1_, b = count2_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

 private:
  enum class Outcome { Found, Exhausted, Budget };

  void tally(const std::vector<std::uint64_t>& fam, std::vector<std::uint32_t>& count,
             std::vector<std::uint32_t>& pair) const {
    for (auto mask : fam) {
      for (std::size_t a = 0; a < m_; ++a) {
        if (!(mask >> a & 1)) continue;
        ++count[a];
        for (std::size_t b = 0; b < m_; ++b)
          if (mask >> b & 1) ++pair[a * m_ + b];
      }
    }
  }

  Outcome search(std::size_t e, std::vector<EdgeId>& beta, std::vector<bool>& used) {
    if (e == m_) {
      for (auto mask : fam1_)
        if (!set2_.count(map_mask(mask, beta))) return Outcome::Exhausted;
      found_ = beta;
      return Outcome::Found;
    }
    for (EdgeId t = 0; t < m_; ++t) {
      if (used[t]) continue;
      if (++steps_ > budget_) return Outcome::Budget;
      if (class1_[e] != class2_[t] || count1_[e] != count2_[t]) continue;
      bool ok = pair1_[e * m_ + e] == pair2_[t * m_ + t];
      for (std::size_t f = 0; f < e && ok; ++f) ok = pair1_[e * m_ + f] == pair2_[t * m_ + beta[f]];
      if (!ok) continue;
      beta[e] = t;
      used[t] = true;
      auto r = search(e + 1, beta, used);
      if (r != Outcome::Exhausted) return r;
      used[t] = false;
    }
    return Outcome::Exhausted;
  }

  std::size_t m_;
  std::vector<std::uint64_t> fam1_, fam2_;
  std::vector<int> class1_, class2_;
  std::uint64_t budget_;
  std::unordered_set<std::uint64_t> set2_;
  std::vector<std::uint32_t> count1_, count2_, pair1_, pair2_;
  std::uint64_t steps_ = 0;
  std::vector<EdgeId> found_;
};

inline std::vector<int> loop_classes(const MultiGraph& g) {
  std::vector<int> c(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) c[e] = g.edge(e).is_loop() ? 1 : 0;
  return c;
}

}  // namespace detail

/// Decides whether an edge bijection maps the maximal forests of g1 exactly
/// onto those of g2. Negative answers are either invariant mismatches or an
/// exhausted search; running out of budget is reported separately.
inline TwoIsoResult decide_2_isomorphism_bruteforce(const MultiGraph& g1, const MultiGraph& g2,
                                                    std::uint64_t budget, std::size_t forest_cap = 1u << 20) {
  TwoIsoResult res;
  auto negative = [&](std::string why) {
    res.status = TwoIsoResult::Status::NotTwoIsomorphic;
    res.reason = std::move(why);
    return res;
  };
  if (g1.num_edges() != g2.num_edges()) return negative("edge counts differ");
  if (g1.num_loops() != g2.num_loops()) return negative("loop counts differ");
  const std::size_t r1 = g1.num_vertices() - num_components(g1);
  const std::size_t r2 = g2.num_vertices() - num_components(g2);
  if (r1 != r2) return negative("maximal forest sizes differ");

  std::vector<std::uint64_t> f1, f2;
  try {
    f1 = maximal_forest_masks(g1, forest_cap);
    f2 = maximal_forest_masks(g2, forest_cap);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::CapExceeded) throw;
    res.status = TwoIsoResult::Status::BudgetExceeded;
    res.reason = "forest enumeration cap exceeded";
    return res;
  }
  if (f1.size() != f2.size()) return negative("maximal forest counts differ");

  detail::FamilyMatcher matcher(g1.num_edges(), std::move(f1), std::move(f2), detail::loop_classes(g1),
                                detail::loop_classes(g2), budget);
  if (!matcher.per_edge_counts_match()) return negative("per-edge forest counts differ");
  return matcher.run();
}

}  // namespace lapdual
