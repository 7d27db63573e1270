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
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lapdual/error.hpp"
#include "lapdual/matrix.hpp"
#include "lapdual/normal_form.hpp"

namespace lapdual {

struct CongruenceInvariants {
  std::size_t size = 0;
  std::size_t rank = 0;
  Integer det = 0;
  Inertia inertia;
  std::vector<Integer> snf;
};

/// Size, rank, determinant, inertia and Smith diagonal: each is unchanged by
/// A -> U A U^T with U unimodular.
inline CongruenceInvariants congruence_invariants(const IntMatrix& a) {
  if (!a.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "congruence invariants need a symmetric matrix");
  CongruenceInvariants inv;
  inv.size = a.rows();
  inv.snf = smith_normal_form(a).diag;
  inv.rank = static_cast<std::size_t>(std::count_if(inv.snf.begin(), inv.snf.end(), [](const Integer& d) { return d != 0; }));
  inv.det = det_bareiss(a);
  inv.inertia = inertia(a);
  return inv;
}

enum class InvariantKind { Size, Rank, Det, Inertia, Snf };

inline const char* to_string(InvariantKind k) {
  switch (k) {
    case InvariantKind::Size: return "size";
    case InvariantKind::Rank: return "rank";
    case InvariantKind::Det: return "det";
    case InvariantKind::Inertia: return "inertia";
    case InvariantKind::Snf: return "snf";
  }
  return "?";
}

struct SeparatingInvariant {
  InvariantKind kind;
  std::string left;
  std::string right;
};

namespace detail {

inline std::string describe(const Inertia& i) {
  return "(" + std::to_string(i.positive) + "," + std::to_string(i.negative) + "," + std::to_string(i.zero) + ")";
}

inline std::string describe(const std::vector<Integer>& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + d[i].str();
  return s + "]";
}

}  // namespace detail

/// First invariant (in the order size, rank, det, inertia, snf) that tells
/// the two matrices apart, if any.
inline std::optional<SeparatingInvariant> separating_invariant(const CongruenceInvariants& a,
                                                               const CongruenceInvariants& b) {
  if (a.size != b.size) return SeparatingInvariant{InvariantKind::Size, std::to_string(a.size), std::to_string(b.size)};
  if (a.rank != b.rank) return SeparatingInvariant{InvariantKind::Rank, std::to_string(a.rank), std::to_string(b.rank)};
  if (a.det != b.det) return SeparatingInvariant{InvariantKind::Det, a.det.str(), b.det.str()};
  if (!(a.inertia == b.inertia))
    return SeparatingInvariant{InvariantKind::Inertia, detail::describe(a.inertia), detail::describe(b.inertia)};
  if (a.snf != b.snf) return SeparatingInvariant{InvariantKind::Snf, detail::describe(a.snf), detail::describe(b.snf)};
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Row equivalence.

/// Witness U with U * a == b, or nothing when the row lattices (or row
/// counts) differ.
inline std::optional<UnimodularWitness> strict_row_equivalence(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw Error(ErrorCode::ShapeMismatch, "row equivalence needs equal column counts");
  if (a.rows() != b.rows()) return std::nullopt;
  auto ha = hermite_normal_form(a);
  auto hb = hermite_normal_form(b);
  if (!(ha.h == hb.h)) return std::nullopt;
  return UnimodularWitness::trusted(inverse_unimodular(hb.u.matrix()) * ha.u.matrix());
}

struct LooseEquivalence {
  bool equivalent = false;
  /// When equivalent: U with U * [a; 0] == [b; 0], both padded to `padded_rows`.
  std::optional<UnimodularWitness> witness;
  std::size_t padded_rows = 0;
};

inline IntMatrix pad_rows(const IntMatrix& a, std::size_t rows) {
  return vstack(a, IntMatrix(rows - a.rows(), a.cols()));
}

inline LooseEquivalence loose_row_equivalence(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw Error(ErrorCode::ShapeMismatch, "row equivalence needs equal column counts");
  LooseEquivalence res;
  res.padded_rows = std::max(a.rows(), b.rows());
  auto pa = pad_rows(a, res.padded_rows), pb = pad_rows(b, res.padded_rows);
  res.witness = strict_row_equivalence(pa, pb);
  res.equivalent = res.witness.has_value();
  return res;
}

// ---------------------------------------------------------------------------
// Canonical form under signed permutations.

/// Q (a signed permutation) and the canonical matrix Q * a * Q^T.
struct SignedCanonical {
  IntMatrix matrix;
  IntMatrix q;
  std::string key;
};

namespace detail {

class SignedCanonicalizer {
 public:
  explicit SignedCanonicalizer(const IntMatrix& a) : a_(a), n_(a.rows()) {}

  SignedCanonical run() {
    order_.clear();
    sign_.assign(n_, 1);
    placed_.assign(n_, false);
    have_best_ = false;
    code_.clear();
    dfs(0);
    SignedCanonical out;
    out.matrix = IntMatrix(n_, n_);
    out.q = IntMatrix(n_, n_);
    for (std::size_t p = 0; p < n_; ++p) out.q(p, best_order_[p]) = best_sign_[best_order_[p]];
    for (std::size_t p = 0; p < n_; ++p)
      for (std::size_t r = 0; r < n_; ++r)
        out.matrix(p, r) = best_sign_[best_order_[p]] * best_sign_[best_order_[r]] * a_(best_order_[p], best_order_[r]);
    for (const auto& x : best_code_) out.key += x.str() + ',';
    return out;
  }

 private:
  // Row code of candidate v at the next position: diagonal, then the
  // sign-normalized links to earlier positions.
  std::vector<Integer> row_code(std::size_t v, int& sign) const {
    sign = 1;
    for (std::size_t q = 0; q < order_.size(); ++q) {
      const Integer& x = a_(order_[q], v);
      if (x != 0) {
        // First link to an earlier vertex is made negative.
        int s = sign_[order_[q]] * (x > 0 ? 1 : -1);
        sign = -s;
        break;
      }
    }
    std::vector<Integer> code;
    code.reserve(order_.size() + 1);
    code.push_back(a_(v, v));
    for (std::size_t q = 0; q < order_.size(); ++q) code.push_back(sign * sign_[order_[q]] * a_(order_[q], v));
    return code;
  }

  void dfs(std::size_t depth) {
    if (depth == n_) {
      if (!have_best_ || code_ < best_code_) {
        best_code_ = code_;
        best_order_ = order_;
        best_sign_ = sign_;
        have_best_ = true;
      }
      return;
    }
    // Connected orders only: stay inside the current component while any
    // unplaced vertex still links to a placed one.
    std::vector<std::size_t> cands;
    for (std::size_t v = 0; v < n_; ++v) {
      if (placed_[v]) continue;
      for (std::size_t u : order_)
        if (a_(u, v) != 0) {
          cands.push_back(v);
          break;
        }
    }
    if (cands.empty())
      for (std::size_t v = 0; v < n_; ++v)
        if (!placed_[v]) cands.push_back(v);

    std::vector<std::pair<std::vector<Integer>, std::pair<std::size_t, int>>> rows;
    for (std::size_t v : cands) {
      int s;
      auto code = row_code(v, s);
      rows.push_back({std::move(code), {v, s}});
    }
    auto min_it = std::min_element(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    const auto min_code = min_it->first;

    const std::size_t off = code_.size();
    for (auto& [code, vs] : rows) {
      if (code != min_code) continue;
      if (have_best_ && std::equal(code_.begin(), code_.end(), best_code_.begin())) {
        std::vector<Integer> best_seg(best_code_.begin() + static_cast<std::ptrdiff_t>(off),
                                      best_code_.begin() + static_cast<std::ptrdiff_t>(off + code.size()));
        if (code > best_seg) continue;
      }
      placed_[vs.first] = true;
      order_.push_back(vs.first);
      int old = sign_[vs.first];
      sign_[vs.first] = vs.second;
      code_.insert(code_.end(), code.begin(), code.end());
      dfs(depth + 1);
      code_.resize(off);
      sign_[vs.first] = old;
      order_.pop_back();
      placed_[vs.first] = false;
    }
  }

  const IntMatrix& a_;
  std::size_t n_;
  std::vector<std::size_t> order_, best_order_;
  std::vector<int> sign_, best_sign_;
  std::vector<bool> placed_;
  std::vector<Integer> code_, best_code_;
  bool have_best_ = false;
};

}  // namespace detail

/// Lexicographically least representative of the orbit of a symmetric
/// matrix under simultaneous signed permutations of rows and columns.
inline SignedCanonical signed_canonical_form(const IntMatrix& a) {
  if (!a.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "canonical form needs a symmetric matrix");
  return detail::SignedCanonicalizer(a).run();
}

// ---------------------------------------------------------------------------
// Reductions that are themselves unimodular congruences.

/// V unimodular with V a V^T = diag(core, 0), core nonsingular.
struct RadicalSplit {
  IntMatrix v;
  IntMatrix core;
};

inline RadicalSplit split_radical(const IntMatrix& a) {
  auto h = hermite_normal_form(a);
  // HNF puts zero rows last, so the trailing rows of the transform span the
  // integer left kernel.
  RadicalSplit out;
  out.v = h.u.matrix();
  IntMatrix full = congruent_transform(out.v, a);
  std::vector<std::size_t> head(h.rank);
  for (std::size_t i = 0; i < h.rank; ++i) head[i] = i;
  out.core = full.select(head, head);
  return out;
}

/// Sum of |a_ii|: the trace for semidefinite input, and still a nonnegative
/// integer (so every strictly decreasing run stops) for indefinite input.
inline Integer diagonal_weight(const IntMatrix& a) {
  Integer w = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) w += abs(a(i, i));
  return w;
}

/// Greedy descent of diagonal_weight by transvections row_i -= q row_j (and
/// the matching column move). Returns the unimodular transform applied.
inline IntMatrix reduce_by_transvections(IntMatrix& a, std::uint64_t max_moves = 100000) {
  const std::size_t n = a.rows();
  IntMatrix u = IntMatrix::identity(n);
  for (std::uint64_t it = 0; it < max_moves; ++it) {
    Integer best_delta = 0;
    std::size_t bi = 0, bj = 0;
    Integer bq = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || a(j, j) == 0 || a(i, j) == 0) continue;
        Integer q = nearest_div(a(i, j), a(j, j));
        if (q == 0) continue;
        Integer delta = abs(a(i, i) - 2 * q * a(i, j) + q * q * a(j, j)) - abs(a(i, i));
        if (delta < best_delta) best_delta = delta, bi = i, bj = j, bq = q;
      }
    if (best_delta >= 0) break;
    a.add_row(bi, bj, -bq);
    a.add_col(bi, bj, -bq);
    u.add_row(bi, bj, -bq);
  }
  return u;
}

// ---------------------------------------------------------------------------
// Decision.

struct CongruenceVerdict {
  enum class Status { Congruent, NotCongruent, Unknown };
  Status status = Status::Unknown;
  std::optional<UnimodularWitness> witness;  // witness * a * witness^T == b
  std::optional<SeparatingInvariant> separating_invariant;
  std::uint64_t steps = 0;
};

inline const char* to_string(CongruenceVerdict::Status s) {
  switch (s) {
    case CongruenceVerdict::Status::Congruent: return "Congruent";
    case CongruenceVerdict::Status::NotCongruent: return "NotCongruent";
    case CongruenceVerdict::Status::Unknown: return "Unknown";
  }
  return "?";
}

namespace detail {

/// Bidirectional best-first search over transvection moves; states are
/// identified up to signed permutation. Returns (U_a, U_b) with
/// U_a a U_a^T == U_b b U_b^T on a meet.
class CongruenceSearch {
 public:
  CongruenceSearch(const IntMatrix& a, const IntMatrix& b, std::uint64_t budget) : budget_(budget) {
    seed(0, a);
    seed(1, b);
  }

  std::optional<std::pair<IntMatrix, IntMatrix>> run() {
    if (meet_) return meet_;
    int side = 0;
    while (steps_ < budget_) {
      if (frontier_[0].empty() && frontier_[1].empty()) break;
      if (frontier_[side].empty()) side ^= 1;
      expand(side);
      if (meet_) return meet_;
      side ^= 1;
    }
    return std::nullopt;
  }

  std::uint64_t steps() const noexcept { return steps_; }

 private:
  struct Node {
    IntMatrix x;  // canonical representative
    IntMatrix u;  // u * original * u^T == x
  };
  using Entry = std::pair<std::pair<Integer, std::uint64_t>, std::string>;

  void seed(int side, const IntMatrix& m) {
    auto c = signed_canonical_form(m);
    insert(side, std::move(c.key), {c.matrix, c.q});
  }

  void insert(int side, std::string key, Node node) {
    if (seen_[side].count(key)) return;
    auto other = seen_[side ^ 1].find(key);
    Integer tr = diagonal_weight(node.x);
    if (other != seen_[side ^ 1].end() && other->second.x == node.x) {
      meet_ = side == 0 ? std::make_pair(node.u, other->second.u) : std::make_pair(other->second.u, node.u);
    }
    frontier_[side].push({{tr, counter_++}, key});
    seen_[side].emplace(std::move(key), std::move(node));
  }

  void expand(int side) {
    auto top = frontier_[side].top();
    frontier_[side].pop();
    const Node node = seen_[side].at(top.second);
    const std::size_t n = node.x.rows();
    for (std::size_t i = 0; i < n && !meet_; ++i)
      for (std::size_t j = 0; j < n && !meet_; ++j) {
        if (i == j) continue;
        for (int s : {1, -1}) {
          if (++steps_ > budget_) return;
          IntMatrix y = node.x;
          y.add_row(i, j, s);
          y.add_col(i, j, s);
          IntMatrix u = node.u;
          u.add_row(i, j, s);
          auto c = signed_canonical_form(y);
          insert(side, std::move(c.key), {std::move(c.matrix), c.q * u});
          if (meet_) return;
        }
      }
  }

  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  std::uint64_t counter_ = 0;
  std::unordered_map<std::string, Node> seen_[2];
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> frontier_[2];
  std::optional<std::pair<IntMatrix, IntMatrix>> meet_;
};

}  // namespace detail

/// Tri-state congruence over the integers. NotCongruent always names the
/// invariant that differs; Congruent always carries a checked witness.
inline CongruenceVerdict decide_congruence(const IntMatrix& a, const IntMatrix& b, std::uint64_t budget) {
  if (!a.is_symmetric() || !b.is_symmetric())
    throw Error(ErrorCode::NotSymmetric, "congruence is decided for symmetric matrices only");
  CongruenceVerdict v;
  if (auto sep = separating_invariant(congruence_invariants(a), congruence_invariants(b))) {
    v.status = CongruenceVerdict::Status::NotCongruent;
    v.separating_invariant = std::move(sep);
    return v;
  }
  const std::size_t n = a.rows();

  // Split off the radical, then trace-reduce the nonsingular parts.
  auto sa = split_radical(a);
  auto sb = split_radical(b);
  IntMatrix ca = sa.core, cb = sb.core;
  IntMatrix ra = reduce_by_transvections(ca);
  IntMatrix rb = reduce_by_transvections(cb);

  detail::CongruenceSearch search(ca, cb, budget);
  auto meet = search.run();
  v.steps = search.steps();
  if (!meet) return v;

  // core_b = W core_a W^T with W = (U_b rb)^{-1} (U_a ra); lift through the
  // radical splits.
  const std::size_t r = ca.rows();
  IntMatrix w = inverse_unimodular(meet->second * rb) * (meet->first * ra);
  IntMatrix lift = direct_sum(w, IntMatrix::identity(n - r));
  IntMatrix full = inverse_unimodular(sb.v) * lift * sa.v;
  if (!(congruent_transform(full, a) == b))
    throw Error(ErrorCode::InvalidMatrix, "internal error: congruence witness failed to replay");
  v.status = CongruenceVerdict::Status::Congruent;
  v.witness = UnimodularWitness(full);
  return v;
}

}  // namespace lapdual
