/*
 * Copyright 2026 The OSP Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef OSP_LADDER_HPP_
#define OSP_LADDER_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "osp/polynomial.hpp"
#include "osp/types.hpp"

namespace osp {

// Inverse by lifting one bit per step: the m-th step fixes bit m-1 of x using
// f(x + 2^(m-1)) == f(x) + 2^(m-1) (mod 2^m). Uses w evaluations.
// Throws Error(kNotPermutation) unless is_permutation(p).
Residue invert(const Polynomial& p, const Residue& y, Width w);

// Truncated power iterates h_{2^i} of a one-stroke polynomial f mod 2^w.
//
// Rung 0 is f itself (coefficients reduced, untruncated). Rung i >= 1 is
// f^(2^i) mod 2^w with terms of degree >= ceil(w/i) dropped; it agrees with
// f^(2^i) on every x divisible by 2^i, since the dropped terms vanish there.
// Rung i+1 is rung i composed with itself and truncated at ceil(w/(i+1)).
class Ladder {
 public:
  // Throws Error(kNotOneStroke) unless is_one_stroke(p).
  Ladder(const Polynomial& p, Width w);

  const Polynomial& base() const noexcept { return base_; }
  Width width() const noexcept { return width_; }
  // Always width().bits().
  std::size_t size() const noexcept { return rungs_.size(); }
  const Polynomial& rung(std::size_t i) const { return rungs_.at(i); }

  // h_{2^i}(x) mod 2^w.
  Residue apply(std::size_t i, const Residue& x) const;
  std::uint64_t apply64(std::size_t i, std::uint64_t x) const noexcept;

 private:
  Polynomial base_;
  Width width_;
  std::vector<Polynomial> rungs_;
  std::vector<Evaluator> evaluators_;
};

Ladder build_ladder(const Polynomial& p, Width w);

// Truncation bound ceil(w/i) for rung i >= 1.
std::size_t rung_truncation(Width w, std::size_t i);

// The unique j in [0, 2^w) with f^j(x) == 0.
Residue dlog_to_zero(const Ladder& ladder, const Residue& x);

// The unique j in [0, 2^w) with f^j(x) == y.
Residue dlog(const Ladder& ladder, const Residue& x, const Residue& y);

// f^k(0) mod 2^w; k is reduced mod 2^w (the cycle length) first.
Residue jump_from_zero(const Ladder& ladder, const BigInt& k);
Residue jump_from_zero(const Ladder& ladder, std::uint64_t k);

// f^k(x) mod 2^w.
Residue jump(const Ladder& ladder, const Residue& x, const BigInt& k);
Residue jump(const Ladder& ladder, const Residue& x, std::uint64_t k);

// Shares ladders per (polynomial, width). Concurrent misses for the same key
// may build twice; the first insert wins.
class LadderCache {
 public:
  std::shared_ptr<const Ladder> get(const Polynomial& p, Width w);
  std::size_t size() const;

 private:
  using Key = std::pair<std::vector<BigInt>, unsigned>;
  mutable std::mutex mu_;
  std::map<Key, std::shared_ptr<const Ladder>> ladders_;
};

}  // namespace osp

#endif  // OSP_LADDER_HPP_
