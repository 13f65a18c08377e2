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

#include "osp/ladder.hpp"

#include <string>

#include "osp/classify.hpp"
#include "osp/error.hpp"

namespace osp {

namespace {

template <class W>
std::vector<W> to_words(const Polynomial& p, Width w) {
  std::vector<W> out;
  for (const Word& c : detail::reduce_coeffs(p, w)) out.push_back(static_cast<W>(c));
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

template <class W>
std::vector<std::vector<W>> build_rungs(const Polynomial& p, Width w, const W& mask) {
  std::vector<std::vector<W>> rungs;
  rungs.reserve(w.bits());
  rungs.push_back(to_words<W>(p, w));
  for (std::size_t i = 1; i < w.bits(); ++i) {
    const std::vector<W>& prev = rungs.back();
    rungs.push_back(
        detail::compose_words<W>(prev, prev, rung_truncation(w, i), mask));
  }
  return rungs;
}

Polynomial to_polynomial(const std::vector<std::uint64_t>& words) {
  return detail::words_to_polynomial(std::vector<Word>(words.begin(), words.end()));
}

Polynomial to_polynomial(const std::vector<Word>& words) {
  return detail::words_to_polynomial(words);
}

Word jump_from_zero_word(const Ladder& ladder, const Word& k) {
  const unsigned w = ladder.width().bits();
  if (ladder.width().narrow()) {
    const auto k64 = static_cast<std::uint64_t>(k);
    std::uint64_t v = 0;
    for (unsigned i = w; i-- > 0;) {
      if ((k64 >> i) & 1) v = ladder.apply64(i, v);
    }
    return Word(v);
  }
  Word v = 0;
  for (unsigned i = w; i-- > 0;) {
    if (bit_test(k, i)) v = ladder.apply(i, v);
  }
  return v;
}

}  // namespace

Residue invert(const Polynomial& p, const Residue& y, Width w) {
  if (!is_permutation(p)) {
    throw Error(ErrorCode::kNotPermutation,
                "[" + p.to_string() + "] is not a permutation polynomial");
  }
  w.check(y, "y");
  const Evaluator f(p, w);
  if (w.narrow()) {
    const auto y64 = static_cast<std::uint64_t>(y);
    std::uint64_t x = 0;
    for (unsigned m = 1; m <= w.bits(); ++m) {
      const std::uint64_t bit = std::uint64_t{1} << (m - 1);
      // Bits below m-1 already agree; only bit m-1 can differ.
      if ((f.eval64(x) ^ y64) & bit) x |= bit;
    }
    return Word(x);
  }
  Word x = 0;
  for (unsigned m = 1; m <= w.bits(); ++m) {
    if (bit_test(Word(f.eval_word(x) ^ y), m - 1)) bit_set(x, m - 1);
  }
  return x;
}

std::size_t rung_truncation(Width w, std::size_t i) {
  if (i == 0) {
    throw Error(ErrorCode::kInvalidArgument, "rung 0 is not truncated");
  }
  return (w.bits() + i - 1) / i;
}

Ladder::Ladder(const Polynomial& p, Width w) : base_(p), width_(w) {
  if (!is_one_stroke(p)) {
    throw Error(ErrorCode::kNotOneStroke,
                "[" + p.to_string() + "] is not a one-stroke polynomial");
  }
  auto store = [this](const auto& rungs) {
    for (const auto& r : rungs) {
      rungs_.push_back(to_polynomial(r));
      evaluators_.emplace_back(rungs_.back(), width_);
    }
  };
  if (w.narrow()) {
    store(build_rungs<std::uint64_t>(p, w, w.mask64()));
  } else {
    store(build_rungs<Word>(p, w, w.mask()));
  }
}

Residue Ladder::apply(std::size_t i, const Residue& x) const {
  return evaluators_.at(i)(x);
}

std::uint64_t Ladder::apply64(std::size_t i, std::uint64_t x) const noexcept {
  return evaluators_[i].eval64(x);
}

Ladder build_ladder(const Polynomial& p, Width w) { return Ladder(p, w); }

Residue dlog_to_zero(const Ladder& ladder, const Residue& x) {
  const Width w = ladder.width();
  w.check(x, "x");
  // Invariant at step i: v == 0 (mod 2^i). If bit i is set, h_{2^i} clears
  // it and j gains 2^i.
  if (w.narrow()) {
    auto v = static_cast<std::uint64_t>(x);
    std::uint64_t j = 0;
    for (unsigned i = 0; i < w.bits(); ++i) {
      if ((v >> i) & 1) {
        v = ladder.apply64(i, v);
        j |= std::uint64_t{1} << i;
      }
    }
    return Word(j);
  }
  Word v = x;
  Word j = 0;
  for (unsigned i = 0; i < w.bits(); ++i) {
    if (bit_test(v, i)) {
      v = ladder.apply(i, v);
      bit_set(j, i);
    }
  }
  return j;
}

Residue dlog(const Ladder& ladder, const Residue& x, const Residue& y) {
  const Word to_zero_from_x = dlog_to_zero(ladder, x);
  const Word to_zero_from_y = dlog_to_zero(ladder, y);
  return ladder.width().reduce(Word(to_zero_from_x - to_zero_from_y));
}

Residue jump_from_zero(const Ladder& ladder, const BigInt& k) {
  return jump_from_zero_word(ladder, ladder.width().reduce(k));
}

Residue jump_from_zero(const Ladder& ladder, std::uint64_t k) {
  return jump_from_zero_word(ladder, ladder.width().reduce(Word(k)));
}

Residue jump(const Ladder& ladder, const Residue& x, const BigInt& k) {
  const Width w = ladder.width();
  return jump_from_zero_word(ladder,
                             w.reduce(Word(w.reduce(k) - dlog_to_zero(ladder, x))));
}

Residue jump(const Ladder& ladder, const Residue& x, std::uint64_t k) {
  const Width w = ladder.width();
  return jump_from_zero_word(ladder, w.reduce(Word(Word(k) - dlog_to_zero(ladder, x))));
}

std::shared_ptr<const Ladder> LadderCache::get(const Polynomial& p, Width w) {
  Key key{std::vector<BigInt>(p.coeffs().begin(), p.coeffs().end()), w.bits()};
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = ladders_.find(key); it != ladders_.end()) return it->second;
  }
  auto built = std::make_shared<const Ladder>(p, w);
  std::lock_guard<std::mutex> lock(mu_);
  return ladders_.emplace(std::move(key), std::move(built)).first->second;
}

std::size_t LadderCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return ladders_.size();
}

}  // namespace osp
