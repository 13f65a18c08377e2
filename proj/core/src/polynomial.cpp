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

#include "osp/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

#include "osp/error.hpp"
#include "osp/op_counter.hpp"

namespace osp {

namespace {

template <class W>
void trim(std::vector<W>& v) {
  while (v.size() > 1 && v.back() == 0) v.pop_back();
}

const BigInt kZero = 0;

}  // namespace

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "polynomial needs at least one coefficient");
  }
  trim(coeffs_);
}

const BigInt& Polynomial::coeff(std::size_t i) const noexcept {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

std::string Polynomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += coeffs_[i].str();
  }
  return out;
}

Polynomial make_polynomial(std::span<const BigInt> coeffs) {
  return Polynomial(std::vector<BigInt>(coeffs.begin(), coeffs.end()));
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << '[' << p.to_string() << ']';
}

Evaluator::Evaluator(const Polynomial& p, Width w)
    : width_(w), wide_(detail::reduce_coeffs(p, w)) {
  trim(wide_);
  if (w.narrow()) {
    narrow_.reserve(wide_.size());
    for (const Word& c : wide_) narrow_.push_back(static_cast<std::uint64_t>(c));
  }
}

Residue Evaluator::operator()(const Residue& x) const {
  return eval_word(width_.check(x));
}

Word Evaluator::eval_word(const Word& x) const {
  if (!narrow_.empty()) {
    return Word(eval64(static_cast<std::uint64_t>(x)));
  }
  const std::size_t n = wide_.size() - 1;
  Word r = wide_.back();
  for (std::size_t i = n; i-- > 0;) {
    r = (r * x + wide_[i]) & width_.mask();
  }
  detail::count_ops(n, n);
  return r;
}

std::uint64_t Evaluator::eval64(std::uint64_t x) const noexcept {
  const std::size_t n = narrow_.size() - 1;
  std::uint64_t r = narrow_.back();
  for (std::size_t i = n; i-- > 0;) r = r * x + narrow_[i];
  detail::count_ops(n, n);
  return r & width_.mask64();
}

Residue eval_mod(const Polynomial& p, const Residue& x, Width w) {
  return Evaluator(p, w)(x);
}

Polynomial compose_mod(const Polynomial& outer, const Polynomial& inner,
                       Width w, std::size_t trunc) {
  if (trunc == 0) {
    throw Error(ErrorCode::kInvalidArgument, "truncation degree must be >= 1");
  }
  const std::vector<Word> o = detail::reduce_coeffs(outer, w);
  const std::vector<Word> i = detail::reduce_coeffs(inner, w);
  if (w.narrow()) {
    std::vector<std::uint64_t> o64, i64;
    for (const Word& c : o) o64.push_back(static_cast<std::uint64_t>(c));
    for (const Word& c : i) i64.push_back(static_cast<std::uint64_t>(c));
    const std::vector<std::uint64_t> r = detail::compose_words<std::uint64_t>(
        o64, i64, trunc, w.mask64());
    std::vector<Word> words(r.begin(), r.end());
    return detail::words_to_polynomial(words);
  }
  return detail::words_to_polynomial(
      detail::compose_words<Word>(o, i, trunc, w.mask()));
}

Residue iterate_naive(const Polynomial& p, const Residue& x, std::uint64_t j,
                      Width w) {
  const Evaluator f(p, w);
  w.check(x);
  if (w.narrow()) {
    auto v = static_cast<std::uint64_t>(x);
    for (std::uint64_t s = 0; s < j; ++s) v = f.eval64(v);
    return Word(v);
  }
  Word v = x;
  for (std::uint64_t s = 0; s < j; ++s) v = f.eval_word(v);
  return v;
}

namespace detail {

template <class W>
std::vector<W> compose_words(std::span<const W> outer, std::span<const W> inner,
                             std::size_t trunc, const W& mask) {
  const std::size_t t = std::min(inner.size(), trunc);
  std::vector<W> acc{outer.back() & mask};
  std::vector<W> prod;
  std::uint64_t muls = 0;
  for (std::size_t k = outer.size() - 1; k-- > 0;) {
    // acc <- acc * inner + outer[k]  (mod X^trunc)
    const std::size_t len = std::min(trunc, acc.size() + t - 1);
    prod.assign(len, W(0));
    for (std::size_t a = 0; a < acc.size(); ++a) {
      const std::size_t bmax = std::min(t, len - a);
      for (std::size_t b = 0; b < bmax; ++b) prod[a + b] += acc[a] * inner[b];
      muls += bmax;
    }
    prod[0] += outer[k];
    for (W& c : prod) c &= mask;
    acc.swap(prod);
  }
  if (acc.size() > trunc) acc.resize(trunc);
  trim(acc);
  count_ops(muls, muls + outer.size() - 1);
  return acc;
}

template std::vector<std::uint64_t> compose_words<std::uint64_t>(
    std::span<const std::uint64_t>, std::span<const std::uint64_t>, std::size_t,
    const std::uint64_t&);
template std::vector<Word> compose_words<Word>(std::span<const Word>,
                                               std::span<const Word>,
                                               std::size_t, const Word&);

std::vector<Word> reduce_coeffs(const Polynomial& p, Width w) {
  std::vector<Word> out;
  out.reserve(p.coeffs().size());
  for (const BigInt& c : p.coeffs()) out.push_back(w.reduce(c));
  return out;
}

Polynomial words_to_polynomial(std::span<const Word> words) {
  std::vector<BigInt> coeffs;
  coeffs.reserve(words.size());
  for (const Word& c : words) coeffs.emplace_back(c);
  if (coeffs.empty()) coeffs.emplace_back(0);
  return Polynomial(std::move(coeffs));
}

}  // namespace detail

}  // namespace osp
