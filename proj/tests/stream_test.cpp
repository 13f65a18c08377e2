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

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "osp/classify.hpp"
#include "osp/error.hpp"
#include "osp/stream.hpp"

namespace osp {
namespace {

const Polynomial kF{1, 1, 0, 4};
const Polynomial kG{1, 1, 2, 6};

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::kInvalidArgument;
}

TEST(StreamTest, Construction) {
  const Stream s(kF, 0, Width(3));
  EXPECT_EQ(s.current(), 0);
  EXPECT_EQ(s.emitted(), 0);
  EXPECT_EQ(code_of([] { Stream(kG, 0, Width(3)); }), ErrorCode::kNotOneStroke);
  EXPECT_EQ(code_of([] { Stream(kF, 8, Width(3)); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(Stream(Polynomial{1, 1}, 7, Width(3)).current(), 7);
}

TEST(StreamTest, FigureOneSequence) {
  Stream s(kF, 0, Width(3));
  std::vector<int> got;
  for (int i = 0; i < 9; ++i) got.push_back(static_cast<int>(s.next()));
  EXPECT_EQ(got, (std::vector<int>{1, 6, 7, 4, 5, 2, 3, 0, 1}));
  EXPECT_EQ(s.emitted(), 1);
}

TEST(StreamTest, Counter) {
  Stream s(Polynomial{1, 1}, 0, Width(2));
  EXPECT_EQ(s.next(), 1);
  EXPECT_EQ(s.next(), 2);
  EXPECT_EQ(s.next(), 3);
  EXPECT_EQ(s.next(), 0);
}

TEST(StreamTest, SeekExamples) {
  Stream s(kF, 0, Width(3));
  s.seek(6);
  EXPECT_EQ(s.current(), 2);
  EXPECT_EQ(s.emitted(), 6);
  const Stream before = s;
  s.seek(0);
  EXPECT_EQ(s, before);
  s.seek(8);
  EXPECT_EQ(s.current(), before.current());
  EXPECT_EQ(s.emitted(), before.emitted());
  s.seek(3);  // emitted wraps: 6 + 3 = 9 == 1 (mod 8)
  EXPECT_EQ(s.emitted(), 1);
  EXPECT_EQ(s.current(), iterate_naive(kF, 0, 9, Width(3)));
}

TEST(StreamTest, FullPeriod) {
  std::mt19937_64 rng(31);
  std::vector<Polynomial> polys;
  while (polys.size() < 10) {
    Polynomial p = oracle::random_polynomial(rng, 1 + rng() % 6, 64);
    if (is_one_stroke(p)) polys.push_back(std::move(p));
  }
  for (const Polynomial& p : polys) {
    for (unsigned w = 1; w <= 12; ++w) {
      Stream s(p, rng() & ((std::uint64_t{1} << w) - 1), Width(w));
      std::vector<bool> seen(std::size_t{1} << w, false);
      for (std::size_t i = 0; i < seen.size(); ++i) {
        const auto v = static_cast<std::size_t>(s.next());
        ASSERT_FALSE(seen[v]) << p << " w=" << w;
        seen[v] = true;
      }
      ASSERT_EQ(s.emitted(), 0);
    }
  }
}

TEST(StreamTest, SeekMatchesSequentialNext) {
  std::mt19937_64 rng(37);
  const Polynomial p{5, 3, 6, 4, 4};
  ASSERT_TRUE(is_one_stroke(p));
  for (int t = 0; t < 30; ++t) {
    const std::uint64_t n = rng() % (1u << 16);
    Stream a(p, 1234, Width(16));
    Stream b = a;
    a.seek(n);
    for (std::uint64_t i = 0; i < n; ++i) b.next();
    EXPECT_EQ(a.next(), b.next());
    EXPECT_EQ(a, b);
  }
}

TEST(StreamTest, WideWidth) {
  const Width w(200);
  Stream a(kF, Word(1) << 199, w), b = a;
  a.seek(1000);
  for (int i = 0; i < 1000; ++i) b.next();
  EXPECT_EQ(a, b);
}

TEST(SerializeTest, KnownLayout) {
  Stream s(Polynomial{-1, 1, 0, 4}, 5, Width(3));
  s.next();
  const std::vector<std::uint8_t> expected = {
      'O', 'S', 'P', 'S', 1, 0, 3, 0, 4, 0, 0, 0,
      1, 0, 0, 0, 1, 1,   // -1
      1, 0, 0, 0, 0, 1,   // 1
      0, 0, 0, 0, 0,      // 0
      1, 0, 0, 0, 0, 4,   // 4
      static_cast<std::uint8_t>(s.current()), 1};
  EXPECT_EQ(s.serialize(), expected);
}

TEST(SerializeTest, RoundTrip) {
  std::mt19937_64 rng(41);
  int done = 0;
  while (done < 300) {
    std::vector<BigInt> c;
    for (std::size_t i = 0, n = 1 + rng() % 7; i < n; ++i) {
      BigInt v = BigInt(rng()) * rng();
      if (rng() & 1) v = -v;
      c.push_back(v);
    }
    const Polynomial p(c);
    if (!is_one_stroke(p)) continue;
    ++done;
    const Width w(1 + rng() % kMaxWidth);
    Stream s(p, w.reduce(BigInt(rng()) * rng() * rng() * rng() * rng()), w);
    s.seek(BigInt(rng()) * rng());
    const auto bytes = s.serialize();
    Stream back = Stream::deserialize(bytes);
    EXPECT_EQ(back, s);
    EXPECT_EQ(back.serialize(), bytes);
    for (int i = 0; i < 5; ++i) EXPECT_EQ(back.next(), s.next());
  }
}

TEST(SerializeTest, RejectsBadRecords) {
  Stream s(kF, 3, Width(12));
  const auto good = s.serialize();
  auto mutate = [&](auto fn) {
    auto b = good;
    fn(b);
    return code_of([&] { Stream::deserialize(b); });
  };
  EXPECT_EQ(code_of([] { Stream::deserialize({}); }), ErrorCode::kMalformed);
  EXPECT_EQ(mutate([](auto& b) { b[0] = 'X'; }), ErrorCode::kMalformed);
  EXPECT_EQ(mutate([](auto& b) { b[4] = 2; }), ErrorCode::kVersionMismatch);
  EXPECT_EQ(mutate([](auto& b) { b[6] = 0; }), ErrorCode::kMalformed);
  EXPECT_EQ(mutate([](auto& b) { b.pop_back(); }), ErrorCode::kMalformed);
  EXPECT_EQ(mutate([](auto& b) { b.push_back(0); }), ErrorCode::kMalformed);
  EXPECT_EQ(mutate([](auto& b) { b[8] = 0xff; }), ErrorCode::kMalformed);
  // a_0 = 1 -> 2 breaks "a0 odd".
  EXPECT_EQ(mutate([](auto& b) { b[17] = 2; }), ErrorCode::kNotOneStroke);
  // Sign byte of a_0.
  EXPECT_EQ(mutate([](auto& b) { b[16] = 7; }), ErrorCode::kMalformed);
  // current = 0xf003 has bits above w = 12.
  EXPECT_EQ(mutate([](auto& b) { b[b.size() - 3] = 0xf0; }), ErrorCode::kMalformed);
}

}  // namespace
}  // namespace osp
