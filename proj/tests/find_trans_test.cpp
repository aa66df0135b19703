#include <gtest/gtest.h>

#include "pkfree/find_trans.hpp"
#include "pkfree/generators.hpp"
#include "test_support.hpp"

using namespace pkfree;

namespace {

Rational power(Rational q, int e) {
  Rational out = 1;
  while (e-- > 0) out *= q;
  return out;
}

}  // namespace

TEST(Schedule, StrictConstants) {
  auto s = schedule_for(8, Mode::strict);
  EXPECT_EQ(s.k, 8u);
  EXPECT_EQ(s.log_k, 3u);
  EXPECT_EQ(s.lambda, Rational(1, 131072));
  EXPECT_EQ(s.lambda_k, Rational(1, 512));
  EXPECT_EQ(s.lambda_f, Rational(1, 16));
  EXPECT_EQ(s.c, power(Rational(1, 131072), 8) / 64);
  EXPECT_EQ(schedule_for(5, Mode::strict).k, 8u);
  EXPECT_EQ(schedule_for(3, Mode::relaxed).k, 4u);
}

TEST(Schedule, CrAndLambdaR) {
  auto s = schedule_for(4, Mode::relaxed, Rational(1, 4));
  EXPECT_EQ(s.c, Rational(1, 4 * 4 * 4 * 4 * 16));
  EXPECT_EQ(s.c_r(2), s.c);
  EXPECT_EQ(s.c_r(4), s.c * s.c / 2);
  EXPECT_EQ(s.c_r(8), s.c * s.c * s.c / 4);
  EXPECT_EQ(s.lambda_r(2), s.lambda);
  EXPECT_EQ(s.lambda_r(4), 64 * s.lambda);
  EXPECT_EQ(s.c_k_findtrans, power(s.c, 3) / 4);
}

TEST(Schedule, Errors) {
  EXPECT_THROW(schedule_for(2, Mode::strict), PreconditionError);
  EXPECT_THROW(schedule_for(65, Mode::strict), UnsupportedSize);
  EXPECT_THROW(schedule_for(4, Mode::relaxed, Rational(0)), PreconditionError);
  EXPECT_THROW(schedule_for(4, Mode::relaxed, Rational(3, 4)), PreconditionError);
}

TEST(Schedule, TrivialSize) {
  auto relaxed = schedule_for(4, Mode::relaxed);
  EXPECT_TRUE(relaxed.trivial_size(4));
  EXPECT_FALSE(relaxed.trivial_size(5));
  auto strict = schedule_for(4, Mode::strict);
  EXPECT_TRUE(strict.trivial_size(1u << 20));
}

TEST(FindTrans, SingleVertex) {
  Tournament t = Tournament::transitive(1);
  auto r = find_trans(t, schedule_for(4, Mode::strict));
  EXPECT_EQ(r.vertices, (VertexSet{0}));
  EXPECT_EQ(r.trace.base_exits, 1u);
  EXPECT_TRUE(verify_trans_result(t, r));
}

TEST(FindTrans, C3IsTrivial) {
  Tournament t = build_tournament(3, {{0, 1}, {1, 2}, {2, 0}});
  for (Mode mode : {Mode::strict, Mode::relaxed}) {
    auto r = find_trans(t, schedule_for(4, mode));
    EXPECT_EQ(r.vertices, (VertexSet{0, 1}));
    EXPECT_EQ(r.trace.trivial_exits, 1u);
    EXPECT_TRUE(verify_trans_result(t, r));
  }
}

TEST(FindTrans, TransitiveHostRecursesOnCompletePairs) {
  Tournament t = Tournament::transitive(512);
  auto r = find_trans(t, schedule_for(4, Mode::relaxed, Rational(1, 10)));
  ASSERT_FALSE(r.has_witness());
  EXPECT_TRUE(is_transitive(t, r.vertices));
  EXPECT_TRUE(verify_trans_result(t, r));
  EXPECT_GT(r.trace.recursion_pairs, 0u);
  for (const auto& e : r.trace.recursion_pair_events) {
    EXPECT_TRUE(e.density.complete());
    EXPECT_LT(e.u, e.v);
  }
  EXPECT_GT(r.vertices.size(), 2u);
}

TEST(FindTrans, RandomHostsSelfVerify) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    Tournament t = random_tournament(256, seed);
    for (std::size_t k : {4u, 8u}) {
      auto r = find_trans(t, schedule_for(k, Mode::relaxed));
      if (r.has_witness()) {
        EXPECT_TRUE(check_pk_witness(t, *r.witness));
        EXPECT_EQ(r.witness->size(), schedule_for(k, Mode::relaxed).k);
      } else {
        EXPECT_TRUE(verify_trans_result(t, r));
      }
    }
  }
}

TEST(FindTrans, StrictModeAtDeskScaleIsTrivial) {
  Tournament t = random_tournament(300, 3);
  auto r = find_trans(t, schedule_for(8, Mode::strict));
  EXPECT_EQ(r.vertices, (VertexSet{0, 1}));
  EXPECT_EQ(r.trace.trivial_exits, 1u);
  EXPECT_EQ(r.trace.strict_impossible, 0u);
}

TEST(FindTrans, Universe) {
  Tournament t = Tournament::transitive(10);
  auto r = find_trans(t, VertexSet{3, 7, 9}, schedule_for(4, Mode::relaxed));
  EXPECT_EQ(r.vertices, (VertexSet{3, 7}));
  EXPECT_TRUE(verify_trans_result(t, VertexSet{3, 7, 9}, r));
  EXPECT_FALSE(verify_trans_result(t, VertexSet{1, 2, 3}, r));
  EXPECT_THROW(find_trans(t, VertexSet{3, 10}, schedule_for(4, Mode::relaxed)), PreconditionError);
}

TEST(VerifyTransResult, Cases) {
  Tournament t = build_tournament(3, {{0, 1}, {1, 2}, {2, 0}});
  TransResult good;
  good.vertices = VertexSet{1, 2};
  EXPECT_TRUE(verify_trans_result(t, good));
  TransResult cyclic;
  cyclic.vertices = VertexSet{0, 1, 2};
  EXPECT_FALSE(verify_trans_result(t, cyclic));
  TransResult empty;
  EXPECT_FALSE(verify_trans_result(t, empty));
  TransResult single;
  single.vertices = VertexSet{0};
  EXPECT_FALSE(verify_trans_result(t, single));
}
