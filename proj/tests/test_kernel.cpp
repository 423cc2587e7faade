#include <gtest/gtest.h>

#include "projconv/kernel.hpp"
#include "projconv/random.hpp"

using namespace projconv;

namespace {

IntVec iv(std::initializer_list<long> v) { return IntVec(v.begin(), v.end()); }

// Rank by brute force: the largest k with a nonzero k x k minor, each minor
// computed by cofactor expansion.
Int minor_det(const std::vector<IntVec>& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  if (rows.size() == 1) return m[rows[0]][cols[0]];
  Int total = 0;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::vector<std::size_t> r2(rows.begin() + 1, rows.end()), c2;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != c) c2.push_back(cols[j]);
    Int term = m[rows[0]][cols[c]] * minor_det(m, r2, c2);
    total += (c % 2 == 0) ? term : Int(-term);
  }
  return total;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::size_t brute_rank(const std::vector<IntVec>& m) {
  if (m.empty()) return 0;
  const std::size_t r = m.size(), c = m[0].size();
  for (std::size_t k = std::min(r, c); k > 0; --k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(r, k, 0, cur, rs);
    subsets(c, k, 0, cur, cs);
    for (const auto& a : rs)
      for (const auto& b : cs)
        if (minor_det(m, a, b) != 0) return k;
  }
  return 0;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3/6"), Rat(1, 2));
  EXPECT_EQ(parse_rational(" -4 "), Rat(-4));
  EXPECT_EQ(parse_rational("-2/-4"), Rat(1, 2));
  EXPECT_EQ(to_string(Rat(-6, 4)), "-3/2");
  EXPECT_EQ(to_string(Rat(5)), "5");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("x"), Error);
  EXPECT_THROW(parse_rational(""), Error);
}

TEST(NormalizePrimitive, Examples) {
  EXPECT_EQ(normalize_primitive(Vec{Rat(2, 3), Rat(-4, 3), Rat(0)}), iv({1, -2, 0}));
  EXPECT_EQ(normalize_primitive(iv({0, -5, 10})), iv({0, 1, -2}));
  EXPECT_EQ(normalize_primitive(iv({7, 0, 0})), iv({1, 0, 0}));
  try {
    normalize_primitive(iv({0, 0, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroVector);
  }
}

TEST(NormalizePrimitive, IdempotentAndScaleInvariant) {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const IntVec v = rng.nonzero_vector(static_cast<std::size_t>(rng.uniform(2, 4)), 30);
    const IntVec n = normalize_primitive(v);
    EXPECT_EQ(normalize_primitive(n), n);
    Rat lambda(rng.uniform(1, 20), rng.uniform(1, 20));
    if (rng.coin()) lambda = -lambda;
    Vec scaled;
    for (const auto& x : v) scaled.push_back(lambda * x);
    EXPECT_EQ(normalize_primitive(scaled), n);
  }
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(std::vector<IntVec>{iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})}), 3u);
  EXPECT_EQ(rank(std::vector<IntVec>{iv({0, 0, 0}), iv({0, 0, 0})}), 0u);
  EXPECT_EQ(rank(std::vector<IntVec>{iv({1, 2, 3}), iv({2, 4, 6})}), 1u);
}

TEST(Rank, AgreesWithMinorEnumeration) {
  Rng rng(12);
  for (int i = 0; i < 1500; ++i) {
    const auto rows = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto cols = static_cast<std::size_t>(rng.uniform(1, 8));
    std::vector<IntVec> m(rows, IntVec(cols));
    for (auto& r : m)
      for (auto& x : r) x = rng.uniform(-2, 2);
    ASSERT_EQ(rank(m), brute_rank(m));
  }
}

TEST(Feasibility, OpenOrthant) {
  LinSystem sys(3);
  sys.add(iv({1, 0, 0}), Relation::GT);
  sys.add(iv({0, 1, 0}), Relation::GT);
  sys.add(iv({0, 0, 1}), Relation::GT);
  auto x = solve_feasibility(sys);
  ASSERT_TRUE(x);
  EXPECT_TRUE(satisfies(sys, *x));
  EXPECT_EQ(primitive(*x), iv({1, 1, 1}));
}

TEST(Feasibility, Contradictions) {
  LinSystem a(1);
  a.add(iv({1}), Relation::GT);
  a.add(iv({-1}), Relation::GT);
  EXPECT_FALSE(solve_feasibility(a));

  LinSystem b(2);
  b.add(iv({1, 1}), Relation::GE);
  b.add(iv({1, -1}), Relation::GT);
  b.add(iv({1, 0}), Relation::EQ);
  // x1 = 0 forces x2 >= 0 and -x2 > 0.
  EXPECT_FALSE(solve_feasibility(b));
}

TEST(Feasibility, Errors) {
  EXPECT_THROW(solve_feasibility(LinSystem(5)), Error);
  LinSystem s(3);
  EXPECT_THROW(s.add(iv({1, 0}), Relation::GE), Error);
}

TEST(Feasibility, WitnessesSatisfyEveryRowAndAreDeterministic) {
  Rng rng(13);
  int feasible = 0;
  for (int i = 0; i < 400; ++i) {
    const auto d = static_cast<std::size_t>(rng.uniform(2, 4));
    LinSystem sys(d);
    const auto n = rng.uniform(1, 7);
    for (long long j = 0; j < n; ++j) {
      const auto r = rng.uniform(0, 5);
      sys.add(rng.nonzero_vector(d, 4), r == 0 ? Relation::EQ : r < 3 ? Relation::GE : Relation::GT);
    }
    auto x = solve_feasibility(sys);
    auto y = solve_feasibility(sys);
    ASSERT_EQ(x.has_value(), y.has_value());
    if (!x) continue;
    ++feasible;
    EXPECT_EQ(*x, *y);
    EXPECT_TRUE(satisfies(sys, *x));
    bool strict = false;
    for (const auto& row : sys.rows) strict = strict || row.relation == Relation::GT;
    if (strict) EXPECT_FALSE(is_zero(*x));
  }
  EXPECT_GT(feasible, 50);
}

TEST(LinearAlgebra, NullspaceAndCanonicalBasis) {
  auto ns = nullspace({iv({1, 1, 1})}, 3);
  ASSERT_EQ(ns.size(), 2u);
  for (const auto& v : ns) EXPECT_EQ(dot(v, iv({1, 1, 1})), 0);
  EXPECT_EQ(canonical_basis({iv({2, 2, 0}), iv({0, 3, 3}), iv({1, 2, 1})}, 3),
            canonical_basis({iv({1, 0, -1}), iv({0, 1, 1})}, 3));
}
