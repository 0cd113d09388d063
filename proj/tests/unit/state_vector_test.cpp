#include <gtest/gtest.h>

#include <sstream>

#include "stalg/dense.hpp"
#include "stalg/error.hpp"
#include "support/oracle.hpp"

namespace stalg {
namespace {

using testing::rows;
using testing::Rng;

TObject T(IndexSet upper, IndexSet lower = {}) { return TObject::make(std::move(upper), std::move(lower)); }

dense::DenseVector ex(const StateVector& s, std::size_t n) { return dense::expand(s, n); }

TEST(StateVector, RowsAreNormalized) {
  StateVector s({{T({1}), 2}, {TObject::null(), 3}, {T({1}), 1}, {T({2}), 0}});
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.rows()[0].mult, 3u);
  EXPECT_EQ(s.total_mass(), 3u);
  EXPECT_TRUE(StateVector().empty());
  EXPECT_EQ(StateVector::trivial().rows()[0].term, TObject::unit());
}

TEST(StateVector, PrintsCompactSum) {
  std::ostringstream os;
  os << StateVector({{T({1}), 2}, {T({}, {1}), 1}});
  EXPECT_EQ(os.str(), "t_{1} + 2 t^{1}");
  std::ostringstream zero;
  zero << StateVector();
  EXPECT_EQ(zero.str(), "0");
}

TEST(StateVector, DefinitionsFirstProduct) {
  const StateVector s{T({2, 3, 4}), T({4}, {2}), T({2}, {3, 4})};
  const StateVector q{T({1, 4, 5}), T({5}, {1}), T({1}, {4, 5})};
  OpCounters c;
  const StateVector p = multiply(s, q, &c);
  EXPECT_EQ(c.pairwise_products, 9u);
  EXPECT_EQ(p.size(), 6u);  // three of the nine products vanish
  const StateVector expected{T({2, 3, 4, 5}), T({4, 5}, {2}), T({2, 5}, {1, 3, 4}),
                             T({1, 2}, {3, 4, 5})};
  EXPECT_TRUE(equivalent(p, expected));
  EXPECT_TRUE(testing::same_states(p, expected, 5));
}

TEST(StateVector, MultiplyIdentityAndZero) {
  const StateVector s = rows({"11-", "0-0", "-01"});
  EXPECT_EQ(multiply(s, StateVector::trivial()), s);
  EXPECT_TRUE(multiply(s, StateVector()).empty());
}

TEST(StateVector, MultiplyMatchesOracle) {
  Rng rng(21);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 1 + rng() % 7;
    const StateVector s = testing::random_vector(rng, n, 6, 3);
    const StateVector q = testing::random_vector(rng, n, 6, 3);
    OpCounters c;
    EXPECT_EQ(ex(multiply(s, q, &c), n), dense::mul(ex(s, n), ex(q, n)));
    EXPECT_EQ(c.pairwise_products, s.size() * q.size());
  }
}

TEST(StateVector, ParallelMultiplyIsDeterministic) {
  Rng rng(22);
  const StateVector s = testing::random_vector(rng, 12, 120, 2, 0.6);
  const StateVector q = testing::random_vector(rng, 12, 120, 2, 0.6);
  OpCounters seq;
  OpCounters par;
  EXPECT_EQ(multiply(s, q, &seq, Execution::Sequential), multiply(s, q, &par, Execution::Parallel));
  EXPECT_EQ(seq.pairwise_products, par.pairwise_products);
}

TEST(StateVector, MultiplyDistributesOverAdd) {
  Rng rng(23);
  for (int k = 0; k < 200; ++k) {
    const StateVector s = testing::random_vector(rng, 5, 4, 3);
    const StateVector q = testing::random_vector(rng, 5, 4, 3);
    const StateVector r = testing::random_vector(rng, 5, 4, 3);
    EXPECT_EQ(multiply(s, add(q, r)), add(multiply(s, q), multiply(s, r)));
  }
}

TEST(StateVector, AddExamples) {
  const StateVector sum = add(StateVector{T({1})}, StateVector{T({}, {1})});
  EXPECT_EQ(sum.size(), 2u);
  EXPECT_TRUE(equivalent(sum, StateVector::trivial()));
  const StateVector s = rows({"1-", "01"});
  EXPECT_EQ(add(s, StateVector()), s);
  const StateVector twice = add(StateVector{T({1})}, StateVector{T({1})});
  ASSERT_EQ(twice.size(), 1u);
  EXPECT_EQ(twice.rows()[0].mult, 2u);
}

TEST(StateVector, AddMatchesOracle) {
  Rng rng(24);
  for (int k = 0; k < 200; ++k) {
    const StateVector s = testing::random_vector(rng, 6, 5, 3);
    const StateVector q = testing::random_vector(rng, 6, 5, 3);
    EXPECT_EQ(ex(add(s, q), 6), dense::add(ex(s, 6), ex(q, 6)));
  }
}

TEST(StateVector, SubtractSetExamples) {
  const StateVector s = rows({"11-", "0-0", "-01"});
  EXPECT_TRUE(subtract_set(s, s).empty());
  const StateVector d = subtract_set(StateVector::trivial(), StateVector{T({1}, {2})});
  EXPECT_TRUE(testing::same_states(d, rows({"11", "01", "00"}), 2));
  EXPECT_TRUE(testing::same_states(subtract_set(s, StateVector()), s, 3));
}

TEST(StateVector, SubtractSetMatchesOracle) {
  Rng rng(25);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 1 + rng() % 7;
    const StateVector s = testing::random_vector(rng, n, 6, 2);
    const StateVector q = testing::random_vector(rng, n, 6, 2);
    const auto d = ex(subtract_set(s, q), n);
    EXPECT_TRUE(d.is_binary());
    EXPECT_EQ(d, dense::set_difference(dense::binary_project(ex(s, n)),
                                       dense::binary_project(ex(q, n))));
  }
}

TEST(StateVector, SubvectorExamples) {
  const StateVector s = rows({"11-", "0-0", "-01"});
  EXPECT_EQ(subvector(s, 1, Polarity::Upper), rows({"11-", "101"}));
  EXPECT_EQ(subvector(s, 3, Polarity::Lower), rows({"110", "0-0"}));
  EXPECT_TRUE(subvector(subvector(s, 2, Polarity::Upper), 2, Polarity::Lower).empty());
}

TEST(StateVector, SubvectorMasksCoordinates) {
  Rng rng(26);
  for (int k = 0; k < 200; ++k) {
    const StateVector s = testing::random_vector(rng, 5, 6, 3);
    for (VarId i = 1; i <= 5; ++i) {
      for (Polarity p : {Polarity::Upper, Polarity::Lower}) {
        EXPECT_EQ(ex(subvector(s, i, p), 5), dense::mask(ex(s, 5), i, p));
      }
      // s = s_n + s^n, multiplicities included.
      EXPECT_EQ(ex(add(subvector(s, i, Polarity::Upper), subvector(s, i, Polarity::Lower)), 5),
                ex(s, 5));
    }
  }
}

TEST(StateVector, OrthogonalizeExamples) {
  const StateVector o = orthogonalize_vector(rows({"1-", "-1"}));
  EXPECT_EQ(o, rows({"1-", "01"}));
  const StateVector already = rows({"1-", "01"});
  EXPECT_EQ(orthogonalize_vector(already), already);
  EXPECT_TRUE(orthogonalize_vector(StateVector()).empty());
}

TEST(StateVector, OrthogonalizeMatchesOracle) {
  Rng rng(27);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 1 + rng() % 7;
    const StateVector s = testing::random_vector(rng, n, 7, 3);
    const StateVector o = orthogonalize_vector(s);
    const auto d = ex(o, n);
    EXPECT_TRUE(d.is_binary());
    EXPECT_EQ(d, dense::binary_project(ex(s, n)));
    const auto& rs = o.rows();
    for (std::size_t x = 0; x < rs.size(); ++x) {
      EXPECT_EQ(rs[x].mult, 1u);
      for (std::size_t y = x + 1; y < rs.size(); ++y) {
        EXPECT_TRUE(multiply(rs[x].term, rs[y].term).is_null());
      }
    }
  }
}

TEST(StateVector, CardinalityExamples) {
  EXPECT_EQ(cardinality(StateVector::trivial(), 3), 8);
  EXPECT_EQ(cardinality(StateVector{T({1}, {2})}, 3), 2);
  EXPECT_EQ(cardinality(StateVector(), 3), 0);
  EXPECT_EQ(cardinality(StateVector::trivial(), 200), Count(1) << 200);
  try {
    cardinality(StateVector{T({4})}, 3);
    FAIL() << "expected UniverseTooSmall";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UniverseTooSmall);
  }
}

TEST(StateVector, CardinalityMatchesOracle) {
  Rng rng(28);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 1 + rng() % 8;
    const StateVector s = testing::random_vector(rng, n, 8, 3);
    EXPECT_EQ(cardinality(s, n), Count(dense::binary_project(ex(s, n)).popcount()));
  }
}

TEST(StateVector, PivotAndSupport) {
  const StateVector s = rows({"1--", "10-"});
  EXPECT_EQ(pivot(s), (IndexSet{1, 2}));
  EXPECT_EQ(support(s), (IndexSet{1}));
  EXPECT_TRUE(pivot(StateVector::trivial()).empty());
  EXPECT_TRUE(pivot(StateVector()).empty());
  EXPECT_TRUE(support(StateVector::trivial()).empty());
  EXPECT_EQ(support(rows({"010", "011", "100", "101"})), (IndexSet{1, 2}));
  EXPECT_THROW(support(StateVector()), Error);
}

TEST(StateVector, IsFreeExamples) {
  for (VarId i = 1; i <= 3; ++i) EXPECT_TRUE(is_free(StateVector::trivial(), i));
  const StateVector five = rows({"000", "111", "-01", "1-0", "01-"});
  for (VarId i = 1; i <= 3; ++i) EXPECT_TRUE(is_free(five, i));
  EXPECT_FALSE(is_free(StateVector{T({1})}, 1));
  try {
    is_free(StateVector(), 1);
    FAIL() << "expected EmptyVector";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EmptyVector);
  }
}

TEST(StateVector, IsFreeMatchesFlipClosure) {
  Rng rng(29);
  for (int k = 0; k < 300; ++k) {
    const StateVector s = testing::random_vector(rng, 5, 6, 2);
    if (s.empty()) continue;
    const auto d = dense::binary_project(ex(s, 5));
    for (VarId i = 1; i <= 5; ++i) EXPECT_EQ(is_free(s, i), dense::free_by_definition(d, i));
  }
}

TEST(StateVector, EventStatus) {
  const StateVector ext = rows({"111", "10-", "010"});
  EXPECT_EQ(event_status(ext, 1), EventStatus::Indefinite);
  EXPECT_EQ(event_status(StateVector{T({2})}, 2), EventStatus::IdenticallyTrue);
  EXPECT_EQ(event_status(StateVector{T({}, {2})}, 2), EventStatus::IdenticallyFalse);
  EXPECT_EQ(event_status(StateVector(), 2), EventStatus::EmptySpace);
  EXPECT_STREQ(to_string(EventStatus::IdenticallyTrue), "IdenticallyTrue");
}

TEST(StateVector, IndexJuggling) {
  const StateVector s = rows({"11-", "0-0", "-01"});
  EXPECT_EQ(raise_index(s, 2), rows({"11-", "010", "-11"}));
  EXPECT_EQ(lower_index(s, 3), rows({"110", "0-0", "-00"}));
  EXPECT_TRUE(subvector(raise_index(s, 2), 2, Polarity::Lower).empty());
}

TEST(StateVector, RemoveEvent) {
  const StateVector s = rows({"11-", "0-0", "-01"});
  EXPECT_EQ(remove_event(s, 2), rows({"1--", "0-0", "--1"}));
  EXPECT_EQ(remove_event(StateVector{T({1}, {2})}, 3), StateVector{T({1}, {2})});
  EXPECT_EQ(remove_event(StateVector::trivial(), 4), StateVector::trivial());
  // Rows that coincide after removal merge their multiplicities.
  const StateVector merged = remove_event(rows({"11", "10"}), 2);
  ASSERT_EQ(merged.size(), 1u);
  EXPECT_EQ(merged.rows()[0].mult, 2u);
}

TEST(StateVector, BooleanFunctionTest) {
  EXPECT_TRUE(is_boolean_function(rows({"111", "010", "100", "000"}), 3));
  EXPECT_FALSE(is_boolean_function(StateVector::trivial(), 2));
  EXPECT_FALSE(is_boolean_function(orthogonalize_vector(rows({"1-", "-1"})), 1));
  EXPECT_THROW(is_boolean_function(StateVector(), 1), Error);
}

TEST(StateVector, BooleanFunctionMatchesOracle) {
  Rng rng(30);
  for (int k = 0; k < 200; ++k) {
    const StateVector s = testing::random_vector(rng, 4, 6, 1);
    if (s.empty()) continue;
    const auto d = dense::binary_project(ex(s, 4));
    for (VarId i = 1; i <= 4; ++i) {
      // Determined iff no pair of states differing only in e_i both occur.
      bool determined = true;
      const auto bit = dense::state_bit(i, 4);
      for (std::size_t x = 0; x < d.dimension(); ++x) {
        if (d[x] && d[x ^ bit]) determined = false;
      }
      EXPECT_EQ(is_boolean_function(s, i), determined);
    }
  }
}

TEST(StateVector, EquivalenceExamples) {
  EXPECT_TRUE(equivalent(rows({"-1", "10"}), rows({"1-", "01"})));
  EXPECT_TRUE(equivalent(StateVector::trivial(), rows({"000", "111", "-01", "1-0", "01-"})));
  EXPECT_FALSE(equivalent(StateVector{T({1})}, StateVector{T({}, {1})}));
}

TEST(StateVector, EquivalenceMatchesOracle) {
  Rng rng(31);
  for (int k = 0; k < 300; ++k) {
    const StateVector s = testing::random_vector(rng, 4, 5, 2);
    const StateVector q = k % 2 ? testing::scramble(rng, s, 4, 4) : testing::random_vector(rng, 4, 5, 2);
    EXPECT_EQ(equivalent(s, q), testing::same_states(s, q, 4));
  }
}

TEST(StateVector, ComplementExamples) {
  const StateVector implication = rows({"11--", "0---"});
  EXPECT_EQ(complement(implication, 4), rows({"10--"}));
  EXPECT_TRUE(complement(StateVector::trivial(), 3).empty());
  EXPECT_EQ(complement(StateVector(), 3), StateVector::trivial());
  EXPECT_THROW(complement(StateVector{T({5})}, 3), Error);
}

TEST(StateVector, ComplementMatchesOracle) {
  Rng rng(32);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 1 + rng() % 7;
    const StateVector s = testing::random_vector(rng, n, 6, 2);
    EXPECT_EQ(ex(complement(s, n), n),
              dense::set_difference(dense::DenseVector::ones(n), dense::binary_project(ex(s, n))));
  }
}

TEST(StateVector, AbsorbSubsumed) {
  const StateVector s({{T({1}), 1}, {T({1, 2}), 3}, {T({}, {1}), 2}});
  EXPECT_EQ(absorb_subsumed(s), (StateVector{T({1}), T({}, {1})}));
  Rng rng(33);
  for (int k = 0; k < 200; ++k) {
    const StateVector v = testing::random_vector(rng, 5, 6, 3);
    EXPECT_TRUE(testing::same_states(absorb_subsumed(v), v, 5));
  }
}

}  // namespace
}  // namespace stalg
