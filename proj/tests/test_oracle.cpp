#include <doctest.h>

#include <limits>
#include <sstream>

#include "bxp/oracle.hpp"

#include "brute.hpp"

using namespace bxp;

namespace {
  using Blocks = std::vector<std::vector<point_type>>;

  Transformation T(std::vector<point_type> v) {
    return Transformation(std::move(v));
  }
}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("sizes") {
    CHECK(enumerate(Partition(Blocks{{0}, {1}})).size() == 2);
    CHECK(enumerate(Partition(Blocks{{0, 1}})).size() == 4);
    CHECK(enumerate(Partition(Blocks{{0, 1}, {2, 3}})).size() == 32);
    CHECK(enumerate(Partition(Blocks{{0, 1, 2}})).size() == 27);
    CHECK(b_size(Partition(Blocks{{0, 1}, {2, 3}})) == 32);
  }

  TEST_CASE("formula and enumeration against all maps, n <= 5") {
    for (std::size_t n = 1; n <= 5; ++n) {
      for (auto const& blocks : brute::set_partitions(n)) {
        Partition const P(blocks);
        auto const      S = brute::elements(blocks);
        CAPTURE(n);
        CHECK(b_size(P) == S.size());
        CHECK(brute::formula(blocks) == S.size());
        auto const table = enumerate(P);
        REQUIRE(table.size() == S.size());
        std::size_t diff = 0;
        for (std::size_t k = 0; k < S.size(); ++k) {
          diff += table.at(k).images() != S[k];
          diff += table.index(T(S[k])) != k;
        }
        CHECK(diff == 0);
        std::size_t units = 0;
        for (auto const& m : S) {
          units += brute::bijective(m);
        }
        CHECK(table.units().size() == units);
        CHECK(table.at(table.identity_index()) == Transformation::identity(n));
      }
    }
  }

  TEST_CASE("size estimate at scale") {
    std::vector<std::size_t> sizes(25, 1);
    // 25! overflows 64 bits; the bound saturates or stays below the truth.
    auto const est = b_size(Partition::from_sizes(sizes));
    CHECK(est > 1'000'000);
    std::vector<std::size_t> twenty(20, 1);
    CHECK(b_size(Partition::from_sizes(twenty)) == 2432902008176640000ULL);
  }

  TEST_CASE("cap") {
    Partition const P(Blocks{{0, 1, 2, 3, 4}});
    try {
      enumerate(P, 100);
      FAIL("expected TooLarge");
    } catch (TooLarge const& e) {
      CHECK(e.estimate() == 3125);
    }
    CHECK(enumerate(P, 3125).size() == 3125);
  }

  TEST_CASE("lookups") {
    auto const table = enumerate(Partition(Blocks{{0}, {1, 2}}));
    CHECK(table.contains(T({1, 0, 0})));
    CHECK_FALSE(table.contains(T({0, 0, 0})));
    CHECK_THROWS_AS(table.index(T({0, 0, 0})), ElementNotInTable);
    CHECK_THROWS_AS(oracle_regular(T({0, 0, 0}), table), ElementNotInTable);
  }

  TEST_CASE("direct searches, examples") {
    auto const table = enumerate(Partition(Blocks{{0, 1}, {2, 3}}));
    auto const id    = Transformation::identity(4);
    auto const f     = T({0, 0, 2, 2});
    auto const g     = T({1, 1, 3, 3});
    CHECK(oracle_leq_L(f, f, table));
    CHECK(oracle_leq_R(f, f, table));
    CHECK(oracle_leq_J(f, f, table));
    CHECK_FALSE(oracle_leq_J(id, f, table));
    for (auto const& h : table.elements()) {
      CHECK(oracle_leq_J(h, id, table));
    }
    CHECK(oracle_eq_D(f, f, table));
    CHECK(oracle_eq_D(f, g, table));
    CHECK_FALSE(oracle_eq_D(id, f, table));
    CHECK(oracle_regular(id, table));
    CHECK(oracle_unit_regular(id, table));

    auto const split = enumerate(Partition(Blocks{{0}, {1, 2}}));
    CHECK_FALSE(oracle_unit_regular(T({1, 0, 0}), split));
  }

  // Direct searches and the memoized ideals against test-local ideals.
  TEST_CASE("oracles agree with composed ideals") {
    for (auto const& blocks :
         std::vector<Blocks>{{{0}},
                             {{0, 1}},
                             {{0}, {1}},
                             {{0}, {1, 2}},
                             {{0, 1, 2}},
                             {{0, 1}, {2, 3}},
                             {{0}, {1}, {2, 3}},
                             {{0}, {1, 2, 3}},
                             {{0, 1}, {2, 3, 4}}}) {
      Partition const P(blocks);
      auto const      S = brute::elements(blocks);
      auto const      I = brute::ideals(S);
      auto const      table = enumerate(P);
      IdealOracle const ideal(table);
      auto const N = S.size();
      REQUIRE(ideal.size() == N);

      std::size_t bad = 0;
      for (std::size_t a = 0; a < N; ++a) {
        auto const f = T(S[a]);
        bad += !oracle_regular(f, table);
        bad += oracle_unit_regular(f, table) != brute::unit_regular(S[a], S);
        for (std::size_t b = 0; b < N; ++b) {
          auto const g  = T(S[b]);
          bool const L  = I.left[b].contains(a);
          bool const R  = I.right[b].contains(a);
          bool const J  = I.two_sided[b].contains(a);
          bool const Lr = I.left[a].contains(b);
          bool const Rr = I.right[a].contains(b);
          bool const Jr = I.two_sided[a].contains(b);
          bool       D  = false;
          for (std::size_t h = 0; h < N && !D; ++h) {
            D = I.left[h] == I.left[a] && I.right[h] == I.right[b];
          }
          bad += ideal.leq_L(a, b) != L;
          bad += ideal.leq_R(a, b) != R;
          bad += ideal.leq_J(a, b) != J;
          bad += ideal.eq_L(a, b) != (L && Lr);
          bad += ideal.eq_R(a, b) != (R && Rr);
          bad += ideal.eq_H(a, b) != (L && Lr && R && Rr);
          bad += ideal.eq_J(a, b) != (J && Jr);
          bad += ideal.eq_D(a, b) != D;
          bad += (ideal.d_classes()[a] == ideal.d_classes()[b]) != D;
          if (N <= 64) {
            bad += oracle_leq_L(f, g, table) != L;
            bad += oracle_leq_R(f, g, table) != R;
            bad += oracle_leq_J(f, g, table) != J;
            bad += oracle_eq_D(f, g, table) != D;
          }
        }
      }
      CHECK(bad == 0);
    }
  }

  TEST_CASE("class counts of T_3 and B({{0,1},{2,3}})") {
    IdealOracle const t3(enumerate(Partition(Blocks{{0, 1, 2}})));
    CHECK(t3.number_of_l_classes() == 7);
    CHECK(t3.number_of_r_classes() == 5);
    CHECK(t3.number_of_h_classes() == 13);
    CHECK(t3.number_of_d_classes() == 3);
    CHECK(t3.number_of_j_classes() == 3);

    IdealOracle const b(enumerate(Partition(Blocks{{0, 1}, {2, 3}})));
    // One D-class per size profile: {2:2}, {1:1,2:1}, {1:2}.
    CHECK(b.number_of_d_classes() == 3);
    CHECK(b.number_of_j_classes() == 3);
  }

  TEST_CASE("table dump round trip") {
    auto const table = enumerate(Partition(Blocks{{0}, {1, 2}, {3}}));
    std::stringstream s;
    write_table(s, table);
    auto const back = read_table(s);
    CHECK(back.partition() == table.partition());
    CHECK(back.elements() == table.elements());

    std::stringstream garbage("{\"format\":\"something else\"}");
    CHECK_THROWS_AS(read_table(garbage), ParseError);

    // A dump missing an element is rejected.
    auto els = table.elements();
    els.pop_back();
    CHECK_THROWS_AS(SemigroupTable(table.partition(), els), ParseError);
  }
}
