#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "topolab/point_set.hpp"
#include "topolab/set_family.hpp"

using namespace topolab;

TEST_CASE("boolean algebra laws hold on every subset pair of a 4-point ground set") {
  const int n = 4;
  const PointSet x = PointSet::full(n);
  for (std::uint32_t i = 0; i < 16; ++i) {
    const PointSet a{i};
    REQUIRE(a.complement_in(x).complement_in(x) == a);
    REQUIRE((a & x) == a);
    REQUIRE((a | PointSet::empty_set()) == a);
    for (std::uint32_t j = 0; j < 16; ++j) {
      const PointSet b{j};
      REQUIRE((a | b) == (b | a));
      REQUIRE((a & b) == (b & a));
      REQUIRE((a | b).complement_in(x) == (a.complement_in(x) & b.complement_in(x)));
      REQUIRE((a & b).complement_in(x) == (a.complement_in(x) | b.complement_in(x)));
      REQUIRE((a - b) == (a & b.complement_in(x)));
      REQUIRE(a.subset_of(b) == ((a | b) == b));
      for (std::uint32_t k = 0; k < 16; ++k) {
        const PointSet c{k};
        REQUIRE((a & (b | c)) == ((a & b) | (a & c)));
        REQUIRE((a | (b & c)) == ((a | b) & (a | c)));
      }
    }
  }
}

TEST_CASE("point iteration visits members in ascending order") {
  const PointSet s = PointSet::singleton(0) | PointSet::singleton(2) | PointSet::singleton(5);
  std::vector<int> got;
  for (int p : s.points()) got.push_back(p);
  REQUIRE(got == std::vector<int>{0, 2, 5});
  REQUIRE(s.size() == 3);
  REQUIRE(s.min_point() == 0);
  REQUIRE(PointSet::empty_set().empty());
}

TEST_CASE("canonical order sorts by cardinality, then by earliest contained point") {
  // ground set {a,b}: {}, {a}, {b}, {a,b}
  const auto& order2 = canonical_subset_order(2);
  REQUIRE(order2.size() == 4);
  REQUIRE(order2[0] == PointSet{0});
  REQUIRE(order2[1] == PointSet{1});   // {a}
  REQUIRE(order2[2] == PointSet{2});   // {b}
  REQUIRE(order2[3] == PointSet{3});

  // pairs on 4 points: ab < ac < ad < bc < bd < cd
  const auto& order4 = canonical_subset_order(4);
  std::vector<std::uint32_t> pairs;
  for (PointSet s : order4)
    if (s.size() == 2) pairs.push_back(s.bits());
  REQUIRE(pairs == std::vector<std::uint32_t>{0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100});
  // triples: abc < abd < acd < bcd
  std::vector<std::uint32_t> triples;
  for (PointSet s : order4)
    if (s.size() == 3) triples.push_back(s.bits());
  REQUIRE(triples == std::vector<std::uint32_t>{0b0111, 0b1011, 0b1101, 0b1110});

  // strict weak ordering: irreflexive, asymmetric, transitive over n=4
  for (PointSet a : order4) {
    REQUIRE_FALSE(canonical_less(a, a));
    for (PointSet b : order4) {
      if (canonical_less(a, b)) REQUIRE_FALSE(canonical_less(b, a));
      for (PointSet c : order4)
        if (canonical_less(a, b) && canonical_less(b, c)) REQUIRE(canonical_less(a, c));
    }
  }
}

TEST_CASE("boolean algebra laws hold on random subsets of the widest ground set") {
  const int n = 16;
  const PointSet x = PointSet::full(n);
  std::mt19937 rng(20240811);
  auto draw = [&rng] { return PointSet{static_cast<std::uint32_t>(rng()) & 0xFFFFu}; };
  for (int round = 0; round < 20000; ++round) {
    const PointSet a = draw(), b = draw(), c = draw();
    REQUIRE((a | b).complement_in(x) == (a.complement_in(x) & b.complement_in(x)));
    REQUIRE((a & (b | c)) == ((a & b) | (a & c)));
    REQUIRE(((a - b) | (a & b)) == a);
    REQUIRE(a.complement_in(x).complement_in(x) == a);
    REQUIRE(((a ^ b) ^ b) == a);
    if (canonical_less(a, b) && canonical_less(b, c)) REQUIRE(canonical_less(a, c));
    if (a != b) REQUIRE(canonical_less(a, b) != canonical_less(b, a));
  }
}

TEST_CASE("set family deduplicates, orders canonically and answers membership") {
  const SetFamily f = SetFamily::of(
      3, {PointSet{0b101}, PointSet{0b001}, PointSet{0b101}, PointSet{0b111}, PointSet{0}});
  REQUIRE(f.size() == 4);
  REQUIRE(f.members()[0] == PointSet{0});
  REQUIRE(f.members()[1] == PointSet{0b001});
  REQUIRE(f.members()[2] == PointSet{0b101});
  REQUIRE(f.members()[3] == PointSet{0b111});
  REQUIRE(f.contains(PointSet{0b101}));
  REQUIRE_FALSE(f.contains(PointSet{0b010}));
  const SetFamily co = f.complements(PointSet::full(3));
  REQUIRE(co.contains(PointSet{0b010}));
  REQUIRE(co.size() == 4);
}
