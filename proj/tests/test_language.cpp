#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <set>

#include "grig/language.hpp"
#include "grig/substitution.hpp"

using namespace grig;

TEST_CASE("subword enumeration at small lengths") {
  SubwordSet s1 = subwords(1, 1 << 12);
  REQUIRE(s1.stabilized);
  CHECK(s1.words == std::vector<Word>{Word("a"), Word("x"), Word("y"), Word("z")});

  SubwordSet s2 = subwords(2, 1 << 12);
  CHECK(s2.words.size() == 6);

  SubwordSet s3 = subwords(3, 1 << 12);
  CHECK(s3.words.size() == 8);
  CHECK(std::binary_search(s3.words.begin(), s3.words.end(), Word("axa")));

  CHECK_THROWS_AS(subwords(100, 10), std::invalid_argument);
}

TEST_CASE("closed-form complexity pinned against enumeration") {
  CHECK(complexity_closed_form(1) == 4);
  CHECK(complexity_closed_form(2) == 6);
  CHECK(complexity_closed_form(3) == 8);
  CHECK(complexity_closed_form(4) == 10);
  // the enumeration oracle settles the branch value at L = 6 (16, not 14)
  CHECK(complexity_closed_form(6) == 16);

  ComplexityProfile prof = enumerate_complexity(128, 1 << 13);
  REQUIRE(prof.all_stabilized());
  for (std::int64_t L = 1; L <= 128; ++L)
    REQUIRE(prof.counts[static_cast<std::size_t>(L - 1)] == complexity_closed_form(L));

  SUBCASE("profile agrees with direct window enumeration") {
    for (std::int64_t L : {1, 2, 3, 5, 8, 21, 64})
      CHECK(prof.counts[static_cast<std::size_t>(L - 1)] ==
            static_cast<std::int64_t>(subwords(L, 1 << 13).words.size()));
  }
}

TEST_CASE("first differences of the complexity function lie in {2,3}") {
  for (std::int64_t L = 4; L <= 4096; ++L) {
    auto d = complexity_closed_form(L + 1) - complexity_closed_form(L);
    REQUIRE((d == 2 || d == 3));
  }
}

TEST_CASE("reflection closure of the language") {
  for (std::int64_t L : {2, 3, 5, 12, 33, 64}) {
    SubwordSet s = subwords(L, 1 << 13);
    REQUIRE(s.stabilized);
    for (const Word& w : s.words)
      CHECK(std::binary_search(s.words.begin(), s.words.end(), w.reversed()));
  }
}

TEST_CASE("right special words") {
  auto rs4 = right_special(4);
  REQUIRE(rs4.size() == 2);
  {
    std::set<Word> expected{Word("yaxa"), Word("xaxa")};
    std::set<Word> got{rs4[0].word, rs4[1].word};
    CHECK(got == expected);
  }

  auto rs6 = right_special(6);
  REQUIRE(rs6.size() == 1);
  CHECK(rs6[0].word == Word("xayaxa"));  // length-6 suffix of p(2)
  CHECK(rs6[0].extensions == std::vector<Letter>{Letter::X, Letter::Y, Letter::Z});

  auto rs7 = right_special(7);
  bool found_p2 = false;
  for (const auto& rs : rs7)
    if (rs.word == Word("axayaxa"))
      found_p2 = rs.extensions == std::vector<Letter>{Letter::X, Letter::Y, Letter::Z};
  CHECK(found_p2);

  SUBCASE("counts follow the two-branch rule") {
    for (std::int64_t L = 4; L <= 48; ++L) {
      int n = 63 - __builtin_clzll(static_cast<unsigned long long>(L));
      std::int64_t k = L - (std::int64_t{1} << n);
      std::size_t expected = k < (std::int64_t{1} << (n - 1)) ? 2 : 1;
      CHECK(right_special(L).size() == expected);
    }
  }
}

TEST_CASE("power scan") {
  PowerScanReport rep = max_power_scan(16, 1 << 14);
  CHECK_FALSE(rep.fourth_power_found);
  CHECK(rep.max_index < Fraction{4, 1});
  // (ax)^3 a occurs, so the index of ax is at least 7/2
  CHECK_FALSE(rep.max_index_by_length[1] < Fraction{7, 2});
  for (auto len : rep.cube_root_lengths)
    CHECK((len & (len - 1)) == 0);
  CHECK(std::count(rep.cube_root_lengths.begin(), rep.cube_root_lengths.end(), 2) == 1);
  CHECK_THROWS_AS(max_power_scan(100, 128), std::invalid_argument);
}

TEST_CASE("fraction ordering is exact") {
  CHECK(Fraction{7, 2} < Fraction{4, 1});
  CHECK_FALSE(Fraction{4, 1} < Fraction{4, 1});
  CHECK(Fraction{14, 4} == Fraction{7, 2});
  // 4 + 3/2^60 vs exactly 4: indistinguishable as doubles, ordered exactly
  Fraction slightly_more{4611686018427387903LL, 1152921504606846975LL};
  Fraction exactly_four{4611686018427387904LL, 1152921504606846976LL};
  CHECK(slightly_more.value() == exactly_four.value());
  CHECK(exactly_four < slightly_more);
  CHECK_FALSE(slightly_more < exactly_four);
}

TEST_CASE("n-partition of eta windows") {
  PointedWord w{eta_prefix(31), 1};
  PartitionResult pr = n_partition(w, 1);
  CHECK(pr.modulus == 4);
  CHECK(pr.residue == 0);
  REQUIRE(!pr.witness_positions.empty());
  for (auto q : pr.witness_positions) {
    CHECK(q % 4 == 0);
    CHECK(is_spacer(w.at_abs(q)));
  }

  SUBCASE("equivariance under the shift") {
    PointedWord big{eta_prefix(256), 20};
    for (int n = 0; n <= 3; ++n) {
      auto base = n_partition(big, n);
      auto moved = n_partition(shifted(big), n);
      CHECK(moved.residue == (base.residue + 1) % base.modulus);
    }
  }

  SUBCASE("window too short") {
    CHECK_THROWS_AS((n_partition(PointedWord{eta_prefix(8), 1}, 1)), std::invalid_argument);
  }

  SUBCASE("corrupt window has no partition") {
    std::string bad(64, 'a');
    CHECK_THROWS_AS((n_partition(PointedWord{Word(bad), 1}, 1)), std::runtime_error);
  }
}

TEST_CASE("special sequence windows") {
  PointedWord wx = special_sequence_window(Letter::X, 3);
  CHECK(wx.word == Word("xaxaxa"));
  CHECK(wx.origin == 4);
  CHECK(wx.at_abs(0) == Letter::X);

  SUBCASE("right half is eta, left half its mirror") {
    for (Letter s : {Letter::X, Letter::Y, Letter::Z}) {
      PointedWord w = special_sequence_window(s, 100);
      Word eta = eta_prefix(100);
      CHECK(w.at_abs(0) == s);
      for (std::int64_t k = 1; k <= 99; ++k) {
        CHECK(w.at_abs(k) == eta.at(k));
        CHECK(w.at_abs(-k) == eta.at(k));
      }
    }
  }

  SUBCASE("the three special sequences differ exactly at the origin") {
    PointedWord a = special_sequence_window(Letter::X, 64);
    PointedWord b = special_sequence_window(Letter::Y, 64);
    for (std::int64_t pos = a.abs_min(); pos <= a.abs_max(); ++pos)
      CHECK((a.at_abs(pos) == b.at_abs(pos)) == (pos != 0));
  }

  SUBCASE("spacer sits next to the origin in every n-partition") {
    PointedWord w = special_sequence_window(Letter::Y, 200);
    for (int n = 0; n <= 4; ++n) {
      auto pr = n_partition(w, n);
      CHECK(pr.residue == 0);
      CHECK(std::count(pr.witness_positions.begin(), pr.witness_positions.end(), 0) == 1);
    }
  }

  SUBCASE("structure matches p(n) s p(n) around the origin") {
    PointedWord w = special_sequence_window(Letter::Z, 130);
    for (int n = 0; n <= 6; ++n) {
      Word p = level_word(n);
      for (std::int64_t k = 1; k <= p.size(); ++k) {
        CHECK(w.at_abs(k) == p.at(k));
        CHECK(w.at_abs(-k) == p.at(p.size() + 1 - k));
      }
    }
  }
}

TEST_CASE("alignment of p(n) s p(n) occurrences") {
  // every occurrence in a long prefix starts at a position = 1 mod 2^(n+1)
  Word prefix = eta_prefix(1 << 14);
  const std::string& s = prefix.str();
  for (int n = 0; n <= 5; ++n) {
    const std::string p = level_word(n).str();
    for (char spacer_char : {'x', 'y', 'z'}) {
      std::string pattern = p + spacer_char + p;
      for (std::size_t at = s.find(pattern); at != std::string::npos; at = s.find(pattern, at + 1)) {
        std::int64_t l = static_cast<std::int64_t>(at) + 1;  // 1-based
        CHECK((l - 1) % (std::int64_t{1} << (n + 1)) == 0);
      }
    }
  }
}
