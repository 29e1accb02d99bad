#include <doctest.h>

#include <stdexcept>

#include "grig/substitution.hpp"

using namespace grig;

TEST_CASE("apply extends letter images by concatenation") {
  CHECK(apply(tau(), Word("a")) == Word("axa"));
  CHECK(apply(tau(), Word("")) == Word(""));
  CHECK(apply(tau(), Word("axa")) == Word("axayaxa"));
  CHECK(apply(tau(), Word("xyz")) == Word("yzx"));
}

TEST_CASE("spacer follows the period-3 case table") {
  CHECK(spacer(0) == Letter::X);
  CHECK(spacer(1) == Letter::Y);
  CHECK(spacer(2) == Letter::Z);
  CHECK(spacer(7) == Letter::Y);
  CHECK(spacer(3000000000LL) == Letter::X);
}

TEST_CASE("level words") {
  CHECK(level_word(0) == Word("a"));
  CHECK(level_word(1) == Word("axa"));
  CHECK(level_word(2) == Word("axayaxa"));
  CHECK(level_word(10).size() == 2047);
  CHECK_THROWS_AS(level_word(31), std::length_error);

  SUBCASE("recursion agrees with substitution iteration") {
    Word w("a");
    for (int n = 0; n <= 8; ++n) {
      CHECK(level_word(n) == w);
      w = apply(tau(), w);
    }
  }

  SUBCASE("palindrome and prefix chain") {
    for (int n = 0; n <= 12; ++n) {
      CHECK(level_word(n).is_palindrome());
      CHECK(level_word(n).is_prefix_of(level_word(n + 1)));
    }
  }
}

TEST_CASE("eta prefixes") {
  CHECK(eta_prefix(1) == Word("a"));
  CHECK(eta_prefix(7) == Word("axayaxa"));
  CHECK(eta_prefix(15) == Word("axayaxazaxayaxa"));
  CHECK(eta_prefix(0) == Word(""));
  CHECK(level_word(6).is_prefix_of(eta_prefix(1 << 8)));
  CHECK_THROWS_AS(eta_prefix((std::int64_t{1} << 30) + 1), std::length_error);
}

TEST_CASE("letter positions by 2-adic valuation") {
  CHECK(letter_at(1) == Letter::A);
  CHECK(letter_at(2) == Letter::X);
  CHECK(letter_at(4) == Letter::Y);
  CHECK(letter_at(8) == Letter::Z);
  CHECK(letter_at(12) == Letter::Y);
  CHECK_THROWS_AS(letter_at(0), std::invalid_argument);

  SUBCASE("matches the generated prefix") {
    Word prefix = eta_prefix(1 << 12);
    for (std::int64_t pos = 1; pos <= prefix.size(); ++pos)
      REQUIRE(letter_at(pos) == prefix.at(pos));
  }

  SUBCASE("a exactly at odd positions") {
    for (std::int64_t pos = 1; pos < 2000; ++pos)
      CHECK((letter_at(pos) == Letter::A) == (pos % 2 == 1));
  }
}

TEST_CASE("output automaton generates eta") {
  OutputAutomaton aut = eta_automaton();
  CHECK(automaton_letter(aut, 0) == Letter::A);
  CHECK(automaton_letter(aut, 1) == Letter::X);
  CHECK(automaton_letter(aut, 5) == Letter::X);

  SUBCASE("agrees with letter_at shifted by one") {
    for (std::uint64_t m = 0; m < 5000; ++m)
      REQUIRE(automaton_letter(aut, m) == letter_at(static_cast<std::int64_t>(m) + 1));
  }

  SUBCASE("block words satisfy f^(n+1)(q_i) = p(n) s_(n+i)") {
    // the k-th letter of the block of state q at depth n is the state label
    // reached along the k-th binary word of length n, lexicographically
    for (int n = 1; n <= 6; ++n) {
      for (int i = 0; i < 4; ++i) {
        Word block;
        for (std::uint64_t path = 0; path < (std::uint64_t{1} << (n + 1)); ++path) {
          int state = i;
          for (int bit = n; bit >= 0; --bit) state = aut.next[static_cast<std::size_t>(state)][(path >> bit) & 1u];
          block.append(aut.state_label[static_cast<std::size_t>(state)]);
        }
        Word expected = level_word(n);
        expected.append(spacer(n + i));
        CHECK(block == expected);
      }
    }
  }
}

TEST_CASE("zeta recoding") {
  CHECK(apply(zeta(), Word("a")) == Word("ax"));
  CHECK(zeta_power(1) == Word("ax"));
  CHECK(zeta_power(2) == Word("axay"));

  SUBCASE("zeta^n(a) = p(n-1) s_(n-1)") {
    for (int n = 1; n <= 14; ++n) {
      Word expected = level_word(n - 1);
      expected.append(spacer(n - 1));
      CHECK(zeta_power(n) == expected);
    }
  }

  SUBCASE("zeta^4 of every letter contains the whole alphabet (primitivity)") {
    for (Letter l : {Letter::A, Letter::X, Letter::Y, Letter::Z}) {
      Word w;
      w.append(l);
      for (int k = 0; k < 4; ++k) w = apply(zeta(), w);
      for (char c : {'a', 'x', 'y', 'z'})
        CHECK(w.str().find(c) != std::string::npos);
    }
  }
}

TEST_CASE("pointed word indexing and shift") {
  PointedWord w{eta_prefix(16), 4};
  CHECK(w.at_abs(1) == eta_prefix(16).at(4));
  CHECK(w.at_abs(-2) == eta_prefix(16).at(1));
  CHECK(w.abs_min() == -2);
  CHECK(w.abs_max() == 13);
  PointedWord t = shifted(w);
  CHECK(t.origin == 3);
  CHECK(t.at_abs(1) == w.at_abs(0));
  CHECK_THROWS_AS((shifted(PointedWord{Word("ax"), 1}, -5)), std::out_of_range);
}
