#include "grig/substitution.hpp"

#include <bit>
#include <stdexcept>

namespace grig {

const Substitution& tau() {
  static const Substitution s{{Word("axa"), Word("y"), Word("z"), Word("x")}};
  return s;
}

const Substitution& zeta() {
  static const Substitution s{{Word("ax"), Word("ay"), Word("az"), Word("ax")}};
  return s;
}

Word apply(const Substitution& sub, const Word& w) {
  std::int64_t total = 0;
  for (char c : w.str()) total += sub.image(letter_from_char(c)).size();
  Word out;
  std::string buf;
  buf.reserve(static_cast<std::size_t>(total));
  for (char c : w.str()) buf += sub.image(letter_from_char(c)).str();
  return Word(std::move(buf));
}

Letter spacer(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("spacer: n must be nonnegative");
  switch (n % 3) {
    case 0: return Letter::X;
    case 1: return Letter::Y;
    default: return Letter::Z;
  }
}

Word level_word(int n) {
  if (n < 0) throw std::invalid_argument("level_word: n must be nonnegative");
  if (n > 30) throw std::length_error("level_word: n > 30 exceeds the size guard");
  std::string p = "a";
  p.reserve((std::size_t{2} << n) - 1);
  for (int k = 0; k < n; ++k) {
    std::string next;
    next.reserve(2 * p.size() + 1);
    next = p;
    next.push_back(to_char(spacer(k)));
    next += p;
    p = std::move(next);
  }
  return Word(std::move(p));
}

Word eta_prefix(std::int64_t length) {
  if (length < 0) throw std::invalid_argument("eta_prefix: length must be nonnegative");
  if (length > (std::int64_t{1} << 30)) throw std::length_error("eta_prefix: length > 2^30 exceeds the size guard");
  std::string p = "a";
  int k = 0;
  while (static_cast<std::int64_t>(p.size()) < length) {
    std::string next;
    next.reserve(2 * p.size() + 1);
    next = p;
    next.push_back(to_char(spacer(k)));
    next += p;
    p = std::move(next);
    ++k;
  }
  p.resize(static_cast<std::size_t>(length));
  return Word(std::move(p));
}

Letter letter_at(std::int64_t pos) {
  if (pos < 1) throw std::invalid_argument("letter_at: position must be >= 1");
  if (pos % 2 == 1) return Letter::A;
  int v = std::countr_zero(static_cast<std::uint64_t>(pos));
  switch (v % 3) {
    case 1: return Letter::X;
    case 2: return Letter::Y;
    default: return Letter::Z;
  }
}

OutputAutomaton eta_automaton() {
  OutputAutomaton aut;
  aut.state_label = {Letter::A, Letter::X, Letter::Y, Letter::Z};
  for (int i = 0; i < 4; ++i) {
    aut.next[static_cast<std::size_t>(i)][0] = 0;
    aut.next[static_cast<std::size_t>(i)][1] = (i == 3) ? 1 : i + 1;
  }
  return aut;
}

Letter automaton_letter(const OutputAutomaton& aut, std::uint64_t pos) {
  int state = 0;
  if (pos > 0) {
    for (int bit = std::bit_width(pos) - 1; bit >= 0; --bit)
      state = aut.next[static_cast<std::size_t>(state)][(pos >> bit) & 1u];
  }
  return aut.state_label[static_cast<std::size_t>(state)];
}

Word zeta_power(int n) {
  if (n < 1) throw std::invalid_argument("zeta_power: n must be positive");
  if (n > 30) throw std::length_error("zeta_power: n > 30 exceeds the size guard");
  Word w("a");
  for (int k = 0; k < n; ++k) w = apply(zeta(), w);
  return w;
}

}  // namespace grig
