#pragma once

#include <array>
#include <cstdint>

#include "grig/word.hpp"

namespace grig {

/// A substitution over {a,x,y,z}: a total map Letter -> nonempty Word,
/// extended to words by concatenation.
struct Substitution {
  std::array<Word, 4> images;  // indexed by letter_index

  const Word& image(Letter l) const { return images[static_cast<std::size_t>(letter_index(l))]; }
};

/// tau: a -> axa, x -> y, y -> z, z -> x.
const Substitution& tau();

/// zeta: a -> ax, x -> ay, y -> az, z -> ax. Primitive, same fixed point as tau.
const Substitution& zeta();

Word apply(const Substitution& sub, const Word& w);

/// s_n = tau^n(x): x, y, z cyclically with period 3.
Letter spacer(std::int64_t n);

/// p(n) = tau^n(a), built by the recursion p(n+1) = p(n) s_n p(n).
/// |p(n)| = 2^(n+1) - 1. Guarded at n <= 30.
Word level_word(int n);

/// First `length` letters of the fixed point eta (tau(eta) = eta). Guarded at 2^30.
Word eta_prefix(std::int64_t length);

/// eta_pos for 1-based pos, in O(log pos) via the 2-adic valuation:
/// odd -> a; valuation v == 1 (mod 3) -> x, == 2 -> y, == 0 -> z.
Letter letter_at(std::int64_t pos);

/// Four-state automaton over {0,1} generating eta: state q_i is labeled by
/// the i-th letter of (a,x,y,z); input 0 always returns to q0, input 1 steps
/// q_i -> q_{i+1} with q3 wrapping to q1.
struct OutputAutomaton {
  std::array<Letter, 4> state_label;
  std::array<std::array<int, 2>, 4> next;
};

OutputAutomaton eta_automaton();

/// Label of the state reached from q0 along the binary expansion of pos,
/// most significant bit first. pos = 0 uses the empty expansion and yields
/// label(q0) = a. Indexing is 0-based: automaton_letter(aut, m) = letter_at(m+1).
Letter automaton_letter(const OutputAutomaton& aut, std::uint64_t pos);

/// zeta^n(a); equals level_word(n-1) + spacer(n-1). Guarded at n <= 30.
Word zeta_power(int n);

}  // namespace grig
