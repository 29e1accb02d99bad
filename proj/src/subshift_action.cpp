#include "grig/subshift_action.hpp"

#include <stdexcept>
#include <vector>

namespace grig::group {

SubshiftGen subshift_gen_from_char(char c) {
  switch (c) {
    case 'A': return SubshiftGen::A;
    case 'B': return SubshiftGen::B;
    case 'C': return SubshiftGen::C;
    case 'D': return SubshiftGen::D;
  }
  throw std::invalid_argument(std::string("subshift_gen_from_char: invalid generator '") + c + "'");
}

namespace {

bool responds_to(SubshiftGen g, Letter l) {
  switch (g) {
    case SubshiftGen::A: return l == Letter::A;
    case SubshiftGen::B: return l == Letter::X || l == Letter::Y;
    case SubshiftGen::C: return l == Letter::X || l == Letter::Z;
    case SubshiftGen::D: return l == Letter::Y || l == Letter::Z;
  }
  return false;
}

void require_interior(const PointedWord& w) {
  if (!w.valid()) throw std::invalid_argument("subshift_generator: invalid pointed word");
  if (w.origin < 2 || w.origin > w.word.size() - 1)
    throw std::out_of_range("subshift_generator: origin at window boundary; window too short to apply");
}

}  // namespace

bool generator_moves(SubshiftGen g, const PointedWord& w) {
  require_interior(w);
  return responds_to(g, w.at_abs(1)) || responds_to(g, w.at_abs(0));
}

PointedWord subshift_generator(SubshiftGen g, const PointedWord& w) {
  require_interior(w);
  if (responds_to(g, w.at_abs(1))) return PointedWord{w.word, w.origin + 1};
  if (responds_to(g, w.at_abs(0))) return PointedWord{w.word, w.origin - 1};
  return w;
}

bool orbit_coincidence_check(const PointedWord& w, std::int64_t steps) {
  if (steps < 0) throw std::invalid_argument("orbit_coincidence_check: steps must be nonnegative");
  require_interior(w);
  if (w.origin - steps < 2 || w.origin + steps > w.word.size() - 1)
    throw std::out_of_range("orbit_coincidence_check: window too short for the requested steps");

  // State = origin index; generators only move the marker.
  std::vector<char> seen(static_cast<std::size_t>(w.word.size()) + 1, 0);
  std::vector<std::int64_t> stack{w.origin};
  seen[static_cast<std::size_t>(w.origin)] = 1;
  while (!stack.empty()) {
    std::int64_t o = stack.back();
    stack.pop_back();
    for (SubshiftGen g : {SubshiftGen::A, SubshiftGen::B, SubshiftGen::C, SubshiftGen::D}) {
      PointedWord next = subshift_generator(g, PointedWord{w.word, o});
      if (!seen[static_cast<std::size_t>(next.origin)] &&
          next.origin >= 2 && next.origin <= w.word.size() - 1) {
        seen[static_cast<std::size_t>(next.origin)] = 1;
        stack.push_back(next.origin);
      }
    }
  }
  // T^k moves the origin to w.origin - k.
  for (std::int64_t k = -steps; k <= steps; ++k)
    if (!seen[static_cast<std::size_t>(w.origin - k)]) return false;
  return true;
}

}  // namespace grig::group
