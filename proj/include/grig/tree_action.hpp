#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace grig::group {

/// Generator labels of the group acting on the binary rooted tree.
enum class Gen : char { a = 'a', b = 'b', c = 'c', d = 'd' };

constexpr char to_char(Gen g) noexcept { return static_cast<char>(g); }
Gen gen_from_char(char c);

/// Vertex of the binary tree: a word over {0,1}, level = |bits|.
struct TreeVertex {
  std::string bits;
  bool operator==(const TreeVertex&) const = default;
};

/// Recursive evaluation of the defining rules
///   a(0w) = 1w, a(1w) = 0w
///   b(0w) = 0 a(w), b(1w) = 1 c(w)
///   c(0w) = 0 a(w), c(1w) = 1 d(w)
///   d(0w) = 0w,     d(1w) = 1 b(w)
/// All generators are involutions; the empty vertex is fixed.
TreeVertex act(Gen g, const TreeVertex& v);

/// Word over {a,b,c,d}; applied right-to-left as a composition.
using GroupWord = std::string;

TreeVertex act_word(const GroupWord& gw, TreeVertex v);

/// Iterative action on an integer-coded vertex: bit i of v is the (i+1)-th
/// tree symbol. Agrees with act(); the fast path for whole-level sweeps.
std::uint32_t act_bits(Gen g, std::uint32_t v, int level);

std::uint32_t act_word_bits(const GroupWord& gw, std::uint32_t v, int level);

/// kappa: a -> aca, b -> d, c -> b, d -> c (the tree-side transport of the
/// letter substitution under x -> c, y -> b, z -> d).
GroupWord kappa_image(const GroupWord& gw);

/// a^2, b^2, c^2, d^2, kappa^k((ad)^4), kappa^k((adacac)^4) for k <= k_max.
std::vector<GroupWord> presentation_relators(int k_max);

/// True iff every relator acts trivially on the whole given level.
bool relator_check(int level, int k_max);

/// True iff the orbit of 1^n under {a,b,c,d} is the whole level.
bool transitive_on_level(int level);

}  // namespace grig::group
