#include "grig/tree_action.hpp"

#include <stdexcept>
#include <vector>

namespace grig::group {

Gen gen_from_char(char c) {
  switch (c) {
    case 'a': return Gen::a;
    case 'b': return Gen::b;
    case 'c': return Gen::c;
    case 'd': return Gen::d;
  }
  throw std::invalid_argument(std::string("gen_from_char: invalid generator '") + c + "'");
}

namespace {

void act_inplace(Gen g, std::string& bits, std::size_t from) {
  if (from >= bits.size()) return;
  switch (g) {
    case Gen::a:
      bits[from] = bits[from] == '0' ? '1' : '0';
      return;
    case Gen::b:
      if (bits[from] == '0') act_inplace(Gen::a, bits, from + 1);
      else act_inplace(Gen::c, bits, from + 1);
      return;
    case Gen::c:
      if (bits[from] == '0') act_inplace(Gen::a, bits, from + 1);
      else act_inplace(Gen::d, bits, from + 1);
      return;
    case Gen::d:
      if (bits[from] == '0') return;
      act_inplace(Gen::b, bits, from + 1);
      return;
  }
}

}  // namespace

TreeVertex act(Gen g, const TreeVertex& v) {
  for (char c : v.bits)
    if (c != '0' && c != '1') throw std::invalid_argument("act: vertex bits must be 0/1");
  TreeVertex out = v;
  act_inplace(g, out.bits, 0);
  return out;
}

TreeVertex act_word(const GroupWord& gw, TreeVertex v) {
  for (auto it = gw.rbegin(); it != gw.rend(); ++it) v = act(gen_from_char(*it), v);
  return v;
}

std::uint32_t act_bits(Gen g, std::uint32_t v, int level) {
  if (level < 0 || level > 31) throw std::invalid_argument("act_bits: level out of range");
  if (level == 0) return v;
  if (g == Gen::a) return v ^ 1u;
  // b, c, d walk the leading run of 1s, cycling b -> c -> d -> b; at the
  // first 0 the current generator either applies a to the tail (b, c) or
  // stops (d).
  Gen cur = g;
  int i = 0;
  while (i < level && (v >> i & 1u) == 1u) {
    switch (cur) {
      case Gen::b: cur = Gen::c; break;
      case Gen::c: cur = Gen::d; break;
      case Gen::d: cur = Gen::b; break;
      case Gen::a: break;
    }
    ++i;
  }
  if (i >= level) return v;  // all ones: fixed
  if (cur != Gen::d && i + 1 < level) return v ^ (1u << (i + 1));
  return v;
}

std::uint32_t act_word_bits(const GroupWord& gw, std::uint32_t v, int level) {
  for (auto it = gw.rbegin(); it != gw.rend(); ++it) v = act_bits(gen_from_char(*it), v, level);
  return v;
}

GroupWord kappa_image(const GroupWord& gw) {
  GroupWord out;
  out.reserve(gw.size() * 2);
  for (char c : gw) {
    switch (c) {
      case 'a': out += "aca"; break;
      case 'b': out += 'd'; break;
      case 'c': out += 'b'; break;
      case 'd': out += 'c'; break;
      default: throw std::invalid_argument("kappa_image: invalid generator letter");
    }
  }
  return out;
}

std::vector<GroupWord> presentation_relators(int k_max) {
  if (k_max < 0) throw std::invalid_argument("presentation_relators: k_max must be nonnegative");
  std::vector<GroupWord> out = {"aa", "bb", "cc", "dd"};
  for (GroupWord base : {GroupWord("adadadad"), GroupWord("adacacadacacadacacadacac")}) {
    GroupWord r = base;
    for (int k = 0; k <= k_max; ++k) {
      out.push_back(r);
      r = kappa_image(r);
    }
  }
  return out;
}

bool relator_check(int level, int k_max) {
  if (level < 1 || level > 31) throw std::invalid_argument("relator_check: level out of range");
  const std::uint32_t count = 1u << level;
  for (const GroupWord& r : presentation_relators(k_max))
    for (std::uint32_t v = 0; v < count; ++v)
      if (act_word_bits(r, v, level) != v) return false;
  return true;
}

bool transitive_on_level(int level) {
  if (level < 1 || level > 31) throw std::invalid_argument("transitive_on_level: level out of range");
  const std::uint32_t count = 1u << level;
  std::vector<char> seen(count, 0);
  std::vector<std::uint32_t> stack;
  std::uint32_t root = count - 1;  // 1^n
  seen[root] = 1;
  stack.push_back(root);
  std::uint32_t visited = 1;
  while (!stack.empty()) {
    std::uint32_t v = stack.back();
    stack.pop_back();
    for (Gen g : {Gen::a, Gen::b, Gen::c, Gen::d}) {
      std::uint32_t w = act_bits(g, v, level);
      if (!seen[w]) {
        seen[w] = 1;
        ++visited;
        stack.push_back(w);
      }
    }
  }
  return visited == count;
}

}  // namespace grig::group
