#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace grig {

/// The four-letter alphabet {a, x, y, z} with total order a < x < y < z.
enum class Letter : char { A = 'a', X = 'x', Y = 'y', Z = 'z' };

constexpr char to_char(Letter l) noexcept { return static_cast<char>(l); }

Letter letter_from_char(char c);

/// x, y, z are the spacer letters; a is not.
constexpr bool is_spacer(Letter l) noexcept { return l != Letter::A; }

/// Index a=0, x=1, y=2, z=3 (the canonical order).
int letter_index(Letter l);

/// Finite word over {a,x,y,z}. Letters are indexed 1-based, matching the
/// convention eta = eta_1 eta_2 ...
class Word {
public:
  Word() = default;
  explicit Word(std::string letters);

  std::int64_t size() const noexcept { return static_cast<std::int64_t>(letters_.size()); }
  bool empty() const noexcept { return letters_.empty(); }

  /// Letter at 1-based position i; throws std::out_of_range.
  Letter at(std::int64_t i) const;

  const std::string& str() const noexcept { return letters_; }
  std::string_view view() const noexcept { return letters_; }

  void append(Letter l) { letters_.push_back(to_char(l)); }
  void append(const Word& w) { letters_ += w.letters_; }
  Word operator+(const Word& rhs) const;

  Word reversed() const;
  bool is_palindrome() const;
  bool is_prefix_of(const Word& longer) const;

  /// Subword at 1-based position, length len (clamped to the end).
  Word subword(std::int64_t pos, std::int64_t len) const;
  Word prefix(std::int64_t len) const { return subword(1, len); }

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

private:
  std::string letters_;  // validated chars from {a,x,y,z}
};

/// Finite window of a two-sided sequence omega with a marked origin.
/// `origin` is the 1-based index of omega_1 inside `word`, so the window
/// covers absolute positions [2-origin, size-origin+1] and the marker `|`
/// of the notation ...omega_0 | omega_1... sits just before index `origin`.
struct PointedWord {
  Word word;
  std::int64_t origin = 1;

  bool valid() const noexcept { return origin >= 1 && origin <= word.size(); }

  std::int64_t abs_min() const noexcept { return 2 - origin; }
  std::int64_t abs_max() const noexcept { return word.size() - origin + 1; }
  bool covers(std::int64_t pos) const noexcept { return pos >= abs_min() && pos <= abs_max(); }

  /// Letter at absolute position pos (omega_pos); throws std::out_of_range.
  Letter at_abs(std::int64_t pos) const;
};

/// T^k within the fixed window: the shift T moves the origin left by one
/// (window content slides right), so the n-partition residue grows by one.
PointedWord shifted(const PointedWord& w, std::int64_t k = 1);

}  // namespace grig
