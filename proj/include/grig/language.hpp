#pragma once

#include <cstdint>
#include <vector>

#include "grig/word.hpp"

namespace grig {

/// All distinct factors of a fixed length found in a prefix of eta.
/// `stabilized` is the doubling check: rescanning a prefix of twice the
/// window yields the same set. Prefix factor sets are nested, so equal
/// cardinality is equivalent to equal sets.
struct SubwordSet {
  std::int64_t length = 0;
  std::vector<Word> words;  // strictly sorted
  std::int64_t source_window = 0;
  bool stabilized = false;
};

SubwordSet subwords(std::int64_t length, std::int64_t window);

/// Word complexity of the subshift: tabulated 4, 6, 8 for L = 1, 2, 3, then
/// for L = 2^n + k (n >= 2, 0 <= k < 2^n)
///   2^(n+1) + 2^(n-1) + 3k   if k <  2^(n-1)
///   2^(n+1) + 2^n     + 2k   if k >= 2^(n-1)
/// The two branches agree at k = 2^(n-1). Enumeration is the oracle of
/// record for the branch boundaries; tests pin them against it.
std::int64_t complexity_closed_form(std::int64_t length);

/// Distinct-factor counts for every length 1..max_len in one pass
/// (suffix-array based), with the per-length doubling check.
struct ComplexityProfile {
  std::int64_t max_len = 0;
  std::int64_t window = 0;
  std::vector<std::int64_t> counts;  // counts[L-1] = #factors of length L in the window prefix
  std::vector<char> stabilized;      // per length, window vs 2*window
  bool all_stabilized() const;
};

ComplexityProfile enumerate_complexity(std::int64_t max_len, std::int64_t window);

struct RightSpecialWord {
  Word word;
  std::vector<Letter> extensions;  // sorted, >= 2 entries
};

/// Words of length L with at least two one-letter right extensions in the
/// language. window = 0 picks a window large enough to stabilize.
std::vector<RightSpecialWord> right_special(std::int64_t length, std::int64_t window = 0);

/// Exact rational N + |v|/|w| used for word indices; den > 0.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

bool operator<(const Fraction& lhs, const Fraction& rhs);
bool operator==(const Fraction& lhs, const Fraction& rhs);

/// Fractional-power scan over all factors of length <= max_len in an
/// eta-prefix of the given window size.
struct PowerScanReport {
  std::int64_t max_len = 0;
  std::int64_t window = 0;
  Fraction max_index;                        // largest observed index
  std::int64_t max_index_root_length = 0;    // |w| realizing it
  std::vector<Fraction> max_index_by_length; // [l-1] for l = 1..max_len
  std::vector<std::int64_t> cube_root_lengths;  // lengths whose cube occurs
  bool fourth_power_found = false;
};

PowerScanReport max_power_scan(std::int64_t max_len, std::int64_t window);

/// The unique residue class mod 2^(n+1) of spacer positions in the
/// n-decomposition ... p(n) s p(n) s' p(n) ... of a subshift window.
/// Positions are absolute (origin-relative) coordinates of the PointedWord.
struct PartitionResult {
  int n = 0;
  std::int64_t modulus = 0;
  std::int64_t residue = 0;  // in [0, modulus)
  std::vector<std::int64_t> witness_positions;
};

/// Exhaustively checks all 2^(n+1) candidate classes. Throws if the window
/// is shorter than 3 * 2^(n+1), if no class fits (not a legal subshift
/// window), or if several fit (impossible for legal windows).
PartitionResult n_partition(const PointedWord& w, int n);

/// Window of radius r around the origin of the special sequence
/// omega^(s) = ... p(n) s | p(n) ...: positions 1..r agree with eta,
/// position 0 carries s, and position -k mirrors eta_k.
PointedWord special_sequence_window(Letter s, std::int64_t radius);

}  // namespace grig
