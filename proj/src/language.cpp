#include "grig/language.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

#include "grig/substitution.hpp"

namespace grig {

namespace {

// Plain doubling suffix array; adequate for windows up to a few 2^20.
std::vector<std::int32_t> suffix_array(std::string_view s) {
  const std::int32_t n = static_cast<std::int32_t>(s.size());
  std::vector<std::int32_t> sa(static_cast<std::size_t>(n)), rank(static_cast<std::size_t>(n)),
      tmp(static_cast<std::size_t>(n));
  std::iota(sa.begin(), sa.end(), 0);
  for (std::int32_t i = 0; i < n; ++i) rank[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(i)];
  for (std::int32_t k = 1;; k *= 2) {
    auto key = [&](std::int32_t i) {
      return std::pair<std::int32_t, std::int32_t>(
          rank[static_cast<std::size_t>(i)],
          i + k < n ? rank[static_cast<std::size_t>(i + k)] + 1 : 0);
    };
    std::sort(sa.begin(), sa.end(), [&](std::int32_t a, std::int32_t b) { return key(a) < key(b); });
    tmp[static_cast<std::size_t>(sa[0])] = 0;
    for (std::int32_t i = 1; i < n; ++i)
      tmp[static_cast<std::size_t>(sa[static_cast<std::size_t>(i)])] =
          tmp[static_cast<std::size_t>(sa[static_cast<std::size_t>(i - 1)])] +
          (key(sa[static_cast<std::size_t>(i - 1)]) < key(sa[static_cast<std::size_t>(i)]) ? 1 : 0);
    rank = tmp;
    if (rank[static_cast<std::size_t>(sa[static_cast<std::size_t>(n - 1)])] == n - 1) break;
  }
  return sa;
}

// Kasai's LCP: lcp[i] = longest common prefix of sa[i-1] and sa[i]; lcp[0] = 0.
std::vector<std::int32_t> lcp_array(std::string_view s, const std::vector<std::int32_t>& sa) {
  const std::int32_t n = static_cast<std::int32_t>(s.size());
  std::vector<std::int32_t> rank(static_cast<std::size_t>(n)), lcp(static_cast<std::size_t>(n), 0);
  for (std::int32_t i = 0; i < n; ++i) rank[static_cast<std::size_t>(sa[static_cast<std::size_t>(i)])] = i;
  std::int32_t h = 0;
  for (std::int32_t i = 0; i < n; ++i) {
    if (rank[static_cast<std::size_t>(i)] > 0) {
      std::int32_t j = sa[static_cast<std::size_t>(rank[static_cast<std::size_t>(i)] - 1)];
      while (i + h < n && j + h < n &&
             s[static_cast<std::size_t>(i + h)] == s[static_cast<std::size_t>(j + h)])
        ++h;
      lcp[static_cast<std::size_t>(rank[static_cast<std::size_t>(i)])] = h;
      if (h > 0) --h;
    } else {
      h = 0;
    }
  }
  return lcp;
}

// counts[L-1] = number of distinct factors of length L of s, L = 1..max_len.
// Each suffix of length len with predecessor-lcp l contributes the lengths
// (l, len]; accumulated with a difference array.
std::vector<std::int64_t> distinct_factor_counts(std::string_view s, std::int64_t max_len) {
  auto sa = suffix_array(s);
  auto lcp = lcp_array(s, sa);
  const std::int64_t n = static_cast<std::int64_t>(s.size());
  std::vector<std::int64_t> diff(static_cast<std::size_t>(max_len) + 2, 0);
  for (std::size_t i = 0; i < sa.size(); ++i) {
    std::int64_t len = n - sa[i];
    std::int64_t lo = lcp[i] + 1;
    std::int64_t hi = std::min<std::int64_t>(len, max_len);
    if (lo > hi) continue;
    diff[static_cast<std::size_t>(lo)] += 1;
    diff[static_cast<std::size_t>(hi) + 1] -= 1;
  }
  std::vector<std::int64_t> counts(static_cast<std::size_t>(max_len));
  std::int64_t running = 0;
  for (std::int64_t L = 1; L <= max_len; ++L) {
    running += diff[static_cast<std::size_t>(L)];
    counts[static_cast<std::size_t>(L - 1)] = running;
  }
  return counts;
}

std::vector<std::string_view> distinct_factors(std::string_view prefix, std::int64_t length) {
  std::vector<std::string_view> views;
  if (length > static_cast<std::int64_t>(prefix.size())) return views;
  views.reserve(prefix.size() - static_cast<std::size_t>(length) + 1);
  for (std::size_t i = 0; i + static_cast<std::size_t>(length) <= prefix.size(); ++i)
    views.push_back(prefix.substr(i, static_cast<std::size_t>(length)));
  std::sort(views.begin(), views.end());
  views.erase(std::unique(views.begin(), views.end()), views.end());
  return views;
}

}  // namespace

SubwordSet subwords(std::int64_t length, std::int64_t window) {
  if (length < 1) throw std::invalid_argument("subwords: length must be positive");
  if (length > window) throw std::invalid_argument("subwords: length exceeds window");
  Word doubled = eta_prefix(2 * window);
  std::string_view full = doubled.view();
  auto base = distinct_factors(full.substr(0, static_cast<std::size_t>(window)), length);
  auto check = distinct_factors(full, length);

  SubwordSet out;
  out.length = length;
  out.source_window = window;
  out.stabilized = base.size() == check.size();
  out.words.reserve(base.size());
  for (auto v : base) out.words.emplace_back(std::string(v));
  return out;
}

std::int64_t complexity_closed_form(std::int64_t length) {
  if (length < 1) throw std::invalid_argument("complexity_closed_form: length must be positive");
  if (length == 1) return 4;
  if (length == 2) return 6;
  if (length == 3) return 8;
  int n = 63 - std::countl_zero(static_cast<std::uint64_t>(length));  // length = 2^n + k
  std::int64_t k = length - (std::int64_t{1} << n);
  if (k < (std::int64_t{1} << (n - 1))) return (std::int64_t{1} << (n + 1)) + (std::int64_t{1} << (n - 1)) + 3 * k;
  return (std::int64_t{1} << (n + 1)) + (std::int64_t{1} << n) + 2 * k;
}

bool ComplexityProfile::all_stabilized() const {
  return std::all_of(stabilized.begin(), stabilized.end(), [](char c) { return c != 0; });
}

ComplexityProfile enumerate_complexity(std::int64_t max_len, std::int64_t window) {
  if (max_len < 1 || max_len > window)
    throw std::invalid_argument("enumerate_complexity: need 1 <= max_len <= window");
  Word doubled = eta_prefix(2 * window);
  std::string_view full = doubled.view();
  auto base = distinct_factor_counts(full.substr(0, static_cast<std::size_t>(window)), max_len);
  auto check = distinct_factor_counts(full, max_len);

  ComplexityProfile out;
  out.max_len = max_len;
  out.window = window;
  out.counts = std::move(base);
  out.stabilized.resize(static_cast<std::size_t>(max_len));
  for (std::int64_t L = 1; L <= max_len; ++L)
    out.stabilized[static_cast<std::size_t>(L - 1)] =
        out.counts[static_cast<std::size_t>(L - 1)] == check[static_cast<std::size_t>(L - 1)] ? 1 : 0;
  return out;
}

std::vector<RightSpecialWord> right_special(std::int64_t length, std::int64_t window) {
  if (length < 1) throw std::invalid_argument("right_special: length must be positive");
  if (window == 0) {
    window = std::max<std::int64_t>(std::int64_t{1} << 12, 16 * (length + 1));
    // round up to a power of two
    while ((window & (window - 1)) != 0) window += window & -window;
  }
  SubwordSet ext = subwords(length + 1, window);
  for (int attempts = 0; !ext.stabilized && attempts < 8; ++attempts) {
    window *= 2;
    ext = subwords(length + 1, window);
  }
  if (!ext.stabilized)
    throw std::runtime_error("right_special: subword set did not stabilize; window too small");

  std::vector<RightSpecialWord> out;
  // ext.words is sorted, so words sharing a length-L prefix are adjacent.
  std::size_t i = 0;
  while (i < ext.words.size()) {
    std::size_t j = i + 1;
    const Word prefix = ext.words[i].prefix(length);
    while (j < ext.words.size() && ext.words[j].prefix(length) == prefix) ++j;
    if (j - i >= 2) {
      RightSpecialWord rs;
      rs.word = prefix;
      for (std::size_t k = i; k < j; ++k) rs.extensions.push_back(ext.words[k].at(length + 1));
      out.push_back(std::move(rs));
    }
    i = j;
  }
  return out;
}

bool operator<(const Fraction& lhs, const Fraction& rhs) {
  return static_cast<__int128>(lhs.num) * rhs.den < static_cast<__int128>(rhs.num) * lhs.den;
}

bool operator==(const Fraction& lhs, const Fraction& rhs) {
  return static_cast<__int128>(lhs.num) * rhs.den == static_cast<__int128>(rhs.num) * lhs.den;
}

PowerScanReport max_power_scan(std::int64_t max_len, std::int64_t window) {
  if (max_len < 1) throw std::invalid_argument("max_power_scan: max_len must be positive");
  if (window < 4 * max_len) throw std::invalid_argument("max_power_scan: window must be >= 4 * max_len");
  Word prefix = eta_prefix(window);
  std::string_view s = prefix.view();
  const std::int64_t n = static_cast<std::int64_t>(s.size());

  PowerScanReport report;
  report.max_len = max_len;
  report.window = window;
  report.max_index = Fraction{0, 1};
  report.max_index_by_length.resize(static_cast<std::size_t>(max_len), Fraction{0, 1});

  std::vector<std::int32_t> match(static_cast<std::size_t>(n));
  for (std::int64_t len = 1; len <= max_len; ++len) {
    // match[i] = number of consecutive positions j >= i with s[j] == s[j+len]
    std::int64_t limit = n - len;
    std::int32_t best = 0;
    for (std::int64_t i = limit - 1; i >= 0; --i) {
      std::int32_t m = 0;
      if (s[static_cast<std::size_t>(i)] == s[static_cast<std::size_t>(i + len)])
        m = 1 + (i + 1 < limit ? match[static_cast<std::size_t>(i + 1)] : 0);
      match[static_cast<std::size_t>(i)] = m;
      if (m > best) best = m;
    }
    if (limit <= 0) break;
    // longest periodic stretch with period len is len + best letters
    Fraction idx{len + best, len};
    report.max_index_by_length[static_cast<std::size_t>(len - 1)] = idx;
    if (report.max_index < idx) {
      report.max_index = idx;
      report.max_index_root_length = len;
    }
    if (best >= 2 * len) report.cube_root_lengths.push_back(len);
    if (best >= 3 * len) report.fourth_power_found = true;
  }
  return report;
}

PartitionResult n_partition(const PointedWord& w, int n) {
  if (n < 0) throw std::invalid_argument("n_partition: n must be nonnegative");
  if (!w.valid()) throw std::invalid_argument("n_partition: invalid pointed word");
  const std::int64_t modulus = std::int64_t{1} << (n + 1);
  if (w.word.size() < 3 * modulus)
    throw std::invalid_argument("n_partition: window shorter than 3 * 2^(n+1)");

  const Word block = level_word(n);
  const std::string& blk = block.str();
  const std::string& s = w.word.str();
  const std::int64_t size = w.word.size();

  std::vector<std::int64_t> valid_classes;
  std::vector<std::int64_t> witnesses;
  for (std::int64_t c = 0; c < modulus; ++c) {
    // Window index j holds absolute position q = j - origin + 1. Offset of q
    // within its block of the candidate decomposition: (q - c) mod modulus,
    // 0 meaning the spacer slot, 1..modulus-1 an offset into p(n).
    bool ok = true;
    std::vector<std::int64_t> cand_witnesses;
    for (std::int64_t j = 1; j <= size && ok; ++j) {
      std::int64_t q = j - w.origin + 1;
      std::int64_t off = (q - c) % modulus;
      if (off < 0) off += modulus;
      char letter = s[static_cast<std::size_t>(j - 1)];
      if (off == 0) {
        if (letter == 'a') ok = false;
        else cand_witnesses.push_back(q);
      } else if (letter != blk[static_cast<std::size_t>(off - 1)]) {
        ok = false;
      }
    }
    if (ok) {
      valid_classes.push_back(c);
      witnesses = std::move(cand_witnesses);
    }
  }
  if (valid_classes.empty())
    throw std::runtime_error("n_partition: no residue class fits; not a legal subshift window");
  if (valid_classes.size() > 1)
    throw std::logic_error("n_partition: several residue classes fit; uniqueness is violated");

  PartitionResult out;
  out.n = n;
  out.modulus = modulus;
  out.residue = valid_classes.front();
  out.witness_positions = std::move(witnesses);
  return out;
}

PointedWord special_sequence_window(Letter s, std::int64_t radius) {
  if (!is_spacer(s)) throw std::invalid_argument("special_sequence_window: s must be one of x, y, z");
  if (radius < 1) throw std::invalid_argument("special_sequence_window: radius must be positive");
  const Word eta = eta_prefix(radius);
  std::string buf;
  buf.reserve(static_cast<std::size_t>(2 * radius));
  // positions -radius+1 .. 0: mirrored eta then the seam letter s
  for (std::int64_t k = radius - 1; k >= 1; --k) buf.push_back(to_char(eta.at(k)));
  buf.push_back(to_char(s));
  buf += eta.str();
  return PointedWord{Word(std::move(buf)), radius + 1};
}

}  // namespace grig
