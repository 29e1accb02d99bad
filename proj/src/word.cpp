#include "grig/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace grig {

Letter letter_from_char(char c) {
  switch (c) {
    case 'a': return Letter::A;
    case 'x': return Letter::X;
    case 'y': return Letter::Y;
    case 'z': return Letter::Z;
  }
  throw std::invalid_argument(std::string("letter_from_char: invalid letter '") + c + "'");
}

int letter_index(Letter l) {
  switch (l) {
    case Letter::A: return 0;
    case Letter::X: return 1;
    case Letter::Y: return 2;
    case Letter::Z: return 3;
  }
  throw std::invalid_argument("letter_index: corrupt Letter value");
}

Word::Word(std::string letters) : letters_(std::move(letters)) {
  for (char c : letters_) letter_from_char(c);
}

Letter Word::at(std::int64_t i) const {
  if (i < 1 || i > size()) throw std::out_of_range("Word::at: index outside [1, size]");
  return static_cast<Letter>(letters_[static_cast<std::size_t>(i - 1)]);
}

Word Word::operator+(const Word& rhs) const {
  Word out = *this;
  out.letters_ += rhs.letters_;
  return out;
}

Word Word::reversed() const {
  Word out = *this;
  std::reverse(out.letters_.begin(), out.letters_.end());
  return out;
}

bool Word::is_palindrome() const {
  auto n = letters_.size();
  for (std::size_t i = 0; i + i + 1 < n; ++i)
    if (letters_[i] != letters_[n - 1 - i]) return false;
  return true;
}

bool Word::is_prefix_of(const Word& longer) const {
  return size() <= longer.size() &&
         longer.letters_.compare(0, letters_.size(), letters_) == 0;
}

Word Word::subword(std::int64_t pos, std::int64_t len) const {
  if (pos < 1 || pos > size() + 1 || len < 0)
    throw std::out_of_range("Word::subword: bad position or length");
  Word out;
  out.letters_ = letters_.substr(static_cast<std::size_t>(pos - 1), static_cast<std::size_t>(len));
  return out;
}

Letter PointedWord::at_abs(std::int64_t pos) const {
  return word.at(pos + origin - 1);
}

PointedWord shifted(const PointedWord& w, std::int64_t k) {
  PointedWord out{w.word, w.origin - k};
  if (!out.valid()) throw std::out_of_range("shifted: origin leaves the window");
  return out;
}

}  // namespace grig
