#include "sepchoose/color_set.hpp"

#include <algorithm>
#include <sstream>

#include "sepchoose/error.hpp"

namespace sepchoose {

void ColorSet::insert(Color c) {
  if (c < 0) fail(ErrorCode::invalid_argument, "color ids must be nonnegative, got " + std::to_string(c));
  auto w = static_cast<std::size_t>(c) >> 6;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] |= std::uint64_t{1} << (c & 63);
}

void ColorSet::erase(Color c) {
  if (!contains(c)) return;
  words_[static_cast<std::size_t>(c) >> 6] &= ~(std::uint64_t{1} << (c & 63));
  trim();
}

void ColorSet::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

std::vector<Color> ColorSet::members() const {
  std::vector<Color> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto bits = words_[w];
    while (bits) {
      int t = std::countr_zero(bits);
      out.push_back(static_cast<Color>(w * 64 + static_cast<std::size_t>(t)));
      bits &= bits - 1;
    }
  }
  return out;
}

Color ColorSet::bound() const {
  if (words_.empty()) return 0;
  auto top = words_.back();
  return static_cast<Color>((words_.size() - 1) * 64 + static_cast<std::size_t>(64 - std::countl_zero(top)));
}

std::size_t ColorSet::intersection_size(const ColorSet& other) const {
  std::size_t s = 0;
  auto n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) s += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  return s;
}

bool ColorSet::is_subset_of(const ColorSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto o = i < other.words_.size() ? other.words_[i] : 0;
    if (words_[i] & ~o) return false;
  }
  return true;
}

ColorSet ColorSet::operator&(const ColorSet& other) const {
  ColorSet r;
  r.words_.resize(std::min(words_.size(), other.words_.size()));
  for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] = words_[i] & other.words_[i];
  r.trim();
  return r;
}

ColorSet ColorSet::operator|(const ColorSet& other) const {
  ColorSet r;
  r.words_.resize(std::max(words_.size(), other.words_.size()), 0);
  for (std::size_t i = 0; i < r.words_.size(); ++i) {
    auto x = i < words_.size() ? words_[i] : 0;
    auto y = i < other.words_.size() ? other.words_[i] : 0;
    r.words_[i] = x | y;
  }
  return r;
}

ColorSet ColorSet::operator-(const ColorSet& other) const {
  ColorSet r = *this;
  for (std::size_t i = 0; i < r.words_.size() && i < other.words_.size(); ++i) r.words_[i] &= ~other.words_[i];
  r.trim();
  return r;
}

bool operator==(const ColorSet& x, const ColorSet& y) {
  auto n = std::max(x.words_.size(), y.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto a = i < x.words_.size() ? x.words_[i] : 0;
    auto b = i < y.words_.size() ? y.words_[i] : 0;
    if (a != b) return false;
  }
  return true;
}

std::string ColorSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Color c : members()) {
    if (!first) os << ',';
    os << c;
    first = false;
  }
  os << '}';
  return os.str();
}

ColorSet first_members(const ColorSet& set, std::size_t count) {
  ColorSet out;
  std::size_t taken = 0;
  for (Color c : set.members()) {
    if (taken == count) break;
    out.insert(c);
    ++taken;
  }
  return out;
}

}  // namespace sepchoose
