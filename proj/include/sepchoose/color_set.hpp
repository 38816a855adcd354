#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace sepchoose {

using Color = int;

/// Finite set of nonnegative color ids backed by a word bitset.
/// Membership is O(1); set algebra is O(words).
class ColorSet {
 public:
  ColorSet() = default;
  ColorSet(std::initializer_list<Color> colors) {
    for (Color c : colors) insert(c);
  }
  template <typename It>
  ColorSet(It first, It last) {
    for (; first != last; ++first) insert(*first);
  }
  static ColorSet from_vector(const std::vector<Color>& colors) { return ColorSet(colors.begin(), colors.end()); }

  bool contains(Color c) const {
    if (c < 0) return false;
    auto w = static_cast<std::size_t>(c) >> 6;
    return w < words_.size() && ((words_[w] >> (c & 63)) & 1u);
  }
  void insert(Color c);
  void erase(Color c);

  std::size_t size() const {
    std::size_t s = 0;
    for (auto w : words_) s += static_cast<std::size_t>(std::popcount(w));
    return s;
  }
  bool empty() const { return size() == 0; }

  /// Members in ascending order.
  std::vector<Color> members() const;
  /// Largest member + 1, or 0 when empty.
  Color bound() const;

  std::size_t intersection_size(const ColorSet& other) const;
  bool is_subset_of(const ColorSet& other) const;
  bool disjoint(const ColorSet& other) const { return intersection_size(other) == 0; }

  ColorSet operator&(const ColorSet& other) const;
  ColorSet operator|(const ColorSet& other) const;
  /// Set difference.
  ColorSet operator-(const ColorSet& other) const;

  friend bool operator==(const ColorSet& x, const ColorSet& y);
  /// Lexicographic order on the ascending member sequence.
  friend bool operator<(const ColorSet& x, const ColorSet& y) { return x.members() < y.members(); }

  std::string to_string() const;

 private:
  void trim();
  std::vector<std::uint64_t> words_;
};

/// The lexicographically first `count` members of `set` (ascending).
ColorSet first_members(const ColorSet& set, std::size_t count);

}  // namespace sepchoose
