#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace limitlab {

/// Finite word over {0,1}. Ordering is shortlex (length first, then
/// lexicographic), which is the enumeration order used by every covering
/// construction.
class BinaryString {
 public:
  BinaryString() = default;

  /// Throws ParseError on characters other than '0'/'1' or on a length
  /// beyond max_depth().
  explicit BinaryString(std::string_view bits);

  static BinaryString from_bits(std::string bits);  // unchecked length
  static BinaryString of_natural(unsigned long long value);  // binary numeral
  /// All 2^length strings of the given length, in lexicographic order.
  static std::vector<BinaryString> all_of_length(std::size_t length);

  [[nodiscard]] const std::string& bits() const noexcept { return bits_; }
  [[nodiscard]] std::size_t size() const noexcept { return bits_.size(); }
  [[nodiscard]] bool empty() const noexcept { return bits_.empty(); }
  [[nodiscard]] char operator[](std::size_t i) const { return bits_[i]; }

  [[nodiscard]] bool is_prefix_of(const BinaryString& other) const noexcept;
  [[nodiscard]] bool comparable(const BinaryString& other) const noexcept {
    return is_prefix_of(other) || other.is_prefix_of(*this);
  }
  [[nodiscard]] BinaryString prefix(std::size_t length) const;
  [[nodiscard]] BinaryString parent() const;  // requires !empty()
  [[nodiscard]] BinaryString child(char bit) const;
  [[nodiscard]] BinaryString sibling() const;  // requires !empty()
  [[nodiscard]] BinaryString concat(const BinaryString& tail) const;

  /// Text form used in files; the empty string is rendered as "".
  [[nodiscard]] const std::string& str() const noexcept { return bits_; }

  friend bool operator==(const BinaryString&, const BinaryString&) = default;
  friend std::strong_ordering operator<=>(const BinaryString& a,
                                          const BinaryString& b) noexcept;

 private:
  std::string bits_;
};

/// Plain lexicographic order (prefixes first), distinct from shortlex.
struct LexLess {
  bool operator()(const BinaryString& a, const BinaryString& b) const noexcept {
    return a.bits() < b.bits();
  }
};

std::ostream& operator<<(std::ostream& os, const BinaryString& s);

}  // namespace limitlab

template <>
struct std::hash<limitlab::BinaryString> {
  std::size_t operator()(const limitlab::BinaryString& s) const noexcept {
    return std::hash<std::string>{}(s.bits());
  }
};
