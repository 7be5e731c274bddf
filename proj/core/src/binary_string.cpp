#include "limitlab/binary_string.hpp"

#include <cstdlib>
#include <string>

#include "limitlab/config.hpp"
#include "limitlab/errors.hpp"

namespace limitlab {

std::size_t max_depth() {
  static const std::size_t depth = [] {
    const char* env = std::getenv("LIMITLAB_MAX_DEPTH");
    if (env == nullptr || *env == '\0') return kDefaultMaxDepth;
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0' || parsed == 0) return kDefaultMaxDepth;
    return static_cast<std::size_t>(parsed);
  }();
  return depth;
}

BinaryString::BinaryString(std::string_view bits) : bits_(bits) {
  for (char c : bits_) {
    if (c != '0' && c != '1') {
      throw ParseError("invalid bit-string '" + bits_ + "'");
    }
  }
  if (bits_.size() > max_depth()) {
    throw ParseError("bit-string of length " + std::to_string(bits_.size()) +
                     " exceeds the maximum depth " + std::to_string(max_depth()));
  }
}

BinaryString BinaryString::from_bits(std::string bits) {
  BinaryString s;
  s.bits_ = std::move(bits);
  return s;
}

BinaryString BinaryString::of_natural(unsigned long long value) {
  if (value == 0) return from_bits("0");
  std::string bits;
  for (; value != 0; value >>= 1) bits.insert(bits.begin(), (value & 1) ? '1' : '0');
  return from_bits(std::move(bits));
}

std::vector<BinaryString> BinaryString::all_of_length(std::size_t length) {
  std::vector<BinaryString> out;
  out.reserve(std::size_t{1} << length);
  for (std::size_t code = 0; code < (std::size_t{1} << length); ++code) {
    std::string bits(length, '0');
    for (std::size_t i = 0; i < length; ++i) {
      if ((code >> (length - 1 - i)) & 1U) bits[i] = '1';
    }
    out.push_back(from_bits(std::move(bits)));
  }
  return out;
}

bool BinaryString::is_prefix_of(const BinaryString& other) const noexcept {
  return bits_.size() <= other.bits_.size() &&
         other.bits_.compare(0, bits_.size(), bits_) == 0;
}

BinaryString BinaryString::prefix(std::size_t length) const {
  return from_bits(bits_.substr(0, length));
}

BinaryString BinaryString::parent() const {
  return from_bits(bits_.substr(0, bits_.size() - 1));
}

BinaryString BinaryString::child(char bit) const { return from_bits(bits_ + bit); }

BinaryString BinaryString::sibling() const {
  std::string bits = bits_;
  bits.back() = bits.back() == '0' ? '1' : '0';
  return from_bits(std::move(bits));
}

BinaryString BinaryString::concat(const BinaryString& tail) const {
  return from_bits(bits_ + tail.bits_);
}

std::strong_ordering operator<=>(const BinaryString& a, const BinaryString& b) noexcept {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.bits_.compare(b.bits_) <=> 0;
}

std::ostream& operator<<(std::ostream& os, const BinaryString& s) {
  return os << '"' << s.bits() << '"';
}

}  // namespace limitlab
