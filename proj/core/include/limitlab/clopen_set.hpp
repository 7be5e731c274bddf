#pragma once

#include <optional>
#include <span>
#include <vector>

#include "limitlab/binary_string.hpp"
#include "limitlab/rational.hpp"

namespace limitlab {

/// Finite union of intervals Omega_x of Cantor space, held in canonical form:
/// a lexicographically sorted prefix-free antichain with no sibling pair
/// x0, x1 (such pairs are merged into x). Canonical form is unique per point
/// set, so == is set equality.
class ClopenSet {
 public:
  ClopenSet() = default;  // the empty set

  /// Canonical set covering the union of the given intervals.
  static ClopenSet normalize(std::span<const BinaryString> intervals);
  static ClopenSet interval(const BinaryString& x);
  static ClopenSet full() { return interval(BinaryString{}); }

  [[nodiscard]] const std::vector<BinaryString>& intervals() const noexcept {
    return intervals_;
  }
  [[nodiscard]] bool empty() const noexcept { return intervals_.empty(); }
  [[nodiscard]] bool is_full() const noexcept {
    return intervals_.size() == 1 && intervals_.front().empty();
  }
  [[nodiscard]] Rational measure() const;
  [[nodiscard]] std::size_t max_depth() const noexcept;

  /// Omega_x is a subset of this set.
  [[nodiscard]] bool contains(const BinaryString& x) const;
  /// Omega_x meets this set.
  [[nodiscard]] bool intersects(const BinaryString& x) const;
  [[nodiscard]] bool contains(const ClopenSet& other) const;

  friend bool operator==(const ClopenSet&, const ClopenSet&) = default;

 private:
  explicit ClopenSet(std::vector<BinaryString> canonical)
      : intervals_(std::move(canonical)) {}

  std::vector<BinaryString> intervals_;
};

ClopenSet set_union(const ClopenSet& a, const ClopenSet& b);
ClopenSet set_intersection(const ClopenSet& a, const ClopenSet& b);
ClopenSet set_difference(const ClopenSet& a, const ClopenSet& b);

enum class SetOp { kUnion, kIntersection, kDifference };
ClopenSet boolean_op(const ClopenSet& a, const ClopenSet& b, SetOp op);

/// Lexicographically least w of the given length with Omega_w disjoint from s.
std::optional<BinaryString> leftmost_avoiding(const ClopenSet& s,
                                              std::size_t length);

}  // namespace limitlab
