#include "limitlab/clopen_set.hpp"

#include <algorithm>

namespace limitlab {

namespace {

// Removes every string that has a proper (or equal) prefix earlier in the
// lexicographic order; input must be lex-sorted.
std::vector<BinaryString> drop_absorbed(std::vector<BinaryString> sorted) {
  std::vector<BinaryString> out;
  out.reserve(sorted.size());
  for (auto& x : sorted) {
    if (!out.empty() && out.back().is_prefix_of(x)) continue;
    out.push_back(std::move(x));
  }
  return out;
}

// Merges sibling pairs bottom-up; input is a lex-sorted antichain.
std::vector<BinaryString> merge_siblings(std::vector<BinaryString> antichain) {
  std::vector<BinaryString> stack;
  stack.reserve(antichain.size());
  for (auto& x : antichain) {
    stack.push_back(std::move(x));
    while (stack.size() >= 2) {
      const BinaryString& top = stack.back();
      const BinaryString& below = stack[stack.size() - 2];
      if (top.empty() || top.bits().back() != '1' || below != top.sibling()) break;
      BinaryString merged = top.parent();
      stack.pop_back();
      stack.back() = std::move(merged);
    }
  }
  return stack;
}

void subtract_into(const BinaryString& x, const std::vector<BinaryString>& removed,
                   std::vector<BinaryString>& out) {
  bool has_extension = false;
  for (const auto& b : removed) {
    if (b.is_prefix_of(x)) return;
    if (x.is_prefix_of(b)) has_extension = true;
  }
  if (!has_extension) {
    out.push_back(x);
    return;
  }
  subtract_into(x.child('0'), removed, out);
  subtract_into(x.child('1'), removed, out);
}

bool search_leftmost(const std::vector<BinaryString>& s, const BinaryString& node,
                     std::size_t length, BinaryString& found) {
  bool below = false;
  for (const auto& x : s) {
    if (x.is_prefix_of(node)) return false;
    if (node.is_prefix_of(x)) below = true;
  }
  if (!below) {
    found = node.concat(BinaryString::from_bits(std::string(length - node.size(), '0')));
    return true;
  }
  if (node.size() == length) return false;
  return search_leftmost(s, node.child('0'), length, found) ||
         search_leftmost(s, node.child('1'), length, found);
}

}  // namespace

ClopenSet ClopenSet::normalize(std::span<const BinaryString> intervals) {
  std::vector<BinaryString> sorted(intervals.begin(), intervals.end());
  std::sort(sorted.begin(), sorted.end(), LexLess{});
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return ClopenSet(merge_siblings(drop_absorbed(std::move(sorted))));
}

ClopenSet ClopenSet::interval(const BinaryString& x) { return ClopenSet({x}); }

Rational ClopenSet::measure() const {
  Rational total = 0;
  for (const auto& x : intervals_) total += inverse_power_of_two(x.size());
  return total;
}

std::size_t ClopenSet::max_depth() const noexcept {
  std::size_t depth = 0;
  for (const auto& x : intervals_) depth = std::max(depth, x.size());
  return depth;
}

bool ClopenSet::contains(const BinaryString& x) const {
  if (x.size() > max_depth()) {
    return std::any_of(intervals_.begin(), intervals_.end(),
                       [&](const BinaryString& i) { return i.is_prefix_of(x); });
  }
  return set_difference(interval(x), *this).empty();
}

bool ClopenSet::intersects(const BinaryString& x) const {
  return std::any_of(intervals_.begin(), intervals_.end(),
                     [&](const BinaryString& i) { return i.comparable(x); });
}

bool ClopenSet::contains(const ClopenSet& other) const {
  return set_difference(other, *this).empty();
}

ClopenSet set_union(const ClopenSet& a, const ClopenSet& b) {
  std::vector<BinaryString> all = a.intervals();
  all.insert(all.end(), b.intervals().begin(), b.intervals().end());
  return ClopenSet::normalize(all);
}

ClopenSet set_intersection(const ClopenSet& a, const ClopenSet& b) {
  std::vector<BinaryString> parts;
  for (const auto& x : a.intervals()) {
    for (const auto& y : b.intervals()) {
      if (x.is_prefix_of(y)) {
        parts.push_back(y);
      } else if (y.is_prefix_of(x)) {
        parts.push_back(x);
      }
    }
  }
  return ClopenSet::normalize(parts);
}

ClopenSet set_difference(const ClopenSet& a, const ClopenSet& b) {
  std::vector<BinaryString> parts;
  for (const auto& x : a.intervals()) subtract_into(x, b.intervals(), parts);
  return ClopenSet::normalize(parts);
}

ClopenSet boolean_op(const ClopenSet& a, const ClopenSet& b, SetOp op) {
  switch (op) {
    case SetOp::kUnion:
      return set_union(a, b);
    case SetOp::kIntersection:
      return set_intersection(a, b);
    case SetOp::kDifference:
      return set_difference(a, b);
  }
  return {};
}

std::optional<BinaryString> leftmost_avoiding(const ClopenSet& s, std::size_t length) {
  BinaryString found;
  if (search_leftmost(s.intervals(), BinaryString{}, length, found)) return found;
  return std::nullopt;
}

}  // namespace limitlab
