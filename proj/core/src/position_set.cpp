#include "oddlen/position_set.hpp"

#include <bit>
#include <stdexcept>

namespace oddlen {

namespace {

void check_element(int i) {
  if (i < 1 || i > PositionSet::kMaxElement)
    throw std::invalid_argument("position " + std::to_string(i) +
                                " outside representable range [1, " +
                                std::to_string(PositionSet::kMaxElement) + "]");
}

}  // namespace

PositionSet::PositionSet(std::initializer_list<int> elements) {
  for (int e : elements) insert(e);
}

PositionSet PositionSet::from_mask(std::uint32_t mask) {
  if (mask & 1u) throw std::invalid_argument("bit 0 must be clear; positions start at 1");
  PositionSet s;
  s.mask_ = mask;
  return s;
}

PositionSet PositionSet::range(int lo, int hi) {
  PositionSet s;
  for (int i = lo; i <= hi; ++i) s.insert(i);
  return s;
}

void PositionSet::insert(int i) {
  check_element(i);
  mask_ |= 1u << i;
}

void PositionSet::erase(int i) {
  check_element(i);
  mask_ &= ~(1u << i);
}

int PositionSet::size() const { return std::popcount(mask_); }

int PositionSet::min() const {
  if (empty()) throw std::logic_error("min of empty position set");
  return std::countr_zero(mask_);
}

int PositionSet::max() const {
  if (empty()) throw std::logic_error("max of empty position set");
  return 31 - std::countl_zero(mask_);
}

std::vector<int> PositionSet::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint32_t m = mask_; m != 0; m &= m - 1)
    out.push_back(std::countr_zero(m));
  return out;
}

PositionSet PositionSet::shifted_up() const {
  if (contains(kMaxElement))
    throw std::invalid_argument("shifted position outside representable range");
  PositionSet s;
  s.mask_ = mask_ << 1;
  return s;
}

PositionSet PositionSet::shifted_down() const {
  PositionSet s;
  s.mask_ = (mask_ >> 1) & ~1u;
  return s;
}

PositionSet operator|(PositionSet a, PositionSet b) {
  PositionSet s;
  s.mask_ = a.mask_ | b.mask_;
  return s;
}

PositionSet operator&(PositionSet a, PositionSet b) {
  PositionSet s;
  s.mask_ = a.mask_ & b.mask_;
  return s;
}

PositionSet operator-(PositionSet a, PositionSet b) {
  PositionSet s;
  s.mask_ = a.mask_ & ~b.mask_;
  return s;
}

std::vector<Interval> connected_components(const PositionSet& s) {
  std::vector<Interval> out;
  for (int e : s.elements()) {
    if (!out.empty() && out.back().hi + 1 == e)
      out.back().hi = e;
    else
      out.push_back({e, e});
  }
  return out;
}

std::string to_string(const PositionSet& s) {
  std::string out = "{";
  bool first = true;
  for (int e : s.elements()) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

std::string to_string(const Interval& iv) {
  return "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]";
}

}  // namespace oddlen
