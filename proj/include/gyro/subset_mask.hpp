#pragma once

#include <bitset>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "gyro/permutation.hpp"

namespace gyro {

inline constexpr std::size_t kMaxOrder = 256;

// A subset of the carrier 0..n-1 of some parent gyrogroup of order n.
class SubsetMask {
 public:
  using Bits = std::bitset<kMaxOrder>;

  SubsetMask() = default;

  explicit SubsetMask(std::size_t parent_order) : parent_order_(parent_order) {
    if (parent_order > kMaxOrder) {
      throw std::invalid_argument("subset parent order exceeds kMaxOrder");
    }
  }

  SubsetMask(std::size_t parent_order, std::initializer_list<Element> elements)
      : SubsetMask(parent_order) {
    for (Element e : elements) insert(e);
  }

  template <typename Range>
  static SubsetMask of(std::size_t parent_order, const Range& elements) {
    SubsetMask m(parent_order);
    for (auto e : elements) m.insert(static_cast<Element>(e));
    return m;
  }

  static SubsetMask full(std::size_t parent_order) {
    SubsetMask m(parent_order);
    for (std::size_t i = 0; i < parent_order; ++i) m.bits_.set(i);
    return m;
  }

  // Bit i of `word` selects element i; only the low parent_order bits are used.
  static SubsetMask from_word(std::size_t parent_order, unsigned long long word) {
    SubsetMask m(parent_order);
    for (std::size_t i = 0; i < parent_order && i < 64; ++i) {
      if ((word >> i) & 1ULL) m.bits_.set(i);
    }
    return m;
  }

  std::size_t parent_order() const noexcept { return parent_order_; }
  const Bits& bits() const noexcept { return bits_; }

  bool contains(Element e) const noexcept { return e < parent_order_ && bits_.test(e); }

  void insert(Element e) {
    if (e >= parent_order_) throw std::out_of_range("element outside parent carrier");
    bits_.set(e);
  }

  void erase(Element e) {
    if (e >= parent_order_) throw std::out_of_range("element outside parent carrier");
    bits_.reset(e);
  }

  std::size_t size() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }

  // Least element; undefined on an empty mask.
  Element first() const noexcept {
    for (std::size_t i = 0; i < parent_order_; ++i) {
      if (bits_.test(i)) return static_cast<Element>(i);
    }
    return static_cast<Element>(parent_order_);
  }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for (std::size_t i = 0; i < parent_order_; ++i) {
      if (bits_.test(i)) out.push_back(static_cast<Element>(i));
    }
    return out;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < parent_order_; ++i) {
      if (bits_.test(i)) fn(static_cast<Element>(i));
    }
  }

  SubsetMask complement() const {
    SubsetMask m = full(parent_order_);
    m.bits_ &= ~bits_;
    return m;
  }

  bool is_subset_of(const SubsetMask& other) const {
    require_same_parent(other);
    return (bits_ & ~other.bits_).none();
  }

  SubsetMask& operator&=(const SubsetMask& o) { require_same_parent(o); bits_ &= o.bits_; return *this; }
  SubsetMask& operator|=(const SubsetMask& o) { require_same_parent(o); bits_ |= o.bits_; return *this; }

  friend SubsetMask operator&(SubsetMask a, const SubsetMask& b) { return a &= b; }
  friend SubsetMask operator|(SubsetMask a, const SubsetMask& b) { return a |= b; }

  friend bool operator==(const SubsetMask& a, const SubsetMask& b) {
    return a.parent_order_ == b.parent_order_ && a.bits_ == b.bits_;
  }

  // Orders masks as unsigned integers (element i has weight 2^i).
  friend bool operator<(const SubsetMask& a, const SubsetMask& b) {
    if (a.parent_order_ != b.parent_order_) return a.parent_order_ < b.parent_order_;
    for (std::size_t i = a.parent_order_; i-- > 0;) {
      if (a.bits_.test(i) != b.bits_.test(i)) return b.bits_.test(i);
    }
    return false;
  }

  struct Hash {
    std::size_t operator()(const SubsetMask& m) const noexcept {
      return std::hash<Bits>{}(m.bits_) ^ (m.parent_order_ * 0x9e3779b97f4a7c15ULL);
    }
  };

 private:
  void require_same_parent(const SubsetMask& other) const {
    if (other.parent_order_ != parent_order_) {
      throw std::invalid_argument("subset masks belong to different parents");
    }
  }

  Bits bits_;
  std::size_t parent_order_ = 0;
};

}  // namespace gyro
