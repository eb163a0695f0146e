#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace gag {

using Element = std::size_t;
using GammaIndex = std::size_t;

// Largest carrier a single-word subset can describe.
inline constexpr std::size_t kMaxOrder = 64;

// A subset of the carrier {0, ..., width-1}, stored as one machine word.
//
// Binary operations require equal widths and throw ContractViolation
// otherwise. Subsets order by bit value, so ascending order lists {0} before
// {1} before {0,1}.
class Subset {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}

    Element operator*() const { return static_cast<Element>(std::countr_zero(rest_)); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  Subset() = default;
  explicit Subset(std::size_t width, std::uint64_t bits = 0);
  Subset(std::size_t width, std::initializer_list<Element> elements);

  static Subset empty(std::size_t width) { return Subset(width); }
  static Subset full(std::size_t width);
  static Subset singleton(std::size_t width, Element e);

  std::size_t width() const noexcept { return width_; }
  std::uint64_t bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool is_empty() const noexcept { return bits_ == 0; }
  bool is_full() const noexcept { return bits_ == full_mask(width_); }

  bool contains(Element e) const noexcept { return e < width_ && ((bits_ >> e) & 1U) != 0; }
  void insert(Element e);
  void erase(Element e);

  bool is_subset_of(const Subset& other) const;

  std::vector<Element> elements() const;

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  Subset& operator|=(const Subset& other);
  Subset& operator&=(const Subset& other);
  Subset& operator-=(const Subset& other);

  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

  bool operator==(const Subset&) const = default;
  std::strong_ordering operator<=>(const Subset& other) const {
    if (auto c = width_ <=> other.width_; c != 0) return c;
    return bits_ <=> other.bits_;
  }

  static constexpr std::uint64_t full_mask(std::size_t width) noexcept {
    return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
  }

 private:
  void require_same_width(const Subset& other) const;

  std::size_t width_ = 0;
  std::uint64_t bits_ = 0;
};

}  // namespace gag
