#include "gag/subset.hpp"

#include <string>

#include "gag/errors.hpp"

namespace gag {

Subset::Subset(std::size_t width, std::uint64_t bits) : width_(width), bits_(bits) {
  if (width > kMaxOrder) {
    throw ContractViolation("subset width " + std::to_string(width) + " exceeds " + std::to_string(kMaxOrder));
  }
  if ((bits & ~full_mask(width)) != 0) {
    throw ContractViolation("subset bits outside width " + std::to_string(width));
  }
}

Subset::Subset(std::size_t width, std::initializer_list<Element> elements) : Subset(width) {
  for (Element e : elements) insert(e);
}

Subset Subset::full(std::size_t width) { return Subset(width, full_mask(width)); }

Subset Subset::singleton(std::size_t width, Element e) {
  Subset s(width);
  s.insert(e);
  return s;
}

void Subset::insert(Element e) {
  if (e >= width_) {
    throw ContractViolation("element " + std::to_string(e) + " outside subset width " + std::to_string(width_));
  }
  bits_ |= std::uint64_t{1} << e;
}

void Subset::erase(Element e) {
  if (e < width_) bits_ &= ~(std::uint64_t{1} << e);
}

bool Subset::is_subset_of(const Subset& other) const {
  require_same_width(other);
  return (bits_ & ~other.bits_) == 0;
}

std::vector<Element> Subset::elements() const { return {begin(), end()}; }

Subset& Subset::operator|=(const Subset& other) {
  require_same_width(other);
  bits_ |= other.bits_;
  return *this;
}

Subset& Subset::operator&=(const Subset& other) {
  require_same_width(other);
  bits_ &= other.bits_;
  return *this;
}

Subset& Subset::operator-=(const Subset& other) {
  require_same_width(other);
  bits_ &= ~other.bits_;
  return *this;
}

void Subset::require_same_width(const Subset& other) const {
  if (width_ != other.width_) {
    throw ContractViolation("subset width mismatch: " + std::to_string(width_) + " vs " +
                            std::to_string(other.width_));
  }
}

}  // namespace gag
