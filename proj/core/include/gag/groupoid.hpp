#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gag/subset.hpp"

namespace gag {

// A finite carrier G = {0, ..., n-1} together with m binary operations, one
// Cayley table per gamma: cell(g, a, b) = a g b.
//
// Cells are stored gamma-major then row-major, i.e. index (g*n + a)*n + b.
// Display labels for elements and gammas are carried along for reporting and
// serialization only; all computation is on indices. Instances are immutable
// and safe to share between threads.
class GammaGroupoid {
 public:
  // Throws ContractViolation unless 1 <= order <= kMaxOrder, gammas >= 1,
  // cells.size() == gammas*order*order, every cell < order, and labels /
  // gamma names (when given) have the right count, are unique, non-empty,
  // and free of whitespace and '#'.
  GammaGroupoid(std::size_t order, std::size_t gammas, std::vector<Element> cells,
                std::vector<std::string> labels = {}, std::vector<std::string> gamma_names = {});

  static GammaGroupoid singleton();

  std::size_t order() const noexcept { return order_; }
  std::size_t gammas() const noexcept { return gammas_; }

  // Checked evaluation of a g b.
  Element apply(Element a, GammaIndex g, Element b) const;

  // Unchecked evaluation for inner loops.
  Element mul(Element a, GammaIndex g, Element b) const noexcept {
    return cells_[(g * order_ + a) * order_ + b];
  }

  std::span<const std::uint8_t> cells() const noexcept { return cells_; }
  std::vector<Element> cell_vector() const;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<std::string>& gamma_names() const noexcept { return gamma_names_; }
  const std::string& label(Element e) const;
  const std::string& gamma_name(GammaIndex g) const;

  Subset carrier() const { return Subset::full(order_); }

  // {a g b : g in Gamma}
  std::uint64_t pair_mask(Element a, Element b) const noexcept { return pair_masks_[a * order_ + b]; }
  // a Gamma G
  std::uint64_t row_mask(Element a) const noexcept { return row_masks_[a]; }
  // G Gamma b
  std::uint64_t column_mask(Element b) const noexcept { return column_masks_[b]; }

  bool same_tables(const GammaGroupoid& other) const noexcept {
    return order_ == other.order_ && gammas_ == other.gammas_ && cells_ == other.cells_;
  }

  bool operator==(const GammaGroupoid& other) const {
    return same_tables(other) && labels_ == other.labels_ && gamma_names_ == other.gamma_names_;
  }

 private:
  std::size_t order_;
  std::size_t gammas_;
  std::vector<std::uint8_t> cells_;
  std::vector<std::string> labels_;
  std::vector<std::string> gamma_names_;
  std::vector<std::uint64_t> pair_masks_;
  std::vector<std::uint64_t> row_masks_;
  std::vector<std::uint64_t> column_masks_;
};

// "1" ... "n"
std::vector<std::string> default_labels(std::size_t order);
// "a" ... "z", then "g27", "g28", ...
std::vector<std::string> default_gamma_names(std::size_t gammas);

}  // namespace gag
