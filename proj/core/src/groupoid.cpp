#include "gag/groupoid.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "gag/errors.hpp"
#include "gag/witness.hpp"

namespace gag {

namespace {

void check_names(const std::vector<std::string>& names, std::size_t expected, const char* what) {
  if (names.size() != expected) {
    throw ContractViolation(std::string(what) + ": expected " + std::to_string(expected) + " names, got " +
                            std::to_string(names.size()));
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : names) {
    if (name.empty()) throw ContractViolation(std::string(what) + ": empty name");
    if (std::any_of(name.begin(), name.end(),
                    [](unsigned char c) { return c == '#' || c == ' ' || c == '\t' || c == '\n' || c == '\r' ||
                                                 c == '\v' || c == '\f'; })) {
      throw ContractViolation(std::string(what) + ": name '" + name + "' contains whitespace or '#'");
    }
    if (!seen.insert(name).second) throw ContractViolation(std::string(what) + ": duplicate name '" + name + "'");
  }
}

}  // namespace

std::vector<std::string> default_labels(std::size_t order) {
  std::vector<std::string> out;
  out.reserve(order);
  for (std::size_t i = 0; i < order; ++i) out.push_back(std::to_string(i + 1));
  return out;
}

std::vector<std::string> default_gamma_names(std::size_t gammas) {
  std::vector<std::string> out;
  out.reserve(gammas);
  for (std::size_t i = 0; i < gammas; ++i) {
    out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "g" + std::to_string(i + 1));
  }
  return out;
}

GammaGroupoid::GammaGroupoid(std::size_t order, std::size_t gammas, std::vector<Element> cells,
                             std::vector<std::string> labels, std::vector<std::string> gamma_names)
    : order_(order), gammas_(gammas), labels_(std::move(labels)), gamma_names_(std::move(gamma_names)) {
  if (order_ == 0 || order_ > kMaxOrder) {
    throw ContractViolation("carrier size must be in [1, " + std::to_string(kMaxOrder) + "], got " +
                            std::to_string(order_));
  }
  if (gammas_ == 0) throw ContractViolation("gamma count must be at least 1");
  if (cells.size() != gammas_ * order_ * order_) {
    throw ContractViolation("expected " + std::to_string(gammas_ * order_ * order_) + " table cells, got " +
                            std::to_string(cells.size()));
  }
  if (labels_.empty()) labels_ = default_labels(order_);
  if (gamma_names_.empty()) gamma_names_ = default_gamma_names(gammas_);
  check_names(labels_, order_, "labels");
  check_names(gamma_names_, gammas_, "gamma names");

  cells_.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i] >= order_) {
      throw ContractViolation("table cell " + std::to_string(i) + " holds " + std::to_string(cells[i]) +
                              ", outside carrier of size " + std::to_string(order_));
    }
    cells_.push_back(static_cast<std::uint8_t>(cells[i]));
  }

  pair_masks_.assign(order_ * order_, 0);
  row_masks_.assign(order_, 0);
  column_masks_.assign(order_, 0);
  for (GammaIndex g = 0; g < gammas_; ++g) {
    for (Element a = 0; a < order_; ++a) {
      for (Element b = 0; b < order_; ++b) {
        const std::uint64_t bit = std::uint64_t{1} << mul(a, g, b);
        pair_masks_[a * order_ + b] |= bit;
        row_masks_[a] |= bit;
        column_masks_[b] |= bit;
      }
    }
  }
}

GammaGroupoid GammaGroupoid::singleton() { return GammaGroupoid(1, 1, {0}); }

Element GammaGroupoid::apply(Element a, GammaIndex g, Element b) const {
  if (a >= order_ || b >= order_ || g >= gammas_) {
    throw ContractViolation("apply(" + std::to_string(a) + ", " + std::to_string(g) + ", " + std::to_string(b) +
                            ") out of range for order " + std::to_string(order_) + ", gammas " +
                            std::to_string(gammas_));
  }
  return mul(a, g, b);
}

std::vector<Element> GammaGroupoid::cell_vector() const { return {cells_.begin(), cells_.end()}; }

const std::string& GammaGroupoid::label(Element e) const {
  if (e >= order_) throw ContractViolation("element " + std::to_string(e) + " out of range");
  return labels_[e];
}

const std::string& GammaGroupoid::gamma_name(GammaIndex g) const {
  if (g >= gammas_) throw ContractViolation("gamma " + std::to_string(g) + " out of range");
  return gamma_names_[g];
}

std::vector<Token> interleave(const std::vector<Element>& elements, const std::vector<GammaIndex>& gammas) {
  std::vector<Token> out;
  out.reserve(elements.size() + gammas.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    out.push_back(Token::element(elements[i]));
    if (i < gammas.size()) out.push_back(Token::gamma(gammas[i]));
  }
  return out;
}

std::string format_tuple(const GammaGroupoid& G, const std::vector<Token>& tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i > 0) out += ", ";
    out += tuple[i].kind == Token::Kind::Element ? G.label(tuple[i].index) : G.gamma_name(tuple[i].index);
  }
  return out + ")";
}

std::string format_subset(const GammaGroupoid& G, const Subset& s) {
  std::string out = "{";
  bool first = true;
  for (Element e : s) {
    if (!first) out += ",";
    out += G.label(e);
    first = false;
  }
  return out + "}";
}

}  // namespace gag
