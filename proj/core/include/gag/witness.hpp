#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gag/groupoid.hpp"
#include "gag/subset.hpp"

namespace gag {

// One position of a witness tuple: either a carrier element or a gamma.
struct Token {
  enum class Kind : std::uint8_t { Element, Gamma };

  Kind kind;
  std::size_t index;

  static Token element(Element e) { return {Kind::Element, e}; }
  static Token gamma(GammaIndex g) { return {Kind::Gamma, g}; }

  bool operator==(const Token&) const = default;
};

// Concrete evidence that an identity or a containment fails. Laws only use
// the tuple; ideal and lemma verdicts may also name the subsets involved.
struct Witness {
  std::vector<Token> tuple;
  std::vector<Subset> subsets;

  bool operator==(const Witness&) const = default;
};

// Interleaves elements and gammas: (e0, g0, e1, g1, e2, ...).
std::vector<Token> interleave(const std::vector<Element>& elements, const std::vector<GammaIndex>& gammas);

// "(1, α, 2, β, 3)" using the structure's display labels.
std::string format_tuple(const GammaGroupoid& G, const std::vector<Token>& tuple);
// "{1,2,3}"
std::string format_subset(const GammaGroupoid& G, const Subset& s);

}  // namespace gag
