#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "gag/groupoid.hpp"
#include "gag/subset.hpp"
#include "gag/witness.hpp"

namespace gag {

enum class Law {
  LeftInvertive,  // (a g b) d c = (c g b) d a
  AGStarStar,     // a g (b d c) = b g (a d c)
  Medial,         // (x a y) b (l g m) = (x a l) b (y g m)
  Paramedial,     // (x a y) b (l g m) = (m a l) b (y g x)
  Associative,    // (a g b) d c = a g (b d c)
  Commutative,    // a g b = b g a
};

inline constexpr std::array kAllLaws = {Law::LeftInvertive, Law::AGStarStar, Law::Medial,
                                        Law::Paramedial,    Law::Associative, Law::Commutative};

std::string_view to_string(Law law);
std::optional<Law> law_from_string(std::string_view name);

struct LawArity {
  std::size_t elements;
  std::size_t gammas;
};
LawArity arity(Law law);

struct LawVerdict {
  bool holds = true;
  // Present iff holds is false; interleaved (e0, g0, e1, g1, ...).
  std::optional<Witness> witness;

  explicit operator bool() const noexcept { return holds; }
};

// Both sides of `law` at one instantiation. Throws ContractViolation on an
// arity mismatch or an out-of-range index.
std::pair<Element, Element> law_sides(const GammaGroupoid& G, Law law, std::span<const Element> elements,
                                      std::span<const GammaIndex> gammas);

// Same, taking an interleaved tuple as produced in LawVerdict::witness.
std::pair<Element, Element> law_sides(const GammaGroupoid& G, Law law, const std::vector<Token>& tuple);

// Exhaustive check. The witness is the first violation with element variables
// varying slowest and gamma variables fastest, each in index order.
LawVerdict check_law(const GammaGroupoid& G, Law law);

enum class Side { Left, Right };

// Left: {e : e g a = a for all a, g}. Right: {e : a g e = a for all a, g}.
Subset identities(const GammaGroupoid& G, Side side);

// A Gamma B = {a g b : a in A, g in Gamma, b in B}.
Subset subset_product(const GammaGroupoid& G, const Subset& A, const Subset& B);

struct RegularityWitness {
  Element x;
  GammaIndex beta;
  GammaIndex gamma;

  bool operator==(const RegularityWitness&) const = default;
};

// First (x, beta, gamma) in lexicographic order with (a beta x) gamma a = a.
std::optional<RegularityWitness> regular_witness(const GammaGroupoid& G, Element a);
bool is_regular(const GammaGroupoid& G);

}  // namespace gag
