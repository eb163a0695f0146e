#include "gag/laws.hpp"

#include <string>

#include "gag/errors.hpp"

namespace gag {

namespace {

// Evaluates both sides with unchecked table lookups; arity already validated.
std::pair<Element, Element> sides(const GammaGroupoid& G, Law law, const Element* e, const GammaIndex* g) {
  switch (law) {
    case Law::LeftInvertive:
      return {G.mul(G.mul(e[0], g[0], e[1]), g[1], e[2]), G.mul(G.mul(e[2], g[0], e[1]), g[1], e[0])};
    case Law::AGStarStar:
      return {G.mul(e[0], g[0], G.mul(e[1], g[1], e[2])), G.mul(e[1], g[0], G.mul(e[0], g[1], e[2]))};
    case Law::Medial:
      return {G.mul(G.mul(e[0], g[0], e[1]), g[1], G.mul(e[2], g[2], e[3])),
              G.mul(G.mul(e[0], g[0], e[2]), g[1], G.mul(e[1], g[2], e[3]))};
    case Law::Paramedial:
      return {G.mul(G.mul(e[0], g[0], e[1]), g[1], G.mul(e[2], g[2], e[3])),
              G.mul(G.mul(e[3], g[0], e[2]), g[1], G.mul(e[1], g[2], e[0]))};
    case Law::Associative:
      return {G.mul(G.mul(e[0], g[0], e[1]), g[1], e[2]), G.mul(e[0], g[0], G.mul(e[1], g[1], e[2]))};
    case Law::Commutative:
      return {G.mul(e[0], g[0], e[1]), G.mul(e[1], g[0], e[0])};
  }
  return {0, 0};
}

}  // namespace

std::string_view to_string(Law law) {
  switch (law) {
    case Law::LeftInvertive: return "left-invertive";
    case Law::AGStarStar: return "ag-star-star";
    case Law::Medial: return "medial";
    case Law::Paramedial: return "paramedial";
    case Law::Associative: return "associative";
    case Law::Commutative: return "commutative";
  }
  return "?";
}

std::optional<Law> law_from_string(std::string_view name) {
  for (Law law : kAllLaws) {
    if (to_string(law) == name) return law;
  }
  return std::nullopt;
}

LawArity arity(Law law) {
  switch (law) {
    case Law::LeftInvertive:
    case Law::AGStarStar:
    case Law::Associative: return {3, 2};
    case Law::Medial:
    case Law::Paramedial: return {4, 3};
    case Law::Commutative: return {2, 1};
  }
  return {0, 0};
}

std::pair<Element, Element> law_sides(const GammaGroupoid& G, Law law, std::span<const Element> elements,
                                      std::span<const GammaIndex> gammas) {
  const LawArity ar = arity(law);
  if (elements.size() != ar.elements || gammas.size() != ar.gammas) {
    throw ContractViolation(std::string(to_string(law)) + " takes " + std::to_string(ar.elements) +
                            " elements and " + std::to_string(ar.gammas) + " gammas");
  }
  for (Element e : elements) {
    if (e >= G.order()) throw ContractViolation("element " + std::to_string(e) + " out of range");
  }
  for (GammaIndex g : gammas) {
    if (g >= G.gammas()) throw ContractViolation("gamma " + std::to_string(g) + " out of range");
  }
  return sides(G, law, elements.data(), gammas.data());
}

std::pair<Element, Element> law_sides(const GammaGroupoid& G, Law law, const std::vector<Token>& tuple) {
  std::vector<Element> elements;
  std::vector<GammaIndex> gammas;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    const Token::Kind expected = i % 2 == 0 ? Token::Kind::Element : Token::Kind::Gamma;
    if (tuple[i].kind != expected) throw ContractViolation("witness tuple is not interleaved");
    (expected == Token::Kind::Element ? elements : gammas).push_back(tuple[i].index);
  }
  return law_sides(G, law, elements, gammas);
}

LawVerdict check_law(const GammaGroupoid& G, Law law) {
  const LawArity ar = arity(law);
  const std::size_t n = G.order();
  const std::size_t m = G.gammas();
  std::vector<Element> e(ar.elements, 0);
  std::vector<GammaIndex> g(ar.gammas, 0);

  // Odometer: the last gamma is the fastest digit, the first element the slowest.
  for (;;) {
    auto [lhs, rhs] = sides(G, law, e.data(), g.data());
    if (lhs != rhs) return {false, Witness{interleave(e, g), {}}};

    std::size_t pos = ar.gammas;
    bool carried = true;
    while (carried && pos > 0) {
      --pos;
      if (++g[pos] < m) carried = false;
      else g[pos] = 0;
    }
    pos = ar.elements;
    while (carried && pos > 0) {
      --pos;
      if (++e[pos] < n) carried = false;
      else e[pos] = 0;
    }
    if (carried) break;
  }
  return {true, std::nullopt};
}

Subset identities(const GammaGroupoid& G, Side side) {
  const std::size_t n = G.order();
  Subset out(n);
  for (Element e = 0; e < n; ++e) {
    bool ok = true;
    for (GammaIndex g = 0; ok && g < G.gammas(); ++g) {
      for (Element a = 0; ok && a < n; ++a) {
        ok = (side == Side::Left ? G.mul(e, g, a) : G.mul(a, g, e)) == a;
      }
    }
    if (ok) out.insert(e);
  }
  return out;
}

Subset subset_product(const GammaGroupoid& G, const Subset& A, const Subset& B) {
  const std::size_t n = G.order();
  if (A.width() != n || B.width() != n) {
    throw ContractViolation("subset width does not match carrier size " + std::to_string(n));
  }
  std::uint64_t bits = 0;
  if (A.is_full()) {
    for (Element b : B) bits |= G.column_mask(b);
  } else if (B.is_full()) {
    for (Element a : A) bits |= G.row_mask(a);
  } else {
    for (Element a : A) {
      for (Element b : B) bits |= G.pair_mask(a, b);
    }
  }
  return Subset(n, bits);
}

std::optional<RegularityWitness> regular_witness(const GammaGroupoid& G, Element a) {
  if (a >= G.order()) throw ContractViolation("element " + std::to_string(a) + " out of range");
  for (Element x = 0; x < G.order(); ++x) {
    for (GammaIndex beta = 0; beta < G.gammas(); ++beta) {
      const Element ax = G.mul(a, beta, x);
      for (GammaIndex gamma = 0; gamma < G.gammas(); ++gamma) {
        if (G.mul(ax, gamma, a) == a) return RegularityWitness{x, beta, gamma};
      }
    }
  }
  return std::nullopt;
}

bool is_regular(const GammaGroupoid& G) {
  for (Element a = 0; a < G.order(); ++a) {
    if (!regular_witness(G, a)) return false;
  }
  return true;
}

}  // namespace gag
