#include "gag/ideals.hpp"

#include <string>
#include <unordered_map>

#include "gag/errors.hpp"
#include "gag/laws.hpp"

namespace gag {

namespace {

void require_width(const GammaGroupoid& G, const Subset& S) {
  if (S.width() != G.order()) {
    throw ContractViolation("subset width " + std::to_string(S.width()) + " does not match carrier size " +
                            std::to_string(G.order()));
  }
}

void require_enumerable(const GammaGroupoid& G, std::size_t max_order) {
  if (G.order() > max_order) {
    throw LimitExceeded("subset enumeration refused: carrier size " + std::to_string(G.order()) +
                        " exceeds limit " + std::to_string(max_order));
  }
}

// First (a, g, b) with a in A, b in B, a g b outside S.
std::optional<Witness> pair_escape(const GammaGroupoid& G, const Subset& A, const Subset& B, const Subset& S) {
  for (Element a : A) {
    for (Element b : B) {
      for (GammaIndex g = 0; g < G.gammas(); ++g) {
        if (!S.contains(G.mul(a, g, b))) {
          return Witness{{Token::element(a), Token::gamma(g), Token::element(b)}, {}};
        }
      }
    }
  }
  return std::nullopt;
}

// First (a, g, b, d, c) with a in A, b in B, c in C, (a g b) d c outside S.
std::optional<Witness> triple_escape(const GammaGroupoid& G, const Subset& A, const Subset& B, const Subset& C,
                                          const Subset& S) {
  for (Element a : A) {
    for (Element b : B) {
      for (Element c : C) {
        for (GammaIndex g = 0; g < G.gammas(); ++g) {
          for (GammaIndex d = 0; d < G.gammas(); ++d) {
            if (!S.contains(G.mul(G.mul(a, g, b), d, c))) {
              return Witness{{Token::element(a), Token::gamma(g), Token::element(b), Token::gamma(d),
                              Token::element(c)},
                             {}};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

// First factorisation a g b = z with a in A, b in B.
std::optional<std::array<std::size_t, 3>> factor(const GammaGroupoid& G, const Subset& A, const Subset& B,
                                                 Element z) {
  for (Element a : A) {
    for (Element b : B) {
      for (GammaIndex g = 0; g < G.gammas(); ++g) {
        if (G.mul(a, g, b) == z) return std::array<std::size_t, 3>{a, g, b};
      }
    }
  }
  return std::nullopt;
}

IdealVerdict fail(Clause clause, std::optional<Witness> witness = std::nullopt) {
  return {false, clause, std::move(witness)};
}

bool closed_under_product(const GammaGroupoid& G, const Subset& S) {
  return subset_product(G, S, S).is_subset_of(S);
}

}  // namespace

std::string_view to_string(IdealKind kind) {
  switch (kind) {
    case IdealKind::SubGroupoid: return "sub";
    case IdealKind::Left: return "left";
    case IdealKind::Right: return "right";
    case IdealKind::TwoSided: return "two-sided";
    case IdealKind::Bi: return "bi";
    case IdealKind::Quasi: return "quasi";
    case IdealKind::Interior: return "interior";
  }
  return "?";
}

std::optional<IdealKind> ideal_kind_from_string(std::string_view name) {
  for (IdealKind kind : kAllIdealKinds) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

std::string_view to_string(Clause clause) {
  switch (clause) {
    case Clause::NonEmpty: return "non-empty";
    case Clause::SubGroupoid: return "sub-groupoid";
    case Clause::LeftAbsorb: return "left-absorb";
    case Clause::RightAbsorb: return "right-absorb";
    case Clause::BiAbsorb: return "bi-absorb";
    case Clause::QuasiIntersection: return "quasi-intersection";
    case Clause::InteriorAbsorb: return "interior-absorb";
    case Clause::Prime: return "prime";
    case Clause::Semiprime: return "semiprime";
  }
  return "?";
}

bool satisfies(const GammaGroupoid& G, const Subset& S, IdealKind kind) {
  require_width(G, S);
  if (S.is_empty()) return false;
  const Subset all = G.carrier();
  switch (kind) {
    case IdealKind::SubGroupoid: return closed_under_product(G, S);
    case IdealKind::Left: return subset_product(G, all, S).is_subset_of(S);
    case IdealKind::Right: return subset_product(G, S, all).is_subset_of(S);
    case IdealKind::TwoSided:
      return subset_product(G, all, S).is_subset_of(S) && subset_product(G, S, all).is_subset_of(S);
    case IdealKind::Bi:
      return closed_under_product(G, S) && subset_product(G, subset_product(G, S, all), S).is_subset_of(S);
    case IdealKind::Quasi:
      return closed_under_product(G, S) &&
             (subset_product(G, all, S) & subset_product(G, S, all)).is_subset_of(S);
    case IdealKind::Interior:
      return closed_under_product(G, S) && subset_product(G, subset_product(G, all, S), all).is_subset_of(S);
  }
  return false;
}

IdealVerdict is_ideal(const GammaGroupoid& G, const Subset& S, IdealKind kind) {
  require_width(G, S);
  if (S.is_empty()) return fail(Clause::NonEmpty);
  const Subset all = G.carrier();

  const bool needs_closure =
      kind == IdealKind::SubGroupoid || kind == IdealKind::Bi || kind == IdealKind::Quasi || kind == IdealKind::Interior;
  if (needs_closure) {
    if (auto w = pair_escape(G, S, S, S)) return fail(Clause::SubGroupoid, std::move(w));
  }
  if (kind == IdealKind::Left || kind == IdealKind::TwoSided) {
    if (auto w = pair_escape(G, all, S, S)) return fail(Clause::LeftAbsorb, std::move(w));
  }
  if (kind == IdealKind::Right || kind == IdealKind::TwoSided) {
    if (auto w = pair_escape(G, S, all, S)) return fail(Clause::RightAbsorb, std::move(w));
  }
  if (kind == IdealKind::Bi) {
    if (auto w = triple_escape(G, S, all, S, S)) return fail(Clause::BiAbsorb, std::move(w));
  }
  if (kind == IdealKind::Interior) {
    if (auto w = triple_escape(G, all, S, all, S)) return fail(Clause::InteriorAbsorb, std::move(w));
  }
  if (kind == IdealKind::Quasi) {
    const Subset escaped = (subset_product(G, all, S) & subset_product(G, S, all)) - S;
    if (!escaped.is_empty()) {
      const Element z = *escaped.begin();
      const auto left = factor(G, all, S, z);
      const auto right = factor(G, S, all, z);
      return fail(Clause::QuasiIntersection,
                  Witness{{Token::element((*left)[0]), Token::gamma((*left)[1]), Token::element((*left)[2]),
                           Token::element((*right)[0]), Token::gamma((*right)[1]), Token::element((*right)[2])},
                          {}});
    }
  }
  return {true, std::nullopt, std::nullopt};
}

std::vector<Subset> enumerate_ideals(const GammaGroupoid& G, IdealKind kind, std::size_t max_order) {
  require_enumerable(G, max_order);
  const std::size_t n = G.order();
  std::vector<Subset> out;
  const std::uint64_t last = Subset::full_mask(n);
  for (std::uint64_t bits = 1;; ++bits) {
    Subset S(n, bits);
    if (satisfies(G, S, kind)) out.push_back(S);
    if (bits == last) break;
  }
  return out;
}

Subset ideal_closure(const GammaGroupoid& G, const Subset& A, IdealKind kind) {
  require_width(G, A);
  if (A.is_empty()) throw ContractViolation("ideal_closure of the empty set");
  if (kind != IdealKind::SubGroupoid && kind != IdealKind::Left && kind != IdealKind::Right &&
      kind != IdealKind::TwoSided) {
    throw ContractViolation("ideal_closure supports sub, left, right and two-sided only");
  }
  const Subset all = G.carrier();
  Subset S = A;
  for (;;) {
    Subset next = S;
    if (kind == IdealKind::SubGroupoid) next |= subset_product(G, S, S);
    if (kind == IdealKind::Left || kind == IdealKind::TwoSided) next |= subset_product(G, all, S);
    if (kind == IdealKind::Right || kind == IdealKind::TwoSided) next |= subset_product(G, S, all);
    if (next == S) return S;
    S = next;
  }
}

bool is_idempotent(const GammaGroupoid& G, const Subset& A) {
  require_width(G, A);
  return subset_product(G, A, A) == A;
}

IdealVerdict is_prime(const GammaGroupoid& G, const Subset& P, std::size_t max_order) {
  if (auto v = is_ideal(G, P, IdealKind::TwoSided); !v) return v;
  const auto ideals = enumerate_ideals(G, IdealKind::TwoSided, max_order);
  for (const Subset& A : ideals) {
    if (A.is_subset_of(P)) continue;
    for (const Subset& B : ideals) {
      if (B.is_subset_of(P)) continue;
      if (subset_product(G, A, B).is_subset_of(P)) return fail(Clause::Prime, Witness{{}, {A, B}});
    }
  }
  return {true, std::nullopt, std::nullopt};
}

IdealVerdict is_semiprime(const GammaGroupoid& G, const Subset& P, std::size_t max_order) {
  if (auto v = is_ideal(G, P, IdealKind::TwoSided); !v) return v;
  for (const Subset& A : enumerate_ideals(G, IdealKind::TwoSided, max_order)) {
    if (!A.is_subset_of(P) && subset_product(G, A, A).is_subset_of(P)) {
      return fail(Clause::Semiprime, Witness{{}, {A}});
    }
  }
  return {true, std::nullopt, std::nullopt};
}

std::optional<Witness> product_escape(const GammaGroupoid& G, const Subset& A, const Subset& B, const Subset& S) {
  require_width(G, A);
  require_width(G, B);
  require_width(G, S);
  return pair_escape(G, A, B, S);
}

std::optional<Witness> product_escape(const GammaGroupoid& G, const Subset& A, const Subset& B, const Subset& C,
                                      const Subset& S) {
  require_width(G, A);
  require_width(G, B);
  require_width(G, C);
  require_width(G, S);
  return triple_escape(G, A, B, C, S);
}

Subset principal_left(const GammaGroupoid& G, Element a) {
  if (a >= G.order()) throw ContractViolation("element " + std::to_string(a) + " out of range");
  return Subset(G.order(), G.column_mask(a));
}

SemilatticeReport build_ideal_semilattice(const GammaGroupoid& G, std::size_t max_order) {
  SemilatticeReport report;
  report.ideals = enumerate_ideals(G, IdealKind::TwoSided, max_order);
  report.regular = is_regular(G);

  const auto& ideals = report.ideals;
  const std::size_t k = ideals.size();
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < k; ++i) index.emplace(ideals[i].bits(), i);

  std::vector<std::vector<Subset>> products(k);
  report.table.assign(k, std::vector<std::optional<std::size_t>>(k));
  for (std::size_t i = 0; i < k; ++i) {
    products[i].reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
      products[i].push_back(subset_product(G, ideals[i], ideals[j]));
      if (auto it = index.find(products[i][j].bits()); it != index.end()) {
        report.table[i][j] = it->second;
      } else {
        report.closed = false;
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (products[i][i] != ideals[i]) report.idempotent = false;
    for (std::size_t j = 0; j < k; ++j) {
      if (products[i][j] != products[j][i]) report.commutative = false;
      for (std::size_t l = 0; l < k && report.associative; ++l) {
        if (subset_product(G, products[i][j], ideals[l]) != subset_product(G, ideals[i], products[j][l])) {
          report.associative = false;
        }
      }
    }
  }
  return report;
}

}  // namespace gag
