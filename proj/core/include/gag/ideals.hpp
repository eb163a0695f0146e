#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "gag/groupoid.hpp"
#include "gag/subset.hpp"
#include "gag/witness.hpp"

namespace gag {

enum class IdealKind { SubGroupoid, Left, Right, TwoSided, Bi, Quasi, Interior };

inline constexpr std::array kAllIdealKinds = {IdealKind::SubGroupoid, IdealKind::Left,  IdealKind::Right,
                                              IdealKind::TwoSided,    IdealKind::Bi,    IdealKind::Quasi,
                                              IdealKind::Interior};

std::string_view to_string(IdealKind kind);
std::optional<IdealKind> ideal_kind_from_string(std::string_view name);

// The clause a subset failed. Prime and Semiprime are only produced by
// is_prime / is_semiprime.
enum class Clause {
  NonEmpty,
  SubGroupoid,
  LeftAbsorb,
  RightAbsorb,
  BiAbsorb,
  QuasiIntersection,
  InteriorAbsorb,
  Prime,
  Semiprime,
};

std::string_view to_string(Clause clause);

// Witness tuples by clause:
//   SubGroupoid, LeftAbsorb, RightAbsorb   (a, g, b)          with a g b outside S
//   BiAbsorb, InteriorAbsorb               (a, g, b, d, c)    with (a g b) d c outside S
//   QuasiIntersection                      (x, g, s, t, d, y) with x g s = t d y outside S
//   Prime                                  subsets {A, B}
//   Semiprime                              subsets {A}
struct IdealVerdict {
  bool holds = true;
  std::optional<Clause> failed_clause;
  std::optional<Witness> witness;

  explicit operator bool() const noexcept { return holds; }
};

inline constexpr std::size_t kDefaultEnumerationLimit = 20;

IdealVerdict is_ideal(const GammaGroupoid& G, const Subset& S, IdealKind kind);

// Boolean form of is_ideal without witness construction.
bool satisfies(const GammaGroupoid& G, const Subset& S, IdealKind kind);

// Every nonempty subset S with satisfies(G, S, kind), ascending by bit value.
// Throws LimitExceeded when G.order() > max_order.
std::vector<Subset> enumerate_ideals(const GammaGroupoid& G, IdealKind kind,
                                     std::size_t max_order = kDefaultEnumerationLimit);

// Least superset of A closed under the clauses of `kind`, which must be one of
// SubGroupoid, Left, Right, TwoSided. Throws ContractViolation for an empty A
// or any other kind.
Subset ideal_closure(const GammaGroupoid& G, const Subset& A, IdealKind kind);

bool is_idempotent(const GammaGroupoid& G, const Subset& A);

// P must be a two-sided ideal; otherwise the verdict fails with the clause
// that is_ideal(G, P, TwoSided) reported. A and B range over all two-sided
// ideals of G.
IdealVerdict is_prime(const GammaGroupoid& G, const Subset& P, std::size_t max_order = kDefaultEnumerationLimit);
IdealVerdict is_semiprime(const GammaGroupoid& G, const Subset& P,
                          std::size_t max_order = kDefaultEnumerationLimit);

// First (a, g, b) with a in A, b in B and a g b outside S; elements vary
// slowest, gammas fastest.
std::optional<Witness> product_escape(const GammaGroupoid& G, const Subset& A, const Subset& B, const Subset& S);
// First (a, g, b, d, c) with a in A, b in B, c in C and (a g b) d c outside S.
std::optional<Witness> product_escape(const GammaGroupoid& G, const Subset& A, const Subset& B, const Subset& C,
                                      const Subset& S);

// G Gamma {a}
Subset principal_left(const GammaGroupoid& G, Element a);

struct SemilatticeReport {
  // All two-sided ideals, ascending.
  std::vector<Subset> ideals;
  // table[i][j] indexes ideals[i] Gamma ideals[j] in `ideals`, or is empty
  // when that product is not itself a two-sided ideal.
  std::vector<std::vector<std::optional<std::size_t>>> table;
  bool closed = true;
  bool commutative = true;
  bool associative = true;
  bool idempotent = true;
  bool regular = false;

  bool is_semilattice() const noexcept { return closed && commutative && associative && idempotent; }
};

SemilatticeReport build_ideal_semilattice(const GammaGroupoid& G, std::size_t max_order = kDefaultEnumerationLimit);

}  // namespace gag
