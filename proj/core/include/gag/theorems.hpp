#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gag/groupoid.hpp"
#include "gag/ideals.hpp"
#include "gag/witness.hpp"

namespace gag {

// Executable statements about Gamma-AG-groupoids. Each id names one claim;
// verify() checks its hypotheses, then its conclusion exhaustively.
enum class LemmaId {
  LeftIdentityCollapse,
  RightIdentity,
  UnionConstruction,
  Medial,
  Paramedial,
  OneSidedQuasi,
  OneSidedBi,
  IdealBi,
  BiProduct,
  IdempotentQuasiBi,
  IdealInterior,
  InteriorIffRight,
  AbsorptionRegular,
  PrincipalBi,
  RightPrincipalBiRegular,
  BiSandwichRegular,
  SquareRegular,
  LeftIffRightRegular,
  RegularIffIdempotentLeft,
  SemiprimeRegular,
  Semilattice,
  CommutingIdealsRegular,
  IdempotentIdealsRegular,
  PrincipalLeft,
};

inline constexpr std::array kAllLemmas = {
    LemmaId::LeftIdentityCollapse,    LemmaId::RightIdentity,        LemmaId::UnionConstruction,
    LemmaId::Medial,                  LemmaId::Paramedial,           LemmaId::OneSidedQuasi,
    LemmaId::OneSidedBi,              LemmaId::IdealBi,              LemmaId::BiProduct,
    LemmaId::IdempotentQuasiBi,       LemmaId::IdealInterior,        LemmaId::InteriorIffRight,
    LemmaId::AbsorptionRegular,       LemmaId::PrincipalBi,          LemmaId::RightPrincipalBiRegular,
    LemmaId::BiSandwichRegular,       LemmaId::SquareRegular,        LemmaId::LeftIffRightRegular,
    LemmaId::RegularIffIdempotentLeft, LemmaId::SemiprimeRegular,    LemmaId::Semilattice,
    LemmaId::CommutingIdealsRegular,  LemmaId::IdempotentIdealsRegular, LemmaId::PrincipalLeft,
};

// Stable kebab-case names, e.g. "l-medial", "t-semilattice".
std::string_view to_string(LemmaId id);
std::optional<LemmaId> lemma_from_string(std::string_view name);
// One-line description of what is checked.
std::string_view describe(LemmaId id);

enum class Hypothesis { LeftInvertive, AGStarStar, Regular, LeftIdentity, RightIdentity };

std::string_view to_string(Hypothesis h);
std::vector<Hypothesis> hypotheses(LemmaId id);
bool satisfies(const GammaGroupoid& G, Hypothesis h);

enum class LemmaStatus { Holds, Counterexample, NotApplicable };
std::string_view to_string(LemmaStatus status);

struct LemmaVerdict {
  LemmaStatus status = LemmaStatus::Holds;
  // Set for NotApplicable: the first hypothesis G failed.
  std::optional<Hypothesis> hypothesis_failed;
  // Set for Counterexample: which part of the conclusion failed.
  std::string clause;
  std::optional<Witness> witness;
  // Observations that are reported but do not count as a counterexample.
  std::vector<std::string> notes;
};

enum class Gating {
  Enforce,  // NotApplicable unless every hypothesis holds
  Relax,    // check the conclusion regardless
};

LemmaVerdict verify(const GammaGroupoid& G, LemmaId id, Gating gating = Gating::Enforce,
                    std::size_t max_order = kDefaultEnumerationLimit);

std::vector<std::pair<LemmaId, LemmaVerdict>> verify_all(const GammaGroupoid& G,
                                                         std::size_t max_order = kDefaultEnumerationLimit);

// A finite stream of structures: calls the sink once per structure, in order,
// and stops as soon as the sink returns false.
using StructureSink = std::function<bool(const GammaGroupoid&)>;
using StructureSource = std::function<void(const StructureSink&)>;

struct HuntResult {
  GammaGroupoid structure;
  LemmaVerdict verdict;
  std::size_t position;  // 0-based index in the stream
};

struct HuntStats {
  std::size_t examined = 0;
  std::size_t applicable = 0;
};

// First structure in the stream whose verdict is Counterexample.
std::optional<HuntResult> hunt(const StructureSource& source, LemmaId id, Gating gating = Gating::Enforce,
                               HuntStats* stats = nullptr);
std::optional<HuntResult> hunt(std::span<const GammaGroupoid> structures, LemmaId id,
                               Gating gating = Gating::Enforce, HuntStats* stats = nullptr);

}  // namespace gag
