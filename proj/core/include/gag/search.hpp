#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gag/groupoid.hpp"
#include "gag/theorems.hpp"

namespace gag {

enum class Filter { LeftInvertive, AGStarStar, Regular, HasLeftIdentity, NoLeftIdentity, NonAssociative };

inline constexpr std::array kAllFilters = {Filter::LeftInvertive,   Filter::AGStarStar,     Filter::Regular,
                                           Filter::HasLeftIdentity, Filter::NoLeftIdentity, Filter::NonAssociative};

std::string_view to_string(Filter f);
std::optional<Filter> filter_from_string(std::string_view name);

// Orders / gamma counts above these need SearchSpec::allow_large.
inline constexpr std::size_t kSearchOrderGuard = 4;
inline constexpr std::size_t kSearchGammaGuard = 3;
// canonical_form refuses larger carriers.
inline constexpr std::size_t kCanonicalOrderGuard = 8;

struct SearchSpec {
  std::size_t order = 1;
  std::size_t gammas = 1;
  std::vector<Filter> filters;
  bool up_to_iso = false;
  // With up_to_iso: relabel gammas as well as elements.
  bool permute_gammas = true;
  std::optional<std::uint64_t> limit;
  bool allow_large = false;
};

// Throws ContractViolation for inconsistent specs and LimitExceeded when the
// size guard applies.
void validate(const SearchSpec& spec);

// Depth-first, cell by cell in storage order, values ascending, so structures
// arrive in lexicographic order of their cell sequence. Law filters prune as
// soon as an instance is fully assigned; every filter is re-checked at the
// leaf. Stops early when the sink returns false or the limit is reached.
// Emitted structures carry default labels and gamma names.
void for_each_structure(const SearchSpec& spec, const StructureSink& sink);

std::vector<GammaGroupoid> enumerate_structures(const SearchSpec& spec);

std::uint64_t count(const SearchSpec& spec);

StructureSource structure_source(SearchSpec spec);

// Filters matching the hypotheses of a lemma that can be expressed as search
// filters (right identity cannot; verify() still gates on it).
std::vector<Filter> hypothesis_filters(LemmaId id);

// Lexicographically least cell sequence over all relabelings of the carrier
// (and, if permute_gammas, of the gammas). Result has default labels and
// gamma names. Throws LimitExceeded when order > kCanonicalOrderGuard.
GammaGroupoid canonical_form(const GammaGroupoid& G, bool permute_gammas = true);

// The structure obtained by renaming element a to carrier[a] and gamma g to
// gammas[g]. Both must be permutations.
GammaGroupoid relabel(const GammaGroupoid& G, std::span<const Element> carrier, std::span<const GammaIndex> gammas);

}  // namespace gag
