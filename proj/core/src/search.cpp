#include "gag/search.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gag/errors.hpp"
#include "gag/laws.hpp"

namespace gag {

namespace {

bool has(const std::vector<Filter>& filters, Filter f) {
  return std::find(filters.begin(), filters.end(), f) != filters.end();
}

// Backtracking over partially filled tables. Unassigned cells hold -1.
class Backtracker {
 public:
  Backtracker(const SearchSpec& spec, const StructureSink& sink)
      : spec_(spec),
        sink_(sink),
        n_(spec.order),
        m_(spec.gammas),
        cells_(spec.gammas * spec.order * spec.order, -1),
        prune_left_invertive_(has(spec.filters, Filter::LeftInvertive)),
        prune_ag_star_star_(has(spec.filters, Filter::AGStarStar)) {}

  void run() { descend(0); }

 private:
  int at(std::size_t g, int a, std::size_t b) const {
    return a < 0 ? -1 : cells_[(g * n_ + static_cast<std::size_t>(a)) * n_ + b];
  }
  int at(std::size_t g, std::size_t a, int b) const {
    return b < 0 ? -1 : cells_[(g * n_ + a) * n_ + static_cast<std::size_t>(b)];
  }

  // (a g b) d c = (c g b) d a on every fully assigned instance.
  bool left_invertive_consistent() const {
    for (std::size_t g = 0; g < m_; ++g) {
      for (std::size_t b = 0; b < n_; ++b) {
        for (std::size_t a = 0; a < n_; ++a) {
          const int ab = cells_[(g * n_ + a) * n_ + b];
          if (ab < 0) continue;
          for (std::size_t c = a + 1; c < n_; ++c) {
            const int cb = cells_[(g * n_ + c) * n_ + b];
            if (cb < 0) continue;
            for (std::size_t d = 0; d < m_; ++d) {
              const int lhs = at(d, ab, c);
              if (lhs < 0) continue;
              const int rhs = at(d, cb, a);
              if (rhs >= 0 && lhs != rhs) return false;
            }
          }
        }
      }
    }
    return true;
  }

  // a g (b d c) = b g (a d c) on every fully assigned instance.
  bool ag_star_star_consistent() const {
    for (std::size_t d = 0; d < m_; ++d) {
      for (std::size_t c = 0; c < n_; ++c) {
        for (std::size_t b = 0; b < n_; ++b) {
          const int bc = cells_[(d * n_ + b) * n_ + c];
          if (bc < 0) continue;
          for (std::size_t a = b + 1; a < n_; ++a) {
            const int ac = cells_[(d * n_ + a) * n_ + c];
            if (ac < 0) continue;
            for (std::size_t g = 0; g < m_; ++g) {
              const int lhs = at(g, a, bc);
              if (lhs < 0) continue;
              const int rhs = at(g, b, ac);
              if (rhs >= 0 && lhs != rhs) return false;
            }
          }
        }
      }
    }
    return true;
  }

  bool descend(std::size_t k) {
    if (k == cells_.size()) return leaf();
    for (int v = 0; v < static_cast<int>(n_); ++v) {
      cells_[k] = v;
      if (prune_left_invertive_ && !left_invertive_consistent()) continue;
      if (prune_ag_star_star_ && !ag_star_star_consistent()) continue;
      if (!descend(k + 1)) {
        cells_[k] = -1;
        return false;
      }
    }
    cells_[k] = -1;
    return true;
  }

  // Returns false to stop the search.
  bool leaf() {
    std::vector<Element> cells(cells_.begin(), cells_.end());
    GammaGroupoid G(n_, m_, std::move(cells));
    for (Filter f : spec_.filters) {
      bool ok = true;
      switch (f) {
        case Filter::LeftInvertive: ok = check_law(G, Law::LeftInvertive).holds; break;
        case Filter::AGStarStar: ok = check_law(G, Law::AGStarStar).holds; break;
        case Filter::Regular: ok = is_regular(G); break;
        case Filter::HasLeftIdentity: ok = !identities(G, Side::Left).is_empty(); break;
        case Filter::NoLeftIdentity: ok = identities(G, Side::Left).is_empty(); break;
        case Filter::NonAssociative: ok = !check_law(G, Law::Associative).holds; break;
      }
      if (!ok) return true;
    }
    if (spec_.up_to_iso && !canonical_form(G, spec_.permute_gammas).same_tables(G)) return true;
    ++emitted_;
    if (!sink_(G)) return false;
    return !(spec_.limit && emitted_ >= *spec_.limit);
  }

  const SearchSpec& spec_;
  const StructureSink& sink_;
  std::size_t n_;
  std::size_t m_;
  std::vector<int> cells_;
  bool prune_left_invertive_;
  bool prune_ag_star_star_;
  std::uint64_t emitted_ = 0;
};

}  // namespace

std::string_view to_string(Filter f) {
  switch (f) {
    case Filter::LeftInvertive: return "left-invertive";
    case Filter::AGStarStar: return "ag-star-star";
    case Filter::Regular: return "regular";
    case Filter::HasLeftIdentity: return "has-left-identity";
    case Filter::NoLeftIdentity: return "no-left-identity";
    case Filter::NonAssociative: return "non-associative";
  }
  return "?";
}

std::optional<Filter> filter_from_string(std::string_view name) {
  for (Filter f : kAllFilters) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

void validate(const SearchSpec& spec) {
  if (spec.order == 0 || spec.order > kMaxOrder) {
    throw ContractViolation("search order must be in [1, " + std::to_string(kMaxOrder) + "]");
  }
  if (spec.gammas == 0) throw ContractViolation("search needs at least one gamma");
  if (has(spec.filters, Filter::HasLeftIdentity) && has(spec.filters, Filter::NoLeftIdentity)) {
    throw ContractViolation("filters has-left-identity and no-left-identity are mutually exclusive");
  }
  if (!spec.allow_large && (spec.order > kSearchOrderGuard || spec.gammas > kSearchGammaGuard)) {
    throw LimitExceeded("search of order " + std::to_string(spec.order) + " with " + std::to_string(spec.gammas) +
                        " gammas refused without override (guard: order <= " + std::to_string(kSearchOrderGuard) +
                        ", gammas <= " + std::to_string(kSearchGammaGuard) + ")");
  }
  if (spec.up_to_iso && (spec.order > kCanonicalOrderGuard || (spec.permute_gammas && spec.gammas > kCanonicalOrderGuard))) {
    throw LimitExceeded("isomorphism reduction refused beyond " + std::to_string(kCanonicalOrderGuard) +
                        " elements or gammas");
  }
}

void for_each_structure(const SearchSpec& spec, const StructureSink& sink) {
  validate(spec);
  if (spec.limit && *spec.limit == 0) return;
  Backtracker(spec, sink).run();
}

std::vector<GammaGroupoid> enumerate_structures(const SearchSpec& spec) {
  std::vector<GammaGroupoid> out;
  for_each_structure(spec, [&](const GammaGroupoid& G) {
    out.push_back(G);
    return true;
  });
  return out;
}

std::uint64_t count(const SearchSpec& spec) {
  std::uint64_t total = 0;
  for_each_structure(spec, [&](const GammaGroupoid&) {
    ++total;
    return true;
  });
  return total;
}

StructureSource structure_source(SearchSpec spec) {
  return [spec = std::move(spec)](const StructureSink& sink) { for_each_structure(spec, sink); };
}

std::vector<Filter> hypothesis_filters(LemmaId id) {
  std::vector<Filter> out;
  for (Hypothesis h : hypotheses(id)) {
    switch (h) {
      case Hypothesis::LeftInvertive: out.push_back(Filter::LeftInvertive); break;
      case Hypothesis::AGStarStar: out.push_back(Filter::AGStarStar); break;
      case Hypothesis::Regular: out.push_back(Filter::Regular); break;
      case Hypothesis::LeftIdentity: out.push_back(Filter::HasLeftIdentity); break;
      case Hypothesis::RightIdentity: break;
    }
  }
  return out;
}

GammaGroupoid relabel(const GammaGroupoid& G, std::span<const Element> carrier, std::span<const GammaIndex> gammas) {
  const std::size_t n = G.order();
  const std::size_t m = G.gammas();
  auto is_permutation = [](auto span, std::size_t size) {
    if (span.size() != size) return false;
    std::vector<bool> seen(size, false);
    for (auto v : span) {
      if (v >= size || seen[v]) return false;
      seen[v] = true;
    }
    return true;
  };
  if (!is_permutation(carrier, n) || !is_permutation(gammas, m)) {
    throw ContractViolation("relabel needs permutations of the carrier and of the gammas");
  }
  std::vector<Element> cells(m * n * n);
  std::vector<std::string> labels(n);
  std::vector<std::string> names(m);
  for (GammaIndex g = 0; g < m; ++g) {
    names[gammas[g]] = G.gamma_name(g);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        cells[(gammas[g] * n + carrier[a]) * n + carrier[b]] = carrier[G.mul(a, g, b)];
      }
    }
  }
  for (Element a = 0; a < n; ++a) labels[carrier[a]] = G.label(a);
  return GammaGroupoid(n, m, std::move(cells), std::move(labels), std::move(names));
}

GammaGroupoid canonical_form(const GammaGroupoid& G, bool permute_gammas) {
  const std::size_t n = G.order();
  const std::size_t m = G.gammas();
  if (n > kCanonicalOrderGuard || (permute_gammas && m > kCanonicalOrderGuard)) {
    throw LimitExceeded("canonical_form refused beyond " + std::to_string(kCanonicalOrderGuard) +
                        " elements or gammas");
  }
  std::vector<Element> p(n);
  std::vector<GammaIndex> q(m);
  std::vector<std::uint8_t> best(G.cells().begin(), G.cells().end());
  std::vector<std::uint8_t> candidate(best.size());

  std::iota(p.begin(), p.end(), 0);
  do {
    std::iota(q.begin(), q.end(), 0);
    do {
      for (GammaIndex g = 0; g < m; ++g) {
        for (Element a = 0; a < n; ++a) {
          for (Element b = 0; b < n; ++b) {
            candidate[(q[g] * n + p[a]) * n + p[b]] = static_cast<std::uint8_t>(p[G.mul(a, g, b)]);
          }
        }
      }
      if (candidate < best) best = candidate;
    } while (permute_gammas && std::next_permutation(q.begin(), q.end()));
  } while (std::next_permutation(p.begin(), p.end()));

  return GammaGroupoid(n, m, std::vector<Element>(best.begin(), best.end()));
}

}  // namespace gag
