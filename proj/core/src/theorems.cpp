#include "gag/theorems.hpp"

#include <map>
#include <string>

#include "gag/errors.hpp"
#include "gag/laws.hpp"

namespace gag {

namespace {

struct LemmaInfo {
  LemmaId id;
  std::string_view name;
  std::string_view description;
  std::vector<Hypothesis> hypotheses;
};

const std::vector<LemmaInfo>& catalog() {
  using H = Hypothesis;
  static const std::vector<LemmaInfo> table = {
      {LemmaId::LeftIdentityCollapse, "l1-left-identity-collapse",
       "a left identity forces all gamma tables to coincide (one left-invertive table)",
       {H::LeftInvertive, H::LeftIdentity}},
      {LemmaId::RightIdentity, "l-right-identity",
       "a right identity is a two-sided identity and every operation is commutative and associative",
       {H::LeftInvertive, H::RightIdentity}},
      {LemmaId::UnionConstruction, "t1-union-construction",
       "L u L.G and R u G.R are two-sided ideals for left ideals L and right ideals R",
       {H::LeftInvertive, H::AGStarStar}},
      {LemmaId::Medial, "l-medial", "the medial law holds", {H::LeftInvertive}},
      {LemmaId::Paramedial, "l-paramedial", "the paramedial law holds", {H::LeftInvertive, H::AGStarStar}},
      {LemmaId::OneSidedQuasi, "l-one-sided-quasi", "every left or right ideal is a quasi-ideal", {H::LeftInvertive}},
      {LemmaId::OneSidedBi, "l-rlb-one-sided-bi", "every left or right ideal is a bi-ideal", {H::LeftInvertive}},
      {LemmaId::IdealBi, "c-ideal-bi", "every two-sided ideal is a bi-ideal", {H::LeftInvertive}},
      {LemmaId::BiProduct, "l-bi-product", "B1.B2 absorbs like a bi-ideal for bi-ideals B1, B2",
       {H::LeftInvertive, H::AGStarStar}},
      {LemmaId::IdempotentQuasiBi, "l-idem-quasi-bi", "every idempotent quasi-ideal is a bi-ideal",
       {H::LeftInvertive}},
      {LemmaId::IdealInterior, "l-ideal-interior", "every two-sided ideal is an interior ideal", {H::LeftInvertive}},
      {LemmaId::InteriorIffRight, "l-interior-iff-right", "a subset is an interior ideal iff it is a right ideal",
       {H::LeftInvertive, H::AGStarStar}},
      {LemmaId::AbsorptionRegular, "l-absorption-regular",
       "A.G = A for right ideals A and G.B = B for left ideals B", {H::LeftInvertive, H::Regular}},
      {LemmaId::PrincipalBi, "l-gg-bi", "g.G and G.g are bi-ideals for every element g",
       {H::LeftInvertive, H::AGStarStar}},
      {LemmaId::RightPrincipalBiRegular, "c-ag-bi-regular", "a.G is a bi-ideal for every element a",
       {H::LeftInvertive, H::AGStarStar, H::Regular}},
      {LemmaId::BiSandwichRegular, "l-bgb-regular", "(B.G).B = B for every bi-ideal B",
       {H::LeftInvertive, H::Regular}},
      {LemmaId::SquareRegular, "l-gg-regular", "G.G = G", {H::LeftInvertive, H::Regular}},
      {LemmaId::LeftIffRightRegular, "l-left-iff-right-regular", "a subset is a left ideal iff it is a right ideal",
       {H::LeftInvertive, H::AGStarStar, H::Regular}},
      {LemmaId::RegularIffIdempotentLeft, "t-regular-iff-idempotent-left",
       "regular iff every left ideal is idempotent", {H::LeftInvertive, H::AGStarStar}},
      {LemmaId::SemiprimeRegular, "l-semiprime-regular", "every two-sided ideal is semiprime",
       {H::LeftInvertive, H::Regular}},
      {LemmaId::Semilattice, "t-semilattice", "two-sided ideals under A.B form a semilattice",
       {H::LeftInvertive, H::Regular}},
      {LemmaId::CommutingIdealsRegular, "l-comm-ideals-regular", "A.B = B.A for two-sided ideals A, B",
       {H::LeftInvertive, H::Regular}},
      {LemmaId::IdempotentIdealsRegular, "l-idem-ideals-regular", "A.A = A for every two-sided ideal A",
       {H::LeftInvertive, H::Regular}},
      {LemmaId::PrincipalLeft, "l-principal-left-agss", "G.a is a left ideal for every element a",
       {H::LeftInvertive, H::AGStarStar}},
  };
  return table;
}

const LemmaInfo& info(LemmaId id) {
  for (const auto& entry : catalog()) {
    if (entry.id == id) return entry;
  }
  throw ContractViolation("unknown lemma id");
}

// Per-structure memo of ideal lists; verify() builds one per call.
class Context {
 public:
  Context(const GammaGroupoid& G, std::size_t max_order) : G(G), all(G.carrier()), max_order_(max_order) {}

  const std::vector<Subset>& ideals(IdealKind kind) {
    auto it = cache_.find(kind);
    if (it == cache_.end()) it = cache_.emplace(kind, enumerate_ideals(G, kind, max_order_)).first;
    return it->second;
  }

  // Every nonempty subset, ascending.
  std::vector<Subset> subsets() const {
    if (G.order() > max_order_) {
      throw LimitExceeded("subset enumeration refused: carrier size " + std::to_string(G.order()) +
                          " exceeds limit " + std::to_string(max_order_));
    }
    std::vector<Subset> out;
    const std::uint64_t last = Subset::full_mask(G.order());
    for (std::uint64_t bits = 1;; ++bits) {
      out.emplace_back(G.order(), bits);
      if (bits == last) break;
    }
    return out;
  }

  std::size_t max_order() const noexcept { return max_order_; }
  Subset product(const Subset& A, const Subset& B) const { return subset_product(G, A, B); }
  Subset single(Element e) const { return Subset::singleton(G.order(), e); }

  const GammaGroupoid& G;
  const Subset all;

 private:
  std::size_t max_order_;
  std::map<IdealKind, std::vector<Subset>> cache_;
};

LemmaVerdict holds() { return {}; }

LemmaVerdict counterexample(std::string clause, std::vector<Token> tuple, std::vector<Subset> subsets = {}) {
  LemmaVerdict v;
  v.status = LemmaStatus::Counterexample;
  v.clause = std::move(clause);
  v.witness = Witness{std::move(tuple), std::move(subsets)};
  return v;
}

std::vector<Token> tuple_of(const std::optional<Witness>& w) { return w ? w->tuple : std::vector<Token>{}; }

// First element of `expected` missing from `actual`.
std::vector<Token> missing_element(const Subset& expected, const Subset& actual) {
  const Subset gap = expected - actual;
  return {Token::element(*gap.begin())};
}

LemmaVerdict law_lemma(Context& ctx, Law law, const char* clause) {
  if (auto v = check_law(ctx.G, law); !v) return counterexample(clause, v.witness->tuple);
  return holds();
}

// Every S in `sources` must satisfy `target`.
LemmaVerdict every_is(Context& ctx, IdealKind source, IdealKind target, const std::string& clause) {
  for (const Subset& S : ctx.ideals(source)) {
    if (auto v = is_ideal(ctx.G, S, target); !v) return counterexample(clause, tuple_of(v.witness), {S});
  }
  return holds();
}

LemmaVerdict left_identity_collapse(Context& ctx) {
  const GammaGroupoid& G = ctx.G;
  for (GammaIndex g = 0; g < G.gammas(); ++g) {
    for (GammaIndex h = g + 1; h < G.gammas(); ++h) {
      for (Element a = 0; a < G.order(); ++a) {
        for (Element b = 0; b < G.order(); ++b) {
          if (G.mul(a, g, b) != G.mul(a, h, b)) {
            return counterexample("tables-differ",
                                  {Token::element(a), Token::gamma(g), Token::element(b), Token::gamma(h)});
          }
        }
      }
    }
  }
  return law_lemma(ctx, Law::LeftInvertive, "collapsed-table-not-left-invertive");
}

LemmaVerdict right_identity(Context& ctx) {
  const GammaGroupoid& G = ctx.G;
  const Subset right = identities(G, Side::Right);
  if (!right.is_empty()) {
    const Element e = *right.begin();
    for (GammaIndex g = 0; g < G.gammas(); ++g) {
      for (Element a = 0; a < G.order(); ++a) {
        if (G.mul(e, g, a) != a) {
          return counterexample("right-identity-not-left-identity",
                                {Token::element(e), Token::gamma(g), Token::element(a)});
        }
      }
    }
  }
  if (auto v = law_lemma(ctx, Law::Commutative, "not-commutative"); v.status != LemmaStatus::Holds) return v;
  return law_lemma(ctx, Law::Associative, "not-associative");
}

LemmaVerdict union_construction(Context& ctx) {
  for (const Subset& L : ctx.ideals(IdealKind::Left)) {
    const Subset U = L | ctx.product(L, ctx.all);
    if (auto v = is_ideal(ctx.G, U, IdealKind::TwoSided); !v) {
      return counterexample("left-union-not-ideal", tuple_of(v.witness), {L, U});
    }
  }
  for (const Subset& R : ctx.ideals(IdealKind::Right)) {
    const Subset U = R | ctx.product(ctx.all, R);
    if (auto v = is_ideal(ctx.G, U, IdealKind::TwoSided); !v) {
      return counterexample("right-union-not-ideal", tuple_of(v.witness), {R, U});
    }
  }
  return holds();
}

LemmaVerdict one_sided_into(Context& ctx, IdealKind target, const char* left_clause, const char* right_clause) {
  if (auto v = every_is(ctx, IdealKind::Left, target, left_clause); v.status != LemmaStatus::Holds) return v;
  return every_is(ctx, IdealKind::Right, target, right_clause);
}

LemmaVerdict bi_product(Context& ctx) {
  const auto& bis = ctx.ideals(IdealKind::Bi);
  LemmaVerdict result = holds();
  std::size_t open = 0;
  std::string first_open;
  for (const Subset& B1 : bis) {
    for (const Subset& B2 : bis) {
      const Subset P = ctx.product(B1, B2);
      if (auto w = product_escape(ctx.G, P, ctx.all, P, P)) {
        return counterexample("product-not-absorbing", w->tuple, {B1, B2, P});
      }
      if (!satisfies(ctx.G, P, IdealKind::SubGroupoid)) {
        if (open++ == 0) {
          first_open = format_subset(ctx.G, B1) + " . " + format_subset(ctx.G, B2) + " = " +
                       format_subset(ctx.G, P) + " is not closed, witness " +
                       format_tuple(ctx.G, product_escape(ctx.G, P, P, P)->tuple);
        }
      }
    }
  }
  if (open > 0) {
    result.notes.push_back(std::to_string(open) + " of " + std::to_string(bis.size() * bis.size()) +
                           " products B1.B2 absorb but are not sub-groupoids; first: " + first_open);
  }
  return result;
}

LemmaVerdict idempotent_quasi_bi(Context& ctx) {
  for (const Subset& Q : ctx.ideals(IdealKind::Quasi)) {
    if (!is_idempotent(ctx.G, Q)) continue;
    if (auto v = is_ideal(ctx.G, Q, IdealKind::Bi); !v) {
      return counterexample("idempotent-quasi-not-bi", tuple_of(v.witness), {Q});
    }
  }
  return holds();
}

// For every nonempty S: S is `a` iff S is `b`.
LemmaVerdict equivalent_kinds(Context& ctx, IdealKind a, IdealKind b, const std::string& a_name,
                              const std::string& b_name) {
  for (const Subset& S : ctx.subsets()) {
    const bool is_a = satisfies(ctx.G, S, a);
    const bool is_b = satisfies(ctx.G, S, b);
    if (is_a && !is_b) {
      return counterexample(a_name + "-not-" + b_name, tuple_of(is_ideal(ctx.G, S, b).witness), {S});
    }
    if (is_b && !is_a) {
      return counterexample(b_name + "-not-" + a_name, tuple_of(is_ideal(ctx.G, S, a).witness), {S});
    }
  }
  return holds();
}

LemmaVerdict absorption_regular(Context& ctx) {
  for (const Subset& A : ctx.ideals(IdealKind::Right)) {
    const Subset AG = ctx.product(A, ctx.all);
    if (AG != A) return counterexample("right-ideal-not-absorbed", missing_element(A, AG), {A, AG});
  }
  for (const Subset& B : ctx.ideals(IdealKind::Left)) {
    const Subset GB = ctx.product(ctx.all, B);
    if (GB != B) return counterexample("left-ideal-not-absorbed", missing_element(B, GB), {B, GB});
  }
  return holds();
}

LemmaVerdict principal_bi(Context& ctx, bool both_sides) {
  for (Element g = 0; g < ctx.G.order(); ++g) {
    const Subset gG = ctx.product(ctx.single(g), ctx.all);
    if (auto v = is_ideal(ctx.G, gG, IdealKind::Bi); !v) {
      return counterexample("g-gamma-G-not-bi", tuple_of(v.witness), {ctx.single(g), gG});
    }
    if (!both_sides) continue;
    const Subset Gg = ctx.product(ctx.all, ctx.single(g));
    if (auto v = is_ideal(ctx.G, Gg, IdealKind::Bi); !v) {
      return counterexample("G-gamma-g-not-bi", tuple_of(v.witness), {ctx.single(g), Gg});
    }
  }
  return holds();
}

LemmaVerdict bi_sandwich(Context& ctx) {
  for (const Subset& B : ctx.ideals(IdealKind::Bi)) {
    const Subset BGB = ctx.product(ctx.product(B, ctx.all), B);
    if (BGB != B) {
      // (BG)B is contained in B for a bi-ideal, so only elements of B can be missing.
      return counterexample("bi-ideal-not-reproduced", missing_element(B, BGB), {B, BGB});
    }
  }
  return holds();
}

LemmaVerdict square(Context& ctx) {
  const Subset GG = ctx.product(ctx.all, ctx.all);
  if (GG != ctx.all) return counterexample("square-not-carrier", missing_element(ctx.all, GG), {GG});
  return holds();
}

LemmaVerdict regular_iff_idempotent_left(Context& ctx) {
  const bool regular = is_regular(ctx.G);
  std::optional<Subset> non_idempotent;
  for (const Subset& L : ctx.ideals(IdealKind::Left)) {
    if (!is_idempotent(ctx.G, L)) {
      non_idempotent = L;
      break;
    }
  }
  if (regular && non_idempotent) {
    return counterexample("regular-with-non-idempotent-left-ideal", {},
                          {*non_idempotent, ctx.product(*non_idempotent, *non_idempotent)});
  }
  if (!regular && !non_idempotent) {
    for (Element a = 0; a < ctx.G.order(); ++a) {
      if (!regular_witness(ctx.G, a)) {
        return counterexample("idempotent-left-ideals-without-regularity", {Token::element(a)});
      }
    }
  }
  return holds();
}

LemmaVerdict semiprime_regular(Context& ctx) {
  for (const Subset& P : ctx.ideals(IdealKind::TwoSided)) {
    if (auto v = is_semiprime(ctx.G, P, ctx.max_order()); !v) {
      std::vector<Subset> subsets = {P};
      if (v.witness) subsets.insert(subsets.end(), v.witness->subsets.begin(), v.witness->subsets.end());
      return counterexample("ideal-not-semiprime", {}, std::move(subsets));
    }
  }
  return holds();
}

LemmaVerdict commuting_ideals(Context& ctx) {
  const auto& ideals = ctx.ideals(IdealKind::TwoSided);
  for (const Subset& A : ideals) {
    for (const Subset& B : ideals) {
      if (ctx.product(A, B) != ctx.product(B, A)) return counterexample("ideals-do-not-commute", {}, {A, B});
    }
  }
  return holds();
}

LemmaVerdict idempotent_ideals(Context& ctx) {
  for (const Subset& A : ctx.ideals(IdealKind::TwoSided)) {
    if (!is_idempotent(ctx.G, A)) return counterexample("ideal-not-idempotent", {}, {A, ctx.product(A, A)});
  }
  return holds();
}

LemmaVerdict semilattice(Context& ctx) {
  const SemilatticeReport report = build_ideal_semilattice(ctx.G, ctx.max_order());
  const auto& I = report.ideals;
  if (!report.closed) {
    for (std::size_t i = 0; i < I.size(); ++i) {
      for (std::size_t j = 0; j < I.size(); ++j) {
        if (!report.table[i][j]) return counterexample("not-closed", {}, {I[i], I[j], ctx.product(I[i], I[j])});
      }
    }
  }
  if (!report.commutative) return commuting_ideals(ctx);
  if (!report.associative) {
    for (const Subset& A : I) {
      for (const Subset& B : I) {
        for (const Subset& C : I) {
          if (ctx.product(ctx.product(A, B), C) != ctx.product(A, ctx.product(B, C))) {
            return counterexample("not-associative", {}, {A, B, C});
          }
        }
      }
    }
  }
  if (!report.idempotent) return idempotent_ideals(ctx);
  return holds();
}

LemmaVerdict principal_left_lemma(Context& ctx) {
  for (Element a = 0; a < ctx.G.order(); ++a) {
    const Subset Ga = principal_left(ctx.G, a);
    if (auto v = is_ideal(ctx.G, Ga, IdealKind::Left); !v) {
      return counterexample("principal-left-not-left-ideal", tuple_of(v.witness), {ctx.single(a), Ga});
    }
  }
  return holds();
}

LemmaVerdict conclusion(Context& ctx, LemmaId id) {
  switch (id) {
    case LemmaId::LeftIdentityCollapse: return left_identity_collapse(ctx);
    case LemmaId::RightIdentity: return right_identity(ctx);
    case LemmaId::UnionConstruction: return union_construction(ctx);
    case LemmaId::Medial: return law_lemma(ctx, Law::Medial, "medial-law");
    case LemmaId::Paramedial: return law_lemma(ctx, Law::Paramedial, "paramedial-law");
    case LemmaId::OneSidedQuasi:
      return one_sided_into(ctx, IdealKind::Quasi, "left-ideal-not-quasi", "right-ideal-not-quasi");
    case LemmaId::OneSidedBi: return one_sided_into(ctx, IdealKind::Bi, "left-ideal-not-bi", "right-ideal-not-bi");
    case LemmaId::IdealBi: return every_is(ctx, IdealKind::TwoSided, IdealKind::Bi, "ideal-not-bi");
    case LemmaId::BiProduct: return bi_product(ctx);
    case LemmaId::IdempotentQuasiBi: return idempotent_quasi_bi(ctx);
    case LemmaId::IdealInterior: return every_is(ctx, IdealKind::TwoSided, IdealKind::Interior, "ideal-not-interior");
    case LemmaId::InteriorIffRight:
      return equivalent_kinds(ctx, IdealKind::Interior, IdealKind::Right, "interior", "right");
    case LemmaId::AbsorptionRegular: return absorption_regular(ctx);
    case LemmaId::PrincipalBi: return principal_bi(ctx, true);
    case LemmaId::RightPrincipalBiRegular: return principal_bi(ctx, false);
    case LemmaId::BiSandwichRegular: return bi_sandwich(ctx);
    case LemmaId::SquareRegular: return square(ctx);
    case LemmaId::LeftIffRightRegular: return equivalent_kinds(ctx, IdealKind::Left, IdealKind::Right, "left", "right");
    case LemmaId::RegularIffIdempotentLeft: return regular_iff_idempotent_left(ctx);
    case LemmaId::SemiprimeRegular: return semiprime_regular(ctx);
    case LemmaId::Semilattice: return semilattice(ctx);
    case LemmaId::CommutingIdealsRegular: return commuting_ideals(ctx);
    case LemmaId::IdempotentIdealsRegular: return idempotent_ideals(ctx);
    case LemmaId::PrincipalLeft: return principal_left_lemma(ctx);
  }
  throw ContractViolation("unknown lemma id");
}

}  // namespace

std::string_view to_string(LemmaId id) { return info(id).name; }

std::optional<LemmaId> lemma_from_string(std::string_view name) {
  for (const auto& entry : catalog()) {
    if (entry.name == name) return entry.id;
  }
  return std::nullopt;
}

std::string_view describe(LemmaId id) { return info(id).description; }

std::string_view to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::LeftInvertive: return "left-invertive";
    case Hypothesis::AGStarStar: return "ag-star-star";
    case Hypothesis::Regular: return "regular";
    case Hypothesis::LeftIdentity: return "left-identity";
    case Hypothesis::RightIdentity: return "right-identity";
  }
  return "?";
}

std::vector<Hypothesis> hypotheses(LemmaId id) { return info(id).hypotheses; }

bool satisfies(const GammaGroupoid& G, Hypothesis h) {
  switch (h) {
    case Hypothesis::LeftInvertive: return check_law(G, Law::LeftInvertive).holds;
    case Hypothesis::AGStarStar: return check_law(G, Law::AGStarStar).holds;
    case Hypothesis::Regular: return is_regular(G);
    case Hypothesis::LeftIdentity: return !identities(G, Side::Left).is_empty();
    case Hypothesis::RightIdentity: return !identities(G, Side::Right).is_empty();
  }
  return false;
}

std::string_view to_string(LemmaStatus status) {
  switch (status) {
    case LemmaStatus::Holds: return "holds";
    case LemmaStatus::Counterexample: return "counterexample";
    case LemmaStatus::NotApplicable: return "not-applicable";
  }
  return "?";
}

LemmaVerdict verify(const GammaGroupoid& G, LemmaId id, Gating gating, std::size_t max_order) {
  if (gating == Gating::Enforce) {
    for (Hypothesis h : hypotheses(id)) {
      if (!satisfies(G, h)) {
        LemmaVerdict v;
        v.status = LemmaStatus::NotApplicable;
        v.hypothesis_failed = h;
        return v;
      }
    }
  }
  Context ctx(G, max_order);
  return conclusion(ctx, id);
}

std::vector<std::pair<LemmaId, LemmaVerdict>> verify_all(const GammaGroupoid& G, std::size_t max_order) {
  std::vector<std::pair<LemmaId, LemmaVerdict>> out;
  out.reserve(kAllLemmas.size());
  for (LemmaId id : kAllLemmas) out.emplace_back(id, verify(G, id, Gating::Enforce, max_order));
  return out;
}

std::optional<HuntResult> hunt(const StructureSource& source, LemmaId id, Gating gating, HuntStats* stats) {
  std::optional<HuntResult> found;
  HuntStats local;
  source([&](const GammaGroupoid& G) {
    LemmaVerdict v = verify(G, id, gating);
    ++local.examined;
    if (v.status != LemmaStatus::NotApplicable) ++local.applicable;
    if (v.status == LemmaStatus::Counterexample) {
      found.emplace(HuntResult{G, std::move(v), local.examined - 1});
      return false;
    }
    return true;
  });
  if (stats) *stats = local;
  return found;
}

std::optional<HuntResult> hunt(std::span<const GammaGroupoid> structures, LemmaId id, Gating gating,
                               HuntStats* stats) {
  return hunt(
      [structures](const StructureSink& sink) {
        for (const auto& G : structures) {
          if (!sink(G)) return;
        }
      },
      id, gating, stats);
}

}  // namespace gag
