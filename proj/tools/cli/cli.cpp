#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "gag/gag.hpp"

namespace gag::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// JSON views of library values, with display labels

json subset_json(const GammaGroupoid& G, const Subset& s) {
  json out = json::array();
  for (Element e : s) out.push_back(G.label(e));
  return out;
}

json tuple_json(const GammaGroupoid& G, const std::vector<Token>& tuple) {
  json out = json::array();
  for (const Token& t : tuple) out.push_back(t.kind == Token::Kind::Element ? G.label(t.index) : G.gamma_name(t.index));
  return out;
}

json witness_json(const GammaGroupoid& G, const Witness& w) {
  json out = {{"tuple", tuple_json(G, w.tuple)}, {"subsets", json::array()}};
  for (const Subset& s : w.subsets) out["subsets"].push_back(subset_json(G, s));
  return out;
}

json lemma_json(const GammaGroupoid& G, LemmaId id, const LemmaVerdict& v) {
  json out = {{"lemma", to_string(id)}, {"status", to_string(v.status)}};
  if (v.hypothesis_failed) out["hypothesis_failed"] = to_string(*v.hypothesis_failed);
  if (!v.clause.empty()) out["clause"] = v.clause;
  if (v.witness) out["witness"] = witness_json(G, *v.witness);
  if (!v.notes.empty()) out["notes"] = v.notes;
  return out;
}

// ---------------------------------------------------------------------------
// Text rendering from the JSON report, so both views carry the same verdicts

std::string render_set(const json& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out += ",";
    out += labels[i].get<std::string>();
  }
  return out + "}";
}

std::string render_tuple(const json& tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i > 0) out += ", ";
    out += tuple[i].get<std::string>();
  }
  return out + ")";
}

std::string render_witness(const json& w) {
  std::string out;
  if (!w["tuple"].empty()) out += " at " + render_tuple(w["tuple"]);
  if (!w["subsets"].empty()) {
    out += " subsets";
    for (const auto& s : w["subsets"]) out += " " + render_set(s);
  }
  return out;
}

void render_lemma(std::ostream& out, const json& v) {
  out << v["lemma"].get<std::string>() << ": " << v["status"].get<std::string>();
  if (v.contains("hypothesis_failed")) out << " (requires " << v["hypothesis_failed"].get<std::string>() << ")";
  if (v.contains("clause")) out << " [" << v["clause"].get<std::string>() << "]";
  if (v.contains("witness")) out << render_witness(v["witness"]);
  out << "\n";
  if (v.contains("notes")) {
    for (const auto& note : v["notes"]) out << "  note: " << note.get<std::string>() << "\n";
  }
}

void render_text(std::ostream& out, const json& r) {
  const std::string command = r["command"];
  if (command == "check") {
    for (const auto& law : r["laws"]) {
      out << law["law"].get<std::string>() << ": " << (law["holds"].get<bool>() ? "holds" : "fails");
      if (law.contains("witness")) out << " at " << render_tuple(law["witness"]);
      out << "\n";
    }
    out << "left identities: " << render_set(r["left_identities"]) << "\n";
    out << "right identities: " << render_set(r["right_identities"]) << "\n";
    out << "regular: " << (r["regular"].get<bool>() ? "yes" : "no");
    if (!r["non_regular_elements"].empty()) out << " (not regular: " << render_set(r["non_regular_elements"]) << ")";
    out << "\n";
  } else if (command == "ideals") {
    out << r["kind"].get<std::string>() << " ideals: " << r["ideals"].size() << "\n";
    for (const auto& s : r["ideals"]) out << "  " << render_set(s) << "\n";
  } else if (command == "closure") {
    out << r["kind"].get<std::string>() << " closure of " << render_set(r["elements"]) << ": "
        << render_set(r["closure"]) << "\n";
  } else if (command == "verify") {
    for (const auto& v : r["verdicts"]) render_lemma(out, v);
  } else if (command == "semilattice") {
    const auto& ideals = r["ideals"];
    out << "two-sided ideals: " << ideals.size() << "\n";
    for (std::size_t i = 0; i < ideals.size(); ++i) out << "  [" << i << "] " << render_set(ideals[i]) << "\n";
    out << "product table (row . column, '-' = not an ideal):\n";
    for (const auto& row : r["table"]) {
      out << " ";
      for (const auto& cell : row) out << " " << std::setw(3) << (cell.is_null() ? "-" : std::to_string(cell.get<int>()));
      out << "\n";
    }
    for (const char* flag : {"closed", "commutative", "associative", "idempotent", "regular"}) {
      out << flag << ": " << (r[flag].get<bool>() ? "yes" : "no") << "\n";
    }
    render_lemma(out, r["theorem"]);
  } else if (command == "search") {
    if (r.contains("structures")) {
      std::size_t k = 0;
      for (const auto& s : r["structures"]) out << "# structure " << ++k << "\n" << s.get<std::string>() << "\n";
    }
    if (r.contains("emitted_to")) out << "wrote " << r["count"] << " files to " << r["emitted_to"].get<std::string>() << "\n";
    out << "count: " << r["count"] << "\n";
  } else if (command == "hunt") {
    out << "lemma " << r["lemma"].get<std::string>() << ", filters:";
    for (const auto& f : r["filters"]) out << " " << f.get<std::string>();
    out << "\nexamined " << r["examined"] << " structures, " << r["applicable"] << " applicable\n";
    if (r["found"].get<bool>()) {
      out << "counterexample (order " << r["order"] << ", gammas " << r["gammas"] << "):\n";
      render_lemma(out, r["verdict"]);
      out << r["structure"].get<std::string>();
      if (r.contains("saved_to")) out << "saved to " << r["saved_to"].get<std::string>() << "\n";
    } else {
      out << "no counterexample\n";
    }
  } else if (command == "lemmas") {
    for (const auto& l : r["lemmas"]) {
      out << std::left << std::setw(32) << l["id"].get<std::string>() << l["description"].get<std::string>();
      out << " [requires:";
      for (const auto& h : l["hypotheses"]) out << " " << h.get<std::string>();
      out << "]\n";
    }
  }
}

// ---------------------------------------------------------------------------
// Commands

GammaGroupoid load(const std::string& file) {
  if (!std::filesystem::exists(file)) throw UsageError("no such file: " + file);
  return parse_file(file);
}

std::vector<Filter> parse_filters(const std::vector<std::string>& names) {
  std::vector<Filter> out;
  for (const auto& name : names) {
    auto f = filter_from_string(name);
    if (!f) throw UsageError("unknown filter '" + name + "'");
    if (std::find(out.begin(), out.end(), *f) == out.end()) out.push_back(*f);
  }
  return out;
}

LemmaId parse_lemma(const std::string& name) {
  auto id = lemma_from_string(name);
  if (!id) throw UsageError("unknown lemma '" + name + "' (see 'gag lemmas')");
  return *id;
}

Subset parse_elements(const GammaGroupoid& G, const std::string& list) {
  Subset s(G.order());
  std::stringstream in(list);
  for (std::string tok; std::getline(in, tok, ',');) {
    if (tok.empty()) continue;
    auto it = std::find(G.labels().begin(), G.labels().end(), tok);
    if (it == G.labels().end()) throw UsageError("unknown element label '" + tok + "'");
    s.insert(static_cast<Element>(it - G.labels().begin()));
  }
  if (s.is_empty()) throw UsageError("--elements needs at least one label");
  return s;
}

json cmd_check(const GammaGroupoid& G, int& code) {
  json r = {{"command", "check"}, {"laws", json::array()}};
  for (Law law : kAllLaws) {
    const LawVerdict v = check_law(G, law);
    json entry = {{"law", to_string(law)}, {"holds", v.holds}};
    if (v.witness) entry["witness"] = tuple_json(G, v.witness->tuple);
    r["laws"].push_back(entry);
    if (law == Law::LeftInvertive && !v.holds) code = kFinding;
  }
  r["left_identities"] = subset_json(G, identities(G, Side::Left));
  r["right_identities"] = subset_json(G, identities(G, Side::Right));
  Subset irregular(G.order());
  for (Element a = 0; a < G.order(); ++a) {
    if (!regular_witness(G, a)) irregular.insert(a);
  }
  r["regular"] = irregular.is_empty();
  r["non_regular_elements"] = subset_json(G, irregular);
  return r;
}

json cmd_ideals(const GammaGroupoid& G, const std::string& kind_name) {
  auto kind = ideal_kind_from_string(kind_name);
  if (!kind) throw UsageError("unknown ideal kind '" + kind_name + "'");
  json r = {{"command", "ideals"}, {"kind", kind_name}, {"ideals", json::array()}};
  for (const Subset& s : enumerate_ideals(G, *kind)) r["ideals"].push_back(subset_json(G, s));
  return r;
}

json cmd_closure(const GammaGroupoid& G, const std::string& elements, const std::string& kind_name) {
  auto kind = ideal_kind_from_string(kind_name);
  if (!kind || !(*kind == IdealKind::SubGroupoid || *kind == IdealKind::Left || *kind == IdealKind::Right ||
                 *kind == IdealKind::TwoSided)) {
    throw UsageError("closure kind must be one of sub, left, right, two-sided");
  }
  const Subset A = parse_elements(G, elements);
  return {{"command", "closure"},
          {"kind", kind_name},
          {"elements", subset_json(G, A)},
          {"closure", subset_json(G, ideal_closure(G, A, *kind))}};
}

json cmd_verify(const GammaGroupoid& G, const std::string& lemma, int& code) {
  json r = {{"command", "verify"}, {"verdicts", json::array()}};
  std::vector<std::pair<LemmaId, LemmaVerdict>> verdicts;
  if (lemma.empty()) {
    verdicts = verify_all(G);
  } else {
    const LemmaId id = parse_lemma(lemma);
    verdicts.emplace_back(id, verify(G, id));
  }
  for (const auto& [id, v] : verdicts) {
    r["verdicts"].push_back(lemma_json(G, id, v));
    if (v.status == LemmaStatus::Counterexample) code = kFinding;
  }
  return r;
}

json cmd_semilattice(const GammaGroupoid& G, int& code) {
  const SemilatticeReport report = build_ideal_semilattice(G);
  json r = {{"command", "semilattice"}, {"ideals", json::array()}, {"table", json::array()}};
  for (const Subset& s : report.ideals) r["ideals"].push_back(subset_json(G, s));
  for (const auto& row : report.table) {
    json cells = json::array();
    for (const auto& cell : row) cells.push_back(cell ? json(*cell) : json(nullptr));
    r["table"].push_back(cells);
  }
  r["closed"] = report.closed;
  r["commutative"] = report.commutative;
  r["associative"] = report.associative;
  r["idempotent"] = report.idempotent;
  r["regular"] = report.regular;
  const LemmaVerdict theorem = verify(G, LemmaId::Semilattice);
  r["theorem"] = lemma_json(G, LemmaId::Semilattice, theorem);
  if (theorem.status == LemmaStatus::Counterexample) code = kFinding;
  return r;
}

struct SearchArgs {
  std::size_t order = 0;
  std::size_t gammas = 0;
  std::vector<std::string> filters;
  bool count_only = false;
  bool canonical = false;
  bool carrier_only = false;
  std::string emit;
  std::uint64_t limit = 0;
  bool override_guard = false;
};

json cmd_search(const SearchArgs& a) {
  SearchSpec spec;
  spec.order = a.order;
  spec.gammas = a.gammas;
  spec.filters = parse_filters(a.filters);
  spec.up_to_iso = a.canonical;
  spec.permute_gammas = !a.carrier_only;
  if (a.limit > 0) spec.limit = a.limit;
  spec.allow_large = a.override_guard;

  json r = {{"command", "search"}, {"order", a.order}, {"gammas", a.gammas}};
  if (a.count_only && a.emit.empty()) {
    r["count"] = count(spec);
    return r;
  }
  if (!a.emit.empty()) std::filesystem::create_directories(a.emit);
  std::uint64_t k = 0;
  json structures = json::array();
  for_each_structure(spec, [&](const GammaGroupoid& G) {
    ++k;
    if (!a.emit.empty()) {
      std::ostringstream name;
      name << "structure_" << std::setw(6) << std::setfill('0') << k << ".gag";
      write_file(std::filesystem::path(a.emit) / name.str(), G);
    } else {
      structures.push_back(serialize(G));
    }
    return true;
  });
  r["count"] = k;
  if (!a.emit.empty()) r["emitted_to"] = a.emit;
  else r["structures"] = structures;
  return r;
}

struct HuntArgs {
  std::size_t order = 0;
  std::size_t gammas = 0;
  std::string lemma;
  std::vector<std::string> filters;
  bool ungated = false;
  bool override_guard = false;
  std::string save;
};

json cmd_hunt(const HuntArgs& a, int& code) {
  const LemmaId id = parse_lemma(a.lemma);
  std::vector<Filter> filters = parse_filters(a.filters);
  if (!a.ungated) {
    for (Filter f : hypothesis_filters(id)) {
      if (std::find(filters.begin(), filters.end(), f) == filters.end()) filters.push_back(f);
    }
  }
  const Gating gating = a.ungated ? Gating::Relax : Gating::Enforce;

  json r = {{"command", "hunt"}, {"lemma", to_string(id)}, {"filters", json::array()}, {"found", false}};
  for (Filter f : filters) r["filters"].push_back(to_string(f));

  std::size_t examined = 0;
  std::size_t applicable = 0;
  for (std::size_t n = 1; n <= a.order; ++n) {
    for (std::size_t m = 1; m <= a.gammas; ++m) {
      SearchSpec spec;
      spec.order = n;
      spec.gammas = m;
      spec.filters = filters;
      spec.allow_large = a.override_guard;
      HuntStats stats;
      auto found = hunt(structure_source(spec), id, gating, &stats);
      examined += stats.examined;
      applicable += stats.applicable;
      if (found) {
        r["found"] = true;
        r["order"] = n;
        r["gammas"] = m;
        r["verdict"] = lemma_json(found->structure, id, found->verdict);
        r["structure"] = serialize(found->structure);
        if (!a.save.empty()) {
          write_file(a.save, found->structure);
          r["saved_to"] = a.save;
        }
        r["examined"] = examined;
        r["applicable"] = applicable;
        code = kFinding;
        return r;
      }
    }
  }
  r["examined"] = examined;
  r["applicable"] = applicable;
  return r;
}

json cmd_lemmas() {
  json r = {{"command", "lemmas"}, {"lemmas", json::array()}};
  for (LemmaId id : kAllLemmas) {
    json hyps = json::array();
    for (Hypothesis h : hypotheses(id)) hyps.push_back(to_string(h));
    r["lemmas"].push_back({{"id", to_string(id)}, {"description", describe(id)}, {"hypotheses", hyps}});
  }
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite Gamma-AG-groupoid laboratory", "gag"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit a machine-readable JSON report");

  std::string file;
  std::string kind;
  std::string elements;
  std::string lemma;
  SearchArgs search_args;
  HuntArgs hunt_args;

  auto* check = app.add_subcommand("check", "Report every law with a witness on failure");
  check->add_option("file", file, ".gag file")->required();

  auto* ideals = app.add_subcommand("ideals", "List all ideals of one kind");
  ideals->add_option("file", file, ".gag file")->required();
  ideals->add_option("--kind", kind, "sub|left|right|two-sided|bi|quasi|interior")->required();

  auto* closure = app.add_subcommand("closure", "Smallest ideal containing some elements");
  closure->add_option("file", file, ".gag file")->required();
  closure->add_option("--elements", elements, "Comma-separated element labels")->required();
  closure->add_option("--kind", kind, "sub|left|right|two-sided")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run the lemma catalog on a structure");
  verify_cmd->add_option("file", file, ".gag file")->required();
  verify_cmd->add_option("--lemma", lemma, "Single lemma id (default: all)");

  auto* semilattice = app.add_subcommand("semilattice", "Product table of the two-sided ideals");
  semilattice->add_option("file", file, ".gag file")->required();

  auto* search = app.add_subcommand("search", "Enumerate structures of a given size");
  search->add_option("--order", search_args.order, "Carrier size")->required()->check(CLI::PositiveNumber);
  search->add_option("--gammas", search_args.gammas, "Number of gammas")->required()->check(CLI::PositiveNumber);
  search->add_option("--filter", search_args.filters,
                     "left-invertive|ag-star-star|regular|has-left-identity|no-left-identity|non-associative");
  search->add_flag("--count", search_args.count_only, "Print only the number of structures");
  search->add_flag("--canonical", search_args.canonical, "One representative per isomorphism class");
  search->add_flag("--carrier-only", search_args.carrier_only, "With --canonical: do not permute gammas");
  search->add_option("--emit", search_args.emit, "Write each structure as a .gag file into this directory");
  search->add_option("--limit", search_args.limit, "Stop after this many structures");
  search->add_flag("--override", search_args.override_guard, "Allow order > 4 or gammas > 3");

  auto* hunt_cmd = app.add_subcommand("hunt", "Search for a counterexample to a lemma");
  hunt_cmd->add_option("--order", hunt_args.order, "Largest carrier size")->required()->check(CLI::PositiveNumber);
  hunt_cmd->add_option("--gammas", hunt_args.gammas, "Largest number of gammas")->required()->check(CLI::PositiveNumber);
  hunt_cmd->add_option("--lemma", hunt_args.lemma, "Lemma id")->required();
  hunt_cmd->add_option("--filter", hunt_args.filters, "Extra search filters");
  hunt_cmd->add_flag("--ungated", hunt_args.ungated, "Check the conclusion without the lemma's hypotheses");
  hunt_cmd->add_flag("--override", hunt_args.override_guard, "Allow order > 4 or gammas > 3");
  hunt_cmd->add_option("--save", hunt_args.save, "Write a counterexample to this .gag file");

  app.add_subcommand("lemmas", "List the lemma catalog");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  int code = kOk;
  try {
    json report;
    const std::string command = app.get_subcommands().front()->get_name();
    if (command == "check") report = cmd_check(load(file), code);
    else if (command == "ideals") report = cmd_ideals(load(file), kind);
    else if (command == "closure") report = cmd_closure(load(file), elements, kind);
    else if (command == "verify") report = cmd_verify(load(file), lemma, code);
    else if (command == "semilattice") report = cmd_semilattice(load(file), code);
    else if (command == "search") report = cmd_search(search_args);
    else if (command == "hunt") report = cmd_hunt(hunt_args, code);
    else report = cmd_lemmas();

    report["exit_code"] = code;
    if (as_json) out << report.dump(2) << "\n";
    else render_text(out, report);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << file << ": " << e.what() << "\n";
    return kUsage;
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}

}  // namespace gag::cli
