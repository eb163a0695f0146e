#include "gag/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gag/errors.hpp"

namespace gag {

namespace {

constexpr std::size_t kMaxGammas = 65536;

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> significant_lines(std::string_view text, std::size_t& physical_lines) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string token; in >> token;) line.tokens.push_back(std::move(token));
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  physical_lines = number;
  return out;
}

std::string join(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

std::size_t parse_count(const Line& line, std::string_view keyword, std::size_t lo, std::size_t hi) {
  if (line.tokens.size() != 2 || line.tokens[0] != keyword) {
    throw ParseError(line.number, "expected '" + std::string(keyword) + " <count>'", std::string(keyword) + " <count>",
                     join(line.tokens));
  }
  const std::string& tok = line.tokens[1];
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value < lo || value > hi) {
    throw ParseError(line.number,
                     std::string(keyword) + " must be an integer in [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]",
                     "integer", tok);
  }
  return value;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::string message, std::string expected, std::string found)
    : std::runtime_error("line " + std::to_string(line) + ": " + message +
                         (found.empty() && expected.empty() ? std::string()
                                                            : " (expected " + (expected.empty() ? "?" : expected) +
                                                                  ", found '" + found + "')")),
      line_(line),
      message_(std::move(message)),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

GammaGroupoid parse(std::string_view text) {
  std::size_t physical = 0;
  const std::vector<Line> lines = significant_lines(text, physical);
  const std::size_t eof_line = physical == 0 ? 1 : physical;
  std::size_t next = 0;

  auto take = [&](std::string_view what) -> const Line& {
    if (next >= lines.size()) throw ParseError(eof_line, "unexpected end of input", std::string(what), "end of input");
    return lines[next++];
  };

  const std::size_t n = parse_count(take("order <n>"), "order", 1, kMaxOrder);
  const std::size_t m = parse_count(take("gammas <m>"), "gammas", 1, kMaxGammas);

  std::vector<std::string> labels;
  if (next < lines.size() && lines[next].tokens[0] == "labels") {
    const Line& line = lines[next++];
    if (line.tokens.size() != n + 1) {
      throw ParseError(line.number, "labels line needs exactly " + std::to_string(n) + " labels",
                       std::to_string(n) + " labels", std::to_string(line.tokens.size() - 1) + " labels");
    }
    labels.assign(line.tokens.begin() + 1, line.tokens.end());
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
      if (!seen.insert(l).second) throw ParseError(line.number, "duplicate label", "distinct labels", l);
    }
  } else {
    labels = default_labels(n);
  }
  std::unordered_map<std::string, Element> label_index;
  for (Element i = 0; i < n; ++i) label_index.emplace(labels[i], i);

  std::vector<std::string> names;
  std::unordered_set<std::string> seen_names;
  std::vector<Element> cells;
  cells.reserve(m * n * n);
  for (std::size_t g = 0; g < m; ++g) {
    const Line& header = take("gamma <name>");
    if (header.tokens[0] == "labels") throw ParseError(header.number, "duplicate or misplaced labels line", "gamma <name>", "labels");
    if (header.tokens[0] != "gamma" || header.tokens.size() != 2) {
      throw ParseError(header.number, "expected gamma block header", "gamma <name>", join(header.tokens));
    }
    if (!seen_names.insert(header.tokens[1]).second) {
      throw ParseError(header.number, "duplicate gamma name", "distinct gamma names", header.tokens[1]);
    }
    names.push_back(header.tokens[1]);
    for (std::size_t row = 0; row < n; ++row) {
      const Line& line = take("table row");
      if (line.tokens.size() != n) {
        throw ParseError(line.number,
                         "row " + std::to_string(row + 1) + " of gamma '" + names.back() + "' needs " +
                             std::to_string(n) + " entries",
                         std::to_string(n) + " entries", std::to_string(line.tokens.size()) + " entries");
      }
      for (const auto& tok : line.tokens) {
        auto it = label_index.find(tok);
        if (it == label_index.end()) throw ParseError(line.number, "unknown label", "a declared label", tok);
        cells.push_back(it->second);
      }
    }
  }
  if (next < lines.size()) {
    throw ParseError(lines[next].number, "unexpected content after the last gamma block", "end of input",
                     join(lines[next].tokens));
  }
  try {
    return GammaGroupoid(n, m, std::move(cells), std::move(labels), std::move(names));
  } catch (const ContractViolation& e) {
    throw ParseError(1, e.what());
  }
}

GammaGroupoid parse_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

std::string serialize(const GammaGroupoid& G) {
  const std::size_t n = G.order();
  std::string out = "order " + std::to_string(n) + "\ngammas " + std::to_string(G.gammas()) + "\nlabels";
  for (const auto& l : G.labels()) out += " " + l;
  out += "\n";
  for (GammaIndex g = 0; g < G.gammas(); ++g) {
    out += "gamma " + G.gamma_name(g) + "\n";
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (b > 0) out += ' ';
        out += G.label(G.mul(a, g, b));
      }
      out += '\n';
    }
  }
  return out;
}

void write_file(const std::filesystem::path& path, const GammaGroupoid& G) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize(G);
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace gag
