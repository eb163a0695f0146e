#pragma once

#include <string>
#include <vector>

#include "gag/gag.hpp"
#include "oracle/naive.hpp"

namespace gag::test {

inline std::string fixture(const std::string& name) { return std::string(GAG_FIXTURE_DIR) + "/" + name; }

inline const GammaGroupoid& worked_example() {
  static const GammaGroupoid G = parse_file(fixture("paper_example.gag"));
  return G;
}

inline const GammaGroupoid& dot_example() {
  static const GammaGroupoid G = parse_file(fixture("paper_dot.gag"));
  return G;
}

// Subset from 1-based display labels of the fixtures.
inline Subset labels(std::size_t n, std::initializer_list<std::size_t> one_based) {
  Subset s(n);
  for (auto e : one_based) s.insert(e - 1);
  return s;
}

inline oracle::Table to_table(const GammaGroupoid& G) { return {G.order(), G.gammas(), G.cell_vector()}; }

inline oracle::Set to_set(const Subset& s) { return {s.begin(), s.end()}; }

inline Subset from_set(std::size_t n, const oracle::Set& s) {
  Subset out(n);
  for (auto e : s) out.insert(e);
  return out;
}

// Left-invertive structures up to the given size, from the search module.
inline const std::vector<GammaGroupoid>& small_left_invertive() {
  static const std::vector<GammaGroupoid> all = [] {
    std::vector<GammaGroupoid> out;
    for (std::size_t n = 1; n <= 3; ++n) {
      for (std::size_t m = 1; m <= 2; ++m) {
        SearchSpec spec;
        spec.order = n;
        spec.gammas = m;
        spec.filters = {Filter::LeftInvertive};
        for (auto& G : enumerate_structures(spec)) out.push_back(std::move(G));
      }
    }
    return out;
  }();
  return all;
}

}  // namespace gag::test
