#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gag/groupoid.hpp"

namespace gag {

// Reading the .gag text format:
//
//   # comment to end of line; blank lines ignored
//   order 5
//   gammas 3
//   labels 1 2 3 4 5        (optional, defaults to 1 .. n)
//   gamma alpha
//   <n rows of n labels>    (row a, column b holds a alpha b)
//   gamma beta
//   ...
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::string message, std::string expected = {}, std::string found = {});

  std::size_t line() const noexcept { return line_; }
  const std::string& message() const noexcept { return message_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::size_t line_;
  std::string message_;
  std::string expected_;
  std::string found_;
};

GammaGroupoid parse(std::string_view text);
GammaGroupoid parse_file(const std::filesystem::path& path);

// Canonical text: single spaces, every line newline-terminated, no comments,
// labels line always present.
std::string serialize(const GammaGroupoid& G);
void write_file(const std::filesystem::path& path, const GammaGroupoid& G);

}  // namespace gag
