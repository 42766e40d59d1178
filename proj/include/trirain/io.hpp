#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "trirain/family.hpp"

namespace trirain {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// TRIFAM v1:
//   trifam 1
//   mode set|multiset
//   n <count>
//   <a> <b> <c> [x2]      one per line, a < b < c
// '#' lines are comments; blank lines are ignored.

/// Member order is preserved as given.
TriangleFamily parse_family(std::string_view text);

/// Normalized form: members sorted lexicographically, "x2" suffix for doubles.
std::string serialize_family(const TriangleFamily& f);

TriangleFamily read_family_file(const std::filesystem::path& path);

}  // namespace trirain
