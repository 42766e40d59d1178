#include "trirain/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace trirain {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int to_int(std::string_view tok, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected integer, got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

TriangleFamily parse_family(std::string_view text) {
  int line_no = 0;
  int header = 0;
  Mode mode = Mode::Set;
  int n = 0;
  std::vector<Member> members;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tok = split_ws(line);
    if (tok.empty() || tok[0].front() == '#') continue;

    if (header == 0) {
      if (tok.size() != 2 || tok[0] != "trifam" || tok[1] != "1") {
        throw ParseError(line_no, "expected header 'trifam 1'");
      }
      ++header;
    } else if (header == 1) {
      if (tok.size() != 2 || tok[0] != "mode") throw ParseError(line_no, "expected 'mode set|multiset'");
      if (tok[1] == "set") {
        mode = Mode::Set;
      } else if (tok[1] == "multiset") {
        mode = Mode::Multiset;
      } else {
        throw ParseError(line_no, "unknown mode '" + std::string(tok[1]) + "'");
      }
      ++header;
    } else if (header == 2) {
      if (tok.size() != 2 || tok[0] != "n") throw ParseError(line_no, "expected 'n <count>'");
      n = to_int(tok[1], line_no);
      if (n < 1 || n > kMaxVertices) throw ParseError(line_no, "n out of range [1, 64]");
      ++header;
    } else {
      if (tok.size() != 3 && tok.size() != 4) throw ParseError(line_no, "expected '<a> <b> <c> [x2]'");
      int a = to_int(tok[0], line_no);
      int b = to_int(tok[1], line_no);
      int c = to_int(tok[2], line_no);
      if (a == b || b == c || a == c) throw ParseError(line_no, "triangle vertices not distinct");
      if (!(a < b && b < c)) throw ParseError(line_no, "vertices not ascending");
      if (a < 0 || c >= n) throw ParseError(line_no, "vertex out of range");
      int mult = 1;
      if (tok.size() == 4) {
        if (tok[3].size() < 2 || tok[3][0] != 'x') throw ParseError(line_no, "bad multiplicity suffix");
        mult = to_int(tok[3].substr(1), line_no);
        if (mult < 1 || mult > 2) throw ParseError(line_no, "multiplicity outside {1,2}");
        if (mult == 2 && mode == Mode::Set) throw ParseError(line_no, "multiplicity 2 in set mode");
      }
      Triangle t{a, b, c};
      for (const Member& m : members) {
        if (m.tri == t) throw ParseError(line_no, "duplicate triangle line");
      }
      members.push_back({t, mult});
    }
  }
  if (header < 3) throw ParseError(line_no, "truncated header");
  return TriangleFamily(n, mode, std::move(members));
}

std::string serialize_family(const TriangleFamily& f) {
  std::ostringstream os;
  os << "trifam 1\nmode " << to_string(f.mode()) << "\nn " << f.n() << "\n";
  const TriangleFamily sorted = f.normalized();
  for (const Member& m : sorted.members()) {
    os << m.tri.a << ' ' << m.tri.b << ' ' << m.tri.c;
    if (m.multiplicity == 2) os << " x2";
    os << '\n';
  }
  return os.str();
}

TriangleFamily read_family_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_family(buf.str());
}

}  // namespace trirain
