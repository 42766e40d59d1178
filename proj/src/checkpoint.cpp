#include "trirain/checkpoint.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "trirain/io.hpp"

namespace trirain {

namespace {

std::string expect_key(std::istringstream& line, const std::string& key) {
  std::string k;
  line >> k;
  if (k != key) throw std::runtime_error("checkpoint: expected '" + key + "', got '" + k + "'");
  std::string rest;
  std::getline(line, rest);
  auto start = rest.find_first_not_of(' ');
  return start == std::string::npos ? "" : rest.substr(start);
}

}  // namespace

std::string serialize_checkpoint(const Checkpoint& c) {
  std::ostringstream os;
  os << "ckpt 1\n"
     << "n " << c.n << '\n'
     << "mode " << to_string(c.mode) << '\n'
     << "target " << c.target << '\n'
     << "k " << c.k << '\n'
     << "split_depth " << c.split_depth << '\n'
     << "items " << c.items << '\n'
     << "done";
  for (int i : c.done) os << ' ' << i;
  os << '\n'
     << "nodes " << c.nodes << '\n'
     << "best " << c.best << '\n'
     << "found_item " << c.found_item << '\n'
     << "witnesses " << c.witnesses.size() << '\n';
  for (const TriangleFamily& w : c.witnesses) os << "witness\n" << serialize_family(w);
  os << "end\n";
  return os.str();
}

Checkpoint parse_checkpoint(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  for (std::string l; std::getline(in, l);) lines.push_back(l);

  std::size_t at = 0;
  auto next = [&](const std::string& key) {
    if (at >= lines.size()) throw std::runtime_error("checkpoint: truncated before '" + key + "'");
    std::istringstream line(lines[at++]);
    return expect_key(line, key);
  };

  Checkpoint c;
  if (next("ckpt") != "1") throw std::runtime_error("checkpoint: unsupported version");
  c.n = std::stoi(next("n"));
  std::string mode = next("mode");
  if (mode != "set" && mode != "multiset") throw std::runtime_error("checkpoint: bad mode");
  c.mode = mode == "set" ? Mode::Set : Mode::Multiset;
  c.target = next("target");
  c.k = std::stoi(next("k"));
  c.split_depth = std::stoi(next("split_depth"));
  c.items = std::stoi(next("items"));
  std::istringstream done(next("done"));
  for (int i; done >> i;) c.done.push_back(i);
  c.nodes = std::stoull(next("nodes"));
  c.best = std::stoi(next("best"));
  c.found_item = std::stoi(next("found_item"));
  int count = std::stoi(next("witnesses"));
  for (int w = 0; w < count; ++w) {
    next("witness");
    std::string block;
    while (at < lines.size() && lines[at] != "witness" && lines[at] != "end") block += lines[at++] + "\n";
    c.witnesses.push_back(parse_family(block));
  }
  next("end");
  return c;
}

void write_checkpoint(const std::filesystem::path& path, const Checkpoint& c) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp.string());
    out << serialize_checkpoint(c);
  }
  std::filesystem::rename(tmp, path);
}

Checkpoint read_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open checkpoint " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_checkpoint(buf.str());
}

}  // namespace trirain
