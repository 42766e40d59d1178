#include "trirain/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "trirain/canon.hpp"
#include "trirain/certifier.hpp"
#include "trirain/constructions.hpp"
#include "trirain/io.hpp"
#include "trirain/rainbow.hpp"
#include "trirain/rs.hpp"
#include "trirain/search.hpp"

namespace trirain::cli {

namespace {

struct Options {
  std::string out_path;
  bool porcelain = false;
  std::string config_path;

  std::string file;
  std::string file2;
  bool verify_bound = false;

  std::string kind;
  int n = 0;
  int pairs = 0;
  int apexes = 0;
  bool support_only = false;

  int mis_limit = kDefaultMisLimit;

  std::string mode = "set";
  std::optional<int> prove;
  bool enumerate = false;
  int workers = 1;
  std::uint64_t node_limit = 0;
  std::string checkpoint;
  std::string resume;
  int split_depth = 3;
  int max_witnesses = 4;
  double checkpoint_interval = 10.0;
  bool no_prune = false;
};

std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path);
  std::map<std::string, std::string> out;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw std::runtime_error("config line " + std::to_string(line_no) + ": expected key = value");
    auto trim = [](std::string s) {
      auto a = s.find_first_not_of(" \t\r");
      auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

bool given(const std::vector<std::string>& args, const std::string& flag) {
  for (const auto& a : args) {
    if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
  }
  return false;
}

// Config entries become flags appended after the command line, skipped when
// the flag was given explicitly.
std::vector<std::string> merge_config(CLI::App& app, std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;

  CLI::App* sub = nullptr;
  for (const auto& a : args) {
    for (CLI::App* s : app.get_subcommands([](CLI::App*) { return true; })) {
      if (s->get_name() == a) sub = s;
    }
    if (sub) break;
  }
  for (const auto& [key, value] : read_config(path)) {
    std::string flag = "--" + key;
    if (key == "config" || given(args, flag)) continue;
    const CLI::Option* opt = sub ? sub->get_option_no_throw(flag) : nullptr;
    if (!opt) opt = app.get_option_no_throw(flag);
    if (!opt) throw std::runtime_error("config key '" + key + "' is not an option of this command");
    args.push_back(flag + "=" + value);
  }
  return args;
}

Mode parse_mode(const std::string& s) { return s == "multiset" ? Mode::Multiset : Mode::Set; }

int cmd_check(const Options& o, std::ostream& os) {
  TriangleFamily f = read_family_file(o.file);
  auto cert = find_rainbow(f);
  if (cert) {
    os << format_certificate(*cert);
    return kFails;
  }
  os << "rainbow-free\n";
  if (o.verify_bound) {
    if (f.mode() == Mode::Multiset) {
      os << "bound n/a (multiset)\n";
    } else {
      bool ok = 8LL * f.size() <= static_cast<long long>(f.n()) * f.n();
      os << "bound " << f.size() << " <= " << f.n() * f.n() << "/8 " << (ok ? "holds" : "violated") << '\n';
      if (!ok) return kFails;
    }
  }
  return kOk;
}

int cmd_construct(const Options& o, std::ostream& os) {
  TriangleFamily f(1, Mode::Set);
  if (o.kind == "tstar") {
    f = t_star(o.n);
  } else if (o.kind == "pairs") {
    f = pair_family(o.n, o.pairs, o.apexes);
  } else if (o.kind == "double") {
    if (o.file.empty()) throw CLI::ValidationError("construct double", "needs an input family (--in FILE)");
    f = double_family(read_family_file(o.file));
  } else {
    f = o.support_only ? fig5_support() : fig5_family();
  }
  os << serialize_family(f);
  return kOk;
}

int cmd_certify(const Options& o, std::ostream& os) {
  TriangleFamily f = read_family_file(o.file);
  try {
    CertifierReport r = certify(f, o.mis_limit);
    os << format_report(r, o.porcelain);
    return r.passed() ? kOk : kFails;
  } catch (const RainbowInputError& e) {
    os << format_certificate(e.certificate);
    return kFails;
  }
}

int cmd_search(const Options& o, std::ostream& os) {
  SearchConfig cfg;
  cfg.n = o.n;
  cfg.mode = parse_mode(o.mode);
  cfg.target = o.prove ? SearchTarget::ProveSize
                       : (o.enumerate ? SearchTarget::EnumerateExtremal : SearchTarget::Maximize);
  cfg.prove_k = o.prove.value_or(0);
  cfg.node_limit = o.node_limit;
  cfg.workers = o.workers;
  cfg.split_depth = o.split_depth;
  cfg.max_witnesses = o.max_witnesses;
  cfg.checkpoint_interval_seconds = o.checkpoint_interval;
  cfg.prune = !o.no_prune;
  if (!o.checkpoint.empty()) cfg.checkpoint_path = o.checkpoint;
  if (!o.resume.empty()) cfg.resume_path = o.resume;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("search", e.what());
  }

  SearchResult r = max_family(cfg);
  os << "search n " << cfg.n << " mode " << to_string(cfg.mode) << " target " << to_string(cfg.target);
  if (o.prove) os << ' ' << *o.prove;
  os << '\n';
  int status = r.completed ? kOk : kLimit;
  if (o.prove) {
    if (r.found) {
      os << "witness found\n";
    } else if (r.completed) {
      os << "no witness (exhausted)\n";
      status = kFails;
    } else {
      os << "undecided (limit hit)\n";
    }
  }
  os << "best " << r.best_size << '\n';
  if (r.extremal_class_count) os << "classes " << *r.extremal_class_count << '\n';
  os << "completed " << (r.completed ? "true" : "false") << '\n'
     << "nodes " << r.nodes_explored << '\n'
     << "nodes_by_size";
  for (auto c : r.nodes_by_size) os << ' ' << c;
  os << '\n'
     << "witnesses " << r.witnesses.size() << '\n';
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    os << "witness " << i + 1 << '\n' << serialize_family(r.witnesses[i]);
  }
  return status;
}

int cmd_rs(const Options& o, std::ostream& os) {
  TriangleFamily f = read_family_file(o.file);
  MultisetDecomposition d = decompose(f);
  os << bound_report(d, o.porcelain);
  auto diag = check_t2_constraints(d, f);
  if (o.porcelain) {
    os << "t2_constraints " << (diag.ok() ? "true" : "false") << '\n';
  } else {
    os << "T2 edge-disjoint, no extra triangles in G2: " << diag.describe() << '\n';
  }
  bool rainbow_free = !find_rainbow(f);
  if (rainbow_free && !diag.ok()) {
    throw std::logic_error("rainbow-free family violates the doubled-member constraints");
  }
  return diag.ok() ? kOk : kFails;
}

int cmd_iso(const Options& o, std::ostream& os) {
  bool iso = are_isomorphic(read_family_file(o.file), read_family_file(o.file2));
  os << (iso ? "isomorphic" : "not-isomorphic") << '\n';
  return iso ? kOk : kFails;
}

int cmd_canon(const Options& o, std::ostream& os) {
  TriangleFamily f = read_family_file(o.file);
  os << serialize_family(canonical_family(f));
  if (o.porcelain) os << "# code " << canonical_form(f).hex() << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Rainbow-triangle-free triangle families: checks, constructions, certificates, search", "trirain"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", o.out_path, "Write output to PATH");
  app.add_flag("--porcelain", o.porcelain, "Machine-readable output");
  app.add_option("--config", o.config_path, "key = value file mirroring flags; flags win");

  auto* check = app.add_subcommand("check", "Look for a rainbow triangle");
  check->add_option("file", o.file)->required();
  check->add_flag("--verify-bound", o.verify_bound, "Also compare the size against n^2/8");

  auto* construct = app.add_subcommand("construct", "Build a named family");
  construct->add_option("kind", o.kind)->required()->check(CLI::IsMember({"tstar", "pairs", "double", "fig5"}));
  construct->add_option("--n", o.n);
  construct->add_option("--pairs", o.pairs);
  construct->add_option("--apexes", o.apexes);
  construct->add_option("--in", o.file, "Input family for 'double'");
  construct->add_flag("--support", o.support_only, "fig5: emit the 6-triangle support only");

  auto* cert = app.add_subcommand("certify", "Recompute the extremal bound machinery on a family");
  cert->add_option("file", o.file)->required();
  cert->add_option("--mis-limit", o.mis_limit, "Largest n for the exact independent set");

  auto* search = app.add_subcommand("search", "Exhaustive maximum-family search");
  search->add_option("--n", o.n)->required();
  search->add_option("--mode", o.mode)->check(CLI::IsMember({"set", "multiset"}));
  search->add_option("--prove", o.prove, "Decide whether a family of size >= K exists");
  search->add_flag("--enumerate-extremal", o.enumerate, "Count all isomorphism classes at the maximum");
  search->add_option("--workers", o.workers);
  search->add_option("--node-limit", o.node_limit);
  search->add_option("--checkpoint", o.checkpoint);
  search->add_option("--resume", o.resume);
  search->add_option("--split-depth", o.split_depth);
  search->add_option("--max-witnesses", o.max_witnesses);
  search->add_flag("--no-prune", o.no_prune, "Visit every isomorphism class (census)");
  search->add_option("--checkpoint-interval", o.checkpoint_interval, "Seconds between checkpoint writes");

  auto* rs = app.add_subcommand("rs", "Multiset decomposition and doubled-member report");
  rs->add_option("file", o.file)->required();

  auto* iso = app.add_subcommand("iso", "Test two families for isomorphism");
  iso->add_option("a", o.file)->required();
  iso->add_option("b", o.file2)->required();

  auto* canon = app.add_subcommand("canon", "Print the canonical form");
  canon->add_option("file", o.file)->required();

  std::ostringstream buf;
  int status = kOk;
  try {
    std::vector<std::string> args = merge_config(app, raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
    if (check->parsed()) status = cmd_check(o, buf);
    if (construct->parsed()) status = cmd_construct(o, buf);
    if (cert->parsed()) status = cmd_certify(o, buf);
    if (search->parsed()) status = cmd_search(o, buf);
    if (rs->parsed()) status = cmd_rs(o, buf);
    if (iso->parsed()) status = cmd_iso(o, buf);
    if (canon->parsed()) status = cmd_canon(o, buf);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const FamilyError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kLimit;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (!o.out_path.empty()) {
    std::ofstream file(o.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot write " << o.out_path << '\n';
      return kUsage;
    }
    file << buf.str();
  } else {
    out << buf.str();
  }
  return status;
}

}  // namespace trirain::cli
