#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "trirain/canon.hpp"
#include "trirain/cli.hpp"
#include "trirain/constructions.hpp"
#include "trirain/io.hpp"

using namespace trirain;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("trirain_cli_" + name);
  std::ofstream(path, std::ios::binary) << text;
  return path.string();
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

const char* kRainbow3 = "trifam 1\nmode set\nn 6\n0 1 3\n1 2 4\n0 2 5\n";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("check") {
    auto t8 = write_temp("t8.trifam", serialize_family(t_star(8)));
    auto r = run({"check", t8});
    CHECK(r.status == cli::kOk);
    CHECK(r.out == "rainbow-free\n");

    auto rb = run({"check", write_temp("rainbow3.trifam", kRainbow3)});
    CHECK(rb.status == cli::kFails);
    CHECK(rb.out.rfind("rainbow 0 1 2\n", 0) == 0);

    auto bad = run({"check", write_temp("garbage.txt", "hello\n")});
    CHECK(bad.status == cli::kUsage);
    CHECK(has(bad.err, "line 1"));

    CHECK(run({"check", "/nonexistent/file.trifam"}).status == cli::kUsage);
  }

  TEST_CASE("check with the bound") {
    auto t8 = write_temp("t8b.trifam", serialize_family(t_star(8)));
    auto r = run({"check", t8, "--verify-bound"});
    CHECK(r.status == cli::kOk);
    CHECK(has(r.out, "bound 8 <= 64/8 holds"));
    auto f5 = write_temp("f5b.trifam", serialize_family(fig5_family()));
    CHECK(has(run({"check", f5, "--verify-bound"}).out, "n/a"));
  }

  TEST_CASE("construct") {
    auto r = run({"construct", "tstar", "--n", "8"});
    CHECK(r.status == cli::kOk);
    CHECK(parse_family(r.out) == t_star(8));
    CHECK(r.out == serialize_family(t_star(8)));

    CHECK(run({"construct", "tstar", "--n", "6"}).status == cli::kUsage);
    CHECK(run({"construct", "bogus"}).status == cli::kUsage);

    auto f5 = run({"construct", "fig5"});
    CHECK(f5.status == cli::kOk);
    auto fam = parse_family(f5.out);
    CHECK(fam.size() == 12);
    CHECK(fam.mode() == Mode::Multiset);
    CHECK(parse_family(run({"construct", "fig5", "--support"}).out) == fig5_support());

    auto pairs = run({"construct", "pairs", "--n", "7", "--pairs", "2", "--apexes", "3"});
    CHECK(parse_family(pairs.out) == pair_family(7, 2, 3));
    CHECK(run({"construct", "pairs", "--n", "4", "--pairs", "2", "--apexes", "3"}).status == cli::kUsage);

    auto in = write_temp("one.trifam", "trifam 1\nmode set\nn 3\n0 1 2\n");
    CHECK(run({"construct", "double", "--in", in}).out == "trifam 1\nmode multiset\nn 3\n0 1 2 x2\n");
    CHECK(run({"construct", "double"}).status == cli::kUsage);
  }

  TEST_CASE("out path") {
    auto path = std::filesystem::temp_directory_path() / "trirain_cli_out.trifam";
    std::filesystem::remove(path);
    auto r = run({"--out", path.string(), "construct", "tstar", "--n", "4"});
    CHECK(r.status == cli::kOk);
    CHECK(r.out.empty());
    CHECK(read_family_file(path) == t_star(4));
    std::filesystem::remove(path);
  }

  TEST_CASE("certify") {
    auto t12 = write_temp("t12.trifam", serialize_family(t_star(12)));
    auto r = run({"--porcelain", "certify", t12});
    CHECK(r.status == cli::kOk);
    CHECK(has(r.out, "is_tstar true\n"));
    CHECK(has(r.out, "pass true\n"));

    auto p7 = write_temp("p7.trifam", serialize_family(pair_family(7, 2, 3)));
    auto rp = run({"--porcelain", "certify", p7});
    CHECK(rp.status == cli::kOk);
    CHECK(has(rp.out, "is_tstar n/a\n"));

    auto rb = run({"certify", write_temp("rainbow3c.trifam", kRainbow3)});
    CHECK(rb.status == cli::kFails);
    CHECK(has(rb.out, "rainbow 0 1 2"));

    CHECK(run({"certify", t12, "--mis-limit", "4"}).status == cli::kLimit);
  }

  TEST_CASE("search") {
    auto r = run({"search", "--n", "8", "--mode", "set", "--enumerate-extremal"});
    CHECK(r.status == cli::kOk);
    CHECK(has(r.out, "best 8\n"));
    CHECK(has(r.out, "classes 1\n"));
    CHECK(has(r.out, "completed true\n"));

    auto p = run({"search", "--n", "9", "--mode", "multiset", "--prove", "12"});
    CHECK(p.status == cli::kOk);
    CHECK(has(p.out, "witness found\n"));

    auto no = run({"search", "--n", "8", "--prove", "9"});
    CHECK(no.status == cli::kFails);
    CHECK(has(no.out, "no witness (exhausted)\n"));

    auto lim = run({"search", "--n", "8", "--node-limit", "3"});
    CHECK(lim.status == cli::kLimit);
    CHECK(has(lim.out, "completed false\n"));

    auto undecided = run({"search", "--n", "8", "--prove", "9", "--node-limit", "3"});
    CHECK(undecided.status == cli::kLimit);
    CHECK(has(undecided.out, "undecided (limit hit)\n"));

    CHECK(run({"search", "--n", "2"}).status == cli::kUsage);
    CHECK(run({"search", "--n", "5", "--mode", "bag"}).status == cli::kUsage);
    CHECK(run({"search"}).status == cli::kUsage);
  }

  TEST_CASE("search output does not depend on workers") {
    auto one = run({"search", "--n", "7", "--mode", "multiset", "--workers", "1"});
    auto four = run({"search", "--n", "7", "--mode", "multiset", "--workers", "4"});
    CHECK(one.status == cli::kOk);
    CHECK(one.out == four.out);
  }

  TEST_CASE("search checkpoint and resume") {
    auto path = (std::filesystem::temp_directory_path() / "trirain_cli_ckpt").string();
    std::filesystem::remove(path);
    auto full = run({"search", "--n", "8", "--enumerate-extremal", "--split-depth", "2"});
    auto first = run({"search", "--n", "8", "--enumerate-extremal", "--split-depth", "2", "--node-limit", "20",
                      "--checkpoint", path});
    CHECK(first.status == cli::kLimit);
    auto second = run({"search", "--n", "8", "--enumerate-extremal", "--split-depth", "2", "--resume", path});
    CHECK(second.status == cli::kOk);
    auto tail = [](const std::string& s) { return s.substr(s.find("witnesses ")); };
    CHECK(tail(second.out) == tail(full.out));
    CHECK(has(second.out, "classes 1\n"));
    std::filesystem::remove(path);
  }

  TEST_CASE("rs") {
    auto f5 = write_temp("f5.trifam", serialize_family(fig5_family()));
    auto r = run({"--porcelain", "rs", f5});
    CHECK(r.status == cli::kOk);
    CHECK(has(r.out, "total 12\n"));
    CHECK(has(r.out, "t2_constraints true\n"));

    auto bad = write_temp("shared.trifam", "trifam 1\nmode multiset\nn 4\n0 1 2 x2\n0 1 3 x2\n");
    CHECK(run({"rs", bad}).status == cli::kFails);
  }

  TEST_CASE("iso and canon") {
    auto a = write_temp("a.trifam", serialize_family(t_star(8)));
    std::vector<int> perm = {7, 3, 5, 1, 0, 6, 2, 4};
    auto b = write_temp("b.trifam", serialize_family(relabel(t_star(8), perm)));
    auto r = run({"iso", a, b});
    CHECK(r.status == cli::kOk);
    CHECK(r.out == "isomorphic\n");

    auto c = write_temp("c.trifam", serialize_family(pair_family(8, 2, 3)));
    auto rn = run({"iso", a, c});
    CHECK(rn.status == cli::kFails);
    CHECK(rn.out == "not-isomorphic\n");

    auto ca = run({"canon", a});
    auto cb = run({"canon", b});
    CHECK(ca.status == cli::kOk);
    CHECK(ca.out == cb.out);
    CHECK(parse_family(ca.out) == canonical_family(t_star(8)));
    CHECK(has(run({"--porcelain", "canon", a}).out, "# code "));
  }

  TEST_CASE("config file") {
    auto cfg = write_temp("search.conf", "# search defaults\nn = 8\nenumerate-extremal = true\nworkers = 2\n");
    auto r = run({"--config", cfg, "search"});
    CHECK(r.status == cli::kOk);
    CHECK(has(r.out, "search n 8 "));
    CHECK(has(r.out, "classes 1\n"));

    auto flag_wins = run({"--config", cfg, "search", "--n", "6"});
    CHECK(has(flag_wins.out, "search n 6 "));
    CHECK(has(flag_wins.out, "best 4\n"));

    auto unknown = write_temp("bad.conf", "colour = blue\n");
    CHECK(run({"--config", unknown, "search", "--n", "5"}).status == cli::kUsage);
    auto malformed = write_temp("bad2.conf", "just words\n");
    CHECK(run({"--config", malformed, "search", "--n", "5"}).status == cli::kUsage);
    CHECK(run({"--config", "/nonexistent.conf", "search", "--n", "5"}).status == cli::kUsage);
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).status == cli::kUsage);
    CHECK(run({"frobnicate"}).status == cli::kUsage);
    CHECK(run({"check"}).status == cli::kUsage);
    CHECK(run({"--help"}).status == cli::kOk);
  }
}
