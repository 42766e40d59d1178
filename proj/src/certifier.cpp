#include "trirain/certifier.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "trirain/canon.hpp"
#include "trirain/constructions.hpp"

namespace trirain {

namespace {

std::string join(const std::vector<int>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out.push_back(sep);
    out += std::to_string(v[i]);
  }
  return out;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string opt_bool(const std::optional<bool>& b) { return b ? yes_no(*b) : "n/a"; }

// n^2/4 as an integer or a reduced fraction.
std::string quarter(std::int64_t n_squared) {
  if (n_squared % 4 == 0) return std::to_string(n_squared / 4);
  if (n_squared % 2 == 0) return std::to_string(n_squared / 2) + "/2";
  return std::to_string(n_squared) + "/4";
}

}  // namespace

Bipartition make_bipartition(const UnionGraph& g, int mis_limit) {
  Bipartition p;
  p.a = max_independent_set(g, mis_limit);
  std::uint64_t all = g.n() >= 64 ? ~0ULL : (1ULL << g.n()) - 1;
  p.b = all & ~p.a;
  for (Edge e : g.edges()) {
    if (p.in_b(e)) p.e_b.push_back(e);
  }
  return p;
}

std::vector<MemberRef> BetaAssignment::preimage(Edge e) const {
  std::vector<MemberRef> out;
  for (const auto& [r, edge] : beta) {
    if (edge == e) out.push_back(r);
  }
  return out;
}

BetaAssignment build_beta(const TriangleFamily& f, const Bipartition& p) {
  UnionGraph g(f);
  BetaAssignment out;
  for (MemberRef r : f.refs()) {
    const Triangle& t = f.triangle(r);
    std::vector<Edge> inside;
    for (Edge e : t.edges()) {
      if (p.in_b(e)) inside.push_back(e);
    }
    if (inside.empty()) {
      throw CertifyError("member " + std::to_string(r.index) + " copy " + std::to_string(r.copy) +
                         " has no edge inside B");
    }
    Edge chosen = inside.front();
    if (inside.size() == 3) {
      for (Edge e : inside) {
        const auto& owners = g.owners(e);
        bool shared = std::any_of(owners.begin(), owners.end(), [&](MemberRef o) { return o != r; });
        if (shared) {
          chosen = e;
          break;
        }
      }
    }
    out.beta[r] = chosen;
    ++out.d[chosen];
  }
  return out;
}

Eq1Result check_eq1(const TriangleFamily& f, const Bipartition& p, const BetaAssignment& beta) {
  Eq1Result r;
  for (int b : mask_vertices(p.b)) {
    for (Edge e : p.e_b) {
      if (e.contains(b)) r.value += beta.d_of(e);
    }
  }
  r.expected = 2 * static_cast<std::int64_t>(f.size());
  r.holds = r.value == r.expected;
  return r;
}

std::string describe(const WitnessViolation& v) {
  std::ostringstream os;
  os << (v.kind == WitnessViolation::Kind::NotDistinct ? "repeated pick" : "adjacent picks") << " near triple "
     << v.triple[0] << ' ' << v.triple[1] << ' ' << v.triple[2];
  return os.str();
}

IndependentWitness build_witness(const TriangleFamily& f, const Bipartition& p, const BetaAssignment& beta,
                                 int b) {
  IndependentWitness w;
  w.b = b;
  for (Edge e : p.e_b) {
    if (!e.contains(b)) continue;
    auto pre = beta.preimage(e);
    w.expected += static_cast<int>(pre.size());
    for (MemberRef t : pre) {
      int pick = pre.size() == 1 ? e.other(b) : f.triangle(t).opposite(e);
      if (w.contributor.count(pick) && !w.violation) {
        auto v = f.triangle(t).vertices();
        w.violation = WitnessViolation{WitnessViolation::Kind::NotDistinct, v};
      }
      w.contributor.emplace(pick, t);
      w.picks.push_back(pick);
    }
  }

  UnionGraph g(f);
  std::uint64_t set = 0;
  for (int v : w.picks) set |= 1ULL << v;
  w.verified_independent = g.independent(set);
  if (!w.verified_independent && !w.violation) {
    for (int v1 : mask_vertices(set)) {
      std::uint64_t hit = g.neighbors(v1) & set & bits_above(v1);
      if (hit) {
        int v2 = lowest_bit(hit);
        std::array<int, 3> tri{b, v1, v2};
        std::sort(tri.begin(), tri.end());
        w.violation = WitnessViolation{WitnessViolation::Kind::NotIndependent, tri};
        break;
      }
    }
  }
  return w;
}

Eq2Result check_eq2(const Bipartition& p, std::span<const IndependentWitness> witnesses) {
  Eq2Result r;
  r.bound = p.size_a();
  r.holds = true;
  for (const IndependentWitness& w : witnesses) {
    Eq2Row row{w.b, w.expected, w.expected == r.bound, w.ok()};
    r.holds = r.holds && row.witness_ok && row.sum <= r.bound;
    r.rows.push_back(row);
  }
  return r;
}

ChainResult check_master_chain(const TriangleFamily& f, const Bipartition& p) {
  ChainResult c;
  c.twice_size = 2 * static_cast<std::int64_t>(f.size());
  c.product = static_cast<std::int64_t>(p.size_a()) * p.size_b();
  c.n_squared = static_cast<std::int64_t>(f.n()) * f.n();
  c.holds = c.twice_size <= c.product && 4 * c.product <= c.n_squared;
  return c;
}

bool check_step1(const TriangleFamily& f, const Bipartition& p) {
  return std::none_of(f.members().begin(), f.members().end(),
                      [&](const Member& m) { return (m.tri.mask() & p.b) == m.tri.mask(); });
}

ColoredMultigraph build_tb(const TriangleFamily& f, const Bipartition& p) {
  ColoredMultigraph g;
  g.vertices = mask_vertices(p.b);
  g.palette = mask_vertices(p.a);
  for (MemberRef r : f.refs()) {
    const Triangle& t = f.triangle(r);
    std::uint64_t in_b = t.mask() & p.b;
    if (popcount(in_b) != 2) {
      throw CertifyError("member " + std::to_string(r.index) + " (" + std::to_string(t.a) + " " +
                         std::to_string(t.b) + " " + std::to_string(t.c) + ") has " +
                         std::to_string(popcount(in_b)) + " vertices in B, expected 2");
    }
    auto ends = mask_vertices(in_b);
    g.edges.push_back({Edge{ends[0], ends[1]}, lowest_bit(t.mask() & p.a)});
  }
  return g;
}

TbProperties check_tb_properties(const ColoredMultigraph& g) {
  TbProperties out;
  const auto& es = g.edges;
  auto parallel = [&](std::size_t i) {
    for (std::size_t j = 0; j < es.size(); ++j) {
      if (j != i && es[j].edge == es[i].edge) return true;
    }
    return false;
  };

  std::set<Edge> simple_edges;
  for (const auto& e : es) simple_edges.insert(e.edge);
  out.triangle_free = true;
  for (Edge e : simple_edges) {
    for (int x : g.vertices) {
      if (x == e.u || x == e.v) continue;
      if (simple_edges.count(Edge::of(e.u, x)) && simple_edges.count(Edge::of(e.v, x))) {
        out.triangle_free = false;
      }
    }
  }

  // Middle edge (b, c); end edges (a, b) and (c, d) on four distinct vertices.
  out.path_ends_distinct = true;
  for (std::size_t mid = 0; mid < es.size(); ++mid) {
    for (auto [b, c] : {std::pair{es[mid].edge.u, es[mid].edge.v}, std::pair{es[mid].edge.v, es[mid].edge.u}}) {
      for (std::size_t i = 0; i < es.size(); ++i) {
        if (i == mid || !es[i].edge.contains(b)) continue;
        int a = es[i].edge.other(b);
        if (a == c) continue;
        for (std::size_t j = 0; j < es.size(); ++j) {
          if (j == mid || j == i || !es[j].edge.contains(c)) continue;
          int d = es[j].edge.other(c);
          if (d == a || d == b) continue;
          if (es[i].color == es[j].color) out.path_ends_distinct = false;
        }
      }
    }
  }

  out.same_color_simple = true;
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      bool touch = es[i].edge.contains(es[j].edge.u) || es[i].edge.contains(es[j].edge.v);
      if (touch && es[i].color == es[j].color && (parallel(i) || parallel(j))) out.same_color_simple = false;
    }
  }

  out.regular = true;
  for (int v : g.vertices) {
    int deg = static_cast<int>(std::count_if(es.begin(), es.end(), [&](const ColoredEdge& e) { return e.edge.contains(v); }));
    if (deg != g.m()) out.regular = false;
  }
  return out;
}

bool check_matched_pairs(const ColoredMultigraph& g) {
  const int m = g.m();
  if (m % 2 != 0) return false;
  std::map<int, std::set<int>> nbrs;
  std::map<Edge, std::vector<int>> colors;
  for (const auto& e : g.edges) {
    nbrs[e.edge.u].insert(e.edge.v);
    nbrs[e.edge.v].insert(e.edge.u);
    colors[e.edge].push_back(e.color);
  }
  for (int v : g.vertices) {
    if (nbrs[v].size() != 1) return false;
    int partner = *nbrs[v].begin();
    if (nbrs[partner].size() != 1 || *nbrs[partner].begin() != v) return false;
  }
  for (const auto& [e, cs] : colors) {
    std::set<int> distinct(cs.begin(), cs.end());
    if (static_cast<int>(cs.size()) != m || static_cast<int>(distinct.size()) != m) return false;
  }
  return static_cast<int>(colors.size()) * 2 == m;
}

bool CertifierReport::passed() const {
  bool base = eq1.holds && eq2.holds && chain.holds;
  if (!extremal) return base;
  return base && step1.value_or(false) && tb && tb->all() && matched_pairs.value_or(false) &&
         is_tstar.value_or(false);
}

CertifierReport certify(const TriangleFamily& f, int mis_limit) {
  if (auto c = find_rainbow(f)) throw RainbowInputError(*c);
  TriangleFamily support = f.mode() == Mode::Set ? f : f.support();

  CertifierReport r;
  r.n = f.n();
  r.mode = f.mode();
  r.original_size = f.size();
  r.size = support.size();
  UnionGraph g(support);
  r.partition = make_bipartition(g, mis_limit);
  r.beta = build_beta(support, r.partition);
  for (int b : mask_vertices(r.partition.b)) {
    r.witnesses.push_back(build_witness(support, r.partition, r.beta, b));
  }
  r.eq1 = check_eq1(support, r.partition, r.beta);
  r.eq2 = check_eq2(r.partition, r.witnesses);
  r.chain = check_master_chain(support, r.partition);
  r.extremal = 8 * static_cast<std::int64_t>(r.size) == static_cast<std::int64_t>(r.n) * r.n;
  if (r.extremal) {
    r.step1 = check_step1(support, r.partition);
    try {
      ColoredMultigraph tb = build_tb(support, r.partition);
      r.tb = check_tb_properties(tb);
      r.matched_pairs = check_matched_pairs(tb);
    } catch (const CertifyError& e) {
      r.tb_error = e.what();
      r.matched_pairs = false;
    }
    r.is_tstar = are_isomorphic(support, t_star(r.n));
  }
  return r;
}

std::string format_report(const CertifierReport& r, bool porcelain) {
  std::ostringstream os;
  const auto& p = r.partition;
  if (porcelain) {
    os << "n " << r.n << '\n'
       << "mode " << to_string(r.mode) << '\n'
       << "size " << r.original_size << '\n'
       << "support_size " << r.size << '\n'
       << "a " << join(mask_vertices(p.a), ',') << '\n'
       << "b " << join(mask_vertices(p.b), ',') << '\n'
       << "a_size " << p.size_a() << '\n'
       << "b_size " << p.size_b() << '\n'
       << "e_b_size " << p.e_b.size() << '\n'
       << "eq1 " << yes_no(r.eq1.holds) << '\n'
       << "eq1_value " << r.eq1.value << '\n'
       << "eq1_expected " << r.eq1.expected << '\n'
       << "eq2 " << yes_no(r.eq2.holds) << '\n';
    for (std::size_t i = 0; i < r.eq2.rows.size(); ++i) {
      const Eq2Row& row = r.eq2.rows[i];
      os << "eq2_row " << row.b << ' ' << row.sum << ' ' << r.eq2.bound << ' '
         << (row.equality ? "equal" : "strict") << ' ' << (row.witness_ok ? "verified" : "invalid") << ' '
         << (r.witnesses[i].picks.empty() ? "-" : join(r.witnesses[i].picks, ',')) << '\n';
    }
    os << "chain " << yes_no(r.chain.holds) << '\n'
       << "chain_2t " << r.chain.twice_size << '\n'
       << "chain_ab " << r.chain.product << '\n'
       << "chain_n2_4 " << quarter(r.chain.n_squared) << '\n'
       << "extremal " << yes_no(r.extremal) << '\n'
       << "step1 " << opt_bool(r.step1) << '\n'
       << "tb_p1 " << (r.tb ? yes_no(r.tb->triangle_free) : "n/a") << '\n'
       << "tb_p2 " << (r.tb ? yes_no(r.tb->path_ends_distinct) : "n/a") << '\n'
       << "tb_p3 " << (r.tb ? yes_no(r.tb->same_color_simple) : "n/a") << '\n'
       << "tb_p4 " << (r.tb ? yes_no(r.tb->regular) : "n/a") << '\n'
       << "matched_pairs " << opt_bool(r.matched_pairs) << '\n'
       << "is_tstar " << opt_bool(r.is_tstar) << '\n'
       << "pass " << yes_no(r.passed()) << '\n';
    return os.str();
  }

  os << "family: n = " << r.n << ", mode " << to_string(r.mode) << ", size " << r.original_size;
  if (r.mode == Mode::Multiset) os << " (support " << r.size << ")";
  os << '\n'
     << "A (maximum independent set, " << p.size_a() << "): " << join(mask_vertices(p.a), ' ') << '\n'
     << "B (complement, " << p.size_b() << "): " << join(mask_vertices(p.b), ' ') << '\n'
     << "E(B): " << p.e_b.size() << " edges\n";
  for (const auto& [e, d] : r.beta.d) os << "  d(" << e.u << ' ' << e.v << ") = " << d << '\n';
  os << "degree-sum identity: " << r.eq1.value << " = 2|T| = " << r.eq1.expected << "  ["
     << (r.eq1.holds ? "ok" : "FAIL") << "]\n";
  os << "per-vertex bound (sum of d <= |A| = " << r.eq2.bound << "): " << (r.eq2.holds ? "ok" : "FAIL") << '\n';
  for (std::size_t i = 0; i < r.eq2.rows.size(); ++i) {
    const Eq2Row& row = r.eq2.rows[i];
    const IndependentWitness& w = r.witnesses[i];
    os << "  b " << row.b << ": " << row.sum << (row.equality ? " = " : " < ") << r.eq2.bound << "  I_b {"
       << join(w.picks, ' ') << "} " << (row.witness_ok ? "independent" : "INVALID");
    if (w.violation) os << " (" << describe(*w.violation) << ")";
    os << '\n';
  }
  os << "chain: 2|T| = " << r.chain.twice_size << " <= |A||B| = " << r.chain.product
     << " <= n^2/4 = " << quarter(r.chain.n_squared) << "  [" << (r.chain.holds ? "ok" : "FAIL") << "]\n";
  if (r.extremal) {
    os << "extremal: |T| = n^2/8\n"
       << "  no member inside B: " << opt_bool(r.step1) << '\n';
    if (r.tb) {
      os << "  T^B triangle-free: " << yes_no(r.tb->triangle_free) << '\n'
         << "  T^B 3-edge paths have distinct end colors: " << yes_no(r.tb->path_ends_distinct) << '\n'
         << "  T^B same-colored adjacent edges are simple: " << yes_no(r.tb->same_color_simple) << '\n'
         << "  T^B m-regular: " << yes_no(r.tb->regular) << '\n';
    } else if (r.tb_error) {
      os << "  T^B not built: " << *r.tb_error << '\n';
    }
    os << "  matched pairs: " << opt_bool(r.matched_pairs) << '\n'
       << "  isomorphic to T*_" << r.n << ": " << opt_bool(r.is_tstar) << '\n';
  } else {
    os << "extremal: no (8|T| = " << 8 * r.size << ", n^2 = " << r.chain.n_squared << ")\n";
  }
  os << "result: " << (r.passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace trirain
