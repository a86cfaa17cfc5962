#include "hyperrel/cli/suites.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>

#include "hyperrel/digraphs.hpp"
#include "hyperrel/dynamics.hpp"
#include "hyperrel/error.hpp"
#include "hyperrel/graphs.hpp"
#include "hyperrel/parallel.hpp"

namespace hyperrel::cli {
namespace {

constexpr std::size_t kPrintedFailures = 50;

struct InstanceResult {
  std::string key;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::size_t lo = std::numeric_limits<std::size_t>::max();
  std::size_t hi = 0;
  std::size_t counted = 0;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  void observe(std::size_t v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    ++counted;
  }
};

struct Context {
  const VerifyOptions& options;
  std::ostream& out;
  std::string suite;
  std::size_t failed = 0;
  std::size_t checks = 0;
};

using Observed = std::function<std::string(std::size_t lo, std::size_t hi, std::size_t counted)>;

void emit(Context& ctx, const std::string& section, const std::vector<InstanceResult>& results,
          const Observed& observed = {}) {
  std::size_t checks = 0;
  std::size_t failed = 0;
  std::size_t printed = 0;
  std::size_t lo = std::numeric_limits<std::size_t>::max();
  std::size_t hi = 0;
  std::size_t counted = 0;
  for (const auto& r : results) {
    checks += r.checks;
    failed += r.failures.size();
    lo = std::min(lo, r.lo);
    hi = std::max(hi, r.hi);
    counted += r.counted;
    for (const auto& f : r.failures) {
      if (printed++ < kPrintedFailures) ctx.out << "FAIL " << section << ' ' << r.key << ": " << f << '\n';
    }
    if (r.failures.empty() && ctx.options.verbose) ctx.out << "pass " << section << ' ' << r.key << " checks=" << r.checks << '\n';
  }
  if (printed > kPrintedFailures) ctx.out << "... " << printed - kPrintedFailures << " more failures in " << section << '\n';
  ctx.out << ctx.suite << '/' << section << ": instances=" << results.size() << " checks=" << checks
          << " failed=" << failed;
  if (observed && counted > 0) ctx.out << ' ' << observed(lo, hi, counted);
  ctx.out << '\n';
  ctx.checks += checks;
  ctx.failed += failed;
}

template <typename F>
std::vector<InstanceResult> sweep(const Context& ctx, std::size_t count, F&& f) {
  return parallel_map<InstanceResult>(count, ctx.options.threads, std::function<InstanceResult(std::size_t)>(f));
}

std::size_t bound(const Context& ctx, std::size_t fallback) { return ctx.options.max_n.value_or(fallback); }

const FamilySpec& all_nonempty() {
  static const FamilySpec f = FamilySpec::all_nonempty();
  return f;
}

std::string topo_string(const FiniteTopology& t) {
  std::string s = "{";
  bool first = true;
  for (NodeSet o : t.opens()) {
    if (o.empty()) continue;
    if (!first) s += ',';
    first = false;
    s += to_string(o);
  }
  return s + "}";
}

std::string mismatch(const char* what, const Verdict& plain, const Verdict& strong) {
  return std::string(what) + " " + to_string(plain.status) + " but strongly " + to_string(strong.status);
}

// Loop-free digraph whose off-diagonal pairs, row by row, are the bits of `code` (lowest first).
Digraph digraph_from_code(std::size_t n, std::uint64_t code) {
  Digraph d(n);
  std::size_t bit = 0;
  for (Node i = 0; i < n; ++i) {
    for (Node j = 0; j < n; ++j) {
      if (i == j) continue;
      if ((code >> bit++) & 1U) d.add_arc(i, j);
    }
  }
  return d;
}

std::size_t digraph_count(std::size_t n) { return std::size_t{1} << (n * (n - 1)); }

SimpleGraph graph_from_code(std::size_t n, std::uint64_t code) {
  SimpleGraph g(n);
  std::size_t bit = 0;
  for (Node i = 0; i < n; ++i) {
    for (Node j = i + 1; j < n; ++j) {
      if ((code >> bit++) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

std::size_t graph_count(std::size_t n) { return std::size_t{1} << (n * (n - 1) / 2); }

std::string sec(const std::string& name, std::size_t n) { return name + "[n=" + std::to_string(n) + "]"; }

std::string key(std::size_t n, const std::string& rest) { return "n=" + std::to_string(n) + ' ' + rest; }

// plain ⟺ strong for the hypercyclic pair, and for the transitive pair when asked.
void equivalence(InstanceResult& r, const RelationTuple& t, const FiniteTopology& topo, bool transitive,
                 const std::string& where) {
  const Verdict h = is_hypercyclic(t, topo, all_nonempty());
  const Verdict sh = is_strongly_hypercyclic(t, topo, all_nonempty());
  r.check(h.status == sh.status, where + mismatch("hypercyclic", h, sh));
  if (transitive) {
    const Verdict tr = is_top_transitive(t, topo, all_nonempty());
    const Verdict st = is_strongly_top_transitive(t, topo, all_nonempty());
    r.check(tr.status == st.status, where + mismatch("transitive", tr, st));
  }
}

std::string at(const FiniteTopology& topo) { return "topology=" + topo_string(topo) + " "; }

void suite_poka(Context& ctx) {
  for (std::size_t n = 2; n <= bound(ctx, 4); ++n) {
    const auto topologies = enumerate_topologies(n);
    const std::size_t m = graph_count(n);
    emit(ctx, sec("graph-pairs", n), sweep(ctx, m, [&](std::size_t a) {
           InstanceResult r;
           r.key = key(n, "G1=" + std::to_string(a));
           const SimpleGraph g1 = graph_from_code(n, a);
           for (std::size_t b = a; b < m; ++b) {
             const RelationTuple t(std::vector<BooleanRelation>{g1.relation(), graph_from_code(n, b).relation()});
             for (const auto& topo : topologies) equivalence(r, t, topo, true, "G2=" + std::to_string(b) + ' ' + at(topo));
           }
           return r;
         }));
  }
}

void suite_vaterpolo(Context& ctx) {
  const std::size_t max_n = bound(ctx, 4);
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto topo = FiniteTopology::discrete(n);
    emit(ctx, sec("digraphs", n), sweep(ctx, digraph_count(n), [&](std::size_t a) {
           InstanceResult r;
           r.key = key(n, "D=" + std::to_string(a));
           equivalence(r, RelationTuple(digraph_from_code(n, a).relation()), topo, true, "");
           return r;
         }));
  }
  for (std::size_t n = 1; n <= std::min<std::size_t>(max_n, 3); ++n) {
    const auto topo = FiniteTopology::discrete(n);
    const std::size_t m = digraph_count(n);
    emit(ctx, sec("digraph-pairs", n), sweep(ctx, m, [&](std::size_t a) {
           InstanceResult r;
           r.key = key(n, "D1=" + std::to_string(a));
           const auto d1 = digraph_from_code(n, a).relation();
           for (std::size_t b = 0; b < m; ++b) {
             const RelationTuple t(std::vector<BooleanRelation>{d1, digraph_from_code(n, b).relation()});
             equivalence(r, t, topo, false, "D2=" + std::to_string(b) + ' ');
           }
           return r;
         }));
  }
}

void suite_pende_primp(Context& ctx) {
  const std::size_t max_n = bound(ctx, 4);
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto topologies = enumerate_topologies(n);
    emit(ctx, sec("digraphs", n), sweep(ctx, digraph_count(n), [&](std::size_t a) {
           InstanceResult r;
           r.key = key(n, "D=" + std::to_string(a));
           const RelationTuple t(digraph_from_code(n, a).relation());
           for (const auto& topo : topologies) equivalence(r, t, topo, false, at(topo));
           return r;
         }));
  }
  for (std::size_t n = 1; n <= std::min<std::size_t>(max_n, 3); ++n) {
    const auto topologies = enumerate_topologies(n);
    const std::size_t m = digraph_count(n);
    emit(ctx, sec("digraph-pairs", n), sweep(ctx, m, [&](std::size_t a) {
           InstanceResult r;
           r.key = key(n, "D1=" + std::to_string(a));
           const auto d1 = digraph_from_code(n, a).relation();
           for (std::size_t b = 0; b < m; ++b) {
             const RelationTuple t(std::vector<BooleanRelation>{d1, digraph_from_code(n, b).relation()});
             for (const auto& topo : topologies) equivalence(r, t, topo, false, "D2=" + std::to_string(b) + ' ' + at(topo));
           }
           return r;
         }));
  }
}

void suite_pende_bn(Context& ctx) {
  const std::size_t max_n = bound(ctx, 6);
  for (std::size_t n = 3; n <= max_n; ++n) {
    std::vector<Digraph> ts;
    std::vector<FiniteTopology> topologies;
    if (n <= 4) {
      ts = enumerate_tournaments(n, false);
      topologies = enumerate_topologies(n);
    } else {
      ts = enumerate_tournaments(n, true);
      topologies = sample_topologies(n, ctx.options.samples, ctx.options.seed);
    }
    emit(ctx, sec(n <= 4 ? "tournaments" : "tournament-classes", n), sweep(ctx, ts.size(), [&](std::size_t i) {
           InstanceResult r;
           r.key = key(n, "T=" + code_string(n, tournament_code(ts[i])));
           const RelationTuple t(ts[i].relation());
           for (const auto& topo : topologies) equivalence(r, t, topo, false, at(topo));
           return r;
         }));
  }
  for (std::size_t n = 3; n <= std::min<std::size_t>(max_n, 4); ++n) {
    const auto ts = enumerate_tournaments(n, false);
    const auto topologies = enumerate_topologies(n);
    emit(ctx, sec("tournament-pairs", n), sweep(ctx, ts.size(), [&](std::size_t a) {
           InstanceResult r;
           r.key = key(n, "T1=" + code_string(n, tournament_code(ts[a])));
           for (const auto& t2 : ts) {
             const RelationTuple t(std::vector<BooleanRelation>{ts[a].relation(), t2.relation()});
             for (const auto& topo : topologies) {
               equivalence(r, t, topo, false, "T2=" + code_string(n, tournament_code(t2)) + ' ' + at(topo));
             }
           }
           return r;
         }));
  }
  const std::vector<std::size_t> sizes{4, 5, 6, 7};
  emit(ctx, "construction", sweep(ctx, sizes.size(), [&](std::size_t i) {
         const std::size_t n = sizes[i];
         InstanceResult r;
         r.key = key(n, "N=2");
         if (n < 5) {
           bool rejected = false;
           try {
             build_pende_counterexample(n, 2);
           } catch (const InvalidArgument&) {
             rejected = true;
           }
           r.check(rejected, "construction accepted n=4");
           return r;
         }
         const auto c = build_pende_counterexample(n, 2);
         std::vector<BooleanRelation> rels;
         for (const auto& d : c.tournaments) rels.push_back(d.relation());
         const RelationTuple t(rels);
         const Verdict h = is_hypercyclic(t, c.topology, all_nonempty());
         const NodeSet vectors = hypercyclic_vectors(t, c.topology, all_nonempty());
         const Verdict sh = is_strongly_hypercyclic(t, c.topology, all_nonempty());
         r.check(h.yes(), "d-hypercyclic " + to_string(h.status));
         r.check(vectors == NodeSet{0}, "witnesses " + to_string(vectors));
         r.check(sh.no(), "strongly d-hypercyclic " + to_string(sh.status));
         return r;
       }));
}

std::vector<SimpleGraph> connected_classes(std::size_t n) {
  auto gs = graph_classes(n);
  std::erase_if(gs, [](const SimpleGraph& g) { return !is_connected(g); });
  return gs;
}

std::string graph_key(const SimpleGraph& g) { return key(g.n(), "G=" + std::to_string(canonical_graph_code(g))); }

void suite_moguce(Context& ctx) {
  for (std::size_t n = 2; n <= bound(ctx, 7); ++n) {
    const auto gs = connected_classes(n);
    emit(ctx, sec("connected-graphs", n), sweep(ctx, gs.size(), [&](std::size_t i) {
           InstanceResult r;
           const auto rep = verify_moguce(gs[i]);
           r.key = graph_key(gs[i]) + (rep.bipartite ? " bipartite" : "");
           r.checks = rep.pairs_checked;
           auto where = [&] {
             return rep.first_violation ? " first at U=" + to_string(rep.first_violation->first) +
                                              " V=" + to_string(rep.first_violation->second)
                                        : std::string();
           };
           if (rep.equality_violations > 0) r.failures.push_back(std::to_string(rep.equality_violations) + " pairs with S != L" + where());
           if (rep.inclusion_violations > 0) r.failures.push_back(std::to_string(rep.inclusion_violations) + " pairs with L not in S" + where());
           return r;
         }));
  }
}

void suite_reza(Context& ctx) {
  const std::size_t max_n = bound(ctx, 7);
  for (std::size_t n = 2; n <= max_n; ++n) {
    const auto gs = connected_classes(n);
    emit(ctx, sec("bounds", n), sweep(ctx, gs.size(), [&](std::size_t i) {
           const SimpleGraph& g = gs[i];
           InstanceResult r;
           const auto coll = s_collection(g.relation());
           const std::size_t s = coll.count();
           if (is_bipartite(g)) {
             r.key = graph_key(g) + " bipartite";
             const std::size_t b = bound_bipartite(g);
             r.check(s <= b, "S_G=" + std::to_string(s) + " exceeds bipartite bound " + std::to_string(b) +
                                 " at diameter " + std::to_string(diameter(g)));
             return r;
           }
           r.key = graph_key(g);
           const std::size_t th = theta(g);
           const std::size_t b = bound_theta(th);
           r.check(s <= b, "S_G=" + std::to_string(s) + " exceeds theta bound " + std::to_string(b));
           for (const auto& a : coll.sets) {
             r.check(a.contains_tail_from(th), render(a) + " misses the tail from theta=" + std::to_string(th));
           }
           return r;
         }));
  }
  const std::size_t top = std::max<std::size_t>(8, max_n);
  emit(ctx, "paths", sweep(ctx, top - 1, [&](std::size_t i) {
         const std::size_t n = i + 2;
         InstanceResult r;
         r.key = key(n, "P_n");
         const std::size_t s = s_index(SimpleGraph::path(n));
         const std::size_t f = path_s_formula(n);
         r.check(s == f, "S_G=" + std::to_string(s) + " but formula gives " + std::to_string(f));
         return r;
       }));
}

// The 2-colouring of a connected bipartite graph with node 0 on side 0.
NodeSet side_of_zero(const SimpleGraph& g) {
  const auto dist = distance_matrix(g);
  NodeSet s;
  for (Node v = 0; v < g.n(); ++v) {
    if (dist[0][v] % 2 == 0) s.insert(v);
  }
  return s;
}

void suite_radio(Context& ctx) {
  const std::size_t max_n = bound(ctx, 5);
  for (std::size_t n = 3; n <= max_n; ++n) {
    auto firsts = connected_classes(n);
    std::erase_if(firsts, [](const SimpleGraph& g) { return is_bipartite(g); });
    std::vector<SimpleGraph> seconds;
    for (std::size_t c = 0; c < graph_count(n); ++c) {
      auto g = graph_from_code(n, c);
      if (is_connected(g) && !is_bipartite(g)) seconds.push_back(std::move(g));
    }
    const auto topo = FiniteTopology::discrete(n);
    emit(ctx, sec("non-bipartite-pairs", n), sweep(ctx, firsts.size(), [&](std::size_t i) {
           InstanceResult r;
           r.key = graph_key(firsts[i]) + " with " + std::to_string(seconds.size()) + " labeled G2";
           for (const auto& g2 : seconds) {
             const RelationTuple t(std::vector<BooleanRelation>{firsts[i].relation(), g2.relation()});
             const auto sv = strong_hypercyclic_vectors(t, topo, all_nonempty());
             const std::string g2key = "G2=" + std::to_string(canonical_graph_code(g2)) + " ";
             r.check(sv.yes == NodeSet::full(n), g2key + "strong vectors " + to_string(sv.yes));
             const Verdict st = is_strongly_top_transitive(t, topo, all_nonempty());
             r.check(st.yes(), g2key + "strongly transitive " + to_string(st.status));
           }
           return r;
         }));
  }
  for (std::size_t n = 2; n <= std::min<std::size_t>(max_n, 4); ++n) {
    std::vector<SimpleGraph> bip;
    for (std::size_t c = 0; c < graph_count(n); ++c) {
      auto g = graph_from_code(n, c);
      if (is_connected(g) && is_bipartite(g)) bip.push_back(std::move(g));
    }
    const auto topo = FiniteTopology::discrete(n);
    emit(ctx, sec("bipartite-pairs", n), sweep(ctx, bip.size(), [&](std::size_t i) {
           InstanceResult r;
           r.key = key(n, "G1 edges=" + std::to_string(bip[i].edge_count()) + " #" + std::to_string(i));
           const NodeSet side = side_of_zero(bip[i]);
           for (const auto& g2 : bip) {
             if (side_of_zero(g2) != side) continue;
             const RelationTuple t(std::vector<BooleanRelation>{bip[i].relation(), g2.relation()});
             const Verdict h = is_hypercyclic(t, topo, all_nonempty());
             r.check(h.no(), "common bipartition " + to_string(side) + " yet d-hypercyclic " + to_string(h.status));
           }
           return r;
         }));
  }
}

void suite_idiot(Context& ctx) {
  for (std::size_t n = 5; n <= bound(ctx, 6); ++n) {
    const std::size_t bits = n * (n - 1) / 2;
    const std::size_t shard_bits = std::min<std::size_t>(bits, 10);
    const std::size_t shards = std::size_t{1} << (bits - shard_bits);
    auto results = sweep(ctx, shards, [&](std::size_t s) {
      InstanceResult r;
      const std::uint64_t begin = std::uint64_t{s} << shard_bits;
      const std::uint64_t end = begin + (std::uint64_t{1} << shard_bits);
      r.key = key(n, "codes=[" + std::to_string(begin) + "," + std::to_string(end) + ")");
      for (std::uint64_t code = begin; code < end; ++code) {
        const Digraph t = tournament_from_code(n, code);
        if (!strongly_connected(t) || !is_primitive(t)) continue;
        const auto rep = idiot_check({t}, all_nonempty());
        const std::size_t e = rep.exponent;
        const std::size_t d = rep.diameters.front();
        const std::string who = "T=" + code_string(n, code) + " e=" + std::to_string(e) + " d=" + std::to_string(d) + " ";
        r.check(e >= 3 && e <= n + 2, who + "exponent outside [3, n+2]");
        r.check(rep.diameter_relation, who + "d <= e <= d+3 fails");
        r.check(rep.tails_contained, who + "a realized S-set misses the tail from e");
        r.observe(e);
      }
      return r;
    });
    emit(ctx, sec("primitive-tournaments", n), results, [](std::size_t lo, std::size_t hi, std::size_t counted) {
      return "primitive=" + std::to_string(counted) + " exponents=" + std::to_string(lo) + ".." + std::to_string(hi);
    });
  }
}

const std::map<std::string, void (*)(Context&)>& registry() {
  static const std::map<std::string, void (*)(Context&)> suites{
      {"idiot", suite_idiot},   {"moguce", suite_moguce},         {"pende-bn", suite_pende_bn},
      {"pende-primp", suite_pende_primp}, {"poka", suite_poka}, {"radio", suite_radio},
      {"reza", suite_reza},     {"vaterpolo", suite_vaterpolo},
  };
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, _] : registry()) names.push_back(name);
  return names;
}

bool run_suite(const VerifyOptions& options, std::ostream& out) {
  const auto it = registry().find(options.suite);
  if (it == registry().end()) throw InvalidArgument("unknown suite '" + options.suite + "'");
  Context ctx{options, out, options.suite};
  it->second(ctx);
  const bool ok = ctx.failed == 0;
  out << "verify " << options.suite << ": " << (ok ? "PASS" : "FAIL") << " checks=" << ctx.checks
      << " failed=" << ctx.failed << '\n';
  return ok;
}

}  // namespace hyperrel::cli
