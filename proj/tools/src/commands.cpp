#include "hyperrel/cli/commands.hpp"

#include <json.hpp>

#include "hyperrel/cli/instance.hpp"
#include "hyperrel/digraphs.hpp"
#include "hyperrel/dynamics.hpp"
#include "hyperrel/error.hpp"
#include "hyperrel/graphs.hpp"

namespace hyperrel::cli {
namespace {

const std::vector<std::string> kProperties{"hypercyclic", "strongly-hypercyclic", "transitive", "strongly-transitive"};

Verdict run_property(const std::string& p, const RelationTuple& t, const FiniteTopology& topo, const FamilySpec& f) {
  if (p == "hypercyclic") return is_hypercyclic(t, topo, f);
  if (p == "strongly-hypercyclic") return is_strongly_hypercyclic(t, topo, f);
  if (p == "transitive") return is_top_transitive(t, topo, f);
  if (p == "strongly-transitive") return is_strongly_top_transitive(t, topo, f);
  throw InvalidArgument("unknown property '" + p + "'");
}

std::string set_list(const std::vector<EventuallyPeriodicSet>& sets) {
  std::string s;
  for (std::size_t i = 0; i < sets.size(); ++i) s += (i > 0 ? " " : "") + render(sets[i]);
  return s;
}

}  // namespace

int cmd_analyze(const AnalyzeOptions& options, std::ostream& out) {
  const Instance inst = load_instance(options.path);
  const FamilySpec family =
      options.family ? parse_family(*options.family) : inst.family.value_or(FamilySpec::all_nonempty());
  const std::vector<std::string>& props = options.properties.empty() ? kProperties : options.properties;
  for (const auto& p : props) {
    if (std::find(kProperties.begin(), kProperties.end(), p) == kProperties.end()) {
      throw InvalidArgument("unknown property '" + p + "'");
    }
  }
  std::optional<Status> expected;
  if (options.expect) {
    if (*options.expect == "yes") {
      expected = Status::Yes;
    } else if (*options.expect == "no") {
      expected = Status::No;
    } else {
      throw InvalidArgument("--expect takes yes or no");
    }
  }
  const RelationTuple tuple(inst.relations);
  bool refuted = false;
  for (const auto& p : props) {
    const Verdict v = run_property(p, tuple, inst.topology, family);
    out << p << ' ' << family.name() << " -> " << to_string(v.status);
    if (v.witness) out << " witness=" << node_name(*v.witness);
    if (v.refutation) out << " refuted-by=" << render(*v.refutation);
    if (!v.note.empty()) out << " note=" << v.note;
    out << '\n';
    if (expected && v.status != *expected) refuted = true;
  }
  if (options.show_vectors) {
    out << "hypercyclic-vectors " << to_string(hypercyclic_vectors(tuple, inst.topology, family)) << '\n';
    const auto strong = strong_hypercyclic_vectors(tuple, inst.topology, family);
    out << "strong-vectors " << to_string(strong.yes);
    if (!strong.unknown.empty()) out << " unknown=" << to_string(strong.unknown);
    out << '\n';
  }
  if (options.show_s_sets) {
    for (std::size_t j = 0; j < inst.relations.size(); ++j) {
      const auto coll = s_collection(inst.relations[j], inst.topology);
      out << "s-sets";
      if (inst.relations.size() > 1) out << '[' << j + 1 << ']';
      out << ' ' << coll.count() << ": " << set_list(coll.sets) << '\n';
    }
  }
  return refuted ? kRefuted : kOk;
}

int cmd_verify(const VerifyOptions& options, std::ostream& out) { return run_suite(options, out) ? kOk : kRefuted; }

int cmd_survey(const SurveyOptions& options, std::ostream& out) {
  const SurveyReport rep = survey(options.n, options.strong_only, options.threads);
  std::uint64_t labeled = 0;
  for (const auto& row : rep.rows) labeled += row.labeled_count;
  if (options.json) {
    nlohmann::ordered_json doc;
    doc["n"] = rep.n;
    doc["mode"] = options.iso ? "iso" : "labeled";
    doc["strong_only"] = options.strong_only;
    doc["classes"] = rep.rows.size();
    doc["labeled"] = labeled;
    doc["max_s"] = rep.max_s;
    doc["values"] = rep.values;
    auto& rows = doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : rep.rows) {
      nlohmann::ordered_json r;
      r["class"] = code_string(rep.n, row.code);
      r["S"] = row.s_value;
      r["exponent"] = row.exponent ? nlohmann::ordered_json(*row.exponent) : nlohmann::ordered_json(nullptr);
      r["strong"] = row.strong;
      if (!options.iso) r["labeled"] = row.labeled_count;
      std::vector<std::string> sets;
      for (const auto& s : row.sets) sets.push_back(render(s));
      r["sets"] = sets;
      rows.push_back(std::move(r));
    }
    out << doc.dump(2) << '\n';
    return kOk;
  }
  for (const auto& row : rep.rows) {
    out << "class " << code_string(rep.n, row.code) << " S=" << row.s_value << " exponent="
        << (row.exponent ? std::to_string(*row.exponent) : "-") << " strong=" << (row.strong ? "true" : "false");
    if (!options.iso) out << " labeled=" << row.labeled_count;
    out << '\n';
  }
  out << "n=" << rep.n << " classes=" << rep.rows.size();
  if (!options.iso) out << " labeled=" << labeled;
  out << " max_S=" << rep.max_s << " values=";
  for (std::size_t i = 0; i < rep.values.size(); ++i) out << (i > 0 ? "," : "") << rep.values[i];
  out << '\n';
  return kOk;
}

int cmd_enumerate(const EnumerateOptions& options, std::ostream& out) {
  if (options.what == "topologies") {
    const auto ts = enumerate_topologies(options.n);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      out << "# topology " << i + 1 << "\nnodes: " << options.n << '\n';
      for (NodeSet o : ts[i].opens()) {
        if (o.empty() || o == ts[i].ground()) continue;
        out << "open:";
        o.for_each([&](Node v) { out << ' ' << node_name(v); });
        out << '\n';
      }
      out << '\n';
    }
    return kOk;
  }
  if (options.what == "tournaments") {
    const auto ts = enumerate_tournaments(options.n, options.iso);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      out << "# tournament " << code_string(options.n, tournament_code(ts[i])) << "\ntournament: " << options.n << '\n';
      for (Node a = 0; a < options.n; ++a) {
        ts[i].out_neighbors(a).for_each([&](Node b) { out << "arc: " << node_name(a) << ' ' << node_name(b) << '\n'; });
      }
      out << '\n';
    }
    return kOk;
  }
  throw InvalidArgument("enumerate takes 'topologies' or 'tournaments'");
}

}  // namespace hyperrel::cli
