#include <CLI11.hpp>
#include <iostream>

#include "hyperrel/cli/commands.hpp"
#include "hyperrel/error.hpp"
#include "hyperrel/parallel.hpp"

using namespace hyperrel::cli;

int main(int argc, char** argv) {
  CLI::App app{"Hypercyclicity and transitivity of relations on finite topological spaces"};
  app.require_subcommand(1);

  AnalyzeOptions analyze;
  auto* a = app.add_subcommand("analyze", "Decide properties of the relation(s) in an instance file");
  a->add_option("file", analyze.path, "Instance file")->required();
  a->add_option("--property,-p", analyze.properties, "hypercyclic, strongly-hypercyclic, transitive, strongly-transitive");
  a->add_option("--family,-f", analyze.family, "Family expression, e.g. all-nonempty, tail:3, upward:[N\\{1}]");
  a->add_option("--expect", analyze.expect, "Exit 2 unless every verdict is this (yes|no)");
  a->add_flag("--show-s-sets", analyze.show_s_sets, "Print the realized return-time sets");
  a->add_flag("--vectors", analyze.show_vectors, "Print the (strong) hypercyclic vectors");

  VerifyOptions verify;
  verify.threads = hyperrel::default_thread_count();
  auto* v = app.add_subcommand("verify", "Run a theorem suite");
  v->add_option("suite", verify.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  v->add_option("--max-n", verify.max_n, "Main size bound of the suite");
  v->add_option("--threads", verify.threads, "Worker threads")->check(CLI::PositiveNumber);
  v->add_option("--seed", verify.seed, "Seed for sampled topologies");
  v->add_option("--samples", verify.samples, "Sampled topologies per tournament class");
  v->add_flag("--verbose,-v", verify.verbose, "Print a line for every passing instance");

  SurveyOptions surv;
  surv.threads = hyperrel::default_thread_count();
  auto* s = app.add_subcommand("survey", "Return-time set counts over n-vertex tournaments");
  s->add_option("n", surv.n, "Vertices")->required();
  s->add_flag("--iso", surv.iso, "One row per isomorphism class without labeled counts");
  s->add_flag("--strong-only", surv.strong_only, "Strongly connected tournaments only");
  s->add_flag("--json", surv.json, "Machine-readable output");
  s->add_option("--threads", surv.threads, "Worker threads")->check(CLI::PositiveNumber);

  EnumerateOptions en;
  auto* e = app.add_subcommand("enumerate", "Print topologies or tournaments in the instance format");
  e->add_option("what", en.what, "topologies | tournaments")->required()->check(CLI::IsMember({"topologies", "tournaments"}));
  e->add_option("n", en.n, "Points")->required();
  e->add_flag("--iso", en.iso, "Tournaments up to isomorphism");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (a->parsed()) return cmd_analyze(analyze, std::cout);
    if (v->parsed()) return cmd_verify(verify, std::cout);
    if (s->parsed()) return cmd_survey(surv, std::cout);
    return cmd_enumerate(en, std::cout);
  } catch (const hyperrel::ParseError& err) {
    std::cerr << "parse error: " << err.what() << '\n';
    return kParseError;
  } catch (const hyperrel::GuardError& err) {
    std::cerr << "size guard: " << err.what() << '\n';
    return kGuard;
  } catch (const hyperrel::Error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kParseError;
  }
}
