#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gmi/plan.hpp"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;

struct Options {
  int dmax = 16;
  std::string format = "text";
  std::string input;
  std::string out;
};

std::string read_input(const Options& opt) {
  if (opt.input.empty() || opt.input == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(opt.input);
  if (!in) throw std::runtime_error("cannot open input file '" + opt.input + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out);
  if (!out) throw std::runtime_error("cannot open output file '" + opt.out + "'");
  out << text;
}

ordered_json vars_json(const std::vector<gmi::VariableTable::Var>& vars) {
  ordered_json j = ordered_json::array();
  for (const auto& v : vars) j.push_back({{"name", v.name}, {"degree", v.degree}});
  return j;
}

ordered_json ring_json(const gmi::MonomialRing& ring) {
  ordered_json j;
  j["presentation"] = gmi::pretty_print(ring);
  j["even"] = vars_json(ring.table.even_vars);
  j["odd"] = vars_json(ring.table.odd_vars);
  j["ideal"] = ordered_json::array();
  for (const auto& g : ring.ideal.generators)
    j["ideal"].push_back(gmi::to_string(g, ring.table));
  return j;
}

int run_parse(const Options& opt) {
  gmi::MonomialRing ring = gmi::parse_presentation(read_input(opt));
  if (opt.format == "json")
    write_output(opt, ring_json(ring).dump(2) + "\n");
  else
    write_output(opt, gmi::pretty_print(ring) + "\n");
  return 0;
}

int run_hilbert(const Options& opt) {
  gmi::MonomialRing ring = gmi::parse_presentation(read_input(opt));
  gmi::HilbertFunction h = gmi::hilbert_function(ring, opt.dmax);
  if (opt.format == "json") {
    ordered_json j;
    j["ring"] = gmi::pretty_print(ring);
    j["d_max"] = opt.dmax;
    j["ranks"] = h.ranks;
    write_output(opt, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    for (int d = 0; d <= opt.dmax; ++d)
      os << d << " " << h.rank(d) << "\n";
    write_output(opt, os.str());
  }
  return 0;
}

int run_polarize(const Options& opt) {
  gmi::MonomialRing ring = gmi::parse_presentation(read_input(opt));
  gmi::PolarizationData data = gmi::polarize(ring);
  if (opt.format == "json") {
    ordered_json j;
    j["source"] = ring_json(data.source);
    j["polarized"] = ring_json(data.polarized);
    j["a"] = data.a_max;
    j["omega"] = ordered_json::array();
    for (auto [i, k] : data.omega.pairs) j["omega"].push_back({i, k});
    j["omega_bar"] = ordered_json::array();
    for (auto [i, k] : data.omega_bar) j["omega_bar"].push_back({i, k});
    write_output(opt, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "source:    " << gmi::pretty_print(data.source) << "\n";
    os << "polarized: " << gmi::pretty_print(data.polarized) << "\n";
    os << "a:        ";
    for (int a : data.a_max) os << " " << a;
    os << "\n|omega| = " << data.omega.pairs.size()
       << ", |omega_bar| = " << data.omega_bar.size() << "\n";
    write_output(opt, os.str());
  }
  return 0;
}

int run_plan(const Options& opt) {
  gmi::MonomialRing ring = gmi::parse_presentation(read_input(opt));
  gmi::RealizationPlan plan = gmi::emit_plan(ring);
  write_output(opt, opt.format == "json" ? gmi::serialize_plan(plan)
                                         : gmi::plan_to_text(plan));
  return 0;
}

int run_verify(const Options& opt) {
  gmi::MonomialRing ring = gmi::parse_presentation(read_input(opt));
  gmi::VerificationReport report = gmi::verify(ring, opt.dmax);
  write_output(opt, opt.format == "json" ? gmi::serialize_report(report)
                                         : gmi::report_to_text(report));
  return report.pass ? 0 : 1;
}

int run_example(const Options& opt) {
  auto [plan, report] = gmi::golden_example();
  if (opt.format == "json") {
    write_output(opt, gmi::serialize_example(plan, report));
  } else {
    write_output(opt, gmi::plan_to_text(plan) + "\n" +
                          gmi::report_to_text(report));
  }
  return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Realization engine for graded monomial ideal rings"};
  app.require_subcommand(1);
  app.fallthrough(true);

  Options opt;
  app.add_option("--dmax", opt.dmax, "Degree bound")->check(CLI::NonNegativeNumber);
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--input", opt.input, "Input file (default: stdin)");
  app.add_option("--out", opt.out, "Output file (default: stdout)");

  auto* parse = app.add_subcommand("parse", "Parse and echo a presentation");
  auto* hilbert = app.add_subcommand("hilbert", "Degreewise ranks of A");
  auto* polarize = app.add_subcommand("polarize", "Polarize the ideal");
  auto* plan = app.add_subcommand("plan", "Emit the realization plan");
  auto* verify = app.add_subcommand("verify", "Run the verification pipeline");
  auto* example = app.add_subcommand("example", "Built-in worked example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (parse->parsed()) return run_parse(opt);
    if (hilbert->parsed()) return run_hilbert(opt);
    if (polarize->parsed()) return run_polarize(opt);
    if (plan->parsed()) return run_plan(opt);
    if (verify->parsed()) return run_verify(opt);
    if (example->parsed()) return run_example(opt);
  } catch (const gmi::ParseError& e) {
    std::cerr << "input error at " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
