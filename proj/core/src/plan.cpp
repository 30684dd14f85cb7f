#include "gmi/plan.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "json.hpp"

namespace gmi {

using ordered_json = nlohmann::ordered_json;

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      line(line),
      column(column) {}

namespace {

struct Token {
  enum Kind { Name, Integer, Punct, End } kind = End;
  std::string text;
  long long value = 0;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_space_and_comments();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= text_.size()) return t;
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '\'') {
      t.kind = Token::Name;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(
                                         text_[pos_])) ||
                                     text_[pos_] == '_' || text_[pos_] == '\''))
        t.text += advance();
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::Integer;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        t.text += advance();
      t.value = std::stoll(t.text);
      return t;
    }
    if (std::string("{}:;,*^").find(c) != std::string::npos) {
      t.kind = Token::Punct;
      t.text = advance();
      return t;
    }
    throw ParseError(line_, column_,
                     std::string("unexpected character '") + c + "'");
  }

 private:
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lexer_(text) { tok_ = lexer_.next(); }

  MonomialRing parse() {
    parse_ring_block();
    std::vector<Monomial> gens = parse_ideal_block();
    if (tok_.kind != Token::End)
      throw ParseError(tok_.line, tok_.column,
                       "trailing input after ideal block");
    return MonomialRing(table_, std::move(gens));
  }

 private:
  [[noreturn]] void fail(const std::string& message) {
    throw ParseError(tok_.line, tok_.column, message);
  }

  void advance() { tok_ = lexer_.next(); }

  bool at_punct(char c) const {
    return tok_.kind == Token::Punct && tok_.text[0] == c;
  }
  bool at_keyword(const std::string& k) const {
    return tok_.kind == Token::Name && tok_.text == k;
  }

  void expect_punct(char c) {
    if (!at_punct(c)) fail(std::string("expected '") + c + "'");
    advance();
  }
  void expect_keyword(const std::string& k) {
    if (!at_keyword(k)) fail("expected '" + k + "'");
    advance();
  }

  void parse_ring_block() {
    expect_keyword("ring");
    expect_punct('{');
    if (at_keyword("even")) {
      advance();
      expect_punct(':');
      parse_varlist(/*even=*/true);
      // The ';' separator is only needed before an odd block.
      if (at_punct(';'))
        advance();
      else if (!at_punct('}'))
        fail("expected ';' or '}'");
    }
    if (at_keyword("odd")) {
      advance();
      expect_punct(':');
      parse_varlist(/*even=*/false);
    }
    expect_punct('}');
  }

  void parse_varlist(bool even) {
    while (true) {
      if (tok_.kind != Token::Name) fail("expected variable name");
      std::string name = tok_.text;
      int line = tok_.line, column = tok_.column;
      advance();
      expect_punct(':');
      if (tok_.kind != Token::Integer) fail("expected degree");
      long long deg = tok_.value;
      if (deg <= 0)
        throw ParseError(tok_.line, tok_.column,
                         "degree of '" + name + "' must be positive");
      if (even && deg % 2 != 0)
        throw ParseError(tok_.line, tok_.column,
                         "even variable '" + name + "' has odd degree " +
                             std::to_string(deg));
      if (!even && deg % 2 != 1)
        throw ParseError(tok_.line, tok_.column,
                         "odd variable '" + name + "' has even degree " +
                             std::to_string(deg));
      advance();
      if (index_.count(name))
        throw ParseError(line, column, "duplicate variable '" + name + "'");
      if (even) {
        index_[name] = {true, table_.even_vars.size()};
        table_.even_vars.push_back({name, static_cast<int>(deg)});
      } else {
        index_[name] = {false, table_.odd_vars.size()};
        table_.odd_vars.push_back({name, static_cast<int>(deg)});
      }
      if (!at_punct(',')) break;
      advance();
    }
  }

  std::vector<Monomial> parse_ideal_block() {
    expect_keyword("ideal");
    expect_punct('{');
    std::vector<Monomial> gens;
    if (!at_punct('}')) {
      gens.push_back(parse_monomial());
      while (at_punct(';')) {
        advance();
        gens.push_back(parse_monomial());
      }
    }
    expect_punct('}');
    return gens;
  }

  Monomial parse_monomial() {
    Monomial m = Monomial::unit(table_.even_count());
    parse_factor(m);
    while (at_punct('*')) {
      advance();
      parse_factor(m);
    }
    std::sort(m.odd_support.begin(), m.odd_support.end());
    return m;
  }

  void parse_factor(Monomial& m) {
    if (tok_.kind != Token::Name) fail("expected variable name");
    std::string name = tok_.text;
    int line = tok_.line, column = tok_.column;
    auto it = index_.find(name);
    if (it == index_.end())
      throw ParseError(line, column, "unknown variable '" + name + "'");
    advance();
    long long exp = 1;
    if (at_punct('^')) {
      advance();
      if (tok_.kind != Token::Integer) fail("expected exponent");
      exp = tok_.value;
      if (exp <= 0)
        throw ParseError(tok_.line, tok_.column, "exponent must be positive");
      advance();
    }
    auto [even, idx] = it->second;
    if (even) {
      m.even_exponents[idx] += static_cast<int>(exp);
    } else {
      int support = static_cast<int>(idx) + 1;
      if (exp > 1 || std::count(m.odd_support.begin(), m.odd_support.end(),
                                support))
        throw ParseError(line, column, "odd variable '" + name +
                                           "' squares to zero");
      m.odd_support.push_back(support);
    }
  }

  Lexer lexer_;
  Token tok_;
  VariableTable table_;
  std::map<std::string, std::pair<bool, std::size_t>> index_;  // even?, index
};

}  // namespace

MonomialRing parse_presentation(const std::string& text) {
  return Parser(text).parse();
}

std::string pretty_print(const MonomialRing& ring) { return to_string(ring); }

RealizationPlan emit_plan(const MonomialRing& ring) {
  RealizationPlan plan;
  plan.ring = ring;
  plan.polarization = polarize(ring);
  const MonomialRing& ap = plan.polarization.polarized;
  plan.labeling = VertexLabeling::for_table(ap.table);
  plan.complex = complex_from_ideal(ap.ideal, plan.labeling);

  for (std::size_t p = 0; p < plan.polarization.omega.pairs.size(); ++p) {
    int deg = ap.table.even_vars[p].degree;
    plan.factors.push_back({ap.table.even_vars[p].name,
                            "K(Z," + std::to_string(deg) + ")", deg});
  }
  for (const auto& v : ring.table.odd_vars)
    plan.factors.push_back({v.name, "S^" + std::to_string(v.degree), v.degree});

  plan.fibration.base_coordinates = plan.polarization.omega_bar;
  for (auto [i, j] : plan.polarization.omega_bar) {
    std::string si = std::to_string(i);
    plan.fibration.rules.push_back("u_" + si + "_" + std::to_string(j) +
                                   "*u_" + si + "_1^-1");
  }

  plan.z_model = build_z_model(plan.polarization);
  for (std::size_t p = 0; p < plan.polarization.omega.pairs.size(); ++p) {
    auto [i, j] = plan.polarization.omega.pairs[p];
    std::string rhs;
    for (int k = 1; k <= plan.z_model.c[i - 1]; ++k) {
      if (k > 1) rhs += "*";
      rhs += plan.z_model.q_prime.table
                 .even_vars[plan.z_model.q_prime_col(plan.polarization, p, k)]
                 .name;
    }
    plan.generator_map.push_back(ap.table.even_vars[p].name + " -> " + rhs);
  }

  plan.exact_cohomology =
      std::all_of(ring.table.even_vars.begin(), ring.table.even_vars.end(),
                  [](const VariableTable::Var& v) { return v.degree == 2; });
  return plan;
}

namespace {

ordered_json ring_json(const MonomialRing& ring) {
  ordered_json j;
  j["presentation"] = pretty_print(ring);
  j["even"] = ordered_json::array();
  for (const auto& v : ring.table.even_vars)
    j["even"].push_back({{"name", v.name}, {"degree", v.degree}});
  j["odd"] = ordered_json::array();
  for (const auto& v : ring.table.odd_vars)
    j["odd"].push_back({{"name", v.name}, {"degree", v.degree}});
  j["ideal"] = ordered_json::array();
  for (const auto& g : ring.ideal.generators)
    j["ideal"].push_back(to_string(g, ring.table));
  return j;
}

ordered_json plan_json(const RealizationPlan& plan) {
  ordered_json j;
  j["schema"] = "gmi-realization-plan/1";
  j["ring"] = ring_json(plan.ring);

  ordered_json pol;
  pol["a"] = plan.polarization.a_max;
  pol["omega"] = ordered_json::array();
  for (auto [i, k] : plan.polarization.omega.pairs)
    pol["omega"].push_back({i, k});
  pol["omega_bar"] = ordered_json::array();
  for (auto [i, k] : plan.polarization.omega_bar)
    pol["omega_bar"].push_back({i, k});
  pol["ring"] = ring_json(plan.polarization.polarized);
  pol["w_variables"] = ordered_json::array();
  for (std::size_t k = 0; k < plan.polarization.omega_bar.size(); ++k) {
    auto [i, jj] = plan.polarization.omega_bar[k];
    pol["w_variables"].push_back(
        {{"name", "w_" + std::to_string(i) + "_" + std::to_string(jj)},
         {"degree", plan.polarization.w_degree(k)}});
  }
  j["polarization"] = pol;

  ordered_json cx;
  cx["vertex_count"] = plan.complex.vertex_count;
  cx["vertex_labels"] = ordered_json::array();
  for (const auto& v : plan.polarization.polarized.table.even_vars)
    cx["vertex_labels"].push_back(v.name);
  for (const auto& v : plan.polarization.polarized.table.odd_vars)
    cx["vertex_labels"].push_back(v.name);
  cx["minimal_non_faces"] = plan.complex.minimal_non_faces;
  j["complex"] = cx;

  j["factors"] = ordered_json::array();
  for (const auto& f : plan.factors)
    j["factors"].push_back({{"label", f.label}, {"space", f.space}});

  ordered_json fib;
  fib["base_coordinates"] = ordered_json::array();
  for (auto [i, k] : plan.fibration.base_coordinates)
    fib["base_coordinates"].push_back({i, k});
  fib["rules"] = plan.fibration.rules;
  fib["fiber"] = plan.fibration.fiber;
  j["fibration"] = fib;

  ordered_json pc;
  pc["presentation"] = pretty_print(plan.ring);
  pc["modulo_torsion"] = true;
  j["predicted_cohomology"] = pc;

  ordered_json zm;
  zm["c"] = plan.z_model.c;
  zm["q_prime"] = ring_json(plan.z_model.q_prime);
  zm["q"] = ring_json(plan.z_model.q_direct);
  zm["generator_map"] = plan.generator_map;
  j["z_model"] = zm;

  j["flags"] = {{"exact_cohomology", plan.exact_cohomology},
                {"free_split", plan.free_split}};
  return j;
}

ordered_json report_json(const VerificationReport& report) {
  ordered_json j;
  j["schema"] = "gmi-verification-report/1";
  j["verdict"] = report.pass ? "PASS" : "FAIL";
  j["checks"] = ordered_json::array();
  for (const auto& r : report.records)
    j["checks"].push_back({{"name", r.name},
                           {"d_max", r.d_max},
                           {"verdict", r.pass ? "PASS" : "FAIL"},
                           {"witnesses", r.witnesses}});
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string serialize_plan(const RealizationPlan& plan) {
  return dump(plan_json(plan));
}

std::string plan_to_text(const RealizationPlan& plan) {
  std::ostringstream os;
  os << "ring A:        " << pretty_print(plan.ring) << "\n";
  os << "polarization:  " << pretty_print(plan.polarization.polarized) << "\n";
  os << "complex K:     " << plan.complex.vertex_count
     << " vertices; minimal non-faces:";
  if (plan.complex.minimal_non_faces.empty()) os << " (none)";
  for (const auto& nf : plan.complex.minimal_non_faces) {
    os << " {";
    for (std::size_t i = 0; i < nf.size(); ++i)
      os << (i ? "," : "") << nf[i];
    os << "}";
  }
  os << "\nfactors:      ";
  for (const auto& f : plan.factors) os << " " << f.label << ":" << f.space;
  os << "\nfibration:     base";
  if (plan.fibration.base_coordinates.empty()) os << " (empty)";
  for (const auto& rule : plan.fibration.rules) os << " " << rule;
  os << "; fiber " << plan.fibration.fiber << "\n";
  os << "z-model Q'/L': " << pretty_print(plan.z_model.q_prime) << "\n";
  os << "z-model Q/L:   " << pretty_print(plan.z_model.q_direct) << "\n";
  os << "generator map: ";
  for (std::size_t i = 0; i < plan.generator_map.size(); ++i)
    os << (i ? "; " : "") << plan.generator_map[i];
  os << "\nflags:         exact_cohomology="
     << (plan.exact_cohomology ? "true" : "false")
     << " free_split=" << (plan.free_split ? "true" : "false") << "\n";
  return os.str();
}

namespace {

/// Monomial counts of the free ring on `table` per degree; cheap knapsack
/// upper bound used only to pick feasible degree caps.
std::vector<double> free_counts(const VariableTable& table, int d_max) {
  std::vector<double> dp(d_max + 1, 0.0);
  dp[0] = 1.0;
  for (const auto& v : table.even_vars)
    for (int d = v.degree; d <= d_max; ++d) dp[d] += dp[d - v.degree];
  for (const auto& v : table.odd_vars)
    for (int d = d_max; d >= v.degree; --d) dp[d] += dp[d - v.degree];
  return dp;
}

int capped_bound(const VariableTable& table, int d_max, double budget,
                 double factor = 1.0) {
  std::vector<double> dp = free_counts(table, d_max);
  int d = 0;
  while (d < d_max && factor * dp[d + 1] <= budget) ++d;
  return d;
}

void append_witnesses(VerificationReport::Record& record,
                      const std::vector<std::string>& witnesses) {
  const std::size_t limit = 5;
  for (std::size_t i = 0; i < witnesses.size() && i < limit; ++i)
    record.witnesses.push_back(witnesses[i]);
  if (witnesses.size() > limit)
    record.witnesses.push_back(
        "... " + std::to_string(witnesses.size() - limit) + " more");
}

}  // namespace

VerificationReport verify(const MonomialRing& ring, int d_max) {
  if (d_max < 0) throw std::invalid_argument("negative degree bound");
  VerificationReport report;
  auto add = [&report](VerificationReport::Record r) {
    report.pass = report.pass && r.pass;
    report.records.push_back(std::move(r));
  };

  PolarizationData data = polarize(ring);

  VerificationReport::Record sq{"polarization_square_free", d_max, true, {}};
  sq.pass = is_square_free(data.polarized.ideal);
  if (!sq.pass) sq.witnesses.push_back("polarized ideal has an exponent > 1");
  add(sq);

  VerificationReport::Record sr{"stanley_reisner_round_trip", d_max, true, {}};
  if (sq.pass) {
    VertexLabeling labeling = VertexLabeling::for_table(data.polarized.table);
    SimplicialComplex k = complex_from_ideal(data.polarized.ideal, labeling);
    MonomialIdeal back = ideal_from_complex(k, labeling, data.polarized.table);
    sr.pass = back == data.polarized.ideal;
    if (!sr.pass)
      sr.witnesses.push_back("complex/ideal round trip altered the ideal");
  } else {
    sr.pass = false;
    sr.witnesses.push_back("skipped: polarized ideal not square-free");
  }
  add(sr);

  VerificationReport::Record ri{"rank_identity", d_max, true, {}};
  RankIdentityReport rank_report = check_rank_identity(data, d_max);
  ri.pass = rank_report.pass;
  if (!ri.pass)
    ri.witnesses.push_back("first rank mismatch at degree " +
                           std::to_string(rank_report.first_mismatch));
  add(ri);

  int d_reg = capped_bound(data.polarized.table, d_max, 4e5);
  VerificationReport::Record rs{"regular_sequence", d_reg, true, {}};
  RegularSequenceReport reg_report = check_regular_sequence(data, d_reg);
  rs.pass = reg_report.pass;
  std::vector<std::string> reg_witnesses;
  for (const auto& k : reg_report.kernels)
    reg_witnesses.push_back("kernel of rank " +
                            std::to_string(k.kernel_rank) + " at step " +
                            std::to_string(k.step) + ", degree " +
                            std::to_string(k.degree));
  append_witnesses(rs, reg_witnesses);
  add(rs);

  double koszul_factor =
      static_cast<double>(1u << std::min<std::size_t>(data.omega_bar.size(), 20));
  int d_tor = capped_bound(data.polarized.table, d_max, 2500.0, koszul_factor);
  VerificationReport::Record tc{"tor_concentration", d_tor, true, {}};
  ModuleAction action = build_action(data);
  if (!actions_commute(action, std::min(d_tor, 8))) {
    tc.pass = false;
    tc.witnesses.push_back("w-action matrices do not commute");
  }
  TorTable tor = koszul_tor(action, d_tor);
  TorConcentrationReport tor_report =
      check_tor_concentration(tor, hilbert_function(ring, d_tor));
  tc.pass = tc.pass && tor_report.pass;
  append_witnesses(tc, tor_report.witnesses);
  add(tc);

  ZModel model = build_z_model(data);
  int d_z = capped_bound(model.q_direct.table, d_max, 2e4);
  VerificationReport::Record zc{"z_model", d_z, true, {}};
  ZModelReport z_report = z_model_compare(data, model, d_z);
  zc.pass = z_report.pass;
  if (z_report.first_rank_mismatch >= 0)
    zc.witnesses.push_back("rank mismatch at degree " +
                           std::to_string(z_report.first_rank_mismatch));
  std::vector<std::string> image_witnesses;
  for (const auto& w : z_report.bad_generator_images)
    image_witnesses.push_back("generator image outside L': " + w);
  append_witnesses(zc, image_witnesses);
  add(zc);

  VerificationReport::Record ph{"predicted_cohomology_hilbert", d_max, true, {}};
  MonomialRing reparsed = parse_presentation(pretty_print(ring));
  ph.pass = reparsed == ring &&
            hilbert_function(reparsed, d_max) == hilbert_function(ring, d_max);
  if (!ph.pass)
    ph.witnesses.push_back("predicted presentation does not reproduce A");
  add(ph);

  return report;
}

std::string serialize_report(const VerificationReport& report) {
  return dump(report_json(report));
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream os;
  for (const auto& r : report.records) {
    os << "[" << (r.pass ? "PASS" : "FAIL") << "] " << r.name << " (d <= "
       << r.d_max << ")\n";
    for (const auto& w : r.witnesses) os << "    " << w << "\n";
  }
  os << "overall: " << (report.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::pair<RealizationPlan, VerificationReport> golden_example() {
  MonomialRing ring = parse_presentation(
      "ring { even: x:4; odd: y:1 } ideal { x^2*y }");
  return {emit_plan(ring), verify(ring, 40)};
}

std::string serialize_example(const RealizationPlan& plan,
                              const VerificationReport& report) {
  ordered_json j;
  j["plan"] = plan_json(plan);
  j["report"] = report_json(report);
  return dump(j);
}

}  // namespace gmi
