#ifndef GMI_PLAN_HPP
#define GMI_PLAN_HPP

#include <stdexcept>
#include <string>
#include <utility>

#include "gmi/homology.hpp"
#include "gmi/polarization.hpp"
#include "gmi/stanley_reisner.hpp"

namespace gmi {

/// Parse failure with 1-based source position.
struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(int line, int column, const std::string& message);
};

/// Parses the presentation grammar:
///   file       := ring_block ideal_block ;
///   ring_block := "ring" "{" ["even" ":" varlist ";"] ["odd" ":" varlist] "}" ;
///   varlist    := var ("," var)* ;   var := NAME ":" INT ;
///   ideal_block:= "ideal" "{" [monomial (";" monomial)*] "}" ;
///   monomial   := factor ("*" factor)* ;   factor := NAME ["^" INT] ;
/// Whitespace-insensitive, "#" comments to end of line.
MonomialRing parse_presentation(const std::string& text);

/// Grammar text that re-parses to an equal ring.
std::string pretty_print(const MonomialRing& ring);

/// Blueprint of the realization: the polyhedral-product factors over the
/// complex K, the fibration over the identified coordinates whose fiber
/// carries the predicted cohomology, and the degree-2 comparison model.
struct RealizationPlan {
  MonomialRing ring;
  PolarizationData polarization;
  VertexLabeling labeling;
  SimplicialComplex complex;

  struct Factor {
    std::string label;  // variable the factor realizes
    std::string space;  // "K(Z,d)" or "S^d"
    int degree = 0;
  };
  std::vector<Factor> factors;

  struct Fibration {
    std::vector<std::pair<int, int>> base_coordinates;  // omega_bar
    std::vector<std::string> rules;  // "u_i_j*u_i_1^-1" per coordinate
    std::string fiber = "X_A";
  };
  Fibration fibration;

  ZModel z_model;
  std::vector<std::string> generator_map;  // x'_{ij} -> prod_k z'_{ijk}

  bool exact_cohomology = false;  // every even degree is 2
  bool free_split = true;         // structural metadata, not verified
};

RealizationPlan emit_plan(const MonomialRing& ring);

/// JSON with fixed key order; identical plans serialize byte-identically.
std::string serialize_plan(const RealizationPlan& plan);
std::string plan_to_text(const RealizationPlan& plan);

struct VerificationReport {
  struct Record {
    std::string name;
    int d_max = 0;  // bound actually used (may be tightened adaptively)
    bool pass = true;
    std::vector<std::string> witnesses;
  };
  std::vector<Record> records;
  bool pass = true;
};

/// Runs, in order: square-freeness of the polarized ideal, the
/// Stanley-Reisner round trip, the rank identity, the regular-sequence
/// check, Koszul Tor concentration, the Z-model comparison, and the
/// predicted-cohomology Hilbert identity.  Failures are collected, the
/// pipeline never stops early.
VerificationReport verify(const MonomialRing& ring, int d_max);

std::string serialize_report(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

/// The worked example Z[x] (x) Lambda[y] / (x^2 y), |x| = 4, |y| = 1,
/// with its verification at d_max = 40.
std::pair<RealizationPlan, VerificationReport> golden_example();

/// serialize_plan + serialize_report in one document, the committed fixture
/// format of the `example` subcommand.
std::string serialize_example(const RealizationPlan& plan,
                              const VerificationReport& report);

}  // namespace gmi

#endif
