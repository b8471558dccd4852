#pragma once

// Family dispatch for closed forms and empirical tables, and the JSON/CSV
// reports behind each command-line subcommand.

#include <optional>
#include <string>

#include "endogrowth/ball.hpp"
#include "endogrowth/io.hpp"

namespace endogrowth {

struct RunOptions {
  unsigned kmax = 16;
  std::size_t radius = 10;
  std::size_t cap = kDefaultCap;
  double tol = kDefaultSpectralTol;
  bool timings = false;  // off by default so reports are byte-identical
  std::string word;      // wordlen only
};

/// Relative width of the band above the closed form inside which the
/// running infimum counts as consistent.
inline constexpr double kVerdictBand = 0.15;

struct ClosedOutcome {
  std::optional<double> value;  // absent when the family has no closed form
  double abs_error = 0;
  Json certificate = Json::object();
};

ClosedOutcome closed_form(const AnyMachine& m, const Endomorphism& phi, double tol = kDefaultSpectralTol);

/// Exact BFS lengths where B(radius) reaches, family length functional
/// elsewhere; Sol lattices use the fiber length functional throughout.
GrowthEstimate empirical_table(const AnyMachine& m, const Endomorphism& phi, const RunOptions& opt);

/// "consistent" | "inconsistent" | "inconclusive"
std::string verdict(const std::optional<double>& closed, double closed_error, const GrowthSummary& s,
                    double tol = kDefaultSpectralTol);

struct Report {
  Json json;
  std::optional<std::string> csv;  // tables only
  std::string summary;             // one human-readable line
};

Report cmd_check(const GroupDescriptor& g, const EndoDescriptor& e, const RunOptions& opt);
Report cmd_closed(const GroupDescriptor& g, const EndoDescriptor& e, const RunOptions& opt);
Report cmd_closed_blocks(const BlockList& blocks, const RunOptions& opt);
Report cmd_empirical(const GroupDescriptor& g, const EndoDescriptor& e, const RunOptions& opt);
Report cmd_compare(const GroupDescriptor& g, const EndoDescriptor& e, const RunOptions& opt);
Report cmd_ball(const GroupDescriptor& g, const RunOptions& opt);
Report cmd_wordlen(const GroupDescriptor& g, const RunOptions& opt);
Report cmd_distortion(const GroupDescriptor& g, const RunOptions& opt);

Json to_json(const GrowthEstimate& table, const GrowthSummary& summary);
Json to_json(const DistortionTable& table);
Json to_json(const SpectralResult& sp);

}  // namespace endogrowth
