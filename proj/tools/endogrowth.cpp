// Command-line front end: check, closed, empirical, compare, ball, wordlen,
// distortion. Exit codes: 0 ok, 2 invalid input, 3 resource cap, 4
// certification or internal failure.

#include <cmath>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "endogrowth/errors.hpp"
#include "endogrowth/report.hpp"

using namespace endogrowth;

namespace {

struct Args {
  std::string group, endo, blocks, out, format = "json";
  double cap = static_cast<double>(kDefaultCap);
  RunOptions opt;
};

int emit(const Report& rep, const Args& a) {
  std::string body;
  if (a.format == "csv") {
    if (!rep.csv) throw ValidationError("--format csv is only available for table commands");
    body = *rep.csv;
  } else {
    body = rep.json.dump(2) + "\n";
  }
  if (a.out.empty()) {
    std::cout << body;
    return 0;
  }
  std::ofstream f(a.out, std::ios::binary);
  if (!f) throw ValidationError("cannot write " + a.out);
  f << body;
  std::cout << rep.summary << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Growth rates of group endomorphisms"};
  app.require_subcommand(1);
  Args a;

  auto common = [&](CLI::App* sub, bool needs_endo) {
    sub->add_option("--group", a.group, "group descriptor (JSON)")->check(CLI::ExistingFile);
    if (needs_endo) sub->add_option("--endo", a.endo, "endomorphism descriptor (JSON)")->check(CLI::ExistingFile);
    sub->add_option("--kmax", a.opt.kmax, "number of iterates")->capture_default_str();
    sub->add_option("--radius", a.opt.radius, "ball radius")->capture_default_str();
    sub->add_option("--cap", a.cap, "maximum number of stored ball elements")->capture_default_str();
    sub->add_option("--tol", a.opt.tol, "spectral tolerance")->capture_default_str();
    sub->add_option("--format", a.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", a.out, "write machine output here");
    sub->add_flag("--timings", a.opt.timings, "include wall-clock timings in reports");
  };

  auto* check = app.add_subcommand("check", "validate an endomorphism");
  auto* closed = app.add_subcommand("closed", "closed-form growth rate");
  auto* empirical = app.add_subcommand("empirical", "L_k table and estimate");
  auto* compare = app.add_subcommand("compare", "closed form against the estimate");
  auto* ball = app.add_subcommand("ball", "Cayley ball sizes");
  auto* wordlen = app.add_subcommand("wordlen", "exact and upper-bound word length");
  auto* dist = app.add_subcommand("distortion", "distortion profile of the family subgroup");
  for (auto* s : {check, closed, empirical, compare}) common(s, true);
  for (auto* s : {ball, wordlen, dist}) common(s, false);
  closed->add_option("--blocks", a.blocks, "block list (JSON) instead of --group/--endo")->check(CLI::ExistingFile);
  wordlen->add_option("--word", a.opt.word, "word over the group generators")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!(a.cap >= 1) || a.cap > 1e9 || a.cap != std::floor(a.cap)) throw ValidationError("--cap: expected 1..1e9");
    a.opt.cap = static_cast<std::size_t>(a.cap);
    auto* sub = app.get_subcommands().front();
    const bool blocks = sub == closed && !a.blocks.empty();
    if (!blocks && a.group.empty()) throw ValidationError("--group is required");
    const bool needs_endo = sub == check || sub == closed || sub == empirical || sub == compare;
    if (needs_endo && !blocks && a.endo.empty()) throw ValidationError("--endo is required");

    if (blocks) return emit(cmd_closed_blocks(load_blocks(a.blocks), a.opt), a);
    const GroupDescriptor g = load_group(a.group);
    if (sub == ball) return emit(cmd_ball(g, a.opt), a);
    if (sub == wordlen) return emit(cmd_wordlen(g, a.opt), a);
    if (sub == dist) return emit(cmd_distortion(g, a.opt), a);
    const EndoDescriptor e = load_endo(a.endo);
    if (sub == check) return emit(cmd_check(g, e, a.opt), a);
    if (sub == closed) return emit(cmd_closed(g, e, a.opt), a);
    if (sub == empirical) return emit(cmd_empirical(g, e, a.opt), a);
    return emit(cmd_compare(g, e, a.opt), a);
  } catch (const ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return 3;
  } catch (const UncertifiedError& e) {
    std::cerr << "certification failure: " << e.what() << '\n';
    return 4;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return 4;
  } catch (const Error& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
}
