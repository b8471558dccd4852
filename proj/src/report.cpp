#include "endogrowth/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "endogrowth/errors.hpp"
#include "endogrowth/solgr.hpp"

namespace endogrowth {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Json provenance_list(const std::vector<Provenance>& ps) {
  Json a = Json::array();
  for (auto p : ps) a.push_back(to_string(p));
  return a;
}

Json bigint_list(const std::vector<BigInt>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(to_json(x));
  return a;
}

Json eventual_json(const EventualTriviality& et) {
  Json j;
  switch (et.kind) {
    case EventualTriviality::Kind::yes:
      j["verdict"] = "yes";
      j["steps"] = et.steps;
      break;
    case EventualTriviality::Kind::no: j["verdict"] = "no"; break;
    default: j["verdict"] = "unknown"; break;
  }
  return j;
}

Json linear_json(const LinearClosed& c) {
  Json j;
  j["method"] = c.method;
  j["matrix"] = to_json(c.matrix);
  j["spectral"] = to_json(c.sp);
  if (c.torsion_nontrivial) j["torsion_part_nontrivial"] = *c.torsion_nontrivial;
  return j;
}

Json nil_json(const NilReport& r) {
  Json j;
  j["method"] = "sp(D1)";
  j["D1"] = to_json(r.d1);
  j["sp_D1"] = to_json(r.sp1);
  if (r.d2) {
    j["D2"] = to_json(*r.d2);
    j["sp_D2"] = to_json(*r.sp2);
    j["sqrt_sp_D2"] = std::sqrt(r.sp2->value);
  } else {
    j["D2"] = nullptr;
    j["D2_note"] = r.d2_note;
  }
  j["block_max"] = r.block_max;
  j["sp_D2_le_sp_D1_squared"] = r.ko_holds;
  return j;
}

Json sol_json(const Sol& g, const SolEndo& e, const SolClosed& c, double tol) {
  Json j;
  j["method"] = "sol_lattice closed form";
  j["type"] = to_string(e.type);
  j["M"] = to_json(e.M);
  j["p"] = to_json(e.p);
  j["q"] = to_json(e.q);
  j["m"] = to_json(e.m);
  j["branch"] = c.branch;
  j["tie"] = c.tie;
  j["via_square"] = c.via_square;
  j["char_poly_A"] = to_json(c.char_poly_A);
  j["char_poly_M"] = to_json(c.char_poly_M);
  if (c.eigen) {
    Json ed;
    ed["alpha"] = c.eigen->alpha;
    ed["beta"] = c.eigen->beta;
    ed["mu"] = c.eigen->mu;
    ed["nu"] = c.eigen->nu;
    ed["error"] = c.eigen->err;
    ed["trace"] = to_json(c.eigen->trace_m);
    ed["det"] = to_json(c.eigen->det_m);
    ed["x"] = c.eigen->x.get_str();
    ed["y"] = c.eigen->y.get_str();
    j[c.via_square ? "eigen_of_square" : "eigen"] = ed;
  }
  j["two_sided_value"] = c.two_sided_value;
  // GR of the restriction to the fiber Z^2 and of the induced map on Z.
  const SpectralResult fiber = spectral_radius(e.M, tol);
  j["fiber_gr"] = fiber.value;
  j["quotient_gr"] = BigInt(abs(e.m)).get_d();
  j["sp_A"] = spectral_radius(g.A(), tol).value;
  return j;
}

Json options_json(const RunOptions& o) {
  Json j;
  j["kmax"] = o.kmax;
  j["radius"] = o.radius;
  j["cap"] = o.cap;
  j["tol"] = o.tol;
  if (!o.word.empty()) j["word"] = o.word;
  return j;
}

Json inputs_json(const GroupDescriptor& g, const EndoDescriptor* e, const RunOptions& o) {
  Json j;
  j["group"] = emit_group(g);
  if (e) j["endo"] = emit_endo(*e);
  j["options"] = options_json(o);
  return j;
}

Json closed_json(const ClosedOutcome& c) {
  Json j;
  j["value"] = c.value ? Json(*c.value) : Json(nullptr);
  j["abs_error"] = c.abs_error;
  j["certificate"] = c.certificate;
  return j;
}

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

Json to_json(const SpectralResult& sp) {
  Json j;
  j["value"] = sp.value;
  j["abs_error"] = sp.abs_error;
  j["char_poly"] = to_json(sp.char_poly);
  j["char_poly_text"] = sp.char_poly.str();
  Json roots = Json::array();
  for (const auto& r : sp.roots) {
    Json x;
    x["re"] = r.value.real();
    x["im"] = r.value.imag();
    x["radius"] = r.radius;
    x["multiplicity"] = r.multiplicity;
    roots.push_back(x);
  }
  j["roots"] = roots;
  return j;
}

Json to_json(const GrowthEstimate& table, const GrowthSummary& s) {
  Json j;
  j["generators"] = table.gen_names;
  Json rows = Json::array();
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& r = table.rows[i];
    Json x;
    x["k"] = r.k;
    x["L"] = to_json(r.L);
    x["provenance"] = to_string(r.provenance);
    x["root"] = s.roots[i];
    x["running_inf"] = s.running_inf[i];
    x["per_gen"] = bigint_list(r.per_gen);
    x["per_gen_provenance"] = provenance_list(r.per_gen_provenance);
    rows.push_back(x);
  }
  j["rows"] = rows;
  j["estimate"] = s.estimate;
  j["certified_upper_bound"] = s.certified;
  j["per_gen_limit"] = s.per_gen_limit;
  j["max_lim"] = s.max_lim;
  j["trend"] = s.trend;
  return j;
}

Json to_json(const DistortionTable& t) {
  Json j;
  j["subgroup"] = t.subgroup;
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json x;
    x["n"] = r.n;
    x["count"] = r.count;
    x["delta"] = to_json(r.delta);
    x["witness"] = r.witness;
    rows.push_back(x);
  }
  j["rows"] = rows;
  return j;
}

ClosedOutcome closed_form(const AnyMachine& machine, const Endomorphism& phi, double tol) {
  return std::visit(
      [&](const auto& m) -> ClosedOutcome {
        using M = std::decay_t<decltype(m)>;
        ClosedOutcome out;
        if constexpr (std::is_same_v<M, FreeAbelian> || std::is_same_v<M, TorsionProduct> ||
                      std::is_same_v<M, Klein>) {
          LinearClosed c;
          if constexpr (std::is_same_v<M, FreeAbelian>)
            c = gr_abelian_closed(m, phi, tol);
          else if constexpr (std::is_same_v<M, TorsionProduct>)
            c = gr_torsion_closed(m, phi, tol);
          else
            c = gr_klein_closed(m, phi, tol);
          out.value = c.value;
          out.abs_error = c.abs_error;
          out.certificate = linear_json(c);
        } else if constexpr (std::is_same_v<M, Heisenberg> || std::is_same_v<M, Nil2>) {
          const NilReport r = gr_nilpotent_closed(m, phi, tol);
          out.value = r.value;
          out.abs_error = r.abs_error;
          out.certificate = nil_json(r);
        } else if constexpr (std::is_same_v<M, Sol>) {
          const SolEndo e = classify_endo(m, phi);
          const SolClosed c = gr_sol_closed(m, e, tol);
          out.value = c.value;
          out.abs_error = c.abs_error;
          out.certificate = sol_json(m, e, c, tol);
        } else {
          // No closed form for Baumslag-Solitar groups; report the
          // restriction to <b> = Z when phi(b) lies in it.
          require_endomorphism(m, phi);
          const ElementMap<BaumslagSolitar> map(m, phi);
          const auto& fb = map.images()[1];
          Json c;
          c["method"] = "none";
          if (fb.e == 0 && fb.t == 0) {
            const FreeAbelian z(1, {m.gens().name(1)});
            IntMatrix d(1, 1);
            d(0, 0) = fb.num;
            const LinearClosed r = gr_abelian_closed(z, z.endo_from_matrix(d), tol);
            c["restricted_subgroup"] = m.subgroup_name();
            c["restricted_gr"] = r.value;
            c["restricted"] = linear_json(r);
          } else {
            c["restricted_subgroup"] = m.subgroup_name();
            c["restricted_gr"] = nullptr;
          }
          out.certificate = c;
        }
        return out;
      },
      machine);
}

GrowthEstimate empirical_table(const AnyMachine& machine, const Endomorphism& phi, const RunOptions& opt) {
  return std::visit(
      [&](const auto& m) -> GrowthEstimate {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, Sol>) {
          return gr_sol_empirical(m, classify_endo(m, phi), opt.kmax, m.shifts());
        } else {
          require_endomorphism(m, phi);
          return L_k_table(m, phi, opt.kmax, opt.radius, opt.cap);
        }
      },
      machine);
}

std::string verdict(const std::optional<double>& closed, double closed_error, const GrowthSummary& s, double tol) {
  if (!closed || s.running_inf.empty()) return "inconclusive";
  const double slack = tol + closed_error;
  const double inf = s.estimate;
  if (inf < *closed - slack) return "inconsistent";
  if (inf <= *closed * (1 + kVerdictBand) + slack) return "consistent";
  return "inconclusive";
}

Report cmd_check(const GroupDescriptor& g, const EndoDescriptor& e, const RunOptions& opt) {
  const auto t0 = Clock::now();
  const AnyMachine machine = make_machine(g);
  Report rep;
  Json& j = rep.json;
  j["command"] = "check";
  j["inputs"] = inputs_json(g, &e, opt);
  j["family"] = machine_family(machine);
  // make_endo validates; a failure propagates as a ValidationError.
  const Endomorphism phi = make_endo(machine, e);
  j["valid"] = true;
  Json images = Json::object();
  for (std::size_t i = 0; i < phi.images().size(); ++i)
    images[machine_gens(machine).name(i)] = format_word(machine_gens(machine), phi.image(i));
  j["images"] = images;
  std::visit(
      [&](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, Sol>) j["sol_type"] = to_string(classify_endo(m, phi).type);
        j["eventually_trivial"] = eventual_json(eventually_trivial(m, phi));
      },
      machine);
  if (opt.timings) j["timings_ms"] = {{"total", ms_since(t0)}};
  rep.summary = "valid endomorphism of " + machine_family(machine) + ", eventually trivial: " +
                j["eventually_trivial"]["verdict"].get<std::string>();
  return rep;
}

Report cmd_closed(const GroupDescriptor& g, const EndoDescriptor& e, const RunOptions& opt) {
  const auto t0 = Clock::now();
  const AnyMachine machine = make_machine(g);
  const Endomorphism phi = make_endo(machine, e);
  const ClosedOutcome c = closed_form(machine, phi, opt.tol);
  Report rep;
  rep.json["command"] = "closed";
  rep.json["inputs"] = inputs_json(g, &e, opt);
  rep.json["closed"] = closed_json(c);
  if (opt.timings) rep.json["timings_ms"] = {{"total", ms_since(t0)}};
  rep.summary = c.value ? "GR = " + fmt(*c.value) + " +/- " + fmt(c.abs_error) : "no closed form for this family";
  return rep;
}

Report cmd_closed_blocks(const BlockList& blocks, const RunOptions& opt) {
  const BlocksResult r = gr_from_blocks(blocks, opt.tol);
  Report rep;
  Json& j = rep.json;
  j["command"] = "closed";
  Json in = Json::array();
  for (const auto& b : blocks) in.push_back({{"weight", b.weight}, {"matrix", to_json(b.matrix)}});
  j["inputs"] = {{"blocks", in}, {"options", options_json(opt)}};
  Json certs = Json::array();
  for (const auto& c : r.blocks) certs.push_back({{"weight", c.weight}, {"root", c.root}, {"spectral", to_json(c.sp)}});
  j["closed"] = {{"value", r.value},
                 {"abs_error", r.abs_error},
                 {"certificate", {{"method", "max_j sp(D_j)^(1/j)"}, {"blocks", certs}}}};
  rep.summary = "GR = " + fmt(r.value) + " +/- " + fmt(r.abs_error);
  return rep;
}

Report cmd_empirical(const GroupDescriptor& g, const EndoDescriptor& e, const RunOptions& opt) {
  const auto t0 = Clock::now();
  const AnyMachine machine = make_machine(g);
  const Endomorphism phi = make_endo(machine, e);
  const GrowthEstimate table = empirical_table(machine, phi, opt);
  const GrowthSummary s = gr_estimate(table);
  Report rep;
  rep.json["command"] = "empirical";
  rep.json["inputs"] = inputs_json(g, &e, opt);
  rep.json["empirical"] = to_json(table, s);
  if (opt.timings) rep.json["timings_ms"] = {{"total", ms_since(t0)}};
  rep.csv = growth_csv(table, s);
  rep.summary = "estimate " + fmt(s.estimate) + " at k = " + std::to_string(opt.kmax) + " (" + s.trend + ")";
  return rep;
}

Report cmd_compare(const GroupDescriptor& g, const EndoDescriptor& e, const RunOptions& opt) {
  const auto t0 = Clock::now();
  const AnyMachine machine = make_machine(g);
  const Endomorphism phi = make_endo(machine, e);
  const ClosedOutcome c = closed_form(machine, phi, opt.tol);
  const auto t1 = Clock::now();
  const GrowthEstimate table = empirical_table(machine, phi, opt);
  const GrowthSummary s = gr_estimate(table);
  const std::string v = verdict(c.value, c.abs_error, s, opt.tol);
  Report rep;
  Json& j = rep.json;
  j["command"] = "compare";
  j["inputs"] = inputs_json(g, &e, opt);
  j["closed"] = closed_json(c);
  j["empirical"] = to_json(table, s);
  j["verdict"] = v;
  j["verdict_band"] = kVerdictBand;
  if (opt.timings) j["timings_ms"] = {{"closed", std::chrono::duration<double, std::milli>(t1 - t0).count()},
                                      {"empirical", ms_since(t1)}};
  rep.csv = growth_csv(table, s);
  rep.summary = (c.value ? "closed " + fmt(*c.value) : std::string("closed n/a")) + ", empirical " +
                fmt(s.estimate) + ", verdict " + v;
  return rep;
}

Report cmd_ball(const GroupDescriptor& g, const RunOptions& opt) {
  const auto t0 = Clock::now();
  const AnyMachine machine = make_machine(g);
  Report rep;
  Json& j = rep.json;
  j["command"] = "ball";
  j["inputs"] = inputs_json(g, nullptr, opt);
  std::ostringstream csv;
  csv << "r,sphere,count\n";
  std::visit(
      [&](const auto& m) {
        const auto b = enumerate_ball(m, opt.radius, opt.cap);
        Json rows = Json::array();
        for (std::size_t r = 0; r <= b.radius(); ++r) {
          rows.push_back({{"r", r}, {"sphere", b.sphere_size(r)}, {"count", b.count(r)}});
          csv << r << ',' << b.sphere_size(r) << ',' << b.count(r) << '\n';
        }
        j["rows"] = rows;
        rep.summary = "|B(" + std::to_string(b.radius()) + ")| = " + std::to_string(b.size());
      },
      machine);
  if (opt.timings) j["timings_ms"] = {{"total", ms_since(t0)}};
  rep.csv = csv.str();
  return rep;
}

Report cmd_wordlen(const GroupDescriptor& g, const RunOptions& opt) {
  const AnyMachine machine = make_machine(g);
  Report rep;
  Json& j = rep.json;
  j["command"] = "wordlen";
  j["inputs"] = inputs_json(g, nullptr, opt);
  std::visit(
      [&](const auto& m) {
        const Word w = parse_word(m.gens(), opt.word);
        const auto e = evaluate(m, w);
        j["element"] = m.format(e);
        j["normal_form"] = format_word(m.gens(), to_word(m.normal_word(e)));
        j["upper_bound"] = to_json(m.length_upper(e));
        j["short_word"] = format_word(m.gens(), to_word(m.short_word(e)));
        const auto exact = word_length(m, e, opt.radius, opt.cap);
        j["exact"] = exact ? Json(*exact) : Json(nullptr);
        rep.summary = exact ? "length " + std::to_string(*exact)
                            : "length > " + std::to_string(opt.radius) + ", at most " + m.length_upper(e).get_str();
      },
      machine);
  return rep;
}

Report cmd_distortion(const GroupDescriptor& g, const RunOptions& opt) {
  const AnyMachine machine = make_machine(g);
  Report rep;
  rep.json["command"] = "distortion";
  rep.json["inputs"] = inputs_json(g, nullptr, opt);
  std::visit(
      [&](const auto& m) {
        using E = typename std::decay_t<decltype(m)>::Element;
        DistortionTable t = distortion(
            m, [&](const E& e) { return m.in_subgroup(e); }, [&](const E& e) { return m.inner_length(e); },
            opt.radius, opt.cap);
        t.subgroup = m.subgroup_name();
        rep.json["distortion"] = to_json(t);
        rep.csv = distortion_csv(t);
        rep.summary = "Delta(" + std::to_string(opt.radius) + ") = " + t.rows.back().delta.get_str() + " in " +
                      t.subgroup;
      },
      machine);
  return rep;
}

}  // namespace endogrowth
