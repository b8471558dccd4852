#include "endogrowth/io.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "endogrowth/errors.hpp"
#include "endogrowth/solgr.hpp"

namespace endogrowth {

namespace {

const std::set<std::string> kFamilies{"free_abelian", "abelian_with_torsion", "heisenberg", "nilpotent2",
                                      "sol_lattice",  "klein_bottle",         "baumslag_solitar"};

const Json& field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw ValidationError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ValidationError(where + ": missing field \"" + key + "\"");
  return *it;
}

std::size_t size_from_json(const Json& j, const std::string& name) {
  const BigInt v = bigint_from_json(j, name);
  if (v < 0 || v > 4096) throw ValidationError(name + ": expected a small nonnegative integer");
  return v.get_ui();
}

std::vector<std::string> names_from_json(const Json& j, const std::string& name) {
  if (!j.is_array()) throw ValidationError(name + ": expected an array of names");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) throw ValidationError(name + ": expected an array of names");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::vector<std::vector<BigInt>> rows_from_json(const Json& j, const std::string& name) {
  if (!j.is_array() || j.empty()) throw ValidationError(name + ": expected a nonempty array of rows");
  std::vector<std::vector<BigInt>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array()) throw ValidationError(name + ": row " + std::to_string(i) + " is not an array");
    std::vector<BigInt> r;
    for (std::size_t c = 0; c < j[i].size(); ++c)
      r.push_back(bigint_from_json(j[i][c], name + "[" + std::to_string(i) + "][" + std::to_string(c) + "]"));
    if (!rows.empty() && r.size() != rows[0].size()) throw ValidationError(name + ": ragged rows");
    rows.push_back(std::move(r));
  }
  if (rows[0].empty()) throw ValidationError(name + ": empty rows");
  return rows;
}

/// "i,j" with 1-based indices.
std::pair<std::size_t, std::size_t> pair_key(const std::string& key, std::size_t n) {
  std::istringstream is(key);
  long i = 0, j = 0;
  char comma = 0;
  if (!(is >> i >> comma >> j) || comma != ',' || !is.eof() || i < 1 || j < 1 || i > long(n) || j > long(n))
    throw ValidationError("nilpotent2.gamma: bad key \"" + key + "\", expected \"i,j\" with 1 <= i, j <= n_gens");
  return {std::size_t(i - 1), std::size_t(j - 1)};
}

Nil2Structure nil2_structure(const Json& params, const std::vector<std::string>& tau_names) {
  Nil2Structure s;
  s.n = size_from_json(field(params, "n_gens", "nilpotent2"), "nilpotent2.n_gens");
  s.tau_names = tau_names;
  s.central = names_from_json(field(params, "central", "nilpotent2"), "nilpotent2.central");
  s.designated.assign(s.central.size(), std::nullopt);
  std::map<std::string, std::size_t> central_index;
  for (std::size_t c = 0; c < s.central.size(); ++c) central_index[s.central[c]] = c;
  if (auto it = params.find("designated"); it != params.end()) {
    if (!it->is_object()) throw ValidationError("nilpotent2.designated: expected an object");
    for (const auto& [name, pr] : it->items()) {
      auto ci = central_index.find(name);
      if (ci == central_index.end()) throw ValidationError("nilpotent2.designated: unknown central generator " + name);
      if (!pr.is_array() || pr.size() != 2)
        throw ValidationError("nilpotent2.designated." + name + ": expected [i, j]");
      const std::size_t i = size_from_json(pr[0], "nilpotent2.designated." + name);
      const std::size_t j = size_from_json(pr[1], "nilpotent2.designated." + name);
      if (i < 1 || j < 1 || i >= j || j > s.n)
        throw ValidationError("nilpotent2.designated." + name + ": need 1 <= i < j <= n_gens");
      s.designated[ci->second] = std::make_pair(i - 1, j - 1);
    }
  }
  if (auto it = params.find("gamma"); it != params.end()) {
    if (!it->is_object()) throw ValidationError("nilpotent2.gamma: expected an object");
    for (const auto& [key, val] : it->items()) {
      const auto ij = pair_key(key, s.n);
      if (ij.first <= ij.second) throw ValidationError("nilpotent2.gamma: key \"" + key + "\" needs i > j");
      std::vector<BigInt> v(s.central.size());
      if (!val.is_object()) throw ValidationError("nilpotent2.gamma." + key + ": expected {central: exponent}");
      for (const auto& [name, e] : val.items()) {
        auto ci = central_index.find(name);
        if (ci == central_index.end()) throw ValidationError("nilpotent2.gamma." + key + ": unknown central " + name);
        v[ci->second] = bigint_from_json(e, "nilpotent2.gamma." + key + "." + name);
      }
      s.gamma[ij] = std::move(v);
    }
  }
  return s;
}

}  // namespace

Json to_json(const BigInt& x) {
  if (fits_int64(x)) return Json(to_int64(x));
  return Json(x.get_str());
}

BigInt bigint_from_json(const Json& j, const std::string& name) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? BigInt(std::to_string(j.get<std::uint64_t>()))
                                                           : BigInt(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    BigInt x;
    const std::size_t start = !s.empty() && (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos ||
        x.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0)
      throw ValidationError(name + ": \"" + s + "\" is not an integer");
    return x;
  }
  throw ValidationError(name + ": expected an integer");
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) r.push_back(to_json(m(i, c)));
    rows.push_back(std::move(r));
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j, const std::string& name) {
  return IntMatrix::from_rows(rows_from_json(j, name));
}

Json to_json(const IntPolynomial& p) {
  Json c = Json::array();
  for (const auto& x : p.coeffs()) c.push_back(to_json(x));
  return c;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

GroupDescriptor parse_group(const Json& j) {
  GroupDescriptor d;
  const Json& fam = field(j, "family", "group");
  if (!fam.is_string()) throw ValidationError("group.family: expected a string");
  d.family = fam.get<std::string>();
  if (!kFamilies.contains(d.family)) throw ValidationError("group.family: unknown family \"" + d.family + "\"");
  if (auto it = j.find("params"); it != j.end()) {
    if (!it->is_object()) throw ValidationError("group.params: expected an object");
    d.params = *it;
  }
  if (auto it = j.find("generators"); it != j.end()) d.generators = names_from_json(*it, "group.generators");
  for (const auto& [key, val] : j.items())
    if (key != "family" && key != "params" && key != "generators")
      throw ValidationError("group: unknown field \"" + key + "\"");
  return d;
}

GroupDescriptor load_group(const std::string& path) { return parse_group(read_json_file(path)); }

Json emit_group(const GroupDescriptor& d) {
  Json j;
  j["family"] = d.family;
  j["params"] = d.params;
  if (!d.generators.empty()) j["generators"] = d.generators;
  return j;
}

EndoDescriptor parse_endo(const Json& j) {
  if (!j.is_object()) throw ValidationError("endo: expected an object");
  EndoDescriptor d;
  if (j.contains("images")) {
    d.kind = EndoDescriptor::Kind::images;
    const Json& im = j["images"];
    if (!im.is_object()) throw ValidationError("endo.images: expected {generator: word}");
    for (const auto& [name, w] : im.items()) {
      if (!w.is_string()) throw ValidationError("endo.images." + name + ": expected a word string");
      d.images.emplace_back(name, w.get<std::string>());
    }
  } else if (j.contains("M")) {
    d.kind = EndoDescriptor::Kind::sol_shortcut;
    d.M = matrix_from_json(j["M"], "endo.M");
    d.p = j.contains("p") ? bigint_from_json(j["p"], "endo.p") : BigInt(0);
    d.q = j.contains("q") ? bigint_from_json(j["q"], "endo.q") : BigInt(0);
    d.tau_exp = bigint_from_json(field(j, "tau_exp", "endo"), "endo.tau_exp");
  } else if (j.contains("matrix")) {
    d.kind = EndoDescriptor::Kind::matrix;
    d.matrix = matrix_from_json(j["matrix"], "endo.matrix");
  } else {
    throw ValidationError("endo: expected \"images\", a Sol shortcut (\"M\", \"tau_exp\") or \"matrix\"");
  }
  return d;
}

EndoDescriptor load_endo(const std::string& path) { return parse_endo(read_json_file(path)); }

Json emit_endo(const EndoDescriptor& d) {
  Json j;
  switch (d.kind) {
    case EndoDescriptor::Kind::images: {
      Json im = Json::object();
      for (const auto& [name, w] : d.images) im[name] = w;
      j["images"] = im;
      break;
    }
    case EndoDescriptor::Kind::sol_shortcut:
      j["M"] = to_json(d.M);
      j["p"] = to_json(d.p);
      j["q"] = to_json(d.q);
      j["tau_exp"] = to_json(d.tau_exp);
      break;
    case EndoDescriptor::Kind::matrix:
      j["matrix"] = to_json(d.matrix);
      break;
  }
  return j;
}

AnyMachine make_machine(const GroupDescriptor& d) {
  const Json& p = d.params;
  const auto& names = d.generators;
  if (d.family == "free_abelian") return FreeAbelian(size_from_json(field(p, "rank", d.family), "rank"), names);
  if (d.family == "abelian_with_torsion") {
    std::vector<BigInt> torsion;
    const Json& t = field(p, "torsion", d.family);
    if (!t.is_array()) throw ValidationError("abelian_with_torsion.torsion: expected an array");
    for (const auto& x : t) torsion.push_back(bigint_from_json(x, "abelian_with_torsion.torsion"));
    return TorsionProduct(size_from_json(field(p, "rank", d.family), "rank"), std::move(torsion), names);
  }
  if (d.family == "heisenberg") return Heisenberg(bigint_from_json(field(p, "k", d.family), "heisenberg.k"), names);
  if (d.family == "nilpotent2") return Nil2(nil2_structure(p, names));
  if (d.family == "sol_lattice") {
    ShiftRange shifts = ShiftRange::nonnegative;
    if (auto it = p.find("shifts"); it != p.end()) {
      if (*it == "both")
        shifts = ShiftRange::both;
      else if (*it != "nonnegative")
        throw ValidationError("sol_lattice.shifts: expected \"nonnegative\" or \"both\"");
    }
    return Sol(matrix_from_json(field(p, "A", d.family), "sol_lattice.A"), names, shifts);
  }
  if (d.family == "klein_bottle") return Klein(names);
  return BaumslagSolitar(bigint_from_json(field(p, "n", d.family), "baumslag_solitar.n"), names);
}

Endomorphism make_endo(const AnyMachine& machine, const EndoDescriptor& d) {
  return std::visit(
      [&](const auto& m) -> Endomorphism {
        using M = std::decay_t<decltype(m)>;
        std::optional<Endomorphism> phi;
        switch (d.kind) {
          case EndoDescriptor::Kind::images: {
            std::vector<std::optional<Word>> slots(m.gens().size());
            for (const auto& [name, text] : d.images) {
              const std::size_t i = m.gens().index(name);
              if (slots[i]) throw ValidationError("endo.images: duplicate generator " + name);
              slots[i] = parse_word(m.gens(), text);
            }
            if constexpr (std::is_same_v<M, Heisenberg> || std::is_same_v<M, Nil2>) {
              phi = m.endo_from_images(slots);
            } else {
              std::vector<Word> ws;
              for (std::size_t i = 0; i < slots.size(); ++i) {
                if (!slots[i]) throw ValidationError("endo.images: missing image of " + m.gens().name(i));
                ws.push_back(*slots[i]);
              }
              phi.emplace(m.gens(), std::move(ws));
            }
            break;
          }
          case EndoDescriptor::Kind::sol_shortcut:
            if constexpr (std::is_same_v<M, Sol>)
              phi = sol_endo_from_shortcut(m, d.M, d.p, d.q, d.tau_exp);
            else
              throw FamilyError("the M/p/q/tau_exp shortcut applies to sol_lattice only");
            break;
          case EndoDescriptor::Kind::matrix:
            if constexpr (std::is_same_v<M, FreeAbelian> || std::is_same_v<M, TorsionProduct>)
              phi = m.endo_from_matrix(d.matrix);
            else
              throw FamilyError("the matrix form applies to abelian families only");
            break;
        }
        require_endomorphism(m, *phi);
        return *phi;
      },
      machine);
}

BlockList parse_blocks(const Json& j) {
  const Json& list = j.is_object() ? field(j, "blocks", "block list") : j;
  if (!list.is_array() || list.empty()) throw ValidationError("block list: expected a nonempty array");
  BlockList out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "blocks[" + std::to_string(i) + "]";
    Block b;
    const BigInt w = bigint_from_json(field(list[i], "weight", where), where + ".weight");
    if (w < 1 || w > 64) throw ValidationError(where + ".weight: expected 1..64");
    b.weight = static_cast<unsigned>(w.get_ui());
    b.matrix = matrix_from_json(field(list[i], "matrix", where), where + ".matrix");
    out.push_back(std::move(b));
  }
  return out;
}

BlockList load_blocks(const std::string& path) { return parse_blocks(read_json_file(path)); }

}  // namespace endogrowth
