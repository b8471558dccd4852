#pragma once

// JSON descriptors for groups, endomorphisms and block lists.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "endogrowth/endomorphism.hpp"
#include "endogrowth/families/any.hpp"
#include "endogrowth/nilgr.hpp"

namespace endogrowth {

using Json = nlohmann::ordered_json;

/// {"family": tag, "params": {...}, "generators": [...]}. For nilpotent2 the
/// generators field names the tau generators; central names come from params.
struct GroupDescriptor {
  std::string family;
  Json params = Json::object();
  std::vector<std::string> generators;  // empty: family defaults
  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

/// One of {"images": {gen: word}}, the Sol shortcut {"M", "p", "q",
/// "tau_exp"}, or an abelian {"matrix": [[...]]}.
struct EndoDescriptor {
  enum class Kind { images, sol_shortcut, matrix };
  Kind kind = Kind::images;
  std::vector<std::pair<std::string, std::string>> images;  // in file order
  IntMatrix M = IntMatrix::zero(2, 2);
  BigInt p, q, tau_exp;
  IntMatrix matrix = IntMatrix::zero(1, 1);
  friend bool operator==(const EndoDescriptor&, const EndoDescriptor&) = default;
};

/// Parse errors name the line and column; schema errors name the field.
Json read_json_file(const std::string& path);

GroupDescriptor parse_group(const Json& j);
GroupDescriptor load_group(const std::string& path);
Json emit_group(const GroupDescriptor& d);

EndoDescriptor parse_endo(const Json& j);
EndoDescriptor load_endo(const std::string& path);
Json emit_endo(const EndoDescriptor& d);

/// Validates the parameters and builds the machine.
AnyMachine make_machine(const GroupDescriptor& d);
/// Builds phi and checks every relator; throws ValidationError naming the
/// first violated one.
Endomorphism make_endo(const AnyMachine& m, const EndoDescriptor& d);

/// [{"weight": j, "matrix": [[...]]}, ...], bare or under "blocks".
BlockList parse_blocks(const Json& j);
BlockList load_blocks(const std::string& path);

/// Integers travel as JSON numbers when they fit in 64 bits, else as strings.
Json to_json(const BigInt& x);
BigInt bigint_from_json(const Json& j, const std::string& field);
Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j, const std::string& field);
Json to_json(const IntPolynomial& p);

}  // namespace endogrowth
