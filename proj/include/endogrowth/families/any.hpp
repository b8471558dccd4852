#pragma once

#include <string>
#include <variant>

#include "endogrowth/families/abelian.hpp"
#include "endogrowth/families/baumslag_solitar.hpp"
#include "endogrowth/families/heisenberg.hpp"
#include "endogrowth/families/klein.hpp"
#include "endogrowth/families/nil2.hpp"
#include "endogrowth/families/sol.hpp"

namespace endogrowth {

using AnyMachine = std::variant<FreeAbelian, TorsionProduct, Heisenberg, Nil2, Sol, Klein, BaumslagSolitar>;

inline const GenSet& machine_gens(const AnyMachine& m) {
  return std::visit([](const auto& x) -> const GenSet& { return x.gens(); }, m);
}

inline std::string machine_family(const AnyMachine& m) {
  return std::visit([](const auto& x) { return std::string(x.family()); }, m);
}

}  // namespace endogrowth
