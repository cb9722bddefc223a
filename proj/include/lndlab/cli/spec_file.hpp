#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "lndlab/catalog/catalog.hpp"

namespace lnd::cli {

/// What a subcommand works on: a catalog bundle or a user spec file. `bundle`
/// holds the certified LNDs; `derivations` holds every named field,
/// certified or not.
struct Workspace {
  catalog::VarietyBundle bundle;
  std::vector<catalog::Named<fields::Derivation>> derivations;
  std::string source;

  const fields::Derivation& derivation(const std::string& name) const;
};

Workspace load_bundle(const std::string& name);

/// Accepted document:
///   {"variety": {"vars": [...], "defining": [...], "order": {"kind", "precedence"}},
///    "derivations": {name: {"images": {var: poly}}},
///    "overshears": {name: {"base": name, "f": poly}},
///    "units": [[f, g]], "ideal_candidates": [poly], "pairs": [[theta, xi]], "points": [[c, ...]]}
/// Only "variety" is required. Throws std::invalid_argument, lnd::Error or
/// nlohmann::json::exception on malformed input.
Workspace parse_spec(const nlohmann::json& doc, const std::string& label);
Workspace load_spec_file(const std::string& path);

}  // namespace lnd::cli
