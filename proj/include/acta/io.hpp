#ifndef ACTA_IO_HPP_
#define ACTA_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "acta/act.hpp"
#include "acta/decomposition.hpp"
#include "acta/flatness.hpp"
#include "acta/monoid.hpp"

namespace acta::io {

  using json = nlohmann::json;

  // {"order": n, "elements": [...], "table": [[...], ...]}
  json         monoid_to_json(FiniteMonoid const& m);
  FiniteMonoid monoid_from_json(json const& j);

  // First line n, then n rows of n whitespace-separated indices.
  std::string  monoid_to_text(FiniteMonoid const& m);
  FiniteMonoid monoid_from_text(std::string_view text);

  // JSON when the first non-blank character is '{', text otherwise.
  FiniteMonoid parse_monoid(std::string_view text);

  // {"monoid": {...}, "size": m, "elements": [...], "action": [[...], ...]}
  json act_to_json(FiniteAct const& a);

  // "monoid" may be an inline object or a file path (relative paths resolve
  // against base_dir). When both it and fallback are present their tables
  // must agree. Without either, throws InvalidInput.
  FiniteAct act_from_json(json const& j, MonoidPtr const& fallback = nullptr,
                          std::filesystem::path const& base_dir = {});

  // {"blocks": [[...], ...]}
  json            congruence_to_json(RightCongruence const& rho);
  RightCongruence congruence_from_json(FiniteAct const& a, json const& j);

  // {"from": i, "to": j, "steps": [[a, s, t], ...]}
  json   scheme_to_json(Scheme const& s);
  Scheme scheme_from_json(json const& j);

  // {"count": k, "components": [[...], ...]}
  json decomposition_to_json(Decomposition const& d);

  json verdict_to_json(FlatnessVerdict const& v);

  std::string read_file(std::filesystem::path const& path);

}  // namespace acta::io

#endif  // ACTA_IO_HPP_
