#pragma once

// File formats. Functionals and vectors are stored one JSON record per line:
//   {"n": 4, "rel": "ge", "coeffs": {"1": "-2", "1,2": "3", ...}}
//   {"n": 4, "values": {"1": "1", "1,2": "2", ...}}
// Keys are comma-separated sorted variable lists, the empty set is omitted and
// coefficients are integers or "p/q" strings, in ascending bitmask order.

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "entcone/copy_lemma.hpp"
#include "entcone/exact_lp.hpp"

namespace entcone {

using json = nlohmann::ordered_json;

json form_to_json(const LinForm& f);
LinForm form_from_json(const json& record);
json vector_to_json(const EntVector& v);
EntVector vector_from_json(const json& record);
json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const json& record);

/// Accepts JSON lines (blank lines and lines starting with '#' are skipped) or
/// a single JSON array of records.
std::vector<LinForm> parse_forms(std::string_view text);
std::vector<EntVector> parse_vectors(std::string_view text);
std::string format_forms(std::span<const LinForm> forms);
std::string format_vectors(std::span<const EntVector> vectors);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

std::vector<LinForm> read_forms_file(const std::filesystem::path& path);
std::vector<EntVector> read_vectors_file(const std::filesystem::path& path);

/// A cone file is a forms file; "ge" records become inequalities and "eq"
/// records equalities. Every record must share the same n.
Cone read_cone_file(const std::filesystem::path& path);
std::string format_cone(const Cone& cone);

/// Scenario file:
///   {"m": 4, "steps": [{"k": 3, "I": [1, 2], "J": [4]}], "base_bound": "zy.jsonl",
///    "substituted": true, "extra_equalities": "eqs.jsonl"}
/// Relative paths are resolved against the scenario file's directory.
Scenario parse_scenario(const json& record, const std::filesystem::path& base_dir);
Scenario read_scenario_file(const std::filesystem::path& path);
json scenario_to_json(const Scenario& scenario);

/// Human-readable form, e.g. "-2 H(1) - 2 H(2) + 3 H(1,2) >= 0".
std::string pretty(const LinForm& f);

}  // namespace entcone
