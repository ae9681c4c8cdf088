#pragma once

// JSON file formats for algebras, words, surfaces and reports.
//
// Canonical text is sorted-key JSON indented by two spaces with a trailing
// newline; parse followed by dump reproduces a canonical file byte for byte.
// Every parse failure surfaces as InputError.

#include <filesystem>
#include <string>
#include <string_view>

#include "hqft/algebra.hpp"
#include "hqft/axioms.hpp"
#include "hqft/cobordism.hpp"

namespace hqft {

std::string read_text_file(const std::filesystem::path& path);
/// Writes through a temporary sibling and renames into place.
void write_text_file(const std::filesystem::path& path, const std::string& text);

std::string dump_algebra(const AlgebraData& A);
/// Single-line form used for ordering and canonical representatives.
std::string dump_algebra_compact(const AlgebraData& A);
AlgebraData parse_algebra(std::string_view text);

/// pi_rank supplies the group for Cup and Cap; labels must match it.
CobordismWord parse_word(std::string_view text, int pi_rank);
std::string dump_word(const CobordismWord& w);

SurfaceSpec parse_surface(std::string_view text, int pi_rank);
std::string dump_surface(const SurfaceSpec& s);

std::string report_to_json(const AxiomReport& report);

}  // namespace hqft
