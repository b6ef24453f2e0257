#pragma once

// JSON artifacts shared by the command line tool and the tests. Exact scalars
// and words are always written in their canonical text form.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "stargb/groebner.hpp"

namespace stargb {

nlohmann::ordered_json basis_to_json(const GroebnerBasis& gb);
/// Reads a basis written by basis_to_json (the completion log is not restored).
GroebnerBasis basis_from_json(const nlohmann::json& j);

/// Writes `j` with two-space indentation and a trailing newline, creating
/// parent directories as needed.
void write_json(const std::filesystem::path& path, const nlohmann::ordered_json& j);
nlohmann::json read_json(const std::filesystem::path& path);

}  // namespace stargb
