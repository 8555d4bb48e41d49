#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "c1cox/fan.hpp"
#include "c1cox/json_util.hpp"
#include "c1cox/ringdata.hpp"

namespace c1cox {

enum class InputFormat { Toml, Json };

/// Contents of an input file: the defining data and an optional bunch given
/// as generator lists in degree coordinates (an empty list is the zero cone).
struct DataFile {
  C1Data data;
  std::optional<std::vector<std::vector<IntVector>>> phi;

  friend bool operator==(const DataFile&, const DataFile&) = default;
};

/// Throws ParseError on syntax or schema problems; the data is not validated.
DataFile parse_data(const std::string& text, InputFormat format);
/// Format from the extension: .json is JSON, anything else TOML.
DataFile read_data_file(const std::filesystem::path& path);
InputFormat format_for(const std::filesystem::path& path);

/// Canonical text; parse_data(serialize(f)) == f and serialize is a fixed
/// point on its own output.
std::string serialize(const DataFile& file, InputFormat format);

/// Reads the TOML subset used for data files into a JSON tree: top-level
/// `key = value` lines, integers, double-quoted strings, possibly nested and
/// multi-line arrays, and `#` comments.
Json parse_toml_subset(const std::string& text);

/// The bunch of the file, or {{0}} when absent, in a degree space of the
/// given rank.
Bunch file_bunch(const DataFile& file, std::size_t rank);

}  // namespace c1cox
