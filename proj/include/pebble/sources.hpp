#pragma once

#include "pebble/graph.hpp"
#include "pebble/json_io.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace pebble {

/// $PEBBLE_FIXTURES_DIR if set, otherwise the directory compiled in at build time.
std::filesystem::path default_fixtures_dir();

std::string read_text_file(const std::filesystem::path& path);
Json read_json_file(const std::filesystem::path& path);

/// Reads a .g6 file plus an optional sidecar `<stem>.labels` (one label per line).
Graph load_graph_file(const std::filesystem::path& g6_path);

/// `<dir>/<name>.g6`. Throws InputError naming the fixtures directory when missing.
Graph load_fixture(std::string_view name, const std::filesystem::path& dir);

/// Fixture names (stems of *.g6), sorted.
std::vector<std::string> list_fixtures(const std::filesystem::path& dir);

/// A graph id as used in configuration files: a fixture name when one exists
/// in `dir`, otherwise a generator spec ("flower:3", "petersen", ...).
Graph load_graph_by_id(std::string_view id, const std::filesystem::path& dir);

/// Resolves a configuration path: as given if it exists, else relative to `dir`.
std::filesystem::path resolve_data_file(const std::filesystem::path& p, const std::filesystem::path& dir);

} // namespace pebble
