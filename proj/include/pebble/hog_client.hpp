#pragma once

#include "pebble/graph.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace pebble {

/// Download location; `{id}` is replaced by the numeric graph id.
inline constexpr const char* kDefaultHogUrl = "https://houseofgraphs.org/api/graphs/{id}/graph6";

struct HogOptions {
  std::string url_template = kDefaultHogUrl;
  std::filesystem::path cache_dir;
  int timeout_seconds = 30;

  /// $PEBBLE_HOG_URL and $PEBBLE_CACHE_DIR, defaulting to kDefaultHogUrl and
  /// $XDG_CACHE_HOME/pebble (or ~/.cache/pebble).
  static HogOptions from_env();
};

struct FetchResult {
  Graph graph;
  std::string g6;
  bool from_cache = false;
  std::filesystem::path cache_file;
};

/// Returns the cached copy when present; otherwise downloads, validates the
/// body as exactly one graph6 line, and stores it as `hog-<id>.g6`.
/// Cache hits and downloads are reported on `log`. Throws FetchError on
/// HTTP failure, a non-graph6 body, or an unusable URL.
FetchResult fetch_graph(int id, const HogOptions& opts, std::ostream& log);

/// The template with `{id}` substituted.
std::string hog_url(const std::string& url_template, int id);

} // namespace pebble
