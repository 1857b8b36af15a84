#include "pebble/sources.hpp"

#include "pebble/errors.hpp"
#include "pebble/generators.hpp"
#include "pebble/graph6.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef PEBBLE_DEFAULT_FIXTURES_DIR
#define PEBBLE_DEFAULT_FIXTURES_DIR "fixtures"
#endif

namespace pebble {

namespace fs = std::filesystem;

fs::path default_fixtures_dir() {
  if (const char* env = std::getenv("PEBBLE_FIXTURES_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return PEBBLE_DEFAULT_FIXTURES_DIR;
}

std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot open " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const fs::path& path) {
  try {
    return Json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

Graph load_graph_file(const fs::path& g6_path) {
  std::string text = read_text_file(g6_path);
  // first non-empty line; graph6 files may carry several graphs but fixtures hold one
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line) && line.find_first_not_of(" \r\t") == std::string::npos) {
  }
  std::vector<std::string> labels;
  fs::path label_path = g6_path;
  label_path.replace_extension(".labels");
  if (fs::exists(label_path)) {
    std::istringstream ls(read_text_file(label_path));
    std::string l;
    while (std::getline(ls, l)) {
      if (!l.empty() && l.back() == '\r') {
        l.pop_back();
      }
      if (!l.empty()) {
        labels.push_back(l);
      }
    }
  }
  try {
    return decode_graph6(line, std::move(labels));
  } catch (const GraphError& e) {
    throw GraphError(g6_path.string() + ": " + e.what());
  }
}

Graph load_fixture(std::string_view name, const fs::path& dir) {
  const fs::path p = dir / (std::string(name) + ".g6");
  if (!fs::exists(p)) {
    throw InputError("no fixture '" + std::string(name) + "' in " + dir.string());
  }
  return load_graph_file(p);
}

std::vector<std::string> list_fixtures(const fs::path& dir) {
  std::vector<std::string> out;
  if (!fs::is_directory(dir)) {
    return out;
  }
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".g6") {
      out.push_back(entry.path().stem().string());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph load_graph_by_id(std::string_view id, const fs::path& dir) {
  if (fs::exists(dir / (std::string(id) + ".g6"))) {
    return load_fixture(id, dir);
  }
  try {
    return generate(id);
  } catch (const InputError&) {
    throw InputError("graph id '" + std::string(id) + "' is neither a fixture in " + dir.string() +
                     " nor a generator spec");
  }
}

fs::path resolve_data_file(const fs::path& p, const fs::path& dir) {
  if (fs::exists(p) || p.is_absolute()) {
    return p;
  }
  if (fs::exists(dir / p)) {
    return dir / p;
  }
  return p;
}

} // namespace pebble
