#include "pebble/hog_client.hpp"

#include "pebble/errors.hpp"
#include "pebble/graph6.hpp"

#include <httplib.h>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace pebble {

namespace fs = std::filesystem;

namespace {

std::string env_or(const char* name, const std::string& fallback) {
  const char* v = std::getenv(name);
  return (v != nullptr && *v != '\0') ? std::string(v) : fallback;
}

struct SplitUrl {
  std::string origin; // scheme://host[:port]
  std::string path;
};

SplitUrl split_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw FetchError("URL without scheme: " + url);
  }
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) {
    return {url, "/"};
  }
  return {url.substr(0, path_start), url.substr(path_start)};
}

Graph decode_body(const std::string& body, int id, std::string& line_out) {
  std::string line = body;
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
    line.pop_back();
  }
  if (line.empty() || line.find('\n') != std::string::npos) {
    throw FetchError("response for #" + std::to_string(id) + " is not a single graph6 line");
  }
  try {
    Graph g = decode_graph6(line);
    line_out = line;
    return g;
  } catch (const GraphError& e) {
    throw FetchError("response for #" + std::to_string(id) + " is not graph6: " + e.what());
  }
}

std::vector<std::string> numeric_labels(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) {
    out.push_back(std::to_string(i));
  }
  return out;
}

} // namespace

HogOptions HogOptions::from_env() {
  HogOptions o;
  o.url_template = env_or("PEBBLE_HOG_URL", kDefaultHogUrl);
  fs::path cache = env_or("PEBBLE_CACHE_DIR", "");
  if (cache.empty()) {
    const std::string xdg = env_or("XDG_CACHE_HOME", "");
    if (!xdg.empty()) {
      cache = fs::path(xdg) / "pebble";
    } else {
      cache = fs::path(env_or("HOME", ".")) / ".cache" / "pebble";
    }
  }
  o.cache_dir = cache;
  return o;
}

std::string hog_url(const std::string& url_template, int id) {
  std::string url = url_template;
  const std::string key = "{id}";
  const auto at = url.find(key);
  if (at == std::string::npos) {
    throw FetchError("HoG URL template has no {id} placeholder: " + url_template);
  }
  url.replace(at, key.size(), std::to_string(id));
  return url;
}

FetchResult fetch_graph(int id, const HogOptions& opts, std::ostream& log) {
  if (id <= 0) {
    throw InputError("House of Graphs ids are positive integers");
  }
  const fs::path file = opts.cache_dir / ("hog-" + std::to_string(id) + ".g6");

  if (fs::exists(file)) {
    std::ifstream in(file);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string line;
    try {
      Graph g = decode_body(ss.str(), id, line);
      log << "cache hit: " << file.string() << "\n";
      return {Graph::from_edge_list(g.order(), g.edges(), numeric_labels(g.order())), line, true, file};
    } catch (const FetchError& e) {
      log << "ignoring corrupt cache entry " << file.string() << ": " << e.what() << "\n";
    }
  }

  const std::string url = hog_url(opts.url_template, id);
  const SplitUrl parts = split_url(url);
  log << "fetching " << url << "\n";
  httplib::Client client(parts.origin);
  if (!client.is_valid()) {
    throw FetchError("unsupported URL: " + url);
  }
  client.set_connection_timeout(opts.timeout_seconds, 0);
  client.set_read_timeout(opts.timeout_seconds, 0);
  client.set_follow_location(true);
  auto res = client.Get(parts.path);
  if (!res) {
    throw FetchError("request to " + url + " failed: " + httplib::to_string(res.error()) + " (no cached copy at " +
                     file.string() + ")");
  }
  if (res->status == 404) {
    throw FetchError("House of Graphs has no graph #" + std::to_string(id));
  }
  if (res->status != 200) {
    throw FetchError("request to " + url + " returned HTTP " + std::to_string(res->status));
  }

  std::string line;
  Graph g = decode_body(res->body, id, line);

  std::error_code ec;
  fs::create_directories(opts.cache_dir, ec);
  if (ec) {
    throw FetchError("cannot create cache directory " + opts.cache_dir.string() + ": " + ec.message());
  }
  // write-then-rename so a concurrent reader never sees a partial file
  const fs::path tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << line << "\n";
    if (!out) {
      throw FetchError("cannot write " + tmp.string());
    }
  }
  fs::rename(tmp, file, ec);
  if (ec) {
    throw FetchError("cannot write " + file.string() + ": " + ec.message());
  }
  log << "cached " << file.string() << "\n";
  return {Graph::from_edge_list(g.order(), g.edges(), numeric_labels(g.order())), line, false, file};
}

} // namespace pebble
