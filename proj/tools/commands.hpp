#pragma once

#include <CLI11.hpp>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "sdraw/json_io.hpp"

namespace sdraw::cli {

// Per-run state handed to a subcommand.
struct Context {
  Json inputs = Json::object();
  std::ostream* err = nullptr;

  /// Reads and parses a JSON file, recording its digest.
  Json read_json(const std::string& path);
  void write_file(const std::string& path, const std::string& content) const;
  std::ostream& log() const { return *err; }
};

using Handler = std::function<Json(Context&)>;

struct Registry {
  std::vector<std::pair<CLI::App*, Handler>> leaves;
  void add(CLI::App* app, Handler h) { leaves.emplace_back(app, std::move(h)); }
};

void register_commands(CLI::App& app, Registry& registry);

}  // namespace sdraw::cli
