#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "sdraw/errors.hpp"

namespace sdraw::cli {

std::string digest(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json Context::read_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string bytes = buf.str();
  inputs[path] = digest(bytes);
  try {
    return Json::parse(bytes);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void Context::write_file(const std::string& path, const std::string& content) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << content;
}

namespace {

// Option values as typed JSON where they parse as numbers or booleans.
Json option_value(const CLI::Option& opt) {
  auto scalar = [](const std::string& s) -> Json {
    const Json j = Json::parse(s, nullptr, false);
    if (!j.is_discarded() && (j.is_number() || j.is_boolean())) return j;
    return s;
  };
  if (opt.get_type_size() == 0) return opt.count() > 0;  // flag
  const auto& res = opt.results();
  if (res.empty()) return scalar(opt.get_default_str());
  if (res.size() == 1 && opt.get_expected_max() <= 1) return scalar(res.front());
  Json arr = Json::array();
  for (const auto& r : res) arr.push_back(scalar(r));
  return arr;
}

void collect_params(const CLI::App* app, Json& params) {
  for (const CLI::Option* opt : app->get_options()) {
    const std::string name = opt->get_single_name();
    if (name.empty() || name == "help" || name == "version") continue;
    if (opt->count() == 0 && opt->get_default_str().empty()) continue;
    params[name] = option_value(*opt);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorial and geometric tools for simple topological drawings", "sdraw"};
  app.set_version_flag("--version", SDRAW_VERSION);
  app.require_subcommand(1);
  Registry registry;
  register_commands(app, registry);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
  }

  const Handler* handler = nullptr;
  std::string command;
  Json params = Json::object();
  for (const auto& [leaf, h] : registry.leaves) {
    if (!leaf->parsed()) continue;
    handler = &h;
    std::vector<const CLI::App*> chain;
    for (const CLI::App* a = leaf; a != nullptr && a != &app; a = a->get_parent()) chain.push_back(a);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      command += (command.empty() ? "" : " ") + (*it)->get_name();
      collect_params(*it, params);
    }
    break;
  }
  if (handler == nullptr) {
    err << app.help();
    return kExitInputError;
  }

  Context ctx;
  ctx.err = &err;
  const auto start = std::chrono::steady_clock::now();
  try {
    Json result = (*handler)(ctx);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    Json report{{"tool", "sdraw"},
                {"version", SDRAW_VERSION},
                {"command", command},
                {"params", params},
                {"inputs", ctx.inputs},
                {"result", result},
                {"result_digest", digest(result.dump())},
                {"duration_seconds", elapsed.count()}};
    out << report.dump(2) << '\n';
    return kExitOk;
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kExitInconsistency;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const Json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInconsistency;
  }
}

}  // namespace sdraw::cli
