#include <iostream>
#include <iterator>
#include <string>

#include "CLI11.hpp"
#include "latred/commands.hpp"
#include "latred/error.hpp"

namespace {

using latred::cli::json;

int emit_error(const std::string& kind, const std::string& message, int code) {
  std::cout << json{{"error", {{"kind", kind}, {"message", message}}}}.dump(2) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace latred;
  cli::Options opt;
  CLI::App app{"Exact lattice reduction theory toolkit: JSON on stdin, JSON on stdout."};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--ring", opt.ring, "z, ff or auto")->capture_default_str();
    sub->add_option("--p", opt.p, "prime for the p-adic building");
    sub->add_option("--q", opt.q, "field size for F_q[t]");
    sub->add_option("--n", opt.n, "dimension");
    sub->add_option("--r", opt.r, "residue field size (chamber-count)");
    sub->add_option("--k", opt.k, "label difference (chamber-count)");
    sub->add_option("--theta", opt.theta, "threshold: zero, adjacent (4n), localized (4n(R+1)) or a rational");
    sub->add_option("--mode", opt.mode, "factorize: GL or SL");
    sub->add_option("--beta", opt.beta, "cover-membership: also test the beta-thinned cover");
    sub->add_option("--lipschitz", opt.lipschitz, "Lipschitz constant for --beta (default 4n)");
    sub->add_option("--seed", opt.seed, "selfcheck seed")->capture_default_str();
    sub->add_option("--scale", opt.scale, "selfcheck instances per check")->capture_default_str();
  };

  std::string verb;
  for (const auto& [name, cmd] : cli::commands()) {
    CLI::App* sub = app.add_subcommand(name);
    add_common(sub);
    sub->callback([&verb, n = name] { verb = n; });
  }
  // "building neighbors" spelling
  CLI::App* building = app.add_subcommand("building", "building verbs");
  building->require_subcommand(1);
  CLI::App* nb = building->add_subcommand("neighbors", "same as building-neighbors");
  add_common(nb);
  nb->callback([&verb] { verb = "building-neighbors"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error("usage", e.what(), 2);
  }

  json in = json::object();
  try {
    if (verb != "selfcheck" && verb != "chamber-count" && verb != "core-reps") {
      std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
      if (text.find_first_not_of(" \t\r\n") != std::string::npos) in = json::parse(text);
    }
  } catch (const json::parse_error& e) {
    return emit_error("parse", e.what(), 2);
  }

  try {
    json out = cli::commands().at(verb)(in, opt);
    std::cout << out.dump(2) << "\n";
    if (verb == "selfcheck" && !out.at("passed").get<bool>()) return 1;
    return 0;
  } catch (const MathError& e) {
    return emit_error(kind_name(e.kind()), e.what(), e.kind() == ErrorKind::parse ? 2 : 3);
  } catch (const json::exception& e) {
    return emit_error("parse", e.what(), 2);
  }
}
