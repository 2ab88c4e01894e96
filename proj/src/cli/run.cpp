#include <algorithm>
#include <functional>

#include "CLI11.hpp"
#include "gwa/cli.hpp"

namespace gwa::cli {

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decision procedures and module data for classical generalized Weyl algebras",
               "gwa"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  std::uint64_t seed = 1;
  app.add_flag("--json", json, "Print the report as JSON");
  app.add_option("--seed", seed, "Seed for randomized self-tests");

  std::string a;
  std::string b;
  std::string c;
  std::function<Report()> command;

  auto* type = app.add_subcommand("type", "Root type of v");
  type->add_option("v", a, "Polynomial")->required();
  type->callback([&] { command = [&] { return type_report(a); }; });

  bool witness = false;
  auto* equiv = app.add_subcommand("equiv", "Strongly graded Morita equivalence of T(v1), T(v2)");
  equiv->add_option("v1", a)->required();
  equiv->add_option("v2", b)->required();
  equiv->add_flag("--witness", witness, "Include a checkable chain of elementary moves");
  equiv->callback([&] { command = [&] { return equiv_report(a, b, witness); }; });

  auto* iso = app.add_subcommand("iso", "Isomorphism of T(v1) and T(v2)");
  iso->add_option("v1", a)->required();
  iso->add_option("v2", b)->required();
  iso->callback([&] { command = [&] { return iso_report(a, b); }; });

  auto* module = app.add_subcommand("module", "Submodules and composition factors of A^lambda");
  module->add_option("v", a)->required();
  module->add_option("point", b, "a, where lambda = (h - a)")->required();
  module->callback([&] { command = [&] { return module_report(a, b); }; });

  auto* verma = app.add_subcommand("verma", "Composition factors of the Verma module V^nu");
  verma->add_option("v", a)->required();
  verma->add_option("nu", b, "A root of v")->required();
  verma->callback([&] { command = [&] { return verma_report(a, b); }; });

  std::vector<std::string> labels;
  std::string translation = "1";
  auto* blocks = app.add_subcommand("blocks", "Block decomposition data");
  blocks->add_option("v", a)->required();
  blocks->add_option("--label", labels, "Simple S^(h-p)[s] written p,s (repeatable)");
  blocks->add_option("--translation", translation, "Translation amount for condition (*)");
  blocks->callback([&] { command = [&] { return blocks_report(a, labels, translation); }; });

  auto* proj = app.add_subcommand("proj", "Projective generator data and hom degrees");
  proj->add_option("v", a)->required();
  proj->add_option("nu", b, "A root of v")->required();
  proj->callback([&] { command = [&] { return proj_report(a, b); }; });

  std::int64_t n = 1;
  auto* ann = app.add_subcommand("ann", "Annihilator of A(n)");
  ann->add_option("v", a)->required();
  ann->add_option("n", n)->required();
  ann->callback([&] { command = [&] { return ann_report(a, n); }; });

  auto* ext = app.add_subcommand("ext", "Ext^1 between graded simples");
  ext->add_option("v", a)->required();
  ext->add_option("s1", b, "p,s")->required();
  ext->add_option("s2", c, "p,s")->required();
  ext->callback([&] { command = [&] { return ext_report(a, b, c); }; });

  bool check = false;
  std::optional<std::size_t> vertex;
  std::vector<std::size_t> pair;
  auto* quiver = app.add_subcommand("quiver", "Cycle algebra vertex data");
  quiver->add_option("file", a, "Cycle data JSON")->required();
  quiver->add_flag("--check", check, "Verify the defining identities");
  quiver->add_option("--vertex", vertex, "Report a single vertex");
  quiver->add_option("--pair", pair, "Arc elements and Morita check for i j")->expected(2);
  quiver->callback([&] { command = [&] { return quiver_report(a, check, vertex, pair); }; });

  auto* verify = app.add_subcommand("verify", "Check a Morita witness");
  verify->add_option("v1", a)->required();
  verify->add_option("v2", b)->required();
  verify->add_option("witness", c, "Witness JSON or equiv report")->required();
  verify->callback([&] { command = [&] { return verify_report(a, b, c); }; });

  int rounds = 50;
  auto* selftest = app.add_subcommand("selftest", "Randomized consistency checks");
  selftest->add_option("--rounds", rounds)->check(CLI::Range(1, 100000));
  selftest->callback([&] { command = [&] { return selftest_report(seed, rounds); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? ok : usage;
  }

  try {
    Report r = command();
    if (json) {
      out << r.json.dump(2) << "\n";
    } else {
      out << r.text;
    }
    if (r.json["command"] == "selftest" && !r.json["result"]["passed"].get<bool>())
      return precondition;
    return ok;
  } catch (const usage_error& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return bad_input;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return precondition;
  } catch (const error& e) {
    err << "internal error: " << e.what() << "\n";
    return precondition;
  }
}

}  // namespace gwa::cli
