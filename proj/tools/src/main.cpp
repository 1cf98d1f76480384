#include <CLI11.hpp>

#include <exception>
#include <functional>
#include <iostream>

#include "commands.hpp"
#include "report.hpp"
#include "taucat/error.hpp"

using namespace taucat::cli;

int main(int argc, char** argv) {
  CLI::App app{"taucat: tau-graded categories over F_p"};
  app.require_subcommand(1);
  Options o;
  std::function<Outcome()> action;
  std::string command;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "prime p of the field F_p")->capture_default_str();
    sub->add_option("--seed", o.seed, "seed for randomized searches")->capture_default_str();
    sub->add_option("-o,--output", o.out, "output file");
    sub->add_flag("--timing", o.timing, "include wall-clock timings in the report");
    sub->callback([&, sub] { command = sub->get_name(); });
  };

  std::string file, file2, tau, L = "0", psi = "trivial", datum_a, datum_b;
  int g = 0;

  auto* verify = app.add_subcommand("verify", "check the category axioms");
  verify->add_option("category", file, "category JSON")->required();
  common(verify);

  auto* build_mtau = app.add_subcommand("build-mtau", "build the skeleton M_tau(L, psi)<g>");
  build_mtau->add_option("--tau", tau, "hom JSON for tau: H -> G")->required();
  build_mtau->add_option("--L", L, "generators of L, comma separated")->capture_default_str();
  build_mtau->add_option("--psi", psi, "2-cocycle JSON or \"trivial\"")->capture_default_str();
  build_mtau->add_option("--g", g, "base degree")->capture_default_str();
  common(build_mtau);

  auto* build_groupoid = app.add_subcommand("build-groupoid", "build the group groupoid R G_tau");
  build_groupoid->add_option("--tau", tau, "hom JSON for tau: H -> G")->required();
  common(build_groupoid);

  auto* decompose = app.add_subcommand("decompose", "decompose into skeletal summands");
  decompose->add_option("category", file, "category JSON")->required();
  common(decompose);

  auto* classify_equiv = app.add_subcommand("classify-equiv", "list equivalences between two skeletons");
  classify_equiv->add_option("specA", file, "spec JSON")->required();
  classify_equiv->add_option("specB", file2, "spec JSON")->required();
  common(classify_equiv);

  auto* classify_nat = app.add_subcommand("classify-nat", "list natural isomorphisms F_A => F_B");
  classify_nat->add_option("specA", file, "spec JSON")->required();
  classify_nat->add_option("specB", file2, "spec JSON")->required();
  classify_nat->add_option("--datumA", datum_a, "datum JSON {t, gamma}")->required();
  classify_nat->add_option("--datumB", datum_b, "datum JSON {t, gamma}")->required();
  common(classify_nat);

  auto* yoneda = app.add_subcommand("yoneda-check", "audit the Yoneda isomorphism");
  yoneda->add_option("category", file, "category JSON")->required();
  common(yoneda);

  auto* roundtrip = app.add_subcommand("roundtrip", "check C -> C^1 -> (C^1)* and back");
  roundtrip->add_option("category", file, "category JSON")->required();
  common(roundtrip);

  auto* bullet = app.add_subcommand("bullet", "build the graded category of a module category");
  bullet->add_option("modcat", file, "module category JSON")->required();
  common(bullet);

  auto* suite = app.add_subcommand("paper-suite", "run the C8 -> C2 battery");
  common(suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Outcome out;
    if (command == "verify") out = taucat::cli::verify(o, file);
    else if (command == "build-mtau") out = taucat::cli::build_mtau(o, tau, L, psi, g);
    else if (command == "build-groupoid") out = taucat::cli::build_groupoid(o, tau);
    else if (command == "decompose") out = taucat::cli::decompose(o, file);
    else if (command == "classify-equiv") out = taucat::cli::classify_equiv(o, file, file2);
    else if (command == "classify-nat") out = taucat::cli::classify_nat(o, file, file2, datum_a, datum_b);
    else if (command == "yoneda-check") out = taucat::cli::yoneda_check(o, file);
    else if (command == "roundtrip") out = taucat::cli::roundtrip(o, file);
    else if (command == "bullet") out = taucat::cli::bullet(o, file);
    else out = taucat::cli::paper_suite(o);
    const std::string text = out.report.dump(1) + "\n";
    // Build commands write their artifact to -o; the others write the report.
    const bool artifact = command == "build-mtau" || command == "build-groupoid" || command == "bullet";
    if (!o.out.empty() && !artifact) write_file(o.out, text);
    std::cout << text;
    return out.code;
  } catch (const std::exception& e) {
    std::cerr << "taucat " << command << ": " << e.what() << "\n";
    std::cout << nlohmann::json{{"command", command}, {"error", e.what()}}.dump(1) << "\n";
    return 2;
  }
}
