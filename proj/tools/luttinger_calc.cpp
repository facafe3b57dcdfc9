#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "luttinger/abelian.hpp"
#include "luttinger/coset_enum.hpp"
#include "luttinger/json_io.hpp"
#include "luttinger/script.hpp"
#include "luttinger/text_format.hpp"
#include "luttinger/tietze.hpp"
#include "luttinger/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

luttinger::Presentation parse_presentation_arg(const std::string& text) {
  try {
    return luttinger::parse_presentation(text);
  } catch (const luttinger::parse_error& e) {
    std::cerr << "presentation parse error at offset " << e.offset << ": " << e.what()
              << "\n";
    std::exit(kExitUsage);
  }
}

luttinger::TietzeBudget budget_with_passes(int effort) {
  luttinger::TietzeBudget b;
  b.max_passes = effort;
  return b;
}

int cmd_run(const std::string& path, bool json, bool no_timestamp,
            std::uint64_t max_cosets, int effort) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open script: " << path << "\n";
    return kExitUsage;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  luttinger::ParseResult parsed = luttinger::parse_script(buf.str());
  if (!parsed.script) {
    for (const auto& d : parsed.diagnostics) std::cerr << path << ": " << d.to_string() << "\n";
    return kExitUsage;
  }
  luttinger::RunOptions options;
  options.max_cosets = max_cosets;
  options.effort = budget_with_passes(effort);
  options.include_timestamp = !no_timestamp;
  luttinger::RunReport report = luttinger::run_script(*parsed.script, options);
  if (json) {
    std::cout << report.to_json(options).dump(2) << "\n";
  } else {
    std::cout << report.to_text();
  }
  return report.exit_code == 0 ? kExitPass : kExitFailure;
}

int cmd_verify(bool json, std::uint64_t max_cosets, int effort) {
  luttinger::VerifyOptions options;
  options.max_cosets = max_cosets;
  options.effort = budget_with_passes(effort);
  luttinger::VerifyReport report = luttinger::verify_claims(options);
  if (json) {
    std::cout << report.to_json().dump(2) << "\n";
  } else {
    std::cout << report.to_text();
  }
  return report.all_passed() ? kExitPass : kExitFailure;
}

int cmd_simplify(const std::string& text, bool json, int effort) {
  luttinger::Presentation p = parse_presentation_arg(text);
  auto [simplified, cert] = luttinger::tietze_simplify(p, budget_with_passes(effort));
  if (json) {
    nlohmann::json j;
    j["input"] = luttinger::print_presentation(p);
    j["simplified"] = luttinger::print_presentation(simplified);
    nlohmann::json images = nlohmann::json::object();
    for (std::size_t g = 0; g < p.generators().size(); ++g) {
      images[p.generators()[g].name] =
          luttinger::print_word(cert.generator_images[g], simplified);
    }
    j["generator_images"] = std::move(images);
    j["replay_verified"] = cert.replay_verified;
    j["budget_exhausted"] = cert.budget_exhausted;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << luttinger::print_presentation(simplified) << "\n";
    for (std::size_t g = 0; g < p.generators().size(); ++g) {
      std::cout << "  " << p.generators()[g].name << " -> "
                << luttinger::print_word(cert.generator_images[g], simplified) << "\n";
    }
    if (!cert.replay_verified) std::cout << "  (certificate replay incomplete)\n";
    if (cert.budget_exhausted) std::cout << "  (budget exhausted)\n";
  }
  return kExitPass;
}

int cmd_abelianize(const std::string& text, bool json) {
  luttinger::Presentation p = parse_presentation_arg(text);
  luttinger::AbelianInvariants inv = luttinger::abelianization(p);
  if (json) {
    std::cout << luttinger::invariants_to_json(inv).dump(2) << "\n";
  } else {
    std::cout << inv.to_string() << "\n";
  }
  return kExitPass;
}

int cmd_enumerate(const std::string& text, bool json, std::uint64_t max_cosets) {
  luttinger::Presentation p = parse_presentation_arg(text);
  luttinger::EnumerationResult r = luttinger::todd_coxeter(p, max_cosets);
  if (json) {
    std::cout << luttinger::enumeration_to_json(r).dump(2) << "\n";
  } else if (r.is_finite()) {
    std::cout << "finite, order " << r.order << " (" << r.work << " cosets defined)\n";
  } else {
    std::cout << "exceeded cap of " << r.cap << " cosets\n";
  }
  return r.is_finite() ? kExitPass : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"group-presentation calculator for fiber sums and Luttinger surgeries"};
  app.require_subcommand(1);

  std::uint64_t max_cosets = luttinger::kDefaultCosetCap;
  if (const char* env = std::getenv("LUTTINGER_MAX_COSETS")) {
    try {
      max_cosets = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "invalid LUTTINGER_MAX_COSETS value: " << env << "\n";
      return kExitUsage;
    }
  }
  int effort = luttinger::TietzeBudget{}.max_passes;
  bool json = false;
  bool no_timestamp = false;
  std::string script_path, pres_text;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", json, "emit a JSON report");
  };

  CLI::App* run = app.add_subcommand("run", "evaluate a construction script");
  run->add_option("script", script_path, "script file")->required();
  add_common(run);
  run->add_flag("--no-timestamp", no_timestamp, "omit the timestamp for byte-stable output");
  run->add_option("--max-cosets", max_cosets, "coset enumeration cap");
  run->add_option("--effort", effort, "simplification pass budget");

  CLI::App* verify = app.add_subcommand("verify-paper", "run the built-in claim suite");
  add_common(verify);
  verify->add_option("--max-cosets", max_cosets, "coset enumeration cap");
  verify->add_option("--effort", effort, "simplification pass budget");

  CLI::App* simplify = app.add_subcommand("simplify", "simplify a presentation");
  simplify->add_option("presentation", pres_text, "presentation text")->required();
  add_common(simplify);
  simplify->add_option("--effort", effort, "simplification pass budget");

  CLI::App* abelianize = app.add_subcommand("abelianize", "abelianization invariants");
  abelianize->add_option("presentation", pres_text, "presentation text")->required();
  add_common(abelianize);

  CLI::App* enumerate = app.add_subcommand("enumerate", "Todd-Coxeter coset enumeration");
  enumerate->add_option("presentation", pres_text, "presentation text")->required();
  add_common(enumerate);
  enumerate->add_option("--max-cosets", max_cosets, "coset enumeration cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (run->parsed()) return cmd_run(script_path, json, no_timestamp, max_cosets, effort);
    if (verify->parsed()) return cmd_verify(json, max_cosets, effort);
    if (simplify->parsed()) return cmd_simplify(pres_text, json, effort);
    if (abelianize->parsed()) return cmd_abelianize(pres_text, json);
    if (enumerate->parsed()) return cmd_enumerate(pres_text, json, max_cosets);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
