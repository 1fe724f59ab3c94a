// Batch front-end: reads presentation files, applies blow-ups and
// localizations, and emits atlases, perps, and verification reports as
// canonical JSON. Exit codes are part of the contract (see --help).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <monofol/blowup.hpp>
#include <monofol/errors.hpp>
#include <monofol/json_io.hpp>
#include <monofol/presentation.hpp>
#include <monofol/verify.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitCenter = 3;
constexpr int kExitLength = 4;
constexpr int kExitVerify = 5;

int fail(int code, const std::string& type, const std::string& message) {
  monofol::json err{{"error", monofol::json{{"type", type}, {"message", message}}}};
  std::cerr << monofol::canonical_dump(err);
  return code;
}

void emit(const monofol::json& j, const std::string& out_path) {
  std::string text = monofol::canonical_dump(j);
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

monofol::Center parse_center(const std::vector<int>& indices_1based) {
  monofol::Center c;
  for (int i : indices_1based) c.indices.insert(i - 1);
  if (c.indices.size() != indices_1based.size())
    throw monofol::InvalidCenter("repeated center index");
  return c;
}

monofol::RationalPoint parse_point(const std::vector<std::string>& coords) {
  monofol::RationalPoint p;
  for (const std::string& s : coords) p.push_back(monofol::rat_from_string(s));
  return p;
}

// Reparses a "blowup(C={1,2}; chart=1)" history label; the replay in
// `verify` only makes sense when the last step was a blow-up chart.
std::optional<monofol::Chart> chart_from_label(const std::string& label) {
  static const std::regex re(R"(^blowup\(C=\{(\d+(?:,\d+)*)\}; chart=(\d+)\)$)");
  std::smatch m;
  if (!std::regex_match(label, m, re)) return std::nullopt;
  monofol::Chart chart;
  std::string list = m[1];
  std::size_t pos = 0;
  while (pos < list.size()) {
    std::size_t comma = list.find(',', pos);
    if (comma == std::string::npos) comma = list.size();
    chart.center.indices.insert(std::stoi(list.substr(pos, comma - pos)) - 1);
    pos = comma + 1;
  }
  chart.j = std::stoi(m[2]) - 1;
  return chart;
}

struct Options {
  std::string input;
  std::string output;
  std::vector<int> center;
  int chart = 0;
  std::vector<std::string> point;
  std::uint64_t seed = 0;
  int samples = 50;
};

int run_validate(const monofol::LoadedPresentation& loaded, const Options& opt) {
  monofol::ValidationReport report = loaded.issues;
  for (const monofol::ValidationIssue& issue : monofol::validate(loaded.value).issues)
    report.issues.push_back(issue);
  emit(monofol::validation_to_json(report), opt.output);
  return report.ok() ? kExitOk : kExitVerify;
}

int run_verify(const monofol::LoadedPresentation& loaded, const Options& opt) {
  monofol::VerifyReport report;
  std::string canonical_detail;
  for (const monofol::ValidationIssue& issue : loaded.issues.issues)
    canonical_detail += issue.message + "; ";
  report.add("input/canonical-basis", loaded.issues.ok(), canonical_detail);

  report.merge(monofol::verify_presentation(loaded.value));
  if (!loaded.value.history.empty()) {
    if (auto chart = chart_from_label(loaded.value.history.back()))
      report.merge(monofol::verify_chart_replay(loaded.value, *chart));
  }
  report.merge(monofol::verify_first_integrals(loaded.value, opt.seed, opt.samples));

  emit(monofol::verify_to_json(report), opt.output);
  return report.ok() ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact-arithmetic toolkit for locally monomial foliated spaces: blow-up\n"
      "atlases, point localization, first-integral lattices, and symbolic\n"
      "verification of presentation files."};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 success, 1 usage error, 2 parse error, 3 invalid center,\n"
      "4 length mismatch, 5 validation or verification failure.");

  Options opt;
  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("input", opt.input, "presentation JSON file")->required();
    cmd->add_option("-o,--output", opt.output, "write the result here instead of stdout");
  };

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "structural checks on a presentation file");
  add_io(validate_cmd);

  CLI::App* perp_cmd = app.add_subcommand(
      "perp", "orthogonal complement of the subspace (first-integral exponents)");
  add_io(perp_cmd);

  CLI::App* freedirs_cmd =
      app.add_subcommand("freedirs", "free directions of the presentation");
  add_io(freedirs_cmd);

  CLI::App* blowup_cmd = app.add_subcommand("blowup", "one chart of a blow-up");
  add_io(blowup_cmd);
  blowup_cmd->add_option("--center", opt.center, "center indices, 1-based, comma-separated")
      ->required()
      ->delimiter(',');
  blowup_cmd->add_option("--chart", opt.chart, "chart index, 1-based, member of the center")
      ->required();

  CLI::App* atlas_cmd =
      app.add_subcommand("atlas", "every chart of a blow-up along a center");
  add_io(atlas_cmd);
  atlas_cmd->add_option("--center", opt.center, "center indices, 1-based, comma-separated")
      ->required()
      ->delimiter(',');

  CLI::App* localize_cmd =
      app.add_subcommand("localize", "re-present the foliation at a rational point");
  add_io(localize_cmd);
  localize_cmd
      ->add_option("--point", opt.point, "coordinates, comma-separated rationals (p or p/q)")
      ->required()
      ->delimiter(',');

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "symbolic verification: tangency, brackets, first integrals, chart replay");
  add_io(verify_cmd);
  verify_cmd->add_option("--seed", opt.seed, "seed for the randomized spot checks");
  verify_cmd->add_option("--samples", opt.samples, "number of randomized spot checks")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    monofol::LoadedPresentation loaded = monofol::load_presentation_file(opt.input);
    const monofol::Presentation& p = loaded.value;

    if (validate_cmd->parsed()) return run_validate(loaded, opt);
    if (verify_cmd->parsed()) return run_verify(loaded, opt);

    if (perp_cmd->parsed()) {
      emit(monofol::subspace_to_json(monofol::perp(p.subspace)), opt.output);
    } else if (freedirs_cmd->parsed()) {
      monofol::json dirs = monofol::json::array();
      for (int i : monofol::free_directions(p)) dirs.push_back(i + 1);
      emit(monofol::json{{"free_directions", std::move(dirs)}}, opt.output);
    } else if (blowup_cmd->parsed()) {
      monofol::Chart chart{parse_center(opt.center), opt.chart - 1};
      emit(monofol::presentation_to_json(monofol::chart_presentation(p, chart)), opt.output);
    } else if (atlas_cmd->parsed()) {
      emit(monofol::atlas_to_json(monofol::atlas(p, parse_center(opt.center))), opt.output);
    } else if (localize_cmd->parsed()) {
      emit(monofol::localize_to_json(monofol::localize(p, parse_point(opt.point))),
           opt.output);
    }
    return kExitOk;
  } catch (const monofol::ParseError& e) {
    return fail(kExitParse, "ParseError", e.what());
  } catch (const monofol::InvalidCenter& e) {
    return fail(kExitCenter, "InvalidCenter", e.what());
  } catch (const monofol::LengthMismatch& e) {
    return fail(kExitLength, "LengthMismatch", e.what());
  } catch (const std::exception& e) {
    return fail(kExitUsage, "Error", e.what());
  }
}
