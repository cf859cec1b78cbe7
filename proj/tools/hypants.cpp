// hypants: command-line front end for the hypants library.
//
// Exit status: 0 success, 1 verification failure, 2 usage or input error.
// Verification failures are reported through return values; every exception
// that reaches main is an input problem.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hypants/claims.hpp"
#include "hypants/json_io.hpp"
#include "hypants/orbit.hpp"
#include "hypants/pantsrep.hpp"
#include "hypants/svg.hpp"
#include "hypants/whitehead.hpp"

namespace {

using hypants::Json;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("'" + path + "': " + e.what());
  }
}

double epsilon_from_env(double fallback) {
  const char* raw = std::getenv("HYPANTS_EPS");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const double eps = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(eps > 0.0)) {
    throw InputError(std::string("HYPANTS_EPS must be a positive number, got '") + raw + "'");
  }
  return eps;
}

std::vector<std::string> split_ids(const std::string& list) {
  std::vector<std::string> ids;
  if (list.empty() || list == "all") return ids;
  std::stringstream ss(list);
  std::string id;
  while (std::getline(ss, id, ',')) {
    if (!id.empty()) ids.push_back(id);
  }
  return ids;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw InputError("failed writing '" + path.string() + "'");
}

int run_classify(const std::string& input, double eps) {
  const auto rep = hypants::pants_from_json(read_json_file(input));
  const auto nf = hypants::classify_pants_rep(rep, eps);
  Json out;
  out["kind"] = std::string(hypants::to_string(nf.kind));
  out["conjugator"] = hypants::to_json(nf.conjugator);
  if (nf.params) {
    out["params"] = Json::array({hypants::to_json(nf.params->first), hypants::to_json(nf.params->second)});
  } else {
    out["params"] = nullptr;
  }
  std::cout << out.dump(2) << '\n';
  return kOk;
}

int run_whitehead(const std::string& a_text, bool check, const std::vector<std::string>& words,
                  double eps) {
  const auto rho = hypants::build_rho(hypants::parse_complex(a_text), eps);
  Json out;
  out["a"] = hypants::to_json(rho.a);
  out["c1"] = hypants::to_json(rho.c1);
  out["c2"] = hypants::to_json(rho.c2);
  out["q"] = hypants::to_json(rho.q);
  out["q_squared"] = hypants::to_json(rho.q_squared_closed_form());
  int status = kOk;
  if (check) {
    const auto res = hypants::relation_residuals(rho);
    const bool ok = res.max() <= 1e-9;
    out["relations"] = {{"c1q2_eq_q2c2", res.r1},
                        {"commutator", res.r2},
                        {"q_squared_formula", res.q_squared},
                        {"pass", ok}};
    if (!ok) status = kVerifyFailed;
  }
  if (!words.empty()) {
    Json evaluated = Json::array();
    for (const auto& w : words) {
      const auto m = hypants::evaluate_word(rho, w);
      const auto cls = hypants::classify(m, eps);
      evaluated.push_back({{"word", w},
                           {"matrix", hypants::to_json(m)},
                           {"trace", hypants::to_json(m.trace())},
                           {"kind", std::string(hypants::to_string(cls.kind))}});
    }
    out["words"] = evaluated;
  }
  std::cout << out.dump(2) << '\n';
  return status;
}

int run_volume(const std::string& x_text, double eps) {
  const hypants::TetShape shape(hypants::parse_complex(x_text), eps);
  const hypants::TetShape companion(shape.companion(), eps);
  Json out;
  out["x"] = hypants::to_json(shape.x());
  out["flat"] = shape.flat();
  out["tet_volume"] = hypants::tet_volume(shape);
  out["companion"] = {{"x", hypants::to_json(companion.x())},
                      {"tet_volume", hypants::tet_volume(companion)}};
  out["total"] = hypants::whitehead_volume(shape);
  std::cout << out.dump(2) << '\n';
  return kOk;
}

int run_orbit(const std::string& group_path, double cutoff, int max_len, const std::string& svg,
              double eps) {
  const auto group = hypants::group_from_json(read_json_file(group_path));
  const auto result = hypants::orbit_enumerate(group, cutoff, max_len, eps);
  Json balls = Json::array();
  std::vector<hypants::Horoball> plain;
  for (const auto& b : result.balls) {
    Json j = hypants::to_json(b.ball);
    j["word"] = b.word;
    balls.push_back(j);
    plain.push_back(b.ball);
  }
  Json out;
  out["cutoff"] = cutoff;
  out["max_word_len"] = max_len;
  out["balls"] = balls;
  out["explored"] = result.explored;
  out["depth_limited"] = result.depth_limited;
  if (!svg.empty()) {
    hypants::render_diagram(plain, group.lattice(), svg);
    out["svg"] = svg;
  }
  std::cout << out.dump(2) << '\n';
  return kOk;
}

int run_verify(const std::string& claims, const std::string& report_path, const std::string& svg_dir,
               double eps) {
  const auto ids = split_ids(claims);
  const auto reports = hypants::run_claims(ids, hypants::ClaimContext{eps});
  const std::string report = hypants::report_json(reports).dump(2) + "\n";

  for (const auto& r : reports) {
    std::cerr << hypants::to_string(r.verdict) << "  " << r.claim_id;
    if (!r.note.empty()) std::cerr << "  (" << r.note << ")";
    std::cerr << '\n';
  }
  if (report_path.empty()) {
    std::cout << report;
  } else {
    write_text(report_path, report);
  }
  if (!svg_dir.empty()) {
    std::filesystem::create_directories(svg_dir);
    const auto group = hypants::rigid_pants_group();
    const auto orbit = hypants::orbit_enumerate(group, 0.1, 12, eps);
    std::vector<hypants::Horoball> balls;
    for (const auto& b : orbit.balls) balls.push_back(b.ball);
    hypants::render_diagram(balls, group.lattice(), std::filesystem::path(svg_dir) / "eq2_orbit.svg");
  }
  return hypants::any_failed(reports) ? kVerifyFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parabolic pants representations, Whitehead link volumes and horoball packings"};
  app.require_subcommand(1);

  double epsilon = hypants::kDefaultEpsilon;
  bool epsilon_given = false;

  auto* classify = app.add_subcommand("classify", "Normal form of a pants representation");
  std::string rep_path;
  classify->add_option("--input", rep_path, "JSON file {\"C1\": ..., \"C2\": ...}")->required();
  classify->add_option("--epsilon", epsilon, "Comparison tolerance")
      ->check(CLI::PositiveNumber)
      ->each([&](const std::string&) { epsilon_given = true; });

  auto* whitehead = app.add_subcommand("whitehead", "The representation for parameter a");
  std::string a_text;
  bool check_relations = false;
  std::vector<std::string> words;
  whitehead->add_option("--a", a_text, "Parameter as RE,IM")->required();
  whitehead->add_flag("--check-relations", check_relations, "Report relation residuals");
  whitehead->add_option("--word", words, "Evaluate a word in c1, c2, q (e.g. \"q^-1 c1 q\")");

  auto* volume = app.add_subcommand("volume", "Volume of the shape-x ideal triangulation");
  std::string x_text;
  volume->add_option("--x", x_text, "Tetrahedron shape as RE,IM")->required();

  auto* orbit = app.add_subcommand("orbit", "Orbit of H_inf under a group, modulo the cusp lattice");
  std::string group_path;
  double cutoff = 0.05;
  int max_len = 12;
  std::string svg_path;
  orbit->add_option("--group", group_path, "Group JSON file")->required();
  orbit->add_option("--cutoff", cutoff, "Smallest diameter kept")->check(CLI::PositiveNumber);
  orbit->add_option("--max-word-len", max_len, "Longest word explored")->check(CLI::NonNegativeNumber);
  orbit->add_option("--svg", svg_path, "Write a top-view diagram");

  auto* verify = app.add_subcommand("verify", "Run the claim registry");
  std::string claim_list = "all";
  std::string report_path;
  std::string svg_dir;
  verify->add_option("--claims", claim_list, "all, or a comma-separated list of claim ids");
  verify->add_option("--report", report_path, "Write the JSON report here instead of stdout");
  verify->add_option("--svg-dir", svg_dir, "Directory for diagrams");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (!epsilon_given) epsilon = epsilon_from_env(epsilon);
    if (*classify) return run_classify(rep_path, epsilon);
    if (*whitehead) return run_whitehead(a_text, check_relations, words, epsilon);
    if (*volume) return run_volume(x_text, epsilon);
    if (*orbit) return run_orbit(group_path, cutoff, max_len, svg_path, epsilon);
    if (*verify) return run_verify(claim_list, report_path, svg_dir, epsilon);
  } catch (const std::exception& e) {
    std::cerr << "hypants: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
