// hyperell: command-line front end.
//
// Exit codes: 0 success, 1 failed certificate or check, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "CLI11.hpp"
#include "hyperell/hyperell.hpp"
#include "hyperell/json_io.hpp"

using namespace hyperell;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_ints(const std::string& s, const char* what) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string("--") + what + " expects comma-separated integers, got '" + s + "'");
    }
  }
  return out;
}

std::pair<int, int> parse_tlg(const std::string& s) {
  const auto v = parse_ints(s, "tlg");
  if (v.size() != 2) throw UsageError("--tlg expects l,g");
  return {v[0], v[1]};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw UsageError("cannot write " + out_path);
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

bool color_enabled() {
  const char* env = std::getenv("HYPERELL_COLOR");
  return env && std::string(env) == "1" && isatty(STDOUT_FILENO);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable graphs, hyperelliptic pushforward, free Lie superalgebras and the d1 certificate"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  unsigned jobs = default_jobs();
  app.add_option("--out", out_path, "Write output to this file instead of stdout");
  app.add_option("--jobs", jobs, "Worker threads (default: HYPERELL_JOBS or 1)")->check(CLI::PositiveNumber);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Trees of type (0,n): numbered, or S_n-orbit classes");
  int n = 0;
  std::optional<int> edges;
  bool orbits = false, good = false;
  enumerate->add_option("--n", n, "Number of leaves")->required();
  enumerate->add_option("--edges", edges, "Only trees with this many edges");
  enumerate->add_flag("--orbits", orbits, "List S_n-orbit classes with orbit sizes");
  enumerate->add_flag("--good", good, "Only good trees (n even)");

  // annotate / pushforward
  std::string tree_path, tlg;
  auto* annotate_cmd = app.add_subcommand("annotate", "Parity, rho and nu of a tree");
  auto* push = app.add_subcommand("pushforward", "Stable graph of the admissible double cover of a tree");
  for (auto* cmd : {annotate_cmd, push}) {
    auto* t = cmd->add_option("--tree", tree_path, "Tree in graph JSON");
    auto* s = cmd->add_option("--tlg", tlg, "The star tree T_{l,g}, given as l,g");
    t->excludes(s);
    s->excludes(t);
  }

  // lyndon / normalize
  std::string alphabet = "a:odd,b:even", degree, expr;
  auto* lyndon = app.add_subcommand("lyndon", "Lyndon basis of one multidegree");
  lyndon->add_option("--alphabet", alphabet, "Letters with parities, e.g. a:odd,b:even")->capture_default_str();
  lyndon->add_option("--degree", degree, "Letter counts, e.g. 3,2")->required();
  auto* normalize = app.add_subcommand("normalize", "Expand a bracket expression in the Lyndon basis");
  normalize->add_option("--alphabet", alphabet, "Letters with parities")->capture_default_str();
  normalize->add_option("--expr", expr, "Bracket expression, e.g. [[a,b],[a,a]]")->required();

  // d1 / certify
  int genus = 0;
  std::string vector_text, convention = "koszul";
  int level = -1;
  auto* d1_cmd = app.add_subcommand("d1", "Apply d1 to omega_g or to a vector of V_{l,g}");
  d1_cmd->add_option("--genus", genus, "g")->required();
  d1_cmd->add_option("--level", level, "l (default g, with omega_g as input)");
  d1_cmd->add_option("--vector", vector_text, "Input vector, e.g. '1·aabab' (default omega_g)");
  d1_cmd->add_option("--convention", convention, "koszul or word_position")
      ->check(CLI::IsMember({"koszul", "word_position"}))
      ->capture_default_str();
  auto* certify = app.add_subcommand("certify", "Certificate that d1(omega_g) is a nonzero class");
  certify->add_option("--genus", genus, "g, 2..10")->required();

  // tables
  std::string kind;
  auto* tables = app.add_subcommand("tables", "E1 or F1 page dimensions as CSV");
  tables->add_option("--kind", kind, "e1 or f1")->required()->check(CLI::IsMember({"e1", "f1"}));
  tables->add_option("--n", n, "Number of marked points (e1)");
  tables->add_option("--genus", genus, "Genus (f1)");

  // check
  std::string check_level = "quick";
  auto* check = app.add_subcommand("check", "Run the invariant suite");
  check->add_option("--level", check_level, "quick or full")->check(CLI::IsMember({"quick", "full"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\nhint: run 'hyperell --help' or 'hyperell <command> --help'\n";
    return 2;
  }

  try {
    const D1Convention conv = convention == "koszul" ? D1Convention::koszul : D1Convention::word_position;

    if (*enumerate) {
      Json j;
      j["format"] = kFormatVersion;
      j["n"] = n;
      j["orbits"] = orbits;
      Json items = Json::array();
      auto keep = [&](const Graph& t) { return !good || is_good(annotate(t)); };
      if (good && n % 2 != 0) throw UsageError("--good needs an even --n");
      if (orbits) {
        for (const StratumClass& c : enumerate_orbits(n, edges)) {
          if (!keep(c.representative)) continue;
          items.push_back({{"canonical_key", c.canonical_key},
                           {"edge_count", c.edge_count},
                           {"orbit_size", c.orbit_size},
                           {"representative", graph_to_json(c.representative)}});
        }
      } else {
        for (const Graph& t : enumerate_trees(n, edges)) {
          if (!keep(t)) continue;
          items.push_back({{"canonical_key", canonical_form(t)},
                           {"edge_count", t.edge_count()},
                           {"graph", graph_to_json(t)}});
        }
      }
      j["count"] = items.size();
      j["trees"] = items;
      emit(dump(j), out_path);
      return 0;
    }

    if (*annotate_cmd || *push) {
      AnnotatedTree t;
      if (!tlg.empty()) {
        const auto [l, g] = parse_tlg(tlg);
        t = build_T_lg(l, g);
      } else if (!tree_path.empty()) {
        t = annotated_from_json(read_json_file(tree_path));
      } else {
        throw UsageError("give --tree <file.json> or --tlg l,g");
      }
      if (*annotate_cmd) {
        Json j = annotated_to_json(t);
        j["good"] = is_good(t);
        emit(dump(j), out_path);
        return 0;
      }
      const CoverGraph cover = admissible_cover(t);
      const Graph image = stabilize(cover.graph);
      Json j;
      j["format"] = kFormatVersion;
      j["genus"] = hyperell::genus(image);
      j["rational_components"] = rational_component_count(t);
      j["graph"] = graph_to_json(image);
      j["cover_before_stabilization"] = graph_to_json(cover.graph);
      j["tree"] = annotated_to_json(t);
      j["trace"] = cover.trace;
      emit(dump(j), out_path);
      return 0;
    }

    if (*lyndon) {
      const auto alpha = GradedAlphabet::parse(alphabet);
      const Multidegree d = parse_ints(degree, "degree");
      const FreeLieSuperalgebra L(alpha);
      Json basis = Json::array();
      for (const auto& k : L.basis(d)) basis.push_back(key_string(alpha, k));
      Json j;
      j["format"] = kFormatVersion;
      j["alphabet"] = alpha.spec();
      j["degree"] = d;
      j["dimension"] = basis.size();
      j["basis"] = basis;
      emit(dump(j), out_path);
      return 0;
    }

    if (*normalize) {
      const auto alpha = GradedAlphabet::parse(alphabet);
      const FreeLieSuperalgebra L(alpha);
      const BracketExpr e = BracketExpr::parse(alpha, expr);
      const LieVector v = L.normalize(e);
      Json j;
      j["format"] = kFormatVersion;
      j["alphabet"] = alpha.spec();
      j["expr"] = e.str(alpha);
      j["result"] = v.str(alpha);
      j["terms"] = lie_vector_to_json(alpha, v);
      emit(dump(j), out_path);
      return 0;
    }

    if (*d1_cmd) {
      const LieRow& row = lie_row(conv);
      VSpaceElement x;
      if (vector_text.empty()) {
        if (level != -1 && level != genus) throw UsageError("without --vector the input is omega_g, at level g");
        x = row.omega(genus);
      } else {
        x = {genus, level == -1 ? genus : level, LieVector::parse(row.alphabet(), vector_text)};
      }
      const VSpaceElement y = row.d1(x);
      Json j;
      j["format"] = kFormatVersion;
      j["convention"] = to_string(conv);
      j["alphabet"] = row.alphabet().spec();
      j["genus"] = genus;
      j["level"] = x.l;
      j["input"] = x.vector.str(row.alphabet());
      j["output"] = y.vector.str(row.alphabet());
      j["terms"] = lie_vector_to_json(row.alphabet(), y.vector);
      emit(dump(j), out_path);
      return 0;
    }

    if (*certify) {
      const Certificate c = build_certificate(genus);
      emit(dump(certificate_to_json(c)), out_path);
      for (const auto& line : c.log) std::cerr << line << "\n";
      return c.passed() ? 0 : 1;
    }

    if (*tables) {
      SpectralTable t;
      if (kind == "e1") {
        if (n == 0) throw UsageError("tables --kind e1 needs --n");
        t = e1_table(n, jobs);
      } else {
        if (genus == 0) throw UsageError("tables --kind f1 needs --genus");
        t = f1_table(genus, jobs);
      }
      emit(table_to_csv(t), out_path);
      return 0;
    }

    if (*check) {
      const auto results = run_checks(check_level == "full" ? CheckLevel::full : CheckLevel::quick);
      const bool color = color_enabled();
      std::ostringstream out;
      bool all = true;
      for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        all = all && r.passed;
        const std::string tag = r.passed ? "PASS" : "FAIL";
        out << (color ? (r.passed ? "\033[32m" : "\033[31m") : "") << tag << (color ? "\033[0m" : "") << " " << i + 1
            << ". " << r.name;
        if (!r.passed) out << ": " << r.detail;
        out << "\n";
      }
      emit(out.str(), out_path);
      return all ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\nhint: see 'hyperell " << (app.get_subcommands().empty() ? "" : app.get_subcommands()[0]->get_name()) << " --help'\n";
    return 2;
  } catch (const FailedCertificate& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\nhint: check the argument ranges in 'hyperell "
              << (app.get_subcommands().empty() ? "" : app.get_subcommands()[0]->get_name()) << " --help'\n";
    return 2;
  }
  return 0;
}
