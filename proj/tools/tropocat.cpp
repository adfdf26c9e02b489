#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "tropocat/axioms.hpp"
#include "tropocat/enumerate.hpp"
#include "tropocat/error.hpp"
#include "tropocat/graph_complex.hpp"
#include "tropocat/json_io.hpp"
#include "tropocat/moduli.hpp"
#include "tropocat/tropical_complex.hpp"

using namespace tropocat;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kMismatch = 2;
constexpr int kBudget = 3;

struct Output {
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
    f << text;
  }
};

Json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  try {
    return Json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, path + ": " + e.what());
  }
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw Error(ErrorCode::InvalidArgument, "degree range is a..b");
  try {
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, "degree range is a..b");
  }
}

std::string homology_csv(const std::vector<HomologyRow>& rows, std::optional<std::pair<int, int>> range) {
  std::ostringstream out;
  out << "degree,dim_C,rank_boundary,betti\n";
  for (const auto& r : rows) {
    if (range && (r.degree < range->first || r.degree > range->second)) continue;
    out << r.degree << ',' << r.dim << ',' << r.rank << ',' << r.betti << '\n';
  }
  return out.str();
}

Budget make_budget(double seconds) { return seconds > 0 ? Budget(seconds) : Budget::unlimited(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted cospans, stable graphs and the homology of Delta_g"};
  app.require_subcommand(1);
  double budget_seconds = 0;
  app.add_option("--budget", budget_seconds, "Wall-clock budget in seconds (0 = none)")
      ->check(CLI::NonNegativeNumber);

  Output output;
  std::int64_t genus = 0;

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "List the objects of J_g as JSON");
  std::string strategy = "closure";
  enumerate->add_option("--genus", genus, "Genus g >= 2")->required();
  enumerate->add_option("--strategy", strategy, "closure or direct")
      ->check(CLI::IsMember({"closure", "direct"}));
  enumerate->add_option("--out", output.path, "Output file (default stdout)");

  // homology
  auto* homology = app.add_subcommand("homology", "Betti numbers as CSV");
  std::string complex_kind;
  std::string degree_range;
  homology->add_option("complex", complex_kind, "delta or gc")
      ->required()
      ->check(CLI::IsMember({"delta", "gc"}));
  homology->add_option("--genus", genus, "Genus g >= 2")->required();
  homology->add_option("--degree-range", degree_range, "Only degrees a..b");
  homology->add_option("--out", output.path, "Output file (default stdout)");

  // compare
  auto* compare = app.add_subcommand("compare", "Compare Delta_g and graph complex Betti numbers");
  compare->add_option("--genus", genus, "Genus g >= 2")->required();
  compare->add_option("--out", output.path, "Output file (default stdout)");

  // verify axioms
  auto* verify = app.add_subcommand("verify", "Property checks");
  auto* axioms = verify->add_subcommand("axioms", "Labelled-cospan axioms and surgery diagrams");
  verify->require_subcommand(1);
  std::string monoid_spec = "nat-stable";
  std::string check = "all";
  bool unchecked = false;
  bool max_label_given = false;
  TrialConfig cfg;
  axioms->add_option("--monoid", monoid_spec, "trivial | nat | nat-stable | nat-mod:G | int");
  axioms->add_option("--trials", cfg.trials, "Random trials per check")->check(CLI::PositiveNumber);
  axioms->add_option("--seed", cfg.seed, "Seed");
  axioms->add_option("--max-feet", cfg.max_feet)->check(CLI::PositiveNumber);
  axioms->add_option("--max-apex", cfg.max_apex)->check(CLI::PositiveNumber);
  axioms->add_option("--max-label", cfg.max_label)
      ->check(CLI::PositiveNumber)
      ->each([&](const std::string&) { max_label_given = true; });
  axioms->add_flag("--exhaustive", cfg.exhaustive, "Require the exhaustive small range");
  axioms->add_flag("--unchecked", unchecked, "Allow the integer monoid");
  axioms->add_option("--check", check, "Which check to run")
      ->check(CLI::IsMember({"all", "associativity", "decomposition", "product", "surgery", "euler",
                             "pb"}));
  axioms->add_option("--out", output.path, "Output file (default stdout)");

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate phi, phi2 or mu on a chain");
  std::string map_kind, chain_path, coords;
  eval->add_option("map", map_kind, "phi, phi2 or mu")
      ->required()
      ->check(CLI::IsMember({"phi", "phi2", "mu"}));
  eval->add_option("--chain", chain_path, "Chain JSON file")->required();
  eval->add_option("--coords", coords, "Barycentric coordinates \"t0,t1,...\"")->required();
  eval->add_option("--out", output.path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kUsage;
  }

  try {
    const Budget budget = make_budget(budget_seconds);

    if (*enumerate) {
      const auto s = strategy == "direct" ? EnumerationStrategy::Direct
                                          : EnumerationStrategy::ContractionClosure;
      const auto graphs = enumerate_Jg(genus, WeightingMonoid::nat_stable(), s, budget);
      Json out = Json::array();
      for (const auto& g : graphs) out.push_back(to_json(g));
      output.write(out.dump(2) + "\n");
      return kOk;
    }

    if (*homology) {
      std::optional<std::pair<int, int>> range;
      if (!degree_range.empty()) range = parse_range(degree_range);
      const auto rows = complex_kind == "delta" ? reduced_homology(genus, budget)
                                                : gc_homology(genus, budget);
      output.write(homology_csv(rows, range));
      return kOk;
    }

    if (*compare) {
      const auto delta = reduced_homology(genus, budget);
      const auto gc = gc_homology(genus, budget);
      std::ostringstream out;
      out << "edge_degree,delta_degree,delta_betti,gc_betti,status\n";
      bool all_equal = true;
      for (const auto& r : gc) {
        std::int64_t d = 0;
        for (const auto& x : delta) {
          if (x.degree == r.degree - 1) d = x.betti;
        }
        const bool equal = d == r.betti;
        all_equal = all_equal && equal;
        out << r.degree << ',' << r.degree - 1 << ',' << d << ',' << r.betti << ','
            << (equal ? "equal" : "mismatch") << '\n';
      }
      output.write(out.str());
      return all_equal ? kOk : kMismatch;
    }

    if (*axioms) {
      const auto monoid = WeightingMonoid::parse(monoid_spec, unchecked);
      if (cfg.exhaustive && !max_label_given) cfg.max_label = 1;
      cfg.validate();
      std::vector<Report> reports;
      auto want = [&](const char* name) { return check == "all" || check == name; };
      if (want("associativity")) reports.push_back(check_associativity(cfg, monoid));
      if (want("decomposition")) reports.push_back(check_axiom_decomposition(cfg, monoid));
      if (want("product")) reports.push_back(check_axiom_product(cfg, monoid));
      if (want("surgery")) reports.push_back(check_surgery_diagrams(cfg, monoid));
      if (want("euler")) {
        if (monoid.is_natural()) {
          reports.push_back(check_euler_additivity(cfg, monoid));
        } else if (check == "euler") {
          throw Error(ErrorCode::WrongMonoid, "Euler characteristic needs an N-valued monoid");
        }
      }
      if (want("pb")) reports.push_back(check_pb_functoriality(cfg, monoid));
      Json out;
      out["monoid"] = monoid.name();
      out["seed"] = cfg.seed;
      out["trials"] = cfg.trials;
      bool passed = true;
      Json list = Json::array();
      for (const auto& r : reports) {
        passed = passed && r.passed();
        list.push_back(to_json(r));
      }
      out["passed"] = passed;
      out["reports"] = list;
      output.write(out.dump(2) + "\n");
      return passed ? kOk : kMismatch;
    }

    if (*eval) {
      const Json chain = read_json(chain_path);
      const auto t = parse_rational_list(coords);
      Json out;
      if (map_kind == "phi") {
        out = to_json(phi(factorization_from_json(chain), t));
      } else if (map_kind == "phi2") {
        out = to_json(phi2(simplex_from_json(chain), t));
      } else {
        out = Json::array();
        for (const auto& p : mu(nerve_from_json(chain), t)) out.push_back(to_json(p));
      }
      output.write(out.dump(2) + "\n");
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::ResourceBudgetExceeded ? kBudget : kUsage;
  }
  return kUsage;
}
