// Command-line front end: enumerate the posets, export Hasse diagrams,
// classify order-complex topology, and run the verification suites.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "omega/bruhat.hpp"
#include "omega/checks.hpp"
#include "omega/clambda.hpp"
#include "omega/permutation.hpp"
#include "omega/poset.hpp"
#include "omega/serialize.hpp"

namespace {

using namespace omega;

int default_max_n() {
  if (const char* env = std::getenv("CLPOSET_MAX_N")) {
    try {
      const int value = std::stoi(env);
      if (value >= 2) return value;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid CLPOSET_MAX_N\n";
  }
  return kDefaultEnumMaxN;
}

struct VerifyItem {
  Composition lambda;
  checks::CheckResult result;
};

// Runs fn over items with a fixed-size worker pool; results keep input order.
template <typename Fn>
void parallel_for(int workers, size_t count, Fn fn) {
  workers = std::max(1, workers);
  if (workers == 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

int cmd_enumerate(const Composition& lambda, const std::string& format, int max_n) {
  auto elements = enumerate_poset(lambda, max_n);
  std::stable_sort(elements.begin(), elements.end(),
                   [](const Permutation& a, const Permutation& b) {
                     const int ra = inversions(a), rb = inversions(b);
                     return ra != rb ? ra < rb : a < b;
                   });
  if (format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const Permutation& p : elements) out.push_back(to_json(p));
    std::cout << out.dump() << '\n';
  } else {
    for (const Permutation& p : elements) {
      std::cout << inversions(p) << '\t' << to_string(p) << '\n';
    }
  }
  return 0;
}

int cmd_hasse(const Composition& lambda, int max_n) {
  const GradedPoset poset = GradedPoset::build(enumerate_poset(lambda, max_n));
  std::cout << to_dot(poset);
  return 0;
}

int cmd_classify(const Composition& lambda, int max_n) {
  const TopologyClass topo = classify_topology(lambda);
  std::cout << "lambda=" << to_string(lambda) << " class=" << to_string(topo)
            << " length=" << length_formula(lambda);
  if (lambda.n() <= max_n) {
    const GradedPoset poset = GradedPoset::build(enumerate_poset(lambda, max_n));
    std::cout << " mobius=" << reduced_euler_characteristic(poset);
  }
  std::cout << '\n';
  return 0;
}

int cmd_verify(const std::string& check, const std::vector<Composition>& lambdas,
               int max_n, int parallelism) {
  using Runner = checks::CheckResult (*)(const Composition&, int);
  Runner runner = nullptr;
  if (check == "graded") runner = checks::graded;
  else if (check == "genfunc") runner = checks::genfunc;
  else if (check == "el") runner = checks::el;
  else if (check == "decompose") runner = checks::decomposition;
  else if (check == "rising-chain") runner = checks::rising_chain;
  else if (check == "mobius") runner = checks::mobius_topology;
  else if (check == "rank-selected") runner = checks::rank_selected;
  else if (check == "all") runner = checks::all;
  else {
    std::cerr << "unknown check '" << check << "'\n";
    return 2;
  }

  std::vector<VerifyItem> items;
  items.reserve(lambdas.size());
  for (const Composition& lambda : lambdas) items.push_back({lambda, {}});
  parallel_for(parallelism, items.size(),
               [&](size_t i) { items[i].result = runner(items[i].lambda, max_n); });

  bool all_pass = true;
  for (const VerifyItem& item : items) {
    all_pass = all_pass && item.result.pass;
    std::cout << check << " lambda=" << to_string(item.lambda) << ": "
              << (item.result.pass ? "PASS" : "FAIL");
    if (!item.result.detail.empty() && item.result.detail != "ok") {
      std::cout << " (" << item.result.detail << ")";
    }
    std::cout << '\n';
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bruhat-Chevalley posets of parenthesis-omitted cyclic forms"};
  app.require_subcommand(1);

  int max_n = default_max_n();
  app.add_option("--max-n", max_n, "safety bound on n")->check(CLI::Range(2, kDefaultMaxN));

  std::string lambda_text;
  std::string format = "text";
  int sweep_n = 0;
  int parallelism = 1;

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list the poset elements with ranks");
  enumerate_cmd->fallthrough();
  enumerate_cmd->add_option("--lambda", lambda_text, "comma-separated parts")->required();
  enumerate_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* hasse_cmd = app.add_subcommand("hasse", "emit the Hasse diagram as DOT");
  hasse_cmd->fallthrough();
  hasse_cmd->add_option("--lambda", lambda_text, "comma-separated parts")->required();

  auto* classify_cmd = app.add_subcommand("classify", "order-complex topology class");
  classify_cmd->fallthrough();
  classify_cmd->add_option("--lambda", lambda_text, "comma-separated parts")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->fallthrough();
  std::string check;
  verify_cmd
      ->add_option("check", check,
                   "graded|genfunc|el|decompose|rising-chain|mobius|rank-selected|all")
      ->required();
  verify_cmd->add_option("--lambda", lambda_text, "comma-separated parts");
  verify_cmd->add_option("--sweep-n", sweep_n, "verify every composition of n");
  verify_cmd->add_option("--parallelism", parallelism, "worker count")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (enumerate_cmd->parsed()) {
      return cmd_enumerate(parse_composition(lambda_text), format, max_n);
    }
    if (hasse_cmd->parsed()) {
      return cmd_hasse(parse_composition(lambda_text), max_n);
    }
    if (classify_cmd->parsed()) {
      return cmd_classify(parse_composition(lambda_text), max_n);
    }
    if (verify_cmd->parsed()) {
      std::vector<Composition> lambdas;
      if (!lambda_text.empty()) {
        lambdas.push_back(parse_composition(lambda_text));
      } else if (sweep_n >= 2) {
        if (sweep_n > max_n) {
          std::cerr << "sweep bound " << sweep_n << " exceeds max-n " << max_n << '\n';
          return 2;
        }
        lambdas = compositions_of(sweep_n);
      } else {
        std::cerr << "verify needs --lambda or --sweep-n\n";
        return 2;
      }
      for (const Composition& lambda : lambdas) {
        if (lambda.n() > max_n) {
          std::cerr << "lambda sums to " << lambda.n() << ", above max-n " << max_n << '\n';
          return 2;
        }
      }
      return cmd_verify(check, lambdas, max_n, parallelism);
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  }
  return 2;
}
