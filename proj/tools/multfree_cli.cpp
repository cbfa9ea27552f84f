// Command-line front end: decompose permutation characters of symmetric
// groups, check multiplicity-freeness, reproduce the bundled reference
// tables, run the verification suites, and explore the meet-table schemes
// on uniform set-partitions.
//
// Exit codes: 0 success / multiplicity free, 1 not multiplicity free or a
// suite failure, 2 infeasible request, 3 parse error.

#include <omp.h>

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <set>

#include "multfree/catalog.hpp"
#include "multfree/closed_forms.hpp"
#include "multfree/induction.hpp"
#include "multfree/qi.hpp"
#include "multfree/tables.hpp"

using namespace multfree;
using nlohmann::json;

namespace {

struct Options {
  std::string method = "auto";
  long long census_cap = kDefaultCensusCap;
  int threads = 0;
  std::string format = "text";
  std::string catalog_path;
};

Decomposition resolve(const GroupSpec& spec, const Options& opt) {
  if (opt.method == "closed" || opt.method == "auto") {
    auto cf = closed_form_for(spec);
    if (cf) return *cf;
    if (opt.method == "closed")
      throw CensusInfeasible("no closed form registered for " + spec.str());
  }
  PermGroup g = spec.build(Catalog::instance(opt.catalog_path));
  return induced_trivial(g, opt.census_cap);
}

int cmd_decompose(const std::string& spec_text, const Options& opt) {
  GroupSpec spec = GroupSpec::parse(spec_text);
  Decomposition d = resolve(spec, opt);
  if (opt.format == "json") {
    json out;
    out["group"] = spec.str();
    out["n"] = d.mv.n();
    out["provenance"] = provenance_name(d.prov);
    out["constituents"] = json::array();
    for (const auto& [lam, c] : d.mv.entries())
      out["constituents"].push_back(
          {{"partition", lam.str()}, {"multiplicity", c}});
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << d.mv.str();
  }
  return 0;
}

int cmd_check(const std::string& spec_text, const Options& opt) {
  GroupSpec spec = GroupSpec::parse(spec_text);
  Decomposition d = resolve(spec, opt);
  bool mf = d.multiplicity_free();
  BigInt index = decomposition_index(d.mv);
  if (opt.format == "json") {
    json out{{"group", spec.str()},
             {"multiplicity_free", mf},
             {"rank", d.rank()},
             {"index", index.str()},
             {"provenance", provenance_name(d.prov)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "multiplicity free: " << (mf ? "yes" : "no") << "\n"
              << "rank: " << d.rank() << "\n"
              << "index: " << index.str() << "\n";
  }
  return mf ? 0 : 1;
}

int cmd_table(int id, const Options& opt) {
  auto results =
      verify_table(id, default_data_dir(), opt.census_cap, Exec::parallel);
  int failures = 0;
  for (const auto& r : results) {
    std::cout << format_row_result(r) << "\n";
    if (!r.pass && !r.skipped) ++failures;
  }
  std::cout << (failures == 0 ? "TABLE PASS" : "TABLE FAIL") << " ("
            << results.size() << " rows)\n";
  return failures == 0 ? 0 : 1;
}

int suite_closed_vs_brute(const Options& opt) {
  int failures = 0;
  for (const std::string& text : cross_check_specs()) {
    GroupSpec spec = GroupSpec::parse(text);
    auto rep = cross_check(spec, opt.census_cap);
    std::cout << (rep.identical ? "PASS  " : "FAIL  ") << text << " ["
              << provenance_name(rep.closed.prov) << " vs brute]\n";
    if (!rep.identical) {
      ++failures;
      std::cout << rep.text();
    }
  }
  return failures;
}

int suite_hook_sets() {
  int failures = 0;
  auto expect = [&](bool cond, const std::string& what) {
    std::cout << (cond ? "PASS  " : "FAIL  ") << what << "\n";
    if (!cond) ++failures;
  };
  std::set<int> s2ak{3, 4, 7, 8, 11, 12, 16, 20, 24};
  bool ok = true;
  for (int k = 3; k <= 32; ++k)
    ok = ok && closed::mf_s2_wr_ak(k) == (s2ak.count(k) > 0);
  expect(ok, "S_2 wr A_k membership set, 3 <= k <= 32");

  std::set<int> sdpk{2, 4, 5, 6, 8, 9, 12, 13, 16, 17, 20, 24, 28, 32};
  ok = true;
  for (int k = 2; k <= 32; ++k)
    ok = ok && closed::mf_sdpk(k) == (sdpk.count(k) > 0);
  expect(ok, "((S_2)^k meet A_2k) : S_k membership set, 2 <= k <= 32");

  ok = true;
  for (int k = 1; k <= 20; ++k)
    ok = ok && closed::mf_wreath_2k_cap_alt(k) == (k % 2 == 1);
  expect(ok, "(S_2 wr S_k) meet A_2k multiplicity free iff k odd, k <= 20");

  ok = true;
  for (int k = 2; k <= 32; ++k) {
    bool all3 = closed::mf_wreath_2k_cap_alt(k) && closed::mf_s2_wr_ak(k) &&
                closed::mf_sdpk(k);
    ok = ok && !closed::mf_sdpka(k) && !all3;
  }
  expect(ok, "((S_2)^k meet A_2k) : A_k never multiplicity free, k <= 32");
  return failures;
}

int suite_qi_commute(const Options& opt) {
  int failures = 0;
  for (auto [n, k] :
       std::vector<std::pair<int, int>>{{4, 2}, {6, 3}, {8, 4}, {9, 3}}) {
    auto mats = qi::scheme_matrices(n, k);
    std::pair<size_t, size_t> w;
    bool ok = qi::commuting_check(mats, &w);
    std::cout << (ok ? "PASS  " : "FAIL  ") << "meet-table scheme (" << n
              << "," << k << "): " << mats.size()
              << " classes pairwise commute\n";
    if (!ok) {
      ++failures;
      std::cout << "  witness pair: classes " << w.first << " and " << w.second
                << "\n";
    }
  }
  (void)opt;
  return failures;
}

int suite_cliques(long long budget) {
  int failures = 0;
  auto r93 = qi::max_clique_qi(9, 3, budget);
  bool ok93 = r93.exact && r93.lower == 4;
  std::cout << (ok93 ? "PASS  " : "FAIL  ")
            << "QI(9,3) maximum clique = 4 (found " << r93.lower
            << ", exact=" << (r93.exact ? "yes" : "no") << ")\n";
  if (!ok93) ++failures;

  auto r123 = qi::max_clique_qi(12, 3, budget);
  bool found7 = r123.lower >= 7;
  std::cout << (found7 ? "PASS  " : "FAIL  ")
            << "QI(12,3) clique of size 7 found (best " << r123.lower << ")\n";
  if (!found7) ++failures;
  if (r123.exact) {
    bool exact7 = r123.lower == 7;
    std::cout << (exact7 ? "PASS  " : "FAIL  ")
              << "QI(12,3) exact maximum = " << r123.lower
              << " (search complete, " << r123.nodes << " nodes)\n";
    if (!exact7) ++failures;
  } else {
    std::cout << "NOTE  QI(12,3) search budget exhausted: certified bounds ["
              << r123.lower << ", " << r123.upper << "]\n";
  }
  return failures;
}

int cmd_verify(const std::string& suite, const Options& opt,
               long long budget) {
  int failures = 0;
  if (suite == "closed-vs-brute" || suite == "all")
    failures += suite_closed_vs_brute(opt);
  if (suite == "hook-sets" || suite == "all") failures += suite_hook_sets();
  if (suite == "qi-commute" || suite == "all")
    failures += suite_qi_commute(opt);
  if (suite == "cliques" || suite == "all") failures += suite_cliques(budget);
  std::cout << (failures == 0 ? "VERIFY PASS" : "VERIFY FAIL") << "\n";
  return failures == 0 ? 0 : 1;
}

int cmd_qi(int n, int k, bool commute, bool clique, bool tables, bool edges,
           long long budget) {
  int rc = 0;
  if (tables) {
    auto mats = qi::scheme_matrices(n, k);
    for (size_t i = 0; i < mats.size(); ++i)
      std::cout << "class " << i << ": " << mats[i].table.str() << "\n";
  }
  if (commute) {
    auto mats = qi::scheme_matrices(n, k);
    std::pair<size_t, size_t> w;
    bool ok = qi::commuting_check(mats, &w);
    std::cout << "classes: " << mats.size() << "\n"
              << "commuting: " << (ok ? "yes" : "no") << "\n";
    if (!ok) {
      std::cout << "witness pair: " << w.first << " " << w.second << "\n";
      rc = 1;
    }
  }
  if (edges) {
    qi::BitMatrix adj = qi::qi_graph(n, k);
    for (size_t i = 0; i < adj.n; ++i)
      for (size_t j = i + 1; j < adj.n; ++j)
        if (adj.get(i, j)) std::cout << i << " " << j << "\n";
  }
  if (clique) {
    auto r = qi::max_clique_qi(n, k, budget);
    std::cout << "clique lower bound: " << r.lower << "\n"
              << "clique upper bound: " << r.upper << "\n"
              << "exact: " << (r.exact ? "yes" : "no") << "\n"
              << "nodes: " << r.nodes << "\n";
    std::cout << "witness:";
    for (int v : r.witness) std::cout << " " << v;
    std::cout << "\n";
    auto parts = qi::enumerate_uniform(n, k);
    for (int v : r.witness)
      std::cout << "  " << parts[static_cast<size_t>(v)].str() << "\n";
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multiplicity-free permutation character toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--method", opt.method, "auto | brute | closed")
      ->check(CLI::IsMember({"auto", "brute", "closed"}));
  app.add_option("--census-cap", opt.census_cap,
                 "element cap for brute-force censuses");
  app.add_option("--threads", opt.threads, "OpenMP thread count");
  app.add_option("--format", opt.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--catalog", opt.catalog_path,
                 "named-group catalog file (or MULTFREE_CATALOG)");

  std::string spec_text;
  auto* dec =
      app.add_subcommand("decompose", "decompose an induced trivial character");
  dec->add_option("spec", spec_text, "group spec, e.g. wr(S2,S4)")->required();

  auto* chk = app.add_subcommand("check", "multiplicity-freeness report");
  chk->add_option("spec", spec_text)->required();

  int table_id = 1;
  auto* tab = app.add_subcommand("table", "reproduce a reference table");
  tab->add_option("id", table_id, "table id 1-4")
      ->required()
      ->check(CLI::Range(1, 4));

  std::string suite = "all";
  long long budget = 2'000'000'000;
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", suite,
                  "closed-vs-brute | hook-sets | qi-commute | cliques | all")
      ->check(CLI::IsMember(
          {"closed-vs-brute", "hook-sets", "qi-commute", "cliques", "all"}));
  ver->add_option("--budget", budget, "clique search node budget");

  int qn = 0, qk = 0;
  bool q_commute = false, q_clique = false, q_tables = false, q_edges = false;
  auto* qi_cmd =
      app.add_subcommand("qi", "meet-table schemes on uniform set-partitions");
  qi_cmd->add_option("--n", qn, "number of points")->required();
  qi_cmd->add_option("--k", qk, "number of cells")->required();
  qi_cmd->add_flag("--commute", q_commute, "check pairwise commutativity");
  qi_cmd->add_flag("--clique", q_clique, "search the maximum QI clique");
  qi_cmd->add_flag("--tables", q_tables, "print canonical meet-table classes");
  qi_cmd->add_flag("--edges", q_edges, "print the QI graph edge list");
  qi_cmd->add_option("--budget", budget, "clique search node budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  if (opt.threads > 0) omp_set_num_threads(opt.threads);

  try {
    if (!opt.catalog_path.empty()) Catalog::instance(opt.catalog_path);
    if (dec->parsed()) return cmd_decompose(spec_text, opt);
    if (chk->parsed()) return cmd_check(spec_text, opt);
    if (tab->parsed()) return cmd_table(table_id, opt);
    if (ver->parsed()) return cmd_verify(suite, opt, budget);
    if (qi_cmd->parsed())
      return cmd_qi(qn, qk, q_commute, q_clique, q_tables, q_edges, budget);
  } catch (const SpecParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const CensusInfeasible& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
