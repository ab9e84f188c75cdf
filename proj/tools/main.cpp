#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cayb/balance.hpp"
#include "cayb/cayley.hpp"
#include "cayb/explore.hpp"
#include "cayb/metric.hpp"
#include "cayb/parallel.hpp"
#include "cayb/parse.hpp"
#include "cayb/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

struct GroupSpec {
  int dihedral_n = 0;
  int cyclic_n = 0;
  std::string perm_gens;
  std::string table_file;
};

cayb::FiniteGroup load_table_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cayb::ParameterError("cannot open table file " + path);
  int m = 0;
  in >> m;
  if (!in || m < 1) throw cayb::ParameterError("bad table header in " + path);
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (auto& row : table)
    for (auto& v : row) {
      in >> v;
      if (!in) throw cayb::ParameterError("truncated table in " + path);
    }
  return cayb::FiniteGroup::from_table(std::move(table));
}

// Builds the group and resolves the generating-set indices. For permutation
// groups the generators double as the group definition (closure).
std::pair<cayb::FiniteGroup, std::vector<int>> resolve_group(
    const GroupSpec& spec, const std::string& gens_text) {
  if (spec.dihedral_n > 0) {
    cayb::FiniteGroup g = cayb::FiniteGroup::dihedral(spec.dihedral_n);
    return {g, cayb::parse_generators(g, gens_text)};
  }
  if (spec.cyclic_n > 0) {
    cayb::FiniteGroup g = cayb::FiniteGroup::cyclic(spec.cyclic_n);
    return {g, cayb::parse_generators(g, gens_text)};
  }
  if (!spec.perm_gens.empty()) {
    auto perms = cayb::parse_permutations(
        gens_text.empty() ? spec.perm_gens : gens_text);
    cayb::FiniteGroup g = cayb::FiniteGroup::permutation_closure(
        cayb::parse_permutations(spec.perm_gens));
    std::vector<int> idx;
    for (auto& p : perms) {
      for (int i = p.degree();
           i < g.permutation_at(cayb::FiniteGroup::kIdentity).degree(); ++i)
        p.images.push_back(i);
      idx.push_back(g.index_of(p));
    }
    return {g, idx};
  }
  cayb::FiniteGroup g = load_table_group(spec.table_file);
  return {g, cayb::parse_generators(g, gens_text)};
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw cayb::ParameterError("cannot write " + out_path);
  out << text;
}

std::pair<int, int> parse_range(const std::string& text) {
  auto pos = text.find("..");
  if (pos == std::string::npos) {
    int v = std::stoi(text);
    return {v, v};
  }
  return {std::stoi(text.substr(0, pos)), std::stoi(text.substr(pos + 2))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley-graph distance-balance toolkit"};
  app.require_subcommand(1);
  int jobs = cayb::default_jobs();
  app.add_option("-j,--jobs", jobs, "worker threads (>= 1)")
      ->check(CLI::PositiveNumber);

  // ---- profile ----
  auto* profile = app.add_subcommand(
      "profile", "balance profile of one Cayley graph");
  GroupSpec pspec;
  std::string pgens, pformat = "text", pout;
  bool permissive = false;
  int witness_cap = cayb::kDefaultWitnessCap;
  bool all_witnesses = false;
  auto* od = profile->add_option("--dihedral", pspec.dihedral_n,
                                 "dihedral group D_n (order 2n)");
  auto* oc = profile->add_option("--cyclic", pspec.cyclic_n,
                                 "cyclic group Z_n");
  auto* op = profile->add_option("--perm", pspec.perm_gens,
                                 "permutation group from cycle generators");
  auto* ot = profile->add_option("--table", pspec.table_file,
                                 "table-backed group from file");
  od->excludes(oc)->excludes(op)->excludes(ot);
  oc->excludes(op)->excludes(ot);
  op->excludes(ot);
  profile->add_option("--gens", pgens,
                      "generating set (defaults to --perm generators)");
  profile->add_option("--format", pformat, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  profile->add_option("--out", pout, "write output to file");
  profile->add_flag("--permissive", permissive,
                    "accept non-generating sets (disconnected graph)");
  profile->add_option("--witness-cap", witness_cap,
                      "max unbalanced witnesses kept per ell");
  profile->add_flag("--all-witnesses", all_witnesses,
                    "keep every unbalanced witness");

  // ---- verify ----
  auto* verify = app.add_subcommand(
      "verify", "machine-check the lemmas, theorems and examples");
  cayb::VerifyOptions vopts;
  std::string vformat = "text", vout, vonly;
  bool timings = false;
  verify->add_option("--max-n", vopts.max_n, "sweep bound (default 64)")
      ->check(CLI::Range(3, 4096));
  verify->add_option("--min-n", vopts.min_n, "sweep start (default 3)");
  verify->add_option("--iso-max-n", vopts.iso_max_n,
                     "isomorphism sweep bound (default 40)");
  verify->add_option("--lemma-max-n", vopts.lemma_max_n,
                     "identity sweep bound (default 128)");
  verify->add_option("--abelian-n", vopts.abelian_max_n,
                     "circulant sample bound (default 40)");
  verify->add_option("--samples", vopts.abelian_samples,
                     "circulant sample count (default 50)");
  verify->add_option("--seed", vopts.abelian_seed, "circulant sample seed");
  verify->add_option("--only", vonly, "comma-separated check names");
  verify->add_option("--format", vformat, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", vout, "write output to file");
  verify->add_flag("--timings", timings,
                   "include elapsed times (breaks byte-identical reruns)");

  // ---- census ----
  auto* census_cmd = app.add_subcommand(
      "census", "enumerate a generating-set family and tabulate verdicts");
  std::string cfamily, crange = "3..12", cdedupe = "none", cformat = "csv",
              cout_path;
  int cmax_size = 3;
  census_cmd->add_option("--family", cfamily, "s1|s2|half|refl3|general")
      ->required()
      ->check(CLI::IsMember({"s1", "s2", "half", "refl3", "general"}));
  census_cmd->add_option("--n", crange, "n range, e.g. 4..20");
  census_cmd->add_option("--max-size", cmax_size,
                         "set size bound for --family general");
  census_cmd->add_option("--dedupe", cdedupe, "none|shift")
      ->check(CLI::IsMember({"none", "shift"}));
  census_cmd->add_option("--format", cformat, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  census_cmd->add_option("--out", cout_path, "write output to file");

  // ---- examples ----
  auto* examples = app.add_subcommand(
      "examples", "profiles of the three named fixtures (D_9, A_4, S_4)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*profile) {
      if (pspec.dihedral_n == 0 && pspec.cyclic_n == 0 &&
          pspec.perm_gens.empty() && pspec.table_file.empty())
        throw cayb::ParameterError(
            "one of --dihedral/--cyclic/--perm/--table is required");
      if (pgens.empty() && pspec.perm_gens.empty())
        throw cayb::ParameterError("--gens is required");
      auto [group, gen_idx] = resolve_group(pspec, pgens);
      cayb::GeneratingSet s =
          cayb::validate_generating_set(group, gen_idx, !permissive);
      cayb::CayleyGraph graph(group, s);
      if (!graph.connected()) {
        std::cerr << "graph is disconnected (S generates a subgroup of order "
                  << s.subgroup_order << "); no balance profile\n";
        return kExitOk;
      }
      cayb::DistanceMatrix d = cayb::all_pairs(graph, jobs);
      int cap = all_witnesses ? cayb::kUnlimitedWitnesses : witness_cap;
      cayb::BalanceProfile prof = cayb::full_profile(d, cap, jobs);
      std::string text;
      if (pformat == "json")
        text = cayb::profile_to_json(graph, prof).dump(2) + "\n";
      else if (pformat == "csv")
        text = cayb::profile_to_csv(prof);
      else
        text = cayb::profile_to_text(graph, prof);
      write_output(text, pout);
      return kExitOk;
    }

    if (*verify) {
      vopts.jobs = jobs;
      if (!vonly.empty()) {
        std::stringstream ss(vonly);
        std::string item;
        while (std::getline(ss, item, ',')) vopts.only.push_back(item);
      }
      auto reports = cayb::run_all_checks(vopts);
      bool all_pass = true;
      for (const auto& r : reports) all_pass = all_pass && r.pass();
      std::string text;
      if (vformat == "json") {
        nlohmann::json j;
        j["schema_version"] = 1;
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports)
          arr.push_back(cayb::report_to_json(r, timings));
        j["reports"] = arr;
        j["pass"] = all_pass;
        text = j.dump(2) + "\n";
      } else {
        text = cayb::render_report_table(reports);
        if (timings) {
          std::ostringstream os;
          for (const auto& r : reports)
            os << r.name << ": " << r.elapsed_s << " s\n";
          text += os.str();
        }
      }
      write_output(text, vout);
      return all_pass ? kExitOk : kExitVerifyFailure;
    }

    if (*census_cmd) {
      cayb::FamilySpec spec;
      spec.family = cayb::family_from_name(cfamily);
      std::tie(spec.n_min, spec.n_max) = parse_range(crange);
      spec.general_max_size = cmax_size;
      spec.dedupe = cdedupe == "shift" ? cayb::DedupeMode::Shift
                                       : cayb::DedupeMode::None;
      auto rows = cayb::census(spec, jobs);
      std::string text = cformat == "json"
                             ? cayb::census_to_json(rows).dump(2) + "\n"
                             : cayb::census_to_csv(rows);
      write_output(text, cout_path);
      return kExitOk;
    }

    if (*examples) {
      cayb::SweepReport rep = cayb::check_named_examples();
      std::cout << cayb::render_report_table({rep});
      return rep.pass() ? kExitOk : kExitVerifyFailure;
    }
  } catch (const cayb::SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const cayb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
