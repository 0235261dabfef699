#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "amds/avg.hpp"
#include "amds/checks.hpp"
#include "amds/json_io.hpp"
#include "amds/mdsbuild.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace amds;

namespace {

struct RunConfig {
  std::string type;
  int bound = 8;
  std::vector<int> qs;
  std::string out;
  std::string compare;
  int threads = 0;
  std::string suite = "all";
};

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

void validate(const RunConfig& c) {
  if (c.bound < 0) throw UsageError("--bound must be nonnegative");
  for (int q : c.qs) {
    if (!is_prime(q)) throw UsageError("q=" + std::to_string(q) + " rejected: q must be prime");
    if (q % 4 != 1) throw UsageError("q=" + std::to_string(q) + " rejected: q must be 1 mod 4");
  }
  if (c.threads < 0) throw UsageError("--threads must be nonnegative");
#ifdef _OPENMP
  if (c.threads > 0) omp_set_num_threads(c.threads);
#endif
}

DynkinType need_type(const RunConfig& c) {
  if (c.type.empty()) throw UsageError("--type is required");
  return parse_type(c.type);
}

// Table from --compare when given, else constructed from --type and --bound.
CoeffTable input_table(const RunConfig& c) {
  if (!c.compare.empty()) return table_from_json(parse_json_text(read_file(c.compare)));
  return compute_table(need_type(c), c.bound);
}

void emit(const RunConfig& c, const Json& j) {
  std::string text = dump_canonical(j);
  if (c.out.empty()) std::cout << text;
  else write_file(c.out, text);
}

int verdict(const char* what, bool ok) {
  std::cerr << what << ": " << (ok ? "pass" : "FAIL") << "\n";
  return ok ? 0 : 1;
}

int cmd_construct(const RunConfig& c) {
  CoeffTable tab = compute_table(need_type(c), c.bound);
  Json j = table_to_json(tab);
  emit(c, j);
  std::cerr << tab.type.name << ": " << tab.entries.size() << " nonzero coefficients up to total degree " << tab.bound
            << "\n";
  if (c.compare.empty()) return 0;
  bool same = read_file(c.compare) == dump_canonical(j);
  return verdict("compare", same);
}

int cmd_verify(const RunConfig& c) {
  bool ok = true;
  Json j = verify_report(input_table(c), ok);
  emit(c, j);
  for (const auto& w : j["warnings"]) std::cerr << "warning: " << w.get<std::string>() << "\n";
  return verdict("verify", ok);
}

int cmd_residue(const RunConfig& c) {
  bool ok = true;
  Json j = residue_report(input_table(c), ok);
  emit(c, j);
  for (const auto& e : j["classes"]) std::cerr << "S=" << e["S"].dump() << ": " << e["summary"].get<std::string>() << "\n";
  return verdict("residue", ok);
}

int cmd_brute(const RunConfig& c) {
  std::vector<int> qs = c.qs.empty() ? std::vector<int>{5} : c.qs;
  bool ok = true;
  Json j = brute_report(input_table(c), qs, ok);
  emit(c, j);
  for (const auto& r : j["runs"])
    std::cerr << "q=" << r["q"].get<int>() << ": " << r["rows"].size() << " indices, " << r["mismatches"].get<int>()
              << " mismatches\n";
  return verdict("brute", ok);
}

int cmd_avg(const RunConfig& c) {
  bool ok = true;
  emit(c, avg_report(need_type(c), c.bound, ok));
  return verdict("avg", ok);
}

int cmd_partitions(const RunConfig& c) {
  DynkinType t = need_type(c);
  if (!t.affine || t.family != Family::A) throw UsageError("partitions needs an A~_n type");
  bool ok = true;
  Json j = partitions_report(t.rank, c.bound, ok);
  emit(c, j);
  std::cerr << "a  partition_count  r_flat_diag\n";
  for (const auto& r : j["rows"])
    std::cerr << r["a"].get<int>() << "  " << r["partition_count"].dump() << "  " << r["r_flat_diag"].dump() << "\n";
  return verdict("partitions", ok);
}

int cmd_suite(const RunConfig& c) {
  std::vector<int> ids;
  if (c.suite == "axioms") ids = {1, 2, 10};
  else if (c.suite == "residue") ids = {4, 5, 6, 7};
  else if (c.suite == "brute") ids = {3};
  else if (c.suite == "avg") ids = {8};
  else if (c.suite == "partitions") ids = {9};
  else ids = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  bool ok = true;
  Json arr = Json::array();
  for (const CriterionResult& r : run_criteria(ids)) {
    std::cerr << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title << "\n";
    ok = ok && r.pass;
    arr.push_back(criterion_to_json(r));
  }
  Json j = Json::object();
  j["suite"] = c.suite;
  j["criteria"] = arr;
  j["pass"] = ok;
  emit(c, j);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"amds: quadratic multiple Dirichlet series over F_q(t) for simply-laced Weyl groups"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--type", cfg.type, "Type such as A3~, D4~, E6~, A2 or D4");
    sub->add_option("--bound", cfg.bound, "Total-degree bound");
    sub->add_option("--q", cfg.qs, "Field size for oracles (repeatable, prime, 1 mod 4)");
    sub->add_option("--out", cfg.out, "Output file (default stdout)");
    sub->add_option("--compare", cfg.compare, "Table JSON to read, or to compare against for construct");
    sub->add_option("--threads", cfg.threads, "OpenMP thread count");
  };
  struct Sub {
    const char* name;
    const char* help;
    int (*run)(const RunConfig&);
  };
  const std::vector<Sub> subs = {
      {"construct", "Build the coefficient table", cmd_construct},
      {"verify", "Check a table against the axioms", cmd_verify},
      {"residue", "Residues, factorizations and closed-form comparisons", cmd_residue},
      {"brute", "Compare the table with brute-force character sums", cmd_brute},
      {"avg", "Averaging construction and its cross-check", cmd_avg},
      {"partitions", "Partition counts against the flat residue", cmd_partitions},
      {"suite", "Run the acceptance criteria", cmd_suite},
  };
  std::vector<CLI::App*> apps;
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    common(sub);
    if (std::string(s.name) == "suite")
      sub->add_option("--suite", cfg.suite, "Criteria group")
          ->check(CLI::IsMember({"axioms", "residue", "brute", "avg", "partitions", "all"}));
    apps.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    validate(cfg);
    for (size_t k = 0; k < subs.size(); ++k)
      if (apps[k]->parsed()) return subs[k].run(cfg);
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
