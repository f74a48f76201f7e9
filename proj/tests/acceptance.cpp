// Acceptance run: drives the CLI over the default catalog and prints one
// PASS/FAIL line per criterion. Usage: acceptance <path-to-finring-cli>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <unistd.h>

#include "finring/expr.hpp"
#include "finring/theorems.hpp"
#include "finring/suite.hpp"

using namespace finring;
namespace fs = std::filesystem;

namespace {

// Extended runs raise the cap so that R x R and R(+)R exist for every
// non-idealization catalog ring (|R| <= 36).
constexpr std::size_t kExtendedCap = 1296;

struct Run {
  int exit_code = -1;
  std::string text;
  Json report;
  double seconds = 0;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int shell(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

Run run_verify(const std::string& cli, const fs::path& out, const std::string& flags) {
  Run run;
  const auto start = std::chrono::steady_clock::now();
  run.exit_code = shell(quote(cli) + " verify " + flags + " --out " + quote(out.string()));
  run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  run.text = slurp(out);
  try {
    run.report = Json::parse(run.text);
  } catch (const std::exception& e) {
    std::cerr << "unparseable report " << out << ": " << e.what() << "\n";
  }
  return run;
}

std::vector<Json> entries(const Json& report, const std::string& theorem) {
  std::vector<Json> out;
  if (!report.contains("entries")) return out;
  for (const Json& e : report["entries"])
    if (e["theorem"] == theorem) out.push_back(e);
  return out;
}

bool is_idealization_entry(const Json& e) { return e["expr"].get<std::string>().rfind("Id(", 0) == 0; }

std::size_t count_of(const Json& witnesses, const char* key) {
  return witnesses.contains(key) ? witnesses[key].get<std::size_t>() : 0;
}

struct Tally {
  std::size_t checked = 0;
  std::size_t instances = 0;
  std::vector<std::string> problems;

  void problem(const Json& e, const std::string& why) {
    if (problems.size() < 5) problems.push_back(e["expr"].get<std::string>() + ": " + why);
    else if (problems.size() == 5) problems.push_back("...");
  }
};

int failures = 0;

void criterion(int id, const std::string& title, const Tally& t, const std::string& detail) {
  const bool ok = t.problems.empty();
  failures += !ok;
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << ". " << title << " -- " << detail << "\n";
  for (const auto& p : t.problems) std::cout << "         " << p << "\n";
  std::cout.flush();
}

// Pair verifiers on the extended run: every non-idealization ring must be
// checked; idealizations may exceed the extended cap.
Tally pair_verifier(const Json& report, const std::string& theorem, const char* counter = nullptr) {
  Tally t;
  for (const Json& e : entries(report, theorem)) {
    const std::string verdict = e["verdict"];
    if (verdict == "SKIPPED") {
      if (!is_idealization_entry(e)) t.problem(e, "skipped");
      continue;
    }
    ++t.checked;
    t.instances += count_of(e["witnesses"], "pairs");
    if (counter) {
      if (verdict == "FAIL" && (e["counterexample"].contains("error") || count_of(e["witnesses"], counter) > 0))
        t.problem(e, e["counterexample"].dump());
    } else if (verdict != "PASS") {
      t.problem(e, e["counterexample"].dump());
    }
  }
  if (t.checked == 0) t.problems.push_back("no ring checked");
  return t;
}

// Re-validates every emitted ramified-case isomorphism against a fresh build of
// the candidate and of R(+)R/m.
void revalidate_isos(const Json& report, Tally& t, std::size_t& validated) {
  for (const Json& e : entries(report, "vnr-structure")) {
    if (e["verdict"] != "PASS" || !e["witnesses"].contains("extensions")) continue;
    RingPtr r = build_ring(*parse_ring_expr(e["expr"].get<std::string>()));
    std::map<std::string, NamedExtension> by_name;
    for (NamedExtension& c : vnr_candidates(r, {})) by_name.emplace(c.name, std::move(c));
    for (const Json& row : e["witnesses"]["extensions"]) {
      if (row["case"] != "RAMIFIED") continue;
      if (!row.contains("iso")) {
        t.problem(e, "no isomorphism emitted for " + row["extension"].get<std::string>());
        continue;
      }
      const NamedExtension& cand = by_name.at(row["extension"]);
      const Ideal m = *cand.target;
      IdealizationExtension model = idealization_extension(CyclicModuleSpec{r, m});
      try {
        RingHom iso = make_hom(cand.ext.big, model.ext.big, row["iso"].get<std::vector<Elem>>());
        if (!iso.is_injective() || !iso.is_surjective()) throw Error("not bijective");
        for (Elem x = 0; x < r->order(); ++x)
          if (iso(cand.ext.embed(x)) != model.ext.embed(x)) throw Error("does not fix R");
        ++validated;
      } catch (const Error& err) {
        t.problem(e, row["extension"].get<std::string>() + ": " + err.what());
      }
    }
  }
}

std::size_t dot_nodes(const std::string& dot) {
  std::size_t n = 0;
  for (std::size_t pos = 0; (pos = dot.find("[label=", pos)) != std::string::npos; ++pos) ++n;
  return n;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <finring-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const fs::path dir = fs::temp_directory_path() / ("finring_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);

  const Run serial = run_verify(cli, dir / "default_jobs1.json", "--jobs 1");
  const Run parallel = run_verify(cli, dir / "default_jobs2.json", "--jobs 2");
  const Run extended =
      run_verify(cli, dir / "extended.json", "--jobs 2 --max-order " + std::to_string(kExtendedCap));
  std::cout << "default catalog: " << serial.report["config_echo"]["catalog"].size() << " rings, "
            << serial.report["entries"].size() << " verdicts, " << serial.seconds << " s (jobs 1), "
            << parallel.seconds << " s (jobs 2); extended cap " << kExtendedCap << ": " << extended.seconds
            << " s\n";

  auto no_fail_in_default = [&](Tally& t, const std::string& theorem) {
    for (const Json& e : entries(serial.report, theorem))
      if (e["verdict"] == "FAIL") t.problem(e, "default run: " + e["counterexample"].dump());
  };

  {
    Tally t = pair_verifier(extended.report, "diagonal-theorem", "exactness_failures");
    no_fail_in_default(t, "diagonal-theorem");
    criterion(1, "diagonal closure equals {(c,d) : c-d in <a-b>} with order |R||<a-b>|", t,
              std::to_string(t.checked) + " rings, " + std::to_string(t.instances) + " pairs");
  }
  {
    Tally t = pair_verifier(extended.report, "diagonal-theorem", "biconditional_failures");
    no_fail_in_default(t, "diagonal-theorem");
    criterion(2, "D(R)[(a,b)] maximal in R x R <=> <a-b> maximal", t,
              std::to_string(t.checked) + " rings, " + std::to_string(t.instances) + " pairs");
  }
  {
    Tally t = pair_verifier(extended.report, "unit-criterion");
    no_fail_in_default(t, "unit-criterion");
    criterion(3, "D(R)[(r,s)] = R x R <=> r-s a unit", t,
              std::to_string(t.checked) + " rings, " + std::to_string(t.instances) + " pairs");
  }
  {
    Tally t = pair_verifier(extended.report, "idealization-results");
    no_fail_in_default(t, "idealization-results");
    criterion(4, "R[(a,b)] = R(+)<b>, minimality criteria in R(+)R", t,
              std::to_string(t.checked) + " rings, " + std::to_string(t.instances) + " pairs");
  }
  {
    Tally t;
    std::size_t candidates = 0;
    for (const Json& e : entries(serial.report, "vnr-trichotomy")) {
      const Json& w = e["witnesses"];
      if (e["verdict"] == "SKIPPED") {
        if (w.value("skipped", "") != "ring is not von Neumann regular") t.problem(e, "skipped: " + w.dump());
        continue;
      }
      ++t.checked;
      if (e["verdict"] != "PASS") t.problem(e, e["counterexample"].dump());
      if (count_of(w, "skipped_candidates")) t.problem(e, "candidates skipped over the cap");
      for (const Json& row : w["candidates"]) {
        ++candidates;
        if (!row.contains("case")) t.problem(e, "unlabeled " + row.dump());
      }
    }
    if (t.checked == 0) t.problems.push_back("no VNR ring checked");
    criterion(5, "VNR trichotomy: exactly one case, m = (R:T) maximal", t,
              std::to_string(t.checked) + " VNR rings, " + std::to_string(candidates) + " candidates");
  }
  {
    Tally t;
    std::size_t vnr_big = 0, isos = 0, validated = 0;
    for (const Json& e : entries(serial.report, "vnr-structure")) {
      if (e["verdict"] == "SKIPPED") {
        if (e["witnesses"].value("skipped", "") != "ring is not von Neumann regular")
          t.problem(e, "skipped: " + e["witnesses"].dump());
        continue;
      }
      ++t.checked;
      if (e["verdict"] != "PASS") t.problem(e, e["counterexample"].dump());
      for (const Json& row : e["witnesses"]["extensions"]) {
        const std::string structure = row["structure"];
        if (row["case"] == "RAMIFIED") {
          isos += structure == "isomorphic to R(+)R/m";
          if (structure != "isomorphic to R(+)R/m") t.problem(e, row.dump());
        } else {
          vnr_big += structure == "big ring VNR";
          if (structure != "big ring VNR") t.problem(e, row.dump());
        }
      }
    }
    revalidate_isos(serial.report, t, validated);
    if (validated != isos) t.problems.push_back("re-validated " + std::to_string(validated) + " of " + std::to_string(isos));
    criterion(6, "ramified big ring isomorphic to R(+)R/m, others VNR", t,
              std::to_string(isos) + " isomorphisms emitted and re-validated, " + std::to_string(vnr_big) +
                  " VNR big rings");
  }
  {
    Tally t;
    std::size_t extensions = 0;
    for (const Run* run : {&serial, &extended})
      for (const char* theorem : {"conductor-prime", "crucial-ideal"})
        for (const Json& e : entries(run->report, theorem)) {
          if (e["verdict"] != "PASS") t.problem(e, std::string(theorem) + ": " + e["counterexample"].dump());
          if (run == &extended && std::string(theorem) == "crucial-ideal")
            extensions += e["witnesses"]["extensions"].size();
        }
    t.checked = extensions;
    if (extensions == 0) t.problems.push_back("no extension checked");
    criterion(7, "(R:T) prime; unique crucial J = (R:T), lying under a maximal ideal of T", t,
              std::to_string(extensions) + " catalog minimal extensions (extended run)");
  }
  {
    Tally t;
    for (const Json& e : entries(serial.report, "minimality-oracle")) {
      if (e["verdict"] == "SKIPPED") {
        if (e["witnesses"].value("skipped", "") != "no extension with |T| <= 16")
          t.problem(e, "skipped: " + e["witnesses"].dump());
        continue;
      }
      if (e["verdict"] != "PASS") t.problem(e, e["counterexample"].dump());
      t.instances += count_of(e["witnesses"], "extensions_checked");
      ++t.checked;
    }
    // Lattice export through the CLI.
    struct Case {
      std::string args;
      std::size_t nodes;
      std::string must_contain;
    };
    const std::vector<Case> cases{{"'Z/2'", 2, "order 4"},
                                  {"'Z/4'", 3, "order 8"},
                                  {"'Z/4' --a 2 --b 0", 2, "order 8"},
                                  {"'Z/2' --into 'GF(16)'", 3, "order 4"},
                                  {"'Z/2' --into 'GF(4)'", 2, "order 4"}};
    for (const Case& c : cases) {
      const fs::path dot = dir / "lattice.dot";
      fs::remove(dot);
      const int code = shell(quote(cli) + " lattice " + c.args + " --dot " + quote(dot.string()));
      const std::string text = slurp(dot);
      if (code != 0 || dot_nodes(text) != c.nodes || text.find(c.must_contain) == std::string::npos)
        t.problems.push_back("lattice " + c.args + ": exit " + std::to_string(code) + ", " +
                             std::to_string(dot_nodes(text)) + " nodes");
    }
    if (t.instances == 0) t.problems.push_back("no extension checked");
    criterion(8, "adjunction minimality agrees with the exhaustive oracle for |T| <= 16", t,
              std::to_string(t.instances) + " extensions over " + std::to_string(t.checked) + " rings, " +
                  std::to_string(cases.size()) + " lattice exports");
  }
  {
    Tally t;
    std::size_t exhaustive = 0;
    for (const Json& e : entries(serial.report, "infrastructure")) {
      ++t.checked;
      if (e["verdict"] != "PASS") t.problem(e, e["counterexample"].dump());
      const Json& w = e["witnesses"];
      if (!w.contains("order")) {
        t.problem(e, "no witnesses");
        continue;
      }
      const bool small = w["order"].get<std::size_t>() <= kExhaustiveAxiomOrder;
      exhaustive += small;
      if (small != (w["axiom_check"] == "exhaustive")) t.problem(e, "axiom check mode");
      if (w["local_factors"].size() != w["maximal_ideals"].get<std::size_t>()) t.problem(e, "factor count");
    }
    criterion(9, "axioms, local corners, decomposition and tq(R) = R", t,
              std::to_string(t.checked) + " rings, " + std::to_string(exhaustive) + " with exhaustive axiom checks");
  }
  {
    Tally t;
    const Json fake{{"expr", "verify"}};
    if (serial.exit_code != 0) t.problem(fake, "jobs 1 exit code " + std::to_string(serial.exit_code));
    if (parallel.exit_code != 0) t.problem(fake, "jobs 2 exit code " + std::to_string(parallel.exit_code));
    if (extended.exit_code != 0) t.problem(fake, "extended exit code " + std::to_string(extended.exit_code));
    if (serial.text.empty() || serial.text != parallel.text) t.problem(fake, "reports differ between --jobs 1 and 2");
    criterion(10, "deterministic reports and exit code 0 on the default catalog", t,
              std::to_string(serial.text.size()) + " identical bytes");
  }

  fs::remove_all(dir);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures;
}
