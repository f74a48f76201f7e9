#include "finring/suite.hpp"

#include <atomic>
#include <cmath>
#include <set>
#include <sstream>
#include <thread>

#include "finring/expr.hpp"

namespace finring {

std::vector<std::string> default_catalog() {
  std::vector<std::string> base;
  for (int n = 2; n <= 12; ++n) base.push_back("Z/" + std::to_string(n));
  // GF(q) for prime q is Z/q; only the non-prime fields are new rings.
  const std::vector<std::string> fields{"GF(4)", "GF(8)", "GF(9)"};

  std::vector<std::string> out;
  std::set<std::string> seen;
  auto push = [&](const std::string& s) {
    if (seen.insert(s).second) out.push_back(s);
  };
  for (const char* q : {"GF(2)", "GF(3)", "GF(4)", "GF(5)", "GF(7)", "GF(8)", "GF(9)"}) push(q);
  for (const auto& s : base) push(s);

  std::vector<std::string> factors = base;
  factors.insert(factors.end(), fields.begin(), fields.end());
  std::vector<std::size_t> orders;
  for (const auto& f : factors) orders.push_back(build_ring(*parse_ring_expr(f))->order());
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i; j < factors.size(); ++j)
      if (orders[i] * orders[j] <= 36) push(factors[i] + " x " + factors[j]);

  for (std::size_t i = 0; i < factors.size(); ++i) {
    RingPtr r = build_ring(*parse_ring_expr(factors[i]));
    if (orders[i] * orders[i] <= 64) push("Id(" + factors[i] + "; 0)");
    for (const Ideal& m : max_spectrum(r)) {
      const std::size_t residue = orders[i] / m.size();
      if (orders[i] * residue > 64) continue;
      std::string gens;
      for (std::size_t g = 0; g < m.generators.size(); ++g) gens += (g ? "," : "") + std::to_string(m.generators[g]);
      push("Id(" + factors[i] + "; " + gens + ")");
    }
  }
  return out;
}

const std::vector<std::string>& verifier_names() {
  static const std::vector<std::string> names{
      "infrastructure", "unit-criterion", "diagonal-theorem", "idealization-results", "vnr-trichotomy",
      "vnr-structure",  "conductor-prime", "crucial-ideal",   "minimality-oracle"};
  return names;
}

std::vector<VerdictReport> verify_entry(const std::string& expr, const VerifyOptions& opts) {
  std::vector<VerdictReport> out;
  auto stamp_all = [&](Verdict v, const std::string& key, const std::string& msg) {
    for (const auto& name : verifier_names()) {
      VerdictReport rep;
      rep.theorem = name;
      rep.verdict = v;
      if (v == Verdict::Fail) rep.counterexample = Json{{key, msg}};
      else rep.witnesses[key] = msg;
      out.push_back(std::move(rep));
    }
  };

  RingPtr r;
  try {
    r = build_ring(*parse_ring_expr(expr), opts.build);
  } catch (const CapExceeded& e) {
    stamp_all(Verdict::Skipped, "skipped", e.what());
  } catch (const Error& e) {
    stamp_all(Verdict::Fail, "error", e.what());
  }
  if (r) {
    out.push_back(verify_infrastructure(r, opts));
    out.push_back(verify_unit_criterion(r, opts));
    out.push_back(verify_diagonal_theorem(r, opts));
    out.push_back(verify_idealization_results(r, opts));
    for (auto& rep : verify_vnr_results(r, opts)) out.push_back(std::move(rep));
    for (auto& rep : verify_extension_catalog(r, opts)) out.push_back(std::move(rep));
    out.push_back(verify_minimality_oracle(r, opts));
  }
  for (auto& rep : out) rep.entry = expr;
  return out;
}

SuiteResult run_suite(const SuiteConfig& config) {
  if (config.max_order == 0 || config.iso_cap == 0) throw PreconditionError("caps must be positive");
  const std::vector<std::string> catalog = config.catalog.empty() ? default_catalog() : config.catalog;
  if (catalog.empty()) throw PreconditionError("catalog is empty");
  for (const auto& expr : catalog) parse_ring_expr(expr);

  VerifyOptions opts;
  opts.build.max_order = config.max_order;
  opts.build.seed = config.seed;
  opts.iso_cap = config.iso_cap;

  std::vector<std::vector<VerdictReport>> results(catalog.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < catalog.size();) results[i] = verify_entry(catalog[i], opts);
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(config.jobs, catalog.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SuiteResult result;
  Json entries = Json::array();
  for (const auto& reports : results)
    for (const VerdictReport& rep : reports) {
      switch (rep.verdict) {
        case Verdict::Pass:
          ++result.passed;
          break;
        case Verdict::Fail:
          ++result.failed;
          break;
        case Verdict::Skipped:
          ++result.skipped;
          break;
      }
      Json witnesses = rep.witnesses;
      if (rep.instances) witnesses["instances"] = rep.instances;
      entries.push_back(Json{{"expr", rep.entry},
                             {"theorem", rep.theorem},
                             {"verdict", to_string(rep.verdict)},
                             {"witnesses", std::move(witnesses)},
                             {"counterexample", rep.counterexample},
                             {"millis", config.timings ? std::round(rep.millis * 1000.0) / 1000.0 : 0.0}});
    }

  result.report = Json{{"engine_version", kEngineVersion},
                       {"config_echo",
                        Json{{"max_order", config.max_order},
                             {"iso_cap", config.iso_cap},
                             {"seed", config.seed},
                             {"timings", config.timings},
                             {"catalog", catalog}}},
                       {"entries", std::move(entries)}};
  return result;
}

std::string report_text(const Json& report) { return report.dump(2) + "\n"; }

std::vector<std::string> parse_catalog(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') return Json::parse(text).get<std::vector<std::string>>();
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(b, e - b + 1));
  }
  return out;
}

}  // namespace finring
