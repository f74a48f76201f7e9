// finring: command-line front end for the finite-ring engine.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "finring/expr.hpp"
#include "finring/lattice.hpp"
#include "finring/local.hpp"
#include "finring/suite.hpp"

using namespace finring;

namespace {

struct ExtArgs {
  std::string expr;
  std::string kind;  // empty: embed when --into is given, diag otherwise
  std::optional<Elem> a;
  std::optional<Elem> b;
  std::string into;
};

struct Built {
  Extension ext;
  Json description;
  RingPtr base;
};

Json mask_json(const Mask& m) { return Json(m.members()); }

void add_ext_options(CLI::App* cmd, ExtArgs& args) {
  cmd->add_option("expr", args.expr, "base ring R")->required();
  cmd->add_option("--kind", args.kind, "diag: R x R, id: R(+)R, embed: R into --into")
      ->check(CLI::IsMember({"diag", "id", "embed"}));
  cmd->add_option("--a", args.a, "first coordinate of the adjoined element");
  cmd->add_option("--b", args.b, "second coordinate of the adjoined element");
  cmd->add_option("--into", args.into, "target ring for --kind embed");
}

// diag/id: with --a/--b the extension is R[(a,b)] inside the ambient ring,
// otherwise R itself inside it.
Built build_extension(ExtArgs args, const BuildOptions& opts) {
  if (args.kind.empty()) args.kind = args.into.empty() ? "diag" : "embed";
  RingPtr r = build_ring(*parse_ring_expr(args.expr), opts);
  Json d{{"base", args.expr}, {"kind", args.kind}};
  if (args.kind == "embed") {
    if (args.into.empty()) throw PreconditionError("--kind embed needs --into");
    RingPtr t = build_ring(*parse_ring_expr(args.into), opts);
    auto phi = find_embedding(r, t);
    if (!phi) throw PreconditionError(args.expr + " does not embed in " + args.into);
    d["into"] = args.into;
    d["embedding"] = phi->images;
    return {make_extension(std::move(*phi)), d, r};
  }
  if (args.a.has_value() != args.b.has_value()) throw PreconditionError("give both --a and --b or neither");
  const Elem a = args.a.value_or(0), b = args.b.value_or(0);
  Extension whole = [&] {
    if (args.kind == "diag") return diagonal_extension(r, a, b, opts).diagonal;
    return idealization_extension(module_r(r), opts).ext;
  }();
  if (!args.a) return {whole, d, r};
  d["a"] = a;
  d["b"] = b;
  Mask sub;
  if (args.kind == "diag") {
    sub = diagonal_extension(r, a, b, opts).subring.members;
  } else {
    IdealizationExtension ie = idealization_extension(module_r(r), opts);
    r->check_element(b);
    const Elem g[] = {ie.parts.encode(a, ie.parts.coset_of[b])};
    sub = closure(*ie.parts.ring, ie.ext.image, g);
  }
  return {subring_extension(whole.big, sub, opts), d, r};
}

Json ring_info(const RingPtr& r, const BuildOptions& opts) {
  const FiniteRing& ring = *r;
  const RingPredicates p = ring_predicates(r);
  Json maximal = Json::array();
  for (const Ideal& m : max_spectrum(r)) maximal.push_back(Json{{"members", mask_json(m.members)}, {"generators", m.generators}});
  Json factors = Json::array();
  for (const LocalFactor& f : local_decomposition(r, opts).factors)
    factors.push_back(Json{{"idempotent", f.idempotent}, {"order", f.corner.ring->order()}});
  return Json{{"order", ring.order()},
              {"zero", ring.zero()},
              {"one", ring.one()},
              {"predicates", Json{{"field", p.is_field}, {"local", p.is_local}, {"reduced", p.is_reduced}, {"vnr", p.is_vnr}}},
              {"units", units(ring)},
              {"idempotents", idempotents(ring)},
              {"maximal_ideals", std::move(maximal)},
              {"local_factors", std::move(factors)}};
}

Json extension_summary(const Extension& ext) {
  Json j{{"small_order", ext.small->order()}, {"big_order", ext.big->order()}, {"image", mask_json(ext.image)}};
  if (!ext.is_proper()) {
    j["proper"] = false;
    return j;
  }
  j["proper"] = true;
  const auto witness = minimality_witness(*ext.big, ext.image);
  j["minimal"] = !witness.has_value();
  if (witness) {
    const Elem g[] = {*witness};
    j["intermediate_generator"] = *witness;
    j["intermediate_order"] = closure(*ext.big, ext.image, g).count();
  }
  return j;
}

int emit(const Json& j) {
  std::cout << j.dump(2) << "\n";
  return 0;
}

std::size_t env_max_order() {
  if (const char* v = std::getenv("FINRING_MAX_ORDER")) {
    try {
      std::size_t used = 0;
      const unsigned long n = std::stoul(v, &used);
      if (used == std::string(v).size() && n > 0) return n;
    } catch (const std::exception&) {
    }
    throw PreconditionError(std::string("FINRING_MAX_ORDER is not a positive integer: ") + v);
  }
  return kDefaultMaxOrder;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with finite commutative rings and their minimal extensions"};
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<std::size_t> max_order;
  std::uint64_t seed = kDefaultSeed;
  app.add_option("--max-order", max_order, "largest ring the engine will build (env FINRING_MAX_ORDER)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "seed for sampled axiom checks above order 64");

  auto* ring = app.add_subcommand("ring", "ring queries");
  ring->require_subcommand(1);
  std::string info_expr;
  auto* info = ring->add_subcommand("info", "order, predicates, units, idempotents, Max(R), local factors");
  info->add_option("expr", info_expr)->required();

  auto* ext = app.add_subcommand("ext", "extension queries");
  ext->require_subcommand(1);
  ExtArgs check_args, conductor_args, crucial_args, classify_args, lattice_args;
  auto* check = ext->add_subcommand("check", "proper / minimal, with an intermediate ring when not minimal");
  add_ext_options(check, check_args);
  auto* cond = ext->add_subcommand("conductor", "(R:T) in R and in T");
  add_ext_options(cond, conductor_args);
  auto* crucial = ext->add_subcommand("crucial", "crucial maximal ideal with its localization table");
  add_ext_options(crucial, crucial_args);

  auto* classify = app.add_subcommand("classify", "case label of minimal extensions of a VNR ring");
  add_ext_options(classify, classify_args);
  std::size_t iso_cap = 512;
  classify->add_option("--iso-cap", iso_cap, "largest big ring for isomorphism search")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "run every verifier over the catalog and write a JSON report");
  std::string catalog_file, out_file;
  SuiteConfig config;
  verify->add_option("--catalog", catalog_file, "JSON array or one expression per line")->check(CLI::ExistingFile);
  verify->add_option("--out", out_file, "report path (default stdout)");
  verify->add_option("--jobs", config.jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--iso-cap", config.iso_cap, "largest big ring for isomorphism search")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--timings", config.timings, "record wall-clock millis (reports stop being byte-stable)");

  auto* lattice = app.add_subcommand("lattice", "subring lattice between R and T as DOT (|T| <= 16)");
  add_ext_options(lattice, lattice_args);
  std::string dot_file;
  lattice->add_option("--dot", dot_file, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    BuildOptions opts;
    opts.max_order = max_order ? *max_order : env_max_order();
    opts.seed = seed;

    if (info->parsed()) {
      Json j{{"expr", info_expr}};
      j.update(ring_info(build_ring(*parse_ring_expr(info_expr), opts), opts));
      return emit(j);
    }
    if (check->parsed()) {
      Built b = build_extension(check_args, opts);
      Json j{{"extension", b.description}};
      j.update(extension_summary(b.ext));
      if (check_args.a && b.description["kind"] != "embed") {
        RingPtr r = b.base;
        const Elem diff = b.description["kind"] == "diag" ? r->sub(*check_args.a, *check_args.b) : *check_args.b;
        const Ideal i = ideal_generated(r, {diff});
        j["criterion"] = Json{{"generator", diff}, {"ideal", mask_json(i.members)}, {"maximal", is_maximal(i)}};
      }
      return emit(j);
    }
    if (cond->parsed()) {
      Built b = build_extension(conductor_args, opts);
      const Conductor c = conductor(b.ext);
      return emit(Json{{"extension", b.description},
                       {"conductor_in_R", mask_json(c.in_small.members)},
                       {"conductor_in_T", mask_json(c.in_big)},
                       {"prime", c.in_small.is_proper() && is_prime(c.in_small)},
                       {"maximal", c.in_small.is_proper() && is_maximal(c.in_small)}});
    }
    if (crucial->parsed()) {
      Built b = build_extension(crucial_args, opts);
      VerdictReport rep = verify_crucial_ideal(b.ext, crucial_args.expr, opts);
      emit(Json{{"extension", b.description},
                {"verdict", to_string(rep.verdict)},
                {"witnesses", rep.witnesses},
                {"counterexample", rep.counterexample}});
      return rep.verdict == Verdict::Fail ? 1 : 0;
    }
    if (classify->parsed()) {
      std::vector<std::pair<Json, Extension>> targets;
      if (!classify_args.kind.empty() || classify_args.a || !classify_args.into.empty()) {
        Built b = build_extension(classify_args, opts);
        targets.emplace_back(b.description, b.ext);
      } else {
        RingPtr r = build_ring(*parse_ring_expr(classify_args.expr), opts);
        std::size_t skipped = 0;
        for (NamedExtension& c : vnr_candidates(r, opts, &skipped)) targets.emplace_back(Json(c.name), c.ext);
        if (skipped) std::cerr << skipped << " candidate(s) over the order cap were skipped\n";
      }
      Json out = Json::array();
      bool failed = false;
      for (auto& [desc, e] : targets) {
        Classification c = classify_vnr_extension(e, iso_cap, opts);
        Json row{{"extension", desc}, {"big_order", e.big->order()}};
        row.update(c.report.witnesses);
        row["verdict"] = to_string(c.report.verdict);
        if (c.iso) row["iso"] = c.iso->images;
        failed |= c.report.verdict == Verdict::Fail;
        out.push_back(std::move(row));
      }
      emit(out);
      return failed ? 1 : 0;
    }
    if (verify->parsed()) {
      config.max_order = opts.max_order;
      config.seed = seed;
      if (!catalog_file.empty()) {
        std::ifstream in(catalog_file);
        std::stringstream buf;
        buf << in.rdbuf();
        config.catalog = parse_catalog(buf.str());
        if (config.catalog.empty()) throw PreconditionError("catalog file lists no rings");
      }
      SuiteResult result = run_suite(config);
      const std::string text = report_text(result.report);
      if (out_file.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_file, std::ios::binary);
        out << text;
        if (!out) throw Error("cannot write " + out_file);
      }
      std::cerr << "verify: " << result.passed << " passed, " << result.failed << " failed, " << result.skipped
                << " skipped\n";
      return result.exit_code();
    }
    if (lattice->parsed()) {
      Built b = build_extension(lattice_args, opts);
      const std::string dot = export_lattice(b.ext, lattice_args.expr);
      if (dot_file.empty()) {
        std::cout << dot;
      } else {
        std::ofstream out(dot_file);
        out << dot;
        if (!out) throw Error("cannot write " + dot_file);
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
