#include "finring/theorems.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "finring/lattice.hpp"
#include "finring/local.hpp"

namespace finring {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::Skipped:
      return "SKIPPED";
  }
  return "?";
}

const char* to_string(CaseKind k) {
  switch (k) {
    case CaseKind::Inert:
      return "INERT";
    case CaseKind::Decomposed:
      return "DECOMPOSED";
    case CaseKind::Ramified:
      return "RAMIFIED";
  }
  return "?";
}

void VerdictReport::fail(Json detail) {
  if (verdict != Verdict::Fail) {
    verdict = Verdict::Fail;
    counterexample = std::move(detail);
  }
  witnesses["failures"] = witnesses.value("failures", 0) + 1;
}

namespace {

Json members_json(const Mask& m) { return Json(m.members()); }

std::string ideal_label(const Ideal& i) {
  std::string s = "<";
  for (std::size_t k = 0; k < i.generators.size(); ++k) s += (k ? "," : "") + std::to_string(i.generators[k]);
  return s + ">";
}

/// Runs `body` with timing and maps cap violations to SKIPPED and engine
/// errors to FAIL.
VerdictReport run_verifier(const std::string& theorem, const std::string& entry,
                           const std::function<void(VerdictReport&)>& body) {
  VerdictReport report;
  report.theorem = theorem;
  report.entry = entry;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(report);
  } catch (const CapExceeded& e) {
    report.verdict = Verdict::Skipped;
    report.counterexample = nullptr;
    report.witnesses = Json::object();
    report.witnesses["skipped"] = e.what();
  } catch (const Error& e) {
    report.fail(Json{{"error", e.what()}});
  }
  report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

struct MinimalityCache {
  const FiniteRing& t;
  std::map<Mask, bool> known;

  bool operator()(const Mask& sub) {
    if (sub.full()) return false;
    auto it = known.find(sub);
    if (it != known.end()) return it->second;
    const bool minimal = is_minimal_over(t, sub);
    known.emplace(sub, minimal);
    return minimal;
  }
};

struct MaximalityCache {
  std::map<Mask, bool> known;

  bool operator()(const Ideal& i) {
    auto it = known.find(i.members);
    if (it != known.end()) return it->second;
    const bool maximal = is_maximal(i);
    known.emplace(i.members, maximal);
    return maximal;
  }
};

}  // namespace

// Pair biconditionals -----------------------------------------------------------

VerdictReport verify_unit_criterion(const RingPtr& r, const VerifyOptions& opts) {
  return run_verifier("unit-criterion", r->provenance(), [&](VerdictReport& rep) {
    const FiniteRing& ring = *r;
    DiagonalExtension d = diagonal_extension(r, ring.zero(), ring.zero(), opts.build);
    const FiniteRing& t = *d.square.ring;
    std::vector<bool> unit(ring.order());
    for (Elem x = 0; x < ring.order(); ++x) unit[x] = element_profile(ring, x).is_unit;

    std::size_t generating = 0;
    for (Elem a = 0; a < ring.order(); ++a)
      for (Elem b = 0; b < ring.order(); ++b) {
        const Elem g[] = {d.square.encode(a, b)};
        const bool everything = closure(t, d.diagonal.image, g).full();
        generating += everything;
        ++rep.instances;
        if (everything != unit[ring.sub(a, b)])
          rep.fail(Json{{"a", a}, {"b", b}, {"generates", everything}, {"difference_is_unit", unit[ring.sub(a, b)]}});
      }
    rep.witnesses["pairs"] = rep.instances;
    rep.witnesses["generating_pairs"] = generating;
  });
}

VerdictReport verify_diagonal_theorem(const RingPtr& r, const VerifyOptions& opts) {
  return run_verifier("diagonal-theorem", r->provenance(), [&](VerdictReport& rep) {
    const FiniteRing& ring = *r;
    DiagonalExtension d = diagonal_extension(r, ring.zero(), ring.zero(), opts.build);
    const FiniteRing& t = *d.square.ring;
    MinimalityCache minimal{t, {}};
    MaximalityCache maximal;
    std::map<Mask, Json> classes;
    std::vector<Mask> class_order;
    std::size_t exactness_failures = 0, biconditional_failures = 0;

    for (Elem a = 0; a < ring.order(); ++a)
      for (Elem b = 0; b < ring.order(); ++b) {
        ++rep.instances;
        const Elem g[] = {d.square.encode(a, b)};
        const Mask sub = closure(t, d.diagonal.image, g);
        const Mask formula = diagonal_formula_mask(r, a, b);
        const Ideal diff = ideal_generated(r, {ring.sub(a, b)});
        Json where{{"a", a}, {"b", b}};
        if (sub != formula) {
          where["check"] = "closure equals {(c,d) : c-d in <a-b>}";
          rep.fail(where);
          ++exactness_failures;
          continue;
        }
        if (sub.count() != ring.order() * diff.size()) {
          where["check"] = "|closure| = |R| * |<a-b>|";
          rep.fail(where);
          ++exactness_failures;
          continue;
        }
        const bool is_min = minimal(sub);
        const bool is_max = maximal(diff);
        if (is_min != is_max) {
          where["check"] = "minimal <=> <a-b> maximal";
          where["minimal"] = is_min;
          where["maximal"] = is_max;
          rep.fail(where);
          ++biconditional_failures;
        }
        if (!classes.contains(diff.members)) {
          class_order.push_back(diff.members);
          classes[diff.members] = Json{{"difference", ring.sub(a, b)},
                                       {"ideal", members_json(diff.members)},
                                       {"subring_order", sub.count()},
                                       {"minimal", is_min}};
        }
      }
    Json list = Json::array();
    for (const Mask& m : class_order) list.push_back(classes[m]);
    rep.witnesses["pairs"] = rep.instances;
    rep.witnesses["classes"] = std::move(list);
    rep.witnesses["exactness_failures"] = exactness_failures;
    rep.witnesses["biconditional_failures"] = biconditional_failures;
  });
}

VerdictReport verify_idealization_results(const RingPtr& r, const VerifyOptions& opts) {
  return run_verifier("idealization-results", r->provenance(), [&](VerdictReport& rep) {
    const FiniteRing& ring = *r;
    IdealizationExtension ie = idealization_extension(module_r(r), opts.build);
    const FiniteRing& t = *ie.parts.ring;
    MinimalityCache minimal{t, {}};
    MaximalityCache maximal;

    for (Elem a = 0; a < ring.order(); ++a)
      for (Elem b = 0; b < ring.order(); ++b) {
        ++rep.instances;
        const Elem g[] = {ie.parts.encode(a, ie.parts.coset_of[b])};
        const Mask sub = closure(t, ie.ext.image, g);
        Json where{{"a", a}, {"b", b}};
        auto form = intermediate_idealization_form(ie, sub);
        if (const auto* bad = std::get_if<NotOfForm>(&form)) {
          where["check"] = "R[(a,b)] has the form R(+)I";
          where["witness"] = bad->witness;
          rep.fail(where);
          continue;
        }
        const Ideal principal = ideal_generated(r, {b});
        if (!(std::get<Ideal>(form) == principal)) {
          where["check"] = "R[(a,b)] = R(+)<b>";
          rep.fail(where);
          continue;
        }
        const bool is_min = minimal(sub);
        const bool is_max = maximal(principal);
        if (is_min != is_max) {
          where["check"] = "minimal <=> <b> maximal";
          where["minimal"] = is_min;
          where["maximal"] = is_max;
          rep.fail(where);
        }
      }

    Json maximal_subrings = Json::array();
    for (const Ideal& m : max_spectrum(r)) {
      Mask sub(t.order());
      for (Elem x = 0; x < t.order(); ++x)
        if (m.contains(ie.parts.module_reps[ie.parts.module_part(x)])) sub.set(x);
      ++rep.instances;
      if (!is_subring_mask(t, sub) || !is_minimal_over(t, sub))
        rep.fail(Json{{"check", "R(+)M is a maximal subring"}, {"M", members_json(m.members)}});
      maximal_subrings.push_back(Json{{"M", members_json(m.members)}, {"order", sub.count()}});
    }

    ++rep.instances;
    const bool field = ring_predicates(r).is_field;
    const bool base_minimal = is_minimal_over(t, ie.ext.image);
    if (field != base_minimal)
      rep.fail(Json{{"check", "R maximal in R(+)R <=> R is a field"}, {"field", field}, {"minimal", base_minimal}});

    rep.witnesses["pairs"] = ring.order() * ring.order();
    rep.witnesses["maximal_subrings_of_form_R(+)M"] = std::move(maximal_subrings);
    rep.witnesses["base_is_maximal_subring"] = base_minimal;
    rep.witnesses["general_maximal_subrings"] = "unresolved";
  });
}

// Extension catalog ---------------------------------------------------------------

std::vector<NamedExtension> vnr_candidates(const RingPtr& r, const BuildOptions& opts, std::size_t* skipped) {
  const FiniteRing& ring = *r;
  if (!ring_predicates(r).is_vnr) throw PreconditionError("VNR candidates need a von Neumann regular ring");
  const LocalDecomposition dec = local_decomposition(r, opts);

  std::vector<NamedExtension> out;
  auto attempt = [&](const std::function<void()>& build) {
    try {
      build();
    } catch (const CapExceeded&) {
      if (skipped) ++*skipped;
    }
  };

  for (const Ideal& m : max_spectrum(r)) {
    const LocalFactor* factor = nullptr;
    for (const LocalFactor& f : dec.factors)
      if (!m.contains(f.idempotent)) factor = &f;
    if (!factor) throw InternalError("no local factor off the maximal ideal");
    const Elem e = factor->idempotent;
    const Corner& residue = factor->corner;  // eR, isomorphic to R/m
    const Elem cof = ring.sub(ring.one(), e);
    std::optional<Corner> rest;
    if (cof != ring.zero()) rest = corner_ring(r, cof, opts);
    const std::string over = " over m=" + ideal_label(m);

    // Combine (1-e)R with a ring `top` receiving eR through `lift`.
    auto assemble = [&](const RingPtr& top, const std::vector<Elem>& lift) {
      std::vector<Elem> images(ring.order());
      if (!rest) {
        for (Elem x = 0; x < ring.order(); ++x) images[x] = lift[residue.hom(x)];
        return make_extension(make_hom(r, top, std::move(images)));
      }
      ProductRing p = product(rest->ring, top, opts);
      for (Elem x = 0; x < ring.order(); ++x) images[x] = p.encode(rest->hom(x), lift[residue.hom(x)]);
      return make_extension(make_hom(r, p.ring, std::move(images)));
    };

    attempt([&] {
      const FiniteRing& field = *residue.ring;
      const std::size_t p = element_profile(field, field.one()).additive_order;
      std::size_t k = 0;
      for (std::size_t q = field.order(); q > 1; q /= p) ++k;
      std::size_t big = 1;
      for (std::size_t i = 0; i < 2 * k; ++i) big *= p;
      const std::size_t total = (rest ? rest->ring->order() : 1) * big;
      if (total > opts.max_order) throw CapExceeded("inert candidate", total, opts.max_order);
      RingPtr k2 = galois_field(p, 2 * k, opts);
      auto phi = find_embedding(residue.ring, k2);
      if (!phi) throw InternalError("no embedding of a field into its quadratic extension");
      out.push_back(NamedExtension{"inert" + over, assemble(k2, phi->images), CaseKind::Inert, m});
    });
    attempt([&] {
      QuotientRing q = quotient(m, opts);
      ProductRing p = product(r, q.ring, opts);
      std::vector<Elem> images(ring.order());
      for (Elem x = 0; x < ring.order(); ++x) images[x] = p.encode(x, q.surjection(x));
      out.push_back(NamedExtension{"decomposed" + over, make_extension(make_hom(r, p.ring, std::move(images))),
                                   CaseKind::Decomposed, m});
    });
    attempt([&] {
      Idealization dual = idealization(module_r(residue.ring), opts);
      out.push_back(NamedExtension{"ramified" + over, assemble(dual.ring, dual.embed.images), CaseKind::Ramified, m});
    });
  }
  return out;
}

std::vector<NamedExtension> catalog_minimal_extensions(const RingPtr& r, const BuildOptions& opts,
                                                       std::size_t* skipped) {
  const FiniteRing& ring = *r;
  const bool vnr = ring_predicates(r).is_vnr;
  std::vector<NamedExtension> out;
  if (vnr) out = vnr_candidates(r, opts, skipped);
  auto attempt = [&](const std::function<void()>& build) {
    try {
      build();
    } catch (const CapExceeded&) {
      if (skipped) ++*skipped;
    }
  };

  const std::vector<Ideal> spectrum = max_spectrum(r);
  for (const Ideal& m : spectrum) {
    const std::string over = " over m=" + ideal_label(m);
    if (!vnr)
      attempt([&] {
        QuotientRing q = quotient(m, opts);
        ProductRing p = product(r, q.ring, opts);
        std::vector<Elem> images(ring.order());
        for (Elem x = 0; x < ring.order(); ++x) images[x] = p.encode(x, q.surjection(x));
        out.push_back(NamedExtension{"R in R x R/m" + over, make_extension(make_hom(r, p.ring, std::move(images))),
                                     std::nullopt, m});
      });
    attempt([&] {
      IdealizationExtension ie = idealization_extension(CyclicModuleSpec{r, m}, opts);
      out.push_back(NamedExtension{"R in R(+)R/m" + over, std::move(ie.ext), std::nullopt, m});
    });
  }

  attempt([&] {
    DiagonalExtension d = diagonal_extension(r, ring.zero(), ring.zero(), opts);
    const FiniteRing& t = *d.square.ring;
    std::set<Mask> seen;
    for (Elem a = 0; a < ring.order(); ++a) {
      const Elem g[] = {d.square.encode(a, ring.zero())};
      Mask sub = closure(t, d.diagonal.image, g);
      if (sub.full() || !seen.insert(sub).second || !is_minimal_over(t, sub)) continue;
      out.push_back(NamedExtension{"D(R)[(" + std::to_string(a) + ",0)] in R x R",
                                   subring_extension(d.square.ring, sub, opts), std::nullopt, std::nullopt});
    }
  });
  attempt([&] {
    IdealizationExtension ie = idealization_extension(module_r(r), opts);
    const FiniteRing& t = *ie.parts.ring;
    for (const Ideal& m : spectrum) {
      Mask sub(t.order());
      for (Elem x = 0; x < t.order(); ++x)
        if (m.contains(ie.parts.module_reps[ie.parts.module_part(x)])) sub.set(x);
      out.push_back(NamedExtension{"R(+)M in R(+)R, M=" + ideal_label(m), subring_extension(ie.parts.ring, sub, opts),
                                   std::nullopt, std::nullopt});
    }
  });
  return out;
}

// Classification --------------------------------------------------------------------

Classification classify_vnr_extension(const Extension& ext, std::size_t iso_cap, const BuildOptions& opts) {
  const FiniteRing& r = *ext.small;
  const FiniteRing& t = *ext.big;
  if (!ring_predicates(ext.small).is_vnr) throw PreconditionError("small ring is not von Neumann regular");
  if (!ext.is_proper() || !is_minimal(ext)) throw PreconditionError("extension is not minimal");

  Classification c;
  c.report.theorem = "vnr-classification";
  c.report.entry = t.provenance();
  c.report.instances = 1;
  c.m = conductor(ext).in_small;
  c.m_maximal = is_maximal(c.m);

  Mask m_in_t(t.order());
  for (Elem x : c.m.members.members()) m_in_t.set(ext.embed(x));
  const std::vector<Elem> m_members = c.m.members.members();

  // Inert: m is a maximal ideal of T and T/m is a minimal field extension of R/m.
  if (c.m_maximal && is_ideal_mask(t, m_in_t)) {
    const Ideal m_t = ideal_from_mask(ext.big, m_in_t);
    if (is_maximal(m_t)) {
      QuotientRing qr = quotient(c.m, opts);
      QuotientRing qt = quotient(m_t, opts);
      std::vector<Elem> images(qr.ring->order());
      for (Elem k = 0; k < images.size(); ++k) images[k] = qt.surjection(ext.embed(qr.representatives[k]));
      Extension residue = make_extension(make_hom(qr.ring, qt.ring, std::move(images)));
      c.inert = residue.is_proper() && is_minimal_field_extension(residue);
    }
  }

  // Decomposed and ramified share "T = R[q]" and "mq in R"; the least witness is kept.
  auto m_times_q_in_r = [&](Elem q) {
    for (Elem x : m_members)
      if (!ext.image.test(t.mul(ext.embed(x), q))) return false;
    return true;
  };
  auto generates = [&](Elem q) {
    const Elem g[] = {q};
    return closure(t, ext.image, g).full();
  };
  for (Elem q = 0; q < t.order(); ++q) {
    if (ext.image.test(q)) continue;
    const Elem q2 = t.mul(q, q);
    const bool idempotent_mod_m = m_in_t.test(t.sub(q2, q));
    const bool square_cube_in_r = ext.image.test(q2) && ext.image.test(t.mul(q2, q));
    if (!c.decomposed_q && idempotent_mod_m && m_times_q_in_r(q) && generates(q)) c.decomposed_q = q;
    if (!c.ramified_q && square_cube_in_r && m_times_q_in_r(q) && generates(q)) c.ramified_q = q;
    if (c.decomposed_q && c.ramified_q) break;
  }
  c.decomposed = c.decomposed_q.has_value();
  c.ramified = c.ramified_q.has_value();

  const int matched = int(c.inert) + int(c.decomposed) + int(c.ramified);
  if (matched == 1) {
    if (c.inert) c.label = CaseLabel{CaseKind::Inert, std::nullopt, c.m};
    if (c.decomposed) c.label = CaseLabel{CaseKind::Decomposed, c.decomposed_q, c.m};
    if (c.ramified) c.label = CaseLabel{CaseKind::Ramified, c.ramified_q, c.m};
  }

  Json& w = c.report.witnesses;
  w["m"] = members_json(c.m.members);
  w["m_maximal"] = c.m_maximal;
  w["cases"] = Json{{"inert", c.inert}, {"decomposed", c.decomposed}, {"ramified", c.ramified}};
  if (c.label) {
    w["case"] = to_string(c.label->kind);
    if (c.label->q) w["q"] = *c.label->q;
  }
  if (!c.m_maximal) c.report.fail(Json{{"check", "(R:T) is a maximal ideal"}});
  if (matched != 1) c.report.fail(Json{{"check", "exactly one of inert/decomposed/ramified holds"}, {"matched", matched}});

  // Shape of T: inert and decomposed give a VNR ring, ramified gives R(+)R/m.
  if (c.label && c.label->kind == CaseKind::Ramified) {
    try {
      IdealizationExtension model = idealization_extension(CyclicModuleSpec{ext.small, c.m}, opts);
      c.iso = algebra_isomorphic(ext, model.ext, iso_cap);
      c.structure = c.iso ? StructureCheck::IsoFound : StructureCheck::IsoMissing;
    } catch (const CapExceeded&) {
      c.structure = StructureCheck::SkippedIsoCap;
    }
  } else if (c.label) {
    c.structure = ring_predicates(ext.big).is_vnr ? StructureCheck::BigRingVnr : StructureCheck::BigRingNotVnr;
  }
  if (c.structure == StructureCheck::IsoMissing)
    c.report.fail(Json{{"check", "ramified big ring is isomorphic to R(+)R/m"}});
  if (c.structure == StructureCheck::BigRingNotVnr)
    c.report.fail(Json{{"check", "inert/decomposed big ring is von Neumann regular"}});
  (void)r;
  return c;
}

namespace {

const char* to_string(StructureCheck s) {
  switch (s) {
    case StructureCheck::BigRingVnr:
      return "big ring VNR";
    case StructureCheck::BigRingNotVnr:
      return "big ring not VNR";
    case StructureCheck::IsoFound:
      return "isomorphic to R(+)R/m";
    case StructureCheck::IsoMissing:
      return "not isomorphic to R(+)R/m";
    case StructureCheck::SkippedIsoCap:
      return "skipped (iso cap)";
  }
  return "?";
}

struct VnrRun {
  std::vector<NamedExtension> candidates;
  std::vector<std::optional<Classification>> results;
  std::vector<std::string> errors;
  std::size_t skipped = 0;
};

VnrRun run_vnr(const RingPtr& r, const VerifyOptions& opts) {
  VnrRun run;
  run.candidates = vnr_candidates(r, opts.build, &run.skipped);
  for (const NamedExtension& c : run.candidates) {
    try {
      run.results.push_back(classify_vnr_extension(c.ext, opts.iso_cap, opts.build));
      run.errors.emplace_back();
    } catch (const PreconditionError& e) {
      run.results.push_back(std::nullopt);
      run.errors.emplace_back(e.what());
    }
  }
  return run;
}

void fill_trichotomy(VerdictReport& rep, const VnrRun& run) {
  Json list = Json::array();
  for (std::size_t i = 0; i < run.candidates.size(); ++i) {
    const NamedExtension& cand = run.candidates[i];
    ++rep.instances;
    Json row{{"extension", cand.name}, {"order", cand.ext.big->order()}};
    if (!run.results[i]) {
      rep.fail(Json{{"extension", cand.name}, {"error", run.errors[i]}});
      list.push_back(row);
      continue;
    }
    const Classification& c = *run.results[i];
    row["case"] = c.label ? to_string(c.label->kind) : "none";
    row["m"] = members_json(c.m.members);
    if (c.label && c.label->q) row["q"] = *c.label->q;
    list.push_back(row);
    if (!c.m_maximal) rep.fail(Json{{"extension", cand.name}, {"check", "(R:T) maximal"}});
    if (!c.label)
      rep.fail(Json{{"extension", cand.name},
                    {"check", "exactly one case"},
                    {"cases", Json{{"inert", c.inert}, {"decomposed", c.decomposed}, {"ramified", c.ramified}}}});
    else if (cand.intended && c.label->kind != *cand.intended)
      rep.fail(Json{{"extension", cand.name}, {"check", "case matches construction"}, {"case", to_string(c.label->kind)}});
    if (cand.target && !(c.m == *cand.target))
      rep.fail(Json{{"extension", cand.name}, {"check", "m = (R:T) is the maximal ideal built over"}});
  }
  rep.witnesses["candidates"] = std::move(list);
  rep.witnesses["skipped_candidates"] = run.skipped;
  if (rep.instances == 0 && rep.verdict == Verdict::Pass) rep.verdict = Verdict::Skipped;
}

void fill_structure(VerdictReport& rep, const VnrRun& run) {
  Json list = Json::array();
  std::size_t checked = 0;
  for (std::size_t i = 0; i < run.candidates.size(); ++i) {
    if (!run.results[i] || !run.results[i]->label) continue;  // reported by the trichotomy
    const Classification& c = *run.results[i];
    ++rep.instances;
    Json row{{"extension", run.candidates[i].name},
             {"case", to_string(c.label->kind)},
             {"structure", to_string(c.structure)}};
    if (c.iso) row["iso"] = c.iso->images;
    list.push_back(row);
    if (c.structure == StructureCheck::SkippedIsoCap) continue;
    ++checked;
    if (c.structure == StructureCheck::IsoMissing || c.structure == StructureCheck::BigRingNotVnr)
      rep.fail(Json{{"extension", run.candidates[i].name}, {"structure", to_string(c.structure)}});
    if (c.iso) {
      // Re-validate the emitted witness independently of the search.
      try {
        make_hom(c.iso->source, c.iso->target, c.iso->images);
      } catch (const HomViolation& e) {
        rep.fail(Json{{"extension", run.candidates[i].name}, {"error", e.what()}});
      }
    }
  }
  rep.witnesses["extensions"] = std::move(list);
  rep.witnesses["skipped_candidates"] = run.skipped;
  if (checked == 0 && rep.verdict == Verdict::Pass) rep.verdict = Verdict::Skipped;
}

}  // namespace

std::vector<VerdictReport> verify_vnr_results(const RingPtr& r, const VerifyOptions& opts) {
  std::optional<VnrRun> run;
  std::string error;
  VerdictReport tri = run_verifier("vnr-trichotomy", r->provenance(), [&](VerdictReport& rep) {
    if (!ring_predicates(r).is_vnr) {
      rep.verdict = Verdict::Skipped;
      rep.witnesses["skipped"] = "ring is not von Neumann regular";
      return;
    }
    run = run_vnr(r, opts);
    fill_trichotomy(rep, *run);
  });
  VerdictReport structure = run_verifier("vnr-structure", r->provenance(), [&](VerdictReport& rep) {
    if (!run) {
      rep.verdict = Verdict::Skipped;
      rep.witnesses = tri.witnesses;
      if (tri.verdict == Verdict::Fail) rep.fail(tri.counterexample);
      return;
    }
    fill_structure(rep, *run);
  });
  return {std::move(tri), std::move(structure)};
}

VerdictReport verify_vnr_trichotomy(const RingPtr& r, const VerifyOptions& opts) {
  return verify_vnr_results(r, opts)[0];
}

VerdictReport verify_vnr_structure(const RingPtr& r, const VerifyOptions& opts) {
  return verify_vnr_results(r, opts)[1];
}

// Conductor and crucial ideal -----------------------------------------------------

VerdictReport verify_conductor_prime(const Extension& ext, const std::string& entry) {
  if (!ext.is_proper() || !is_minimal(ext)) throw PreconditionError("extension is not minimal");
  return run_verifier("conductor-prime", entry, [&](VerdictReport& rep) {
    rep.instances = 1;
    const Ideal c = conductor(ext).in_small;
    rep.witnesses["conductor"] = members_json(c.members);
    if (!is_prime(c)) rep.fail(Json{{"check", "(R:T) is prime"}, {"conductor", members_json(c.members)}});
  });
}

VerdictReport verify_crucial_ideal(const Extension& ext, const std::string& entry, const BuildOptions& opts) {
  if (!ext.is_proper() || !is_minimal(ext)) throw PreconditionError("extension is not minimal");
  return run_verifier("crucial-ideal", entry, [&](VerdictReport& rep) {
    rep.instances = 1;
    auto table_json = [](const std::vector<PrimeLocalization>& table) {
      Json rows = Json::array();
      for (const PrimeLocalization& row : table)
        rows.push_back(Json{{"prime", members_json(row.prime.members)},
                            {"local_order", row.small_order},
                            {"big_local_order", row.big_order},
                            {"isomorphism", row.isomorphism}});
      return rows;
    };
    CrucialReport crucial;
    try {
      crucial = crucial_maximal_ideal(ext, opts);
    } catch (const CrucialIdealError& e) {
      rep.fail(Json{{"check", "exactly one crucial maximal ideal"},
                    {"non_isomorphic_primes", e.non_iso_count()},
                    {"table", table_json(e.table())}});
      return;
    }
    const Ideal c = conductor(ext).in_small;
    rep.witnesses["crucial"] = members_json(crucial.crucial.members);
    rep.witnesses["conductor"] = members_json(c.members);
    rep.witnesses["table"] = table_json(crucial.table);
    if (!c.members.subset_of(crucial.crucial.members))
      rep.fail(Json{{"check", "J contains (R:T)"}, {"table", table_json(crucial.table)}});
    else if (!(c == crucial.crucial))
      rep.fail(Json{{"check", "J = (R:T)"}, {"table", table_json(crucial.table)}});

    bool lies_over = false;
    for (const Ideal& n : max_spectrum(ext.big))
      if (pullback(ext.embed, n.members) == crucial.crucial) {
        lies_over = true;
        rep.witnesses["maximal_ideal_of_T_over_J"] = members_json(n.members);
        break;
      }
    if (!lies_over) rep.fail(Json{{"check", "some maximal ideal of T contracts to J"}});
  });
}

std::vector<VerdictReport> verify_extension_catalog(const RingPtr& r, const VerifyOptions& opts) {
  std::vector<NamedExtension> catalog;
  std::size_t skipped = 0;
  auto aggregate = [&](const std::string& theorem, bool build,
                       const std::function<VerdictReport(const NamedExtension&)>& one) {
    return run_verifier(theorem, r->provenance(), [&](VerdictReport& rep) {
      if (build) catalog = catalog_minimal_extensions(r, opts.build, &skipped);
      Json names = Json::array();
      for (const NamedExtension& e : catalog) {
        ++rep.instances;
        names.push_back(e.name);
        if (!e.ext.is_proper() || !is_minimal(e.ext)) {
          rep.fail(Json{{"extension", e.name}, {"check", "catalog extension is minimal"}});
          continue;
        }
        VerdictReport sub = one(e);
        if (sub.verdict == Verdict::Fail) rep.fail(Json{{"extension", e.name}, {"detail", sub.counterexample}});
      }
      rep.witnesses["extensions"] = std::move(names);
      rep.witnesses["skipped_extensions"] = skipped;
      if (rep.instances == 0 && rep.verdict == Verdict::Pass) rep.verdict = Verdict::Skipped;
    });
  };
  VerdictReport prime = aggregate("conductor-prime", true, [&](const NamedExtension& e) {
    return verify_conductor_prime(e.ext, e.name);
  });
  VerdictReport crucial = aggregate("crucial-ideal", false, [&](const NamedExtension& e) {
    return verify_crucial_ideal(e.ext, e.name, opts.build);
  });
  return {std::move(prime), std::move(crucial)};
}

VerdictReport verify_conductor_prime_catalog(const RingPtr& r, const VerifyOptions& opts) {
  return verify_extension_catalog(r, opts)[0];
}

VerdictReport verify_crucial_ideal_catalog(const RingPtr& r, const VerifyOptions& opts) {
  return verify_extension_catalog(r, opts)[1];
}

// Oracles -----------------------------------------------------------------------------

Mask naive_closure(const FiniteRing& t, const Mask& seed) {
  Mask m = seed;
  m.set(t.zero());
  m.set(t.one());
  bool changed = true;
  while (changed) {
    changed = false;
    const auto mem = m.members();
    for (Elem a : mem) {
      if (!m.test(t.neg(a))) {
        m.set(t.neg(a));
        changed = true;
      }
      for (Elem b : mem)
        for (Elem c : {t.add(a, b), t.mul(a, b)})
          if (!m.test(c)) {
            m.set(c);
            changed = true;
          }
    }
  }
  return m;
}

bool exhaustive_minimality_oracle(const FiniteRing& t, const Mask& base) {
  if (t.order() > kLatticeMaxOrder) throw CapExceeded("minimality oracle", t.order(), kLatticeMaxOrder);
  if (base.full()) return false;
  std::vector<Elem> outside;
  for (Elem x = 0; x < t.order(); ++x)
    if (!base.test(x)) outside.push_back(x);
  for (std::size_t i = 0; i < outside.size(); ++i)
    for (std::size_t j = i; j < outside.size(); ++j) {
      Mask seed = base;
      seed.set(outside[i]);
      seed.set(outside[j]);
      if (!naive_closure(t, seed).full()) return false;
    }
  return true;
}

VerdictReport verify_minimality_oracle(const RingPtr& r, const VerifyOptions& opts) {
  return run_verifier("minimality-oracle", r->provenance(), [&](VerdictReport& rep) {
    const FiniteRing& ring = *r;
    std::size_t minimal_count = 0;
    auto check = [&](const std::string& name, const RingPtr& big, const Mask& base) {
      ++rep.instances;
      const FiniteRing& t = *big;
      const bool decided = !base.full() && is_minimal_over(t, base);
      const bool oracle = exhaustive_minimality_oracle(t, base);
      if (decided != oracle) {
        rep.fail(Json{{"extension", name}, {"decision", decided}, {"oracle", oracle}});
        return;
      }
      minimal_count += decided;
      if (base.full()) return;
      const std::size_t nodes = subring_lattice(subring_extension(big, base, opts.build)).nodes.size();
      if (decided ? nodes != 2 : nodes <= 2)
        rep.fail(Json{{"extension", name}, {"check", "lattice node count"}, {"nodes", nodes}, {"minimal", decided}});
    };

    if (ring.order() * ring.order() <= kLatticeMaxOrder) {
      DiagonalExtension d = diagonal_extension(r, ring.zero(), ring.zero(), opts.build);
      std::set<Mask> seen;
      for (Elem a = 0; a < ring.order(); ++a)
        for (Elem b = 0; b < ring.order(); ++b) {
          const Elem g[] = {d.square.encode(a, b)};
          Mask sub = closure(*d.square.ring, d.diagonal.image, g);
          if (seen.insert(sub).second)
            check("D(R)[(" + std::to_string(a) + "," + std::to_string(b) + ")] in R x R", d.square.ring, sub);
        }
      IdealizationExtension ie = idealization_extension(module_r(r), opts.build);
      seen.clear();
      for (Elem x = 0; x < ie.parts.ring->order(); ++x) {
        const Elem g[] = {x};
        Mask sub = closure(*ie.parts.ring, ie.ext.image, g);
        if (seen.insert(sub).second) check("R[" + std::to_string(x) + "] in R(+)R", ie.parts.ring, sub);
      }
    }
    if (2 * ring.order() <= kLatticeMaxOrder) {
      BuildOptions small = opts.build;
      small.max_order = std::min(small.max_order, kLatticeMaxOrder);
      std::size_t skipped = 0;
      for (const NamedExtension& e : catalog_minimal_extensions(r, small, &skipped))
        if (e.ext.big->order() <= kLatticeMaxOrder) check(e.name, e.ext.big, e.ext.image);
    }
    rep.witnesses["extensions_checked"] = rep.instances;
    rep.witnesses["minimal"] = minimal_count;
    if (rep.instances == 0 && rep.verdict == Verdict::Pass) {
      rep.verdict = Verdict::Skipped;
      rep.witnesses["skipped"] = "no extension with |T| <= 16";
    }
  });
}

VerdictReport verify_infrastructure(const RingPtr& r, const VerifyOptions& opts) {
  return run_verifier("infrastructure", r->provenance(), [&](VerdictReport& rep) {
    const FiniteRing& ring = *r;
    // Re-run axiom validation on the raw tables.
    try {
      FiniteRing::from_tables(ring.add_table(), ring.mul_table(), ring.provenance(), opts.build);
    } catch (const AxiomViolation& e) {
      rep.fail(Json{{"check", "ring axioms"}, {"axiom", e.axiom()}, {"witness", e.witness()}});
    }
    rep.witnesses["order"] = ring.order();
    rep.witnesses["axiom_check"] = ring.order() <= kExhaustiveAxiomOrder ? "exhaustive" : "sampled";

    for (Elem x = 0; x < ring.order(); ++x) {
      ++rep.instances;
      const ElementProfile p = element_profile(ring, x);
      if (p.is_regular != p.is_unit) rep.fail(Json{{"check", "regular <=> unit"}, {"element", x}});
      if (p.is_idempotent && eventual_idempotent(ring, x) != x)
        rep.fail(Json{{"check", "eventual_idempotent fixes idempotents"}, {"element", x}});
    }

    const RingPredicates preds = ring_predicates(r);
    if ((preds.is_field && !preds.is_vnr) || (preds.is_vnr && !preds.is_reduced))
      rep.fail(Json{{"check", "field => VNR => reduced"}});
    rep.witnesses["predicates"] = Json{{"field", preds.is_field},
                                       {"reduced", preds.is_reduced},
                                       {"vnr", preds.is_vnr},
                                       {"local", preds.is_local}};

    const std::vector<Ideal> spectrum = max_spectrum(r);
    Json local_orders = Json::array();
    for (const Ideal& m : spectrum) {
      if (!is_maximal(m) || !is_prime(m)) rep.fail(Json{{"check", "Max(R) members are maximal and prime"}});
      if (ring.order() <= 36 && !is_maximal_by_generation(m))
        rep.fail(Json{{"check", "generation oracle confirms maximality"}, {"ideal", members_json(m.members)}});
      Localization loc = localize_at_prime(r, m, opts.build);
      local_orders.push_back(loc.ring()->order());
      if (max_spectrum(loc.ring()).size() != 1)
        rep.fail(Json{{"check", "R_P is local"}, {"ideal", members_json(m.members)}});
    }
    // Prime <=> maximal on every principal ideal; maximal principal ideals must be in Max(R).
    std::set<Mask> principal;
    for (Elem x = 0; x < ring.order(); ++x) {
      Ideal i = ideal_generated(r, {x});
      if (!principal.insert(i.members).second) continue;
      const bool maximal = is_maximal(i);
      if (maximal != is_prime(i)) rep.fail(Json{{"check", "prime <=> maximal"}, {"generator", x}});
      if (ring.order() <= 36 && maximal != is_maximal_by_generation(i))
        rep.fail(Json{{"check", "quotient and generation maximality agree"}, {"generator", x}});
      if (maximal && std::find(spectrum.begin(), spectrum.end(), i) == spectrum.end())
        rep.fail(Json{{"check", "max_spectrum is complete"}, {"generator", x}});
    }

    const LocalDecomposition dec = local_decomposition(r, opts.build);
    Json factors = Json::array();
    for (const LocalFactor& f : dec.factors) factors.push_back(f.corner.ring->order());
    if (dec.factors.size() != spectrum.size()) rep.fail(Json{{"check", "factor count = |Max(R)|"}});
    total_quotient_ring(r, opts.build);

    rep.witnesses["maximal_ideals"] = spectrum.size();
    rep.witnesses["localization_orders"] = std::move(local_orders);
    rep.witnesses["local_factors"] = std::move(factors);
    rep.witnesses["total_quotient_ring"] = "R";
  });
}

}  // namespace finring
