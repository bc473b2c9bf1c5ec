#include "commands.hpp"

#include <algorithm>
#include <sstream>

#include "jtk/error.hpp"
#include "jtk/ideals/ideals.hpp"
#include "jtk/jordan/checks.hpp"
#include "jtk/kernels/kernels.hpp"
#include "jtk/ktype/ktype.hpp"
#include "jtk/localize/localize.hpp"

namespace jtk::cli {

namespace {

Status verdict(bool ok) { return ok ? Status::pass : Status::fail; }

std::vector<Partition> default_partitions(const JordanTriple& t) {
  std::vector<Partition> out;
  for (const auto& p : {Partition({1}), Partition({1, 1}), Partition({2}), Partition({2, 1})})
    if (p.length() <= t.rank()) out.push_back(p);
  return out;
}

unsigned degree_for(const Partition& lam, const Options& opt) { return opt.degree.value_or(lam.size() + 3); }

json dims_json(const FiberComputation& f) {
  json arr = json::array();
  for (const auto& [m, q] : f.dims) arr.push_back({m, q});
  return arr;
}

json check_json(const IdentityCheck& c) {
  json d = {{"checked", c.checked}};
  if (c.failure) d["failure"] = *c.failure;
  return d;
}

Check needs_degree(std::string name, json params, unsigned degree, const Partition& lam) {
  return {std::move(name), std::move(params), Status::needs_higher_degree,
          {{"reason", "degree " + std::to_string(degree) + " below |lambda| = " + std::to_string(lam.size())}}};
}

// ---------------------------------------------------------------- jordan

void suite_jordan(const TriplePtr& t, Rng& rng, Report& rep) {
  const std::string d = t->descriptor();
  auto ax = axioms_check(*t);
  rep.add({"jordan.axioms", {{"triple", d}}, verdict(ax.ok), check_json(ax)});
  for (unsigned l = 0; l <= t->rank(); ++l) {
    Vec c = t->frame_sum(l);
    auto pr = peirce_rules_check(*t, c);
    json det = check_json(pr);
    det["rank"] = rank_of(*t, c);
    rep.add({"jordan.peirce", {{"triple", d}, {"l", l}}, verdict(pr.ok && rank_of(*t, c) == l), det});
  }
  for (unsigned l = 0; l < t->rank(); ++l) {
    auto cc = compression_check(t, l, 20, rng);
    rep.add({"jordan.compression", {{"triple", d}, {"l", l}, {"points", 20}}, verdict(cc.ok), check_json(cc)});
  }
  if (t->is_tube()) {
    auto cr = cramer_check(*t, 20, rng);
    rep.add({"jordan.cramer", {{"triple", d}, {"points", 20}}, verdict(cr.ok), check_json(cr)});
  } else {
    rep.add({"jordan.cramer", {{"triple", d}, {"points", 20}}, Status::skipped, {{"reason", "not of tube type"}}});
  }
}

// ---------------------------------------------------------------- ktype

void suite_ktype(const TriplePtr& t, Rng& rng, Report& rep) {
  const std::string d = t->descriptor();
  for (unsigned n = 1; n <= 3; ++n) {
    Check c{"ktype.dims", {{"triple", d}, {"degree", n}}, Status::pass, json::object()};
    try {
      json types = json::array();
      for (const auto& e : dims_report(*t, n)) types.push_back({{"lambda", e.lambda.str()}, {"dim", e.dim}});
      c.details = {{"types", types}, {"homogeneous_dim", homogeneous_dim(t->dim(), n)}};
    } catch (const InvariantViolation& e) {
      c.status = Status::fail;
      c.details = {{"failure", e.what()}};
    }
    rep.add(std::move(c));
  }
  for (unsigned n = 1; n <= 3; ++n) {
    auto parts = partitions_of(n, t->rank());
    bool ok = true;
    for (std::size_t a = 0; a < parts.size() && ok; ++a)
      for (std::size_t b = a + 1; b < parts.size() && ok; ++b)
        for (const auto& p : ktype_space(*t, parts[a])->basis())
          for (const auto& q : ktype_space(*t, parts[b])->basis())
            if (!t->fock().inner(p, q).is_zero()) ok = false;
    rep.add({"ktype.orthogonality", {{"triple", d}, {"degree", n}}, verdict(ok), {{"types", parts.size()}}});
  }
  for (const auto& lam : default_partitions(*t)) {
    auto k = ktype_space(*t, lam);
    bool ok = fock_kernel(*t, lam).is_hermitian();
    for (int s = 0; s < 3 && ok; ++s) {
      ExactMatrix g = random_k(*t, rng);
      for (const auto& p : k->basis())
        if (!k->space().contains(p.compose_linear(g))) ok = false;
    }
    rep.add({"ktype.invariance", {{"triple", d}, {"lambda", lam.str()}}, verdict(ok),
             {{"dim", k->dim()}, {"samples", 3}}});
  }
}

// ---------------------------------------------------------------- ideals

void suite_ideals(const TriplePtr& t, Rng& rng, Report& rep, const Options& opt) {
  const std::string d = t->descriptor();
  for (const auto& lam : default_partitions(*t)) {
    unsigned n = degree_for(lam, opt);
    json params = {{"triple", d}, {"lambda", lam.str()}, {"degree", n}};
    if (n < lam.size()) {
      rep.add(needs_degree("ideals.theorem_i", params, n, lam));
      continue;
    }
    auto r = theorem_i_check(*t, lam, n);
    json rows = json::array();
    for (const auto& row : r.rows) {
      json types = json::array();
      for (const auto& td : row.types) types.push_back({{"mu", td.mu.str()}, {"dim", td.dim}});
      rows.push_back({{"degree", row.degree}, {"piece_dim", row.piece_dim}, {"types", types}, {"equal", row.equal}});
    }
    rep.add({"ideals.theorem_i", params, verdict(r.ok), {{"rows", rows}}});
    rep.add({"ideals.gradedness", params, verdict(gradedness_check(*t, *ideal_truncation(*t, lam, n))), json::object()});
  }
  std::vector<Partition> small;
  for (unsigned m = 1; m <= 3; ++m)
    for (const auto& p : partitions_of(m, t->rank())) small.push_back(p);
  std::size_t pairs = 0, agree = 0;
  json disagreements = json::array();
  for (const auto& lam : small)
    for (const auto& mu : small) {
      ++pairs;
      auto c = containment_check(*t, lam, mu, 3);
      if (c.agree()) ++agree;
      else disagreements.push_back({lam.str(), mu.str()});
    }
  rep.add({"ideals.containment", {{"triple", d}, {"max_size", 3}}, verdict(agree == pairs),
           {{"pairs", pairs}, {"disagreements", disagreements}}});
  if (t->rank() >= 2) {
    Partition lam({3, 1});
    unsigned n = opt.degree.value_or(6);
    auto r = intersection_check(*t, lam, n);
    json rows = json::array();
    for (const auto& row : r.rows) rows.push_back({row.degree, row.lhs_dim, row.rhs_dim, row.equal});
    rep.add({"ideals.intersection", {{"triple", d}, {"lambda", lam.str()}, {"degree", n}}, verdict(r.ok), {{"rows", rows}}});
  }
  for (unsigned m = 1; m <= t->rank(); ++m) {
    auto r = kepler_vanishing_check(*t, m, m + 2, rng);
    rep.add({"ideals.kepler_vanishing", {{"triple", d}, {"m", m}, {"degree", m + 2}}, verdict(r.ok),
             {{"points", r.points}, {"evaluations", r.evaluations}}});
  }
}

// ---------------------------------------------------------------- localize

Status fiber_status(const FiberComputation& f, bool match) {
  if (!f.stabilized) return Status::needs_higher_degree;
  return verdict(match);
}

void suite_localize(const TriplePtr& t, Rng& rng, Report& rep, const Options& opt) {
  const std::string d = t->descriptor();
  for (const auto& lam : default_partitions(*t)) {
    unsigned n = degree_for(lam, opt);
    json base = {{"triple", d}, {"lambda", lam.str()}, {"degree", n}};
    if (n < lam.size()) {
      for (const char* name : {"localize.fiber_origin", "localize.regular_points"}) rep.add(needs_degree(name, base, n, lam));
      for (unsigned l = 0; l <= t->rank(); ++l) {
        json p = base;
        p["l"] = l;
        for (const char* name : {"localize.theorem_r", "localize.theorem_w", "localize.homogeneity"})
          rep.add(needs_degree(name, p, n, lam));
      }
      continue;
    }
    std::size_t top = ktype_space(*t, lam)->dim();
    auto f0 = fiber(*t, lam, Vec(t->dim()), n);
    rep.add({"localize.fiber_origin", base, fiber_status(f0, f0.fiber_dim == top),
             {{"fiber_dim", f0.fiber_dim}, {"dim_P_lambda", top}, {"dims", dims_json(f0)}}});

    json pts = json::array();
    bool all_one = true, all_stable = true;
    for (const auto& z : stratum_points(*t, t->rank(), 3, rng)) {
      auto f = fiber(*t, lam, z, n);
      all_stable = all_stable && f.stabilized;
      all_one = all_one && f.fiber_dim == 1;
      pts.push_back({{"point", vec_str(z)}, {"fiber_dim", f.fiber_dim}, {"dims", dims_json(f)}});
    }
    rep.add({"localize.regular_points", base, all_stable ? verdict(all_one) : Status::needs_higher_degree, {{"points", pts}}});

    for (unsigned l = 0; l <= t->rank(); ++l) {
      json p = base;
      p["l"] = l;
      auto r = theorem_r_check(t, lam, l, n);
      json rd = {{"lambda_star", r.lambda_star.str()}, {"checked", r.checked}};
      if (r.counterexample) rd["counterexample"] = *r.counterexample;
      rep.add({"localize.theorem_r", p, verdict(r.ok), rd});

      auto w = theorem_w_check(t, lam, l, n);
      Status ws = !w.kernel_contained ? Status::fail : !w.fiber.stabilized ? Status::needs_higher_degree : verdict(w.ok());
      rep.add({"localize.theorem_w", p, ws,
               {{"lambda_star", w.lambda_star.str()},
                {"target_dim", w.target_dim},
                {"image_dim", w.image_dim},
                {"surjective", w.surjective},
                {"kernel_checked", w.kernel_checked},
                {"kernel_contained", w.kernel_contained},
                {"fiber_dim", w.fiber.fiber_dim},
                {"dims", dims_json(w.fiber)}}});

      auto h = stratum_homogeneity_check(*t, lam, l, stratum_points(*t, l, 3, rng), n);
      json fibers = json::array();
      bool stable = true;
      for (const auto& f : h.fibers) {
        stable = stable && f.stabilized;
        fibers.push_back({{"point", vec_str(f.zeta)}, {"fiber_dim", f.fiber_dim}});
      }
      rep.add({"localize.homogeneity", p, stable ? verdict(h.ok) : Status::needs_higher_degree, {{"fibers", fibers}}});
    }
  }
  if (t->rank() >= 2) {
    Partition lam({1, 1});
    json p = {{"triple", d}, {"lambda", lam.str()}, {"l", 1}};
    if (!cross_section_enabled()) {
      rep.add({"localize.cross_section", p, Status::skipped, {{"reason", "built without JTK_ENABLE_CROSS_SECTION"}}});
    } else {
      auto r = cross_section_check(t, lam, 1, rng);
      json det = {{"basis_size", r.basis_size}, {"samples", r.samples}, {"conical_ok", r.conical_ok}};
      if (r.status == CrossSectionStatus::sampling_exhausted) det["reason"] = "sampling exhausted";
      rep.add({"localize.cross_section", p, verdict(r.status == CrossSectionStatus::ok), det});
    }
  }
}

// ---------------------------------------------------------------- kernels

void suite_kernels(const TriplePtr& t, Rng& rng, Report& rep, const Options& opt) {
  const std::string d = t->descriptor();
  std::optional<DeltaKernel> delta;
  try {
    delta = delta_kernel(t);
  } catch (const Unsupported& e) {
    rep.add({"kernels.delta", {{"triple", d}}, Status::skipped, {{"reason", e.what()}}});
  }
  if (delta) {
    bool ok = delta->kernel.is_hermitian() &&
              delta->kernel.at_second(Vec(t->dim())) == Poly::constant(t->dim(), ExactScalar(1));
    for (int s = 0; s < 3 && ok; ++s) {
      std::vector<Rational> q;
      Vec z(t->dim());
      for (unsigned j = 0; j < t->rank(); ++j) {
        q.push_back(rng.rational(3, 4));
        z = vec_add(z, vec_scale(ExactScalar(q.back()), t->frame()[j]));
      }
      ok = delta->kernel.eval(z, z) == ExactScalar(delta_on_frame(q));
      ExactMatrix g = random_k(*t, rng);
      Vec x = rng.vec(t->dim()), y = rng.vec(t->dim());
      ok = ok && delta->kernel.eval(g.apply(x), g.apply(y)) == delta->kernel.eval(x, y);
    }
    rep.add({"kernels.delta", {{"triple", d}}, verdict(ok), {{"terms", delta->kernel.terms().size()}}});
    unsigned n = std::min(opt.degree.value_or(3), 4u);
    for (const Rational& s : {Rational(1, 2), Rational(2)}) {
      auto r = binomial_check(t, s, n);
      json rows = json::array();
      for (const auto& row : r.rows) rows.push_back({row.degree, row.equal});
      json coeffs = json::object();
      for (const auto& [lam, c] : r.coefficients) coeffs[lam.str()] = c.str();
      rep.add({"kernels.binomial", {{"triple", d}, {"s", s.str()}, {"degree", n}}, verdict(r.ok),
               {{"rows", rows}, {"pochhammer", coeffs}}});
    }
  }
  for (const auto& mu : {Partition({1}), Partition({1, 1}), Partition({2})}) {
    json p = {{"triple", d}, {"mu", mu.str()}};
    if (mu.length() > t->rank()) continue;
    if (!t->is_tube()) {
      rep.add({"kernels.pieri", p, Status::skipped, {{"reason", "not of tube type"}}});
      continue;
    }
    auto r = pieri_check(t, mu);
    json terms = json::array();
    for (const auto& term : r.terms)
      terms.push_back({{"nu", term.nu.str()},
                       {"expected", term.expected.str()},
                       {"measured", term.measured.str()},
                       {"proportional", term.proportional},
                       {"positive", term.positive}});
    rep.add({"kernels.pieri", p, verdict(r.ok), {{"terms", terms}, {"exhaustive", r.exhaustive}}});
  }
  auto w = wallach_report(*t);
  json discrete = json::array(), hardy = json::array();
  for (const auto& x : w.discrete) discrete.push_back(x.str());
  for (const auto& [l, s] : w.hardy) hardy.push_back({{"l", l}, {"s", s.str()}});
  rep.add({"kernels.wallach", {{"triple", d}}, Status::pass,
           {{"a", w.a},
            {"b", w.b},
            {"r", w.r},
            {"d", w.d},
            {"continuous_bound", w.continuous_bound.str()},
            {"discrete", discrete},
            {"weighted_bergman_bound", w.weighted_bergman_bound.str()},
            {"bergman", w.bergman.str()},
            {"hardy", hardy}}});
}

}  // namespace

const std::vector<std::string>& reference_triples() {
  static const std::vector<std::string> v = {"matrix:2x2", "matrix:2x3", "sym:2", "asym:4", "spin:3", "spin:4"};
  return v;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> v = {"jordan", "ktype", "ideals", "localize", "kernels"};
  return v;
}

Report cmd_info(const std::string& triple) {
  auto t = JordanTriple::parse(triple);
  Report rep;
  rep.command = "info";
  rep.triples = {t->descriptor()};
  json frame = json::array();
  for (const auto& e : t->frame()) frame.push_back(vec_str(e));
  rep.add({"info",
           {{"triple", t->descriptor()}},
           Status::pass,
           {{"family", family_name(t->family())},
            {"d", t->dim()},
            {"r", t->rank()},
            {"a", t->a()},
            {"b", t->b()},
            {"genus", t->genus()},
            {"tube", t->is_tube()},
            {"basis", t->basis_names()},
            {"frame", frame}}});
  return rep;
}

Report cmd_decompose(const std::string& triple, const std::string& poly) {
  auto t = JordanTriple::parse(triple);
  Poly f = Poly::parse(poly, t->dim());
  Report rep;
  rep.command = "decompose";
  rep.triples = {t->descriptor()};
  rep.options = {{"poly", f.str()}};
  auto dec = decompose(*t, f);
  ExactScalar total = t->fock().inner(f, f);
  for (const auto& [lam, comp] : dec.components) {
    json det = {{"component", comp.str()}};
    if (!total.is_zero()) det["norm_share"] = (t->fock().inner(comp, comp) / total).str();
    rep.add({"decompose.component", {{"lambda", lam.str()}, {"degree", lam.size()}}, Status::pass, det});
  }
  rep.add({"decompose.residual", json::object(), verdict(dec.residual.is_zero()), {{"residual", dec.residual.str()}}});
  return rep;
}

Report cmd_fibers(const std::string& triple, const std::string& partition, const Options& opt) {
  auto t = JordanTriple::parse(triple);
  Partition lam = Partition::parse(partition);
  if (lam.length() > t->rank()) throw InvalidArgument("partition " + lam.str() + " longer than rank of " + t->descriptor());
  unsigned n = degree_for(lam, opt);
  Report rep;
  rep.command = "fibers";
  rep.triples = {t->descriptor()};
  rep.seed = opt.seed;
  rep.options = {{"lambda", lam.str()}, {"degree", n}};
  Rng rng(opt.seed);
  auto row = [&](unsigned l, const std::string& kind, std::size_t index, const Vec& z) {
    json p = {{"l", l}, {"kind", kind}, {"index", index}};
    if (n < lam.size()) {
      rep.add(needs_degree("fibers.row", p, n, lam));
      return;
    }
    auto f = fiber(*t, lam, z, n);
    std::size_t target = ktype_space(*chain_stratum(t, l).w, lam.drop_first(l))->dim();
    rep.add({"fibers.row", p, fiber_status(f, f.fiber_dim == target),
             {{"point", vec_str(z)},
              {"fiber_dim", f.fiber_dim},
              {"target_dim", target},
              {"lambda_star", lam.drop_first(l).str()},
              {"match", f.stabilized && f.fiber_dim == target},
              {"dims", dims_json(f)}}});
  };
  for (unsigned l = 0; l <= t->rank(); ++l) row(l, "frame", 0, t->frame_sum(l));
  for (unsigned l = 1; l <= t->rank(); ++l) {
    auto pts = stratum_points(*t, l, 3, rng);
    for (std::size_t i = 1; i < pts.size(); ++i) row(l, "sampled", i, pts[i]);
  }
  return rep;
}

Report cmd_verify(const std::vector<std::string>& triples, const std::string& suite, const Options& opt) {
  const auto& names = suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
    throw InvalidArgument("unknown suite '" + suite + "'");
  Report rep;
  rep.command = "verify";
  rep.suite = suite;
  rep.seed = opt.seed;
  if (opt.degree) rep.options["degree"] = *opt.degree;
  else rep.options["degree"] = "|lambda|+3";
  Rng rng(opt.seed);
  for (const auto& desc : triples) {
    auto t = JordanTriple::parse(desc);
    rep.triples.push_back(t->descriptor());
    auto want = [&](const char* s) { return suite == "all" || suite == s; };
    if (want("jordan")) suite_jordan(t, rng, rep);
    if (want("ktype")) suite_ktype(t, rng, rep);
    if (want("ideals")) suite_ideals(t, rng, rep, opt);
    if (want("localize")) suite_localize(t, rng, rep, opt);
    if (want("kernels")) suite_kernels(t, rng, rep, opt);
  }
  return rep;
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  json doc = r.to_json();
  for (const auto& c : doc["checks"]) {
    os << std::string(c["status"]) << "  " << std::string(c["name"]);
    if (!c["params"].empty()) os << ' ' << c["params"].dump();
    if (c["details"].contains("failure")) os << "  " << std::string(c["details"]["failure"]);
    if (c["details"].contains("reason")) os << "  (" << std::string(c["details"]["reason"]) << ')';
    os << '\n';
  }
  const auto& s = doc["summary"];
  os << "summary: " << s["pass"] << " pass, " << s["fail"] << " fail, " << s["skipped"] << " skipped, "
     << s["needs-higher-degree"] << " needs-higher-degree\n";
  return os.str();
}

}  // namespace jtk::cli
