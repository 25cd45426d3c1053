/* Copyright 2026 The dmc-workbench Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// dmc: command-line front end for the display map category workbench.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "dmc/axioms.hpp"
#include "dmc/cauchy.hpp"
#include "dmc/closure.hpp"
#include "dmc/groupoid.hpp"
#include "dmc/id.hpp"
#include "dmc/instances.hpp"
#include "dmc/lifting.hpp"
#include "dmc/parallel.hpp"
#include "dmc/search.hpp"
#include "dmc/wfs.hpp"

namespace {

using namespace dmc;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitRefuted = 3;

struct Options {
  bool machine = false;
  int jobs = 0;
  std::string path;
  bool with_pi = false;
  bool require = false;
  std::string morphism;
  std::string right_class;
  std::string seed_bounds;
  std::string out;
  std::string name;
  std::string spec;
  std::vector<std::string> groupoids;
  int rounds = -1;
  std::size_t site_budget = GroupoidSiteOptions{}.max_site_morphisms;
  std::size_t groupoid_budget = GroupoidSiteOptions{}.max_groupoid_morphisms;
};

std::string names(const FinCat& cat, const std::vector<MorRef>& ms) {
  std::string s;
  for (MorRef m : ms) {
    if (!s.empty()) s += ' ';
    s += cat.morphism_name(m);
  }
  return s;
}

// The bundle's Id-structure, or the least one search_id finds.
std::optional<IdAssignment> id_structure(const InstanceBundle& b, Report& rep) {
  if (const IdAssignment* ida = b.id_structure()) return *ida;
  auto found = search_id(b.cat, b.d);
  if (found)
    rep.pass("id.search", b.name(), "no idstruct given; using the least verified structure");
  else
    rep.fail("id.search", b.name(), "no idstruct given and none exists");
  return found;
}

std::optional<FunctorialIdAssignment> functorial_structure(const InstanceBundle& b,
                                                           Report& rep) {
  if (b.fida && !b.fida->actions().empty()) return b.fida;
  auto ida = id_structure(b, rep);
  if (!ida) return std::nullopt;
  auto fida = search_functorial_action(b.cat, b.d, *ida);
  if (!fida) rep.fail("fid.search", b.name(), "no strictly functorial action exists");
  return fida;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw ModelError("cannot write " + o.out);
  f << text;
}

Report cmd_validate(const Options& o) {
  ParseOptions po;
  po.check_laws = false;
  const InstanceBundle b = load_bundle(o.path, po);
  Report rep;
  const ValidationReport v = validate_category(b.cat);
  if (v.ok()) {
    rep.pass("validate.laws", b.name(),
             std::to_string(b.cat.num_objects()) + " objects, " +
                 std::to_string(b.cat.num_morphisms()) + " morphisms");
  }
  for (const Violation& x : v.violations)
    rep.fail("validate." + x.law, b.name(), x.detail, {names(b.cat, x.morphisms)});
  return rep;
}

Report cmd_check_dmc(const Options& o) {
  const InstanceBundle b = load_bundle(o.path);
  return check_dmc(b.cat, b.d);
}

Report cmd_check_sigma(const Options& o) {
  const InstanceBundle b = load_bundle(o.path);
  return check_sigma(b.cat, b.d);
}

Report cmd_check_id(const Options& o) {
  const InstanceBundle b = load_bundle(o.path);
  Report rep;
  auto ida = id_structure(b, rep);
  if (!ida) return rep;
  rep.append(verify_id(b.cat, b.d, *ida));
  if (b.fida && !b.fida->actions().empty())
    rep.append(verify_functorial_id(b.cat, b.d, *b.fida));
  return rep;
}

Report cmd_check_id_variants(const Options& o) {
  const InstanceBundle b = load_bundle(o.path);
  Report rep;
  auto ida = id_structure(b, rep);
  if (!ida) return rep;
  rep.append(verify_id(b.cat, b.d, *ida));
  rep.append(verify_ml_id(b.cat, b.d, *ida));
  rep.append(verify_param_ml_id(b.cat, b.d, *ida));
  const StabilityCheck st = check_llp_pullback_stable(b.cat, b.d);
  if (st.holds) {
    rep.pass("variants.llp_pullback_stable", b.name());
  } else {
    std::vector<std::string> w;
    if (st.left) w.push_back("l=" + b.cat.morphism_name(*st.left));
    if (st.display) w.push_back("d=" + b.cat.morphism_name(*st.display));
    if (st.pulled) w.push_back("d*l=" + b.cat.morphism_name(*st.pulled));
    if (st.square) w.push_back(describe(b.cat, *st.square));
    rep.fail("variants.llp_pullback_stable", b.name(),
             "a pullback of a left map along a display map is not a left map", w);
  }
  rep.append(crosscheck_id_variants(b.cat, b.d, *ida));
  return rep;
}

Report cmd_check_pi(const Options& o) {
  const InstanceBundle b = load_bundle(o.path);
  PiCheck pc = check_pi(b.cat, b.d);
  Report rep = pc.report;
  if (b.pi_expected) {
    std::vector<std::string> bad;
    for (const PiExpectation& e : *b.pi_expected) {
      auto it = pc.table.find({e.f.index, e.g.index});
      if (it == pc.table.end() || it->second.pi != e.pi)
        bad.push_back("f=" + b.cat.morphism_name(e.f) + ",g=" + b.cat.morphism_name(e.g));
    }
    if (bad.empty())
      rep.pass("pi.expected", b.name(),
               std::to_string(b.pi_expected->size()) + " expected entries agree");
    else
      rep.fail("pi.expected", b.name(), "computed Pi differs from the expected table", bad);
  }
  return rep;
}

Report cmd_factorize(const Options& o) {
  const InstanceBundle b = load_bundle(o.path);
  Report rep;
  auto ida = id_structure(b, rep);
  if (!ida) return rep;
  const MorClass left = left_complement(b.cat, b.d);
  std::vector<MorRef> targets;
  if (!o.morphism.empty()) {
    auto m = b.cat.find_morphism(o.morphism);
    if (!m) throw ModelError("unknown morphism '" + o.morphism + "'");
    targets.push_back(*m);
  } else {
    targets = b.cat.morphisms();
  }
  for (MorRef f : targets) {
    const Factorization fz = factorize(b.cat, b.d, *ida, f, &left);
    rep.pass("factorize", b.cat.morphism_name(f),
             "lambda=" + b.cat.morphism_name(fz.lambda) +
                 " mid=" + b.cat.object_name(fz.mid) + " rho=" + b.cat.morphism_name(fz.rho));
  }
  return rep;
}

Report cmd_wfs(const Options& o) {
  const InstanceBundle b = load_bundle(o.path);
  Report rep;
  auto ida = id_structure(b, rep);
  if (!ida) return rep;
  rep.append(verify_generated_wfs(b.cat, b.d, *ida).report);
  return rep;
}

Report cmd_closure(const Options& o) {
  const InstanceBundle b = load_bundle(o.path);
  Report rep;
  const MorClass db = dbar(b.cat, b.d);
  const MorClass added = db.minus(b.d);
  rep.add("closure.dbar", b.name(), Status::Pass,
           "D has " + std::to_string(b.d.size()) + " morphisms, dbar has " +
               std::to_string(db.size()),
           added.empty() ? std::vector<std::string>{}
                         : std::vector<std::string>{"added: " + names(b.cat, added.members())});
  if (!b.d.subset_of(db)) rep.refute("closure.unit", b.name(), "D is not contained in dbar");
  const MorClass rc = retract_closure(b.cat, b.d);
  if (rc == db)
    rep.pass("closure.retract_closure", b.name(), "dbar equals the retract closure of D");
  else
    rep.fail("closure.retract_closure", b.name(), "dbar differs from the retract closure of D",
             {"retract closure only: " + names(b.cat, rc.minus(db).members()),
              "dbar only: " + names(b.cat, db.minus(rc).members())});
  return rep;
}

Report cmd_split(const Options& o) {
  const InstanceBundle b = load_bundle(o.path);
  const FinCat& cat = b.cat;
  Report rep;
  for (MorRef e : idempotents(cat)) {
    auto s = split_idempotent(cat, e);
    if (!s) {
      rep.fail("split.idempotent", cat.morphism_name(e), "does not split");
      continue;
    }
    rep.pass("split.idempotent", cat.morphism_name(e),
             "R=" + cat.object_name(s->retract_obj) + " i=" + cat.morphism_name(s->incl) +
                 " r=" + cat.morphism_name(s->retr));
    if (verify_splitting_coequalizer(cat, e, *s))
      rep.pass("split.coequalizer", cat.morphism_name(e));
    else
      rep.refute("split.coequalizer", cat.morphism_name(e),
                 "retraction is not a coequalizer of (e, id)");
  }
  const CauchyCheck cc = is_cauchy_complete(cat);
  if (cc.complete)
    rep.pass("split.cauchy_complete", b.name());
  else
    rep.fail("split.cauchy_complete", b.name(), "an idempotent does not split",
             {cat.morphism_name(*cc.unsplit)});
  return rep;
}

Report cmd_verify_theorem(const Options& o) {
  const InstanceBundle b = load_bundle(o.path);
  Report rep;
  auto fida = functorial_structure(b, rep);
  if (!fida) return rep;
  const ClosureCertificate cert = verify_main_theorem(b.cat, b.d, *fida, o.with_pi);
  rep.append(cert.combined());
  return rep;
}

Report cmd_reflect(const Options& o) {
  const InstanceBundle b = load_bundle(o.path);
  std::vector<MorRef> members;
  std::stringstream ss(o.right_class);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto m = b.cat.find_morphism(item);
    if (!m) throw ModelError("unknown morphism '" + item + "'");
    members.push_back(*m);
  }
  const MorClass r = MorClass::of(b.cat, members);
  const ReflectionCheck rc = check_reflection(b.cat, b.d, r);
  Report rep;
  const std::string detail = std::string("dbar in R: ") + (rc.dbar_in_r ? "yes" : "no") +
                             ", D in R: " + (rc.d_in_r ? "yes" : "no");
  if (rc.holds())
    rep.pass("reflect.closure", b.name(), detail);
  else
    rep.refute("reflect.closure", b.name(), detail);
  return rep;
}

Report cmd_search(const Options& o) {
  SearchBounds bounds;
  if (!o.seed_bounds.empty()) {
    std::vector<std::size_t> v;
    std::stringstream ss(o.seed_bounds);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(std::stoul(item));
    if (v.size() < 2 || v.size() > 3)
      throw ModelError("--seed-bounds expects objects,morphisms[,exhaustive]");
    bounds.max_objects = v[0];
    bounds.max_morphisms = v[1];
    if (v.size() == 3) bounds.exhaustive_morphisms = v[2];
  }
  const SearchResult res = search_nonclosed_instance(bounds);
  Report rep;
  const std::string target = "objects<=" + std::to_string(bounds.max_objects) +
                             ",morphisms<=" + std::to_string(bounds.max_morphisms);
  if (res.found) {
    rep.pass("search.witness", target, res.summary());
    InstanceBundle b = *res.found;
    if (!o.out.empty()) save_bundle(o.out, b);
  } else if (o.require) {
    rep.fail("search.witness", target, res.summary(), res.provenance);
  } else {
    rep.skip("search.witness", target, res.summary());
  }
  return rep;
}

Report cmd_gen_heyting(const Options& o) {
  const Poset p = poset_from_spec(o.spec);
  const InstanceBundle b = gen_heyting(p, o.name.empty() ? "heyting" : o.name);
  emit(o, emit_fincat(b));
  return {};
}

Report cmd_gen_walking(const Options& o) {
  InstanceBundle b;
  b.cat = gen_walking(o.spec);
  b.d = MorClass(b.cat.num_morphisms());
  emit(o, emit_fincat(b));
  return {};
}

Report cmd_gen_groupoid(const Options& o) {
  std::vector<GroupoidSpec> specs;
  for (const std::string& g : o.groupoids) {
    const auto eq = g.find('=');
    if (eq == std::string::npos) throw ModelError("expected NAME=SPEC, got '" + g + "'");
    specs.push_back(groupoid_from_spec(g.substr(eq + 1), g.substr(0, eq)));
  }
  GroupoidSiteOptions opts;
  opts.max_site_morphisms = o.site_budget;
  opts.max_groupoid_morphisms = o.groupoid_budget;
  if (o.rounds >= 0) opts.max_rounds = static_cast<std::size_t>(o.rounds);
  const GroupoidSite site = gen_groupoid_site(specs, opts);
  emit(o, emit_fincat(site.bundle));
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Display map category workbench"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--machine", o.machine, "Tab-separated output, one record per line");
  app.add_option("--jobs", o.jobs, "Parallel sweep width");

  std::function<Report(const Options&)> run;
  auto verb = [&](const std::string& name, const std::string& help,
                  Report (*fn)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("bundle", o.path, "Instance file")->required();
    sub->callback([&run, fn] { run = fn; });
    return sub;
  };
  verb("validate", "Check category laws, reporting every violation", cmd_validate);
  verb("check-dmc", "Display map category axioms", cmd_check_dmc);
  verb("check-sigma", "Closure of D under composition", cmd_check_sigma);
  verb("check-id", "Id-type clauses", cmd_check_id);
  verb("check-id-variants", "Martin-Lof and Paulin-Mohring variants", cmd_check_id_variants);
  verb("check-pi", "Pi-types by exhaustive search", cmd_check_pi);
  verb("factorize", "Factor morphisms through the Id-types", cmd_factorize)
      ->add_option("--morphism", o.morphism, "Only this morphism");
  verb("wfs", "The weak factorization system generated by Id-types", cmd_wfs);
  verb("closure", "The closure dbar of D", cmd_closure);
  verb("split", "Idempotent splittings", cmd_split);
  verb("verify-theorem", "Full closure certificate", cmd_verify_theorem)
      ->add_flag("--with-pi", o.with_pi, "Also require and transfer Pi-types");
  verb("reflect", "Reflection of D into a closed class", cmd_reflect)
      ->add_option("--right-class", o.right_class, "Comma-separated morphisms of R")
      ->required();

  CLI::App* search = app.add_subcommand("search-instance", "Search for D with dbar != D");
  search->add_option("--seed-bounds", o.seed_bounds, "objects,morphisms[,exhaustive]");
  search->add_flag("--require", o.require, "Fail instead of skipping when nothing is found");
  search->add_option("-o,--out", o.out, "Write the witness here");
  search->callback([&] { run = cmd_search; });

  CLI::App* gen = app.add_subcommand("gen", "Generate instances");
  gen->require_subcommand(1);
  CLI::App* heyting = gen->add_subcommand("heyting", "Poset category of a finite lattice");
  heyting->add_option("lattice", o.spec, "chain:N | boolean:N | m3 | n5 | rel:a<b,...")
      ->required();
  heyting->add_option("--name", o.name, "Category name");
  heyting->add_option("-o,--out", o.out, "Output file");
  heyting->callback([&] { run = cmd_gen_heyting; });
  CLI::App* walking = gen->add_subcommand("walking", "A walking shape");
  walking->add_option("shape", o.spec, "arrow | idempotent | retract | iso | cospan")
      ->required();
  walking->add_option("-o,--out", o.out, "Output file");
  walking->callback([&] { run = cmd_gen_walking; });
  CLI::App* groupoid = gen->add_subcommand("groupoid", "Compiled groupoid site");
  groupoid
      ->add_option("groupoids", o.groupoids,
                   "NAME=SPEC with SPEC terminal | empty | cyclic:N | symmetric:N | "
                   "discrete:N | codiscrete:N | perm:p/q/...")
      ->required();
  groupoid->add_option("--rounds", o.rounds, "Stop after this many rounds (fragment)");
  groupoid->add_option("--site-budget", o.site_budget, "Maximum compiled morphisms");
  groupoid->add_option("--groupoid-budget", o.groupoid_budget,
                       "Maximum morphisms of one groupoid");
  groupoid->add_option("-o,--out", o.out, "Output file");
  groupoid->callback([&] { run = cmd_gen_groupoid; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }
  if (o.jobs > 0) set_jobs(o.jobs);

  Report rep;
  try {
    rep = run(o);
  } catch (const Refutation& e) {
    rep.refute(e.step(), o.path, e.what());
  } catch (const BudgetExceeded& e) {
    rep.fail("budget", o.path, e.what());
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: bad number: " << e.what() << '\n';
    return kExitInput;
  }
  if (o.machine)
    rep.write_machine(std::cout);
  else
    rep.write_human(std::cout);
  if (rep.has_refutation()) return kExitRefuted;
  return rep.passed() ? kExitPass : kExitFail;
}
