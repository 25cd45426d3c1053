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

// Acceptance harness: one line per criterion, exact checks, pinned limits.
// Exit status is nonzero when any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "dmc/axioms.hpp"
#include "dmc/cauchy.hpp"
#include "dmc/closure.hpp"
#include "dmc/groupoid.hpp"
#include "dmc/id.hpp"
#include "dmc/instances.hpp"
#include "dmc/lifting.hpp"
#include "dmc/search.hpp"
#include "dmc/views.hpp"
#include "dmc/wfs.hpp"
#include "oracles.hpp"

using namespace dmc;

namespace {

enum class Verdict { Pass, Fail, Skip };

struct Outcome {
  Verdict verdict = Verdict::Pass;
  std::string detail;
};

// Collects failures inside one criterion.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 6) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  Outcome outcome(const std::string& summary) const {
    if (failed_ == 0) return {Verdict::Pass, summary + ", " + std::to_string(checks_) + " checks"};
    std::string d = std::to_string(failed_) + " of " + std::to_string(checks_) + " checks failed:";
    for (const std::string& f : failures_) d += " [" + f + "]";
    return {Verdict::Fail, d};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

std::string mname(const FinCat& c, MorRef m) { return c.name() + ":" + c.morphism_name(m); }

// The groupoid site with a nontrivial Id: Z/2 over the terminal groupoid.
std::vector<GroupoidSpec> nontrivial_site_inputs() {
  return {groupoid_from_spec("cyclic:2", "Z2"), groupoid_from_spec("terminal", "one")};
}

std::vector<InstanceBundle> verified_instances() {
  return {fixtures::poset2(), fixtures::b2(), fixtures::chain3(), fixtures::n5(),
          fixtures::trivial_groupoid_site().bundle};
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  Tally t;
  std::vector<FinCat> cats = fixtures::walking_shapes();
  cats.push_back(fixtures::poset2().cat);
  cats.push_back(fixtures::b2().cat);
  cats.push_back(fixtures::m3().cat);
  cats.push_back(fixtures::trivial_groupoid_site().bundle.cat);
  for (const FinCat& c : cats) {
    t.expect(validate_category(c).ok(), c.name() + " validate");
    t.expect(oracle::category_laws(c), c.name() + " laws");
    for (ObjRef y : c.objects()) {
      const SliceView s = slice(c, y);
      t.expect(validate_category(s.cat).ok() && oracle::category_laws(s.cat),
               c.name() + " slice over " + c.object_name(y));
    }
    const ArrowView a = arrow_category(c);
    t.expect(validate_category(a.cat).ok() && oracle::category_laws(a.cat),
             c.name() + " arrow category");
    const KaroubiEnvelope k = karoubi_envelope(c);
    t.expect(validate_category(k.cat).ok() && oracle::category_laws(k.cat),
             c.name() + " Karoubi envelope");
  }
  return t.outcome(std::to_string(cats.size()) + " instances");
}

Outcome criterion2() {
  Tally t;
  std::vector<std::pair<FinCat, MorClass>> inst;
  for (const FinCat& c : fixtures::walking_shapes()) inst.emplace_back(c, MorClass::all(c));
  for (const InstanceBundle& b : verified_instances()) inst.emplace_back(b.cat, b.d);
  inst.emplace_back(fixtures::m3().cat, fixtures::m3().d);
  std::mt19937 rng(9);
  std::bernoulli_distribution coin(0.5);
  for (const auto& [c, d] : inst) {
    // D, the identities, the isomorphisms and seeded random classes.
    std::vector<MorClass> classes = {d, MorClass::identities(c), MorClass::isomorphisms(c)};
    for (int i = 0; i < 4; ++i) {
      MorClass r(c.num_morphisms());
      for (MorRef m : c.morphisms())
        if (coin(rng)) r.insert(m);
      classes.push_back(r);
    }
    for (const MorClass& a : classes) {
      const MorClass la = left_complement(c, a);
      const MorClass ra = right_complement(c, a);
      t.expect(la == oracle::left_of(c, a), c.name() + " left complement vs oracle");
      t.expect(ra == oracle::right_of(c, a), c.name() + " right complement vs oracle");
      const MorClass da = dbar(c, a);
      t.expect(a.subset_of(da), c.name() + " unit");
      t.expect(dbar(c, da) == da, c.name() + " idempotence");
      t.expect(left_complement(c, da) == la, c.name() + " left(dbar) = left(D)");
      for (const MorClass& b : classes) {
        if (!a.subset_of(b)) continue;
        t.expect(left_complement(c, b).subset_of(la) && right_complement(c, b).subset_of(ra),
                 c.name() + " antitone");
      }
    }
  }
  for (const InstanceBundle& b : verified_instances()) {
    t.expect(verify_id(b.cat, b.d, *b.id_structure()).passed(), b.name() + " Id verifies");
    t.expect(dbar(b.cat, b.d) == retract_closure(b.cat, b.d),
             b.name() + " dbar = retract closure");
  }
  return t.outcome(std::to_string(inst.size()) + " instances");
}

Outcome criterion3() {
  Tally t;
  std::size_t morphisms = 0;
  for (const InstanceBundle& b : verified_instances()) {
    const IdAssignment& ida = *b.id_structure();
    const MorClass left = oracle::left_of(b.cat, b.d);
    for (MorRef f : b.cat.morphisms()) {
      ++morphisms;
      const Factorization fz = factorize(b.cat, b.d, ida, f);
      t.expect(b.cat.compose(fz.rho, fz.lambda) == f, mname(b.cat, f) + " rho.lambda = f");
      t.expect(left.contains(fz.lambda), mname(b.cat, f) + " lambda in left(D)");
      t.expect(b.d.contains(fz.rho), mname(b.cat, f) + " rho in D");
    }
    const GeneratedWfs g = verify_generated_wfs(b.cat, b.d, ida);
    t.expect(g.wfs && g.wfs->passed(), b.name() + " verify_wfs");
  }
  return t.outcome(std::to_string(morphisms) + " morphisms");
}

// Heyting residual computed from the element encoding: Boolean lattices by
// bitmask, chains by comparison.
Outcome criterion4() {
  Tally t;
  struct Lattice {
    InstanceBundle b;
    std::function<unsigned(unsigned, unsigned)> implies;
    std::function<unsigned(unsigned, unsigned)> meet;
  };
  const std::vector<Lattice> lattices = {
      {fixtures::poset2(), [](unsigned x, unsigned w) { return x <= w ? 1U : w; },
       [](unsigned a, unsigned b) { return a < b ? a : b; }},
      {fixtures::b2(), [](unsigned x, unsigned w) { return oracle::boolean_implies(x, w, 2); },
       oracle::boolean_meet},
  };
  std::size_t pairs = 0;
  for (const Lattice& l : lattices) {
    const FinCat& c = l.b.cat;
    for (MorRef f : l.b.d.members())
      for (MorRef g : l.b.d.members()) {
        if (c.dst(g) != c.src(f)) continue;
        ++pairs;
        const unsigned w = c.src(g).index, x = c.src(f).index, y = c.dst(f).index;
        const unsigned expect = l.meet(l.implies(x, w), y);
        const auto pi = find_pi(c, l.b.d, f, g);
        t.expect(pi && c.src(pi->pi).index == expect && c.dst(pi->pi).index == y,
                 c.name() + " Pi(" + c.morphism_name(f) + "," + c.morphism_name(g) + ")");
      }
  }
  const InstanceBundle m3 = fixtures::m3();
  bool m3_fails = false;
  const PiCheck m3_pi = check_pi(m3.cat, m3.d);
  for (const Record& r : m3_pi.report.records())
    m3_fails = m3_fails || (r.check == "pi.exists" && r.status == Status::Fail);
  t.expect(m3_fails, "M3 fails Pi");
  return t.outcome(std::to_string(pairs) + " composable pairs, M3 fails Pi");
}

Outcome criterion5() {
  Tally t;
  std::vector<InstanceBundle> all = verified_instances();
  all.push_back(fixtures::m3());
  for (const InstanceBundle& b : all) {
    const Report r = crosscheck_id_variants(b.cat, b.d, *b.id_structure());
    t.expect(!r.has_refutation(), b.name() + " variant equivalence");
  }
  try {
    const GroupoidSite site = gen_groupoid_site(nontrivial_site_inputs());
    const InstanceBundle& b = site.bundle;
    t.expect(b.cat.num_morphisms() <= 40, "site has at most 40 compiled morphisms");
    const IdAssignment& ida = *b.id_structure();
    t.expect(verify_id(b.cat, b.d, ida).passed(), "site verify_id");
    t.expect(verify_ml_id(b.cat, b.d, ida).passed(), "site verify_ml_id");
    t.expect(verify_param_ml_id(b.cat, b.d, ida).passed(), "site verify_param_ml_id");
    t.expect(check_llp_pullback_stable(b.cat, b.d).holds, "site llp pullback stable");
    bool nontrivial = false;
    for (MorRef f : ida.covered()) nontrivial = nontrivial || !is_iso(b.cat, ida.at(f).r);
    t.expect(nontrivial, "site has r not an isomorphism");
  } catch (const BudgetExceeded& e) {
    // Report how far the closure got before the budget ran out.
    GroupoidSiteOptions o;
    o.max_rounds = 1;
    const GroupoidSite frag = gen_groupoid_site(nontrivial_site_inputs(), o);
    std::string why;
    const Report dmc = check_dmc(frag.bundle.cat, frag.bundle.d);
    for (const Record& r : dmc.records())
      if (r.status == Status::Fail) why += " " + r.check;
    t.expect(false, std::string("groupoid site with Z2 does not close: ") + e.what() +
                        "; one-round fragment (" +
                        std::to_string(frag.bundle.cat.num_morphisms()) +
                        " morphisms) fails" + why);
  }
  return t.outcome(std::to_string(all.size()) + " instances and the groupoid site");
}

Outcome criterion6() {
  Tally t;
  std::vector<FinCat> cats = fixtures::walking_shapes();
  for (const InstanceBundle& b : verified_instances()) cats.push_back(b.cat);
  cats.push_back(fixtures::m3().cat);
  for (const FinCat& c : cats) {
    const auto idem = idempotents(c);
    for (MorRef e : idem) {
      const auto ss = all_splittings(c, e);
      for (const Splitting& s : ss)
        t.expect(verify_splitting_coequalizer(c, e, s), mname(c, e) + " splitting is coequalizer");
      for (MorRef q : c.morphisms()) {
        if (c.src(q) != c.src(e) || !is_coequalizer_of(c, e, q)) continue;
        const auto s = splitting_from_coequalizer(c, e, q);
        t.expect(s && is_splitting(c, *s), mname(c, e) + " coequalizer is splitting");
      }
      for (const Splitting& a : ss)
        for (const Splitting& b : ss) {
          std::size_t n = 0;
          for (MorRef m : c.hom(a.retract_obj, b.retract_obj))
            if (c.compose(m, a.retr) == b.retr && c.compose(b.incl, m) == a.incl) ++n;
          const MorRef k = splitting_comparison_iso(c, e, a, b);
          t.expect(n == 1 && is_iso(c, k), mname(c, e) + " unique comparison iso");
        }
    }
    for (MorRef e : idem)
      for (MorRef f : idem) {
        const auto se = split_idempotent(c, e);
        const auto sf = split_idempotent(c, f);
        if (!se || !sf) continue;
        for (MorRef k : c.hom(c.src(e), c.src(f))) {
          if (c.compose(k, e) != c.compose(f, k)) continue;
          const SquareSplitting sq = split_square(c, e, f, k, *se, *sf);
          t.expect(sq.unique, mname(c, k) + " induced map unique");
          if (is_iso(c, k)) t.expect(sq.iso, mname(c, k) + " induced map iso");
        }
      }
    if (is_cauchy_complete(c).complete)
      for (ObjRef y : c.objects())
        t.expect(is_cauchy_complete(slice(c, y).cat).complete,
                 c.name() + " slice over " + c.object_name(y) + " Cauchy complete");
  }
  return t.outcome(std::to_string(cats.size()) + " instances");
}

void closure_checks(Tally& t, const InstanceBundle& b, bool with_pi) {
  const ClosureCertificate cert = verify_main_theorem(b.cat, b.d, *b.fida, with_pi);
  t.expect(cert.valid() && cert.combined().passed(), b.name() + " certificate green");
  const MorClass db = dbar(b.cat, b.d);
  const ClosureId cid = closure_id(b.cat, b.d, *b.fida);
  t.expect(verify_id(b.cat, db, cid.fida.base()).passed(), b.name() + " closure_id verifies");
  if (!with_pi) return;
  const PiCheck pc = check_pi(b.cat, b.d);
  for (MorRef f : db.members())
    for (MorRef g : db.members()) {
      if (b.cat.dst(g) != b.cat.src(f)) continue;
      const ClosurePi cp = closure_pi(b.cat, b.d, b.fida->base(), pc.table, f, g);
      const auto brute = find_pi(b.cat, db, f, g);
      t.expect(brute && pi_comparison(b.cat, cp.result, *brute),
               b.name() + " closure_pi(" + b.cat.morphism_name(f) + "," +
                   b.cat.morphism_name(g) + ") iso to brute force");
    }
}

// The CLI's exit status on a freshly written bundle.
int cli_status(const std::string& args) {
  const std::string cmd = std::string(DMC_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

Outcome criterion7() {
  Tally t;
  closure_checks(t, fixtures::poset2(), false);
  closure_checks(t, fixtures::b2(), true);
  const std::string dir = "acceptance_tmp";
  std::filesystem::create_directories(dir);
  save_bundle(dir + "/poset2.fincat", fixtures::poset2());
  save_bundle(dir + "/b2.fincat", fixtures::b2());
  t.expect(cli_status("verify-theorem " + dir + "/poset2.fincat") == 0, "poset2 exit 0");
  t.expect(cli_status("verify-theorem --with-pi " + dir + "/b2.fincat") == 0, "B2 exit 0");
  try {
    const GroupoidSite site = gen_groupoid_site(nontrivial_site_inputs());
    closure_checks(t, site.bundle, false);
    save_bundle(dir + "/site.fincat", site.bundle);
    t.expect(cli_status("verify-theorem " + dir + "/site.fincat") == 0, "site exit 0");
  } catch (const BudgetExceeded& e) {
    t.expect(false, std::string("groupoid site unavailable: ") + e.what());
  }
  return t.outcome("poset 2, B2 with Pi, groupoid site");
}

Outcome criterion8() {
  const SearchResult r = search_nonclosed_instance();
  if (!r.found) {
    if (r.exhausted) return {Verdict::Skip, r.summary()};
    return {Verdict::Fail, "search not exhausted within budget: " + r.summary()};
  }
  Tally t;
  const InstanceBundle& b = *r.found;
  t.expect(dbar(b.cat, b.d) != b.d, "witness has dbar != D");
  const ClosureCertificate cert = verify_main_theorem(b.cat, b.d, *b.fida, false);
  t.expect(cert.valid(), "certificate green on the witness");
  const std::string path = "acceptance_witness.fincat";
  save_bundle(path, b);
  const InstanceBundle again = load_bundle(path);
  t.expect(structurally_equal(b, again), "witness round-trips");
  t.expect(verify_main_theorem(again.cat, again.d, *again.fida, false).valid(),
           "reloaded witness certificate green");
  t.expect(cli_status("verify-theorem " + path) == 0, "reloaded witness exit 0");
  return t.outcome(r.summary());
}

std::string capture(const std::string& args) {
  const std::string cmd = std::string(DMC_CLI_PATH) + " " + args + " 2>&1";
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return "<popen failed>";
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int raw = pclose(p);
  out += "\n<exit " + std::to_string(WIFEXITED(raw) ? WEXITSTATUS(raw) : -1) + ">";
  return out;
}

Outcome criterion9() {
  Tally t;
  const std::string data = DMC_DATA_DIR;
  std::vector<std::string> commands;
  for (const char* f : {"poset2", "b2", "m3", "retract", "groupoid_site", "broken_id"}) {
    const std::string p = data + "/" + f + ".fincat";
    for (const char* verb : {"validate", "check-dmc", "check-sigma", "check-id",
                             "check-id-variants", "check-pi", "factorize", "wfs", "closure",
                             "split", "verify-theorem", "verify-theorem --with-pi"}) {
      commands.push_back(std::string(verb) + " " + p);
      commands.push_back(std::string("--machine ") + verb + " " + p);
    }
  }
  commands.push_back("reflect --right-class le_0_1,id_0,id_1 " + data + "/poset2.fincat");
  commands.push_back("gen heyting boolean:3");
  commands.push_back("gen heyting m3");
  commands.push_back("gen walking retract");
  commands.push_back("gen groupoid one=terminal zero=empty");
  commands.push_back("gen groupoid Z2=cyclic:2 one=terminal --rounds 1");
  commands.push_back("gen groupoid Z2=cyclic:2 one=terminal");
  commands.push_back("search-instance --seed-bounds 5,16,5");
  commands.push_back("validate " + data + "/nonsense.fincat");
  for (const std::string& c : commands) {
    const std::string a = capture("--jobs 1 " + c);
    const std::string b = capture("--jobs 1 " + c);
    const std::string d = capture("--jobs 8 " + c);
    t.expect(a == b, "repeat: " + c);
    t.expect(a == d, "--jobs 1 vs 8: " + c);
  }
  return t.outcome(std::to_string(commands.size()) + " commands");
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;
  Outcome (*run)();
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "law suite", 1, criterion1},
      {2, "class algebra", 5, criterion2},
      {3, "WFS construction", 10, criterion3},
      {4, "Pi oracle equivalence", 5, criterion4},
      {5, "Id variants", 60, criterion5},
      {6, "Cauchy machinery", 5, criterion6},
      {7, "main theorem end-to-end", 120, criterion7},
      {8, "nontrivial closure witness", 1800, criterion8},
      {9, "determinism", 600, criterion9},
  };
  bool ok = true;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {Verdict::Fail, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds && o.verdict != Verdict::Fail) {
      o.verdict = Verdict::Fail;
      o.detail = "time limit exceeded; " + o.detail;
    }
    const char* v = o.verdict == Verdict::Pass   ? "PASS"
                    : o.verdict == Verdict::Fail ? "FAIL"
                                                 : "SKIPPED-WITH-REASON";
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", secs, c.limit_seconds);
    std::cout << "criterion " << c.number << " (" << c.name << "): " << v << " [" << timing
              << "] " << o.detail << std::endl;
    ok = ok && o.verdict != Verdict::Fail;
  }
  return ok ? 0 : 1;
}
