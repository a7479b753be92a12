// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

#include "conj/cli/checks.hpp"
#include "conj/closedmon/operators.hpp"
#include "conj/closedmon/search.hpp"
#include "conj/ekgraph/standard_terms.hpp"
#include "conj/extranat/hat.hpp"
#include "support.hpp"

using namespace conjlib;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int n, const std::string& title, double budget_s, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.ok && s > budget_s) {
    o.ok = false;
    o.detail += " over time budget";
  }
  failures += !o.ok;
  std::printf("%s %d %s: %s [%.2fs / %.0fs]\n", o.ok ? "PASS" : "FAIL", n, title.c_str(), o.detail.c_str(), s,
              budget_s);
  std::fflush(stdout);
}

support::Rel subset_order(std::size_t n) {
  const std::size_t N = std::size_t(1) << n;
  support::Rel le(N, std::vector<bool>(N));
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y) le[x][y] = (x & ~y) == 0;
  return le;
}

bool same_components(const NatTrans& a, const NatTrans& b) {
  return same_functor(*a.from(), *b.from()) && same_functor(*a.to(), *b.to()) && a.components() == b.components();
}

// ---- 1 ----------------------------------------------------------------------------

Outcome conjugation_round_trip() {
  Outcome o;
  auto g = support::rng(101);
  std::size_t pairs = 0, triples = 0;
  auto one_pair = [&](const Adjunction& a, const Adjunction& b) {
    if (auto theta = support::forced_nat(a.F, b.F)) {
      auto phi = conjugate_left(*theta, a, b);
      o.require(check_nat_trans(phi).ok(), "j_l output not natural");
      o.require(same_components(*conjugate_right(phi, a, b), **theta), "j_r . j_l != id");
      ++pairs;
    }
    if (auto phi = support::forced_nat(b.U, a.U)) {
      o.require(same_components(*conjugate_left(conjugate_right(*phi, a, b), a, b), **phi), "j_l . j_r != id");
    }
  };
  std::size_t instances = 0;
  while (pairs < 200 || instances < 40) {
    auto inst = support::random_adjunctions(g, 6);
    ++instances;
    const auto& as = inst.adjunctions;
    for (const auto& a : as) {
      o.require(check_adjunction(a).ok(), "generated adjunction invalid");
      o.require(is_identity_nat(*conjugate_left(identity_nat(a->F), *a, *a)), "j_l(id) != id");
    }
    for (const auto& a : as)
      for (const auto& b : as) one_pair(*a, *b);
    // Composition reversal over every composable triple.
    for (const auto& a : as)
      for (const auto& b : as) {
        auto t1 = support::forced_nat(a->F, b->F);
        if (!t1) continue;
        for (const auto& c : as) {
          auto t2 = support::forced_nat(b->F, c->F);
          if (!t2) continue;
          auto lhs = conjugate_left(vertical(*t2, *t1), *a, *c);
          auto rhs = vertical(conjugate_left(*t1, *a, *b), conjugate_left(*t2, *b, *c));
          o.require(same_components(*lhs, *rhs), "composition reversal fails");
          ++triples;
        }
      }
  }
  // Powerset Galois connections f_! -| f* for every f : 3 -> 2, in one pair of categories.
  auto s = set_map_adjunctions({0, 0, 1}, 2);
  std::size_t galois = 0;
  one_pair(*s.lower, *s.lower);
  one_pair(*s.upper, *s.upper);
  std::vector<AdjunctionPtr> gal;
  for (int code = 0; code < 8; ++code) {
    std::vector<ObjId> img(8, 0);
    for (ObjId S = 0; S < 8; ++S)
      for (int i = 0; i < 3; ++i)
        if (S >> i & 1) img[S] |= ObjId(1) << (code >> i & 1);
    auto F = support::monotone("f_!", s.X->C(), s.Y->C(), img);
    auto U = posetal_right_adjoint(F, "f*");
    o.require(U.has_value(), "direct image without right adjoint");
    gal.push_back(*posetal_adjunction("galois", F, *U));
  }
  for (const auto& a : gal)
    for (const auto& b : gal) {
      auto before = pairs;
      one_pair(*a, *b);
      galois += pairs - before;
    }
  // Non-posetal check of reversal: shifted identities on Z/6, every triple and every theta.
  auto Z = support::cyclic(6);
  auto id = identity_functor(Z);
  std::vector<AdjunctionPtr> zs;
  for (MorId k = 0; k < 6; ++k) zs.push_back(make_adjunction("z", id, id, {k}, {MorId((6 - k) % 6)}));
  for (const auto& a : zs)
    for (const auto& b : zs)
      for (const auto& c : zs)
        for (MorId t1 = 0; t1 < 6; ++t1)
          for (MorId t2 = 0; t2 < 6; ++t2) {
            auto n1 = std::make_shared<NatTrans>("t1", id, id, std::vector<MorId>{t1});
            auto n2 = std::make_shared<NatTrans>("t2", id, id, std::vector<MorId>{t2});
            auto lhs = conjugate_left(vertical(n2, n1), *a, *c);
            auto rhs = vertical(conjugate_left(n1, *a, *b), conjugate_left(n2, *b, *c));
            o.require(lhs->components() == rhs->components(), "composition reversal fails on Z/6");
            ++triples;
          }
  o.require(pairs >= 200, "fewer than 200 pairs");
  o.require(galois > 0, "no Galois pairs");
  if (o.ok)
    o.detail = std::to_string(pairs) + " pairs over " + std::to_string(instances) + " random instances (" +
               std::to_string(galois) + " powerset Galois), " + std::to_string(triples) + " triples, seed " +
               std::to_string(support::seed());
  return o;
}

// ---- 2 ----------------------------------------------------------------------------

Outcome extranaturality() {
  Outcome o;
  std::size_t families = 0;
  for (std::size_t n : {2, 3}) {
    auto X = powerset(n);
    for (const auto& e : {X->ev_family(), X->coev_family()}) {
      o.require(check_extranatural(*e).ok(), "not extranatural");
      o.require(check_path_independence(*e).ok(), "path dependence");
      auto cell = hat(*e);
      o.require(check_profunctor_cell(cell).ok(), "hat is not a cell");
      auto back = unhat(cell);
      o.require(back->components() == e->components() && same_extranat(*back, *e), "unhat . hat != id");
      o.require(same_profunctor_cell(hat(*back), cell), "hat . unhat != id");
      ++families;
    }
  }
  if (o.ok) o.detail = std::to_string(families) + " families (ev, coev on powerset 2 and 3)";
  return o;
}

// ---- 3 ----------------------------------------------------------------------------

Outcome closed_monoidal() {
  Outcome o;
  std::string names;
  for (const auto& X : {powerset(2), powerset(3), chain(4), symmetric_group_3()}) {
    auto r = check_closed(X);
    if (!r.ok()) o.require(false, X->name + ": [" + r.violations().front().law + "] " + r.violations().front().witness);
    auto induced = induce_hom_functor(X->mon, per_object_adjunctions(*X));
    o.require(same_functor(*induced, *X->hom), X->name + ": induced hom differs");
    auto tv = check_two_var(*X->left);
    o.require(tv.ok(), X->name + ": triangle fails");
    names += (names.empty() ? "" : ", ") + X->name;
  }
  // Independent oracle for the powerset hom: complement-union on bitmasks.
  auto P = powerset(3);
  for (ObjId a = 0; a < 8; ++a)
    for (ObjId b = 0; b < 8; ++b) o.require(P->ihom(a, b) == ((~a & 7u) | b), "powerset hom oracle");
  if (o.ok) o.detail = names + ": induced hom, ev/coev extranatural, triangles, 9 filling cells";
  return o;
}

// ---- 4 ----------------------------------------------------------------------------

Outcome two_variable() {
  Outcome o;
  std::size_t composites = 0, round_trips = 0, degenerate = 0, shapes = 0;
  auto s = set_map_adjunctions({0, 0, 1}, 2);
  auto str = adjunction_string(s);
  auto shifted = shifted_adjunction_string(s);
  for (auto dir : {ShapeDirection::forward, ShapeDirection::reversed}) {
    auto st = ek::conjugate_shape_terms(dir);
    for (int row = 1; row <= 5; ++row) {
      auto fam = conjugate_pair_family(row, row <= 3 ? str : shifted, dir);
      o.require(check_two_var(*fam.adjunctions.left).ok() && check_two_var(*fam.adjunctions.right).ok(),
                "row " + std::to_string(row) + ": composite is not a two-variable adjunction");
      composites += 2;
      auto theta = support::forced_nat(fam.left_from(), fam.left_to());
      if (!theta) continue;
      auto phi = fam.to_right(*theta);
      o.require(same_components(*fam.to_left(phi), **theta), "conjugate_shape round-trip");
      auto ev = ek::evaluate(st.conjugate, ek::interpretation(st, fam.frame, *theta));
      o.require(ev.comps == phi->components(), "row " + std::to_string(row) + ": picture differs from operator");
      ++round_trips;
      ++shapes;
    }
  }
  // compose_two_var with random reparametrisations on powerset(3).
  auto g = support::rng(104);
  auto le = subset_order(3);
  auto maps = support::monotone_maps(le, le);
  for (int trial = 0; trial < 10; ++trial) {
    auto K = support::monotone("K", s.X->C(), s.X->C(), maps[g() % maps.size()]);
    auto a2 = identity_adjunction(s.X->C());
    auto c = compose_two_var(*s.X->left, K, *s.lower, *a2, "composite");
    o.require(check_two_var(*c).ok(), "compose_two_var output invalid");
    ++composites;
  }
  // A terminal: every pair of adjunctions in random posetal instances.
  for (int trial = 0; trial < 20; ++trial) {
    auto inst = support::random_adjunctions(g, 5);
    for (const auto& a : inst.adjunctions)
      for (const auto& b : inst.adjunctions) {
        auto theta = support::forced_nat(a->F, b->F);
        if (!theta) continue;
        auto la = two_var_from_adjunction(*a), lb = two_var_from_adjunction(*b);
        auto lift = NatTrans::build("theta2", la->T, lb->T, [&](ObjId x) {
          return (*theta)->at(la->T->source()->unpack_object(x)[1]);
        });
        auto phi2 = conjugate2_left(lift, *la, *lb);
        auto phi = conjugate_left(*theta, *a, *b);
        for (ObjId d = 0; d < inst.ld.size(); ++d)
          o.require(phi2->at(phi2->source()->pack_objects({0, d})) == phi->at(d), "A = 1 does not degenerate");
        o.require(same_components(*conjugate2_right(phi2, *la, *lb), *lift), "conjugate2 round-trip");
        ++degenerate;
        ++round_trips;
      }
  }
  o.require(shapes >= 5, "too few shape rows evaluated");
  if (o.ok)
    o.detail = std::to_string(composites) + " composites, " + std::to_string(round_trips) + " round-trips, " +
               std::to_string(degenerate) + " terminal-parameter pairs, " + std::to_string(shapes) +
               " shape evaluations";
  return o;
}

// ---- 5 ----------------------------------------------------------------------------

Outcome composability() {
  Outcome o;
  auto ex = ek::composability_example();
  o.require(ek::composable(ex.left()).ok, "left term rejected");
  auto right = ek::composable(ex.right());
  o.require(!right.ok && !right.loops.empty(), "right term accepted");
  auto alpha = ek::dcell(ek::make_cell("alpha", ek::CellGen::Kind::natural, ex.P, ex.P));
  auto gamma = ek::dcell(ek::make_cell("gamma", ek::CellGen::Kind::natural, ex.Q, ex.Q));
  auto b = ek::dcell(ex.beta), b1 = ek::dcell(ex.beta1), b2 = ek::dcell(ex.beta2);
  using ek::dvcomp;
  auto brackets = [&](const ek::DTerm& mid) {
    return std::vector<ek::DTerm>{dvcomp(gamma, dvcomp(mid, dvcomp(b, alpha))),
                                  dvcomp(dvcomp(gamma, mid), dvcomp(b, alpha)),
                                  dvcomp(dvcomp(dvcomp(gamma, mid), b), alpha),
                                  dvcomp(gamma, dvcomp(dvcomp(mid, b), alpha)),
                                  dvcomp(dvcomp(gamma, dvcomp(mid, b)), alpha)};
  };
  auto w0 = ek::composable(brackets(b2)[0]).witness();
  for (const auto& t : brackets(b2)) {
    auto c = ek::composable(t);
    o.require(!c.ok && c.witness() == w0, "rejection depends on bracketing");
  }
  for (const auto& t : brackets(b1)) o.require(ek::composable(t).ok, "left stacking rejected after re-association");
  if (o.ok) o.detail = "right term: " + right.witness() + "; stable over 5 bracketings";
  return o;
}

// ---- 6 ----------------------------------------------------------------------------

Outcome projection_formula() {
  Outcome o;
  auto s = set_map_adjunctions({0, 0, 1}, 2);
  auto pi = projection_operator(s.monoidal, *s.lower);
  auto cso = closed_structure_operator(s.monoidal);
  auto pinv = inverse(pi), cinv = inverse(cso);
  o.require(pinv.has_value(), "pi not invertible on powersets");
  o.require(cinv.has_value(), "closed-structure mate not invertible on powersets");
  if (!o.ok) return o;
  auto fam = conjugate_pair_family(2, adjunction_string(s), ShapeDirection::reversed);
  o.require(same_components(*fam.to_left(*cinv), **pinv), "pi^-1 is not the conjugate of the mate's inverse");
  o.require(same_components(*fam.to_right(*pinv), **cinv), "conjugate of pi^-1 is not the mate's inverse");

  std::string found;
  for (std::size_t bound : {5, 6}) {
    auto r = search_heyting_counterexample(bound);
    if (!r.first) {
      found = "no counterexample among " + std::to_string(r.algebras) + " Heyting algebras up to size " +
              std::to_string(bound);
      continue;
    }
    auto inst = materialize(*r.first);
    o.require(check_closed(inst.X).ok() && check_closed(inst.Y).ok(), "materialized algebras are not closed");
    o.require(check_adjunction(inst.lower).ok(), "materialized f_! -| f* invalid");
    o.require(!is_invertible(closed_structure_operator(inst.monoidal)), "Heyting mate invertible");
    o.require(!is_invertible(projection_operator(inst.monoidal, *inst.lower)), "Heyting pi invertible");
    found = "Heyting counterexample |Y| = " + std::to_string(inst.Y->C()->object_count()) +
            ", |X| = " + std::to_string(inst.X->C()->object_count()) + " at bound " + std::to_string(bound) + " (" +
            std::to_string(r.algebras) + " algebras, " + std::to_string(r.maps_examined) + " maps, " +
            std::to_string(r.counterexamples) + " counterexamples)";
    break;
  }
  if (o.ok) o.detail = "powerset: pi, mate invertible and pi^-1 = conjugate(mate^-1); " + found;
  return o;
}

// ---- 7 ----------------------------------------------------------------------------

struct Run {
  int status;
  std::string out;
};

Run conjcat(const std::string& args) {
  std::string cmd = std::string(CONJCAT_PATH) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw StructuralError("cannot run " + cmd);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome cli_contract() {
  Outcome o;
  const fs::path root = CONJ_SOURCE_DIR;
  std::size_t docs = 0;
  for (const auto& e : fs::directory_iterator(root / "definitions")) {
    if (e.path().extension() != ".conj") continue;
    auto text = slurp(e.path());
    auto f = e.path().filename().string();
    o.require(cli::serialize(cli::parse_document(text)) == text, f + ": serialize not byte-stable");
    auto fmt = conjcat("fmt " + e.path().string());
    o.require(fmt.status == 0 && fmt.out == text, f + ": fmt not byte-stable");
    o.require(conjcat("check " + e.path().string() + " --select all").status == 0, f + ": check all not green");
    ++docs;
  }
  o.require(docs > 0, "no shipped documents");
  auto tmp = fs::temp_directory_path() / "conjcat_acceptance";
  fs::create_directories(tmp);
  std::ofstream(tmp / "broken.conj") << "category A {\n  objects: [x\n}\n";
  std::ofstream(tmp / "dangling.conj") << "functor F {\n  source: Nope\n  target: Nope\n  objects: []\n}\n";
  auto loop = conjcat("check " + (root / "tests/data/loop.conj").string());
  o.require(loop.status == 1, "failing check does not exit 1");
  o.require(conjcat("check " + (tmp / "broken.conj").string()).status == 2, "parse error does not exit 2");
  o.require(conjcat("check " + (tmp / "dangling.conj").string()).status == 2, "dangling reference does not exit 2");
  o.require(conjcat("check " + (tmp / "absent.conj").string()).status == 2, "missing file does not exit 2");
  fs::remove_all(tmp);
  if (o.ok) o.detail = std::to_string(docs) + " documents byte-stable and green; exit codes 0/1/2";
  return o;
}

}  // namespace

int main() {
  criterion(1, "conjugation round-trip", 5, conjugation_round_trip);
  criterion(2, "extranaturality", 10, extranaturality);
  criterion(3, "closed monoidal reformulations", 10, closed_monoidal);
  criterion(4, "two-variable machinery", 10, two_variable);
  criterion(5, "EK composability", 10, composability);
  criterion(6, "projection formula", 60, projection_formula);
  criterion(7, "command-line tool", 30, cli_contract);
  return failures ? 1 : 0;
}
