#include <tuple>

#include "catch_amalgamated.hpp"
#include "conj/closedmon/operators.hpp"
#include "conj/ekgraph/standard_terms.hpp"
#include "support.hpp"

using namespace conjlib;
using namespace conjlib::ek;

namespace {

AdjunctionPtr shifted_identity(const CategoryPtr& Z, MorId unit, MorId counit) {
  auto id = identity_functor(Z);
  return make_adjunction("shift", id, id, {unit}, {counit});
}

// Z/n with T(f, g) = f + g, H(f, u) = u - f; counit e, unit -e.
TwoVarLPtr cyclic_closed(const CategoryPtr& Z, MorId e) {
  const auto n = Z->morphism_count();
  auto Ts = product({Z, Z});
  auto T = Functor::build(
      "T", Ts, Z, [](ObjId) { return ObjId(0); },
      [=](MorId m) {
        auto v = Ts->unpack_morphism(m);
        return MorId((v[0] + v[1]) % n);
      });
  auto Hs = product({opposite(Z), Z});
  auto H = Functor::build(
      "H", Hs, Z, [](ObjId) { return ObjId(0); },
      [=](MorId m) {
        auto v = Hs->unpack_morphism(m);
        return MorId((v[0] + v[1]) % n);
      });
  return make_two_var_L("Zn", T, H, [=](ObjId, ObjId) { return e; },
                        [=](ObjId, ObjId) { return MorId((n - e) % n); });
}

}  // namespace

TEST_CASE("the left stacking is composable and its arcs are exported", "[ekgraph]") {
  auto ex = composability_example();
  auto c = composable(ex.left());
  CHECK(c.ok);
  CHECK(c.loops.empty());
  auto g = ek_graph(ex.left());
  // Bottom P over [C, C^op, A], top Q over [A, B, B^op]: a cap on C, a cup on B,
  // and A runs through from bottom to top.
  CHECK(g.arcs.size() == 3);
  CHECK(export_arcs(g) == std::vector<std::string>{"arc b0 b1 C", "arc b2 t0 A", "arc t1 t2 B"});
  CHECK_FALSE(is_straight(g));
}

TEST_CASE("the right stacking is rejected with a loop witness", "[ekgraph]") {
  auto ex = composability_example();
  auto c = composable(ex.right());
  CHECK_FALSE(c.ok);
  REQUIRE(c.loops.size() == 1);
  CHECK(c.loops[0].label == "A");
  CHECK(c.witness() == "loop on A through beta2:b1-b2 beta:t1-t2");
  CHECK(composable(dcell(ex.beta), dcell(ex.beta2)).witness() == c.witness());
  auto lines = export_arcs(ek_graph(ex.right()));
  CHECK(lines.back() == "loop A beta2:b1-b2 beta:t1-t2");
}

TEST_CASE("the loop witness does not depend on how the stacking is bracketed", "[ekgraph]") {
  auto ex = composability_example();
  auto alpha = dcell(make_cell("alpha", CellGen::Kind::natural, ex.P, ex.P));
  auto gamma = dcell(make_cell("gamma", CellGen::Kind::natural, ex.Q, ex.Q));
  auto b = dcell(ex.beta), b2 = dcell(ex.beta2);
  std::vector<DTerm> bracketings{
      dvcomp(gamma, dvcomp(b2, dvcomp(b, alpha))),
      dvcomp(dvcomp(gamma, b2), dvcomp(b, alpha)),
      dvcomp(dvcomp(dvcomp(gamma, b2), b), alpha),
      dvcomp(gamma, dvcomp(dvcomp(b2, b), alpha)),
      dvcomp(dvcomp(gamma, dvcomp(b2, b)), alpha),
  };
  auto first = composable(bracketings[0]);
  CHECK_FALSE(first.ok);
  for (const auto& t : bracketings) {
    auto c = composable(t);
    CHECK(c.witness() == first.witness());
    CHECK(export_arcs(ek_graph(t)) == export_arcs(ek_graph(bracketings[0])));
  }
  // The well-formed stacking stays well-formed under every bracketing.
  auto b1 = dcell(ex.beta1);
  CHECK(composable(dvcomp(gamma, dvcomp(b1, dvcomp(b, alpha)))).ok);
  CHECK(composable(dvcomp(dvcomp(dvcomp(gamma, b1), b), alpha)).ok);
}

TEST_CASE("ill-formed pictures are refused", "[ekgraph]") {
  auto ex = composability_example();
  CHECK_THROWS_AS(dvcomp(dcell(ex.beta), dcell(ex.beta1)), InterfaceMismatch);
  CHECK_THROWS_AS(make_cell("bad", CellGen::Kind::natural, ex.P, ex.R, {{0, 1}}), StructuralError);
  CHECK_THROWS_AS(make_cell("bad", CellGen::Kind::extranatural, ex.P, ex.R, {{0, 2}}, {{1, 2}}), StructuralError);
  auto D = fgen("G", w("D"), w("D"));
  CHECK_THROWS_AS(dhcomp(dwire(D), dhcomp(dcell(ex.beta), dwire(fid(w("A"))))), StructuralError);
}

TEST_CASE("evaluation refuses a looped stacking and evaluates the composable one", "[ekgraph]") {
  auto ex = composability_example();
  // Every wire is the terminal category and every functor is constant.
  auto T = support::cyclic(1, "1");
  auto src = product({T, opposite(T), T});
  auto konst = [&](const std::string& n) {
    return Functor::build(n, src, T, [](ObjId) { return ObjId(0); }, [](MorId) { return MorId(0); });
  };
  Interpretation I;
  for (auto c : {"A", "B", "C", "D"}) I.categories[c] = T;
  for (auto f : {"P", "R", "Q"}) I.functors[f] = konst(f);
  for (auto [cell, from, to] : {std::tuple{"beta", "P", "R"}, {"beta1", "R", "Q"}, {"beta2", "R", "Q"}}) {
    ExtranatFrame fr(T, T, T, T, I.functors[from], I.functors[to]);
    I.extranaturals[cell] = std::make_shared<ExtranatTrans>(cell, fr, std::vector<MorId>{0});
  }
  auto left = evaluate(ex.left(), I);
  CHECK(left.comps == std::vector<MorId>{0});
  CHECK_FALSE(left.natural());
  try {
    evaluate(ex.right(), I);
    FAIL("a looped stacking was evaluated");
  } catch (const LoopError& e) {
    CHECK(e.result.witness() == "loop on A through beta2:b1-b2 beta:t1-t2");
  }
}

TEST_CASE("the zig-zag picture evaluates to the identity", "[ekgraph]") {
  auto t = adjunction_terms("C", "D");
  CHECK(is_straight(zigzag_term(t)));
  auto g = support::rng(51);
  int checked = 0;
  for (int trial = 0; trial < 20; ++trial) {
    auto inst = support::random_adjunctions(g, 5);
    for (const auto& a : inst.adjunctions) {
      Interpretation I;
      bind_terms(I, t, *a);
      auto fam = evaluate(zigzag_term(t), I);
      CHECK(is_identity_nat(*fam.to_nat_trans("z")));
      ++checked;
    }
  }
  CHECK(checked > 0);
  auto Z = support::cyclic(6);
  for (MorId k = 0; k < 6; ++k) {
    Interpretation I;
    bind_terms(I, t, *shifted_identity(Z, k, MorId((6 - k) % 6)));
    CHECK(evaluate(zigzag_term(t), I).comps == std::vector<MorId>{0});
  }
}

TEST_CASE("the conjugation picture evaluates to the left conjugate", "[ekgraph]") {
  auto a = adjunction_terms("C", "D");
  auto a2 = adjunction_terms("C", "D", "'");
  auto theta = make_cell("theta", CellGen::Kind::natural, a.F, a2.F);
  auto term = conjugate_left_term(a, a2, theta);
  auto g = support::rng(52);
  int checked = 0;
  for (int trial = 0; trial < 20; ++trial) {
    auto inst = support::random_adjunctions(g, 5);
    for (const auto& x : inst.adjunctions)
      for (const auto& y : inst.adjunctions) {
        auto t = support::forced_nat(x->F, y->F);
        if (!t) continue;
        Interpretation I;
        bind_terms(I, a, *x);
        bind_terms(I, a2, *y);
        I.naturals["theta"] = *t;
        CHECK(evaluate(term, I).comps == conjugate_left(*t, *x, *y)->components());
        ++checked;
      }
  }
  CHECK(checked > 0);
  // Z/5: the picture computes t + k - k'.
  auto Z = support::cyclic(5);
  auto id = identity_functor(Z);
  for (MorId k = 0; k < 5; ++k)
    for (MorId k2 = 0; k2 < 5; ++k2)
      for (MorId s = 0; s < 5; ++s) {
        Interpretation I;
        bind_terms(I, a, *shifted_identity(Z, k, MorId((5 - k) % 5)));
        bind_terms(I, a2, *shifted_identity(Z, k2, MorId((5 - k2) % 5)));
        I.naturals["theta"] = std::make_shared<NatTrans>("theta", id, id, std::vector<MorId>{s});
        CHECK(evaluate(term, I).comps == std::vector<MorId>{MorId((s + k + 5 - k2) % 5)});
      }
}

TEST_CASE("the two-variable conjugation picture evaluates to conjugate2_left", "[ekgraph]") {
  auto adj = two_var_generators("A", "B", "C");
  auto adj2 = two_var_generators("A", "B", "C", "'");
  auto theta = make_cell("theta", CellGen::Kind::natural, adj.T, adj2.T);
  auto term = conjugate2_left_term(adj, adj2, theta);
  CHECK(is_straight(term));
  auto Z = support::cyclic(6);
  for (MorId e = 0; e < 6; ++e)
    for (MorId e2 = 0; e2 < 6; ++e2) {
      auto L = cyclic_closed(Z, e), L2 = cyclic_closed(Z, e2);
      REQUIRE(check_two_var(*L).ok());
      for (MorId s = 0; s < 6; ++s) {
        auto t = std::make_shared<NatTrans>("theta", L->T, L2->T, std::vector<MorId>{s});
        Interpretation I;
        bind_terms(I, adj, *L);
        bind_terms(I, adj2, *L2);
        I.naturals["theta"] = t;
        auto got = evaluate(term, I);
        CHECK(got.comps == conjugate2_left(t, *L, *L2)->components());
        CHECK(got.comps == std::vector<MorId>{MorId((e2 + s + 6 - e) % 6)});
      }
    }
  for (const auto& X : {powerset(2), chain(3), symmetric_group_3()}) {
    Interpretation I;
    bind_terms(I, adj, *X->left);
    bind_terms(I, adj2, *X->left);
    I.naturals["theta"] = identity_nat(X->left->T);
    CHECK(is_identity_nat(*evaluate(term, I).to_nat_trans("id")));
  }
}

TEST_CASE("the conjugate-shape picture agrees with the direct operator", "[ekgraph]") {
  auto s = set_map_adjunctions({0, 0, 1}, 2);
  auto str = adjunction_string(s);
  auto shifted = shifted_adjunction_string(s);
  int checked = 0;
  for (auto dir : {ShapeDirection::forward, ShapeDirection::reversed}) {
    auto st = conjugate_shape_terms(dir);
    for (int row = 1; row <= 5; ++row) {
      INFO("row " << row);
      auto fam = conjugate_pair_family(row, row <= 3 ? str : shifted, dir);
      auto theta = support::forced_nat(fam.left_from(), fam.left_to());
      if (!theta) continue;
      auto got = evaluate(st.conjugate, interpretation(st, fam.frame, *theta));
      CHECK(got.comps == fam.to_right(*theta)->components());
      ++checked;
    }
  }
  CHECK(checked >= 5);
}
