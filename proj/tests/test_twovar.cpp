#include "catch_amalgamated.hpp"
#include "conj/closedmon/instances.hpp"
#include "support.hpp"

using namespace conjlib;

namespace {

// Z/n (one object) with T(f, g) = f + g and H(f, u) = s f + u on morphisms.
// Counit component e, unit component u.
TwoVarLPtr cyclic_two_var(const CategoryPtr& Z, MorId s, MorId e, MorId u) {
  const auto n = Z->morphism_count();
  auto T = Functor::build(
      "T", product({Z, Z}), Z, [](ObjId) { return ObjId(0); },
      [&](MorId m) {
        auto v = product({Z, Z})->unpack_morphism(m);
        return MorId((v[0] + v[1]) % n);
      });
  auto Hs = product({opposite(Z), Z});
  auto H = Functor::build(
      "H", Hs, Z, [](ObjId) { return ObjId(0); },
      [&](MorId m) {
        auto v = Hs->unpack_morphism(m);
        return MorId((s * v[0] + v[1]) % n);
      });
  return make_two_var_L("Zn", T, H, [=](ObjId, ObjId) { return e; }, [=](ObjId, ObjId) { return u; });
}

// The transformation between the two tensor functors T and T' whose
// component at (*, b) is theta_b, for adjunctions seen with A = 1.
NatTransPtr lift(const NatTransPtr& theta, const TwoVarAdjunctionL& a, const TwoVarAdjunctionL& b) {
  const auto& src = a.T->source();
  return NatTrans::build("theta2", a.T, b.T, [&](ObjId x) { return theta->at(src->unpack_object(x)[1]); });
}

}  // namespace

TEST_CASE("two-variable adjunctions on Z/n: extranatural iff s = 1, triangles iff e + u = 0", "[twovar]") {
  const std::size_t n = 4;
  auto Z = support::cyclic(n);
  for (MorId s = 0; s < n; ++s)
    for (MorId e = 0; e < n; ++e)
      for (MorId u = 0; u < n; ++u) {
        auto adj = cyclic_two_var(Z, s, e, u);
        bool expected = s == 1 && (e + u) % n == 0;
        CHECK(check_two_var(*adj).ok() == expected);
        CHECK(check_extranatural(*adj->eps).ok() == (s == 1));
      }
}

TEST_CASE("closed structures are two-variable adjunctions", "[twovar]") {
  for (const auto& X : {powerset(2), powerset(3), chain(4), symmetric_group_3(), cyclic_group(4)}) {
    INFO(X->name);
    CHECK(check_two_var(*X->left).ok());
  }
}

TEST_CASE("with A terminal, two-variable conjugation is ordinary conjugation", "[twovar]") {
  auto g = support::rng(31);
  int checked = 0;
  for (int trial = 0; trial < 15; ++trial) {
    auto inst = support::random_adjunctions(g, 5);
    const auto n = inst.adjunctions.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto& a = *inst.adjunctions[i];
        const auto& b = *inst.adjunctions[j];
        auto theta = support::forced_nat(a.F, b.F);
        if (!theta) continue;
        auto la = two_var_from_adjunction(a);
        auto lb = two_var_from_adjunction(b);
        CHECK(check_two_var(*la).ok());
        auto phi2 = conjugate2_left(lift(*theta, *la, *lb), *la, *lb);
        auto phi = conjugate_left(*theta, a, b);
        const auto& hs = phi2->source();
        for (ObjId d = 0; d < inst.ld.size(); ++d) CHECK(phi2->at(hs->pack_objects({0, d})) == phi->at(d));
        ++checked;
      }
  }
  CHECK(checked > 0);

  // Non-posetal: shifted identity adjunctions on Z/5.
  const std::size_t m = 5;
  auto Z = support::cyclic(m);
  auto id = identity_functor(Z);
  for (MorId k = 0; k < m; ++k)
    for (MorId k2 = 0; k2 < m; ++k2) {
      auto a = make_adjunction("a", id, id, {k}, {MorId((m - k) % m)});
      auto b = make_adjunction("b", id, id, {k2}, {MorId((m - k2) % m)});
      auto la = two_var_from_adjunction(*a), lb = two_var_from_adjunction(*b);
      for (MorId t = 0; t < m; ++t) {
        auto theta = std::make_shared<NatTrans>("t", id, id, std::vector<MorId>{t});
        auto phi2 = conjugate2_left(lift(theta, *la, *lb), *la, *lb);
        CHECK(phi2->at(0) == conjugate_left(theta, *a, *b)->at(0));
      }
    }
}

TEST_CASE("two-variable conjugation on Z/n adds the counit and unit shifts", "[twovar]") {
  // j_l(theta) = H(a, eps') . H(a, theta) . eta = e' + t + u with u = -e.
  const std::size_t n = 6;
  auto Z = support::cyclic(n);
  for (MorId e = 0; e < n; ++e)
    for (MorId e2 = 0; e2 < n; ++e2) {
      auto a = cyclic_two_var(Z, 1, e, MorId((n - e) % n));
      auto b = cyclic_two_var(Z, 1, e2, MorId((n - e2) % n));
      for (MorId t = 0; t < n; ++t) {
        auto theta = std::make_shared<NatTrans>("t", a->T, b->T, std::vector<MorId>{t});
        auto phi = conjugate2_left(theta, *a, *b);
        CHECK(phi->at(0) == (e2 + t + n - e) % n);
        CHECK(conjugate2_right(phi, *a, *b)->at(0) == t);
      }
    }
}

TEST_CASE("two-variable conjugation round-trips on reparametrised powerset hom", "[twovar]") {
  // T_K(a, b) = K a n b for monotone K; K <= K' gives T_K => T_K' and
  // the conjugate H_K' => H_K with H_K(a, c) = ~K a u c.
  auto X = powerset(2);
  support::Rel le(4, std::vector<bool>(4));
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) le[x][y] = (x & ~y) == 0;
  auto maps = support::monotone_maps(le, le);
  auto idX = identity_adjunction(X->C());
  int pairs = 0;
  for (const auto& k : maps)
    for (const auto& k2 : maps) {
      bool below = true;
      for (std::size_t x = 0; x < 4; ++x) below = below && le[k[x]][k2[x]];
      if (!below) continue;
      auto K = support::monotone("K", X->C(), X->C(), k);
      auto K2 = support::monotone("K'", X->C(), X->C(), k2);
      auto a = compose_two_var(*X->left, K, *idX, *idX, "a");
      auto b = compose_two_var(*X->left, K2, *idX, *idX, "b");
      auto theta = support::forced_nat(a->T, b->T);
      REQUIRE(theta.has_value());
      auto phi = conjugate2_left(*theta, *a, *b);
      CHECK(check_nat_trans(phi).ok());
      const auto& C = *X->C();
      const auto& hs = *phi->source();
      for (ObjId x = 0; x < hs.object_count(); ++x) {
        auto v = hs.unpack_object(x);
        CHECK(C.source(phi->at(x)) == ((~k2[v[0]] & 3u) | v[1]));
        CHECK(C.target(phi->at(x)) == ((~k[v[0]] & 3u) | v[1]));
      }
      CHECK(same_nat(*conjugate2_right(phi, *a, *b), **theta));
      ++pairs;
    }
  CHECK(pairs > 10);
}

TEST_CASE("composites of two-variable adjunctions with ordinary ones are adjunctions", "[twovar]") {
  auto g = support::rng(32);
  // Powerset: F1 = f_! along f : X -> Y, F2 = g_! along g : W -> X, K monotone.
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<std::size_t> f(3), h(2);
    for (auto& v : f) v = g() % 2;
    for (auto& v : h) v = g() % 3;
    auto sf = set_map_adjunctions(f, 2);
    auto X = sf.X;
    auto W = powerset(2);
    support::Rel le(8, std::vector<bool>(8));
    for (std::size_t x = 0; x < 8; ++x)
      for (std::size_t y = 0; y < 8; ++y) le[x][y] = (x & ~y) == 0;
    auto maps = support::monotone_maps(le, le);
    auto K = support::monotone("K", X->C(), X->C(), maps[g() % maps.size()]);
    // g_! : P(W) -> P(X) as the direct image into X's own category.
    std::vector<ObjId> img(4);
    for (ObjId S = 0; S < 4; ++S)
      for (int w = 0; w < 2; ++w)
        if (S >> w & 1) img[S] |= ObjId(1) << h[w];
    auto gl = support::monotone("g_!", W->C(), X->C(), img);
    auto gu = posetal_right_adjoint(gl, "g*");
    REQUIRE(gu.has_value());
    auto adj2 = *posetal_adjunction("g", gl, *gu);
    auto comp = compose_two_var(*X->left, K, *sf.lower, *adj2, "composite");
    CHECK(check_two_var(*comp).ok());
  }
  // Z/n with shifted identity adjunctions and scaling reparametrisations.
  const std::size_t n = 5;
  auto Z = support::cyclic(n);
  auto id = identity_functor(Z);
  auto base = cyclic_two_var(Z, 1, 2, 3);
  REQUIRE(check_two_var(*base).ok());
  for (MorId k1 = 0; k1 < n; ++k1)
    for (MorId k2 = 0; k2 < n; k2 += 2)
      for (std::size_t m = 0; m < n; ++m) {
        auto a1 = make_adjunction("a1", id, id, {k1}, {MorId((n - k1) % n)});
        auto a2 = make_adjunction("a2", id, id, {k2}, {MorId((n - k2) % n)});
        auto comp = compose_two_var(*base, support::scale(Z, m, "K"), *a1, *a2, "composite");
        CHECK(check_two_var(*comp).ok());
      }
}

TEST_CASE("a fixed parameter gives an ordinary adjunction", "[twovar]") {
  auto X = powerset(3);
  for (ObjId a = 0; a < 8; ++a) {
    auto adj = adjunction_at(*X->left, a);
    CHECK(check_adjunction(adj).ok());
    for (ObjId b = 0; b < 8; ++b) CHECK(adj->F->obj(b) == (a & b));
  }
}
