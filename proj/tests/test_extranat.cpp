#include "catch_amalgamated.hpp"
#include "conj/closedmon/instances.hpp"
#include "conj/extranat/hat.hpp"
#include "support.hpp"

using namespace conjlib;

namespace {

// Linear functors Z3^3 -> Z3 on a one-object category: every coefficient
// choice is a functor because the group is abelian.
FunctorPtr linear(const CategoryPtr& src, const CategoryPtr& Z, std::array<int, 3> k, const std::string& name) {
  return Functor::build(
      name, src, Z, [](ObjId) { return ObjId(0); },
      [&](MorId m) {
        auto v = src->unpack_morphism(m);
        return MorId((k[0] * v[0] + k[1] * v[1] + k[2] * v[2]) % 3);
      });
}

support::Rel subset_order(std::size_t n) {
  const std::size_t N = std::size_t(1) << n;
  support::Rel le(N, std::vector<bool>(N));
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y) le[x][y] = (x & ~y) == 0;
  return le;
}

}  // namespace

TEST_CASE("extranaturality over Z3 holds exactly when the paired coefficients agree", "[extranat]") {
  auto Z = support::cyclic(3);
  auto psrc = product({Z, opposite(Z), Z});
  auto qsrc = product({Z, opposite(Z), Z});
  int good = 0, total = 0;
  for (int code = 0; code < 729; ++code) {
    int c = code;
    std::array<int, 6> k{};
    for (auto& x : k) {
      x = c % 3;
      c /= 3;
    }
    auto P = linear(psrc, Z, {k[0], k[1], k[2]}, "P");
    auto Q = linear(qsrc, Z, {k[3], k[4], k[5]}, "Q");
    REQUIRE(check_functor(P).ok());
    ExtranatFrame fr(Z, Z, Z, Z, P, Q);
    bool expected = k[0] == k[1] && k[4] == k[5] && k[2] == k[3];
    for (MorId beta = 0; beta < 3; ++beta) {
      auto e = std::make_shared<ExtranatTrans>("beta", fr, std::vector<MorId>{beta});
      auto r = check_extranatural(*e);
      CHECK(r.ok() == expected);
      CHECK(check_path_independence(*e).ok() == expected);
      CHECK(check_profunctor_cell(hat(*e)).ok() == expected);
      if (expected) CHECK(same_extranat(*unhat(hat(*e)), *e));
      good += r.ok();
      ++total;
    }
  }
  CHECK(good == 27 * 3);  // 3 values for each of the three shared coefficients, any component
  CHECK(total == 729 * 3);
}

TEST_CASE("evaluation and coevaluation of powersets are extranatural", "[extranat]") {
  for (std::size_t n : {1, 2, 3}) {
    auto X = powerset(n);
    const auto& C = *X->C();
    const std::size_t full = (std::size_t(1) << n) - 1;
    const auto& ev = *X->ev_family();
    const auto& coev = *X->coev_family();
    CHECK(check_extranatural(ev).ok());
    CHECK(check_extranatural(coev).ok());
    CHECK(check_path_independence(ev).ok());
    CHECK(check_path_independence(coev).ok());
    // ev_{a,c} : a n (~a u c) -> c and coev_{a,b} : b -> ~a u (a n b), on bitmasks.
    for (std::size_t a = 0; a <= full; ++a)
      for (std::size_t c = 0; c <= full; ++c) {
        auto m = X->ev(ObjId(a), ObjId(c));
        CHECK(C.source(m) == (a & ((~a | c) & full)));
        CHECK(C.target(m) == c);
        auto u = X->coev(ObjId(a), ObjId(c));
        CHECK(C.source(u) == c);
        CHECK(C.target(u) == (((~a) & full) | (a & c)));
      }
  }
}

TEST_CASE("hat and unhat are mutually inverse on powerset evaluation", "[extranat]") {
  for (std::size_t n : {2, 3}) {
    auto X = powerset(n);
    for (const auto& e : {X->ev_family(), X->coev_family()}) {
      auto cell = hat(*e);
      CHECK(check_profunctor_cell(cell).ok());
      auto back = unhat(cell);
      CHECK(same_extranat(*back, *e));
      CHECK(same_profunctor_cell(hat(*back), cell));
    }
  }
}

TEST_CASE("a mistyped component is rejected when the family is built", "[extranat]") {
  auto X = powerset(2);
  const auto& ev = *X->ev_family();
  auto comps = ev.components();
  const auto& C = *X->C();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (MorId m = 0; m < C.morphism_count(); ++m) {
      if (m == comps[i]) continue;
      auto bad = comps;
      bad[i] = m;
      bool typed = C.source(m) == C.source(comps[i]) && C.target(m) == C.target(comps[i]);
      if (typed) continue;  // posetal: the only typed arrow is the original
      CHECK_THROWS_AS(ExtranatTrans("bad", ev.frame(), bad), StructuralError);
      break;
    }
  }
}

TEST_CASE("whiskering by monotone maps preserves extranaturality", "[extranat]") {
  auto X = powerset(2);
  auto le = subset_order(2);
  auto maps = support::monotone_maps(le, le);
  auto g = support::rng(11);
  const auto& ev = X->ev_family();
  const auto& fr = ev->frame();
  auto one = fr.B;
  for (int trial = 0; trial < 12; ++trial) {
    auto G = support::monotone("G", X->C(), X->C(), maps[g() % maps.size()]);
    auto F = support::monotone("F", X->C(), X->C(), maps[g() % maps.size()]);
    auto K = support::monotone("K", X->C(), X->C(), maps[g() % maps.size()]);
    auto w = whisker(ev, G, F, identity_functor(one), K);
    CHECK(check_extranatural(*w).ok());
    for (ObjId a = 0; a < 4; ++a)
      for (ObjId c = 0; c < 4; ++c) CHECK(w->at(a, c, 0) == K->mor(ev->at(G->obj(a), F->obj(c), 0)));
  }
}

TEST_CASE("threading natural transformations above or below gives the same family", "[extranat]") {
  auto X = powerset(2);
  auto le = subset_order(2);
  auto maps = support::monotone_maps(le, le);
  auto g = support::rng(12);
  const auto& ev = X->ev_family();
  const auto& fr = ev->frame();
  auto forced = [&](const FunctorPtr& F, const FunctorPtr& G) -> std::optional<NatTransPtr> {
    for (ObjId x = 0; x < F->source()->object_count(); ++x)
      if (!unique_arrow(*F->target(), F->obj(x), G->obj(x))) return std::nullopt;
    return NatTrans::build("t", F, G, [&](ObjId x) { return *unique_arrow(*F->target(), F->obj(x), G->obj(x)); });
  };
  auto random_nat = [&]() {
    while (true) {
      auto F = support::monotone("F", X->C(), X->C(), maps[g() % maps.size()]);
      auto G = support::monotone("G", X->C(), X->C(), maps[g() % maps.size()]);
      if (auto t = forced(F, G)) return *t;
    }
  };
  auto id1 = identity_nat(identity_functor(fr.B));
  int done = 0;
  for (int trial = 0; trial < 10; ++trial) {
    auto phi = random_nat(), gamma = random_nat(), kappa = random_nat();
    auto below = compose_with_naturals(ev, phi, gamma, id1, kappa, InsertionOrder::below);
    auto above = compose_with_naturals(ev, phi, gamma, id1, kappa, InsertionOrder::above);
    CHECK(check_extranatural(*below).ok());
    CHECK(same_extranat(*below, *above) == true);
    ++done;
  }
  CHECK(done == 10);
}

TEST_CASE("natural transformations embed as extranaturals with terminal ends", "[extranat]") {
  auto Z = support::cyclic(4);
  auto id = identity_functor(Z);
  for (MorId k = 0; k < 4; ++k) {
    auto t = std::make_shared<NatTrans>("t", id, id, std::vector<MorId>{k});
    auto e = from_nat_trans(t);
    CHECK(check_extranatural(*e).ok());
    auto back = to_nat_trans(*e);
    CHECK(back->components() == t->components());
  }
}
