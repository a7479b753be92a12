#include "catch_amalgamated.hpp"
#include "conj/closedmon/instances.hpp"
#include "support.hpp"

using namespace conjlib;

namespace {

// On Z/n (one object) the identity functor is its own adjoint with unit k
// and counit j exactly when j = -k.
AdjunctionPtr shifted_identity(const CategoryPtr& Z, MorId k, MorId j) {
  auto id = identity_functor(Z);
  return make_adjunction("shift" + std::to_string(k), id, id, {k}, {j});
}

}  // namespace

TEST_CASE("right and left adjoints of monotone maps match a direct search", "[adjoint]") {
  auto g = support::rng(21);
  int with_right = 0, without = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto lc = support::random_order(g, 1 + g() % 5);
    auto ld = support::random_order(g, 1 + g() % 5);
    auto C = support::poset("C", lc);
    auto D = support::poset("D", ld);
    auto maps = support::monotone_maps(lc, ld);
    for (std::size_t i = 0; i < maps.size() && i < 30; ++i) {
      const auto& f = maps[(g() % maps.size())];
      auto F = support::monotone("F", C, D, f);
      auto want = support::right_adjoint_by_search(lc, ld, f);
      bool exists = std::find(want.begin(), want.end(), -1) == want.end();
      auto got = posetal_right_adjoint(F, "U");
      REQUIRE(got.has_value() == exists);
      if (!exists) {
        ++without;
        continue;
      }
      ++with_right;
      for (ObjId d = 0; d < D->object_count(); ++d) CHECK(int((*got)->obj(d)) == want[d]);
      auto back = posetal_left_adjoint(*got, "F'");
      REQUIRE(back.has_value());
      CHECK((*back)->object_map() == F->object_map());
      auto adj = posetal_adjunction("a", F, *got);
      REQUIRE(adj.has_value());
      CHECK(check_adjunction(*adj).ok());
    }
  }
  CHECK(with_right > 0);
  CHECK(without > 0);
}

TEST_CASE("a unit and counit form an adjunction exactly when the zig-zags hold", "[adjoint]") {
  auto Z = support::cyclic(4);
  for (MorId k = 0; k < 4; ++k)
    for (MorId j = 0; j < 4; ++j) {
      auto r = check_adjunction(shifted_identity(Z, k, j));
      CHECK(r.ok() == ((k + j) % 4 == 0));
    }
}

TEST_CASE("mates between posetal adjunctions exist exactly when the right adjoints are reversed", "[adjoint]") {
  auto g = support::rng(22);
  int pairs = 0;
  for (int trial = 0; trial < 30; ++trial) {
    auto inst = support::random_adjunctions(g, 5);
    const auto n = inst.adjunctions.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto& a = *inst.adjunctions[i];
        const auto& b = *inst.adjunctions[j];
        bool left_below = true, right_above = true;
        for (ObjId c = 0; c < inst.lc.size(); ++c) left_below = left_below && inst.ld[inst.left[i][c]][inst.left[j][c]];
        for (ObjId d = 0; d < inst.ld.size(); ++d)
          right_above = right_above && inst.lc[inst.right[j][d]][inst.right[i][d]];
        CHECK(left_below == right_above);
        auto theta = support::forced_nat(a.F, b.F);
        REQUIRE(theta.has_value() == left_below);
        if (!theta) continue;
        auto phi = conjugate_left(*theta, a, b);
        CHECK(check_nat_trans(phi).ok());
        CHECK(same_functor(*phi->from(), *b.U));
        CHECK(same_functor(*phi->to(), *a.U));
        CHECK(same_nat(*conjugate_right(phi, a, b), **theta));
        ++pairs;
      }
  }
  CHECK(pairs > 0);
}

TEST_CASE("conjugation on cyclic groups shifts by the units", "[adjoint]") {
  // j_l(theta) = U eps' . U theta . eta = theta + k - k'.
  const std::size_t n = 5;
  auto Z = support::cyclic(n);
  auto id = identity_functor(Z);
  for (MorId k = 0; k < n; ++k)
    for (MorId k2 = 0; k2 < n; ++k2) {
      auto a = shifted_identity(Z, k, MorId((n - k) % n));
      auto b = shifted_identity(Z, k2, MorId((n - k2) % n));
      for (MorId t = 0; t < n; ++t) {
        auto theta = std::make_shared<NatTrans>("theta", id, id, std::vector<MorId>{t});
        auto phi = conjugate_left(theta, *a, *b);
        CHECK(phi->at(0) == (t + k + n - k2) % n);
        CHECK(conjugate_right(phi, *a, *b)->at(0) == t);
      }
    }
}

TEST_CASE("conjugation along group automorphisms applies the inverse automorphism", "[adjoint]") {
  // F = multiplication by m, U = by its inverse; unit and counit are identities.
  const std::size_t n = 7;
  auto Z = support::cyclic(n);
  for (std::size_t m = 1; m < n; ++m) {
    std::size_t minv = 1;
    while ((m * minv) % n != 1) ++minv;
    auto F = support::scale(Z, m, "F");
    auto U = support::scale(Z, minv, "U");
    auto adj = make_adjunction("auto", F, U, {0}, {0});
    REQUIRE(check_adjunction(adj).ok());
    for (MorId t = 0; t < n; ++t) {
      auto theta = std::make_shared<NatTrans>("theta", F, F, std::vector<MorId>{t});
      REQUIRE(check_nat_trans(theta).ok());
      auto phi = conjugate_left(theta, *adj, *adj);
      CHECK(phi->at(0) == (t * minv) % n);
      CHECK(conjugate_right(phi, *adj, *adj)->at(0) == t);
    }
  }
}

TEST_CASE("conjugation reverses vertical composition", "[adjoint]") {
  const std::size_t n = 6;
  auto Z = support::cyclic(n);
  auto id = identity_functor(Z);
  std::vector<AdjunctionPtr> adjs;
  for (MorId k = 0; k < n; ++k) adjs.push_back(shifted_identity(Z, k, MorId((n - k) % n)));
  auto nat = [&](MorId t) { return std::make_shared<NatTrans>("t", id, id, std::vector<MorId>{t}); };
  for (const auto& a : adjs)
    for (const auto& b : adjs)
      for (const auto& c : adjs)
        for (MorId t = 0; t < n; t += 2)
          for (MorId s = 1; s < n; s += 2) {
            auto theta = nat(t), theta2 = nat(s);
            auto lhs = conjugate_left(vertical(theta2, theta), *a, *c);
            auto rhs = vertical(conjugate_left(theta, *a, *b), conjugate_left(theta2, *b, *c));
            CHECK(same_nat(*lhs, *rhs));
          }
  for (const auto& a : adjs) CHECK(is_identity_nat(*conjugate_left(identity_nat(id), *a, *a)));
}

TEST_CASE("the powerset Galois connection conjugates inclusions of images", "[adjoint]") {
  // f : {a,b,c} -> {p,q}; conjugating the identity of f_! gives the identity of f*.
  auto s = set_map_adjunctions({0, 0, 1}, 2);
  const auto& lo = *s.lower;
  CHECK(check_adjunction(lo).ok());
  CHECK(check_adjunction(*s.upper).ok());
  auto phi = conjugate_left(identity_nat(lo.F), lo, lo);
  CHECK(is_identity_nat(*phi));
  // f_! S = {f(x) : x in S}, f* T = {x : f(x) in T} on bitmasks.
  for (ObjId S = 0; S < 8; ++S) {
    ObjId img = 0;
    for (int x = 0; x < 3; ++x)
      if (S >> x & 1) img |= ObjId(1) << (x < 2 ? 0 : 1);
    CHECK(lo.F->obj(S) == img);
  }
  for (ObjId T = 0; T < 4; ++T) {
    ObjId pre = ((T & 1) ? 3u : 0u) | ((T & 2) ? 4u : 0u);
    CHECK(lo.U->obj(T) == pre);
  }
}

TEST_CASE("adjunctions from hom-set bijections recover the forced unit and counit", "[adjoint]") {
  auto g = support::rng(23);
  auto inst = support::random_adjunctions(g, 5);
  REQUIRE_FALSE(inst.adjunctions.empty());
  for (const auto& a : inst.adjunctions) {
    auto C = a->C();
    auto D = a->D();
    auto b = adjunction_from_hom_bijection(
        "b", a->F, a->U, [&](ObjId c, ObjId d, MorId) { return *unique_arrow(*C, c, a->U->obj(d)); },
        [&](ObjId c, ObjId d, MorId) { return *unique_arrow(*D, a->F->obj(c), d); });
    CHECK(same_nat(*b->eta, *a->eta));
    CHECK(same_nat(*b->eps, *a->eps));
  }
}
