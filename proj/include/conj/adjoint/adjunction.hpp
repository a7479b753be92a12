#pragma once

// Ordinary adjunctions F -| U with unit and counit, and conjugation
//   j_l : Nat(F, F') -> Nat(U', U),   j_r : Nat(U', U) -> Nat(F, F').

#include <memory>
#include <optional>
#include <string>

#include "conj/fincat/functor.hpp"

namespace conjlib {

struct Adjunction {
  std::string name;
  FunctorPtr F;     // C -> D
  FunctorPtr U;     // D -> C
  NatTransPtr eta;  // id_C => U.F
  NatTransPtr eps;  // F.U => id_D

  const CategoryPtr& C() const { return F->source(); }
  const CategoryPtr& D() const { return F->target(); }
};
using AdjunctionPtr = std::shared_ptr<const Adjunction>;

namespace detail {
inline void require_adjunction_shape(const Adjunction& a) {
  auto bad = [&](const std::string& what) { throw StructuralError("adjunction " + a.name + ": " + what); };
  if (!same_category(a.U->source(), a.D()) || !same_category(a.U->target(), a.C()))
    bad("U must go " + a.D()->name() + " -> " + a.C()->name());
  if (!same_category(a.eta->source(), a.C()) || !same_category(a.eta->target(), a.C()))
    bad("unit must be a transformation of endofunctors of " + a.C()->name());
  if (!same_category(a.eps->source(), a.D()) || !same_category(a.eps->target(), a.D()))
    bad("counit must be a transformation of endofunctors of " + a.D()->name());
  for (ObjId c = 0; c < a.C()->object_count(); ++c) {
    auto m = a.eta->at(c);
    if (a.C()->source(m) != c || a.C()->target(m) != a.U->obj(a.F->obj(c)))
      bad("unit component at " + a.C()->object_name(c) + " is not c -> UF c");
  }
  for (ObjId d = 0; d < a.D()->object_count(); ++d) {
    auto m = a.eps->at(d);
    if (a.D()->source(m) != a.F->obj(a.U->obj(d)) || a.D()->target(m) != d)
      bad("counit component at " + a.D()->object_name(d) + " is not FU d -> d");
  }
}
}  // namespace detail

inline AdjunctionPtr make_adjunction(std::string name, FunctorPtr F, FunctorPtr U, std::vector<MorId> eta,
                                     std::vector<MorId> eps) {
  auto C = F->source();
  auto D = F->target();
  auto idC = identity_functor(C);
  auto idD = identity_functor(D);
  auto UF = compose(U, F);
  auto FU = compose(F, U);
  auto a = std::make_shared<Adjunction>(Adjunction{
      name, F, U, std::make_shared<NatTrans>("eta_" + name, idC, UF, std::move(eta)),
      std::make_shared<NatTrans>("eps_" + name, FU, idD, std::move(eps))});
  detail::require_adjunction_shape(*a);
  return a;
}

inline AdjunctionPtr identity_adjunction(const CategoryPtr& c) {
  auto id = identity_functor(c);
  std::vector<MorId> ids(c->object_count());
  for (ObjId x = 0; x < ids.size(); ++x) ids[x] = c->identity(x);
  return make_adjunction("id_" + c->name(), id, id, ids, ids);
}

// Zig-zags: eps_{F c} . F(eta_c) = id_{F c} and U(eps_d) . eta_{U d} = id_{U d}.
inline ValidationReport check_adjunction(const Adjunction& a) {
  ValidationReport report("adjunction " + a.name);
  detail::require_adjunction_shape(a);
  const auto& C = *a.C();
  const auto& D = *a.D();
  report.absorb(check_functor(*a.F));
  report.absorb(check_functor(*a.U));
  report.absorb(check_nat_trans(*a.eta));
  report.absorb(check_nat_trans(*a.eps));
  for (ObjId c = 0; c < C.object_count(); ++c) {
    auto z = D.then(a.eps->at(a.F->obj(c)), a.F->mor(a.eta->at(c)));
    if (z != D.identity(a.F->obj(c)))
      report.fail("zigzag-F", "at " + C.object_name(c) + ": eps_Fc . F(eta_c) = " + D.morphism_name(z));
  }
  for (ObjId d = 0; d < D.object_count(); ++d) {
    auto z = C.then(a.U->mor(a.eps->at(d)), a.eta->at(a.U->obj(d)));
    if (z != C.identity(a.U->obj(d)))
      report.fail("zigzag-U", "at " + D.object_name(d) + ": U(eps_d) . eta_Ud = " + C.morphism_name(z));
  }
  return report;
}
inline ValidationReport check_adjunction(const AdjunctionPtr& a) { return check_adjunction(*a); }

namespace detail {
inline void require_parallel(const Adjunction& a, const Adjunction& b, const char* op) {
  if (!same_category(a.C(), b.C()) || !same_category(a.D(), b.D()))
    throw StructuralError(std::string(op) + ": adjunctions " + a.name + " and " + b.name +
                          " do not share endpoint categories");
}
}  // namespace detail

// j_l(theta)_d = U(eps'_d) . U(theta_{U' d}) . eta_{U' d} for theta : F => F'.
inline NatTransPtr conjugate_left(const NatTransPtr& theta, const Adjunction& a, const Adjunction& a2,
                                  std::string name = {}) {
  detail::require_parallel(a, a2, "conjugate_left");
  if (!same_functor(*theta->from(), *a.F) || !same_functor(*theta->to(), *a2.F))
    throw StructuralError("conjugate_left: " + theta->name() + " must run " + a.F->name() + " => " + a2.F->name());
  const auto& C = *a.C();
  if (name.empty()) name = "j_l(" + theta->name() + ")";
  return NatTrans::build(std::move(name), a2.U, a.U, [&](ObjId d) {
    auto u2d = a2.U->obj(d);
    return C.chain(a.U->mor(a2.eps->at(d)), a.U->mor(theta->at(u2d)), a.eta->at(u2d));
  });
}

// j_r(phi)_c = eps_{F' c} . F(phi_{F' c}) . F(eta'_c) for phi : U' => U.
inline NatTransPtr conjugate_right(const NatTransPtr& phi, const Adjunction& a, const Adjunction& a2,
                                   std::string name = {}) {
  detail::require_parallel(a, a2, "conjugate_right");
  if (!same_functor(*phi->from(), *a2.U) || !same_functor(*phi->to(), *a.U))
    throw StructuralError("conjugate_right: " + phi->name() + " must run " + a2.U->name() + " => " + a.U->name());
  const auto& D = *a.D();
  if (name.empty()) name = "j_r(" + phi->name() + ")";
  return NatTrans::build(std::move(name), a.F, a2.F, [&](ObjId c) {
    auto f2c = a2.F->obj(c);
    return D.chain(a.eps->at(f2c), a.F->mor(phi->at(f2c)), a.F->mor(a2.eta->at(c)));
  });
}

// Adjunction from a hom-set bijection D(F c, d) ~ C(c, U d): the unit is the
// transpose of id_{F c}, the counit the inverse transpose of id_{U d}.
inline AdjunctionPtr adjunction_from_hom_bijection(std::string name, FunctorPtr F, FunctorPtr U,
                                                   const std::function<MorId(ObjId c, ObjId d, MorId)>& transpose,
                                                   const std::function<MorId(ObjId c, ObjId d, MorId)>& untranspose) {
  const auto& C = *F->source();
  const auto& D = *F->target();
  std::vector<MorId> eta(C.object_count()), eps(D.object_count());
  for (ObjId c = 0; c < eta.size(); ++c) eta[c] = transpose(c, F->obj(c), D.identity(F->obj(c)));
  for (ObjId d = 0; d < eps.size(); ++d) eps[d] = untranspose(U->obj(d), d, C.identity(U->obj(d)));
  return make_adjunction(std::move(name), std::move(F), std::move(U), std::move(eta), std::move(eps));
}

// Between categories with at most one arrow per hom-set, F -| U iff
// F c <= d <=> c <= U d, and unit and counit are forced.
inline std::optional<AdjunctionPtr> posetal_adjunction(std::string name, FunctorPtr F, FunctorPtr U) {
  const auto& C = *F->source();
  const auto& D = *F->target();
  std::vector<MorId> eta(C.object_count()), eps(D.object_count());
  for (ObjId c = 0; c < eta.size(); ++c) {
    auto m = unique_arrow(C, c, U->obj(F->obj(c)));
    if (!m) return std::nullopt;
    eta[c] = *m;
  }
  for (ObjId d = 0; d < eps.size(); ++d) {
    auto m = unique_arrow(D, F->obj(U->obj(d)), d);
    if (!m) return std::nullopt;
    eps[d] = *m;
  }
  return make_adjunction(std::move(name), std::move(F), std::move(U), std::move(eta), std::move(eps));
}

// Right adjoint of a monotone map between finite posets, if it exists:
// U d = the greatest c with F c <= d.
inline std::optional<FunctorPtr> posetal_right_adjoint(const FunctorPtr& F, std::string name) {
  const auto& C = *F->source();
  const auto& D = *F->target();
  std::vector<ObjId> u(D.object_count());
  for (ObjId d = 0; d < D.object_count(); ++d) {
    std::optional<ObjId> best;
    for (ObjId c = 0; c < C.object_count(); ++c) {
      if (!unique_arrow(D, F->obj(c), d)) continue;
      if (!best || unique_arrow(C, *best, c)) best = c;
    }
    if (!best) return std::nullopt;
    for (ObjId c = 0; c < C.object_count(); ++c)
      if (unique_arrow(D, F->obj(c), d) && !unique_arrow(C, c, *best)) return std::nullopt;
    u[d] = *best;
  }
  std::vector<MorId> mors(D.morphism_count());
  for (MorId m = 0; m < mors.size(); ++m) {
    auto r = unique_arrow(C, u[D.source(m)], u[D.target(m)]);
    if (!r) return std::nullopt;
    mors[m] = *r;
  }
  return std::make_shared<Functor>(std::move(name), F->target(), F->source(), std::move(u), std::move(mors));
}

// Left adjoint: L c = the least d with c <= U d.
inline std::optional<FunctorPtr> posetal_left_adjoint(const FunctorPtr& U, std::string name) {
  const auto& D = *U->source();
  const auto& C = *U->target();
  std::vector<ObjId> l(C.object_count());
  for (ObjId c = 0; c < C.object_count(); ++c) {
    std::optional<ObjId> best;
    for (ObjId d = 0; d < D.object_count(); ++d) {
      if (!unique_arrow(C, c, U->obj(d))) continue;
      if (!best || unique_arrow(D, d, *best)) best = d;
    }
    if (!best) return std::nullopt;
    for (ObjId d = 0; d < D.object_count(); ++d)
      if (unique_arrow(C, c, U->obj(d)) && !unique_arrow(D, *best, d)) return std::nullopt;
    l[c] = *best;
  }
  std::vector<MorId> mors(C.morphism_count());
  for (MorId m = 0; m < mors.size(); ++m) {
    auto r = unique_arrow(D, l[C.source(m)], l[C.target(m)]);
    if (!r) return std::nullopt;
    mors[m] = *r;
  }
  return std::make_shared<Functor>(std::move(name), U->target(), U->source(), std::move(l), std::move(mors));
}

}  // namespace conjlib
