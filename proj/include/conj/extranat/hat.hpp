#pragma once

// Extranatural transformations P -..-> Q correspond to profunctor 2-cells
//   E_C x Id_A x N_B  =>  Id_D   framed by P and Q,
// with components C(c,c') x A(a,a') x B(b,b') -> D(P(c,c',a), Q(a',b,b')).

#include "conj/extranat/extranat.hpp"
#include "conj/fincat/profunctor.hpp"

namespace conjlib {

// E_C x Id_A x N_B : C x op(C) x A -|-> A x op(B) x B.  The element (f, h, g)
// lives over ((c, c', a), (a', b, b')) for f : c -> c', h : a -> a',
// g : b -> b'; its id is the mixed-radix packing of (f, h, g).
inline ProfunctorPtr extranat_source_profunctor(const CategoryPtr& C, const CategoryPtr& A, const CategoryPtr& B) {
  auto X = product({C, opposite(C), A});
  auto Y = product({A, opposite(B), B});
  const auto nA = A->morphism_count();
  const auto nB = B->morphism_count();
  std::vector<Profunctor::Element> elems;
  elems.reserve(C->morphism_count() * nA * nB);
  for (MorId f = 0; f < C->morphism_count(); ++f)
    for (MorId h = 0; h < nA; ++h)
      for (MorId g = 0; g < nB; ++g)
        elems.push_back({X->pack_objects({C->source(f), C->target(f), A->source(h)}),
                         Y->pack_objects({A->target(h), B->source(g), B->target(g)}),
                         "(" + C->morphism_name(f) + "," + A->morphism_name(h) + "," + B->morphism_name(g) + ")"});
  auto pack = [=](MorId f, MorId h, MorId g) { return ElemId((std::size_t(f) * nA + h) * nB + g); };
  auto unpack = [=](ElemId e) {
    return std::array<MorId, 3>{MorId(e / nB / nA), MorId(e / nB % nA), MorId(e % nB)};
  };
  auto left = [=](MorId u, ElemId e) {
    auto [f, h, g] = unpack(e);
    auto us = X->unpack_morphism(u);  // u1 : c1 -> c, u2 : c' -> c1' in C, u3 : a1 -> a
    return pack(C->chain(us[1], f, us[0]), A->then(h, us[2]), g);
  };
  auto right = [=](MorId v, ElemId e) {
    auto [f, h, g] = unpack(e);
    auto vs = Y->unpack_morphism(v);  // v1 : a' -> a2, v2 : b2 -> b in B, v3 : b' -> b2'
    return pack(f, A->then(vs[0], h), B->chain(vs[2], g, vs[1]));
  };
  return std::make_shared<Profunctor>("E_" + C->name() + " x Id_" + A->name() + " x N_" + B->name(), X, Y,
                                      std::move(elems), left, right, Profunctor::Shape::extranat_source,
                                      std::vector<CategoryPtr>{C, A, B});
}

namespace detail {
inline ElemId hom_element(const Profunctor& hom, const Category& d, MorId m) {
  for (auto e : hom.value_set(d.source(m), d.target(m)))
    if (hom.element(e).label == d.morphism_name(m)) return e;
  throw StructuralError("no element " + d.morphism_name(m) + " in " + hom.name());
}
}  // namespace detail

// Component at (f, h, g) is Q(h, id_b, g) . beta_{c',a,b} . P(f, id_{c'}, id_a).
inline ProfunctorCell hat(const ExtranatTrans& e) {
  const auto& fr = e.frame();
  const auto& C = *fr.C;
  const auto& A = *fr.A;
  const auto& B = *fr.B;
  const auto& D = *fr.D;
  auto src = extranat_source_profunctor(fr.C, fr.A, fr.B);
  auto tgt = hom_profunctor(fr.D);
  std::vector<ElemId> comp(src->element_count());
  ElemId i = 0;
  for (MorId f = 0; f < C.morphism_count(); ++f)
    for (MorId h = 0; h < A.morphism_count(); ++h)
      for (MorId g = 0; g < B.morphism_count(); ++g, ++i) {
        auto c2 = C.target(f);
        auto a = A.source(h);
        auto b = B.source(g);
        auto m = D.chain(fr.Q_mor(h, B.identity(b), g), e.at(c2, a, b), fr.P_mor(f, C.identity(c2), A.identity(a)));
        comp[i] = detail::hom_element(*tgt, D, m);
      }
  return ProfunctorCell("hat(" + e.name() + ")", src, tgt, fr.P, fr.Q, std::move(comp));
}

// beta_{c,a,b} = gamma(id_c, id_a, id_b).
inline ExtranatPtr unhat(const ProfunctorCell& cell, std::string name = {}) {
  const auto& dom = *cell.domain();
  const auto& cod = *cell.codomain();
  if (dom.shape() != Profunctor::Shape::extranat_source)
    throw StructuralError("unhat: domain " + dom.name() + " is not of the form E_C x Id_A x N_B");
  if (cod.shape() != Profunctor::Shape::hom)
    throw StructuralError("unhat: codomain " + cod.name() + " is not an identity profunctor");
  auto C = dom.shape_args()[0];
  auto A = dom.shape_args()[1];
  auto B = dom.shape_args()[2];
  auto D = cod.shape_args()[0];
  ExtranatFrame fr(C, A, B, D, cell.left_functor(), cell.right_functor());
  const auto nA = A->morphism_count();
  const auto nB = B->morphism_count();
  if (name.empty()) name = "unhat(" + cell.name() + ")";
  return ExtranatTrans::build(std::move(name), fr, [&](ObjId c, ObjId a, ObjId b) {
    auto e = ElemId((std::size_t(C->identity(c)) * nA + A->identity(a)) * nB + B->identity(b));
    return element_morphism(cod, *D, cell[e]);
  });
}

}  // namespace conjlib
