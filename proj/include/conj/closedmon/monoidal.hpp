#pragma once

// Strict monoidal categories, left closed structure as tensor -|_L hom, the
// hom functor induced from per-object adjunctions, and the componentwise
// re-verification of the closed-structure theorems.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "conj/adjoint/adjunction.hpp"
#include "conj/twovar/twovar.hpp"

namespace conjlib {

struct MonoidalCategory {
  CategoryPtr base;
  FunctorPtr tensor;  // C x C -> C
  ObjId unit = 0;
  bool strict = true;

  ObjId tensor_obj(ObjId x, ObjId y) const { return tensor->obj(tensor->source()->pack_objects({x, y})); }
  MorId tensor_mor(MorId f, MorId g) const { return tensor->mor(tensor->source()->pack_morphisms({f, g})); }
};

inline ValidationReport check_monoidal(const MonoidalCategory& m) {
  ValidationReport report("monoidal category " + m.base->name());
  const auto& C = *m.base;
  if (!same_category(m.tensor->source(), product({m.base, m.base})) || !same_category(m.tensor->target(), m.base))
    throw StructuralError("monoidal category " + C.name() + ": tensor must be " + C.name() + " x " + C.name() +
                          " -> " + C.name());
  if (m.unit >= C.object_count()) throw StructuralError("monoidal category " + C.name() + ": unit undeclared");
  report.absorb(check_functor(*m.tensor));
  if (!m.strict) return report;
  for (ObjId x = 0; x < C.object_count(); ++x) {
    if (m.tensor_obj(m.unit, x) != x || m.tensor_obj(x, m.unit) != x)
      report.fail("unit-object", "unit does not act strictly on " + C.object_name(x));
    for (ObjId y = 0; y < C.object_count(); ++y)
      for (ObjId z = 0; z < C.object_count(); ++z)
        if (m.tensor_obj(m.tensor_obj(x, y), z) != m.tensor_obj(x, m.tensor_obj(y, z)))
          report.fail("associativity-object",
                      "(" + C.object_name(x) + "," + C.object_name(y) + "," + C.object_name(z) + ")");
  }
  auto id1 = C.identity(m.unit);
  for (MorId f = 0; f < C.morphism_count(); ++f) {
    if (m.tensor_mor(id1, f) != f || m.tensor_mor(f, id1) != f)
      report.fail("unit-morphism", "unit does not act strictly on " + C.morphism_name(f));
    for (MorId g = 0; g < C.morphism_count(); ++g)
      for (MorId h = 0; h < C.morphism_count(); ++h)
        if (m.tensor_mor(m.tensor_mor(f, g), h) != m.tensor_mor(f, m.tensor_mor(g, h)))
          report.fail("associativity-morphism",
                      "(" + C.morphism_name(f) + "," + C.morphism_name(g) + "," + C.morphism_name(h) + ")");
  }
  return report;
}

struct ClosedMonoidalCategory {
  std::string name;
  MonoidalCategory mon;
  FunctorPtr hom;    // op(C) x C -> C, written c -o a or [c, a]
  TwoVarLPtr left;   // tensor -|_L hom; counit = ev, unit = coev
  FunctorPtr hom_r;  // optional right hom C x op(C) -> C
  TwoVarRPtr right;  // optional tensor -|_R hom_r

  const CategoryPtr& C() const { return mon.base; }
  ObjId tensor(ObjId x, ObjId y) const { return mon.tensor_obj(x, y); }
  MorId tensor_mor(MorId f, MorId g) const { return mon.tensor_mor(f, g); }
  ObjId ihom(ObjId c, ObjId a) const { return left->H_obj(c, a); }
  // [f, u] for f : c -> c' (acting contravariantly) and u : a -> a'.
  MorId ihom_mor(MorId f, MorId u) const { return left->H_mor(f, u); }
  // ev_{c,a} : c (x) [c, a] -> a
  MorId ev(ObjId c, ObjId a) const { return left->eps_at(c, a); }
  // coev_{c,a} : a -> [c, c (x) a]
  MorId coev(ObjId c, ObjId a) const { return left->eta_at(c, a); }
  const ExtranatPtr& ev_family() const { return left->eps; }
  const ExtranatPtr& coev_family() const { return left->eta; }
};
using ClosedPtr = std::shared_ptr<const ClosedMonoidalCategory>;

inline ClosedPtr make_closed(std::string name, MonoidalCategory mon, FunctorPtr hom,
                             const std::function<MorId(ObjId c, ObjId a)>& ev,
                             const std::function<MorId(ObjId c, ObjId a)>& coev) {
  auto left = make_two_var_L(name, mon.tensor, hom, ev, coev);
  return std::make_shared<ClosedMonoidalCategory>(
      ClosedMonoidalCategory{std::move(name), std::move(mon), std::move(hom), std::move(left), nullptr, nullptr});
}

// Packages a monoidal category with a left-sided adjunction tensor -|_L hom.
inline ClosedPtr from_two_var(std::string name, MonoidalCategory mon, const TwoVarLPtr& adj) {
  if (!same_functor(*adj->T, *mon.tensor))
    throw StructuralError("closed structure " + name + ": left adjoint is not the tensor");
  if (!same_category(adj->A, mon.base) || !same_category(adj->B, mon.base))
    throw StructuralError("closed structure " + name + ": adjunction is not over the base category");
  return std::make_shared<ClosedMonoidalCategory>(
      ClosedMonoidalCategory{std::move(name), std::move(mon), adj->H, adj, nullptr, nullptr});
}

inline TwoVarLPtr to_two_var(const ClosedMonoidalCategory& c) { return c.left; }

// Hom functor assembled from adjunctions c (x) - -| [c, -], one per object:
//   [f, a] = [c, ev_{c',a}] . [c, f (x) [c',a]] . coev_{c,[c',a]},   [f, u] = [c, u] . [f, a].
inline FunctorPtr induce_hom_functor(const MonoidalCategory& mon, const std::vector<AdjunctionPtr>& per_object,
                                     std::string name = "[-,-]") {
  const auto& C = *mon.base;
  if (per_object.size() != C.object_count())
    throw StructuralError("induce_hom_functor: expected one adjunction per object of " + C.name() + ", got " +
                          std::to_string(per_object.size()));
  for (ObjId c = 0; c < C.object_count(); ++c) {
    if (!per_object[c]) throw StructuralError("induce_hom_functor: missing adjunction at " + C.object_name(c));
    const auto& adj = *per_object[c];
    if (!same_category(adj.C(), mon.base) || !same_category(adj.D(), mon.base))
      throw StructuralError("induce_hom_functor: adjunction " + adj.name + " is not an endo-adjunction of " + C.name());
    for (ObjId x = 0; x < C.object_count(); ++x)
      if (adj.F->obj(x) != mon.tensor_obj(c, x))
        throw StructuralError("induce_hom_functor: left adjoint at " + C.object_name(c) + " is not c (x) -");
  }
  auto src = product({opposite(mon.base), mon.base});
  return Functor::build(
      std::move(name), src, mon.base,
      [&](ObjId x) {
        auto v = src->unpack_object(x);
        return per_object[v[0]]->U->obj(v[1]);
      },
      [&](MorId m) {
        auto v = src->unpack_morphism(m);
        auto f = v[0];  // f : c -> c' in C
        auto u = v[1];  // u : a -> a'
        auto c = C.source(f), c2 = C.target(f), a = C.source(u);
        const auto& Uc = *per_object[c]->U;
        const auto& Uc2 = *per_object[c2]->U;
        auto hc2a = Uc2.obj(a);
        auto ev_c2a = per_object[c2]->eps->at(a);
        auto coev = per_object[c]->eta->at(hc2a);
        auto fa = C.chain(Uc.mor(ev_c2a), Uc.mor(mon.tensor_mor(f, C.identity(hc2a))), coev);
        return C.then(Uc.mor(u), fa);
      });
}

inline std::vector<AdjunctionPtr> per_object_adjunctions(const ClosedMonoidalCategory& c) {
  std::vector<AdjunctionPtr> out;
  for (ObjId x = 0; x < c.C()->object_count(); ++x) out.push_back(adjunction_at(*c.left, x));
  return out;
}

// Componentwise versions of the closed-structure theorems: extranaturality of
// ev and coev in the first parameter, the triangle identities, the hom functor
// induced by (**) against the supplied one, and every interior cell of the
// two diagram-filling proofs.
inline ValidationReport check_closed(const ClosedMonoidalCategory& cm) {
  ValidationReport report("closed monoidal category " + cm.name);
  report.absorb(check_monoidal(cm.mon));
  if (!same_functor(*cm.left->T, *cm.mon.tensor) || !same_functor(*cm.left->H, *cm.hom))
    throw StructuralError("closed monoidal category " + cm.name + ": adjunction does not pair tensor with hom");
  report.absorb(check_two_var(*cm.left));
  if (cm.right) report.absorb(check_two_var(*cm.right));
  if (!report.ok()) return report;

  const auto& C = *cm.C();
  auto name = [&](MorId m) { return C.morphism_name(m); };
  auto cell = [&](const char* law, MorId lhs, MorId rhs, const std::string& at) {
    if (lhs != rhs) report.fail(law, at + ": " + name(lhs) + " != " + name(rhs));
  };
  auto id = [&](ObjId x) { return C.identity(x); };

  for (MorId f = 0; f < C.morphism_count(); ++f) {
    auto c = C.source(f), c2 = C.target(f);
    for (ObjId a = 0; a < C.object_count(); ++a) {
      std::string at = "f = " + name(f) + ", a = " + C.object_name(a);
      auto h2a = cm.ihom(c2, a);                   // [c', a]
      auto fa = cm.ihom_mor(f, id(a));             // [f, a] : [c', a] -> [c, a]
      auto f_h2a = cm.tensor_mor(f, id(h2a));      // f (x) [c', a]
      auto coev_c = cm.coev(c, h2a);               // [c', a] -> [c, c (x) [c', a]]
      auto ev_c2a = cm.ev(c2, a);                  // c' (x) [c', a] -> a
      auto c_h2a = cm.tensor(c, h2a);
      auto c2_h2a = cm.tensor(c2, h2a);
      auto ihom_c_f = cm.ihom_mor(id(c), f_h2a);   // [c, f (x) [c', a]]
      auto ihom_c_ev = cm.ihom_mor(id(c), ev_c2a); // [c, ev_{c',a}]

      // extranaturality in the first parameter
      cell("ev-extranatural", C.then(ev_c2a, f_h2a), C.then(cm.ev(c, a), cm.tensor_mor(id(c), fa)), at);
      cell("coev-extranatural", C.then(cm.ihom_mor(f, id(cm.tensor(c2, a))), cm.coev(c2, a)),
           C.then(cm.ihom_mor(id(c), cm.tensor_mor(f, id(a))), cm.coev(c, a)), at);

      // (**): [f, a] is the lower composite
      cell("hom-definition", fa, C.chain(ihom_c_ev, ihom_c_f, coev_c), at);

      // first filling: ev square
      cell("fill-ev-triangle", C.then(f_h2a, id(c_h2a)), f_h2a, at);
      cell("fill-ev-zigzag", C.then(cm.ev(c, c_h2a), cm.tensor_mor(id(c), coev_c)), id(c_h2a), at);
      cell("fill-ev-definition", cm.tensor_mor(id(c), fa),
           C.chain(cm.tensor_mor(id(c), ihom_c_ev), cm.tensor_mor(id(c), ihom_c_f), cm.tensor_mor(id(c), coev_c)), at);
      cell("fill-ev-naturality-1", C.then(cm.ev(c, c2_h2a), cm.tensor_mor(id(c), ihom_c_f)),
           C.then(f_h2a, cm.ev(c, c_h2a)), at);
      cell("fill-ev-naturality-2", C.then(ev_c2a, cm.ev(c, c2_h2a)),
           C.then(cm.ev(c, a), cm.tensor_mor(id(c), ihom_c_ev)), at);

      // second filling: (**) from extranaturality
      auto coev_c2 = cm.coev(c2, h2a);  // [c', a] -> [c', c' (x) [c', a]]
      auto ihom_c2_ev = cm.ihom_mor(id(c2), ev_c2a);
      cell("fill-hom-zigzag", C.then(ihom_c2_ev, coev_c2), id(h2a), at);
      cell("fill-hom-coev-extranatural", C.then(cm.ihom_mor(f, id(c2_h2a)), coev_c2), C.then(ihom_c_f, coev_c), at);
      cell("fill-hom-bifunctor", C.then(ihom_c_ev, cm.ihom_mor(f, id(c2_h2a))), C.then(fa, ihom_c2_ev), at);
      cell("fill-hom-exterior", C.chain(fa, ihom_c2_ev, coev_c2), C.chain(ihom_c_ev, ihom_c_f, coev_c), at);
    }
  }

  auto induced = induce_hom_functor(cm.mon, per_object_adjunctions(cm));
  if (!same_functor(*induced, *cm.hom)) {
    const auto& src = *cm.hom->source();
    for (MorId m = 0; m < src.morphism_count(); ++m)
      if (induced->mor(m) != cm.hom->mor(m)) {
        report.fail("induced-hom", "at " + src.morphism_name(m) + ": induced " + name(induced->mor(m)) +
                                       ", supplied " + name(cm.hom->mor(m)));
        break;
      }
  }
  return report;
}
inline ValidationReport check_closed(const ClosedPtr& c) { return check_closed(*c); }

// f* : Y -> X with omega : (x)_X . (f* x f*) => f* . (x)_Y.
struct MonoidalFunctorData {
  ClosedPtr X, Y;
  FunctorPtr f_star;
  NatTransPtr omega;
};

inline ValidationReport check_monoidal_functor(const MonoidalFunctorData& m) {
  ValidationReport report("monoidal functor " + m.f_star->name());
  if (!same_category(m.f_star->source(), m.Y->C()) || !same_category(m.f_star->target(), m.X->C()))
    throw StructuralError("monoidal functor " + m.f_star->name() + ": must go " + m.Y->C()->name() + " -> " +
                          m.X->C()->name());
  auto from = compose(m.X->mon.tensor, product({m.f_star, m.f_star}));
  auto to = compose(m.f_star, m.Y->mon.tensor);
  if (!same_functor(*m.omega->from(), *from) || !same_functor(*m.omega->to(), *to))
    throw StructuralError("monoidal functor " + m.f_star->name() + ": omega must run (x).(f* x f*) => f*.(x)");
  report.absorb(check_functor(*m.f_star));
  report.absorb(check_nat_trans(*m.omega));
  return report;
}

}  // namespace conjlib
