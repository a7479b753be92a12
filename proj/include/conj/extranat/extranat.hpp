#pragma once

// Extranatural transformations beta_{c,a,b} : P(c,c,a) -> Q(a,b,b) for
// P : C x op(C) x A -> D and Q : A x op(B) x B -> D.

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "conj/fincat/functor.hpp"

namespace conjlib {

// The four categories and two functors of an extranatural transformation.
// Factor layout is fixed: P's source is product(C, op(C), A) and Q's source
// is product(A, op(B), B).  Other layouts are brought into this one by
// composing with a reindexing functor; terminal factors stay explicit.
struct ExtranatFrame {
  CategoryPtr C, A, B, D;
  FunctorPtr P, Q;

  ExtranatFrame(CategoryPtr c, CategoryPtr a, CategoryPtr b, CategoryPtr d, FunctorPtr p, FunctorPtr q)
      : C(std::move(c)), A(std::move(a)), B(std::move(b)), D(std::move(d)), P(std::move(p)), Q(std::move(q)) {
    if (!same_category(P->source(), p_source()))
      throw StructuralError("extranatural frame: P has source " + P->source()->name() + ", expected " +
                            p_source()->name());
    if (!same_category(Q->source(), q_source()))
      throw StructuralError("extranatural frame: Q has source " + Q->source()->name() + ", expected " +
                            q_source()->name());
    if (!same_category(P->target(), D) || !same_category(Q->target(), D))
      throw StructuralError("extranatural frame: P and Q must both land in " + D->name());
  }

  CategoryPtr p_source() const { return product({C, opposite(C), A}); }
  CategoryPtr q_source() const { return product({A, opposite(B), B}); }

  std::size_t size() const { return C->object_count() * A->object_count() * B->object_count(); }
  std::size_t index(ObjId c, ObjId a, ObjId b) const {
    return (std::size_t(c) * A->object_count() + a) * B->object_count() + b;
  }
  std::array<ObjId, 3> unindex(std::size_t i) const {
    auto nb = B->object_count();
    auto na = A->object_count();
    return {ObjId(i / nb / na), ObjId(i / nb % na), ObjId(i % nb)};
  }

  ObjId P_obj(ObjId c1, ObjId c2, ObjId a) const { return P->obj(P->source()->pack_objects({c1, c2, a})); }
  ObjId Q_obj(ObjId a, ObjId b1, ObjId b2) const { return Q->obj(Q->source()->pack_objects({a, b1, b2})); }
  // P(f1, f2, h): f1 : c1 -> c1' in C, f2 : c2' -> c2 in C (read in op(C)), h in A.
  MorId P_mor(MorId f1, MorId f2, MorId h) const { return P->mor(P->source()->pack_morphisms({f1, f2, h})); }
  // Q(h, g1, g2): h in A, g1 : b1' -> b1 in B (read in op(B)), g2 in B.
  MorId Q_mor(MorId h, MorId g1, MorId g2) const { return Q->mor(Q->source()->pack_morphisms({h, g1, g2})); }
};

inline bool same_frame(const ExtranatFrame& x, const ExtranatFrame& y) {
  return same_category(x.C, y.C) && same_category(x.A, y.A) && same_category(x.B, y.B) &&
         same_category(x.D, y.D) && same_functor(*x.P, *y.P) && same_functor(*x.Q, *y.Q);
}

class ExtranatTrans;
using ExtranatPtr = std::shared_ptr<const ExtranatTrans>;

class ExtranatTrans {
 public:
  ExtranatTrans(std::string name, ExtranatFrame frame, std::vector<MorId> components)
      : name_(std::move(name)), frame_(std::move(frame)), comp_(std::move(components)) {
    if (comp_.size() != frame_.size())
      throw StructuralError("extranatural " + name_ + ": expected " + std::to_string(frame_.size()) +
                            " components, got " + std::to_string(comp_.size()));
    const auto& d = *frame_.D;
    for (std::size_t i = 0; i < comp_.size(); ++i) {
      auto [c, a, b] = frame_.unindex(i);
      auto m = comp_[i];
      if (m >= d.morphism_count())
        throw StructuralError("extranatural " + name_ + ": component outside " + d.name());
      auto src = frame_.P_obj(c, c, a);
      auto tgt = frame_.Q_obj(a, b, b);
      if (d.source(m) != src || d.target(m) != tgt)
        throw StructuralError("extranatural " + name_ + ": component at (" + frame_.C->object_name(c) + "," +
                              frame_.A->object_name(a) + "," + frame_.B->object_name(b) + ") is " +
                              d.morphism_name(m) + ", expected " + d.object_name(src) + " -> " +
                              d.object_name(tgt));
    }
  }

  static ExtranatPtr build(std::string name, ExtranatFrame frame,
                           const std::function<MorId(ObjId c, ObjId a, ObjId b)>& component) {
    std::vector<MorId> cs(frame.size());
    for (std::size_t i = 0; i < cs.size(); ++i) {
      auto [c, a, b] = frame.unindex(i);
      cs[i] = component(c, a, b);
    }
    return std::make_shared<ExtranatTrans>(std::move(name), std::move(frame), std::move(cs));
  }

  const std::string& name() const { return name_; }
  const ExtranatFrame& frame() const { return frame_; }
  MorId at(ObjId c, ObjId a, ObjId b) const { return comp_[frame_.index(c, a, b)]; }
  const std::vector<MorId>& components() const { return comp_; }

 private:
  std::string name_;
  ExtranatFrame frame_;
  std::vector<MorId> comp_;
};

inline bool same_extranat(const ExtranatTrans& x, const ExtranatTrans& y) {
  return same_frame(x.frame(), y.frame()) && x.components() == y.components();
}

// The three squares of the definition, each quantified over every morphism
// of its own variable and every object of the other two.
inline ValidationReport check_extranatural(const ExtranatTrans& e) {
  ValidationReport report("extranatural " + e.name());
  const auto& fr = e.frame();
  const auto& C = *fr.C;
  const auto& A = *fr.A;
  const auto& B = *fr.B;
  const auto& D = *fr.D;
  auto idx = [&](ObjId c, ObjId a, ObjId b) {
    return "(" + C.object_name(c) + "," + A.object_name(a) + "," + B.object_name(b) + ")";
  };
  for (MorId f = 0; f < C.morphism_count(); ++f) {
    auto c = C.source(f), c2 = C.target(f);
    for (ObjId a = 0; a < A.object_count(); ++a)
      for (ObjId b = 0; b < B.object_count(); ++b) {
        auto lhs = D.then(e.at(c2, a, b), fr.P_mor(f, C.identity(c2), A.identity(a)));
        auto rhs = D.then(e.at(c, a, b), fr.P_mor(C.identity(c), f, A.identity(a)));
        if (lhs != rhs)
          report.fail("extranatural-c", "f = " + C.morphism_name(f) + " at " + idx(c, a, b) + ": " +
                                            D.morphism_name(lhs) + " != " + D.morphism_name(rhs));
      }
  }
  for (MorId h = 0; h < A.morphism_count(); ++h) {
    auto a = A.source(h), a2 = A.target(h);
    for (ObjId c = 0; c < C.object_count(); ++c)
      for (ObjId b = 0; b < B.object_count(); ++b) {
        auto lhs = D.then(fr.Q_mor(h, B.identity(b), B.identity(b)), e.at(c, a, b));
        auto rhs = D.then(e.at(c, a2, b), fr.P_mor(C.identity(c), C.identity(c), h));
        if (lhs != rhs)
          report.fail("natural-a", "h = " + A.morphism_name(h) + " at " + idx(c, a, b) + ": " +
                                       D.morphism_name(lhs) + " != " + D.morphism_name(rhs));
      }
  }
  for (MorId g = 0; g < B.morphism_count(); ++g) {
    auto b = B.source(g), b2 = B.target(g);
    for (ObjId c = 0; c < C.object_count(); ++c)
      for (ObjId a = 0; a < A.object_count(); ++a) {
        auto lhs = D.then(fr.Q_mor(A.identity(a), g, B.identity(b2)), e.at(c, a, b2));
        auto rhs = D.then(fr.Q_mor(A.identity(a), B.identity(b), g), e.at(c, a, b));
        if (lhs != rhs)
          report.fail("extranatural-b", "g = " + B.morphism_name(g) + " at " + idx(c, a, b) + ": " +
                                            D.morphism_name(lhs) + " != " + D.morphism_name(rhs));
      }
  }
  return report;
}
inline ValidationReport check_extranatural(const ExtranatPtr& e) { return check_extranatural(*e); }

// Every way of routing (f, h, g) through the diagram of the definition from
// P(c, c', a) to Q(a', b, b'): f acts on the covariant or contravariant slot
// of P, h acts before or after the component, g acts on the contravariant or
// covariant slot of Q.  Eight composites, returned in a fixed order.
struct DiagramPath {
  std::string route;
  MorId composite;
};

inline std::vector<DiagramPath> diagram_paths(const ExtranatTrans& e, MorId f, MorId h, MorId g) {
  const auto& fr = e.frame();
  const auto& C = *fr.C;
  const auto& A = *fr.A;
  const auto& B = *fr.B;
  const auto& D = *fr.D;
  auto c = C.source(f), c2 = C.target(f);
  auto a = A.source(h), a2 = A.target(h);
  auto b = B.source(g), b2 = B.target(g);
  std::vector<DiagramPath> out;
  for (int f_slot = 0; f_slot < 2; ++f_slot)
    for (int h_before = 0; h_before < 2; ++h_before)
      for (int g_slot = 0; g_slot < 2; ++g_slot) {
        MorId f1 = f_slot == 0 ? f : C.identity(c);
        MorId f2 = f_slot == 0 ? C.identity(c2) : f;
        ObjId cs = f_slot == 0 ? c2 : c;
        MorId hp = h_before ? h : A.identity(a);
        MorId hq = h_before ? A.identity(a2) : h;
        ObjId as = h_before ? a2 : a;
        MorId g1 = g_slot == 0 ? g : B.identity(b);
        MorId g2 = g_slot == 0 ? B.identity(b2) : g;
        ObjId bs = g_slot == 0 ? b2 : b;
        auto m = D.chain(fr.Q_mor(hq, g1, g2), e.at(cs, as, bs), fr.P_mor(f1, f2, hp));
        std::string route = std::string(f_slot == 0 ? "P(f,-,-)" : "P(-,f,-)") +
                            (h_before ? " P(-,-,h)" : " Q(h,-,-)") + (g_slot == 0 ? " Q(-,g,-)" : " Q(-,-,g)");
        out.push_back({route, m});
      }
  return out;
}

inline ValidationReport check_path_independence(const ExtranatTrans& e) {
  ValidationReport report("path independence of " + e.name());
  const auto& fr = e.frame();
  for (MorId f = 0; f < fr.C->morphism_count(); ++f)
    for (MorId h = 0; h < fr.A->morphism_count(); ++h)
      for (MorId g = 0; g < fr.B->morphism_count(); ++g) {
        auto paths = diagram_paths(e, f, h, g);
        for (std::size_t i = 1; i < paths.size(); ++i)
          if (paths[i].composite != paths[0].composite)
            report.fail("path-independence",
                        "(" + fr.C->morphism_name(f) + "," + fr.A->morphism_name(h) + "," + fr.B->morphism_name(g) +
                            "): " + paths[0].route + " gives " + fr.D->morphism_name(paths[0].composite) +
                            ", " + paths[i].route + " gives " + fr.D->morphism_name(paths[i].composite));
      }
  return report;
}

// ---- natural transformations as degenerate extranaturals ------------------

inline ExtranatPtr from_nat_trans(const NatTransPtr& t) {
  auto one = terminal();
  auto A = t->source();
  auto D = t->target();
  auto psrc = product({one, opposite(one), A});
  auto qsrc = product({A, opposite(one), one});
  auto P = compose(t->from(), projection(psrc, 2), t->from()->name());
  auto Q = compose(t->to(), projection(qsrc, 0), t->to()->name());
  ExtranatFrame fr(one, A, one, D, P, Q);
  return ExtranatTrans::build(t->name(), fr, [&](ObjId, ObjId a, ObjId) { return t->at(a); });
}

// Inverse of from_nat_trans: requires C and B terminal.
inline NatTransPtr to_nat_trans(const ExtranatTrans& e) {
  const auto& fr = e.frame();
  if (fr.C->object_count() != 1 || fr.C->morphism_count() != 1 || fr.B->object_count() != 1 ||
      fr.B->morphism_count() != 1)
    throw StructuralError("extranatural " + e.name() + " is not natural: C and B must be terminal");
  auto A = fr.A;
  auto F = Functor::build(
      fr.P->name(), A, fr.D, [&](ObjId a) { return fr.P_obj(0, 0, a); },
      [&](MorId h) { return fr.P_mor(0, 0, h); });
  auto G = Functor::build(
      fr.Q->name(), A, fr.D, [&](ObjId a) { return fr.Q_obj(a, 0, 0); },
      [&](MorId h) { return fr.Q_mor(h, 0, 0); });
  return NatTrans::build(e.name(), F, G, [&](ObjId a) { return e.at(0, a, 0); });
}

// ---- whiskering ------------------------------------------------------------

// beta~_{c,a,b} = K(beta_{G c, F a, H b}) for G : C~ -> C, F : A~ -> A,
// H : B~ -> B, K : D -> D~.
inline ExtranatPtr whisker(const ExtranatPtr& e, const FunctorPtr& G, const FunctorPtr& F, const FunctorPtr& H,
                           const FunctorPtr& K, std::string name = {}) {
  const auto& fr = e->frame();
  auto need = [](const CategoryPtr& have, const CategoryPtr& want, const std::string& what) {
    if (!same_category(have, want))
      throw StructuralError("whisker: " + what + " is " + have->name() + ", expected " + want->name());
  };
  need(G->target(), fr.C, "target of G");
  need(F->target(), fr.A, "target of F");
  need(H->target(), fr.B, "target of H");
  need(K->source(), fr.D, "source of K");
  auto P2 = compose(K, compose(fr.P, product({G, opposite(G), F})));
  auto Q2 = compose(K, compose(fr.Q, product({F, opposite(H), H})));
  ExtranatFrame nf(G->source(), F->source(), H->source(), K->target(), P2, Q2);
  if (name.empty()) name = K->name() + "(" + e->name() + ")";
  return ExtranatTrans::build(std::move(name), nf, [&](ObjId c, ObjId a, ObjId b) {
    return K->mor(e->at(G->obj(c), F->obj(a), H->obj(b)));
  });
}

// ---- composition with natural transformations -------------------------------

enum class InsertionOrder { below, above };

// For phi : F => F', gamma : G => G', theta : H' => H, kappa : K => K', the
// composite extranatural
//   K.P.(G x op(G') x F)  -->  K'.Q.(F' x op(H') x H).
// `below` threads phi, gamma, theta through beta at (G' c, F' a, H' b) and
// applies kappa last; `above` applies kappa first and uses beta at
// (G c, F a, H b).
inline ExtranatPtr compose_with_naturals(const ExtranatPtr& e, const NatTransPtr& phi, const NatTransPtr& gamma,
                                         const NatTransPtr& theta, const NatTransPtr& kappa, InsertionOrder order,
                                         std::string name = {}) {
  const auto& fr = e->frame();
  auto need = [](const CategoryPtr& have, const CategoryPtr& want, const std::string& what) {
    if (!same_category(have, want))
      throw StructuralError("compose_with_naturals: " + what + " is " + have->name() + ", expected " +
                            want->name());
  };
  need(phi->target(), fr.A, "target of phi");
  need(gamma->target(), fr.C, "target of gamma");
  need(theta->target(), fr.B, "target of theta");
  need(kappa->source(), fr.D, "source of kappa");
  need(kappa->target(), kappa->to()->target(), "target of kappa");
  const auto& F = phi->from();
  const auto& F2 = phi->to();
  const auto& G = gamma->from();
  const auto& G2 = gamma->to();
  const auto& H2 = theta->from();  // theta runs H' => H
  const auto& H = theta->to();
  const auto& K = kappa->from();
  const auto& K2 = kappa->to();
  auto P2 = compose(K, compose(fr.P, product({G, opposite(G2), F})));
  auto Q2 = compose(K2, compose(fr.Q, product({F2, opposite(H2), H})));
  ExtranatFrame nf(G->source(), F->source(), H->source(), K->target(), P2, Q2);
  const auto& A = *fr.A;
  const auto& B = *fr.B;
  const auto& C = *fr.C;
  const auto& Dt = *K->target();
  if (name.empty()) name = e->name() + (order == InsertionOrder::below ? "_below" : "_above");
  return ExtranatTrans::build(std::move(name), nf, [&](ObjId c, ObjId a, ObjId b) {
    if (order == InsertionOrder::below) {
      auto pre = fr.P_mor(gamma->at(c), C.identity(G2->obj(c)), phi->at(a));
      auto post = fr.Q_mor(A.identity(F2->obj(a)), B.identity(H2->obj(b)), theta->at(b));
      auto q = fr.Q_obj(F2->obj(a), H2->obj(b), H->obj(b));
      return Dt.chain(kappa->at(q), K->mor(post), K->mor(e->at(G2->obj(c), F2->obj(a), H2->obj(b))), K->mor(pre));
    }
    auto p = fr.P_obj(G->obj(c), G2->obj(c), F->obj(a));
    auto pre = fr.P_mor(C.identity(G->obj(c)), gamma->at(c), A.identity(F->obj(a)));
    auto post = fr.Q_mor(phi->at(a), theta->at(b), B.identity(H->obj(b)));
    return Dt.chain(K2->mor(post), K2->mor(e->at(G->obj(c), F->obj(a), H->obj(b))), K2->mor(pre), kappa->at(p));
  });
}

}  // namespace conjlib
