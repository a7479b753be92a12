#pragma once

// Adjunctions of two variables.
//
// Left-sided  T : A x B -> C,  H : op(A) x C -> B,
//   eps_{a,c} : T(a, H(a,c)) -> c      (extranatural in a, natural in c)
//   eta_{a,b} : b -> H(a, T(a,b))      (extranatural in a, natural in b)
// Right-sided T : A x B -> C,  H : C x op(B) -> A,
//   eps_{c,b} : T(H(c,b), b) -> c      (extranatural in b, natural in c)
//   eta_{a,b} : a -> H(T(a,b), b)      (extranatural in b, natural in a)

#include <memory>
#include <string>

#include "conj/adjoint/adjunction.hpp"
#include "conj/extranat/extranat.hpp"

namespace conjlib {

struct TwoVarAdjunctionL {
  std::string name;
  CategoryPtr A, B, C;
  FunctorPtr T, H;
  ExtranatPtr eps;  // frame (A; C; 1) with P(a, a', c) = T(a, H(a', c)), Q = id_C
  ExtranatPtr eta;  // frame (1; B; A) with P = id_B, Q(b, a', a) = H(a', T(a, b))

  MorId eps_at(ObjId a, ObjId c) const { return eps->at(a, c, 0); }
  MorId eta_at(ObjId a, ObjId b) const { return eta->at(0, b, a); }
  ObjId T_obj(ObjId a, ObjId b) const { return T->obj(T->source()->pack_objects({a, b})); }
  ObjId H_obj(ObjId a, ObjId c) const { return H->obj(H->source()->pack_objects({a, c})); }
  MorId T_mor(MorId h, MorId g) const { return T->mor(T->source()->pack_morphisms({h, g})); }
  // h : a' -> a in A (acting contravariantly), u in C.
  MorId H_mor(MorId h, MorId u) const { return H->mor(H->source()->pack_morphisms({h, u})); }
};
using TwoVarLPtr = std::shared_ptr<const TwoVarAdjunctionL>;

struct TwoVarAdjunctionR {
  std::string name;
  CategoryPtr A, B, C;
  FunctorPtr T, H;
  ExtranatPtr eps;  // frame (B; C; 1) with P(b, b', c) = T(H(c, b'), b), Q = id_C
  ExtranatPtr eta;  // frame (1; A; B) with P = id_A, Q(a, b', b) = H(T(a, b), b')

  MorId eps_at(ObjId c, ObjId b) const { return eps->at(b, c, 0); }
  MorId eta_at(ObjId a, ObjId b) const { return eta->at(0, a, b); }
  ObjId T_obj(ObjId a, ObjId b) const { return T->obj(T->source()->pack_objects({a, b})); }
  ObjId H_obj(ObjId c, ObjId b) const { return H->obj(H->source()->pack_objects({c, b})); }
  MorId T_mor(MorId h, MorId g) const { return T->mor(T->source()->pack_morphisms({h, g})); }
  MorId H_mor(MorId u, MorId g) const { return H->mor(H->source()->pack_morphisms({u, g})); }
};
using TwoVarRPtr = std::shared_ptr<const TwoVarAdjunctionR>;

namespace detail {

inline void require_source(const FunctorPtr& f, const CategoryPtr& want, const std::string& who) {
  if (!same_category(f->source(), want))
    throw StructuralError(who + ": " + f->name() + " has source " + f->source()->name() + ", expected " +
                          want->name());
}
inline void require_target(const FunctorPtr& f, const CategoryPtr& want, const std::string& who) {
  if (!same_category(f->target(), want))
    throw StructuralError(who + ": " + f->name() + " has target " + f->target()->name() + ", expected " +
                          want->name());
}

inline ExtranatFrame left_counit_frame(const CategoryPtr& A, const CategoryPtr& C, const FunctorPtr& T,
                                       const FunctorPtr& H) {
  auto one = terminal();
  auto psrc = product({A, opposite(A), C});
  auto qsrc = product({C, opposite(one), one});
  const auto& Ts = *T->source();
  const auto& Hs = *H->source();
  auto P = Functor::build(
      T->name() + ".(id x " + H->name() + ")", psrc, C,
      [&](ObjId x) {
        auto v = psrc->unpack_object(x);
        return T->obj(Ts.pack_objects({v[0], H->obj(Hs.pack_objects({v[1], v[2]}))}));
      },
      [&](MorId m) {
        auto v = psrc->unpack_morphism(m);
        return T->mor(Ts.pack_morphisms({v[0], H->mor(Hs.pack_morphisms({v[1], v[2]}))}));
      });
  auto Q = compose(identity_functor(C), projection(qsrc, 0), "id_" + C->name());
  return ExtranatFrame(A, C, one, C, P, Q);
}

inline ExtranatFrame left_unit_frame(const CategoryPtr& A, const CategoryPtr& B, const FunctorPtr& T,
                                     const FunctorPtr& H) {
  auto one = terminal();
  auto psrc = product({one, opposite(one), B});
  auto qsrc = product({B, opposite(A), A});
  const auto& Ts = *T->source();
  const auto& Hs = *H->source();
  auto P = compose(identity_functor(B), projection(psrc, 2), "id_" + B->name());
  auto Q = Functor::build(
      H->name() + ".(id x " + T->name() + ")", qsrc, B,
      [&](ObjId x) {
        auto v = qsrc->unpack_object(x);  // (b, a', a)
        return H->obj(Hs.pack_objects({v[1], T->obj(Ts.pack_objects({v[2], v[0]}))}));
      },
      [&](MorId m) {
        auto v = qsrc->unpack_morphism(m);
        return H->mor(Hs.pack_morphisms({v[1], T->mor(Ts.pack_morphisms({v[2], v[0]}))}));
      });
  return ExtranatFrame(one, B, A, B, P, Q);
}

inline ExtranatFrame right_counit_frame(const CategoryPtr& B, const CategoryPtr& C, const FunctorPtr& T,
                                        const FunctorPtr& H) {
  auto one = terminal();
  auto psrc = product({B, opposite(B), C});
  auto qsrc = product({C, opposite(one), one});
  const auto& Ts = *T->source();
  const auto& Hs = *H->source();
  auto P = Functor::build(
      T->name() + ".(" + H->name() + " x id)", psrc, C,
      [&](ObjId x) {
        auto v = psrc->unpack_object(x);  // (b, b', c)
        return T->obj(Ts.pack_objects({H->obj(Hs.pack_objects({v[2], v[1]})), v[0]}));
      },
      [&](MorId m) {
        auto v = psrc->unpack_morphism(m);
        return T->mor(Ts.pack_morphisms({H->mor(Hs.pack_morphisms({v[2], v[1]})), v[0]}));
      });
  auto Q = compose(identity_functor(C), projection(qsrc, 0), "id_" + C->name());
  return ExtranatFrame(B, C, one, C, P, Q);
}

inline ExtranatFrame right_unit_frame(const CategoryPtr& A, const CategoryPtr& B, const FunctorPtr& T,
                                      const FunctorPtr& H) {
  auto one = terminal();
  auto psrc = product({one, opposite(one), A});
  auto qsrc = product({A, opposite(B), B});
  const auto& Ts = *T->source();
  const auto& Hs = *H->source();
  auto P = compose(identity_functor(A), projection(psrc, 2), "id_" + A->name());
  auto Q = Functor::build(
      H->name() + ".(" + T->name() + " x id)", qsrc, A,
      [&](ObjId x) {
        auto v = qsrc->unpack_object(x);  // (a, b', b)
        return H->obj(Hs.pack_objects({T->obj(Ts.pack_objects({v[0], v[2]})), v[1]}));
      },
      [&](MorId m) {
        auto v = qsrc->unpack_morphism(m);
        return H->mor(Hs.pack_morphisms({T->mor(Ts.pack_morphisms({v[0], v[2]})), v[1]}));
      });
  return ExtranatFrame(one, A, B, A, P, Q);
}

}  // namespace detail

// eps(a, c) and eta(a, b) give the components; shapes are checked on
// construction, laws by check_two_var.
inline TwoVarLPtr make_two_var_L(std::string name, FunctorPtr T, FunctorPtr H,
                                 const std::function<MorId(ObjId a, ObjId c)>& eps,
                                 const std::function<MorId(ObjId a, ObjId b)>& eta) {
  const auto& ts = T->source();
  if (ts->kind() != Category::Kind::product || ts->factors().size() != 2)
    throw StructuralError("two-variable adjunction " + name + ": T must have a binary product source");
  auto A = ts->factors()[0];
  auto B = ts->factors()[1];
  auto C = T->target();
  detail::require_source(H, product({opposite(A), C}), "two-variable adjunction " + name);
  detail::require_target(H, B, "two-variable adjunction " + name);
  auto e = ExtranatTrans::build("eps_" + name, detail::left_counit_frame(A, C, T, H),
                                [&](ObjId a, ObjId c, ObjId) { return eps(a, c); });
  auto u = ExtranatTrans::build("eta_" + name, detail::left_unit_frame(A, B, T, H),
                                [&](ObjId, ObjId b, ObjId a) { return eta(a, b); });
  return std::make_shared<TwoVarAdjunctionL>(TwoVarAdjunctionL{std::move(name), A, B, C, T, H, e, u});
}

inline TwoVarRPtr make_two_var_R(std::string name, FunctorPtr T, FunctorPtr H,
                                 const std::function<MorId(ObjId c, ObjId b)>& eps,
                                 const std::function<MorId(ObjId a, ObjId b)>& eta) {
  const auto& ts = T->source();
  if (ts->kind() != Category::Kind::product || ts->factors().size() != 2)
    throw StructuralError("two-variable adjunction " + name + ": T must have a binary product source");
  auto A = ts->factors()[0];
  auto B = ts->factors()[1];
  auto C = T->target();
  detail::require_source(H, product({C, opposite(B)}), "two-variable adjunction " + name);
  detail::require_target(H, A, "two-variable adjunction " + name);
  auto e = ExtranatTrans::build("eps_" + name, detail::right_counit_frame(B, C, T, H),
                                [&](ObjId b, ObjId c, ObjId) { return eps(c, b); });
  auto u = ExtranatTrans::build("eta_" + name, detail::right_unit_frame(A, B, T, H),
                                [&](ObjId, ObjId a, ObjId b) { return eta(a, b); });
  return std::make_shared<TwoVarAdjunctionR>(TwoVarAdjunctionR{std::move(name), A, B, C, T, H, e, u});
}

inline ValidationReport check_two_var(const TwoVarAdjunctionL& adj) {
  ValidationReport report("two-variable adjunction " + adj.name + " (left-sided)");
  const auto& A = *adj.A;
  const auto& B = *adj.B;
  const auto& C = *adj.C;
  if (!same_frame(adj.eps->frame(), detail::left_counit_frame(adj.A, adj.C, adj.T, adj.H)))
    throw StructuralError("two-variable adjunction " + adj.name + ": counit frame mismatch");
  if (!same_frame(adj.eta->frame(), detail::left_unit_frame(adj.A, adj.B, adj.T, adj.H)))
    throw StructuralError("two-variable adjunction " + adj.name + ": unit frame mismatch");
  report.absorb(check_functor(*adj.T));
  report.absorb(check_functor(*adj.H));
  report.absorb(check_extranatural(*adj.eps));
  report.absorb(check_extranatural(*adj.eta));
  for (ObjId a = 0; a < A.object_count(); ++a) {
    for (ObjId c = 0; c < C.object_count(); ++c) {
      auto hac = adj.H_obj(a, c);
      auto z = B.then(adj.H_mor(A.identity(a), adj.eps_at(a, c)), adj.eta_at(a, hac));
      if (z != B.identity(hac))
        report.fail("triangle-H", "at (" + A.object_name(a) + "," + C.object_name(c) + "): " + B.morphism_name(z));
    }
    for (ObjId b = 0; b < B.object_count(); ++b) {
      auto tab = adj.T_obj(a, b);
      auto z = C.then(adj.eps_at(a, tab), adj.T_mor(A.identity(a), adj.eta_at(a, b)));
      if (z != C.identity(tab))
        report.fail("triangle-T", "at (" + A.object_name(a) + "," + B.object_name(b) + "): " + C.morphism_name(z));
    }
  }
  return report;
}
inline ValidationReport check_two_var(const TwoVarLPtr& adj) { return check_two_var(*adj); }

inline ValidationReport check_two_var(const TwoVarAdjunctionR& adj) {
  ValidationReport report("two-variable adjunction " + adj.name + " (right-sided)");
  const auto& A = *adj.A;
  const auto& B = *adj.B;
  const auto& C = *adj.C;
  if (!same_frame(adj.eps->frame(), detail::right_counit_frame(adj.B, adj.C, adj.T, adj.H)))
    throw StructuralError("two-variable adjunction " + adj.name + ": counit frame mismatch");
  if (!same_frame(adj.eta->frame(), detail::right_unit_frame(adj.A, adj.B, adj.T, adj.H)))
    throw StructuralError("two-variable adjunction " + adj.name + ": unit frame mismatch");
  report.absorb(check_functor(*adj.T));
  report.absorb(check_functor(*adj.H));
  report.absorb(check_extranatural(*adj.eps));
  report.absorb(check_extranatural(*adj.eta));
  for (ObjId b = 0; b < B.object_count(); ++b) {
    for (ObjId c = 0; c < C.object_count(); ++c) {
      auto hcb = adj.H_obj(c, b);
      auto z = A.then(adj.H_mor(adj.eps_at(c, b), B.identity(b)), adj.eta_at(hcb, b));
      if (z != A.identity(hcb))
        report.fail("triangle-H", "at (" + C.object_name(c) + "," + B.object_name(b) + "): " + A.morphism_name(z));
    }
    for (ObjId a = 0; a < A.object_count(); ++a) {
      auto tab = adj.T_obj(a, b);
      auto z = C.then(adj.eps_at(tab, b), adj.T_mor(adj.eta_at(a, b), B.identity(b)));
      if (z != C.identity(tab))
        report.fail("triangle-T", "at (" + A.object_name(a) + "," + B.object_name(b) + "): " + C.morphism_name(z));
    }
  }
  return report;
}
inline ValidationReport check_two_var(const TwoVarRPtr& adj) { return check_two_var(*adj); }

// ---- degenerate cases ---------------------------------------------------------

// F -| U seen as a left-sided adjunction with A = 1: T(*, b) = F b, H(*, c) = U c.
inline TwoVarLPtr two_var_from_adjunction(const Adjunction& adj) {
  auto one = terminal();
  auto B = adj.C();
  auto C = adj.D();
  auto T = compose(adj.F, projection(product({one, B}), 1), adj.F->name());
  auto H = compose(adj.U, projection(product({opposite(one), C}), 1), adj.U->name());
  return make_two_var_L(
      adj.name, T, H, [&](ObjId, ObjId c) { return adj.eps->at(c); }, [&](ObjId, ObjId b) { return adj.eta->at(b); });
}

// F -| U as a right-sided adjunction with B = 1: T(a, *) = F a, H(c, *) = U c.
inline TwoVarRPtr two_var_R_from_adjunction(const Adjunction& adj) {
  auto one = terminal();
  auto A = adj.C();
  auto C = adj.D();
  auto T = compose(adj.F, projection(product({A, one}), 0), adj.F->name());
  auto H = compose(adj.U, projection(product({C, opposite(one)}), 0), adj.U->name());
  return make_two_var_R(
      adj.name, T, H, [&](ObjId c, ObjId) { return adj.eps->at(c); }, [&](ObjId a, ObjId) { return adj.eta->at(a); });
}

// The ordinary adjunction T(a0, -) -| H(a0, -) at a fixed parameter.
inline AdjunctionPtr adjunction_at(const TwoVarAdjunctionL& adj, ObjId a0) {
  const auto& A = *adj.A;
  auto F = Functor::build(
      adj.T->name() + "(" + A.object_name(a0) + ",-)", adj.B, adj.C, [&](ObjId b) { return adj.T_obj(a0, b); },
      [&](MorId g) { return adj.T_mor(A.identity(a0), g); });
  auto U = Functor::build(
      adj.H->name() + "(" + A.object_name(a0) + ",-)", adj.C, adj.B, [&](ObjId c) { return adj.H_obj(a0, c); },
      [&](MorId u) { return adj.H_mor(A.identity(a0), u); });
  std::vector<MorId> eta(adj.B->object_count()), eps(adj.C->object_count());
  for (ObjId b = 0; b < eta.size(); ++b) eta[b] = adj.eta_at(a0, b);
  for (ObjId c = 0; c < eps.size(); ++c) eps[c] = adj.eps_at(a0, c);
  return make_adjunction(adj.name + "@" + A.object_name(a0), F, U, std::move(eta), std::move(eps));
}

// ---- composite adjunctions ------------------------------------------------------

// From T -| H over (A, B, C), K : A~ -> A, F1 : C -> C~ -| U1 and
// F2 : B~ -> B -| U2, the adjunction F1.T.(K x F2) -|_L U2.H.(op(K) x U1).
inline TwoVarLPtr compose_two_var(const TwoVarAdjunctionL& adj, const FunctorPtr& K, const Adjunction& adj1,
                                  const Adjunction& adj2, std::string name = {}) {
  auto need = [&](const CategoryPtr& have, const CategoryPtr& want, const std::string& what) {
    if (!same_category(have, want))
      throw StructuralError("compose_two_var: " + what + " is " + have->name() + ", expected " + want->name());
  };
  need(K->target(), adj.A, "target of K");
  need(adj1.C(), adj.C, "source of F1");
  need(adj2.D(), adj.B, "target of F2");
  const auto& F1 = adj1.F;
  const auto& U1 = adj1.U;
  const auto& F2 = adj2.F;
  const auto& U2 = adj2.U;
  auto T2 = compose(F1, compose(adj.T, product({K, F2})), F1->name() + "." + adj.T->name() + ".(" + K->name() + " x " + F2->name() + ")");
  auto H2 = compose(U2, compose(adj.H, product({opposite(K), U1})),
                    U2->name() + "." + adj.H->name() + ".(" + K->name() + " x " + U1->name() + ")");
  const auto& A = *adj.A;
  const auto& Ct = *adj1.D();
  const auto& Bt = *adj2.C();
  if (name.empty()) name = "composite(" + adj.name + ")";
  return make_two_var_L(
      std::move(name), T2, H2,
      [&](ObjId a, ObjId c) {
        auto ka = K->obj(a);
        auto u1c = U1->obj(c);
        auto h = adj.H_obj(ka, u1c);
        return Ct.chain(adj1.eps->at(c), F1->mor(adj.eps_at(ka, u1c)),
                        F1->mor(adj.T_mor(A.identity(ka), adj2.eps->at(h))));
      },
      [&](ObjId a, ObjId b) {
        auto ka = K->obj(a);
        auto f2b = F2->obj(b);
        auto t = adj.T_obj(ka, f2b);
        return Bt.chain(U2->mor(adj.H_mor(A.identity(ka), adj1.eta->at(t))), U2->mor(adj.eta_at(ka, f2b)),
                        adj2.eta->at(b));
      });
}

// ---- conjugation ------------------------------------------------------------------

namespace detail {
inline void require_parallel(const TwoVarAdjunctionL& x, const TwoVarAdjunctionL& y, const char* op) {
  if (!same_category(x.A, y.A) || !same_category(x.B, y.B) || !same_category(x.C, y.C))
    throw StructuralError(std::string(op) + ": " + x.name + " and " + y.name + " do not share endpoint categories");
}
inline void require_functors(const NatTrans& t, const Functor& from, const Functor& to, const char* op) {
  if (!same_functor(*t.from(), from) || !same_functor(*t.to(), to))
    throw StructuralError(std::string(op) + ": expected a transformation " + from.name() + " => " + to.name() +
                          ", got " + t.from()->name() + " => " + t.to()->name());
}
}  // namespace detail

// theta : T => T' gives j_l(theta) : H' => H with component at (a, c)
//   H(a, eps'_{a,c}) . H(a, theta_{a, H'(a,c)}) . eta_{a, H'(a,c)}.
inline NatTransPtr conjugate2_left(const NatTransPtr& theta, const TwoVarAdjunctionL& adj,
                                   const TwoVarAdjunctionL& adj2, std::string name = {}) {
  detail::require_parallel(adj, adj2, "conjugate2_left");
  detail::require_functors(*theta, *adj.T, *adj2.T, "conjugate2_left");
  const auto& A = *adj.A;
  const auto& B = *adj.B;
  const auto& Hs = *adj.H->source();
  const auto& Ts = *adj.T->source();
  if (name.empty()) name = "j_l(" + theta->name() + ")";
  return NatTrans::build(std::move(name), adj2.H, adj.H, [&](ObjId x) {
    auto v = Hs.unpack_object(x);
    auto a = v[0], c = v[1];
    auto h2 = adj2.H_obj(a, c);
    auto ida = A.identity(a);
    return B.chain(adj.H_mor(ida, adj2.eps_at(a, c)), adj.H_mor(ida, theta->at(Ts.pack_objects({a, h2}))),
                   adj.eta_at(a, h2));
  });
}

// phi : H' => H gives j_r(phi) : T => T' with component at (a, b)
//   eps_{a, T'(a,b)} . T(a, phi_{a, T'(a,b)}) . T(a, eta'_{a,b}).
inline NatTransPtr conjugate2_right(const NatTransPtr& phi, const TwoVarAdjunctionL& adj,
                                    const TwoVarAdjunctionL& adj2, std::string name = {}) {
  detail::require_parallel(adj, adj2, "conjugate2_right");
  detail::require_functors(*phi, *adj2.H, *adj.H, "conjugate2_right");
  const auto& A = *adj.A;
  const auto& C = *adj.C;
  const auto& Ts = *adj.T->source();
  const auto& Hs = *adj.H->source();
  if (name.empty()) name = "j_r(" + phi->name() + ")";
  return NatTrans::build(std::move(name), adj.T, adj2.T, [&](ObjId x) {
    auto v = Ts.unpack_object(x);
    auto a = v[0], b = v[1];
    auto t2 = adj2.T_obj(a, b);
    auto ida = A.identity(a);
    return C.chain(adj.eps_at(a, t2), adj.T_mor(ida, phi->at(Hs.pack_objects({a, t2}))),
                   adj.T_mor(ida, adj2.eta_at(a, b)));
  });
}

// ---- conjugate shapes ----------------------------------------------------------------

// The data of a conjugate-shape bijection: closed structures on C and D (as
// tensor -|_L hom), F1 : C -> E -| U1, F2 : B -> C -| U2, F1' : D -> E -| U1',
// F2' : B -> D -| U2', K : A -> C, K' : A -> D.
struct ConjugateShapeFrame {
  TwoVarLPtr closed_C, closed_D;
  AdjunctionPtr adj1, adj2, adj1p, adj2p;
  FunctorPtr K, Kp;
};

struct ConjugateShapePair {
  TwoVarLPtr left;   // F1.(x).(K x F2)   -|_L  U2.(-o).(K x U1)
  TwoVarLPtr right;  // F1'.(x).(K' x F2') -|_L U2'.(-o).(K' x U1')
};

inline ConjugateShapePair conjugate_shape_adjunctions(const ConjugateShapeFrame& fr) {
  auto need = [](const CategoryPtr& have, const CategoryPtr& want, const std::string& what) {
    if (!same_category(have, want))
      throw StructuralError("conjugate_shape: " + what + " is " + have->name() + ", expected " + want->name());
  };
  const auto& C = fr.closed_C->C;
  const auto& D = fr.closed_D->C;
  need(fr.adj1->C(), C, "source of F1");
  need(fr.adj1p->C(), D, "source of F1'");
  need(fr.adj1p->D(), fr.adj1->D(), "target of F1'");
  need(fr.adj2->D(), C, "target of F2");
  need(fr.adj2p->D(), D, "target of F2'");
  need(fr.adj2p->C(), fr.adj2->C(), "source of F2'");
  need(fr.K->target(), C, "target of K");
  need(fr.Kp->target(), D, "target of K'");
  need(fr.Kp->source(), fr.K->source(), "source of K'");
  return {compose_two_var(*fr.closed_C, fr.K, *fr.adj1, *fr.adj2, "left"),
          compose_two_var(*fr.closed_D, fr.Kp, *fr.adj1p, *fr.adj2p, "right")};
}

enum class ShapeDirection { forward, reversed };

// forward:  theta : F1((K a) x (F2 b)) -> F1'((K' a) x (F2' b))
//           maps to phi : U2'(K' a -o U1' e) -> U2(K a -o U1 e).
// reversed: theta runs the other way and so does the conjugate.
inline NatTransPtr conjugate_shape(const NatTransPtr& theta, const ConjugateShapeFrame& fr,
                                   ShapeDirection dir = ShapeDirection::forward, std::string name = {}) {
  auto pair = conjugate_shape_adjunctions(fr);
  if (dir == ShapeDirection::forward) return conjugate2_left(theta, *pair.left, *pair.right, std::move(name));
  return conjugate2_left(theta, *pair.right, *pair.left, std::move(name));
}

inline NatTransPtr conjugate_shape_inverse(const NatTransPtr& phi, const ConjugateShapeFrame& fr,
                                           ShapeDirection dir = ShapeDirection::forward, std::string name = {}) {
  auto pair = conjugate_shape_adjunctions(fr);
  if (dir == ShapeDirection::forward) return conjugate2_right(phi, *pair.left, *pair.right, std::move(name));
  return conjugate2_right(phi, *pair.right, *pair.left, std::move(name));
}

}  // namespace conjlib
