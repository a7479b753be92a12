#pragma once

// Operators attached to a monoidal functor f* : Y -> X between closed
// monoidal categories, and the five conjugate-pair rows built from strings
// of adjunctions around f*.

#include <string>

#include "conj/closedmon/instances.hpp"

namespace conjlib {

namespace detail {
inline void require_closed_pair(const MonoidalFunctorData& m, const char* op) {
  if (!m.X || !m.Y || !m.X->left || !m.Y->left)
    throw StructuralError(std::string(op) + ": both categories need a closed structure");
  if (!same_category(m.f_star->source(), m.Y->C()) || !same_category(m.f_star->target(), m.X->C()))
    throw StructuralError(std::string(op) + ": f* must go " + m.Y->C()->name() + " -> " + m.X->C()->name());
}
}  // namespace detail

// f*(y -o y') -> f*y -o f*y', the composite
//   [f*y, f*(ev_{y,y'})] . [f*y, omega_{y, y -o y'}] . coev_{f*y, f*(y -o y')}.
inline NatTransPtr closed_structure_operator(const MonoidalFunctorData& m) {
  detail::require_closed_pair(m, "closed_structure_operator");
  const auto& X = *m.X;
  const auto& Y = *m.Y;
  const auto& f = *m.f_star;
  const auto& CX = *X.C();
  auto from = compose(m.f_star, Y.hom, "f*.-o");
  auto to = compose(X.hom, product({opposite(m.f_star), m.f_star}), "-o.(f* x f*)");
  const auto& src = *from->source();
  const auto& ysrc = *m.omega->source();
  return NatTrans::build("closed_structure_operator", from, to, [&](ObjId p) {
    auto v = src.unpack_object(p);
    auto y = v[0], y2 = v[1];
    auto fy = f.obj(y);
    auto hy = Y.ihom(y, y2);
    auto idfy = CX.identity(fy);
    return CX.chain(X.ihom_mor(idfy, f.mor(Y.ev(y, y2))), X.ihom_mor(idfy, m.omega->at(ysrc.pack_objects({y, hy}))),
                    X.coev(fy, f.obj(hy)));
  });
}

// pi_{y,x} : f_!(f*y (x) x) -> y (x) f_!x, the composite
//   eps_{y (x) f_! x} . f_!(omega_{y, f_! x}) . f_!(f*y (x) eta_x).
inline NatTransPtr projection_operator(const MonoidalFunctorData& m, const Adjunction& lower) {
  detail::require_closed_pair(m, "projection_operator");
  if (!same_functor(*lower.U, *m.f_star))
    throw StructuralError("projection_operator: right adjoint of " + lower.name + " is not " + m.f_star->name());
  const auto& X = *m.X;
  const auto& Y = *m.Y;
  const auto& fl = *lower.F;
  const auto& CY = *Y.C();
  auto from = compose(lower.F, compose(X.mon.tensor, product({m.f_star, identity_functor(X.C())})),
                      "f_!.(x).(f* x id)");
  auto to = compose(Y.mon.tensor, product({identity_functor(Y.C()), lower.F}), "(x).(id x f_!)");
  const auto& src = *from->source();
  const auto& ysrc = *m.omega->source();
  return NatTrans::build("projection_operator", from, to, [&](ObjId p) {
    auto v = src.unpack_object(p);
    auto y = v[0], x = v[1];
    auto flx = fl.obj(x);
    auto fy = m.f_star->obj(y);
    return CY.chain(lower.eps->at(Y.tensor(y, flx)), fl.mor(m.omega->at(ysrc.pack_objects({y, flx}))),
                    fl.mor(X.tensor_mor(X.C()->identity(fy), lower.eta->at(x))));
  });
}

// ---- strings of adjunctions and the five rows ---------------------------------

// f_! -| f* -| f_* -| f^!, any of the adjunctions possibly absent.
struct AdjunctionString {
  ClosedPtr X, Y;
  FunctorPtr f_star;          // Y -> X
  AdjunctionPtr lower;        // f_! -| f*
  AdjunctionPtr upper;        // f* -| f_*
  AdjunctionPtr upper_upper;  // f_* -| f^!
};

inline AdjunctionString adjunction_string(const SetMapAdjunctions& s) {
  return {s.X, s.Y, s.inverse_image, s.lower, s.upper, nullptr};
}

// The same powersets read one step along the string: g* = f_! : P(X) -> P(Y)
// with g* -| g_* = f^{-1} -| g^! = f_*.
inline AdjunctionString shifted_adjunction_string(const SetMapAdjunctions& s) {
  return {s.Y, s.X, s.direct_image, nullptr, s.lower, s.upper};
}

namespace detail {
inline const AdjunctionPtr& need(const AdjunctionPtr& a, int row, const char* which) {
  if (!a) throw StructuralError("conjugate pair row " + std::to_string(row) + ": missing adjunction " + which);
  return a;
}
inline void require_string(const AdjunctionString& s) {
  auto fs = [&](const FunctorPtr& f, const char* what) {
    if (!same_functor(*f, *s.f_star))
      throw StructuralError(std::string("adjunction string: ") + what + " is " + f->name() + ", not f*");
  };
  if (s.lower) fs(s.lower->U, "right adjoint of f_!");
  if (s.upper) fs(s.upper->F, "left adjoint of f_*");
  if (s.upper && s.upper_upper && !same_functor(*s.upper->U, *s.upper_upper->F))
    throw StructuralError("adjunction string: f_* is not shared by the two upper adjunctions");
}
}  // namespace detail

// Frames for rows 1..5 (the objects a, b, e below are the variables of the
// left/right shapes):
//   1  f* -| f_*         f*y (x) f*y' -> f*(y (x) y')      y -o f_*x -> f_*(f*y -o x)
//   2  f_! -| f*         f_!(f*y (x) x) -> y (x) f_!x      f*(y -o y') -> f*y -o f*y'
//   3  f_! -| f* -| f_*  f_!(x (x) f*y) -> f_!x (x) y      f_!x -o y -> f_*(x -o f*y)
//   4  f* -| f_* -| f^!  f_*(x (x) f*y) -> f_*x (x) y      f_*x -o y -> f_*(x -o f^!y)
//   5  f* -| f_* -| f^!  f_*(f*y (x) x) -> y (x) f_*x      f^!(y -o y') -> f*y -o f^!y'
inline ConjugateShapeFrame conjugate_pair_frame(int row, const AdjunctionString& s) {
  detail::require_string(s);
  auto X = s.X->C();
  auto Y = s.Y->C();
  auto idX = identity_adjunction(X);
  auto idY = identity_adjunction(Y);
  auto lX = s.X->left;
  auto lY = s.Y->left;
  switch (row) {
    case 1: {
      const auto& up = detail::need(s.upper, 1, "f* -| f_*");
      return {lX, lY, idX, up, up, idY, s.f_star, identity_functor(Y)};
    }
    case 2: {
      const auto& lo = detail::need(s.lower, 2, "f_! -| f*");
      return {lX, lY, lo, idX, idY, lo, s.f_star, identity_functor(Y)};
    }
    case 3: {
      const auto& lo = detail::need(s.lower, 3, "f_! -| f*");
      const auto& up = detail::need(s.upper, 3, "f* -| f_*");
      return {lX, lY, lo, up, idY, idY, identity_functor(X), lo->F};
    }
    case 4: {
      const auto& up = detail::need(s.upper, 4, "f* -| f_*");
      const auto& uu = detail::need(s.upper_upper, 4, "f_* -| f^!");
      return {lX, lY, uu, up, idY, idY, identity_functor(X), up->U};
    }
    case 5: {
      const auto& uu = detail::need(s.upper_upper, 5, "f_* -| f^!");
      detail::need(s.upper, 5, "f* -| f_*");
      return {lX, lY, uu, idX, idY, uu, s.f_star, identity_functor(Y)};
    }
    default:
      throw StructuralError("conjugate pair row must be 1..5, got " + std::to_string(row));
  }
}

// The bijection of one row: to_right sends a left-shape transformation to its
// conjugate, to_left inverts it.  reversed flips both arrow directions.
struct ConjugatePairFamily {
  int row;
  ShapeDirection direction;
  ConjugateShapeFrame frame;
  ConjugateShapePair adjunctions;

  NatTransPtr to_right(const NatTransPtr& theta, std::string name = {}) const {
    return conjugate_shape(theta, frame, direction, std::move(name));
  }
  NatTransPtr to_left(const NatTransPtr& phi, std::string name = {}) const {
    return conjugate_shape_inverse(phi, frame, direction, std::move(name));
  }
  // Functors bounding the left-shape (T side) and right-shape (H side) transformations.
  FunctorPtr left_from() const { return direction == ShapeDirection::forward ? adjunctions.left->T : adjunctions.right->T; }
  FunctorPtr left_to() const { return direction == ShapeDirection::forward ? adjunctions.right->T : adjunctions.left->T; }
  FunctorPtr right_from() const { return direction == ShapeDirection::forward ? adjunctions.right->H : adjunctions.left->H; }
  FunctorPtr right_to() const { return direction == ShapeDirection::forward ? adjunctions.left->H : adjunctions.right->H; }
};

inline ConjugatePairFamily conjugate_pair_family(int row, const AdjunctionString& s,
                                                 ShapeDirection dir = ShapeDirection::forward) {
  auto fr = conjugate_pair_frame(row, s);
  auto pair = conjugate_shape_adjunctions(fr);
  return {row, dir, std::move(fr), std::move(pair)};
}

// y -o f_*x -> f_*(f*y -o x): the row-1 conjugate of omega.
inline NatTransPtr internal_adjunction_operator(const MonoidalFunctorData& m, const AdjunctionPtr& upper) {
  detail::require_closed_pair(m, "internal_adjunction_operator");
  AdjunctionString s{m.X, m.Y, m.f_star, nullptr, upper, nullptr};
  return conjugate_pair_family(1, s).to_right(m.omega, "internal_adjunction_operator");
}

// The same operator assembled from the closed structure operator:
//   f_*(f*y -o eps_x) . f_*(closed_{y, f_* x}) . eta_{y -o f_* x}.
inline NatTransPtr internal_adjunction_via_closed_operator(const MonoidalFunctorData& m, const Adjunction& upper) {
  detail::require_closed_pair(m, "internal_adjunction_operator");
  auto cso = closed_structure_operator(m);
  const auto& X = *m.X;
  const auto& Y = *m.Y;
  const auto& fu = *upper.U;
  auto from = compose(Y.hom, product({identity_functor(opposite(Y.C())), upper.U}), "-o.(id x f_*)");
  auto to = compose(upper.U, compose(X.hom, product({opposite(m.f_star), identity_functor(X.C())})),
                    "f_*.-o.(f* x id)");
  const auto& src = *from->source();
  const auto& csrc = *cso->source();
  return NatTrans::build("internal_adjunction_operator", from, to, [&](ObjId p) {
    auto v = src.unpack_object(p);
    auto y = v[0], x = v[1];
    auto fux = fu.obj(x);
    auto fy = m.f_star->obj(y);
    return Y.C()->chain(fu.mor(X.ihom_mor(X.C()->identity(fy), upper.eps->at(x))),
                        fu.mor(cso->at(csrc.pack_objects({y, fux}))), upper.eta->at(Y.ihom(y, fux)));
  });
}

}  // namespace conjlib
