#pragma once

// Finite-set-valued profunctors M : X -|-> Y, i.e. functors op(X) x Y -> Set,
// and the 2-cells between them.

#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "conj/fincat/functor.hpp"

namespace conjlib {

using ElemId = std::uint32_t;

class Profunctor;
using ProfunctorPtr = std::shared_ptr<const Profunctor>;

class Profunctor {
 public:
  // Which construction produced the profunctor; unhat inspects this.
  enum class Shape { generic, hom, companion, conjoint, extranat_source };

  struct Element {
    ObjId x;  // object of X
    ObjId y;  // object of Y
    std::string label;
  };

  // left(u, e):  u : x' -> x in X, e in M(x, y)  gives an element of M(x', y)
  // right(v, e): v : y -> y' in Y, e in M(x, y)  gives an element of M(x, y')
  using Action = std::function<ElemId(MorId, ElemId)>;

  Profunctor(std::string name, CategoryPtr x, CategoryPtr y, std::vector<Element> elements, Action left,
             Action right, Shape shape = Shape::generic, std::vector<CategoryPtr> shape_args = {})
      : name_(std::move(name)),
        x_(std::move(x)),
        y_(std::move(y)),
        elems_(std::move(elements)),
        left_(std::move(left)),
        right_(std::move(right)),
        shape_(shape),
        shape_args_(std::move(shape_args)) {
    for (ElemId e = 0; e < elems_.size(); ++e) {
      if (elems_[e].x >= x_->object_count() || elems_[e].y >= y_->object_count())
        throw StructuralError("profunctor " + name_ + ": element " + elems_[e].label +
                              " indexed by an undeclared object");
      index_[detail::pair_key(elems_[e].x, elems_[e].y)].push_back(e);
    }
  }

  const std::string& name() const { return name_; }
  const CategoryPtr& source() const { return x_; }
  const CategoryPtr& target() const { return y_; }
  Shape shape() const { return shape_; }
  const std::vector<CategoryPtr>& shape_args() const { return shape_args_; }
  std::size_t element_count() const { return elems_.size(); }
  const Element& element(ElemId e) const { return elems_[e]; }

  const std::vector<ElemId>& value_set(ObjId x, ObjId y) const {
    static const std::vector<ElemId> empty;
    auto it = index_.find(detail::pair_key(x, y));
    return it == index_.end() ? empty : it->second;
  }
  ElemId left(MorId u, ElemId e) const { return left_(u, e); }
  ElemId right(MorId v, ElemId e) const { return right_(v, e); }

  // Element of M(x, y) with the given label, if present.
  std::optional<ElemId> find(ObjId x, ObjId y, const std::string& label) const {
    for (auto e : value_set(x, y))
      if (elems_[e].label == label) return e;
    return std::nullopt;
  }

 private:
  std::string name_;
  CategoryPtr x_, y_;
  std::vector<Element> elems_;
  std::unordered_map<std::uint64_t, std::vector<ElemId>> index_;
  Action left_, right_;
  Shape shape_;
  std::vector<CategoryPtr> shape_args_;
};

namespace detail {

// Elements of the form D(F x, G y) with actions by pre/post composition.
// Element ids are packed per (x, y) pair in enumeration order.
inline ProfunctorPtr hom_like(std::string name, const FunctorPtr& f, const FunctorPtr& g,
                              Profunctor::Shape shape, std::vector<CategoryPtr> args) {
  const auto& d = f->target();
  auto x = f->source();
  auto y = g->source();
  std::vector<Profunctor::Element> elems;
  auto by_mor = std::make_shared<std::unordered_map<std::uint64_t, ElemId>>();
  // key: (x, y) packed with the morphism id
  auto key = [](ObjId a, ObjId b, MorId m, std::size_t ny, std::size_t nm) {
    return (std::uint64_t(a) * ny + b) * nm + m;
  };
  const auto ny = y->object_count();
  const auto nm = d->morphism_count();
  auto mors = std::make_shared<std::vector<MorId>>();
  for (ObjId a = 0; a < x->object_count(); ++a)
    for (ObjId b = 0; b < ny; ++b)
      for (MorId m : d->hom(f->obj(a), g->obj(b))) {
        (*by_mor)[key(a, b, m, ny, nm)] = ElemId(elems.size());
        mors->push_back(m);
        elems.push_back({a, b, d->morphism_name(m)});
      }
  auto coords = std::make_shared<std::vector<std::pair<ObjId, ObjId>>>();
  for (const auto& e : elems) coords->push_back({e.x, e.y});
  auto left = [=](MorId u, ElemId e) {
    auto m = d->then((*mors)[e], f->mor(u));
    return by_mor->at(key(x->source(u), (*coords)[e].second, m, ny, nm));
  };
  auto right = [=](MorId v, ElemId e) {
    auto m = d->then(g->mor(v), (*mors)[e]);
    return by_mor->at(key((*coords)[e].first, y->target(v), m, ny, nm));
  };
  return std::make_shared<Profunctor>(std::move(name), x, y, std::move(elems), left, right, shape,
                                      std::move(args));
}

}  // namespace detail

// Hom_C : C -|-> C, elements are the morphisms of C.
inline ProfunctorPtr hom_profunctor(const CategoryPtr& c) {
  auto id = identity_functor(c);
  return detail::hom_like("Hom(" + c->name() + ")", id, id, Profunctor::Shape::hom, {c});
}

// Companion of F : A -> B, F_*(a, b) = B(F a, b).
inline ProfunctorPtr companion(const FunctorPtr& f) {
  return detail::hom_like("companion(" + f->name() + ")", f, identity_functor(f->target()),
                          Profunctor::Shape::companion, {f->source(), f->target()});
}

// Conjoint of F : A -> B, F^*(b, a) = B(b, F a).
inline ProfunctorPtr conjoint(const FunctorPtr& f) {
  return detail::hom_like("conjoint(" + f->name() + ")", identity_functor(f->target()), f,
                          Profunctor::Shape::conjoint, {f->source(), f->target()});
}

// Element of a hom-like profunctor as the morphism it names.
inline MorId element_morphism(const Profunctor& m, const Category& d, ElemId e) {
  auto r = d.find_morphism(m.element(e).label);
  if (!r) throw StructuralError("profunctor " + m.name() + ": element is not a morphism of " + d.name());
  return *r;
}

// Pointwise comparison of value sets and actions (by element label).
inline bool same_profunctor(const Profunctor& a, const Profunctor& b) {
  if (!same_category(a.source(), b.source()) || !same_category(a.target(), b.target())) return false;
  if (a.element_count() != b.element_count()) return false;
  const auto& x = *a.source();
  const auto& y = *a.target();
  for (ElemId e = 0; e < a.element_count(); ++e) {
    const auto& ea = a.element(e);
    auto eb = b.find(ea.x, ea.y, ea.label);
    if (!eb) return false;
    for (MorId u : x.morphisms_into(ea.x))
      if (a.element(a.left(u, e)).label != b.element(b.left(u, *eb)).label) return false;
    for (MorId v : y.morphisms_from(ea.y))
      if (a.element(a.right(v, e)).label != b.element(b.right(v, *eb)).label) return false;
  }
  return true;
}

inline ValidationReport check_profunctor(const Profunctor& m) {
  ValidationReport report("profunctor " + m.name());
  const auto& x = *m.source();
  const auto& y = *m.target();
  for (ElemId e = 0; e < m.element_count(); ++e) {
    const auto& el = m.element(e);
    if (m.left(x.identity(el.x), e) != e) report.fail("left-identity", el.label);
    if (m.right(y.identity(el.y), e) != e) report.fail("right-identity", el.label);
    for (MorId u : x.morphisms_into(el.x)) {
      auto ue = m.left(u, e);
      const auto& uel = m.element(ue);
      if (uel.x != x.source(u) || uel.y != el.y) {
        report.fail("left-typing", x.morphism_name(u) + " acting on " + el.label);
        continue;
      }
      for (MorId u2 : x.morphisms_into(x.source(u)))
        if (m.left(u2, ue) != m.left(x.then(u, u2), e))
          report.fail("left-composition", x.morphism_name(u) + ", " + x.morphism_name(u2) + " on " + el.label);
      for (MorId v : y.morphisms_from(el.y))
        if (m.right(v, ue) != m.left(u, m.right(v, e)))
          report.fail("actions-commute", x.morphism_name(u) + ", " + y.morphism_name(v) + " on " + el.label);
    }
    for (MorId v : y.morphisms_from(el.y)) {
      auto ve = m.right(v, e);
      const auto& vel = m.element(ve);
      if (vel.y != y.target(v) || vel.x != el.x) {
        report.fail("right-typing", y.morphism_name(v) + " acting on " + el.label);
        continue;
      }
      for (MorId v2 : y.morphisms_from(y.target(v)))
        if (m.right(v2, ve) != m.right(y.then(v2, v), e))
          report.fail("right-composition", y.morphism_name(v) + ", " + y.morphism_name(v2) + " on " + el.label);
    }
  }
  return report;
}

// ---- 2-cells ------------------------------------------------------------

// gamma : M => M' over G : X -> X', G' : Y -> Y', with components
// gamma_{x,y} : M(x, y) -> M'(G x, G' y) stored per element of M.
class ProfunctorCell {
 public:
  ProfunctorCell(std::string name, ProfunctorPtr dom, ProfunctorPtr cod, FunctorPtr g, FunctorPtr g2,
                 std::vector<ElemId> components)
      : name_(std::move(name)),
        dom_(std::move(dom)),
        cod_(std::move(cod)),
        g_(std::move(g)),
        g2_(std::move(g2)),
        comp_(std::move(components)) {
    if (!same_category(g_->source(), dom_->source()) || !same_category(g_->target(), cod_->source()) ||
        !same_category(g2_->source(), dom_->target()) || !same_category(g2_->target(), cod_->target()))
      throw StructuralError("profunctor cell " + name_ + ": frame functors do not match the profunctors");
    if (comp_.size() != dom_->element_count())
      throw StructuralError("profunctor cell " + name_ + ": component count mismatch");
    for (ElemId e = 0; e < comp_.size(); ++e) {
      if (comp_[e] >= cod_->element_count())
        throw StructuralError("profunctor cell " + name_ + ": component outside codomain");
      const auto& src = dom_->element(e);
      const auto& tgt = cod_->element(comp_[e]);
      if (tgt.x != g_->obj(src.x) || tgt.y != g2_->obj(src.y))
        throw StructuralError("profunctor cell " + name_ + ": component at " + src.label +
                              " lands in the wrong value set");
    }
  }

  const std::string& name() const { return name_; }
  const ProfunctorPtr& domain() const { return dom_; }
  const ProfunctorPtr& codomain() const { return cod_; }
  const FunctorPtr& left_functor() const { return g_; }
  const FunctorPtr& right_functor() const { return g2_; }
  ElemId operator[](ElemId e) const { return comp_[e]; }
  const std::vector<ElemId>& components() const { return comp_; }

 private:
  std::string name_;
  ProfunctorPtr dom_, cod_;
  FunctorPtr g_, g2_;
  std::vector<ElemId> comp_;
};

inline ValidationReport check_profunctor_cell(const ProfunctorCell& c) {
  ValidationReport report("profunctor cell " + c.name());
  const auto& m = *c.domain();
  const auto& m2 = *c.codomain();
  const auto& x = *m.source();
  const auto& y = *m.target();
  for (ElemId e = 0; e < m.element_count(); ++e) {
    const auto& el = m.element(e);
    for (MorId u : x.morphisms_into(el.x))
      if (c[m.left(u, e)] != m2.left(c.left_functor()->mor(u), c[e]))
        report.fail("naturality-left", x.morphism_name(u) + " on " + el.label);
    for (MorId v : y.morphisms_from(el.y))
      if (c[m.right(v, e)] != m2.right(c.right_functor()->mor(v), c[e]))
        report.fail("naturality-right", y.morphism_name(v) + " on " + el.label);
  }
  return report;
}

inline bool same_profunctor_cell(const ProfunctorCell& a, const ProfunctorCell& b) {
  return same_functor(*a.left_functor(), *b.left_functor()) &&
         same_functor(*a.right_functor(), *b.right_functor()) && a.components() == b.components() &&
         a.domain()->element_count() == b.domain()->element_count();
}

}  // namespace conjlib
