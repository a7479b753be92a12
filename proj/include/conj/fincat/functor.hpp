#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "conj/fincat/category.hpp"

namespace conjlib {

class Functor;
using FunctorPtr = std::shared_ptr<const Functor>;

// A functor stored as two explicit maps.
class Functor {
 public:
  Functor(std::string name, CategoryPtr source, CategoryPtr target, std::vector<ObjId> objects,
          std::vector<MorId> morphisms)
      : name_(std::move(name)),
        source_(std::move(source)),
        target_(std::move(target)),
        obj_(std::move(objects)),
        mor_(std::move(morphisms)) {
    if (obj_.size() != source_->object_count() || mor_.size() != source_->morphism_count())
      throw StructuralError("functor " + name_ + ": map sizes do not match " + source_->name());
    for (auto y : obj_)
      if (y >= target_->object_count())
        throw StructuralError("functor " + name_ + ": object image outside " + target_->name());
    for (auto n : mor_)
      if (n >= target_->morphism_count())
        throw StructuralError("functor " + name_ + ": morphism image outside " + target_->name());
  }

  // Tabulates the given maps over every object and morphism of `source`.
  static FunctorPtr build(std::string name, CategoryPtr source, CategoryPtr target,
                          const std::function<ObjId(ObjId)>& on_objects,
                          const std::function<MorId(MorId)>& on_morphisms) {
    std::vector<ObjId> objs(source->object_count());
    std::vector<MorId> mors(source->morphism_count());
    for (ObjId x = 0; x < objs.size(); ++x) objs[x] = on_objects(x);
    for (MorId m = 0; m < mors.size(); ++m) mors[m] = on_morphisms(m);
    return std::make_shared<Functor>(std::move(name), std::move(source), std::move(target),
                                     std::move(objs), std::move(mors));
  }

  const std::string& name() const { return name_; }
  const CategoryPtr& source() const { return source_; }
  const CategoryPtr& target() const { return target_; }
  ObjId operator()(ObjId x) const { return obj_[x]; }
  ObjId obj(ObjId x) const { return obj_[x]; }
  MorId mor(MorId m) const { return mor_[m]; }
  const std::vector<ObjId>& object_map() const { return obj_; }
  const std::vector<MorId>& morphism_map() const { return mor_; }

 private:
  std::string name_;
  CategoryPtr source_, target_;
  std::vector<ObjId> obj_;
  std::vector<MorId> mor_;
};

inline FunctorPtr identity_functor(const CategoryPtr& c, std::string name = {}) {
  if (name.empty()) name = "id_" + c->name();
  return Functor::build(std::move(name), c, c, [](ObjId x) { return x; }, [](MorId m) { return m; });
}

// g . f
inline FunctorPtr compose(const FunctorPtr& g, const FunctorPtr& f, std::string name = {}) {
  if (!same_category(f->target(), g->source()))
    throw StructuralError("cannot compose " + g->name() + " after " + f->name() + ": " +
                          f->target()->name() + " != " + g->source()->name());
  if (name.empty()) name = g->name() + "." + f->name();
  return Functor::build(
      std::move(name), f->source(), g->target(), [&](ObjId x) { return g->obj(f->obj(x)); },
      [&](MorId m) { return g->mor(f->mor(m)); });
}

inline FunctorPtr opposite(const FunctorPtr& f, std::string name = {}) {
  if (name.empty()) name = f->name() + "^op";
  return std::make_shared<Functor>(std::move(name), opposite(f->source()), opposite(f->target()),
                                   f->object_map(), f->morphism_map());
}

// F1 x ... x Fn : product(sources) -> product(targets)
inline FunctorPtr product(const std::vector<FunctorPtr>& fs, std::string name = {}) {
  std::vector<CategoryPtr> srcs, tgts;
  for (const auto& f : fs) {
    srcs.push_back(f->source());
    tgts.push_back(f->target());
  }
  auto src = product(srcs);
  auto tgt = product(tgts);
  if (name.empty()) {
    name = "(";
    for (std::size_t i = 0; i < fs.size(); ++i) name += (i ? " x " : "") + fs[i]->name();
    name += ")";
  }
  if (fs.empty())
    return identity_functor(src, name);
  return Functor::build(
      std::move(name), src, tgt,
      [&](ObjId x) {
        auto xs = src->unpack_object(x);
        for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = fs[i]->obj(xs[i]);
        return tgt->pack_objects(xs);
      },
      [&](MorId m) {
        auto ms = src->unpack_morphism(m);
        for (std::size_t i = 0; i < ms.size(); ++i) ms[i] = fs[i]->mor(ms[i]);
        return tgt->pack_morphisms(ms);
      });
}

// Projection of a product category onto factor i.
inline FunctorPtr projection(const CategoryPtr& prod, std::size_t i) {
  if (prod->kind() != Category::Kind::product || i >= prod->factors().size())
    throw StructuralError("projection: " + prod->name() + " has no factor " + std::to_string(i));
  return Functor::build(
      "pi" + std::to_string(i), prod, prod->factors()[i],
      [&](ObjId x) { return prod->unpack_object(x)[i]; },
      [&](MorId m) { return prod->unpack_morphism(m)[i]; });
}

// <F1,...,Fn> : X -> product(targets)
inline FunctorPtr pairing(const std::vector<FunctorPtr>& fs, std::string name = {}) {
  if (fs.empty()) throw StructuralError("pairing of zero functors");
  std::vector<CategoryPtr> tgts;
  for (const auto& f : fs) {
    if (!same_category(f->source(), fs.front()->source()))
      throw StructuralError("pairing: functors have different sources");
    tgts.push_back(f->target());
  }
  auto tgt = product(tgts);
  if (name.empty()) {
    name = "<";
    for (std::size_t i = 0; i < fs.size(); ++i) name += (i ? "," : "") + fs[i]->name();
    name += ">";
  }
  std::vector<ObjId> xs(fs.size());
  std::vector<MorId> ms(fs.size());
  return Functor::build(
      std::move(name), fs.front()->source(), tgt,
      [&](ObjId x) {
        for (std::size_t i = 0; i < fs.size(); ++i) xs[i] = fs[i]->obj(x);
        return tgt->pack_objects(xs);
      },
      [&](MorId m) {
        for (std::size_t i = 0; i < fs.size(); ++i) ms[i] = fs[i]->mor(m);
        return tgt->pack_morphisms(ms);
      });
}

// Constant functor at an object.
inline FunctorPtr constant_functor(const CategoryPtr& src, const CategoryPtr& tgt, ObjId y,
                                   std::string name = {}) {
  if (name.empty()) name = "const_" + tgt->object_name(y);
  auto id = tgt->identity(y);
  return Functor::build(std::move(name), src, tgt, [&](ObjId) { return y; }, [&](MorId) { return id; });
}

// Pointwise equality of the maps (and structural equality of endpoints).
inline bool same_functor(const Functor& f, const Functor& g) {
  return same_category(f.source(), g.source()) && same_category(f.target(), g.target()) &&
         f.object_map() == g.object_map() && f.morphism_map() == g.morphism_map();
}

inline ValidationReport check_functor(const Functor& f) {
  ValidationReport report("functor " + f.name());
  const auto& s = *f.source();
  const auto& t = *f.target();
  for (MorId m = 0; m < s.morphism_count(); ++m) {
    auto n = f.mor(m);
    if (t.source(n) != f.obj(s.source(m)) || t.target(n) != f.obj(s.target(m)))
      report.fail("endpoints", s.morphism_name(m) + " |-> " + t.morphism_name(n) +
                                   " does not go " + t.object_name(f.obj(s.source(m))) + " -> " +
                                   t.object_name(f.obj(s.target(m))));
  }
  for (ObjId x = 0; x < s.object_count(); ++x)
    if (f.mor(s.identity(x)) != t.identity(f.obj(x)))
      report.fail("identity", "F(id_" + s.object_name(x) + ") = " + t.morphism_name(f.mor(s.identity(x))));
  if (!report.ok()) return report;
  for (MorId a = 0; a < s.morphism_count(); ++a)
    for (MorId b : s.morphisms_from(s.target(a))) {
      auto ba = s.compose(b, a);
      if (!ba) continue;  // malformed source, reported by validate_category
      auto lhs = f.mor(*ba);
      auto rhs = t.compose(f.mor(b), f.mor(a));
      if (!rhs || *rhs != lhs)
        report.fail("composition", "F(" + s.morphism_name(b) + " . " + s.morphism_name(a) + ") = " +
                                       t.morphism_name(lhs) + " but F(" + s.morphism_name(b) +
                                       ") . F(" + s.morphism_name(a) + ") = " +
                                       (rhs ? t.morphism_name(*rhs) : std::string("undefined")));
    }
  return report;
}
inline ValidationReport check_functor(const FunctorPtr& f) { return check_functor(*f); }

// ---- natural transformations --------------------------------------------

class NatTrans;
using NatTransPtr = std::shared_ptr<const NatTrans>;

class NatTrans {
 public:
  NatTrans(std::string name, FunctorPtr from, FunctorPtr to, std::vector<MorId> components)
      : name_(std::move(name)), from_(std::move(from)), to_(std::move(to)), comp_(std::move(components)) {
    if (!same_category(from_->source(), to_->source()) || !same_category(from_->target(), to_->target()))
      throw StructuralError("natural transformation " + name_ + ": " + from_->name() + " and " +
                            to_->name() + " are not parallel");
    if (comp_.size() != from_->source()->object_count())
      throw StructuralError("natural transformation " + name_ + ": expected " +
                            std::to_string(from_->source()->object_count()) + " components, got " +
                            std::to_string(comp_.size()));
    for (auto m : comp_)
      if (m >= from_->target()->morphism_count())
        throw StructuralError("natural transformation " + name_ + ": component outside " +
                              from_->target()->name());
  }

  static NatTransPtr build(std::string name, FunctorPtr from, FunctorPtr to,
                           const std::function<MorId(ObjId)>& component) {
    std::vector<MorId> cs(from->source()->object_count());
    for (ObjId x = 0; x < cs.size(); ++x) cs[x] = component(x);
    return std::make_shared<NatTrans>(std::move(name), std::move(from), std::move(to), std::move(cs));
  }

  const std::string& name() const { return name_; }
  const FunctorPtr& from() const { return from_; }
  const FunctorPtr& to() const { return to_; }
  const CategoryPtr& source() const { return from_->source(); }
  const CategoryPtr& target() const { return from_->target(); }
  MorId operator[](ObjId x) const { return comp_[x]; }
  MorId at(ObjId x) const { return comp_[x]; }
  const std::vector<MorId>& components() const { return comp_; }

 private:
  std::string name_;
  FunctorPtr from_, to_;
  std::vector<MorId> comp_;
};

inline NatTransPtr identity_nat(const FunctorPtr& f, std::string name = {}) {
  if (name.empty()) name = "id_" + f->name();
  return NatTrans::build(std::move(name), f, f, [&](ObjId x) { return f->target()->identity(f->obj(x)); });
}

// beta . alpha (vertical).
inline NatTransPtr vertical(const NatTransPtr& beta, const NatTransPtr& alpha, std::string name = {}) {
  if (!same_functor(*alpha->to(), *beta->from()))
    throw StructuralError("vertical composite: " + alpha->name() + " ends at " + alpha->to()->name() +
                          " but " + beta->name() + " starts at " + beta->from()->name());
  if (name.empty()) name = beta->name() + "*" + alpha->name();
  const auto& d = *alpha->target();
  return NatTrans::build(std::move(name), alpha->from(), beta->to(),
                         [&](ObjId x) { return d.then(beta->at(x), alpha->at(x)); });
}

// Horizontal (Godement) composite beta o alpha : G.F => G'.F' for
// alpha : F => F' and beta : G => G'; component beta_{F'x} . G(alpha_x).
inline NatTransPtr horizontal(const NatTransPtr& beta, const NatTransPtr& alpha, std::string name = {}) {
  if (!same_category(alpha->target(), beta->source()))
    throw StructuralError("horizontal composite: " + alpha->name() + " lands in " +
                          alpha->target()->name() + ", " + beta->name() + " starts in " +
                          beta->source()->name());
  if (name.empty()) name = beta->name() + "o" + alpha->name();
  auto from = compose(beta->from(), alpha->from());
  auto to = compose(beta->to(), alpha->to());
  const auto& e = *beta->target();
  return NatTrans::build(std::move(name), from, to, [&](ObjId x) {
    return e.then(beta->at(alpha->to()->obj(x)), beta->from()->mor(alpha->at(x)));
  });
}

// K alpha : K.F => K.F'
inline NatTransPtr whisker_left(const FunctorPtr& k, const NatTransPtr& alpha, std::string name = {}) {
  return horizontal(identity_nat(k), alpha, name.empty() ? k->name() + alpha->name() : name);
}
// alpha J : F.J => F'.J
inline NatTransPtr whisker_right(const NatTransPtr& alpha, const FunctorPtr& j, std::string name = {}) {
  return horizontal(alpha, identity_nat(j), name.empty() ? alpha->name() + j->name() : name);
}

inline NatTransPtr opposite(const NatTransPtr& alpha, std::string name = {}) {
  // alpha^op : G^op => F^op, same components read in the opposite category.
  if (name.empty()) name = alpha->name() + "^op";
  return std::make_shared<NatTrans>(std::move(name), opposite(alpha->to()), opposite(alpha->from()),
                                    alpha->components());
}

inline NatTransPtr product(const std::vector<NatTransPtr>& ts, std::string name = {}) {
  std::vector<FunctorPtr> fs, gs;
  for (const auto& t : ts) {
    fs.push_back(t->from());
    gs.push_back(t->to());
  }
  auto f = product(fs);
  auto g = product(gs);
  if (name.empty()) {
    name = "(";
    for (std::size_t i = 0; i < ts.size(); ++i) name += (i ? " x " : "") + ts[i]->name();
    name += ")";
  }
  const auto& src = *f->source();
  const auto& tgt = *f->target();
  return NatTrans::build(std::move(name), f, g, [&](ObjId x) {
    auto xs = src.unpack_object(x);
    std::vector<MorId> ms(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) ms[i] = ts[i]->at(xs[i]);
    return tgt.pack_morphisms(ms);
  });
}

inline bool same_nat(const NatTrans& a, const NatTrans& b) {
  return same_functor(*a.from(), *b.from()) && same_functor(*a.to(), *b.to()) &&
         a.components() == b.components();
}

inline bool is_identity_nat(const NatTrans& a) {
  if (!same_functor(*a.from(), *a.to())) return false;
  for (ObjId x = 0; x < a.source()->object_count(); ++x)
    if (a.at(x) != a.target()->identity(a.from()->obj(x))) return false;
  return true;
}

inline ValidationReport check_nat_trans(const NatTrans& t) {
  ValidationReport report("natural transformation " + t.name());
  const auto& s = *t.source();
  const auto& d = *t.target();
  const auto& F = *t.from();
  const auto& G = *t.to();
  for (ObjId x = 0; x < s.object_count(); ++x) {
    auto m = t.at(x);
    if (d.source(m) != F.obj(x) || d.target(m) != G.obj(x))
      report.fail("component-typing", "component at " + s.object_name(x) + " is " + d.morphism_name(m) +
                                          ", expected " + d.object_name(F.obj(x)) + " -> " +
                                          d.object_name(G.obj(x)));
  }
  if (!report.ok()) return report;
  for (MorId u = 0; u < s.morphism_count(); ++u) {
    auto x = s.source(u);
    auto y = s.target(u);
    auto lhs = d.then(G.mor(u), t.at(x));
    auto rhs = d.then(t.at(y), F.mor(u));
    if (lhs != rhs)
      report.fail("naturality", "at " + s.morphism_name(u) + ": G(u).t_x = " + d.morphism_name(lhs) +
                                    " but t_y.F(u) = " + d.morphism_name(rhs));
  }
  return report;
}
inline ValidationReport check_nat_trans(const NatTransPtr& t) { return check_nat_trans(*t); }

// Componentwise inverse, if every component is invertible.
inline std::optional<NatTransPtr> inverse(const NatTransPtr& t, std::string name = {}) {
  std::vector<MorId> inv(t->components().size());
  for (ObjId x = 0; x < inv.size(); ++x) {
    auto i = inverse_of(*t->target(), t->at(x));
    if (!i) return std::nullopt;
    inv[x] = *i;
  }
  if (name.empty()) name = t->name() + "^-1";
  return std::make_shared<NatTrans>(std::move(name), t->to(), t->from(), std::move(inv));
}
inline bool is_invertible(const NatTransPtr& t) { return inverse(t).has_value(); }

}  // namespace conjlib
