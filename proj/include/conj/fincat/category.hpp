#pragma once

// Finite categories as explicit tables, plus the structured constructions
// (opposite, n-ary product, terminal) built on top of them.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "conj/fincat/report.hpp"

namespace conjlib {

using ObjId = std::uint32_t;
using MorId = std::uint32_t;

class Category;
using CategoryPtr = std::shared_ptr<const Category>;

namespace detail {

inline std::uint64_t pair_key(std::uint64_t a, std::uint64_t b) { return (a << 32) | b; }

// Splits "(x,(y,z),w)" into its top-level components.  Returns nullopt when
// the text is not a parenthesised tuple with the expected arity.
inline std::optional<std::vector<std::string_view>> split_tuple(std::string_view text,
                                                                std::size_t arity) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') return std::nullopt;
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 1;
  for (std::size_t i = 1; i + 1 < text.size(); ++i) {
    char ch = text[i];
    if (ch == '(' || ch == '{' || ch == '[') ++depth;
    if (ch == ')' || ch == '}' || ch == ']') --depth;
    if (ch == ',' && depth == 0) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(text.substr(start, text.size() - 1 - start));
  if (parts.size() != arity) return std::nullopt;
  return parts;
}

}  // namespace detail

class Category {
 public:
  enum class Kind { tables, product, opposite };

  struct Morphism {
    std::string name;
    ObjId source = 0;
    ObjId target = 0;
  };

  struct Composite {
    MorId second;  // g
    MorId first;   // f
    MorId result;  // g . f
  };

  // Builds an explicit category.  Identifiers out of range raise
  // StructuralError; the category laws are *not* enforced here, see
  // validate_category.
  static CategoryPtr from_tables(std::string name, std::vector<std::string> objects,
                                 std::vector<Morphism> morphisms, std::vector<MorId> identities,
                                 const std::vector<Composite>& composites) {
    auto c = std::shared_ptr<Category>(new Category());
    c->kind_ = Kind::tables;
    c->name_ = std::move(name);
    c->objects_ = std::move(objects);
    c->morphisms_ = std::move(morphisms);
    c->identities_ = std::move(identities);
    const auto n_obj = c->objects_.size();
    const auto n_mor = c->morphisms_.size();
    if (c->identities_.size() != n_obj)
      throw StructuralError("category " + c->name_ + ": identity table has " +
                            std::to_string(c->identities_.size()) + " entries for " +
                            std::to_string(n_obj) + " objects");
    for (const auto& m : c->morphisms_)
      if (m.source >= n_obj || m.target >= n_obj)
        throw StructuralError("category " + c->name_ + ": morphism " + m.name +
                              " references an undeclared object");
    for (auto id : c->identities_)
      if (id >= n_mor)
        throw StructuralError("category " + c->name_ + ": identity references an undeclared morphism");
    c->fill_composites(composites);
    for (std::size_t i = 0; i < n_obj; ++i) c->object_index_.emplace(c->objects_[i], ObjId(i));
    for (std::size_t i = 0; i < n_mor; ++i)
      if (!c->morphism_index_.emplace(c->morphisms_[i].name, MorId(i)).second)
        throw StructuralError("category " + c->name_ + ": duplicate morphism name " +
                              c->morphisms_[i].name);
    if (c->object_index_.size() != n_obj)
      throw StructuralError("category " + c->name_ + ": duplicate object name");
    c->out_.assign(n_obj, {});
    c->in_.assign(n_obj, {});
    for (std::size_t i = 0; i < n_mor; ++i) {
      c->out_[c->morphisms_[i].source].push_back(MorId(i));
      c->in_[c->morphisms_[i].target].push_back(MorId(i));
    }
    return c;
  }

  // Convenience for categories whose composite is a pure function of the
  // pair (posets, groups, ...): every composable pair gets an entry.
  static CategoryPtr from_rule(std::string name, std::vector<std::string> objects,
                               std::vector<Morphism> morphisms, std::vector<MorId> identities,
                               const std::function<MorId(MorId g, MorId f)>& compose) {
    std::vector<Composite> table;
    for (MorId f = 0; f < morphisms.size(); ++f)
      for (MorId g = 0; g < morphisms.size(); ++g)
        if (morphisms[f].target == morphisms[g].source) table.push_back({g, f, compose(g, f)});
    return from_tables(std::move(name), std::move(objects), std::move(morphisms),
                       std::move(identities), table);
  }

  // A category in which every hom-set has at most one element, given by
  // its order relation `leq(x, y)` (x -> y exists iff leq(x, y)).
  static CategoryPtr posetal(std::string name, std::vector<std::string> objects,
                             const std::function<bool(ObjId, ObjId)>& leq,
                             const std::function<std::string(ObjId, ObjId)>& arrow_name) {
    const auto n = objects.size();
    std::vector<Morphism> mors;
    std::vector<MorId> ids(n);
    std::vector<std::vector<MorId>> arrow(n, std::vector<MorId>(n, MorId(-1)));
    for (ObjId x = 0; x < n; ++x)
      for (ObjId y = 0; y < n; ++y)
        if (leq(x, y)) {
          arrow[x][y] = MorId(mors.size());
          if (x == y) ids[x] = MorId(mors.size());
          mors.push_back({arrow_name(x, y), x, y});
        }
    return from_rule(std::move(name), std::move(objects), mors, ids, [&](MorId g, MorId f) {
      auto r = arrow[mors[f].source][mors[g].target];
      return r == MorId(-1) ? f : r;  // missing transitivity surfaces in validation
    });
  }

  static CategoryPtr terminal() {
    static const CategoryPtr one =
        from_tables("1", {"*"}, {{"id_*", 0, 0}}, {0}, {{0, 0, 0}});
    return one;
  }

  static CategoryPtr opposite(const CategoryPtr& c) {
    if (c->kind_ == Kind::opposite) return c->factors_.front();
    auto o = std::shared_ptr<Category>(new Category());
    o->kind_ = Kind::opposite;
    o->name_ = "op(" + c->name_ + ")";
    o->factors_ = {c};
    return o;
  }

  static CategoryPtr product(std::vector<CategoryPtr> factors) {
    if (factors.empty()) return terminal();
    auto p = std::shared_ptr<Category>(new Category());
    p->kind_ = Kind::product;
    p->name_ = "product(";
    for (std::size_t i = 0; i < factors.size(); ++i)
      p->name_ += (i ? "," : "") + factors[i]->name();
    p->name_ += ")";
    p->obj_count_ = 1;
    p->mor_count_ = 1;
    for (const auto& f : factors) {
      p->obj_count_ *= f->object_count();
      p->mor_count_ *= f->morphism_count();
    }
    if (p->obj_count_ > (std::size_t(1) << 31) || p->mor_count_ > (std::size_t(1) << 31))
      throw StructuralError("product category " + p->name_ + " is too large");
    p->factors_ = std::move(factors);
    return p;
  }

  // ---- observers --------------------------------------------------------

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  std::span<const CategoryPtr> factors() const {
    return kind_ == Kind::product ? std::span<const CategoryPtr>(factors_)
                                  : std::span<const CategoryPtr>();
  }
  const CategoryPtr& opposite_base() const { return factors_.front(); }

  std::size_t object_count() const {
    switch (kind_) {
      case Kind::tables: return objects_.size();
      case Kind::product: return obj_count_;
      case Kind::opposite: return factors_.front()->object_count();
    }
    return 0;
  }
  std::size_t morphism_count() const {
    switch (kind_) {
      case Kind::tables: return morphisms_.size();
      case Kind::product: return mor_count_;
      case Kind::opposite: return factors_.front()->morphism_count();
    }
    return 0;
  }

  ObjId source(MorId m) const {
    switch (kind_) {
      case Kind::tables: return morphisms_[m].source;
      case Kind::opposite: return factors_.front()->target(m);
      case Kind::product: {
        std::vector<MorId> parts = unpack_morphism(m);
        std::vector<ObjId> objs(parts.size());
        for (std::size_t i = 0; i < parts.size(); ++i) objs[i] = factors_[i]->source(parts[i]);
        return pack_objects(objs);
      }
    }
    return 0;
  }
  ObjId target(MorId m) const {
    switch (kind_) {
      case Kind::tables: return morphisms_[m].target;
      case Kind::opposite: return factors_.front()->source(m);
      case Kind::product: {
        std::vector<MorId> parts = unpack_morphism(m);
        std::vector<ObjId> objs(parts.size());
        for (std::size_t i = 0; i < parts.size(); ++i) objs[i] = factors_[i]->target(parts[i]);
        return pack_objects(objs);
      }
    }
    return 0;
  }
  MorId identity(ObjId x) const {
    switch (kind_) {
      case Kind::tables: return identities_[x];
      case Kind::opposite: return factors_.front()->identity(x);
      case Kind::product: {
        auto objs = unpack_object(x);
        std::vector<MorId> ids(objs.size());
        for (std::size_t i = 0; i < objs.size(); ++i) ids[i] = factors_[i]->identity(objs[i]);
        return pack_morphisms(ids);
      }
    }
    return 0;
  }

  // g . f, defined when the table has an entry (for well-formed categories:
  // exactly when target(f) == source(g)).
  std::optional<MorId> compose(MorId g, MorId f) const {
    switch (kind_) {
      case Kind::tables: {
        auto it = table_.find(detail::pair_key(g, f));
        if (it == table_.end()) return std::nullopt;
        return it->second;
      }
      case Kind::opposite: return factors_.front()->compose(f, g);
      case Kind::product: {
        auto gs = unpack_morphism(g);
        auto fs = unpack_morphism(f);
        std::vector<MorId> hs(gs.size());
        for (std::size_t i = 0; i < gs.size(); ++i) {
          auto h = factors_[i]->compose(gs[i], fs[i]);
          if (!h) return std::nullopt;
          hs[i] = *h;
        }
        return pack_morphisms(hs);
      }
    }
    return std::nullopt;
  }

  // Composite of a chain written right-to-left: then(g, f) = g . f.  Throws
  // on a non-composable pair; intended for code paths whose typing is
  // already established.
  MorId then(MorId g, MorId f) const {
    auto h = compose(g, f);
    if (!h)
      throw StructuralError("category " + name_ + ": " + morphism_name(g) + " . " +
                            morphism_name(f) + " is not composable");
    return *h;
  }
  template <typename... Ms>
  MorId chain(MorId last, Ms... rest) const {
    if constexpr (sizeof...(rest) == 0) {
      return last;
    } else {
      return then(last, chain(rest...));
    }
  }

  std::string object_name(ObjId x) const {
    switch (kind_) {
      case Kind::tables: return objects_[x];
      case Kind::opposite: return factors_.front()->object_name(x);
      case Kind::product: {
        auto objs = unpack_object(x);
        std::string s = "(";
        for (std::size_t i = 0; i < objs.size(); ++i)
          s += (i ? "," : "") + factors_[i]->object_name(objs[i]);
        return s + ")";
      }
    }
    return {};
  }
  std::string morphism_name(MorId m) const {
    switch (kind_) {
      case Kind::tables: return morphisms_[m].name;
      case Kind::opposite: return factors_.front()->morphism_name(m);
      case Kind::product: {
        auto ms = unpack_morphism(m);
        std::string s = "(";
        for (std::size_t i = 0; i < ms.size(); ++i)
          s += (i ? "," : "") + factors_[i]->morphism_name(ms[i]);
        return s + ")";
      }
    }
    return {};
  }

  std::optional<ObjId> find_object(std::string_view name) const {
    switch (kind_) {
      case Kind::tables: {
        auto it = object_index_.find(std::string(name));
        if (it == object_index_.end()) return std::nullopt;
        return it->second;
      }
      case Kind::opposite: return factors_.front()->find_object(name);
      case Kind::product: {
        auto parts = detail::split_tuple(name, factors_.size());
        if (!parts) return std::nullopt;
        std::vector<ObjId> objs;
        for (std::size_t i = 0; i < parts->size(); ++i) {
          auto o = factors_[i]->find_object((*parts)[i]);
          if (!o) return std::nullopt;
          objs.push_back(*o);
        }
        return pack_objects(objs);
      }
    }
    return std::nullopt;
  }
  std::optional<MorId> find_morphism(std::string_view name) const {
    switch (kind_) {
      case Kind::tables: {
        auto it = morphism_index_.find(std::string(name));
        if (it == morphism_index_.end()) return std::nullopt;
        return it->second;
      }
      case Kind::opposite: return factors_.front()->find_morphism(name);
      case Kind::product: {
        auto parts = detail::split_tuple(name, factors_.size());
        if (!parts) return std::nullopt;
        std::vector<MorId> ms;
        for (std::size_t i = 0; i < parts->size(); ++i) {
          auto m = factors_[i]->find_morphism((*parts)[i]);
          if (!m) return std::nullopt;
          ms.push_back(*m);
        }
        return pack_morphisms(ms);
      }
    }
    return std::nullopt;
  }

  // Morphisms x -> y.
  std::vector<MorId> hom(ObjId x, ObjId y) const {
    switch (kind_) {
      case Kind::tables: {
        std::vector<MorId> r;
        for (auto m : out_[x])
          if (morphisms_[m].target == y) r.push_back(m);
        return r;
      }
      case Kind::opposite: return factors_.front()->hom(y, x);
      case Kind::product: {
        auto xs = unpack_object(x);
        auto ys = unpack_object(y);
        std::vector<std::vector<MorId>> parts(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) parts[i] = factors_[i]->hom(xs[i], ys[i]);
        return cartesian(parts);
      }
    }
    return {};
  }
  std::vector<MorId> morphisms_from(ObjId x) const {
    switch (kind_) {
      case Kind::tables: return out_[x];
      case Kind::opposite: return factors_.front()->morphisms_into(x);
      case Kind::product: {
        auto xs = unpack_object(x);
        std::vector<std::vector<MorId>> parts(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) parts[i] = factors_[i]->morphisms_from(xs[i]);
        return cartesian(parts);
      }
    }
    return {};
  }
  std::vector<MorId> morphisms_into(ObjId y) const {
    switch (kind_) {
      case Kind::tables: return in_[y];
      case Kind::opposite: return factors_.front()->morphisms_from(y);
      case Kind::product: {
        auto ys = unpack_object(y);
        std::vector<std::vector<MorId>> parts(ys.size());
        for (std::size_t i = 0; i < ys.size(); ++i) parts[i] = factors_[i]->morphisms_into(ys[i]);
        return cartesian(parts);
      }
    }
    return {};
  }

  bool is_identity(MorId m) const { return identity(source(m)) == m; }

  // ---- product coordinates (mixed radix, first factor most significant) --

  ObjId pack_objects(std::span<const ObjId> parts) const {
    std::size_t id = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) id = id * factors_[i]->object_count() + parts[i];
    return ObjId(id);
  }
  ObjId pack_objects(std::initializer_list<ObjId> parts) const {
    return pack_objects(std::span<const ObjId>(parts.begin(), parts.size()));
  }
  MorId pack_morphisms(std::span<const MorId> parts) const {
    std::size_t id = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i)
      id = id * factors_[i]->morphism_count() + parts[i];
    return MorId(id);
  }
  MorId pack_morphisms(std::initializer_list<MorId> parts) const {
    return pack_morphisms(std::span<const MorId>(parts.begin(), parts.size()));
  }
  std::vector<ObjId> unpack_object(ObjId x) const {
    std::vector<ObjId> parts(factors_.size());
    std::size_t id = x;
    for (std::size_t i = factors_.size(); i-- > 0;) {
      auto n = factors_[i]->object_count();
      parts[i] = ObjId(id % n);
      id /= n;
    }
    return parts;
  }
  std::vector<MorId> unpack_morphism(MorId m) const {
    std::vector<MorId> parts(factors_.size());
    std::size_t id = m;
    for (std::size_t i = factors_.size(); i-- > 0;) {
      auto n = factors_[i]->morphism_count();
      parts[i] = MorId(id % n);
      id /= n;
    }
    return parts;
  }

  // Raw table access for explicit categories (serialization, validation).
  const std::unordered_map<std::uint64_t, MorId>& composition_table() const { return table_; }
  std::span<const MorId> identity_table() const { return identities_; }

 private:
  Category() = default;

  // Fills the table, checking only that identifiers exist.
  void fill_composites(const std::vector<Composite>& cs) {
    const auto n_mor = morphisms_.size();
    for (const auto& e : cs) {
      if (e.second >= n_mor || e.first >= n_mor || e.result >= n_mor)
        throw StructuralError("category " + name_ + ": composition table references an undeclared morphism");
      table_[detail::pair_key(e.second, e.first)] = e.result;
    }
  }

  std::vector<MorId> cartesian(const std::vector<std::vector<MorId>>& parts) const {
    std::vector<MorId> result;
    std::vector<MorId> current(parts.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == parts.size()) {
        result.push_back(pack_morphisms(current));
        return;
      }
      for (auto m : parts[i]) {
        current[i] = m;
        rec(i + 1);
      }
    };
    rec(0);
    return result;
  }

  Kind kind_ = Kind::tables;
  std::string name_;
  // tables
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<MorId> identities_;
  std::unordered_map<std::uint64_t, MorId> table_;
  std::unordered_map<std::string, ObjId> object_index_;
  std::unordered_map<std::string, MorId> morphism_index_;
  std::vector<std::vector<MorId>> out_, in_;
  // product / opposite
  std::vector<CategoryPtr> factors_;
  std::size_t obj_count_ = 0;
  std::size_t mor_count_ = 0;
};

inline CategoryPtr terminal() { return Category::terminal(); }
inline CategoryPtr opposite(const CategoryPtr& c) { return Category::opposite(c); }
inline CategoryPtr product(std::vector<CategoryPtr> factors) {
  return Category::product(std::move(factors));
}

// Structural equality: same identifiers, sources, targets, identities and
// composites.  Category display names are not compared.
inline bool same_category(const Category& a, const Category& b) {
  if (&a == &b) return true;
  using K = Category::Kind;
  if (a.kind() == K::product && b.kind() == K::product) {
    if (a.factors().size() != b.factors().size()) return false;
    for (std::size_t i = 0; i < a.factors().size(); ++i)
      if (!same_category(*a.factors()[i], *b.factors()[i])) return false;
    return true;
  }
  if (a.kind() == K::opposite && b.kind() == K::opposite)
    return same_category(*a.opposite_base(), *b.opposite_base());
  if (a.object_count() != b.object_count() || a.morphism_count() != b.morphism_count()) return false;
  for (ObjId x = 0; x < a.object_count(); ++x)
    if (a.object_name(x) != b.object_name(x) || a.identity(x) != b.identity(x)) return false;
  for (MorId m = 0; m < a.morphism_count(); ++m)
    if (a.morphism_name(m) != b.morphism_name(m) || a.source(m) != b.source(m) ||
        a.target(m) != b.target(m))
      return false;
  for (MorId f = 0; f < a.morphism_count(); ++f)
    for (MorId g : a.morphisms_from(a.target(f)))
      if (a.compose(g, f) != b.compose(g, f)) return false;
  return true;
}
inline bool same_category(const CategoryPtr& a, const CategoryPtr& b) {
  return a == b || same_category(*a, *b);
}

// ---- validation ---------------------------------------------------------

// Exhaustive scan of the four category laws.  Products and opposites are
// valid exactly when their factors are, so they delegate.
inline ValidationReport validate_category(const Category& c) {
  ValidationReport report("category " + c.name());
  using K = Category::Kind;
  if (c.kind() == K::opposite) {
    auto inner = validate_category(*c.opposite_base());
    report.absorb(inner);
    return report;
  }
  if (c.kind() == K::product) {
    for (const auto& f : c.factors()) report.absorb(validate_category(*f));
    return report;
  }
  const auto n_obj = c.object_count();
  const auto n_mor = c.morphism_count();
  auto mn = [&](MorId m) { return c.morphism_name(m); };
  for (ObjId x = 0; x < n_obj; ++x) {
    auto id = c.identity(x);
    if (c.source(id) != x || c.target(id) != x)
      report.fail("identity-typing", "identity of " + c.object_name(x) + " is " + mn(id) + ": " +
                                         c.object_name(c.source(id)) + " -> " +
                                         c.object_name(c.target(id)));
  }
  for (const auto& [key, h] : c.composition_table()) {
    auto g = MorId(key >> 32);
    auto f = MorId(key & 0xffffffffu);
    if (c.target(f) != c.source(g)) {
      report.fail("composite-undefined", "entry " + mn(g) + " . " + mn(f) + " = " + mn(h) +
                                             " for a non-composable pair");
      continue;
    }
    if (c.source(h) != c.source(f) || c.target(h) != c.target(g))
      report.fail("composite-typing", mn(g) + " . " + mn(f) + " = " + mn(h) + " has the wrong endpoints");
  }
  for (MorId f = 0; f < n_mor; ++f)
    for (MorId g = 0; g < n_mor; ++g)
      if (c.target(f) == c.source(g) && !c.compose(g, f))
        report.fail("composite-missing", "no entry for " + mn(g) + " . " + mn(f));
  if (!report.ok()) return report;  // remaining laws assume a total, well-typed table
  for (MorId f = 0; f < n_mor; ++f) {
    if (*c.compose(f, c.identity(c.source(f))) != f)
      report.fail("unit-right", mn(f) + " . id != " + mn(f));
    if (*c.compose(c.identity(c.target(f)), f) != f)
      report.fail("unit-left", "id . " + mn(f) + " != " + mn(f));
  }
  for (MorId f = 0; f < n_mor; ++f)
    for (MorId g : c.morphisms_from(c.target(f))) {
      auto gf = *c.compose(g, f);
      for (MorId h : c.morphisms_from(c.target(g))) {
        auto lhs = *c.compose(h, gf);
        auto rhs = *c.compose(*c.compose(h, g), f);
        if (lhs != rhs)
          report.fail("associativity", "(" + mn(h) + ", " + mn(g) + ", " + mn(f) + "): " + mn(lhs) +
                                           " != " + mn(rhs));
      }
    }
  return report;
}
inline ValidationReport validate_category(const CategoryPtr& c) { return validate_category(*c); }

inline bool is_posetal(const Category& c) {
  for (ObjId x = 0; x < c.object_count(); ++x) {
    auto out = c.morphisms_from(x);
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = i + 1; j < out.size(); ++j)
        if (c.target(out[i]) == c.target(out[j])) return false;
  }
  return true;
}

// Unique arrow x -> y in a category whose hom-sets have at most one element.
inline std::optional<MorId> unique_arrow(const Category& c, ObjId x, ObjId y) {
  auto hs = c.hom(x, y);
  if (hs.size() != 1) return std::nullopt;
  return hs.front();
}

// Inverse of m, if one exists.
inline std::optional<MorId> inverse_of(const Category& c, MorId m) {
  for (MorId n : c.hom(c.target(m), c.source(m)))
    if (c.compose(n, m) == c.identity(c.source(m)) && c.compose(m, n) == c.identity(c.target(m)))
      return n;
  return std::nullopt;
}

}  // namespace conjlib
