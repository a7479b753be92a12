#pragma once

// Second pass: every declaration of a parsed document becomes a library
// object.  References may point forwards; `base.member` reaches the parts
// of a compound declaration (e.g. `S.lower`, `X.hom`, `L.eps`).

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "conj/cli/document.hpp"
#include "conj/closedmon/operators.hpp"
#include "conj/ekgraph/evaluate.hpp"

namespace conjlib::cli {

// A resolved declaration or member.  Exactly one payload is set.
struct Entity {
  std::string kind;  // category, functor, nat, adjunction, twovar, closed, monoidal-functor, extranat,
                     // set-map, generator, cell, term
  CategoryPtr category;
  FunctorPtr functor;
  NatTransPtr nat;
  AdjunctionPtr adjunction;
  TwoVarLPtr twovar;
  ClosedPtr closed;
  std::shared_ptr<const MonoidalFunctorData> monoidal;
  ExtranatPtr extranat;
  std::shared_ptr<const SetMapAdjunctions> setmap;
  ek::FTerm generator;
  std::shared_ptr<const ek::CellGen> cell;
  ek::DTerm term;
};

class Model {
 public:
  explicit Model(DefinitionDocument doc) : doc_(std::move(doc)) {
    for (const auto& d : doc_.declarations) entity(d.name, nullptr);
  }

  const DefinitionDocument& document() const { return doc_; }

  // Lookups as used by checks and compute; `from` gives error locations.
  const Entity& entity(const std::string& ref, const Declaration* from) {
    if (auto it = cache_.find(ref); it != cache_.end()) return it->second;
    if (auto d = doc_.find(ref)) {
      if (active_.count(ref)) throw error(from ? *from : *d, ref, "cyclic reference");
      active_.insert(ref);
      Entity e;
      try {
        e = build(*d);
      } catch (const ParseError&) {
        active_.erase(ref);
        throw;
      } catch (const StructuralError& ex) {
        active_.erase(ref);
        throw error(*d, ref, ex.what());
      }
      active_.erase(ref);
      register_names(ref, e);
      return cache_.emplace(ref, std::move(e)).first->second;
    }
    auto dot = ref.rfind('.');
    if (dot != std::string::npos && dot > 0 && dot + 1 < ref.size()) {
      const auto& base = entity(ref.substr(0, dot), from);
      auto m = member(base, ref.substr(dot + 1));
      if (!m) throw error(from, ref, base.kind + " " + ref.substr(0, dot) + " has no member " + ref.substr(dot + 1));
      register_names(ref, *m);
      return cache_.emplace(ref, std::move(*m)).first->second;
    }
    throw error(from, ref, "unresolved reference");
  }

  CategoryPtr category(const std::string& expr, const Declaration* from) { return category_expr(expr, from); }
  FunctorPtr functor(const std::string& ref, const Declaration* from) {
    auto& e = entity(ref, from);
    if (e.functor) return e.functor;
    throw mismatch(from, ref, e, "functor");
  }
  NatTransPtr nat(const std::string& ref, const Declaration* from) {
    auto& e = entity(ref, from);
    if (e.nat) return e.nat;
    throw mismatch(from, ref, e, "natural transformation");
  }
  AdjunctionPtr adjunction(const std::string& ref, const Declaration* from) {
    auto& e = entity(ref, from);
    if (e.adjunction) return e.adjunction;
    throw mismatch(from, ref, e, "adjunction");
  }
  TwoVarLPtr twovar(const std::string& ref, const Declaration* from) {
    auto& e = entity(ref, from);
    if (e.twovar) return e.twovar;
    if (e.closed) return e.closed->left;
    throw mismatch(from, ref, e, "two-variable adjunction");
  }
  ClosedPtr closed(const std::string& ref, const Declaration* from) {
    auto& e = entity(ref, from);
    if (e.closed) return e.closed;
    throw mismatch(from, ref, e, "closed monoidal category");
  }
  std::shared_ptr<const MonoidalFunctorData> monoidal(const std::string& ref, const Declaration* from) {
    auto& e = entity(ref, from);
    if (e.monoidal) return e.monoidal;
    throw mismatch(from, ref, e, "monoidal functor");
  }
  ek::DTerm diagram(const std::string& ref, const Declaration* from) {
    auto& e = entity(ref, from);
    if (e.term) return e.term;
    if (e.cell) return ek::dcell(*e.cell);
    throw mismatch(from, ref, e, "cell or term");
  }

  // Names under which library objects were declared; used when emitting.
  std::optional<std::string> name_of(const CategoryPtr& c) const {
    for (const auto& [n, p] : category_names_)
      if (same_category(p, c)) return n;
    return std::nullopt;
  }
  std::optional<std::string> name_of(const FunctorPtr& f) const {
    for (const auto& [n, p] : functor_names_)
      if (same_functor(*p, *f)) return n;
    return std::nullopt;
  }
  // A category expression for c built from declared names, op(-) and x.
  std::optional<std::string> expression_of(const CategoryPtr& c) const {
    if (auto n = name_of(c)) return n;
    if (c->kind() == Category::Kind::opposite) {
      auto b = expression_of(c->opposite_base());
      if (!b) return std::nullopt;
      return "op(" + *b + ")";
    }
    if (c->kind() == Category::Kind::product) {
      std::string s;
      for (std::size_t i = 0; i < c->factors().size(); ++i) {
        const auto& f = c->factors()[i];
        auto b = expression_of(f);
        if (!b) return std::nullopt;
        if (f->kind() == Category::Kind::product) b = "(" + *b + ")";
        s += (i ? " x " : "") + *b;
      }
      return s;
    }
    if (same_category(c, terminal())) return std::string("1");
    return std::nullopt;
  }

  // Interpretation of diagram generators: wire labels are category
  // references, generator and cell names bind to the declaration named by
  // their `binds` key, or to the same name.
  ek::Interpretation interpretation(const ek::DTerm& t, const Declaration* from) {
    ek::Interpretation I;
    collect(t, I, from);
    return I;
  }

  std::vector<const Declaration*> declarations_of(const std::string& kind) const {
    std::vector<const Declaration*> v;
    for (const auto& d : doc_.declarations)
      if (d.kind == kind) v.push_back(&d);
    std::sort(v.begin(), v.end(), [](auto a, auto b) { return a->name < b->name; });
    return v;
  }
  const Entity& resolved(const Declaration& d) { return entity(d.name, &d); }

 private:
  DefinitionDocument doc_;
  std::map<std::string, Entity> cache_;
  std::set<std::string> active_;
  std::vector<std::pair<std::string, CategoryPtr>> category_names_;
  std::vector<std::pair<std::string, FunctorPtr>> functor_names_;
  std::map<std::string, std::string> binds_;  // generator/cell name -> bound name

  // Located at the first entry mentioning `name`, else at the header.
  static ParseError error(const Declaration& d, const std::string& name, const std::string& msg) {
    for (const auto& e : d.entries) {
      bool hit = e.value.find(name) != std::string::npos;
      for (const auto& it : e.items) hit = hit || it.find(name) != std::string::npos;
      if (hit && !name.empty()) return ParseError(e.line, e.column, name, msg);
    }
    return ParseError(d.line, d.column, name, msg);
  }
  static ParseError error(const Declaration* d, const std::string& name, const std::string& msg) {
    return d ? error(*d, name, msg) : ParseError(0, 0, name, msg);
  }
  static ParseError mismatch(const Declaration* d, const std::string& ref, const Entity& e, const std::string& want) {
    return error(d, ref, "kind mismatch: " + ref + " is a " + e.kind + ", expected a " + want);
  }

  void register_names(const std::string& name, const Entity& e) {
    if (e.category) category_names_.push_back({name, e.category});
    if (e.closed) {
      category_names_.push_back({name, e.closed->C()});
      functor_names_.push_back({name + ".tensor", e.closed->mon.tensor});
      functor_names_.push_back({name + ".hom", e.closed->hom});
    }
    if (e.functor) functor_names_.push_back({name, e.functor});
    if (e.twovar) {
      functor_names_.push_back({name + ".T", e.twovar->T});
      functor_names_.push_back({name + ".H", e.twovar->H});
    }
    if (e.setmap) {
      category_names_.push_back({name + ".X", e.setmap->X->C()});
      category_names_.push_back({name + ".Y", e.setmap->Y->C()});
      functor_names_.push_back({name + ".f*", e.setmap->inverse_image});
      functor_names_.push_back({name + ".f_!", e.setmap->direct_image});
      functor_names_.push_back({name + ".f_*", e.setmap->universal_image});
    }
  }

  // ---- category expressions -------------------------------------------------------

  CategoryPtr category_expr(std::string s, const Declaration* from) {
    s = detail::collapse_spaces(s);
    // top-level " x " splits a product
    std::vector<std::string> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (depth == 0 && s.compare(i, 3, " x ") == 0) {
        parts.push_back(s.substr(start, i - start));
        start = i + 3;
        i += 2;
      }
    }
    if (depth != 0) throw error(from, s, "unbalanced parentheses in category expression");
    if (!parts.empty()) {
      parts.push_back(s.substr(start));
      std::vector<CategoryPtr> fs;
      for (const auto& p : parts) fs.push_back(category_expr(p, from));
      return product(fs);
    }
    if (s == "1") return terminal();
    if (s.size() > 2 && s.front() == '(' && s.back() == ')') return category_expr(s.substr(1, s.size() - 2), from);
    if (s.rfind("op(", 0) == 0 && s.back() == ')') return opposite(category_expr(s.substr(3, s.size() - 4), from));
    auto& e = entity(s, from);
    if (e.category) return e.category;
    if (e.closed) return e.closed->C();
    throw mismatch(from, s, e, "category");
  }

  // ---- members --------------------------------------------------------------------

  static std::optional<Entity> member(const Entity& b, const std::string& m) {
    Entity e;
    auto fun = [&](FunctorPtr f) {
      e.kind = "functor";
      e.functor = std::move(f);
      return e;
    };
    auto nt = [&](NatTransPtr n) {
      e.kind = "nat";
      e.nat = std::move(n);
      return e;
    };
    auto ex = [&](ExtranatPtr x) {
      e.kind = "extranat";
      e.extranat = std::move(x);
      return e;
    };
    if (b.setmap) {
      const auto& s = *b.setmap;
      if (m == "X" || m == "Y") {
        e.kind = "closed";
        e.closed = m == "X" ? s.X : s.Y;
        return e;
      }
      if (m == "f*") return fun(s.inverse_image);
      if (m == "f_!") return fun(s.direct_image);
      if (m == "f_*") return fun(s.universal_image);
      if (m == "lower" || m == "upper") {
        e.kind = "adjunction";
        e.adjunction = m == "lower" ? s.lower : s.upper;
        return e;
      }
      if (m == "monoidal") {
        e.kind = "monoidal-functor";
        e.monoidal = std::make_shared<MonoidalFunctorData>(s.monoidal);
        return e;
      }
      return std::nullopt;
    }
    if (b.closed) {
      if (m == "tensor") return fun(b.closed->mon.tensor);
      if (m == "hom") return fun(b.closed->hom);
      if (m == "ev") return ex(b.closed->left->eps);
      if (m == "coev") return ex(b.closed->left->eta);
      if (m == "left") {
        e.kind = "twovar";
        e.twovar = b.closed->left;
        return e;
      }
      return std::nullopt;
    }
    if (b.twovar) {
      if (m == "T") return fun(b.twovar->T);
      if (m == "H") return fun(b.twovar->H);
      if (m == "eps") return ex(b.twovar->eps);
      if (m == "eta") return ex(b.twovar->eta);
      return std::nullopt;
    }
    if (b.adjunction) {
      if (m == "F") return fun(b.adjunction->F);
      if (m == "U") return fun(b.adjunction->U);
      if (m == "unit") return nt(b.adjunction->eta);
      if (m == "counit") return nt(b.adjunction->eps);
      return std::nullopt;
    }
    if (b.monoidal) {
      if (m == "f*") return fun(b.monoidal->f_star);
      if (m == "omega") return nt(b.monoidal->omega);
      return std::nullopt;
    }
    return std::nullopt;
  }

  // ---- helpers for bodies ---------------------------------------------------------

  static const Entry& need(const Declaration& d, const std::string& key) {
    auto e = d.find(key);
    if (!e) throw error(d, d.name, "missing key '" + key + "'");
    return *e;
  }
  static const std::string& scalar(const Declaration& d, const std::string& key) {
    const auto& e = need(d, key);
    if (e.kind != Entry::Kind::scalar) throw error(d, d.name + "." + key, "expected a single value");
    return e.value;
  }
  static const std::vector<std::string>& list(const Declaration& d, const std::string& key) {
    const auto& e = need(d, key);
    if (e.kind != Entry::Kind::list) throw error(d, d.name + "." + key, "expected a list");
    return e.items;
  }
  static std::pair<std::string, std::string> split2(const Declaration& d, const std::string& item,
                                                    const std::string& sep) {
    auto p = item.find(sep);
    if (p == std::string::npos) throw error(d, item, "expected '<left>" + sep + "<right>'");
    return {detail::trim(item.substr(0, p)), detail::trim(item.substr(p + sep.size()))};
  }
  static ObjId object(const Declaration& d, const Category& c, const std::string& n) {
    auto o = c.find_object(n);
    if (!o) throw error(d, n, "no object " + n + " in " + c.name());
    return *o;
  }
  static MorId morphism(const Declaration& d, const Category& c, const std::string& n) {
    auto m = c.find_morphism(n);
    if (!m) throw error(d, n, "no morphism " + n + " in " + c.name());
    return *m;
  }
  static bool posetal(const Category& c) { return is_posetal(c); }

  // ---- declarations -----------------------------------------------------------------

  Entity build(const Declaration& d) {
    static const std::map<std::string, Entity (Model::*)(const Declaration&)> table{
        {"category", &Model::build_category},   {"builtin", &Model::build_builtin},
        {"functor", &Model::build_functor},     {"nat", &Model::build_nat},
        {"adjunction", &Model::build_adjunction}, {"twovar", &Model::build_twovar},
        {"closed", &Model::build_closed},       {"monoidal-functor", &Model::build_monoidal},
        {"generator", &Model::build_generator}, {"cell", &Model::build_cell},
        {"term", &Model::build_term}};
    auto it = table.find(d.kind);
    if (it == table.end()) throw error(d, d.kind, "unknown declaration kind");
    auto e = (this->*(it->second))(d);
    if (e.kind.empty()) e.kind = d.kind;
    return e;
  }

  Entity build_category(const Declaration& d) {
    Entity e;
    const auto& objs = list(d, "objects");
    std::map<std::string, ObjId> oid;
    for (const auto& o : objs)
      if (!oid.emplace(o, ObjId(oid.size())).second) throw error(d, o, "duplicate object");
    if (d.has("order")) {
      const auto n = objs.size();
      std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
      for (std::size_t i = 0; i < n; ++i) le[i][i] = 1;
      for (const auto& it : list(d, "order")) {
        auto [x, y] = split2(d, it, "<=");
        if (!oid.count(x) || !oid.count(y)) throw error(d, it, "order relates undeclared objects");
        le[oid[x]][oid[y]] = 1;
      }
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if (le[i][k] && le[k][j]) le[i][j] = 1;
      e.category = Category::posetal(
          d.name, objs, [&](ObjId x, ObjId y) { return bool(le[x][y]); },
          [&](ObjId x, ObjId y) { return objs[x] + "<=" + objs[y]; });
      return e;
    }
    std::vector<Category::Morphism> mors;
    std::vector<MorId> ids;
    std::map<std::string, MorId> mid;
    for (const auto& o : objs) {
      ids.push_back(MorId(mors.size()));
      mid["id_" + o] = MorId(mors.size());
      mors.push_back({"id_" + o, oid[o], oid[o]});
    }
    if (d.has("arrows"))
      for (const auto& it : list(d, "arrows")) {
        auto [n, rest] = split2(d, it, ":");
        auto [x, y] = split2(d, rest, "->");
        if (!oid.count(x) || !oid.count(y)) throw error(d, it, "arrow between undeclared objects");
        if (!mid.emplace(n, MorId(mors.size())).second) throw error(d, n, "duplicate arrow");
        mors.push_back({n, oid[x], oid[y]});
      }
    std::vector<Category::Composite> comps;
    for (MorId f = 0; f < mors.size(); ++f)
      for (MorId g = 0; g < mors.size(); ++g) {
        if (mors[f].target != mors[g].source) continue;
        if (g == ids[mors[g].source]) comps.push_back({g, f, f});
        else if (f == ids[mors[f].source]) comps.push_back({g, f, g});
      }
    for (const auto& en : d.entries) {
      if (en.kind != Entry::Kind::compose) continue;
      for (const auto& n : en.items)
        if (!mid.count(n)) throw ParseError(en.line, en.column, n, "compose mentions an undeclared arrow");
      auto g = mid[en.items[0]], f = mid[en.items[1]], h = mid[en.items[2]];
      if (mors[f].target != mors[g].source)
        throw ParseError(en.line, en.column, en.items[0], "compose: arrows are not composable");
      comps.push_back({g, f, h});
    }
    e.category = Category::from_tables(d.name, objs, mors, ids, comps);
    return e;
  }

  Entity build_builtin(const Declaration& d) {
    Entity e;
    std::istringstream in(scalar(d, "instance"));
    std::string what;
    in >> what;
    auto number = [&]() {
      long n = -1;
      if (!(in >> n) || n < 0) throw error(d, d.name, "builtin " + what + " needs a size");
      return std::size_t(n);
    };
    if (what == "powerset") {
      auto n = number();
      if (n > 4) throw error(d, d.name, "powerset builtins are limited to 4 elements");
      e.closed = powerset(n);
    } else if (what == "chain") {
      e.closed = chain(number());
    } else if (what == "group") {
      std::string g;
      in >> g;
      if (g == "S3") e.closed = symmetric_group_3();
      else if (g == "Z") e.closed = cyclic_group(number());
      else throw error(d, d.name, "unknown group '" + g + "' (S3 or Z <n>)");
    } else if (what == "set-map") {
      std::string rest;
      std::getline(in, rest);
      rest = detail::trim(rest);
      auto close = rest.find(']');
      if (rest.empty() || rest[0] != '[' || close == std::string::npos)
        throw error(d, d.name, "set-map needs '[f(0), f(1), ...] <size of Y>'");
      std::vector<std::size_t> f;
      for (const auto& it : split_items(rest.substr(1, close - 1))) f.push_back(std::stoul(it));
      auto ny = std::stoul(detail::trim(rest.substr(close + 1)));
      if (f.size() > 4 || ny > 4) throw error(d, d.name, "set-map builtins are limited to 4-element sets");
      e.setmap = std::make_shared<SetMapAdjunctions>(set_map_adjunctions(f, ny));
      e.kind = "set-map";
      return e;
    } else {
      throw error(d, what, "unknown builtin (powerset, chain, group, set-map)");
    }
    e.kind = "closed";
    return e;
  }

  Entity build_functor(const Declaration& d) {
    Entity e;
    if (d.has("identity")) {
      e.functor = identity_functor(category_expr(scalar(d, "identity"), &d), d.name);
      return e;
    }
    if (d.has("compose")) {
      const auto& fs = list(d, "compose");
      if (fs.empty()) throw error(d, d.name, "compose needs at least one functor");
      auto f = functor(fs.back(), &d);
      for (std::size_t i = fs.size() - 1; i-- > 0;) {
        auto g = functor(fs[i], &d);
        if (!same_category(g->source(), f->target()))
          throw error(d, fs[i], "compose: " + fs[i] + " does not start where the previous functor ends");
        f = compose(g, f);
      }
      e.functor = std::make_shared<Functor>(d.name, f->source(), f->target(), f->object_map(), f->morphism_map());
      return e;
    }
    if (d.has("product")) {
      std::vector<FunctorPtr> fs;
      for (const auto& n : list(d, "product")) fs.push_back(functor(n, &d));
      auto f = product(fs);
      e.functor = std::make_shared<Functor>(d.name, f->source(), f->target(), f->object_map(), f->morphism_map());
      return e;
    }
    if (d.has("op")) {
      auto f = opposite(functor(scalar(d, "op"), &d));
      e.functor = std::make_shared<Functor>(d.name, f->source(), f->target(), f->object_map(), f->morphism_map());
      return e;
    }
    auto src = category_expr(scalar(d, "source"), &d);
    auto tgt = category_expr(scalar(d, "target"), &d);
    std::vector<long> om(src->object_count(), -1);
    for (const auto& it : list(d, "objects")) {
      auto [x, y] = split2(d, it, " -> ");
      auto ox = object(d, *src, x);
      if (om[ox] >= 0) throw error(d, x, "object mapped twice");
      om[ox] = long(object(d, *tgt, y));
    }
    for (ObjId x = 0; x < om.size(); ++x)
      if (om[x] < 0) throw error(d, src->object_name(x), "object has no image");
    std::vector<long> mm(src->morphism_count(), -1);
    if (d.has("arrows"))
      for (const auto& it : list(d, "arrows")) {
        auto [f, g] = split2(d, it, " -> ");
        mm[morphism(d, *src, f)] = long(morphism(d, *tgt, g));
      }
    bool forced = posetal(*tgt);
    std::vector<ObjId> objs(om.begin(), om.end());
    std::vector<MorId> mors(mm.size());
    for (MorId m = 0; m < mm.size(); ++m) {
      if (mm[m] >= 0) {
        mors[m] = MorId(mm[m]);
      } else if (src->is_identity(m)) {
        mors[m] = tgt->identity(objs[src->source(m)]);
      } else if (forced) {
        auto r = unique_arrow(*tgt, objs[src->source(m)], objs[src->target(m)]);
        if (!r) throw error(d, src->morphism_name(m), "no arrow in the target for this morphism (not monotone)");
        mors[m] = *r;
      } else {
        throw error(d, src->morphism_name(m), "morphism has no image");
      }
    }
    e.functor = std::make_shared<Functor>(d.name, src, tgt, std::move(objs), std::move(mors));
    return e;
  }

  std::vector<MorId> components(const Declaration& d, const std::string& key, const FunctorPtr& from,
                                const FunctorPtr& to) {
    const auto& src = *from->source();
    const auto& tgt = *from->target();
    std::vector<long> cs(src.object_count(), -1);
    if (d.has(key))
      for (const auto& it : list(d, key)) {
        auto [x, m] = split2(d, it, ": ");
        auto ox = object(d, src, x);
        if (cs[ox] >= 0) throw error(d, x, "component given twice");
        cs[ox] = long(morphism(d, tgt, m));
      }
    std::vector<MorId> out(cs.size());
    for (ObjId x = 0; x < cs.size(); ++x) {
      if (cs[x] >= 0) {
        out[x] = MorId(cs[x]);
        continue;
      }
      auto r = posetal(tgt) ? unique_arrow(tgt, from->obj(x), to->obj(x)) : std::nullopt;
      if (!r) throw error(d, src.object_name(x), "missing component (no forced arrow)");
      out[x] = *r;
    }
    return out;
  }

  Entity build_nat(const Declaration& d) {
    Entity e;
    if (d.has("identity")) {
      e.nat = identity_nat(functor(scalar(d, "identity"), &d), d.name);
      return e;
    }
    if (d.has("inverse")) {
      auto t = nat(scalar(d, "inverse"), &d);
      auto inv = inverse(t, d.name);
      if (!inv) throw error(d, scalar(d, "inverse"), "transformation is not invertible");
      e.nat = *inv;
      return e;
    }
    auto F = functor(scalar(d, "from"), &d);
    auto G = functor(scalar(d, "to"), &d);
    if (!same_category(F->source(), G->source()) || !same_category(F->target(), G->target()))
      throw error(d, d.name, "from and to are not parallel functors");
    e.nat = std::make_shared<NatTrans>(d.name, F, G, components(d, "components", F, G));
    return e;
  }

  Entity build_adjunction(const Declaration& d) {
    Entity e;
    auto F = functor(scalar(d, "left"), &d);
    auto U = functor(scalar(d, "right"), &d);
    if (!same_category(F->source(), U->target()) || !same_category(F->target(), U->source()))
      throw error(d, d.name, "left and right functors do not go back and forth");
    auto UF = compose(U, F);
    auto FU = compose(F, U);
    auto idC = identity_functor(F->source());
    auto idD = identity_functor(F->target());
    auto unit = d.has("unit") ? nat(scalar(d, "unit"), &d)->components() : components(d, "unit-components", idC, UF);
    auto counit =
        d.has("counit") ? nat(scalar(d, "counit"), &d)->components() : components(d, "counit-components", FU, idD);
    e.adjunction = make_adjunction(d.name, F, U, unit, counit);
    return e;
  }

  Entity build_twovar(const Declaration& d) {
    Entity e;
    if (d.has("closed")) {
      e.twovar = closed(scalar(d, "closed"), &d)->left;
      return e;
    }
    if (d.has("compose")) {
      const auto& a = list(d, "compose");
      if (a.size() != 4) throw error(d, d.name, "compose needs [adjunction, K, F1 -| U1, F2 -| U2]");
      e.twovar = compose_two_var(*twovar(a[0], &d), functor(a[1], &d), *adjunction(a[2], &d), *adjunction(a[3], &d),
                                 d.name);
      return e;
    }
    auto T = functor(scalar(d, "tensor"), &d);
    auto H = functor(scalar(d, "hom"), &d);
    const auto& ts = T->source();
    if (ts->kind() != Category::Kind::product || ts->factors().size() != 2)
      throw error(d, scalar(d, "tensor"), "tensor needs a binary product source");
    auto table = [&](const std::string& key, const CategoryPtr& idx) {
      std::map<ObjId, MorId> m;
      if (!d.has(key)) return m;
      const auto& tgt = key == "counit" ? *T->target() : *H->target();
      for (const auto& it : list(d, key)) {
        auto [x, f] = split2(d, it, ": ");
        m[object(d, *idx, x)] = morphism(d, tgt, f);
      }
      return m;
    };
    auto A = ts->factors()[0], B = ts->factors()[1], C = T->target();
    auto eps = table("counit", product({A, C}));
    auto eta = table("unit", product({A, B}));
    auto pAC = product({A, C}), pAB = product({A, B});
    e.twovar = make_two_var_L(
        d.name, T, H,
        [&](ObjId a, ObjId c) {
          if (auto it = eps.find(pAC->pack_objects({a, c})); it != eps.end()) return it->second;
          auto h = H->obj(H->source()->pack_objects({a, c}));
          return conjlib::detail::forced(*C, T->obj(ts->pack_objects({a, h})), c, "counit at " + pAC->object_name(pAC->pack_objects({a, c})));
        },
        [&](ObjId a, ObjId b) {
          if (auto it = eta.find(pAB->pack_objects({a, b})); it != eta.end()) return it->second;
          auto t = T->obj(ts->pack_objects({a, b}));
          return conjlib::detail::forced(*B, b, H->obj(H->source()->pack_objects({a, t})),
                                "unit at " + pAB->object_name(pAB->pack_objects({a, b})));
        });
    return e;
  }

  Entity build_closed(const Declaration& d) {
    Entity e;
    auto C = category_expr(scalar(d, "category"), &d);
    if (!posetal(*C)) throw error(d, scalar(d, "category"), "closed declarations need a posetal category");
    const auto n = C->object_count();
    auto le = [&](ObjId x, ObjId y) { return unique_arrow(*C, x, y).has_value(); };
    if (d.has("structure")) {
      if (scalar(d, "structure") != "heyting") throw error(d, scalar(d, "structure"), "unknown structure (heyting)");
      auto greatest = [&](const std::function<bool(ObjId)>& p) -> std::optional<ObjId> {
        for (ObjId z = 0; z < n; ++z) {
          if (!p(z)) continue;
          bool top = true;
          for (ObjId w = 0; w < n && top; ++w)
            if (p(w) && !le(w, z)) top = false;
          if (top) return z;
        }
        return std::nullopt;
      };
      std::vector<std::vector<ObjId>> meet(n, std::vector<ObjId>(n)), imp(n, std::vector<ObjId>(n));
      for (ObjId x = 0; x < n; ++x)
        for (ObjId y = 0; y < n; ++y) {
          auto m = greatest([&](ObjId z) { return le(z, x) && le(z, y); });
          if (!m) throw error(d, d.name, "no meet of " + C->object_name(x) + " and " + C->object_name(y));
          meet[x][y] = *m;
        }
      for (ObjId x = 0; x < n; ++x)
        for (ObjId y = 0; y < n; ++y) {
          auto i = greatest([&](ObjId z) { return le(meet[x][z], y); });
          if (!i) throw error(d, d.name, "no implication " + C->object_name(x) + " => " + C->object_name(y));
          imp[x][y] = *i;
        }
      auto top = greatest([](ObjId) { return true; });
      if (!top) throw error(d, d.name, "no top element");
      e.closed = conjlib::detail::posetal_closed(
          d.name, C, [&](ObjId x, ObjId y) { return meet[x][y]; }, *top, [&](ObjId x, ObjId y) { return imp[x][y]; });
      return e;
    }
    auto T = functor(scalar(d, "tensor"), &d);
    auto H = functor(scalar(d, "hom"), &d);
    auto unit = object(d, *C, scalar(d, "unit"));
    auto t = [&](ObjId x, ObjId y) { return T->obj(T->source()->pack_objects({x, y})); };
    auto h = [&](ObjId x, ObjId y) { return H->obj(H->source()->pack_objects({x, y})); };
    if (!same_category(T->source(), product({C, C})) || !same_category(H->source(), product({opposite(C), C})))
      throw error(d, d.name, "tensor must be C x C -> C and hom op(C) x C -> C");
    e.closed = conjlib::detail::posetal_closed(d.name, C, t, unit, h);
    return e;
  }

  Entity build_monoidal(const Declaration& d) {
    Entity e;
    auto Y = closed(scalar(d, "source"), &d);
    auto X = closed(scalar(d, "target"), &d);
    auto f = functor(scalar(d, "functor"), &d);
    if (!same_category(f->source(), Y->C()) || !same_category(f->target(), X->C()))
      throw error(d, scalar(d, "functor"), "functor must go from the source to the target category");
    if (d.has("omega")) {
      e.monoidal = std::make_shared<MonoidalFunctorData>(MonoidalFunctorData{X, Y, f, nat(scalar(d, "omega"), &d)});
      return e;
    }
    auto m = posetal_monoidal_functor(X, Y, f);
    if (!m) throw error(d, d.name, "no forced omega: " + f->name() + " does not lax-preserve the tensor");
    e.monoidal = std::make_shared<MonoidalFunctorData>(*m);
    return e;
  }

  // ---- diagram terms ------------------------------------------------------------------

  static ek::Word word(const Declaration& d, const std::vector<std::string>& items) {
    ek::Word w;
    for (const auto& it : items) {
      bool op = it.size() > 3 && it.compare(it.size() - 3, 3, "^op") == 0;
      auto label = op ? it.substr(0, it.size() - 3) : it;
      if (!detail::valid_name(label)) throw error(d, it, "malformed wire label");
      w.push_back({label, op});
    }
    return w;
  }

  // name(args) split; plain names have no args.
  struct Call {
    std::string head;
    std::vector<std::string> args;
    bool call = false;
    bool bracket = false;  // head[args]
  };
  static Call call(const Declaration& d, const std::string& s0) {
    auto s = detail::collapse_spaces(s0);
    Call c;
    auto p = s.find_first_of("([");
    if (p == std::string::npos) {
      c.head = s;
      return c;
    }
    char close = s[p] == '(' ? ')' : ']';
    if (s.back() != close) throw error(d, s, "malformed expression");
    c.head = detail::trim(s.substr(0, p));
    c.call = true;
    c.bracket = s[p] == '[';
    auto inner = detail::split_top(s.substr(p + 1, s.size() - p - 2));
    if (!inner) throw error(d, s, "unbalanced expression");
    c.args = *inner;
    return c;
  }

  ek::FTerm fterm(const Declaration& d, const std::string& s) {
    auto c = call(d, s);
    if (!c.call) {
      auto& e = entity(c.head, &d);
      if (e.generator) return e.generator;
      throw mismatch(&d, c.head, e, "generator");
    }
    if (c.head == "id" && c.bracket) return ek::fid(word(d, c.args));
    if (c.bracket) throw error(d, s, "only id[...] takes a word");
    std::vector<ek::FTerm> args;
    for (const auto& a : c.args) args.push_back(fterm(d, a));
    if (c.head == "comp") {
      if (args.size() < 2) throw error(d, s, "comp needs two or more functors");
      auto f = args.back();
      for (std::size_t i = args.size() - 1; i-- > 0;) f = ek::fcomp(args[i], f);
      return f;
    }
    if (c.head == "juxt") return ek::fjuxt(args);
    if (c.head == "op" && args.size() == 1) return ek::fop(args[0]);
    throw error(d, c.head, "unknown functor-term constructor (id[...], comp, juxt, op)");
  }

  ek::DTerm dterm(const Declaration& d, const std::string& s) {
    auto c = call(d, s);
    if (!c.call) return diagram(c.head, &d);
    if (c.head == "wire" && c.args.size() == 1) return ek::dwire(fterm(d, c.args[0]));
    if (c.head == "subst" && c.args.size() == 2) {
      auto inner = dterm(d, c.args[0]);
      auto lst = c.args[1];
      if (lst.size() < 2 || lst.front() != '[' || lst.back() != ']') throw error(d, lst, "subst needs a list of functors");
      std::vector<ek::FTerm> fs;
      for (const auto& a : split_items(lst.substr(1, lst.size() - 2))) fs.push_back(fterm(d, a));
      return ek::dsubst(inner, fs);
    }
    std::vector<ek::DTerm> args;
    for (const auto& a : c.args) args.push_back(dterm(d, a));
    if (c.head == "vcomp") {
      if (args.size() < 2) throw error(d, s, "vcomp needs two or more diagrams");
      auto t = args.back();
      for (std::size_t i = args.size() - 1; i-- > 0;) t = ek::dvcomp(args[i], t);
      return t;
    }
    if (c.head == "hcomp" && args.size() == 2) return ek::dhcomp(args[0], args[1]);
    if (c.head == "juxt") return ek::djuxt(args);
    throw error(d, c.head, "unknown diagram constructor (wire, vcomp, hcomp, juxt, subst)");
  }

  Entity build_generator(const Declaration& d) {
    Entity e;
    e.generator = ek::fgen(d.name, word(d, list(d, "dom")), word(d, list(d, "cod")));
    if (d.has("binds")) binds_[d.name] = scalar(d, "binds");
    return e;
  }

  Entity build_cell(const Declaration& d) {
    Entity e;
    auto kind = scalar(d, "kind");
    if (kind != "natural" && kind != "extranatural") throw error(d, kind, "cell kind is natural or extranatural");
    auto pairs = [&](const std::string& key) {
      std::vector<std::pair<std::size_t, std::size_t>> v;
      if (!d.has(key)) return v;
      for (const auto& it : list(d, key)) {
        auto [i, j] = split2(d, it, "-");
        try {
          v.push_back({std::stoul(i), std::stoul(j)});
        } catch (const std::exception&) {
          throw error(d, it, "expected a position pair like 0-1");
        }
      }
      return v;
    };
    e.cell = std::make_shared<ek::CellGen>(ek::make_cell(d.name,
                                                         kind == "natural" ? ek::CellGen::Kind::natural
                                                                           : ek::CellGen::Kind::extranatural,
                                                         fterm(d, scalar(d, "from")), fterm(d, scalar(d, "to")),
                                                         pairs("caps"), pairs("cups")));
    if (d.has("binds")) binds_[d.name] = scalar(d, "binds");
    return e;
  }

  Entity build_term(const Declaration& d) {
    Entity e;
    e.term = dterm(d, scalar(d, "expr"));
    return e;
  }

  void collect_functor(const ek::FTerm& f, ek::Interpretation& I, const Declaration* from) {
    for (const auto& w : concat(f->dom, f->cod)) bind_label(w.label, I, from);
    if (f->kind == ek::FunctorTerm::Kind::gen) {
      auto target = binds_.count(f->name) ? binds_[f->name] : f->name;
      I.functors[f->name] = functor(target, from);
    }
    for (const auto& p : f->parts) collect_functor(p, I, from);
  }
  void bind_label(const std::string& label, ek::Interpretation& I, const Declaration* from) {
    if (!I.categories.count(label)) I.categories[label] = category_expr(label, from);
  }
  void collect(const ek::DTerm& t, ek::Interpretation& I, const Declaration* from) {
    collect_functor(t->bottom, I, from);
    collect_functor(t->top, I, from);
    if (t->kind == ek::DiagramTerm::Kind::cell) {
      const auto& c = t->cell;
      collect_functor(c.P, I, from);
      collect_functor(c.Q, I, from);
      auto target = binds_.count(c.name) ? binds_[c.name] : c.name;
      auto& e = entity(target, from);
      if (c.kind == ek::CellGen::Kind::natural) {
        if (!e.nat) throw mismatch(from, target, e, "natural transformation");
        I.naturals[c.name] = e.nat;
      } else {
        if (!e.extranat) throw mismatch(from, target, e, "extranatural transformation");
        I.extranaturals[c.name] = e.extranat;
      }
    }
    if (t->functor) collect_functor(t->functor, I, from);
    for (const auto& a : t->args) collect_functor(a, I, from);
    for (const auto& p : t->parts) collect(p, I, from);
  }
};

inline Model resolve(const DefinitionDocument& doc) { return Model(doc); }

}  // namespace conjlib::cli
