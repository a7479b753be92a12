#pragma once

// Evaluation of diagram terms into component families.  A family assigns to
// every choice of one object per EK arc a morphism from the bottom 1-cell
// to the top 1-cell at the objects read off the endpoints.  Vertical joins
// instantiate both sides at the objects of the glued arcs; a join that
// closes a loop is refused.

#include <map>
#include <string>
#include <vector>

#include "conj/ekgraph/graph.hpp"
#include "conj/extranat/extranat.hpp"

namespace conjlib::ek {

struct Interpretation {
  std::map<std::string, CategoryPtr> categories;
  std::map<std::string, FunctorPtr> functors;
  std::map<std::string, NatTransPtr> naturals;
  std::map<std::string, ExtranatPtr> extranaturals;
};

class LoopError : public StructuralError {
 public:
  explicit LoopError(Composability c)
      : StructuralError("composite is not extranatural (" + c.witness() +
                        "); such a picture is a 2-cell between profunctors and is not evaluated"),
        result(std::move(c)) {}
  Composability result;
};

struct Family {
  EKGraph graph;
  FunctorPtr P, Q;                    // bottom and top 1-cells
  std::vector<CategoryPtr> arc_cats;  // category of the variable on each arc
  std::vector<MorId> comps;           // mixed radix over arcs, first arc most significant

  const CategoryPtr& target() const { return P->target(); }
  std::size_t index(const std::vector<ObjId>& objs) const {
    std::size_t i = 0;
    for (std::size_t k = 0; k < arc_cats.size(); ++k) i = i * arc_cats[k]->object_count() + objs[k];
    return i;
  }
  MorId at(const std::vector<ObjId>& objs) const { return comps[index(objs)]; }
  std::vector<ObjId> unindex(std::size_t i) const {
    std::vector<ObjId> v(arc_cats.size());
    for (std::size_t k = arc_cats.size(); k-- > 0;) {
      v[k] = ObjId(i % arc_cats[k]->object_count());
      i /= arc_cats[k]->object_count();
    }
    return v;
  }
  bool natural() const { return is_straight(graph); }
  // For a straight profile the family is a natural transformation P => Q.
  NatTransPtr to_nat_trans(std::string name) const {
    if (!natural()) throw StructuralError("family " + name + " is not natural: its EK graph has cups or caps");
    return std::make_shared<NatTrans>(std::move(name), P, Q, comps);
  }
};

class Evaluator {
 public:
  explicit Evaluator(Interpretation interp) : I_(std::move(interp)) {}

  CategoryPtr category(const std::string& label) const {
    auto it = I_.categories.find(label);
    if (it == I_.categories.end()) throw StructuralError("interpretation: no category for label " + label);
    return it->second;
  }
  CategoryPtr category(const Wire& w) const { return w.op ? opposite(category(w.label)) : category(w.label); }
  CategoryPtr category(const Word& w) const {
    if (w.size() == 1) return category(w[0]);
    std::vector<CategoryPtr> fs;
    for (const auto& x : w) fs.push_back(category(x));
    return product(fs);
  }

  static std::vector<ObjId> split_obj(const Category& c, std::size_t n, ObjId x) {
    if (n == 1) return {x};
    if (n == 0) return {};
    return c.unpack_object(x);
  }
  static std::vector<MorId> split_mor(const Category& c, std::size_t n, MorId m) {
    if (n == 1) return {m};
    if (n == 0) return {};
    return c.unpack_morphism(m);
  }
  static ObjId join_obj(const Category& c, const std::vector<ObjId>& v) {
    return v.size() == 1 ? v[0] : c.pack_objects(std::span<const ObjId>(v));
  }
  static MorId join_mor(const Category& c, const std::vector<MorId>& v) {
    return v.size() == 1 ? v[0] : c.pack_morphisms(std::span<const MorId>(v));
  }

  FunctorPtr functor(const FTerm& f) {
    if (auto it = fcache_.find(f.get()); it != fcache_.end()) return it->second;
    auto r = build_functor(f);
    fcache_.emplace(f.get(), r);
    keep_.push_back(f);
    return r;
  }

  Family evaluate(const DTerm& t) {
    using K = DiagramTerm::Kind;
    switch (t->kind) {
      case K::cell: return eval_cell(t->cell);
      case K::wire: return eval_wire(t);
      case K::juxt: return eval_juxt(t);
      case K::hcomp: return eval_hcomp(t);
      case K::subst: return eval_subst(t);
      case K::vcomp: return eval_vcomp(t);
    }
    throw StructuralError("evaluate: unknown term");
  }

 private:
  Interpretation I_;
  std::map<const FunctorTerm*, FunctorPtr> fcache_;
  std::vector<FTerm> keep_;

  [[noreturn]] static void mismatch(const std::string& what, const std::string& detail) {
    throw StructuralError("interpretation shape mismatch for " + what + ": " + detail);
  }

  FunctorPtr build_functor(const FTerm& f) {
    using K = FunctorTerm::Kind;
    auto src = category(f->dom);
    auto tgt = category(f->cod);
    switch (f->kind) {
      case K::gen: {
        auto it = I_.functors.find(f->name);
        if (it == I_.functors.end()) throw StructuralError("interpretation: no functor for generator " + f->name);
        const auto& F = it->second;
        if (!same_category(F->source(), src))
          mismatch(f->name, "source is " + F->source()->name() + ", word " + to_string(f->dom) + " needs " + src->name());
        if (!same_category(F->target(), tgt))
          mismatch(f->name, "target is " + F->target()->name() + ", word " + to_string(f->cod) + " needs " + tgt->name());
        return F;
      }
      case K::id: return identity_functor(src, to_string(f));
      case K::hcomp: return compose(functor(f->parts[0]), functor(f->parts[1]), to_string(f));
      case K::op: {
        auto F = functor(f->parts[0]);
        return std::make_shared<Functor>(to_string(f), src, tgt, F->object_map(), F->morphism_map());
      }
      case K::juxt: {
        std::vector<FunctorPtr> fs;
        for (const auto& p : f->parts) fs.push_back(functor(p));
        auto nd = f->dom.size(), nc = f->cod.size();
        return Functor::build(
            to_string(f), src, tgt,
            [&](ObjId x) {
              auto xs = split_obj(*src, nd, x);
              std::vector<ObjId> out;
              std::size_t at = 0;
              for (std::size_t i = 0; i < fs.size(); ++i) {
                const auto& p = f->parts[i];
                std::vector<ObjId> sub(xs.begin() + at, xs.begin() + at + p->dom.size());
                at += p->dom.size();
                auto y = fs[i]->obj(join_obj(*fs[i]->source(), sub));
                auto ys = split_obj(*fs[i]->target(), p->cod.size(), y);
                out.insert(out.end(), ys.begin(), ys.end());
              }
              (void)nc;
              return join_obj(*tgt, out);
            },
            [&](MorId m) {
              auto ms = split_mor(*src, nd, m);
              std::vector<MorId> out;
              std::size_t at = 0;
              for (std::size_t i = 0; i < fs.size(); ++i) {
                const auto& p = f->parts[i];
                std::vector<MorId> sub(ms.begin() + at, ms.begin() + at + p->dom.size());
                at += p->dom.size();
                auto y = fs[i]->mor(join_mor(*fs[i]->source(), sub));
                auto ys = split_mor(*fs[i]->target(), p->cod.size(), y);
                out.insert(out.end(), ys.begin(), ys.end());
              }
              return join_mor(*tgt, out);
            });
      }
    }
    throw StructuralError("functor term: unknown kind");
  }

  Family blank(EKGraph g, FunctorPtr P, FunctorPtr Q) {
    Family f{std::move(g), std::move(P), std::move(Q), {}, {}};
    std::size_t n = 1;
    for (const auto& a : f.graph.arcs) {
      f.arc_cats.push_back(category(a.label));
      n *= f.arc_cats.back()->object_count();
    }
    f.comps.assign(n, 0);
    return f;
  }

  // Objects on each endpoint of a word for one arc assignment.
  static std::vector<ObjId> endpoint_objects(const EKGraph& g, bool top, const std::vector<ObjId>& sigma,
                                             const std::vector<std::size_t>& arc_of) {
    std::vector<ObjId> v(g.word(top).size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = sigma[arc_of[i]];
    return v;
  }
  static std::vector<std::size_t> arcs_of(const EKGraph& g, bool top) {
    std::vector<std::size_t> v(g.word(top).size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = g.arc_at({top, i});
    return v;
  }

  Family eval_wire(const DTerm& t) {
    auto F = functor(t->functor);
    auto f = blank(ek_graph(t), F, F);
    auto src = F->source();
    for (std::size_t i = 0; i < f.comps.size(); ++i) {
      auto s = f.unindex(i);
      f.comps[i] = F->target()->identity(F->obj(join_obj(*src, s)));
    }
    return f;
  }

  Family eval_cell(const CellGen& c) {
    auto P = functor(c.P);
    auto Q = functor(c.Q);
    auto f = blank(detail::cell_graph(c), P, Q);
    const auto& g = f.graph;
    if (c.kind == CellGen::Kind::natural) {
      auto it = I_.naturals.find(c.name);
      if (it == I_.naturals.end()) throw StructuralError("interpretation: no natural transformation for cell " + c.name);
      const auto& a = it->second;
      if (!same_functor(*a->from(), *P) || !same_functor(*a->to(), *Q))
        mismatch(c.name, a->from()->name() + " => " + a->to()->name() + " does not match " + to_string(c.P) + " => " +
                             to_string(c.Q));
      f.comps = a->components();
      return f;
    }
    auto it = I_.extranaturals.find(c.name);
    if (it == I_.extranaturals.end()) throw StructuralError("interpretation: no extranatural transformation for cell " + c.name);
    const auto& e = *it->second;
    const auto& fr = e.frame();
    if (c.caps.size() > 1 || c.cups.size() > 1 || g.arcs.size() - c.caps.size() - c.cups.size() > 1)
      mismatch(c.name, "an extranatural generator has at most one cap, one cup and one through-wire");
    // roles: the cap is C, the through wire A, the cup B
    long cap = -1, cup = -1, thr = -1;
    for (std::size_t k = 0; k < g.arcs.size(); ++k) {
      const auto& a = g.arcs[k];
      if (!a.a.top && !a.b.top) cap = long(k);
      else if (a.a.top && a.b.top) cup = long(k);
      else thr = long(k);
    }
    auto role = [&](long k, const CategoryPtr& want, const char* which) {
      bool trivial = want->object_count() == 1 && want->morphism_count() == 1;
      if (k < 0) {
        if (!trivial) mismatch(c.name, std::string("frame category ") + which + " = " + want->name() + " has no wire");
        return;
      }
      if (!same_category(category(g.arcs[k].label), want))
        mismatch(c.name, std::string("wire ") + g.arcs[k].label + " is not frame category " + which + " = " + want->name());
    };
    role(cap, fr.C, "C");
    role(thr, fr.A, "A");
    role(cup, fr.B, "B");
    if (!same_category(fr.D, P->target())) mismatch(c.name, "target category differs from " + P->target()->name());
    // plain/shaded positions of the cap and cup
    auto ends = [&](long k, bool top) -> std::pair<long, long> {
      if (k < 0) return {-1, -1};
      const auto& a = g.arcs[k];
      const auto& w = g.word(top);
      return w[a.a.pos].op ? std::pair<long, long>{long(a.b.pos), long(a.a.pos)} : std::pair<long, long>{long(a.a.pos), long(a.b.pos)};
    };
    auto [c_plain, c_op] = ends(cap, false);
    auto [b_plain, b_op] = ends(cup, true);
    long a_bot = thr < 0 ? -1 : long(g.arcs[thr].a.pos);
    long a_top = thr < 0 ? -1 : long(g.arcs[thr].b.pos);
    auto pick = [](const auto& v, long i) {
      using T = typename std::decay_t<decltype(v)>::value_type;
      return i < 0 ? T(0) : v[std::size_t(i)];
    };
    auto Peff = Functor::build(
        "P", P->source(), fr.D,
        [&](ObjId x) {
          auto v = split_obj(*P->source(), g.bottom.size(), x);
          return fr.P_obj(pick(v, c_plain), pick(v, c_op), pick(v, a_bot));
        },
        [&](MorId m) {
          auto v = split_mor(*P->source(), g.bottom.size(), m);
          return fr.P_mor(pick(v, c_plain), pick(v, c_op), pick(v, a_bot));
        });
    auto Qeff = Functor::build(
        "Q", Q->source(), fr.D,
        [&](ObjId x) {
          auto v = split_obj(*Q->source(), g.top.size(), x);
          return fr.Q_obj(pick(v, a_top), pick(v, b_op), pick(v, b_plain));
        },
        [&](MorId m) {
          auto v = split_mor(*Q->source(), g.top.size(), m);
          return fr.Q_mor(pick(v, a_top), pick(v, b_op), pick(v, b_plain));
        });
    if (!same_functor(*Peff, *P)) mismatch(c.name, "frame functor P differs from " + to_string(c.P));
    if (!same_functor(*Qeff, *Q)) mismatch(c.name, "frame functor Q differs from " + to_string(c.Q));
    for (std::size_t i = 0; i < f.comps.size(); ++i) {
      auto s = f.unindex(i);
      f.comps[i] = e.at(cap < 0 ? 0 : s[cap], thr < 0 ? 0 : s[thr], cup < 0 ? 0 : s[cup]);
    }
    return f;
  }

  Family eval_juxt(const DTerm& t) {
    std::vector<Family> parts;
    for (const auto& p : t->parts) parts.push_back(evaluate(p));
    auto f = blank(ek_graph(t), functor(t->bottom), functor(t->top));
    // arc k of part p sits at the shifted position of its first endpoint
    std::vector<std::vector<std::size_t>> where(parts.size());
    std::size_t ob = 0, ot = 0;
    for (std::size_t p = 0; p < parts.size(); ++p) {
      for (const auto& a : parts[p].graph.arcs) {
        Endpoint e = a.a;
        e.pos += e.top ? ot : ob;
        where[p].push_back(f.graph.arc_at(e));
      }
      ob += parts[p].graph.bottom.size();
      ot += parts[p].graph.top.size();
    }
    const auto& D = *f.P->target();
    for (std::size_t i = 0; i < f.comps.size(); ++i) {
      auto s = f.unindex(i);
      std::vector<MorId> wires;
      for (std::size_t p = 0; p < parts.size(); ++p) {
        std::vector<ObjId> sp(where[p].size());
        for (std::size_t k = 0; k < sp.size(); ++k) sp[k] = s[where[p][k]];
        auto m = parts[p].at(sp);
        auto ms = split_mor(*parts[p].target(), t->parts[p]->bottom->cod.size(), m);
        wires.insert(wires.end(), ms.begin(), ms.end());
      }
      f.comps[i] = join_mor(D, wires);
    }
    return f;
  }

  Family eval_hcomp(const DTerm& t) {
    const auto& d2 = t->parts[0];
    const auto& d1 = t->parts[1];
    auto inner = evaluate(d1);
    auto f = blank(ek_graph(t), functor(t->bottom), functor(t->top));
    if (d2->kind == DiagramTerm::Kind::wire) {
      auto G = functor(d2->functor);
      for (std::size_t i = 0; i < f.comps.size(); ++i) f.comps[i] = G->mor(inner.comps[i]);
      return f;
    }
    // both natural: beta_{F'x} . G(alpha_x)
    auto outer = evaluate(d2);
    const auto& G = outer.P;
    const auto& F2 = inner.Q;
    const auto& E = *f.P->target();
    for (std::size_t i = 0; i < f.comps.size(); ++i) {
      auto x = ObjId(i);  // straight profile: the index is the object of the domain word
      auto y = F2->obj(x);
      f.comps[i] = E.then(outer.comps[y], G->mor(inner.comps[i]));
    }
    return f;
  }

  Family eval_subst(const DTerm& t) {
    auto inner = evaluate(t->parts[0]);
    auto s = substitute(inner.graph, t->args);
    auto f = blank(s.graph, functor(t->bottom), functor(t->top));
    std::vector<FunctorPtr> Fs;
    for (const auto& a : t->args) Fs.push_back(functor(a));
    for (std::size_t i = 0; i < f.comps.size(); ++i) {
      auto st = f.unindex(i);
      std::vector<ObjId> sigma(inner.arc_cats.size());
      for (std::size_t k = 0; k < sigma.size(); ++k) {
        std::vector<ObjId> sub;
        for (auto j : s.arc_parts[k]) sub.push_back(st[j]);
        sigma[k] = Fs[k]->obj(join_obj(*Fs[k]->source(), sub));
      }
      f.comps[i] = inner.at(sigma);
    }
    return f;
  }

  Family eval_vcomp(const DTerm& t) {
    auto lower = evaluate(t->parts[1]);
    auto upper = evaluate(t->parts[0]);
    auto gl = glue(lower.graph, upper.graph);
    if (!gl.graph.loops.empty()) throw LoopError(composable(gl.graph));
    if (!same_functor(*lower.Q, *upper.P))
      mismatch("vertical composite", "top of the lower diagram (" + to_string(t->parts[1]->top) +
                                         ") and bottom of the upper one (" + to_string(t->parts[0]->bottom) +
                                         ") interpret differently");
    auto f = blank(gl.graph, lower.P, upper.Q);
    const auto& D = *f.P->target();
    for (std::size_t i = 0; i < f.comps.size(); ++i) {
      auto s = f.unindex(i);
      std::vector<ObjId> s1(gl.lower_map.size()), s2(gl.upper_map.size());
      for (std::size_t k = 0; k < s1.size(); ++k) s1[k] = s[gl.lower_map[k]];
      for (std::size_t k = 0; k < s2.size(); ++k) s2[k] = s[gl.upper_map[k]];
      f.comps[i] = D.then(upper.at(s2), lower.at(s1));
    }
    return f;
  }
};

inline Family evaluate(const DTerm& t, const Interpretation& interp) { return Evaluator(interp).evaluate(t); }

}  // namespace conjlib::ek
