#pragma once

// compute: run one library operation on named declarations and emit the
// result as new declarations appended to the document.

#include <string>
#include <vector>

#include "conj/cli/resolve.hpp"

namespace conjlib::cli {

namespace detail {

class Emitter {
 public:
  Emitter(Model& m, std::vector<Declaration>& out) : m_(m), out_(out) {}

  std::string category(const CategoryPtr& c) {
    auto e = m_.expression_of(c);
    if (!e) throw StructuralError("compute: category " + c->name() + " has no name in this document");
    return *e;
  }

  // A declared name for f, or a fresh declaration tabulating it.
  std::string functor(const FunctorPtr& f, const std::string& fresh) {
    if (auto n = m_.name_of(f)) return *n;
    for (const auto& [n, g] : emitted_)
      if (same_functor(*g, *f)) return n;
    Declaration d;
    d.kind = "functor";
    d.name = fresh;
    const auto& src = *f->source();
    const auto& tgt = *f->target();
    d.entries.push_back(scalar_entry("source", category(f->source())));
    d.entries.push_back(scalar_entry("target", category(f->target())));
    std::vector<std::string> objs, arrows;
    for (ObjId x = 0; x < src.object_count(); ++x)
      objs.push_back(src.object_name(x) + " -> " + tgt.object_name(f->obj(x)));
    d.entries.push_back(list_entry("objects", objs));
    if (!is_posetal(tgt)) {
      for (MorId g = 0; g < src.morphism_count(); ++g)
        if (!src.is_identity(g)) arrows.push_back(src.morphism_name(g) + " -> " + tgt.morphism_name(f->mor(g)));
      d.entries.push_back(list_entry("arrows", arrows));
    }
    out_.push_back(std::move(d));
    emitted_.push_back({fresh, f});
    return fresh;
  }

  void nat(const NatTransPtr& t, const std::string& name, const std::string& comment) {
    Declaration d;
    d.kind = "nat";
    d.name = name;
    d.comments = {comment};
    d.entries.push_back(scalar_entry("from", functor(t->from(), name + "_from")));
    d.entries.push_back(scalar_entry("to", functor(t->to(), name + "_to")));
    const auto& src = *t->source();
    const auto& tgt = *t->target();
    std::vector<std::string> cs;
    for (ObjId x = 0; x < src.object_count(); ++x) cs.push_back(src.object_name(x) + ": " + tgt.morphism_name(t->at(x)));
    d.entries.push_back(list_entry("components", cs));
    out_.push_back(std::move(d));
  }

  void twovar(const TwoVarLPtr& a, const std::string& name, const std::string& comment) {
    Declaration d;
    d.kind = "twovar";
    d.name = name;
    d.comments = {comment};
    d.entries.push_back(scalar_entry("tensor", functor(a->T, name + "_T")));
    d.entries.push_back(scalar_entry("hom", functor(a->H, name + "_H")));
    if (!is_posetal(*a->C) || !is_posetal(*a->B)) {
      auto pAC = product({a->A, a->C});
      auto pAB = product({a->A, a->B});
      std::vector<std::string> eps, eta;
      for (ObjId x = 0; x < pAC->object_count(); ++x) {
        auto v = pAC->unpack_object(x);
        eps.push_back(pAC->object_name(x) + ": " + a->C->morphism_name(a->eps_at(v[0], v[1])));
      }
      for (ObjId x = 0; x < pAB->object_count(); ++x) {
        auto v = pAB->unpack_object(x);
        eta.push_back(pAB->object_name(x) + ": " + a->B->morphism_name(a->eta_at(v[0], v[1])));
      }
      d.entries.push_back(list_entry("counit", eps));
      d.entries.push_back(list_entry("unit", eta));
    }
    out_.push_back(std::move(d));
  }

 private:
  Model& m_;
  std::vector<Declaration>& out_;
  std::vector<std::pair<std::string, FunctorPtr>> emitted_;
};

inline std::string joined(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
  return s;
}

}  // namespace detail

struct ComputeOp {
  std::string name;
  std::vector<std::string> params;
  std::string prefix;  // default result name = prefix + "_" + first argument
};

inline const std::vector<ComputeOp>& compute_ops() {
  static const std::vector<ComputeOp> ops{
      {"conjugate_left", {"theta : F => F'", "F -| U", "F' -| U'"}, "jl"},
      {"conjugate_right", {"phi : U' => U", "F -| U", "F' -| U'"}, "jr"},
      {"conjugate2_left", {"theta : T => T'", "T -|_L H", "T' -|_L H'"}, "jl2"},
      {"conjugate2_right", {"phi : H' => H", "T -|_L H", "T' -|_L H'"}, "jr2"},
      {"compose_two_var", {"T -|_L H", "K", "F1 -| U1", "F2 -| U2"}, "composite"},
      {"projection_operator", {"monoidal functor f*", "f_! -| f*"}, "pi"},
      {"closed_structure_operator", {"monoidal functor f*"}, "cso"},
      {"internal_adjunction_operator", {"monoidal functor f*", "f* -| f_*"}, "iao"},
      {"inverse", {"invertible transformation"}, "inv"},
  };
  return ops;
}

// Returns the emitted declarations; `result` overrides the default name.
inline std::vector<Declaration> compute(Model& m, const std::string& op, const std::vector<std::string>& args,
                                        std::string result = {}) {
  auto it = std::find_if(compute_ops().begin(), compute_ops().end(), [&](const auto& o) { return o.name == op; });
  if (it == compute_ops().end()) throw StructuralError("compute: unknown operation '" + op + "'");
  if (args.size() != it->params.size()) {
    std::string want;
    for (const auto& p : it->params) want += (want.empty() ? "" : ", ") + p;
    throw StructuralError("compute " + op + ": expected " + std::to_string(it->params.size()) + " arguments (" + want +
                          "), got " + std::to_string(args.size()));
  }
  if (result.empty()) result = it->prefix + "_" + args[0];
  if (m.document().find(result)) throw StructuralError("compute: name " + result + " is already declared");
  std::vector<Declaration> out;
  detail::Emitter em(m, out);
  const std::string note = "computed: " + op + " " + detail::joined(args);
  const Declaration* here = nullptr;
  if (op == "conjugate_left") {
    em.nat(conjugate_left(m.nat(args[0], here), *m.adjunction(args[1], here), *m.adjunction(args[2], here), result),
           result, note);
  } else if (op == "conjugate_right") {
    em.nat(conjugate_right(m.nat(args[0], here), *m.adjunction(args[1], here), *m.adjunction(args[2], here), result),
           result, note);
  } else if (op == "conjugate2_left") {
    em.nat(conjugate2_left(m.nat(args[0], here), *m.twovar(args[1], here), *m.twovar(args[2], here), result), result,
           note);
  } else if (op == "conjugate2_right") {
    em.nat(conjugate2_right(m.nat(args[0], here), *m.twovar(args[1], here), *m.twovar(args[2], here), result), result,
           note);
  } else if (op == "compose_two_var") {
    em.twovar(compose_two_var(*m.twovar(args[0], here), m.functor(args[1], here), *m.adjunction(args[2], here),
                              *m.adjunction(args[3], here), result),
              result, note);
  } else if (op == "projection_operator") {
    em.nat(projection_operator(*m.monoidal(args[0], here), *m.adjunction(args[1], here)), result, note);
  } else if (op == "closed_structure_operator") {
    em.nat(closed_structure_operator(*m.monoidal(args[0], here)), result, note);
  } else if (op == "internal_adjunction_operator") {
    em.nat(internal_adjunction_operator(*m.monoidal(args[0], here), m.adjunction(args[1], here)), result, note);
  } else if (op == "inverse") {
    auto inv = inverse(m.nat(args[0], here), result);
    if (!inv) throw StructuralError("compute inverse: " + args[0] + " is not invertible");
    em.nat(*inv, result, note);
  }
  return out;
}

inline DefinitionDocument with_declarations(DefinitionDocument doc, const std::vector<Declaration>& extra) {
  for (const auto& d : extra) doc.declarations.push_back(d);
  return doc;
}

}  // namespace conjlib::cli
