#pragma once

// Surface-diagram terms.  Interface words list the wires of a profile, each
// a category label with a variance (op = shaded).  Functor terms are 1-cells
// between words; diagram terms are 2-cells between functor terms with a
// common codomain word.  Every node carries its words and is checked when it
// is constructed.

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "conj/fincat/report.hpp"

namespace conjlib::ek {

struct Wire {
  std::string label;
  bool op = false;
  friend bool operator==(const Wire&, const Wire&) = default;
  friend auto operator<=>(const Wire&, const Wire&) = default;
};
using Word = std::vector<Wire>;

inline std::string to_string(const Wire& w) { return w.label + (w.op ? "^op" : ""); }
inline std::string to_string(const Word& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ", " : "") + to_string(w[i]);
  return s + "]";
}
inline Word flip(Word w) {
  for (auto& x : w) x.op = !x.op;
  return w;
}
inline Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

class InterfaceMismatch : public StructuralError {
 public:
  InterfaceMismatch(const std::string& where, const Word& a, const Word& b)
      : StructuralError("interface mismatch in " + where + ": " + to_string(a) + " vs " + to_string(b)) {}
};

// ---- functor terms ----------------------------------------------------------

struct FunctorTerm;
using FTerm = std::shared_ptr<const FunctorTerm>;

struct FunctorTerm {
  enum class Kind { gen, id, juxt, hcomp, op };
  Kind kind;
  std::string name;           // generator name (gen)
  std::vector<FTerm> parts;   // juxt: factors; hcomp: {G, F} for G.F; op: {F}
  Word dom, cod;
};

inline FTerm fgen(std::string name, Word dom, Word cod) {
  return std::make_shared<FunctorTerm>(FunctorTerm{FunctorTerm::Kind::gen, std::move(name), {}, std::move(dom), std::move(cod)});
}
inline FTerm fid(Word w) { return std::make_shared<FunctorTerm>(FunctorTerm{FunctorTerm::Kind::id, {}, {}, w, w}); }
inline FTerm fjuxt(std::vector<FTerm> parts) {
  Word d, c;
  for (const auto& p : parts) {
    d = concat(std::move(d), p->dom);
    c = concat(std::move(c), p->cod);
  }
  return std::make_shared<FunctorTerm>(FunctorTerm{FunctorTerm::Kind::juxt, {}, std::move(parts), d, c});
}
// g . f
inline FTerm fcomp(FTerm g, FTerm f) {
  if (f->cod != g->dom) throw InterfaceMismatch("functor composite", f->cod, g->dom);
  Word d = f->dom, c = g->cod;
  return std::make_shared<FunctorTerm>(FunctorTerm{FunctorTerm::Kind::hcomp, {}, {std::move(g), std::move(f)}, d, c});
}
inline FTerm fop(FTerm f) {
  Word d = flip(f->dom), c = flip(f->cod);
  return std::make_shared<FunctorTerm>(FunctorTerm{FunctorTerm::Kind::op, {}, {std::move(f)}, d, c});
}

inline std::string to_string(const FTerm& f) {
  using K = FunctorTerm::Kind;
  switch (f->kind) {
    case K::gen: return f->name;
    case K::id: return "id" + to_string(f->dom);
    case K::op: return "op(" + to_string(f->parts[0]) + ")";
    case K::hcomp: return "(" + to_string(f->parts[0]) + " . " + to_string(f->parts[1]) + ")";
    case K::juxt: {
      std::string s = "(";
      for (std::size_t i = 0; i < f->parts.size(); ++i) s += (i ? " x " : "") + to_string(f->parts[i]);
      return s + ")";
    }
  }
  return {};
}

// ---- cell generators and diagram terms ----------------------------------------

struct CellGen {
  enum class Kind { natural, extranatural };
  std::string name;
  Kind kind = Kind::natural;
  FTerm P, Q;                                        // bottom and top 1-cells
  std::vector<std::pair<std::size_t, std::size_t>> caps;  // pairs of positions in P's domain
  std::vector<std::pair<std::size_t, std::size_t>> cups;  // pairs of positions in Q's domain
};

namespace detail {
inline void check_pairs(const CellGen& g, const Word& w, const std::vector<std::pair<std::size_t, std::size_t>>& ps,
                        std::vector<char>& used, const char* side) {
  for (auto [i, j] : ps) {
    if (i >= w.size() || j >= w.size() || i == j)
      throw StructuralError("cell " + g.name + ": " + side + " pair (" + std::to_string(i) + "," + std::to_string(j) +
                            ") out of range for " + to_string(w));
    if (used[i] || used[j]) throw StructuralError("cell " + g.name + ": " + side + " position used twice");
    if (w[i].label != w[j].label || w[i].op == w[j].op)
      throw StructuralError("cell " + g.name + ": " + side + " pair must join " + to_string(w[i]) +
                            " with its opposite, got " + to_string(w[j]));
    used[i] = used[j] = 1;
  }
}
}  // namespace detail

// Validates a generator: equal codomains; pairs join a wire with its shaded
// twin; the unpaired positions of both sides agree in order.
inline CellGen make_cell(std::string name, CellGen::Kind kind, FTerm P, FTerm Q,
                         std::vector<std::pair<std::size_t, std::size_t>> caps = {},
                         std::vector<std::pair<std::size_t, std::size_t>> cups = {}) {
  CellGen g{std::move(name), kind, std::move(P), std::move(Q), std::move(caps), std::move(cups)};
  if (g.P->cod != g.Q->cod) throw InterfaceMismatch("cell " + g.name + " codomains", g.P->cod, g.Q->cod);
  if (kind == CellGen::Kind::natural && (!g.caps.empty() || !g.cups.empty()))
    throw StructuralError("cell " + g.name + ": a natural cell has a straight profile");
  std::vector<char> ub(g.P->dom.size()), ut(g.Q->dom.size());
  detail::check_pairs(g, g.P->dom, g.caps, ub, "bottom");
  detail::check_pairs(g, g.Q->dom, g.cups, ut, "top");
  Word rb, rt;
  for (std::size_t i = 0; i < ub.size(); ++i)
    if (!ub[i]) rb.push_back(g.P->dom[i]);
  for (std::size_t i = 0; i < ut.size(); ++i)
    if (!ut[i]) rt.push_back(g.Q->dom[i]);
  if (rb != rt) throw InterfaceMismatch("cell " + g.name + " through-wires", rb, rt);
  return g;
}

struct DiagramTerm;
using DTerm = std::shared_ptr<const DiagramTerm>;

struct DiagramTerm {
  enum class Kind { cell, wire, juxt, hcomp, subst, vcomp };
  Kind kind;
  CellGen cell;                 // cell
  FTerm functor;                // wire
  std::vector<DTerm> parts;     // juxt: factors; hcomp: {upper-right D2, D1}; subst: {D}; vcomp: {upper, lower}
  std::vector<FTerm> args;      // subst: one functor per arc of the inner term
  FTerm bottom, top;            // boundary 1-cells
};

inline const Word& bottom_word(const DTerm& t) { return t->bottom->dom; }
inline const Word& top_word(const DTerm& t) { return t->top->dom; }
inline const Word& cod_word(const DTerm& t) { return t->bottom->cod; }

inline DTerm dcell(const CellGen& g) {
  return std::make_shared<DiagramTerm>(DiagramTerm{DiagramTerm::Kind::cell, g, nullptr, {}, {}, g.P, g.Q});
}
inline DTerm dwire(const FTerm& f) {
  return std::make_shared<DiagramTerm>(DiagramTerm{DiagramTerm::Kind::wire, {}, f, {}, {}, f, f});
}
inline DTerm djuxt(std::vector<DTerm> parts) {
  std::vector<FTerm> bs, ts;
  for (const auto& p : parts) {
    bs.push_back(p->bottom);
    ts.push_back(p->top);
  }
  return std::make_shared<DiagramTerm>(DiagramTerm{DiagramTerm::Kind::juxt, {}, nullptr, std::move(parts), {}, fjuxt(bs), fjuxt(ts)});
}
// upper . lower (bottom-to-top)
inline DTerm dvcomp(const DTerm& upper, const DTerm& lower) {
  if (top_word(lower) != bottom_word(upper)) throw InterfaceMismatch("vertical composite", top_word(lower), bottom_word(upper));
  if (cod_word(lower) != cod_word(upper)) throw InterfaceMismatch("vertical composite codomains", cod_word(lower), cod_word(upper));
  return std::make_shared<DiagramTerm>(
      DiagramTerm{DiagramTerm::Kind::vcomp, {}, nullptr, {upper, lower}, {}, lower->bottom, upper->top});
}

}  // namespace conjlib::ek
