#pragma once

// Eilenberg-Kelly graphs: the arcs of a diagram's right-hand profile.  An arc
// joins two dangling endpoints (b<i> on the bottom word, t<i> on the top
// word) carrying the same category label.  Gluing two graphs along a shared
// word either yields a graph again or closes arcs into loops; a loop means
// the vertical composite is not an extranatural transformation.

#include <algorithm>
#include <numeric>
#include <tuple>
#include <string>
#include <vector>

#include "conj/ekgraph/term.hpp"

namespace conjlib::ek {

struct Endpoint {
  bool top = false;
  std::size_t pos = 0;
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};
inline std::string to_string(const Endpoint& e) { return (e.top ? "t" : "b") + std::to_string(e.pos); }

struct Arc {
  Endpoint a, b;  // a < b
  std::string label;
  std::vector<std::string> origin;  // generator arcs this arc was glued from, sorted
};

struct Loop {
  std::string label;
  std::vector<std::string> origin;
};

struct EKGraph {
  Word bottom, top;
  std::vector<Arc> arcs;   // sorted by first endpoint
  std::vector<Loop> loops;

  bool loop_free() const { return loops.empty(); }
  std::size_t arc_at(const Endpoint& e) const {
    for (std::size_t k = 0; k < arcs.size(); ++k)
      if (arcs[k].a == e || arcs[k].b == e) return k;
    throw StructuralError("EK graph: no arc at " + to_string(e));
  }
  const Word& word(bool top_side) const { return top_side ? top : bottom; }
};

namespace detail {

inline void normalize(EKGraph& g) {
  for (auto& a : g.arcs) {
    if (a.b < a.a) std::swap(a.a, a.b);
    std::sort(a.origin.begin(), a.origin.end());
  }
  std::sort(g.arcs.begin(), g.arcs.end(), [](const Arc& x, const Arc& y) { return x.a < y.a; });
  for (auto& l : g.loops) std::sort(l.origin.begin(), l.origin.end());
  std::sort(g.loops.begin(), g.loops.end(),
            [](const Loop& x, const Loop& y) { return std::tie(x.origin, x.label) < std::tie(y.origin, y.label); });
}

inline EKGraph straight(const Word& w) {
  EKGraph g{w, w, {}, {}};
  for (std::size_t i = 0; i < w.size(); ++i) g.arcs.push_back({{false, i}, {true, i}, w[i].label, {}});
  return g;
}

inline EKGraph cell_graph(const CellGen& c) {
  EKGraph g{c.P->dom, c.Q->dom, {}, {}};
  std::vector<char> ub(g.bottom.size()), ut(g.top.size());
  auto tag = [&](Endpoint x, Endpoint y) { return c.name + ":" + to_string(x) + "-" + to_string(y); };
  for (auto [i, j] : c.caps) {
    Endpoint x{false, std::min(i, j)}, y{false, std::max(i, j)};
    g.arcs.push_back({x, y, g.bottom[i].label, {tag(x, y)}});
    ub[i] = ub[j] = 1;
  }
  for (auto [i, j] : c.cups) {
    Endpoint x{true, std::min(i, j)}, y{true, std::max(i, j)};
    g.arcs.push_back({x, y, g.top[i].label, {tag(x, y)}});
    ut[i] = ut[j] = 1;
  }
  std::size_t j = 0;
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (ub[i]) continue;
    while (ut[j]) ++j;
    Endpoint x{false, i}, y{true, j};
    g.arcs.push_back({x, y, g.bottom[i].label, {tag(x, y)}});
    ++j;
  }
  normalize(g);
  return g;
}

}  // namespace detail

// Gluing `upper` on top of `lower`.  Each arc of either graph lands in one
// arc of the result (index >= 0) or in a freshly closed loop (-1 - index
// into the loops added by this join).
struct Glued {
  EKGraph graph;
  std::vector<long> lower_map, upper_map;
  std::vector<Loop> new_loops;
};

inline Glued glue(const EKGraph& lower, const EKGraph& upper) {
  if (lower.top != upper.bottom) throw InterfaceMismatch("vertical composite", lower.top, upper.bottom);
  const auto n1 = lower.arcs.size();
  const auto n = n1 + upper.arcs.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // middle node i touches one lower arc (its top endpoint) and one upper arc
  for (std::size_t i = 0; i < lower.top.size(); ++i) {
    auto l = lower.arc_at({true, i});
    auto u = upper.arc_at({false, i});
    parent[find(l)] = find(n1 + u);
  }
  struct Class {
    std::vector<Endpoint> outer;
    std::string label;
    std::vector<std::string> origin;
  };
  std::vector<long> cls_of(n, -1);
  std::vector<Class> classes;
  for (std::size_t k = 0; k < n; ++k) {
    auto r = find(k);
    if (cls_of[r] < 0) {
      cls_of[r] = long(classes.size());
      classes.push_back({});
    }
    auto& c = classes[cls_of[r]];
    const Arc& a = k < n1 ? lower.arcs[k] : upper.arcs[k - n1];
    c.label = a.label;
    c.origin.insert(c.origin.end(), a.origin.begin(), a.origin.end());
    for (auto e : {a.a, a.b}) {
      if (k < n1 && !e.top) c.outer.push_back({false, e.pos});
      if (k >= n1 && e.top) c.outer.push_back({true, e.pos});
    }
  }
  Glued out;
  out.graph.bottom = lower.bottom;
  out.graph.top = upper.top;
  out.graph.loops = lower.loops;
  out.graph.loops.insert(out.graph.loops.end(), upper.loops.begin(), upper.loops.end());
  std::vector<long> cls_target(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    auto& c = classes[i];
    std::sort(c.origin.begin(), c.origin.end());
    if (c.outer.empty()) {
      cls_target[i] = -1 - long(out.new_loops.size());
      out.new_loops.push_back({c.label, c.origin});
    } else {
      cls_target[i] = long(out.graph.arcs.size());
      out.graph.arcs.push_back({std::min(c.outer[0], c.outer[1]), std::max(c.outer[0], c.outer[1]), c.label, c.origin});
    }
  }
  // sort arcs, keeping track of the permutation
  std::vector<std::size_t> order(out.graph.arcs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return out.graph.arcs[x].a < out.graph.arcs[y].a; });
  std::vector<long> rank(order.size());
  std::vector<Arc> sorted;
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = long(i);
    sorted.push_back(out.graph.arcs[order[i]]);
  }
  out.graph.arcs = std::move(sorted);
  for (auto& t : cls_target)
    if (t >= 0) t = rank[t];
  out.lower_map.resize(n1);
  out.upper_map.resize(n - n1);
  for (std::size_t k = 0; k < n; ++k) (k < n1 ? out.lower_map[k] : out.upper_map[k - n1]) = cls_target[cls_of[find(k)]];
  out.graph.loops.insert(out.graph.loops.end(), out.new_loops.begin(), out.new_loops.end());
  detail::normalize(out.graph);
  return out;
}

inline EKGraph juxtapose(const std::vector<EKGraph>& gs) {
  EKGraph g;
  for (const auto& h : gs) {
    auto ob = g.bottom.size(), ot = g.top.size();
    for (auto a : h.arcs) {
      a.a.pos += a.a.top ? ot : ob;
      a.b.pos += a.b.top ? ot : ob;
      g.arcs.push_back(std::move(a));
    }
    g.loops.insert(g.loops.end(), h.loops.begin(), h.loops.end());
    g.bottom = concat(std::move(g.bottom), h.bottom);
    g.top = concat(std::move(g.top), h.top);
  }
  detail::normalize(g);
  return g;
}

// Replaces arc k by the wires of args[k]'s domain (shaded at shaded ends).
struct Substituted {
  EKGraph graph;
  std::vector<std::vector<std::size_t>> arc_parts;  // old arc k -> new arcs, one per wire of args[k]
};

inline Substituted substitute(const EKGraph& g, const std::vector<FTerm>& args) {
  if (args.size() != g.arcs.size())
    throw StructuralError("subst: expected " + std::to_string(g.arcs.size()) + " functors (one per arc), got " +
                          std::to_string(args.size()));
  for (std::size_t k = 0; k < args.size(); ++k) {
    Word want{Wire{g.arcs[k].label, false}};
    if (args[k]->cod != want) throw InterfaceMismatch("subst argument " + std::to_string(k), args[k]->cod, want);
  }
  Substituted s;
  std::vector<std::size_t> bstart(g.bottom.size()), tstart(g.top.size());
  for (bool top : {false, true}) {
    const auto& w = g.word(top);
    auto& start = top ? tstart : bstart;
    auto& nw = top ? s.graph.top : s.graph.bottom;
    for (std::size_t i = 0; i < w.size(); ++i) {
      start[i] = nw.size();
      const auto& dom = args[g.arc_at({top, i})]->dom;
      nw = concat(std::move(nw), w[i].op ? flip(dom) : dom);
    }
  }
  auto pos = [&](Endpoint e, std::size_t j) {
    return Endpoint{e.top, (e.top ? tstart : bstart)[e.pos] + j};
  };
  std::vector<std::pair<std::size_t, std::size_t>> made;  // (k, j) per new arc, before sorting
  for (std::size_t k = 0; k < g.arcs.size(); ++k) {
    const auto& a = g.arcs[k];
    const auto& dom = args[k]->dom;
    for (std::size_t j = 0; j < dom.size(); ++j) {
      s.graph.arcs.push_back({pos(a.a, j), pos(a.b, j), dom[j].label, a.origin});
      made.push_back({k, j});
    }
  }
  s.graph.loops = g.loops;
  std::vector<std::size_t> order(made.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return s.graph.arcs[x].a < s.graph.arcs[y].a; });
  std::vector<Arc> sorted;
  s.arc_parts.assign(g.arcs.size(), {});
  for (auto& p : s.arc_parts) p.clear();
  for (std::size_t k = 0; k < g.arcs.size(); ++k) s.arc_parts[k].resize(args[k]->dom.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    sorted.push_back(s.graph.arcs[order[i]]);
    s.arc_parts[made[order[i]].first][made[order[i]].second] = i;
  }
  s.graph.arcs = std::move(sorted);
  return s;
}

inline bool is_straight(const EKGraph& g) {
  if (g.bottom != g.top || !g.loops.empty()) return false;
  for (std::size_t i = 0; i < g.arcs.size(); ++i)
    if (g.arcs[i].a != Endpoint{false, i} || g.arcs[i].b != Endpoint{true, i}) return false;
  return true;
}

inline EKGraph ek_graph(const DTerm& t) {
  using K = DiagramTerm::Kind;
  switch (t->kind) {
    case K::cell: return detail::cell_graph(t->cell);
    case K::wire: return detail::straight(t->functor->dom);
    case K::juxt: {
      std::vector<EKGraph> gs;
      for (const auto& p : t->parts) gs.push_back(ek_graph(p));
      return juxtapose(gs);
    }
    case K::hcomp: {
      const auto& d2 = t->parts[0];
      const auto& d1 = t->parts[1];
      if (d2->kind == K::wire) return ek_graph(d1);
      auto g = detail::straight(bottom_word(d1));
      g.loops = ek_graph(d1).loops;
      return g;
    }
    case K::subst: return substitute(ek_graph(t->parts[0]), t->args).graph;
    case K::vcomp: return glue(ek_graph(t->parts[1]), ek_graph(t->parts[0])).graph;
  }
  throw StructuralError("ek_graph: unknown term");
}

inline bool is_straight(const DTerm& t) { return is_straight(ek_graph(t)); }

// ---- remaining term constructors (they need the graph) ----------------------------

// d2 o d1 (right-to-left).  Supported: d2 a wire (left whiskering), d1 a wire
// or natural with d2 natural (right whiskering, Godement composite).
// Extranatural cells are whiskered on the right arc by arc with dsubst.
inline DTerm dhcomp(const DTerm& d2, const DTerm& d1) {
  if (cod_word(d1) != bottom_word(d2)) throw InterfaceMismatch("horizontal composite", cod_word(d1), bottom_word(d2));
  bool left_wire = d2->kind == DiagramTerm::Kind::wire;
  if (!left_wire && !(is_straight(d2) && is_straight(d1)))
    throw StructuralError("horizontal composite: an extranatural factor needs a wire on its left; whisker it on the "
                          "right with subst");
  return std::make_shared<DiagramTerm>(DiagramTerm{DiagramTerm::Kind::hcomp, {}, nullptr, {d2, d1}, {},
                                                   fcomp(d2->bottom, d1->bottom), fcomp(d2->top, d1->top)});
}

// Whiskers d on the right by one functor per arc (arcs in graph order),
// the surface-diagram form of P.(G x op(G) x F) => Q.(F x op(H) x H).
inline DTerm dsubst(const DTerm& d, std::vector<FTerm> args) {
  auto g = ek_graph(d);
  substitute(g, args);  // validates
  auto side = [&](bool top) {
    std::vector<FTerm> parts;
    const auto& w = g.word(top);
    for (std::size_t i = 0; i < w.size(); ++i) {
      const auto& f = args[g.arc_at({top, i})];
      parts.push_back(w[i].op ? fop(f) : f);
    }
    return fcomp(top ? d->top : d->bottom, fjuxt(parts));
  };
  auto b = side(false);
  auto tp = side(true);
  return std::make_shared<DiagramTerm>(DiagramTerm{DiagramTerm::Kind::subst, {}, nullptr, {d}, std::move(args), b, tp});
}

// ---- composability and export -------------------------------------------------

struct Composability {
  bool ok = true;
  std::vector<Loop> loops;
  std::string witness() const {
    std::string s;
    for (const auto& l : loops) {
      s += (s.empty() ? "" : "; ") + std::string("loop on ") + l.label + " through";
      for (const auto& o : l.origin) s += " " + o;
    }
    return s;
  }
};

inline Composability composable(const EKGraph& g) { return {g.loops.empty(), g.loops}; }
inline Composability composable(const DTerm& t) { return composable(ek_graph(t)); }
inline Composability composable(const DTerm& lower, const DTerm& upper) {
  if (top_word(lower) != bottom_word(upper)) throw InterfaceMismatch("vertical composite", top_word(lower), bottom_word(upper));
  return composable(glue(ek_graph(lower), ek_graph(upper)).graph);
}

// One `arc <endpoint> <endpoint> <label>` line per arc, then one
// `loop <label> <origins>` line per loop, sorted.
inline std::vector<std::string> export_arcs(const EKGraph& g) {
  std::vector<std::string> lines, loops;
  for (const auto& a : g.arcs) lines.push_back("arc " + to_string(a.a) + " " + to_string(a.b) + " " + a.label);
  for (const auto& l : g.loops) {
    std::string s = "loop " + l.label;
    for (const auto& o : l.origin) s += " " + o;
    loops.push_back(s);
  }
  std::sort(lines.begin(), lines.end());
  std::sort(loops.begin(), loops.end());
  lines.insert(lines.end(), loops.begin(), loops.end());
  return lines;
}

}  // namespace conjlib::ek
