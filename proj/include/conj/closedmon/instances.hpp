#pragma once

// Built-in closed monoidal categories: discrete groups, powersets, truncated
// chains and finite Heyting algebras; the adjunction string
// f_! -| f^{-1} -| f_* between powersets for a finite function f.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conj/closedmon/monoidal.hpp"

namespace conjlib {

namespace detail {

inline FunctorPtr tabulate_binary(std::string name, const CategoryPtr& src, const CategoryPtr& tgt,
                                  const std::function<ObjId(ObjId, ObjId)>& on_objects) {
  // For posetal targets a monotone object map determines the functor.
  return Functor::build(
      std::move(name), src, tgt,
      [&](ObjId x) {
        auto v = src->unpack_object(x);
        return on_objects(v[0], v[1]);
      },
      [&](MorId m) {
        auto s = src->unpack_object(src->source(m));
        auto t = src->unpack_object(src->target(m));
        auto r = unique_arrow(*tgt, on_objects(s[0], s[1]), on_objects(t[0], t[1]));
        if (!r) throw StructuralError("functor " + src->name() + " -> " + tgt->name() + " is not monotone");
        return *r;
      });
}

inline MorId forced(const Category& c, ObjId x, ObjId y, const std::string& what) {
  auto r = unique_arrow(c, x, y);
  if (!r) throw StructuralError(what + ": no arrow " + c.object_name(x) + " -> " + c.object_name(y));
  return *r;
}

// Closed structure on a posetal monoidal category: tensor, unit and hom given
// on objects; ev and coev are the forced arrows.
inline ClosedPtr posetal_closed(std::string name, const CategoryPtr& P, const std::function<ObjId(ObjId, ObjId)>& t,
                                ObjId unit, const std::function<ObjId(ObjId, ObjId)>& h) {
  auto tensor = tabulate_binary("(x)", product({P, P}), P, t);
  auto hom = tabulate_binary("-o", product({opposite(P), P}), P, h);
  MonoidalCategory mon{P, tensor, unit, true};
  return make_closed(
      std::move(name), mon, hom, [&](ObjId c, ObjId a) { return forced(*P, t(c, h(c, a)), a, "ev"); },
      [&](ObjId c, ObjId a) { return forced(*P, a, h(c, t(c, a)), "coev"); });
}

}  // namespace detail

// ---- discrete groups -----------------------------------------------------------

// The discrete category on the elements of a finite group, tensored by the
// multiplication, with [g, h]_l = g^{-1} h and [g, h]_r = h g^{-1}.
inline ClosedPtr group_category(std::string name, std::vector<std::string> elements,
                                const std::vector<std::vector<std::size_t>>& mult) {
  const auto n = elements.size();
  auto fail = [&](const std::string& why) { throw StructuralError("group " + name + ": " + why); };
  if (n == 0) fail("no elements");
  if (mult.size() != n) fail("multiplication table has " + std::to_string(mult.size()) + " rows");
  for (const auto& row : mult) {
    if (row.size() != n) fail("multiplication table is not square");
    for (auto v : row)
      if (v >= n) fail("multiplication table references an undeclared element");
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (mult[mult[x][y]][z] != mult[x][mult[y][z]])
          fail("not associative at (" + elements[x] + "," + elements[y] + "," + elements[z] + ")");
  std::optional<std::size_t> e;
  for (std::size_t x = 0; x < n && !e; ++x) {
    bool unit = true;
    for (std::size_t y = 0; y < n; ++y) unit = unit && mult[x][y] == y && mult[y][x] == y;
    if (unit) e = x;
  }
  if (!e) fail("no unit element");
  std::vector<std::size_t> inv(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (mult[x][y] == *e && mult[y][x] == *e) inv[x] = y;
  for (std::size_t x = 0; x < n; ++x)
    if (inv[x] == n) fail("element " + elements[x] + " has no inverse");

  std::vector<Category::Morphism> mors;
  std::vector<MorId> ids;
  for (ObjId x = 0; x < n; ++x) {
    mors.push_back({"id_" + elements[x], x, x});
    ids.push_back(x);
  }
  auto C = Category::from_rule(name, elements, mors, ids, [](MorId g, MorId) { return g; });
  auto CC = product({C, C});
  auto tensor = Functor::build(
      "(x)", CC, C, [&](ObjId x) { auto v = CC->unpack_object(x); return ObjId(mult[v[0]][v[1]]); },
      [&](MorId m) { auto v = CC->unpack_morphism(m); return MorId(mult[v[0]][v[1]]); });
  auto OC = product({opposite(C), C});
  auto hom_l = Functor::build(
      "[-,-]_l", OC, C, [&](ObjId x) { auto v = OC->unpack_object(x); return ObjId(mult[inv[v[0]]][v[1]]); },
      [&](MorId m) { auto v = OC->unpack_morphism(m); return MorId(mult[inv[v[0]]][v[1]]); });
  auto CO = product({C, opposite(C)});
  auto hom_r = Functor::build(
      "[-,-]_r", CO, C, [&](ObjId x) { auto v = CO->unpack_object(x); return ObjId(mult[v[0]][inv[v[1]]]); },
      [&](MorId m) { auto v = CO->unpack_morphism(m); return MorId(mult[v[0]][inv[v[1]]]); });
  MonoidalCategory mon{C, tensor, ObjId(*e), true};
  // Every component below is an identity: g (g^{-1} h) = h and (c b^{-1}) b = c.
  auto cm = make_closed(
      name, mon, hom_l, [&](ObjId, ObjId a) { return C->identity(a); }, [&](ObjId, ObjId a) { return C->identity(a); });
  auto right = make_two_var_R(
      name + "_r", tensor, hom_r, [&](ObjId c, ObjId) { return C->identity(c); },
      [&](ObjId a, ObjId) { return C->identity(a); });
  auto out = std::make_shared<ClosedMonoidalCategory>(*cm);
  out->hom_r = hom_r;
  out->right = right;
  return out;
}

inline ClosedPtr cyclic_group(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> mult(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) mult[i][j] = (i + j) % n;
  }
  return group_category("Z" + std::to_string(n), names, mult);
}

// S3 as permutations of {0,1,2} in lexicographic order, composed as
// (p q)(i) = p(q(i)).
inline ClosedPtr symmetric_group_3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::string> names;
  for (const auto& q : perms) names.push_back(std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]));
  std::vector<std::vector<std::size_t>> mult(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<int, 3> r{};
      for (int k = 0; k < 3; ++k) r[k] = perms[i][perms[j][k]];
      mult[i][j] = std::size_t(std::find(perms.begin(), perms.end(), r) - perms.begin());
    }
  return group_category("S3", names, mult);
}

// ---- powersets --------------------------------------------------------------

inline std::string subset_name(std::uint32_t mask, const std::vector<std::string>& elems) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (mask >> i & 1u) {
      s += (first ? "" : ",") + elems[i];
      first = false;
    }
  return s + "}";
}

// Subsets ordered by inclusion; object id = bitmask.
inline CategoryPtr powerset_category(const std::vector<std::string>& elems, std::string name = {}) {
  if (elems.size() > 12) throw StructuralError("powerset of more than 12 elements is out of scope");
  const std::uint32_t n = 1u << elems.size();
  std::vector<std::string> objs;
  for (std::uint32_t m = 0; m < n; ++m) objs.push_back(subset_name(m, elems));
  if (name.empty()) name = "P" + subset_name(n - 1, elems);
  return Category::posetal(
      std::move(name), objs, [](ObjId x, ObjId y) { return (x & ~y) == 0; },
      [&](ObjId x, ObjId y) { return objs[x] + "<=" + objs[y]; });
}

inline std::vector<std::string> default_elements(std::size_t n, char first = 'a') {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(std::string(1, char(first + i)));
  return v;
}

// Boolean algebra of subsets: tensor = intersection, unit = X,
// S -o T = complement(S) u T.
inline ClosedPtr powerset(const std::vector<std::string>& elems, std::string name = {}) {
  auto P = powerset_category(elems, std::move(name));
  const std::uint32_t full = (1u << elems.size()) - 1;
  return detail::posetal_closed(
      P->name(), P, [](ObjId x, ObjId y) { return x & y; }, full, [=](ObjId c, ObjId a) { return (~c & full) | a; });
}
inline ClosedPtr powerset(std::size_t n) { return powerset(default_elements(n)); }

// ---- truncated chains ---------------------------------------------------------

// Objects 0..N with an arrow u -> v iff u >= v; tensor = min(u + v, N),
// unit 0, [a, b] = max(b - a, 0).
inline ClosedPtr chain(std::size_t N) {
  std::vector<std::string> objs;
  for (std::size_t i = 0; i <= N; ++i) objs.push_back(std::to_string(i));
  auto P = Category::posetal(
      "chain" + std::to_string(N), objs, [](ObjId x, ObjId y) { return x >= y; },
      [&](ObjId x, ObjId y) { return objs[x] + ">=" + objs[y]; });
  return detail::posetal_closed(
      P->name(), P, [=](ObjId x, ObjId y) { return ObjId(std::min<std::size_t>(x + y, N)); }, 0,
      [](ObjId a, ObjId b) { return b > a ? b - a : ObjId(0); });
}

// ---- finite Heyting algebras ----------------------------------------------------

// A finite poset given by leq; returns the Heyting structure (meet, top,
// implication) if the poset is a Heyting algebra, nothing otherwise.
inline std::optional<ClosedPtr> heyting_algebra(std::string name, std::vector<std::string> objs,
                                                const std::function<bool(ObjId, ObjId)>& leq) {
  const auto n = objs.size();
  if (n == 0) return std::nullopt;
  std::vector<std::vector<char>> le(n, std::vector<char>(n));
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y) le[x][y] = leq(x, y);
  for (ObjId x = 0; x < n; ++x) {
    if (!le[x][x]) return std::nullopt;
    for (ObjId y = 0; y < n; ++y) {
      if (x != y && le[x][y] && le[y][x]) return std::nullopt;
      for (ObjId z = 0; z < n; ++z)
        if (le[x][y] && le[y][z] && !le[x][z]) return std::nullopt;
    }
  }
  // greatest element of {z : pred(z)}
  auto greatest = [&](const std::function<bool(ObjId)>& pred) -> std::optional<ObjId> {
    for (ObjId z = 0; z < n; ++z) {
      if (!pred(z)) continue;
      bool top = true;
      for (ObjId w = 0; w < n && top; ++w)
        if (pred(w) && !le[w][z]) top = false;
      if (top) return z;
    }
    return std::nullopt;
  };
  std::vector<std::vector<ObjId>> meet(n, std::vector<ObjId>(n)), imp(n, std::vector<ObjId>(n));
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y) {
      auto m = greatest([&](ObjId z) { return le[z][x] && le[z][y]; });
      if (!m) return std::nullopt;
      meet[x][y] = *m;
    }
  auto top = greatest([](ObjId) { return true; });
  if (!top) return std::nullopt;
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y) {
      auto i = greatest([&](ObjId z) { return bool(le[meet[x][z]][y]); });
      if (!i) return std::nullopt;
      imp[x][y] = *i;
    }
  // x /\ z <= y must be equivalent to z <= (x => y)
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y)
      for (ObjId z = 0; z < n; ++z)
        if (bool(le[meet[x][z]][y]) != bool(le[z][imp[x][y]])) return std::nullopt;
  auto P = Category::posetal(
      name, objs, [&](ObjId x, ObjId y) { return bool(le[x][y]); },
      [&](ObjId x, ObjId y) { return objs[x] + "<=" + objs[y]; });
  return detail::posetal_closed(
      std::move(name), P, [meet](ObjId x, ObjId y) { return meet[x][y]; }, *top,
      [imp](ObjId x, ObjId y) { return imp[x][y]; });
}

// ---- powerset adjunction string for f : X -> Y ---------------------------------

struct SetMapAdjunctions {
  ClosedPtr X, Y;                  // P(X), P(Y)
  FunctorPtr inverse_image;        // f^{-1} = f* : P(Y) -> P(X)
  FunctorPtr direct_image;         // f_! : P(X) -> P(Y)
  FunctorPtr universal_image;      // f_* : P(X) -> P(Y), S |-> {y : f^{-1}(y) in S}
  AdjunctionPtr lower;             // f_! -| f*
  AdjunctionPtr upper;             // f* -| f_*
  MonoidalFunctorData monoidal;    // f* with omega = identities (f^{-1} preserves intersections)
};

inline SetMapAdjunctions set_map_adjunctions(const std::vector<std::size_t>& f, std::size_t ny,
                                             std::vector<std::string> x_names = {},
                                             std::vector<std::string> y_names = {}) {
  const auto nx = f.size();
  if (x_names.empty()) x_names = default_elements(nx, 'a');
  if (y_names.empty()) y_names = default_elements(ny, 'p');
  if (x_names.size() != nx || y_names.size() != ny)
    throw StructuralError("set_map_adjunctions: element names do not match the set sizes");
  for (auto v : f)
    if (v >= ny) throw StructuralError("set_map_adjunctions: f maps outside Y");
  auto PX = powerset(x_names);
  auto PY = powerset(y_names);
  const auto& CX = PX->C();
  const auto& CY = PY->C();
  auto pre = [&](ObjId t) {
    ObjId s = 0;
    for (std::size_t i = 0; i < nx; ++i)
      if (t >> f[i] & 1u) s |= 1u << i;
    return s;
  };
  auto img = [&](ObjId s) {
    ObjId t = 0;
    for (std::size_t i = 0; i < nx; ++i)
      if (s >> i & 1u) t |= 1u << f[i];
    return t;
  };
  auto forall = [&](ObjId s) {
    ObjId t = 0;
    for (std::size_t y = 0; y < ny; ++y)
      if ((pre(1u << y) & ~s) == 0) t |= 1u << y;
    return t;
  };
  auto monotone = [](std::string name, const CategoryPtr& src, const CategoryPtr& tgt,
                     const std::function<ObjId(ObjId)>& on) {
    return Functor::build(
        std::move(name), src, tgt, on,
        [&](MorId m) { return detail::forced(*tgt, on(src->source(m)), on(src->target(m)), "monotone map"); });
  };
  auto fs = monotone("f*", CY, CX, pre);
  auto fl = monotone("f_!", CX, CY, img);
  auto fu = monotone("f_*", CX, CY, forall);
  auto lower = posetal_adjunction("f_!-|f*", fl, fs);
  auto upper = posetal_adjunction("f*-|f_*", fs, fu);
  if (!lower || !upper) throw StructuralError("set_map_adjunctions: image adjunctions failed to form");
  auto from = compose(PX->mon.tensor, product({fs, fs}));
  auto to = compose(fs, PY->mon.tensor);
  auto omega = NatTrans::build("omega", from, to, [&](ObjId x) { return CX->identity(from->obj(x)); });
  return {PX, PY, fs, fl, fu, *lower, *upper, MonoidalFunctorData{PX, PY, fs, omega}};
}

// omega for any meet-preserving monotone f* between posetal closed categories
// (the forced arrow f*y (x) f*y' -> f*(y (x) y')), if it exists.
inline std::optional<MonoidalFunctorData> posetal_monoidal_functor(const ClosedPtr& X, const ClosedPtr& Y,
                                                                   const FunctorPtr& f_star) {
  auto from = compose(X->mon.tensor, product({f_star, f_star}));
  auto to = compose(f_star, Y->mon.tensor);
  std::vector<MorId> comps(from->source()->object_count());
  for (ObjId x = 0; x < comps.size(); ++x) {
    auto r = unique_arrow(*X->C(), from->obj(x), to->obj(x));
    if (!r) return std::nullopt;
    comps[x] = *r;
  }
  return MonoidalFunctorData{X, Y, f_star, std::make_shared<NatTrans>("omega", from, to, std::move(comps))};
}

}  // namespace conjlib
