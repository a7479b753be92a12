#pragma once

// Exhaustive search for a meet- and top-preserving monotone map f* between
// small Heyting algebras whose closed structure operator is not invertible.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "conj/closedmon/operators.hpp"

namespace conjlib {

// A finite Heyting algebra as raw tables; element 0 is the bottom and
// element n-1 the top.
struct HeytingTables {
  std::size_t n = 0;
  std::vector<std::vector<char>> le;
  std::vector<std::vector<std::size_t>> meet, imp;
};

namespace detail {

inline std::optional<HeytingTables> heyting_tables(std::size_t n, const std::vector<std::vector<char>>& le) {
  HeytingTables h{n, le, {}, {}};
  auto greatest = [&](auto pred) -> std::optional<std::size_t> {
    for (std::size_t z = 0; z < n; ++z) {
      if (!pred(z)) continue;
      bool top = true;
      for (std::size_t w = 0; w < n && top; ++w)
        if (pred(w) && !le[w][z]) top = false;
      if (top) return z;
    }
    return std::nullopt;
  };
  h.meet.assign(n, std::vector<std::size_t>(n));
  h.imp.assign(n, std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto m = greatest([&](std::size_t z) { return le[z][x] && le[z][y]; });
      if (!m) return std::nullopt;
      h.meet[x][y] = *m;
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto i = greatest([&](std::size_t z) { return bool(le[h.meet[x][z]][y]); });
      if (!i) return std::nullopt;
      h.imp[x][y] = *i;
      for (std::size_t z = 0; z < n; ++z)
        if (bool(le[h.meet[x][z]][y]) != bool(le[z][*i])) return std::nullopt;
    }
  return h;
}

// Lexicographically least relation matrix over all relabellings.
inline std::vector<char> canonical_form(const std::vector<std::vector<char>>& le) {
  const auto n = le.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<char> best;
  do {
    std::vector<char> code;
    code.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) code.push_back(le[perm[i]][perm[j]]);
    if (best.empty() || code < best) best = std::move(code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace detail

// All Heyting algebras with exactly n elements, one per isomorphism class.
// Elements are labelled along a linear extension, so x <= y implies x <= y
// as integers.
inline std::vector<HeytingTables> heyting_algebras_of_size(std::size_t n) {
  std::vector<HeytingTables> out;
  if (n == 0) return out;
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) slots.push_back({i, j});
  std::set<std::vector<char>> seen;
  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << slots.size()); ++bits) {
    std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) le[i][i] = 1;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (bits >> k & 1u) le[slots[k].first][slots[k].second] = 1;
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = le[0][x] && le[x][n - 1];
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y)
        for (std::size_t z = 0; z < n && ok; ++z)
          if (le[x][y] && le[y][z] && !le[x][z]) ok = false;
    if (!ok) continue;
    auto h = detail::heyting_tables(n, le);
    if (!h) continue;
    if (!seen.insert(detail::canonical_form(le)).second) continue;
    out.push_back(std::move(*h));
  }
  return out;
}

struct HeytingCounterexample {
  HeytingTables Y, X;
  std::vector<std::size_t> map;  // f* on elements of Y
  std::size_t y, y2;             // f*(y => y') != f*y => f*y'
};

struct HeytingSearchResult {
  std::size_t bound = 0;
  std::size_t algebras = 0;
  std::size_t maps_examined = 0;       // monotone, meet- and top-preserving
  std::size_t counterexamples = 0;
  std::optional<HeytingCounterexample> first;
};

// Scans pairs (Y, X) by increasing |Y| + |X|, then |Y|, then enumeration order.
inline HeytingSearchResult search_heyting_counterexample(std::size_t bound) {
  HeytingSearchResult r;
  r.bound = bound;
  std::vector<HeytingTables> algs;
  for (std::size_t n = 1; n <= bound; ++n)
    for (auto& h : heyting_algebras_of_size(n)) algs.push_back(std::move(h));
  r.algebras = algs.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < algs.size(); ++i)
    for (std::size_t j = 0; j < algs.size(); ++j) pairs.push_back({i, j});
  std::stable_sort(pairs.begin(), pairs.end(), [&](auto p, auto q) {
    auto sp = algs[p.first].n + algs[p.second].n, sq = algs[q.first].n + algs[q.second].n;
    if (sp != sq) return sp < sq;
    return algs[p.first].n < algs[q.first].n;
  });
  for (auto [iy, ix] : pairs) {
    const auto& Y = algs[iy];
    const auto& X = algs[ix];
    std::vector<std::size_t> g(Y.n, 0);
    while (true) {
      bool ok = g[Y.n - 1] == X.n - 1;
      for (std::size_t a = 0; a < Y.n && ok; ++a)
        for (std::size_t b = 0; b < Y.n && ok; ++b) {
          if (Y.le[a][b] && !X.le[g[a]][g[b]]) ok = false;
          if (g[Y.meet[a][b]] != X.meet[g[a]][g[b]]) ok = false;
        }
      if (ok) {
        ++r.maps_examined;
        for (std::size_t a = 0; a < Y.n; ++a)
          for (std::size_t b = 0; b < Y.n; ++b)
            if (g[Y.imp[a][b]] != X.imp[g[a]][g[b]]) {
              ++r.counterexamples;
              if (!r.first) r.first = HeytingCounterexample{Y, X, g, a, b};
              a = b = Y.n;  // one per map
            }
      }
      std::size_t k = 0;
      while (k < Y.n && ++g[k] == X.n) g[k++] = 0;
      if (k == Y.n) break;
    }
  }
  return r;
}

// The counterexample as library objects: closed structures on both algebras,
// f*, its left adjoint f_! and the monoidal structure.
struct HeytingInstance {
  ClosedPtr X, Y;
  FunctorPtr f_star;
  AdjunctionPtr lower;  // f_! -| f*
  MonoidalFunctorData monoidal;
};

inline ClosedPtr heyting_from_tables(const HeytingTables& h, const std::string& name) {
  std::vector<std::string> objs;
  for (std::size_t i = 0; i < h.n; ++i) objs.push_back(name + std::to_string(i));
  auto c = heyting_algebra(name, objs, [&](ObjId x, ObjId y) { return bool(h.le[x][y]); });
  if (!c) throw StructuralError("heyting_from_tables: " + name + " is not a Heyting algebra");
  return *c;
}

inline HeytingInstance materialize(const HeytingCounterexample& cx) {
  auto Y = heyting_from_tables(cx.Y, "y");
  auto X = heyting_from_tables(cx.X, "x");
  const auto& CY = Y->C();
  const auto& CX = X->C();
  auto f = Functor::build(
      "f*", CY, CX, [&](ObjId y) { return ObjId(cx.map[y]); },
      [&](MorId m) { return detail::forced(*CX, cx.map[CY->source(m)], cx.map[CY->target(m)], "f*"); });
  auto fl = posetal_left_adjoint(f, "f_!");
  if (!fl) throw StructuralError("materialize: f* has no left adjoint");
  auto lower = posetal_adjunction("f_!-|f*", *fl, f);
  auto mon = posetal_monoidal_functor(X, Y, f);
  if (!lower || !mon) throw StructuralError("materialize: counterexample does not assemble");
  return {X, Y, f, *lower, *mon};
}

}  // namespace conjlib
