#pragma once

// Test-side helpers.  Everything here is built from first principles so
// that it can serve as an oracle for the library.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "conj/adjoint/adjunction.hpp"

namespace support {

using namespace conjlib;
using Rel = std::vector<std::vector<bool>>;

// CONJ_SEED overrides the default seed.
inline std::uint64_t seed() {
  if (const char* s = std::getenv("CONJ_SEED")) return std::strtoull(s, nullptr, 10);
  return 20240611;
}

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(seed() ^ (salt * 0x9e3779b97f4a7c15ULL)); }

// A random partial order on n points: random edges i -> j (i < j) closed
// under reflexivity and transitivity.
inline Rel random_order(std::mt19937_64& g, std::size_t n, double p = 0.4) {
  Rel le(n, std::vector<bool>(n, false));
  std::bernoulli_distribution edge(p);
  for (std::size_t i = 0; i < n; ++i) {
    le[i][i] = true;
    for (std::size_t j = i + 1; j < n; ++j) le[i][j] = edge(g);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = true;
  return le;
}

// Adds a least and a greatest element, so the order has both bounds.
inline Rel bounded(const Rel& le) {
  const auto n = le.size() + 2;
  Rel out(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    out[0][i] = true;
    out[i][n - 1] = true;
    out[i][i] = true;
  }
  for (std::size_t i = 0; i < le.size(); ++i)
    for (std::size_t j = 0; j < le.size(); ++j) out[i + 1][j + 1] = le[i][j];
  return out;
}

inline std::string point(std::size_t i) { return "p" + std::to_string(i); }

inline CategoryPtr poset(const std::string& name, const Rel& le) {
  std::vector<std::string> objs;
  for (std::size_t i = 0; i < le.size(); ++i) objs.push_back(point(i));
  return Category::posetal(
      name, objs, [&](ObjId x, ObjId y) { return bool(le[x][y]); },
      [](ObjId x, ObjId y) { return point(x) + "<=" + point(y); });
}

// Z/n as a category with one object; morphism k is the residue k, 0 the identity.
inline CategoryPtr cyclic(std::size_t n, const std::string& name = "") {
  std::vector<Category::Morphism> mors;
  for (std::size_t k = 0; k < n; ++k) mors.push_back({"g" + std::to_string(k), 0, 0});
  return Category::from_rule(name.empty() ? "Z" + std::to_string(n) : name, {"*"}, mors, {0},
                             [n](MorId g, MorId f) { return MorId((g + f) % n); });
}

// The endofunctor k -> m k of a cyclic category.
inline FunctorPtr scale(const CategoryPtr& z, std::size_t m, const std::string& name) {
  const auto n = z->morphism_count();
  return Functor::build(
      name, z, z, [](ObjId) { return ObjId(0); }, [=](MorId k) { return MorId((k * m) % n); });
}

// Every order-preserving map between two finite orders.
inline std::vector<std::vector<ObjId>> monotone_maps(const Rel& a, const Rel& b) {
  std::vector<std::vector<ObjId>> out;
  const auto n = a.size(), m = b.size();
  std::vector<ObjId> f(n, 0);
  while (true) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y)
        if (a[x][y] && !b[f[x]][f[y]]) ok = false;
    if (ok) out.push_back(f);
    std::size_t k = 0;
    while (k < n && ++f[k] == m) f[k++] = 0;
    if (k == n) break;
  }
  return out;
}

// The functor of a monotone map between posetal categories built by poset().
inline FunctorPtr monotone(const std::string& name, const CategoryPtr& C, const CategoryPtr& D,
                           const std::vector<ObjId>& f) {
  return Functor::build(
      name, C, D, [&](ObjId x) { return f[x]; },
      [&](MorId m) { return *unique_arrow(*D, f[C->source(m)], f[C->target(m)]); });
}

// Greatest c with f(c) <= d, computed directly; empty if there is none.
inline std::vector<int> right_adjoint_by_search(const Rel& a, const Rel& b, const std::vector<ObjId>& f) {
  std::vector<int> u(b.size(), -1);
  for (std::size_t d = 0; d < b.size(); ++d) {
    std::vector<std::size_t> below;
    for (std::size_t c = 0; c < a.size(); ++c)
      if (b[f[c]][d]) below.push_back(c);
    for (auto c : below) {
      bool greatest = true;
      for (auto c2 : below) greatest = greatest && a[c2][c];
      if (greatest) u[d] = int(c);
    }
  }
  return u;
}

// All adjunctions F -| U between two random bounded orders of at most
// max_objects points each, found by enumerating monotone maps and searching
// for right adjoints directly.
struct PosetalAdjunctions {
  Rel lc, ld;
  CategoryPtr C, D;
  std::vector<std::vector<ObjId>> left;   // F on objects
  std::vector<std::vector<int>> right;    // U on objects
  std::vector<AdjunctionPtr> adjunctions;
};

inline PosetalAdjunctions random_adjunctions(std::mt19937_64& g, std::size_t max_objects = 6) {
  PosetalAdjunctions out;
  std::uniform_int_distribution<std::size_t> inner(0, max_objects - 2);
  out.lc = bounded(random_order(g, inner(g)));
  out.ld = bounded(random_order(g, inner(g)));
  out.C = poset("C", out.lc);
  out.D = poset("D", out.ld);
  for (const auto& f : monotone_maps(out.lc, out.ld)) {
    auto u = right_adjoint_by_search(out.lc, out.ld, f);
    if (std::find(u.begin(), u.end(), -1) != u.end()) continue;
    std::vector<ObjId> uo(u.begin(), u.end());
    auto F = monotone("F" + std::to_string(out.left.size()), out.C, out.D, f);
    auto U = monotone("U" + std::to_string(out.left.size()), out.D, out.C, uo);
    auto adj = posetal_adjunction("adj" + std::to_string(out.left.size()), F, U);
    if (!adj) throw StructuralError("search found a right adjoint the library rejects");
    out.left.push_back(f);
    out.right.push_back(u);
    out.adjunctions.push_back(*adj);
  }
  return out;
}

// The unique transformation F => G between maps into a posetal category, if any.
inline std::optional<NatTransPtr> forced_nat(const FunctorPtr& F, const FunctorPtr& G, const std::string& name = "t") {
  const auto& T = *F->target();
  for (ObjId x = 0; x < F->source()->object_count(); ++x)
    if (!unique_arrow(T, F->obj(x), G->obj(x))) return std::nullopt;
  return NatTrans::build(name, F, G, [&](ObjId x) { return *unique_arrow(T, F->obj(x), G->obj(x)); });
}

}  // namespace support
