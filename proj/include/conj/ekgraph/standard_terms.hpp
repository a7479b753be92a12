#pragma once

// Diagram terms for the standard constructions, with interpretations that
// bind their generators to library objects.

#include <string>
#include <vector>

#include "conj/closedmon/monoidal.hpp"
#include "conj/ekgraph/evaluate.hpp"
#include "conj/twovar/twovar.hpp"

namespace conjlib::ek {

inline Word w(std::string label, bool op = false) { return {Wire{std::move(label), op}}; }
inline Word w(std::initializer_list<Wire> ws) { return Word(ws); }
inline Wire pl(std::string label) { return {std::move(label), false}; }
inline Wire sh(std::string label) { return {std::move(label), true}; }

// ---- the two pictures of the composability example ---------------------------------

// beta : P ~> R and two candidates beta1, beta2 : R ~> Q, over
//   P : C x C^op x A -> D,  R : A x A^op x A -> D,  Q : A x B x B^op -> D.
// beta1 . beta is a well-formed composite; beta2 . beta closes a loop.
struct ComposabilityExample {
  FTerm P, R, Q;
  CellGen beta, beta1, beta2;
  DTerm left() const { return dvcomp(dcell(beta1), dcell(beta)); }
  DTerm right() const { return dvcomp(dcell(beta2), dcell(beta)); }
};

inline ComposabilityExample composability_example() {
  ComposabilityExample e;
  e.P = fgen("P", w({pl("C"), sh("C"), pl("A")}), w("D"));
  e.R = fgen("R", w({pl("A"), sh("A"), pl("A")}), w("D"));
  e.Q = fgen("Q", w({pl("A"), pl("B"), sh("B")}), w("D"));
  using K = CellGen::Kind;
  e.beta = make_cell("beta", K::extranatural, e.P, e.R, {{0, 1}}, {{1, 2}});
  e.beta1 = make_cell("beta1", K::extranatural, e.R, e.Q, {{0, 1}}, {{1, 2}});
  e.beta2 = make_cell("beta2", K::extranatural, e.R, e.Q, {{1, 2}}, {{1, 2}});
  return e;
}

// ---- ordinary adjunctions -----------------------------------------------------------

// Generators of F -| U : C -> D under the names F, U, eta, eps (with a suffix).
struct AdjunctionTerms {
  std::string c, d;
  FTerm F, U;
  CellGen eta, eps;
};

inline AdjunctionTerms adjunction_terms(const std::string& c, const std::string& d, const std::string& suffix = "") {
  AdjunctionTerms t{c, d, fgen("F" + suffix, w(c), w(d)), fgen("U" + suffix, w(d), w(c)), {}, {}};
  using K = CellGen::Kind;
  t.eta = make_cell("eta" + suffix, K::natural, fid(w(c)), fcomp(t.U, t.F));
  t.eps = make_cell("eps" + suffix, K::natural, fcomp(t.F, t.U), fid(w(d)));
  return t;
}

inline void bind_terms(Interpretation& I, const AdjunctionTerms& t, const Adjunction& a) {
  I.categories[t.c] = a.C();
  I.categories[t.d] = a.D();
  I.functors[t.F->name] = a.F;
  I.functors[t.U->name] = a.U;
  I.naturals[t.eta.name] = a.eta;
  I.naturals[t.eps.name] = a.eps;
}

// eps F . F eta : F => F.
inline DTerm zigzag_term(const AdjunctionTerms& t) {
  return dvcomp(dhcomp(dcell(t.eps), dwire(t.F)), dhcomp(dwire(t.F), dcell(t.eta)));
}

// U eps' . U theta U' . eta U' : U' => U for theta : F => F'.
inline DTerm conjugate_left_term(const AdjunctionTerms& a, const AdjunctionTerms& a2, const CellGen& theta) {
  auto t1 = dhcomp(dcell(a.eta), dwire(a2.U));
  auto t2 = dhcomp(dwire(a.U), dhcomp(dcell(theta), dwire(a2.U)));
  auto t3 = dhcomp(dwire(a.U), dcell(a2.eps));
  return dvcomp(t3, dvcomp(t2, t1));
}

// ---- adjunctions of two variables --------------------------------------------------

// T : [a, b] -> [c], H : [a^op, c] -> [b] with
//   eps : T.(id x H) over [a, a^op, c] ~> [c], cap (0,1),
//   eta : [b] ~> H.(id x T) over [a^op, a, b], cup (0,1).
// eps and eta may be composite pictures.
struct TwoVarTerms {
  std::string a, b, c;
  FTerm T, H;
  DTerm eps, eta;
};

inline FTerm eps_source(const FTerm& T, const FTerm& H, const std::string& a) { return fcomp(T, fjuxt({fid(w(a)), H})); }
inline FTerm eta_target(const FTerm& T, const FTerm& H, const std::string& a) {
  return fcomp(H, fjuxt({fid(w(a, true)), T}));
}

inline TwoVarTerms two_var_generators(const std::string& a, const std::string& b, const std::string& c,
                                      const std::string& suffix = "") {
  TwoVarTerms t{a, b, c, fgen("T" + suffix, w({pl(a), pl(b)}), w(c)), fgen("H" + suffix, w({sh(a), pl(c)}), w(b)), {}, {}};
  using K = CellGen::Kind;
  t.eps = dcell(make_cell("eps" + suffix, K::extranatural, eps_source(t.T, t.H, a), fid(w(c)), {{0, 1}}, {}));
  t.eta = dcell(make_cell("eta" + suffix, K::extranatural, fid(w(b)), eta_target(t.T, t.H, a), {}, {{0, 1}}));
  return t;
}

inline void bind_terms(Interpretation& I, const TwoVarTerms& t, const TwoVarAdjunctionL& adj) {
  I.categories[t.a] = adj.A;
  I.categories[t.b] = adj.B;
  I.categories[t.c] = adj.C;
  I.functors[t.T->name] = adj.T;
  I.functors[t.H->name] = adj.H;
  I.extranaturals[t.eps->cell.name] = adj.eps;
  I.extranaturals[t.eta->cell.name] = adj.eta;
}

// H(a, eps'_{a,c}) . H(a, theta_{a, H'(a,c)}) . eta_{a, H'(a,c)} : H' => H.
// theta is a natural cell T => T'.
inline DTerm conjugate2_left_term(const TwoVarTerms& adj, const TwoVarTerms& adj2, const CellGen& theta) {
  const auto& a = adj.a;
  auto s1 = dsubst(adj.eta, {adj2.H, fid(w(a))});
  auto s2 = dsubst(dhcomp(dwire(adj.H), djuxt({dwire(fid(w(a, true))), dcell(theta)})), {fid(w(a)), fid(w(a)), adj2.H});
  auto s3 = dhcomp(dwire(adj.H), djuxt({dwire(fid(w(a, true))), adj2.eps}));
  return dvcomp(s3, dvcomp(s2, s1));
}

// ---- composite two-variable adjunctions and conjugate shapes ------------------------

// F1.T.(K x F2) -|_L U2.H.(op K x U1) as pictures built from the generators of
// T -|_L H and of the two ordinary adjunctions:
//   eps~ = eps1 . F1(eps subst [K, U1]) . F1 T (K x eps2 H (op K x U1))
//   eta~ = U2 H (op K x eta1 T (K x F2)) . U2 (eta subst [F2, K]) . eta2
inline TwoVarTerms composite_two_var_terms(const TwoVarTerms& base, const FTerm& K, const AdjunctionTerms& adj1,
                                           const AdjunctionTerms& adj2) {
  const std::string& a = K->dom[0].label;
  const std::string& b = adj2.c;
  const std::string& c = adj1.d;
  TwoVarTerms t{a, b, c, nullptr, nullptr, nullptr, nullptr};
  auto inner_H = fcomp(base.H, fjuxt({fop(K), adj1.U}));
  auto inner_T = fcomp(base.T, fjuxt({K, adj2.F}));
  t.T = fcomp(adj1.F, inner_T);
  t.H = fcomp(adj2.U, inner_H);

  auto e_a = dhcomp(dwire(fcomp(adj1.F, base.T)), djuxt({dwire(K), dhcomp(dcell(adj2.eps), dwire(inner_H))}));
  auto e_b = dhcomp(dwire(adj1.F), dsubst(base.eps, {K, adj1.U}));
  auto e_c = dcell(adj1.eps);
  t.eps = dvcomp(e_c, dvcomp(e_b, e_a));

  auto h_a = dcell(adj2.eta);
  auto h_b = dhcomp(dwire(adj2.U), dsubst(base.eta, {adj2.F, K}));
  auto h_c = dhcomp(dwire(fcomp(adj2.U, base.H)), djuxt({dwire(fop(K)), dhcomp(dcell(adj1.eta), dwire(inner_T))}));
  t.eta = dvcomp(h_c, dvcomp(h_b, h_a));
  return t;
}

// Generators and bindings for a conjugate-shape frame.  Wire labels: A for
// the source of K, B for the common source of F2, F2', C and D for the two
// closed categories, E for the common target of F1, F1'.
struct ConjugateShapeTerms {
  TwoVarTerms closed_C, closed_D;
  FTerm K, Kp;
  AdjunctionTerms adj1, adj2, adj1p, adj2p;
  TwoVarTerms left, right;
  CellGen theta;  // left.T => right.T (forward) or right.T => left.T (reversed)
  DTerm conjugate;
};

inline ConjugateShapeTerms conjugate_shape_terms(ShapeDirection dir = ShapeDirection::forward) {
  ConjugateShapeTerms s;
  s.closed_C = two_var_generators("C", "C", "C", "_C");
  s.closed_D = two_var_generators("D", "D", "D", "_D");
  s.K = fgen("K", w("A"), w("C"));
  s.Kp = fgen("K'", w("A"), w("D"));
  s.adj1 = adjunction_terms("C", "E", "1");
  s.adj2 = adjunction_terms("B", "C", "2");
  s.adj1p = adjunction_terms("D", "E", "1'");
  s.adj2p = adjunction_terms("B", "D", "2'");
  s.left = composite_two_var_terms(s.closed_C, s.K, s.adj1, s.adj2);
  s.right = composite_two_var_terms(s.closed_D, s.Kp, s.adj1p, s.adj2p);
  if (dir == ShapeDirection::forward) {
    s.theta = make_cell("theta", CellGen::Kind::natural, s.left.T, s.right.T);
    s.conjugate = conjugate2_left_term(s.left, s.right, s.theta);
  } else {
    s.theta = make_cell("theta", CellGen::Kind::natural, s.right.T, s.left.T);
    s.conjugate = conjugate2_left_term(s.right, s.left, s.theta);
  }
  return s;
}

inline Interpretation interpretation(const ConjugateShapeTerms& s, const ConjugateShapeFrame& fr, const NatTransPtr& theta) {
  Interpretation I;
  bind_terms(I, s.closed_C, *fr.closed_C);
  bind_terms(I, s.closed_D, *fr.closed_D);
  bind_terms(I, s.adj1, *fr.adj1);
  bind_terms(I, s.adj2, *fr.adj2);
  bind_terms(I, s.adj1p, *fr.adj1p);
  bind_terms(I, s.adj2p, *fr.adj2p);
  I.categories["A"] = fr.K->source();
  I.functors[s.K->name] = fr.K;
  I.functors[s.Kp->name] = fr.Kp;
  I.naturals[s.theta.name] = theta;
  return I;
}

}  // namespace conjlib::ek
