#pragma once

// Check runner.  Each selector runs one family of checkers over the
// declarations it applies to; results come out in selector order, then by
// subject name.

#include <string>
#include <vector>

#include "conj/cli/resolve.hpp"

namespace conjlib::cli {

struct CheckRecord {
  std::string check;
  std::string subject;
  bool pass = true;
  std::size_t violations = 0;
  std::string witness;  // first violation, or a structural explanation
};

inline const std::vector<std::string>& selectors() {
  static const std::vector<std::string> s{"category", "functor", "natural", "zigzag", "twovar",
                                          "closed",   "monoidal", "ek"};
  return s;
}

class UnknownSelector : public StructuralError {
 public:
  explicit UnknownSelector(const std::string& s)
      : StructuralError("unknown selector '" + s + "' (all, category, functor, natural, zigzag, twovar, closed, "
                        "monoidal, ek)") {}
};

namespace detail {

inline CheckRecord record(std::string check, std::string subject, const ValidationReport& r) {
  CheckRecord c{std::move(check), std::move(subject), r.ok(), r.total(), {}};
  if (!r.ok()) c.witness = "[" + r.violations().front().law + "] " + r.violations().front().witness;
  return c;
}

inline CheckRecord check_term(Model& m, const Declaration& d) {
  auto t = m.diagram(d.name, &d);
  auto comp = ek::composable(t);
  if (!comp.ok) return {"ek", d.name, false, comp.loops.size(), comp.witness()};
  if (!d.has("equals")) return {"ek", d.name, true, 0, {}};
  const auto& want_name = d.find("equals")->value;
  auto want = m.nat(want_name, &d);
  auto fam = ek::evaluate(t, m.interpretation(t, &d));
  if (!fam.natural()) return {"ek", d.name, false, 1, "evaluated picture is not natural; cannot equal " + want_name};
  auto got = fam.to_nat_trans(d.name);
  ValidationReport r("term " + d.name);
  if (!same_category(got->source(), want->source()) || !same_category(got->target(), want->target())) {
    r.fail("equals", "evaluated picture and " + want_name + " have different shapes");
  } else {
    r.absorb(check_nat_trans(*got));
    const auto& T = *got->target();
    for (ObjId x = 0; x < got->components().size(); ++x)
      if (got->at(x) != want->at(x))
        r.fail("equals", "at " + got->source()->object_name(x) + ": picture gives " + T.morphism_name(got->at(x)) +
                             ", " + want_name + " has " + T.morphism_name(want->at(x)));
  }
  return record("ek", d.name, r);
}

}  // namespace detail

inline std::vector<CheckRecord> run_checks(Model& m, const std::string& selector) {
  std::vector<std::string> which;
  if (selector == "all") {
    which = selectors();
  } else if (std::find(selectors().begin(), selectors().end(), selector) != selectors().end()) {
    which = {selector};
  } else {
    throw UnknownSelector(selector);
  }
  std::vector<CheckRecord> out;
  for (const auto& s : which) {
    std::vector<CheckRecord> part;
    auto each = [&](const std::string& kind, auto fn) {
      for (auto d : m.declarations_of(kind)) fn(*d, m.resolved(*d));
    };
    if (s == "category") {
      each("category", [&](const Declaration& d, const Entity& e) {
        part.push_back(detail::record(s, d.name, validate_category(e.category)));
      });
    } else if (s == "functor") {
      each("functor", [&](const Declaration& d, const Entity& e) {
        part.push_back(detail::record(s, d.name, check_functor(e.functor)));
      });
    } else if (s == "natural") {
      each("nat", [&](const Declaration& d, const Entity& e) {
        part.push_back(detail::record(s, d.name, check_nat_trans(e.nat)));
      });
    } else if (s == "zigzag") {
      each("adjunction", [&](const Declaration& d, const Entity& e) {
        part.push_back(detail::record(s, d.name, check_adjunction(e.adjunction)));
      });
      for (auto d : m.declarations_of("builtin")) {
        const auto& e = m.resolved(*d);
        if (!e.setmap) continue;
        part.push_back(detail::record(s, d->name + ".lower", check_adjunction(e.setmap->lower)));
        part.push_back(detail::record(s, d->name + ".upper", check_adjunction(e.setmap->upper)));
      }
    } else if (s == "twovar") {
      each("twovar", [&](const Declaration& d, const Entity& e) {
        part.push_back(detail::record(s, d.name, check_two_var(e.twovar)));
      });
    } else if (s == "closed") {
      auto closed = [&](const std::string& name, const ClosedPtr& c) {
        auto r = check_monoidal(c->mon);
        r.absorb(check_closed(c));
        part.push_back(detail::record(s, name, r));
      };
      each("closed", [&](const Declaration& d, const Entity& e) { closed(d.name, e.closed); });
      for (auto d : m.declarations_of("builtin")) {
        const auto& e = m.resolved(*d);
        if (e.closed) closed(d->name, e.closed);
        if (e.setmap) {
          closed(d->name + ".X", e.setmap->X);
          closed(d->name + ".Y", e.setmap->Y);
        }
      }
    } else if (s == "monoidal") {
      each("monoidal-functor", [&](const Declaration& d, const Entity& e) {
        part.push_back(detail::record(s, d.name, check_monoidal_functor(*e.monoidal)));
      });
      for (auto d : m.declarations_of("builtin")) {
        const auto& e = m.resolved(*d);
        if (e.setmap) part.push_back(detail::record(s, d->name + ".monoidal", check_monoidal_functor(e.setmap->monoidal)));
      }
    } else if (s == "ek") {
      for (auto d : m.declarations_of("term")) part.push_back(detail::check_term(m, *d));
    }
    std::stable_sort(part.begin(), part.end(), [](const auto& a, const auto& b) { return a.subject < b.subject; });
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

inline bool all_pass(const std::vector<CheckRecord>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const auto& r) { return r.pass; });
}

}  // namespace conjlib::cli
