#ifndef GARSIDE_ANALYZER_HPP
#define GARSIDE_ANALYZER_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "garside/errors.hpp"
#include "garside/germ.hpp"
#include "garside/germ_checks.hpp"
#include "garside/ids.hpp"

namespace garside {

/// A J-function: one value per composable pair (g1, g2), which must lie in
/// J_S(g1, g2). Values for non-composable pairs are absent.
class JTable {
 public:
  JTable() = default;
  explicit JTable(std::size_t num_elements) : n_(num_elements), values_(n_ * n_, kNone) {}

  std::optional<ElementId> at(ElementId g1, ElementId g2) const {
    const auto v = values_[g1.index() * n_ + g2.index()];
    if (v == kNone) return std::nullopt;
    return ElementId{v};
  }

  /// Unchecked access for pairs known to be composable.
  ElementId operator()(ElementId g1, ElementId g2) const { return ElementId{values_[g1.index() * n_ + g2.index()]}; }

  void set(ElementId g1, ElementId g2, ElementId value) { values_[g1.index() * n_ + g2.index()] = value.value; }

  std::size_t num_elements() const { return n_; }

  friend bool operator==(const JTable&, const JTable&) = default;

 private:
  static constexpr std::uint32_t kNone = 0xffffffffu;
  std::size_t n_ = 0;
  std::vector<std::uint32_t> values_;
};

namespace detail {

inline void require_composable(const GermTable& t, ElementId g1, ElementId g2) {
  if (g1.index() >= t.num_elements() || g2.index() >= t.num_elements()) {
    throw PreconditionError("element id out of range");
  }
  if (!t.composable(g1, g2)) {
    throw PreconditionError("pair ('" + t.name(g1) + "', '" + t.name(g2) + "') is not composable");
  }
}

inline std::vector<ElementId> j_set(const GermTable& t, const LocalDivisibility& div, ElementId g1, ElementId g2) {
  std::vector<ElementId> out;
  for (auto g : div.left_divisors(g2)) {
    if (t.defined(g1, g)) out.push_back(g);
  }
  return out;
}

}  // namespace detail

/// J_S(g1, g2) = {g : g1•g defined and g ⋖ g2}, in increasing id order.
inline std::vector<ElementId> j_set(const GermTable& t, ElementId g1, ElementId g2) {
  detail::require_composable(t, g1, g2);
  return detail::j_set(t, LocalDivisibility(t), g1, g2);
}

/// I_S(g1, g2) = g1 • J_S(g1, g2), in increasing id order.
inline std::vector<ElementId> i_set(const GermTable& t, ElementId g1, ElementId g2) {
  std::vector<ElementId> out;
  for (auto g : j_set(t, g1, g2)) out.push_back(*t.product(g1, g));
  std::sort(out.begin(), out.end());
  return out;
}

struct MaxJResult {
  /// Present when every J-set has a ⋖-greatest element.
  std::optional<JTable> table;
  /// First composable pair whose J-set has no greatest element.
  std::optional<std::pair<ElementId, ElementId>> missing;
  /// The ⋖-maximal members of that J-set.
  std::vector<ElementId> maximal_members;
};

/// Maximum J-function, canonicalized through the ≃-selector applied to
/// I = g1•J so that it satisfies the sharp J-law.
///
/// Requires a left-associative, left-cancellative germ; `axioms` must come
/// from `axiom_report(t)`.
inline MaxJResult max_j_function(const GermTable& t, const AxiomReport& axioms) {
  if (!axioms.left_associative) throw UnsupportedGermError("germ is not left-associative");
  if (!axioms.left_cancellative) throw UnsupportedGermError("germ is not left-cancellative");

  const std::size_t n = t.num_elements();
  const LocalDivisibility div(t);
  const auto sel = eqir_class_selector(t, axioms.invertibles);
  MaxJResult out;
  JTable j(n);

  for (std::size_t a = 0; a < n; ++a) {
    const ElementId g1{a};
    for (std::size_t b = 0; b < n; ++b) {
      const ElementId g2{b};
      if (!t.composable(g1, g2)) continue;
      const auto members = detail::j_set(t, div, g1, g2);
      // The greatest member, if any, has the most left divisors: divisor
      // sets of members are included in its own.
      ElementId candidate = members.front();
      for (auto g : members) {
        if (div.left_divisors(g).size() > div.left_divisors(candidate).size()) candidate = g;
      }
      const bool greatest =
          std::all_of(members.begin(), members.end(), [&](ElementId h) { return div.left_divides(h, candidate); });
      if (!greatest) {
        out.missing = {g1, g2};
        for (auto m : members) {
          const bool dominated = std::any_of(members.begin(), members.end(), [&](ElementId h) {
            return h != m && div.left_divides(m, h) && !div.left_divides(h, m);
          });
          if (!dominated) out.maximal_members.push_back(m);
        }
        return out;
      }
      const ElementId head = *t.product(g1, candidate);
      const ElementId canonical = sel[head.index()];
      ElementId value = candidate;
      if (canonical != head) {
        auto c = div.left_complement(g1, canonical);
        if (!c) throw DiagnosticError("selector representative of '" + t.name(head) + "' is not a multiple of '" +
                                      t.name(g1) + "'");
        value = *c;
      }
      j.set(g1, g2, value);
    }
  }
  out.table = std::move(j);
  return out;
}

inline MaxJResult max_j_function(const GermTable& t) { return max_j_function(t, axiom_report(t)); }

/// Outcome of checking the sharp laws for a J-table. Witnesses:
/// j_function (g1, g2); the three laws (g1, g2, g3), with g3 absent for the
/// pair form of the H-law.
struct LawReport {
  bool j_function = true;
  bool sharp_j_law = true;
  bool sharp_i_law = true;
  bool sharp_h_law = true;
  std::optional<std::vector<ElementId>> j_function_witness;
  std::optional<std::vector<ElementId>> j_law_witness;
  std::optional<std::vector<ElementId>> i_law_witness;
  std::optional<std::vector<ElementId>> h_law_witness;
  std::size_t triples_checked = 0;

  bool all_hold() const { return j_function && sharp_j_law && sharp_i_law && sharp_h_law; }
};

/// Exhaustively checks, for the J-table `j`:
///  - membership J(g1,g2) ∈ J_S(g1,g2);
///  - sharp J-law  J(g1, g2•J(g2,g3)) = g2•J(g1•g2, g3);
///  - sharp I-law  I(g1, I(g2,g3)) = I(g1•g2, g3), where I(g1,g2) = g1•J(g1,g2);
///  - sharp H-law for H(g1 g2) := I(g1,g2) on S and S² inputs:
///    H(f g) = H(f H(g)) for composable f, g in S, and
///    H(g1 (g2 g3)) = H(g1 H(g2 g3)) whenever g1•g2 is defined.
/// Triples range over all (g1,g2,g3) with g1•g2 defined and (g2,g3) composable.
inline LawReport verify_laws(const GermTable& t, const JTable& j) {
  LawReport r;
  const std::size_t n = t.num_elements();
  const LocalDivisibility div(t);

  auto I = [&](ElementId a, ElementId b) -> std::optional<ElementId> {
    auto v = j.at(a, b);
    if (!v) return std::nullopt;
    return t.product(a, *v);
  };

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const ElementId g1{a}, g2{b};
      if (!t.composable(g1, g2)) continue;
      auto v = j.at(g1, g2);
      if (!v || !t.defined(g1, *v) || !div.left_divides(*v, g2)) {
        r.j_function = false;
        if (!r.j_function_witness) r.j_function_witness = std::vector<ElementId>{g1, g2};
      }
    }
  }
  if (!r.j_function) {
    // Without membership the law expressions may be undefined; report as is.
    r.sharp_j_law = r.sharp_i_law = r.sharp_h_law = false;
    return r;
  }

  for (std::size_t a = 0; a < n; ++a) {
    const ElementId f{a};
    for (std::size_t b = 0; b < n; ++b) {
      const ElementId g{b};
      if (!t.composable(f, g)) continue;
      const auto hg = I(g, t.identity(t.target(g)));
      const auto lhs = I(f, g);
      const auto rhs = hg ? I(f, *hg) : std::nullopt;
      if (!lhs || lhs != rhs) {
        r.sharp_h_law = false;
        if (!r.h_law_witness) r.h_law_witness = std::vector<ElementId>{f, g};
      }
    }
  }

  for (const auto& p : t.products()) {
    const ElementId g1 = p.left, g2 = p.right, g12 = p.result;
    for (std::size_t c = 0; c < n; ++c) {
      const ElementId g3{c};
      if (!t.composable(g2, g3)) continue;
      ++r.triples_checked;
      const ElementId j23 = j(g2, g3);
      const auto x = t.product(g2, j23);  // = I(g2, g3)
      const ElementId y = j(g12, g3);
      const auto g2y = t.product(g2, y);

      const auto j_lhs = x ? j.at(g1, *x) : std::nullopt;
      if (!j_lhs || !g2y || *j_lhs != *g2y) {
        r.sharp_j_law = false;
        if (!r.j_law_witness) r.j_law_witness = std::vector<ElementId>{g1, g2, g3};
      }

      const auto i_lhs = x ? I(g1, *x) : std::nullopt;
      const auto i_rhs = t.product(g12, y);
      if (!i_lhs || !i_rhs || *i_lhs != *i_rhs) {
        r.sharp_i_law = false;
        if (!r.i_law_witness) r.i_law_witness = std::vector<ElementId>{g1, g2, g3};
        r.sharp_h_law = false;
        if (!r.h_law_witness) r.h_law_witness = std::vector<ElementId>{g1, g2, g3};
      }
    }
  }
  return r;
}

enum class FailedCriterion { not_left_associative, not_left_cancellative, no_greatest_j, law_violation };

inline std::string_view to_string(FailedCriterion c) {
  switch (c) {
    case FailedCriterion::not_left_associative: return "not-left-associative";
    case FailedCriterion::not_left_cancellative: return "not-left-cancellative";
    case FailedCriterion::no_greatest_j: return "no-greatest-J";
    case FailedCriterion::law_violation: return "law-violation";
  }
  return "?";
}

struct GarsideVerdict {
  bool is_garside = false;
  std::optional<FailedCriterion> failed_criterion;
  std::vector<ElementId> witness;
  std::optional<JTable> j_table;
  AxiomReport axioms;
};

/// Decides whether a valid germ is a Garside germ: left-associative,
/// left-cancellative, and every J-set has a ⋖-greatest element. A positive
/// answer is re-verified against the sharp J-law.
inline GarsideVerdict is_garside_germ(const GermTable& t) {
  GarsideVerdict v;
  v.axioms = axiom_report(t);
  if (!v.axioms.valid) throw PreconditionError("table does not satisfy the germ axioms");
  if (!v.axioms.left_associative) {
    v.failed_criterion = FailedCriterion::not_left_associative;
    v.witness = v.axioms.witness_for(Property::left_associativity)->elements;
    return v;
  }
  if (!v.axioms.left_cancellative) {
    v.failed_criterion = FailedCriterion::not_left_cancellative;
    v.witness = v.axioms.witness_for(Property::left_cancellativity)->elements;
    return v;
  }
  auto maxj = max_j_function(t, v.axioms);
  if (!maxj.table) {
    v.failed_criterion = FailedCriterion::no_greatest_j;
    v.witness = {maxj.missing->first, maxj.missing->second};
    return v;
  }
  const auto laws = verify_laws(t, *maxj.table);
  if (!laws.j_function || !laws.sharp_j_law) {
    v.failed_criterion = FailedCriterion::law_violation;
    v.witness = laws.j_law_witness ? *laws.j_law_witness : *laws.j_function_witness;
    return v;
  }
  v.is_garside = true;
  v.j_table = std::move(maxj.table);
  return v;
}

struct NoetherianReport {
  bool left_noetherian = false;
  bool right_noetherian = false;
  /// A cycle f0 ⊏ f1 ⊏ ... ⊏ f0 of proper divisibility, when one exists.
  std::vector<ElementId> left_cycle;
  std::vector<ElementId> right_cycle;
};

namespace detail {

inline std::vector<ElementId> find_cycle(const std::vector<std::vector<ElementId>>& edges) {
  const std::size_t n = edges.size();
  std::vector<std::uint8_t> color(n, 0);
  std::vector<std::size_t> parent(n, n);
  for (std::size_t root = 0; root < n; ++root) {
    if (color[root]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    color[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next == edges[v].size()) {
        color[v] = 2;
        stack.pop_back();
        continue;
      }
      const std::size_t w = edges[v][next++].index();
      if (color[w] == 1) {
        std::vector<ElementId> cycle{ElementId{w}};
        for (std::size_t u = v; u != w; u = parent[u]) cycle.push_back(ElementId{u});
        std::reverse(cycle.begin() + 1, cycle.end());
        return cycle;
      }
      if (color[w] == 0) {
        color[w] = 1;
        parent[w] = v;
        stack.emplace_back(w, 0);
      }
    }
  }
  return {};
}

}  // namespace detail

/// Left- (resp. right-) Noetherianity of a finite germ, decided as
/// acyclicity of proper local left- (resp. right-) divisibility, where
/// "proper" excludes pairs related by an invertible complement.
inline NoetherianReport noetherian_report(const GermTable& t) {
  const std::size_t n = t.num_elements();
  const auto inv_list = invertible_elements(t);
  std::vector<bool> inv(n, false);
  for (auto e : inv_list) inv[e.index()] = true;

  // f -> g whenever g = f•g' (left) or g = g'•f (right).
  std::vector<std::vector<bool>> left_equiv(n, std::vector<bool>(n, false));
  std::vector<std::vector<bool>> right_equiv(n, std::vector<bool>(n, false));
  std::vector<std::vector<bool>> left_rel(n, std::vector<bool>(n, false));
  std::vector<std::vector<bool>> right_rel(n, std::vector<bool>(n, false));
  for (const auto& p : t.products()) {
    left_rel[p.left.index()][p.result.index()] = true;
    right_rel[p.right.index()][p.result.index()] = true;
    if (inv[p.right.index()]) left_equiv[p.left.index()][p.result.index()] = true;
    if (inv[p.left.index()]) right_equiv[p.right.index()][p.result.index()] = true;
  }
  std::vector<std::vector<ElementId>> left_edges(n), right_edges(n);
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t g = 0; g < n; ++g) {
      if (f == g) continue;
      if (left_rel[f][g] && !left_equiv[f][g]) left_edges[f].push_back(ElementId{g});
      if (right_rel[f][g] && !right_equiv[f][g]) right_edges[f].push_back(ElementId{g});
    }
  }
  NoetherianReport r;
  r.left_cycle = detail::find_cycle(left_edges);
  r.right_cycle = detail::find_cycle(right_edges);
  r.left_noetherian = r.left_cycle.empty();
  r.right_noetherian = r.right_cycle.empty();
  return r;
}

/// Sufficient (and, for the Noetherian route, necessary) conditions for a
/// Garside germ phrased with common multiples and right-lcms.
struct LcmReport {
  bool left_associative = false;
  bool right_associative = false;
  bool left_cancellative = false;
  bool right_noetherian = false;

  /// Any two members of any J-set have a common right-multiple in that J-set.
  bool j_sets_admit_common_multiples = false;
  std::vector<ElementId> common_multiple_witness;  // (g1, g2, h, h')

  /// Any two elements with a common right-multiple in S have a right-lcm in S.
  bool local_right_lcms = false;
  std::vector<ElementId> local_lcm_witness;  // (h, h')

  /// Any two elements with a common source have a right-lcm in S.
  bool right_lcms = false;
  std::vector<ElementId> lcm_witness;  // (h, h')

  /// g•h and g•h' defined imply g•h'' defined for every right-lcm h''.
  bool lcm_closure = false;
  std::vector<ElementId> closure_witness;  // (g, h, h', h'')

  /// Right-Noetherian germs: Garside iff left-assoc, left-canc and common multiples in J-sets.
  bool noetherian_criterion_applies = false;
  bool noetherian_criterion_garside = false;
  /// left-assoc, left-canc, right-Noetherian, local right-lcms, lcm closure ⇒ Garside.
  bool local_lcm_package = false;
  /// associative, left-canc, right-Noetherian, right-lcms ⇒ Garside.
  bool lcm_package = false;
};

inline LcmReport lcm_criteria(const GermTable& t) {
  LcmReport r;
  const std::size_t n = t.num_elements();
  const auto axioms = axiom_report(t);
  r.left_associative = axioms.left_associative;
  r.right_associative = axioms.right_associative;
  r.left_cancellative = axioms.left_cancellative;
  r.right_noetherian = noetherian_report(t).right_noetherian;
  const LocalDivisibility div(t);

  // right_multiples[h] = {m : h ⋖ m}
  std::vector<std::vector<ElementId>> right_multiples(n);
  for (std::size_t m = 0; m < n; ++m) {
    for (auto h : div.left_divisors(ElementId{m})) right_multiples[h.index()].push_back(ElementId{m});
  }

  // Right-lcms of every same-source pair: lcms[h*n+h'] lists all of them.
  std::vector<std::vector<ElementId>> lcms(n * n);
  std::vector<bool> has_common(n * n, false);
  r.local_right_lcms = true;
  r.right_lcms = true;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const ElementId h{a}, h2{b};
      if (t.source(h) != t.source(h2)) continue;
      std::vector<ElementId> common;
      for (auto m : right_multiples[a]) {
        if (div.left_divides(h2, m)) common.push_back(m);
      }
      auto& out = lcms[a * n + b];
      if (!common.empty()) {
        has_common[a * n + b] = true;
        ElementId cand = common.front();
        for (auto m : common) {
          if (div.left_divisors(m).size() < div.left_divisors(cand).size()) cand = m;
        }
        const bool least =
            std::all_of(common.begin(), common.end(), [&](ElementId m) { return div.left_divides(cand, m); });
        if (least) {
          for (auto m : common) {
            if (div.left_divides(m, cand)) out.push_back(m);
          }
        }
      }
      if (out.empty()) {
        if (r.right_lcms) {
          r.right_lcms = false;
          r.lcm_witness = {h, h2};
        }
        if (has_common[a * n + b] && r.local_right_lcms) {
          r.local_right_lcms = false;
          r.local_lcm_witness = {h, h2};
        }
      }
    }
  }

  r.lcm_closure = true;
  for (std::size_t g = 0; g < n && r.lcm_closure; ++g) {
    std::vector<ElementId> defined_with;
    for (std::size_t h = 0; h < n; ++h) {
      if (t.defined(ElementId{g}, ElementId{h})) defined_with.push_back(ElementId{h});
    }
    for (auto h : defined_with) {
      for (auto h2 : defined_with) {
        for (auto m : lcms[h.index() * n + h2.index()]) {
          if (!t.defined(ElementId{g}, m)) {
            r.lcm_closure = false;
            r.closure_witness = {ElementId{g}, h, h2, m};
            break;
          }
        }
        if (!r.lcm_closure) break;
      }
      if (!r.lcm_closure) break;
    }
  }

  r.j_sets_admit_common_multiples = true;
  for (std::size_t a = 0; a < n && r.j_sets_admit_common_multiples; ++a) {
    for (std::size_t b = 0; b < n && r.j_sets_admit_common_multiples; ++b) {
      const ElementId g1{a}, g2{b};
      if (!t.composable(g1, g2)) continue;
      const auto members = detail::j_set(t, div, g1, g2);
      for (std::size_t i = 0; i < members.size() && r.j_sets_admit_common_multiples; ++i) {
        for (std::size_t k = i + 1; k < members.size(); ++k) {
          const auto h = members[i], h2 = members[k];
          const bool ok = std::any_of(members.begin(), members.end(), [&](ElementId m) {
            return div.left_divides(h, m) && div.left_divides(h2, m);
          });
          if (!ok) {
            r.j_sets_admit_common_multiples = false;
            r.common_multiple_witness = {g1, g2, h, h2};
            break;
          }
        }
      }
    }
  }

  r.noetherian_criterion_applies = r.right_noetherian;
  r.noetherian_criterion_garside =
      r.right_noetherian && r.left_associative && r.left_cancellative && r.j_sets_admit_common_multiples;
  r.local_lcm_package =
      r.left_associative && r.left_cancellative && r.right_noetherian && r.local_right_lcms && r.lcm_closure;
  r.lcm_package =
      r.left_associative && r.right_associative && r.left_cancellative && r.right_noetherian && r.right_lcms;
  return r;
}

}  // namespace garside

#endif  // GARSIDE_ANALYZER_HPP
