#ifndef GARSIDE_CATEGORY_HPP
#define GARSIDE_CATEGORY_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "garside/analyzer.hpp"
#include "garside/errors.hpp"
#include "garside/germ.hpp"
#include "garside/germ_checks.hpp"
#include "garside/ids.hpp"
#include "garside/path.hpp"

namespace garside {

/// Π(ε_x) = 1_x and Π(g·w) = g • Π(w); empty when the evaluation leaves S.
/// Well defined on ≡-classes only for left-associative germs, which this
/// checks.
inline std::optional<ElementId> pi(const GermTable& t, const PathWord& w) {
  const auto axioms = axiom_report(t);
  if (!axioms.left_associative) throw UnsupportedGermError("Π needs a left-associative germ");
  std::optional<ElementId> p = t.identity(w.target());
  for (auto it = w.entries().rbegin(); it != w.entries().rend() && p; ++it) p = t.product(*it, *p);
  return p;
}

enum class RewriteDirection { contract, expand };

/// One elementary ≡-move at `position`: contract replaces entries
/// (position, position+1) by their product; expand replaces the entry at
/// `position` by the given factorization.
inline PathWord rewrite_step(const GermTable& t, const PathWord& w, std::size_t position, RewriteDirection direction,
                             std::optional<std::pair<ElementId, ElementId>> factorization = std::nullopt) {
  auto e = w.entries();
  if (direction == RewriteDirection::contract) {
    if (position + 1 >= e.size()) throw InvalidMoveError("contraction position out of range");
    auto p = t.product(e[position], e[position + 1]);
    if (!p) {
      throw InvalidMoveError("product '" + t.name(e[position]) + "' • '" + t.name(e[position + 1]) +
                             "' is undefined");
    }
    e[position] = *p;
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(position) + 1);
  } else {
    if (position >= e.size()) throw InvalidMoveError("expansion position out of range");
    if (!factorization) throw InvalidMoveError("expansion needs a factorization");
    auto [f, g] = *factorization;
    if (f.index() >= t.num_elements() || g.index() >= t.num_elements() || t.product(f, g) != e[position]) {
      throw InvalidMoveError("factorization does not multiply to the entry");
    }
    e[position] = g;
    e.insert(e.begin() + static_cast<std::ptrdiff_t>(position), f);
  }
  return PathWord::of(t, std::move(e), w.source());
}

/// The category presented by a verified Garside germ. Elements are handled
/// as words; canonical representatives are `NormalForm`s.
///
/// Construction decides the Garside property and builds the maximum J-table
/// (selector-canonical) and the matching K-table (g2 = J(g1,g2) • K(g1,g2)).
/// Everything is read-only afterwards.
class CategoryEngine {
 public:
  explicit CategoryEngine(GermTable t) : CategoryEngine(t, is_garside_germ(t)) {}

  CategoryEngine(GermTable t, const GarsideVerdict& verdict)
      : table_(std::move(t)), div_(table_) {
    if (!verdict.is_garside || !verdict.j_table) {
      throw UnsupportedGermError("germ is not a Garside germ (" +
                                 std::string(verdict.failed_criterion ? to_string(*verdict.failed_criterion) : "?") +
                                 ")");
    }
    j_ = *verdict.j_table;
    const std::size_t n = table_.num_elements();
    invertible_.assign(n, false);
    for (auto e : verdict.axioms.invertibles) invertible_[e.index()] = true;
    for (auto e : verdict.axioms.invertibles) {
      for (auto f : verdict.axioms.invertibles) {
        if (table_.composable(e, f) && !table_.defined(e, f)) {
          // The product would be an invertible element outside S, which a
          // single final entry cannot carry.
          throw UnsupportedGermError("invertible elements '" + table_.name(e) + "', '" + table_.name(f) +
                                     "' have no product in the germ");
        }
      }
    }
    selector_ = eqir_class_selector(table_, verdict.axioms.invertibles);
    k_.assign(n * n, ElementId{});
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const ElementId g1{a}, g2{b};
        if (!table_.composable(g1, g2)) continue;
        auto k = div_.left_complement(j_(g1, g2), g2);
        if (!k) throw DiagnosticError("J value does not left-divide its argument");
        k_[a * n + b] = *k;
      }
    }
  }

  const GermTable& table() const { return table_; }
  const JTable& j_table() const { return j_; }
  const LocalDivisibility& divisibility() const { return div_; }
  bool is_invertible(ElementId g) const { return invertible_[g.index()]; }
  ElementId selector(ElementId g) const { return selector_[g.index()]; }

  ElementId j_value(ElementId g1, ElementId g2) const { return j_(g1, g2); }
  ElementId k_value(ElementId g1, ElementId g2) const { return k_[g1.index() * table_.num_elements() + g2.index()]; }

  /// Π without the left-associativity check (already implied by the verdict).
  std::optional<ElementId> pi(const PathWord& w) const {
    std::optional<ElementId> p = table_.identity(w.target());
    for (auto it = w.entries().rbegin(); it != w.entries().rend() && p; ++it) p = table_.product(*it, *p);
    return p;
  }

  /// H♯(w) and T♯(w) computed together, right to left:
  /// H♯(g·w) = g • J(g, H♯(w)),  T♯(g·w) = K(g, H♯(w)) · T♯(w).
  std::pair<ElementId, PathWord> head_tail(const PathWord& w) const {
    ElementId h = table_.identity(w.target());
    std::vector<ElementId> tail(w.size());
    for (std::size_t i = w.size(); i-- > 0;) {
      const ElementId g = w[i];
      tail[i] = k_value(g, h);
      h = *table_.product(g, j_(g, h));
    }
    if (w.empty()) return {h, w};
    return {h, PathWord::of(table_, std::move(tail))};
  }

  ElementId head_sharp(const PathWord& w) const { return head_tail(w).first; }
  PathWord tail_sharp(const PathWord& w) const { return head_tail(w).second; }

  /// Canonical S-normal form: repeatedly emit H♯ and continue with the
  /// identity-trimmed T♯. An invertible remainder is emitted once, last.
  NormalForm normal_form(const PathWord& w) const {
    std::vector<ElementId> out;
    PathWord cur = w.without_identities(table_);
    const std::size_t budget = std::max<std::size_t>(1, w.size()) * table_.num_elements();
    std::size_t steps = 0;
    while (!cur.empty()) {
      if (++steps > budget) throw DiagnosticError("normal form did not terminate within the step budget");
      auto [h, tail] = head_tail(cur);
      if (invertible_[h.index()]) {
        const auto p = pi(cur);
        if (!p) throw DiagnosticError("invertible head over a word that does not evaluate in the germ");
        if (!table_.is_identity(*p)) out.push_back(*p);
        break;
      }
      out.push_back(h);
      cur = tail.without_identities(table_);
    }
    return NormalForm(PathWord::of(table_, std::move(out), w.source()));
  }

  /// Domino rule: the carry is pushed rightwards through the entries of
  /// `nf`, each step normalizing the two-entry word (carry, entry).
  NormalForm left_multiply(ElementId f, const NormalForm& nf) const {
    if (f.index() >= table_.num_elements()) throw PreconditionError("element id out of range");
    if (table_.target(f) != nf.source()) {
      throw PreconditionError("'" + table_.name(f) + "' cannot be left-multiplied onto this normal form");
    }
    if (table_.is_identity(f)) return nf;
    std::vector<ElementId> out;
    ElementId carry = f;
    const auto& entries = nf.entries();
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (invertible_[carry.index()]) {
        if (table_.is_identity(carry)) {
          out.insert(out.end(), entries.begin() + static_cast<std::ptrdiff_t>(i), entries.end());
          return NormalForm(PathWord::of(table_, std::move(out), table_.source(f)));
        }
        auto full = entries;
        full.insert(full.begin(), f);
        return normal_form(PathWord::of(table_, std::move(full)));
      }
      const auto pair = PathWord::of(table_, {carry, entries[i]});
      auto [h, tail] = head_tail(pair);
      const auto next = pi(tail);
      if (!next) {
        // The remainder lies in S·C× but outside S; normalize directly.
        auto full = entries;
        full.insert(full.begin(), f);
        return normal_form(PathWord::of(table_, std::move(full)));
      }
      out.push_back(h);
      carry = *next;
    }
    if (!table_.is_identity(carry)) {
      if (invertible_[carry.index()]) {
        out.push_back(carry);
      } else {
        const ElementId s = selector_[carry.index()];
        out.push_back(s);
        if (s != carry) {
          const auto e = div_.left_complement(s, carry);
          if (!e) throw DiagnosticError("selector representative does not divide its class member");
          if (!table_.is_identity(*e)) out.push_back(*e);
        }
      }
    }
    return NormalForm(PathWord::of(table_, std::move(out), table_.source(f)));
  }

  NormalForm multiply(const NormalForm& a, const NormalForm& b) const {
    if (a.target() != b.source()) throw PreconditionError("normal forms are not composable");
    NormalForm acc = b;
    for (auto it = a.entries().rbegin(); it != a.entries().rend(); ++it) acc = left_multiply(*it, acc);
    return acc;
  }

  bool word_problem(const PathWord& w1, const PathWord& w2) const {
    if (w1.source() != w2.source() || w1.target() != w2.target()) {
      throw PreconditionError("words have different endpoints");
    }
    return normal_form(w1) == normal_form(w2);
  }

  /// Number of non-invertible entries.
  std::size_t s_length(const NormalForm& nf) const {
    return static_cast<std::size_t>(
        std::count_if(nf.entries().begin(), nf.entries().end(), [&](ElementId g) { return !invertible_[g.index()]; }));
  }

  /// First entry of the normal form; the identity for the empty word.
  ElementId s_head(const PathWord& w) const {
    const auto nf = normal_form(w);
    return nf.empty() ? table_.identity(w.source()) : nf.entries().front();
  }

  /// (g1, g2) is S-greedy iff H♯(g1·g2) ⋖ g1, i.e. every h in S dividing
  /// g1 g2 already divides g1.
  bool is_greedy_pair(ElementId g1, ElementId g2) const {
    if (g1.index() >= table_.num_elements() || g2.index() >= table_.num_elements()) {
      throw PreconditionError("element id out of range");
    }
    if (!table_.composable(g1, g2)) throw PreconditionError("pair is not composable");
    return div_.left_divides(head_sharp(PathWord::of(table_, {g1, g2})), g1);
  }

  bool is_normal(const PathWord& w) const {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (!is_greedy_pair(w[i], w[i + 1])) return false;
    }
    return true;
  }

 private:
  GermTable table_;
  LocalDivisibility div_;
  JTable j_;
  std::vector<ElementId> k_;
  std::vector<bool> invertible_;
  std::vector<ElementId> selector_;
};

}  // namespace garside

#endif  // GARSIDE_CATEGORY_HPP
