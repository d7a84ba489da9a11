#ifndef GARSIDE_GERM_CHECKS_HPP
#define GARSIDE_GERM_CHECKS_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <string_view>
#include <vector>

#include "garside/errors.hpp"
#include "garside/germ.hpp"
#include "garside/ids.hpp"

namespace garside {

enum class Property {
  endpoints,           // products respect sources and targets
  identities,          // 1_x • f = f = f • 1_y
  associativity,       // with f•g and g•h defined, (f•g)•h and f•(g•h) agree
  left_associativity,  // (f•g)•h defined implies g•h defined
  right_associativity, // f•(g•h) defined implies f•g defined
  left_cancellativity,
  right_cancellativity,
};

inline std::string_view to_string(Property p) {
  switch (p) {
    case Property::endpoints: return "endpoints";
    case Property::identities: return "identities";
    case Property::associativity: return "associativity";
    case Property::left_associativity: return "left-associativity";
    case Property::right_associativity: return "right-associativity";
    case Property::left_cancellativity: return "left-cancellativity";
    case Property::right_cancellativity: return "right-cancellativity";
  }
  return "?";
}

/// A concrete tuple of elements violating `property`.
///
/// Layouts: endpoints (f, g); identities (f); associativity and both
/// associativity variants (f, g, h); left-cancellativity (f, g, g') with
/// f•g = f•g'; right-cancellativity (f, f', g) with f•g = f'•g.
struct Witness {
  Property property;
  std::vector<ElementId> elements;
};

struct AxiomReport {
  bool valid = false;
  bool endpoints_ok = false;
  bool identities_ok = false;
  bool associativity_ok = false;

  // Filled by axiom_report only.
  bool left_associative = false;
  bool right_associative = false;
  bool left_cancellative = false;
  bool right_cancellative = false;
  std::vector<ElementId> invertibles;
  std::vector<ElementId> atoms;

  std::vector<Witness> counterexamples;

  const Witness* witness_for(Property p) const {
    for (const auto& w : counterexamples) {
      if (w.property == p) return &w;
    }
    return nullptr;
  }
};

namespace detail {

/// Row-wise list of defined products: rows[f] = {(g, f•g)}.
struct ProductRows {
  std::vector<std::vector<std::pair<ElementId, ElementId>>> rows;

  explicit ProductRows(const GermTable& t) : rows(t.num_elements()) {
    for (const auto& p : t.products()) rows[p.left.index()].emplace_back(p.right, p.result);
  }
};

inline std::vector<std::vector<ElementId>> elements_by_source(const GermTable& t) {
  std::vector<std::vector<ElementId>> out(t.num_objects());
  for (std::size_t i = 0; i < t.num_elements(); ++i) out[t.source(ElementId{i}).index()].push_back(ElementId{i});
  return out;
}

}  // namespace detail

/// Decides the three germ axioms. Structural well-formedness is already
/// guaranteed by `GermTable`'s constructor.
inline AxiomReport validate_germ(const GermTable& t) {
  AxiomReport r;
  const std::size_t n = t.num_elements();
  const detail::ProductRows idx(t);

  r.endpoints_ok = true;
  for (std::size_t f = 0; f < n && r.endpoints_ok; ++f) {
    for (auto [g, fg] : idx.rows[f]) {
      if (t.source(fg) != t.source(ElementId{f}) || t.target(fg) != t.target(g)) {
        r.endpoints_ok = false;
        r.counterexamples.push_back({Property::endpoints, {ElementId{f}, g}});
        break;
      }
    }
  }

  r.identities_ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    const ElementId f{i};
    const auto left = t.product(t.identity(t.source(f)), f);
    const auto right = t.product(f, t.identity(t.target(f)));
    if (left != f || right != f) {
      r.identities_ok = false;
      r.counterexamples.push_back({Property::identities, {f}});
      break;
    }
  }

  r.associativity_ok = true;
  for (std::size_t fi = 0; fi < n && r.associativity_ok; ++fi) {
    const ElementId f{fi};
    for (auto [g, fg] : idx.rows[fi]) {
      for (auto [h, gh] : idx.rows[g.index()]) {
        const auto lhs = t.product(fg, h);
        const auto rhs = t.product(f, gh);
        if (lhs != rhs) {
          r.associativity_ok = false;
          r.counterexamples.push_back({Property::associativity, {f, g, h}});
          break;
        }
      }
      if (!r.associativity_ok) break;
    }
  }

  r.valid = r.endpoints_ok && r.identities_ok && r.associativity_ok;
  return r;
}

/// Invertible elements: e with some e' such that e•e' and e'•e are identities.
inline std::vector<ElementId> invertible_elements(const GermTable& t) {
  std::vector<ElementId> out;
  const detail::ProductRows idx(t);
  for (std::size_t i = 0; i < t.num_elements(); ++i) {
    const ElementId e{i};
    for (auto [e2, p] : idx.rows[i]) {
      if (p == t.identity(t.source(e)) && t.product(e2, e) == t.identity(t.target(e))) {
        out.push_back(e);
        break;
      }
    }
  }
  return out;
}

/// Full axiom report: germ axioms plus associativity/cancellativity
/// variants, invertibles and germ-internal atoms.
inline AxiomReport axiom_report(const GermTable& t) {
  AxiomReport r = validate_germ(t);
  const std::size_t n = t.num_elements();
  const detail::ProductRows idx(t);

  r.left_associative = true;
  for (std::size_t fi = 0; fi < n && r.left_associative; ++fi) {
    for (auto [g, fg] : idx.rows[fi]) {
      for (auto [h, fgh] : idx.rows[fg.index()]) {
        (void)fgh;
        if (!t.defined(g, h)) {
          r.left_associative = false;
          r.counterexamples.push_back({Property::left_associativity, {ElementId{fi}, g, h}});
          break;
        }
      }
      if (!r.left_associative) break;
    }
  }

  r.right_associative = true;
  for (std::size_t gi = 0; gi < n && r.right_associative; ++gi) {
    const ElementId g{gi};
    for (auto [h, gh] : idx.rows[gi]) {
      for (std::size_t fi = 0; fi < n; ++fi) {
        const ElementId f{fi};
        if (t.defined(f, gh) && !t.defined(f, g)) {
          r.right_associative = false;
          r.counterexamples.push_back({Property::right_associativity, {f, g, h}});
          break;
        }
      }
      if (!r.right_associative) break;
    }
  }

  r.left_cancellative = true;
  {
    std::vector<std::int64_t> seen(n, -1);
    for (std::size_t fi = 0; fi < n && r.left_cancellative; ++fi) {
      for (auto [g, fg] : idx.rows[fi]) {
        auto& slot = seen[fg.index()];
        if (slot >= 0 && static_cast<std::size_t>(slot) != g.index()) {
          r.left_cancellative = false;
          r.counterexamples.push_back(
              {Property::left_cancellativity, {ElementId{fi}, ElementId{static_cast<std::size_t>(slot)}, g}});
          break;
        }
        slot = static_cast<std::int64_t>(g.index());
      }
      for (auto [g, fg] : idx.rows[fi]) seen[fg.index()] = -1;
    }
  }

  r.right_cancellative = true;
  {
    // by_right[g] = {(f, f•g)}
    std::vector<std::vector<std::pair<ElementId, ElementId>>> by_right(n);
    for (std::size_t fi = 0; fi < n; ++fi) {
      for (auto [g, fg] : idx.rows[fi]) by_right[g.index()].emplace_back(ElementId{fi}, fg);
    }
    std::vector<std::int64_t> seen(n, -1);
    for (std::size_t gi = 0; gi < n && r.right_cancellative; ++gi) {
      for (auto [f, fg] : by_right[gi]) {
        auto& slot = seen[fg.index()];
        if (slot >= 0 && static_cast<std::size_t>(slot) != f.index()) {
          r.right_cancellative = false;
          r.counterexamples.push_back(
              {Property::right_cancellativity, {ElementId{static_cast<std::size_t>(slot)}, f, ElementId{gi}}});
          break;
        }
        slot = static_cast<std::int64_t>(f.index());
      }
      for (auto [f, fg] : by_right[gi]) seen[fg.index()] = -1;
    }
  }

  r.invertibles = invertible_elements(t);
  std::vector<bool> inv(n, false);
  for (auto e : r.invertibles) inv[e.index()] = true;

  std::vector<bool> decomposable(n, false);
  for (std::size_t fi = 0; fi < n; ++fi) {
    if (inv[fi]) continue;
    for (auto [g, fg] : idx.rows[fi]) {
      if (!inv[g.index()]) decomposable[fg.index()] = true;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!inv[i] && !decomposable[i]) r.atoms.push_back(ElementId{i});
  }
  return r;
}

/// Precomputed local left- and right-divisibility with one complement per
/// related pair. Left: g = f•g'. Right: g = f'•f.
class LocalDivisibility {
 public:
  explicit LocalDivisibility(const GermTable& t)
      : n_(t.num_elements()), left_(n_ * n_, kNone), right_(n_ * n_, kNone), left_divisors_(n_) {
    for (const auto& p : t.products()) {
      auto& l = left_[p.left.index() * n_ + p.result.index()];
      if (l == kNone) l = p.right.value;
      auto& r = right_[p.right.index() * n_ + p.result.index()];
      if (r == kNone) r = p.left.value;
    }
    for (std::size_t g = 0; g < n_; ++g) {
      for (std::size_t f = 0; f < n_; ++f) {
        if (left_[f * n_ + g] != kNone) left_divisors_[g].push_back(ElementId{f});
      }
    }
  }

  bool left_divides(ElementId f, ElementId g) const { return left_[f.index() * n_ + g.index()] != kNone; }
  bool right_divides(ElementId f, ElementId g) const { return right_[f.index() * n_ + g.index()] != kNone; }

  std::optional<ElementId> left_complement(ElementId f, ElementId g) const {
    const auto v = left_[f.index() * n_ + g.index()];
    if (v == kNone) return std::nullopt;
    return ElementId{v};
  }
  std::optional<ElementId> right_complement(ElementId f, ElementId g) const {
    const auto v = right_[f.index() * n_ + g.index()];
    if (v == kNone) return std::nullopt;
    return ElementId{v};
  }

  /// Every f with f ⋖ g, in increasing id order.
  const std::vector<ElementId>& left_divisors(ElementId g) const { return left_divisors_[g.index()]; }

  std::size_t size() const { return n_; }

 private:
  static constexpr std::uint32_t kNone = 0xffffffffu;
  std::size_t n_;
  std::vector<std::uint32_t> left_;
  std::vector<std::uint32_t> right_;
  std::vector<std::vector<ElementId>> left_divisors_;
};

enum class Side { left, right };

/// Local divisibility inside the germ. Left: returns g' with g = f•g'.
/// Right: returns f' with g = f'•f. Empty when the relation fails.
inline std::optional<ElementId> local_divisibility(const GermTable& t, ElementId f, ElementId g, Side side) {
  if (f.index() >= t.num_elements() || g.index() >= t.num_elements()) {
    throw PreconditionError("element id out of range");
  }
  if (side == Side::left) {
    if (t.source(f) != t.source(g)) {
      throw PreconditionError("left divisibility needs a common source: '" + t.name(f) + "', '" + t.name(g) + "'");
    }
    for (std::size_t i = 0; i < t.num_elements(); ++i) {
      if (t.product(f, ElementId{i}) == g) return ElementId{i};
    }
  } else {
    if (t.target(f) != t.target(g)) {
      throw PreconditionError("right divisibility needs a common target: '" + t.name(f) + "', '" + t.name(g) + "'");
    }
    for (std::size_t i = 0; i < t.num_elements(); ++i) {
      if (t.product(ElementId{i}, f) == g) return ElementId{i};
    }
  }
  return std::nullopt;
}

/// Deterministic ≃-selector: maps every element to the least id of its class,
/// where f ≃ g when g = f•e for an invertible e (closed to an equivalence).
inline std::vector<ElementId> eqir_class_selector(const GermTable& t, const std::vector<ElementId>& invertibles) {
  const std::size_t n = t.num_elements();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::size_t f = 0; f < n; ++f) {
    for (auto e : invertibles) {
      if (auto fe = t.product(ElementId{f}, e)) {
        auto a = find(f), b = find(fe->index());
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::vector<ElementId> sel(n);
  for (std::size_t f = 0; f < n; ++f) sel[f] = ElementId{find(f)};
  return sel;
}

inline std::vector<ElementId> eqir_class_selector(const GermTable& t) {
  return eqir_class_selector(t, invertible_elements(t));
}

}  // namespace garside

#endif  // GARSIDE_GERM_CHECKS_HPP
