#ifndef GARSIDE_COXETER_HPP
#define GARSIDE_COXETER_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "garside/analyzer.hpp"
#include "garside/errors.hpp"
#include "garside/germ.hpp"
#include "garside/germ_checks.hpp"
#include "garside/ids.hpp"

namespace garside {

enum class CoxeterFamily { A, B, I2 };

inline const char* to_string(CoxeterFamily f) {
  switch (f) {
    case CoxeterFamily::A: return "A";
    case CoxeterFamily::B: return "B";
    case CoxeterFamily::I2: return "I2";
  }
  return "?";
}

/// `rank` is the number of points for A (A 3 is the symmetric group on three
/// letters), the number of signed points for B, and m for I2(m).
struct CoxeterSpec {
  CoxeterFamily family;
  unsigned rank;
};

/// Index into the element list of a `CoxeterGroup`; 0 is the identity.
using GroupIndex = std::size_t;

/// Permutations act on the right and compose left to right:
/// (fg)[i] = g[f[i]].
using Permutation = std::vector<std::uint16_t>;

namespace detail {

inline Permutation compose(const Permutation& f, const Permutation& g) {
  Permutation r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = g[f[i]];
  return r;
}

inline std::string cycle_name(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

// Points 0..n-1 stand for +1..+n and n..2n-1 for -1..-n.
inline std::string signed_name(const Permutation& p, std::size_t n) {
  bool id = true;
  for (std::size_t i = 0; i < p.size(); ++i) id = id && p[i] == i;
  if (id) return "e";
  std::string out = "[";
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out += ' ';
    const std::size_t v = p[i];
    out += v < n ? std::to_string(v + 1) : "-" + std::to_string(v - n + 1);
  }
  return out + "]";
}

}  // namespace detail

/// A finite Coxeter group of type A, B or I2 with its full multiplication
/// table. Elements are listed in breadth-first order from the identity over
/// the simple reflections, so index order refines simple length.
class CoxeterGroup {
 public:
  const CoxeterSpec& spec() const { return spec_; }
  std::size_t size() const { return elements_.size(); }
  GroupIndex identity() const { return 0; }
  GroupIndex multiply(GroupIndex a, GroupIndex b) const { return mult_[a * size() + b]; }
  GroupIndex inverse(GroupIndex a) const { return inv_[a]; }
  const std::vector<GroupIndex>& simple_reflections() const { return simple_; }
  const std::vector<GroupIndex>& reflections() const { return reflections_; }
  const std::string& name(GroupIndex a) const { return names_.at(a); }
  const Permutation& permutation(GroupIndex a) const { return elements_.at(a); }

  std::optional<GroupIndex> find(const std::string& n) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == n) return i;
    }
    return std::nullopt;
  }

  /// Product of the simple reflections in the given order (indices into
  /// `simple_reflections()`).
  GroupIndex coxeter_element(const std::vector<std::size_t>& order) const {
    std::vector<bool> used(simple_.size(), false);
    if (order.size() != simple_.size()) throw UnsupportedSpecError("Coxeter order must list every simple reflection once");
    GroupIndex c = identity();
    for (auto i : order) {
      if (i >= simple_.size() || used[i]) throw UnsupportedSpecError("Coxeter order must be a permutation of the simple reflections");
      used[i] = true;
      c = multiply(c, simple_[i]);
    }
    return c;
  }

  GroupIndex coxeter_element() const {
    std::vector<std::size_t> order(simple_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    return coxeter_element(order);
  }

 private:
  friend CoxeterGroup build_group(const CoxeterSpec& spec);

  CoxeterSpec spec_{};
  std::vector<Permutation> elements_;
  std::vector<std::string> names_;
  std::vector<GroupIndex> mult_;
  std::vector<GroupIndex> inv_;
  std::vector<GroupIndex> simple_;
  std::vector<GroupIndex> reflections_;
};

/// Builds A (n ≤ 6), B (n ≤ 4) or I2(m) (2 ≤ m ≤ 12).
inline CoxeterGroup build_group(const CoxeterSpec& spec) {
  std::vector<Permutation> gens;
  std::size_t degree = 0;
  switch (spec.family) {
    case CoxeterFamily::A: {
      if (spec.rank < 1 || spec.rank > 6) throw UnsupportedSpecError("type A needs 1 ≤ n ≤ 6 points");
      degree = spec.rank;
      for (std::size_t i = 0; i + 1 < degree; ++i) {
        Permutation p(degree);
        for (std::size_t k = 0; k < degree; ++k) p[k] = static_cast<std::uint16_t>(k);
        std::swap(p[i], p[i + 1]);
        gens.push_back(p);
      }
      break;
    }
    case CoxeterFamily::B: {
      if (spec.rank < 1 || spec.rank > 4) throw UnsupportedSpecError("type B needs 1 ≤ n ≤ 4");
      const std::size_t n = spec.rank;
      degree = 2 * n;
      auto ident = [&] {
        Permutation p(degree);
        for (std::size_t k = 0; k < degree; ++k) p[k] = static_cast<std::uint16_t>(k);
        return p;
      };
      Permutation t = ident();
      std::swap(t[0], t[n]);
      gens.push_back(t);
      for (std::size_t i = 0; i + 1 < n; ++i) {
        Permutation p = ident();
        std::swap(p[i], p[i + 1]);
        std::swap(p[n + i], p[n + i + 1]);
        gens.push_back(p);
      }
      break;
    }
    case CoxeterFamily::I2: {
      if (spec.rank < 2 || spec.rank > 12) throw UnsupportedSpecError("type I2 needs 2 ≤ m ≤ 12");
      // Regular representation: point (b, k) = s^b r^k, index b*m + k.
      const std::size_t m = spec.rank;
      degree = 2 * m;
      auto mul = [m](std::size_t x, std::size_t y) {
        const std::size_t b1 = x / m, k1 = x % m, b2 = y / m, k2 = y % m;
        if (b2 == 0) return b1 * m + (k1 + k2) % m;
        return ((b1 + 1) % 2) * m + (k2 + m - k1) % m;
      };
      for (std::size_t y : {m, m + 1}) {  // s and s·r
        Permutation p(degree);
        for (std::size_t x = 0; x < degree; ++x) p[x] = static_cast<std::uint16_t>(mul(x, y));
        gens.push_back(p);
      }
      break;
    }
  }

  CoxeterGroup g;
  g.spec_ = spec;
  Permutation id(degree);
  for (std::size_t k = 0; k < degree; ++k) id[k] = static_cast<std::uint16_t>(k);
  std::map<Permutation, GroupIndex> index;
  g.elements_.push_back(id);
  index.emplace(id, 0);
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (const auto& s : gens) {
      auto p = detail::compose(g.elements_[head], s);
      if (index.emplace(p, g.elements_.size()).second) g.elements_.push_back(std::move(p));
    }
  }
  const std::size_t n = g.elements_.size();
  g.mult_.resize(n * n);
  g.inv_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto r = index.at(detail::compose(g.elements_[a], g.elements_[b]));
      g.mult_[a * n + b] = r;
      if (r == 0) g.inv_[a] = b;
    }
  }
  for (const auto& s : gens) g.simple_.push_back(index.at(s));

  std::vector<bool> is_refl(n, false);
  for (std::size_t w = 0; w < n; ++w) {
    for (auto s : g.simple_) is_refl[g.mult_[g.mult_[w * n + s] * n + g.inv_[w]]] = true;
  }
  for (std::size_t w = 0; w < n; ++w) {
    if (is_refl[w]) g.reflections_.push_back(w);
  }

  g.names_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    switch (spec.family) {
      case CoxeterFamily::A: g.names_[a] = detail::cycle_name(g.elements_[a]); break;
      case CoxeterFamily::B: g.names_[a] = detail::signed_name(g.elements_[a], spec.rank); break;
      case CoxeterFamily::I2: {
        // The image of the identity point is the element itself.
        const std::size_t x = g.elements_[a][0];
        const std::size_t m = spec.rank;
        g.names_[a] = x == 0 ? "e" : (x < m ? "r" : "s") + std::to_string(x % m);
        break;
      }
    }
  }
  return g;
}

enum class GeneratorKind { simple_reflections, all_reflections };

/// Length, tightness and Σ-prefix order for a generating family Σ of a
/// finite group.
class TightContext {
 public:
  TightContext(CoxeterGroup group, GeneratorKind kind)
      : group_(std::make_shared<const CoxeterGroup>(std::move(group))) {
    sigma_ = kind == GeneratorKind::simple_reflections ? group_->simple_reflections() : group_->reflections();
    init();
  }

  TightContext(CoxeterGroup group, std::vector<GroupIndex> sigma)
      : group_(std::make_shared<const CoxeterGroup>(std::move(group))), sigma_(std::move(sigma)) {
    init();
  }

  const CoxeterGroup& group() const { return *group_; }
  const std::vector<GroupIndex>& sigma() const { return sigma_; }
  bool in_sigma(GroupIndex a) const { return in_sigma_[a]; }

  std::size_t length(GroupIndex a) const { return length_.at(a); }

  /// ℓ(g1 ⋯ gp) = ℓ(g1) + ⋯ + ℓ(gp).
  bool is_tight(const std::vector<GroupIndex>& word) const {
    GroupIndex p = group_->identity();
    std::size_t sum = 0;
    for (auto g : word) {
      p = group_->multiply(p, g);
      sum += length_[g];
    }
    return length_[p] == sum;
  }
  bool is_tight(GroupIndex f, GroupIndex g) const {
    return length_[group_->multiply(f, g)] == length_[f] + length_[g];
  }

  /// f ⪯ g iff (f, f⁻¹g) is tight.
  bool is_prefix(GroupIndex f, GroupIndex g) const {
    return length_[f] + length_[group_->multiply(group_->inverse(f), g)] == length_[g];
  }
  /// f is a suffix of g iff (g f⁻¹, f) is tight.
  bool is_suffix(GroupIndex f, GroupIndex g) const {
    return length_[group_->multiply(g, group_->inverse(f))] + length_[f] == length_[g];
  }

  /// Least common ⪯-upper bound of f and g among `h`, if any.
  std::optional<GroupIndex> prefix_lub(const std::vector<GroupIndex>& h, GroupIndex f, GroupIndex g) const {
    std::vector<GroupIndex> ub;
    for (auto u : h) {
      if (is_prefix(f, u) && is_prefix(g, u)) ub.push_back(u);
    }
    if (ub.empty()) return std::nullopt;
    const auto cand = *std::min_element(ub.begin(), ub.end(), [&](auto a, auto b) { return length_[a] < length_[b]; });
    for (auto u : ub) {
      if (!is_prefix(cand, u)) return std::nullopt;
    }
    return cand;
  }

  /// {g : g ⪯ c}.
  std::vector<GroupIndex> prefixes_of(GroupIndex c) const {
    std::vector<GroupIndex> out;
    for (GroupIndex a = 0; a < group_->size(); ++a) {
      if (is_prefix(a, c)) out.push_back(a);
    }
    return out;
  }

 private:
  void init() {
    const std::size_t n = group_->size();
    in_sigma_.assign(n, false);
    for (auto s : sigma_) {
      if (s >= n) throw UnsupportedSpecError("generator out of range");
      in_sigma_[s] = true;
    }
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    length_.assign(n, kUnset);
    std::deque<GroupIndex> queue{group_->identity()};
    length_[group_->identity()] = 0;
    while (!queue.empty()) {
      const auto a = queue.front();
      queue.pop_front();
      for (auto s : sigma_) {
        const auto b = group_->multiply(a, s);
        if (length_[b] == kUnset) {
          length_[b] = length_[a] + 1;
          queue.push_back(b);
        }
      }
    }
    if (std::find(length_.begin(), length_.end(), kUnset) != length_.end()) {
      throw UnsupportedSpecError("generators do not generate the group");
    }
  }

  std::shared_ptr<const CoxeterGroup> group_;
  std::vector<GroupIndex> sigma_;
  std::vector<bool> in_sigma_;
  std::vector<std::size_t> length_;
};

/// Germ on the single object "*" with elements H (in the given order) and
/// f • g = fg exactly when fg ∈ H and (f, g) is Σ-tight.
inline GermTable derive_germ(const TightContext& ctx, const std::vector<GroupIndex>& h) {
  const auto& grp = ctx.group();
  std::vector<std::uint32_t> pos(grp.size(), 0xffffffffu);
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] >= grp.size()) throw UnsupportedSpecError("subfamily element out of range");
    if (pos[h[i]] != 0xffffffffu) throw UnsupportedSpecError("subfamily lists an element twice");
    pos[h[i]] = static_cast<std::uint32_t>(i);
  }
  if (pos[grp.identity()] == 0xffffffffu) throw UnsupportedSpecError("subfamily must contain the identity");

  GermBuilder b;
  const auto x = b.add_object("*");
  std::vector<ElementId> ids;
  for (auto g : h) {
    ids.push_back(g == grp.identity() ? b.add_identity(grp.name(g), x) : b.add_element(grp.name(g), x, x));
  }
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t j = 0; j < h.size(); ++j) {
      const auto p = grp.multiply(h[i], h[j]);
      if (pos[p] != 0xffffffffu && ctx.is_tight(h[i], h[j])) b.product(ids[i], ids[j], ids[pos[p]]);
    }
  }
  auto t = b.build();
  const auto axioms = axiom_report(t);
  if (!axioms.valid || !axioms.left_cancellative || !axioms.right_cancellative || axioms.invertibles.size() != 1) {
    throw DiagnosticError("derived germ is not a cancellative germ with trivial invertibles");
  }
  return t;
}

/// Σ = simple reflections, H = G. Asserts the result is Garside.
inline GermTable classical_germ(const CoxeterSpec& spec) {
  TightContext ctx(build_group(spec), GeneratorKind::simple_reflections);
  std::vector<GroupIndex> h(ctx.group().size());
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = i;
  auto t = derive_germ(ctx, h);
  if (!is_garside_germ(t).is_garside) throw DiagnosticError("classical germ failed the Garside check");
  return t;
}

/// Σ = all reflections, H = the Σ-prefixes of the Coxeter element taken in
/// `order` (indices of simple reflections; default is index order).
inline GermTable dual_germ(const CoxeterSpec& spec, const std::optional<std::vector<std::size_t>>& order = std::nullopt) {
  TightContext ctx(build_group(spec), GeneratorKind::all_reflections);
  const auto c = order ? ctx.group().coxeter_element(*order) : ctx.group().coxeter_element();
  auto t = derive_germ(ctx, ctx.prefixes_of(c));
  if (!is_garside_germ(t).is_garside) throw DiagnosticError("dual germ failed the Garside check");
  return t;
}

/// Hypotheses under which a derived germ is known to be Garside. Witnesses
/// are group indices.
struct DerivationReport {
  bool suffix_closed = true;
  std::optional<std::pair<GroupIndex, GroupIndex>> suffix_witness;  // (h, f): f suffix of h, f ∉ H
  bool prefix_closed = true;
  std::optional<std::pair<GroupIndex, GroupIndex>> prefix_witness;  // (h, f): f prefix of h, f ∉ H
  bool generator_lubs = true;  // bounded pairs of generators have a least bound in H
  std::optional<std::pair<GroupIndex, GroupIndex>> generator_lub_witness;
  bool lub_compatible = true;  // f•σ, f•σ′ defined ⇒ f•(σ∨σ′) defined
  std::optional<std::vector<GroupIndex>> compatibility_witness;  // (f, σ, σ′, lub)
  bool lattice = true;  // any two elements of H have a least upper bound in H
  std::optional<std::pair<GroupIndex, GroupIndex>> lattice_witness;

  bool generator_criterion() const { return suffix_closed && prefix_closed && generator_lubs && lub_compatible; }
  bool lattice_criterion() const { return suffix_closed && prefix_closed && lattice; }
};

inline DerivationReport check_derivation_hypotheses(const TightContext& ctx, const std::vector<GroupIndex>& h) {
  DerivationReport r;
  const auto& grp = ctx.group();
  std::vector<bool> in_h(grp.size(), false);
  for (auto g : h) in_h.at(g) = true;

  for (auto u : h) {
    for (GroupIndex f = 0; f < grp.size(); ++f) {
      if (in_h[f]) continue;
      if (r.suffix_closed && ctx.is_suffix(f, u)) {
        r.suffix_closed = false;
        r.suffix_witness = {u, f};
      }
      if (r.prefix_closed && ctx.is_prefix(f, u)) {
        r.prefix_closed = false;
        r.prefix_witness = {u, f};
      }
    }
  }

  auto defined = [&](GroupIndex f, GroupIndex g) { return in_h[grp.multiply(f, g)] && ctx.is_tight(f, g); };
  const auto& sig = ctx.sigma();
  for (std::size_t i = 0; i < sig.size(); ++i) {
    for (std::size_t j = 0; j < sig.size(); ++j) {
      const auto s = sig[i], s2 = sig[j];
      bool bounded = false;
      for (auto u : h) bounded = bounded || (ctx.is_prefix(s, u) && ctx.is_prefix(s2, u));
      if (!bounded) continue;
      const auto lub = ctx.prefix_lub(h, s, s2);
      if (!lub) {
        if (r.generator_lubs) {
          r.generator_lubs = false;
          r.generator_lub_witness = {s, s2};
        }
        continue;
      }
      if (!r.lub_compatible) continue;
      for (auto f : h) {
        if (defined(f, s) && defined(f, s2) && !defined(f, *lub)) {
          r.lub_compatible = false;
          r.compatibility_witness = std::vector<GroupIndex>{f, s, s2, *lub};
          break;
        }
      }
    }
  }

  for (std::size_t i = 0; i < h.size() && r.lattice; ++i) {
    for (std::size_t j = i + 1; j < h.size(); ++j) {
      if (!ctx.prefix_lub(h, h[i], h[j])) {
        r.lattice = false;
        r.lattice_witness = {h[i], h[j]};
        break;
      }
    }
  }
  return r;
}

}  // namespace garside

#endif  // GARSIDE_COXETER_HPP
