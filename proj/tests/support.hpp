#ifndef GARSIDE_TESTS_SUPPORT_HPP
#define GARSIDE_TESTS_SUPPORT_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "garside/garside.hpp"

namespace garside::testing {

/// Copy of `t` with element names replaced through `names` (unlisted names
/// are kept).
inline GermTable renamed(const GermTable& t, const std::map<std::string, std::string>& names) {
  auto els = t.elements();
  for (auto& e : els) {
    auto it = names.find(e.name);
    if (it != names.end()) e.name = it->second;
  }
  return GermTable(t.object_names(), els, t.identities(), t.products());
}

/// Classical germ of S₃ with letters e, a, b, ab, ba, Δ.
inline GermTable s3_classical() {
  return renamed(classical_germ({CoxeterFamily::A, 3}),
                 {{"(1 2)", "a"}, {"(2 3)", "b"}, {"(1 3 2)", "ab"}, {"(1 2 3)", "ba"}, {"(1 3)", "Δ"}});
}

inline ElementId el(const GermTable& t, const std::string& name) {
  auto id = t.find_element(name);
  if (!id) throw std::runtime_error("no element named " + name);
  return *id;
}

inline PathWord word(const GermTable& t, const std::vector<std::string>& names) {
  std::vector<ElementId> ids;
  for (const auto& n : names) ids.push_back(el(t, n));
  return PathWord::of(t, ids);
}

inline std::vector<std::string> names_of(const GermTable& t, const std::vector<ElementId>& w) {
  std::vector<std::string> out;
  for (auto g : w) out.push_back(t.name(g));
  return out;
}

inline GermTable identity_germ() {
  GermBuilder b;
  const auto x = b.add_object("x");
  b.add_identity("1", x);
  return b.identity_products().build();
}

/// {1, e, ē} with e • ē = ē • e = 1.
inline GermTable inverse_pair_germ() {
  GermBuilder b;
  const auto x = b.add_object("x");
  const auto one = b.add_identity("1", x);
  const auto e = b.add_element("e", x, x);
  const auto ebar = b.add_element("ē", x, x);
  b.identity_products().product(e, ebar, one).product(ebar, e, one);
  return b.build();
}

/// {1, s, a, as} inside N × Z/2: s•s = 1, a•s = s•a = as, s•as = as•s = a.
inline GermTable parity_germ() {
  GermBuilder b;
  const auto x = b.add_object("x");
  const auto one = b.add_identity("1", x);
  const auto s = b.add_element("s", x, x);
  const auto a = b.add_element("a", x, x);
  const auto as = b.add_element("as", x, x);
  b.identity_products().product(s, s, one).product(a, s, as).product(s, a, as).product(s, as, a).product(as, s, a);
  return b.build();
}

/// Right-divisor-closed piece {1, a, b, ab, x, xa, xb} of the free
/// commutative-on-{a,b} monoid over x, a, b. J(x, ab) = {1, a, b} has no
/// greatest element.
inline GermTable no_greatest_j_germ() {
  GermBuilder b;
  const auto o = b.add_object("o");
  b.add_identity("1", o);
  const auto a = b.add_element("a", o, o);
  const auto bb = b.add_element("b", o, o);
  const auto ab = b.add_element("ab", o, o);
  const auto x = b.add_element("x", o, o);
  const auto xa = b.add_element("xa", o, o);
  const auto xb = b.add_element("xb", o, o);
  b.identity_products().product(a, bb, ab).product(bb, a, ab).product(x, a, xa).product(x, bb, xb);
  return b.build();
}

/// Two objects x, y with one arrow u: x → y (a free-category germ).
inline GermTable arrow_germ() {
  GermBuilder b;
  const auto x = b.add_object("x");
  const auto y = b.add_object("y");
  b.add_identity("1x", x);
  b.add_identity("1y", y);
  b.add_element("u", x, y);
  return b.identity_products().build();
}

/// ≡-class oracle built only from the product table: the closure of an
/// identity-free word under contraction and expansion into two
/// non-identity factors, restricted to words of at most `max_len` entries.
/// For germs without nontrivial invertibles this is the identity-free part
/// of the ≡-class once `max_len` bounds every representative.
class ClosureOracle {
 public:
  ClosureOracle(const GermTable& t, std::size_t max_len) : t_(t), div_(t), max_len_(max_len) {
    const std::size_t n = t.num_elements();
    factorizations_.resize(n);
    for (const auto& p : t.products()) {
      if (!t.is_identity(p.left) && !t.is_identity(p.right)) {
        factorizations_[p.result.index()].push_back({p.left, p.right});
      }
    }
  }

  using Word = std::vector<ElementId>;

  static Word trimmed(const GermTable& t, const Word& w) {
    Word out;
    for (auto g : w) {
      if (!t.is_identity(g)) out.push_back(g);
    }
    return out;
  }

  const std::set<Word>& closure(const Word& w) {
    const Word start = trimmed(t_, w);
    auto known = class_of_.find(start);
    if (known != class_of_.end()) return classes_[known->second];
    std::set<Word> seen{start};
    std::vector<Word> todo{start};
    while (!todo.empty()) {
      Word cur = std::move(todo.back());
      todo.pop_back();
      for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
        if (auto p = t_.product(cur[i], cur[i + 1]); p && !t_.is_identity(*p)) {
          Word nxt(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(i));
          nxt.push_back(*p);
          nxt.insert(nxt.end(), cur.begin() + static_cast<std::ptrdiff_t>(i) + 2, cur.end());
          if (seen.insert(nxt).second) todo.push_back(std::move(nxt));
        }
      }
      if (cur.size() >= max_len_) continue;
      for (std::size_t i = 0; i < cur.size(); ++i) {
        for (auto [f, g] : factorizations_[cur[i].index()]) {
          Word nxt(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(i));
          nxt.push_back(f);
          nxt.push_back(g);
          nxt.insert(nxt.end(), cur.begin() + static_cast<std::ptrdiff_t>(i) + 1, cur.end());
          if (seen.insert(nxt).second) todo.push_back(std::move(nxt));
        }
      }
    }
    const std::size_t id = classes_.size();
    for (const auto& w2 : seen) class_of_.emplace(w2, id);
    classes_.push_back(std::move(seen));
    return classes_.back();
  }

  /// Class index; words sharing an index are ≡-equivalent.
  std::size_t class_id(const Word& w) {
    closure(w);
    return class_of_.at(trimmed(t_, w));
  }

  bool equivalent(const Word& a, const Word& b) { return class_id(a) == class_id(b); }

  /// Oracle greediness: every first entry of a representative of g1·g2
  /// (its left divisors in the category that lie in S) divides g1 locally.
  bool greedy(ElementId g1, ElementId g2) {
    for (const auto& w : closure({g1, g2})) {
      if (!w.empty() && !div_.left_divides(w.front(), g1)) return false;
    }
    return true;
  }

  bool normal(const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (!greedy(w[i], w[i + 1])) return false;
    }
    return true;
  }

 private:
  const GermTable& t_;
  LocalDivisibility div_;
  std::size_t max_len_;
  std::vector<std::vector<std::pair<ElementId, ElementId>>> factorizations_;
  std::map<Word, std::size_t> class_of_;
  std::deque<std::set<Word>> classes_;  // deque keeps returned references valid
};

/// Uniform random composable word of the given length starting at `x`.
inline PathWord random_word(const GermTable& t, std::mt19937& rng, std::size_t len, ObjectId x) {
  std::vector<ElementId> w;
  ObjectId cur = x;
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<ElementId> from;
    for (std::size_t g = 0; g < t.num_elements(); ++g) {
      if (t.source(ElementId{g}) == cur) from.push_back(ElementId{g});
    }
    std::uniform_int_distribution<std::size_t> pick(0, from.size() - 1);
    w.push_back(from[pick(rng)]);
    cur = t.target(w.back());
  }
  return PathWord::of(t, w, x);
}

}  // namespace garside::testing

#endif  // GARSIDE_TESTS_SUPPORT_HPP
