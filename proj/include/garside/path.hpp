#ifndef GARSIDE_PATH_HPP
#define GARSIDE_PATH_HPP

#include <string>
#include <utility>
#include <vector>

#include "garside/errors.hpp"
#include "garside/germ.hpp"
#include "garside/ids.hpp"

namespace garside {

/// A composable sequence of germ elements. The empty path carries its object
/// explicitly.
class PathWord {
 public:
  static PathWord empty(ObjectId x) { return PathWord(x, x, {}); }

  /// Checks composability of consecutive entries.
  static PathWord of(const GermTable& t, std::vector<ElementId> entries) {
    if (entries.empty()) throw PreconditionError("empty word needs an explicit object");
    for (auto g : entries) {
      if (g.index() >= t.num_elements()) throw PreconditionError("element id out of range in word");
    }
    for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
      if (!t.composable(entries[i], entries[i + 1])) {
        throw PreconditionError("word is not composable at position " + std::to_string(i) + " ('" +
                                t.name(entries[i]) + "', '" + t.name(entries[i + 1]) + "')");
      }
    }
    const ObjectId s = t.source(entries.front());
    const ObjectId e = t.target(entries.back());
    return PathWord(s, e, std::move(entries));
  }

  /// Like `of`, but an empty `entries` yields the empty path at `x`.
  static PathWord of(const GermTable& t, std::vector<ElementId> entries, ObjectId x) {
    if (entries.empty()) return empty(x);
    return of(t, std::move(entries));
  }

  const std::vector<ElementId>& entries() const { return entries_; }
  ObjectId source() const { return source_; }
  ObjectId target() const { return target_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  ElementId operator[](std::size_t i) const { return entries_[i]; }

  /// Concatenation; the target of `*this` must be the source of `w`.
  PathWord then(const PathWord& w) const {
    if (target_ != w.source_) throw PreconditionError("concatenated words are not composable");
    auto e = entries_;
    e.insert(e.end(), w.entries_.begin(), w.entries_.end());
    return PathWord(source_, w.target_, std::move(e));
  }

  /// Removes identity entries; the result is ≡-equivalent.
  PathWord without_identities(const GermTable& t) const {
    std::vector<ElementId> e;
    for (auto g : entries_) {
      if (!t.is_identity(g)) e.push_back(g);
    }
    return PathWord(source_, target_, std::move(e));
  }

  friend bool operator==(const PathWord&, const PathWord&) = default;

 private:
  PathWord(ObjectId s, ObjectId t, std::vector<ElementId> e) : source_(s), target_(t), entries_(std::move(e)) {}

  ObjectId source_;
  ObjectId target_;
  std::vector<ElementId> entries_;
};

/// Canonical normal-form word produced by `CategoryEngine`.
class NormalForm {
 public:
  const PathWord& word() const { return word_; }
  const std::vector<ElementId>& entries() const { return word_.entries(); }
  ObjectId source() const { return word_.source(); }
  ObjectId target() const { return word_.target(); }
  std::size_t size() const { return word_.size(); }
  bool empty() const { return word_.empty(); }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;

 private:
  friend class CategoryEngine;
  explicit NormalForm(PathWord w) : word_(std::move(w)) {}
  PathWord word_;
};

}  // namespace garside

#endif  // GARSIDE_PATH_HPP
