#ifndef GARSIDE_GERM_HPP
#define GARSIDE_GERM_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "garside/errors.hpp"
#include "garside/ids.hpp"

namespace garside {

struct ElementInfo {
  std::string name;
  ObjectId source;
  ObjectId target;

  friend bool operator==(const ElementInfo&, const ElementInfo&) = default;
};

/// One defined instance `left • right = result` of the partial product.
struct ProductEntry {
  ElementId left;
  ElementId right;
  ElementId result;

  friend auto operator<=>(const ProductEntry&, const ProductEntry&) = default;
};

/// A finite germ: a precategory with distinguished identities and a partial
/// product stored as an explicit table. Absence of an entry means the product
/// is undefined.
///
/// Construction checks structure only (ids in range, one identity per object
/// with matching endpoints, composable product arguments, no conflicting
/// entries, unique names). The germ axioms themselves are decided by
/// `validate_germ`. Instances are immutable.
class GermTable {
 public:
  GermTable(std::vector<std::string> objects, std::vector<ElementInfo> elements,
            std::vector<ElementId> identities, const std::vector<ProductEntry>& products)
      : objects_(std::move(objects)), elements_(std::move(elements)), identities_(std::move(identities)) {
    const std::size_t n = elements_.size();
    if (objects_.empty()) throw StructuralError("germ has no objects");
    if (identities_.size() != objects_.size()) {
      throw StructuralError("identity table has " + std::to_string(identities_.size()) + " entries for " +
                            std::to_string(objects_.size()) + " objects");
    }
    for (std::size_t i = 0; i < objects_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (objects_[i] == objects_[j]) throw StructuralError("duplicate object name '" + objects_[i] + "'");
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      const auto& e = elements_[i];
      if (e.source.index() >= objects_.size() || e.target.index() >= objects_.size()) {
        throw StructuralError("element " + std::to_string(i) + " ('" + e.name + "') has an out-of-range endpoint");
      }
      auto [it, inserted] = by_name_.emplace(e.name, ElementId{i});
      if (!inserted) throw StructuralError("duplicate element name '" + e.name + "'");
    }
    is_identity_.assign(n, false);
    for (std::size_t x = 0; x < objects_.size(); ++x) {
      const ElementId id = identities_[x];
      if (id.index() >= n) {
        throw StructuralError("identity of object '" + objects_[x] + "' is an out-of-range element id " +
                              std::to_string(id.value));
      }
      const auto& e = elements_[id.index()];
      if (e.source.index() != x || e.target.index() != x) {
        throw StructuralError("identity of object '" + objects_[x] + "' ('" + e.name +
                              "') does not have that object as source and target");
      }
      if (is_identity_[id.index()]) throw StructuralError("element '" + e.name + "' is the identity of two objects");
      is_identity_[id.index()] = true;
    }
    table_.assign(n * n, kUndefined);
    for (const auto& p : products) {
      if (p.left.index() >= n || p.right.index() >= n || p.result.index() >= n) {
        throw StructuralError("product entry [" + std::to_string(p.left.value) + ", " +
                              std::to_string(p.right.value) + ", " + std::to_string(p.result.value) +
                              "] has an out-of-range element id");
      }
      if (elements_[p.left.index()].target != elements_[p.right.index()].source) {
        throw StructuralError("product entry [" + name(p.left) + ", " + name(p.right) + "] is not composable");
      }
      auto& slot = table_[p.left.index() * n + p.right.index()];
      if (slot != kUndefined && slot != p.result.value) {
        throw StructuralError("conflicting product entries for [" + name(p.left) + ", " + name(p.right) + "]");
      }
      slot = p.result.value;
    }
  }

  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_elements() const { return elements_.size(); }

  const std::string& object_name(ObjectId x) const { return objects_.at(x.index()); }
  const std::vector<std::string>& object_names() const { return objects_; }
  const ElementInfo& element(ElementId g) const { return elements_.at(g.index()); }
  const std::vector<ElementInfo>& elements() const { return elements_; }
  const std::string& name(ElementId g) const { return elements_.at(g.index()).name; }
  ObjectId source(ElementId g) const { return elements_[g.index()].source; }
  ObjectId target(ElementId g) const { return elements_[g.index()].target; }

  ElementId identity(ObjectId x) const { return identities_.at(x.index()); }
  const std::vector<ElementId>& identities() const { return identities_; }
  bool is_identity(ElementId g) const { return is_identity_[g.index()]; }

  bool composable(ElementId f, ElementId g) const { return target(f) == source(g); }

  std::optional<ElementId> product(ElementId f, ElementId g) const {
    const auto v = table_[f.index() * elements_.size() + g.index()];
    if (v == kUndefined) return std::nullopt;
    return ElementId{v};
  }
  bool defined(ElementId f, ElementId g) const {
    return table_[f.index() * elements_.size() + g.index()] != kUndefined;
  }

  /// All defined entries in lexicographic (left, right) order.
  std::vector<ProductEntry> products() const {
    std::vector<ProductEntry> out;
    const std::size_t n = elements_.size();
    for (std::size_t f = 0; f < n; ++f) {
      for (std::size_t g = 0; g < n; ++g) {
        const auto v = table_[f * n + g];
        if (v != kUndefined) out.push_back({ElementId{f}, ElementId{g}, ElementId{v}});
      }
    }
    return out;
  }

  std::optional<ElementId> find_element(std::string_view n) const {
    auto it = by_name_.find(std::string(n));
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<ObjectId> find_object(std::string_view n) const {
    for (std::size_t i = 0; i < objects_.size(); ++i) {
      if (objects_[i] == n) return ObjectId{i};
    }
    return std::nullopt;
  }

  /// A copy with the entry for (f, g) removed; used to build controlled
  /// counterexamples.
  GermTable without_product(ElementId f, ElementId g) const {
    auto entries = products();
    std::erase_if(entries, [&](const ProductEntry& p) { return p.left == f && p.right == g; });
    return GermTable(objects_, elements_, identities_, entries);
  }

  GermTable with_product(ElementId f, ElementId g, ElementId h) const {
    auto entries = products();
    std::erase_if(entries, [&](const ProductEntry& p) { return p.left == f && p.right == g; });
    entries.push_back({f, g, h});
    return GermTable(objects_, elements_, identities_, entries);
  }

  friend bool operator==(const GermTable& a, const GermTable& b) {
    return a.objects_ == b.objects_ && a.elements_ == b.elements_ && a.identities_ == b.identities_ &&
           a.table_ == b.table_;
  }

 private:
  static constexpr std::uint32_t kUndefined = 0xffffffffu;

  std::vector<std::string> objects_;
  std::vector<ElementInfo> elements_;
  std::vector<ElementId> identities_;
  std::vector<bool> is_identity_;
  std::vector<std::uint32_t> table_;
  std::unordered_map<std::string, ElementId> by_name_;
};

/// Incremental construction of a `GermTable`, convenient for hand-built germs.
class GermBuilder {
 public:
  ObjectId add_object(std::string name) {
    objects_.push_back(std::move(name));
    identities_.push_back(std::nullopt);
    return ObjectId{objects_.size() - 1};
  }

  ElementId add_element(std::string name, ObjectId source, ObjectId target) {
    elements_.push_back({std::move(name), source, target});
    return ElementId{elements_.size() - 1};
  }

  /// Adds an element and registers it as the identity of `x`.
  ElementId add_identity(std::string name, ObjectId x) {
    const auto id = add_element(std::move(name), x, x);
    identities_.at(x.index()) = id;
    return id;
  }

  GermBuilder& product(ElementId f, ElementId g, ElementId h) {
    products_.push_back({f, g, h});
    return *this;
  }

  /// Adds the entries 1_x • f = f = f • 1_y for every element.
  GermBuilder& identity_products() {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      const ElementId g{i};
      const auto& e = elements_[i];
      if (auto s = identities_.at(e.source.index())) products_.push_back({*s, g, g});
      if (auto t = identities_.at(e.target.index())) products_.push_back({g, *t, g});
    }
    return *this;
  }

  GermTable build() const {
    std::vector<ElementId> ids;
    for (std::size_t x = 0; x < identities_.size(); ++x) {
      if (!identities_[x]) throw StructuralError("object '" + objects_[x] + "' has no identity");
      ids.push_back(*identities_[x]);
    }
    auto entries = products_;
    std::sort(entries.begin(), entries.end());
    entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
    return GermTable(objects_, elements_, std::move(ids), entries);
  }

 private:
  std::vector<std::string> objects_;
  std::vector<std::optional<ElementId>> identities_;
  std::vector<ElementInfo> elements_;
  std::vector<ProductEntry> products_;
};

}  // namespace garside

#endif  // GARSIDE_GERM_HPP
