#ifndef GARSIDE_IDS_HPP
#define GARSIDE_IDS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>

namespace garside {

/// Dense index of an object of a precategory.
struct ObjectId {
  std::uint32_t value = 0;

  constexpr ObjectId() = default;
  constexpr explicit ObjectId(std::uint32_t v) : value(v) {}
  constexpr explicit ObjectId(std::size_t v) : value(static_cast<std::uint32_t>(v)) {}
  constexpr explicit ObjectId(int v) : value(static_cast<std::uint32_t>(v)) {}

  constexpr std::size_t index() const { return value; }
  friend constexpr auto operator<=>(ObjectId, ObjectId) = default;
};

/// Dense index of an element of a germ.
struct ElementId {
  std::uint32_t value = 0;

  constexpr ElementId() = default;
  constexpr explicit ElementId(std::uint32_t v) : value(v) {}
  constexpr explicit ElementId(std::size_t v) : value(static_cast<std::uint32_t>(v)) {}
  constexpr explicit ElementId(int v) : value(static_cast<std::uint32_t>(v)) {}

  constexpr std::size_t index() const { return value; }
  friend constexpr auto operator<=>(ElementId, ElementId) = default;
};

inline std::ostream& operator<<(std::ostream& os, ObjectId x) { return os << "obj#" << x.value; }
inline std::ostream& operator<<(std::ostream& os, ElementId g) { return os << '#' << g.value; }

}  // namespace garside

template <>
struct std::hash<garside::ElementId> {
  std::size_t operator()(garside::ElementId g) const noexcept { return std::hash<std::uint32_t>{}(g.value); }
};

template <>
struct std::hash<garside::ObjectId> {
  std::size_t operator()(garside::ObjectId x) const noexcept { return std::hash<std::uint32_t>{}(x.value); }
};

#endif  // GARSIDE_IDS_HPP
