#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string>

namespace dijklab {

/// 1-based vertex number, matching the usual city/node numbering of the
/// input files. index() gives the 0-based matrix offset.
class VertexId {
 public:
  constexpr VertexId() noexcept = default;
  constexpr explicit VertexId(int id) noexcept : id_(id) {}

  static constexpr VertexId from_index(std::size_t index) noexcept {
    return VertexId(static_cast<int>(index) + 1);
  }

  constexpr int value() const noexcept { return id_; }
  constexpr std::size_t index() const noexcept { return static_cast<std::size_t>(id_ - 1); }

  constexpr bool valid_for(std::size_t n) const noexcept {
    return id_ >= 1 && static_cast<std::size_t>(id_) <= n;
  }

  friend constexpr auto operator<=>(const VertexId&, const VertexId&) noexcept = default;

 private:
  int id_{0};
};

using VertexSet = std::set<VertexId>;

inline std::string to_string(VertexId v) { return std::to_string(v.value()); }

}  // namespace dijklab
