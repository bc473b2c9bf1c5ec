#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <utility>
#include <string>
#include <string_view>
#include <vector>

namespace jtk {

/// Weakly decreasing tuple of nonnegative integers; trailing zeros are dropped.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidArgument if parts are not weakly decreasing.
  explicit Partition(std::vector<unsigned> parts);
  /// "2,1", "3", "0" or "" for the empty partition; surrounding parentheses allowed.
  static Partition parse(std::string_view text);

  const std::vector<unsigned>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  unsigned size() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }
  /// λ_i (0-based), 0 beyond the length.
  unsigned operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  /// Diagram containment: *this ≥ mu iff λ_i ≥ μ_i for all i.
  bool contains(const Partition& mu) const noexcept;
  /// (λ_{l+1}, λ_{l+2}, ...).
  Partition drop_first(std::size_t l) const;
  /// λ + ε_i if that is still a partition.
  std::optional<Partition> add_box(std::size_t i) const;
  /// Parts padded with zeros to length n.
  std::vector<unsigned> padded(std::size_t n) const;

  /// "(2,1)"; the empty partition prints as "(0)".
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<unsigned> parts_;
};

/// Partitions of n with at most max_len parts, in reverse-lexicographic order.
std::vector<Partition> partitions_of(unsigned n, std::size_t max_len);

/// Rectangles (n_s, l_s) of λ: λ = ⋃ n_s^{(l_s)} with distinct part values n_s
/// occurring up to position l_s.
std::vector<std::pair<unsigned, std::size_t>> rectangular_decomposition(const Partition& lambda);
/// n^{(l)} = (n, ..., n) with l parts.
Partition rectangle(unsigned n, std::size_t l);

}  // namespace jtk
