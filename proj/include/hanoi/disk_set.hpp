#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace hanoi {

/// Finite set of disk labels, kept strictly increasing.
class DiskSet {
 public:
  DiskSet() = default;
  DiskSet(std::initializer_list<std::uint64_t> labels);

  /// Sorts and deduplicates.
  static DiskSet from_unsorted(std::vector<std::uint64_t> labels);
  /// Requires strictly increasing input; throws std::invalid_argument otherwise.
  static DiskSet from_sorted(std::vector<std::uint64_t> labels);
  /// [n] = {0, ..., n-1}.
  static DiskSet range(std::uint64_t n);
  /// Comma-separated labels, e.g. "0,2,5". Empty text is the empty set.
  static DiskSet parse(std::string_view text);

  bool empty() const noexcept { return elements_.empty(); }
  std::size_t size() const noexcept { return elements_.size(); }
  std::uint64_t max() const;
  bool contains(std::uint64_t label) const;
  const std::vector<std::uint64_t>& elements() const noexcept { return elements_; }

  DiskSet without(std::uint64_t label) const;
  DiskSet set_union(const DiskSet& other) const;
  /// Number of elements >= bound.
  std::size_t count_at_least(std::uint64_t bound) const;
  bool is_subset_of(const DiskSet& other) const;

  std::string to_string() const;

  friend bool operator==(const DiskSet&, const DiskSet&) = default;

 private:
  std::vector<std::uint64_t> elements_;
};

}  // namespace hanoi
