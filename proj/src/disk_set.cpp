#include "hanoi/disk_set.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <stdexcept>

namespace hanoi {

DiskSet::DiskSet(std::initializer_list<std::uint64_t> labels)
    : DiskSet(from_unsorted(std::vector<std::uint64_t>(labels))) {}

DiskSet DiskSet::from_unsorted(std::vector<std::uint64_t> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  DiskSet s;
  s.elements_ = std::move(labels);
  return s;
}

DiskSet DiskSet::from_sorted(std::vector<std::uint64_t> labels) {
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (labels[i - 1] >= labels[i]) {
      throw std::invalid_argument("DiskSet: labels must be strictly increasing");
    }
  }
  DiskSet s;
  s.elements_ = std::move(labels);
  return s;
}

DiskSet DiskSet::range(std::uint64_t n) {
  DiskSet s;
  s.elements_.resize(n);
  for (std::uint64_t i = 0; i < n; ++i) s.elements_[i] = i;
  return s;
}

DiskSet DiskSet::parse(std::string_view text) {
  std::vector<std::uint64_t> labels;
  if (text.empty()) return {};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view token = text.substr(pos, comma - pos);
    std::uint64_t v = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
      throw std::invalid_argument("DiskSet: bad label '" + std::string(token) + "'");
    }
    labels.push_back(v);
    pos = comma + 1;
  }
  return from_unsorted(std::move(labels));
}

std::uint64_t DiskSet::max() const {
  if (elements_.empty()) throw std::logic_error("DiskSet::max of empty set");
  return elements_.back();
}

bool DiskSet::contains(std::uint64_t label) const {
  return std::binary_search(elements_.begin(), elements_.end(), label);
}

DiskSet DiskSet::without(std::uint64_t label) const {
  DiskSet s;
  s.elements_.reserve(elements_.size());
  std::copy_if(elements_.begin(), elements_.end(), std::back_inserter(s.elements_),
               [label](std::uint64_t x) { return x != label; });
  return s;
}

DiskSet DiskSet::set_union(const DiskSet& other) const {
  DiskSet s;
  std::set_union(elements_.begin(), elements_.end(), other.elements_.begin(),
                 other.elements_.end(), std::back_inserter(s.elements_));
  return s;
}

std::size_t DiskSet::count_at_least(std::uint64_t bound) const {
  return static_cast<std::size_t>(
      elements_.end() - std::lower_bound(elements_.begin(), elements_.end(), bound));
}

bool DiskSet::is_subset_of(const DiskSet& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

std::string DiskSet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elements_[i]);
  }
  return out;
}

}  // namespace hanoi
