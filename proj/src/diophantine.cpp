#include "decomp/diophantine.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace decomp {

namespace {

std::string key_str(int m, std::int64_t z) {
  return "(m=" + std::to_string(m) + ", z=" + std::to_string(z) + ")";
}

// Emits multiplicity vectors in the frozen order: the count of the largest
// part first, descending, then recursively the smaller parts.
void emit_solutions(int part, std::int64_t remaining, std::vector<std::int32_t>& cur,
                    std::vector<std::int32_t>& flat) {
  if (part == 1) {
    cur[0] = static_cast<std::int32_t>(remaining);
    flat.insert(flat.end(), cur.begin(), cur.end());
    cur[0] = 0;
    return;
  }
  for (std::int64_t c = remaining / part; c >= 0; --c) {
    cur[part - 1] = static_cast<std::int32_t>(c);
    emit_solutions(part - 1, remaining - static_cast<std::int64_t>(part) * c, cur, flat);
  }
  cur[part - 1] = 0;
}

// true when a sorts after b in the frozen (reverse-lexicographic) order
bool comes_before(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  for (std::size_t j = a.size(); j-- > 0;) {
    if (a[j] != b[j]) return a[j] > b[j];
  }
  return false;
}

}  // namespace

SolutionSet::SolutionSet(int m, std::int64_t z, std::vector<std::int32_t> flat)
    : m_(m), z_(z), count_(flat.size() / static_cast<std::size_t>(m)), flat_(std::move(flat)) {
  assert(m_ >= 1 && flat_.size() % static_cast<std::size_t>(m_) == 0);
#ifndef NDEBUG
  for (std::size_t i = 0; i < count_; ++i) {
    std::int64_t total = 0;
    const auto row = at(i);
    for (int j = 0; j < m_; ++j) total += static_cast<std::int64_t>(j + 1) * row[j];
    assert(total == z_);
  }
#endif
}

std::span<const std::int32_t> SolutionSet::at(std::size_t idx) const {
  assert(idx < count_);
  return {flat_.data() + idx * static_cast<std::size_t>(m_), static_cast<std::size_t>(m_)};
}

std::pair<std::size_t, std::size_t> SolutionSet::neighbor_pair(std::size_t idx) const {
  if (count_ < 2) {
    throw Error(Errc::no_neighbors, "solution set " + key_str(m_, z_) + " has a single element");
  }
  if (idx == 0) return {1, count_ - 1};
  if (idx == count_ - 1) return {0, count_ - 2};
  return {idx - 1, idx + 1};
}

std::size_t SolutionSet::index_of(std::span<const std::int32_t> k) const {
  if (k.size() != static_cast<std::size_t>(m_)) {
    throw Error(Errc::not_found, "index_of: vector length does not match m");
  }
  std::size_t lo = 0, hi = count_;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (comes_before(at(mid), k)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < count_ && std::ranges::equal(at(lo), k)) return lo;
  throw Error(Errc::not_found, "index_of: vector is not a member of " + key_str(m_, z_));
}

std::uint64_t bounded_partition_count(std::int64_t z, int m) {
  if (z < 0 || m < 1) throw Error(Errc::invalid_argument, "bounded_partition_count: bad args");
  constexpr std::uint64_t kCap = std::uint64_t{1} << 63;
  // table[t] = number of partitions of t into parts <= current bound
  std::vector<std::uint64_t> table(static_cast<std::size_t>(z) + 1, 0);
  table[0] = 1;
  for (int part = 1; part <= m; ++part) {
    for (std::int64_t t = part; t <= z; ++t) {
      const std::uint64_t add = table[static_cast<std::size_t>(t - part)];
      std::uint64_t& cell = table[static_cast<std::size_t>(t)];
      cell = (cell > kCap - add) ? kCap : cell + add;
    }
  }
  return table[static_cast<std::size_t>(z)];
}

SolutionSet enumerate_solutions(int m, std::int64_t z, std::uint64_t max_bytes) {
  if (m < 1) throw Error(Errc::invalid_argument, "enumerate_solutions: m must be >= 1");
  if (z < 0) throw Error(Errc::invalid_argument, "enumerate_solutions: z must be >= 0");
  const std::uint64_t count = bounded_partition_count(z, m);
  const std::uint64_t row_bytes = static_cast<std::uint64_t>(m) * sizeof(std::int32_t);
  if (count > max_bytes / row_bytes) {
    throw Error(Errc::resource_limit,
                "solution set " + key_str(m, z) + " would need " + std::to_string(count) +
                    " solutions of " + std::to_string(row_bytes) + " bytes each, over the " +
                    std::to_string(max_bytes) + "-byte budget");
  }
  std::vector<std::int32_t> flat;
  flat.reserve(static_cast<std::size_t>(count * static_cast<std::uint64_t>(m)));
  std::vector<std::int32_t> cur(static_cast<std::size_t>(m), 0);
  if (z == 0) {
    flat = cur;  // the all-zero row
  } else {
    // parts above z are structurally zero; bounds the recursion depth by z
    emit_solutions(static_cast<int>(std::min<std::int64_t>(m, z)), z, cur, flat);
  }
  return SolutionSet(m, z, std::move(flat));
}

const SolutionSet& SolutionCache::get(int m, std::int64_t z) {
  std::shared_ptr<Entry> entry;
  std::uint64_t remaining = 0;
  {
    std::unique_lock lock(mutex_);
    auto& slot = entries_[{m, z}];
    if (!slot) slot = std::make_shared<Entry>();
    entry = slot;
    remaining = budget_ > bytes_used_ ? budget_ - bytes_used_ : 0;
  }
  std::call_once(entry->once, [&] {
    try {
      auto set = std::make_unique<SolutionSet>(enumerate_solutions(m, z, remaining));
      std::unique_lock lock(mutex_);
      bytes_used_ += set->bytes();
      entry->set = std::move(set);
    } catch (...) {
      entry->error = std::current_exception();
    }
  });
  if (entry->error) std::rethrow_exception(entry->error);
  return *entry->set;
}

std::uint64_t SolutionCache::bytes_used() const noexcept {
  std::shared_lock lock(mutex_);
  return bytes_used_;
}

}  // namespace decomp
