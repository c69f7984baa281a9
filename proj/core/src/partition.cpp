#include "disclosure/partition.hpp"

#include <algorithm>
#include <string>

#include "disclosure/errors.hpp"

namespace disclosure {

std::uint64_t bell_number(std::size_t n) {
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

std::vector<SetPartition> enumerate_set_partitions(std::size_t n) {
  if (n == 0) throw ValidationError("cannot partition an empty type set");
  if (n > kMaxEnumeratedTypes) {
    throw GuardExceeded("set-partition enumeration limited to " +
                        std::to_string(kMaxEnumeratedTypes) + " types, got " + std::to_string(n));
  }
  std::vector<SetPartition> out;
  out.reserve(bell_number(n));
  // Restricted growth string a[0..n-1]: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<std::size_t> a(n, 0), prefix_max(n, 0);
  for (;;) {
    std::size_t blocks = prefix_max[n - 1] + 1;
    SetPartition p(blocks);
    for (std::size_t i = 0; i < n; ++i) p[a[i]].push_back(i);
    out.push_back(std::move(p));

    std::size_t i = n - 1;
    while (i > 0 && a[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) break;
    ++a[i];
    prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
    for (std::size_t k = i + 1; k < n; ++k) {
      a[k] = 0;
      prefix_max[k] = prefix_max[i];
    }
  }
  return out;
}

std::vector<SetPartition> enumerate_connected_partitions(const std::vector<std::size_t>& order) {
  const std::size_t n = order.size();
  if (n == 0) throw ValidationError("cannot partition an empty type set");
  if (n > 20) throw GuardExceeded("connected enumeration limited to 20 types");
  std::vector<SetPartition> out;
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  out.reserve(count);
  // Bit i of `cuts` set: a block ends after position i; cuts == 0 is the
  // single block.
  for (std::uint64_t cuts = 0; cuts < count; ++cuts) {
    SetPartition p;
    Block cur;
    for (std::size_t i = 0; i < n; ++i) {
      cur.push_back(order[i]);
      if (i + 1 == n || ((cuts >> i) & 1U)) {
        p.push_back(std::move(cur));
        cur.clear();
      }
    }
    out.push_back(canonicalize(std::move(p)));
  }
  return out;
}

SetPartition canonicalize(SetPartition p) {
  for (auto& b : p) std::sort(b.begin(), b.end());
  std::sort(p.begin(), p.end(), [](const Block& x, const Block& y) { return x.front() < y.front(); });
  return p;
}

bool is_partition_of(const SetPartition& p, std::size_t n) {
  std::vector<bool> seen(n, false);
  std::size_t covered = 0;
  for (const auto& b : p) {
    if (b.empty()) return false;
    for (auto i : b) {
      if (i >= n || seen[i]) return false;
      seen[i] = true;
      ++covered;
    }
  }
  return covered == n;
}

SetPartition singletons(std::size_t n) {
  SetPartition p;
  for (std::size_t i = 0; i < n; ++i) p.push_back({i});
  return p;
}

SetPartition single_block(std::size_t n) {
  Block b;
  for (std::size_t i = 0; i < n; ++i) b.push_back(i);
  return {b};
}

// ---------------------------------------------------------------------------

IntervalPartition::IntervalPartition(std::vector<Rational> breakpoints, std::vector<Rational> atoms)
    : breakpoints_(std::move(breakpoints)), atoms_(std::move(atoms)) {
  if (breakpoints_.size() < 2 || breakpoints_.front() != Rational(0) ||
      breakpoints_.back() != Rational(1)) {
    throw ValidationError("interval partition must start at 0 and end at 1");
  }
  for (std::size_t k = 1; k < breakpoints_.size(); ++k) {
    if (!(breakpoints_[k - 1] < breakpoints_[k])) {
      throw ValidationError("interval breakpoints must strictly increase");
    }
  }
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
  for (const auto& a : atoms_) {
    if (a.sign() < 0 || a > Rational(1)) throw ValidationError("atom outside [0, 1]");
  }
}

IntervalPartition IntervalPartition::no_disclosure() {
  return IntervalPartition({Rational(0), Rational(1)});
}

IntervalPartition IntervalPartition::fully_disclosing() {
  IntervalPartition p;
  p.breakpoints_ = {Rational(0), Rational(1)};
  p.full_ = true;
  return p;
}

bool IntervalPartition::is_atom(const Rational& v) const {
  return full_ || std::binary_search(atoms_.begin(), atoms_.end(), v);
}

IntervalPartition::Message IntervalPartition::locate(const Rational& v) const {
  if (v.sign() < 0 || v > Rational(1)) throw ValidationError("value outside [0, 1]");
  if (is_atom(v)) return {v, v, true, true};
  // First k with v <= t_k (k >= 1).
  auto it = std::lower_bound(breakpoints_.begin() + 1, breakpoints_.end(), v);
  const std::size_t k = static_cast<std::size_t>(it - breakpoints_.begin());
  Message m{breakpoints_[k - 1], breakpoints_[k], false, !is_atom(breakpoints_[k])};
  if (k == 1) m.lo_closed = !is_atom(breakpoints_[0]);
  return m;
}

IntervalPartition IntervalPartition::parse(std::string_view text) {
  auto split = [](std::string_view s) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= s.size()) {
      const auto comma = s.find(',', start);
      const auto piece = s.substr(start, comma == std::string_view::npos ? s.npos : comma - start);
      out.push_back(Rational::parse(piece));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return out;
  };
  if (text == "full") return fully_disclosing();
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) return IntervalPartition(split(text));
  return IntervalPartition(split(text.substr(0, bar)), split(text.substr(bar + 1)));
}

std::string IntervalPartition::str() const {
  if (full_) return "full";
  std::string out;
  for (const auto& t : breakpoints_) {
    if (!out.empty()) out += ',';
    out += t.str();
  }
  if (!atoms_.empty()) {
    out += '|';
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      if (i) out += ',';
      out += atoms_[i].str();
    }
  }
  return out;
}

}  // namespace disclosure
