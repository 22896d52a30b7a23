// Copyright 2026 The Bellport Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bellport/combinatorics.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <numeric>
#include <thread>

#include "bellport/error.hpp"

namespace bellport::combinatorics {

Arrangement::Arrangement(std::vector<int> occupations) : occupations_(std::move(occupations)) {
  if (occupations_.empty()) throw InvalidArgument("arrangement must have at least one port");
  long long sum = 0;
  for (int s : occupations_) {
    if (s < 0) throw InvalidArgument("occupations must be non-negative");
    sum += s;
  }
  if (sum != static_cast<long long>(occupations_.size())) {
    throw InvalidArgument("occupations sum to " + std::to_string(sum) + ", expected " +
                          std::to_string(occupations_.size()));
  }
}

Arrangement Arrangement::parse(std::string_view literal) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = literal.find(',', pos);
    std::string_view token = literal.substr(pos, comma == std::string_view::npos ? literal.npos : comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size() || value < 0) {
      throw ParseError("invalid occupation '" + std::string(token) + "' in arrangement literal",
                       std::string(token));
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Arrangement(std::move(values));
}

Arrangement Arrangement::coincident(int n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  return Arrangement(std::vector<int>(static_cast<std::size_t>(n), 1));
}

int Arrangement::occupied_ports() const noexcept {
  return static_cast<int>(std::count_if(occupations_.begin(), occupations_.end(), [](int s) { return s > 0; }));
}

int Arrangement::ports_with(int count) const noexcept {
  return static_cast<int>(std::count(occupations_.begin(), occupations_.end(), count));
}

double Arrangement::occupation_factorial() const noexcept {
  double f = 1.0;
  for (int s : occupations_)
    for (int k = 2; k <= s; ++k) f *= k;
  return f;
}

std::string Arrangement::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < occupations_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(occupations_[i]);
  }
  return out;
}

std::string Arrangement::compact() const {
  if (std::any_of(occupations_.begin(), occupations_.end(), [](int s) { return s > 9; })) return {};
  std::string out = "(";
  for (int s : occupations_) out += static_cast<char>('0' + s);
  out += ')';
  return out;
}

ModeAssignment mode_assignment(const Arrangement& a) {
  ModeAssignment d;
  d.ports.reserve(static_cast<std::size_t>(a.size()));
  for (int port = 0; port < a.size(); ++port)
    for (int k = 0; k < a[port]; ++k) d.ports.push_back(port + 1);
  return d;
}

double classical_probability(const Arrangement& a) {
  // lgamma keeps n^n and n! representable for every n the kernels accept.
  const int n = a.size();
  double log_p = std::lgamma(n + 1.0) - n * std::log(static_cast<double>(n));
  for (int s : a.occupations()) log_p -= std::lgamma(s + 1.0);
  return std::exp(log_p);
}

int suppression_q(std::span<const int> occupations) {
  const int n = static_cast<int>(occupations.size());
  long long sum = 0;
  for (int port = 0; port < n; ++port) sum += static_cast<long long>(port + 1) * occupations[port];
  return static_cast<int>(sum % n);
}

int suppression_q(const Arrangement& a) { return suppression_q(a.occupations()); }

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 0; i < k; ++i) r = r * static_cast<unsigned>(n - i) / static_cast<unsigned>(i + 1);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t arrangement_count(int n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  return binomial(2 * n - 1, n - 1);
}

namespace {

// Compositions of `total` into `parts` non-negative summands.
std::uint64_t completions(int total, int parts) {
  if (parts == 0) return total == 0 ? 1 : 0;
  return binomial(total + parts - 1, parts - 1);
}

std::vector<int> unrank_parts(int n, std::uint64_t index) {
  std::vector<int> parts(static_cast<std::size_t>(n), 0);
  int remaining = n;
  for (int i = 0; i + 1 < n; ++i) {
    int v = 0;
    while (true) {
      const std::uint64_t block = completions(remaining - v, n - i - 1);
      if (index < block) break;
      index -= block;
      ++v;
    }
    parts[static_cast<std::size_t>(i)] = v;
    remaining -= v;
  }
  parts.back() = remaining;
  return parts;
}

}  // namespace

CompositionCursor::CompositionCursor(int n, std::uint64_t start)
    : n_(n), index_(start), total_(arrangement_count(n)) {
  if (start < total_) parts_ = unrank_parts(n, start);
}

void CompositionCursor::advance() {
  ++index_;
  if (done()) return;
  int last = n_ - 1;
  while (parts_[static_cast<std::size_t>(last)] == 0) --last;
  const int rest = parts_[static_cast<std::size_t>(last)] - 1;
  ++parts_[static_cast<std::size_t>(last - 1)];
  parts_[static_cast<std::size_t>(last)] = 0;
  parts_.back() = rest;
}

Arrangement unrank_arrangement(int n, std::uint64_t index) {
  if (index >= arrangement_count(n)) throw InvalidArgument("composition rank out of range");
  return Arrangement(unrank_parts(n, index));
}

void for_each_arrangement(int n, const std::function<void(std::span<const int>)>& visit) {
  for (CompositionCursor c(n); !c.done(); c.advance()) visit(c.current());
}

std::vector<Arrangement> enumerate_arrangements(int n) {
  std::vector<Arrangement> out;
  out.reserve(arrangement_count(n));
  for_each_arrangement(n, [&](std::span<const int> s) { out.emplace_back(std::vector<int>(s.begin(), s.end())); });
  return out;
}

namespace {

// Image k of the dihedral action: k < n is the shift by k, k >= n the
// reflection followed by shift k - n.
inline int dihedral_entry(std::span<const int> s, int n, int k, int i) {
  if (k < n) return s[static_cast<std::size_t>((i + k) % n)];
  return s[static_cast<std::size_t>(((k - n - i) % n + n) % n)];
}

}  // namespace

bool is_canonical(std::span<const int> s) noexcept {
  const int n = static_cast<int>(s.size());
  const int* p = s.data();
  const int lo = *std::min_element(s.begin(), s.end());
  if (p[0] != lo) return false;
  for (int shift = 1; shift < n; ++shift) {
    for (int i = 0; i < n; ++i) {
      const int idx = i + shift;
      const int v = p[idx < n ? idx : idx - n];
      if (v != p[i]) {
        if (v < p[i]) return false;
        break;
      }
    }
  }
  for (int shift = 0; shift < n; ++shift) {
    for (int i = 0; i < n; ++i) {
      const int idx = shift - i;
      const int v = p[idx >= 0 ? idx : idx + n];
      if (v != p[i]) {
        if (v < p[i]) return false;
        break;
      }
    }
  }
  return true;
}

int orbit_size(std::span<const int> canonical) {
  const int n = static_cast<int>(canonical.size());
  int stabilizer = 0;
  for (int k = 0; k < 2 * n; ++k) {
    bool fixed = true;
    for (int i = 0; i < n && fixed; ++i) fixed = dihedral_entry(canonical, n, k, i) == canonical[static_cast<std::size_t>(i)];
    stabilizer += fixed;
  }
  return 2 * n / stabilizer;
}

std::vector<Arrangement> orbit_members(const Arrangement& a) {
  const int n = a.size();
  std::vector<Arrangement> images;
  images.reserve(static_cast<std::size_t>(2 * n));
  for (int k = 0; k < 2 * n; ++k) {
    std::vector<int> t(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = dihedral_entry(a.occupations(), n, k, i);
    images.emplace_back(std::move(t));
  }
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images;
}

OrbitClass quantum_orbit(const Arrangement& a) {
  auto members = orbit_members(a);
  const int size = static_cast<int>(members.size());
  return OrbitClass{std::move(members.front()), size};
}

std::vector<OrbitClass> enumerate_quantum_classes(int n, int threads) {
  const std::uint64_t total = arrangement_count(n);
  threads = std::max(1, threads);
  const std::uint64_t chunks = std::min<std::uint64_t>(total, static_cast<std::uint64_t>(threads) * 16);
  std::vector<std::vector<OrbitClass>> slots(chunks);
  std::atomic<std::uint64_t> next{0};

  auto worker = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      const std::uint64_t begin = total * c / chunks;
      const std::uint64_t end = total * (c + 1) / chunks;
      auto& out = slots[c];
      for (CompositionCursor cur(n, begin); cur.index() < end; cur.advance()) {
        const auto s = cur.current();
        if (is_canonical(s)) out.push_back(OrbitClass{Arrangement(std::vector<int>(s.begin(), s.end())), orbit_size(s)});
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::vector<OrbitClass> classes;
  std::size_t count = 0;
  for (const auto& s : slots) count += s.size();
  classes.reserve(count);
  for (auto& s : slots) std::move(s.begin(), s.end(), std::back_inserter(classes));
  return classes;
}

ClassicalClass classical_class(const Arrangement& a) {
  ClassicalClass c;
  for (int s : a.occupations())
    if (s > 0) c.parts.push_back(s);
  std::sort(c.parts.begin(), c.parts.end(), std::greater<>());
  return c;
}

std::vector<ClassicalClass> enumerate_classical_classes(int n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  std::vector<ClassicalClass> out;
  std::vector<int> p{n};
  while (true) {
    out.push_back(ClassicalClass{p});
    // Strip trailing ones, decrement the last larger part, refill greedily.
    int ones = 0;
    while (!p.empty() && p.back() == 1) {
      p.pop_back();
      ++ones;
    }
    if (p.empty()) break;
    const int part = --p.back();
    int rest = ones + 1;
    while (rest > 0) {
      const int take = std::min(part, rest);
      p.push_back(take);
      rest -= take;
    }
  }
  return out;
}

}  // namespace bellport::combinatorics
