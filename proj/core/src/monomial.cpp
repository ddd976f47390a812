#include "evarlab/algebra/monomial.hpp"

#include <algorithm>

#include "evarlab/errors.hpp"

namespace evarlab::algebra {

Monomial Monomial::var(VarId v, std::uint32_t e) {
  Monomial m;
  if (e > 0) m.entries_.push_back({v, e});
  return m;
}

Monomial Monomial::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  Monomial m;
  for (const auto& [v, e] : entries) {
    if (e == 0) continue;
    if (!m.entries_.empty() && m.entries_.back().first == v)
      m.entries_.back().second += e;
    else
      m.entries_.push_back({v, e});
  }
  return m;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& [v, e] : entries_) d += e;
  return d;
}

std::uint32_t Monomial::exponent(VarId v) const {
  for (const auto& [w, e] : entries_)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial out;
  out.entries_.reserve(entries_.size() + rhs.entries_.size());
  auto a = entries_.begin(), b = rhs.entries_.begin();
  while (a != entries_.end() || b != rhs.entries_.end()) {
    if (b == rhs.entries_.end() || (a != entries_.end() && a->first < b->first))
      out.entries_.push_back(*a++);
    else if (a == entries_.end() || b->first < a->first)
      out.entries_.push_back(*b++);
    else {
      out.entries_.push_back({a->first, a->second + b->second});
      ++a;
      ++b;
    }
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end()) {
    while (b != other.entries_.end() && b->first < a->first) ++b;
    if (b == other.entries_.end() || b->first != a->first ||
        b->second < a->second)
      return false;
    ++a;
  }
  return true;
}

std::optional<Monomial> Monomial::divide_into(const Monomial& other) const {
  if (!divides(other)) return std::nullopt;
  Monomial out;
  auto a = entries_.begin();
  for (const auto& [v, e] : other.entries_) {
    std::uint32_t sub = 0;
    if (a != entries_.end() && a->first == v) {
      sub = a->second;
      ++a;
    }
    if (e > sub) out.entries_.push_back({v, e - sub});
  }
  return out;
}

Monomial Monomial::lcm(const Monomial& x, const Monomial& y) {
  Monomial out;
  auto a = x.entries_.begin(), b = y.entries_.begin();
  while (a != x.entries_.end() || b != y.entries_.end()) {
    if (b == y.entries_.end() || (a != x.entries_.end() && a->first < b->first))
      out.entries_.push_back(*a++);
    else if (a == x.entries_.end() || b->first < a->first)
      out.entries_.push_back(*b++);
    else {
      out.entries_.push_back({a->first, std::max(a->second, b->second)});
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::gcd(const Monomial& x, const Monomial& y) {
  Monomial out;
  auto a = x.entries_.begin(), b = y.entries_.begin();
  while (a != x.entries_.end() && b != y.entries_.end()) {
    if (a->first < b->first)
      ++a;
    else if (b->first < a->first)
      ++b;
    else {
      out.entries_.push_back({a->first, std::min(a->second, b->second)});
      ++a;
      ++b;
    }
  }
  return out;
}

bool Monomial::coprime(const Monomial& x, const Monomial& y) {
  auto a = x.entries_.begin(), b = y.entries_.begin();
  while (a != x.entries_.end() && b != y.entries_.end()) {
    if (a->first < b->first)
      ++a;
    else if (b->first < a->first)
      ++b;
    else
      return false;
  }
  return true;
}

bool Monomial::supported_on(const std::vector<bool>& keep) const {
  for (const auto& [v, e] : entries_)
    if (v >= keep.size() || !keep[v]) return false;
  return true;
}

int Monomial::structural_compare(const Monomial& a, const Monomial& b) {
  // Plain lexicographic comparison of dense exponent vectors (variable 0
  // strongest).  Chosen because it is invariant under multiplication by a
  // common monomial, which lets term-by-monomial products keep their storage
  // order without re-sorting.
  auto ia = a.entries_.begin(), ib = b.entries_.begin();
  while (ia != a.entries_.end() && ib != b.entries_.end()) {
    if (ia->first != ib->first) return ia->first < ib->first ? 1 : -1;
    if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
    ++ia;
    ++ib;
  }
  if (ia != a.entries_.end()) return 1;
  if (ib != b.entries_.end()) return -1;
  return 0;
}

}  // namespace evarlab::algebra
