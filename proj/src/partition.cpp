#include "hurwitz/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hurwitz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

int Partition::multiplicity(int part) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

Partition Partition::with_part(int part) const {
  auto parts = parts_;
  parts.push_back(part);
  return Partition(std::move(parts));
}

Partition Partition::without_part(int part) const {
  auto parts = parts_;
  auto it = std::find(parts.begin(), parts.end(), part);
  if (it == parts.end()) {
    throw std::invalid_argument("part " + std::to_string(part) + " not in (" + str() + ")");
  }
  parts.erase(it);
  Partition r;
  r.parts_ = std::move(parts);
  r.weight_ = weight_ - part;
  return r;
}

Partition Partition::joined(const Partition& other) const {
  auto parts = parts_;
  parts.insert(parts.end(), other.parts_.begin(), other.parts_.end());
  return Partition(std::move(parts));
}

bool Partition::contains(const Partition& sub) const noexcept {
  for (int p : sub.parts_) {
    if (sub.multiplicity(p) > multiplicity(p)) return false;
  }
  return true;
}

Partition Partition::minus(const Partition& sub) const {
  if (!contains(sub)) {
    throw std::invalid_argument("(" + sub.str() + ") is not contained in (" + str() + ")");
  }
  Partition r = *this;
  for (int p : sub.parts_) r = r.without_part(p);
  return r;
}

std::string Partition::str() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
  return a.parts_ <=> b.parts_;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_up_to(int nmax) {
  std::vector<Partition> out;
  for (int n = 1; n <= nmax; ++n) {
    auto ps = partitions_of(n);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

BigInt automorphism_count(const Partition& alpha) {
  std::map<int, int> mult;
  for (int p : alpha.parts()) ++mult[p];
  BigInt r = 1;
  for (auto [part, m] : mult) r *= factorial(m);
  return r;
}

BigInt class_size(const Partition& alpha) {
  std::map<int, int> mult;
  for (int p : alpha.parts()) ++mult[p];
  BigInt denom = 1;
  for (auto [part, m] : mult) {
    BigInt rm;
    mpz_ui_pow_ui(rm.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(m));
    denom *= rm * factorial(m);
  }
  return factorial(alpha.weight()) / denom;
}

int MuValue::as_int() const {
  if (!admissible) throw std::domain_error("mu value " + value.get_str() + " is not admissible");
  return static_cast<int>(value.get_num().get_si());
}

MuValue mu(int d, const Partition& alpha) {
  if (d < 2) throw std::invalid_argument("mu requires d >= 2");
  const auto v = ratio(alpha.weight() + alpha.length() - 2, d - 1);
  return {v, is_integral(v) && v >= 0};
}

}  // namespace hurwitz
