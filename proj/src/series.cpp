#include "hurwitz/series.hpp"

#include <stdexcept>
#include <string>

#include "hurwitz/factorize.hpp"

namespace hurwitz {

namespace {

void require_same_truncation(const PSeries& a, const PSeries& b, const char* op) {
  if (a.truncation() != b.truncation()) {
    throw std::invalid_argument(std::string(op) + ": truncation mismatch (" + std::to_string(a.truncation()) +
                                " vs " + std::to_string(b.truncation()) + ")");
  }
}

template <typename Weight>
PSeries termwise(const PSeries& f, Weight weight) {
  PSeries r(f.truncation());
  for (const auto& [alpha, c] : f.terms()) r.add_term(alpha, c * weight(alpha));
  return r;
}

}  // namespace

PSeries::PSeries(int truncation) : truncation_(truncation) {
  if (truncation < 0) throw std::invalid_argument("negative truncation");
}

PSeries PSeries::monomial(int truncation, const Partition& alpha, const Rational& coeff) {
  PSeries s(truncation);
  s.add_term(alpha, coeff);
  return s;
}

Rational PSeries::coeff(const Partition& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PSeries::add_term(const Partition& alpha, const Rational& value) {
  if (alpha.weight() > truncation_ || value == 0) return;
  auto [it, inserted] = terms_.try_emplace(alpha, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational PSeries::max_abs() const {
  Rational m = 0;
  for (const auto& [alpha, c] : terms_) {
    if (abs(c) > m) m = abs(c);
  }
  return m;
}

int PSeries::max_weight() const noexcept { return terms_.empty() ? -1 : terms_.rbegin()->first.weight(); }

PSeries& PSeries::operator+=(const PSeries& other) {
  require_same_truncation(*this, other, "add");
  for (const auto& [alpha, c] : other.terms_) add_term(alpha, c);
  return *this;
}

PSeries& PSeries::operator-=(const PSeries& other) {
  require_same_truncation(*this, other, "subtract");
  for (const auto& [alpha, c] : other.terms_) add_term(alpha, -c);
  return *this;
}

PSeries& PSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, v] : terms_) v *= c;
  return *this;
}

PSeries operator+(PSeries a, const PSeries& b) { return a += b; }
PSeries operator-(PSeries a, const PSeries& b) { return a -= b; }
PSeries operator*(const Rational& c, PSeries a) { return a *= c; }

PSeries operator*(const PSeries& a, const PSeries& b) {
  require_same_truncation(a, b, "mul");
  PSeries r(a.truncation());
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) {
      if (x.weight() + y.weight() > r.truncation()) break;  // b is ordered by weight
      r.add_term(x.joined(y), cx * cy);
    }
  }
  return r;
}

PSeries add(const PSeries& a, const PSeries& b) { return a + b; }
PSeries scale(const Rational& c, const PSeries& a) { return c * a; }
PSeries mul(const PSeries& a, const PSeries& b) { return a * b; }

PSeries phi(const Partition& alpha, int truncation) {
  return PSeries::monomial(truncation < 0 ? alpha.weight() : truncation, alpha);
}

PSeries d_dp(int i, const PSeries& f) {
  PSeries r(f.truncation());
  for (const auto& [alpha, c] : f.terms()) {
    if (const int m = alpha.multiplicity(i); m > 0) r.add_term(alpha.without_part(i), c * m);
  }
  return r;
}

PSeries euler_z(const PSeries& f) {
  return termwise(f, [](const Partition& a) { return Rational(a.weight()); });
}

PSeries euler_p(const PSeries& f) {
  return termwise(f, [](const Partition& a) { return Rational(a.length()); });
}

PSeries mul_by_p(int i, const PSeries& f) {
  PSeries r(f.truncation());
  for (const auto& [alpha, c] : f.terms()) r.add_term(alpha.with_part(i), c);
  return r;
}

PSeries mul_by_monomial(const Partition& alpha, const PSeries& f) {
  PSeries r(f.truncation());
  for (const auto& [beta, c] : f.terms()) r.add_term(beta.joined(alpha), c);
  return r;
}

PSeries euler_shift(const PSeries& f) {
  return termwise(f, [](const Partition& a) { return Rational(a.weight() + a.length() - 2); });
}

Rational u_weight(int d, const Partition& alpha) { return mu(d, alpha).value; }

PSeries du_at_one(int d, const PSeries& f) {
  return termwise(f, [d](const Partition& a) { return u_weight(d, a); });
}

PSeries build_F(int d, int N, const CountTable& counts) {
  PSeries f(N);
  for (const auto& alpha : partitions_up_to(N)) {
    const auto m = mu(d, alpha);
    if (!m.admissible) continue;
    const int k = m.as_int();
    const auto h = counts.find({alpha.weight(), d, k, alpha, true});
    if (!h) {
      throw std::out_of_range("build_F: missing count for (n=" + std::to_string(alpha.weight()) + ", alpha=(" +
                              alpha.str() + "))");
    }
    if (*h == 0) continue;
    f.add_term(alpha, ratio(class_size(alpha) * *h, factorial(alpha.weight()) * factorial(k)));
  }
  return f;
}

}  // namespace hurwitz
