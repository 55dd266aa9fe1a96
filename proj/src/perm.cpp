#include "hurwitz/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace hurwitz {

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(n)) {
  if (n < 0) throw std::invalid_argument("negative permutation degree");
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(images.size(), false);
  for (int& x : images) {
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x - 1)]) {
      throw std::invalid_argument("image list is not a permutation of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(x - 1)] = true;
    --x;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation p(n);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int x = c[i];
      if (x < 1 || x > n) throw std::invalid_argument("cycle point out of range: " + std::to_string(x));
      if (used[static_cast<std::size_t>(x - 1)]) {
        throw std::invalid_argument("cycles are not disjoint at point " + std::to_string(x));
      }
      used[static_cast<std::size_t>(x - 1)] = true;
      p.images_[static_cast<std::size_t>(x - 1)] = c[(i + 1) % c.size()] - 1;
    }
  }
  return p;
}

Permutation Permutation::parse(std::string_view text, int n) {
  std::vector<std::vector<int>> cycles;
  int largest = 0;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' in permutation text");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw std::invalid_argument("unterminated cycle in permutation text");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw std::invalid_argument("unexpected character in permutation text");
      }
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      cycle.push_back(v);
      largest = std::max(largest, v);
    }
    if (cycle.empty()) throw std::invalid_argument("empty cycle in permutation text");
    cycles.push_back(std::move(cycle));
    skip_ws();
  }
  if (n == 0) n = largest;
  return from_cycles(n, cycles);
}

Permutation Permutation::inverse() const {
  Permutation r(degree());
  for (std::size_t x = 0; x < images_.size(); ++x) r.images_[static_cast<std::size_t>(images_[x])] = static_cast<int>(x);
  return r;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != static_cast<int>(x)) return false;
  }
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> c;
    for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(images_[x])) {
      seen[x] = true;
      c.push_back(static_cast<int>(x) + 1);
    }
    out.push_back(std::move(c));
  }
  return out;
}

int Permutation::cycle_count() const {
  int count = 0;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    ++count;
    for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(images_[x])) seen[x] = true;
  }
  return count;
}

bool Permutation::is_even() const { return (degree() - cycle_count()) % 2 == 0; }

std::string Permutation::str() const {
  std::string s;
  for (const auto& c : cycles()) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("compose: degree mismatch " + std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()));
  }
  std::vector<int> images(static_cast<std::size_t>(p.degree()));
  const auto& pi = p.images0();
  const auto& qi = q.images0();
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = pi[static_cast<std::size_t>(qi[x])] + 1;
  return Permutation::from_images(std::move(images));
}

Partition cycle_type(const Permutation& p) {
  std::vector<int> lengths;
  for (const auto& c : p.cycles()) lengths.push_back(static_cast<int>(c.size()));
  return Partition(std::move(lengths));
}

Permutation canonical_representative(const Partition& alpha) {
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int part : alpha.parts()) {
    std::vector<int> c(static_cast<std::size_t>(part));
    std::iota(c.begin(), c.end(), next);
    next += part;
    cycles.push_back(std::move(c));
  }
  return Permutation::from_cycles(alpha.weight(), cycles);
}

std::vector<Permutation> all_d_cycles(int n, int d) {
  std::vector<Permutation> out;
  if (d < 2 || d > n) return out;
  // Choose the support, then fix its smallest point first and permute the rest.
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + d, true);
  do {
    std::vector<int> support;
    for (int x = 0; x < n; ++x) {
      if (pick[static_cast<std::size_t>(x)]) support.push_back(x + 1);
    }
    std::vector<int> rest(support.begin() + 1, support.end());
    do {
      std::vector<int> cycle{support.front()};
      cycle.insert(cycle.end(), rest.begin(), rest.end());
      out.push_back(Permutation::from_cycles(n, {cycle}));
    } while (std::next_permutation(rest.begin(), rest.end()));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

bool is_d_cycle(const Permutation& p, int d) {
  int nontrivial = 0;
  for (const auto& c : p.cycles()) {
    if (c.size() == 1) continue;
    if (static_cast<int>(c.size()) != d || ++nontrivial > 1) return false;
  }
  return nontrivial == 1;
}

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Case1: return "Case1";
    case CaseTag::Case2: return "Case2";
    case CaseTag::Case3: return "Case3";
    case CaseTag::Case4: return "Case4";
  }
  return "?";
}

CaseTag classify_3cycle_case(const Permutation& omega, const Permutation& sigma) {
  if (omega.degree() != sigma.degree()) throw std::invalid_argument("classify: degree mismatch");
  if (!is_d_cycle(omega, 3)) throw std::invalid_argument("classify: omega " + omega.str() + " is not a 3-cycle");

  // Read omega as (j3 j2 j1) starting at its smallest moved point.
  int j3 = 0;
  for (int x = 1; x <= omega.degree(); ++x) {
    if (omega(x) != x) {
      j3 = x;
      break;
    }
  }
  const int j2 = omega(j3);
  const int j1 = omega(j2);

  std::vector<int> cycle_of(static_cast<std::size_t>(sigma.degree()) + 1, 0);
  int id = 0;
  for (const auto& c : sigma.cycles()) {
    ++id;
    for (int x : c) cycle_of[static_cast<std::size_t>(x)] = id;
  }
  const int a = cycle_of[static_cast<std::size_t>(j1)];
  const int b = cycle_of[static_cast<std::size_t>(j2)];
  const int c = cycle_of[static_cast<std::size_t>(j3)];
  const int distinct = 1 + (b != a) + (c != a && c != b);
  if (distinct == 3) return CaseTag::Case1;
  if (distinct == 2) return CaseTag::Case2;

  for (int x = sigma(j1);; x = sigma(x)) {
    if (x == j2) return CaseTag::Case3;
    if (x == j3) return CaseTag::Case4;
  }
}

int cycle_count_delta(CaseTag tag) noexcept {
  switch (tag) {
    case CaseTag::Case1: return -2;
    case CaseTag::Case3: return 2;
    case CaseTag::Case2:
    case CaseTag::Case4: return 0;
  }
  return 0;
}

int dist(int j, const Permutation& sigma, const std::array<int, 3>& J) {
  if (std::find(J.begin(), J.end(), j) == J.end()) throw std::invalid_argument("dist: j is not in J");
  int l = 1;
  for (int x = sigma(j); std::find(J.begin(), J.end(), x) == J.end(); x = sigma(x)) ++l;
  return l;
}

std::vector<Permutation> minimal_3cycle_chain(int n) {
  if (n < 3) throw std::invalid_argument("minimal_3cycle_chain requires n >= 3");
  std::vector<Permutation> chain;
  if (n % 2 == 1) {
    const int m = (n - 1) / 2;
    chain.resize(static_cast<std::size_t>(m), Permutation(n));
    for (int i = 1; i <= m; ++i) {
      chain[static_cast<std::size_t>(m - i)] = Permutation::from_cycles(n, {{2 * i + 1, 2 * i, 2 * i - 1}});
    }
  } else {
    const int m = n / 2;
    chain.resize(static_cast<std::size_t>(m), Permutation(n));
    chain[0] = Permutation::from_cycles(n, {{n, n - 1, n - 2}});
    for (int i = 2; i <= m; ++i) {
      chain[static_cast<std::size_t>(m - i + 1)] = Permutation::from_cycles(n, {{2 * i - 1, 2 * i - 2, 2 * i - 3}});
    }
  }
  return chain;
}

}  // namespace hurwitz
