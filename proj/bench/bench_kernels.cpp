// Serial vs parallel timings for the factorization DP and the class-algebra product.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "hurwitz/factorize.hpp"
#include "hurwitz/kernels.hpp"
#include "hurwitz/wop.hpp"

using namespace hurwitz;

namespace {

double seconds(const std::function<void()>& f, int reps) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void compare(const std::string& name, const std::function<void(ExecPolicy)>& f, int reps) {
  const double s = seconds([&] { f(ExecPolicy::Serial); }, reps);
  const double p = seconds([&] { f(ExecPolicy::Parallel); }, reps);
  std::printf("%-36s serial %9.4fs  parallel %9.4fs  speedup %5.2fx\n", name.c_str(), s, p, s / p);
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::stoi(argv[1]) : 3;
  std::printf("threads: %d\n", max_threads());

  for (const auto& [n, d, alpha] : {std::tuple{7, 2, Partition{7}}, std::tuple{7, 3, Partition::ones(7)},
                                    std::tuple{8, 3, Partition{3, 3, 1, 1}}, std::tuple{8, 4, Partition{4, 3, 1}}}) {
    const auto m = mu(d, alpha);
    if (!m.admissible) continue;
    const DpProblem prob{canonical_representative(alpha).inverse(), d, m.as_int(), true};
    compare("dp n=" + std::to_string(n) + " d=" + std::to_string(d) + " alpha=(" + alpha.str() + ")",
            [&](ExecPolicy p) { run_dp(prob, p); }, reps);
  }

  for (const auto& [n, d] : {std::pair{7, 3}, std::pair{8, 3}, std::pair{8, 4}}) {
    ClassVector v;
    for (const auto& a : partitions_of(n)) v[a] = 1;
    compare("class product n=" + std::to_string(n) + " d=" + std::to_string(d),
            [&](ExecPolicy p) { class_product_vector(d, n, v, p); }, reps);
  }

  return 0;
}
