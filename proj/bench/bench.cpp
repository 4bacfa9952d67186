// Serial reference vs OpenMP kernels: map search and truncated series product.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "cmaps/kernel.hpp"
#include "cmaps/oracles.hpp"
#include "cmaps/series.hpp"

using namespace cmaps;

namespace {

template <class F>
double seconds(int reps, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  for (int k = 0; k < reps; ++k) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / reps;
}

void row(const std::string& name, double serial, double parallel, bool same) {
  std::printf("%-34s %10.4f %10.4f %7.2fx  %s\n", name.c_str(), serial, parallel, serial / parallel,
              same ? "equal" : "MISMATCH");
}

MapQuery query(int p, std::vector<int> b, std::map<int, int> internal = {}) {
  MapQuery q;
  q.p = p;
  q.boundaries = std::move(b);
  q.internal = std::move(internal);
  return q;
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::stoi(argv[1]) : 3;
  std::printf("threads: %d, repetitions: %d\n", omp_get_max_threads(), reps);
  std::printf("%-34s %10s %10s %8s\n", "case", "serial s", "omp s", "speedup");
  bool all_same = true;

  for (const auto& [name, q] : {std::pair{std::string("maps p=2 [2,2,2,2]"), query(2, {2, 2, 2, 2})},
                                std::pair{std::string("maps p=2 [3,3] x1"), query(2, {3, 3}, {{1, 1}})},
                                std::pair{std::string("maps p=2 [2,2,2,4]"), query(2, {2, 2, 2, 4})},
                                std::pair{std::string("maps p=3 [2,4]"), query(3, {2, 4})},
                                std::pair{std::string("maps p=3 [1,2] x1"), query(3, {1, 2}, {{1, 1}})}}) {
    Integer a, b;
    const double s = seconds(reps, [&] { a = oracle_gf_coeff_serial(q); });
    const double par = seconds(reps, [&] { b = oracle_gf_coeff(q); });
    all_same = all_same && a == b;
    row(name, s, par, a == b);
  }

  for (const auto& [t, x] : {std::pair{12, 3}, std::pair{16, 4}, std::pair{24, 5}}) {
    const Truncation tr(t, x, t);
    const Series r = compute_R(tr);
    Series a(tr), b(tr);
    const double s = seconds(reps, [&] { a = mul_serial(r, r); });
    const double par = seconds(reps, [&] { b = mul(r, r); });
    all_same = all_same && a == b;
    row("mul R*R t<=" + std::to_string(t) + " xdeg<=" + std::to_string(x), s, par, a == b);
  }
  return all_same ? 0 : 1;
}
