// Benchmark comparing the OpenMP kernels against the serial reference:
// enveloping-algebra products (inside ch_compose) and per-index relation
// synthesis.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>

#include "nas/ch.hpp"
#include "nas/instance.hpp"
#include "nas/parallel.hpp"
#include "nas/verify.hpp"

using namespace nas;

namespace {

double time_ms(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

LieElt dense_element(const GenTable* tab, const GF* f, int cls, int nterms, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> gen_pick(0, tab->size() - 1);
  std::uniform_int_distribution<Int> c_pick(1, f->q() - 1);
  LieElt x(tab, cls);
  for (int t = 0; t < nterms; ++t)
    x += LieElt::generator(tab, cls, gen_pick(rng), f->element(c_pick(rng)));
  return x;
}

} // namespace

int main() {
  const Int p = 5;
  const GF* f = GF::get(p, 1);
  GenTable::Params tp;
  tp.p = p;
  tp.N = 2;
  tp.n0 = 1;
  tp.cbar0 = MultiIndex{p, 0};
  tp.wt_max = 3;
  tp.box = {3 * p, 6};
  tp.with_L = false;
  auto tab = GenTable::window(tp);

  std::cout << "universe: " << tab->size() << " generators, "
            << omp_get_max_threads() << " threads available\n";

  {
    LieElt a = dense_element(tab.get(), f, 4, 40, 1);
    LieElt b = dense_element(tab.get(), f, 4, 40, 2);
    LieElt out_serial(tab.get(), 4), out_par(tab.get(), 4);
    parallel_enabled() = false;
    double ts = time_ms([&] { out_serial = ch_compose(a, b); });
    parallel_enabled() = true;
    double tpms = time_ms([&] { out_par = ch_compose(a, b); });
    std::cout << "ch_compose (class 4, 40 linear terms): serial " << ts << " ms, parallel " << tpms
              << " ms, agree = " << (out_serial == out_par ? "yes" : "NO") << "\n";
  }

  {
    InstanceConfig cfg = preset_config("simplest-char-p", 5);
    cfg.gbox = {5, 24};
    parallel_enabled() = false;
    Presentation ps;
    double ts = time_ms([&] { ps = build_presentation(cfg); });
    parallel_enabled() = true;
    Presentation pp;
    double tpms = time_ms([&] { pp = build_presentation(cfg); });
    std::cout << "relation synthesis (gbox 5,24): serial " << ts << " ms, parallel " << tpms
              << " ms, agree = " << (ps == pp ? "yes" : "NO") << "\n";
  }
  return 0;
}
