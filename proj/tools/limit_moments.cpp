// Simulates the moments (mu, nu) of the limiting functionals behind the
// standardized Pedroni panel cointegration statistics, following the
// construction in Pedroni (1999): per-unit ingredients are computed from
// independent random walks at large T with iid innovations (bandwidth 0,
// no augmentation, so every nuisance correction is identically satisfied),
// and mu, nu are composed by the delta method exactly as the panel
// statistics combine the per-unit pieces.
//
// Output is a C++ initializer list row per regressor count, ready to paste
// into src/pedroni_moments.cpp.
//
// Sanity anchors (m = 0): for the demeaned case E[num] -> -1/2 and
// E[den] -> 1/6 (their ratio -3 is the bias correction appearing in the
// pooled panel Dickey-Fuller statistics); for the detrended case
// E[den] -> 1/15.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include "panelkit/pedroni.hpp"
#include "panelkit/rng.hpp"

using panelkit::Rng;
using panelkit::detail::pedroni_unit;

namespace {

struct Accum {
  // Raw moments of (num, den, st) and of the per-unit group statistics.
  double n = 0;
  double s_num = 0, s_den = 0, s_st = 0;
  double s_num2 = 0, s_den2 = 0, s_st2 = 0;
  double s_numden = 0, s_numst = 0, s_denst = 0;
  double s_r = 0, s_r2 = 0, s_g = 0, s_g2 = 0;

  void add(double num, double den, double st) {
    n += 1;
    s_num += num;
    s_den += den;
    s_st += st;
    s_num2 += num * num;
    s_den2 += den * den;
    s_st2 += st * st;
    s_numden += num * den;
    s_numst += num * st;
    s_denst += den * st;
    const double r = num / den;
    const double g = num / std::sqrt(st * den);
    s_r += r;
    s_r2 += r * r;
    s_g += g;
    s_g2 += g * g;
  }
  void merge(const Accum& o) {
    n += o.n;
    s_num += o.s_num;
    s_den += o.s_den;
    s_st += o.s_st;
    s_num2 += o.s_num2;
    s_den2 += o.s_den2;
    s_st2 += o.s_st2;
    s_numden += o.s_numden;
    s_numst += o.s_numst;
    s_denst += o.s_denst;
    s_r += o.s_r;
    s_r2 += o.s_r2;
    s_g += o.s_g;
    s_g2 += o.s_g2;
  }
};

struct MomentRow {
  double mu_v, nu_v, mu_rho, nu_rho, mu_t, nu_t, mu_grho, nu_grho, mu_gt,
      nu_gt;
};

MomentRow compose(const Accum& a) {
  const double n = a.n;
  const double Enum = a.s_num / n, Eden = a.s_den / n, Est = a.s_st / n;
  const double Vnum = a.s_num2 / n - Enum * Enum;
  const double Vden = a.s_den2 / n - Eden * Eden;
  const double Vst = a.s_st2 / n - Est * Est;
  const double Cnd = a.s_numden / n - Enum * Eden;
  const double Cns = a.s_numst / n - Enum * Est;
  const double Cds = a.s_denst / n - Eden * Est;

  MomentRow row{};
  row.mu_v = 1.0 / Eden;
  row.nu_v = Vden / (Eden * Eden * Eden * Eden);

  row.mu_rho = Enum / Eden;
  row.nu_rho =
      (Vnum - 2.0 * row.mu_rho * Cnd + row.mu_rho * row.mu_rho * Vden) /
      (Eden * Eden);

  const double mu_t = Enum / std::sqrt(Est * Eden);
  const double fa = 1.0 / std::sqrt(Est * Eden);
  const double fb = -mu_t / (2.0 * Est);
  const double fc = -mu_t / (2.0 * Eden);
  row.mu_t = mu_t;
  row.nu_t = fa * fa * Vnum + fb * fb * Vst + fc * fc * Vden +
             2.0 * fa * fb * Cns + 2.0 * fa * fc * Cnd + 2.0 * fb * fc * Cds;

  row.mu_grho = a.s_r / n;
  row.nu_grho = a.s_r2 / n - row.mu_grho * row.mu_grho;
  row.mu_gt = a.s_g / n;
  row.nu_gt = a.s_g2 / n - row.mu_gt * row.mu_gt;
  return row;
}

Accum simulate(int m, bool trend, int T, long reps, uint64_t seed,
               int threads) {
  std::vector<Accum> acc(threads);
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w]() {
      for (long r = w; r < reps; r += threads) {
        Rng rng(panelkit::substream_seed(seed, static_cast<uint64_t>(r)));
        Eigen::VectorXd y(T);
        Eigen::MatrixXd X(T, m);
        double cy = 0.0;
        std::vector<double> cx(m, 0.0);
        for (int t = 0; t < T; ++t) {
          cy += rng.gaussian();
          y(t) = cy;
          for (int j = 0; j < m; ++j) {
            cx[j] += rng.gaussian();
            X(t, j) = cx[j];
          }
        }
        const auto u = pedroni_unit(y, X, trend, 0, 0);
        acc[w].add(u.num, u.den, u.st);
      }
    });
  }
  for (auto& t : pool) t.join();
  for (int w = 1; w < threads; ++w) acc[0].merge(acc[w]);
  return acc[0];
}

}  // namespace

int main(int argc, char** argv) {
  int T = 2000;
  long reps = 200000;
  uint64_t seed = 20240901;
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  int m_lo = 0, m_hi = 7;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--T") && i + 1 < argc) T = std::atoi(argv[++i]);
    else if (!std::strcmp(argv[i], "--reps") && i + 1 < argc)
      reps = std::atol(argv[++i]);
    else if (!std::strcmp(argv[i], "--seed") && i + 1 < argc)
      seed = std::strtoull(argv[++i], nullptr, 10);
    else if (!std::strcmp(argv[i], "--threads") && i + 1 < argc)
      threads = std::atoi(argv[++i]);
    else if (!std::strcmp(argv[i], "--m") && i + 1 < argc)
      m_lo = m_hi = std::atoi(argv[++i]);
    else {
      std::fprintf(stderr,
                   "usage: %s [--T n] [--reps n] [--seed n] [--threads n] "
                   "[--m k]\n",
                   argv[0]);
      return 2;
    }
  }

  std::printf("// T=%d reps=%ld seed=%llu\n", T, reps,
              static_cast<unsigned long long>(seed));
  for (int trend = 0; trend <= 1; ++trend) {
    std::printf("// %s\n", trend ? "means + trends" : "means");
    for (int m = m_lo; m <= m_hi; ++m) {
      const Accum a = simulate(m, trend, T, reps, seed + 1000 * m + trend,
                               threads);
      const MomentRow row = compose(a);
      if (m == 0) {
        std::printf("// anchor m=0: E[num]=%.5f E[den]=%.5f (ratio %.4f)\n",
                    a.s_num / a.n, a.s_den / a.n,
                    (a.s_num / a.n) / (a.s_den / a.n));
        continue;
      }
      std::printf(
          "    {%.6f, %.6f, %.6f, %.6f, %.6f, %.6f, %.6f, %.6f, %.6f, "
          "%.6f},  // m=%d\n",
          row.mu_v, row.nu_v, row.mu_rho, row.nu_rho, row.mu_t, row.nu_t,
          row.mu_grho, row.nu_grho, row.mu_gt, row.nu_gt, m);
      std::fflush(stdout);
    }
  }
  return 0;
}
