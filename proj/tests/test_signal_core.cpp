#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "tbsample/encoders.hpp"
#include "tbsample/generate.hpp"
#include "tbsample/integral.hpp"
#include "tbsample/norms.hpp"
#include "tbsample/quantize.hpp"
#include "tbsample/reconstruct.hpp"
#include "tbsample/rng.hpp"
#include "tbsample/types.hpp"

using namespace tbs;

TEST_CASE("quantize_trunc basics") {
  CHECK(quantize_trunc(0.0, 1.0) == 0.0);
  CHECK(quantize_trunc(2.5, 1.0) == 2.0);
  CHECK(quantize_trunc(-1.3, 0.5) == -1.0);
  CHECK(quantize_trunc(0.999, 1.0) == 0.0);
  CHECK(quantize_trunc(-0.999, 1.0) == 0.0);
  CHECK(quantize_trunc(7.25, 0.25) == 7.25);
}

TEST_CASE("quantize_trunc near-multiple snapping") {
  // 0.1 * 3 overshoots 0.3 by one ulp; truncation without the snap would
  // return 0.3 for the sum but 0.2 for the mathematically equal value.
  const double x = 0.1 + 0.1 + 0.1;
  CHECK(quantize_trunc(x, 0.1) == doctest::Approx(0.3));
  CHECK(quantize_multiple(x, 0.1) == 3);
  CHECK(quantize_multiple(std::nextafter(1.0, 0.0), 1.0) == 1);
}

TEST_CASE("quantize_trunc errors") {
  CHECK_THROWS_AS(quantize_trunc(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(quantize_trunc(1.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(quantize_trunc(std::nan(""), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(quantize_trunc(INFINITY, 1.0), std::invalid_argument);
}

TEST_CASE("quantize_trunc is odd, idempotent, lattice shift-equivariant") {
  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const double theta = rng.uniform(0.1, 2.0);
    const double x = rng.uniform(-8.0, 8.0);
    CHECK(quantize_trunc(-x, theta) == -quantize_trunc(x, theta));
    const double q = quantize_trunc(x, theta);
    CHECK(quantize_trunc(q, theta) == q);
    const auto m = rng.integer(-5, 5);
    const double lattice = theta * static_cast<double>(rng.integer(-6, 6));
    const double shifted = lattice - theta * static_cast<double>(m);
    CHECK(quantize_multiple(shifted, theta) ==
          quantize_multiple(lattice, theta) - m);
  }
}

TEST_CASE("accumulate constant and impulse") {
  const HybridSignal f = make_signal(0.0, 0.01, std::vector<double>(200, 1.0));
  const IntegralFunction a = accumulate(f);
  CHECK(a(2.0) == doctest::Approx(2.0));
  CHECK(a(0.5) == doctest::Approx(0.5));
  CHECK(a(0.0) == 0.0);

  const HybridSignal g =
      make_signal(0.0, 0.25, std::vector<double>(8, 0.0), {{1.0, 2.5}});
  const IntegralFunction b = accumulate(g);
  CHECK(b(0.75) == 0.0);
  CHECK(b.value_before(1.0) == 0.0);
  CHECK(b(1.0) == 2.5);
  CHECK(b(1.6) == 2.5);
  CHECK(b(2.0) == 2.5);
}

TEST_CASE("accumulate matches the direct summation oracle") {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const HybridSignal f = random_hybrid(rng, 10, 0.1, static_cast<std::size_t>(trial % 3), 2.0, 1.0);
    double direct = 0.0;
    for (double v : f.samples) direct += v;
    direct *= f.dt;
    for (const Impulse& im : f.impulses) direct += im.weight;
    const double got = accumulate(f)(f.t_end);
    CHECK(got == doctest::Approx(direct).epsilon(1e-12));
  }
}

TEST_CASE("alexiewicz_norm_signal basics") {
  CHECK(alexiewicz_norm_signal(make_signal(0.0, 0.01, std::vector<double>(200, 1.0))) ==
        doctest::Approx(2.0));
  CHECK(alexiewicz_norm_signal(make_signal(0.0, 1.0, {1.0, -1.0})) == doctest::Approx(1.0));
  // the pre-jump branch matters: a cancelling impulse hides the peak from
  // jump-inclusive values only
  const HybridSignal f = make_signal(0.0, 1.0, {1.0, 0.0}, {{1.0, -1.0}});
  CHECK(alexiewicz_norm_signal(f) == doctest::Approx(1.0));
}

TEST_CASE("alexiewicz_norm_signal matches dense evaluation") {
  Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const HybridSignal f = random_continuous(rng, 100, 0.03, 2.0);
    std::vector<double> prefix(f.size() + 1, 0.0);
    for (std::size_t i = 1; i <= f.size(); ++i)
      prefix[i] = prefix[i - 1] + f.samples[i - 1] * f.dt;
    double dense = 0.0;
    for (int k = 0; k <= 100000; ++k) {
      const double t = f.t_start + (f.t_end - f.t_start) * k / 100000.0;
      auto i = static_cast<std::size_t>((t - f.t_start) / f.dt);
      if (i >= f.size()) i = f.size() - 1;
      const double a = prefix[i] + f.samples[i] * (t - f.edge(i));
      dense = std::fmax(dense, std::fabs(a));
    }
    CHECK(alexiewicz_norm_signal(f) == doctest::Approx(dense).epsilon(1e-9));
  }
}

TEST_CASE("alexiewicz_norm_spikes basics") {
  SpikeTrain s;
  s.theta = 1.0;
  CHECK(alexiewicz_norm_spikes(s) == 0.0);
  s.spikes = {{1.0, 1.0}, {2.0, -1.0}};
  CHECK(alexiewicz_norm_spikes(s) == doctest::Approx(1.0));
  s.spikes = {{1.0, 1.0}, {2.0, 1.0}};
  CHECK(alexiewicz_norm_spikes(s) == doctest::Approx(2.0));
}

TEST_CASE("alexiewicz_distance basics") {
  const HybridSignal zero = make_signal(0.0, 0.25, std::vector<double>(8, 0.0));
  SpikeTrain empty;
  empty.theta = 1.0;
  CHECK(alexiewicz_distance(zero, empty) == 0.0);

  const HybridSignal f =
      make_signal(0.0, 0.25, std::vector<double>(8, 0.0), {{1.0, 2.5}});
  SpikeTrain s;
  s.theta = 1.0;
  s.spikes = {{1.0, 2.0}};
  CHECK(alexiewicz_distance(f, s) == doctest::Approx(0.5));
}

TEST_CASE("alexiewicz_distance rejects spikes outside the domain") {
  const HybridSignal f = make_signal(0.0, 0.25, std::vector<double>(8, 0.0));
  SpikeTrain s;
  s.theta = 1.0;
  s.spikes = {{5.0, 1.0}};
  CHECK_THROWS_AS(alexiewicz_distance(f, s), std::invalid_argument);
  s.spikes = {{0.0, 1.0}};
  CHECK_THROWS_AS(alexiewicz_distance(f, s), std::invalid_argument);
}

TEST_CASE("l1_norm basics and the ramp identity") {
  SpikeTrain s;
  s.theta = 1.0;
  CHECK(l1_norm(s) == 0.0);
  s.spikes = {{1.0, 2.0}, {3.0, -1.0}};
  CHECK(l1_norm(s) == doctest::Approx(3.0));

  std::vector<double> ramp(300);
  for (std::size_t i = 1; i <= 300; ++i) ramp[i - 1] = 0.01 * static_cast<double>(i);
  const HybridSignal g = make_signal(0.0, 0.01, ramp);
  CHECK(l1_norm(sod_encode(g, 1.0)) == doctest::Approx(3.0));
}

TEST_CASE("tv_norm basics and the telescoping identity") {
  StepFunction x;
  x.t_start = 0.0;
  x.t_end = 3.0;
  x.breakpoints = {1.0};
  x.values = {0.0};
  CHECK(tv_norm(x) == 0.0);
  x.breakpoints = {1.0, 2.0};
  x.values = {1.0, 0.0};
  CHECK(tv_norm(x) == doctest::Approx(2.0));

  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const HybridSignal g = random_continuous(rng, 80, 0.05, 3.0);
    const SpikeTrain s = sod_encode(g, 0.5);
    const StepFunction chi = sod_step_reconstruct(s, g.t_end, g.t_start);
    CHECK(tv_norm(chi) == doctest::Approx(l1_norm(s)).epsilon(1e-12));
  }
}

TEST_CASE("sup_distance basics") {
  const HybridSignal f = make_signal(0.0, 0.1, std::vector<double>(10, 1.0));
  StepFunction one;
  one.t_start = 0.0;
  one.t_end = 1.0;
  one.breakpoints = {0.0};
  one.values = {1.0};
  CHECK(sup_distance(f, one) == 0.0);

  std::vector<double> ramp(10);
  for (std::size_t i = 1; i <= 10; ++i) ramp[i - 1] = static_cast<double>(i) / 10.0;
  const HybridSignal r = make_signal(0.0, 0.1, ramp);
  StepFunction zero;
  zero.t_start = 0.0;
  zero.t_end = 1.0;
  zero.breakpoints = {0.0};
  zero.values = {0.0};
  CHECK(sup_distance(r, zero) == doctest::Approx(1.0));

  const HybridSignal imp = make_signal(0.0, 0.1, std::vector<double>(10, 0.0), {{0.5, 1.0}});
  CHECK_THROWS_AS(sup_distance(imp, zero), std::invalid_argument);
}

TEST_CASE("spike-train norm axioms") {
  Rng rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const double theta = 0.5;
    SpikeTrain a, b;
    a.theta = b.theta = theta;
    double t = 0.0;
    for (int k = 0, len = static_cast<int>(rng.integer(0, 12)); k < len; ++k) {
      t += 0.25 * static_cast<double>(rng.integer(1, 8));
      a.spikes.push_back({t, theta * static_cast<double>(rng.integer(1, 3)) *
                                 (rng.uniform() < 0.5 ? -1.0 : 1.0)});
    }
    t = 0.0;
    for (int k = 0, len = static_cast<int>(rng.integer(0, 12)); k < len; ++k) {
      t += 0.25 * static_cast<double>(rng.integer(1, 8));
      b.spikes.push_back({t, theta * static_cast<double>(rng.integer(1, 3)) *
                                 (rng.uniform() < 0.5 ? -1.0 : 1.0)});
    }
    const SpikeTrain sum = train_difference(a, train_scale(b, -1.0));
    CHECK(alexiewicz_norm_spikes(sum) <=
          alexiewicz_norm_spikes(a) + alexiewicz_norm_spikes(b) + 1e-12);
    if (!a.empty()) {
      CHECK(alexiewicz_norm_spikes(a) > 0.0);
      const double c = std::ldexp(1.0, static_cast<int>(rng.integer(-2, 2)));
      CHECK(alexiewicz_norm_spikes(train_scale(a, c)) == c * alexiewicz_norm_spikes(a));
    }
  }
}

TEST_CASE("signal semi-norm triangle inequality") {
  Rng rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    const HybridSignal f = random_hybrid(rng, 60, 0.02, 1, 2.0, 0.5);
    HybridSignal g = random_hybrid(rng, 60, 0.02, 2, 2.0, 0.5);
    HybridSignal sum = f;
    for (std::size_t i = 0; i < sum.samples.size(); ++i) sum.samples[i] += g.samples[i];
    for (const Impulse& im : g.impulses) sum.impulses.push_back(im);
    std::sort(sum.impulses.begin(), sum.impulses.end(),
              [](const Impulse& x, const Impulse& y) { return x.time < y.time; });
    std::vector<Impulse> merged;
    for (const Impulse& im : sum.impulses) {
      if (!merged.empty() && merged.back().time == im.time)
        merged.back().weight += im.weight;
      else
        merged.push_back(im);
    }
    sum.impulses = std::move(merged);
    CHECK(alexiewicz_norm_signal(sum) <=
          alexiewicz_norm_signal(f) + alexiewicz_norm_signal(g) + 1e-12);
  }
}

TEST_CASE("HybridSignal validation") {
  HybridSignal f = make_signal(0.0, 0.25, std::vector<double>(8, 0.0));
  CHECK_NOTHROW(f.validate());
  f.impulses = {{3.5, 1.0}};
  CHECK_THROWS_AS(f.validate(), std::invalid_argument);
  f.impulses = {{1.0, 1.0}, {1.0, 2.0}};
  CHECK_THROWS_AS(f.validate(), std::invalid_argument);
  f.impulses = {{0.0, 1.0}};
  CHECK_THROWS_AS(f.validate(), std::invalid_argument);
}

TEST_CASE("SpikeTrain validation") {
  SpikeTrain s;
  s.theta = 1.0;
  s.spikes = {{1.0, 1.0}, {2.0, -3.0}};
  CHECK_NOTHROW(s.validate());
  s.spikes = {{1.0, 0.5}};
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s.spikes = {{1.0, 0.0}};
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s.spikes = {{2.0, 1.0}, {1.0, 1.0}};
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}
