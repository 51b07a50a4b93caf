// Times the serial reference implementations against the OpenMP kernels and
// checks that both produce identical results.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include <CLI11.hpp>

#include "fgl/bijection.hpp"
#include "fgl/exact_oracle.hpp"
#include "fgl/gen_spec.hpp"
#include "fgl/monte_carlo.hpp"

namespace {

double time_ms(const std::function<void()>& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

void report_line(const std::string& name, double serial_ms, double parallel_ms, bool equal) {
  std::printf("%-28s serial %9.1f ms   parallel %9.1f ms   speedup %5.2fx   results %s\n",
              name.c_str(), serial_ms, parallel_ms, serial_ms / parallel_ms,
              equal ? "equal" : "DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fgl-bench: serial reference vs OpenMP kernels"};
  int workers = 4;
  bool big = false;
  app.add_option("--workers", workers, "threads for the parallel kernels")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--big", big, "also run the n=9 counting case (~43M configurations)");
  CLI11_PARSE(app, argc, argv);

  {
    fgl::GenSpec spec = fgl::make_spec_uniform(7, fgl::Rational(1, 2));
    fgl::ExactReport serial, parallel;
    double s = time_ms([&] { serial = fgl::exact_cycle_probability_serial(spec); });
    double p = time_ms([&] { parallel = fgl::exact_cycle_probability(spec, workers); });
    report_line("exact n=7 p=1/2", s, p,
                serial.cycle_probability == parallel.cycle_probability);
  }
  for (int n : {8, 9}) {
    if (n == 9 && !big) break;
    fgl::CayleyCountReport serial, parallel;
    double s = time_ms([&] { serial = fgl::count_special_graphs_serial(n); });
    double p = time_ms([&] { parallel = fgl::count_special_graphs(n, workers); });
    report_line("count-trees n=" + std::to_string(n), s, p,
                serial.special_count == parallel.special_count);
  }
  {
    fgl::GenSpec spec = fgl::make_spec_uniform(200, fgl::Rational(1, 2));
    const std::uint64_t trials = 200000, seed = 42;
    fgl::EstimateResult serial, parallel;
    double s = time_ms([&] { serial = fgl::estimate_cycle_probability_serial(spec, trials, seed); });
    double p = time_ms([&] { parallel = fgl::estimate_cycle_probability(spec, trials, seed, workers); });
    report_line("simulate n=200 2e5 trials", s, p, serial.cycle_count == parallel.cycle_count);
  }
  return 0;
}
