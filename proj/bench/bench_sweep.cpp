// Serial against OpenMP wall time for the sweeps; rows must match.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "csq/sweep.hpp"

using namespace csq;

namespace {

using Rows = std::vector<SweepRow>;

double seconds(const std::function<Rows()>& f, Rows& out) {
  const auto t0 = std::chrono::steady_clock::now();
  out = f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool report(const char* name, const std::function<Rows()>& serial, const std::function<Rows()>& parallel) {
  Rows a, b;
  const double ts = seconds(serial, a);
  const double tp = seconds(parallel, b);
  std::printf("%-24s rows=%-6zu serial=%8.3fs parallel=%8.3fs speedup=%5.2fx %s\n", name, a.size(), ts, tp,
              tp > 0 ? ts / tp : 0.0, a == b ? "match" : "MISMATCH");
  return a == b;
}

}  // namespace

int main(int argc, char** argv) {
  const long scale = argc > 1 ? std::atol(argv[1]) : 1;
  bool ok = true;
  ok &= report("twosq", [&] { return sweep_two_squares_serial(100000 * scale); },
               [&] { return sweep_two_squares_parallel(100000 * scale); });
  for (Form f : {Form::FourSquares, Form::EisensteinDouble, Form::X2p3Y2, Form::Sqrt3Double}) {
    const long lo = f == Form::Sqrt3Double ? -10000 * scale : 1;
    ok &= report(form_name(f).c_str(), [&] { return sweep_forms_serial(f, lo, 20000 * scale); },
                 [&] { return sweep_forms_parallel(f, lo, 20000 * scale); });
  }
  return ok ? 0 : 1;
}
