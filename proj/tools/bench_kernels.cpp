// Benchmark comparing the serial reference implementations against the
// OpenMP kernels: quantum table build, associativity scan, trace Gram
// matrix, and the semisimplicity q-sweep.

#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#else
#include <chrono>
#endif

#include "qhy/spectra.hpp"

using namespace qhy;

namespace {

double now() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
#endif
}

template <class F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        double t0 = now();
        f();
        double dt = now() - t0;
        if (dt < best) best = dt;
    }
    return best;
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-24s serial %8.4fs   openmp %8.4fs   speedup %.2fx\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
    std::printf("threads: %d\n", par::max_threads());
    QuantumRing qr = QuantumRing::build(par::Mode::serial);
    FiniteAlgebra alg1 = specialize(qr, rat(1), par::Mode::serial, false);
    auto qs = semisimplicity_sample_qs();

    const int reps = 3;

    double s, p;
    s = time_best_of(reps, [&] { QuantumRing::build_star_table(qr, par::Mode::serial); });
    p = time_best_of(reps, [&] { QuantumRing::build_star_table(qr, par::Mode::openmp); });
    report("star_table", s, p);

    s = time_best_of(reps, [&] { associativity_failures(alg1, par::Mode::serial); });
    p = time_best_of(reps, [&] { associativity_failures(alg1, par::Mode::openmp); });
    report("associativity_scan", s, p);

    s = time_best_of(reps, [&] { trace_gram(alg1, par::Mode::serial); });
    p = time_best_of(reps, [&] { trace_gram(alg1, par::Mode::openmp); });
    report("trace_gram", s, p);

    s = time_best_of(reps, [&] { semisimple_sweep(qr, qs, par::Mode::serial); });
    p = time_best_of(reps, [&] { semisimple_sweep(qr, qs, par::Mode::openmp); });
    report("semisimple_sweep", s, p);

    return 0;
}
