// Benchmark comparing the serial reference kernels against the OpenMP ones.
// Each kernel is run both ways on the same input; the results must agree
// exactly, and the table reports wall times and the speedup.

#include <chrono>
#include <cstdio>
#include <memory>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qaut/analysis.hpp"
#include "qaut/witness.hpp"

using namespace qaut;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Row {
    const char* name;
    double serial_ms;
    double parallel_ms;
    bool equal;
};

Row bench_verify_swap(std::int64_t p, const std::vector<std::int64_t>& symbols) {
    auto data = circulant_type_data(p, symbols);
    auto orb = std::make_shared<const OrbitalStructure>(circulant_orbitals(data));
    auto witness = extend_witness(*orb, *find_nosym2_witness(*orb));
    Morphism f = build_swap_candidate(orb, witness);

    auto t0 = Clock::now();
    auto serial = verify_swap_serial(f, static_cast<int>(p), true);
    double serial_ms = ms_since(t0);
    t0 = Clock::now();
    auto parallel = verify_swap(f, static_cast<int>(p), true, true);
    double parallel_ms = ms_since(t0);
    return {"verify_swap", serial_ms, parallel_ms,
            serial.ok == parallel.ok && serial.failures == parallel.failures};
}

Row bench_coherent_closure(std::int64_t p, const std::vector<std::int64_t>& symbols) {
    Graph g(static_cast<int>(p));
    for (int i = 0; i < p; ++i)
        for (std::int64_t s : symbols) {
            int j = static_cast<int>((i + s) % p);
            if (i < j) g.add_edge(i, j);
        }
    auto t0 = Clock::now();
    auto serial = coherent_closure_serial(g);
    double serial_ms = ms_since(t0);
    t0 = Clock::now();
    auto parallel = coherent_closure(g, true);
    double parallel_ms = ms_since(t0);
    bool equal = serial.size() == parallel.size();
    for (std::size_t i = 0; equal && i < serial.size(); ++i)
        equal = serial[i].entries == parallel[i].entries;
    return {"coherent_closure", serial_ms, parallel_ms, equal};
}

Row bench_sweep() {
    auto t0 = Clock::now();
    auto serial = sweep_type_serial(8, 1296);
    double serial_ms = ms_since(t0);
    t0 = Clock::now();
    auto parallel = sweep_type(8, 1296, true);
    double parallel_ms = ms_since(t0);
    bool equal = serial.size() == parallel.size();
    for (std::size_t i = 0; equal && i < serial.size(); ++i)
        equal = serial[i].data.p == parallel[i].data.p &&
                serial[i].singleton == parallel[i].singleton &&
                serial[i].intersection == parallel[i].intersection;
    return {"type-8 sweep", serial_ms, parallel_ms, equal};
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    Row rows[] = {
        bench_verify_swap(97, subgroup_of_order(97, 8).elements),
        bench_coherent_closure(97, subgroup_of_order(97, 8).elements),
        bench_sweep(),
    };
    std::printf("%-20s %12s %12s %9s %s\n", "kernel", "serial (ms)", "openmp (ms)", "speedup",
                "equal");
    bool all_equal = true;
    for (const auto& r : rows) {
        std::printf("%-20s %12.1f %12.1f %8.2fx %s\n", r.name, r.serial_ms, r.parallel_ms,
                    r.serial_ms / (r.parallel_ms > 0 ? r.parallel_ms : 1e-9),
                    r.equal ? "yes" : "NO");
        all_equal = all_equal && r.equal;
    }
    return all_equal ? 0 : 1;
}
