// Compares the serial full-sweep reference, the pruned serial search, and the
// OpenMP kernel on single calls and on an orientation batch.
#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "atcert/alon_tarsi.hpp"
#include "atcert/genlab.hpp"

using namespace atcert;

namespace {

double ms(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
}

template <typename F>
double timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return ms(t0, std::chrono::steady_clock::now());
}

Orientation random_orientation(int n, int num, int den, Rng& rng) {
    Orientation d{n, {}};
    for (auto [u, v] : random_graph(n, num, den, rng)) {
        if (rng() % 2)
            d.arcs.emplace_back(u, v);
        else
            d.arcs.emplace_back(v, u);
    }
    return d;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: disabled\n");
#endif

    // balanced tournaments keep many Eulerian sub-digraphs alive, so the
    // search tree stays fat; one flipped arc makes the value nonzero
    auto tournament = [](int n) {
        Orientation d{n, {}};
        for (int i = 0; i < n; ++i)
            for (int k = 1; k <= n / 2; ++k) d.arcs.emplace_back(i, (i + k) % n);
        std::swap(d.arcs.front().first, d.arcs.front().second);
        return d;
    };

    Caps caps;
    caps.diff_edge_cap = 61;
    {
        Orientation k7 = tournament(7);
        BigInt r_ref, r_pruned, r_par;
        double t_ref = timed([&] { r_ref = diff_reference(k7); });
        double t_pruned = timed([&] { r_pruned = diff(k7, caps); });
        double t_par = timed([&] { r_par = diff_parallel(k7, caps); });
        std::printf("K7 tournament, %zu arcs: diff %s\n", k7.arcs.size(), r_ref.str().c_str());
        std::printf("  %-22s %10.2f ms\n", "reference (full sweep)", t_ref);
        std::printf("  %-22s %10.2f ms  (%.1fx vs reference)\n", "pruned serial", t_pruned,
                    t_ref / t_pruned);
        std::printf("  %-22s %10.2f ms\n", "openmp kernel", t_par);
        if (r_ref != r_pruned || r_ref != r_par) {
            std::printf("MISMATCH between implementations\n");
            return 1;
        }
    }
    {
        Orientation k9 = tournament(9);
        BigInt r_pruned, r_par;
        double t_pruned = timed([&] { r_pruned = diff(k9, caps); });
        double t_par = timed([&] { r_par = diff_parallel(k9, caps); });
        std::printf("K9 tournament, %zu arcs: diff %s (full sweep infeasible)\n",
                    k9.arcs.size(), r_pruned.str().c_str());
        std::printf("  %-22s %10.2f ms\n", "pruned serial", t_pruned);
        std::printf("  %-22s %10.2f ms  (%.1fx)\n", "openmp kernel", t_par, t_pruned / t_par);
        if (r_pruned != r_par) {
            std::printf("MISMATCH between implementations\n");
            return 1;
        }
    }

    // batch workload: many small orientations
    std::vector<Orientation> batch;
    Rng rng2(999);
    for (int i = 0; i < 4000; ++i) batch.push_back(random_orientation(7, 1, 2, rng2));

    std::vector<BigInt> serial_out(batch.size()), parallel_out(batch.size());
    double t_serial = timed([&] {
        for (size_t i = 0; i < batch.size(); ++i) serial_out[i] = diff(batch[i], caps);
    });
    double t_batch = timed([&] {
#pragma omp parallel for schedule(dynamic, 64)
        for (int i = 0; i < static_cast<int>(batch.size()); ++i)
            parallel_out[i] = diff(batch[i], caps);
    });
    std::printf("batch of %zu diffs (7 vertices each)\n", batch.size());
    std::printf("  %-22s %10.2f ms\n", "serial loop", t_serial);
    std::printf("  %-22s %10.2f ms  (%.1fx)\n", "openmp loop", t_batch, t_serial / t_batch);
    for (size_t i = 0; i < batch.size(); ++i)
        if (serial_out[i] != parallel_out[i]) {
            std::printf("MISMATCH in batch at %zu\n", i);
            return 1;
        }
    return 0;
}
