// Compares the serial reference kernels with their OpenMP counterparts:
// exhaustive extremal search (task-partitioned tree) and all-sources BFS
// diameter. Usage: spex_bench [threads]
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "spex/analysis.hpp"
#include "spex/constructions.hpp"
#include "spex/graph.hpp"
#include "spex/oracle.hpp"

#ifdef SPEX_HAVE_OPENMP
#include <omp.h>
#endif

namespace {

double now() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

}  // namespace

int main(int argc, char** argv) {
    int threads = 2;
#ifdef SPEX_HAVE_OPENMP
    threads = omp_get_max_threads();
#endif
    if (argc > 1) threads = std::atoi(argv[1]);

    std::printf("kernel, serial_s, parallel_s(threads=%d), speedup, match\n", threads);

    {
        double t0 = now();
        auto serial = spex::enumerate_extremal(9, 3, 1);
        double t1 = now();
        auto parallel = spex::enumerate_extremal(9, 3, threads);
        double t2 = now();
        bool match = serial.lambda_max == parallel.lambda_max &&
                     serial.witness_codes == parallel.witness_codes &&
                     serial.count_enumerated == parallel.count_enumerated;
        std::printf("oracle n=9 delta=3, %.3f, %.3f, %.2fx, %s\n", t1 - t0, t2 - t1,
                    (t1 - t0) / (t2 - t1), match ? "identical" : "MISMATCH");
    }
    {
        double t0 = now();
        auto serial = spex::enumerate_extremal(8, 4, 1);
        double t1 = now();
        auto parallel = spex::enumerate_extremal(8, 4, threads);
        double t2 = now();
        bool match = serial.lambda_max == parallel.lambda_max &&
                     serial.witness_codes == parallel.witness_codes;
        std::printf("oracle n=8 delta=4, %.3f, %.3f, %.2fx, %s\n", t1 - t0, t2 - t1,
                    (t1 - t0) / (t2 - t1), match ? "identical" : "MISMATCH");
    }
    {
        spex::Graph g = spex::h_family(5, 6 * 400 + 1);
        double t0 = now();
        int d1 = spex::diameter(g, 1);
        double t1 = now();
        int d2 = spex::diameter(g, threads);
        double t2 = now();
        std::printf("diameter n=%d, %.3f, %.3f, %.2fx, %s\n", g.n(), t1 - t0, t2 - t1,
                    (t1 - t0) / (t2 - t1), d1 == d2 ? "identical" : "MISMATCH");
    }
    {
        std::vector<int> ns = {201, 401, 801};
        double t0 = now();
        auto serial = spex::gap_table(3, ns, 1e-13, 1);
        double t1 = now();
        auto parallel = spex::gap_table(3, ns, 1e-13, threads);
        double t2 = now();
        bool match = true;
        for (size_t i = 0; i < ns.size(); i++)
            match = match && serial[i].lambda1 == parallel[i].lambda1;
        std::printf("gap_table delta=3, %.3f, %.3f, %.2fx, %s\n", t1 - t0, t2 - t1,
                    (t1 - t0) / (t2 - t1), match ? "identical" : "MISMATCH");
    }
    return 0;
}
