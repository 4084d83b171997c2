// Timings for the parallel linear-algebra kernels against the serial
// reference implementations.

#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cohomkern/cohomology.hpp"
#include "cohomkern/znz.hpp"

using namespace cohomkern;
using znz::MatrixZn;

namespace {

double now() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return double(clock()) / CLOCKS_PER_SEC;
#endif
}

MatrixZn random_matrix(uint32_t rows, uint32_t cols, uint32_t mod, uint64_t seed) {
    std::mt19937_64 rng(seed);
    MatrixZn M(rows, cols, mod);
    for (auto& x : M.a) x = uint32_t(rng() % mod);
    return M;
}

template <typename F>
double timed(F&& f) {
    double t0 = now();
    f();
    return now() - t0;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP\n");
#endif
    std::printf("%-34s %10s %10s %8s\n", "kernel", "serial[s]", "parallel[s]", "speedup");

    {
        MatrixZn A = random_matrix(400, 400, 25, 1);
        MatrixZn B = random_matrix(400, 400, 25, 2);
        MatrixZn r1, r2;
        double ts = timed([&] { r1 = znz::ref::mat_mul(A, B); });
        double tp = timed([&] { r2 = znz::mat_mul(A, B); });
        std::printf("%-34s %10.3f %10.3f %8.2f%s\n", "mat_mul 400x400 mod 25", ts, tp, ts / tp,
                    r1 == r2 ? "" : "  MISMATCH");
    }
    {
        MatrixZn M = random_matrix(300, 6000, 13, 3);
        MatrixZn r1, r2;
        double ts = timed([&] { r1 = znz::ref::howell_basis(M); });
        double tp = timed([&] { r2 = znz::howell_basis(M); });
        std::printf("%-34s %10.3f %10.3f %8.2f%s\n", "howell 300x6000 mod 13", ts, tp, ts / tp,
                    r1 == r2 ? "" : "  MISMATCH");
    }
    {
        MatrixZn M = random_matrix(200, 4000, 49, 4);
        MatrixZn r1, r2;
        double ts = timed([&] { r1 = znz::ref::kernel(M); });
        double tp = timed([&] { r2 = znz::kernel(M); });
        std::printf("%-34s %10.3f %10.3f %8.2f%s\n", "kernel 200x4000 mod 49", ts, tp, ts / tp,
                    r1 == r2 ? "" : "  MISMATCH");
    }
    {
        // coboundary assembly on the order-20 group, rank-5 module
        MetacyclicGroup G = MetacyclicGroup::make(5, 4, 2, Family::Semidirect);
        FreeModuleBasis M2 = make_module(G, ModuleName::M2, 5);
        GModule M = gmodule_of(M2, table_of(G), 5);
        MatrixZn D;
        double tp = timed([&] { D = coboundary_matrix(M, 2); });
        std::printf("%-34s %10s %10.3f %8s\n", "coboundary deg 2, |G|=20, rank 5", "-", tp, "-");
    }
    return 0;
}
