// Times the OpenMP kernels against the serial reference implementations,
// and the sparse backward products against their dense equivalents at a few
// sparsity levels. Wall-clock numbers are informational; correctness is
// ctest's job.

#include <omp.h>

#include <cstdio>
#include <functional>

#include "dbp/matrix.hpp"
#include "dbp/quantize.hpp"
#include "dbp/reference.hpp"
#include "dbp/rng.hpp"
#include "dbp/sparse.hpp"

using namespace dbp;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, Rng& rng) {
    Matrix m(r, c);
    for (double& v : m.data) v = rng.uniform(-1.0, 1.0);
    return m;
}

double time_ms(const std::function<void()>& fn, int reps) {
    fn(); // warm up
    const double t0 = omp_get_wtime();
    for (int i = 0; i < reps; ++i) fn();
    return (omp_get_wtime() - t0) * 1000.0 / reps;
}

void row(const char* name, const char* size, double serial_ms, double parallel_ms) {
    std::printf("%-24s %-14s %10.3f %10.3f %8.2fx\n", name, size, serial_ms, parallel_ms,
                serial_ms / parallel_ms);
}

} // namespace

int main() {
    std::printf("threads: %d\n\n", omp_get_max_threads());
    std::printf("%-24s %-14s %10s %10s %8s\n", "kernel", "size", "serial", "openmp",
                "speedup");
    std::printf("%-24s %-14s %10s %10s %8s\n", "", "", "(ms)", "(ms)", "");

    Rng rng(1);

    {
        const Matrix a = random_matrix(500, 784, rng);
        const Matrix b = random_matrix(784, 128, rng);
        row("matmul", "500x784x128", time_ms([&] { ref::matmul(a, b); }, 5),
            time_ms([&] { matmul(a, b); }, 5));
    }
    {
        const Matrix a = random_matrix(512, 512, rng);
        const Matrix b = random_matrix(512, 512, rng);
        row("matmul", "512^3", time_ms([&] { ref::matmul(a, b); }, 5),
            time_ms([&] { matmul(a, b); }, 5));
    }
    {
        const Matrix a = random_matrix(2000, 2000, rng);
        row("transpose", "2000x2000", time_ms([&] { ref::transpose(a); }, 10),
            time_ms([&] { transpose(a); }, 10));
        const Matrix b = random_matrix(2000, 2000, rng);
        row("hadamard", "2000x2000", time_ms([&] { ref::hadamard(a, b); }, 10),
            time_ms([&] { hadamard(a, b); }, 10));
        row("std_dev", "2000x2000", time_ms([&] { ref::std_dev(a); }, 10),
            time_ms([&] { std_dev(a); }, 10));
    }
    {
        const Matrix g = random_matrix(500, 128, rng);
        row("topk k=25", "500x128", time_ms([&] { ref::topk_columns(g, 25); }, 10),
            time_ms([&] { meprop_topk(g, 25); }, 10));
    }

    std::printf("\nsparse backward products vs dense (500x784 weights, batch 128)\n");
    std::printf("%-24s %10s %10s %8s\n", "gradient sparsity", "dense(ms)", "sparse(ms)",
                "ratio");
    const Matrix w_t = random_matrix(784, 500, rng);
    const Matrix a_t = random_matrix(128, 784, rng);
    for (double density : {0.5, 0.1, 0.02}) {
        Matrix g(500, 128, 0.0);
        for (double& v : g.data)
            if (rng.uniform(0.0, 1.0) < density) v = std::floor(rng.uniform(-4.0, 4.0)) + 1.0;
        const SparseGrad sg = from_dense(g, 1.0);
        MacCounter ctr;
        const double dense_ms = time_ms([&] { matmul(w_t, g); }, 5) +
                                time_ms([&] { matmul(g, a_t); }, 5);
        const double sparse_ms = time_ms([&] { dense_times_sparse_t(w_t, sg, ctr); }, 5) +
                                 time_ms([&] { sparse_times_dense_t(sg, a_t, ctr); }, 5);
        std::printf("%-24.2f %10.3f %10.3f %8.2fx\n",
                    1.0 - static_cast<double>(sg.nnz()) / static_cast<double>(g.size()),
                    dense_ms, sparse_ms, dense_ms / sparse_ms);
    }
    return 0;
}
