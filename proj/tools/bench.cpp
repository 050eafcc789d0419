// Benchmark: OpenMP kernels against their serial reference implementations.
// Two hot paths exist: exact vertex enumeration over C(m,n) subsets, and the
// per-sample certification pipeline (lift + frame + SVD).

#include <chrono>
#include <cstdio>

#include "toriclag/gale.hpp"
#include "toriclag/io.hpp"
#include "toriclag/sampler.hpp"

using namespace toriclag;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// Cube [-1,1]^n as a Gale configuration: 2n inequalities, 2^n vertices,
// C(2n,n) subsets to scan.
GaleDual cube(int n) {
    GaleDual gd;
    gd.m = 2 * n;
    gd.n = n;
    for (int j = 0; j < n; ++j) {
        IntVec plus(n, Int(0)), minus(n, Int(0));
        plus[j] = 1;
        minus[j] = -1;
        gd.a_vectors.push_back(plus);
        gd.a_vectors.push_back(minus);
        gd.b_offsets.push_back(Rat(1));
        gd.b_offsets.push_back(Rat(1));
    }
    gd.lambda = hnf(gd.a_vectors, n);
    return gd;
}

void bench_vertices(int n) {
    GaleDual gd = cube(n);
    auto t0 = std::chrono::steady_clock::now();
    auto serial = enumerate_vertices_serial(gd);
    double t_serial = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    auto parallel = enumerate_vertices_parallel(gd);
    double t_parallel = ms_since(t0);
    bool same = serial.size() == parallel.size();
    for (std::size_t i = 0; same && i < serial.size(); ++i)
        same = serial[i].point == parallel[i].point && serial[i].active == parallel[i].active;
    std::printf("vertex enumeration, cube n=%d (%zu vertices): serial %.1f ms, parallel %.1f ms, speedup %.2fx, %s\n",
                n, serial.size(), t_serial, t_parallel, t_parallel > 0 ? t_serial / t_parallel : 0.0,
                same ? "results match" : "RESULTS DIFFER");
}

void bench_batch(int m, int count) {
    InputDocument doc = example_document("projective", m);
    Tolerances tol;
    auto t0 = std::chrono::steady_clock::now();
    BatchSummary serial = verify_batch_serial(doc.gamma, doc.delta, count, 1, tol);
    double t_serial = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    BatchSummary parallel = verify_batch(doc.gamma, doc.delta, count, 1, tol);
    double t_parallel = ms_since(t0);
    bool same = serial.pass_fraction == parallel.pass_fraction && serial.worst_pairing == parallel.worst_pairing &&
                serial.worst_rank_ratio == parallel.worst_rank_ratio;
    std::printf("batch certification, projective m=%d, %d samples: serial %.1f ms, parallel %.1f ms, speedup %.2fx, %s\n",
                m, count, t_serial, t_parallel, t_parallel > 0 ? t_serial / t_parallel : 0.0,
                same ? "results match" : "RESULTS DIFFER");
}

}  // namespace

int main() {
    bench_vertices(6);
    bench_vertices(7);
    bench_batch(3, 2000);
    bench_batch(6, 1000);
    return 0;
}
