// Benchmark comparing the serial enumeration reference against the
// OpenMP-parallel kernels on representative workloads.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "adc/slice_transfer.hpp"

using namespace adc;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <typename F>
double timed(F&& body) {
    auto start = Clock::now();
    body();
    return ms_since(start);
}

void report(const char* name, std::size_t results, double serial_ms, double parallel_ms,
            int jobs) {
    std::printf("%-36s %8zu results  serial %9.1f ms  jobs=%d %9.1f ms  speedup %.2fx\n",
                name, results, serial_ms, jobs, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
    int jobs = argc > 1 ? std::atoi(argv[1]) : 2;

    {
        ComplexPtr K = oriental_complex(4);
        ComplexPtr L = oriental_complex(2);
        std::size_t count = 0;
        EnumerationBudget b1, b2;
        double serial = timed([&] { count = enumerate_morphisms_serial(K, L, b1).size(); });
        double parallel =
            timed([&] { count = enumerate_morphisms(K, L, b2, {}, jobs).size(); });
        report("hom(c4, c2)", count, serial, parallel, jobs);
    }
    {
        TensorProduct P = tensor_complex(oriental_complex(2), disk_complex(1), 3);
        std::size_t count = 0;
        EnumerationBudget b1, b2;
        double serial = timed([&] { count = enumerate_cells_serial(*P.complex, 2, b1).size(); });
        double parallel = timed([&] { count = enumerate_cells(*P.complex, 2, b2, jobs).size(); });
        report("cells(c2 (x) d1, dim 2)", count, serial, parallel, jobs);
    }
    {
        ComplexPtr K = oriental_complex(2);
        std::size_t count = 0;
        EnumerationBudget b1, b2;
        double serial = timed([&] {
            Nerve N = nerve(K, 4, b1, 1);
            count = N.simplices[4].size();
        });
        double parallel = timed([&] {
            Nerve N = nerve(K, 4, b2, jobs);
            count = N.simplices[4].size();
        });
        report("nerve(c2) through level 4", count, serial, parallel, jobs);
    }
    {
        ComplexPtr M = oriental_complex(3);
        AdcMorphism anchor = cosimplicial_image(SimplexMap(2, 3, {0, 1, 2}));
        std::size_t count = 0;
        double serial = timed([&] {
            auto S = nerve_slice(2, M, anchor, 3, 3, 1);
            count = S->simplices[3].size();
        });
        double parallel = timed([&] {
            auto S = nerve_slice(2, M, anchor, 3, 3, jobs);
            count = S->simplices[3].size();
        });
        report("slice(c3 below a face, level 3)", count, serial, parallel, jobs);
    }
    return 0;
}
