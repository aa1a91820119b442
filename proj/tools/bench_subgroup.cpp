// Timing comparison of the OpenMP generator scans against the serial
// reference for the M and N subgroup computations, with an equality check.
#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "e2ab/finite_ring.hpp"
#include "e2ab/subgroups.hpp"

using namespace e2ab;

namespace {

template <class F>
double time_it(F &&f, std::vector<size_t> &out) {
    auto t0 = std::chrono::steady_clock::now();
    out = f().element_indices();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int bench(const std::string &spec) {
    RingPtr ring = parse_ring_spec(spec);
    std::cout << spec << "  (|R| = " << ring->size() << ", |R^x| = " << ring->units().size()
              << ")\n";
    int failures = 0;
    for (const char *name : {"M", "N"}) {
        bool is_m = name[0] == 'M';
        std::vector<size_t> serial, parallel;
        double ts = time_it([&] { return is_m ? m_subgroup_serial(ring) : n_subgroup_serial(ring); },
                            serial);
        double tp = time_it([&] { return is_m ? m_subgroup(ring) : n_subgroup(ring); }, parallel);
        bool same = serial == parallel;
        if (!same) ++failures;
        std::cout << "  " << name << ": serial " << ts << " s, parallel " << tp << " s, speedup "
                  << (tp > 0 ? ts / tp : 0.0) << "x, results " << (same ? "match" : "DIFFER")
                  << " (|" << name << "| = " << serial.size() << ")\n";
    }
    return failures;
}

}  // namespace

int main(int argc, char **argv) {
#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without OpenMP; both variants run serially\n";
#endif
    std::vector<std::string> specs;
    for (int i = 1; i < argc; ++i) specs.push_back(argv[i]);
    if (specs.empty())
        specs = {"Z/512", "Z/729", "Z/1024", "Z/4 x Z/4 x Z/4 x Z/4", "Z/2[x]/(x^9)"};
    int failures = 0;
    for (const auto &s : specs) {
        try {
            failures += bench(s);
        } catch (const std::exception &e) {
            std::cerr << "error on '" << s << "': " << e.what() << "\n";
            return 2;
        }
    }
    return failures == 0 ? 0 : 1;
}
