// Times the OpenMP coloring search against the serial reference.
//
//   bench_kernels [--reps N]

#include "pcw/partition.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace pcw;

namespace {

struct Case {
    std::string name;
    std::function<RelationResult()> parallel, serial;
};

double time_ms(const std::function<RelationResult()>& f, int reps, RelationResult& last) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i)
        last = f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parallel vs serial coloring search"};
    int reps = 3;
    app.add_option("--reps", reps, "Repetitions per case")->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);

    const std::vector<Case> cases = {
        {"ramsey n=6 m=3 k=2", [] { return ramsey_holds(6, 3, 2); }, [] { return serial::ramsey_holds(6, 3, 2); }},
        {"ramsey n=5 m=3 k=2", [] { return ramsey_holds(5, 3, 2); }, [] { return serial::ramsey_holds(5, 3, 2); }},
        {"plain n=6 m=2 k=2", [] { return relation_holds(6, 2, 2, Variant::plain); },
         [] { return serial::relation_holds(6, 2, 2, Variant::plain); }},
        {"mixed n=6 m=2 k=2", [] { return relation_holds(6, 2, 2, Variant::mixed); },
         [] { return serial::relation_holds(6, 2, 2, Variant::mixed); }},
        {"square n=6 s=4 k=3", [] { return square_bracket_holds(6, 4, 3); },
         [] { return serial::square_bracket_holds(6, 4, 3); }},
    };

    std::printf("threads %d, reps %d\n", omp_get_max_threads(), reps);
    std::printf("%-22s %12s %12s %8s %s\n", "case", "parallel_ms", "serial_ms", "speedup", "agree");
    bool all_agree = true;
    for (const auto& c : cases) {
        RelationResult a, b;
        const double tp = time_ms(c.parallel, reps, a);
        const double ts = time_ms(c.serial, reps, b);
        const bool agree = a.holds == b.holds && a.counterexample == b.counterexample;
        all_agree = all_agree && agree;
        std::printf("%-22s %12.2f %12.2f %8.2f %s\n", c.name.c_str(), tp, ts, ts / tp, agree ? "yes" : "NO");
    }
    return all_agree ? 0 : 1;
}
