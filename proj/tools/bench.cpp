// Compares the naive cofactor baseline against the memoized subset
// determinant/adjugate, sequentially and with the parallel layer enabled.
// Usage: detrep-bench [max_size]
#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "detrep/matrix.hpp"
#include "detrep/parallel.hpp"
#include "detrep/reference.hpp"
#include "detrep/rng.hpp"

using namespace detrep;

namespace {

PolyMatrix random_linear_matrix(std::size_t d, std::size_t nvars, SplitMix64& rng) {
    std::vector<std::vector<Polynomial>> rows(d, std::vector<Polynomial>(d, Polynomial(nvars)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Polynomial p(nvars);
            for (std::size_t v = 0; v < nvars; ++v) {
                long c = rng.range(-3, 3);
                if (c != 0)
                    p = p + Polynomial::variable(nvars, v) * Rat(c);
            }
            rows[i][j] = p;
        }
    return PolyMatrix::from_rows(rows);
}

template <typename F>
double time_ms(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t max_size = 9;
    if (argc > 1) max_size = std::stoul(argv[1]);
    const std::size_t nvars = 3;

    std::cout << "size  ref_det_ms  dp_det_seq_ms  dp_det_par_ms  ref_adj_ms  dp_adj_seq_ms  "
                 "dp_adj_par_ms\n";
    for (std::size_t d = 3; d <= max_size; ++d) {
        SplitMix64 rng(42, d);
        PolyMatrix M = random_linear_matrix(d, nvars, rng);

        Polynomial det_ref, det_dp;
        PolyMatrix adj_ref = M, adj_dp = M;

        // The naive baseline walks d! cofactor paths; skip it once that
        // stops being a lunch-break number.
        const bool run_ref = d <= 8;
        double t_ref_det = run_ref ? time_ms([&] { det_ref = reference::determinant(M); }) : -1;

        parallel::set_max_threads(1);
        double t_dp_det_seq = time_ms([&] { det_dp = determinant(M); });
        if (run_ref && !(det_ref == det_dp)) {
            std::cerr << "determinant mismatch at size " << d << "\n";
            return 1;
        }

        parallel::set_max_threads(0);
        double t_dp_det_par = time_ms([&] { det_dp = determinant(M); });

        double t_ref_adj = run_ref ? time_ms([&] { adj_ref = reference::adjugate(M); }) : -1;

        parallel::set_max_threads(1);
        double t_dp_adj_seq = time_ms([&] { adj_dp = adjugate(M); });
        if (run_ref && !(adj_ref == adj_dp)) {
            std::cerr << "adjugate mismatch at size " << d << "\n";
            return 1;
        }

        parallel::set_max_threads(0);
        double t_dp_adj_par = time_ms([&] { adj_dp = adjugate(M); });

        std::cout << d << "  " << t_ref_det << "  " << t_dp_det_seq << "  " << t_dp_det_par
                  << "  " << t_ref_adj << "  " << t_dp_adj_seq << "  " << t_dp_adj_par << "\n";
    }
    return 0;
}
