// SPDX-License-Identifier: MIT
//
// Timing comparison of the serial and OpenMP sweep kernels on the workloads
// the verification suites actually run. The parallel kernels must return
// bitwise identical results, so the table also reports equality.

#include <chrono>
#include <cstdio>
#include <functional>

#include "d2lab/block.hpp"
#include "d2lab/io.hpp"
#include "d2lab/ladder.hpp"
#include "d2lab/phi.hpp"
#include "d2lab/sampling.hpp"
#include "d2lab/sweep.hpp"

using namespace d2lab;

namespace {

double time_ms(const std::function<void()>& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

void row(const char* name, double ms_serial, double ms_parallel, bool equal) {
    std::printf("%-28s %10.1f ms %10.1f ms %8.2fx   %s\n", name, ms_serial,
                ms_parallel, ms_serial / ms_parallel,
                equal ? "bitwise equal" : "MISMATCH");
}

} // namespace

int main() {
    std::printf("sweep kernel benchmark (parallel kernels %s)\n\n",
                sweep::parallel_enabled() ? "enabled" : "DISABLED: serial fallback");
    std::printf("%-28s %13s %13s %9s\n", "workload", "serial", "parallel",
                "speedup");

    const phi::AdmissiblePhi ph = phi::make_phi("pow:0.5");
    const block::BlockParams p = block::make_block(3, 0.125, ph);

    {
        const auto pts = sampling::ball_points(3, 400000, 2.0 / 3.0, 0);
        const auto work = [&](sweep::Exec exec) {
            return sweep::max_abs_over(pts.size(), exec, [&](std::size_t i) {
                return block::block_eval(p, pts[i]).hessian(0, 1);
            });
        };
        double a = 0.0, b = 0.0;
        const double ms_s = time_ms([&] { a = work(sweep::Exec::serial); });
        const double ms_p = time_ms([&] { b = work(sweep::Exec::parallel); });
        row("sup |hess(1,2)|, 400k pts", ms_s, ms_p, a == b);
    }
    {
        const auto pts = sampling::ball_points(3, 200000, 2.0 / 3.0, 1);
        const auto work = [&](sweep::Exec exec) {
            return sweep::tabulate<double>(pts.size(), exec, [&](std::size_t i) {
                return block::block_eval(p, pts[i]).laplacian;
            });
        };
        std::vector<double> a, b;
        const double ms_s = time_ms([&] { a = work(sweep::Exec::serial); });
        const double ms_p = time_ms([&] { b = work(sweep::Exec::parallel); });
        row("Laplacian table, 200k pts", ms_s, ms_p, a == b);
    }
    {
        ladder::LadderParams params;
        params.phi = ph;
        const ladder::Ladder lad = ladder::build_ladder(params);
        std::string a, b;
        const double ms_s =
            time_ms([&] { a = io::sample_ball_csv(lad, 3, 192, sweep::Exec::serial); });
        const double ms_p =
            time_ms([&] { b = io::sample_ball_csv(lad, 3, 192, sweep::Exec::parallel); });
        row("ball CSV render, 192x192", ms_s, ms_p, a == b);
    }
    return 0;
}
