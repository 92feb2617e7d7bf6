#include "logdet/estimator.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "logdet/dense_cholesky.hpp"

namespace logdet {

namespace {

struct RowScratch {
    PatternRow alpha;
    PatternRow beta;
    DenseSubmatrix sub;
};

// Fills slots [i*m .. i*m + m) with row i's contributions.
//
// The patterns are nested, so an unchanged lower-pattern size means an
// unchanged submatrix: the previous pivot is reused without refactorizing.
// Once the full pattern stops growing the remaining powers are copies.
void compute_row(const SparseSpdMatrix& a, Index i, std::size_t max_power, RowScratch& scratch,
                 std::vector<RowContribution>& slots, std::size_t slot_base) {
    scratch.alpha = row_pattern(a, i);
    Index prev_beta_size = 0;
    bool alpha_saturated = false;
    double current_log = 0.0;
    Index current_count = 0;

    for (std::size_t j = 0; j < max_power; ++j) {
        if (!alpha_saturated) {
            scratch.beta = lower_restrict(scratch.alpha);
            if (scratch.beta.cols.size() != prev_beta_size) {
                prev_beta_size = scratch.beta.cols.size();
                extract_submatrix_into(a, scratch.beta, scratch.sub);
                double pivot_sqrt = 0.0;
                if (!detail::last_pivot_in_place(scratch.sub.entries, scratch.sub.size,
                                                 pivot_sqrt)) {
                    throw NotPositiveDefiniteError(
                        "nonpositive pivot in the subproblem of row " + std::to_string(i), i);
                }
                current_log = std::log(pivot_sqrt * pivot_sqrt);
                current_count = scratch.beta.cols.size();
            }
        }
        slots[slot_base + j] = {current_log, current_count};

        if (j + 1 < max_power && !alpha_saturated) {
            PatternRow next = expand_row(scratch.alpha, a);
            if (next.cols.size() == scratch.alpha.cols.size()) {
                alpha_saturated = true;
            } else {
                scratch.alpha = std::move(next);
            }
        }
    }
}

}  // namespace

std::vector<RowContribution> row_contributions(const SparseSpdMatrix& a, Index i,
                                               std::size_t max_power) {
    if (max_power < 1) {
        throw DomainError("max power must be at least 1");
    }
    std::vector<RowContribution> slots(max_power);
    RowScratch scratch;
    compute_row(a, i, max_power, scratch, slots, 0);
    return slots;
}

EstimateSeries estimate_series(const SparseSpdMatrix& a, std::size_t max_power,
                               std::size_t workers) {
    if (max_power < 1) {
        throw DomainError("max power must be at least 1");
    }
    const Index n = a.order();
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    workers = std::min<std::size_t>(workers, n);

    std::vector<RowContribution> slots(n * max_power);

    // Row tasks are handed out in chunks; every result lands in its row's
    // slot, so the fold below is independent of scheduling.
    std::atomic<Index> next_row{0};
    const Index chunk = std::max<Index>(1, n / (workers * 16));

    std::mutex failure_mutex;
    Index failed_row = n;
    std::exception_ptr failure;
    std::atomic<bool> abort{false};

    auto worker_loop = [&]() {
        RowScratch scratch;
        for (;;) {
            const Index begin = next_row.fetch_add(chunk);
            if (begin >= n || abort.load(std::memory_order_relaxed)) {
                return;
            }
            const Index end = std::min(begin + chunk, n);
            for (Index i = begin; i < end; ++i) {
                try {
                    compute_row(a, i, max_power, scratch, slots, i * max_power);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (i < failed_row) {
                        failed_row = i;
                        failure = std::current_exception();
                    }
                    abort.store(true, std::memory_order_relaxed);
                    return;
                }
            }
        }
    };

    if (workers == 1) {
        worker_loop();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(worker_loop);
        }
        for (std::thread& t : pool) {
            t.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    // Sequential fold in ascending row order; bit-identical for any worker
    // count.
    EstimateSeries series;
    series.estimates.assign(max_power, 0.0);
    series.entry_counts.assign(max_power, 0);
    series.densities.assign(max_power, 0.0);
    for (Index i = 0; i < n; ++i) {
        const RowContribution* row = slots.data() + i * max_power;
        for (std::size_t j = 0; j < max_power; ++j) {
            series.estimates[j] += row[j].log_pivot;
            series.entry_counts[j] += row[j].pattern_size;
        }
    }
    for (std::size_t j = 0; j < max_power; ++j) {
        series.densities[j] = pattern_density(series.entry_counts[j], n);
    }
    return series;
}

}  // namespace logdet
