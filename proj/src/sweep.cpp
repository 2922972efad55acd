#include "wgqed/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <sstream>
#include <thread>

#include "wgqed/io.hpp"

namespace wgqed {

SweepResult run_sweep(
    const ScenarioConfig& base, const std::vector<std::string>& result_names,
    const std::function<std::vector<double>(const ScenarioConfig&)>& evaluate,
    int workers) {
    if (base.axes.empty()) throw std::invalid_argument("run_sweep: no axes configured");
    if (base.axes.size() > 2) throw std::invalid_argument("run_sweep: at most 2 axes");
    if (workers < 1) throw std::invalid_argument("run_sweep: workers must be >= 1");

    SweepResult result;
    result.result_names = result_names;
    for (const auto& a : base.axes) result.axis_names.push_back(a.name);

    // canonical lexicographic grid: first axis outermost
    const std::size_t n0 = base.axes[0].values.size();
    const std::size_t n1 = base.axes.size() == 2 ? base.axes[1].values.size() : 1;
    result.rows.resize(n0 * n1);

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= result.rows.size()) return;
            const std::size_t i0 = idx / n1, i1 = idx % n1;
            SweepRow& row = result.rows[idx];
            row.axis_values.push_back(base.axes[0].values[i0]);
            if (base.axes.size() == 2) row.axis_values.push_back(base.axes[1].values[i1]);

            ScenarioConfig point = base;
            point.axes.clear();
            try {
                apply_axis_value(point, base.axes[0].name, base.axes[0].values[i0]);
                if (base.axes.size() == 2)
                    apply_axis_value(point, base.axes[1].name, base.axes[1].values[i1]);
                row.results = evaluate(point);
                if (row.results.size() != result_names.size())
                    throw std::runtime_error("evaluate returned wrong column count");
            } catch (const std::exception& e) {
                row.failed = true;
                row.error = e.what();
                row.results.assign(result_names.size(),
                                   std::numeric_limits<double>::quiet_NaN());
            }
        }
    };

    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        const int count = static_cast<int>(
            std::min<std::size_t>(static_cast<std::size_t>(workers), result.rows.size()));
        pool.reserve(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return result;
}

std::string sweep_to_csv(const SweepResult& result) {
    std::ostringstream out;
    for (std::size_t i = 0; i < result.axis_names.size(); ++i) {
        if (i) out << ',';
        out << result.axis_names[i];
    }
    for (const auto& name : result.result_names) out << ',' << name;
    out << ",status\n";
    for (const auto& row : result.rows) {
        for (std::size_t i = 0; i < row.axis_values.size(); ++i) {
            if (i) out << ',';
            out << format_double(row.axis_values[i]);
        }
        for (double v : row.results) out << ',' << format_double(v);
        out << ',' << (row.failed ? "failed" : "ok") << '\n';
    }
    return out.str();
}

}  // namespace wgqed
