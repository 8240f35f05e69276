#include "detkit/chio.hpp"

namespace detkit {
namespace {

bool all_zero(const RationalMatrix& m) {
    for (int i = 1; i <= m.order(); ++i)
        for (int j = 1; j <= m.order(); ++j)
            if (!m.at(i, j).is_zero()) return false;
    return true;
}

std::pair<int, int> choose_pivot(const RationalMatrix& m, PivotPolicy policy) {
    int n = m.order();
    if (policy == PivotPolicy::FirstNonzero) {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (!m.at(i, j).is_zero()) return {i, j};
        return {0, 0};
    }
    int br = 0, bs = 0;
    BigRational best(0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            BigRational mag = m.at(i, j).abs();
            if (mag > best) { // strict: earliest entry wins ties
                best = std::move(mag);
                br = i;
                bs = j;
            }
        }
    return {br, bs};
}

} // namespace

ChioResult chio_det(const RationalMatrix& a, const ChioOptions& options) {
    int n = a.order();
    if (n < 1) throw TooSmall(n, 1);
    std::size_t usable = static_cast<std::size_t>(std::max(0, n - 2));
    if (options.forced_pivots.size() > usable)
        throw Error("forced pivot list has " + std::to_string(options.forced_pivots.size()) +
                    " entries; an order-" + std::to_string(n) + " reduction uses at most " +
                    std::to_string(usable));

    FieldOps<BigRational> ops(options.counter);
    OpCounter reduction;
    FieldOps<BigRational> reduction_ops(&reduction);

    ChioResult out;
    RationalMatrix cur = a;
    BigRational divisor(1);
    std::size_t stage_idx = 0;

    while (cur.order() >= 3) {
        if (all_zero(cur)) {
            out.trace.stages.push_back({cur, 0, 0, BigRational(0)});
            out.trace.divisor = std::move(divisor);
            out.trace.reduction_ops = reduction;
            if (options.counter) *options.counter += reduction;
            return out; // value and final_z default to 0
        }
        auto [r, s] = stage_idx < options.forced_pivots.size()
                          ? options.forced_pivots[stage_idx]
                          : choose_pivot(cur, options.policy);
        BigRational pivot = cur.at(r, s);
        if (pivot.is_zero()) throw ZeroPivot(r, s); // only reachable via forced pivots
        out.trace.stages.push_back({cur, r, s, pivot});
        // Stage of order m contributes pivot^(m-2) to the deferred divisor.
        for (int t = 0; t < cur.order() - 2; ++t) divisor = ops.mul(divisor, pivot);
        cur = chio_reduce(cur, r, s, reduction_ops);
        ++stage_idx;
    }

    BigRational z = cur.order() == 2 ? det2(cur, ops) : cur.at(1, 1);
    out.trace.stages.push_back({std::move(cur), 0, 0, BigRational(0)});
    out.trace.final_z = z;
    out.trace.divisor = divisor;
    out.trace.reduction_ops = reduction;
    if (options.counter) *options.counter += reduction;
    out.value = divisor.is_one() ? std::move(z) : ops.div(z, divisor);
    return out;
}

} // namespace detkit
