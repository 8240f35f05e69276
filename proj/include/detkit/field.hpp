#pragma once

#include <concepts>
#include <cstdint>

namespace detkit {

// Exact-arithmetic operation tally. Divisions are the expensive ones for
// big rationals, so they get their own column everywhere.
struct OpCounter {
    std::uint64_t adds = 0;
    std::uint64_t subs = 0;
    std::uint64_t muls = 0;
    std::uint64_t divs = 0;

    OpCounter& operator+=(const OpCounter& o) {
        adds += o.adds;
        subs += o.subs;
        muls += o.muls;
        divs += o.divs;
        return *this;
    }
    std::uint64_t total() const { return adds + subs + muls + divs; }
    bool operator==(const OpCounter&) const = default;
};

// Anything the elimination kernels run over: exact field elements with
// value-semantic arithmetic and an exact zero test.
template <typename T>
concept FieldElement = requires(const T a, const T b) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { a / b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    T{};
    T{1};
};

// Counted arithmetic. The counter pointer may be null, in which case this is
// a zero-cost pass-through; kernels are written against FieldOps so the same
// code path serves both counted and uncounted runs.
template <FieldElement T>
class FieldOps {
public:
    explicit FieldOps(OpCounter* counter = nullptr) : counter_(counter) {}

    T add(const T& a, const T& b) const {
        if (counter_) ++counter_->adds;
        return a + b;
    }
    T sub(const T& a, const T& b) const {
        if (counter_) ++counter_->subs;
        return a - b;
    }
    T mul(const T& a, const T& b) const {
        if (counter_) ++counter_->muls;
        return a * b;
    }
    T div(const T& a, const T& b) const {
        if (counter_) ++counter_->divs;
        return a / b;
    }

    OpCounter* counter() const { return counter_; }

private:
    OpCounter* counter_;
};

} // namespace detkit
