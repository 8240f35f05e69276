#pragma once

#include <stdexcept>
#include <string>

namespace detkit {

// Base for everything the library throws on contract violations or bad input.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class ZeroDenominator : public Error {
public:
    ZeroDenominator() : Error("rational literal with zero denominator") {}
};

class BadToken : public Error {
public:
    explicit BadToken(const std::string& token)
        : Error("unparsable token: \"" + token + "\""), token(token) {}
    std::string token;
};

class BothZero : public Error {
public:
    BothZero() : Error("gcd of two zero polynomials") {}
};

class PoleAtPoint : public Error {
public:
    PoleAtPoint() : Error("denominator vanishes at the evaluation point") {}
};

class RaggedRows : public Error {
public:
    RaggedRows(int line, std::size_t got, std::size_t want)
        : Error("row on line " + std::to_string(line) + " has " + std::to_string(got) +
                " entries, expected " + std::to_string(want)) {}
};

class NotSquare : public Error {
public:
    NotSquare(std::size_t rows, std::size_t cols)
        : Error("matrix has " + std::to_string(rows) + " rows but " + std::to_string(cols) +
                " columns") {}
};

class IndexOutOfRange : public Error {
public:
    IndexOutOfRange(int i, int j, int order)
        : Error("index (" + std::to_string(i) + "," + std::to_string(j) +
                ") out of range for order " + std::to_string(order)) {}
};

class WrongOrder : public Error {
public:
    WrongOrder(int got, int want)
        : Error("matrix of order " + std::to_string(got) + " where order " +
                std::to_string(want) + " is required") {}
};

// Thrown by condensation when an interior divisor vanishes. Carries the
// 1-based position of the vanishing element within its stage matrix.
class ZeroDivisor : public Error {
public:
    ZeroDivisor(int i, int j)
        : Error("zero interior divisor at (" + std::to_string(i) + "," + std::to_string(j) + ")"),
          i(i), j(j) {}
    int i, j;
};

// A divisor that is the zero rational function even after perturbation.
class SymbolicZeroDivisor : public Error {
public:
    SymbolicZeroDivisor(int i, int j)
        : Error("interior divisor identically zero over the perturbation field at (" +
                std::to_string(i) + "," + std::to_string(j) + ")"),
          i(i), j(j) {}
    int i, j;
};

class ZeroPivot : public Error {
public:
    ZeroPivot(int r, int s)
        : Error("pivot at (" + std::to_string(r) + "," + std::to_string(s) + ") is zero"),
          r(r), s(s) {}
    int r, s;
};

class OnPivotLine : public Error {
public:
    OnPivotLine() : Error("sign factor undefined on the pivot row or column") {}
};

class EqualIndices : public Error {
public:
    EqualIndices() : Error("alien cofactor sum requires two distinct lines") {}
};

class TooLarge : public Error {
public:
    explicit TooLarge(int order, int cap)
        : Error("order " + std::to_string(order) + " exceeds the cap " + std::to_string(cap)) {}
};

class TooSmall : public Error {
public:
    explicit TooSmall(int order, int need)
        : Error("order " + std::to_string(order) + " below the minimum " + std::to_string(need)) {}
};

// Two independent evaluations that must agree did not. Reserved for
// cross-check machinery (paranoid mode, benchmark agreement), where a throw
// means a bug in this library rather than bad input.
class ContractViolation : public Error {
public:
    using Error::Error;
};

} // namespace detkit
