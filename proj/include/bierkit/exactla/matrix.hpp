#pragma once

#include "bierkit/exactla/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace bierkit::exactla {

using Vec = std::vector<Rational>;

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Vec add(std::span<const Rational> a, std::span<const Rational> b);
Vec sub(std::span<const Rational> a, std::span<const Rational> b);
Vec scale(std::span<const Rational> a, const Rational& s);
bool is_zero(std::span<const Rational> a);
Rational sum(std::span<const Rational> a);

// Positive multiple of `v` with integer entries whose gcd is 1. The zero
// vector is returned unchanged.
Vec primitive_integer(std::span<const Rational> v);

// Same as primitive_integer, then flips sign so the first nonzero entry is
// positive.
Vec primitive_integer_normalized(std::span<const Rational> v);

/// Dense rectangular matrix of rationals.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    // Throws ValidationError if the rows are ragged.
    explicit RatMatrix(std::vector<Vec> rows);
    // Explicit column count so that 0-row matrices keep their width.
    RatMatrix(std::vector<Vec> rows, std::size_t cols);

    std::size_t rows() const { return data_.size(); }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    const Vec& row(std::size_t i) const { return data_[i]; }
    const std::vector<Vec>& row_list() const { return data_; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i][j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i][j]; }

    void append_row(Vec r);
    RatMatrix transpose() const;
    Vec apply(std::span<const Rational> v) const;

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::vector<Vec> data_;
    std::size_t cols_ = 0;
};

/**
 * Fraction-free (Bareiss) row echelon form.
 *
 * Each input row is scaled to integers, then eliminated with exact integer
 * division by the previous pivot. The pivot of each step is the first
 * nonzero entry of the current column among the remaining rows.
 */
struct Echelon {
    std::vector<std::vector<BigInt>> rows;  // nonzero rows only, in pivot order
    std::vector<std::size_t> pivot_cols;
    std::size_t cols = 0;

    std::size_t rank() const { return pivot_cols.size(); }
};

Echelon echelon(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

/**
 * Basis of {v : M v = 0}. One vector per free column (increasing), each
 * with integer entries of content 1 and a positive first nonzero entry.
 */
std::vector<Vec> nullspace(const RatMatrix& m);

// Some solution of M x = b (free variables set to zero), or nullopt.
std::optional<Vec> solve(const RatMatrix& m, std::span<const Rational> b);

// True iff `v` lies in the row space of `m`.
bool in_row_space(const RatMatrix& m, std::span<const Rational> v);

}  // namespace bierkit::exactla
