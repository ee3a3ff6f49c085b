#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace borderlab {

// Row-major sparse matrix with exact rational entries.  Rows are finalized
// (sorted, zero-free) lazily before any computation.
class SparseMatrixQ {
public:
    SparseMatrixQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void addEntry(std::size_t r, std::size_t c, mpq_class v);
    const std::vector<std::pair<std::size_t, mpq_class>>& row(std::size_t r) const;
    std::size_t nonzeroCount() const;

    // Merges duplicate positions, drops zeros, sorts each row by column.
    void finalize() const;

    // Coordinate text dump: "row col value" per line, 0-based indices.
    void dumpCoordinate(std::ostream& os) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    mutable std::vector<std::vector<std::pair<std::size_t, mpq_class>>> data_;
    mutable bool finalized_ = false;
};

// Rank over Q via fraction-free sparse elimination (gcd-combined row updates
// with per-row content stripping; pivots preferred by small magnitude, then
// Markowitz-style sparsity).
std::size_t rankExact(const SparseMatrixQ& M);

// Rank over GF(p).  Entries are reduced mod p; a denominator divisible by p
// is rejected.  Throws ArgumentError for composite p.
std::size_t rankModP(const SparseMatrixQ& M, std::uint64_t p);

// Basis of the right kernel; each vector is cleared to coprime integers and
// vectors are sorted by the column of their first nonzero entry.  Vectors are
// dense of length cols().
std::vector<std::vector<mpz_class>> kernelBasisRational(const SparseMatrixQ& M);

bool isPrime(std::uint64_t p);

}  // namespace borderlab
