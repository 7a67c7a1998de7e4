#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qreuse {

/// Dense square Boolean matrix with bit-packed rows.
///
/// Semantics are entrywise; the packing is an implementation detail. Rows and
/// columns are indexed from 0.
class BoolMatrix {
public:
    explicit BoolMatrix(int n);

    static BoolMatrix identity(int n);
    static BoolMatrix ones(int n);

    int size() const { return n_; }

    bool get(int row, int col) const;
    void set(int row, int col, bool value);

    bool all_ones() const;
    bool all_zero() const;

    /// Number of entries equal to one.
    int count() const;
    int row_count(int row) const;
    int col_count(int col) const;

    void clear_row(int row);
    void clear_col(int col);

    /// row[dst] &= row[src], entrywise.
    void and_row(int dst, int src);

    BoolMatrix transposed() const;
    BoolMatrix complement() const;

    bool operator==(const BoolMatrix& other) const;
    bool operator!=(const BoolMatrix& other) const { return !(*this == other); }

    /// Entrywise a <= b (every one of *this is a one of other).
    bool submatrix_of(const BoolMatrix& other) const;

    /// Debug dump: one row per line, '0'/'1' characters.
    std::string to_string() const;

private:
    void check_index(int row, int col) const;

    int n_ = 0;
    int words_ = 0;
    std::vector<uint64_t> bits_;

    friend BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b);
    friend void apply_gate_update(BoolMatrix& b, std::span<const int> qubits);
};

/// Boolean matrix product: (a (*) b)_{ij} = OR_l (a_{il} AND b_{lj}).
BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b);

/// Replace every listed column of `b` by the entrywise OR of those columns.
/// Indices must be distinct and in range.
BoolMatrix gate_update(const BoolMatrix& b, std::span<const int> qubits);

/// In-place variant of gate_update.
void apply_gate_update(BoolMatrix& b, std::span<const int> qubits);

/// True iff some Boolean power of `a` is the zero matrix, equivalently the
/// digraph with edge (i, j) for every a_{ij} = 1 is acyclic. Decided by
/// Kahn-style cycle detection rather than matrix powers.
bool is_nilpotent(const BoolMatrix& a);

/// Candidate matrix of a biadjacency matrix: C = NOT(B^T). Entry (t, r) = 1
/// means the edge terminal t -> root r may legally be added.
BoolMatrix candidate_matrix(const BoolMatrix& b);

}  // namespace qreuse
