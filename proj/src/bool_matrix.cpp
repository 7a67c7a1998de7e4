#include "qreuse/bool_matrix.hpp"

#include <bit>
#include <stdexcept>

namespace qreuse {

namespace {

uint64_t tail_mask(int n) {
    int rem = n % 64;
    return rem == 0 ? ~uint64_t{0} : (uint64_t{1} << rem) - 1;
}

}  // namespace

BoolMatrix::BoolMatrix(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 1) {
        throw std::invalid_argument("BoolMatrix dimension must be at least 1");
    }
    bits_.assign(static_cast<size_t>(n_) * words_, 0);
}

BoolMatrix BoolMatrix::identity(int n) {
    BoolMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BoolMatrix BoolMatrix::ones(int n) {
    BoolMatrix m(n);
    uint64_t tail = tail_mask(n);
    for (int r = 0; r < n; ++r) {
        for (int w = 0; w < m.words_; ++w) {
            m.bits_[static_cast<size_t>(r) * m.words_ + w] =
                (w + 1 == m.words_) ? tail : ~uint64_t{0};
        }
    }
    return m;
}

void BoolMatrix::check_index(int row, int col) const {
    if (row < 0 || row >= n_ || col < 0 || col >= n_) {
        throw std::out_of_range("BoolMatrix index out of range");
    }
}

bool BoolMatrix::get(int row, int col) const {
    check_index(row, col);
    return (bits_[static_cast<size_t>(row) * words_ + col / 64] >> (col % 64)) & 1;
}

void BoolMatrix::set(int row, int col, bool value) {
    check_index(row, col);
    uint64_t& word = bits_[static_cast<size_t>(row) * words_ + col / 64];
    uint64_t mask = uint64_t{1} << (col % 64);
    if (value) {
        word |= mask;
    } else {
        word &= ~mask;
    }
}

bool BoolMatrix::all_ones() const {
    uint64_t tail = tail_mask(n_);
    for (int r = 0; r < n_; ++r) {
        for (int w = 0; w < words_; ++w) {
            uint64_t want = (w + 1 == words_) ? tail : ~uint64_t{0};
            if (bits_[static_cast<size_t>(r) * words_ + w] != want) return false;
        }
    }
    return true;
}

bool BoolMatrix::all_zero() const {
    for (uint64_t w : bits_) {
        if (w != 0) return false;
    }
    return true;
}

int BoolMatrix::count() const {
    int total = 0;
    for (uint64_t w : bits_) total += std::popcount(w);
    return total;
}

int BoolMatrix::row_count(int row) const {
    check_index(row, 0);
    int total = 0;
    for (int w = 0; w < words_; ++w) {
        total += std::popcount(bits_[static_cast<size_t>(row) * words_ + w]);
    }
    return total;
}

int BoolMatrix::col_count(int col) const {
    check_index(0, col);
    int total = 0;
    for (int r = 0; r < n_; ++r) total += get(r, col);
    return total;
}

void BoolMatrix::clear_row(int row) {
    check_index(row, 0);
    for (int w = 0; w < words_; ++w) bits_[static_cast<size_t>(row) * words_ + w] = 0;
}

void BoolMatrix::clear_col(int col) {
    check_index(0, col);
    uint64_t mask = ~(uint64_t{1} << (col % 64));
    for (int r = 0; r < n_; ++r) bits_[static_cast<size_t>(r) * words_ + col / 64] &= mask;
}

void BoolMatrix::and_row(int dst, int src) {
    check_index(dst, 0);
    check_index(src, 0);
    for (int w = 0; w < words_; ++w) {
        bits_[static_cast<size_t>(dst) * words_ + w] &=
            bits_[static_cast<size_t>(src) * words_ + w];
    }
}

BoolMatrix BoolMatrix::transposed() const {
    BoolMatrix out(n_);
    for (int r = 0; r < n_; ++r) {
        for (int c = 0; c < n_; ++c) {
            if (get(r, c)) out.set(c, r, true);
        }
    }
    return out;
}

BoolMatrix BoolMatrix::complement() const {
    BoolMatrix out(n_);
    uint64_t tail = tail_mask(n_);
    for (int r = 0; r < n_; ++r) {
        for (int w = 0; w < words_; ++w) {
            size_t i = static_cast<size_t>(r) * words_ + w;
            out.bits_[i] = ~bits_[i];
            if (w + 1 == words_) out.bits_[i] &= tail;
        }
    }
    return out;
}

bool BoolMatrix::operator==(const BoolMatrix& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
}

bool BoolMatrix::submatrix_of(const BoolMatrix& other) const {
    if (n_ != other.n_) return false;
    for (size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] & ~other.bits_[i]) return false;
    }
    return true;
}

std::string BoolMatrix::to_string() const {
    std::string out;
    out.reserve(static_cast<size_t>(n_) * (n_ + 1));
    for (int r = 0; r < n_; ++r) {
        for (int c = 0; c < n_; ++c) out.push_back(get(r, c) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("bool_product: dimension mismatch");
    }
    int n = a.size();
    BoolMatrix out(n);
    // Row i of the product is the OR of the rows of b selected by row i of a.
    for (int i = 0; i < n; ++i) {
        for (int l = 0; l < n; ++l) {
            if (!a.get(i, l)) continue;
            for (int w = 0; w < out.words_; ++w) {
                out.bits_[static_cast<size_t>(i) * out.words_ + w] |=
                    b.bits_[static_cast<size_t>(l) * b.words_ + w];
            }
        }
    }
    return out;
}

void apply_gate_update(BoolMatrix& b, std::span<const int> qubits) {
    int n = b.size();
    for (size_t i = 0; i < qubits.size(); ++i) {
        if (qubits[i] < 0 || qubits[i] >= n) {
            throw std::out_of_range("gate_update: column index out of range");
        }
        for (size_t j = i + 1; j < qubits.size(); ++j) {
            if (qubits[i] == qubits[j]) {
                throw std::invalid_argument("gate_update: duplicate column index");
            }
        }
    }
    for (int r = 0; r < n; ++r) {
        bool any = false;
        for (int q : qubits) any |= b.get(r, q);
        if (any) {
            for (int q : qubits) b.set(r, q, true);
        }
    }
}

BoolMatrix gate_update(const BoolMatrix& b, std::span<const int> qubits) {
    BoolMatrix out = b;
    apply_gate_update(out, qubits);
    return out;
}

bool is_nilpotent(const BoolMatrix& a) {
    int n = a.size();
    std::vector<int> indegree(n, 0);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            if (a.get(r, c)) ++indegree[c];
        }
    }
    std::vector<int> stack;
    stack.reserve(n);
    for (int v = 0; v < n; ++v) {
        if (indegree[v] == 0) stack.push_back(v);
    }
    int removed = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++removed;
        for (int c = 0; c < n; ++c) {
            if (a.get(v, c) && --indegree[c] == 0) stack.push_back(c);
        }
    }
    return removed == n;
}

BoolMatrix candidate_matrix(const BoolMatrix& b) {
    return b.transposed().complement();
}

}  // namespace qreuse
