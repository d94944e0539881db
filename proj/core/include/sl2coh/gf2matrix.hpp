#ifndef SL2COH_GF2MATRIX_HPP
#define SL2COH_GF2MATRIX_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace sl2coh {

/// Bit-packed GF(2) row vector.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    size_t size() const { return bits_; }
    bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }
    void flip(size_t i) { words_[i >> 6] ^= uint64_t(1) << (i & 63); }
    void operator^=(const BitVec& other) {
        for (size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    }
    bool any() const {
        for (uint64_t w : words_)
            if (w) return true;
        return false;
    }
    /// Index of the lowest set bit, or npos.
    size_t first_set() const;
    /// Index of the lowest set bit at or after `from`, or npos.
    size_t next_set(size_t from) const;
    size_t popcount() const;
    static constexpr size_t npos = size_t(-1);

    bool operator==(const BitVec& other) const { return bits_ == other.bits_ && words_ == other.words_; }
    const std::vector<uint64_t>& words() const { return words_; }

  private:
    size_t bits_ = 0;
    std::vector<uint64_t> words_;
};

/// Incremental reduced-row-echelon GF(2) solver over a fixed column count.
/// Rows are kept fully reduced with unique pivots; the row set is the unique
/// RREF of the span, independent of insertion order.  Optionally each row
/// carries an augmentation vector tracking the combination of inserted rows.
class Gf2Rref {
  public:
    explicit Gf2Rref(size_t cols, size_t aug_cols = 0) : cols_(cols), aug_cols_(aug_cols) {}

    size_t cols() const { return cols_; }
    size_t rank() const { return rows_.size(); }

    /// Reduce v against the current rows; returns the residue.
    BitVec reduce(BitVec v) const;
    /// Reduce v, also xoring the matching augmentation rows into aug.
    BitVec reduce(BitVec v, BitVec& aug) const;
    bool contains(const BitVec& v) const { return !reduce(v).any(); }

    /// Insert a row (with optional augmentation); returns true if the rank grew.
    bool add(BitVec v);
    bool add(BitVec v, BitVec aug);

    /// Rows sorted by pivot column (canonical order).
    std::vector<std::pair<size_t, const BitVec*>> sorted_rows() const;
    const BitVec* row_for_pivot(size_t pivot) const;
    const BitVec* aug_for_pivot(size_t pivot) const;
    std::vector<size_t> pivots() const;

  private:
    size_t cols_;
    size_t aug_cols_;
    struct Row {
        size_t pivot;
        BitVec v;
        BitVec aug;
    };
    std::vector<Row> rows_;                              // unordered internally
    std::vector<std::pair<size_t, size_t>> pivot_map_;   // sorted (pivot, row index)
    const Row* lookup(size_t pivot) const;
};

/// Forward-elimination over sparse GF(2) rows (sorted column-index lists).
/// Used for rank/kernel of large cochain differentials.  Pivot is the least
/// column of a row; rows are reduced front-to-back only (rank is exact, the
/// stored rows are not an RREF).
class SparseElim {
  public:
    explicit SparseElim(bool track_kernel = false) : track_(track_kernel) {}

    size_t rank() const { return pivot_rows_.size(); }
    /// Adds a row; returns true if the row was independent.  When kernel
    /// tracking is on, a dependent row records a kernel combination over the
    /// sequence of rows added so far.
    bool add(std::vector<uint64_t> row);

    const std::vector<std::vector<bool>>& kernel() const { return kernel_; }
    size_t added() const { return added_; }

  private:
    bool track_ = false;
    size_t added_ = 0;
    std::vector<std::pair<std::vector<uint64_t>, std::vector<bool>>> pivot_rows_;
    std::vector<std::pair<uint64_t, size_t>> pivot_index_;  // sorted (pivot col, row idx)
    std::vector<std::vector<bool>> kernel_;
    size_t find(uint64_t col) const;
};

/// Sorted symmetric difference of two sorted index lists.
std::vector<uint64_t> xor_sorted(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b);

}  // namespace sl2coh

#endif
