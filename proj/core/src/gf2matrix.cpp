#include "sl2coh/gf2matrix.hpp"

#include <algorithm>
#include <bit>

namespace sl2coh {

size_t BitVec::first_set() const {
    for (size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return (w << 6) + size_t(std::countr_zero(words_[w]));
    return npos;
}

size_t BitVec::next_set(size_t from) const {
    if (from >= bits_) return npos;
    size_t w = from >> 6;
    uint64_t masked = words_[w] & (~uint64_t(0) << (from & 63));
    if (masked) return (w << 6) + size_t(std::countr_zero(masked));
    for (++w; w < words_.size(); ++w)
        if (words_[w]) return (w << 6) + size_t(std::countr_zero(words_[w]));
    return npos;
}

size_t BitVec::popcount() const {
    size_t n = 0;
    for (uint64_t w : words_) n += size_t(std::popcount(w));
    return n;
}

const Gf2Rref::Row* Gf2Rref::lookup(size_t pivot) const {
    auto it = std::lower_bound(pivot_map_.begin(), pivot_map_.end(), std::make_pair(pivot, size_t(0)));
    if (it != pivot_map_.end() && it->first == pivot) return &rows_[it->second];
    return nullptr;
}

BitVec Gf2Rref::reduce(BitVec v) const {
    // clear every pivot column, not only a matching leading bit, so the
    // residue is the canonical representative of v modulo the row span
    size_t p = v.first_set();
    while (p != BitVec::npos) {
        const Row* r = lookup(p);
        if (r) {
            v ^= r->v;
            p = v.next_set(p + 1);
        } else {
            p = v.next_set(p + 1);
        }
    }
    return v;
}

BitVec Gf2Rref::reduce(BitVec v, BitVec& aug) const {
    size_t p = v.first_set();
    while (p != BitVec::npos) {
        const Row* hit = lookup(p);
        if (hit) {
            v ^= hit->v;
            aug ^= hit->aug;
        }
        p = v.next_set(p + 1);
    }
    return v;
}

bool Gf2Rref::add(BitVec v) {
    return add(std::move(v), BitVec(aug_cols_));
}

bool Gf2Rref::add(BitVec v, BitVec aug) {
    v = reduce(v, aug);
    size_t p = v.first_set();
    if (p == BitVec::npos) return false;
    // back-substitute into existing rows to keep full RREF
    for (auto& row : rows_) {
        if (row.v.get(p)) {
            row.v ^= v;
            row.aug ^= aug;
        }
    }
    rows_.push_back(Row{p, std::move(v), std::move(aug)});
    pivot_map_.emplace_back(p, rows_.size() - 1);
    std::sort(pivot_map_.begin(), pivot_map_.end());
    return true;
}

const BitVec* Gf2Rref::row_for_pivot(size_t pivot) const {
    const Row* r = lookup(pivot);
    return r ? &r->v : nullptr;
}

const BitVec* Gf2Rref::aug_for_pivot(size_t pivot) const {
    const Row* r = lookup(pivot);
    return r ? &r->aug : nullptr;
}

std::vector<std::pair<size_t, const BitVec*>> Gf2Rref::sorted_rows() const {
    std::vector<std::pair<size_t, const BitVec*>> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_) out.emplace_back(row.pivot, &row.v);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<size_t> Gf2Rref::pivots() const {
    std::vector<size_t> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_) out.push_back(row.pivot);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<uint64_t> xor_sorted(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    std::vector<uint64_t> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++i, ++j;
        } else if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            out.push_back(b[j++]);
        }
    }
    out.insert(out.end(), a.begin() + long(i), a.end());
    out.insert(out.end(), b.begin() + long(j), b.end());
    return out;
}

size_t SparseElim::find(uint64_t col) const {
    auto it = std::lower_bound(pivot_index_.begin(), pivot_index_.end(),
                               std::make_pair(col, size_t(0)));
    if (it != pivot_index_.end() && it->first == col) return it->second;
    return size_t(-1);
}

bool SparseElim::add(std::vector<uint64_t> row) {
    std::vector<bool> comb;
    if (track_) {
        comb.resize(added_ + 1, false);
        comb[added_] = true;
    }
    ++added_;
    while (!row.empty()) {
        size_t idx = find(row.front());
        if (idx == size_t(-1)) {
            uint64_t pivot = row.front();
            pivot_rows_.emplace_back(std::move(row), std::move(comb));
            pivot_index_.emplace_back(pivot, pivot_rows_.size() - 1);
            std::sort(pivot_index_.begin(), pivot_index_.end());
            return true;
        }
        row = xor_sorted(row, pivot_rows_[idx].first);
        if (track_) {
            const auto& other = pivot_rows_[idx].second;
            if (comb.size() < other.size()) comb.resize(other.size(), false);
            for (size_t k = 0; k < other.size(); ++k)
                if (other[k]) comb[k] = !comb[k];
        }
    }
    if (track_) {
        comb.resize(added_, false);
        kernel_.push_back(std::move(comb));
    }
    return false;
}

}  // namespace sl2coh
