#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sl2coh/gf2matrix.hpp"

using namespace sl2coh;

namespace {

BitVec random_vec(size_t cols, std::mt19937_64& rng) {
    BitVec v(cols);
    std::bernoulli_distribution bit(0.4);
    for (size_t i = 0; i < cols; ++i)
        if (bit(rng)) v.set(i);
    return v;
}

// rank by plain textbook elimination, for cross-checking
size_t naive_rank(std::vector<BitVec> rows) {
    size_t rank = 0;
    for (size_t col = 0; col < (rows.empty() ? 0 : rows[0].size()); ++col) {
        size_t pivot = size_t(-1);
        for (size_t i = rank; i < rows.size(); ++i)
            if (rows[i].get(col)) {
                pivot = i;
                break;
            }
        if (pivot == size_t(-1)) continue;
        std::swap(rows[rank], rows[pivot]);
        for (size_t i = 0; i < rows.size(); ++i)
            if (i != rank && rows[i].get(col)) rows[i] ^= rows[rank];
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("BitVec basics") {
    BitVec v(130);
    CHECK(v.first_set() == BitVec::npos);
    v.set(129);
    v.set(3);
    CHECK(v.first_set() == 3);
    CHECK(v.popcount() == 2);
    v.flip(3);
    CHECK(v.first_set() == 129);
}

TEST_CASE("rref rank matches naive elimination") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        size_t cols = 20;
        std::vector<BitVec> rows;
        Gf2Rref solver(cols);
        for (int i = 0; i < 15; ++i) {
            BitVec v = random_vec(cols, rng);
            rows.push_back(v);
            solver.add(std::move(v));
        }
        CHECK(solver.rank() == naive_rank(rows));
    }
}

TEST_CASE("rref is canonical under insertion order") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<BitVec> rows;
        for (int i = 0; i < 10; ++i) rows.push_back(random_vec(24, rng));
        Gf2Rref a(24), b(24);
        for (const auto& v : rows) a.add(v);
        for (auto it = rows.rbegin(); it != rows.rend(); ++it) b.add(*it);
        auto ra = a.sorted_rows(), rb = b.sorted_rows();
        REQUIRE(ra.size() == rb.size());
        for (size_t i = 0; i < ra.size(); ++i) {
            CHECK(ra[i].first == rb[i].first);
            CHECK(*ra[i].second == *rb[i].second);
        }
    }
}

TEST_CASE("reduce and membership") {
    std::mt19937_64 rng(13);
    Gf2Rref solver(32);
    std::vector<BitVec> rows;
    for (int i = 0; i < 6; ++i) {
        BitVec v = random_vec(32, rng);
        rows.push_back(v);
        solver.add(std::move(v));
    }
    // any xor combination is contained
    BitVec comb(32);
    comb ^= rows[0];
    comb ^= rows[3];
    comb ^= rows[5];
    CHECK(solver.contains(comb));
    CHECK(!solver.reduce(comb).any());
}

TEST_CASE("augmentation tracks the combination") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        size_t cols = 24, n = 10;
        std::vector<BitVec> rows;
        Gf2Rref solver(cols, n);
        for (size_t i = 0; i < n; ++i) {
            BitVec v = random_vec(cols, rng);
            rows.push_back(v);
            BitVec aug(n);
            aug.set(i);
            solver.add(std::move(v), std::move(aug));
        }
        BitVec probe = random_vec(cols, rng);
        BitVec aug(n);
        BitVec residue = solver.reduce(probe, aug);
        // probe + residue equals the tracked combination of inserted rows
        BitVec recon(cols);
        for (size_t i = 0; i < n; ++i)
            if (aug.get(i)) recon ^= rows[i];
        BitVec expect = probe;
        expect ^= residue;
        CHECK(recon == expect);
    }
}

TEST_CASE("sparse elimination rank agrees with dense") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        size_t cols = 40;
        SparseElim sparse;
        Gf2Rref dense(cols);
        for (int i = 0; i < 25; ++i) {
            BitVec v = random_vec(cols, rng);
            std::vector<uint64_t> idx;
            for (size_t c = 0; c < cols; ++c)
                if (v.get(c)) idx.push_back(c);
            sparse.add(std::move(idx));
            dense.add(std::move(v));
        }
        CHECK(sparse.rank() == dense.rank());
    }
}

TEST_CASE("sparse kernel combinations recreate zero rows") {
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 20; ++trial) {
        size_t cols = 30;
        std::vector<std::vector<uint64_t>> rows;
        SparseElim elim(true);
        for (int i = 0; i < 20; ++i) {
            BitVec v = random_vec(cols, rng);
            std::vector<uint64_t> idx;
            for (size_t c = 0; c < cols; ++c)
                if (v.get(c)) idx.push_back(c);
            rows.push_back(idx);
            elim.add(std::move(idx));
        }
        CHECK(elim.rank() + elim.kernel().size() == rows.size());
        for (const auto& comb : elim.kernel()) {
            std::vector<uint64_t> acc;
            for (size_t i = 0; i < comb.size(); ++i)
                if (comb[i]) acc = xor_sorted(acc, rows[i]);
            CHECK(acc.empty());
        }
    }
}

TEST_CASE("xor_sorted") {
    CHECK(xor_sorted({1, 3, 5}, {3, 4}) == std::vector<uint64_t>{1, 4, 5});
    CHECK(xor_sorted({}, {2}) == std::vector<uint64_t>{2});
    CHECK(xor_sorted({2}, {2}).empty());
}
