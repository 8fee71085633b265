#pragma once

#include <cstdint>
#include <vector>

namespace gbochner {

// Bit-packed GF(2) matrix; rows are 64-bit word arrays.
class GF2Matrix {
public:
    GF2Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), stride_((cols + 63) / 64), words_(static_cast<size_t>(rows) * stride_, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c) { words_[static_cast<size_t>(r) * stride_ + c / 64] ^= (1ull << (c % 64)); }

    bool get(int r, int c) const {
        return (words_[static_cast<size_t>(r) * stride_ + c / 64] >> (c % 64)) & 1;
    }

    // Rank by Gaussian elimination on a scratch copy.
    int rank() const {
        std::vector<std::uint64_t> w = words_;
        auto row = [&](int r) { return w.data() + static_cast<size_t>(r) * stride_; };
        int rank = 0;
        for (int c = 0; c < cols_ && rank < rows_; ++c) {
            int word = c / 64;
            std::uint64_t bit = 1ull << (c % 64);
            int pivot = -1;
            for (int r = rank; r < rows_; ++r)
                if (row(r)[word] & bit) { pivot = r; break; }
            if (pivot < 0) continue;
            if (pivot != rank)
                for (int k = 0; k < stride_; ++k) std::swap(row(pivot)[k], row(rank)[k]);
            for (int r = 0; r < rows_; ++r) {
                if (r == rank || !(row(r)[word] & bit)) continue;
                const std::uint64_t* src = row(rank);
                std::uint64_t* dst = row(r);
                for (int k = word; k < stride_; ++k) dst[k] ^= src[k];
            }
            ++rank;
        }
        return rank;
    }

private:
    int rows_, cols_, stride_;
    std::vector<std::uint64_t> words_;
};

} // namespace gbochner
