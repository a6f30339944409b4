#include "treereg/gf2.hpp"

#include <utility>

namespace treereg {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0)
{
}

std::size_t BitMatrix::eliminate_rank()
{
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        const std::size_t word = col / 64;
        const std::uint64_t bit = std::uint64_t{1} << (col % 64);
        std::size_t pivot = rank;
        while (pivot < rows_ && !(data_[pivot * words_ + word] & bit))
            ++pivot;
        if (pivot == rows_)
            continue;
        std::uint64_t* prow = &data_[pivot * words_];
        if (pivot != rank) {
            std::uint64_t* rrow = &data_[rank * words_];
            for (std::size_t w = word; w < words_; ++w)
                std::swap(prow[w], rrow[w]);
            prow = rrow;
        }
        // Columns left of `col` are already zero below the pivot rows.
        for (std::size_t r = rank + 1; r < rows_; ++r) {
            std::uint64_t* row = &data_[r * words_];
            if (row[word] & bit)
                for (std::size_t w = word; w < words_; ++w)
                    row[w] ^= prow[w];
        }
        ++rank;
    }
    return rank;
}

std::size_t BitMatrix::rank() const
{
    BitMatrix copy = *this;
    return copy.eliminate_rank();
}

} // namespace treereg
