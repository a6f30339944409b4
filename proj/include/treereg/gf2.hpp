#ifndef TREEREG_GF2_HPP
#define TREEREG_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace treereg {

/// Dense matrix over GF(2), rows packed into 64-bit words.
class BitMatrix {
public:
    BitMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    void set(std::size_t r, std::size_t c) { data_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64); }
    void flip(std::size_t r, std::size_t c) { data_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64); }
    bool get(std::size_t r, std::size_t c) const
    {
        return (data_[r * words_ + c / 64] >> (c % 64)) & 1u;
    }

    /// Rank by in-place Gaussian elimination; destroys the contents.
    std::size_t eliminate_rank();

    /// Rank of a copy; the matrix is left untouched.
    std::size_t rank() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::size_t words_;
    std::vector<std::uint64_t> data_;
};

} // namespace treereg

#endif
