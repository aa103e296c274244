#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace oa {

/// Dense row-major integer matrix. Used for file I/O and as the generic
/// carrier between modules.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> data);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::span<const std::int64_t> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    const std::vector<std::int64_t>& data() const noexcept { return data_; }

    IntMatrix transposed() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

}  // namespace oa
