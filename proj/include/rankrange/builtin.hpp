#pragma once

#include <string_view>

#include "rankrange/matrix.hpp"

namespace rankrange {

/// The 4x4 matrix whose rank-2 numerical radius violates the power
/// inequality: r_2(A)^2 < 1 < r_2(A^2).
ComplexMatrix paper_example();

/// n x n nilpotent Jordan block (ones on the superdiagonal).
ComplexMatrix jordan_block(std::size_t n);

/// Named matrices: "paper-example", "jordan-<n>". Throws InputError otherwise.
ComplexMatrix builtin_matrix(std::string_view name);

}  // namespace rankrange
