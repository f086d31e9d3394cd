#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "rankrange/compressions.hpp"
#include "rankrange/convex.hpp"
#include "rankrange/matrix.hpp"
#include "rankrange/witness.hpp"

namespace rankrange {

/// Parses "a", "a+bi", "a-bi", "bi", "i" or "-i" (also with 'j').
/// Throws InputError on anything else.
cplx parse_complex(std::string_view token);

/// {"n": int, "re": [[...]], "im": [[...]]}; "im" defaults to zero.
ComplexMatrix matrix_from_json(std::string_view text);

/// n lines of n comma-separated complex entries.
ComplexMatrix matrix_from_csv(std::string_view text);

/// Dispatches on content: a leading '{' selects JSON, anything else CSV.
ComplexMatrix load_matrix(const std::filesystem::path& path);

std::string matrix_to_json(const ComplexMatrix& a);

/// Header "x,y" then one counterclockwise vertex per line.
std::string region_to_csv(const ConvexRegion& region);

/// Header "nu,q_nu,t_nu,hausdorff_to_range", one row per record.
std::string trace_to_csv(const ConvergenceTrace& trace);

/// {found, lambda: [re, im], residual, iterations, restarts_used, N: {re, im}}.
std::string witness_to_json(const WitnessResult& result);

/// Shortest round-trip decimal representation.
std::string format_double(double v);

/// Writes through a temporary file in the same directory, then renames.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace rankrange
