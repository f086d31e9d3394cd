#pragma once

// Dense dictionary simplex for small linear programs
//   maximize c.x  subject to  A x <= b,  x >= 0,  with b >= 0,
// so the all-slack basis is feasible and no phase one is needed. Bland's rule
// guarantees termination on degenerate problems.

#include <cstddef>
#include <vector>

namespace rankrange::detail {

struct LpResult {
    std::vector<double> x;
    double objective = 0.0;
    bool unbounded = false;
};

LpResult maximize(std::size_t rows, std::size_t cols, const std::vector<double>& a,
                  const std::vector<double>& b, const std::vector<double>& c);

}  // namespace rankrange::detail
