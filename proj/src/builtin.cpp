#include "rankrange/builtin.hpp"

#include <charconv>
#include <string>

#include "rankrange/error.hpp"

namespace rankrange {

ComplexMatrix paper_example() {
    using namespace std::complex_literals;
    return ComplexMatrix{
        {1.8, 2.0, 3.0, 4.0},
        {0.0, 0.8 + 1.0i, 0.0, 1.0i},
        {-2.0, 1.0, -1.2, 1.0},
        {0.0, 0.0, 1.0, 0.8},
    };
}

ComplexMatrix jordan_block(std::size_t n) {
    ComplexMatrix j(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) j(i, i + 1) = 1.0;
    return j;
}

ComplexMatrix builtin_matrix(std::string_view name) {
    if (name == "paper-example") return paper_example();
    constexpr std::string_view jordan = "jordan-";
    if (name.starts_with(jordan)) {
        const std::string_view digits = name.substr(jordan.size());
        std::size_t n = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && n >= 1) {
            return jordan_block(n);
        }
    }
    throw InputError("unknown built-in matrix '" + std::string(name) + "'");
}

}  // namespace rankrange
