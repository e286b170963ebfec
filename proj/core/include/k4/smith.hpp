#pragma once

#include <string>
#include <vector>

namespace k4 {

struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<long long> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
    static IntMatrix identity(int n);

    long long& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    long long at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
    bool operator==(const IntMatrix&) const = default;
};

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
long long determinant(const IntMatrix& m);
std::string to_string(const IntMatrix& m);

// U * m * V == d, with d diagonal, d_ii >= 0 and d_ii | d_(i+1)(i+1).
struct SmithForm {
    IntMatrix d, u, v;
    std::vector<long long> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Checks U * m * V == D in 128-bit arithmetic.
bool verify(const SmithForm& f, const IntMatrix& m);

}  // namespace k4
