#include "k4/smith.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <sstream>

#include "k4/diagram.hpp"

namespace k4 {

namespace {

using wide = __int128;

wide wmul(wide x, wide y) {
    wide r;
    if (__builtin_mul_overflow(x, y, &r)) throw Error("integer overflow in matrix arithmetic");
    return r;
}

wide wadd(wide x, wide y) {
    wide r;
    if (__builtin_add_overflow(x, y, &r)) throw Error("integer overflow in matrix arithmetic");
    return r;
}

wide wabs(wide x) { return x < 0 ? -x : x; }

struct Wide {
    int rows = 0, cols = 0;
    std::vector<wide> a;
    Wide(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
    explicit Wide(const IntMatrix& m) : rows(m.rows), cols(m.cols), a(m.a.begin(), m.a.end()) {}
    static Wide identity(int n) {
        Wide w(n, n);
        for (int i = 0; i < n; ++i) w.at(i, i) = 1;
        return w;
    }
    wide& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    IntMatrix narrow() const {
        IntMatrix m(rows, cols);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] > LLONG_MAX || a[i] < LLONG_MIN) throw Error("Smith form entry exceeds 64 bits");
            m.a[i] = static_cast<long long>(a[i]);
        }
        return m;
    }
};

// row_i += q * row_j, mirrored on u
void row_add(Wide& m, Wide& u, int i, int j, wide q) {
    for (int c = 0; c < m.cols; ++c) m.at(i, c) = wadd(m.at(i, c), wmul(q, m.at(j, c)));
    for (int c = 0; c < u.cols; ++c) u.at(i, c) = wadd(u.at(i, c), wmul(q, u.at(j, c)));
}

void col_add(Wide& m, Wide& v, int i, int j, wide q) {
    for (int r = 0; r < m.rows; ++r) m.at(r, i) = wadd(m.at(r, i), wmul(q, m.at(r, j)));
    for (int r = 0; r < v.rows; ++r) v.at(r, i) = wadd(v.at(r, i), wmul(q, v.at(r, j)));
}

void row_swap(Wide& m, Wide& u, int i, int j) {
    if (i == j) return;
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
    for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
}

void col_swap(Wide& m, Wide& v, int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
    for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
}

// nearest quotient, so the remainder is at most half the pivot
wide quot(wide x, wide p) {
    wide q = x / p, r = x % p;
    if (2 * wabs(r) > wabs(p)) q += ((r < 0) == (p < 0)) ? 1 : -1;
    return q;
}

long long mul(long long x, long long y) {
    long long r;
    if (__builtin_mul_overflow(x, y, &r)) throw Error("integer overflow in matrix arithmetic");
    return r;
}

long long add(long long x, long long y) {
    long long r;
    if (__builtin_add_overflow(x, y, &r)) throw Error("integer overflow in matrix arithmetic");
    return r;
}

}  // namespace

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) throw Error("matrix dimension mismatch");
    IntMatrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            long long a = x.at(i, k);
            if (!a) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) = add(r.at(i, j), mul(a, y.at(k, j)));
        }
    return r;
}

long long determinant(const IntMatrix& m) {
    if (m.rows != m.cols) throw Error("determinant of a non-square matrix");
    int n = m.rows;
    std::vector<__int128> a(m.a.begin(), m.a.end());
    auto at = [&](int i, int j) -> __int128& { return a[static_cast<std::size_t>(i) * n + j]; };
    __int128 prev = 1;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && at(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
        prev = at(k, k);
    }
    return sign * static_cast<long long>(at(n - 1, n - 1));
}

std::string to_string(const IntMatrix& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.rows; ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < m.cols; ++j) os << (j ? "," : "") << m.at(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

std::vector<long long> SmithForm::diagonal() const {
    std::vector<long long> out;
    for (int i = 0; i < std::min(d.rows, d.cols); ++i) out.push_back(d.at(i, i));
    return out;
}

SmithForm smith_normal_form(const IntMatrix& input) {
    Wide m(input), u = Wide::identity(input.rows), v = Wide::identity(input.cols);
    int t = 0;
    while (t < std::min(m.rows, m.cols)) {
        // pivot on a nonzero entry of least absolute value
        int pi = -1, pj = -1;
        for (int i = t; i < m.rows; ++i)
            for (int j = t; j < m.cols; ++j)
                if (m.at(i, j) && (pi < 0 || wabs(m.at(i, j)) < wabs(m.at(pi, pj)))) pi = i, pj = j;
        if (pi < 0) break;
        row_swap(m, u, t, pi);
        col_swap(m, v, t, pj);
        bool clean = true;
        wide p = m.at(t, t);
        for (int i = t + 1; i < m.rows; ++i)
            if (m.at(i, t)) {
                row_add(m, u, i, t, -quot(m.at(i, t), p));
                clean &= m.at(i, t) == 0;
            }
        for (int j = t + 1; j < m.cols; ++j)
            if (m.at(t, j)) {
                col_add(m, v, j, t, -quot(m.at(t, j), p));
                clean &= m.at(t, j) == 0;
            }
        if (!clean) continue;  // a smaller remainder appeared; pivot again
        int bad = -1;
        for (int i = t + 1; i < m.rows && bad < 0; ++i)
            for (int j = t + 1; j < m.cols; ++j)
                if (m.at(i, j) % p) {
                    bad = i;
                    break;
                }
        if (bad >= 0) {
            row_add(m, u, t, bad, 1);
            continue;
        }
        if (p < 0) {
            for (int c = 0; c < m.cols; ++c) m.at(t, c) = -m.at(t, c);
            for (int c = 0; c < u.cols; ++c) u.at(t, c) = -u.at(t, c);
        }
        ++t;
    }
    return SmithForm{m.narrow(), u.narrow(), v.narrow()};
}

bool verify(const SmithForm& f, const IntMatrix& m) {
    auto prod = [](const Wide& x, const Wide& y) {
        Wide r(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k)
                for (int j = 0; j < y.cols; ++j)
                    r.at(i, j) = wadd(r.at(i, j), wmul(const_cast<Wide&>(x).at(i, k), const_cast<Wide&>(y).at(k, j)));
        return r;
    };
    if (f.u.rows != m.rows || f.v.cols != m.cols) return false;
    Wide p = prod(prod(Wide(f.u), Wide(m)), Wide(f.v));
    return p.a == Wide(f.d).a;
}

}  // namespace k4
