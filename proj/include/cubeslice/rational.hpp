#ifndef CUBESLICE_RATIONAL_HPP
#define CUBESLICE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubeslice {

// Exact rational scalar. mpq_class keeps values canonical: lowest terms,
// positive denominator, zero stored as 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

using RatVec = std::vector<Rational>;

struct RatMat {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> a;  // row-major

    RatMat() = default;
    RatMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Rational& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rational& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    RatVec col(int j) const {
        RatVec v(rows);
        for (int i = 0; i < rows; i++) v[i] = at(i, j);
        return v;
    }
    RatVec row(int i) const {
        RatVec v(cols);
        for (int j = 0; j < cols; j++) v[j] = at(i, j);
        return v;
    }
};

inline int sign_of(const Rational& q) { return sgn(q); }

/// mpq_class(num, den) does not canonicalize; this does.
inline Rational frac(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational dot(const RatVec& x, const RatVec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rational s = 0;
    for (size_t i = 0; i < x.size(); i++) s += x[i] * y[i];
    return s;
}

inline RatVec neg(const RatVec& x) {
    RatVec r(x.size());
    for (size_t i = 0; i < x.size(); i++) r[i] = -x[i];
    return r;
}

inline bool is_zero_vec(const RatVec& x) {
    for (const auto& q : x)
        if (q != 0) return false;
    return true;
}

// "p/q", or "p" when the denominator is 1. ASCII, no interior whitespace.
inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const RatVec& v, const char* sep = " ") {
    std::string out;
    for (size_t i = 0; i < v.size(); i++) {
        if (i) out += sep;
        out += to_string(v[i]);
    }
    return out;
}

// Scale by a positive rational to a primitive integer vector. Returns the
// zero vector unchanged.
RatVec scale_primitive(const RatVec& v);

// scale_primitive, then flip so the first nonzero entry is positive (the
// canonical representative of a hyperplane normal). Returns the zero vector
// unchanged.
RatVec normalize_direction(const RatVec& v);

// Lexicographic order on rational vectors.
int compare(const RatVec& x, const RatVec& y);

}  // namespace cubeslice

#endif
