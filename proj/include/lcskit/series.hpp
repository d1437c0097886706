#pragma once

#include <vector>

#include "lcskit/numeric.hpp"

namespace lcskit {

// Integer power series truncated at a fixed degree.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int degree) : coeff_(degree + 1, 0) {}

    static TruncatedSeries one(int degree) {
        TruncatedSeries s(degree);
        s.coeff_[0] = 1;
        return s;
    }

    // (1 - a t) truncated at `degree`.
    static TruncatedSeries one_minus_linear(const BigInt& a, int degree) {
        TruncatedSeries s = one(degree);
        if (degree >= 1) s.coeff_[1] = -a;
        return s;
    }

    // (1 - t^k)^e for e >= 0, via binomial expansion.
    static TruncatedSeries one_minus_tk_pow(int k, const BigInt& e, int degree);

    int degree() const { return static_cast<int>(coeff_.size()) - 1; }
    const BigInt& operator[](int i) const { return coeff_[i]; }
    BigInt& operator[](int i) { return coeff_[i]; }

    TruncatedSeries operator*(const TruncatedSeries& rhs) const;
    TruncatedSeries& operator*=(const TruncatedSeries& rhs) {
        return *this = *this * rhs;
    }
    TruncatedSeries operator+(const TruncatedSeries& rhs) const;

    bool operator==(const TruncatedSeries&) const = default;

    // Index of the first coefficient where the two series differ, or -1.
    int first_difference(const TruncatedSeries& rhs) const;

private:
    std::vector<BigInt> coeff_;
};

}  // namespace lcskit
