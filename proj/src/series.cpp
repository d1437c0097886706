#include "lcskit/series.hpp"

#include <algorithm>

namespace lcskit {

TruncatedSeries TruncatedSeries::one_minus_tk_pow(int k, const BigInt& e, int degree) {
    if (e < 0) throw std::invalid_argument("one_minus_tk_pow: negative exponent");
    TruncatedSeries s(degree);
    // Binomial coefficients C(e, j) by the product formula; terms (-1)^j t^(kj).
    BigInt binom = 1;
    for (int j = 0; j * k <= degree; ++j) {
        if (j > 0) {
            if (e < j) break;  // C(e, j) = 0 past e
            binom = binom * (e - (j - 1)) / j;
        }
        s.coeff_[j * k] = (j % 2 == 0) ? binom : -binom;
    }
    return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
    int deg = std::min(degree(), rhs.degree());
    TruncatedSeries out(deg);
    for (int i = 0; i <= deg; ++i) {
        if (coeff_[i] == 0) continue;
        for (int j = 0; i + j <= deg; ++j) {
            if (rhs.coeff_[j] == 0) continue;
            out.coeff_[i + j] += coeff_[i] * rhs.coeff_[j];
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& rhs) const {
    int deg = std::min(degree(), rhs.degree());
    TruncatedSeries out(deg);
    for (int i = 0; i <= deg; ++i) out.coeff_[i] = coeff_[i] + rhs.coeff_[i];
    return out;
}

int TruncatedSeries::first_difference(const TruncatedSeries& rhs) const {
    int deg = std::min(degree(), rhs.degree());
    for (int i = 0; i <= deg; ++i)
        if (coeff_[i] != rhs.coeff_[i]) return i;
    return -1;
}

}  // namespace lcskit
