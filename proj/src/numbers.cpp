#include "numbers.hpp"

#include "error.hpp"

namespace graphlim {

Rational parse_ratio(const std::string& text) {
    // boost reads an empty string as zero; reject it explicitly
    if (text.find_first_not_of(" \t") == std::string::npos)
        fail(ErrorCode::parse_error, "not a valid rational: '" + text + "'");
    try {
        return Rational(text);
    } catch (const std::exception&) {
        fail(ErrorCode::parse_error, "not a valid rational: '" + text + "'");
    }
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (unsigned i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

BigInt integer_pow(const BigInt& base, unsigned exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1u) result *= b;
        b *= b;
        exp >>= 1u;
    }
    return result;
}

}  // namespace graphlim
