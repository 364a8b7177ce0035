#include "fmp/big_rational.hpp"

#include "fmp/error.hpp"

namespace fmp {

BigRational::BigRational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ArithmeticError("zero denominator");
    // Boost rejects a negative denominator outright, so move the sign up first.
    value_ = den < 0 ? Raw(BigInt(-num), BigInt(-den)) : Raw(num, den);
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw ArithmeticError("division by zero");
    value_ /= o.value_;
    return *this;
}

Residue BigRational::mod_p(const PrimeField& field) const {
    const BigInt p = field.modulus();
    BigInt num = numerator() % p;
    if (num < 0) num += p;
    const BigInt den = denominator() % p;
    if (den == 0) {
        throw ExceptionalPrime("coefficient " + to_string() + " has denominator divisible by " +
                               std::to_string(field.modulus()));
    }
    const Residue n = static_cast<Residue>(num);
    const Residue d = static_cast<Residue>(den);
    return field.mul(n, mod_inverse(d, field));
}

std::string BigRational::to_string() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

}  // namespace fmp
