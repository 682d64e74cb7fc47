#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>

#include "qmod/errors.hpp"

namespace qmod {

using Int = boost::multiprecision::cpp_int;

// Exact rational with arbitrary-precision parts. Canonical form: den > 0,
// gcd(num, den) = 1; the default value is 0/1.
struct BigRational {
    Int num = 0;
    Int den = 1;

    BigRational() = default;
    BigRational(Int n, Int d) : num(std::move(n)), den(std::move(d)) { normalize(); }
    explicit BigRational(Int n) : num(std::move(n)) {}

    void normalize() {
        if (den == 0) throw AssumptionError("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        Int g = gcd(num < 0 ? Int(-num) : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool is_integer() const { return den == 1; }

    friend BigRational operator+(const BigRational& a, const BigRational& b) {
        return BigRational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend BigRational operator-(const BigRational& a, const BigRational& b) {
        return BigRational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend BigRational operator*(const BigRational& a, const BigRational& b) {
        return BigRational(a.num * b.num, a.den * b.den);
    }
    friend BigRational operator/(const BigRational& a, const BigRational& b) {
        return BigRational(a.num * b.den, a.den * b.num);
    }
    friend bool operator==(const BigRational& a, const BigRational& b) {
        return a.num == b.num && a.den == b.den;
    }

    std::string to_string() const {
        return is_integer() ? num.str() : num.str() + "/" + den.str();
    }
};

// Reduced fraction of machine integers, used for slopes. den > 0 always.
struct Frac64 {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Frac64() = default;
    Frac64(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw AssumptionError("fraction with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    friend bool operator==(const Frac64& a, const Frac64& b) {
        return a.num == b.num && a.den == b.den;
    }
    // exact cross-multiplied comparison; operands stay well inside 64 bits
    friend bool operator<(const Frac64& a, const Frac64& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const Frac64& a, const Frac64& b) {
        return a.num * b.den <= b.num * a.den;
    }
    friend bool operator>(const Frac64& a, const Frac64& b) { return b < a; }

    std::string to_string() const {
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

// Deterministic RNG. Streams are split from a base seed by stream id so
// independent tasks sample reproducibly regardless of interleaving.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
        // splitmix64 on seed xor stream; decorrelates nearby stream ids
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    static Rng split(std::uint64_t seed, std::uint64_t stream) {
        return Rng(mix(seed, stream));
    }

    std::uint64_t u64() { return gen_(); }

    // uniform in [0, n), n > 0
    std::uint32_t below(std::uint32_t n) {
        return static_cast<std::uint32_t>(gen_() % n);
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace qmod
