#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace abcov {

/*
 * Exact residue and rational arithmetic.
 *
 * Everything is 64-bit with checked operations: an overflow throws
 * OverflowError instead of wrapping. Denominators in this library stay
 * bounded by the lcm of the moduli, so this is never a practical limit for
 * the families we look at, but a bogus input must not produce garbage.
 */

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
std::int64_t neg(std::int64_t a);
}  // namespace checked

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);
// Mathematical modulus: result in [0, n) for n > 0.
std::int64_t mod(std::int64_t a, std::int64_t n);
// floor(a / b) for b != 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
bool is_prime(std::int64_t n);

// Reduced fraction with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    std::int64_t floor() const { return floor_div(num_, den_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    // "n" for integers, "n/d" otherwise.
    std::string str() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

// Fractional part <q> = q - floor(q), always in [0, 1).
Rational frac(const Rational& q);

// One modulus per row, each >= 2.
class ModuliVector {
public:
    ModuliVector() = default;
    explicit ModuliVector(std::vector<std::int64_t> moduli);
    ModuliVector(std::initializer_list<std::int64_t> moduli)
        : ModuliVector(std::vector<std::int64_t>(moduli)) {}

    std::size_t size() const { return moduli_.size(); }
    std::int64_t operator[](std::size_t k) const { return moduli_[k]; }
    std::span<const std::int64_t> values() const { return moduli_; }

    // Order of the product group prod Z/N_k (checked).
    std::int64_t group_order() const;
    std::int64_t lcm() const;

    friend auto operator<=>(const ModuliVector&, const ModuliVector&) = default;

private:
    std::vector<std::int64_t> moduli_;
};

std::ostream& operator<<(std::ostream& os, const ModuliVector& m);

/*
 * An element n = (n_1, ..., n_m) of prod Z/N_k. Through the fixed
 * identification of a finite abelian group with its dual, the same tuple
 * labels the character whose value on the k-th unit generator is
 * exp(2 pi i n_k / N_k). Used both for characters and for group elements
 * (the involution sigma, columns).
 */
class Character {
public:
    Character() = default;
    Character(ModuliVector moduli, std::vector<std::int64_t> components);

    static Character trivial(const ModuliVector& moduli);
    // Parses "1,0" (components in row order). Throws InvalidInput.
    static Character parse(std::string_view text, const ModuliVector& moduli);

    const ModuliVector& moduli() const { return moduli_; }
    std::span<const std::int64_t> components() const { return comps_; }
    std::size_t size() const { return comps_.size(); }
    std::int64_t operator[](std::size_t k) const { return comps_[k]; }

    bool is_trivial() const;
    // Order of the element in prod Z/N_k.
    std::int64_t order() const;

    std::string str() const;  // "1,0"

    friend auto operator<=>(const Character&, const Character&) = default;

private:
    ModuliVector moduli_;
    std::vector<std::int64_t> comps_;
};

std::ostream& operator<<(std::ostream& os, const Character& c);

// Componentwise (N_k - n_k) mod N_k.
Character char_inverse(const Character& chi);
Character char_add(const Character& a, const Character& b);
// k * chi componentwise.
Character char_scale(const Character& chi, std::int64_t k);

// <sum_k n_k r_k / N_k>, the exponent a with chi(column) = exp(2 pi i a).
// Throws InvalidInput on length mismatch or an unreduced column entry.
Rational char_pairing(const Character& chi, std::span<const std::int64_t> column);

// Every element of prod Z/N_k in lexicographic order of components.
std::vector<Character> all_characters(const ModuliVector& moduli);

}  // namespace abcov
