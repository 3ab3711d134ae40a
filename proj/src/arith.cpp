#include "abcov/arith.hpp"

#include "abcov/error.hpp"

#include <sstream>

namespace abcov {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

std::int64_t neg(std::int64_t a) { return sub(0, a); }

}  // namespace checked

std::int64_t gcd(std::int64_t a, std::int64_t b) {
    if (a < 0) a = checked::neg(a);
    if (b < 0) b = checked::neg(b);
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t lcm(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    std::int64_t g = gcd(a, b);
    std::int64_t r = checked::mul(a / g, b);
    return r < 0 ? checked::neg(r) : r;
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    if (b == 0) throw InvalidInput("division by zero");
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// ---------------------------------------------------------------- Rational

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw InvalidInput("rational with zero denominator");
    if (d < 0) {
        n = checked::neg(n);
        d = checked::neg(d);
    }
    std::int64_t g = gcd(n, d);
    num_ = n / g;
    den_ = d / g;
}

Rational Rational::operator-() const { return Rational(checked::neg(num_), den_); }

Rational& Rational::operator+=(const Rational& o) {
    std::int64_t g = gcd(den_, o.den_);
    std::int64_t l = checked::mul(den_ / g, o.den_);
    std::int64_t n = checked::add(checked::mul(num_, l / den_), checked::mul(o.num_, l / o.den_));
    return *this = Rational(n, l);
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    // cross-reduce first to keep intermediates small
    std::int64_t g1 = gcd(num_, o.den_);
    std::int64_t g2 = gcd(o.num_, den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    std::int64_t n = checked::mul(num_ / g1, o.num_ / g2);
    std::int64_t d = checked::mul(den_ / g2, o.den_ / g1);
    return *this = Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw InvalidInput("rational division by zero");
    return *this *= Rational(o.den_, o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return checked::mul(a.num_, b.den_) <=> checked::mul(b.num_, a.den_);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational frac(const Rational& q) { return q - Rational(q.floor()); }

// ------------------------------------------------------------ ModuliVector

ModuliVector::ModuliVector(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
    if (moduli_.empty()) throw InvalidInput("moduli: at least one modulus is required");
    for (std::size_t k = 0; k < moduli_.size(); ++k)
        if (moduli_[k] < 2)
            throw InvalidInput("moduli: N_" + std::to_string(k + 1) + " = " +
                               std::to_string(moduli_[k]) + " violates N_k >= 2");
}

std::int64_t ModuliVector::group_order() const {
    std::int64_t n = 1;
    for (auto m : moduli_) n = checked::mul(n, m);
    return n;
}

std::int64_t ModuliVector::lcm() const {
    std::int64_t l = 1;
    for (auto m : moduli_) l = abcov::lcm(l, m);
    return l;
}

std::ostream& operator<<(std::ostream& os, const ModuliVector& m) {
    os << '(';
    for (std::size_t k = 0; k < m.size(); ++k) os << (k ? "," : "") << m[k];
    return os << ')';
}

// --------------------------------------------------------------- Character

Character::Character(ModuliVector moduli, std::vector<std::int64_t> components)
    : moduli_(std::move(moduli)), comps_(std::move(components)) {
    if (comps_.size() != moduli_.size())
        throw InvalidInput("character has " + std::to_string(comps_.size()) +
                           " components but there are " + std::to_string(moduli_.size()) +
                           " moduli");
    for (std::size_t k = 0; k < comps_.size(); ++k)
        if (comps_[k] < 0 || comps_[k] >= moduli_[k])
            throw InvalidInput("character component " + std::to_string(k + 1) + " = " +
                               std::to_string(comps_[k]) + " violates 0 <= n_k < " +
                               std::to_string(moduli_[k]));
}

Character Character::trivial(const ModuliVector& moduli) {
    return Character(moduli, std::vector<std::int64_t>(moduli.size(), 0));
}

Character Character::parse(std::string_view text, const ModuliVector& moduli) {
    std::vector<std::int64_t> comps;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            comps.push_back(v);
        } catch (const std::exception&) {
            throw InvalidInput("cannot parse character component '" + item + "' in '" +
                               std::string(text) + "'");
        }
    }
    return Character(moduli, std::move(comps));
}

bool Character::is_trivial() const {
    for (auto c : comps_)
        if (c != 0) return false;
    return true;
}

std::int64_t Character::order() const {
    std::int64_t o = 1;
    for (std::size_t k = 0; k < comps_.size(); ++k)
        o = lcm(o, moduli_[k] / gcd(moduli_[k], comps_[k]));
    return o;
}

std::string Character::str() const {
    std::string s;
    for (std::size_t k = 0; k < comps_.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(comps_[k]);
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Character& c) { return os << '(' << c.str() << ')'; }

Character char_inverse(const Character& chi) {
    std::vector<std::int64_t> out(chi.size());
    for (std::size_t k = 0; k < chi.size(); ++k) out[k] = mod(-chi[k], chi.moduli()[k]);
    return Character(chi.moduli(), std::move(out));
}

Character char_add(const Character& a, const Character& b) {
    if (a.moduli() != b.moduli()) throw InvalidInput("adding characters over different moduli");
    std::vector<std::int64_t> out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = mod(a[k] + b[k], a.moduli()[k]);
    return Character(a.moduli(), std::move(out));
}

Character char_scale(const Character& chi, std::int64_t k) {
    std::vector<std::int64_t> out(chi.size());
    for (std::size_t i = 0; i < chi.size(); ++i) {
        std::int64_t n = chi.moduli()[i];
        out[i] = mod(checked::mul(mod(k, n), chi[i]), n);
    }
    return Character(chi.moduli(), std::move(out));
}

Rational char_pairing(const Character& chi, std::span<const std::int64_t> column) {
    if (column.size() != chi.size())
        throw InvalidInput("pairing: column has " + std::to_string(column.size()) +
                           " entries but the character has " + std::to_string(chi.size()));
    Rational sum;
    for (std::size_t k = 0; k < column.size(); ++k) {
        std::int64_t n = chi.moduli()[k];
        if (column[k] < 0 || column[k] >= n)
            throw InvalidInput("pairing: column entry " + std::to_string(column[k]) +
                               " is not reduced mod " + std::to_string(n));
        sum += Rational(checked::mul(chi[k], column[k]), n);
    }
    return frac(sum);
}

std::vector<Character> all_characters(const ModuliVector& moduli) {
    const std::int64_t total = moduli.group_order();
    std::vector<Character> out;
    out.reserve(static_cast<std::size_t>(total));
    std::vector<std::int64_t> digits(moduli.size(), 0);
    for (std::int64_t i = 0; i < total; ++i) {
        out.emplace_back(moduli, digits);
        for (std::size_t k = moduli.size(); k-- > 0;) {
            if (++digits[k] < moduli[k]) break;
            digits[k] = 0;
        }
    }
    return out;
}

}  // namespace abcov
