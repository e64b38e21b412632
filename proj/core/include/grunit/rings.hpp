#pragma once

#include <array>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace grunit {

// Raised when operands come from different rings (e.g. different primes).
class RingMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised by specialize_R when a substituted value does not satisfy v^4 = -1.
class NotEighthRootError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Element of R = Z[s,t]/<s^4+1, t^4+1>, stored on the basis s^i t^j, 0 <= i,j <= 3.
class CycloBivariate {
public:
    CycloBivariate() = default;
    explicit CycloBivariate(std::int64_t n) { c_[0] = n; }

    // sign * s^i * t^j for arbitrary integer exponents, reduced canonically.
    static CycloBivariate monomial(std::int64_t coeff, int i, int j);
    static CycloBivariate s() { return monomial(1, 1, 0); }
    static CycloBivariate t() { return monomial(1, 0, 1); }

    std::int64_t coeff(int i, int j) const { return c_[static_cast<std::size_t>(4 * i + j)]; }
    void set_coeff(int i, int j, std::int64_t v) { c_[static_cast<std::size_t>(4 * i + j)] = v; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    // Nonzero only when the element is +/- s^i t^j; returns the sign and exponents.
    bool as_signed_monomial(int& sign, int& i, int& j) const noexcept;

    CycloBivariate scalar(std::int64_t n) const { return CycloBivariate(n); }
    // Only units of finite multiplicative order are inverted; throws std::domain_error otherwise.
    CycloBivariate inverse() const;
    std::string to_string() const;

    CycloBivariate& operator+=(const CycloBivariate& o);
    CycloBivariate& operator-=(const CycloBivariate& o);
    friend CycloBivariate operator+(CycloBivariate a, const CycloBivariate& b) { return a += b; }
    friend CycloBivariate operator-(CycloBivariate a, const CycloBivariate& b) { return a -= b; }
    friend CycloBivariate operator-(const CycloBivariate& a);
    friend CycloBivariate operator*(const CycloBivariate& a, const CycloBivariate& b);
    friend bool operator==(const CycloBivariate&, const CycloBivariate&) = default;

private:
    std::array<std::int64_t, 16> c_{};
};

// The automorphism s -> s^-1, t -> t^-1 of R.
CycloBivariate conj_R(const CycloBivariate& x);

// Element of Z[zeta8] = Z[q]/<q^4+1>.
class CyclotomicZeta8 {
public:
    CyclotomicZeta8() = default;
    explicit CyclotomicZeta8(std::int64_t n) { c_[0] = n; }

    static CyclotomicZeta8 monomial(std::int64_t coeff, int k);
    static CyclotomicZeta8 zeta() { return monomial(1, 1); }

    std::int64_t coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    CyclotomicZeta8 scalar(std::int64_t n) const { return CyclotomicZeta8(n); }
    CyclotomicZeta8 inverse() const;
    std::string to_string() const;

    CyclotomicZeta8& operator+=(const CyclotomicZeta8& o);
    CyclotomicZeta8& operator-=(const CyclotomicZeta8& o);
    friend CyclotomicZeta8 operator+(CyclotomicZeta8 a, const CyclotomicZeta8& b) { return a += b; }
    friend CyclotomicZeta8 operator-(CyclotomicZeta8 a, const CyclotomicZeta8& b) { return a -= b; }
    friend CyclotomicZeta8 operator-(const CyclotomicZeta8& a);
    friend CyclotomicZeta8 operator*(const CyclotomicZeta8& a, const CyclotomicZeta8& b);
    friend bool operator==(const CyclotomicZeta8&, const CyclotomicZeta8&) = default;

private:
    std::array<std::int64_t, 4> c_{};
};

// zeta -> zeta^-1.
CyclotomicZeta8 conj_zeta8(const CyclotomicZeta8& x);

// Gaussian integers re + im*iota, iota^2 = -1. Kept distinct from zeta8^2.
class GaussianInt {
public:
    GaussianInt() = default;
    explicit GaussianInt(std::int64_t re, std::int64_t im = 0) : re_(re), im_(im) {}

    static GaussianInt iota() { return GaussianInt(0, 1); }
    // iota^k for k taken mod 4.
    static GaussianInt iota_pow(int k);

    std::int64_t re() const noexcept { return re_; }
    std::int64_t im() const noexcept { return im_; }
    bool is_zero() const noexcept { return re_ == 0 && im_ == 0; }
    bool is_one() const noexcept { return re_ == 1 && im_ == 0; }
    bool is_integral() const noexcept { return im_ == 0; }
    GaussianInt scalar(std::int64_t n) const { return GaussianInt(n); }
    // Only the units +-1, +-iota are invertible.
    GaussianInt inverse() const;
    std::string to_string() const;

    GaussianInt& operator+=(const GaussianInt& o);
    GaussianInt& operator-=(const GaussianInt& o);
    friend GaussianInt operator+(GaussianInt a, const GaussianInt& b) { return a += b; }
    friend GaussianInt operator-(GaussianInt a, const GaussianInt& b) { return a -= b; }
    friend GaussianInt operator-(const GaussianInt& a);
    friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b);
    friend bool operator==(const GaussianInt&, const GaussianInt&) = default;

private:
    std::int64_t re_ = 0;
    std::int64_t im_ = 0;
};

GaussianInt conj_gaussian(const GaussianInt& x);

bool is_prime(std::uint64_t n);

// Residue mod a prime p < 2^62.
class PrimeField {
public:
    PrimeField(std::uint64_t p, std::int64_t value);

    std::uint64_t p() const noexcept { return p_; }
    std::uint64_t value() const noexcept { return v_; }
    bool is_zero() const noexcept { return v_ == 0; }
    bool is_one() const noexcept { return v_ == 1 % p_; }
    PrimeField scalar(std::int64_t n) const { return {p_, n, unchecked_tag{}}; }
    PrimeField inverse() const;
    std::string to_string() const { return std::to_string(v_); }

    PrimeField& operator+=(const PrimeField& o);
    PrimeField& operator-=(const PrimeField& o);
    friend PrimeField operator+(PrimeField a, const PrimeField& b) { return a += b; }
    friend PrimeField operator-(PrimeField a, const PrimeField& b) { return a -= b; }
    friend PrimeField operator-(const PrimeField& a);
    friend PrimeField operator*(const PrimeField& a, const PrimeField& b);
    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    struct unchecked_tag {};
    PrimeField(std::uint64_t p, std::int64_t value, unchecked_tag);
    friend class QuadExtField;

    std::uint64_t p_;
    std::uint64_t v_;
};

// F_p[q]/<q^2 + m1 q + m0> for an odd prime p and a quadratic factor of q^4 + 1
// that is irreducible over F_p.
class QuadExtField {
public:
    struct Modulus {
        std::uint64_t p;
        std::uint64_t m0;
        std::uint64_t m1;
        friend bool operator==(const Modulus&, const Modulus&) = default;
    };

    // Validates primality, irreducibility and that the modulus divides q^4 + 1.
    static Modulus make_modulus(std::uint64_t p, std::uint64_t m0, std::uint64_t m1);

    QuadExtField(const Modulus& m, std::int64_t a0, std::int64_t a1 = 0);

    const Modulus& modulus() const noexcept { return m_; }
    std::uint64_t p() const noexcept { return m_.p; }
    std::uint64_t a0() const noexcept { return a0_; }
    std::uint64_t a1() const noexcept { return a1_; }
    // The class of q.
    static QuadExtField generator(const Modulus& m) { return QuadExtField(m, 0, 1); }

    bool is_zero() const noexcept { return a0_ == 0 && a1_ == 0; }
    bool is_one() const noexcept { return a0_ == 1 && a1_ == 0; }
    QuadExtField scalar(std::int64_t n) const { return QuadExtField(m_, n, 0); }
    QuadExtField inverse() const;
    std::string to_string() const;

    QuadExtField& operator+=(const QuadExtField& o);
    QuadExtField& operator-=(const QuadExtField& o);
    friend QuadExtField operator+(QuadExtField a, const QuadExtField& b) { return a += b; }
    friend QuadExtField operator-(QuadExtField a, const QuadExtField& b) { return a -= b; }
    friend QuadExtField operator-(const QuadExtField& a);
    friend QuadExtField operator*(const QuadExtField& a, const QuadExtField& b);
    friend bool operator==(const QuadExtField&, const QuadExtField&) = default;

private:
    Modulus m_;
    std::uint64_t a0_;
    std::uint64_t a1_;
};

// Operations every coefficient ring provides. scalar(n) embeds an integer into
// the ring of its receiver, which carries any runtime parameters (p, modulus).
template <class K>
concept CoefficientRing = std::equality_comparable<K> && requires(const K& a, const K& b, std::int64_t n) {
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { a * b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_one() } -> std::convertible_to<bool>;
    { a.scalar(n) } -> std::convertible_to<K>;
    { a.inverse() } -> std::convertible_to<K>;
    { a.to_string() } -> std::convertible_to<std::string>;
};

template <CoefficientRing K>
K ring_pow(const K& x, std::int64_t e) {
    K base = e < 0 ? x.inverse() : x;
    std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
    K acc = x.scalar(1);
    while (n) {
        if (n & 1u) acc = acc * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return acc;
}

template <CoefficientRing K>
bool is_eighth_root_of_minus_one(const K& v) {
    return (ring_pow(v, 4) + v.scalar(1)).is_zero();
}

// The ring homomorphism R -> K with s -> sigma, t -> tau.
template <CoefficientRing K>
K specialize_R(const CycloBivariate& x, const K& sigma, const K& tau) {
    if (!is_eighth_root_of_minus_one(sigma) || !is_eighth_root_of_minus_one(tau))
        throw NotEighthRootError("not an 8th root of -1: specialization requires sigma^4 = tau^4 = -1");
    std::array<K, 4> sp{sigma.scalar(1), sigma, sigma * sigma, sigma * sigma * sigma};
    std::array<K, 4> tp{tau.scalar(1), tau, tau * tau, tau * tau * tau};
    K acc = sigma.scalar(0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (x.coeff(i, j) != 0)
                acc = acc + sigma.scalar(x.coeff(i, j)) * sp[static_cast<std::size_t>(i)] * tp[static_cast<std::size_t>(j)];
    return acc;
}

// Z[iota] -> K determined by the image of iota.
template <CoefficientRing K>
K map_gaussian(const GaussianInt& g, const K& iota_image) {
    return iota_image.scalar(g.re()) + iota_image.scalar(g.im()) * iota_image;
}

using FiniteFieldElem = std::variant<PrimeField, QuadExtField>;

struct EighthRoot {
    std::uint64_t p;
    int degree;  // 1 for F_p, 2 for F_{p^2}
    FiniteFieldElem root;

    std::string field_name() const;
};

// A root of q^4 + 1 in F_2, F_p (p = 1 mod 8, smallest such residue) or F_{p^2}
// built from the lexicographically smallest irreducible quadratic factor.
EighthRoot find_eighth_root(std::uint64_t p);

// Square root mod an odd prime, smallest representative; returns false if none.
bool sqrt_mod(std::uint64_t a, std::uint64_t p, std::uint64_t& out);

}  // namespace grunit
