#include "grunit/rings.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <vector>

#include "grunit/checked.hpp"

namespace grunit {

namespace {

int reduce_exponent(int e, int& sign) {
    int r = ((e % 8) + 8) % 8;
    if (r >= 4) {
        sign = -sign;
        r -= 4;
    }
    return r;
}

void append_term(std::ostringstream& os, bool& first, std::int64_t c, const std::string& mono) {
    if (c == 0) return;
    if (c < 0)
        os << '-';
    else if (!first)
        os << "+";
    const std::int64_t mag = c < 0 ? -c : c;
    if (mono.empty())
        os << mag;
    else if (mag == 1)
        os << mono;
    else
        os << mag << '*' << mono;
    first = false;
}

std::string power_name(const char* var, int e) {
    if (e == 0) return "";
    if (e == 1) return var;
    return std::string(var) + "^" + std::to_string(e);
}

__extension__ using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    a %= p;
    while (e) {
        if (e & 1u) acc = mulmod(acc, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return acc;
}

std::uint64_t reduce_signed(std::int64_t v, std::uint64_t p) {
    const auto sp = static_cast<std::int64_t>(p);
    std::int64_t r = v % sp;
    if (r < 0) r += sp;
    return static_cast<std::uint64_t>(r);
}

// Every embedding of a torsion element is a root of unity, so its coefficients lie in {-1, 0, 1}.
template <class K, class Coeffs>
std::optional<K> finite_order_inverse(const K& x, int max_order, Coeffs&& coeffs) {
    K acc = x;
    for (int k = 1; k <= max_order; ++k) {
        if (acc.is_one()) return ring_pow(x, k - 1);
        for (const std::int64_t c : coeffs(acc))
            if (c > 1 || c < -1) return std::nullopt;
        acc = acc * x;
    }
    return std::nullopt;
}

}  // namespace

// ---- R = Z[s,t]/<s^4+1, t^4+1> ----

CycloBivariate CycloBivariate::monomial(std::int64_t coeff, int i, int j) {
    int sign = 1;
    const int ri = reduce_exponent(i, sign);
    const int rj = reduce_exponent(j, sign);
    CycloBivariate out;
    out.set_coeff(ri, rj, sign < 0 ? checked_neg(coeff) : coeff);
    return out;
}

bool CycloBivariate::is_zero() const noexcept {
    return std::all_of(c_.begin(), c_.end(), [](auto v) { return v == 0; });
}

bool CycloBivariate::is_one() const noexcept { return *this == CycloBivariate(1); }

bool CycloBivariate::as_signed_monomial(int& sign, int& i, int& j) const noexcept {
    int found = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const auto v = coeff(a, b);
            if (v == 0) continue;
            if ((v != 1 && v != -1) || ++found > 1) return false;
            sign = static_cast<int>(v);
            i = a;
            j = b;
        }
    return found == 1;
}

CycloBivariate CycloBivariate::inverse() const {
    int sign = 0, i = 0, j = 0;
    if (as_signed_monomial(sign, i, j)) return monomial(sign, -i, -j);
    auto coeffs = [](const CycloBivariate& y) {
        std::vector<std::int64_t> out;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) out.push_back(y.coeff(a, b));
        return out;
    };
    if (auto inv = finite_order_inverse(*this, 8, coeffs)) return *inv;
    throw std::domain_error("element of R is not a unit of finite order: " + to_string());
}

std::string CycloBivariate::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            std::string mono = power_name("s", i);
            const std::string tj = power_name("t", j);
            if (!tj.empty()) mono += (mono.empty() ? "" : "*") + tj;
            append_term(os, first, coeff(i, j), mono);
        }
    return first ? "0" : os.str();
}

CycloBivariate& CycloBivariate::operator+=(const CycloBivariate& o) {
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] = checked_add(c_[k], o.c_[k]);
    return *this;
}

CycloBivariate& CycloBivariate::operator-=(const CycloBivariate& o) {
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] = checked_sub(c_[k], o.c_[k]);
    return *this;
}

CycloBivariate operator-(const CycloBivariate& a) { return CycloBivariate() - a; }

CycloBivariate operator*(const CycloBivariate& a, const CycloBivariate& b) {
    CycloBivariate out;
    for (int i1 = 0; i1 < 4; ++i1)
        for (int j1 = 0; j1 < 4; ++j1) {
            const auto x = a.coeff(i1, j1);
            if (x == 0) continue;
            for (int i2 = 0; i2 < 4; ++i2)
                for (int j2 = 0; j2 < 4; ++j2) {
                    const auto y = b.coeff(i2, j2);
                    if (y == 0) continue;
                    int i = i1 + i2, j = j1 + j2;
                    std::int64_t term = checked_mul(x, y);
                    if (i >= 4) i -= 4, term = checked_neg(term);
                    if (j >= 4) j -= 4, term = checked_neg(term);
                    out.set_coeff(i, j, checked_add(out.coeff(i, j), term));
                }
        }
    return out;
}

CycloBivariate conj_R(const CycloBivariate& x) {
    CycloBivariate out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (x.coeff(i, j) != 0) out += CycloBivariate::monomial(x.coeff(i, j), -i, -j);
    return out;
}

// ---- Z[zeta8] ----

CyclotomicZeta8 CyclotomicZeta8::monomial(std::int64_t coeff, int k) {
    int sign = 1;
    const int r = reduce_exponent(k, sign);
    CyclotomicZeta8 out;
    out.c_[static_cast<std::size_t>(r)] = sign < 0 ? checked_neg(coeff) : coeff;
    return out;
}

bool CyclotomicZeta8::is_zero() const noexcept {
    return std::all_of(c_.begin(), c_.end(), [](auto v) { return v == 0; });
}

bool CyclotomicZeta8::is_one() const noexcept { return *this == CyclotomicZeta8(1); }

CyclotomicZeta8 CyclotomicZeta8::inverse() const {
    for (int k = 0; k < 4; ++k) {
        bool mono = c_[static_cast<std::size_t>(k)] == 1 || c_[static_cast<std::size_t>(k)] == -1;
        for (int l = 0; l < 4 && mono; ++l)
            if (l != k && c_[static_cast<std::size_t>(l)] != 0) mono = false;
        if (mono) return monomial(c_[static_cast<std::size_t>(k)], -k);
    }
    auto coeffs = [](const CyclotomicZeta8& y) { return std::vector<std::int64_t>{y.coeff(0), y.coeff(1), y.coeff(2), y.coeff(3)}; };
    if (auto inv = finite_order_inverse(*this, 8, coeffs)) return *inv;
    throw std::domain_error("element of Z[zeta8] is not a unit of finite order: " + to_string());
}

std::string CyclotomicZeta8::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < 4; ++k) append_term(os, first, c_[static_cast<std::size_t>(k)], power_name("zeta8", k));
    return first ? "0" : os.str();
}

CyclotomicZeta8& CyclotomicZeta8::operator+=(const CyclotomicZeta8& o) {
    for (std::size_t k = 0; k < 4; ++k) c_[k] = checked_add(c_[k], o.c_[k]);
    return *this;
}

CyclotomicZeta8& CyclotomicZeta8::operator-=(const CyclotomicZeta8& o) {
    for (std::size_t k = 0; k < 4; ++k) c_[k] = checked_sub(c_[k], o.c_[k]);
    return *this;
}

CyclotomicZeta8 operator-(const CyclotomicZeta8& a) { return CyclotomicZeta8() - a; }

CyclotomicZeta8 operator*(const CyclotomicZeta8& a, const CyclotomicZeta8& b) {
    CyclotomicZeta8 out;
    for (std::size_t i = 0; i < 4; ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < 4; ++j) {
            std::int64_t term = checked_mul(a.c_[i], b.c_[j]);
            std::size_t k = i + j;
            if (k >= 4) k -= 4, term = checked_neg(term);
            out.c_[k] = checked_add(out.c_[k], term);
        }
    }
    return out;
}

CyclotomicZeta8 conj_zeta8(const CyclotomicZeta8& x) {
    CyclotomicZeta8 out;
    for (int k = 0; k < 4; ++k)
        if (x.coeff(k) != 0) out += CyclotomicZeta8::monomial(x.coeff(k), -k);
    return out;
}

// ---- Gaussian integers ----

GaussianInt GaussianInt::iota_pow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return GaussianInt(1, 0);
        case 1: return GaussianInt(0, 1);
        case 2: return GaussianInt(-1, 0);
        default: return GaussianInt(0, -1);
    }
}

GaussianInt GaussianInt::inverse() const {
    if (im_ == 0 && (re_ == 1 || re_ == -1)) return *this;
    if (re_ == 0 && (im_ == 1 || im_ == -1)) return GaussianInt(0, -im_);
    throw std::domain_error("Gaussian integer is not a unit: " + to_string());
}

std::string GaussianInt::to_string() const {
    std::ostringstream os;
    bool first = true;
    append_term(os, first, re_, "");
    append_term(os, first, im_, "i");
    return first ? "0" : os.str();
}

GaussianInt& GaussianInt::operator+=(const GaussianInt& o) {
    re_ = checked_add(re_, o.re_);
    im_ = checked_add(im_, o.im_);
    return *this;
}

GaussianInt& GaussianInt::operator-=(const GaussianInt& o) {
    re_ = checked_sub(re_, o.re_);
    im_ = checked_sub(im_, o.im_);
    return *this;
}

GaussianInt operator-(const GaussianInt& a) { return GaussianInt() - a; }

GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
    return GaussianInt(checked_sub(checked_mul(a.re_, b.re_), checked_mul(a.im_, b.im_)),
                       checked_add(checked_mul(a.re_, b.im_), checked_mul(a.im_, b.re_)));
}

GaussianInt conj_gaussian(const GaussianInt& x) { return GaussianInt(x.re(), checked_neg(x.im())); }

// ---- prime fields ----

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t sp : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % sp == 0) return n == sp;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1u) == 0) d >>= 1, ++r;
    // Deterministic Miller-Rabin bases for 64-bit inputs.
    for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int k = 1; k < r; ++k) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t p, std::int64_t value) : p_(p), v_(0) {
    if (p >= (std::uint64_t{1} << 62)) throw std::invalid_argument("prime too large");
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    v_ = reduce_signed(value, p);
}

PrimeField::PrimeField(std::uint64_t p, std::int64_t value, unchecked_tag) : p_(p), v_(reduce_signed(value, p)) {}

PrimeField PrimeField::inverse() const {
    if (v_ == 0) throw std::domain_error("zero is not invertible");
    return {p_, static_cast<std::int64_t>(powmod(v_, p_ - 2, p_)), unchecked_tag{}};
}

PrimeField& PrimeField::operator+=(const PrimeField& o) {
    if (o.p_ != p_) throw RingMismatchError("prime field mismatch");
    v_ = (v_ + o.v_) % p_;
    return *this;
}

PrimeField& PrimeField::operator-=(const PrimeField& o) {
    if (o.p_ != p_) throw RingMismatchError("prime field mismatch");
    v_ = (v_ + p_ - o.v_) % p_;
    return *this;
}

PrimeField operator-(const PrimeField& a) { return {a.p_, static_cast<std::int64_t>((a.p_ - a.v_) % a.p_), PrimeField::unchecked_tag{}}; }

PrimeField operator*(const PrimeField& a, const PrimeField& b) {
    if (a.p_ != b.p_) throw RingMismatchError("prime field mismatch");
    return {a.p_, static_cast<std::int64_t>(mulmod(a.v_, b.v_, a.p_)), PrimeField::unchecked_tag{}};
}

// ---- quadratic extensions ----

QuadExtField::Modulus QuadExtField::make_modulus(std::uint64_t p, std::uint64_t m0, std::uint64_t m1) {
    if (p == 2 || p >= (std::uint64_t{1} << 62) || !is_prime(p))
        throw std::invalid_argument("quadratic extension needs an odd prime below 2^62");
    Modulus m{p, m0 % p, m1 % p};
    // Monic quadratic over F_p (p odd) is irreducible iff its discriminant is a non-residue.
    const std::uint64_t disc = (mulmod(m.m1, m.m1, p) + p - mulmod(4 % p, m.m0, p)) % p;
    if (disc == 0 || powmod(disc, (p - 1) / 2, p) != p - 1)
        throw std::invalid_argument("modulus is reducible over F_" + std::to_string(p));
    const QuadExtField q = generator(m);
    if (!is_eighth_root_of_minus_one(q)) throw std::invalid_argument("modulus does not divide q^4 + 1");
    return m;
}

QuadExtField::QuadExtField(const Modulus& m, std::int64_t a0, std::int64_t a1)
    : m_(m), a0_(reduce_signed(a0, m.p)), a1_(reduce_signed(a1, m.p)) {}

QuadExtField QuadExtField::inverse() const {
    const std::uint64_t p = m_.p;
    // N(a0 + a1 q) = a0^2 - m1 a0 a1 + m0 a1^2; inverse is (a0 - m1 a1 - a1 q) / N.
    const std::uint64_t norm =
        (mulmod(a0_, a0_, p) + p - mulmod(m_.m1, mulmod(a0_, a1_, p), p) + mulmod(m_.m0, mulmod(a1_, a1_, p), p)) % p;
    if (norm == 0) throw std::domain_error("zero is not invertible");
    const std::uint64_t ninv = powmod(norm, p - 2, p);
    const std::uint64_t c0 = mulmod((a0_ + p - mulmod(m_.m1, a1_, p)) % p, ninv, p);
    const std::uint64_t c1 = mulmod((p - a1_) % p, ninv, p);
    QuadExtField out(m_, 0, 0);
    out.a0_ = c0;
    out.a1_ = c1;
    return out;
}

std::string QuadExtField::to_string() const {
    if (a1_ == 0) return std::to_string(a0_);
    std::string lin = (a1_ == 1 ? std::string() : std::to_string(a1_) + "*") + "q";
    return a0_ == 0 ? lin : std::to_string(a0_) + "+" + lin;
}

QuadExtField& QuadExtField::operator+=(const QuadExtField& o) {
    if (!(o.m_ == m_)) throw RingMismatchError("quadratic extension mismatch");
    a0_ = (a0_ + o.a0_) % m_.p;
    a1_ = (a1_ + o.a1_) % m_.p;
    return *this;
}

QuadExtField& QuadExtField::operator-=(const QuadExtField& o) {
    if (!(o.m_ == m_)) throw RingMismatchError("quadratic extension mismatch");
    a0_ = (a0_ + m_.p - o.a0_) % m_.p;
    a1_ = (a1_ + m_.p - o.a1_) % m_.p;
    return *this;
}

QuadExtField operator-(const QuadExtField& a) { return QuadExtField(a.m_, 0, 0) - a; }

QuadExtField operator*(const QuadExtField& a, const QuadExtField& b) {
    if (!(a.m_ == b.m_)) throw RingMismatchError("quadratic extension mismatch");
    const std::uint64_t p = a.m_.p;
    const std::uint64_t c0 = mulmod(a.a0_, b.a0_, p);
    const std::uint64_t c1 = (mulmod(a.a0_, b.a1_, p) + mulmod(a.a1_, b.a0_, p)) % p;
    const std::uint64_t c2 = mulmod(a.a1_, b.a1_, p);
    // q^2 = -m1 q - m0
    QuadExtField out(a.m_, 0, 0);
    out.a0_ = (c0 + p - mulmod(c2, a.m_.m0, p)) % p;
    out.a1_ = (c1 + p - mulmod(c2, a.m_.m1, p)) % p;
    return out;
}

// ---- roots of q^4 + 1 ----

bool sqrt_mod(std::uint64_t a, std::uint64_t p, std::uint64_t& out) {
    a %= p;
    if (p == 2 || a == 0) {
        out = a;
        return true;
    }
    if (powmod(a, (p - 1) / 2, p) != 1) return false;
    // Tonelli-Shanks.
    std::uint64_t q = p - 1;
    int s = 0;
    while ((q & 1u) == 0) q >>= 1, ++s;
    std::uint64_t z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    std::uint64_t m = static_cast<std::uint64_t>(s);
    std::uint64_t c = powmod(z, q, p);
    std::uint64_t t = powmod(a, q, p);
    std::uint64_t r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t i = 0, tt = t;
        while (tt != 1) tt = mulmod(tt, tt, p), ++i;
        std::uint64_t b = c;
        for (std::uint64_t k = 0; k + 1 < m - i; ++k) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    out = std::min(r, p - r);
    return true;
}

std::string EighthRoot::field_name() const {
    if (degree == 1) return "F_" + std::to_string(p);
    if (p < (std::uint64_t{1} << 32)) return "F_" + std::to_string(p * p);
    return "F_" + std::to_string(p) + "^2";
}

EighthRoot find_eighth_root(std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (p >= (std::uint64_t{1} << 62)) throw std::invalid_argument("prime too large");
    if (p == 2) return {2, 1, PrimeField(2, 1)};
    if (p % 8 == 1) {
        std::uint64_t g = 2;
        while (powmod(g, (p - 1) / 2, p) != p - 1) ++g;
        const std::uint64_t r = powmod(g, (p - 1) / 8, p);
        const std::uint64_t r2 = mulmod(r, r, p);
        std::uint64_t best = r, cur = r;
        for (int k = 0; k < 3; ++k) {
            cur = mulmod(cur, r2, p);
            best = std::min(best, cur);
        }
        return {p, 1, PrimeField(p, static_cast<std::int64_t>(best))};
    }
    // q^4 + 1 = (q^2 + c)(q^2 - c) with c^2 = -1, or (q^2 + a q + b)(q^2 - a q + b) with b = +-1, a^2 = 2b.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> candidates;  // (m1, m0)
    std::uint64_t root = 0;
    if (sqrt_mod(p - 1, p, root)) {
        candidates.emplace_back(0, root);
        candidates.emplace_back(0, (p - root) % p);
    }
    if (sqrt_mod(2, p, root)) {
        candidates.emplace_back(root, 1);
        candidates.emplace_back((p - root) % p, 1);
    }
    if (sqrt_mod(p - 2, p, root)) {
        candidates.emplace_back(root, p - 1);
        candidates.emplace_back((p - root) % p, p - 1);
    }
    std::sort(candidates.begin(), candidates.end());
    for (const auto& [m1, m0] : candidates) {
        try {
            const auto modulus = QuadExtField::make_modulus(p, m0, m1);
            return {p, 2, QuadExtField::generator(modulus)};
        } catch (const std::invalid_argument&) {
        }
    }
    throw std::logic_error("no irreducible quadratic factor of q^4 + 1 found");
}

}  // namespace grunit
