#include "quiva/field.hpp"

namespace quiva {

namespace {

bool small_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int64_t mod_inverse(int64_t a, int64_t p) {
    // extended Euclid; a in [1, p)
    int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        int64_t q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (r != 1) throw Error("not invertible mod p");
    return ((t % p) + p) % p;
}

}  // namespace

FieldSpec FieldSpec::prime(unsigned p) {
    if (!small_prime(p)) throw Error("field modulus " + std::to_string(p) + " is not prime");
    if (p > 1000003) throw Error("prime modulus too large (limit 1000003)");
    FieldSpec f;
    f.p_ = p;
    return f;
}

std::string FieldSpec::name() const {
    return p_ == 0 ? "Q" : "F" + std::to_string(p_);
}

Scalar::Scalar(const FieldSpec& f, long n) {
    if (f.is_rational()) {
        v_ = mpq_class(n);
    } else {
        int64_t p = f.characteristic();
        v_ = Mod{((n % p) + p) % p, (uint32_t)f.characteristic()};
    }
}

Scalar::Scalar(const FieldSpec& f, const mpq_class& q) {
    if (f.is_rational()) {
        mpq_class c = q;
        c.canonicalize();
        v_ = c;
    } else {
        // numerator * denominator^{-1} mod p
        int64_t p = f.characteristic();
        mpz_class num = q.get_num() % p;
        mpz_class den = q.get_den() % p;
        int64_t n = ((num.get_si() % p) + p) % p;
        int64_t d = ((den.get_si() % p) + p) % p;
        if (d == 0) throw Error("denominator vanishes mod " + std::to_string(p));
        v_ = Mod{n * mod_inverse(d, p) % p, (uint32_t)p};
    }
}

FieldSpec Scalar::field() const {
    if (std::holds_alternative<mpq_class>(v_)) return FieldSpec::rationals();
    return FieldSpec::prime(std::get<Mod>(v_).p);
}

bool Scalar::is_zero() const {
    if (auto* q = std::get_if<mpq_class>(&v_)) return sgn(*q) == 0;
    return std::get<Mod>(v_).v == 0;
}

bool Scalar::is_one() const {
    if (auto* q = std::get_if<mpq_class>(&v_)) return *q == 1;
    return std::get<Mod>(v_).v == 1;
}

void Scalar::check_same(const Scalar& a, const Scalar& b) {
    if (a.v_.index() != b.v_.index() ||
        (std::holds_alternative<Mod>(a.v_) &&
         std::get<Mod>(a.v_).p != std::get<Mod>(b.v_).p))
        throw Error("scalar field mismatch");
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (auto* q = std::get_if<mpq_class>(&r.v_)) {
        *q = -*q;
    } else {
        auto& m = std::get<Mod>(r.v_);
        if (m.v != 0) m.v = m.p - m.v;
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same(*this, o);
    if (auto* q = std::get_if<mpq_class>(&v_)) {
        *q += std::get<mpq_class>(o.v_);
    } else {
        auto& m = std::get<Mod>(v_);
        m.v = (m.v + std::get<Mod>(o.v_).v) % m.p;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same(*this, o);
    if (auto* q = std::get_if<mpq_class>(&v_)) {
        *q -= std::get<mpq_class>(o.v_);
    } else {
        auto& m = std::get<Mod>(v_);
        m.v = (m.v - std::get<Mod>(o.v_).v % (int64_t)m.p + m.p) % m.p;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same(*this, o);
    if (auto* q = std::get_if<mpq_class>(&v_)) {
        *q *= std::get<mpq_class>(o.v_);
    } else {
        auto& m = std::get<Mod>(v_);
        m.v = m.v * std::get<Mod>(o.v_).v % m.p;
    }
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("division by zero");
    Scalar r = *this;
    if (auto* q = std::get_if<mpq_class>(&r.v_)) {
        *q = 1 / *q;
    } else {
        auto& m = std::get<Mod>(r.v_);
        m.v = mod_inverse(m.v, m.p);
    }
    return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
    Scalar::check_same(a, b);
    return a.v_ == b.v_;
}

const mpq_class& Scalar::rational() const {
    if (!std::holds_alternative<mpq_class>(v_)) throw Error("not a rational scalar");
    return std::get<mpq_class>(v_);
}

long Scalar::residue() const {
    if (!std::holds_alternative<Mod>(v_)) throw Error("not a prime-field scalar");
    return std::get<Mod>(v_).v;
}

std::string Scalar::str() const {
    if (auto* q = std::get_if<mpq_class>(&v_)) return q->get_str();
    return std::to_string(std::get<Mod>(v_).v);
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
    std::string t = text;
    if (!t.empty() && t[0] == '+') t = t.substr(1);
    if (t.empty()) throw Error("empty scalar literal");
    for (size_t i = 0; i < t.size(); ++i) {
        char c = t[i];
        bool ok = (c >= '0' && c <= '9') || (i == 0 && c == '-') || c == '/';
        if (!ok) throw Error("bad scalar literal: '" + text + "'");
    }
    try {
        mpq_class q(t);
        q.canonicalize();
        return Scalar(f, q);
    } catch (const std::invalid_argument&) {
        throw Error("bad scalar literal: '" + text + "'");
    }
}

}  // namespace quiva
