#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace quiva {

/// Library-wide error type. Mathematical verdicts (no solution, filtration
/// failure, ...) are values, not exceptions; Error is for violated
/// preconditions, parse failures and internal inconsistencies.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Coefficient field: the rationals (p == 0) or a prime field F_p.
/// All arithmetic in the library is exact; there is no floating point mode.
class FieldSpec {
  public:
    FieldSpec() = default;

    static FieldSpec rationals() { return FieldSpec(); }
    static FieldSpec prime(unsigned p);

    bool is_rational() const { return p_ == 0; }
    unsigned characteristic() const { return p_; }

    std::string name() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

  private:
    unsigned p_ = 0;  // 0 = Q, otherwise a prime modulus
};

/// One exact scalar. Rationals are GMP mpq values; prime-field elements are
/// canonical residues in [0, p) kept in machine words so that exhaustive
/// F_2/F_3 enumeration probes stay cheap.
class Scalar {
  public:
    Scalar() : v_(mpq_class(0)) {}
    Scalar(const FieldSpec& f, long n);
    Scalar(const FieldSpec& f, const mpq_class& q);

    static Scalar zero(const FieldSpec& f) { return Scalar(f, 0); }
    static Scalar one(const FieldSpec& f) { return Scalar(f, 1); }

    FieldSpec field() const;
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

    /// Multiplicative inverse; throws on zero.
    Scalar inverse() const;
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// The rational value (rational fields only).
    const mpq_class& rational() const;
    /// The canonical residue (prime fields only).
    long residue() const;

    /// "3", "-1/2", residues printed as plain integers.
    std::string str() const;
    /// Parses what str() prints (plus leading +). Throws Error on junk.
    static Scalar parse(const FieldSpec& f, const std::string& text);

  private:
    struct Mod {
        int64_t v;
        uint32_t p;
        friend bool operator==(const Mod&, const Mod&) = default;
    };
    std::variant<mpq_class, Mod> v_;

    static void check_same(const Scalar& a, const Scalar& b);
};

}  // namespace quiva
