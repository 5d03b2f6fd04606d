/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ucforge {

/// Raised for malformed input and violated domain preconditions.
struct DomainError : std::domain_error {
	using std::domain_error::domain_error;
};

/// Exact signed fraction, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
public:
	Rational() = default;
	Rational(long v) : q_(v) {}
	Rational(int v) : q_(static_cast<long>(v)) {}
	Rational(long num, long den);
	explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

	/// Parses "p/q" or "p" (optional leading '-'). Throws DomainError on a
	/// zero denominator or any malformed text.
	static Rational parse(std::string_view text);

	/// Canonical "p/q" form; q is always printed, so 1 serializes as "1/1".
	std::string str() const;

	const mpq_class &raw() const { return q_; }
	mpz_class numerator() const { return q_.get_num(); }
	mpz_class denominator() const { return q_.get_den(); }

	bool is_zero() const { return sgn(q_) == 0; }
	int sign() const { return sgn(q_); }

	/// Exponent of 2 in the reduced denominator.
	unsigned long dyadic_valuation() const;

	mpz_class floor() const;
	mpz_class ceil() const;

	Rational operator-() const { return Rational(mpq_class(-q_)); }
	Rational &operator+=(const Rational &o) { q_ += o.q_; return *this; }
	Rational &operator-=(const Rational &o) { q_ -= o.q_; return *this; }
	Rational &operator*=(const Rational &o) { q_ *= o.q_; return *this; }
	Rational &operator/=(const Rational &o);

	friend Rational operator+(Rational a, const Rational &b) { return a += b; }
	friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

	friend bool operator==(const Rational &a, const Rational &b) { return cmp(a.q_, b.q_) == 0; }
	friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
	{
		int c = cmp(a.q_, b.q_);
		return c < 0 ? std::strong_ordering::less
		     : c > 0 ? std::strong_ordering::greater
		             : std::strong_ordering::equal;
	}

	friend std::ostream &operator<<(std::ostream &os, const Rational &r);

private:
	mpq_class q_{0};
};

inline Rational abs(const Rational &r) { return r.sign() < 0 ? -r : r; }
inline const Rational &min(const Rational &a, const Rational &b) { return b < a ? b : a; }
inline const Rational &max(const Rational &a, const Rational &b) { return a < b ? b : a; }

/// 1/n for a positive index n.
Rational reciprocal(long n);

/// 2^e for e >= 0 and 2^-|e| for e < 0.
Rational pow2(long e);

} // namespace ucforge
