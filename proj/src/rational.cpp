/* SPDX-License-Identifier: Apache-2.0 */

#include "rational.hpp"

#include <cctype>
#include <ostream>

namespace ucforge {

namespace {

bool is_integer_text(std::string_view s)
{
	if (!s.empty() && (s.front() == '-' || s.front() == '+'))
		s.remove_prefix(1);
	if (s.empty())
		return false;
	for (char c : s)
		if (!std::isdigit(static_cast<unsigned char>(c)))
			return false;
	return true;
}

mpz_class parse_integer(std::string_view s)
{
	if (!s.empty() && s.front() == '+')
		s.remove_prefix(1);
	return mpz_class(std::string(s), 10);
}

} // namespace

Rational::Rational(long num, long den)
{
	if (den == 0)
		throw DomainError("rational with zero denominator");
	q_ = mpq_class(num, den);
	q_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
	auto slash = text.find('/');
	std::string_view num = text.substr(0, slash);
	std::string_view den = slash == std::string_view::npos ? std::string_view("1")
	                                                       : text.substr(slash + 1);
	if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' || den.front() == '+')
		throw DomainError("malformed rational '" + std::string(text) + "'");
	mpz_class d = parse_integer(den);
	if (d == 0)
		throw DomainError("rational '" + std::string(text) + "' has zero denominator");
	mpq_class q(parse_integer(num), d);
	q.canonicalize();
	return Rational(std::move(q));
}

std::string Rational::str() const
{
	return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

unsigned long Rational::dyadic_valuation() const
{
	return mpz_scan1(q_.get_den_mpz_t(), 0);
}

mpz_class Rational::floor() const
{
	mpz_class r;
	mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
	return r;
}

mpz_class Rational::ceil() const
{
	mpz_class r;
	mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
	return r;
}

Rational &Rational::operator/=(const Rational &o)
{
	if (o.is_zero())
		throw DomainError("division by zero");
	q_ /= o.q_;
	return *this;
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
	return os << r.str();
}

Rational reciprocal(long n)
{
	return Rational(1, n);
}

Rational pow2(long e)
{
	mpz_class p;
	mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
	return e < 0 ? Rational(mpq_class(mpz_class(1), p)) : Rational(mpq_class(p));
}

} // namespace ucforge
