#ifndef FOAMCALC_RING_HPP
#define FOAMCALC_RING_HPP

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

// Exact arithmetic in the ground ring Z[i][a,h], its field specializations
// Q(i), and the half-integer variant used by the dotless theory. Values are
// immutable after construction and safe to share across threads.

namespace foamcalc {

using Int = mpz_class;
using Rat = mpq_class;

struct GaussianInt {
	Int re, im;

	GaussianInt() : re(0), im(0) {}
	GaussianInt(long r) : re(r), im(0) {}
	GaussianInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}

	static GaussianInt unit_i() { return GaussianInt(Int(0), Int(1)); }

	bool is_zero() const { return re == 0 && im == 0; }

	GaussianInt operator+(const GaussianInt& o) const { return {re + o.re, im + o.im}; }
	GaussianInt operator-(const GaussianInt& o) const { return {re - o.re, im - o.im}; }
	GaussianInt operator-() const { return {-re, -im}; }
	GaussianInt operator*(const GaussianInt& o) const {
		return {re * o.re - im * o.im, re * o.im + im * o.re};
	}
	GaussianInt conj() const { return {re, -im}; }
	Int norm() const { return re * re + im * im; }

	// units of Z[i] are exactly {1,-1,i,-i}, i.e. norm 1
	bool is_unit() const { return norm() == 1; }
	GaussianInt unit_inverse() const {
		if (!is_unit()) throw std::domain_error("unit_inverse: not a unit of Z[i]");
		return conj();
	}

	bool operator==(const GaussianInt& o) const { return re == o.re && im == o.im; }
	std::strong_ordering operator<=>(const GaussianInt& o) const {
		if (int c = cmp(re, o.re); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
		if (int c = cmp(im, o.im); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
		return std::strong_ordering::equal;
	}

	std::string str() const {
		std::string s = "(" + re.get_str();
		s += (im < 0) ? "-" : "+";
		Int ai = abs(im);
		s += ai.get_str() + "i)";
		return s;
	}
};

// exact element of Q(i); the FieldScalar of homology computations
struct GaussianRat {
	Rat re, im;

	GaussianRat() : re(0), im(0) {}
	GaussianRat(long r) : re(r), im(0) {}
	GaussianRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) { canon(); }
	GaussianRat(const GaussianInt& g) : re(g.re), im(g.im) {}

	void canon() {
		re.canonicalize();
		im.canonicalize();
	}

	static GaussianRat unit_i() { return GaussianRat(Rat(0), Rat(1)); }

	bool is_zero() const { return re == 0 && im == 0; }

	GaussianRat operator+(const GaussianRat& o) const { return {re + o.re, im + o.im}; }
	GaussianRat operator-(const GaussianRat& o) const { return {re - o.re, im - o.im}; }
	GaussianRat operator-() const { return {-re, -im}; }
	GaussianRat operator*(const GaussianRat& o) const {
		return {re * o.re - im * o.im, re * o.im + im * o.re};
	}
	GaussianRat inverse() const {
		Rat n = re * re + im * im;
		if (n == 0) throw std::domain_error("inverse of zero in Q(i)");
		return {re / n, -im / n};
	}
	GaussianRat operator/(const GaussianRat& o) const { return *this * o.inverse(); }

	bool operator==(const GaussianRat& o) const { return re == o.re && im == o.im; }
	std::strong_ordering operator<=>(const GaussianRat& o) const {
		if (int c = cmp(re, o.re); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
		if (int c = cmp(im, o.im); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
		return std::strong_ordering::equal;
	}

	std::string str() const {
		std::string s = "(" + re.get_str();
		s += (im < 0) ? "-" : "+";
		Rat ai = abs(im);
		s += ai.get_str() + "i)";
		return s;
	}
};

// Sparse polynomial in the formal variables a,h; canonical form stores no
// zero coefficients and keeps monomials sorted by (deg_a, deg_h) descending.
// q-degrees: deg_q(a) = -4, deg_q(h) = -2, so that X^2 = hX + a is
// q-homogeneous with deg(X) = -1, deg(1) = +1.
template <class C>
struct BivarPoly {
	struct Term {
		int da, dh;
		C c;
		bool operator==(const Term& o) const { return da == o.da && dh == o.dh && c == o.c; }
	};
	std::vector<Term> terms;

	BivarPoly() = default;
	BivarPoly(long n) {
		if (n != 0) terms.push_back({0, 0, C(n)});
	}
	explicit BivarPoly(const C& c) {
		if (!c.is_zero()) terms.push_back({0, 0, c});
	}

	static BivarPoly monomial(const C& c, int da, int dh) {
		BivarPoly p;
		if (!c.is_zero()) p.terms.push_back({da, dh, c});
		return p;
	}
	static BivarPoly zero() { return BivarPoly(); }
	static BivarPoly one() { return BivarPoly(1); }
	static BivarPoly unit_i() { return BivarPoly(C::unit_i()); }
	static BivarPoly var_a() { return monomial(C(1), 1, 0); }
	static BivarPoly var_h() { return monomial(C(1), 0, 1); }

	bool is_zero() const { return terms.empty(); }

	static bool mono_before(const Term& x, const Term& y) {
		return x.da != y.da ? x.da > y.da : x.dh > y.dh;
	}

	void canonicalize() {
		std::sort(terms.begin(), terms.end(), mono_before);
		std::vector<Term> out;
		for (auto& t : terms) {
			if (!out.empty() && out.back().da == t.da && out.back().dh == t.dh)
				out.back().c = out.back().c + t.c;
			else
				out.push_back(t);
			if (!out.empty() && out.back().c.is_zero()) out.pop_back();
		}
		terms = std::move(out);
	}

	BivarPoly operator+(const BivarPoly& o) const {
		BivarPoly r;
		r.terms = terms;
		r.terms.insert(r.terms.end(), o.terms.begin(), o.terms.end());
		r.canonicalize();
		return r;
	}
	BivarPoly operator-() const {
		BivarPoly r = *this;
		for (auto& t : r.terms) t.c = -t.c;
		return r;
	}
	BivarPoly operator-(const BivarPoly& o) const { return *this + (-o); }
	BivarPoly operator*(const BivarPoly& o) const {
		BivarPoly r;
		r.terms.reserve(terms.size() * o.terms.size());
		for (auto& x : terms)
			for (auto& y : o.terms) r.terms.push_back({x.da + y.da, x.dh + y.dh, x.c * y.c});
		r.canonicalize();
		return r;
	}
	bool operator==(const BivarPoly& o) const { return terms == o.terms; }

	std::strong_ordering operator<=>(const BivarPoly& o) const {
		size_t n = std::min(terms.size(), o.terms.size());
		for (size_t k = 0; k < n; ++k) {
			if (terms[k].da != o.terms[k].da) return terms[k].da <=> o.terms[k].da;
			if (terms[k].dh != o.terms[k].dh) return terms[k].dh <=> o.terms[k].dh;
			if (auto c = terms[k].c <=> o.terms[k].c; c != std::strong_ordering::equal) return c;
		}
		return terms.size() <=> o.terms.size();
	}

	bool is_constant() const {
		return terms.empty() || (terms.size() == 1 && terms[0].da == 0 && terms[0].dh == 0);
	}
	C constant_part() const {
		for (auto& t : terms)
			if (t.da == 0 && t.dh == 0) return t.c;
		return C();
	}

	// q-degree if homogeneous (zero polynomial reports homogeneous with no value)
	std::optional<int> q_degree() const {
		std::optional<int> d;
		for (auto& t : terms) {
			int dq = -4 * t.da - 2 * t.dh;
			if (d && *d != dq) return std::nullopt;
			d = dq;
		}
		return d ? d : std::optional<int>(0);
	}
	bool is_homogeneous() const {
		std::optional<int> d;
		for (auto& t : terms) {
			int dq = -4 * t.da - 2 * t.dh;
			if (d && *d != dq) return false;
			d = dq;
		}
		return true;
	}

	std::string str() const {
		if (terms.empty()) return "0";
		std::string s;
		for (size_t k = 0; k < terms.size(); ++k) {
			if (k) s += " + ";
			s += terms[k].c.str();
			if (terms[k].da != 0 || terms[k].dh != 0)
				s += "*a^" + std::to_string(terms[k].da) + "*h^" + std::to_string(terms[k].dh);
		}
		return s;
	}
};

using RingElem = BivarPoly<GaussianInt>;
using RingElemQ = BivarPoly<GaussianRat>;

inline RingElem ring_add(const RingElem& x, const RingElem& y) { return x + y; }
inline RingElem ring_mul(const RingElem& x, const RingElem& y) { return x * y; }

// in R = Z[i][a,h] the units are the constants {1,-1,i,-i}
inline bool is_unit(const RingElem& x) {
	return x.is_constant() && !x.is_zero() && x.constant_part().is_unit();
}

// multiplicative inverse of a unit of R
inline RingElem unit_inverse(const RingElem& x) {
	if (!is_unit(x)) throw std::domain_error("unit_inverse: not a unit of R");
	return RingElem(x.constant_part().unit_inverse());
}

// evaluation homomorphism a -> value_a, h -> value_h, i -> i, into Q(i)
struct Specialization {
	GaussianRat value_a, value_h;
};

inline GaussianRat specialize(const RingElem& x, const Specialization& s) {
	GaussianRat acc;
	for (auto& t : x.terms) {
		GaussianRat m(t.c);
		for (int k = 0; k < t.da; ++k) m = m * s.value_a;
		for (int k = 0; k < t.dh; ++k) m = m * s.value_h;
		acc = acc + m;
	}
	return acc;
}

// nonzero scalars become invertible once specialized to the field Q(i)
inline bool is_unit_under(const RingElem& x, const Specialization& s) {
	return !specialize(x, s).is_zero();
}

inline RingElemQ to_rational(const RingElem& x) {
	RingElemQ r;
	r.terms.reserve(x.terms.size());
	for (auto& t : x.terms) r.terms.push_back({t.da, t.dh, GaussianRat(t.c)});
	return r;
}

// ---- canonical string serialization (JSON payloads, test fixtures) ----

namespace detail {
inline Int parse_int(const std::string& s) {
	return Int(s.starts_with('+') ? s.substr(1) : s);
}

inline GaussianInt parse_gauss(const std::string& tok) {
	// "(re+imi)" or "(re-imi)"
	if (tok.size() < 5 || tok.front() != '(' || tok.back() != ')' || tok[tok.size() - 2] != 'i')
		throw std::invalid_argument("bad Gaussian integer literal: " + tok);
	std::string body = tok.substr(1, tok.size() - 3);
	size_t split = std::string::npos;
	for (size_t k = 1; k < body.size(); ++k)
		if (body[k] == '+' || body[k] == '-') split = k;  // last sign separates re from im
	if (split == std::string::npos) throw std::invalid_argument("bad Gaussian integer literal: " + tok);
	GaussianInt g;
	g.re = parse_int(body.substr(0, split));
	g.im = parse_int(body.substr(split));
	return g;
}
}  // namespace detail

inline std::string ring_to_string(const RingElem& x) { return x.str(); }

inline RingElem ring_from_string(const std::string& s) {
	if (s == "0") return RingElem::zero();
	RingElem r;
	size_t pos = 0;
	while (pos < s.size()) {
		size_t next = s.find(" + ", pos);
		std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
		pos = next == std::string::npos ? s.size() : next + 3;
		int da = 0, dh = 0;
		std::string coeff = term;
		if (size_t star = term.find("*a^"); star != std::string::npos) {
			coeff = term.substr(0, star);
			size_t hpos = term.find("*h^", star);
			if (hpos == std::string::npos) throw std::invalid_argument("bad monomial: " + term);
			da = std::stoi(term.substr(star + 3, hpos - (star + 3)));
			dh = std::stoi(term.substr(hpos + 3));
		}
		r.terms.push_back({da, dh, detail::parse_gauss(coeff)});
	}
	r.canonicalize();
	return r;
}

}  // namespace foamcalc

#endif
