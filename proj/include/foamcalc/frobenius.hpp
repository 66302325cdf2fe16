#ifndef FOAMCALC_FROBENIUS_HPP
#define FOAMCALC_FROBENIUS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "foamcalc/ring.hpp"

// The Frobenius algebra A = R[X]/(X^2 - hX - a) in the basis (1,X), with
// unit/counit/multiplication/comultiplication, the handle element 2X - h,
// and the induced maps on tensor powers. This is the algebraic engine both
// for closed-foam evaluation and for the TQFT functor.

namespace foamcalc {

struct AlgebraElement {
	RingElem c1, cX;  // c1*1 + cX*X

	AlgebraElement() = default;
	AlgebraElement(RingElem one_part, RingElem x_part)
	    : c1(std::move(one_part)), cX(std::move(x_part)) {}

	static AlgebraElement one() { return {RingElem::one(), RingElem::zero()}; }
	static AlgebraElement x() { return {RingElem::zero(), RingElem::one()}; }
	static AlgebraElement zero() { return {}; }

	bool is_zero() const { return c1.is_zero() && cX.is_zero(); }
	bool operator==(const AlgebraElement& o) const { return c1 == o.c1 && cX == o.cX; }

	AlgebraElement operator+(const AlgebraElement& o) const { return {c1 + o.c1, cX + o.cX}; }
	AlgebraElement operator-(const AlgebraElement& o) const { return {c1 - o.c1, cX - o.cX}; }
	AlgebraElement operator*(const RingElem& r) const { return {c1 * r, cX * r}; }

	// deg(1) = +1, deg(X) = -1
	bool is_homogeneous() const {
		if (c1.is_zero() || cX.is_zero()) return c1.is_homogeneous() && cX.is_homogeneous();
		auto d1 = c1.q_degree(), dX = cX.q_degree();
		return d1 && dX && *d1 + 1 == *dX - 1;
	}
	std::optional<int> q_degree() const {
		if (is_zero()) return 0;
		if (!is_homogeneous()) return std::nullopt;
		if (!c1.is_zero()) return *c1.q_degree() + 1;
		return *cX.q_degree() - 1;
	}
};

inline AlgebraElement unit() { return AlgebraElement::one(); }

inline RingElem counit(const AlgebraElement& v) { return v.cX; }

inline AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) {
	// X*X = hX + a
	RingElem xx = x.cX * y.cX;
	return {x.c1 * y.c1 + RingElem::var_a() * xx,
	        x.c1 * y.cX + x.cX * y.c1 + RingElem::var_h() * xx};
}

inline AlgebraElement mul_by_x(const AlgebraElement& v) { return mul(AlgebraElement::x(), v); }

// (2X - h)^g * X^d in the basis (1,X); the normal form of a genus-g,
// d-dotted surface piece
inline AlgebraElement handle_power(int genus, int dots) {
	AlgebraElement handle{-RingElem::var_h(), RingElem(2)};
	AlgebraElement v = AlgebraElement::one();
	for (int k = 0; k < genus; ++k) v = mul(handle, v);
	for (int k = 0; k < dots; ++k) v = mul_by_x(v);
	return v;
}

// closed connected surface of genus g with d dots
inline RingElem evaluate_closed_surface(int genus, int dots) {
	return counit(handle_power(genus, dots));
}

// Sparse element of A^{tensor k}; words over {0,1} with 0 = basis vector 1
// and 1 = basis vector X. k = 0 is a bare scalar.
struct TensorElement {
	using Word = std::vector<uint8_t>;
	int arity = 0;
	std::map<Word, RingElem> coeffs;

	TensorElement() = default;
	explicit TensorElement(int k) : arity(k) {}

	static TensorElement scalar(const RingElem& r) {
		TensorElement t(0);
		if (!r.is_zero()) t.coeffs[{}] = r;
		return t;
	}
	static TensorElement basis(const Word& w) {
		TensorElement t((int)w.size());
		t.coeffs[w] = RingElem::one();
		return t;
	}

	bool is_zero() const { return coeffs.empty(); }
	bool operator==(const TensorElement& o) const { return arity == o.arity && coeffs == o.coeffs; }

	void add_term(const Word& w, const RingElem& c) {
		if (c.is_zero()) return;
		auto it = coeffs.find(w);
		if (it == coeffs.end()) {
			coeffs.emplace(w, c);
		} else {
			it->second = it->second + c;
			if (it->second.is_zero()) coeffs.erase(it);
		}
	}

	TensorElement operator+(const TensorElement& o) const {
		if (arity != o.arity) throw std::invalid_argument("tensor arity mismatch");
		TensorElement r = *this;
		for (auto& [w, c] : o.coeffs) r.add_term(w, c);
		return r;
	}
	TensorElement operator-() const {
		TensorElement r = *this;
		for (auto& [w, c] : r.coeffs) c = -c;
		return r;
	}
	TensorElement operator-(const TensorElement& o) const { return *this + (-o); }
	TensorElement operator*(const RingElem& s) const {
		TensorElement r(arity);
		for (auto& [w, c] : coeffs) r.add_term(w, c * s);
		return r;
	}

	RingElem coeff(const Word& w) const {
		auto it = coeffs.find(w);
		return it == coeffs.end() ? RingElem::zero() : it->second;
	}
};

// action on one tensor factor: identity or multiplication by X
enum class FactorOp { identity, mulX };

inline TensorElement apply_on_factor(const TensorElement& t, int pos, FactorOp op) {
	if (pos < 0 || pos >= t.arity) throw std::out_of_range("apply_on_factor: bad index");
	if (op == FactorOp::identity) return t;
	TensorElement r(t.arity);
	for (auto& [w, c] : t.coeffs) {
		AlgebraElement v = w[pos] ? AlgebraElement::x() : AlgebraElement::one();
		v = mul_by_x(v);
		TensorElement::Word w1 = w;
		w1[pos] = 0;
		r.add_term(w1, c * v.c1);
		w1[pos] = 1;
		r.add_term(w1, c * v.cX);
	}
	return r;
}

// m applied to factors i and j (i < j); the product lands at position i
inline TensorElement merge_factors(const TensorElement& t, int i, int j) {
	if (i > j) std::swap(i, j);
	if (i < 0 || j >= t.arity || i == j) throw std::out_of_range("merge_factors: bad indices");
	TensorElement r(t.arity - 1);
	for (auto& [w, c] : t.coeffs) {
		AlgebraElement u = w[i] ? AlgebraElement::x() : AlgebraElement::one();
		AlgebraElement v = w[j] ? AlgebraElement::x() : AlgebraElement::one();
		AlgebraElement p = mul(u, v);
		TensorElement::Word w1;
		w1.reserve(w.size() - 1);
		for (int k = 0; k < (int)w.size(); ++k)
			if (k != j) w1.push_back(w[k]);
		w1[i] = 0;
		r.add_term(w1, c * p.c1);
		w1[i] = 1;
		r.add_term(w1, c * p.cX);
	}
	return r;
}

// Delta applied to factor i; the two outputs land at positions i, i+1
inline TensorElement split_factor(const TensorElement& t, int i) {
	if (i < 0 || i >= t.arity) throw std::out_of_range("split_factor: bad index");
	TensorElement r(t.arity + 1);
	const RingElem h = RingElem::var_h(), a = RingElem::var_a();
	for (auto& [w, c] : t.coeffs) {
		TensorElement::Word w1;
		w1.reserve(w.size() + 1);
		for (int k = 0; k < i; ++k) w1.push_back(w[k]);
		w1.push_back(0);
		w1.push_back(0);
		for (int k = i + 1; k < (int)w.size(); ++k) w1.push_back(w[k]);
		auto put = [&](uint8_t x, uint8_t y, const RingElem& s) {
			w1[i] = x;
			w1[i + 1] = y;
			r.add_term(w1, c * s);
		};
		if (w[i] == 0) {
			// Delta(1) = 1(x)X + X(x)1 - h 1(x)1
			put(0, 1, RingElem::one());
			put(1, 0, RingElem::one());
			put(0, 0, -h);
		} else {
			// Delta(X) = X(x)X + a 1(x)1
			put(1, 1, RingElem::one());
			put(0, 0, a);
		}
	}
	return r;
}

inline TensorElement comul(const AlgebraElement& v) {
	TensorElement t(1);
	t.add_term({0}, v.c1);
	t.add_term({1}, v.cX);
	return split_factor(t, 0);
}

// iterated comultiplication Delta^{(k-1)}: A -> A^{tensor k}; k = 0 is the counit
inline TensorElement comul_power(const AlgebraElement& v, int k) {
	if (k == 0) return TensorElement::scalar(counit(v));
	TensorElement t(1);
	t.add_term({0}, v.c1);
	t.add_term({1}, v.cX);
	for (int j = 1; j < k; ++j) t = split_factor(t, 0);
	return t;
}

// basis order (1..1, ..., X..X) indexed by the binary value of the word,
// first factor most significant: (1(x)1, 1(x)X, X(x)1, X(x)X) for arity 2
inline TensorElement::Word word_of_index(int idx, int arity) {
	TensorElement::Word w(arity);
	for (int k = arity - 1; k >= 0; --k) {
		w[k] = idx & 1;
		idx >>= 1;
	}
	return w;
}
inline int index_of_word(const TensorElement::Word& w) {
	int idx = 0;
	for (uint8_t b : w) idx = (idx << 1) | b;
	return idx;
}

// matrix (rows = target basis, cols = source basis) of a linear map given on
// tensor basis vectors
template <class F>
std::vector<std::vector<RingElem>> matrix_of(F&& map, int src_arity, int tgt_arity) {
	int ncols = 1 << src_arity, nrows = 1 << tgt_arity;
	std::vector<std::vector<RingElem>> m(nrows, std::vector<RingElem>(ncols));
	for (int c = 0; c < ncols; ++c) {
		TensorElement img = map(TensorElement::basis(word_of_index(c, src_arity)));
		if (img.arity != tgt_arity) throw std::logic_error("matrix_of: arity mismatch");
		for (auto& [w, coef] : img.coeffs) m[index_of_word(w)][c] = coef;
	}
	return m;
}

}  // namespace foamcalc

#endif
