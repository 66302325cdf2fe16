#ifndef FOAMCALC_HOMOLOGY_HPP
#define FOAMCALC_HOMOLOGY_HPP

#include "foamcalc/complex.hpp"

// The functor F_empty applied to a formal complex of a closed diagram, and
// exact bigraded cohomology: ranks over Q(i) after a specialization, and
// free ranks plus elementary divisors over Z[i] at a = h = 0 via Smith
// normal form.

namespace foamcalc {

struct AlgebraicComplex {
	int min_deg = 0;
	std::vector<std::vector<int>> qdegs;  // generator q-degrees per level
	std::vector<std::map<std::pair<int, int>, RingElem>> diffs;  // sparse, (row, col)

	int levels() const { return (int)qdegs.size(); }
	int degree_of(int k) const { return min_deg + k; }
	int total_generators() const {
		int n = 0;
		for (auto& v : qdegs) n += (int)v.size();
		return n;
	}
};

// each object contributes one generator per word over its loops; the empty
// web contributes the single generator of F_empty(empty set)
inline AlgebraicComplex apply_tqft(const FormalComplex& C) {
	if (!C.boundary.empty()) throw std::invalid_argument("apply_tqft: nonempty boundary");
	AlgebraicComplex A;
	A.min_deg = C.min_deg;
	A.qdegs.resize(C.levels());
	A.diffs.resize(C.levels() > 0 ? C.levels() - 1 : 0);
	std::vector<std::vector<int>> offset(C.levels());
	for (int k = 0; k < C.levels(); ++k) {
		for (auto& o : C.objs[k]) {
			offset[k].push_back((int)A.qdegs[k].size());
			int nl = (int)o.web.loops.size();
			for (int w = 0; w < (1 << nl); ++w) {
				auto word = word_of_index(w, nl);
				int q = o.qshift;
				for (uint8_t b : word) q += b ? -1 : +1;
				A.qdegs[k].push_back(q);
			}
		}
	}
	for (int k = 0; k + 1 < C.levels(); ++k)
		for (auto& [rc, f] : C.diffs[k]) {
			auto [r, c] = rc;
			auto mat = tqft_matrix(f);
			for (int row = 0; row < (int)mat.size(); ++row)
				for (int col = 0; col < (int)mat[row].size(); ++col)
					if (!mat[row][col].is_zero())
						A.diffs[k][{offset[k + 1][r] + row, offset[k][c] + col}] = mat[row][col];
		}
	return A;
}

struct BigradedTable {
	std::map<std::pair<int, int>, int> ranks;  // (homological degree, q degree) -> rank
	std::map<std::pair<int, int>, std::vector<std::string>> torsion;  // elementary divisors
	bool q_graded = true;  // false when the specialization collapses the grading

	int total_rank() const {
		int n = 0;
		for (auto& [ij, r] : ranks) n += r;
		return n;
	}
	bool operator==(const BigradedTable& o) const {
		return ranks == o.ranks && torsion == o.torsion && q_graded == o.q_graded;
	}
};

// ---------------------------------------------------------------------------
// exact rank over Q(i)
// ---------------------------------------------------------------------------

inline int rank_qi(std::vector<std::vector<GaussianRat>> m) {
	int rows = (int)m.size();
	if (rows == 0) return 0;
	int cols = (int)m[0].size(), rank = 0;
	for (int c = 0; c < cols && rank < rows; ++c) {
		int pivot = -1;
		for (int r = rank; r < rows; ++r)
			if (!m[r][c].is_zero()) {
				pivot = r;
				break;
			}
		if (pivot < 0) continue;
		std::swap(m[rank], m[pivot]);
		GaussianRat inv = m[rank][c].inverse();
		for (int cc = c; cc < cols; ++cc) m[rank][cc] = m[rank][cc] * inv;
		for (int r = 0; r < rows; ++r) {
			if (r == rank || m[r][c].is_zero()) continue;
			GaussianRat f = m[r][c];
			for (int cc = c; cc < cols; ++cc) m[r][cc] = m[r][cc] - f * m[rank][cc];
		}
		rank++;
	}
	return rank;
}

// exact ranks of kernel/image per bidegree; the complex splits along the
// q-grading because differentials are degree 0. A specialization with
// a or h nonzero collapses the q-grading, and ranks are then reported in the
// single column j = 0.
inline BigradedTable cohomology(const AlgebraicComplex& A, const Specialization& s) {
	BigradedTable out;
	out.q_graded = s.value_a.is_zero() && s.value_h.is_zero();

	auto qdeg_of = [&](int k, int g) { return out.q_graded ? A.qdegs[k][g] : 0; };

	// bucket generators by (level, q)
	std::map<std::pair<int, int>, std::vector<int>> bucket;
	for (int k = 0; k < A.levels(); ++k)
		for (int g = 0; g < (int)A.qdegs[k].size(); ++g) bucket[{k, qdeg_of(k, g)}].push_back(g);

	// rank of the differential leaving each bucket
	std::map<std::pair<int, int>, int> out_rank;
	for (auto& [kq, gens] : bucket) {
		auto [k, q] = kq;
		if (k + 1 >= A.levels()) continue;
		std::map<int, int> col_of;
		for (int i = 0; i < (int)gens.size(); ++i) col_of[gens[i]] = i;
		std::map<int, int> row_of;
		std::vector<std::vector<GaussianRat>> m;
		if (k < (int)A.diffs.size()) {
			for (auto& [rc, val] : A.diffs[k]) {
				auto [r, c] = rc;
				if (!col_of.count(c)) continue;
				GaussianRat v = specialize(val, s);
				if (v.is_zero()) continue;
				if (!row_of.count(r)) {
					row_of[r] = (int)row_of.size();
					m.emplace_back(gens.size());
				}
				m[row_of[r]][col_of[c]] = v;
			}
		}
		out_rank[kq] = rank_qi(std::move(m));
	}

	for (auto& [kq, gens] : bucket) {
		auto [k, q] = kq;
		int dim = (int)gens.size();
		int r_out = out_rank.count(kq) ? out_rank[kq] : 0;
		int r_in = 0;
		if (k > 0 && out_rank.count({k - 1, q})) r_in = out_rank[{k - 1, q}];
		int betti = dim - r_out - r_in;
		if (betti != 0) out.ranks[{A.degree_of(k), q}] = betti;
	}
	return out;
}

// ---------------------------------------------------------------------------
// Smith normal form over the Euclidean domain Z[i]
// ---------------------------------------------------------------------------

namespace detail {

// rounded division: q minimizing N(a - qb)
inline GaussianInt gauss_div_round(const GaussianInt& a, const GaussianInt& b) {
	Int n = b.norm();
	GaussianInt num = a * b.conj();
	auto round_div = [&](const Int& x) {
		// nearest integer to x/n, ties toward +infinity
		Int two_x = 2 * x, q = (two_x + n) / (2 * n);
		if ((two_x + n) % (2 * n) != 0 && two_x + n < 0) q -= 1;  // floor for negatives
		return q;
	};
	return {round_div(num.re), round_div(num.im)};
}

// canonical associate: rotate by a unit into re > 0, im >= 0 (zero stays)
inline GaussianInt canonical_associate(GaussianInt g) {
	for (int k = 0; k < 4; ++k) {
		if ((g.re > 0 && g.im >= 0) || g.is_zero()) return g;
		g = g * GaussianInt::unit_i();
	}
	return g;
}

// diagonalize in place; returns the diagonal entries (non-canonical order)
inline std::vector<GaussianInt> smith_diagonal(std::vector<std::vector<GaussianInt>> m) {
	std::vector<GaussianInt> diag;
	int rows = (int)m.size(), cols = rows ? (int)m[0].size() : 0;
	int top = 0, left = 0;
	while (top < rows && left < cols) {
		// minimal-norm nonzero pivot
		int pr = -1, pc = -1;
		Int best = 0;
		for (int r = top; r < rows; ++r)
			for (int c = left; c < cols; ++c) {
				if (m[r][c].is_zero()) continue;
				Int n = m[r][c].norm();
				if (pr < 0 || n < best) {
					pr = r;
					pc = c;
					best = n;
				}
			}
		if (pr < 0) break;
		std::swap(m[top], m[pr]);
		for (int r = 0; r < rows; ++r) std::swap(m[r][left], m[r][pc]);
		bool clean = false;
		while (!clean) {
			clean = true;
			for (int r = top + 1; r < rows; ++r) {
				if (m[r][left].is_zero()) continue;
				GaussianInt q = gauss_div_round(m[r][left], m[top][left]);
				for (int c = left; c < cols; ++c) m[r][c] = m[r][c] - q * m[top][c];
				if (!m[r][left].is_zero()) {
					std::swap(m[top], m[r]);
					clean = false;
				}
			}
			for (int c = left + 1; c < cols; ++c) {
				if (m[top][c].is_zero()) continue;
				GaussianInt q = gauss_div_round(m[top][c], m[top][left]);
				for (int r = top; r < rows; ++r) m[r][c] = m[r][c] - q * m[r][left];
				if (!m[top][c].is_zero()) {
					for (int r = top; r < rows; ++r) std::swap(m[r][left], m[r][c]);
					clean = false;
				}
			}
		}
		diag.push_back(m[top][left]);
		top++;
		left++;
	}
	// enforce the divisibility chain
	for (size_t i = 0; i + 1 < diag.size(); ++i)
		for (size_t j = i + 1; j < diag.size(); ++j) {
			GaussianInt a = diag[i], b = diag[j];
			// gcd via Euclidean algorithm
			while (!b.is_zero()) {
				GaussianInt q = gauss_div_round(a, b);
				GaussianInt r = a - q * b;
				a = b;
				b = r;
			}
			GaussianInt g = a;  // gcd(diag_i, diag_j)
			if (g.is_zero()) continue;
			// lcm = di*dj/g
			GaussianInt num = diag[i] * diag[j];
			GaussianInt l = gauss_div_round(num, g);
			if (!(num - l * g).is_zero()) throw std::logic_error("smith: division error");
			diag[i] = g;
			diag[j] = l;
		}
	for (auto& d : diag) d = canonical_associate(d);
	return diag;
}

}  // namespace detail

// free ranks and elementary divisors per bidegree at a = h = 0 over Z[i];
// free ranks must agree with cohomology over Q(i)
inline BigradedTable integral_homology(const AlgebraicComplex& A) {
	BigradedTable out;
	std::map<std::pair<int, int>, std::vector<int>> bucket;
	for (int k = 0; k < A.levels(); ++k)
		for (int g = 0; g < (int)A.qdegs[k].size(); ++g) bucket[{k, A.qdegs[k][g]}].push_back(g);

	struct BlockData {
		int rank = 0;
		std::vector<GaussianInt> divisors;
	};
	std::map<std::pair<int, int>, BlockData> blocks;
	for (auto& [kq, gens] : bucket) {
		auto [k, q] = kq;
		if (k >= (int)A.diffs.size()) continue;
		std::map<int, int> col_of;
		for (int i = 0; i < (int)gens.size(); ++i) col_of[gens[i]] = i;
		std::map<int, int> row_of;
		std::vector<std::vector<GaussianInt>> m;
		for (auto& [rc, val] : A.diffs[k]) {
			auto [r, c] = rc;
			if (!col_of.count(c)) continue;
			GaussianInt v = val.constant_part();  // a = h = 0
			if (v.is_zero()) continue;
			if (!row_of.count(r)) {
				row_of[r] = (int)row_of.size();
				m.emplace_back(gens.size());
			}
			m[row_of[r]][col_of[c]] = v;
		}
		BlockData bd;
		bd.divisors = detail::smith_diagonal(std::move(m));
		bd.rank = (int)bd.divisors.size();
		blocks[kq] = bd;
	}

	for (auto& [kq, gens] : bucket) {
		auto [k, q] = kq;
		int dim = (int)gens.size();
		int r_out = blocks.count(kq) ? blocks[kq].rank : 0;
		int r_in = 0;
		std::vector<GaussianInt> tors;
		if (k > 0 && blocks.count({k - 1, q})) {
			r_in = blocks[{k - 1, q}].rank;
			for (auto& d : blocks[{k - 1, q}].divisors)
				if (!d.is_unit() && !d.is_zero()) tors.push_back(d);
		}
		int betti = dim - r_out - r_in;
		if (betti != 0) out.ranks[{A.degree_of(k), q}] = betti;
		if (!tors.empty()) {
			std::vector<std::string> ts;
			for (auto& d : tors) ts.push_back(d.str());
			out.torsion[{A.degree_of(k), q}] = ts;
		}
	}
	return out;
}

// ---------------------------------------------------------------------------
// reporting
// ---------------------------------------------------------------------------

// sum of rank * t^i q^j
struct Poincare {
	std::map<std::pair<int, int>, int> terms;  // (i, j) -> rank

	std::string str() const {
		if (terms.empty()) return "0";
		std::string s;
		for (auto& [ij, r] : terms) {
			auto [i, j] = ij;
			if (!s.empty()) s += " + ";
			if (r != 1) s += std::to_string(r) + "*";
			bool wrote = false;
			if (i != 0) {
				s += i == 1 ? "t" : "t^" + std::to_string(i);
				wrote = true;
			}
			if (j != 0) {
				if (wrote) s += "*";
				s += j == 1 ? "q" : "q^" + std::to_string(j);
				wrote = true;
			}
			if (!wrote) s += "1";
		}
		return s;
	}
};

inline Poincare poincare_polynomial(const BigradedTable& t) {
	Poincare p;
	for (auto& [ij, r] : t.ranks)
		if (r) p.terms[ij] = r;
	return p;
}

// graded Euler characteristic: the Poincare polynomial at t = -1
inline LaurentPoly poincare_at_minus_one(const BigradedTable& t) {
	LaurentPoly out;
	for (auto& [ij, r] : t.ranks) {
		auto [i, j] = ij;
		out += LaurentPoly((i % 2 == 0 ? 1 : -1) * (long long)r, j);
	}
	return out;
}

}  // namespace foamcalc

#endif
