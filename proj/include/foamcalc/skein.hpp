#ifndef FOAMCALC_SKEIN_HPP
#define FOAMCALC_SKEIN_HPP

#include <cstdint>
#include <map>

#include "foamcalc/tangle.hpp"

// The sl(2) polynomial P_2 of a closed diagram by brute-force state
// expansion: each positive crossing contributes q [oriented] - q^2 [singular],
// each negative one q^{-1} [oriented] - q^{-2} [singular], and a resolution
// with k circles evaluates to (q + q^{-1})^k. Serves as the
// Euler-characteristic oracle for the cohomology pipeline.

namespace foamcalc {

struct LaurentPoly {
	std::map<int, long long> coeffs;  // q-exponent -> integer

	LaurentPoly() = default;
	LaurentPoly(long long c, int e = 0) {
		if (c) coeffs[e] = c;
	}

	static LaurentPoly q_plus_qinv() {
		LaurentPoly p;
		p.coeffs[1] = 1;
		p.coeffs[-1] = 1;
		return p;
	}

	bool is_zero() const { return coeffs.empty(); }
	bool operator==(const LaurentPoly& o) const { return coeffs == o.coeffs; }

	LaurentPoly& operator+=(const LaurentPoly& o) {
		for (auto& [e, c] : o.coeffs) {
			auto it = coeffs.find(e);
			if (it == coeffs.end())
				coeffs[e] = c;
			else if ((it->second += c) == 0)
				coeffs.erase(it);
		}
		return *this;
	}
	LaurentPoly operator+(const LaurentPoly& o) const {
		LaurentPoly r = *this;
		r += o;
		return r;
	}
	LaurentPoly operator*(const LaurentPoly& o) const {
		LaurentPoly r;
		for (auto& [e1, c1] : coeffs)
			for (auto& [e2, c2] : o.coeffs) {
				auto it = r.coeffs.find(e1 + e2);
				if (it == r.coeffs.end())
					r.coeffs[e1 + e2] = c1 * c2;
				else if ((it->second += c1 * c2) == 0)
					r.coeffs.erase(it);
			}
		return r;
	}
	LaurentPoly operator-() const {
		LaurentPoly r = *this;
		for (auto& [e, c] : r.coeffs) c = -c;
		return r;
	}
	LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }

	LaurentPoly pow(int k) const {
		LaurentPoly r(1);
		for (int j = 0; j < k; ++j) r = r * *this;
		return r;
	}

	// "q^5 + q^-5", "-q^9 + q^5 + q^3 + q", "2", "0"
	std::string str() const {
		if (coeffs.empty()) return "0";
		std::string s;
		for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
			auto [e, c] = *it;
			if (s.empty())
				s += c < 0 ? "-" : "";
			else
				s += c < 0 ? " - " : " + ";
			long long ac = c < 0 ? -c : c;
			if (ac != 1 || e == 0) s += std::to_string(ac);
			if (e != 0) {
				if (ac != 1) s += "*";
				s += "q";
				if (e != 1) s += "^" + std::to_string(e);
			}
		}
		return s;
	}
};

// circles of one full resolution: stubs paired within each crossing by the
// chosen smoothing and across crossings by shared edge labels
inline int count_state_circles(const PDCode& pd, uint32_t singular_mask) {
	int n = (int)pd.crossings.size();
	std::vector<int> next(4 * n, -1);  // stub -> stub along the smoothing
	for (int c = 0; c < n; ++c) {
		CrossingResolutions r = resolve_crossing(pd.crossings[c]);
		const Matching& m = (singular_mask >> c) & 1 ? r.singular : r.oriented;
		for (int p = 0; p < 4; ++p) next[4 * c + p] = 4 * c + m.pair_of[p];
	}
	std::map<int, std::vector<int>> by_edge;
	for (int c = 0; c < n; ++c)
		for (int p = 0; p < 4; ++p) by_edge[pd.crossings[c].edges[p]].push_back(4 * c + p);
	std::vector<int> mate(4 * n, -1);
	for (auto& [e, stubs] : by_edge) {
		if (stubs.size() != 2) throw std::invalid_argument("p2: diagram has open boundary");
		mate[stubs[0]] = stubs[1];
		mate[stubs[1]] = stubs[0];
	}
	std::vector<bool> seen(4 * n, false);
	int circles = 0;
	for (int s = 0; s < 4 * n; ++s) {
		if (seen[s]) continue;
		int x = s;
		do {
			seen[x] = true;
			seen[next[x]] = true;
			x = mate[next[x]];
		} while (x != s);
		circles++;
	}
	return circles;
}

inline LaurentPoly p2(const PDCode& pd, int crossing_cap = 16) {
	int n = (int)pd.crossings.size();
	if (n > crossing_cap) throw std::invalid_argument("p2: crossing count exceeds cap");
	if (!pd.boundary_edges().empty()) throw std::invalid_argument("p2: nonempty boundary");
	LaurentPoly total;
	LaurentPoly circle = LaurentPoly::q_plus_qinv();
	std::vector<LaurentPoly> circle_pow(2 * n + pd.free_loops + 2);
	circle_pow[0] = LaurentPoly(1);
	for (size_t k = 1; k < circle_pow.size(); ++k) circle_pow[k] = circle_pow[k - 1] * circle;

	for (uint32_t mask = 0; mask < (1u << n); ++mask) {
		int expo = 0, sign = 1;
		for (int c = 0; c < n; ++c) {
			bool sing = (mask >> c) & 1;
			if (pd.crossings[c].sign > 0)
				expo += sing ? 2 : 1;
			else
				expo -= sing ? 2 : 1;
			if (sing) sign = -sign;
		}
		int circles = n ? count_state_circles(pd, mask) : 0;
		LaurentPoly term = circle_pow[circles + pd.free_loops];
		LaurentPoly q_factor(sign, expo);
		total += q_factor * term;
	}
	if (n == 0) total = circle_pow[pd.free_loops];
	return total;
}

}  // namespace foamcalc

#endif
