#ifndef FOAMCALC_COMPLEX_HPP
#define FOAMCALC_COMPLEX_HPP

#include <chrono>

#include "foamcalc/cobordism.hpp"
#include "foamcalc/skein.hpp"

// Formal cochain complexes over the matching/cobordism category:
// construction from crossings, planar gluing of complexes, delooping,
// Gaussian elimination, and the incremental assembly loop that adds one
// crossing at a time and simplifies after each step.

namespace foamcalc {

struct GradedObject {
	Matching web;
	int qshift = 0;

	bool operator==(const GradedObject&) const = default;
};

struct FormalComplex {
	std::vector<Dir> boundary;  // common boundary tags of every object
	int min_deg = 0;
	std::vector<std::vector<GradedObject>> objs;  // objs[k] lives at degree min_deg + k
	// diffs[k]: sparse matrix from objs[k] to objs[k+1], keyed (row, col)
	std::vector<std::map<std::pair<int, int>, MorphismSum>> diffs;

	int levels() const { return (int)objs.size(); }
	int degree_of(int k) const { return min_deg + k; }
	int total_objects() const {
		int n = 0;
		for (auto& v : objs) n += (int)v.size();
		return n;
	}

	const MorphismSum* entry(int k, int row, int col) const {
		auto it = diffs[k].find({row, col});
		return it == diffs[k].end() ? nullptr : &it->second;
	}
	// sums that cancel only modulo the local relations are dropped here; a
	// single canonical term is never zero in the quotient
	void set_entry(int k, int row, int col, MorphismSum f) {
		if (f.is_zero() || (f.terms.size() > 1 && zero_mod_relations(f)))
			diffs[k].erase({row, col});
		else
			diffs[k][{row, col}] = std::move(f);
	}
};

// max_objects is the peak working-set size: the total object count recorded
// after each simplification pass (transient doubling inside a deloop step is
// not the measure of interest)
struct SimplifyStats {
	long deloops = 0;
	long eliminations = 0;
	int max_objects = 0;
	struct Step {
		int crossing = -1;
		int objects_after = 0;
		double wall_ms = 0;
		long deloops = 0, eliminations = 0;
	};
	std::vector<Step> timeline;

	void observe(const FormalComplex& c) { max_objects = std::max(max_objects, c.total_objects()); }
};

// ---------------------------------------------------------------------------
// constructors
// ---------------------------------------------------------------------------

inline FormalComplex empty_complex() {
	FormalComplex c;
	c.objs.push_back({GradedObject{Matching::empty(), 0}});
	return c;
}

inline FormalComplex single_object_complex(Matching web, int qshift = 0) {
	FormalComplex c;
	c.boundary = web.dirs;
	c.objs.push_back({GradedObject{std::move(web), qshift}});
	return c;
}

// positive crossing: [singular]{+2} at degree -1 -> [oriented]{+1} at 0;
// negative: [oriented]{-1} at 0 -> [singular]{-2} at +1; differential is the
// saddle with coefficient one
inline FormalComplex crossing_complex(const Crossing& cx) {
	CrossingResolutions r = resolve_crossing(cx);
	FormalComplex c;
	c.boundary = r.oriented.dirs;
	if (cx.sign > 0) {
		c.min_deg = -1;
		c.objs.push_back({GradedObject{r.singular, +2}});
		c.objs.push_back({GradedObject{r.oriented, +1}});
		c.diffs.emplace_back();
		c.set_entry(0, 0, 0, saddle(r.singular, r.oriented));
	} else {
		c.min_deg = 0;
		c.objs.push_back({GradedObject{r.oriented, -1}});
		c.objs.push_back({GradedObject{r.singular, -2}});
		c.diffs.emplace_back();
		c.set_entry(0, 0, 0, saddle(r.oriented, r.singular));
	}
	return c;
}

// ---------------------------------------------------------------------------
// tensor (side-by-side placement) and zipping
// ---------------------------------------------------------------------------

inline std::vector<Dir> splice_dirs(const std::vector<Dir>& d1, int slot, const std::vector<Dir>& d2,
                                    int rot) {
	int n1 = (int)d1.size(), n2 = (int)d2.size();
	std::vector<Dir> out(n1 + n2);
	for (int p = 0; p < n1; ++p) out[p < slot ? p : p + n2] = d1[p];
	for (int p = 0; p < n2; ++p) out[slot + ((p - rot + n2) % n2)] = d2[p];
	return out;
}

// double complex total: objects are pairwise splices, differentials d_A x id
// and (-1)^{deg_A} id x d_B
inline FormalComplex tensor_complexes(const FormalComplex& A, const FormalComplex& B, int slot,
                                      int rot) {
	FormalComplex C;
	C.boundary = splice_dirs(A.boundary, slot, B.boundary, rot);
	C.min_deg = A.min_deg + B.min_deg;
	int lev = A.levels() + B.levels() - 1;
	C.objs.resize(lev);
	C.diffs.resize(lev > 0 ? lev - 1 : 0);

	// index of the pair (ka, ia, kb, ib) inside its total degree
	std::map<std::tuple<int, int, int, int>, int> at;
	for (int k = 0; k < lev; ++k) {
		for (int ka = 0; ka < A.levels(); ++ka) {
			int kb = k - ka;
			if (kb < 0 || kb >= B.levels()) continue;
			for (int ia = 0; ia < (int)A.objs[ka].size(); ++ia)
				for (int ib = 0; ib < (int)B.objs[kb].size(); ++ib) {
					at[{ka, ia, kb, ib}] = (int)C.objs[k].size();
					C.objs[k].push_back(
					    {splice(A.objs[ka][ia].web, slot, B.objs[kb][ib].web, rot),
					     A.objs[ka][ia].qshift + B.objs[kb][ib].qshift});
				}
		}
	}
	// d_A x id_B
	for (int ka = 0; ka + 1 < A.levels(); ++ka)
		for (auto& [rc, f] : A.diffs[ka]) {
			auto [ra, ca] = rc;
			for (int kb = 0; kb < B.levels(); ++kb)
				for (int ib = 0; ib < (int)B.objs[kb].size(); ++ib) {
					int k = ka + kb;
					int src = at.at({ka, ca, kb, ib}), dst = at.at({ka + 1, ra, kb, ib});
					C.set_entry(k, dst, src, tensor(f, identity_with_tubes(B.objs[kb][ib].web), slot, rot));
				}
		}
	// (-1)^{deg_A} id_A x d_B
	for (int kb = 0; kb + 1 < B.levels(); ++kb)
		for (auto& [rc, f] : B.diffs[kb]) {
			auto [rb, cb] = rc;
			for (int ka = 0; ka < A.levels(); ++ka) {
				int sign = (A.min_deg + ka) % 2 ? -1 : 1;
				for (int ia = 0; ia < (int)A.objs[ka].size(); ++ia) {
					int k = ka + kb;
					int src = at.at({ka, ia, kb, cb}), dst = at.at({ka, ia, kb + 1, rb});
					MorphismSum t = tensor(identity_with_tubes(A.objs[ka][ia].web), f, slot, rot);
					C.set_entry(k, dst, src, sign > 0 ? std::move(t) : negate(t));
				}
			}
		}
	return C;
}

inline FormalComplex zip_complex(const FormalComplex& C, int p) {
	FormalComplex R;
	int n = (int)C.boundary.size();
	R.min_deg = C.min_deg;
	R.boundary.clear();
	for (int k = 0; k < n; ++k)
		if (k != p && k != (p + 1) % n) R.boundary.push_back(C.boundary[k]);
	R.objs.resize(C.levels());
	R.diffs.resize(C.diffs.size());
	for (int k = 0; k < C.levels(); ++k)
		for (auto& o : C.objs[k]) R.objs[k].push_back({zip(o.web, p).m, o.qshift});
	for (int k = 0; k < (int)C.diffs.size(); ++k)
		for (auto& [rc, f] : C.diffs[k]) R.diffs[k][rc] = zip_morphism(f, p);
	return R;
}

// glue along contiguous boundary runs (seg1 of A's boundary against seg2 of
// B's reversed); the loops this creates are delooped afterwards by simplify
inline FormalComplex glue_complexes(const FormalComplex& A, std::vector<int> seg1,
                                    const FormalComplex& B, std::vector<int> seg2) {
	if (seg1.size() != seg2.size()) throw std::invalid_argument("glue_complexes: size mismatch");
	int L = (int)seg1.size(), n1 = (int)A.boundary.size(), n2 = (int)B.boundary.size();
	int slot = L ? (seg1[L - 1] + 1) % n1 : (int)A.boundary.size();
	if (L && slot == 0) slot = n1;
	int rot = L ? seg2[0] : 0;
	FormalComplex C = tensor_complexes(A, B, slot, rot);
	std::vector<int> pos1(n1);
	for (int p = 0; p < n1; ++p) pos1[p] = p < slot ? p : p + n2;
	for (int t = L - 1; t >= 0; --t) {
		int p = pos1[seg1[t]];
		int n = (int)C.boundary.size();
		C = zip_complex(C, p);
		// positions after removing p, p+1
		int q = (p + 1) % n;
		for (auto& x : pos1) {
			if (x == p || x == q) { x = -1; continue; }
			int shift = (x > p ? 1 : 0) + (x > q ? 1 : 0);
			if (x >= 0) x -= shift;
		}
	}
	return C;
}

// ---------------------------------------------------------------------------
// delooping
// ---------------------------------------------------------------------------

// replace the first object containing a loop by its two degree-shifted
// copies, conjugating neighbouring differentials with the delooping maps
inline bool deloop_once(FormalComplex& C, SimplifyStats* stats = nullptr) {
	const RingElem h = RingElem::var_h(), iu = RingElem::unit_i();
	for (int k = 0; k < C.levels(); ++k) {
		for (int idx = 0; idx < (int)C.objs[k].size(); ++idx) {
			const Matching& w = C.objs[k][idx].web;
			if (w.loops.empty()) continue;
			int L = (int)w.loops.size() - 1;
			LoopKind kind = w.loops[L];
			int qs = C.objs[k][idx].qshift;

			MorphismSum cap0 = cap_on_loop(w, L, 0), cap1 = cap_on_loop(w, L, 1);
			MorphismSum cup0 = cup_on_loop(w, L, 0), cup1 = cup_on_loop(w, L, 1);
			MorphismSum alpha_plus, alpha_minus, beta_plus, beta_minus;
			if (kind == LoopKind::oriented) {
				alpha_plus = cap0;
				alpha_minus = cap1;
				beta_plus = add(cup1, scale(-h, cup0));
				beta_minus = cup0;
			} else {
				// two-vertex flavor: the -i/hi twisted maps
				alpha_plus = scale(iu, cap0);
				alpha_minus = scale(iu, cap1);
				beta_plus = add(scale(-iu, cup1), scale(h * iu, cup0));
				beta_minus = scale(-iu, cup0);
			}

			Matching w2 = without_loop(w, L);
			// rebuild the object list at level k with two objects at idx
			auto& list = C.objs[k];
			list[idx] = {w2, qs + 1};
			list.insert(list.begin() + idx + 1, {w2, qs - 1});
			auto bump = [&](int j) { return j > idx ? j + 1 : j; };

			auto put = [](std::map<std::pair<int, int>, MorphismSum>& m, int r, int c,
			              MorphismSum f) {
				if (f.is_zero() || (f.terms.size() > 1 && zero_mod_relations(f))) return;
				m[{r, c}] = std::move(f);
			};
			if (k > 0) {
				std::map<std::pair<int, int>, MorphismSum> next;
				for (auto& [rc, f] : C.diffs[k - 1]) {
					auto [r, c] = rc;
					if (r == idx) {
						put(next, idx, c, compose(alpha_plus, f));
						put(next, idx + 1, c, compose(alpha_minus, f));
					} else {
						next[{bump(r), c}] = std::move(f);
					}
				}
				C.diffs[k - 1] = std::move(next);
			}
			if (k + 1 < C.levels()) {
				std::map<std::pair<int, int>, MorphismSum> next;
				for (auto& [rc, f] : C.diffs[k]) {
					auto [r, c] = rc;
					if (c == idx) {
						put(next, r, idx, compose(f, beta_plus));
						put(next, r, idx + 1, compose(f, beta_minus));
					} else {
						next[{r, bump(c)}] = std::move(f);
					}
				}
				C.diffs[k] = std::move(next);
			}
			if (stats) stats->deloops++;
			return true;
		}
	}
	return false;
}

inline void deloop(FormalComplex& C, SimplifyStats* stats = nullptr) {
	while (deloop_once(C, stats)) {
	}
}

// ---------------------------------------------------------------------------
// Gaussian elimination
// ---------------------------------------------------------------------------

namespace detail {

// drop object `pos` from level k of the complex, shifting indices
inline void drop_object(FormalComplex& C, int k, int pos) {
	C.objs[k].erase(C.objs[k].begin() + pos);
	auto shift = [&](std::map<std::pair<int, int>, MorphismSum>& m, bool rows) {
		std::map<std::pair<int, int>, MorphismSum> next;
		for (auto& [rc, f] : m) {
			auto [r, c] = rc;
			int& x = rows ? r : c;
			if (x == pos) continue;
			if (x > pos) x--;
			next[{r, c}] = std::move(f);
		}
		m = std::move(next);
	};
	if (k > 0) shift(C.diffs[k - 1], true);
	if (k < (int)C.diffs.size()) shift(C.diffs[k], false);
}

inline void trim_empty_levels(FormalComplex& C) {
	while (C.levels() > 1 && C.objs.front().empty()) {
		C.objs.erase(C.objs.begin());
		if (!C.diffs.empty()) C.diffs.erase(C.diffs.begin());
		C.min_deg++;
	}
	while (C.levels() > 1 && C.objs.back().empty()) {
		C.objs.pop_back();
		if (!C.diffs.empty()) C.diffs.pop_back();
	}
}

}  // namespace detail

// cancel the contractible pair around an invertible entry phi = d[k](row,col);
// remaining differential becomes epsilon - gamma phi^{-1} delta
inline void gaussian_eliminate(FormalComplex& C, int k, int row, int col,
                               SimplifyStats* stats = nullptr) {
	const MorphismSum* phi = C.entry(k, row, col);
	if (!phi) throw std::invalid_argument("gaussian_eliminate: zero entry");
	auto u = as_unit_identity(*phi);
	if (!u) throw std::invalid_argument("gaussian_eliminate: entry is not a unit times identity");
	RingElem uinv = unit_inverse(*u);

	std::vector<std::pair<int, MorphismSum>> gammas, deltas;
	for (auto& [rc, f] : C.diffs[k]) {
		auto [r, c] = rc;
		if (c == col && r != row) gammas.push_back({r, f});
		if (r == row && c != col) deltas.push_back({c, f});
	}
	for (auto& [i, gamma] : gammas)
		for (auto& [j, delta] : deltas) {
			MorphismSum corr = scale(uinv, compose(gamma, delta));
			const MorphismSum* eps = C.entry(k, i, j);
			MorphismSum fresh = eps ? add(*eps, negate(corr)) : negate(corr);
			C.set_entry(k, i, j, std::move(fresh));
		}
	detail::drop_object(C, k + 1, row);
	detail::drop_object(C, k, col);
	detail::trim_empty_levels(C);
	if (stats) stats->eliminations++;
}

// deterministic scan: lowest homological degree first, then row-major
inline bool eliminate_once(FormalComplex& C, SimplifyStats* stats = nullptr) {
	for (int k = 0; k + 1 < C.levels(); ++k) {
		for (auto& [rc, f] : C.diffs[k]) {
			if (as_unit_identity(f)) {
				gaussian_eliminate(C, k, rc.first, rc.second, stats);
				return true;
			}
		}
	}
	return false;
}

// ---------------------------------------------------------------------------
// structural checks
// ---------------------------------------------------------------------------

struct D2Report {
	bool structural = true;  // entries cancel as canonical sums
	bool semantic = true;    // entries vanish modulo the foam relations
	int structural_failures = 0;
};

inline D2Report check_d2(const FormalComplex& C) {
	D2Report rep;
	for (int k = 0; k + 1 < (int)C.diffs.size(); ++k) {
		std::map<std::pair<int, int>, MorphismSum> prod;
		for (auto& [rc1, f] : C.diffs[k]) {
			auto [mid, src] = rc1;
			for (auto& [rc2, g] : C.diffs[k + 1]) {
				auto [dst, mid2] = rc2;
				if (mid2 != mid) continue;
				MorphismSum comp = compose(g, f);
				auto it = prod.find({dst, src});
				if (it == prod.end())
					prod[{dst, src}] = std::move(comp);
				else
					it->second = add(it->second, comp);
			}
		}
		for (auto& [rc, f] : prod) {
			if (f.is_zero()) continue;
			rep.structural = false;
			rep.structural_failures++;
			if (!zero_mod_relations(f)) rep.semantic = false;
		}
	}
	return rep;
}

// every nonzero entry must be q-degree 0 and match its endpoint objects
inline bool check_degrees(const FormalComplex& C) {
	for (int k = 0; k + 1 < C.levels(); ++k)
		for (auto& [rc, f] : C.diffs[k]) {
			auto [r, c] = rc;
			if (!(f.src == C.objs[k][c].web) || !(f.tgt == C.objs[k + 1][r].web)) return false;
			auto d = deg(f);
			if (!d) return false;
			if (!f.is_zero() && *d + C.objs[k][c].qshift - C.objs[k + 1][r].qshift != 0) return false;
		}
	return true;
}

// debug_checks: 0 none, 1 after each full pass, 2 after every step.
// d^2 = 0 is checked in the quotient category: entry sums that cancel only
// through the surgery/neck-cutting relations are legitimate intermediate
// states (the cut form decides). Structural failures are reported only as a
// counter in check_d2 for diagnostics.
inline void run_debug_checks(const FormalComplex& C, int level, const char* where) {
	if (level <= 0) return;
	if (!check_degrees(C))
		throw std::logic_error(std::string("degree check failed after ") + where);
	D2Report rep = check_d2(C);
	if (!rep.semantic)
		throw std::logic_error(std::string("d^2 != 0 after ") + where);
}

// ---------------------------------------------------------------------------
// the simplify loop
// ---------------------------------------------------------------------------

inline void simplify(FormalComplex& C, SimplifyStats* stats = nullptr, int debug_checks = 0) {
	for (;;) {
		bool any = false;
		while (deloop_once(C, stats)) {
			any = true;
			if (debug_checks >= 2) run_debug_checks(C, debug_checks, "deloop");
		}
		while (eliminate_once(C, stats)) {
			any = true;
			if (debug_checks >= 2) run_debug_checks(C, debug_checks, "elimination");
		}
		if (!any) break;
	}
	if (debug_checks >= 1) run_debug_checks(C, debug_checks, "simplify");
}

// ---------------------------------------------------------------------------
// incremental assembly
// ---------------------------------------------------------------------------

namespace detail {

struct Insertion {
	int slot = 0, rot = 0;
	std::vector<int> zip_positions;  // applied in order to the spliced cycle
};

using LabelCycle = std::vector<std::pair<int, Dir>>;

// greedy zipping of adjacent equal-label (opposite-tag) pairs; success iff
// no duplicate labels remain
inline std::optional<std::vector<int>> try_zip_all(LabelCycle cyc) {
	std::vector<int> zips;
	bool progress = true;
	while (progress) {
		progress = false;
		int n = (int)cyc.size();
		for (int p = 0; p < n; ++p) {
			int q = (p + 1) % n;
			if (p == q) break;
			if (cyc[p].first == cyc[q].first) {
				if (cyc[p].second == cyc[q].second)
					throw std::logic_error("assembler: equal tags on matching edge labels");
				zips.push_back(p);
				if (q > p) {
					cyc.erase(cyc.begin() + q);
					cyc.erase(cyc.begin() + p);
				} else {  // wrapped pair
					cyc.erase(cyc.begin() + p);
					cyc.erase(cyc.begin() + q);
				}
				progress = true;
				break;
			}
		}
	}
	std::map<int, int> count;
	for (auto& [lab, d] : cyc) count[lab]++;
	for (auto& [lab, n] : count)
		if (n > 1) return std::nullopt;
	return zips;
}

inline std::optional<Insertion> find_insertion(const LabelCycle& state, const LabelCycle& cxl) {
	int n = (int)state.size();
	for (int slot = 0; slot <= n; ++slot) {
		for (int rot = 0; rot < (int)cxl.size(); ++rot) {
			LabelCycle combined;
			combined.reserve(state.size() + cxl.size());
			for (int p = 0; p < slot; ++p) combined.push_back(state[p]);
			for (int p = 0; p < (int)cxl.size(); ++p)
				combined.push_back(cxl[(rot + p) % cxl.size()]);
			for (int p = slot; p < n; ++p) combined.push_back(state[p]);
			auto zips = try_zip_all(combined);
			if (zips) return Insertion{slot, rot, *zips};
		}
		if (n == 0) break;
	}
	return std::nullopt;
}

}  // namespace detail

struct AssembleResult {
	FormalComplex complex;
	SimplifyStats stats;
	// which diagram edge sits at each boundary position (open tangles)
	std::vector<std::pair<int, Dir>> boundary_labels;
};

inline AssembleResult assemble(const PDCode& pd, const std::vector<int>& order,
                               int debug_checks = 0, bool do_simplify = true) {
	if ((int)order.size() != (int)pd.crossings.size())
		throw std::invalid_argument("assemble: order must list every crossing once");
	AssembleResult res;
	FormalComplex& K = res.complex;
	K = empty_complex();
	detail::LabelCycle labels;

	for (int step = 0; step < (int)order.size(); ++step) {
		auto t0 = std::chrono::steady_clock::now();
		long d0 = res.stats.deloops, e0 = res.stats.eliminations;
		const Crossing& cx = pd.crossings[order[step]];
		detail::LabelCycle cxl;
		for (int p = 0; p < 4; ++p) cxl.push_back({cx.edges[p], cx.dirs[p]});
		auto ins = detail::find_insertion(labels, cxl);
		if (!ins)
			throw std::runtime_error("assemble: no planar insertion for crossing " +
			                         std::to_string(order[step]) +
			                         " under this order; try a different --order");
		FormalComplex cc = crossing_complex(cx);
		K = tensor_complexes(K, cc, ins->slot, ins->rot);
		{  // keep the label cycle in step with the complex boundary
			detail::LabelCycle combined;
			for (int p = 0; p < ins->slot; ++p) combined.push_back(labels[p]);
			for (int p = 0; p < 4; ++p) combined.push_back(cxl[(ins->rot + p) % 4]);
			for (int p = ins->slot; p < (int)labels.size(); ++p) combined.push_back(labels[p]);
			labels = std::move(combined);
		}
		for (int p : ins->zip_positions) {
			K = zip_complex(K, p);
			int n = (int)labels.size();
			int q = (p + 1) % n;
			detail::LabelCycle next;
			for (int x = 0; x < n; ++x)
				if (x != p && x != q) next.push_back(labels[x]);
			labels = std::move(next);
			if (debug_checks >= 2) run_debug_checks(K, debug_checks, "zip");
		}
		if (do_simplify) simplify(K, &res.stats, debug_checks);
		res.stats.observe(K);

		auto t1 = std::chrono::steady_clock::now();
		res.stats.timeline.push_back(
		    {order[step], K.total_objects(),
		     std::chrono::duration<double, std::milli>(t1 - t0).count(),
		     res.stats.deloops - d0, res.stats.eliminations - e0});
	}
	for (int l = 0; l < pd.free_loops; ++l) {
		K = tensor_complexes(K, single_object_complex(Matching::loop(LoopKind::oriented)), 0, 0);
		if (do_simplify)
			simplify(K, &res.stats, debug_checks);
		res.stats.observe(K);
	}
	if (debug_checks >= 1) run_debug_checks(K, debug_checks, "assemble");
	res.boundary_labels = std::move(labels);
	return res;
}

inline AssembleResult assemble(const PDCode& pd, int debug_checks = 0) {
	return assemble(pd, ordering_heuristic(pd), debug_checks);
}

// the unsimplified baseline: every crossing glued in, loops removed, nothing
// cancelled
inline AssembleResult naive_cube(const PDCode& pd, int crossing_cap = 12, int debug_checks = 0) {
	if ((int)pd.crossings.size() > crossing_cap)
		throw std::invalid_argument("naive_cube: crossing count exceeds cap");
	AssembleResult res = assemble(pd, ordering_heuristic(pd), 0, false);
	deloop(res.complex, &res.stats);
	res.stats.observe(res.complex);
	if (debug_checks >= 1) run_debug_checks(res.complex, debug_checks, "naive_cube");
	return res;
}

// ---------------------------------------------------------------------------
// graded Euler characteristic
// ---------------------------------------------------------------------------

inline LaurentPoly graded_euler(const FormalComplex& C) {
	LaurentPoly total;
	for (int k = 0; k < C.levels(); ++k) {
		int sign = C.degree_of(k) % 2 ? -1 : 1;
		for (auto& o : C.objs[k]) {
			LaurentPoly t = LaurentPoly(sign, o.qshift) * LaurentPoly::q_plus_qinv().pow((int)o.web.loops.size());
			total += t;
		}
	}
	return total;
}

}  // namespace foamcalc

#endif
