#ifndef FOAMCALC_COBORDISM_HPP
#define FOAMCALC_COBORDISM_HPP

#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "foamcalc/frobenius.hpp"
#include "foamcalc/tangle.hpp"

// Canonical dotted cobordisms between matchings. A morphism is a formal
// R-linear combination of surfaces, each stored as a partition of the
// boundary curves into connected genus-zero components carrying at most one
// dot. Composition stacks surfaces, recomputes connectivity and Euler
// characteristic, folds genus and excess dots into coefficients through the
// handle element (2X-h)^g X^d, and evaluates closed pieces to scalars.
// Seam data is never stored; the unit scalars of the vertex-removal
// isomorphisms are absorbed into coefficients (module foamrel certifies the
// identities this relies on).

namespace foamcalc {

struct CurveRef {
	enum Side : uint8_t { side_src = 0, side_tgt = 1 };
	enum Kind : uint8_t { kind_arc = 0, kind_loop = 1 };
	uint8_t side, kind;
	int id;  // arcs: smaller boundary position of the pair; loops: index

	auto operator<=>(const CurveRef&) const = default;
};

struct Component {
	std::vector<CurveRef> curves;  // sorted
	int dots = 0;

	auto operator<=>(const Component&) const = default;
};

struct CobTerm {
	std::vector<Component> components;  // sorted by leading curve
	RingElem coeff;

	bool operator==(const CobTerm&) const = default;
};

struct MorphismSum {
	Matching src, tgt;
	std::vector<CobTerm> terms;

	bool is_zero() const { return terms.empty(); }
};

// ---------------------------------------------------------------------------
// curve enumeration and boundary-circle counting
// ---------------------------------------------------------------------------

inline std::vector<CurveRef> curves_of(const Matching& m, CurveRef::Side side) {
	std::vector<CurveRef> out;
	for (int p = 0; p < m.points(); ++p)
		if (p < m.pair_of[p]) out.push_back({side, CurveRef::kind_arc, p});
	for (int l = 0; l < (int)m.loops.size(); ++l) out.push_back({side, CurveRef::kind_loop, l});
	return out;
}

// boundary circles of a surface piece attached to the given curves: loops
// count one each; arcs chain through the vertical boundary lines, one circle
// per cycle of the alternating source/target pairing
inline int boundary_circles(const std::vector<CurveRef>& curves, const Matching& src,
                            const Matching& tgt) {
	int circles = 0;
	std::set<int> pts_src, pts_tgt;
	for (auto& c : curves) {
		if (c.kind == CurveRef::kind_loop) {
			circles++;
			continue;
		}
		const Matching& m = c.side == CurveRef::side_src ? src : tgt;
		auto& pts = c.side == CurveRef::side_src ? pts_src : pts_tgt;
		pts.insert(c.id);
		pts.insert(m.pair_of[c.id]);
	}
	if (pts_src != pts_tgt)
		throw std::logic_error("component does not cover matching boundary points consistently");
	std::set<int> seen;
	for (int start : pts_src) {
		if (seen.count(start)) continue;
		int x = start;
		do {
			seen.insert(x);
			int y = src.pair_of[x];
			seen.insert(y);
			x = tgt.pair_of[y];
		} while (x != start);
		circles++;
	}
	return circles;
}

// ---------------------------------------------------------------------------
// canonical form
// ---------------------------------------------------------------------------

namespace detail {

inline void sort_component(Component& c) { std::sort(c.curves.begin(), c.curves.end()); }

inline void sort_term(CobTerm& t) {
	for (auto& c : t.components) sort_component(c);
	std::sort(t.components.begin(), t.components.end());
}

struct RawComponent {
	std::vector<CurveRef> curves;
	int dots = 0, genus = 0;
	RingElem closed_value;  // set when curves is empty
};

}  // namespace detail

// expands genus and excess dots through handle_power, evaluates closed
// pieces, merges structurally equal terms
inline void canonicalize(MorphismSum& f) {
	for (auto& t : f.terms) detail::sort_term(t);
	std::sort(f.terms.begin(), f.terms.end(),
	          [](const CobTerm& x, const CobTerm& y) { return x.components < y.components; });
	std::vector<CobTerm> out;
	for (auto& t : f.terms) {
		if (t.coeff.is_zero()) continue;
		if (!out.empty() && out.back().components == t.components)
			out.back().coeff = out.back().coeff + t.coeff;
		else
			out.push_back(t);
		if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
	}
	f.terms = std::move(out);
}

// raw components (arbitrary genus/dots) -> canonical terms appended to f
inline void emit_normalized(MorphismSum& f, std::vector<detail::RawComponent> raw, RingElem coeff) {
	std::vector<CobTerm> pending{{{}, std::move(coeff)}};
	for (auto& rc : raw) {
		if (rc.curves.empty()) {
			RingElem v = evaluate_closed_surface(rc.genus, rc.dots);
			for (auto& t : pending) t.coeff = t.coeff * v;
			continue;
		}
		if (rc.genus == 0 && rc.dots <= 1) {
			for (auto& t : pending) t.components.push_back({rc.curves, rc.dots});
			continue;
		}
		AlgebraElement v = handle_power(rc.genus, rc.dots);
		std::vector<CobTerm> next;
		for (auto& t : pending) {
			if (!v.c1.is_zero()) {
				CobTerm t1 = t;
				t1.components.push_back({rc.curves, 0});
				t1.coeff = t1.coeff * v.c1;
				next.push_back(std::move(t1));
			}
			if (!v.cX.is_zero()) {
				CobTerm t2 = t;
				t2.components.push_back({rc.curves, 1});
				t2.coeff = t2.coeff * v.cX;
				next.push_back(std::move(t2));
			}
		}
		pending = std::move(next);
	}
	for (auto& t : pending)
		if (!t.coeff.is_zero()) f.terms.push_back(std::move(t));
}

// ---------------------------------------------------------------------------
// constructors
// ---------------------------------------------------------------------------

inline MorphismSum morphism_zero(Matching src, Matching tgt) {
	return {std::move(src), std::move(tgt), {}};
}

// identity on a loop-free matching: one curtain per arc
inline MorphismSum identity(const Matching& m) {
	if (!m.loops.empty()) throw std::invalid_argument("identity: matching has loops");
	MorphismSum f;
	f.src = f.tgt = m;
	CobTerm t;
	t.coeff = RingElem::one();
	for (int p = 0; p < m.points(); ++p)
		if (p < m.pair_of[p])
			t.components.push_back(
			    {{{CurveRef::side_src, CurveRef::kind_arc, p}, {CurveRef::side_tgt, CurveRef::kind_arc, p}},
			     0});
	f.terms.push_back(std::move(t));
	canonicalize(f);
	return f;
}

// identity including tubes over loops (internal; delooping plumbing)
inline MorphismSum identity_with_tubes(const Matching& m) {
	MorphismSum f;
	f.src = f.tgt = m;
	CobTerm t;
	t.coeff = RingElem::one();
	for (int p = 0; p < m.points(); ++p)
		if (p < m.pair_of[p])
			t.components.push_back(
			    {{{CurveRef::side_src, CurveRef::kind_arc, p}, {CurveRef::side_tgt, CurveRef::kind_arc, p}},
			     0});
	for (int l = 0; l < (int)m.loops.size(); ++l)
		t.components.push_back(
		    {{{CurveRef::side_src, CurveRef::kind_loop, l}, {CurveRef::side_tgt, CurveRef::kind_loop, l}}, 0});
	f.terms.push_back(std::move(t));
	canonicalize(f);
	return f;
}

inline Matching without_loop(const Matching& m, int loop_id) {
	Matching r = m;
	r.loops.erase(r.loops.begin() + loop_id);
	return r;
}

// death of one loop (disk capping it off, optionally dotted); all other
// curves carried by curtains and tubes
inline MorphismSum cap_on_loop(const Matching& m, int loop_id, int dots) {
	MorphismSum f;
	f.src = m;
	f.tgt = without_loop(m, loop_id);
	CobTerm t;
	t.coeff = RingElem::one();
	for (int p = 0; p < m.points(); ++p)
		if (p < m.pair_of[p])
			t.components.push_back(
			    {{{CurveRef::side_src, CurveRef::kind_arc, p}, {CurveRef::side_tgt, CurveRef::kind_arc, p}},
			     0});
	for (int l = 0; l < (int)m.loops.size(); ++l) {
		if (l == loop_id) {
			t.components.push_back({{{CurveRef::side_src, CurveRef::kind_loop, l}}, dots});
		} else {
			int l2 = l < loop_id ? l : l - 1;
			t.components.push_back(
			    {{{CurveRef::side_src, CurveRef::kind_loop, l}, {CurveRef::side_tgt, CurveRef::kind_loop, l2}},
			     0});
		}
	}
	f.terms.push_back(std::move(t));
	canonicalize(f);
	return f;
}

// birth of one loop (upside-down cap)
inline MorphismSum cup_on_loop(const Matching& m, int loop_id, int dots) {
	MorphismSum f;
	f.src = without_loop(m, loop_id);
	f.tgt = m;
	CobTerm t;
	t.coeff = RingElem::one();
	for (int p = 0; p < m.points(); ++p)
		if (p < m.pair_of[p])
			t.components.push_back(
			    {{{CurveRef::side_src, CurveRef::kind_arc, p}, {CurveRef::side_tgt, CurveRef::kind_arc, p}},
			     0});
	for (int l = 0; l < (int)m.loops.size(); ++l) {
		if (l == loop_id) {
			t.components.push_back({{{CurveRef::side_tgt, CurveRef::kind_loop, l}}, dots});
		} else {
			int l2 = l < loop_id ? l : l - 1;
			t.components.push_back(
			    {{{CurveRef::side_src, CurveRef::kind_loop, l2}, {CurveRef::side_tgt, CurveRef::kind_loop, l}},
			     0});
		}
	}
	f.terms.push_back(std::move(t));
	canonicalize(f);
	return f;
}

// the saddle of one crossing: a single disk joining all four local arcs,
// every spectator curve a curtain; src and tgt must be matchings of the same
// boundary differing exactly on the four points involved
inline MorphismSum saddle(const Matching& src, const Matching& tgt) {
	if (src.dirs != tgt.dirs || src.loops != tgt.loops)
		throw std::invalid_argument("saddle: incompatible matchings");
	MorphismSum f;
	f.src = src;
	f.tgt = tgt;
	CobTerm t;
	t.coeff = RingElem::one();
	Component middle;
	for (int p = 0; p < src.points(); ++p) {
		if (p < src.pair_of[p] && src.pair_of[p] == tgt.pair_of[p])
			t.components.push_back(
			    {{{CurveRef::side_src, CurveRef::kind_arc, p}, {CurveRef::side_tgt, CurveRef::kind_arc, p}},
			     0});
		else if (src.pair_of[p] != tgt.pair_of[p]) {
			if (p < src.pair_of[p]) middle.curves.push_back({CurveRef::side_src, CurveRef::kind_arc, p});
			if (p < tgt.pair_of[p]) middle.curves.push_back({CurveRef::side_tgt, CurveRef::kind_arc, p});
		}
	}
	for (int l = 0; l < (int)src.loops.size(); ++l)
		t.components.push_back(
		    {{{CurveRef::side_src, CurveRef::kind_loop, l}, {CurveRef::side_tgt, CurveRef::kind_loop, l}}, 0});
	t.components.push_back(std::move(middle));
	f.terms.push_back(std::move(t));
	canonicalize(f);
	return f;
}

// ---------------------------------------------------------------------------
// linear structure
// ---------------------------------------------------------------------------

inline MorphismSum add(const MorphismSum& f, const MorphismSum& g) {
	if (!(f.src == g.src) || !(f.tgt == g.tgt))
		throw std::invalid_argument("add: source/target mismatch");
	MorphismSum r = f;
	r.terms.insert(r.terms.end(), g.terms.begin(), g.terms.end());
	canonicalize(r);
	return r;
}

inline MorphismSum scale(const RingElem& c, const MorphismSum& f) {
	MorphismSum r = f;
	for (auto& t : r.terms) t.coeff = t.coeff * c;
	canonicalize(r);
	return r;
}

inline MorphismSum negate(const MorphismSum& f) { return scale(RingElem(-1), f); }

inline bool equal(const MorphismSum& f, const MorphismSum& g) {
	MorphismSum d = add(f, negate(g));
	return d.is_zero();
}

// ---------------------------------------------------------------------------
// composition
// ---------------------------------------------------------------------------

namespace detail {

struct UnionFind {
	std::vector<int> parent;
	explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
	int find(int x) {
		while (parent[x] != x) x = parent[x] = parent[parent[x]];
		return x;
	}
	void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace detail

// g after f
inline MorphismSum compose(const MorphismSum& g, const MorphismSum& f) {
	if (!(f.tgt == g.src)) throw std::invalid_argument("compose: boundary mismatch");
	MorphismSum r;
	r.src = f.src;
	r.tgt = g.tgt;
	const Matching& mid = f.tgt;

	for (auto& tf : f.terms) {
		for (auto& tg : g.terms) {
			int nf = (int)tf.components.size(), ng = (int)tg.components.size();
			detail::UnionFind uf(nf + ng);
			// locate, for every middle curve, its component on each side
			std::map<CurveRef, int> in_f, in_g;
			for (int k = 0; k < nf; ++k)
				for (auto& c : tf.components[k].curves)
					if (c.side == CurveRef::side_tgt) in_f[c] = k;
			for (int k = 0; k < ng; ++k)
				for (auto& c : tg.components[k].curves)
					if (c.side == CurveRef::side_src) in_g[c] = k;
			for (auto& c : curves_of(mid, CurveRef::side_tgt)) {
				CurveRef cs{CurveRef::side_src, c.kind, c.id};
				auto itf = in_f.find(c);
				auto itg = in_g.find(cs);
				if (itf == in_f.end() || itg == in_g.end())
					throw std::logic_error("compose: middle curve not covered");
				uf.unite(itf->second, nf + itg->second);
			}

			// assemble clusters
			std::map<int, detail::RawComponent> clusters;
			std::map<int, int> chi;
			for (int k = 0; k < nf + ng; ++k) {
				const Component& piece = k < nf ? tf.components[k] : tg.components[k - nf];
				const Matching& ms = k < nf ? f.src : g.src;
				const Matching& mt = k < nf ? f.tgt : g.tgt;
				int root = uf.find(k);
				auto& cl = clusters[root];
				chi[root] += 2 - boundary_circles(piece.curves, ms, mt);  // stored pieces have genus 0
				cl.dots += piece.dots;
				for (auto& c : piece.curves) {
					bool outer = (k < nf && c.side == CurveRef::side_src) ||
					             (k >= nf && c.side == CurveRef::side_tgt);
					if (outer) cl.curves.push_back(c);
				}
			}
			// gluing along each middle curve: chi -= 1 per arc, 0 per loop
			for (auto& c : curves_of(mid, CurveRef::side_tgt)) {
				if (c.kind == CurveRef::kind_arc) chi[uf.find(in_f[c])] -= 1;
			}

			std::vector<detail::RawComponent> raw;
			for (auto& [root, cl] : clusters) {
				detail::RawComponent rc = cl;
				int b = rc.curves.empty() ? 0 : boundary_circles(rc.curves, f.src, g.tgt);
				int twice_genus = 2 - b - chi[root];
				if (twice_genus < 0 || twice_genus % 2)
					throw std::logic_error("compose: inconsistent Euler characteristic");
				rc.genus = twice_genus / 2;
				raw.push_back(std::move(rc));
			}
			emit_normalized(r, std::move(raw), tf.coeff * tg.coeff);
		}
	}
	canonicalize(r);
	return r;
}

// ---------------------------------------------------------------------------
// degree
// ---------------------------------------------------------------------------

// chi - (boundary points)/2 - 2*dots + deg_q(coeff), equal across terms
inline std::optional<int> term_degree(const CobTerm& t, const Matching& src, const Matching& tgt) {
	int chi = 0, dots = 0;
	for (auto& c : t.components) {
		chi += 2 - boundary_circles(c.curves, src, tgt);
		dots += c.dots;
	}
	auto dq = t.coeff.q_degree();
	if (!dq) return std::nullopt;
	return chi - src.points() / 2 - 2 * dots + *dq;
}

inline std::optional<int> deg(const MorphismSum& f) {
	std::optional<int> d;
	for (auto& t : f.terms) {
		auto td = term_degree(t, f.src, f.tgt);
		if (!td) return std::nullopt;
		if (d && *d != *td) return std::nullopt;
		d = td;
	}
	return d ? d : std::optional<int>(0);
}

inline RingElem evaluate_closed(int genus, int dots) { return evaluate_closed_surface(genus, dots); }

// scalar value of an endomorphism of the empty matching
inline RingElem closed_value(const MorphismSum& f) {
	if (f.src.points() != 0 || !f.src.loops.empty() || f.tgt.points() != 0 || !f.tgt.loops.empty())
		throw std::invalid_argument("closed_value: boundary not empty");
	RingElem v;
	for (auto& t : f.terms) v = v + t.coeff;
	return v;
}

// unit * identity detection for Gaussian elimination
inline std::optional<RingElem> as_unit_identity(const MorphismSum& f) {
	if (!(f.src == f.tgt) || !f.src.loops.empty()) return std::nullopt;
	if (f.terms.size() != 1) return std::nullopt;
	const CobTerm& t = f.terms[0];
	if (!is_unit(t.coeff)) return std::nullopt;
	int arcs = f.src.arcs();
	if ((int)t.components.size() != arcs) return std::nullopt;
	for (auto& c : t.components) {
		if (c.dots != 0 || c.curves.size() != 2) return std::nullopt;
		if (c.curves[0].kind != CurveRef::kind_arc || c.curves[1].kind != CurveRef::kind_arc)
			return std::nullopt;
		if (c.curves[0].id != c.curves[1].id) return std::nullopt;
	}
	return t.coeff;
}

// ---------------------------------------------------------------------------
// side-by-side tensor and boundary zipping
// ---------------------------------------------------------------------------

// places g to the side of f: boundaries spliced with g's cycle starting at
// rot inserted at slot of f's cycle
inline MorphismSum tensor(const MorphismSum& f, const MorphismSum& g, int slot, int rot) {
	PointMap map1, map2;
	Matching src = splice(f.src, slot, g.src, rot, &map1, &map2);
	Matching tgt = splice(f.tgt, slot, g.tgt, rot);
	MorphismSum r;
	r.src = std::move(src);
	r.tgt = std::move(tgt);
	int src_loop_shift = (int)f.src.loops.size(), tgt_loop_shift = (int)f.tgt.loops.size();
	auto remap_f = [&](CurveRef c) {
		if (c.kind == CurveRef::kind_arc) {
			const Matching& m = c.side == CurveRef::side_src ? f.src : f.tgt;
			c.id = std::min(map1.to_new[c.id], map1.to_new[m.pair_of[c.id]]);
		}
		return c;
	};
	auto remap_g = [&](CurveRef c) {
		if (c.kind == CurveRef::kind_arc) {
			const Matching& m = c.side == CurveRef::side_src ? g.src : g.tgt;
			c.id = std::min(map2.to_new[c.id], map2.to_new[m.pair_of[c.id]]);
		} else {
			c.id += c.side == CurveRef::side_src ? src_loop_shift : tgt_loop_shift;
		}
		return c;
	};
	for (auto& tf : f.terms)
		for (auto& tg : g.terms) {
			CobTerm t;
			t.coeff = tf.coeff * tg.coeff;
			for (auto& c : tf.components) {
				Component c2{{}, c.dots};
				for (auto cr : c.curves) c2.curves.push_back(remap_f(cr));
				t.components.push_back(std::move(c2));
			}
			for (auto& c : tg.components) {
				Component c2{{}, c.dots};
				for (auto cr : c.curves) c2.curves.push_back(remap_g(cr));
				t.components.push_back(std::move(c2));
			}
			r.terms.push_back(std::move(t));
		}
	canonicalize(r);
	return r;
}

// glues boundary point p to p+1 on both source and target
inline MorphismSum zip_morphism(const MorphismSum& f, int p) {
	ZipResult zs = zip(f.src, p), zt = zip(f.tgt, p);
	int n = f.src.points();
	int q = (p + 1) % n;
	MorphismSum r;
	r.src = zs.m;
	r.tgt = zt.m;

	auto remap = [&](CurveRef c) -> CurveRef {
		const Matching& old = c.side == CurveRef::side_src ? f.src : f.tgt;
		const ZipResult& zr = c.side == CurveRef::side_src ? zs : zt;
		if (c.kind == CurveRef::kind_loop) return c;  // new loops appended after old ones
		int x = c.id, y = old.pair_of[c.id];
		if ((x == p && y == q) || (x == q && y == p))
			return {c.side, CurveRef::kind_loop, zr.closed_loop};
		auto ends = [&](int e) { return e == p || e == q ? old.pair_of[e == p ? q : p] : e; };
		// the arc through p merges with the arc through q
		int nx = zr.map.to_new[x == p || x == q ? ends(x) : x];
		int ny = zr.map.to_new[y == p || y == q ? ends(y) : y];
		return {c.side, CurveRef::kind_arc, std::min(nx, ny)};
	};

	for (auto& t : f.terms) {
		// components touching p or q merge
		int nc = (int)t.components.size();
		detail::UnionFind uf(nc);
		int at_p = -1, at_q = -1;
		for (int k = 0; k < nc; ++k)
			for (auto& c : t.components[k].curves) {
				if (c.kind != CurveRef::kind_arc || c.side != CurveRef::side_src) continue;
				int x = c.id, y = f.src.pair_of[c.id];
				if (x == p || y == p) at_p = k;
				if (x == q || y == q) at_q = k;
			}
		if (at_p < 0 || at_q < 0) throw std::logic_error("zip_morphism: zipped points not covered");
		uf.unite(at_p, at_q);

		std::map<int, detail::RawComponent> clusters;
		std::map<int, int> chi;
		for (int k = 0; k < nc; ++k) {
			int root = uf.find(k);
			auto& cl = clusters[root];
			chi[root] += 2 - boundary_circles(t.components[k].curves, f.src, f.tgt);
			cl.dots += t.components[k].dots;
			for (auto& c : t.components[k].curves) {
				CurveRef nc2 = remap(c);
				bool dup = false;
				for (auto& e : cl.curves) dup |= e == nc2;
				if (!dup) cl.curves.push_back(nc2);
			}
		}
		chi[uf.find(at_p)] -= 1;  // glued along one vertical strip

		std::vector<detail::RawComponent> raw;
		for (auto& [root, cl] : clusters) {
			detail::RawComponent rc = cl;
			int b = rc.curves.empty() ? 0 : boundary_circles(rc.curves, r.src, r.tgt);
			int twice_genus = 2 - b - chi[root];
			if (twice_genus < 0 || twice_genus % 2)
				throw std::logic_error("zip_morphism: inconsistent Euler characteristic");
			rc.genus = twice_genus / 2;
			raw.push_back(std::move(rc));
		}
		emit_normalized(r, std::move(raw), t.coeff);
	}
	canonicalize(r);
	return r;
}

// ---------------------------------------------------------------------------
// the TQFT linearization (faithful normal form)
// ---------------------------------------------------------------------------

// Linear map induced on loop modules; src and tgt must consist of loops
// only. Basis words are ordered by loop index, letter 0 = basis 1, 1 = X.
inline std::vector<std::vector<RingElem>> tqft_matrix(const MorphismSum& f) {
	if (f.src.points() != 0 || f.tgt.points() != 0)
		throw std::invalid_argument("tqft_matrix: boundary not empty");
	int ns = (int)f.src.loops.size(), nt = (int)f.tgt.loops.size();
	int cols = 1 << ns, rows = 1 << nt;
	std::vector<std::vector<RingElem>> mat(rows, std::vector<RingElem>(cols));
	for (int wsi = 0; wsi < cols; ++wsi) {
		TensorElement::Word ws = word_of_index(wsi, ns);
		for (auto& t : f.terms) {
			// evaluate each component: merge its inputs, add dots, comultiply out
			TensorElement acc = TensorElement::scalar(t.coeff);
			for (auto& c : t.components) {
				AlgebraElement v = AlgebraElement::one();
				std::vector<int> outs;
				for (auto& cr : c.curves) {
					if (cr.side == CurveRef::side_src)
						v = mul(v, ws[cr.id] ? AlgebraElement::x() : AlgebraElement::one());
					else
						outs.push_back(cr.id);
				}
				for (int d = 0; d < c.dots; ++d) v = mul_by_x(v);
				TensorElement piece = comul_power(v, (int)outs.size());
				// tensor onto the accumulator; letters routed to loops below
				TensorElement combined(acc.arity + piece.arity);
				for (auto& [wa, ca] : acc.coeffs)
					for (auto& [wp, cp] : piece.coeffs) {
						TensorElement::Word w = wa;
						w.insert(w.end(), wp.begin(), wp.end());
						combined.add_term(w, ca * cp);
					}
				acc = std::move(combined);
			}
			// acc letters are ordered component by component; route to loop ids
			std::vector<int> route;
			for (auto& c : t.components)
				for (auto& cr : c.curves)
					if (cr.side == CurveRef::side_tgt) route.push_back(cr.id);
			for (auto& [w, cval] : acc.coeffs) {
				TensorElement::Word wt(nt, 0);
				for (size_t k = 0; k < route.size(); ++k) wt[route[k]] = w[k];
				mat[index_of_word(wt)][wsi] = mat[index_of_word(wt)][wsi] + cval;
			}
		}
	}
	return mat;
}

// Faithful cut normal form of an arbitrary morphism: every component is cut
// into single-boundary-circle disks through iterated comultiplication, and
// the result is a coefficient per dot pattern on the boundary circles of the
// pair (src, tgt). Two morphisms are equal in the quotient category iff
// their cut forms agree; this is the semantic equality/zero test.
inline std::map<std::vector<uint8_t>, RingElem> cut_form(const MorphismSum& f) {
	// enumerate boundary circles of the (src,tgt) pair once
	struct Circle {
		int index;
	};
	std::map<CurveRef, int> circle_of;  // any curve -> circle index
	int n_circles = 0;
	for (auto side : {CurveRef::side_src, CurveRef::side_tgt}) {
		const Matching& m = side == CurveRef::side_src ? f.src : f.tgt;
		for (int l = 0; l < (int)m.loops.size(); ++l)
			circle_of[{side, CurveRef::kind_loop, l}] = n_circles++;
	}
	{
		std::set<int> seen;
		for (int start = 0; start < f.src.points(); ++start) {
			if (seen.count(start)) continue;
			int x = start;
			do {
				seen.insert(x);
				int sa = std::min(x, f.src.pair_of[x]);
				circle_of[{CurveRef::side_src, CurveRef::kind_arc, sa}] = n_circles;
				x = f.src.pair_of[x];
				seen.insert(x);
				int ta = std::min(x, f.tgt.pair_of[x]);
				circle_of[{CurveRef::side_tgt, CurveRef::kind_arc, ta}] = n_circles;
				x = f.tgt.pair_of[x];
			} while (x != start);
			n_circles++;
		}
	}

	std::map<std::vector<uint8_t>, RingElem> out;
	for (auto& t : f.terms) {
		// expand each component over its circles
		std::vector<std::pair<std::vector<uint8_t>, RingElem>> partial{{std::vector<uint8_t>(n_circles, 0), t.coeff}};
		for (auto& c : t.components) {
			std::set<int> circ;
			for (auto& cr : c.curves) circ.insert(circle_of.at(cr));
			std::vector<int> circles(circ.begin(), circ.end());
			AlgebraElement v = handle_power(0, c.dots);
			TensorElement piece = comul_power(v, (int)circles.size());
			std::vector<std::pair<std::vector<uint8_t>, RingElem>> next;
			for (auto& [w, cw] : piece.coeffs)
				for (auto& [pw, pc] : partial) {
					auto nw = pw;
					for (size_t k = 0; k < circles.size(); ++k) nw[circles[k]] = w[k];
					next.push_back({std::move(nw), pc * cw});
				}
			partial = std::move(next);
		}
		for (auto& [w, c] : partial) {
			auto it = out.find(w);
			if (it == out.end())
				out.emplace(w, c);
			else {
				it->second = it->second + c;
			}
		}
	}
	for (auto it = out.begin(); it != out.end();)
		it = it->second.is_zero() ? out.erase(it) : std::next(it);
	return out;
}

inline bool equal_mod_relations(const MorphismSum& f, const MorphismSum& g) {
	if (!(f.src == g.src) || !(f.tgt == g.tgt)) return false;
	return cut_form(f) == cut_form(g);
}

inline bool zero_mod_relations(const MorphismSum& f) { return cut_form(f).empty(); }

// structural integrity: every boundary curve of (src,tgt) covered exactly
// once per term, canonical genus/dot form
inline void validate(const MorphismSum& f) {
	std::vector<CurveRef> want = curves_of(f.src, CurveRef::side_src);
	auto tgt_curves = curves_of(f.tgt, CurveRef::side_tgt);
	want.insert(want.end(), tgt_curves.begin(), tgt_curves.end());
	std::sort(want.begin(), want.end());
	for (auto& t : f.terms) {
		std::vector<CurveRef> got;
		for (auto& c : t.components) {
			if (c.dots < 0 || c.dots > 1) throw std::logic_error("validate: non-canonical dots");
			if (c.curves.empty()) throw std::logic_error("validate: closed component stored");
			got.insert(got.end(), c.curves.begin(), c.curves.end());
		}
		std::sort(got.begin(), got.end());
		if (got != want) throw std::logic_error("validate: curves not covered exactly once");
	}
}

}  // namespace foamcalc

#endif
