#ifndef FOAMCALC_FOAMREL_HPP
#define FOAMCALC_FOAMREL_HPP

#include <functional>
#include <random>

#include "foamcalc/frobenius.hpp"
#include "foamcalc/tangle.hpp"

// Faithful, seam-aware evaluation of closed foams presented as words of
// elementary slices, and machine verification of the local relation calculus:
// the dotted relations (2D, SF, S, UFO) with their derived identities
// (curtain identities, CN, dot exchange), and the dotless relations
// (G2, SF~, S~, T, UFO~) with CN~, RSC~ and handle exchange over Z[1/2,i,a,h].
//
// State: a linear combination of basis words over the live circles. Oriented
// circles carry the basis (1, X); two-vertex circles the basis (v'-, v'+)
// identified with (1, X). In these coordinates the seam data reduces to:
// the singular cap evaluates through i*epsilon, a dot on the non-preferred
// facet acts by h - X, singular saddles are +-i times merge/split, and a
// seam circle on a sheet (zip then unzip) is +-i. The seam side convention
// is: +i when the preferred facet lies to the left of the seam orientation;
// flip_seam_signs inverts every such choice for the perturbation tests.

namespace foamcalc {

enum class Facet : uint8_t { preferred, other };
enum class SeamSide : uint8_t { left, right };

struct Slice {
	enum Type : uint8_t {
		birth,
		death,
		merge,
		split,
		dot,
		ss_merge,   // singular saddle joining two oriented circles into a two-vertex one
		ss_split,   // singular saddle splitting a two-vertex circle into two oriented ones
		handle,     // genus-one tube attached to the given facet
		zip,        // vertex pair creation: oriented -> two-vertex
		unzip       // vertex pair cancellation: two-vertex -> oriented
	} type;
	int i = -1, j = -1;
	LoopKind kind = LoopKind::oriented;
	Facet facet = Facet::preferred;
	SeamSide side = SeamSide::left;

	static Slice make_birth(LoopKind k) { return {birth, -1, -1, k, {}, {}}; }
	static Slice make_death(int i) { return {death, i, -1, {}, {}, {}}; }
	static Slice make_merge(int i, int j) { return {merge, i, j, {}, {}, {}}; }
	static Slice make_split(int i) { return {split, i, -1, {}, {}, {}}; }
	static Slice make_dot(int i, Facet f = Facet::preferred) { return {dot, i, -1, {}, f, {}}; }
	static Slice make_ss_merge(int i, int j, SeamSide s) { return {ss_merge, i, j, {}, {}, s}; }
	static Slice make_ss_split(int i, SeamSide s) { return {ss_split, i, -1, {}, {}, s}; }
	static Slice make_handle(int i, Facet f = Facet::preferred) { return {handle, i, -1, {}, f, {}}; }
	static Slice make_zip(int i, SeamSide s) { return {zip, i, -1, {}, {}, s}; }
	static Slice make_unzip(int i, SeamSide s) { return {unzip, i, -1, {}, {}, s}; }
};

using SliceWord = std::vector<Slice>;

struct EvalConfig {
	bool flip_seam_signs = false;  // perturbation guard for the sign convention
};

// value of a closed foam: an element of Z[i][a,h], or of Z[1/2,i][a,h] for
// the dotless theory; both live in RingElemQ here
using FoamValue = RingElemQ;

namespace relmodel {

using Word = std::vector<uint8_t>;

struct State {
	std::vector<LoopKind> kinds;
	std::map<Word, RingElemQ> coeffs;

	void add(const Word& w, const RingElemQ& c) {
		if (c.is_zero()) return;
		auto it = coeffs.find(w);
		if (it == coeffs.end())
			coeffs.emplace(w, c);
		else {
			it->second = it->second + c;
			if (it->second.is_zero()) coeffs.erase(it);
		}
	}
};

inline RingElemQ qa() { return RingElemQ::var_a(); }
inline RingElemQ qh() { return RingElemQ::var_h(); }
inline RingElemQ qi() { return RingElemQ::unit_i(); }
inline RingElemQ half() { return RingElemQ(GaussianRat(Rat(1, 2), Rat(0))); }

// image of basis vectors under a 2x2 operator: columns (c1 images)
struct Op2 {
	RingElemQ m00, m01, m10, m11;  // [1->1, X->1; 1->X, X->X]

	static Op2 identity() { return {RingElemQ(1), RingElemQ(0), RingElemQ(0), RingElemQ(1)}; }
	static Op2 mul_x() { return {RingElemQ(0), qa(), RingElemQ(1), qh()}; }
	Op2 operator*(const RingElemQ& s) const { return {m00 * s, m01 * s, m10 * s, m11 * s}; }
	Op2 operator+(const Op2& o) const {
		return {m00 + o.m00, m01 + o.m01, m10 + o.m10, m11 + o.m11};
	}
	Op2 operator-() const { return {-m00, -m01, -m10, -m11}; }
};

inline Op2 handle_op() {  // 2X - h
	Op2 r = Op2::mul_x() * RingElemQ(2);
	Op2 h = Op2::identity() * (-qh());
	return r + h;
}

inline void apply_op(State& st, int pos, const Op2& op) {
	State out;
	out.kinds = st.kinds;
	for (auto& [w, c] : st.coeffs) {
		Word w1 = w;
		const RingElemQ& col0 = w[pos] ? op.m01 : op.m00;
		const RingElemQ& col1 = w[pos] ? op.m11 : op.m10;
		w1[pos] = 0;
		out.add(w1, c * col0);
		w1[pos] = 1;
		out.add(w1, c * col1);
	}
	st.coeffs = std::move(out.coeffs);
}

// m on circles i and j (result replaces i, j removed)
inline void apply_merge(State& st, int i, int j) {
	if (i > j) std::swap(i, j);
	State out;
	out.kinds = st.kinds;
	out.kinds.erase(out.kinds.begin() + j);
	std::map<Word, RingElemQ> next;
	for (auto& [w, c] : st.coeffs) {
		uint8_t x = w[i], y = w[j];
		Word w1;
		for (int k = 0; k < (int)w.size(); ++k)
			if (k != j) w1.push_back(w[k]);
		auto put = [&](uint8_t v, const RingElemQ& s) {
			w1[i] = v;
			if (s.is_zero()) return;
			auto it = next.find(w1);
			if (it == next.end())
				next.emplace(w1, c * s);
			else {
				it->second = it->second + c * s;
				if (it->second.is_zero()) next.erase(it);
			}
		};
		if (x && y) {  // X*X = hX + a
			put(1, qh());
			put(0, qa());
		} else {
			put(x | y, RingElemQ(1));
		}
	}
	st.kinds = std::move(out.kinds);
	st.coeffs = std::move(next);
}

// Delta on circle i; the new circle is inserted at i+1 with the given kind
inline void apply_split(State& st, int i, LoopKind new_kind) {
	std::vector<LoopKind> kinds = st.kinds;
	kinds.insert(kinds.begin() + i + 1, new_kind);
	std::map<Word, RingElemQ> next;
	for (auto& [w, c] : st.coeffs) {
		Word w1(w.begin(), w.begin() + i + 1);
		w1.push_back(0);
		w1.insert(w1.end(), w.begin() + i + 1, w.end());
		auto put = [&](uint8_t x, uint8_t y, const RingElemQ& s) {
			w1[i] = x;
			w1[i + 1] = y;
			if (s.is_zero()) return;
			auto it = next.find(w1);
			if (it == next.end())
				next.emplace(w1, c * s);
			else {
				it->second = it->second + c * s;
				if (it->second.is_zero()) next.erase(it);
			}
		};
		if (w[i] == 0) {  // Delta(1) = 1 x X + X x 1 - h 1 x 1
			put(0, 1, RingElemQ(1));
			put(1, 0, RingElemQ(1));
			put(0, 0, -qh());
		} else {  // Delta(X) = X x X + a 1 x 1
			put(1, 1, RingElemQ(1));
			put(0, 0, qa());
		}
	}
	st.kinds = std::move(kinds);
	st.coeffs = std::move(next);
}

inline void apply_death(State& st, int i, const RingElemQ& eps_scale) {
	std::map<Word, RingElemQ> next;
	for (auto& [w, c] : st.coeffs) {
		if (!w[i]) continue;  // epsilon(1) = 0
		Word w1;
		for (int k = 0; k < (int)w.size(); ++k)
			if (k != i) w1.push_back(w[k]);
		auto it = next.find(w1);
		RingElemQ v = c * eps_scale;
		if (it == next.end())
			next.emplace(w1, v);
		else {
			it->second = it->second + v;
			if (it->second.is_zero()) next.erase(it);
		}
	}
	st.kinds.erase(st.kinds.begin() + i);
	st.coeffs = std::move(next);
}

}  // namespace relmodel

// ---------------------------------------------------------------------------
// the evaluator
// ---------------------------------------------------------------------------

inline FoamValue eval_word(const SliceWord& word, EvalConfig cfg = {}, bool allow_dots = true) {
	using namespace relmodel;
	State st;
	st.coeffs[{}] = RingElemQ(1);
	RingElemQ plus_i = cfg.flip_seam_signs ? -qi() : qi();

	auto need = [&](int i) {
		if (i < 0 || i >= (int)st.kinds.size()) throw std::invalid_argument("slice index out of range");
	};
	// flipping the convention negates every seam-side scalar; which facet is
	// preferred is data carried by the foam itself
	auto seam_scale = [&](SeamSide s) { return s == SeamSide::left ? plus_i : -plus_i; };
	auto dot_op = [&](LoopKind k, Facet f) {
		if (k == LoopKind::oriented || f == Facet::preferred) return Op2::mul_x();
		// non-preferred facet across the seams: h - X
		return Op2::identity() * qh() + (-Op2::mul_x());
	};
	auto handle_facet_op = [&](LoopKind k, Facet f) {
		if (k == LoopKind::oriented || f == Facet::preferred) return handle_op();
		return -handle_op();
	};

	for (const Slice& s : word) {
		switch (s.type) {
			case Slice::birth: {
				st.kinds.push_back(s.kind);
				std::map<Word, RingElemQ> next;
				for (auto& [w, c] : st.coeffs) {
					Word w1 = w;
					w1.push_back(0);
					next.emplace(std::move(w1), c);
				}
				st.coeffs = std::move(next);
				break;
			}
			case Slice::death:
				need(s.i);
				// the singular cap evaluates through i*epsilon
				apply_death(st, s.i, st.kinds[s.i] == LoopKind::two_vertex ? plus_i : RingElemQ(1));
				break;
			case Slice::merge: {
				need(s.i);
				need(s.j);
				if (s.i == s.j) throw std::invalid_argument("merge needs distinct circles");
				LoopKind ki = st.kinds[s.i], kj = st.kinds[s.j];
				if (ki == LoopKind::two_vertex && kj == LoopKind::two_vertex)
					throw std::invalid_argument("merging two two-vertex circles is not a basic picture");
				int lo = std::min(s.i, s.j);
				LoopKind merged = (ki == LoopKind::two_vertex || kj == LoopKind::two_vertex)
				                      ? LoopKind::two_vertex
				                      : LoopKind::oriented;
				apply_merge(st, s.i, s.j);
				st.kinds[lo] = merged;
				break;
			}
			case Slice::split:
				need(s.i);
				// a two-vertex circle splits off an oriented one
				apply_split(st, s.i, LoopKind::oriented);
				break;
			case Slice::dot:
				if (!allow_dots) throw std::invalid_argument("dot slice in the dotless theory");
				need(s.i);
				apply_op(st, s.i, dot_op(st.kinds[s.i], s.facet));
				break;
			case Slice::ss_merge: {
				need(s.i);
				need(s.j);
				if (st.kinds[s.i] != LoopKind::oriented || st.kinds[s.j] != LoopKind::oriented)
					throw std::invalid_argument("singular saddle merges two oriented circles");
				int lo = std::min(s.i, s.j);
				apply_merge(st, s.i, s.j);
				st.kinds[lo] = LoopKind::two_vertex;
				for (auto& [w, c] : st.coeffs) c = c * seam_scale(s.side);
				break;
			}
			case Slice::ss_split:
				need(s.i);
				if (st.kinds[s.i] != LoopKind::two_vertex)
					throw std::invalid_argument("singular saddle splits a two-vertex circle");
				apply_split(st, s.i, LoopKind::oriented);
				st.kinds[s.i] = LoopKind::oriented;
				for (auto& [w, c] : st.coeffs) c = c * seam_scale(s.side);
				break;
			case Slice::handle:
				need(s.i);
				apply_op(st, s.i, handle_facet_op(st.kinds[s.i], s.facet));
				break;
			case Slice::zip:
				need(s.i);
				if (st.kinds[s.i] != LoopKind::oriented)
					throw std::invalid_argument("zip acts on an oriented circle");
				st.kinds[s.i] = LoopKind::two_vertex;
				break;
			case Slice::unzip:
				need(s.i);
				if (st.kinds[s.i] != LoopKind::two_vertex)
					throw std::invalid_argument("unzip acts on a two-vertex circle");
				st.kinds[s.i] = LoopKind::oriented;
				for (auto& [w, c] : st.coeffs) c = c * seam_scale(s.side);
				break;
		}
	}
	if (!st.kinds.empty()) throw std::invalid_argument("word is not closed");
	auto it = st.coeffs.find({});
	return it == st.coeffs.end() ? RingElemQ::zero() : it->second;
}

inline FoamValue eval_dotted(const SliceWord& w, EvalConfig cfg = {}) {
	return eval_word(w, cfg, true);
}

inline FoamValue eval_dotless(const SliceWord& w, EvalConfig cfg = {}) {
	return eval_word(w, cfg, false);
}

// ---------------------------------------------------------------------------
// relation checking by closure
// ---------------------------------------------------------------------------

// a relation between open foam pieces with the given circle configurations
// at bottom and top; each side is a linear combination of slice fragments
struct OpenRelation {
	std::vector<LoopKind> inputs, outputs;
	std::vector<std::pair<RingElemQ, SliceWord>> lhs, rhs;
	bool dotless = false;  // closures use handles instead of dots
};

inline bool check_open_relation(const OpenRelation& rel, EvalConfig cfg = {}) {
	int ni = (int)rel.inputs.size(), no = (int)rel.outputs.size();
	int total = ni + no;
	std::vector<int> marks(total, 0);
	// every combination of 0..2 dots (or handles, dotless) per closure curve
	for (;;) {
		auto value = [&](const std::vector<std::pair<RingElemQ, SliceWord>>& side) {
			RingElemQ acc;
			for (auto& [coeff, frag] : side) {
				SliceWord w;
				for (int k = 0; k < ni; ++k) {
					w.push_back(Slice::make_birth(rel.inputs[k]));
					for (int d = 0; d < marks[k]; ++d)
						w.push_back(rel.dotless ? Slice::make_handle(k) : Slice::make_dot(k));
				}
				w.insert(w.end(), frag.begin(), frag.end());
				for (int k = no - 1; k >= 0; --k) {
					for (int d = 0; d < marks[ni + k]; ++d)
						w.push_back(rel.dotless ? Slice::make_handle(k) : Slice::make_dot(k));
					w.push_back(Slice::make_death(k));
				}
				acc = acc + coeff * eval_word(w, cfg, !rel.dotless);
			}
			return acc;
		};
		if (!(value(rel.lhs) == value(rel.rhs))) return false;
		int k = 0;
		while (k < total && marks[k] == 2) marks[k++] = 0;
		if (k == total) break;
		marks[k]++;
	}
	return true;
}

namespace relcatalog {

inline std::map<std::string, OpenRelation> catalog() {
	using S = Slice;
	const LoopKind OR = LoopKind::oriented, TV = LoopKind::two_vertex;
	const RingElemQ one(1), h = relmodel::qh(), a = relmodel::qa(), iu = relmodel::qi();
	const RingElemQ half = relmodel::half();
	std::map<std::string, OpenRelation> cat;

	// (2D): two dots on a facet reduce, X^2 = hX + a
	cat["2D"] = {{OR}, {OR},
	             {{one, {S::make_dot(0), S::make_dot(0)}}},
	             {{h, {S::make_dot(0)}}, {a, {}}}};
	// (S): sphere = 0, dotted sphere = 1
	cat["S"] = {{}, {},
	            {{one, {S::make_birth(OR), S::make_death(0)}}},
	            {{RingElemQ(0), {}}}};
	cat["S_dotted"] = {{}, {},
	                   {{one, {S::make_birth(OR), S::make_dot(0), S::make_death(0)}}},
	                   {{one, {}}}};
	// (SF): the surgery formula, tube = dot-top + dot-bottom - h plain
	cat["SF"] = {{OR}, {OR},
	             {{one, {}}},
	             {{one, {S::make_death(0), S::make_birth(OR), S::make_dot(0)}},
	              {one, {S::make_dot(0), S::make_death(0), S::make_birth(OR)}},
	              {-h, {S::make_death(0), S::make_birth(OR)}}}};
	// (UFO): undotted 0 both ways; one dot gives i / -i by facet
	cat["UFO"] = {{}, {},
	              {{one, {S::make_birth(TV), S::make_death(0)}}},
	              {{RingElemQ(0), {}}}};
	cat["UFO_dot_preferred"] = {{}, {},
	                            {{one, {S::make_birth(TV), S::make_dot(0, Facet::preferred), S::make_death(0)}}},
	                            {{iu, {}}}};
	cat["UFO_dot_other"] = {{}, {},
	                        {{one, {S::make_birth(TV), S::make_dot(0, Facet::other), S::make_death(0)}}},
	                        {{-iu, {}}}};
	// curtain identities: a seam circle on a sheet is +-i
	cat["curtain_eq4"] = {{OR}, {OR},
	                      {{one, {S::make_zip(0, SeamSide::left), S::make_unzip(0, SeamSide::left)}}},
	                      {{iu, {}}}};
	cat["curtain_eq4b"] = {{OR}, {OR},
	                       {{one, {S::make_zip(0, SeamSide::right), S::make_unzip(0, SeamSide::right)}}},
	                       {{-iu, {}}}};
	cat["curtain_eq5"] = {{TV}, {TV},
	                      {{one, {S::make_unzip(0, SeamSide::right), S::make_zip(0, SeamSide::right)}}},
	                      {{-iu, {}}}};
	cat["curtain_eq5b"] = {{TV}, {TV},
	                       {{one, {S::make_unzip(0, SeamSide::left), S::make_zip(0, SeamSide::left)}}},
	                       {{iu, {}}}};
	// Lemma 2.1: zip is invertible (inverse -i * unzip on the left side)
	cat["lemma_2_1"] = {{OR}, {OR},
	                    {{-iu, {S::make_zip(0, SeamSide::left), S::make_unzip(0, SeamSide::left)}}},
	                    {{one, {}}}};
	// (CN): cutting a two-vertex neck, dots on the preferred facets
	cat["CN"] = {{TV}, {TV},
	             {{one, {}}},
	             {{-iu, {S::make_death(0), S::make_birth(TV), S::make_dot(0)}},
	              {-iu, {S::make_dot(0), S::make_death(0), S::make_birth(TV)}},
	              {h * iu, {S::make_death(0), S::make_birth(TV)}}}};
	// dot exchange across a seam
	cat["dot_exchange_sum"] = {{TV}, {TV},
	                           {{one, {S::make_dot(0, Facet::preferred)}},
	                            {one, {S::make_dot(0, Facet::other)}}},
	                           {{h, {}}}};
	cat["dot_exchange_product"] = {{TV}, {TV},
	                               {{one, {S::make_dot(0, Facet::preferred), S::make_dot(0, Facet::other)}}},
	                               {{-a, {}}}};

	// ---- dotless theory ----
	// (G2): genus two reduces to (h^2 + 4a)
	cat["G2"] = {{OR}, {OR},
	             {{one, {S::make_handle(0), S::make_handle(0)}}},
	             {{h * h + RingElemQ(4) * a, {}}},
	             true};
	// (SF~): id = 1/2 (m Delta iota eps + iota eps m Delta)
	cat["SF~"] = {{OR}, {OR},
	              {{one, {}}},
	              {{half, {S::make_death(0), S::make_birth(OR), S::make_handle(0)}},
	               {half, {S::make_handle(0), S::make_death(0), S::make_birth(OR)}}},
	              true};
	// (S~): sphere = 0
	cat["S~"] = {{}, {},
	             {{one, {S::make_birth(OR), S::make_death(0)}}},
	             {{RingElemQ(0), {}}},
	             true};
	// (T): torus = 2, both through honest split/merge and the handle slice
	cat["T"] = {{}, {},
	            {{one, {S::make_birth(OR), S::make_split(0), S::make_merge(0, 1), S::make_death(0)}}},
	            {{RingElemQ(2), {}}},
	            true};
	cat["T_handle"] = {{}, {},
	                   {{one, {S::make_birth(OR), S::make_handle(0), S::make_death(0)}}},
	                   {{RingElemQ(2), {}}},
	                   true};
	// (UFO~): genus-0 singular spheres vanish; genus-1 gives +-2i by facet
	cat["UFO~"] = {{}, {},
	               {{one, {S::make_birth(TV), S::make_death(0)}}},
	               {{RingElemQ(0), {}}},
	               true};
	cat["UFO~_genus_preferred"] = {{}, {},
	                               {{one, {S::make_birth(TV), S::make_handle(0, Facet::preferred), S::make_death(0)}}},
	                               {{RingElemQ(2) * iu, {}}},
	                               true};
	cat["UFO~_genus_other"] = {{}, {},
	                           {{one, {S::make_birth(TV), S::make_handle(0, Facet::other), S::make_death(0)}}},
	                           {{RingElemQ(-2) * iu, {}}},
	                           true};
	// (CN~): cut a two-vertex neck with half-handles
	cat["CN~"] = {{TV}, {TV},
	              {{one, {}}},
	              {{-iu * half, {S::make_death(0), S::make_birth(TV), S::make_handle(0)}},
	               {-iu * half, {S::make_handle(0), S::make_death(0), S::make_birth(TV)}}},
	              true};
	// (RSC~): removing a seam circle with a handle inside, through mixed
	// singular-saddle pairs (reconstruction; see the torus of values it pins)
	cat["RSC~"] = {{TV}, {TV},
	               {{one, {S::make_unzip(0, SeamSide::right), S::make_handle(0), S::make_zip(0, SeamSide::right)}}},
	               {{iu * half, {S::make_ss_split(0, SeamSide::left), S::make_ss_merge(0, 1, SeamSide::left)}},
	                {-iu * half, {S::make_ss_split(0, SeamSide::left), S::make_ss_merge(0, 1, SeamSide::right)}}},
	               true};
	// handles exchange between neighboring facets at the cost of a sign
	cat["handle_exchange"] = {{TV}, {TV},
	                          {{one, {S::make_handle(0, Facet::preferred)}},
	                           {one, {S::make_handle(0, Facet::other)}}},
	                          {{RingElemQ(0), {}}},
	                          true};
	return cat;
}

}  // namespace relcatalog

inline std::vector<std::string> relation_ids() {
	std::vector<std::string> ids;
	for (auto& [k, v] : relcatalog::catalog()) ids.push_back(k);
	return ids;
}

inline bool check_relation(const std::string& id, EvalConfig cfg = {}) {
	auto cat = relcatalog::catalog();
	auto it = cat.find(id);
	if (it == cat.end()) throw std::invalid_argument("unknown relation id: " + id);
	return check_open_relation(it->second, cfg);
}

// ---------------------------------------------------------------------------
// delooping maps, verified seam-aware
// ---------------------------------------------------------------------------

// both map pairs of the delooping lemma compose to identities both ways;
// flipping the seam sign convention must break the two-vertex pair
inline bool check_deloop_maps(EvalConfig cfg = {}) {
	using S = Slice;
	const RingElemQ one(1), h = relmodel::qh(), iu = relmodel::qi();

	// oriented pair: alpha = (cap, dotted cap), beta = (dotted cup - h cup, cup)
	OpenRelation or_ba{{LoopKind::oriented},
	                   {LoopKind::oriented},
	                   {{one, {}}},
	                   {{one, {S::make_death(0), S::make_birth(LoopKind::oriented), S::make_dot(0)}},
	                    {-h, {S::make_death(0), S::make_birth(LoopKind::oriented)}},
	                    {one, {S::make_dot(0), S::make_death(0), S::make_birth(LoopKind::oriented)}}}};
	if (!check_open_relation(or_ba, cfg)) return false;

	// two-vertex pair: alpha = (cap, dotted cap),
	// beta = (-i dotted cup + hi cup, -i cup); the singular cap's own i makes
	// the composition close to the identity
	OpenRelation tv_ba{{LoopKind::two_vertex},
	                   {LoopKind::two_vertex},
	                   {{one, {}}},
	                   {{-iu, {S::make_death(0), S::make_birth(LoopKind::two_vertex), S::make_dot(0)}},
	                    {h * iu, {S::make_death(0), S::make_birth(LoopKind::two_vertex)}},
	                    {-iu, {S::make_dot(0), S::make_death(0), S::make_birth(LoopKind::two_vertex)}}}};
	if (!check_open_relation(tv_ba, cfg)) return false;

	// alpha beta: all four scalar compositions, both flavors
	auto scalar = [&](SliceWord w) { return eval_dotted(w, cfg); };
	for (LoopKind k : {LoopKind::oriented, LoopKind::two_vertex}) {
		RingElemQ tw = k == LoopKind::two_vertex ? -iu : one;  // beta scalars
		RingElemQ hw = k == LoopKind::two_vertex ? h * iu : -h;
		// entries of alpha o beta in the basis of the two shifted empties
		RingElemQ e00 = tw * scalar({S::make_birth(k), S::make_dot(0), S::make_death(0)}) +
		                hw * scalar({S::make_birth(k), S::make_death(0)});
		RingElemQ e01 = tw * scalar({S::make_birth(k), S::make_death(0)});
		RingElemQ e10 = tw * scalar({S::make_birth(k), S::make_dot(0), S::make_dot(0), S::make_death(0)}) +
		                hw * scalar({S::make_birth(k), S::make_dot(0), S::make_death(0)});
		RingElemQ e11 = tw * scalar({S::make_birth(k), S::make_dot(0), S::make_death(0)});
		if (!(e00 == one) || !e01.is_zero() || !e10.is_zero() || !(e11 == one)) return false;
	}
	return true;
}

// the two-vertex maps with the wrong sign must fail to be inverses
inline bool check_deloop_maps_perturbed_fails(EvalConfig cfg = {}) {
	using S = Slice;
	const RingElemQ one(1), h = relmodel::qh(), iu = relmodel::qi();
	auto scalar = [&](SliceWord w) { return eval_dotted(w, cfg); };
	LoopKind k = LoopKind::two_vertex;
	RingElemQ tw = iu;  // perturbed: +i instead of -i
	RingElemQ hw = h * iu;
	RingElemQ e00 = tw * scalar({S::make_birth(k), S::make_dot(0), S::make_death(0)}) +
	                hw * scalar({S::make_birth(k), S::make_death(0)});
	return !(e00 == one);
}

// ---------------------------------------------------------------------------
// dotted vs dotless cross-validation
// ---------------------------------------------------------------------------

// replace every dot by 1/2 handle + 1/2 h, expanding linearly, and compare
inline bool cross_validate_word(const SliceWord& w, EvalConfig cfg = {}) {
	FoamValue dotted = eval_dotted(w, cfg);
	std::vector<std::pair<RingElemQ, SliceWord>> branches{{RingElemQ(1), {}}};
	for (const Slice& s : w) {
		if (s.type == Slice::dot) {
			std::vector<std::pair<RingElemQ, SliceWord>> next;
			for (auto& [c, frag] : branches) {
				auto with_handle = frag;
				with_handle.push_back(Slice::make_handle(s.i, s.facet));
				next.push_back({c * relmodel::half(), std::move(with_handle)});
				next.push_back({c * relmodel::half() * relmodel::qh(), frag});
			}
			branches = std::move(next);
		} else {
			for (auto& [c, frag] : branches) frag.push_back(s);
		}
	}
	FoamValue dotless;
	for (auto& [c, frag] : branches) dotless = dotless + c * eval_dotless(frag, cfg);
	return dotted == dotless;
}

// random closed dotted words for the property tests
inline SliceWord random_closed_word(std::mt19937& rng, int max_len = 12) {
	SliceWord w;
	int circles = 0;
	std::vector<LoopKind> kinds;
	int len = 1 + (int)(rng() % max_len);
	for (int step = 0; step < len; ++step) {
		int choice = (int)(rng() % 6);
		if (circles == 0 || choice == 0) {
			LoopKind k = rng() % 3 ? LoopKind::oriented : LoopKind::two_vertex;
			w.push_back(Slice::make_birth(k));
			kinds.push_back(k);
			circles++;
			continue;
		}
		int i = (int)(rng() % circles);
		switch (choice) {
			case 1:
				w.push_back(Slice::make_dot(i, rng() % 2 ? Facet::preferred : Facet::other));
				break;
			case 2:
				w.push_back(Slice::make_split(i));
				kinds.insert(kinds.begin() + i + 1, LoopKind::oriented);
				circles++;
				break;
			case 3: {
				if (circles < 2) break;
				int j = (int)(rng() % circles);
				if (j == i || (kinds[i] == LoopKind::two_vertex && kinds[j] == LoopKind::two_vertex))
					break;
				w.push_back(Slice::make_merge(i, j));
				LoopKind merged = (kinds[i] == LoopKind::two_vertex || kinds[j] == LoopKind::two_vertex)
				                      ? LoopKind::two_vertex
				                      : LoopKind::oriented;
				kinds.erase(kinds.begin() + std::max(i, j));
				kinds[std::min(i, j)] = merged;
				circles--;
				break;
			}
			case 4:
				w.push_back(Slice::make_handle(i, rng() % 2 ? Facet::preferred : Facet::other));
				break;
			default:
				if (kinds[i] == LoopKind::two_vertex) {
					w.push_back(Slice::make_ss_split(i, rng() % 2 ? SeamSide::left : SeamSide::right));
					kinds[i] = LoopKind::oriented;
					kinds.insert(kinds.begin() + i + 1, LoopKind::oriented);
					circles++;
				} else {
					w.push_back(Slice::make_zip(i, SeamSide::left));
					kinds[i] = LoopKind::two_vertex;
				}
				break;
		}
	}
	while (circles > 0) {
		w.push_back(Slice::make_death(circles - 1));
		kinds.pop_back();
		circles--;
	}
	return w;
}

inline bool cross_validate(int n_words = 1000, int max_len = 12, uint32_t seed = 20240817) {
	std::mt19937 rng(seed);
	for (int k = 0; k < n_words; ++k)
		if (!cross_validate_word(random_closed_word(rng, max_len))) return false;
	return true;
}

}  // namespace foamcalc

#endif
