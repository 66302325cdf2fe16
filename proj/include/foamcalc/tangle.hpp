#ifndef FOAMCALC_TANGLE_HPP
#define FOAMCALC_TANGLE_HPP

#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

// Planar diagram combinatorics: PD codes with derived orientations and
// crossing signs, oriented crossingless matchings (the objects of the
// simplified cobordism category), crossing resolutions, and planar gluing.
//
// Orientation-reversal vertices are never stored. Every arc is kept in
// parity-minimal form (0 vertices on arcs joining opposite in/out tags, 1 on
// arcs joining equal tags) and vertex pairs are absorbed as they appear; the
// unit scalars this costs live in the morphism layer.

namespace foamcalc {

enum class Dir : uint8_t { in = 0, out = 1 };

inline Dir flip(Dir d) { return d == Dir::in ? Dir::out : Dir::in; }

struct Crossing {
	std::array<int, 4> edges{};   // counterclockwise from the incoming under-strand
	std::array<Dir, 4> dirs{};    // derived stub directions (in = points into the crossing)
	int sign = 0;                 // +1 / -1, derived
};

struct PDCode {
	std::vector<Crossing> crossings;
	int n_plus = 0, n_minus = 0;
	int free_loops = 0;  // crossingless unknot components

	// labels occurring exactly once (tangle boundary edges)
	std::vector<int> boundary_edges() const {
		std::map<int, int> count;
		for (auto& c : crossings)
			for (int e : c.edges) count[e]++;
		std::vector<int> out;
		for (auto& [e, n] : count)
			if (n == 1) out.push_back(e);
		return out;
	}
};

// ---------------------------------------------------------------------------
// PD parsing and orientation derivation
// ---------------------------------------------------------------------------

namespace detail {

struct Occurrence {
	int crossing, pos;
	bool operator<(const Occurrence& o) const {
		return crossing != o.crossing ? crossing < o.crossing : pos < o.pos;
	}
};

}  // namespace detail

// Propagates stub directions from the constraints: position 0 is incoming,
// position 2 outgoing, positions 1/3 are opposite ends of the over-strand,
// and the two occurrences of an edge are head and tail. Inconsistency means
// the diagram admits no coherent orientation.
inline void derive_orientations(PDCode& pd) {
	const int n = (int)pd.crossings.size();
	std::map<int, std::vector<detail::Occurrence>> occ;
	for (int c = 0; c < n; ++c)
		for (int p = 0; p < 4; ++p) occ[pd.crossings[c].edges[p]].push_back({c, p});
	for (auto& [e, v] : occ)
		if (v.size() > 2)
			throw std::invalid_argument("edge label " + std::to_string(e) + " occurs more than twice");

	// -1 unknown, else Dir
	std::vector<std::array<int, 4>> dir(n, {-1, -1, -1, -1});
	std::deque<detail::Occurrence> queue;
	auto assign = [&](int c, int p, Dir d) {
		int want = (int)d;
		if (dir[c][p] == want) return;
		if (dir[c][p] != -1) throw std::invalid_argument("orientation inconsistency in PD code");
		dir[c][p] = want;
		queue.push_back({c, p});
	};

	for (int c = 0; c < n; ++c) {
		assign(c, 0, Dir::in);
		assign(c, 2, Dir::out);
	}
	auto propagate = [&]() {
		while (!queue.empty()) {
			auto [c, p] = queue.front();
			queue.pop_front();
			Dir d = (Dir)dir[c][p];
			if (p == 1 || p == 3) assign(c, p ^ 2, flip(d));
			for (auto& o : occ[pd.crossings[c].edges[p]])
				if (o.crossing != c || o.pos != p) assign(o.crossing, o.pos, flip(d));
		}
	};
	propagate();
	// components consisting only of over-strands have a free orientation choice
	for (int c = 0; c < n; ++c)
		for (int p : {1, 3})
			if (dir[c][p] == -1) {
				assign(c, p, Dir::in);
				propagate();
			}

	for (int c = 0; c < n; ++c) {
		for (int p = 0; p < 4; ++p) pd.crossings[c].dirs[p] = (Dir)dir[c][p];
		// positive iff the over-strand runs from position 3 to position 1
		pd.crossings[c].sign = pd.crossings[c].dirs[3] == Dir::in ? +1 : -1;
	}
	pd.n_plus = pd.n_minus = 0;
	for (auto& c : pd.crossings) (c.sign > 0 ? pd.n_plus : pd.n_minus)++;
}

// "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]", optionally with "free_loops=k"
inline PDCode parse_pd(const std::string& text) {
	PDCode pd;
	std::istringstream in(text);
	std::string tok;
	while (in >> tok) {
		if (tok.rfind("free_loops=", 0) == 0) {
			pd.free_loops = std::stoi(tok.substr(11));
			continue;
		}
		if (tok.size() < 4 || (tok[0] != 'X' && tok[0] != 'x') || tok[1] != '[' || tok.back() != ']')
			throw std::invalid_argument("bad PD token: " + tok);
		std::string body = tok.substr(2, tok.size() - 3);
		Crossing c;
		size_t pos = 0;
		for (int k = 0; k < 4; ++k) {
			size_t comma = body.find(',', pos);
			if ((k < 3) == (comma == std::string::npos))
				throw std::invalid_argument("bad PD token: " + tok);
			c.edges[k] = std::stoi(body.substr(pos, comma - pos));
			pos = comma == std::string::npos ? body.size() : comma + 1;
		}
		pd.crossings.push_back(c);
	}
	derive_orientations(pd);
	return pd;
}

// braid word ("s1 s-2 s1" or just "1 -2 1") to the PD code of its closure
inline PDCode braid_to_pd(const std::vector<int>& word, int strands = 0) {
	for (int w : word)
		if (w == 0) throw std::invalid_argument("braid letter 0");
	int n = strands;
	for (int w : word) n = std::max(n, std::abs(w) + 1);
	if (n < 1) n = 1;

	std::vector<int> current(n);
	for (int s = 0; s < n; ++s) current[s] = s + 1;
	int fresh = n + 1;
	PDCode pd;
	for (int w : word) {
		int k = std::abs(w) - 1;  // positions k, k+1
		int in_l = current[k], in_r = current[k + 1];
		int out_l = fresh++, out_r = fresh++;
		Crossing c;
		if (w > 0)  // strand k passes over; under-strand enters at the right
			c.edges = {in_r, out_r, out_l, in_l};
		else  // under-strand enters at the left
			c.edges = {in_l, in_r, out_r, out_l};
		pd.crossings.push_back(c);
		current[k] = out_l;
		current[k + 1] = out_r;
	}
	// plat closure: the top of strand s is the bottom of strand s
	for (int s = 0; s < n; ++s) {
		if (current[s] == s + 1) {
			pd.free_loops++;  // strand never crossed
			continue;
		}
		for (auto& c : pd.crossings)
			for (auto& e : c.edges)
				if (e == current[s]) e = s + 1;
	}
	derive_orientations(pd);
	return pd;
}

inline std::vector<int> parse_braid_word(const std::string& text) {
	std::vector<int> word;
	std::istringstream in(text);
	std::string tok;
	while (in >> tok) {
		if (tok[0] == 's' || tok[0] == 'S') tok = tok.substr(1);
		word.push_back(std::stoi(tok));
	}
	return word;
}

// mirror image: every crossing switched. Rotating the tuple one step makes
// the old over-strand the new under-strand; the direction of rotation is
// fixed by which over-stub was incoming.
inline PDCode mirror_pd(const PDCode& pd) {
	PDCode m;
	m.free_loops = pd.free_loops;
	for (auto& c : pd.crossings) {
		Crossing r;
		const auto& e = c.edges;
		if (c.sign > 0)
			r.edges = {e[3], e[0], e[1], e[2]};  // over ran 3 -> 1, so stub 3 leads
		else
			r.edges = {e[1], e[2], e[3], e[0]};
		m.crossings.push_back(r);
	}
	derive_orientations(m);
	if (m.n_plus != pd.n_minus || m.n_minus != pd.n_plus)
		throw std::logic_error("mirror_pd: sign derivation mismatch");
	return m;
}

// ---------------------------------------------------------------------------
// Matchings
// ---------------------------------------------------------------------------

enum class LoopKind : uint8_t { oriented = 0, two_vertex = 1 };

// A crossingless tangle: planar pairing of tagged boundary points plus
// closed loops. Loop order is stable (morphisms reference loops by index).
struct Matching {
	std::vector<Dir> dirs;    // boundary points in cyclic order
	std::vector<int> pair_of; // planar perfect matching on positions
	std::vector<LoopKind> loops;

	int points() const { return (int)dirs.size(); }
	int arcs() const { return points() / 2; }

	bool operator==(const Matching& o) const {
		return dirs == o.dirs && pair_of == o.pair_of && loops == o.loops;
	}
	auto operator<=>(const Matching& o) const = default;

	bool is_planar() const {
		int n = points();
		for (int i = 0; i < n; ++i) {
			int j = pair_of[i];
			if (j < 0 || j >= n || j == i || pair_of[j] != i) return false;
			for (int k = i + 1; k < j; ++k) {
				int l = pair_of[k];
				if (k < j && (l < i || l > j)) return false;
			}
		}
		return true;
	}

	// parity-minimal vertex count of the arc at p: 1 if its endpoints carry
	// equal tags, else 0
	int arc_parity(int p) const { return dirs[p] == dirs[pair_of[p]] ? 1 : 0; }

	static Matching empty() { return {}; }

	static Matching loop(LoopKind k) {
		Matching m;
		m.loops.push_back(k);
		return m;
	}

	static Matching from_pairs(std::vector<Dir> dirs_, const std::vector<std::pair<int, int>>& pairs) {
		Matching m;
		m.dirs = std::move(dirs_);
		m.pair_of.assign(m.dirs.size(), -1);
		for (auto& [x, y] : pairs) {
			m.pair_of[x] = y;
			m.pair_of[y] = x;
		}
		for (int p : m.pair_of)
			if (p < 0) throw std::invalid_argument("incomplete pairing");
		return m;
	}
};

// both smoothings of a crossing as local 4-point matchings
struct CrossingResolutions {
	Matching oriented;  // every arc joins opposite tags
	Matching singular;  // every arc joins equal tags (derived vertex parity 1)
	int sign = 0;
};

inline CrossingResolutions resolve_crossing(const Crossing& c) {
	std::vector<Dir> d(c.dirs.begin(), c.dirs.end());
	Matching adj = Matching::from_pairs(d, {{0, 1}, {2, 3}});
	Matching opp = Matching::from_pairs(d, {{0, 3}, {1, 2}});
	bool adj_oriented = adj.arc_parity(0) == 0 && adj.arc_parity(2) == 0;
	CrossingResolutions r;
	r.sign = c.sign;
	r.oriented = adj_oriented ? adj : opp;
	r.singular = adj_oriented ? opp : adj;
	return r;
}

// ---------------------------------------------------------------------------
// Planar composition: splice (disjoint side-by-side placement) and zip
// (gluing one adjacent pair of boundary points)
// ---------------------------------------------------------------------------

// how positions move under an operation; loop_of >= 0 marks points absorbed
// into a newly closed loop
struct PointMap {
	std::vector<int> to_new;  // old position -> new position, -1 if consumed
	int new_points = 0;
};

// m2's cycle, starting at position rot, inserted into m1's cycle at slot
// (i.e. before m1's position slot); m1 occupies its old order
inline Matching splice(const Matching& m1, int slot, const Matching& m2, int rot,
                       PointMap* map1 = nullptr, PointMap* map2 = nullptr) {
	int n1 = m1.points(), n2 = m2.points();
	if (slot < 0 || slot > n1) throw std::out_of_range("splice: bad slot");
	if (n2 > 0 && (rot < 0 || rot >= n2)) throw std::out_of_range("splice: bad rotation");
	Matching r;
	r.dirs.resize(n1 + n2);
	r.pair_of.assign(n1 + n2, -1);
	std::vector<int> f1(n1), f2(n2);
	for (int p = 0; p < n1; ++p) f1[p] = p < slot ? p : p + n2;
	for (int p = 0; p < n2; ++p) f2[p] = slot + ((p - rot + n2) % n2);
	for (int p = 0; p < n1; ++p) {
		r.dirs[f1[p]] = m1.dirs[p];
		r.pair_of[f1[p]] = f1[m1.pair_of[p]];
	}
	for (int p = 0; p < n2; ++p) {
		r.dirs[f2[p]] = m2.dirs[p];
		r.pair_of[f2[p]] = f2[m2.pair_of[p]];
	}
	r.loops = m1.loops;
	r.loops.insert(r.loops.end(), m2.loops.begin(), m2.loops.end());
	if (map1) *map1 = {f1, n1 + n2};
	if (map2) *map2 = {f2, n1 + n2};
	return r;
}

struct ZipResult {
	Matching m;
	PointMap map;          // old positions -> new positions (zipped pair -> -1)
	int closed_loop = -1;  // index into m.loops if the zip closed a loop
};

// glue boundary point p to its cyclic successor; tags must be opposite
inline ZipResult zip(const Matching& m, int p) {
	int n = m.points();
	if (n < 2) throw std::invalid_argument("zip: no points");
	int q = (p + 1) % n;
	if (m.dirs[p] == m.dirs[q]) throw std::invalid_argument("zip: tags not opposite");
	ZipResult r;
	r.map.to_new.assign(n, -1);
	r.map.new_points = n - 2;
	int shift = 0;
	for (int k = 0; k < n; ++k) {
		if (k == p || k == q) continue;
		r.map.to_new[k] = shift++;
	}
	r.m.dirs.resize(n - 2);
	r.m.pair_of.assign(n - 2, -1);
	r.m.loops = m.loops;
	if (m.pair_of[p] == q) {
		// the closing arc is parity-minimal, so the loop is oriented
		r.m.loops.push_back(LoopKind::oriented);
		r.closed_loop = (int)r.m.loops.size() - 1;
	} else {
		int p2 = m.pair_of[p], q2 = m.pair_of[q];
		r.m.pair_of[r.map.to_new[p2]] = r.map.to_new[q2];
		r.m.pair_of[r.map.to_new[q2]] = r.map.to_new[p2];
	}
	for (int k = 0; k < n; ++k) {
		if (k == p || k == q) continue;
		r.m.dirs[r.map.to_new[k]] = m.dirs[k];
		int mate = m.pair_of[k];
		if (mate != p && mate != q) r.m.pair_of[r.map.to_new[k]] = r.map.to_new[mate];
	}
	return r;
}

// glue along contiguous boundary runs; seg1 in m1's cyclic order pairs with
// seg2 reversed. Returns the composite and the kinds of loops created.
inline std::pair<Matching, std::vector<LoopKind>> glue(const Matching& m1, std::vector<int> seg1,
                                                       const Matching& m2, std::vector<int> seg2) {
	if (seg1.size() != seg2.size()) throw std::invalid_argument("glue: segment size mismatch");
	int L = (int)seg1.size(), n1 = m1.points(), n2 = m2.points();
	for (int t = 0; t + 1 < L; ++t) {
		if (seg1[t + 1] != (seg1[t] + 1) % n1 || seg2[t + 1] != (seg2[t] + 1) % n2)
			throw std::invalid_argument("glue: segment not contiguous");
	}
	for (int t = 0; t < L; ++t)
		if (m1.dirs[seg1[t]] == m2.dirs[seg2[L - 1 - t]])
			throw std::invalid_argument("glue: tag mismatch");

	// splice so the glued runs sit nested, then zip from the middle out
	int slot = L ? (seg1[L - 1] + 1) % n1 : 0;
	if (L && slot == 0 && seg1[L - 1] == n1 - 1) slot = n1;
	Matching cur = splice(m1, slot, m2, L ? seg2[0] : 0);
	std::vector<int> pos1(n1), pos2(n2);
	for (int p = 0; p < n1; ++p) pos1[p] = p < slot ? p : p + n2;
	for (int p = 0; p < n2; ++p) pos2[p] = slot + ((p - (L ? seg2[0] : 0) + n2) % n2);
	size_t loops_before = m1.loops.size() + m2.loops.size();
	for (int t = L - 1; t >= 0; --t) {
		int p = pos1[seg1[t]];
		int n = cur.points();
		if (cur.dirs[p] == cur.dirs[(p + 1) % n]) throw std::invalid_argument("glue: tag mismatch");
		ZipResult zr = zip(cur, p);
		for (auto& x : pos1)
			if (x >= 0) x = zr.map.to_new[x];
		for (auto& x : pos2)
			if (x >= 0) x = zr.map.to_new[x];
		cur = zr.m;
	}
	std::vector<LoopKind> created(cur.loops.begin() + loops_before, cur.loops.end());
	return {cur, created};
}

// ---------------------------------------------------------------------------
// Crossing insertion order
// ---------------------------------------------------------------------------

// greedy: next crossing shares the most edges with the current open boundary,
// ties broken by smaller resulting boundary, then by index
inline std::vector<int> ordering_heuristic(const PDCode& pd) {
	int n = (int)pd.crossings.size();
	std::vector<int> order;
	std::vector<bool> placed(n, false);
	std::multiset<int> open;  // edge labels with one endpoint placed
	for (int step = 0; step < n; ++step) {
		int best = -1, best_shared = -1, best_boundary = 1 << 30;
		for (int c = 0; c < n; ++c) {
			if (placed[c]) continue;
			int shared = 0;
			std::multiset<int> tmp = open;
			for (int e : pd.crossings[c].edges) {
				auto it = tmp.find(e);
				if (it != tmp.end()) {
					shared++;
					tmp.erase(it);
				}
			}
			// self-paired edges of a kink close immediately
			std::map<int, int> self;
			for (int e : pd.crossings[c].edges) self[e]++;
			int selfpairs = 0;
			for (auto& [e, k] : self) selfpairs += k / 2;
			int boundary = (int)open.size() + 4 - 2 * shared - 2 * selfpairs;
			if (shared > best_shared || (shared == best_shared && boundary < best_boundary)) {
				best = c;
				best_shared = shared;
				best_boundary = boundary;
			}
		}
		order.push_back(best);
		placed[best] = true;
		for (int e : pd.crossings[best].edges) {
			auto it = open.find(e);
			if (it != open.end())
				open.erase(it);
			else
				open.insert(e);
		}
	}
	return order;
}

}  // namespace foamcalc

#endif
