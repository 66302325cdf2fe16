#ifndef FOAMCALC_JSONIO_HPP
#define FOAMCALC_JSONIO_HPP

#include <fstream>

#include "json.hpp"

#include "foamcalc/complex.hpp"
#include "foamcalc/homology.hpp"

// JSON encodings of matchings, morphisms, complexes and result tables.
// Dumped complexes can be re-loaded and re-verified (d^2, degrees), which is
// the round-trip contract of --dump-complex.

namespace foamcalc {

using json = nlohmann::json;

inline json to_json(const Matching& m) {
	json j;
	j["boundary"] = json::array();
	for (int p = 0; p < m.points(); ++p)
		j["boundary"].push_back({{"idx", p}, {"dir", m.dirs[p] == Dir::in ? "in" : "out"}});
	j["arcs"] = json::array();
	for (int p = 0; p < m.points(); ++p)
		if (p < m.pair_of[p]) j["arcs"].push_back({p, m.pair_of[p]});
	j["loops"] = json::array();
	for (auto k : m.loops)
		j["loops"].push_back({{"kind", k == LoopKind::oriented ? "oriented" : "two_vertex"}});
	return j;
}

inline Matching matching_from_json(const json& j) {
	Matching m;
	m.dirs.resize(j.at("boundary").size());
	for (auto& b : j.at("boundary"))
		m.dirs.at(b.at("idx").get<int>()) = b.at("dir").get<std::string>() == "in" ? Dir::in : Dir::out;
	m.pair_of.assign(m.dirs.size(), -1);
	for (auto& a : j.at("arcs")) {
		int x = a.at(0).get<int>(), y = a.at(1).get<int>();
		m.pair_of[x] = y;
		m.pair_of[y] = x;
	}
	for (auto& l : j.at("loops"))
		m.loops.push_back(l.at("kind").get<std::string>() == "oriented" ? LoopKind::oriented
		                                                                : LoopKind::two_vertex);
	return m;
}

inline json to_json(const MorphismSum& f) {
	json terms = json::array();
	for (auto& t : f.terms) {
		json comps = json::array();
		for (auto& c : t.components) {
			json curves = json::array();
			for (auto& cr : c.curves)
				curves.push_back({{"side", cr.side == CurveRef::side_src ? "src" : "tgt"},
				                  {"kind", cr.kind == CurveRef::kind_arc ? "arc" : "loop"},
				                  {"id", cr.id}});
			comps.push_back({{"curves", curves}, {"dots", c.dots}});
		}
		terms.push_back({{"coeff", t.coeff.str()}, {"components", comps}});
	}
	return {{"src", to_json(f.src)}, {"tgt", to_json(f.tgt)}, {"terms", terms}};
}

inline MorphismSum morphism_from_json(const json& j) {
	MorphismSum f;
	f.src = matching_from_json(j.at("src"));
	f.tgt = matching_from_json(j.at("tgt"));
	for (auto& tj : j.at("terms")) {
		CobTerm t;
		t.coeff = ring_from_string(tj.at("coeff").get<std::string>());
		for (auto& cj : tj.at("components")) {
			Component c;
			c.dots = cj.at("dots").get<int>();
			for (auto& crj : cj.at("curves"))
				c.curves.push_back(
				    {crj.at("side").get<std::string>() == "src" ? CurveRef::side_src : CurveRef::side_tgt,
				     crj.at("kind").get<std::string>() == "arc" ? CurveRef::kind_arc : CurveRef::kind_loop,
				     crj.at("id").get<int>()});
			t.components.push_back(std::move(c));
		}
		f.terms.push_back(std::move(t));
	}
	canonicalize(f);
	return f;
}

inline json to_json(const FormalComplex& C) {
	json j;
	j["min_deg"] = C.min_deg;
	j["boundary"] = json::array();
	for (Dir d : C.boundary) j["boundary"].push_back(d == Dir::in ? "in" : "out");
	j["objects"] = json::array();
	for (int k = 0; k < C.levels(); ++k) {
		json level = json::array();
		for (auto& o : C.objs[k]) level.push_back({{"web", to_json(o.web)}, {"qshift", o.qshift}});
		j["objects"].push_back(level);
	}
	j["differentials"] = json::array();
	for (int k = 0; k + 1 < C.levels(); ++k) {
		json level = json::array();
		for (auto& [rc, f] : C.diffs[k])
			level.push_back({{"row", rc.first}, {"col", rc.second}, {"morphism", to_json(f)}});
		j["differentials"].push_back(level);
	}
	return j;
}

inline FormalComplex complex_from_json(const json& j) {
	FormalComplex C;
	C.min_deg = j.at("min_deg").get<int>();
	for (auto& d : j.at("boundary"))
		C.boundary.push_back(d.get<std::string>() == "in" ? Dir::in : Dir::out);
	for (auto& level : j.at("objects")) {
		C.objs.emplace_back();
		for (auto& oj : level)
			C.objs.back().push_back({matching_from_json(oj.at("web")), oj.at("qshift").get<int>()});
	}
	C.diffs.resize(C.levels() > 0 ? C.levels() - 1 : 0);
	int k = 0;
	for (auto& level : j.at("differentials")) {
		for (auto& ej : level)
			C.diffs[k][{ej.at("row").get<int>(), ej.at("col").get<int>()}] =
			    morphism_from_json(ej.at("morphism"));
		k++;
	}
	return C;
}

inline json to_json(const SimplifyStats& s) {
	json steps = json::array();
	for (auto& st : s.timeline)
		steps.push_back({{"crossing", st.crossing},
		                 {"objects_after", st.objects_after},
		                 {"wall_ms", st.wall_ms},
		                 {"deloops", st.deloops},
		                 {"eliminations", st.eliminations}});
	return {{"deloops", s.deloops},
	        {"eliminations", s.eliminations},
	        {"max_objects", s.max_objects},
	        {"timeline", steps}};
}

// ---------------------------------------------------------------------------
// result tables
// ---------------------------------------------------------------------------

inline std::string table_key(int i, int j) {
	return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

inline json to_json(const BigradedTable& t) {
	json ranks = json::object();
	for (auto& [ij, r] : t.ranks) ranks[table_key(ij.first, ij.second)] = r;
	json j = {{"ranks", ranks}, {"q_graded", t.q_graded}};
	if (!t.torsion.empty()) {
		json tor = json::object();
		for (auto& [ij, ds] : t.torsion) tor[table_key(ij.first, ij.second)] = ds;
		j["torsion"] = tor;
	}
	return j;
}

inline std::string to_csv(const BigradedTable& t) {
	std::string out = "i,j,rank\n";
	for (auto& [ij, r] : t.ranks)
		out += std::to_string(ij.first) + "," + std::to_string(ij.second) + "," + std::to_string(r) + "\n";
	return out;
}

// human table: rows homological degree, columns q degree
inline std::string to_table(const BigradedTable& t) {
	if (t.ranks.empty()) return "(zero)\n";
	int imin = 1 << 30, imax = -(1 << 30), jmin = 1 << 30, jmax = -(1 << 30);
	for (auto& [ij, r] : t.ranks) {
		imin = std::min(imin, ij.first);
		imax = std::max(imax, ij.first);
		jmin = std::min(jmin, ij.second);
		jmax = std::max(jmax, ij.second);
	}
	std::ostringstream os;
	os << "i\\j";
	for (int j = jmin; j <= jmax; ++j) os << "\t" << j;
	os << "\n";
	for (int i = imin; i <= imax; ++i) {
		os << i;
		for (int j = jmin; j <= jmax; ++j) {
			auto it = t.ranks.find({i, j});
			os << "\t" << (it == t.ranks.end() ? std::string(".") : std::to_string(it->second));
		}
		os << "\n";
	}
	if (!t.q_graded) os << "(q-grading collapsed by the specialization; shown at j=0)\n";
	for (auto& [ij, ds] : t.torsion) {
		os << "torsion at " << table_key(ij.first, ij.second) << ":";
		for (auto& d : ds) os << " " << d;
		os << "\n";
	}
	return os.str();
}

}  // namespace foamcalc

#endif
