#include "kustab/io.hpp"

#include <fstream>
#include <sstream>

#include "kustab/error.hpp"

namespace kustab {

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  throw InputError("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

Json to_json(const ExtRat& r) { return r.str(); }

Json to_json(const GaussRat& z) { return Json{{"re", z.re.str()}, {"im", z.im.str()}}; }

Json to_json(const Int& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return parse_int(j.get<std::string>());
  throw InputError("expected an integer, got " + j.dump());
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

IntVector int_vector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an integer array, got " + j.dump());
  IntVector out;
  for (const auto& x : j) out.push_back(int_from_json(x));
  return out;
}

RatVector rat_vector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of rationals, got " + j.dump());
  RatVector out;
  for (const auto& x : j) out.push_back(rat_from_json(x));
  return out;
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing key \"") + key + "\"");
  return *it;
}

}  // namespace

Json to_json(const ChernY& e) {
  return Json{{"basis", "Y"},
              {"ch0", e.ch0.str()},
              {"ch1", e.ch1.str()},
              {"ch2", e.ch2.str()},
              {"ch3", e.ch3 ? Json(e.ch3->str()) : Json(nullptr)}};
}

ChernY chern_y_from_json(const Json& j) {
  if (j.contains("basis") && j.at("basis") != "Y") throw InputError("expected basis \"Y\"");
  ChernY e{rat_from_json(field(j, "ch0")), rat_from_json(field(j, "ch1")), rat_from_json(field(j, "ch2")), Rat(0)};
  if (j.contains("ch3")) {
    if (j.at("ch3").is_null()) e.ch3.reset();
    else e.ch3 = rat_from_json(j.at("ch3"));
  }
  return e;
}

Json to_json(const ChernSigma& e) {
  return Json{{"basis", "Sigma"}, {"rk", e.rk.str()}, {"b1", e.b1.str()}, {"b2", e.b2.str()}, {"c", e.c.str()}};
}

ChernSigma chern_sigma_from_json(const Json& j) {
  if (j.contains("basis") && j.at("basis") != "Sigma") throw InputError("expected basis \"Sigma\"");
  return {rat_from_json(field(j, "rk")), rat_from_json(field(j, "b1")), rat_from_json(field(j, "b2")),
          rat_from_json(field(j, "c"))};
}

Json to_json(const TwistedClass& v) { return Json{{"v0", v.v0.str()}, {"v1", v.v1.str()}, {"v2", v.v2.str()}}; }

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row_vector(i)));
  return out;
}

IntMatrix int_matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected a matrix as an array of rows");
  const std::size_t n = j.size();
  const std::size_t cols = n == 0 ? 0 : (j[0].is_array() ? j[0].size() : 0);
  IntMatrix m(n, cols);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw InputError("row " + std::to_string(i) + " has " + std::to_string(j[i].is_array() ? j[i].size() : 0) +
                       " entries, expected " + std::to_string(cols));
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = int_from_json(j[i][k]);
  }
  return m;
}

Json to_json(const IntegralLattice& l) {
  Json out{{"gram", to_json(l.gram())}};
  if (!l.name().empty()) out["name"] = l.name();
  return out;
}

IntegralLattice lattice_from_json(const Json& j) {
  const IntMatrix g = int_matrix_from_json(field(j, "gram"));
  if (!g.square()) throw InputError("gram must be square");
  std::string name;
  if (j.contains("name") && !j.at("name").is_null()) name = j.at("name").get<std::string>();
  return IntegralLattice(g, name);
}

Json to_json(const EulerContext& ctx) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < ctx.size(); ++k) {
      const Rat& v = ctx.euler(i, k);
      row.push_back(v.is_integer() ? to_json(v.num()) : Json(v.str()));
    }
    rows.push_back(row);
  }
  Json out{{"basis", ctx.labels}, {"euler", rows}};
  if (ctx.classes != RatMatrix::identity(ctx.size())) {
    Json cls = Json::array();
    for (std::size_t i = 0; i < ctx.classes.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t k = 0; k < ctx.classes.cols(); ++k) row.push_back(ctx.classes(i, k).str());
      cls.push_back(row);
    }
    out["classes"] = cls;
  }
  return out;
}

EulerContext context_from_json(const Json& j) {
  const Json& basis = field(j, "basis");
  const Json& euler = field(j, "euler");
  if (!basis.is_array()) throw InputError("basis must be an array of labels");
  std::vector<std::string> labels;
  for (const auto& b : basis) labels.push_back(b.is_string() ? b.get<std::string>() : b.dump());
  const auto read = [](const Json& m, std::size_t cols, const char* what) {
    if (!m.is_array()) throw InputError(std::string(what) + " must be an array of rows");
    RatMatrix out(m.size(), cols);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i].is_array() || m[i].size() != cols)
        throw InputError(std::string(what) + " row " + std::to_string(i) + " must have " + std::to_string(cols) +
                         " entries");
      for (std::size_t k = 0; k < cols; ++k) out(i, k) = rat_from_json(m[i][k]);
    }
    return out;
  };
  RatMatrix e = read(euler, labels.size(), "euler");
  if (j.contains("classes")) {
    const Json& c = j.at("classes");
    const std::size_t cols = c.is_array() && !c.empty() && c[0].is_array() ? c[0].size() : 0;
    return EulerContext(e, labels, read(c, cols, "classes"));
  }
  return EulerContext(e, labels);
}

EtaVector eta_from_json(const Json& j) {
  EtaVector eta{lattice_from_json(field(j, "lattice")), rat_vector_from_json(field(j, "re")),
                rat_vector_from_json(field(j, "im"))};
  if (eta.re.size() != eta.lattice.rank() || eta.im.size() != eta.lattice.rank())
    throw InputError("re and im must have length " + std::to_string(eta.lattice.rank()));
  return eta;
}

Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(Json{{"id", c.id}, {"statement", c.statement}, {"passed", c.passed}, {"detail", c.detail}});
  return Json{{"title", r.title}, {"passed", r.all_passed()}, {"checks", checks}, {"notes", r.notes}};
}

Json to_json(const MukaiVector& v) { return Json::array({v.a, v.b}); }

Json to_json(const ModuliReport& r) {
  Json out{{"v", to_json(r.v)},
           {"square", to_json(r.square)},
           {"dimension", to_json(r.dimension)},
           {"degree", to_json(r.degree)},
           {"divisibility", to_json(r.divisibility)},
           {"lattice_divisibility", to_json(r.lattice_divisibility)},
           {"polarization", to_json(r.polarization)},
           {"involution", Json{{"modulus", to_json(r.involution.modulus)}, {"witness", to_json(r.involution.witness)}}},
           {"discriminant_orders", Json{{"primitive", to_json(r.prim_discriminant_order)},
                                        {"h", to_json(r.h_discriminant_order)},
                                        {"h2", to_json(r.h2_discriminant_order)}}},
           {"index", to_json(r.index)},
           {"label", r.label},
           {"convention", r.convention}};
  if (!r.candidates.empty()) out["candidates"] = r.candidates;
  return out;
}

Json to_json(const WallSolution& w) {
  return Json{{"w", to_json(w.destabilizer)},
              {"alpha_sq", w.alpha_sq_root ? Json(w.alpha_sq_root->str()) : Json(nullptr)},
              {"in_window", w.in_window}};
}

Json to_json(const Enumeration& e) {
  Json vs = Json::array();
  for (const auto& v : e.vectors) vs.push_back(to_json(v));
  Json out{{"count", e.vectors.size()}, {"vectors", vs}, {"certified", e.certified}};
  if (e.certified) out["coordinate_bounds"] = e.coordinate_bounds;
  else out["bound_used"] = e.bound_used;
  return out;
}

Json to_json(const CriterionResult& r) {
  Json w = Json::array();
  for (const auto& v : r.witness) w.push_back(to_json(v));
  return Json{{"status", to_string(r.status)}, {"witness", w}, {"method", r.method},
              {"bound_used", r.bound_used}, {"note", r.note}};
}

Json to_json(const P0Result& r) {
  Json out{{"status", to_string(r.status)}, {"in_P", r.in_p}, {"complement_rank", r.complement_rank}};
  if (r.obstruction) out["obstruction"] = to_json(*r.obstruction);
  if (r.status == Membership::in_within_bound) out["bound_used"] = r.bound_used;
  return out;
}

Json to_json(const PeriodDivisorLabel& l) {
  return Json{{"d", l.d}, {"status", to_string(l.status)}, {"components", l.components}};
}

Json to_json(const StarStarPrime& s) {
  Json f = Json::array();
  for (const auto& [p, e] : s.factorization) f.push_back(Json::array({p, e}));
  return Json{{"holds", s.holds}, {"factorization", f}};
}

Json to_json(const H2Structure& h) {
  Json out{{"quotient", h.quotient}, {"rank", h.lattice.rank()}, {"gram", to_json(h.lattice.gram())},
           {"basis", to_json(h.basis)}};
  out["discriminant_group"] = to_json(IntVector(h.discriminant.begin(), h.discriminant.end()));
  return out;
}

std::string io_roundtrip(const std::string& document) {
  const Json j = parse_json(document);
  if (!j.is_object()) throw InputError("expected a JSON object at the top level");
  Json out;
  if (j.contains("gram")) {
    out = to_json(lattice_from_json(j));
  } else if (j.contains("euler")) {
    out = to_json(context_from_json(j));
  } else if (j.contains("ch0") || (j.contains("basis") && j.at("basis") == "Y")) {
    out = to_json(chern_y_from_json(j));
  } else if (j.contains("rk") || (j.contains("basis") && j.at("basis") == "Sigma")) {
    out = to_json(chern_sigma_from_json(j));
  } else {
    throw InputError("unrecognized document: expected a lattice, an Euler context, or a Chern character");
  }
  return out.dump(2);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace kustab
