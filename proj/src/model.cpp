#include "cyspec/model.hpp"

#include <algorithm>
#include <map>
#include "json.hpp"
#include <set>

#include "cyspec/errors.hpp"

namespace cyspec {

using nlohmann::json;

std::string to_string(BaseKind k) {
  switch (k) {
    case BaseKind::p2: return "p2";
    case BaseKind::hirzebruch: return "hirzebruch";
    case BaseKind::generic_rational: return "generic_rational";
    case BaseKind::enriques: return "enriques";
    case BaseKind::rational_with_quotient_points: return "rational_with_quotient_points";
  }
  return "?";
}

std::string to_string(Severity s) { return s == Severity::error ? "error" : "warning"; }

const DiscriminantComponent* FibrationModel::component(const std::string& id) const {
  for (const auto& c : components)
    if (c.id == id) return &c;
  return nullptr;
}

namespace {

std::string child(const std::string& ptr, const std::string& key) {
  std::string k;
  for (char c : key) {
    if (c == '~') k += "~0";
    else if (c == '/') k += "~1";
    else k += c;
  }
  return ptr + "/" + k;
}

std::string child(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

[[noreturn]] void fail(const std::string& ptr, const std::string& msg) { throw ParseError(msg, ptr.empty() ? "/" : ptr); }

const json& object(const json& j, const std::string& ptr, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(ptr, "expected an object");
  for (const auto& [k, v] : j.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; }))
      fail(child(ptr, k), "unknown field '" + k + "'");
  }
  return j;
}

const json& array(const json& j, const std::string& ptr) {
  if (!j.is_array()) fail(ptr, "expected an array");
  return j;
}

std::int64_t integer(const json& j, const std::string& ptr, std::optional<std::int64_t> min = std::nullopt) {
  if (!j.is_number_integer()) fail(ptr, "expected an integer");
  const auto v = j.get<std::int64_t>();
  if (min && v < *min) fail(ptr, "must be at least " + std::to_string(*min));
  return v;
}

int small_int(const json& j, const std::string& ptr, std::optional<std::int64_t> min = std::nullopt) {
  const auto v = integer(j, ptr, min);
  if (v > 1000000000 || v < -1000000000) fail(ptr, "integer out of range");
  return static_cast<int>(v);
}

std::string string(const json& j, const std::string& ptr) {
  if (!j.is_string()) fail(ptr, "expected a string");
  return j.get<std::string>();
}

bool boolean(const json& j, const std::string& ptr) {
  if (!j.is_boolean()) fail(ptr, "expected true or false");
  return j.get<bool>();
}

const json& required(const json& obj, const char* key, const std::string& ptr) {
  if (!obj.contains(key)) fail(ptr, std::string("missing field '") + key + "'");
  return obj.at(key);
}

BaseKind parse_kind(const std::string& s, const std::string& ptr) {
  for (auto k : {BaseKind::p2, BaseKind::hirzebruch, BaseKind::generic_rational, BaseKind::enriques,
                 BaseKind::rational_with_quotient_points})
    if (to_string(k) == s) return k;
  fail(ptr, "unknown base kind '" + s + "'");
}

BaseSurface parse_base(const json& j, const std::string& ptr) {
  object(j, ptr, {"kind", "n", "h11", "k2", "quotient_points"});
  BaseSurface b;
  b.kind = parse_kind(string(required(j, "kind", ptr), child(ptr, "kind")), child(ptr, "kind"));
  if (j.contains("n")) {
    if (b.kind != BaseKind::hirzebruch) fail(child(ptr, "n"), "'n' is only meaningful for a hirzebruch base");
    b.n = small_int(j["n"], child(ptr, "n"));
  } else if (b.kind == BaseKind::hirzebruch) {
    fail(ptr, "missing field 'n'");
  }
  const bool fixed = b.kind == BaseKind::p2 || b.kind == BaseKind::hirzebruch || b.kind == BaseKind::enriques;
  const int h11_default = b.kind == BaseKind::p2 ? 1 : b.kind == BaseKind::hirzebruch ? 2 : 10;
  const int k2_default = b.kind == BaseKind::p2 ? 9 : b.kind == BaseKind::hirzebruch ? 8 : 0;
  if (j.contains("h11")) b.h11 = small_int(j["h11"], child(ptr, "h11"));
  else if (fixed) b.h11 = h11_default;
  else fail(ptr, "missing field 'h11'");
  if (j.contains("k2")) b.k2 = integer(j["k2"], child(ptr, "k2"));
  else if (fixed) b.k2 = k2_default;
  else fail(ptr, "missing field 'k2'");
  if (j.contains("quotient_points")) {
    const auto qp = child(ptr, "quotient_points");
    const auto& arr = array(j["quotient_points"], qp);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto p = child(qp, i);
      object(arr[i], p, {"m", "count"});
      QuotientPoint q;
      q.m = small_int(required(arr[i], "m", p), child(p, "m"), 1);
      q.count = small_int(required(arr[i], "count", p), child(p, "count"), 1);
      b.quotient_points.push_back(q);
    }
  }
  return b;
}

DiscriminantComponent parse_component(const json& j, const std::string& ptr) {
  object(j, ptr, {"id", "genus", "cover_genus", "fiber", "monodromy"});
  DiscriminantComponent c;
  c.id = string(required(j, "id", ptr), child(ptr, "id"));
  c.genus = small_int(required(j, "genus", ptr), child(ptr, "genus"), 0);
  try {
    c.fiber = parse_fiber(string(required(j, "fiber", ptr), child(ptr, "fiber")));
  } catch (const UnknownFiberError& e) {
    fail(child(ptr, "fiber"), e.what());
  }
  if (j.contains("monodromy")) {
    try {
      c.monodromy = parse_monodromy(string(j["monodromy"], child(ptr, "monodromy")));
    } catch (const UnknownFiberError& e) {
      fail(child(ptr, "monodromy"), e.what());
    }
  }
  FiberRecord rec;
  try {
    rec = c.record();
  } catch (const UnknownFiberError& e) {
    fail(j.contains("monodromy") ? child(ptr, "monodromy") : child(ptr, "fiber"), e.what());
  }
  if (j.contains("cover_genus")) {
    c.cover_genus = small_int(j["cover_genus"], child(ptr, "cover_genus"), 0);
  } else if (!simply_laced(rec.algebra)) {
    fail(ptr, "missing field 'cover_genus' (required for " + to_string(rec.algebra) + ")");
  } else {
    c.cover_genus = c.genus;
  }
  return c;
}

MatterPoint parse_matter(const json& j, const std::string& ptr, const std::set<std::string>& ids) {
  object(j, ptr, {"id", "on", "rep", "count", "c_q"});
  MatterPoint p;
  p.id = string(required(j, "id", ptr), child(ptr, "id"));
  if (j.contains("on")) {
    const auto op = child(ptr, "on");
    const auto& arr = array(j["on"], op);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      auto id = string(arr[i], child(op, i));
      if (!ids.count(id)) fail(child(op, i), "no component with id '" + id + "'");
      p.on.push_back(std::move(id));
    }
  }
  if (j.contains("rep")) {
    const auto rp = child(ptr, "rep");
    const auto& r = j["rep"];
    if (r.is_string()) {
      const auto s = r.get<std::string>();
      if (s == "Q1") p.rep = Slot::Q1;
      else if (s == "Q2") p.rep = Slot::Q2;
      else fail(rp, "expected \"Q1\", \"Q2\" or a list of representations");
      if (p.on.empty()) fail(rp, "a table slot needs a component in 'on'");
    } else {
      const auto& arr = array(r, rp);
      std::vector<ExplicitRep> reps;
      for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto ep = child(rp, i);
        object(arr[i], ep, {"component", "label"});
        ExplicitRep e;
        e.component = string(required(arr[i], "component", ep), child(ep, "component"));
        if (std::find(p.on.begin(), p.on.end(), e.component) == p.on.end())
          fail(child(ep, "component"), "component '" + e.component + "' is not listed in 'on'");
        const auto text = string(required(arr[i], "label", ep), child(ep, "label"));
        RepSum sum;
        try {
          sum = parse_rep_sum(text);
        } catch (const Error& err) {
          fail(child(ep, "label"), err.what());
        }
        if (sum.size() != 1) fail(child(ep, "label"), "expected a single representation label");
        e.label = sum.front();
        reps.push_back(std::move(e));
      }
      if (reps.empty()) fail(rp, "empty representation list");
      p.rep = std::move(reps);
    }
  }
  if (j.contains("count")) p.count = integer(j["count"], child(ptr, "count"), 1);
  if (j.contains("c_q")) p.c_q = integer(j["c_q"], child(ptr, "c_q"), 0);
  return p;
}

TerminalSingularity parse_singularity(const json& j, const std::string& ptr) {
  object(j, ptr, {"id", "poly", "milnor"});
  TerminalSingularity s;
  s.id = string(required(j, "id", ptr), child(ptr, "id"));
  if (j.contains("poly") == j.contains("milnor")) fail(ptr, "exactly one of 'poly' and 'milnor' is required");
  if (j.contains("milnor")) {
    s.milnor = small_int(j["milnor"], child(ptr, "milnor"), 1);
  } else {
    const auto pp = child(ptr, "poly");
    try {
      s.poly = to_string(parse_poly(string(j["poly"], pp)));
    } catch (const ParseError& e) {
      fail(pp, e.what());
    } catch (const Error& e) {
      fail(pp, e.what());
    }
  }
  return s;
}

template <class T>
void unique_ids(const std::vector<T>& items, const std::string& ptr, std::set<std::string>& seen) {
  for (std::size_t i = 0; i < items.size(); ++i)
    if (!seen.insert(items[i].id).second) fail(child(child(ptr, i), "id"), "duplicate id '" + items[i].id + "'");
}

}  // namespace

FibrationModel parse_model(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), "byte " + std::to_string(e.byte));
  }
  return parse_model(doc);
}

FibrationModel parse_model(const json& doc) {
  object(doc, "", {"base", "components", "matter", "singularities", "topology", "mordell_weil", "multisection_index",
                   "multiple_fibers_disjoint", "table_milnor"});
  FibrationModel m;
  m.base = parse_base(required(doc, "base", ""), "/base");

  std::set<std::string> ids;
  if (doc.contains("components")) {
    const auto& arr = array(doc["components"], "/components");
    for (std::size_t i = 0; i < arr.size(); ++i) m.components.push_back(parse_component(arr[i], child("/components", i)));
    unique_ids(m.components, "/components", ids);
  }
  if (doc.contains("matter")) {
    const auto& arr = array(doc["matter"], "/matter");
    for (std::size_t i = 0; i < arr.size(); ++i) m.matter.push_back(parse_matter(arr[i], child("/matter", i), ids));
    std::set<std::string> mids;
    unique_ids(m.matter, "/matter", mids);
  }
  if (doc.contains("singularities")) {
    const auto& arr = array(doc["singularities"], "/singularities");
    for (std::size_t i = 0; i < arr.size(); ++i)
      m.singularities.push_back(parse_singularity(arr[i], child("/singularities", i)));
    std::set<std::string> sids;
    unique_ids(m.singularities, "/singularities", sids);
  }

  const auto& topo = required(doc, "topology", "");
  object(topo, "/topology", {"h11_x", "b3_x", "chi_top"});
  m.topology.h11_x = small_int(required(topo, "h11_x", "/topology"), "/topology/h11_x", 1);
  m.topology.b3_x = integer(required(topo, "b3_x", "/topology"), "/topology/b3_x", 0);
  if (topo.contains("chi_top")) m.topology.chi_top = integer(topo["chi_top"], "/topology/chi_top");

  if (doc.contains("mordell_weil")) {
    const auto& mw = doc["mordell_weil"];
    object(mw, "/mordell_weil", {"rank", "torsion"});
    MordellWeil v;
    if (mw.contains("rank")) v.rank = small_int(mw["rank"], "/mordell_weil/rank", 0);
    if (mw.contains("torsion")) {
      const auto& t = array(mw["torsion"], "/mordell_weil/torsion");
      if (t.size() != 2) fail("/mordell_weil/torsion", "expected [n1, n2]");
      v.torsion_n1 = small_int(t[0], "/mordell_weil/torsion/0");
      v.torsion_n2 = small_int(t[1], "/mordell_weil/torsion/1");
    }
    m.mordell_weil = v;
  }
  if (doc.contains("multisection_index"))
    m.multisection_index = small_int(doc["multisection_index"], "/multisection_index");
  if (doc.contains("multiple_fibers_disjoint"))
    m.multiple_fibers_disjoint = boolean(doc["multiple_fibers_disjoint"], "/multiple_fibers_disjoint");
  if (doc.contains("table_milnor")) m.table_milnor = boolean(doc["table_milnor"], "/table_milnor");
  return m;
}

json serialize_model(const FibrationModel& m) {
  json doc = json::object();
  json base = {{"kind", to_string(m.base.kind)}, {"h11", m.base.h11}, {"k2", m.base.k2}};
  if (m.base.kind == BaseKind::hirzebruch) base["n"] = m.base.n;
  base["quotient_points"] = json::array();
  for (const auto& q : m.base.quotient_points) base["quotient_points"].push_back({{"m", q.m}, {"count", q.count}});
  doc["base"] = base;

  doc["components"] = json::array();
  for (const auto& c : m.components)
    doc["components"].push_back({{"id", c.id},
                                 {"genus", c.genus},
                                 {"cover_genus", c.cover_genus},
                                 {"fiber", to_string(c.fiber)},
                                 {"monodromy", to_string(c.monodromy)}});

  doc["matter"] = json::array();
  for (const auto& p : m.matter) {
    json j = {{"id", p.id}, {"on", p.on}, {"count", p.count}, {"c_q", p.c_q}};
    if (const auto* s = std::get_if<Slot>(&p.rep)) {
      j["rep"] = *s == Slot::Q1 ? "Q1" : "Q2";
    } else if (const auto* e = std::get_if<std::vector<ExplicitRep>>(&p.rep)) {
      j["rep"] = json::array();
      for (const auto& r : *e) j["rep"].push_back({{"component", r.component}, {"label", to_string(r.label)}});
    }
    doc["matter"].push_back(j);
  }

  doc["singularities"] = json::array();
  for (const auto& s : m.singularities) {
    json j = {{"id", s.id}};
    if (s.poly) j["poly"] = *s.poly;
    if (s.milnor) j["milnor"] = *s.milnor;
    doc["singularities"].push_back(j);
  }

  json topo = {{"h11_x", m.topology.h11_x}, {"b3_x", m.topology.b3_x}};
  if (m.topology.chi_top) topo["chi_top"] = *m.topology.chi_top;
  doc["topology"] = topo;
  if (m.mordell_weil)
    doc["mordell_weil"] = {{"rank", m.mordell_weil->rank},
                           {"torsion", {m.mordell_weil->torsion_n1, m.mordell_weil->torsion_n2}}};
  if (m.multisection_index) doc["multisection_index"] = *m.multisection_index;
  doc["multiple_fibers_disjoint"] = m.multiple_fibers_disjoint;
  doc["table_milnor"] = m.table_milnor;
  return doc;
}

std::vector<int> singularity_milnor(const FibrationModel& m, const MilnorOptions& opts) {
  std::vector<int> out;
  for (const auto& s : m.singularities) out.push_back(s.milnor ? *s.milnor : milnor_number(parse_poly(*s.poly), opts));
  return out;
}

std::int64_t table_milnor_total(const FibrationModel& m) {
  if (!m.table_milnor) return 0;
  std::int64_t total = 0;
  for (const auto& p : m.matter) {
    const auto* s = std::get_if<Slot>(&p.rep);
    if (!s) continue;
    const auto rec = m.component(p.on.front())->record();
    total += p.count * (*s == Slot::Q1 ? rec.mP1 : rec.mP2);
  }
  return total;
}

std::int64_t total_milnor(const FibrationModel& m, const MilnorOptions& opts) {
  std::int64_t total = table_milnor_total(m);
  for (int v : singularity_milnor(m, opts)) total += v;
  return total;
}

GaugeAlgebra gauge_algebra_of(const FibrationModel& m) {
  GaugeAlgebra g;
  for (const auto& c : m.components) {
    const auto a = c.record().algebra;
    if (a.family != Family::trivial) g.nonabelian_factors.push_back(a);
  }
  g.abelian_rank = m.mw().rank;
  return g;
}

Rational matter_charged_dim(const FibrationModel& m, const MatterPoint& p) {
  if (const auto* s = std::get_if<Slot>(&p.rep)) {
    const auto rec = m.component(p.on.front())->record();
    const auto& slot = *s == Slot::Q1 ? rec.rhoQ1 : rec.rhoQ2;
    return slot ? charged_dim(rec.algebra, *slot) : Rational(0);
  }
  if (const auto* e = std::get_if<std::vector<ExplicitRep>>(&p.rep)) {
    if (e->size() == 1) return charged_dim(m.component(e->front().component)->record().algebra, e->front().label);
    // Tensor product over distinct factors: a weight is zero only when every
    // factor weight is zero.
    BigInt dim = 1, zero = 1;
    Rational factor = 1;
    std::set<std::string> seen;
    for (const auto& r : *e) {
      if (!seen.insert(r.component).second)
        throw UnsupportedRepresentationError("component '" + r.component + "' appears twice in one tensor product");
      const auto a = m.component(r.component)->record().algebra;
      const auto ws = weight_system(a, r.label);
      dim *= static_cast<std::int64_t>(ws.dimension());
      zero *= static_cast<std::int64_t>(ws.zero_weight_multiplicity());
      factor *= dim_rep(a, r.label) / Rational(static_cast<std::int64_t>(ws.dimension()));
    }
    return Rational(dim - zero) * factor;
  }
  return 0;
}

bool has_errors(const std::vector<Violation>& v) {
  return std::any_of(v.begin(), v.end(), [](const Violation& x) { return x.severity == Severity::error; });
}

std::vector<Violation> validate(const FibrationModel& m, const MilnorOptions& opts) {
  std::vector<Violation> out;
  const auto err = [&](std::string rule, std::string loc, std::string msg) {
    out.push_back({std::move(rule), Severity::error, std::move(loc), std::move(msg)});
  };
  const auto warn = [&](std::string rule, std::string loc, std::string msg) {
    out.push_back({std::move(rule), Severity::warning, std::move(loc), std::move(msg)});
  };
  const auto& b = m.base;

  // Base surface invariants.
  const auto fixed = [&](int h11, std::int64_t k2, const char* name) {
    if (b.h11 != h11 || b.k2 != k2)
      err("base-invariants", "/base",
          std::string(name) + " base has h11 = " + std::to_string(h11) + " and K^2 = " + std::to_string(k2) +
              ", got " + std::to_string(b.h11) + " and " + std::to_string(b.k2));
  };
  if (b.kind == BaseKind::p2) fixed(1, 9, "P2");
  if (b.kind == BaseKind::hirzebruch) {
    fixed(2, 8, "Hirzebruch");
    if (b.n < 0 || b.n > 12) err("base-invariants", "/base/n", "Hirzebruch index must lie in 0..12");
  }
  if (b.kind == BaseKind::enriques) fixed(10, 0, "Enriques");
  if (b.h11 < 1) err("base-invariants", "/base/h11", "h11 of the base must be positive");
  if (b.rational()) {
    // Noether for a rational surface with A_m points: K^2 = 10 - h11 - sum n_i m_i.
    std::int64_t expect = 10 - b.h11;
    for (const auto& q : b.quotient_points) expect -= static_cast<std::int64_t>(q.count) * q.m;
    if (b.k2 != expect)
      warn("base-noether", "/base/k2",
           "a rational base with these data has K^2 = " + std::to_string(expect) + ", got " + std::to_string(b.k2));
  }
  if (!b.quotient_points.empty()) {
    if (b.kind != BaseKind::rational_with_quotient_points)
      err("quotient-points-kind", "/base/quotient_points", "quotient points need kind rational_with_quotient_points");
    if (!m.multiple_fibers_disjoint)
      err("multiple-fibers-disjoint", "/multiple_fibers_disjoint",
          "multiple fibers must lie over points disjoint from the discriminant components");
  }

  // Hodge numbers.
  if (m.topology.h11_x < b.h11 + 1)
    err("hodge-injectivity", "/topology/h11_x",
        "h11(X) = " + std::to_string(m.topology.h11_x) + " < h11(B) + 1 = " + std::to_string(b.h11 + 1));

  // Milnor numbers and the parity of b3 + sum m.
  std::int64_t sum_m = table_milnor_total(m);
  bool milnor_ok = true;
  for (std::size_t i = 0; i < m.singularities.size(); ++i) {
    const auto& s = m.singularities[i];
    if (s.milnor) {
      sum_m += *s.milnor;
      continue;
    }
    try {
      sum_m += milnor_number(parse_poly(*s.poly), opts);
    } catch (const MilnorInconclusiveError& e) {
      milnor_ok = false;
      err("milnor-inconclusive", "/singularities/" + std::to_string(i) + "/poly", e.what());
    }
  }
  if (milnor_ok && (m.topology.b3_x + sum_m) % 2 != 0)
    err("parity", "/topology/b3_x",
        "b3 + sum of Milnor numbers = " + std::to_string(m.topology.b3_x + sum_m) +
            " is odd, so the neutral hypermultiplet count is not an integer");

  // Enriques base: isotrivial fibration, no gauge algebra, chi expected 0.
  if (b.kind == BaseKind::enriques) {
    for (std::size_t i = 0; i < m.components.size(); ++i)
      if (m.components[i].record().algebra.family != Family::trivial)
        err("enriques-isotrivial", "/components/" + std::to_string(i),
            "an Enriques base forces an isotrivial fibration without nonabelian gauge algebra");
    if (m.mw().rank != 0)
      err("enriques-isotrivial", "/mordell_weil/rank", "an Enriques base forces trivial gauge algebra, so MW rank 0");
    if (m.topology.chi_top && *m.topology.chi_top != 0)
      warn("enriques-euler", "/topology/chi_top", "an Enriques base gives chi_top = 0");
  }

  // Components.
  int total_rank = 0;
  for (std::size_t i = 0; i < m.components.size(); ++i) {
    const auto& c = m.components[i];
    const auto loc = "/components/" + std::to_string(i) + "/cover_genus";
    const auto a = c.record().algebra;
    total_rank += rank_algebra(a);
    if (c.cover_genus < c.genus) err("cover-genus", loc, "the monodromy cover has genus below the curve's");
    if (simply_laced(a) && c.cover_genus != c.genus)
      err("cover-genus", loc, "a simply-laced algebra has no monodromy cover, so cover_genus must equal genus");
  }
  if (total_rank >= m.topology.h11_x)
    err("rank-bound", "/topology/h11_x",
        "sum of gauge ranks " + std::to_string(total_rank) + " is not below rk Pic(X) = h11(X) = " +
            std::to_string(m.topology.h11_x));

  // Matter representations.
  for (std::size_t i = 0; i < m.matter.size(); ++i) {
    try {
      (void)matter_charged_dim(m, m.matter[i]);
    } catch (const Error& e) {
      err("representation", "/matter/" + std::to_string(i) + "/rep", e.what());
    }
  }

  // Mordell-Weil and multisection data.
  if (m.mordell_weil && (m.mordell_weil->torsion_n1 < 1 || m.mordell_weil->torsion_n2 < 1))
    err("torsion-entries", "/mordell_weil/torsion", "torsion factors are positive integers (1 = trivial)");
  if (m.multisection_index && *m.multisection_index < 1)
    err("multisection-index", "/multisection_index", "the multisection index is a positive integer");
  return out;
}

}  // namespace cyspec
