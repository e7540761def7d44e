#include "harness/json_io.hpp"

#include "tiltkit/errors.hpp"

namespace tiltkit::io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::InvalidInput, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int parse_small(const json& j) {
  if (j.is_number_integer()) return j.get<int>();
  if (j.is_string()) return std::stoi(j.get<std::string>());
  bad("expected an integer");
}

std::pair<int, int> parse_support(const json& j) {
  const json& s = field(j, "support");
  if (!s.is_array() || s.size() != 2) bad("support must be [lo, hi]");
  return {parse_small(s[0]), parse_small(s[1])};
}

json support(int lo, int hi) { return json::array({lo, hi}); }

template <class T, class F>
std::vector<T> parse_list(const json& j, const char* key, F&& f) {
  const json& a = field(j, key);
  if (!a.is_array()) bad(std::string("\"") + key + "\" must be an array");
  std::vector<T> out;
  for (const auto& e : a) out.push_back(f(e));
  return out;
}

}  // namespace

json to_json(const Int& v) { return v.str(); }

json to_json(const IntVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

json to_json(const IntMatrix& m) {
  json a = json::array();
  for (size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

json to_json(const CanonicalForm& c) { return c.str(); }

json to_json(const FgGroup& g) {
  return {{"ambient_rank", g.ambient_rank()}, {"relations", to_json(g.relations())}, {"canonical", g.canonical().str()}};
}

json to_json(const GroupMap& f) { return {{"src", to_json(f.src())}, {"dst", to_json(f.dst())}, {"lift", to_json(f.lift())}}; }

json to_json(const BObject& x) {
  return {{"d", to_json(x.d())}, {"h_m1", x.h_m1().group().canonical().str()}, {"h_0", x.h_0().group.canonical().str()}};
}

json to_json(const Butterfly& p) {
  json j = {{"src", to_json(p.src)},     {"dst", to_json(p.dst)},     {"e", to_json(p.e)},
            {"kappa", to_json(p.kappa)}, {"iota", to_json(p.iota)},   {"sigma", to_json(p.sigma)},
            {"rho", to_json(p.rho)}};
  if (p.strict) j["strict"] = {{"m1", to_json(p.strict->m1.lift())}, {"zero", to_json(p.strict->zero.lift())}};
  return j;
}

json to_json(const ChainComplex& c) {
  json terms = json::array(), diffs = json::array();
  for (int n = c.lo(); n <= c.hi(); ++n) {
    terms.push_back(to_json(c.term(n)));
    if (n < c.hi()) diffs.push_back(to_json(c.d(n)));
  }
  return {{"support", support(c.lo(), c.hi())}, {"terms", terms}, {"differentials", diffs}};
}

json to_json(const DecComplex& d) {
  json j = to_json(d.complex());
  json deco = json::array();
  for (int n = d.lo(); n <= d.hi(); ++n) deco.push_back(to_json(d.deco(n).generators()));
  j["decoration"] = deco;
  return j;
}

json to_json(const DecMap& f) {
  json comps = json::array();
  for (int n = f.map.lo(); n <= f.map.hi(); ++n) comps.push_back(to_json(f.at(n)));
  return {{"src", to_json(f.src)}, {"dst", to_json(f.dst)}, {"lo", f.map.lo()}, {"components", comps}};
}

json to_json(const BComplex& x) {
  json objs = json::array(), diffs = json::array();
  if (!x.empty())
    for (int n = x.lo(); n <= x.hi(); ++n) {
      objs.push_back(to_json(x.object(n)));
      if (n < x.hi()) diffs.push_back(to_json(x.diff(n + 1)));
    }
  return {{"support", x.empty() ? support(0, -1) : support(x.lo(), x.hi())}, {"objects", objs}, {"differentials", diffs}};
}

json to_json(const BChainMap& f) {
  json comps = json::array();
  for (const auto& c : f.comps) comps.push_back(to_json(c));
  return {{"src", to_json(f.src)}, {"dst", to_json(f.dst)}, {"lo", f.lo}, {"components", comps}};
}

json to_json(const CObject& c) {
  return {{"e", to_json(c.e)},
          {"k1", to_json(c.k1.generators())},
          {"k2", to_json(c.k2.generators())},
          {"m", to_json(c.m.generators())}};
}

// ---------------------------------------------------------------------------------------------

Int parse_int(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (!j.is_string()) bad("integers must be decimal strings");
  try {
    return Int::parse(j.get<std::string>());
  } catch (const TiltError&) {
    throw;
  } catch (const std::exception&) {
    bad("not a decimal integer: " + j.get<std::string>());
  }
}

IntVec parse_vec(const json& j) {
  if (!j.is_array()) bad("expected an array of integers");
  IntVec v;
  for (const auto& e : j) v.push_back(parse_int(e));
  return v;
}

IntMatrix parse_matrix(const json& j) {
  if (!j.is_array()) bad("a matrix is an array of rows");
  const size_t rows = j.size();
  const size_t cols = rows == 0 ? 0 : j[0].size();
  return parse_matrix(j, rows, cols);
}

IntMatrix parse_matrix(const json& j, size_t rows, size_t cols) {
  if (!j.is_array()) bad("a matrix is an array of rows");
  IntMatrix m(rows, cols);
  if (cols == 0 && (j.empty() || j.size() == rows)) return m;
  if (j.size() != rows) bad("matrix has " + std::to_string(j.size()) + " rows, expected " + std::to_string(rows));
  for (size_t i = 0; i < rows; ++i) {
    IntVec r = parse_vec(j[i]);
    if (r.size() != cols) bad("matrix row has " + std::to_string(r.size()) + " entries, expected " + std::to_string(cols));
    for (size_t c = 0; c < cols; ++c) m(i, c) = r[c];
  }
  return m;
}

FgGroup parse_group(const json& j) {
  const size_t n = static_cast<size_t>(parse_small(field(j, "ambient_rank")));
  const json& rel = j.contains("relations") ? j.at("relations") : json::array();
  const size_t m = (n == 0 || rel.empty()) ? 0 : rel[0].size();
  return FgGroup(n, parse_matrix(rel, n, m));
}

GroupMap parse_map(const json& j) {
  FgGroup src = parse_group(field(j, "src")), dst = parse_group(field(j, "dst"));
  IntMatrix lift = parse_matrix(field(j, "lift"), dst.ambient_rank(), src.ambient_rank());
  return GroupMap(src, dst, lift);
}

Subgroup parse_subgroup(const json& j, const FgGroup& ambient) {
  const size_t cols = (ambient.ambient_rank() == 0 || j.empty()) ? 0 : j[0].size();
  return Subgroup::generated_by(ambient, parse_matrix(j, ambient.ambient_rank(), cols));
}

BObject parse_b_object(const json& j) { return validate_b_object(parse_map(field(j, "d"))); }

Butterfly parse_butterfly(const json& j) {
  BObject src = parse_b_object(field(j, "src")), dst = parse_b_object(field(j, "dst"));
  if (j.contains("strict")) {
    const json& s = j.at("strict");
    GroupMap m1(src.xm1(), dst.xm1(), parse_matrix(field(s, "m1"), dst.xm1().ambient_rank(), src.xm1().ambient_rank()));
    GroupMap zero(src.x0(), dst.x0(), parse_matrix(field(s, "zero"), dst.x0().ambient_rank(), src.x0().ambient_rank()));
    return make_strict(m1, zero, src, dst);
  }
  return make_butterfly(src, dst, parse_group(field(j, "e")), parse_map(field(j, "kappa")), parse_map(field(j, "iota")),
                        parse_map(field(j, "sigma")), parse_map(field(j, "rho")));
}

ChainComplex parse_chain_complex(const json& j) {
  auto [lo, hi] = parse_support(j);
  std::vector<FgGroup> terms = parse_list<FgGroup>(j, "terms", parse_group);
  std::vector<GroupMap> d = parse_list<GroupMap>(j, "differentials", parse_map);
  if (static_cast<int>(terms.size()) != hi - lo + 1) bad("support does not match the number of terms");
  return ChainComplex(lo, std::move(terms), std::move(d));
}

DecComplex parse_dec_complex(const json& j) {
  ChainComplex c = parse_chain_complex(j);
  const json& deco = field(j, "decoration");
  if (!deco.is_array() || deco.size() != c.length()) bad("one decoration per term is required");
  std::vector<Subgroup> m;
  for (size_t i = 0; i < deco.size(); ++i) m.push_back(parse_subgroup(deco[i], c.term(c.lo() + static_cast<int>(i))));
  return DecComplex(std::move(c), std::move(m));
}

DecMap parse_dec_map(const json& j) {
  DecComplex src = parse_dec_complex(field(j, "src")), dst = parse_dec_complex(field(j, "dst"));
  return make_dec_map(src, dst, parse_small(field(j, "lo")), parse_list<GroupMap>(j, "components", parse_map));
}

BComplex parse_b_complex(const json& j) {
  auto [lo, hi] = parse_support(j);
  std::vector<BObject> objs = parse_list<BObject>(j, "objects", parse_b_object);
  if (static_cast<int>(objs.size()) != hi - lo + 1) bad("support does not match the number of objects");
  return make_b_complex(lo, std::move(objs), parse_list<Butterfly>(j, "differentials", parse_butterfly));
}

BChainMap parse_b_chain_map(const json& j) {
  BComplex src = parse_b_complex(field(j, "src")), dst = parse_b_complex(field(j, "dst"));
  return make_b_chain_map(src, dst, parse_small(field(j, "lo")), parse_list<Butterfly>(j, "components", parse_butterfly));
}

CObject parse_c_object(const json& j) {
  FgGroup e = parse_group(field(j, "e"));
  return make_c_object(e, parse_subgroup(field(j, "k1"), e), parse_subgroup(field(j, "k2"), e),
                       parse_subgroup(field(j, "m"), e));
}

}  // namespace tiltkit::io
