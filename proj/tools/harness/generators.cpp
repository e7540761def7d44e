#include "harness/generators.hpp"

#include <algorithm>

#include "tiltkit/errors.hpp"

namespace tiltkit::harness {

namespace {

uint64_t splitmix(uint64_t& x) {
  uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

std::mt19937_64 engine(uint64_t seed, const std::string& stream, uint64_t index) {
  uint64_t x = seed ^ fnv1a(stream);
  x = splitmix(x) ^ index;
  std::seed_seq seq{splitmix(x), splitmix(x), splitmix(x), splitmix(x)};
  return std::mt19937_64(seq);
}

}  // namespace

void GeneratorConfig::validate() const {
  if (max_ambient_rank == 0 || max_relations == 0 || entry_bound <= 0 || max_complex_length == 0 || trials == 0)
    fail(ErrorKind::InvalidInput, "generator bounds must be positive");
}

Gen::Gen(const GeneratorConfig& cfg, const std::string& stream, uint64_t index)
    : cfg_(cfg), eng_(engine(cfg.seed, stream, index)) {}

long long Gen::range(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(eng_); }

IntMatrix Gen::matrix(size_t rows, size_t cols, long long bound) {
  IntMatrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) m(i, j) = range(-bound, bound);
  return m;
}

IntVec Gen::vec(size_t n, long long bound) {
  IntVec v(n);
  for (auto& x : v) x = range(-bound, bound);
  return v;
}

FgGroup Gen::group() { return group(cfg_.max_ambient_rank, cfg_.max_relations); }

FgGroup Gen::group(size_t max_rank, size_t max_rels) {
  const size_t n = static_cast<size_t>(range(0, static_cast<long long>(std::min(max_rank, cfg_.max_ambient_rank))));
  const size_t m = static_cast<size_t>(range(0, static_cast<long long>(std::min(max_rels, cfg_.max_relations))));
  return FgGroup(n, matrix(n, m, cfg_.entry_bound));
}

FgGroup Gen::torsion_group() {
  const size_t top = std::min(cfg_.max_ambient_rank, cfg_.max_relations);
  for (;;) {
    const size_t n = static_cast<size_t>(range(0, static_cast<long long>(top)));
    const size_t m = std::min(n + static_cast<size_t>(range(0, 1)), cfg_.max_relations);
    FgGroup g(n, matrix(n, m, cfg_.entry_bound));
    if (g.in_T()) return g;
  }
}

FgGroup Gen::free_group() {
  const size_t n = static_cast<size_t>(range(0, static_cast<long long>(cfg_.max_ambient_rank)));
  // a unimodular change of basis applied to a coordinate sublattice
  IntMatrix u = IntMatrix::identity(n);
  for (int k = 0; k < 6 && n > 1; ++k) {
    const size_t i = static_cast<size_t>(range(0, static_cast<long long>(n - 1)));
    const size_t j = static_cast<size_t>(range(0, static_cast<long long>(n - 1)));
    if (i == j) continue;
    const Int q = range(-3, 3);
    for (size_t c = 0; c < n; ++c) u(i, c) += q * u(j, c);
  }
  return FgGroup(n, u.col_range(0, static_cast<size_t>(range(0, static_cast<long long>(n)))));
}

Subgroup Gen::subgroup(const FgGroup& g) {
  switch (range(0, 3)) {
    case 0: return Subgroup::zero(g);
    case 1: return Subgroup::whole(g);
    default: return Subgroup::generated_by(g, matrix(g.ambient_rank(), static_cast<size_t>(range(1, 2)), 3));
  }
}

GroupMap Gen::map(const FgGroup& src, const FgGroup& dst, long long bound) {
  HomGroup h(src, dst);
  return h.element(vec(h.size(), bound));
}

BObject Gen::b_object() {
  for (;;) {
    FgGroup x0 = group(cfg_.max_ambient_rank, cfg_.max_relations);
    FgGroup xm1 = group(cfg_.max_ambient_rank, 2);
    BObject x = BObject::unchecked(map(xm1, x0, 4));
    if (x.h_m1().group().in_F() && x.h_0().group.in_T()) return x;
  }
}

std::vector<GroupMap> Gen::solution(const LinearMapSystem& sys, long long bound) {
  LinearMapSolution sol = sys.solve();
  const IntMatrix& k = sol.homogeneous();
  IntVec c(sol.total());
  for (size_t j = 0; j < k.cols(); ++j) {
    const Int r = range(-bound, bound);
    for (size_t i = 0; i < c.size(); ++i) c[i] += r * k(i, j);
  }
  return sol.maps_from(c);
}

StrictParts Gen::chain_map(const BObject& x, const BObject& y) {
  LinearMapSystem sys;
  const size_t a = sys.add_unknown(x.xm1(), y.xm1());
  const size_t b = sys.add_unknown(x.x0(), y.x0());
  sys.add_equation({MapTerm{y.d(), a, std::nullopt, 1}, MapTerm{std::nullopt, b, x.d(), -1}});
  auto maps = solution(sys, 3);
  return StrictParts{maps[0], maps[1]};
}

Butterfly Gen::strict(const BObject& x, const BObject& y) {
  StrictParts f = chain_map(x, y);
  return make_strict(f.m1, f.zero, x, y);
}

Butterfly Gen::butterfly(const BObject& x, const BObject& y) {
  SemiProjective p = semi_projective_replace(x);
  return compose(flip(p.iso), strict(p.object, y));
}

Butterfly Gen::any_morphism(const BObject& x, const BObject& y) {
  const long long r = range(0, 99);
  if (r < 10) return zero_b(x, y);
  if (r < 35) return strict(x, y);
  if (r < 85 || x != y) return butterfly(x, y);
  // automorphisms: ±1 or an inverse pair through a roof
  Butterfly id = identity_b(x);
  if (coin()) return coin() ? id : negate(id);
  Roof rf = roof(id);
  return compose(flip(rf.s), rf.s);
}

IntVec Gen::kernel_element(const GroupMap& f) {
  Subgroup k = kernel(f);
  IntMatrix g = k.generators();
  return g * vec(g.cols(), 3);
}

ChainComplex Gen::complex(int lo, size_t len) {
  std::vector<FgGroup> t;
  std::vector<GroupMap> d;
  for (size_t i = 0; i < len; ++i) t.push_back(group(std::min<size_t>(cfg_.max_ambient_rank, 2), cfg_.max_relations));
  for (size_t i = 0; i + 1 < len; ++i) {
    LinearMapSystem sys;
    const size_t u = sys.add_unknown(t[i], t[i + 1]);
    if (i > 0) sys.add_equation({MapTerm{std::nullopt, u, d.back()}});
    d.push_back(solution(sys, 3)[0]);
  }
  return ChainComplex(lo, std::move(t), std::move(d));
}

BComplex Gen::b_complex(size_t max_len) {
  const size_t len = static_cast<size_t>(range(1, static_cast<long long>(std::min(max_len, cfg_.max_complex_length))));
  const int lo = static_cast<int>(range(-1, 1));
  std::vector<BObject> objs;
  for (size_t i = 0; i < len; ++i) objs.push_back(b_object());
  // strict differentials whose composites vanish as chain maps
  std::vector<StrictParts> parts;
  std::vector<Butterfly> diffs;
  for (size_t i = 0; i + 1 < len; ++i) {
    const BObject &x = objs[i], &y = objs[i + 1];
    LinearMapSystem sys;
    const size_t a = sys.add_unknown(x.xm1(), y.xm1());
    const size_t b = sys.add_unknown(x.x0(), y.x0());
    sys.add_equation({MapTerm{y.d(), a, std::nullopt, 1}, MapTerm{std::nullopt, b, x.d(), -1}});
    if (i > 0) {
      sys.add_equation({MapTerm{std::nullopt, a, parts.back().m1}});
      sys.add_equation({MapTerm{std::nullopt, b, parts.back().zero}});
    }
    auto maps = solution(sys, 3);
    parts.push_back(StrictParts{maps[0], maps[1]});
    diffs.push_back(make_strict(maps[0], maps[1], x, y));
  }
  BComplex x = make_b_complex(lo, std::move(objs), std::move(diffs));
  // half of the time, move to semi-projective replacements, whose differentials are not strict
  if (coin()) return semi_projective_resolution(x).complex;
  return x;
}

DecComplex Gen::arbitrary_complex(size_t max_len) {
  const size_t len = static_cast<size_t>(range(1, static_cast<long long>(std::min(max_len, cfg_.max_complex_length))));
  ChainComplex c = complex(static_cast<int>(range(-1, 1)), len);
  std::vector<Subgroup> m;
  for (int n = c.lo(); n <= c.hi(); ++n) m.push_back(subgroup(c.term(n)));
  return DecComplex(std::move(c), std::move(m));
}

DecComplex Gen::compatible_complex(size_t max_len) {
  if (coin(30))
    for (int tries = 0; tries < 50; ++tries) {
      DecComplex d = arbitrary_complex(max_len);
      if (is_compatible(d)) return d;
    }
  // Tot of a B-complex has one more term than the complex
  return tot(b_complex(std::max<size_t>(1, max_len - 1)));
}

DecMap Gen::dec_map(const DecComplex& x, const DecComplex& y) {
  auto [a, b] = joint_range(x.complex(), y.complex());
  LinearMapSystem sys;
  for (int n = a; n <= b; ++n) sys.add_unknown(x.term(n), y.term(n));
  for (int n = a; n <= b; ++n) {
    const size_t u = static_cast<size_t>(n - a);
    if (n < b) sys.add_equation({MapTerm{y.d(n), u, std::nullopt}, MapTerm{std::nullopt, u + 1, x.d(n), -1}});
    sys.add_equation({MapTerm{quotient(y.deco(n)).proj, u, x.deco(n).inclusion()}});
  }
  return make_dec_map(x, y, a, solution(sys, 3));
}

DecMap Gen::compatible_map(size_t max_len) {
  DecComplex x = compatible_complex(max_len);
  switch (range(0, 3)) {
    case 0: return dec_identity(x);
    case 1: {
      FreeCover c = free_cover_complex(x);
      if (is_compatible(c.cover)) return c.map;
      return dec_identity(x);
    }
    default: return dec_map(x, compatible_complex(max_len));
  }
}

DecMap Gen::arbitrary_map(size_t max_len) {
  DecComplex x = arbitrary_complex(max_len);
  switch (range(0, 3)) {
    case 0: return dec_identity(x);
    case 1: {
      // the identity of E into a larger decoration
      std::vector<Subgroup> n;
      std::vector<GroupMap> id;
      for (int k = x.lo(); k <= x.hi(); ++k) {
        n.push_back(x.deco(k) + subgroup(x.term(k)));
        id.push_back(GroupMap::identity(x.term(k)));
      }
      DecComplex y(x.complex(), std::move(n));
      return make_dec_map(x, y, x.lo(), std::move(id));
    }
    default: return dec_map(x, arbitrary_complex(max_len));
  }
}

BChainMap Gen::b_chain_map(size_t max_len) {
  DecMap m = compatible_map(max_len);
  BChainMap f = g_map(m);
  if (f.src.empty() || coin()) return f;
  // precompose with the resolution of the source, which makes the components non-strict
  SemiProjectiveResolution r = semi_projective_resolution(f.src);
  std::vector<Butterfly> comps;
  for (int n = r.complex.lo(); n <= r.complex.hi(); ++n) comps.push_back(compose(r.iso.at(n), f.at(n)));
  return make_b_chain_map(r.complex, f.dst, r.complex.lo(), std::move(comps));
}

CObject Gen::c_object() {
  for (int tries = 0; tries < 200; ++tries) {
    FgGroup e = group(2, 2);
    Subgroup k2 = subgroup(e);
    IntMatrix g = k2.generators();
    Subgroup k1 = Subgroup::generated_by(e, g * matrix(g.cols(), static_cast<size_t>(range(0, 2)), 3));
    Subgroup m = subgroup(e);
    if (!c_object_defect(e, k1, k2, m)) return make_c_object(e, k1, k2, m);
  }
  return qprime(torsion_group()).object;
}

// ---------------------------------------------------------------------------------------------

const std::vector<std::string>& generator_kinds() {
  static const std::vector<std::string> kinds{"group",      "map",         "b_object",
                                              "butterfly",  "b_complex",   "dec_complex",
                                              "dec_complex:compatible",    "dec_complex:arbitrary",
                                              "c_object",   "dec_map",     "b_chain_map"};
  return kinds;
}

io::json generate(const std::string& kind, const GeneratorConfig& cfg, size_t count) {
  cfg.validate();
  const auto& kinds = generator_kinds();
  if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) fail(ErrorKind::UnknownKind, kind);
  io::json out = io::json::array();
  const size_t len = cfg.max_complex_length;
  for (size_t i = 0; i < count; ++i) {
    Gen g(cfg, "gen:" + kind, i);
    if (kind == "group") {
      out.push_back(io::to_json(g.group()));
    } else if (kind == "map") {
      FgGroup a = g.group(), b = g.group();
      out.push_back(io::to_json(g.map(a, b)));
    } else if (kind == "b_object") {
      out.push_back(io::to_json(g.b_object()));
    } else if (kind == "butterfly") {
      BObject x = g.b_object(), y = g.b_object();
      out.push_back(io::to_json(g.any_morphism(x, y)));
    } else if (kind == "b_complex") {
      out.push_back(io::to_json(g.b_complex(len)));
    } else if (kind == "dec_complex" || kind == "dec_complex:compatible") {
      out.push_back(io::to_json(g.compatible_complex(len)));
    } else if (kind == "dec_complex:arbitrary") {
      out.push_back(io::to_json(g.arbitrary_complex(len)));
    } else if (kind == "c_object") {
      out.push_back(io::to_json(g.c_object()));
    } else if (kind == "dec_map") {
      out.push_back(io::to_json(g.compatible_map(len)));
    } else {
      out.push_back(io::to_json(g.b_chain_map(len)));
    }
  }
  return out;
}

}  // namespace tiltkit::harness
