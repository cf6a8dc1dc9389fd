#include "constellation/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>

#include "constellation/betti.hpp"
#include "constellation/buchstaber.hpp"
#include "constellation/convexity.hpp"
#include "constellation/corpus.hpp"
#include "constellation/error.hpp"
#include "constellation/face_table.hpp"
#include "constellation/gale.hpp"
#include "constellation/homology.hpp"
#include "constellation/io.hpp"
#include "constellation/linalg.hpp"
#include "constellation/polytope.hpp"
#include "constellation/z2.hpp"

namespace constellation {

bool SuiteReport::passed() const { return failures() == 0 && !checks.empty(); }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

SimplicialComplex random_complex(int m, int num_faces, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(density);
  std::vector<VertexSet> faces{VertexSet()};
  for (int f = 0; f < num_faces; ++f) {
    VertexSet s;
    for (int v = 0; v < m; ++v)
      if (keep(rng)) s = s.with(v);
    faces.push_back(s);
  }
  return SimplicialComplex::from_maximal_faces(m, maximal_elements(std::move(faces)));
}

bool isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
  const int m = a.num_vertices();
  if (m != b.num_vertices() || m > 9) return m == b.num_vertices() && a == b;
  if (a.maximal_faces().size() != b.maximal_faces().size()) return false;
  if (f_vector(a) != f_vector(b)) return false;
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  const auto& target = b.maximal_faces();
  std::vector<VertexSet> image;
  do {
    image.clear();
    for (VertexSet f : a.maximal_faces()) {
      VertexSet g;
      for (int v : f) g = g.with(perm[static_cast<std::size_t>(v)]);
      image.push_back(g);
    }
    std::sort(image.begin(), image.end());
    if (image == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Tally {
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first;

  void fail(std::string what) {
    if (failures++ == 0) first = std::move(what);
  }
  std::string detail() const {
    std::string s = std::to_string(cases) + " cases";
    if (failures > 0) s += ", " + std::to_string(failures) + " failures, first: " + first;
    return s;
  }
};

struct Suite {
  const VerifyOptions& opt;
  OperationLog* log;
  SuiteReport rep;

  void use(std::initializer_list<const char*> ops) {
    if (log)
      for (const char* o : ops) log->insert(o);
  }
  void check(std::string name, bool ok, std::string detail = {}) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  }
  void check(std::string name, const Tally& t) { check(std::move(name), t.failures == 0 && t.cases > 0, t.detail()); }
};

std::string corpus_dir(const VerifyOptions& opt) { return opt.corpus_dir.empty() ? default_corpus_dir() : opt.corpus_dir; }

std::uint64_t full_word(int m) { return m >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1 << m)) - 1; }

SimplicialComplex from_word(std::uint64_t table, int m) {
  std::vector<VertexSet> faces;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s)
    if ((table >> s) & 1U) faces.push_back(VertexSet(s));
  return SimplicialComplex::from_maximal_faces(m, maximal_elements(std::move(faces)));
}

std::string describe(const SimplicialComplex& k) {
  std::string s = "m=" + std::to_string(k.num_vertices()) + " max{";
  bool first = true;
  for (VertexSet f : k.maximal_faces()) {
    if (!first) s += ",";
    s += to_string(f);
    first = false;
  }
  return s + "}";
}

std::string describe_betti(const std::vector<long long>& b) {
  std::string s = "(";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
  return s + ")";
}

std::vector<long long> padded(const BettiVector& b, std::size_t n) {
  std::vector<long long> v = b.values;
  v.resize(std::max(n, v.size()), 0);
  return v;
}

// Reduced Betti vector of S^r, indexed from p = -1.
bool is_sphere_vector(const std::vector<long long>& b, int r) {
  for (std::size_t t = 0; t < b.size(); ++t)
    if (b[t] != (static_cast<int>(t) == r + 1 ? 1 : 0)) return false;
  return r + 1 < static_cast<int>(b.size());
}

// b_i(K) = b_{m-3-i}(K^) for i = -1 .. m-2.
bool alexander_homology_holds(const SimplicialComplex& k, Field f, std::string& why) {
  const int m = k.num_vertices();
  const auto b = padded(reduced_betti(k, f), static_cast<std::size_t>(m + 1));
  const auto d = padded(reduced_betti(alexander_dual(k), f), static_cast<std::size_t>(m + 1));
  for (int i = -1; i <= m - 2; ++i)
    if (b[static_cast<std::size_t>(i + 1)] != d[static_cast<std::size_t>(m - 3 - i + 1)]) {
      why = describe(k) + " " + to_string(f) + " b=" + describe_betti(b) + " dual=" + describe_betti(d);
      return false;
    }
  return true;
}

// Both link/subcomplex dualities over every face and nonface.
bool link_sub_holds(const SimplicialComplex& k, std::string& why) {
  const int m = k.num_vertices();
  const SimplicialComplex dual = alexander_dual(k);
  const VertexSet all = k.universe();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    const VertexSet s(bits);
    if (k.is_face(s)) {
      const SimplicialComplex lhs = alexander_dual(link(k, s));
      const SimplicialComplex rhs = full_subcomplex(dual, all - s);
      if (!(lhs == rhs)) {
        why = describe(k) + " I=" + to_string(s) + ": dual of link " + describe(lhs) + " vs " + describe(rhs);
        return false;
      }
    } else {
      const SimplicialComplex lhs = alexander_dual(full_subcomplex(k, s));
      const SimplicialComplex rhs = link(dual, all - s);
      if (!(lhs == rhs)) {
        why = describe(k) + " J=" + to_string(s) + ": dual of K_J " + describe(lhs) + " vs " + describe(rhs);
        return false;
      }
    }
  }
  return true;
}

struct NamedComplex {
  std::string name;
  SimplicialComplex complex;
};

std::vector<NamedComplex> corpus_complexes(const std::vector<CorpusEntry>& entries) {
  std::vector<NamedComplex> out;
  for (const auto& e : entries) {
    if (e.complex) out.push_back({e.name, *e.complex});
    if (e.polytope) {
      out.push_back({e.name + "/K(P)", nerve_complex(*e.polytope)});
      if (e.polytope->facets().size() <= 16) out.push_back({e.name + "/K_P", facet_nerve(*e.polytope)});
    }
    if (e.configuration) out.push_back({e.name + "/Delta", constellation_complex(*e.configuration)});
  }
  return out;
}

// Random complexes on m vertices, never the full simplex.
std::vector<SimplicialComplex> sample_complexes(int m, int count, std::mt19937_64& rng) {
  std::vector<SimplicialComplex> out;
  std::uniform_int_distribution<int> faces(1, 2 * m);
  const double densities[] = {0.3, 0.5, 0.7};
  std::uniform_int_distribution<int> pick(0, 2);
  while (static_cast<int>(out.size()) < count) {
    SimplicialComplex k = random_complex(m, faces(rng), densities[pick(rng)], rng);
    if (!k.is_simplex()) out.push_back(std::move(k));
  }
  return out;
}

Json family_json(const std::vector<VertexSet>& family) {
  Json out = Json::array();
  for (VertexSet s : family) out.push_back(s.indices());
  return out;
}

Json f_nl_json(const Polytope& p) {
  Json out = Json::array();
  for (const auto& [key, value] : f_nl(p)) out.push_back({key.first, key.second, value});
  return out;
}

int max_neighborly(const Polytope& p) {
  int k = 0;
  while (k < p.num_vertices() && is_k_neighborly(p, k + 1)) ++k;
  return k;
}

// Values of a 1-dimensional diagram scaled so that the first nonzero one has
// absolute value 1, sorted.
std::optional<Json> gale_multiset(const PointConfiguration& x) {
  if (x.dim != 1) return std::nullopt;
  Rational scale = 0;
  for (const auto& p : x.points)
    if (p[0] != 0) {
      scale = p[0] < 0 ? Rational(-p[0]) : p[0];
      break;
    }
  std::vector<Rational> v;
  for (const auto& p : x.points) v.push_back(scale == 0 ? p[0] : Rational(p[0] / scale));
  std::sort(v.begin(), v.end());
  Json out = Json::array();
  for (const auto& r : v) out.push_back(format_rational(r));
  return out;
}

std::optional<Json> computed_value(const CorpusEntry& e, const std::string& key) {
  if (e.polytope) {
    const Polytope& p = *e.polytope;
    if (key == "f_vector") return Json(f_vector(p));
    if (key == "facets") return Json(p.facets().size());
    if (key == "apex") {
      const auto a = is_pyramid(p);
      return a ? Json(*a) : Json(nullptr);
    }
    if (key == "neighborly") return Json(max_neighborly(p));
    if (key == "f_nl") return f_nl_json(p);
    if (key == "gale_alexander") return Json(verify_gale_alexander(p));
    if (key == "gale_multiset") return gale_multiset(gale_diagram(p));
    if (key == "gale_all_zero") {
      bool zero = true;
      const PointConfiguration g = gale_diagram(p);
      for (const auto& x : g.points) zero = zero && is_zero_vector(x);
      return Json(zero);
    }
    if (key == "s_equals_one") return Json(s_equals_one(p).equals_one);
  }
  if (e.configuration) {
    const PointConfiguration& x = *e.configuration;
    if (key == "minimal_nonfaces") return family_json(constellation_complex(x).minimal_nonfaces());
    if (key == "covers") return Json(covers_sphere(x));
    if (key == "good") return Json(is_good(x));
    if (key == "nondegenerate") return Json(is_nondegenerate(x));
    if (key == "betti") return betti_to_json(hochster_betti(constellation_complex(x)));
    if (key == "dual_betti") return betti_to_json(hochster_betti(alexander_dual(constellation_complex(x))));
  }
  if (e.complex) {
    const SimplicialComplex& k = *e.complex;
    if (key == "betti") return betti_to_json(hochster_betti(k));
    if (key == "s_real" && k.num_vertices() <= 12 && !k.is_simplex()) return Json(s_real_exact(k).value());
    if (key == "reduced_betti") return Json(reduced_betti(k).values);
    if (key == "f_vector") return Json(f_vector(k));
  }
  return std::nullopt;
}

void check_expectations(Suite& s, const std::vector<CorpusEntry>& entries, std::initializer_list<const char*> keys) {
  for (const auto& e : entries)
    for (const char* key : keys) {
      const auto it = e.expected.find(key);
      if (it == e.expected.end()) continue;
      const auto got = computed_value(e, key);
      const std::string name = e.name + ": " + key + " [" + (*it)["source"].get<std::string>() + "]";
      if (!got) {
        s.check(name, false, "not computable for this entry");
        continue;
      }
      const Json& want = (*it)["value"];
      s.check(name, *got == want, *got == want ? "" : "expected " + want.dump() + ", got " + got->dump());
    }
}

BettiTable table_of(std::initializer_list<std::tuple<int, int, long long>> entries, int m, Field f) {
  BettiTable t;
  t.m = m;
  t.field = f;
  for (const auto& [i, deg, v] : entries) t.add(i, deg, v);
  return t;
}

std::string table_text(const BettiTable& t) { return betti_to_json(t)["entries"].dump(); }

const CorpusEntry* find_entry(const std::vector<CorpusEntry>& entries, const std::string& name) {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

// ---------------------------------------------------------------------------

void suite_duality_involution(Suite& s) {
  s.use({"alexander_dual", "from_maximal_faces", "from_minimal_nonfaces", "minimal_nonfaces", "skeleton"});
  const int top = std::min(s.opt.exhaustive_max_m, word_table::kMaxVertices);
  Tally word, cross;
  for (int m = 1; m <= top; ++m) {
    const auto all = word_table::all_complexes(m);
    const std::size_t stride = std::max<std::size_t>(1, all.size() / 500);
    for (std::size_t n = 0; n < all.size(); ++n) {
      const std::uint64_t t = all[n];
      if (t == full_word(m)) continue;
      ++word.cases;
      const std::uint64_t d = word_table::dual(t, m);
      if (word_table::dual(d, m) != t || !(d & 1U)) word.fail("m=" + std::to_string(m) + " table " + std::to_string(t));
      if (n % stride == 0) {
        ++cross.cases;
        const SimplicialComplex k = from_word(t, m);
        const SimplicialComplex kd = alexander_dual(k);
        if (!(kd == from_word(d, m))) cross.fail(describe(k));
        // Maximal faces and minimal nonfaces swap through complements.
        std::vector<VertexSet> comp;
        for (VertexSet f : k.maximal_faces()) comp.push_back(k.universe() - f);
        std::sort(comp.begin(), comp.end());
        if (comp != kd.minimal_nonfaces()) cross.fail(describe(k) + " nonfaces of dual");
        if (!(SimplicialComplex::from_minimal_nonfaces(m, k.minimal_nonfaces()) == k)) cross.fail(describe(k) + " generators");
      }
    }
  }
  s.check("double dual on every complex with m <= " + std::to_string(top) + " (bit tables)", word);
  s.check("general dual agrees with the bit-table dual (sampled)", cross);

  std::mt19937_64 rng(s.opt.seed ^ 0x1001);
  Tally sampled;
  for (int m = top + 1; m <= 8; ++m)
    for (const auto& k : sample_complexes(m, s.opt.samples / 4, rng)) {
      ++sampled.cases;
      if (!(alexander_dual(alexander_dual(k)) == k)) sampled.fail(describe(k));
      const FaceTable t = FaceTable::from_complex(k);
      if (!(t.dual().dual() == t) || !(t.dual().to_complex() == alexander_dual(k))) sampled.fail(describe(k) + " face table");
    }
  s.check("double dual on random complexes, m = " + std::to_string(top + 1) + "..8", sampled);

  Tally corpus;
  for (const auto& nc : corpus_complexes(load_corpus(corpus_dir(s.opt)))) {
    if (nc.complex.is_simplex()) continue;
    ++corpus.cases;
    if (!(alexander_dual(alexander_dual(nc.complex)) == nc.complex)) corpus.fail(nc.name);
  }
  s.check("double dual on corpus complexes", corpus);

  bool threw = false;
  try {
    alexander_dual(SimplicialComplex::simplex(3));
  } catch (const Error&) {
    threw = true;
  }
  s.check("dual of the full simplex is rejected", threw);
  bool skel = true;
  for (int m = 1; m <= 7; ++m) {
    skel = skel && skeleton(SimplicialComplex::simplex(m), m - 2) == SimplicialComplex::simplex_boundary(m);
    // The dual of the boundary is the empty complex on m ghost vertices.
    skel = skel && alexander_dual(SimplicialComplex::simplex_boundary(m)) == SimplicialComplex::empty(m);
  }
  s.check("codimension-one skeleton of the simplex is its boundary, whose dual is {empty}", skel);
}

void suite_alexander_homology(Suite& s) {
  s.use({"reduced_betti", "alexander_dual", "boundary_matrix"});
  check_expectations(s, load_corpus(corpus_dir(s.opt)), {"reduced_betti"});
  const int top = std::min(s.opt.exhaustive_max_m, word_table::kMaxVertices);
  Tally word, cross;
  for (int m = 1; m <= top; ++m) {
    const auto all = word_table::all_complexes(m);
    const std::size_t stride = std::max<std::size_t>(1, all.size() / 400);
    for (std::size_t n = 0; n < all.size(); ++n) {
      const std::uint64_t t = all[n];
      if (t == full_word(m)) continue;
      ++word.cases;
      int b[word_table::kMaxVertices + 1] = {};
      int d[word_table::kMaxVertices + 1] = {};
      word_table::reduced_betti_gf2(t, m, b);
      word_table::reduced_betti_gf2(word_table::dual(t, m), m, d);
      for (int i = -1; i <= m - 2; ++i)
        if (b[i + 1] != d[m - 3 - i + 1]) {
          word.fail("m=" + std::to_string(m) + " table " + std::to_string(t) + " i=" + std::to_string(i));
          break;
        }
      if (n % stride == 0) {
        ++cross.cases;
        const auto general = padded(reduced_betti(from_word(t, m), Field::GF2), static_cast<std::size_t>(m + 1));
        for (int p = 0; p <= m; ++p)
          if (general[static_cast<std::size_t>(p)] != b[p]) {
            cross.fail("m=" + std::to_string(m) + " table " + std::to_string(t));
            break;
          }
      }
    }
  }
  s.check("b_i(K) = b_{m-3-i}(dual) over GF(2), every complex with m <= " + std::to_string(top), word);
  s.check("bit-table homology agrees with the boundary-matrix homology (sampled)", cross);

  std::mt19937_64 rng(s.opt.seed ^ 0x2002);
  Tally sampled;
  for (const auto& k : sample_complexes(top + 1, s.opt.samples, rng))
    for (Field f : {Field::GF2, Field::Q}) {
      ++sampled.cases;
      std::string why;
      if (!alexander_homology_holds(k, f, why)) sampled.fail(why);
    }
  s.check("b_i(K) = b_{m-3-i}(dual) over GF(2) and Q, random complexes on " + std::to_string(top + 1) + " vertices",
          sampled);

  Tally corpus, fields;
  for (const auto& nc : corpus_complexes(load_corpus(corpus_dir(s.opt)))) {
    if (nc.complex.is_simplex() || nc.complex.num_vertices() > 16) continue;
    for (Field f : {Field::GF2, Field::Q}) {
      ++corpus.cases;
      std::string why;
      if (!alexander_homology_holds(nc.complex, f, why)) corpus.fail(nc.name + ": " + why);
    }
    ++fields.cases;
    if (!(reduced_betti(nc.complex, Field::GF2) == reduced_betti(nc.complex, Field::Q))) fields.fail(nc.name);
  }
  s.check("Alexander duality on corpus complexes", corpus);
  s.check("GF(2) and Q Betti numbers agree on corpus complexes", fields);

  // Chain condition and the Euler characteristic.
  Tally chain;
  for (const auto& k : sample_complexes(6, 40, rng)) {
    for (int p = 0; p < k.dimension(); ++p) {
      ++chain.cases;
      const auto a = boundary_matrix(k, p).dense();
      const auto b = boundary_matrix(k, p + 1).dense();
      bool zero = !a.empty() && a[0].size() == b.size();
      for (std::size_t r = 0; r < a.size() && zero; ++r)
        for (std::size_t c = 0; c < b[0].size() && zero; ++c) {
          long long sum = 0;
          for (std::size_t t = 0; t < b.size(); ++t) sum += a[r][t] * b[t][c];
          zero = sum == 0;
        }
      if (!zero) chain.fail(describe(k) + " p=" + std::to_string(p));
    }
    const auto f = f_vector(k);
    const auto b = reduced_betti(k, Field::Q).values;
    long long ef = 0, eb = 0;
    for (std::size_t i = 0; i < f.size(); ++i) ef += (i % 2 ? 1 : -1) * f[i];
    for (std::size_t i = 0; i < b.size(); ++i) eb += (i % 2 ? 1 : -1) * b[i];
    ++chain.cases;
    if (ef != eb) chain.fail(describe(k) + " Euler characteristic");
  }
  s.check("boundary of boundary is zero and Euler characteristics match", chain);
}

void suite_link_sub(Suite& s) {
  s.use({"link", "full_subcomplex", "alexander_dual", "betti_via_links", "hochster_betti", "is_face"});
  const int top = std::min(s.opt.exhaustive_max_m, word_table::kMaxVertices);
  Tally word;
  for (int m = 1; m <= top; ++m) {
    const std::uint64_t u = (std::uint64_t{1} << m) - 1;
    for (std::uint64_t t : word_table::all_complexes(m)) {
      if (t == full_word(m)) continue;
      ++word.cases;
      const std::uint64_t d = word_table::dual(t, m);
      for (std::uint64_t s2 = 0; s2 <= u; ++s2) {
        const int rest = m - std::popcount(s2);
        bool ok;
        if ((t >> s2) & 1U) {
          ok = word_table::dual(word_table::link(t, s2, m), rest) == word_table::restrict_to(d, u & ~s2);
        } else {
          ok = word_table::dual(word_table::restrict_to(t, s2), m - rest) == word_table::link(d, u & ~s2, m);
        }
        if (!ok) {
          word.fail("m=" + std::to_string(m) + " table " + std::to_string(t) + " set " + to_string(VertexSet(s2)));
          break;
        }
      }
    }
  }
  s.check("link and subcomplex dualities, every complex with m <= " + std::to_string(top), word);

  std::mt19937_64 rng(s.opt.seed ^ 0x3003);
  Tally sampled;
  for (const auto& k : sample_complexes(top + 1, s.opt.samples / 2, rng)) {
    ++sampled.cases;
    std::string why;
    if (!link_sub_holds(k, why)) sampled.fail(why);
  }
  s.check("link and subcomplex dualities, random complexes on " + std::to_string(top + 1) + " vertices", sampled);

  // The link formula for the Betti numbers of the dual.
  Tally links;
  for (int m = 1; m <= std::min(top, 5); ++m)
    for (std::uint64_t t : word_table::all_complexes(m)) {
      if (t == full_word(m)) continue;
      ++links.cases;
      const SimplicialComplex k = from_word(t, m);
      if (!(betti_via_links(k) == hochster_betti(alexander_dual(k)))) links.fail(describe(k));
    }
  for (int m = std::min(top, 5) + 1; m <= 7; ++m)
    for (const auto& k : sample_complexes(m, s.opt.samples / 8, rng))
      for (Field f : {Field::GF2, Field::Q}) {
        ++links.cases;
        if (!(betti_via_links(k, f) == hochster_betti(alexander_dual(k), f))) links.fail(describe(k));
      }
  s.check("betti_via_links(K) = hochster_betti(dual K), exhaustive m <= 5 and sampled m = 6, 7", links);

  const SimplicialComplex c4 = SimplicialComplex::from_minimal_nonfaces(4, {VertexSet(0b0101), VertexSet(0b1010)});
  const SimplicialComplex lk = link(c4, VertexSet::singleton(0));
  s.check("link of a vertex of the 4-cycle is two points and a ghost",
          lk.num_vertices() == 3 && lk.maximal_faces() == std::vector<VertexSet>{VertexSet(0b001), VertexSet(0b100)} &&
              lk.labels() == std::vector<int>{1, 2, 3},
          describe(lk));
  s.check("full subcomplex on [m] is K", full_subcomplex(c4, c4.universe()) == c4);
}

void suite_gale_alexander(Suite& s) {
  s.use({"gale_diagram", "constellation_complex", "verify_gale_alexander", "nerve_complex", "alexander_dual",
         "with_multiplicities", "wedge_multiply", "direct_sum", "join", "is_k_neighborly", "is_flag",
         "polytope_from_vertices", "face_lattice", "is_pyramid", "kernel_basis", "zero_in_convex_hull", "rank"});
  const auto entries = load_corpus(corpus_dir(s.opt));
  Tally duality;
  int polytopes = 0;
  for (const auto& e : entries) {
    if (!e.polytope) continue;
    ++polytopes;
    ++duality.cases;
    const GaleAlexanderCheck c = check_gale_alexander(*e.polytope);
    if (!c.equal) duality.fail(e.name + ": dual " + describe(c.dual_of_nerve) + " vs " + describe(c.constellation));
  }
  s.check("dual of K(P) equals the constellation complex of G(P) on " + std::to_string(polytopes) + " polytopes",
          duality.failures == 0 && polytopes >= 10, duality.detail());
  check_expectations(s, entries, {"gale_multiset", "gale_all_zero", "gale_alexander", "minimal_nonfaces"});

  Tally apex;
  for (const auto& e : entries) {
    if (!e.polytope) continue;
    ++apex.cases;
    const PointConfiguration g = gale_diagram(*e.polytope);
    std::vector<int> zeros;
    for (int i = 0; i < g.size(); ++i)
      if (is_zero_vector(g.points[static_cast<std::size_t>(i)])) zeros.push_back(i);
    if (zeros != pyramid_apices(*e.polytope)) apex.fail(e.name);
  }
  s.check("apices of pyramids are exactly the zero points of the Gale diagram", apex);

  Tally ranks;
  for (const auto& e : entries) {
    if (!e.polytope) continue;
    const Polytope& p = *e.polytope;
    std::vector<RationalVector> lifted;
    for (const auto& y : p.vertices()) {
      lifted.push_back(y);
      lifted.back().push_back(1);
    }
    const RationalMatrix a = RationalMatrix::from_columns(lifted, static_cast<std::size_t>(p.ambient_dimension() + 1));
    ++ranks.cases;
    if (rank(a) != static_cast<std::size_t>(p.dimension() + 1) || gale_diagram(p).dim != p.num_vertices() - p.dimension() - 1)
      ranks.fail(e.name);
  }
  s.check("lifted vertex matrix has rank d + 1 and the diagram lives in R^{m-d-1}", ranks);

  // Rational stand-ins against their intended models.
  Tally models;
  for (const auto& e : entries) {
    if (!e.configuration || !e.raw.contains("model")) continue;
    const Json& model = e.raw["model"];
    const SimplicialComplex delta = constellation_complex(*e.configuration);
    ++models.cases;
    if (model.contains("cyclic_arcs")) {
      const int len = model["cyclic_arcs"].get<int>();
      const int m = e.configuration->size();
      std::vector<VertexSet> arcs;
      for (int j = 0; j < m; ++j) {
        VertexSet a;
        for (int t = 0; t < len; ++t) a = a.with((j + t) % m);
        arcs.push_back(a);
      }
      if (!(delta == SimplicialComplex::from_maximal_faces(m, arcs))) models.fail(e.name + ": " + describe(delta));
    }
    if (model.contains("gale_of")) {
      const CorpusEntry* p = find_entry(entries, model["gale_of"].get<std::string>());
      if (!p || !p->polytope) {
        models.fail(e.name + ": unknown polytope");
      } else if (!isomorphic(delta, constellation_complex(gale_diagram(*p->polytope)))) {
        models.fail(e.name + ": not isomorphic to the constellation complex of G(" + p->name + ")");
      }
    }
  }
  s.check("polygon stand-ins match their intended combinatorial models", models);

  Tally wedge;
  for (const auto& e : entries) {
    if (!e.polytope || e.polytope->num_vertices() > 7) continue;
    const Polytope& p = *e.polytope;
    const int m = p.num_vertices();
    const PointConfiguration g = gale_diagram(p);
    const SimplicialComplex kp = nerve_complex(p);
    std::vector<std::vector<int>> mults{std::vector<int>(static_cast<std::size_t>(m), 1)};
    std::vector<int> one(static_cast<std::size_t>(m), 1);
    one[0] = 2;
    mults.push_back(one);
    if (m <= 5) mults.push_back(std::vector<int>(static_cast<std::size_t>(m), 2));
    for (const auto& j : mults) {
      ++wedge.cases;
      const LabelledConfiguration lc = with_multiplicities(g, j);
      const SimplicialComplex lhs = constellation_complex(lc.config);
      const SimplicialComplex rhs = alexander_dual(wedge_multiply(kp, j));
      if (!(lhs == rhs)) wedge.fail(e.name + ": " + describe(lhs) + " vs " + describe(rhs));
    }
  }
  s.check("repeating Gale points matches the dual of the simplicial wedge", wedge);

  Tally sums;
  std::vector<PointConfiguration> small;
  for (const auto& e : entries)
    if (e.configuration && e.configuration->size() <= 6 && e.configuration->dim <= 2) small.push_back(*e.configuration);
  for (const auto& e : entries)
    if (e.polytope && e.polytope->num_vertices() <= 5) small.push_back(gale_diagram(*e.polytope));
  for (std::size_t a = 0; a < small.size(); ++a)
    for (std::size_t b = a; b < small.size() && b < a + 3; ++b) {
      if (small[a].size() + small[b].size() > 10) continue;
      ++sums.cases;
      const SimplicialComplex lhs = constellation_complex(direct_sum(small[a], small[b]));
      const SimplicialComplex rhs = join(constellation_complex(small[a]), constellation_complex(small[b]));
      if (!(lhs == rhs)) sums.fail(describe(lhs) + " vs " + describe(rhs));
    }
  s.check("constellation complex of a direct sum is the join", sums);

  Tally neighborly, flag, lattice;
  for (const auto& e : entries) {
    if (!e.polytope) continue;
    const Polytope& p = *e.polytope;
    const int m = p.num_vertices();
    const SimplicialComplex delta = constellation_complex(gale_diagram(p));
    for (int k = 1; k <= m; ++k) {
      ++neighborly.cases;
      if (is_k_neighborly(p, k) != (delta.dimension() <= m - k - 2))
        neighborly.fail(e.name + " k=" + std::to_string(k));
    }
    bool simplicial = true;
    for (VertexSet f : p.facets()) simplicial = simplicial && f.size() == p.dimension();
    if (simplicial) {
      ++flag.cases;
      bool all_m2 = true;
      for (VertexSet f : delta.maximal_faces()) all_m2 = all_m2 && f.size() == m - 2;
      const bool fl = is_flag(nerve_complex(p));
      if (fl != all_m2) flag.fail(e.name + " flag correspondence");
      if (fl && m < 2 * p.dimension()) flag.fail(e.name + " is flag with fewer than 2d vertices (corpus bug)");
    }
    // The face lattice is recovered from K(P) alone.
    ++lattice.cases;
    std::vector<VertexSet> closure = nerve_complex(p).maximal_faces();
    for (std::size_t i = 0; i < closure.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) {
        const VertexSet x = closure[i] & closure[j];
        if (std::find(closure.begin(), closure.end(), x) == closure.end()) closure.push_back(x);
      }
    closure.push_back(VertexSet());
    closure.push_back(VertexSet::range(m));
    std::sort(closure.begin(), closure.end());
    closure.erase(std::unique(closure.begin(), closure.end()), closure.end());
    std::vector<VertexSet> faces;
    for (const Face& f : p.face_lattice()) faces.push_back(f.vertices);
    std::sort(faces.begin(), faces.end());
    if (closure != faces) lattice.fail(e.name);
  }
  s.check("k-neighborly iff dim of the constellation complex <= m - k - 2", neighborly);
  s.check("simplicial polytopes: flag iff every maximal face of the constellation complex has m - 2 vertices", flag);
  s.check("face lattice is the intersection closure of the maximal faces of K(P)", lattice);
}

void suite_constellation_spheres(Suite& s) {
  s.use({"constellation_complex", "covers_sphere", "is_good", "is_nondegenerate", "is_homology_sphere_like",
         "gale_diagram", "strictly_positive_dependence"});
  const auto entries = load_corpus(corpus_dir(s.opt));
  check_expectations(s, entries, {"covers", "good", "nondegenerate"});

  struct Named {
    std::string name;
    PointConfiguration x;
  };
  std::vector<Named> configs;
  for (const auto& e : entries) {
    if (e.configuration) configs.push_back({e.name, *e.configuration});
    if (e.polytope && e.polytope->num_vertices() - e.polytope->dimension() - 1 >= 1)
      configs.push_back({"G(" + e.name + ")", gale_diagram(*e.polytope)});
  }
  Tally spheres, construction, gale_good;
  int nondegenerate = 0;
  for (const auto& [name, x] : configs) {
    if (name.rfind("G(", 0) == 0) {
      ++gale_good.cases;
      if (!is_good(x)) gale_good.fail(name);
    }
    if (!is_good(x) || !is_nondegenerate(x)) continue;
    ++nondegenerate;
    const SimplicialComplex delta = constellation_complex(x);
    const int r = x.dim - 1;
    for (Field f : {Field::GF2, Field::Q}) {
      if (f == Field::Q && delta.num_vertices() > 10) continue;
      ++spheres.cases;
      const auto v = sphere_property_violations(delta, r, f);
      if (!v.empty()) spheres.fail(name + " " + to_string(v.front().subset) + ": " + v.front().reason);
    }
    for (Field f : {Field::GF2, Field::Q}) {
      ++construction.cases;
      if (auto fail = construction_step_failure(delta, r, f)) construction.fail(name + " " + to_string(f) + ": " + *fail);
    }
    ++spheres.cases;
    if (!is_homology_sphere_like(delta, Field::GF2, r)) spheres.fail(name + ": whole complex is not sphere-like");
  }
  s.check("Gale diagrams of corpus polytopes are good", gale_good);
  s.check("good nondegenerate configurations (" + std::to_string(nondegenerate) +
              "): every full subcomplex is a simplex or a homology sphere",
          spheres);
  s.check("construction from a minimal nonface adds vertices with acyclic links", construction);

  for (const auto& e : entries) {
    if (!e.configuration || !e.has_tag("degenerate-sphere")) continue;
    const SimplicialComplex delta = constellation_complex(*e.configuration);
    const auto v = sphere_property_violations(delta, e.configuration->dim - 1);
    const VertexSet target = VertexSet::from_indices(e.raw["degenerate_subset"].get<std::vector<int>>());
    bool found = false;
    for (const auto& viol : v)
      if (viol.subset == target) found = is_sphere_vector(padded(viol.betti, 1), e.configuration->dim - 2);
    s.check(e.name + ": full subcomplex on " + to_string(target) + " is a homology S^" +
                std::to_string(e.configuration->dim - 2) + ", not S^" + std::to_string(e.configuration->dim - 1),
            found && !is_nondegenerate(*e.configuration), std::to_string(v.size()) + " violations reported");
  }
}

void suite_linear_resolution(Suite& s) {
  s.use({"hochster_betti", "has_linear_resolution", "constellation_complex"});
  const auto entries = load_corpus(corpus_dir(s.opt));
  check_expectations(s, entries, {"betti"});
  const CorpusEntry* pent = find_entry(entries, "pentagon-config");
  const CorpusEntry* hex = find_entry(entries, "hexagon-config");
  if (pent && pent->configuration) {
    const SimplicialComplex d = constellation_complex(*pent->configuration);
    for (Field f : {Field::GF2, Field::Q}) {
      const BettiTable t = hochster_betti(d, f);
      const BettiTable want = table_of({{0, 0, 1}, {1, 6, 5}, {2, 8, 5}, {3, 10, 1}}, 5, f);
      s.check("pentagon configuration Betti table over " + to_string(f), t == want, table_text(t));
      s.check("pentagon configuration has a linear resolution (r = 1) over " + to_string(f), has_linear_resolution(t, 1));
    }
  } else {
    s.check("pentagon configuration present in the corpus", false);
  }
  if (hex && hex->configuration) {
    const BettiTable t = hochster_betti(constellation_complex(*hex->configuration));
    s.check("hexagon configuration has no linear resolution (r = 1)", !has_linear_resolution(t, 1), table_text(t));
  } else {
    s.check("hexagon configuration present in the corpus", false);
  }

  Tally iff, shape;
  auto consider = [&](const std::string& name, const PointConfiguration& x) {
    if (!is_good(x)) return;
    const BettiTable t = hochster_betti(constellation_complex(x));
    ++iff.cases;
    if (has_linear_resolution(t, x.dim - 1) != is_nondegenerate(x)) iff.fail(name);
    ++shape.cases;
    bool ok = t.at(0, 0) == 1;
    long long total = 0;
    for (const auto& [key, v] : t.entries) {
      ok = ok && v > 0 && !(key.first == 0 && key.second != 0);
      total += v;
    }
    long long rows = 0;
    for (int i = 0; i <= t.m; ++i) rows += t.row_total(i);
    if (!ok || rows != total) shape.fail(name);
  };
  for (const auto& e : entries) {
    if (e.configuration) consider(e.name, *e.configuration);
    if (e.polytope && e.polytope->num_vertices() <= 12) consider("G(" + e.name + ")", gale_diagram(*e.polytope));
  }
  s.check("good configurations: linear resolution iff nondegenerate", iff);
  s.check("Betti tables have (0,0) = 1, no other row-0 entries, and consistent row totals", shape);
  const BettiTable simplex = hochster_betti(SimplicialComplex::simplex(4));
  s.check("full simplex: only (0,0), linear vacuously",
          simplex.entries.size() == 1 && simplex.at(0, 0) == 1 && has_linear_resolution(simplex, 1));
}

void suite_betti_fvector(Suite& s) {
  s.use({"polytope_betti_from_gale", "f_nl", "f_vector", "hochster_betti", "gale_diagram"});
  const auto entries = load_corpus(corpus_dir(s.opt));
  check_expectations(s, entries, {"f_vector", "facets", "f_nl", "apex", "neighborly"});

  Tally residual, simplicial, fnl;
  for (const auto& e : entries) {
    if (!e.polytope || e.polytope->num_vertices() > 12) continue;
    const Polytope& p = *e.polytope;
    const int m = p.num_vertices(), d = p.dimension();
    const PointConfiguration g = gale_diagram(p);
    ++residual.cases;
    const GaleBettiReport rep = polytope_betti_from_gale(g, &p);
    if (!rep.residual || !rep.residual->empty()) residual.fail(e.name);
    bool is_simplicial = true;
    for (VertexSet f : p.facets()) is_simplicial = is_simplicial && f.size() == d;
    const auto fv = f_vector(p);
    const auto nl = f_nl(p);
    ++fnl.cases;
    long long total = 0;
    for (const auto& [key, v] : nl) total += v;
    if (total != std::accumulate(fv.begin(), fv.end(), 0LL)) fnl.fail(e.name + " f_nl marginals");
    if (!is_simplicial) continue;
    ++simplicial.cases;
    // beta^{-i}(dual of the boundary) sits in degree 2(m-d-1+i) and equals f_{d-i}.
    const BettiTable t = hochster_betti(alexander_dual(nerve_complex(p)));
    bool ok = true;
    for (const auto& [key, v] : t.entries) {
      const auto [i, deg] = key;
      if (i == 0) continue;
      if (deg != 2 * (m - d - 1 + i) || d - i + 1 < 0 || v != fv[static_cast<std::size_t>(d - i + 1)]) ok = false;
    }
    for (int i = 1; i <= d + 1; ++i)
      if (t.row_total(i) != fv[static_cast<std::size_t>(d - i + 1)]) ok = false;
    for (int n = -1; n < d; ++n) {
      const auto it = nl.find({n, n + 1});
      if ((it == nl.end() ? 0 : it->second) != fv[static_cast<std::size_t>(n + 1)]) ok = false;
    }
    if (!ok) simplicial.fail(e.name + " " + table_text(t));
  }
  s.check("beta^{-i,2j}(Delta(G(P))) = f_{d-i,m-j}(P) on every corpus polytope", residual);
  s.check("simplicial polytopes: Betti numbers of the dual boundary are the f-vector", simplicial);
  s.check("f_nl sums to the f-vector", fnl);

  // Stand-in configurations paired with their polytopes.
  const std::pair<const char*, const char*> pairs[] = {{"hexagon-config", "prism"}, {"pentagon-config", "pentagon"}};
  for (const auto& [cname, pname] : pairs) {
    const CorpusEntry* c = find_entry(entries, cname);
    const CorpusEntry* p = find_entry(entries, pname);
    if (!c || !p || !c->configuration || !p->polytope) {
      s.check(std::string(cname) + " / " + pname + " present in the corpus", false);
      continue;
    }
    const GaleBettiReport rep = polytope_betti_from_gale(*c->configuration, &*p->polytope);
    s.check(std::string(cname) + ": Betti table equals f_nl(" + pname + ")", rep.residual && rep.residual->empty(),
            table_text(rep.table));
  }
  if (const CorpusEntry* hex = find_entry(entries, "hexagon-config"); hex && hex->configuration) {
    const BettiTable t = hochster_betti(constellation_complex(*hex->configuration));
    const BettiTable want = table_of({{0, 0, 1}, {1, 4, 3}, {1, 6, 2}, {2, 8, 9}, {3, 10, 6}, {4, 12, 1}}, 6, Field::GF2);
    s.check("hexagon configuration: 2, 3, 9, 6, 1 at (1,6), (1,4), (2,8), (3,10), (4,12)", t == want, table_text(t));
  }

  // The parallel sweep against the serial reference and across thread counts.
  std::mt19937_64 rng(s.opt.seed ^ 0x4004);
  Tally det;
  for (const auto& k : sample_complexes(10, 12, rng)) {
    ++det.cases;
    const BettiTable serial = hochster_betti_serial(k);
    HochsterOptions one;
    one.threads = 1;
    HochsterOptions three;
    three.threads = 3;
    if (!(hochster_betti(k, Field::GF2, one) == serial) || !(hochster_betti(k, Field::GF2, three) == serial) ||
        !(hochster_betti(k, Field::Q) == hochster_betti_serial(k, Field::Q)))
      det.fail(describe(k));
  }
  s.check("parallel Hochster sweep matches the serial reference for 1 and 3 threads", det);
  s.check("text table renders", !format_betti_table(hochster_betti(SimplicialComplex::simplex_boundary(3))).empty());
}

void suite_polygon_betti(Suite& s) {
  s.use({"hochster_betti", "betti_via_links", "constellation_complex", "alexander_dual"});
  const auto entries = load_corpus(corpus_dir(s.opt));
  check_expectations(s, entries, {"dual_betti"});
  int seen = 0;
  for (const auto& e : entries) {
    if (!e.configuration || !e.raw.contains("polygon_k")) continue;
    ++seen;
    const int k = e.raw["polygon_k"].get<int>();
    const int m = 2 * k + 1;
    const SimplicialComplex delta = constellation_complex(*e.configuration);
    for (Field f : {Field::GF2, Field::Q}) {
      const BettiTable t = hochster_betti(alexander_dual(delta), f);
      const BettiTable want = table_of({{0, 0, 1}, {1, 2 * k, m}, {2, 2 * (k + 1), m}, {3, 2 * m, 1}}, m, f);
      s.check(e.name + " (k = " + std::to_string(k) + ", " + to_string(f) + "): beta^{-1," + std::to_string(2 * k) +
                  "} = beta^{-2," + std::to_string(2 * k + 2) + "} = " + std::to_string(m) + ", beta^{-3," +
                  std::to_string(2 * m) + "} = 1, nothing else",
              t == want, table_text(t));
      s.check(e.name + " (" + to_string(f) + "): link formula agrees", betti_via_links(delta, f) == t);
    }
  }
  s.check("odd polygon stand-ins in the corpus", seen >= 4, std::to_string(seen) + " found");
}

void suite_pyramid_theorem(Suite& s) {
  s.use({"s_equals_one", "is_pyramid", "facet_nerve", "s_real_lower_via_xi", "s_real_exact", "s_bounds"});
  const auto entries = load_corpus(corpus_dir(s.opt));
  check_expectations(s, entries, {"s_equals_one", "apex"});
  Tally agree, witness, lower;
  for (const auto& e : entries) {
    if (!e.polytope) continue;
    const Polytope& p = *e.polytope;
    const SEqualsOneResult r = s_equals_one(p);
    ++agree.cases;
    if (r.equals_one != is_pyramid(p).has_value()) agree.fail(e.name);
    const SimplicialComplex kp = facet_nerve(p);
    if (r.equals_one) {
      ++lower.cases;
      if (s_bounds(kp).s_real_upper.value != 1) lower.fail(e.name + ": pyramid with s_R > 1");
      continue;
    }
    ++witness.cases;
    if (!r.disjoint_nonfaces) {
      witness.fail(e.name + ": no disjoint pair");
    } else {
      const auto& n = kp.minimal_nonfaces();
      const auto [a, b] = *r.disjoint_nonfaces;
      const bool ok = !a.intersects(b) && std::find(n.begin(), n.end(), a) != n.end() &&
                      std::find(n.begin(), n.end(), b) != n.end();
      if (!ok) witness.fail(e.name + ": bad pair");
    }
    ++lower.cases;
    const XiSearchResult xi = s_real_lower_via_xi(kp, 2);
    if (!xi.map || !validate_xi(kp, *xi.map)) lower.fail(e.name + ": no xi map for k = 2");
    if (kp.num_vertices() <= 12 && s_real_exact(kp).value() < 2) lower.fail(e.name + ": s_R(K_P) < 2");
  }
  s.check("s(P) = 1 criterion agrees with is_pyramid on every corpus polytope", agree);
  s.check("every non-pyramid has two disjoint minimal nonfaces of K_P", witness);
  s.check("non-pyramids have s_R(K_P) >= 2 and pyramids s_R(K_P) = 1", lower);
}

void suite_xi_criterion(Suite& s) {
  s.use({"s_real_lower_via_xi", "s_real_exact", "minimal_odd_dependences", "s_bounds", "eta_certificate_check",
         "wedge_multiply", "rank_gf2"});
  const auto entries = load_corpus(corpus_dir(s.opt));
  check_expectations(s, entries, {"s_real"});

  auto criterion = [](const SimplicialComplex& k, Tally& t, Tally& chain) {
    const RealBuchstaberResult r = s_real_exact(k);
    ++chain.cases;
    const int top = k.num_vertices() - k.dimension() - 1;
    if (r.status != RealBuchstaberResult::Status::Exact || r.value() < 1 || r.value() > top ||
        !validate_witness(k, *r.witness))
      chain.fail(describe(k));
    for (int dim = 1; dim <= 3; ++dim) {
      ++t.cases;
      const XiSearchResult xi = s_real_lower_via_xi(k, dim);
      const bool found = xi.map.has_value() && validate_xi(k, *xi.map);
      if (found != (r.value() >= dim))
        t.fail(describe(k) + " k=" + std::to_string(dim) + " xi " + (found ? "found" : "absent") + ", s_R = " +
               std::to_string(r.value()));
    }
  };
  Tally exhaustive, chain;
  for (int m = 1; m <= std::min(s.opt.xi_exhaustive_max_m, word_table::kMaxVertices); ++m)
    for (std::uint64_t t : word_table::all_complexes(m))
      if (t != full_word(m)) criterion(from_word(t, m), exhaustive, chain);
  s.check("xi map exists iff s_R >= k (k <= 3), every complex with m <= " + std::to_string(s.opt.xi_exhaustive_max_m),
          exhaustive);
  std::mt19937_64 rng(s.opt.seed ^ 0x5005);
  Tally sampled;
  for (int m = s.opt.xi_exhaustive_max_m + 1; m <= s.opt.xi_sample_max_m; ++m)
    for (const auto& k : sample_complexes(m, s.opt.xi_samples, rng)) criterion(k, sampled, chain);
  for (const auto& nc : corpus_complexes(entries))
    if (!nc.complex.is_simplex() && nc.complex.num_vertices() <= 10) criterion(nc.complex, sampled, chain);
  s.check("xi map exists iff s_R >= k (k <= 3), random complexes m = " + std::to_string(s.opt.xi_exhaustive_max_m + 1) +
              ".." + std::to_string(s.opt.xi_sample_max_m) + " and corpus complexes",
          sampled);
  s.check("1 <= s_R <= m - dim - 1 with a re-validated witness", chain);

  // Named values.
  const SimplicialComplex c4 = SimplicialComplex::from_minimal_nonfaces(4, {VertexSet(0b0101), VertexSet(0b1010)});
  const SBoundsReport b4 = s_bounds(c4);
  s.check("4-cycle: s = s_R = 2", b4.s_exact && b4.s_lower.value == 2 && b4.s_real_lower.value == 2);
  const SBoundsReport bd = s_bounds(SimplicialComplex::simplex_boundary(5));
  s.check("boundary of a simplex: s = s_R = 1", bd.s_exact && bd.s_lower.value == 1 && bd.s_real_upper.value == 1);
  s.check("no ghost-only complex has smaller s_R than m", s_real_exact(SimplicialComplex::empty(4)).value() == 4);

  Tally wedge;
  for (const auto& k : sample_complexes(4, 12, rng)) {
    const int m = k.num_vertices();
    for (int v = 0; v < m; ++v) {
      std::vector<int> l(static_cast<std::size_t>(m), 1);
      l[static_cast<std::size_t>(v)] = 2;
      ++wedge.cases;
      if (s_real_exact(wedge_multiply(k, l)).value() != s_real_exact(k).value()) wedge.fail(describe(k));
    }
  }
  s.check("s_R is invariant under simplicial wedges", wedge);

  const std::size_t counts[] = {0, 0, 1, 7, 35 + 168};
  bool dep_ok = true;
  for (int k = 1; k <= 4; ++k) dep_ok = dep_ok && minimal_odd_dependences(k).size() == counts[k];
  s.check("odd minimal dependences: 0, 1, 7, 203 for k = 1..4", dep_ok);

  // Hemisphere certificates from a xi map.
  if (const CorpusEntry* oct = find_entry(entries, "octahedron"); oct && oct->polytope) {
    const PointConfiguration x = gale_diagram(*oct->polytope);
    const SimplicialComplex nerve = nerve_complex(*oct->polytope);
    const XiSearchResult xi = s_real_lower_via_xi(nerve, 3);
    bool ok = xi.map && validate_xi(nerve, *xi.map);
    if (ok) ok = eta_certificate_check(x, 3, eta_from_xi(x, nerve, *xi.map));
    s.check("octahedron: xi map for k = 3 yields a valid hemisphere certificate", ok);
  }
  if (const CorpusEntry* pent = find_entry(entries, "pentagon-config"); pent && pent->configuration) {
    const std::vector<RationalVector> same(3, RationalVector{Rational(1), Rational(0)});
    s.check("pentagon rays with one repeated direction fail the certificate",
            !eta_certificate_check(*pent->configuration, 2, same));
    s.check("k = 1 certificate holds vacuously",
            eta_certificate_check(*pent->configuration, 1, {RationalVector{Rational(0), Rational(1)}}));
  }
}

void suite_coloring(Suite& s) {
  s.use({"proper_coloring_search", "minimal_odd_dependences"});
  for (int k = 1; k <= 4; ++k) {
    const auto fewer = proper_coloring_search(k, k - 1);
    s.check("k = " + std::to_string(k) + ": no proper coloring with " + std::to_string(k - 1) + " colors",
            !fewer.coloring.has_value(), "search tree exhausted after " + std::to_string(fewer.nodes) + " nodes");
    const auto enough = proper_coloring_search(k, k);
    s.check("k = " + std::to_string(k) + ": proper coloring with " + std::to_string(k) + " colors",
            enough.coloring.has_value() && is_proper(*enough.coloring), std::to_string(enough.nodes) + " nodes");
  }
}

void suite_fano(Suite& s) {
  s.use({"fano_lines"});
  const auto lines = fano_lines();
  auto has = [&](Z2Set l) { return std::find(lines.begin(), lines.end(), l) != lines.end(); };
  s.check("7 Fano lines, including {1,2,3} and {1,6,7}",
          lines.size() == 7 && has((1U << 1) | (1U << 2) | (1U << 3)) && has((1U << 1) | (1U << 6) | (1U << 7)));
  const FanoTwoColoringReport rep = check_fano_two_colorings();
  s.check("every two-coloring of the Fano plane has a single-colored line",
          rep.total == 128 && rep.with_single_colored_line == 128,
          std::to_string(rep.with_single_colored_line) + " of " + std::to_string(rep.total));
}

void suite_fano_circle(Suite& s) {
  s.use({"fano_circle_experiment"});
  FanoDirections constant{};
  for (auto& e : constant) e = {3, 1};
  const auto c = first_line_avoiding_zero(constant);
  s.check("constant directions: the first line avoids 0", c && *c == 0);
  FanoDirections spread{};
  for (auto& e : spread) e = {1, 0};
  spread[0] = {1000, 0};
  spread[1] = {-500, 866};
  spread[2] = {-500, -866};
  const auto sp = first_line_avoiding_zero(spread);
  s.check("line {1,2,3} at mutual angles near 120 degrees captures 0, another line avoids it", sp && *sp != 0);

  const FanoCircleReport rep = fano_circle_experiment(s.opt.fano_trials, s.opt.seed, s.opt.threads);
  std::string detail = std::to_string(rep.trials) + " trials, seed " + std::to_string(rep.seed);
  if (rep.first_counterexample_trial) detail += ", first counterexample at trial " + std::to_string(*rep.first_counterexample_trial);
  s.check("no counterexample in the seeded experiment", rep.counterexamples == 0, detail);
  const FanoCircleReport one = fano_circle_experiment(2000, s.opt.seed, 1);
  const FanoCircleReport many = fano_circle_experiment(2000, s.opt.seed, 5);
  s.check("experiment outcome does not depend on the thread count",
          one.counterexamples == many.counterexamples && one.first_counterexample_trial == many.first_counterexample_trial);
}

const std::vector<std::pair<std::string, std::function<void(Suite&)>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<void(Suite&)>>> r = {
      {"duality-involution", suite_duality_involution},
      {"alexander-homology", suite_alexander_homology},
      {"link-sub", suite_link_sub},
      {"gale-alexander", suite_gale_alexander},
      {"constellation-spheres", suite_constellation_spheres},
      {"linear-resolution", suite_linear_resolution},
      {"betti-fvector", suite_betti_fvector},
      {"polygon-betti", suite_polygon_betti},
      {"pyramid-theorem", suite_pyramid_theorem},
      {"xi-criterion", suite_xi_criterion},
      {"coloring", suite_coloring},
      {"fano", suite_fano},
      {"fano-circle", suite_fano_circle},
  };
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& options, OperationLog* log) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    Suite s{options, log, {}};
    s.rep.suite = name;
    const auto start = Clock::now();
    try {
      fn(s);
    } catch (const std::exception& e) {
      s.check("suite completed without an error", false, e.what());
    }
    s.rep.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return s.rep;
  }
  throw Error("unknown suite \"" + name + "\"");
}

std::vector<std::string> public_operations() {
  return {"rank",
          "kernel_basis",
          "rank_gf2",
          "zero_in_convex_hull",
          "strictly_positive_dependence",
          "from_maximal_faces",
          "from_minimal_nonfaces",
          "is_face",
          "alexander_dual",
          "link",
          "full_subcomplex",
          "skeleton",
          "minimal_nonfaces",
          "join",
          "wedge_multiply",
          "is_flag",
          "f_vector",
          "boundary_matrix",
          "reduced_betti",
          "is_homology_sphere_like",
          "hochster_betti",
          "has_linear_resolution",
          "betti_via_links",
          "polytope_betti_from_gale",
          "polytope_from_vertices",
          "face_lattice",
          "nerve_complex",
          "facet_nerve",
          "f_nl",
          "is_pyramid",
          "is_k_neighborly",
          "gale_diagram",
          "constellation_complex",
          "covers_sphere",
          "is_good",
          "is_nondegenerate",
          "with_multiplicities",
          "direct_sum",
          "verify_gale_alexander",
          "s_real_exact",
          "minimal_odd_dependences",
          "s_real_lower_via_xi",
          "s_bounds",
          "s_equals_one",
          "eta_certificate_check",
          "proper_coloring_search",
          "fano_lines",
          "fano_circle_experiment"};
}

int regenerate_oracles(const VerifyOptions& options) {
  static const char* polytope_keys[] = {"f_vector", "facets", "apex", "neighborly", "f_nl", "gale_alexander", "s_equals_one"};
  static const char* config_keys[] = {"minimal_nonfaces", "covers", "good", "nondegenerate", "betti"};
  static const char* complex_keys[] = {"betti", "s_real"};
  int rewritten = 0;
  for (auto& e : load_corpus(corpus_dir(options))) {
    std::vector<std::string> keys;
    if (e.polytope) keys.insert(keys.end(), std::begin(polytope_keys), std::end(polytope_keys));
    if (e.configuration) keys.insert(keys.end(), std::begin(config_keys), std::end(config_keys));
    if (e.complex) keys.insert(keys.end(), std::begin(complex_keys), std::end(complex_keys));
    for (const auto& [key, item] : e.expected.items())
      if (item["source"] == "derived" && std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
    const Json before = e.expected;
    for (const auto& key : keys) {
      if (e.expected.contains(key) && e.expected[key]["source"] != "derived") continue;
      const auto v = computed_value(e, key);
      if (!v) continue;
      e.expected[key] = {{"value", *v}, {"source", "derived"}};
    }
    if (e.expected != before) {
      save_corpus_entry(e);
      ++rewritten;
    }
  }
  return rewritten;
}

}  // namespace constellation
