#include "psa/io.hpp"

#include <json.hpp>

#include <initializer_list>
#include <sstream>
#include <stdexcept>

#include "detail.hpp"

namespace psa {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

void require(bool cond, const std::string& msg) {
  if (!cond) fail(msg);
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

const json& get_key(const json& j, const char* key, const std::string& ctx) {
  auto it = j.find(key);
  if (it == j.end()) fail(ctx + ": missing key \"" + std::string(key) + "\"");
  return *it;
}

void expect_keys(const json& j, std::initializer_list<const char*> allowed,
                 const std::string& ctx) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : allowed)
      if (it.key() == k) {
        known = true;
        break;
      }
    if (!known) fail(ctx + ": unknown key \"" + it.key() + "\"");
  }
}

int get_int(const json& j, const std::string& ctx) {
  if (!j.is_number_integer()) fail(ctx + ": expected an integer");
  return j.get<int>();
}

Rat get_rat(const json& j, const std::string& ctx) {
  if (!j.is_string()) fail(ctx + ": scalar must be a string \"p\" or \"p/q\"");
  try {
    return Rat::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    fail(ctx + ": " + e.what());
  }
}

int get_index(const json& j, int dim, const std::string& ctx) {
  int i = get_int(j, ctx);
  if (i < 0 || i >= dim)
    fail(ctx + ": index " + std::to_string(i) + " out of range for dimension " +
         std::to_string(dim));
  return i;
}

const json& entry_shape(const json& arr, std::size_t n, std::size_t width,
                        const std::string& ctx) {
  const json& e = arr[n];
  if (!e.is_array() || e.size() != width)
    fail(ctx + ": expected an array of " + std::to_string(width) + " items");
  return e;
}

GradedBasis parse_basis_keys(const json& j, const char* kdim, const char* kpar,
                             const char* klab, const std::string& ctx) {
  int dim = get_int(get_key(j, kdim, ctx), ctx + "." + kdim);
  if (dim < 0) fail(ctx + "." + kdim + ": dimension must be non-negative");
  const json& par = get_key(j, kpar, ctx);
  if (!par.is_array() || static_cast<int>(par.size()) != dim)
    fail(ctx + "." + kpar + ": expected an array of length " + std::to_string(dim));
  std::vector<Parity> ps;
  ps.reserve(par.size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    int v = get_int(par[i], ctx + "." + kpar + " entry " + std::to_string(i));
    if (v != 0 && v != 1)
      fail(ctx + "." + kpar + " entry " + std::to_string(i) + ": parity must be 0 or 1");
    ps.push_back(v);
  }
  GradedBasis b = make_basis(std::move(ps));
  if (auto it = j.find(klab); it != j.end()) {
    if (!it->is_array() || static_cast<int>(it->size()) != dim)
      fail(ctx + "." + klab + ": expected an array of length " + std::to_string(dim));
    std::vector<std::string> labels;
    labels.reserve(it->size());
    for (std::size_t i = 0; i < it->size(); ++i) {
      if (!(*it)[i].is_string())
        fail(ctx + "." + klab + " entry " + std::to_string(i) + ": expected a string");
      labels.push_back((*it)[i].get<std::string>());
    }
    b.label = std::move(labels);
  }
  return b;
}

BilinearLaw parse_law(const json& arr, const GradedBasis& b, const std::string& name) {
  if (!arr.is_array()) fail(name + ": expected an array of entries");
  BilinearLaw law(b.dim());
  for (std::size_t n = 0; n < arr.size(); ++n) {
    std::string ctx = name + " entry " + std::to_string(n);
    const json& e = entry_shape(arr, n, 4, ctx);
    int i = get_index(e[0], b.dim(), ctx);
    int j = get_index(e[1], b.dim(), ctx);
    int k = get_index(e[2], b.dim(), ctx);
    Rat v = get_rat(e[3], ctx);
    if (((b.p(i) + b.p(j)) & 1) != b.p(k))
      fail(ctx + ": evenness violation at (" + std::to_string(i) + "," + std::to_string(j) +
           "): target index " + std::to_string(k) + " has the wrong parity");
    law.add(i, j, k, v);
  }
  return law;
}

Cooperation parse_coop(const json& arr, const GradedBasis& b, const std::string& name) {
  if (!arr.is_array()) fail(name + ": expected an array of entries");
  Cooperation d(b.dim());
  for (std::size_t n = 0; n < arr.size(); ++n) {
    std::string ctx = name + " entry " + std::to_string(n);
    const json& e = entry_shape(arr, n, 4, ctx);
    int i = get_index(e[0], b.dim(), ctx);
    int j = get_index(e[1], b.dim(), ctx);
    int k = get_index(e[2], b.dim(), ctx);
    Rat v = get_rat(e[3], ctx);
    if (((b.p(j) + b.p(k)) & 1) != b.p(i))
      fail(ctx + ": evenness violation at (" + std::to_string(i) + "): image term (" +
           std::to_string(j) + "," + std::to_string(k) + ") has the wrong parity");
    d.add(i, j, k, v);
  }
  return d;
}

Tensor2 parse_tensor2(const json& arr, int dim, const std::string& name) {
  if (!arr.is_array()) fail(name + ": expected an array of entries");
  Tensor2 t;
  for (std::size_t n = 0; n < arr.size(); ++n) {
    std::string ctx = name + " entry " + std::to_string(n);
    const json& e = entry_shape(arr, n, 3, ctx);
    int i = get_index(e[0], dim, ctx);
    int j = get_index(e[1], dim, ctx);
    t.add(i, j, get_rat(e[2], ctx));
  }
  return t;
}

RepMap zero_action(int base_dim, int carrier_dim) {
  RepMap rm;
  rm.action.assign(static_cast<std::size_t>(base_dim), Mat(carrier_dim, carrier_dim));
  return rm;
}

RepMap parse_action(const json& arr, const GradedBasis& base, const GradedBasis& car,
                    const std::string& name) {
  if (!arr.is_array()) fail(name + ": expected an array of entries");
  RepMap rm = zero_action(base.dim(), car.dim());
  for (std::size_t n = 0; n < arr.size(); ++n) {
    std::string ctx = name + " entry " + std::to_string(n);
    const json& e = entry_shape(arr, n, 4, ctx);
    int k = get_index(e[0], base.dim(), ctx);
    int a = get_index(e[1], car.dim(), ctx);
    int b = get_index(e[2], car.dim(), ctx);
    Rat v = get_rat(e[3], ctx);
    if (car.p(a) != ((base.p(k) + car.p(b)) & 1))
      fail(ctx + ": evenness violation: acting index " + std::to_string(k) + " maps " +
           std::to_string(b) + " to " + std::to_string(a) + " of the wrong parity");
    rm.action[static_cast<std::size_t>(k)].at(a, b) += v;
  }
  return rm;
}

Mat parse_operator(const json& arr, const GradedBasis& base, const GradedBasis& car,
                   const std::string& name) {
  if (!arr.is_array()) fail(name + ": expected an array of entries");
  Mat m(base.dim(), car.dim());
  for (std::size_t n = 0; n < arr.size(); ++n) {
    std::string ctx = name + " entry " + std::to_string(n);
    const json& e = entry_shape(arr, n, 3, ctx);
    int i = get_index(e[0], base.dim(), ctx);
    int j = get_index(e[1], car.dim(), ctx);
    Rat v = get_rat(e[2], ctx);
    if (base.p(i) != car.p(j))
      fail(ctx + ": evenness violation: entry (" + std::to_string(i) + "," +
           std::to_string(j) + ") pairs different parities");
    m.at(i, j) += v;
  }
  return m;
}

std::vector<int> parse_indices(const json& arr, int dim, const std::string& name) {
  if (!arr.is_array()) fail(name + ": expected an array of indices");
  std::vector<int> out;
  out.reserve(arr.size());
  for (std::size_t n = 0; n < arr.size(); ++n)
    out.push_back(get_index(arr[n], dim, name + " entry " + std::to_string(n)));
  return out;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

json law_entries(const BilinearLaw& l) {
  json arr = json::array();
  for (const auto& [ij, el] : l.c)
    for (int k = 0; k < el.dim(); ++k)
      if (!el[k].is_zero())
        arr.push_back(json::array({ij.first, ij.second, k, el[k].str()}));
  return arr;
}

json coop_entries(const Cooperation& d) {
  json arr = json::array();
  for (const auto& [i, t2] : d.im)
    for (const auto& [jk, v] : t2.c)
      arr.push_back(json::array({i, jk.first, jk.second, v.str()}));
  return arr;
}

json tensor2_entries(const Tensor2& t) {
  json arr = json::array();
  for (const auto& [ij, v] : t.c)
    arr.push_back(json::array({ij.first, ij.second, v.str()}));
  return arr;
}

json action_entries(const RepMap& rm) {
  json arr = json::array();
  for (std::size_t k = 0; k < rm.action.size(); ++k) {
    const Mat& m = rm.action[k];
    for (int a = 0; a < m.rows; ++a)
      for (int b = 0; b < m.cols; ++b)
        if (!m.at(a, b).is_zero())
          arr.push_back(json::array({static_cast<int>(k), a, b, m.at(a, b).str()}));
  }
  return arr;
}

json operator_entries(const Mat& m) {
  json arr = json::array();
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (!m.at(i, j).is_zero()) arr.push_back(json::array({i, j, m.at(i, j).str()}));
  return arr;
}

void put_basis_keys(json& j, const GradedBasis& b, const char* kdim, const char* kpar,
                    const char* klab) {
  j[kdim] = b.dim();
  j[kpar] = b.parity;
  if (!b.label.empty()) j[klab] = b.label;
}

// ---------------------------------------------------------------------------
// Shared assembly
// ---------------------------------------------------------------------------

MatchedPairData make_pair_data(const AlgebraFile& f) {
  return MatchedPairData{f.poisson(),
                         PoissonSuper{f.second, f.second_bracket, f.second_product},
                         f.rho1,
                         f.phi1,
                         f.rho2,
                         f.phi2};
}

ModulePoissonData make_module_data(const AlgebraFile& f) {
  return ModulePoissonData{f.poisson(),
                           PoissonSuper{f.carrier, f.carrier_bracket, f.carrier_product},
                           f.bracket_action, f.product_action};
}

/// The regular module: P acting on itself by bracket and product.
ModulePoissonData regular_module(const PoissonSuper& p) {
  PoissonRep ad = adjoint_rep(p);
  return ModulePoissonData{p, p, ad.psi_bracket, ad.psi_product};
}

Mat gram_of(const Tensor2& form, int dim) {
  Mat g(dim, dim);
  for (const auto& [ij, v] : form.c) g.at(ij.first, ij.second) = v;
  return g;
}

/// Suites that make sense for a bare (bi)algebra, shared with grid_search.
Report basic_predicate(const PoissonBialgebra& pb, const std::string& name) {
  if (name == "lie") return check_lie(LieSuper{pb.p.basis, pb.p.bracket});
  if (name == "assoc") return check_comm_assoc(AssocSuper{pb.p.basis, pb.p.product});
  if (name == "poisson") return check_poisson(pb.p);
  if (name == "lie-bialgebra")
    return check_lie_superbialgebra(LieSuper{pb.p.basis, pb.p.bracket}, pb.cobracket);
  if (name == "inf-bialgebra")
    return check_inf_superbialgebra(AssocSuper{pb.p.basis, pb.p.product}, pb.coproduct);
  if (name == "poisson-bialgebra") return check_poisson_bialgebra(pb);
  fail("unknown predicate \"" + name + "\"");
}

bool is_basic_predicate(const std::string& name) {
  return name == "lie" || name == "assoc" || name == "poisson" ||
         name == "lie-bialgebra" || name == "inf-bialgebra" ||
         name == "poisson-bialgebra";
}

OOperator make_o_operator(const AlgebraFile& f, const Options& o) {
  ModulePoissonData data =
      f.has_reps ? make_module_data(f) : regular_module(f.poisson());
  const GradedBasis& car = data.carrier_algebra.basis;
  Mat t;
  if (!o.t_spec.empty()) {
    if (o.t_spec == "id") {
      require(car.dim() == f.basis.dim() && car.parity == f.basis.parity,
              "T \"id\" needs a carrier graded like the algebra itself");
      t = Mat(f.basis.dim(), f.basis.dim());
      for (int i = 0; i < f.basis.dim(); ++i) t.at(i, i) = Rat(1);
    } else if (o.t_spec == "zero") {
      t = Mat(f.basis.dim(), car.dim());
    } else {
      fail("unknown T specification \"" + o.t_spec + "\" (expected \"id\" or \"zero\")");
    }
  } else if (f.has_t) {
    t = f.t;
  } else {
    fail("an operator is required: give a T block or the id/zero shorthand");
  }
  Rat w;
  if (!o.weight.empty()) {
    try {
      w = Rat::parse(o.weight);
    } catch (const std::exception& e) {
      fail(std::string("weight: ") + e.what());
    }
  } else if (f.has_weight) {
    w = f.weight;
  } else {
    fail("a weight scalar is required");
  }
  return OOperator{std::move(data), std::move(t), std::move(w)};
}

}  // namespace

AlgebraFile parse_algebra(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(std::string("syntax error: ") + e.what());
  }
  if (!j.is_object()) fail("top level: expected an object");
  expect_keys(j,
              {"schema", "dim", "parity", "label", "bracket", "product", "cobracket",
               "coproduct", "r", "reps", "T", "weight", "post", "pair", "manin"},
              "top level");
  const json& schema = get_key(j, "schema", "top level");
  if (!schema.is_string() || schema.get<std::string>() != "psa/1")
    fail("schema: expected \"psa/1\"");

  AlgebraFile f;
  f.basis = parse_basis_keys(j, "dim", "parity", "label", "top level");
  const int n = f.basis.dim();
  f.bracket = BilinearLaw(n);
  f.product = BilinearLaw(n);
  f.cobracket = Cooperation(n);
  f.coproduct = Cooperation(n);

  if (auto it = j.find("bracket"); it != j.end()) {
    f.has_bracket = true;
    f.bracket = parse_law(*it, f.basis, "bracket");
  }
  if (auto it = j.find("product"); it != j.end()) {
    f.has_product = true;
    f.product = parse_law(*it, f.basis, "product");
  }
  if (auto it = j.find("cobracket"); it != j.end()) {
    f.has_cobracket = true;
    f.cobracket = parse_coop(*it, f.basis, "cobracket");
  }
  if (auto it = j.find("coproduct"); it != j.end()) {
    f.has_coproduct = true;
    f.coproduct = parse_coop(*it, f.basis, "coproduct");
  }
  if (auto it = j.find("r"); it != j.end()) {
    f.has_r = true;
    f.r = parse_tensor2(*it, n, "r");
  }
  if (auto it = j.find("reps"); it != j.end()) {
    if (!it->is_object()) fail("reps: expected an object");
    expect_keys(*it,
                {"carrier_dim", "carrier_parity", "carrier_label", "carrier_bracket",
                 "carrier_product", "bracket_action", "product_action"},
                "reps");
    f.has_reps = true;
    f.carrier = parse_basis_keys(*it, "carrier_dim", "carrier_parity", "carrier_label",
                                 "reps");
    f.carrier_bracket = BilinearLaw(f.carrier.dim());
    f.carrier_product = BilinearLaw(f.carrier.dim());
    if (auto c = it->find("carrier_bracket"); c != it->end())
      f.carrier_bracket = parse_law(*c, f.carrier, "reps.carrier_bracket");
    if (auto c = it->find("carrier_product"); c != it->end())
      f.carrier_product = parse_law(*c, f.carrier, "reps.carrier_product");
    f.bracket_action = zero_action(n, f.carrier.dim());
    f.product_action = zero_action(n, f.carrier.dim());
    if (auto c = it->find("bracket_action"); c != it->end())
      f.bracket_action = parse_action(*c, f.basis, f.carrier, "reps.bracket_action");
    if (auto c = it->find("product_action"); c != it->end())
      f.product_action = parse_action(*c, f.basis, f.carrier, "reps.product_action");
  }
  if (auto it = j.find("T"); it != j.end()) {
    f.has_t = true;
    f.t = parse_operator(*it, f.basis, f.has_reps ? f.carrier : f.basis, "T");
  }
  if (auto it = j.find("weight"); it != j.end()) {
    f.has_weight = true;
    f.weight = get_rat(*it, "weight");
  }
  if (auto it = j.find("post"); it != j.end()) {
    if (!it->is_object()) fail("post: expected an object");
    expect_keys(*it, {"bracket", "diamond", "dot", "succ"}, "post");
    f.has_post = true;
    f.post_bracket = BilinearLaw(n);
    f.post_diamond = BilinearLaw(n);
    f.post_dot = BilinearLaw(n);
    f.post_succ = BilinearLaw(n);
    if (auto c = it->find("bracket"); c != it->end())
      f.post_bracket = parse_law(*c, f.basis, "post.bracket");
    if (auto c = it->find("diamond"); c != it->end())
      f.post_diamond = parse_law(*c, f.basis, "post.diamond");
    if (auto c = it->find("dot"); c != it->end())
      f.post_dot = parse_law(*c, f.basis, "post.dot");
    if (auto c = it->find("succ"); c != it->end())
      f.post_succ = parse_law(*c, f.basis, "post.succ");
  }
  if (auto it = j.find("pair"); it != j.end()) {
    if (!it->is_object()) fail("pair: expected an object");
    expect_keys(*it, {"second", "rho1", "phi1", "rho2", "phi2"}, "pair");
    f.has_pair = true;
    const json& s = get_key(*it, "second", "pair");
    if (!s.is_object()) fail("pair.second: expected an object");
    expect_keys(s, {"dim", "parity", "label", "bracket", "product"}, "pair.second");
    f.second = parse_basis_keys(s, "dim", "parity", "label", "pair.second");
    f.second_bracket = BilinearLaw(f.second.dim());
    f.second_product = BilinearLaw(f.second.dim());
    if (auto c = s.find("bracket"); c != s.end())
      f.second_bracket = parse_law(*c, f.second, "pair.second.bracket");
    if (auto c = s.find("product"); c != s.end())
      f.second_product = parse_law(*c, f.second, "pair.second.product");
    f.rho1 = zero_action(n, f.second.dim());
    f.phi1 = zero_action(n, f.second.dim());
    f.rho2 = zero_action(f.second.dim(), n);
    f.phi2 = zero_action(f.second.dim(), n);
    if (auto c = it->find("rho1"); c != it->end())
      f.rho1 = parse_action(*c, f.basis, f.second, "pair.rho1");
    if (auto c = it->find("phi1"); c != it->end())
      f.phi1 = parse_action(*c, f.basis, f.second, "pair.phi1");
    if (auto c = it->find("rho2"); c != it->end())
      f.rho2 = parse_action(*c, f.second, f.basis, "pair.rho2");
    if (auto c = it->find("phi2"); c != it->end())
      f.phi2 = parse_action(*c, f.second, f.basis, "pair.phi2");
  }
  if (auto it = j.find("manin"); it != j.end()) {
    if (!it->is_object()) fail("manin: expected an object");
    expect_keys(*it, {"plus", "minus", "form"}, "manin");
    f.has_manin = true;
    f.plus_indices = parse_indices(get_key(*it, "plus", "manin"), n, "manin.plus");
    f.minus_indices = parse_indices(get_key(*it, "minus", "manin"), n, "manin.minus");
    f.form = parse_tensor2(get_key(*it, "form", "manin"), n, "manin.form");
  }
  return f;
}

std::string serialize_algebra(const AlgebraFile& f) {
  json j;
  j["schema"] = "psa/1";
  put_basis_keys(j, f.basis, "dim", "parity", "label");
  if (f.has_bracket) j["bracket"] = law_entries(f.bracket);
  if (f.has_product) j["product"] = law_entries(f.product);
  if (f.has_cobracket) j["cobracket"] = coop_entries(f.cobracket);
  if (f.has_coproduct) j["coproduct"] = coop_entries(f.coproduct);
  if (f.has_r) j["r"] = tensor2_entries(f.r);
  if (f.has_reps) {
    json r;
    put_basis_keys(r, f.carrier, "carrier_dim", "carrier_parity", "carrier_label");
    r["carrier_bracket"] = law_entries(f.carrier_bracket);
    r["carrier_product"] = law_entries(f.carrier_product);
    r["bracket_action"] = action_entries(f.bracket_action);
    r["product_action"] = action_entries(f.product_action);
    j["reps"] = r;
  }
  if (f.has_t) j["T"] = operator_entries(f.t);
  if (f.has_weight) j["weight"] = f.weight.str();
  if (f.has_post) {
    json p;
    p["bracket"] = law_entries(f.post_bracket);
    p["diamond"] = law_entries(f.post_diamond);
    p["dot"] = law_entries(f.post_dot);
    p["succ"] = law_entries(f.post_succ);
    j["post"] = p;
  }
  if (f.has_pair) {
    json s;
    put_basis_keys(s, f.second, "dim", "parity", "label");
    s["bracket"] = law_entries(f.second_bracket);
    s["product"] = law_entries(f.second_product);
    json p;
    p["second"] = s;
    p["rho1"] = action_entries(f.rho1);
    p["phi1"] = action_entries(f.phi1);
    p["rho2"] = action_entries(f.rho2);
    p["phi2"] = action_entries(f.phi2);
    j["pair"] = p;
  }
  if (f.has_manin) {
    json m;
    json plus = f.plus_indices;
    json minus = f.minus_indices;
    m["plus"] = plus;
    m["minus"] = minus;
    m["form"] = tensor2_entries(f.form);
    j["manin"] = m;
  }
  return j.dump(2) + "\n";
}

Report run_suite(const AlgebraFile& f, const std::string& suite, const Options& o) {
  if (is_basic_predicate(suite)) return basic_predicate(f.bialgebra(), suite);
  if (suite == "matched-pair") {
    require(f.has_pair, "the matched-pair suite requires a pair block");
    return check_matched_pair_poisson(make_pair_data(f));
  }
  if (suite == "manin") {
    require(f.has_manin, "the manin suite requires a manin block");
    BilinearForm b{f.basis, gram_of(f.form, f.basis.dim())};
    return check_manin_triple(f.poisson(), f.plus_indices, f.minus_indices, b);
  }
  if (suite == "coboundary") {
    require(f.has_r, "the coboundary suite requires an r block");
    return coboundary_conditions(f.poisson(), make_r(f.basis, f.r));
  }
  if (suite == "pybe") return run_ybe(f, "pybe");
  if (suite == "o-operator") {
    if (f.has_reps) {
      OOperator op = make_o_operator(f, Options{o.pairing, o.bound, "", ""});
      Report rep = check_module_poisson(op.data);
      rep.merge(check_o_operator(op));
      return rep;
    }
    require(f.has_t, "the o-operator suite requires a T block");
    require(f.has_weight, "the o-operator suite requires a weight");
    return check_rota_baxter(f.poisson(), f.t, f.weight);
  }
  if (suite == "post-poisson") {
    require(f.has_post, "the post-poisson suite requires a post block");
    return check_post_poisson(
        PostPoisson{f.basis, f.post_bracket, f.post_diamond, f.post_dot, f.post_succ});
  }
  fail("unknown suite \"" + suite + "\"");
}

AlgebraFile run_construct(const AlgebraFile& f, const std::string& what,
                          const Options& o) {
  AlgebraFile out;
  auto put_poisson = [&out](const PoissonSuper& p) {
    out.basis = p.basis;
    out.has_bracket = out.has_product = true;
    out.bracket = p.bracket;
    out.product = p.product;
  };
  auto put_bialgebra = [&](const PoissonBialgebra& pb) {
    put_poisson(pb.p);
    out.has_cobracket = out.has_coproduct = true;
    out.cobracket = pb.cobracket;
    out.coproduct = pb.coproduct;
  };
  auto put_post = [&out](const PostPoisson& pp) {
    out.basis = pp.basis;
    out.has_post = true;
    out.post_bracket = pp.op_bracket;
    out.post_diamond = pp.op_diamond;
    out.post_dot = pp.op_dot;
    out.post_succ = pp.op_succ;
  };

  if (what == "double") {
    DoubleResult d = drinfeld_double(f.bialgebra(), o.pairing);
    put_bialgebra(d.bialgebra);
    out.has_r = true;
    out.r = d.canonical_r.tensor;
    return out;
  }
  if (what == "dualize") {
    put_bialgebra(dualize(f.bialgebra(), o.pairing));
    return out;
  }
  if (what == "semidirect") {
    require(f.has_reps, "semidirect requires a reps block");
    require(f.carrier_bracket.is_zero() && f.carrier_product.is_zero(),
            "semidirect acts on a plain module; remove the carrier operations");
    put_poisson(semidirect_product(
        f.poisson(), PoissonRep{f.carrier, f.bracket_action, f.product_action}));
    return out;
  }
  if (what == "bowtie") {
    require(f.has_pair, "bowtie requires a pair block");
    put_poisson(bowtie(make_pair_data(f)));
    return out;
  }
  if (what == "post") {
    OOperator op = make_o_operator(f, o);
    Report pre = check_o_operator(op);
    if (!pre.ok())
      fail("construct post: the operator fails " + pre.violations.front().law +
           ", so it is not an O-operator of the given weight");
    put_post(post_from_o_operator(op));
    return out;
  }
  if (what == "post-quasi") {
    require(f.has_r, "post-quasi requires an r block");
    put_post(post_from_quasitriangular(f.bialgebra(), make_r(f.basis, f.r), o.pairing));
    return out;
  }
  fail("unknown construction \"" + what + "\"");
}

Report run_ybe(const AlgebraFile& f, const std::string& which) {
  require(f.has_r, "ybe requires an r block");
  RMatrix r = make_r(f.basis, f.r);
  Report rep;
  auto add_tensor = [&rep](const char* law, const Tensor3& t) {
    if (t.is_zero()) return;
    rep.add(Violation{law, {}, detail::sparse_of(t)});
  };
  if (which == "cybe" || which == "pybe")
    add_tensor("cybe", cybe(LieSuper{f.basis, f.bracket}, r));
  if (which == "aybe" || which == "pybe")
    add_tensor("aybe", aybe(AssocSuper{f.basis, f.product}, r));
  if (which != "cybe" && which != "aybe" && which != "pybe")
    fail("unknown equation \"" + which + "\" (expected cybe, aybe, or pybe)");
  return rep;
}

std::string grid_search(const std::string& grid_json, const Options& o) {
  json g;
  try {
    g = json::parse(grid_json);
  } catch (const json::exception& e) {
    fail(std::string("grid: syntax error: ") + e.what());
  }
  if (!g.is_object()) fail("grid: expected an object");
  expect_keys(g, {"schema", "family", "parameters", "predicate", "bound"}, "grid");
  const json& schema = get_key(g, "schema", "grid");
  if (!schema.is_string() || schema.get<std::string>() != "psa/grid1")
    fail("grid.schema: expected \"psa/grid1\"");
  if (auto it = g.find("family"); it != g.end()) {
    if (!it->is_string() || it->get<std::string>() != "p2")
      fail("grid.family: the only supported family is \"p2\"");
  }
  const json& pred_j = get_key(g, "predicate", "grid");
  if (!pred_j.is_string()) fail("grid.predicate: expected a string");
  const std::string predicate = pred_j.get<std::string>();
  if (!is_basic_predicate(predicate))
    fail("grid.predicate: \"" + predicate + "\" is not applicable to the family");

  const json& params = get_key(g, "parameters", "grid");
  if (!params.is_object()) fail("grid.parameters: expected an object");
  static const char* names[7] = {"b", "c", "d", "k", "f", "c1", "c2"};
  expect_keys(params, {"b", "c", "d", "k", "f", "c1", "c2"}, "grid.parameters");
  std::vector<std::vector<Rat>> lists(7);
  for (int p = 0; p < 7; ++p) {
    const json& lj = get_key(params, names[p], "grid.parameters");
    std::string ctx = std::string("grid.parameters.") + names[p];
    if (!lj.is_array() || lj.empty()) fail(ctx + ": expected a nonempty array");
    for (std::size_t n = 0; n < lj.size(); ++n)
      lists[static_cast<std::size_t>(p)].push_back(
          get_rat(lj[n], ctx + " entry " + std::to_string(n)));
  }

  long long bound = 1000000;
  if (auto it = g.find("bound"); it != g.end()) {
    if (!it->is_number_integer() || it->get<long long>() <= 0)
      fail("grid.bound: expected a positive integer");
    bound = it->get<long long>();
  }
  if (o.bound >= 0) bound = o.bound;

  long long total = 1;
  for (const auto& l : lists) {
    total *= static_cast<long long>(l.size());
    if (total > bound)
      fail("grid size exceeds the bound of " + std::to_string(bound) + " tuples");
  }

  json passing = json::array();
  long long count = 0;
  std::array<std::size_t, 7> ix{};
  P2Params q;
  std::array<Rat*, 7> slot = {&q.b, &q.c, &q.d, &q.k, &q.f, &q.c1, &q.c2};
  bool done = false;
  while (!done) {
    for (int p = 0; p < 7; ++p)
      *slot[static_cast<std::size_t>(p)] =
          lists[static_cast<std::size_t>(p)][ix[static_cast<std::size_t>(p)]];
    if (basic_predicate(p2_bialgebra(q), predicate).ok()) {
      json tuple = json::array();
      for (int p = 0; p < 7; ++p) tuple.push_back(slot[static_cast<std::size_t>(p)]->str());
      passing.push_back(std::move(tuple));
      ++count;
    }
    // Advance the rightmost position (c2 innermost, b outermost).
    int p = 6;
    for (; p >= 0; --p) {
      if (++ix[static_cast<std::size_t>(p)] < lists[static_cast<std::size_t>(p)].size())
        break;
      ix[static_cast<std::size_t>(p)] = 0;
    }
    if (p < 0) done = true;
  }

  json result;
  result["count"] = count;
  result["passing"] = std::move(passing);
  result["total"] = total;
  return result.dump(2) + "\n";
}

std::string report_json(const Report& rep) {
  json j;
  j["ok"] = rep.ok();
  json vs = json::array();
  for (const auto& v : rep.violations) {
    json e;
    e["law"] = v.law;
    e["witness"] = v.witness;
    json d = json::array();
    for (const auto& [idx, val] : v.discrepancy)
      d.push_back(json::array({json(idx), val.str()}));
    e["discrepancy"] = std::move(d);
    vs.push_back(std::move(e));
  }
  j["violations"] = std::move(vs);
  return j.dump(2) + "\n";
}

std::string report_text(const Report& rep) {
  if (rep.ok()) return "ok\n";
  std::ostringstream os;
  for (const auto& v : rep.violations) {
    os << v.law << " witness=[";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      if (i) os << ",";
      os << v.witness[i];
    }
    os << "]";
    if (!v.discrepancy.empty()) {
      os << " discrepancy=";
      bool first = true;
      for (const auto& [idx, val] : v.discrepancy) {
        if (!first) os << "; ";
        first = false;
        os << "(";
        for (std::size_t i = 0; i < idx.size(); ++i) {
          if (i) os << ",";
          os << idx[i];
        }
        os << ")=" << val.str();
      }
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace psa
