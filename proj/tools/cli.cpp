#include "cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "boolsemi/differences.hpp"
#include "boolsemi/formula.hpp"
#include "boolsemi/morphism.hpp"
#include "boolsemi/order.hpp"
#include "boolsemi/properties.hpp"
#include "boolsemi/table_io.hpp"

namespace boolsemi::cli {

namespace fs = std::filesystem;

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return hex.str();
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text, const std::string& path) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw LoadError("'" + path + "' is not valid JSON: " + e.what());
  }
}

// Everything a run accumulates before it is printed.
class Run {
 public:
  Run(std::string command, std::uint64_t seed) {
    j_["tool"] = "boolsemi";
    j_["version"] = kToolVersion;
    j_["command"] = std::move(command);
    j_["seed"] = seed;
    j_["inputs"] = Json::array();
    j_["reports"] = Json::array();
    j_["claims"] = Json::array();
  }

  void input(const std::string& source, const std::string& bytes) {
    j_["inputs"].push_back({{"source", source}, {"sha256", sha256_hex(bytes)}});
  }

  void report(Json r) { j_["reports"].push_back(std::move(r)); }
  void report(const PropertyReport& r) { report(to_json(r)); }

  void claim(const std::string& id, const std::string& statement, const char* verdict,
             Json witness = nullptr, const std::string& note = {}) {
    Json c;
    c["id"] = id;
    c["statement"] = statement;
    c["verdict"] = verdict;
    c["witness"] = std::move(witness);
    if (!note.empty()) c["note"] = note;
    j_["claims"].push_back(std::move(c));
  }

  void claim(const std::string& id, const std::string& statement, const PropertyReport& r) {
    if (r.holds()) {
      claim(id, statement, "confirmed");
    } else {
      claim(id, statement, "refuted-with-witness", r.witness_names, r.note);
    }
  }

  void out_of_hypothesis(const std::string& id, const std::string& statement,
                         const std::string& why) {
    claim(id, statement, "out-of-hypothesis", nullptr, why);
  }

  Json& result() { return j_["result"]; }
  const Json& json() const { return j_; }

 private:
  Json j_;
};

struct Loaded {
  Algebra algebra;
  std::string label;
};

// "free:N" or a table path; relative paths are tried against `base` first.
Loaded load_descriptor(const std::string& desc, const fs::path& base, Run& run) {
  if (desc.rfind("free:", 0) == 0) {
    const auto digits = desc.substr(5);
    if (digits.empty() || digits.size() > 3 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw LoadError("bad algebra descriptor '" + desc + "'");
    }
    run.input(desc, desc);
    return {free_boolean_algebra(static_cast<unsigned>(std::stoul(digits))), desc};
  }
  fs::path path(desc);
  if (path.is_relative() && !base.empty() && fs::exists(base / path)) path = base / path;
  const auto bytes = read_file(path.string());
  run.input(desc, bytes);
  return {table_semiring(table_spec_from_json(parse_json(bytes, desc))), desc};
}

struct AlgebraArgs {
  int free_atoms = -1;
  std::string table;
};

void add_algebra_options(CLI::App* sub, AlgebraArgs& a) {
  auto* f = sub->add_option("--free-atoms", a.free_atoms, "free Boolean algebra on N atoms");
  auto* t = sub->add_option("--table", a.table, "table semiring JSON file");
  f->excludes(t);
  t->excludes(f);
}

Loaded load_algebra(const AlgebraArgs& a, Run& run) {
  if (a.free_atoms >= 0) {
    if (a.free_atoms > static_cast<int>(kMaxAtoms)) {
      throw SizeLimitError("free algebra on " + std::to_string(a.free_atoms) +
                           " atoms exceeds the limit of " + std::to_string(kMaxAtoms));
    }
    return load_descriptor("free:" + std::to_string(a.free_atoms), {}, run);
  }
  if (!a.table.empty()) return load_descriptor(a.table, {}, run);
  throw LoadError("one of --free-atoms or --table is required");
}

Json algebra_summary(const Loaded& l) {
  const auto& A = l.algebra;
  return {{"source", l.label},
          {"name", A.name()},
          {"size", A.size()},
          {"top", A.element_name(A.top_id())},
          {"bot", A.element_name(A.bot_id())},
          {"complement", A.has_complement()}};
}

Json formula_ast(const Formula& f) {
  static const char* kinds[] = {"const", "atom", "not", "and", "or", "implies", "iff"};
  Json j;
  j["kind"] = kinds[static_cast<int>(f.kind())];
  switch (f.kind()) {
    case Formula::Kind::constant:
      j["value"] = f.value() ? 1 : 0;
      break;
    case Formula::Kind::atom:
      j["name"] = f.name();
      break;
    default: {
      Json args = Json::array();
      for (std::size_t i = 0; i < f.arity(); ++i) args.push_back(formula_ast(f.operand(i)));
      j["operands"] = std::move(args);
    }
  }
  return j;
}

OrderRelation order_from_file(const Algebra& A, const std::string& path, Run& run) {
  const auto bytes = read_file(path);
  run.input(path, bytes);
  auto j = parse_json(bytes, path);
  if (j.is_object() && j.contains("order")) j = j["order"];
  try {
    return OrderRelation::from_matrix(A, j.get<std::vector<std::vector<int>>>());
  } catch (const nlohmann::json::exception& e) {
    throw LoadError("'" + path + "' does not hold a 0/1 matrix: " + e.what());
  }
}

std::vector<ElementId> resolve_all(const Algebra& A, const std::vector<std::string>& texts) {
  std::vector<ElementId> ids;
  for (const auto& t : texts) ids.push_back(resolve_element(A, t));
  return ids;
}

// ---------------------------------------------------------------- check

void cmd_check(const AlgebraArgs& args, std::uint64_t seed, Run& run) {
  const auto l = load_algebra(args, run);
  const auto& A = l.algebra;
  ScanPolicy policy;
  policy.seed = seed;

  const auto axioms = check_semiring_axioms(A, policy);
  for (const auto& r : axioms) run.report(r);
  const auto zsf = is_zerosumfree(A, policy);
  const auto entire = is_entire(A, policy);
  const auto simple = is_simple(A);
  const auto comm = is_commutative(A);
  const auto absorbing = is_multiplicatively_absorbing(A);
  const auto cancel = is_additively_cancellative(A);
  for (const auto* r : {&zsf, &entire, &simple, &comm, &absorbing, &cancel}) run.report(*r);

  auto& res = run.result();
  res["algebra"] = algebra_summary(l);
  res["center"] = element_names(A, compute_center(A));
  res["cancellable"] = element_names(A, additively_cancellable_elements(A));

  const auto failed = std::find_if(axioms.begin(), axioms.end(),
                                   [](const auto& r) { return !r.holds(); });
  const std::string laws =
      "+ and × are commutative and associative, × distributes over +, ⊤ and ⊥ are the "
      "identities of + and ×, and ⊤ absorbs under ×";
  if (failed == axioms.end()) {
    run.claim("semiring_laws", laws, "confirmed");
  } else {
    run.claim("semiring_laws", laws, "refuted-with-witness", failed->witness_names,
              failed->property + (failed->note.empty() ? "" : ": " + failed->note));
  }
  run.claim("zerosumfree", "p + q = ⊤ only when p = q = ⊤", zsf);
  run.claim("entire", "p × q = ⊤ only when p = ⊤ or q = ⊤", entire);
  run.claim("simple", "p + ⊥ = ⊥ for every p", simple);
  run.claim("commutative", "every element commutes under ×, so the center is the carrier", comm);
  run.claim("multiplicatively_absorbing", "⊤ × p = p × ⊤ = ⊤ for every p", absorbing);
}

// ---------------------------------------------------------------- order

struct OrderArgs {
  AlgebraArgs algebra;
  std::string matrix;
  std::vector<std::string> sub;
  bool sub_plain = false;
};

OrderRelation pick_order(const Algebra& A, const std::string& matrix, Run& run,
                         bool allow_discrete) {
  if (!matrix.empty()) {
    run.result()["order_source"] = "matrix";
    return order_from_file(A, matrix, run);
  }
  if (A.declared_order()) {
    run.result()["order_source"] = "declared";
    return OrderRelation::from_matrix(A, *A.declared_order());
  }
  if (allow_discrete) {
    try {
      auto R = canonical_order(A);
      run.result()["order_source"] = "canonical";
      return R;
    } catch (const UnsupportedError&) {
      run.result()["order_source"] = "discrete";
      return discrete_order(A);
    }
  }
  run.result()["order_source"] = "canonical";
  return canonical_order(A);
}

void cmd_order(const OrderArgs& args, std::uint64_t seed, Run& run) {
  const auto l = load_algebra(args.algebra, run);
  const auto& A = l.algebra;
  run.result()["algebra"] = algebra_summary(l);
  const auto R = pick_order(A, args.matrix, run, false);
  ScanPolicy policy;
  policy.seed = seed;

  const auto poset = check_poset(R);
  for (const auto& r : poset) run.report(r);
  const auto bad = std::find_if(poset.begin(), poset.end(), [](const auto& r) { return !r.holds(); });
  const std::string poset_claim = "≼ is reflexive, antisymmetric and transitive";
  if (bad != poset.end()) {
    run.claim("partial_order", poset_claim, *bad);
    for (const char* id : {"monotony", "lemma_bounds", "decomposition", "pairwise_monotony"}) {
      run.out_of_hypothesis(id, "order law on a partially ordered semiring",
                            "relation is not a partial order");
    }
    return;
  }
  run.claim("partial_order", poset_claim, "confirmed");

  const auto mono = check_monotony(A, R, policy);
  for (const auto& r : mono) run.report(r);
  run.claim("monotony_add", "p ≼ q implies p + r ≼ q + r", mono[0]);
  run.claim("monotony_mul", "p ≼ q implies p × r ≼ q × r", mono[1]);

  PropertyReport bounds;
  bounds.property = "top_least_bot_greatest";
  for (ElementId p = 0; p < A.size(); ++p) {
    ++bounds.checked;
    if (!R.leq(A.top_id(), p) || !R.leq(p, A.bot_id())) {
      bounds.verdict = Verdict::fails;
      bounds.witness = {p};
      bounds.witness_names = element_names(A, bounds.witness);
      break;
    }
  }
  run.report(bounds);
  run.claim("top_least_bot_greatest", "⊤ ≼ p and p ≼ ⊥ for every p", bounds);

  const auto lemma = verify_lemma_bounds(A, R);
  const auto decomp = verify_decomposition(A, R, policy);
  const auto pairwise = verify_pairwise_monotony(A, R, quad_policy(seed));
  for (const auto* r : {&lemma, &decomp, &pairwise}) run.report(*r);
  run.claim("lemma_bounds", "p ≼ p + q and p × q ≼ q", lemma);
  run.claim("decomposition",
            "p + q ≼ r implies p ≼ r and q ≼ r; p ≼ q × r implies p ≼ q and p ≼ r", decomp);
  run.claim("pairwise_monotony", "p ≼ q and r ≼ s imply p + r ≼ q + s and p × r ≼ q × s",
            pairwise);

  const auto c = cones(A, R);
  run.result()["cones"] = {{"positive", element_names(A, c.positive)},
                           {"negative", element_names(A, c.negative)}};
  std::vector<ElementId> outside;
  for (ElementId p = 0; p < A.size(); ++p) {
    if (!std::binary_search(c.positive.begin(), c.positive.end(), p)) outside.push_back(p);
  }
  const std::string pos_claim = "the positive cone is the whole carrier";
  if (outside.empty()) {
    run.claim("positive_cone_is_carrier", pos_claim, "confirmed");
  } else {
    run.claim("positive_cone_is_carrier", pos_claim, "refuted-with-witness",
              element_names(A, outside));
  }
  const std::string neg_claim = "the negative cone is empty";
  if (c.negative.empty()) {
    run.claim("negative_cone_empty", neg_claim, "confirmed");
  } else {
    run.claim("negative_cone_empty", neg_claim, "refuted-with-witness",
              element_names(A, c.negative), "p + q ≼ p for every q");
  }

  if (!args.sub.empty()) {
    const auto gens = resolve_all(A, args.sub);
    const bool closed = A.has_complement() && !args.sub_plain;
    const auto sub = subalgebra_closure_ids(A, gens, closed);
    const auto rep = subalgebra_order_report(A, sub, R);
    auto j = to_json(rep, A);
    j["generators"] = element_names(A, gens);
    j["members"] = element_names(A, sub.members());
    j["complement_closed"] = closed;
    run.report(std::move(j));
    const std::string st = "the order restricted to a subalgebra keeps the order laws";
    if (rep.restriction_holds()) {
      run.claim("restriction_keeps_order_laws", st, "confirmed");
    } else {
      const auto f = std::find_if(rep.restriction.begin(), rep.restriction.end(),
                                  [](const auto& r) { return !r.holds(); });
      run.claim("restriction_keeps_order_laws", st, "refuted-with-witness", f->witness_names,
                f->property);
    }
  }
}

// ---------------------------------------------------------------- hom

struct HomArgs {
  std::string psi;
  std::string psi1;
  std::string psi2;
  std::string src;
  std::string dst;
  std::string kind = "auto";
  std::string mode = "embedding";
};

HomKind pick_kind(const std::string& kind, const Algebra& S, const Algebra& T) {
  if (kind == "bpa") return HomKind::bpa;
  if (kind == "semiring") return HomKind::semiring;
  return S.has_complement() && T.has_complement() ? HomKind::bpa : HomKind::semiring;
}

struct LoadedMorphism {
  Morphism psi;
  std::string source_label;
  std::string target_label;
};

LoadedMorphism load_morphism(const std::string& path, Run& run) {
  const auto bytes = read_file(path);
  run.input(path, bytes);
  const auto j = parse_json(bytes, path);
  if (!j.is_object() || !j.contains("source") || !j.contains("target") || !j.contains("map") ||
      !j["source"].is_string() || !j["target"].is_string() || !j["map"].is_object()) {
    throw LoadError("'" + path + "' needs string \"source\", \"target\" and object \"map\"");
  }
  const auto base = fs::path(path).parent_path();
  const auto S = load_descriptor(j["source"].get<std::string>(), base, run);
  const auto T = load_descriptor(j["target"].get<std::string>(), base, run);
  std::vector<std::optional<ElementId>> map(S.algebra.size());
  for (const auto& [key, value] : j["map"].items()) {
    if (!value.is_string()) throw LoadError("image of '" + key + "' must be a string");
    const auto x = resolve_element(S.algebra, key);
    if (map[x]) throw LoadError("'" + key + "' is mapped twice in '" + path + "'");
    map[x] = resolve_element(T.algebra, value.get<std::string>());
  }
  std::vector<ElementId> ids;
  for (ElementId x = 0; x < map.size(); ++x) {
    if (!map[x]) {
      throw LoadError("'" + path + "' gives no image for " + S.algebra.element_name(x));
    }
    ids.push_back(*map[x]);
  }
  return {Morphism(S.algebra, T.algebra, std::move(ids)), S.label, T.label};
}

const std::string kIsoStatement =
    "a homomorphism is an isomorphism exactly when it is onto and order preserving";

void cmd_hom_check(const HomArgs& a, Run& run) {
  const auto m = load_morphism(a.psi, run);
  const auto kind = pick_kind(a.kind, m.psi.source(), m.psi.target());
  const auto hom = check_morphism(m.psi, kind);
  const auto iso = is_isomorphism(m.psi, kind);
  run.report(hom);
  run.report(iso);
  auto& res = run.result();
  res["morphism"] = to_json(m.psi, m.source_label, m.target_label);
  res["kind"] = to_string(kind);
  res["surjective"] = m.psi.is_surjective();
  res["injective"] = m.psi.is_injective();
  res["kernel"] = to_json(kernel(m.psi), m.psi.source());
  try {
    const auto Rs = canonical_order(m.psi.source());
    const auto Rt = canonical_order(m.psi.target());
    for (auto mode : {OrderMode::monotone, OrderMode::embedding}) {
      run.report(order_relation_of_map(m.psi, Rs, Rt, mode));
    }
  } catch (const UnsupportedError& e) {
    res["order_note"] = e.what();
  }
  const std::string img = "the image of a homomorphism is a subalgebra of the target";
  if (hom.holds()) {
    const auto image = image_subalgebra(m.psi);
    res["image"] = element_names(m.psi.target(), image.members());
    run.claim("image_is_subalgebra", img, "confirmed");
  } else {
    run.out_of_hypothesis("image_is_subalgebra", img, "map is not a homomorphism");
  }
}

void cmd_hom_enumerate(const HomArgs& a, Run& run, std::ostream& out) {
  const auto S = load_descriptor(a.src, {}, run);
  const auto T = load_descriptor(a.dst, {}, run);
  const auto kind = pick_kind(a.kind, S.algebra, T.algebra);
  const auto homs = enumerate_homs(S.algebra, T.algebra, kind);
  std::vector<std::string> bad;
  for (const auto& h : homs) {
    out << to_json(h, S.label, T.label).dump() << '\n';
    try {
      image_subalgebra(h);
    } catch (const DomainError&) {
      bad.push_back(to_json(h, S.label, T.label).dump());
    }
  }
  auto& res = run.result();
  res["source"] = algebra_summary(S);
  res["target"] = algebra_summary(T);
  res["kind"] = to_string(kind);
  res["count"] = homs.size();
  const std::string st = "the image of every homomorphism is a subalgebra of the target";
  if (bad.empty()) {
    run.claim("image_is_subalgebra", st, "confirmed");
  } else {
    run.claim("image_is_subalgebra", st, "refuted-with-witness", bad);
  }
}

void cmd_hom_factor(const HomArgs& a, Run& run) {
  const auto m1 = load_morphism(a.psi1, run);
  const auto m2 = load_morphism(a.psi2, run);
  const bool finer = refines(kernel(m1.psi), kernel(m2.psi));
  const auto psi = factor(m1.psi, m2.psi);
  auto& res = run.result();
  res["refines"] = finer;
  const std::string st =
      "when ψ₁ is onto and its kernel lies inside that of ψ₂, a unique ψ with ψ ∘ ψ₁ = ψ₂ "
      "exists";
  if (psi) {
    res["factor"] = to_json(*psi, m1.target_label, m2.target_label);
    res["message"] = "ψ ∘ ψ₁ = ψ₂ verified on every source element";
    run.claim("factorization", st, "confirmed");
  } else {
    res["factor"] = nullptr;
    res["message"] = "no factorization: kernels incomparable";
    run.out_of_hypothesis("factorization", st, "kernel of ψ₁ does not refine kernel of ψ₂");
  }
}

void cmd_hom_iso(const HomArgs& a, Run& run) {
  const auto S = load_descriptor(a.src, {}, run);
  const auto T = load_descriptor(a.dst, {}, run);
  const auto kind = pick_kind(a.kind, S.algebra, T.algebra);
  const auto mode = a.mode == "monotone" ? OrderMode::monotone : OrderMode::embedding;
  const auto rep = verify_iso_theorem(S.algebra, T.algebra, kind, mode);
  auto j = to_json(rep);
  j["kind"] = to_string(kind);
  run.result() = j;
  if (rep.holds()) {
    run.claim("onto_order_preserving_iff_isomorphism", kIsoStatement, "confirmed", nullptr,
              std::string("order preservation read as ") + to_string(mode));
  } else {
    const auto& c = rep.counterexamples.front();
    run.claim("onto_order_preserving_iff_isomorphism", kIsoStatement, "refuted-with-witness",
              to_json(c.psi, S.label, T.label)["map"],
              std::string("order preservation read as ") + to_string(mode) + "; onto=" +
                  (c.onto ? "yes" : "no") + ", order preserving=" +
                  (c.order_preserving ? "yes" : "no") + ", isomorphism=" +
                  (c.isomorphism ? "yes" : "no"));
  }
}

// ---------------------------------------------------------------- diff

struct DiffArgs {
  AlgebraArgs algebra;
  std::vector<std::string> subtrahends;
  std::string matrix;
  std::string emit;
  bool universal = false;
};

void cmd_diff(const DiffArgs& args, Run& run) {
  const auto l = load_algebra(args.algebra, run);
  const auto& A = l.algebra;
  auto& res = run.result();
  res["algebra"] = algebra_summary(l);
  const auto S = args.subtrahends.empty()
                     ? subtrahend_ideal(A)
                     : make_subtrahend_ideal(A, resolve_all(A, args.subtrahends));
  Json opp = Json::object();
  for (const auto& [x, y] : S.opposites) opp[A.element_name(x)] = A.element_name(y);
  res["subtrahends"] = {{"members", element_names(A, S.members)},
                        {"opposites", std::move(opp)},
                        {"only_top", S.members == std::vector<ElementId>{A.top_id()}}};

  const auto D = difference_semiring(A, S);
  const auto iso = is_isomorphism(D.embedding, HomKind::semiring);
  run.report(iso);
  res["difference"] = {{"name", D.quotient.name()},
                       {"classes", D.quotient.size()},
                       {"elements", element_names(D.quotient, [&] {
                          std::vector<ElementId> v(D.quotient.size());
                          for (ElementId i = 0; i < v.size(); ++i) v[i] = i;
                          return v;
                        }())},
                       {"isomorphic_to_parent", iso.holds()}};
  run.claim("difference_embedding", "p ↦ (p, ⊤) is an injective homomorphism into D(P, ⊖)",
            "confirmed");

  if (!args.emit.empty()) {
    std::ofstream f(args.emit);
    if (!f) throw LoadError("cannot write '" + args.emit + "'");
    f << to_json(D).dump(2) << '\n';
    res["emitted"] = args.emit;
  }

  const auto R = pick_order(A, args.matrix, run, true);
  const auto quant = args.universal ? Quantifier::universal : Quantifier::existential;
  const std::string stab = "p ≼′ q exactly when p + ξ ≼′ q + ξ, for every ξ in ⊖";
  const std::string sim = "≼′ equals ≼ exactly when ≼ itself is stable under adding ξ in ⊖";
  try {
    const auto e = extended_order(A, R, S, quant);
    run.report(to_json(e));
    const auto bad = std::find_if(e.poset.begin(), e.poset.end(),
                                  [](const auto& r) { return !r.holds(); });
    if (bad == e.poset.end()) {
      run.claim("extended_order_is_partial_order", "≼′ is a partial order", "confirmed");
    } else {
      run.claim("extended_order_is_partial_order", "≼′ is a partial order", *bad);
    }
    run.claim("extended_order_stability", stab, e.stability);
    run.claim("similarity_criterion", sim, e.similarity_criterion ? "confirmed"
                                                                  : "refuted-with-witness",
              e.similarity_criterion ? Json(nullptr) : Json(e.base_stability.witness_names),
              std::string("similar=") + (e.similar ? "yes" : "no") +
                  ", base order stable=" + (e.base_stability.holds() ? "yes" : "no"));
  } catch (const PreconditionError& ex) {
    run.out_of_hypothesis("extended_order_stability", stab, ex.what());
    run.out_of_hypothesis("similarity_criterion", sim, ex.what());
  }

  const auto thm = verify_difference_cancellation(A, S);
  run.report(to_json(thm));
  const std::string st =
      "if P is multiplicatively left cancellative, D(P, ⊖) is so exactly when "
      "Δ ≠ c and a ≠ b imply c × a + Δ × b ≠ c × b + Δ × a";
  if (!thm.hypothesis_met()) {
    run.claim("difference_cancellation", st, "out-of-hypothesis", thm.hypothesis.witness_names,
              "P is not multiplicatively left cancellative; D cancellative=" +
                  std::string(thm.difference_cancellative.holds() ? "yes" : "no") +
                  ", criterion=" + (thm.criterion.holds() ? "yes" : "no"));
  } else if (thm.biconditional()) {
    run.claim("difference_cancellation", st, "confirmed");
  } else {
    const auto& side = thm.criterion.holds() ? thm.difference_cancellative : thm.criterion;
    run.claim("difference_cancellation", st, "refuted-with-witness", side.witness_names,
              side.property);
  }
}

// ---------------------------------------------------------------- parse

void cmd_parse(const std::string& text, std::vector<std::string> atoms, Run& run) {
  run.input("formula", text);
  const auto f = parse(text);
  if (atoms.empty()) atoms = atoms_of(f);
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  if (atoms.size() > kMaxAtoms) {
    throw SizeLimitError(std::to_string(atoms.size()) + " atoms exceed the limit of " +
                         std::to_string(kMaxAtoms));
  }
  const auto A = free_boolean_algebra(atoms);
  const auto e = evaluate(f, A);
  auto& res = run.result();
  res["formula"] = text;
  res["printed"] = print(f);
  res["ast"] = formula_ast(f);
  res["atoms"] = A.atom_names();
  res["algebra"] = A.name();
  res["element"] = A.element_name(e.id);
  res["id"] = e.id;
  res["truth_table"] = A.truth_table(e.id);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Checks proposition semirings and their orders, maps and differences.", "boolsemi"};
  app.set_version_flag("--version", kToolVersion);
  std::uint64_t seed = kDefaultSeed;
  app.add_option("--seed", seed, "seed for sampled scans")->capture_default_str();
  app.require_subcommand(1);

  AlgebraArgs check_args;
  auto* check = app.add_subcommand("check", "semiring laws and classification checks");
  add_algebra_options(check, check_args);

  OrderArgs order_args;
  auto* order = app.add_subcommand("order", "order laws, cones and subalgebra comparison");
  add_algebra_options(order, order_args.algebra);
  order->add_option("--order-matrix", order_args.matrix, "JSON 0/1 matrix instead of p + q = q");
  order->add_option("--sub", order_args.sub, "subalgebra generators")->delimiter(',');
  order->add_flag("--sub-no-complement", order_args.sub_plain,
                  "close generators under + and × only");

  HomArgs hom_args;
  auto* hom = app.add_subcommand("hom", "homomorphisms");
  hom->require_subcommand(1);
  const std::vector<std::string> kinds{"auto", "bpa", "semiring"};
  auto* hcheck = hom->add_subcommand("check", "check one map");
  hcheck->add_option("--psi", hom_args.psi, "morphism JSON file")->required();
  auto* henum = hom->add_subcommand("enumerate", "all homomorphisms, one JSON line each");
  henum->add_option("--src", hom_args.src, "free:N or table path")->required();
  henum->add_option("--dst", hom_args.dst, "free:N or table path")->required();
  auto* hfac = hom->add_subcommand("factor", "ψ with ψ ∘ ψ₁ = ψ₂");
  hfac->add_option("--psi1", hom_args.psi1, "onto morphism JSON file")->required();
  hfac->add_option("--psi2", hom_args.psi2, "morphism JSON file")->required();
  auto* hiso = hom->add_subcommand("iso-theorem", "onto and order preserving vs isomorphism");
  hiso->add_option("--src", hom_args.src, "free:N or table path")->required();
  hiso->add_option("--dst", hom_args.dst, "free:N or table path")->required();
  hiso->add_option("--mode", hom_args.mode, "monotone or embedding")
      ->check(CLI::IsMember({"monotone", "embedding"}))
      ->capture_default_str();
  for (auto* s : {hcheck, henum, hiso}) {
    s->add_option("--kind", hom_args.kind, "bpa, semiring or auto")
        ->check(CLI::IsMember(kinds))
        ->capture_default_str();
  }

  DiffArgs diff_args;
  auto* diff = app.add_subcommand("diff", "subtrahends, D(P, ⊖) and its order");
  add_algebra_options(diff, diff_args.algebra);
  diff->add_option("--subtrahends", diff_args.subtrahends, "explicit ⊖")->delimiter(',');
  diff->add_option("--order-matrix", diff_args.matrix, "JSON 0/1 matrix for the base order");
  diff->add_flag("--universal", diff_args.universal, "require p + Δ ≼ q + Δ for every Δ");
  diff->add_option("--emit", diff_args.emit, "write D(P, ⊖) as a table file");

  std::string formula;
  std::vector<std::string> atoms;
  auto* parse_cmd = app.add_subcommand("parse", "parse and evaluate a formula");
  parse_cmd->add_option("formula", formula, "formula text")->required();
  parse_cmd->add_option("--atoms", atoms, "atom names")->delimiter(',');

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::string name;
  if (check->parsed()) name = "check";
  if (order->parsed()) name = "order";
  if (diff->parsed()) name = "diff";
  if (parse_cmd->parsed()) name = "parse";
  if (hom->parsed()) {
    for (auto* s : {hcheck, henum, hfac, hiso}) {
      if (s->parsed()) name = "hom " + s->get_name();
    }
  }

  Run report(name, seed);
  try {
    if (name == "check") cmd_check(check_args, seed, report);
    if (name == "order") cmd_order(order_args, seed, report);
    if (name == "diff") cmd_diff(diff_args, report);
    if (name == "parse") cmd_parse(formula, atoms, report);
    if (name == "hom check") cmd_hom_check(hom_args, report);
    if (name == "hom factor") cmd_hom_factor(hom_args, report);
    if (name == "hom iso-theorem") cmd_hom_iso(hom_args, report);
    if (name == "hom enumerate") {
      cmd_hom_enumerate(hom_args, report, out);
      out << report.json().dump() << '\n';
      return 0;
    }
  } catch (const Error& e) {
    err << "boolsemi: error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "boolsemi: error: " << e.what() << '\n';
    return 2;
  }
  out << report.json().dump(2) << '\n';
  return 0;
}

}  // namespace boolsemi::cli
