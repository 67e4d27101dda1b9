#include "boolsemi/differences.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "boolsemi/properties.hpp"
#include "boolsemi/table_io.hpp"

namespace boolsemi {

namespace {

void require_same(const Algebra& A, const OrderRelation& R) {
  if (A.fingerprint() != R.algebra().fingerprint()) {
    throw DomainError("order relation belongs to '" + R.algebra().name() + "', not '" +
                      A.name() + "'");
  }
}

// Smallest two-sided ideal containing ⊤ and `seeds`, as a membership mask.
std::vector<char> generate_ideal(const Algebra& A, const std::vector<ElementId>& seeds) {
  const auto n = static_cast<ElementId>(A.size());
  std::vector<char> in(n, 0);
  std::vector<ElementId> members;
  std::vector<ElementId> work;
  auto push = [&](ElementId x) {
    if (!in[x]) {
      in[x] = 1;
      work.push_back(x);
    }
  };
  push(A.top_id());
  for (auto s : seeds) push(s);
  while (!work.empty()) {
    const auto e = work.back();
    work.pop_back();
    for (ElementId p = 0; p < n; ++p) {
      push(A.mul_id(p, e));
      push(A.mul_id(e, p));
    }
    members.push_back(e);
    for (auto s : members) {
      push(A.add_id(s, e));
      push(A.add_id(e, s));
    }
  }
  return in;
}

std::optional<ElementId> opposite_of(const Algebra& A, ElementId alpha,
                                     const std::vector<char>& prefer) {
  std::optional<ElementId> any;
  for (ElementId b = 0; b < A.size(); ++b) {
    if (A.add_id(alpha, b) != A.top_id()) continue;
    if (prefer.empty() || prefer[b]) return b;
    if (!any) any = b;
  }
  return any;
}

SubtrahendIdeal with_opposites(const Algebra& A, const std::vector<char>& mask) {
  SubtrahendIdeal S;
  for (ElementId x = 0; x < A.size(); ++x) {
    if (!mask[x]) continue;
    S.members.push_back(x);
    S.opposites[x] = *opposite_of(A, x, mask);
  }
  return S;
}

// ⊤ first, then the rest ascending: the pair scan order.
std::vector<ElementId> scan_order(const Algebra& A, const SubtrahendIdeal& S) {
  std::vector<ElementId> order{A.top_id()};
  for (auto a : S.members) {
    if (a != A.top_id()) order.push_back(a);
  }
  return order;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

PropertyReport stability_report(const char* property, const Algebra& A, const OrderRelation& R,
                                const std::vector<ElementId>& xi) {
  PropertyReport r;
  r.property = property;
  const auto n = static_cast<ElementId>(A.size());
  for (ElementId p = 0; p < n; ++p) {
    for (ElementId q = 0; q < n; ++q) {
      for (auto x : xi) {
        ++r.checked;
        if (R.leq(p, q) != R.leq(A.add_id(p, x), A.add_id(q, x))) {
          r.verdict = Verdict::fails;
          r.witness = {p, q, x};
          r.witness_names = element_names(A, r.witness);
          return r;
        }
      }
    }
  }
  return r;
}

}  // namespace

const char* to_string(Quantifier q) {
  return q == Quantifier::universal ? "universal" : "existential";
}

PropertyReport is_ideal(const Algebra& A, const std::vector<ElementId>& members) {
  PropertyReport r;
  r.property = "ideal";
  std::vector<char> in(A.size(), 0);
  for (auto m : members) {
    if (m >= A.size()) throw DomainError("element id " + std::to_string(m) + " out of range");
    in[m] = 1;
  }
  auto fail = [&](std::vector<ElementId> w, const char* note) {
    r.verdict = Verdict::fails;
    r.witness = std::move(w);
    r.witness_names = element_names(A, r.witness);
    r.note = note;
    return r;
  };
  ++r.checked;
  if (!in[A.top_id()]) return fail({A.top_id()}, "⊤ missing");
  for (auto i : members) {
    for (auto j : members) {
      ++r.checked;
      if (!in[A.add_id(i, j)]) return fail({i, j}, "not closed under +");
    }
  }
  for (ElementId p = 0; p < A.size(); ++p) {
    for (auto i : members) {
      ++r.checked;
      if (!in[A.mul_id(p, i)] || !in[A.mul_id(i, p)]) return fail({p, i}, "not absorbing under ×");
    }
  }
  return r;
}

bool SubtrahendIdeal::contains(ElementId x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

SubtrahendIdeal subtrahend_ideal(const Algebra& A) {
  std::vector<char> allowed(A.size(), 0);
  for (auto c : additively_cancellable_elements(A)) {
    if (opposite_of(A, c, {})) allowed[c] = 1;
  }
  // Grow greedily from {⊤}; ideal sums of admissible ideals stay admissible
  // whenever + is commutative, so this reaches the largest one there.
  auto current = generate_ideal(A, {});
  for (ElementId x = 0; x < A.size(); ++x) {
    if (!allowed[x] || current[x]) continue;
    std::vector<ElementId> seeds;
    for (ElementId y = 0; y < A.size(); ++y) {
      if (current[y]) seeds.push_back(y);
    }
    seeds.push_back(x);
    auto grown = generate_ideal(A, seeds);
    bool ok = true;
    for (ElementId y = 0; y < A.size() && ok; ++y) ok = !grown[y] || allowed[y];
    if (ok) current = std::move(grown);
  }
  return with_opposites(A, current);
}

SubtrahendIdeal make_subtrahend_ideal(const Algebra& A, std::vector<ElementId> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  const auto ideal = is_ideal(A, members);
  if (!ideal.holds()) {
    std::string w;
    for (const auto& s : ideal.witness_names) w += (w.empty() ? "" : ", ") + s;
    throw DomainError("subtrahends are not an ideal: " + ideal.note + " at (" + w + ")");
  }
  const auto cancellable = additively_cancellable_elements(A);
  std::vector<char> mask(A.size(), 0);
  for (auto m : members) {
    if (!std::binary_search(cancellable.begin(), cancellable.end(), m)) {
      throw DomainError("subtrahend " + A.element_name(m) + " is not additively cancellable");
    }
    if (!opposite_of(A, m, {})) {
      throw DomainError("subtrahend " + A.element_name(m) + " has no additive opposite");
    }
    mask[m] = 1;
  }
  return with_opposites(A, mask);
}

ElementId DifferenceSemiring::class_of_pair(ElementId p, ElementId alpha) const {
  const auto order = scan_order(parent, subtrahends);
  const auto it = std::find(order.begin(), order.end(), alpha);
  if (it == order.end() || p >= parent.size()) {
    throw DomainError("(" + std::to_string(p) + ", " + std::to_string(alpha) +
                      ") is not a pair of the construction");
  }
  return class_of[static_cast<std::size_t>(it - order.begin())][p];
}

DifferenceSemiring difference_semiring(const Algebra& A, const SubtrahendIdeal& S) {
  if (S.members.empty() || !S.contains(A.top_id())) {
    throw ConstructionError("subtrahend ideal must contain ⊤");
  }
  const auto n = A.size();
  const auto subs = scan_order(A, S);
  const auto m = subs.size();
  if (n * m > kMaxDifferencePairs) {
    throw SizeLimitError("difference construction over " + std::to_string(n * m) +
                         " pairs exceeds the limit of " + std::to_string(kMaxDifferencePairs));
  }
  std::vector<long> sub_index(n, -1);
  for (std::size_t i = 0; i < m; ++i) sub_index[subs[i]] = static_cast<long>(i);

  const auto N = n * m;
  auto first = [&](std::size_t x) { return static_cast<ElementId>(x % n); };
  auto second = [&](std::size_t x) { return subs[x / n]; };
  auto pair_name = [&](std::size_t x) {
    return "(" + A.element_name(first(x)) + ", " + A.element_name(second(x)) + ")";
  };
  auto related = [&](std::size_t x, std::size_t y) {
    return A.add_id(first(x), second(y)) == A.add_id(first(y), second(x));
  };

  UnionFind uf(N);
  for (std::size_t x = 0; x < N; ++x) {
    for (std::size_t y = x + 1; y < N; ++y) {
      if (related(x, y)) uf.unite(x, y);
    }
  }
  for (std::size_t x = 0; x < N; ++x) {
    for (std::size_t y = 0; y < N; ++y) {
      if (related(x, y) != (uf.find(x) == uf.find(y))) {
        throw ConstructionError("pair relation is not an equivalence at " + pair_name(x) + ", " +
                                pair_name(y));
      }
    }
  }

  std::vector<ElementId> cls(N);
  std::vector<std::size_t> reps;
  {
    std::vector<long> id_of_root(N, -1);
    for (std::size_t x = 0; x < N; ++x) {
      auto& slot = id_of_root[uf.find(x)];
      if (slot < 0) {
        slot = static_cast<long>(reps.size());
        reps.push_back(x);
      }
      cls[x] = static_cast<ElementId>(slot);
    }
  }
  const auto k = reps.size();

  auto sum = [&](std::size_t x, std::size_t y) -> std::size_t {
    const auto s = A.add_id(second(x), second(y));
    if (sub_index[s] < 0) {
      throw ConstructionError("⊕ leaves the pair set at " + pair_name(x) + ", " + pair_name(y));
    }
    return static_cast<std::size_t>(sub_index[s]) * n + A.add_id(first(x), first(y));
  };
  auto product = [&](std::size_t x, std::size_t y) -> std::size_t {
    const auto p = first(x), a = second(x), q = first(y), b = second(y);
    const auto lhs = A.add_id(A.mul_id(p, q), A.mul_id(a, b));
    const auto rhs = A.add_id(A.mul_id(p, b), A.mul_id(a, q));
    if (sub_index[rhs] < 0) {
      throw ConstructionError("⊗ leaves the pair set at " + pair_name(x) + ", " + pair_name(y));
    }
    return static_cast<std::size_t>(sub_index[rhs]) * n + lhs;
  };

  std::vector<std::vector<ElementId>> add(k, std::vector<ElementId>(k));
  std::vector<std::vector<ElementId>> mul(k, std::vector<ElementId>(k));
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t d = 0; d < k; ++d) {
      add[c][d] = cls[sum(reps[c], reps[d])];
      mul[c][d] = cls[product(reps[c], reps[d])];
    }
  }
  for (std::size_t x = 0; x < N; ++x) {
    for (std::size_t y = 0; y < N; ++y) {
      if (cls[sum(x, y)] != add[cls[x]][cls[y]]) {
        throw ConstructionError("⊕ depends on representatives at " + pair_name(x) + ", " +
                                pair_name(y));
      }
      if (cls[product(x, y)] != mul[cls[x]][cls[y]]) {
        throw ConstructionError("⊗ depends on representatives at " + pair_name(x) + ", " +
                                pair_name(y));
      }
    }
  }

  TableSpec spec;
  spec.name = "D(" + A.name() + ")";
  std::set<std::string> used;
  for (auto r : reps) {
    std::string name = second(r) == A.top_id()
                           ? A.element_name(first(r))
                           : A.element_name(first(r)) + "-" + A.element_name(second(r));
    while (!used.insert(name).second) name += "'";
    spec.elements.push_back(std::move(name));
  }
  auto grid = [&](const std::vector<std::vector<ElementId>>& t) {
    std::vector<std::vector<std::string>> g(k);
    for (std::size_t c = 0; c < k; ++c) {
      for (auto v : t[c]) g[c].push_back(spec.elements[v]);
    }
    return g;
  };
  spec.add = grid(add);
  spec.mul = grid(mul);
  spec.zero = spec.elements[cls[A.top_id()]];
  spec.one = spec.elements[cls[A.bot_id()]];
  if (A.has_complement() && k == n) {
    // Every class is some (p, ⊤), so ¬ carries over along the embedding.
    std::vector<std::string> comp(k);
    for (ElementId p = 0; p < n; ++p) comp[cls[p]] = spec.elements[cls[A.complement_id(p)]];
    spec.complement = std::move(comp);
  }
  Algebra quotient = table_semiring(spec);

  std::vector<ElementId> embed(n);
  for (ElementId p = 0; p < n; ++p) embed[p] = cls[p];
  Morphism embedding(A, quotient, std::move(embed));
  if (!embedding.is_injective()) {
    throw ConstructionError("p ↦ (p, ⊤) is not injective");
  }
  const auto hom = check_morphism(embedding, HomKind::semiring);
  if (!hom.holds()) throw ConstructionError("p ↦ (p, ⊤) " + hom.note);

  std::vector<std::pair<ElementId, ElementId>> representatives;
  for (auto r : reps) representatives.emplace_back(first(r), second(r));
  std::vector<std::vector<ElementId>> class_of(m, std::vector<ElementId>(n));
  for (std::size_t x = 0; x < N; ++x) class_of[x / n][x % n] = cls[x];
  return DifferenceSemiring{A,         S, std::move(quotient), std::move(representatives),
                            std::move(class_of), std::move(embedding)};
}

Json to_json(const DifferenceSemiring& d) {
  Json j = to_json(d.quotient.to_table_spec());
  const auto& A = d.parent;
  Json prov;
  prov["parent"] = A.name();
  prov["subtrahends"] = element_names(A, d.subtrahends.members);
  Json opp = Json::object();
  for (const auto& [a, b] : d.subtrahends.opposites) opp[A.element_name(a)] = A.element_name(b);
  prov["opposites"] = std::move(opp);
  Json classes = Json::object();
  const auto subs = scan_order(A, d.subtrahends);
  for (std::size_t c = 0; c < d.representatives.size(); ++c) {
    Json pairs = Json::array();
    for (std::size_t i = 0; i < subs.size(); ++i) {
      for (ElementId p = 0; p < A.size(); ++p) {
        if (d.class_of[i][p] == c) pairs.push_back({A.element_name(p), A.element_name(subs[i])});
      }
    }
    classes[d.quotient.element_name(static_cast<ElementId>(c))] = std::move(pairs);
  }
  prov["classes"] = std::move(classes);
  j["provenance"] = std::move(prov);
  return j;
}

ExtendedOrder extended_order(const Algebra& A, const OrderRelation& R, const SubtrahendIdeal& S,
                             Quantifier quantifier) {
  require_same(A, R);
  if (!is_poset(R)) throw PreconditionError("extended_order: base relation is not a partial order");
  for (const auto& law : check_monotony(A, R)) {
    if (!law.holds()) throw PreconditionError("extended_order: base order violates " + law.property);
  }
  const auto n = static_cast<ElementId>(A.size());
  std::vector<std::uint8_t> leq(std::size_t{n} * n);
  for (ElementId p = 0; p < n; ++p) {
    for (ElementId q = 0; q < n; ++q) {
      bool any = false;
      bool all = true;
      for (auto d : S.members) {
        const bool v = R.leq(A.add_id(p, d), A.add_id(q, d));
        any = any || v;
        all = all && v;
      }
      leq[std::size_t{p} * n + q] = quantifier == Quantifier::existential ? any : all;
    }
  }
  OrderRelation ext(A, std::move(leq));
  auto poset = check_poset(ext);
  auto stability = stability_report("extended_order_stability", A, ext, S.members);
  auto base = stability_report("base_order_stability", A, R, S.members);
  const bool similar = ext == R;
  const bool criterion = similar == base.holds();
  return ExtendedOrder{quantifier,         std::move(ext), std::move(poset), std::move(stability),
                       std::move(base),    similar,        criterion};
}

Json to_json(const ExtendedOrder& e) {
  Json j;
  j["quantifier"] = to_string(e.quantifier);
  j["matrix"] = e.relation.matrix();
  j["poset"] = to_json(e.poset);
  j["stability"] = to_json(e.stability);
  j["base_stability"] = to_json(e.base_stability);
  j["similar"] = e.similar;
  j["similarity_criterion"] = e.similarity_criterion;
  return j;
}

PropertyReport mult_left_cancellative(const Algebra& A) {
  const ScanPolicy policy;
  const auto top = A.top_id();
  return make_report("mult_left_cancellative", A,
                     scan_tuples<3>(A.size(), policy, [&](const auto& t) {
                       const auto [c, a, b] = t;
                       return c == top || a == b || A.mul_id(c, a) != A.mul_id(c, b);
                     }),
                     policy);
}

PropertyReport cancellation_criterion(const Algebra& A, const SubtrahendIdeal& S) {
  const ScanPolicy policy;
  ElementId bad = 0;
  auto scan = scan_tuples<3>(A.size(), policy, [&](const auto& t) {
    const auto [a, b, c] = t;
    if (a == b) return true;
    for (auto d : S.members) {
      if (d == c) continue;
      if (A.add_id(A.mul_id(c, a), A.mul_id(d, b)) == A.add_id(A.mul_id(c, b), A.mul_id(d, a))) {
        bad = d;
        return false;
      }
    }
    return true;
  });
  auto r = make_report("cancellation_criterion", A, scan, policy);
  r.checked *= S.members.size();
  if (!r.holds()) {
    r.witness.push_back(bad);
    r.witness_names = element_names(A, r.witness);
  }
  return r;
}

DifferenceCancellationReport verify_difference_cancellation(const Algebra& A,
                                                            const SubtrahendIdeal& S) {
  DifferenceCancellationReport out;
  out.hypothesis = mult_left_cancellative(A);
  const auto D = difference_semiring(A, S);
  out.classes = D.quotient.size();
  out.difference_cancellative = mult_left_cancellative(D.quotient);
  out.criterion = cancellation_criterion(A, S);
  return out;
}

Json to_json(const DifferenceCancellationReport& r) {
  Json j;
  j["property"] = "difference_cancellation";
  const bool holds = !r.hypothesis_met() || r.biconditional();
  j["verdict"] = holds ? "holds" : "fails";
  j["witness"] = nullptr;
  j["checked"] = r.hypothesis.checked + r.difference_cancellative.checked + r.criterion.checked;
  j["hypothesis_met"] = r.hypothesis_met();
  j["biconditional"] = r.biconditional();
  j["classes"] = r.classes;
  j["hypothesis"] = to_json(r.hypothesis);
  j["difference_cancellative"] = to_json(r.difference_cancellative);
  j["criterion"] = to_json(r.criterion);
  return j;
}

}  // namespace boolsemi
