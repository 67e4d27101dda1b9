#include "boolsemi/order.hpp"

#include <algorithm>

#include "boolsemi/properties.hpp"

namespace boolsemi {

namespace {

void require_order_size(const Algebra& algebra) {
  if (algebra.size() > kMaxOrderSize) {
    throw SizeLimitError("order matrix for '" + algebra.name() + "' (" +
                         std::to_string(algebra.size()) + " elements) exceeds the limit of " +
                         std::to_string(kMaxOrderSize));
  }
}

void require_same(const Algebra& algebra, const OrderRelation& order) {
  if (algebra.fingerprint() != order.algebra().fingerprint()) {
    throw DomainError("order relation belongs to '" + order.algebra().name() + "', not '" +
                      algebra.name() + "'");
  }
}

void require_poset(const OrderRelation& order, const char* who) {
  if (!is_poset(order)) {
    throw PreconditionError(std::string(who) + ": relation on '" + order.algebra().name() +
                            "' is not a partial order");
  }
}

}  // namespace

OrderRelation::OrderRelation(Algebra algebra, std::vector<std::uint8_t> leq)
    : algebra_(std::move(algebra)), leq_(std::move(leq)) {
  require_order_size(algebra_);
  if (leq_.size() != algebra_.size() * algebra_.size()) {
    throw DomainError("order matrix has " + std::to_string(leq_.size()) + " cells, expected " +
                      std::to_string(algebra_.size() * algebra_.size()));
  }
}

OrderRelation OrderRelation::from_matrix(Algebra algebra,
                                         const std::vector<std::vector<int>>& matrix) {
  const auto n = algebra.size();
  if (matrix.size() != n) {
    throw DomainError("order matrix has " + std::to_string(matrix.size()) + " rows, expected " +
                      std::to_string(n));
  }
  std::vector<std::uint8_t> leq;
  leq.reserve(n * n);
  for (const auto& row : matrix) {
    if (row.size() != n) throw DomainError("order matrix row has wrong length");
    for (int v : row) {
      if (v != 0 && v != 1) throw DomainError("order matrix entries must be 0 or 1");
      leq.push_back(static_cast<std::uint8_t>(v));
    }
  }
  return OrderRelation(std::move(algebra), std::move(leq));
}

std::vector<std::vector<int>> OrderRelation::matrix() const {
  const auto n = size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n));
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) m[p][q] = leq_[p * n + q];
  }
  return m;
}

OrderRelation OrderRelation::restrict_to(const Subalgebra& sub) const {
  if (sub.parent().fingerprint() != algebra_.fingerprint()) {
    throw DomainError("subalgebra is not drawn from '" + algebra_.name() + "'");
  }
  const auto& m = sub.members();
  std::vector<std::uint8_t> leq;
  leq.reserve(m.size() * m.size());
  for (auto p : m) {
    for (auto q : m) leq.push_back(leq_[p * size() + q]);
  }
  return OrderRelation(sub.as_algebra(), std::move(leq));
}

OrderRelation canonical_order(const Algebra& A) {
  require_order_size(A);
  const auto n = static_cast<ElementId>(A.size());
  for (ElementId p = 0; p < n; ++p) {
    if (A.add_id(p, p) != p) {
      throw UnsupportedError("canonical order needs idempotent +, but " + A.element_name(p) +
                             " + " + A.element_name(p) + " = " +
                             A.element_name(A.add_id(p, p)) + " in '" + A.name() + "'");
    }
    for (ElementId q = 0; q < n; ++q) {
      if (A.add_id(p, q) != A.add_id(q, p)) {
        throw UnsupportedError("canonical order needs commutative + in '" + A.name() + "'");
      }
    }
  }
  std::vector<std::uint8_t> leq(std::size_t{n} * n);
  for (ElementId p = 0; p < n; ++p) {
    for (ElementId q = 0; q < n; ++q) leq[std::size_t{p} * n + q] = A.add_id(p, q) == q;
  }
  return OrderRelation(A, std::move(leq));
}

OrderRelation discrete_order(const Algebra& A) {
  require_order_size(A);
  const auto n = A.size();
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t p = 0; p < n; ++p) leq[p * n + p] = 1;
  return OrderRelation(A, std::move(leq));
}

std::vector<PropertyReport> check_poset(const OrderRelation& R) {
  const auto& A = R.algebra();
  const auto n = R.size();
  const ScanPolicy policy;
  std::vector<PropertyReport> out;
  out.push_back(make_report("reflexive", A, scan_tuples<1>(n, policy, [&](const auto& t) {
    return R.leq(t[0], t[0]);
  }), policy));
  out.push_back(make_report("antisymmetric", A, scan_tuples<2>(n, policy, [&](const auto& t) {
    return t[0] == t[1] || !(R.leq(t[0], t[1]) && R.leq(t[1], t[0]));
  }), policy));
  out.push_back(make_report("transitive", A, scan_tuples<3>(n, policy, [&](const auto& t) {
    return !(R.leq(t[0], t[1]) && R.leq(t[1], t[2])) || R.leq(t[0], t[2]);
  }), policy));
  return out;
}

bool is_poset(const OrderRelation& R) {
  const auto reports = check_poset(R);
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.holds(); });
}

std::vector<PropertyReport> check_monotony(const Algebra& A, const OrderRelation& R,
                                           const ScanPolicy& policy) {
  require_same(A, R);
  require_poset(R, "check_monotony");
  const auto n = A.size();
  std::vector<PropertyReport> out;
  for (Op op : {Op::add, Op::mul}) {
    out.push_back(make_report(op == Op::add ? "monotony_add" : "monotony_mul", A,
                              scan_tuples<3>(n, policy, [&](const auto& t) {
                                const auto [p, q, r] = t;
                                return !R.leq(p, q) || R.leq(A.op_id(op, p, r), A.op_id(op, q, r));
                              }),
                              policy));
  }
  return out;
}

PropertyReport verify_lemma_bounds(const Algebra& A, const OrderRelation& R) {
  require_same(A, R);
  require_poset(R, "verify_lemma_bounds");
  const ScanPolicy policy;
  const char* part = "";
  auto scan = scan_tuples<2>(A.size(), policy, [&](const auto& t) {
    const auto [p, q] = t;
    if (!R.leq(p, A.add_id(p, q))) {
      part = "p ≼ p + q fails";
      return false;
    }
    if (!R.leq(A.mul_id(p, q), q)) {
      part = "p × q ≼ q fails";
      return false;
    }
    return true;
  });
  auto report = make_report("lemma_bounds", A, scan, policy);
  if (!report.holds()) report.note = part;
  return report;
}

PropertyReport verify_decomposition(const Algebra& A, const OrderRelation& R,
                                    const ScanPolicy& policy) {
  require_same(A, R);
  require_poset(R, "verify_decomposition");
  const char* part = "";
  auto scan = scan_tuples<3>(A.size(), policy, [&](const auto& t) {
    const auto [p, q, r] = t;
    if (R.leq(A.add_id(p, q), r) && !(R.leq(p, r) && R.leq(q, r))) {
      part = "p + q ≼ r but not both p ≼ r and q ≼ r";
      return false;
    }
    if (R.leq(p, A.mul_id(q, r)) && !(R.leq(p, q) && R.leq(p, r))) {
      part = "p ≼ q × r but not both p ≼ q and p ≼ r";
      return false;
    }
    return true;
  });
  auto report = make_report("decomposition", A, scan, policy);
  if (!report.holds()) report.note = part;
  return report;
}

PropertyReport verify_pairwise_monotony(const Algebra& A, const OrderRelation& R,
                                        const ScanPolicy& policy) {
  require_same(A, R);
  require_poset(R, "verify_pairwise_monotony");
  const char* part = "";
  auto scan = scan_tuples<4>(A.size(), policy, [&](const auto& t) {
    const auto [p, q, r, s] = t;
    if (!(R.leq(p, q) && R.leq(r, s))) return true;
    if (!R.leq(A.add_id(p, r), A.add_id(q, s))) {
      part = "p + r ≼ q + s fails";
      return false;
    }
    if (!R.leq(A.mul_id(p, r), A.mul_id(q, s))) {
      part = "p × r ≼ q × s fails";
      return false;
    }
    return true;
  });
  auto report = make_report("pairwise_monotony", A, scan, policy);
  if (!report.holds()) report.note = report.note.empty() ? part : report.note + "; " + part;
  return report;
}

Cones cones(const Algebra& A, const OrderRelation& R) {
  require_same(A, R);
  require_poset(R, "cones");
  Cones c;
  const auto n = static_cast<ElementId>(A.size());
  for (ElementId p = 0; p < n; ++p) {
    bool pos = true;
    bool neg = true;
    for (ElementId q = 0; q < n && (pos || neg); ++q) {
      const auto s = A.add_id(p, q);
      pos = pos && R.leq(p, s);
      neg = neg && R.leq(s, p);
    }
    if (pos) c.positive.push_back(p);
    if (neg) c.negative.push_back(p);
  }
  return c;
}

bool SubalgebraOrderReport::restriction_holds() const {
  return std::all_of(restriction.begin(), restriction.end(),
                     [](const auto& r) { return r.holds(); });
}

SubalgebraOrderReport subalgebra_order_report(const Algebra& B, const Subalgebra& sub,
                                              const OrderRelation& R) {
  require_same(B, R);
  if (sub.parent().fingerprint() != B.fingerprint()) {
    throw DomainError("subalgebra is not drawn from '" + B.name() + "'");
  }
  SubalgebraOrderReport out;
  const auto restricted = R.restrict_to(sub);
  out.restriction = check_poset(restricted);
  if (is_poset(restricted)) {
    for (auto& r : check_monotony(restricted.algebra(), restricted)) {
      out.restriction.push_back(std::move(r));
    }
  }
  for (ElementId p = 0; p < B.size(); ++p) {
    if (!sub.contains(p)) out.difference.push_back(p);
  }
  out.difference_within_top =
      std::all_of(out.difference.begin(), out.difference.end(),
                  [&](ElementId p) { return p == B.top_id(); });
  out.cancellable = additively_cancellable_elements(B);
  out.top_cancellable = std::binary_search(out.cancellable.begin(), out.cancellable.end(),
                                           B.top_id());
  out.equal = out.difference.empty();
  return out;
}

Json to_json(const SubalgebraOrderReport& report, const Algebra& B) {
  Json j;
  j["property"] = "subalgebra_equals_parent";
  j["verdict"] = report.equal ? "holds" : "fails";
  if (report.equal) {
    j["witness"] = nullptr;
  } else {
    j["witness"] = element_names(B, report.difference);
  }
  j["checked"] = B.size();
  Json r;
  r["laws"] = to_json(report.restriction);
  r["laws_hold"] = report.restriction_holds();
  r["difference"] = element_names(B, report.difference);
  r["difference_within_top"] = report.difference_within_top;
  r["cancellable"] = element_names(B, report.cancellable);
  r["top_cancellable"] = report.top_cancellable;
  r["equal"] = report.equal;
  j["restriction"] = std::move(r);
  return j;
}

}  // namespace boolsemi
