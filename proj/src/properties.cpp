#include "boolsemi/properties.hpp"

#include <limits>

namespace boolsemi {

namespace {

using Pair = std::array<ElementId, 2>;
using Triple = std::array<ElementId, 3>;

bool injective_translation(const Algebra& a, ElementId x, std::vector<ElementId>& seen) {
  constexpr auto kUnseen = std::numeric_limits<ElementId>::max();
  seen.assign(a.size(), kUnseen);
  for (ElementId y = 0; y < a.size(); ++y) {
    auto& slot = seen[a.add_id(x, y)];
    if (slot != kUnseen) return false;
    slot = y;
  }
  return true;
}

}  // namespace

std::vector<PropertyReport> check_semiring_axioms(const Algebra& A, const ScanPolicy& policy) {
  const auto n = A.size();
  const auto top = A.top_id();
  const auto bot = A.bot_id();
  std::vector<PropertyReport> out;

  out.push_back(make_report("add_commutative", A, scan_tuples<2>(n, policy, [&](const Pair& t) {
    return A.add_id(t[0], t[1]) == A.add_id(t[1], t[0]);
  }), policy));
  out.push_back(make_report("add_associative", A, scan_tuples<3>(n, policy, [&](const Triple& t) {
    return A.add_id(t[0], A.add_id(t[1], t[2])) == A.add_id(A.add_id(t[0], t[1]), t[2]);
  }), policy));
  out.push_back(make_report("mul_associative", A, scan_tuples<3>(n, policy, [&](const Triple& t) {
    return A.mul_id(t[0], A.mul_id(t[1], t[2])) == A.mul_id(A.mul_id(t[0], t[1]), t[2]);
  }), policy));
  out.push_back(make_report("mul_commutative", A, scan_tuples<2>(n, policy, [&](const Pair& t) {
    return A.mul_id(t[0], t[1]) == A.mul_id(t[1], t[0]);
  }), policy));
  out.push_back(make_report("left_distributive", A, scan_tuples<3>(n, policy, [&](const Triple& t) {
    const auto [p, q, r] = t;
    return A.mul_id(p, A.add_id(q, r)) == A.add_id(A.mul_id(p, q), A.mul_id(p, r));
  }), policy));
  out.push_back(make_report("right_distributive", A, scan_tuples<3>(n, policy, [&](const Triple& t) {
    const auto [p, q, r] = t;
    return A.mul_id(A.add_id(q, r), p) == A.add_id(A.mul_id(q, p), A.mul_id(r, p));
  }), policy));
  out.push_back(make_report("add_identity", A, scan_tuples<1>(n, policy, [&](const auto& t) {
    return A.add_id(top, t[0]) == t[0] && A.add_id(t[0], top) == t[0];
  }), policy));
  out.push_back(make_report("mul_identity", A, scan_tuples<1>(n, policy, [&](const auto& t) {
    return A.mul_id(bot, t[0]) == t[0] && A.mul_id(t[0], bot) == t[0];
  }), policy));
  out.push_back(make_report("top_absorbing", A, scan_tuples<1>(n, policy, [&](const auto& t) {
    return A.mul_id(top, t[0]) == top && A.mul_id(t[0], top) == top;
  }), policy));
  return out;
}

PropertyReport is_zerosumfree(const Algebra& A, const ScanPolicy& policy) {
  const auto top = A.top_id();
  return make_report("zerosumfree", A, scan_tuples<2>(A.size(), policy, [&](const Pair& t) {
    return A.add_id(t[0], t[1]) != top || (t[0] == top && t[1] == top);
  }), policy);
}

PropertyReport is_entire(const Algebra& A, const ScanPolicy& policy) {
  const auto top = A.top_id();
  return make_report("entire", A, scan_tuples<2>(A.size(), policy, [&](const Pair& t) {
    return t[0] == top || t[1] == top || A.mul_id(t[0], t[1]) != top;
  }), policy);
}

PropertyReport is_simple(const Algebra& A) {
  const auto bot = A.bot_id();
  ScanPolicy policy;
  return make_report("simple", A, scan_tuples<1>(A.size(), policy, [&](const auto& t) {
    return A.add_id(t[0], bot) == bot;
  }), policy);
}

std::vector<ElementId> compute_center(const Algebra& A) {
  std::vector<ElementId> center;
  for (ElementId p = 0; p < A.size(); ++p) {
    bool commutes = true;
    for (ElementId q = 0; q < A.size() && commutes; ++q) {
      commutes = A.mul_id(p, q) == A.mul_id(q, p);
    }
    if (commutes) center.push_back(p);
  }
  return center;
}

PropertyReport is_commutative(const Algebra& A) {
  PropertyReport r;
  r.property = "commutative";
  const auto n = A.size();
  for (ElementId p = 0; p < n; ++p) {
    for (ElementId q = 0; q < n; ++q) {
      ++r.checked;
      if (A.mul_id(p, q) != A.mul_id(q, p)) {
        r.verdict = Verdict::fails;
        r.witness = {p, q};
        r.witness_names = element_names(A, r.witness);
        r.note = "center has " + std::to_string(compute_center(A).size()) + " of " +
                 std::to_string(n) + " elements";
        return r;
      }
    }
  }
  return r;
}

std::vector<ElementId> additively_cancellable_elements(const Algebra& A) {
  std::vector<ElementId> out;
  std::vector<ElementId> seen;
  for (ElementId a = 0; a < A.size(); ++a) {
    if (injective_translation(A, a, seen)) out.push_back(a);
  }
  return out;
}

PropertyReport is_additively_cancellative(const Algebra& A) {
  PropertyReport r;
  r.property = "additively_cancellative";
  const auto n = A.size();
  std::vector<ElementId> seen;
  for (ElementId a = 0; a < n; ++a) {
    r.checked += n;
    if (injective_translation(A, a, seen)) continue;
    for (ElementId x = 0; x < n; ++x) {
      for (ElementId y = 0; y < n; ++y) {
        if (x != y && A.add_id(a, x) == A.add_id(a, y)) {
          r.verdict = Verdict::fails;
          r.witness = {a, x, y};
          r.witness_names = element_names(A, r.witness);
          return r;
        }
      }
    }
  }
  return r;
}

PropertyReport is_multiplicatively_absorbing(const Algebra& A) {
  const auto top = A.top_id();
  ScanPolicy policy;
  return make_report("multiplicatively_absorbing", A,
                     scan_tuples<1>(A.size(), policy, [&](const auto& t) {
                       return A.mul_id(top, t[0]) == top && A.mul_id(t[0], top) == top;
                     }),
                     policy);
}

}  // namespace boolsemi
