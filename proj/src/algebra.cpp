#include "boolsemi/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace boolsemi {

namespace {

class Fnv1a {
 public:
  void bytes(std::string_view s) {
    for (unsigned char c : s) {
      hash_ ^= c;
      hash_ *= 0x100000001b3ULL;
    }
    // Separator so that ("ab","c") and ("a","bc") differ.
    hash_ ^= 0xff;
    hash_ *= 0x100000001b3ULL;
  }
  void number(std::uint64_t v) { bytes(std::to_string(v)); }
  std::uint64_t value() const { return hash_; }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

Element Algebra::element(ElementId id) const {
  if (id >= impl_->size) {
    throw DomainError("element id " + std::to_string(id) + " out of range for algebra '" +
                      impl_->name + "' of size " + std::to_string(impl_->size));
  }
  return {id, impl_->fingerprint};
}

void Algebra::require_owned(Element x, std::string_view what) const {
  if (!owns(x)) {
    throw DomainError(std::string(what) + ": element does not belong to algebra '" + impl_->name +
                      "'");
  }
}

Element Algebra::combine(Op op, Element x, Element y) const {
  require_owned(x, op == Op::add ? "add" : "mul");
  require_owned(y, op == Op::add ? "add" : "mul");
  return {op_id(op, x.id, y.id), impl_->fingerprint};
}

ElementId Algebra::complement_id(ElementId a) const {
  if (!impl_->has_complement) {
    throw UnsupportedError("algebra '" + impl_->name + "' has no complement");
  }
  if (is_free()) {
    const std::uint64_t mask = impl_->top;
    return static_cast<ElementId>(~static_cast<std::uint64_t>(a) & mask);
  }
  return impl_->complement[a];
}

Element Algebra::complement(Element x) const {
  require_owned(x, "complement");
  return {complement_id(x.id), impl_->fingerprint};
}

std::string Algebra::element_name(ElementId id) const {
  if (!is_free()) return impl_->names.at(id);
  if (id == impl_->top) return "⊤";
  if (id == impl_->bot) return "⊥";
  const auto rows = row_count();
  const auto& atoms = impl_->atoms;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    ElementId atom = 0;
    for (std::size_t k = 0; k < rows; ++k) {
      if ((k >> i) & 1U) atom |= ElementId{1} << k;
    }
    if (id == atom) return atoms[i];
    if (id == (~atom & impl_->top)) return "!" + atoms[i];
  }
  std::vector<std::string> minterms;
  for (std::size_t k = 0; k < rows; ++k) {
    if (!((id >> k) & 1U)) continue;
    std::vector<std::string> literals;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      literals.push_back(((k >> i) & 1U) ? atoms[i] : "!" + atoms[i]);
    }
    minterms.push_back(join(literals, " & "));
  }
  return join(minterms, " | ");
}

std::optional<ElementId> Algebra::find(std::string_view name) const {
  if (!is_free()) {
    auto it = impl_->index.find(std::string(name));
    if (it == impl_->index.end()) return std::nullopt;
    return it->second;
  }
  for (ElementId id = 0; id < impl_->size; ++id) {
    if (element_name(id) == name) return id;
  }
  return std::nullopt;
}

ElementId Algebra::lookup(std::string_view name) const {
  if (auto id = find(name)) return *id;
  throw DomainError("unknown element '" + std::string(name) + "' in algebra '" + impl_->name +
                    "'");
}

std::string Algebra::truth_table(ElementId id) const {
  if (!is_free()) {
    throw UnsupportedError("truth tables exist only for free Boolean algebras");
  }
  std::string bits;
  for (std::size_t k = row_count(); k-- > 0;) bits.push_back(((id >> k) & 1U) ? '1' : '0');
  return bits;
}

TableSpec Algebra::to_table_spec() const {
  if (impl_->size > kMaxTableSize) {
    throw SizeLimitError("algebra '" + impl_->name + "' too large to export as a table");
  }
  TableSpec spec;
  spec.name = impl_->name;
  const auto n = static_cast<ElementId>(impl_->size);
  for (ElementId i = 0; i < n; ++i) spec.elements.push_back(element_name(i));
  spec.add.assign(n, {});
  spec.mul.assign(n, {});
  for (ElementId i = 0; i < n; ++i) {
    for (ElementId j = 0; j < n; ++j) {
      spec.add[i].push_back(spec.elements[add_id(i, j)]);
      spec.mul[i].push_back(spec.elements[mul_id(i, j)]);
    }
  }
  spec.zero = spec.elements[impl_->top];
  spec.one = spec.elements[impl_->bot];
  if (impl_->has_complement) {
    std::vector<std::string> comp;
    for (ElementId i = 0; i < n; ++i) comp.push_back(spec.elements[complement_id(i)]);
    spec.complement = std::move(comp);
  }
  spec.order = impl_->order;
  return spec;
}

Algebra free_boolean_algebra(unsigned atoms) {
  if (atoms > kMaxAtoms) {
    throw SizeLimitError("free Boolean algebra on " + std::to_string(atoms) +
                         " atoms exceeds the limit of " + std::to_string(kMaxAtoms));
  }
  static const char* const kDefault[] = {"a", "b", "c", "d"};
  return free_boolean_algebra(std::vector<std::string>(kDefault, kDefault + atoms));
}

Algebra free_boolean_algebra(std::vector<std::string> atom_names) {
  if (atom_names.size() > kMaxAtoms) {
    throw SizeLimitError("free Boolean algebra on " + std::to_string(atom_names.size()) +
                         " atoms exceeds the limit of " + std::to_string(kMaxAtoms));
  }
  std::sort(atom_names.begin(), atom_names.end());
  for (std::size_t i = 0; i < atom_names.size(); ++i) {
    if (!is_identifier(atom_names[i])) {
      throw DomainError("invalid atom name '" + atom_names[i] + "'");
    }
    if (i > 0 && atom_names[i] == atom_names[i - 1]) {
      throw DomainError("duplicate atom name '" + atom_names[i] + "'");
    }
  }
  auto impl = std::make_shared<Algebra::Impl>();
  impl->kind = Algebra::Kind::free_boolean;
  impl->name = "free(" + join(atom_names, ",") + ")";
  const std::size_t rows = std::size_t{1} << atom_names.size();
  impl->size = std::size_t{1} << rows;
  impl->top = static_cast<ElementId>(impl->size - 1);
  impl->bot = 0;
  impl->has_complement = true;
  impl->atoms = std::move(atom_names);
  Fnv1a h;
  h.bytes("free");
  for (const auto& a : impl->atoms) h.bytes(a);
  impl->fingerprint = h.value();
  return Algebra(std::move(impl));
}

Algebra table_semiring(const TableSpec& spec) {
  const std::size_t n = spec.elements.size();
  if (n == 0) throw LoadError("table '" + spec.name + "': empty element list");
  if (n > kMaxTableSize) {
    throw SizeLimitError("table '" + spec.name + "': " + std::to_string(n) +
                         " elements exceeds the limit of " + std::to_string(kMaxTableSize));
  }
  auto impl = std::make_shared<Algebra::Impl>();
  impl->kind = Algebra::Kind::table;
  impl->name = spec.name.empty() ? "table" : spec.name;
  impl->size = n;
  impl->names = spec.elements;
  for (std::size_t i = 0; i < n; ++i) {
    if (!impl->index.emplace(spec.elements[i], static_cast<ElementId>(i)).second) {
      throw LoadError("table '" + impl->name + "': duplicate element '" + spec.elements[i] + "'");
    }
  }
  auto resolve = [&](const std::string& s, const std::string& where) {
    auto it = impl->index.find(s);
    if (it == impl->index.end()) {
      throw LoadError("table '" + impl->name + "': " + where + " names unknown element '" + s +
                      "'");
    }
    return it->second;
  };
  auto load_table = [&](const std::vector<std::vector<std::string>>& rows, const char* label) {
    if (rows.size() != n) {
      throw LoadError("table '" + impl->name + "': " + label + " has " +
                      std::to_string(rows.size()) + " rows, expected " + std::to_string(n));
    }
    std::vector<ElementId> out(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) {
        throw LoadError("table '" + impl->name + "': " + label + " row '" + spec.elements[i] +
                        "' has " + std::to_string(rows[i].size()) + " cells, expected " +
                        std::to_string(n));
      }
      for (std::size_t j = 0; j < n; ++j) {
        out[i * n + j] = resolve(rows[i][j], std::string(label) + "[" + spec.elements[i] + "][" +
                                                 spec.elements[j] + "]");
      }
    }
    return out;
  };
  impl->add = load_table(spec.add, "add");
  impl->mul = load_table(spec.mul, "mul");
  impl->top = resolve(spec.zero, "zero");
  impl->bot = resolve(spec.one, "one");
  for (std::size_t p = 0; p < n; ++p) {
    if (impl->add[impl->top * n + p] != p) {
      throw LoadError("table '" + impl->name + "': identity law violated at add[" + spec.zero +
                      "][" + spec.elements[p] + "] = " +
                      spec.elements[impl->add[impl->top * n + p]]);
    }
    if (impl->mul[impl->bot * n + p] != p) {
      throw LoadError("table '" + impl->name + "': identity law violated at mul[" + spec.one +
                      "][" + spec.elements[p] + "] = " +
                      spec.elements[impl->mul[impl->bot * n + p]]);
    }
  }
  if (spec.complement) {
    if (spec.complement->size() != n) {
      throw LoadError("table '" + impl->name + "': complement has " +
                      std::to_string(spec.complement->size()) + " entries, expected " +
                      std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
      impl->complement.push_back(
          resolve((*spec.complement)[i], "complement[" + spec.elements[i] + "]"));
    }
    impl->has_complement = true;
  }
  if (spec.order) {
    const auto& m = *spec.order;
    if (m.size() != n) throw LoadError("table '" + impl->name + "': order matrix has wrong size");
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i].size() != n) {
        throw LoadError("table '" + impl->name + "': order row '" + spec.elements[i] +
                        "' has wrong length");
      }
      for (int v : m[i]) {
        if (v != 0 && v != 1) {
          throw LoadError("table '" + impl->name + "': order entries must be 0 or 1");
        }
      }
    }
    impl->order = m;
  }
  Fnv1a h;
  h.bytes("table");
  h.bytes(impl->name);
  for (const auto& e : impl->names) h.bytes(e);
  for (auto v : impl->add) h.number(v);
  for (auto v : impl->mul) h.number(v);
  for (auto v : impl->complement) h.number(v);
  h.number(impl->top);
  h.number(impl->bot);
  impl->fingerprint = h.value();
  return Algebra(std::move(impl));
}

Element combine(const Algebra& algebra, Op op, Element x, Element y) {
  return algebra.combine(op, x, y);
}

Element complement(const Algebra& algebra, Element x) { return algebra.complement(x); }

Subalgebra::Subalgebra(Algebra parent, std::vector<ElementId> members, bool bpa_closed)
    : parent_(std::move(parent)), members_(std::move(members)), bpa_closed_(bpa_closed) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (auto m : members_) {
    if (m >= parent_.size()) {
      throw DomainError("subalgebra member id " + std::to_string(m) + " out of range");
    }
  }
  auto fail = [&](const std::string& why) {
    throw DomainError("not a subalgebra of '" + parent_.name() + "': " + why);
  };
  if (!contains(parent_.top_id())) fail("⊤ missing");
  if (!contains(parent_.bot_id())) fail("⊥ missing");
  for (auto x : members_) {
    for (auto y : members_) {
      if (!contains(parent_.add_id(x, y))) {
        fail(parent_.element_name(x) + " + " + parent_.element_name(y) + " escapes");
      }
      if (!contains(parent_.mul_id(x, y))) {
        fail(parent_.element_name(x) + " × " + parent_.element_name(y) + " escapes");
      }
    }
    if (bpa_closed_ && !contains(parent_.complement_id(x))) {
      fail("¬" + parent_.element_name(x) + " escapes");
    }
  }
}

bool Subalgebra::contains(ElementId id) const {
  return std::binary_search(members_.begin(), members_.end(), id);
}

Algebra Subalgebra::as_algebra() const {
  TableSpec spec;
  spec.name = "sub(" + parent_.name() + ")";
  const auto n = members_.size();
  std::unordered_map<ElementId, std::size_t> local;
  for (std::size_t i = 0; i < n; ++i) {
    local.emplace(members_[i], i);
    spec.elements.push_back(parent_.element_name(members_[i]));
  }
  spec.add.assign(n, {});
  spec.mul.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      spec.add[i].push_back(spec.elements[local.at(parent_.add_id(members_[i], members_[j]))]);
      spec.mul[i].push_back(spec.elements[local.at(parent_.mul_id(members_[i], members_[j]))]);
    }
  }
  spec.zero = spec.elements[local.at(parent_.top_id())];
  spec.one = spec.elements[local.at(parent_.bot_id())];
  if (bpa_closed_ && parent_.has_complement()) {
    std::vector<std::string> comp;
    for (auto m : members_) comp.push_back(spec.elements[local.at(parent_.complement_id(m))]);
    spec.complement = std::move(comp);
  }
  return table_semiring(spec);
}

Subalgebra subalgebra_closure_ids(const Algebra& algebra, std::span<const ElementId> generators,
                                  bool bpa_closed) {
  std::vector<char> in(algebra.size(), 0);
  std::vector<ElementId> members;
  auto insert = [&](ElementId id) {
    if (id >= algebra.size()) {
      throw DomainError("generator id " + std::to_string(id) + " out of range");
    }
    if (!in[id]) {
      in[id] = 1;
      members.push_back(id);
    }
  };
  insert(algebra.top_id());
  insert(algebra.bot_id());
  for (auto g : generators) insert(g);
  // Fixed point: each new member is combined with everything seen so far.
  for (std::size_t next = 0; next < members.size(); ++next) {
    const ElementId x = members[next];
    for (std::size_t j = 0; j <= next; ++j) {
      const ElementId y = members[j];
      insert(algebra.add_id(x, y));
      insert(algebra.add_id(y, x));
      insert(algebra.mul_id(x, y));
      insert(algebra.mul_id(y, x));
    }
    if (bpa_closed) insert(algebra.complement_id(x));
  }
  return Subalgebra(algebra, std::move(members), bpa_closed);
}

Subalgebra subalgebra_closure(const Algebra& algebra, std::span<const Element> generators,
                              bool bpa_closed) {
  std::vector<ElementId> ids;
  for (const auto& g : generators) {
    if (!algebra.owns(g)) {
      throw DomainError("generator does not belong to algebra '" + algebra.name() + "'");
    }
    ids.push_back(g.id);
  }
  return subalgebra_closure_ids(algebra, ids, bpa_closed);
}

}  // namespace boolsemi
