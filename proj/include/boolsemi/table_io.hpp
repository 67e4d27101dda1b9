#ifndef BOOLSEMI_TABLE_IO_HPP
#define BOOLSEMI_TABLE_IO_HPP

#include <string>

#include "boolsemi/algebra.hpp"
#include "boolsemi/report.hpp"

namespace boolsemi {

/// {"name", "elements", "add", "mul", "zero", "one", "complement"?, "order"?}.
/// Throws LoadError on schema problems; table validation happens in
/// table_semiring.
TableSpec table_spec_from_json(const Json& j);
Json to_json(const TableSpec& spec);

/// Reads and validates a table file. Throws LoadError if unreadable.
Algebra load_table_file(const std::string& path);

}  // namespace boolsemi

#endif  // BOOLSEMI_TABLE_IO_HPP
