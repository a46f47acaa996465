#ifndef RLOOP_TABLE_IO_HPP
#define RLOOP_TABLE_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "rloop/right_loop.hpp"
#include "rloop/transversal.hpp"

namespace rloop {

/// Table file format:
///
///   # optional comments
///   rightloop <n> identity=<label>
///   <n rows of n whitespace-separated labels>
///
/// Rows are in element order and entries are labels. Labels are arbitrary
/// whitespace-free tokens; the identity is named in the header, not
/// positional, and is moved to index 0 on ingestion.
RightLoopTable read_table(std::istream& in);
RightLoopTable read_table_file(const std::string& path);
void write_table(std::ostream& out, const RightLoopTable& t);
std::string table_to_string(const RightLoopTable& t);

/// Group spec format (cycle notation, 1-based points):
///
///   degree <n>
///   generators <perm> <perm> ...
///   subgroup <perm> ...          (optional; defaults to trivial)
///   transversal <perm> ...       (optional; defaults to least coset reps)
struct GroupSpec {
  int degree = 0;
  std::vector<Perm> generators;
  std::vector<Perm> subgroup_generators;
  std::vector<Perm> transversal;
};

GroupSpec read_group_spec(std::istream& in);
GroupSpec read_group_spec_file(const std::string& path);

TransversalSpec build_transversal(const GroupSpec& spec,
                                  std::size_t order_cap = kDefaultOrderCap);

}  // namespace rloop

#endif
