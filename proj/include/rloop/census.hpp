#ifndef RLOOP_CENSUS_HPP
#define RLOOP_CENSUS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "rloop/right_loop.hpp"

namespace rloop {

inline constexpr int kCensusOrderCap = 6;

/// Lexicographically least flattened table over all identity-fixing
/// relabelings: equal exactly for isomorphic tables.
std::vector<int> canonical_form(const RightLoopTable& t);

/// Every right loop of order n up to isomorphism, by backtracking over
/// column-Latin tables with the identity row and column fixed, deduplicated
/// by canonical form. Deterministic output order. Throws CapError for
/// n > kCensusOrderCap; n = 6 is allowed but takes very long.
std::vector<RightLoopTable> enumerate_right_loops(int n);

/// Isomorphism-invariant summary of one table.
struct CensusRecord {
  RightLoopTable table;
  std::size_t gss_order = 0;
  std::size_t gs_order = 0;
  std::vector<int> sigma1;
  std::vector<int> center;
  bool is_loop = false;
  bool is_group = false;
  bool simple = false;
};

CensusRecord census_record(const RightLoopTable& t);

/// One bucket of the order-4 classification: tables sharing the isomorphism
/// type of G_SS (named by a reference group) and the order of G_S.
struct Order4Case {
  std::string gss_name;  // "Z4", "Z2xZ2", "Sym4", "Alt4", "D8"
  std::size_t gss_order = 0;
  std::size_t gs_order = 0;
  std::vector<CensusRecord> records;
};

/// Buckets the order-4 census by (G_SS isomorphism fingerprint, |G_S|).
std::vector<Order4Case> classify_order4();

}  // namespace rloop

#endif
