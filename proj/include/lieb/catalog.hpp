#ifndef LIEB_CATALOG_HPP
#define LIEB_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "lieb/algebra.hpp"

namespace lieb {
namespace catalog {

struct CatalogEntry {
  std::string name;
  std::size_t arity = 0;  // number of integer parameters
  std::string doc;
  bool lie_family = false;        // every member passes is_lie
  std::vector<long> sample_params;  // parameters of the default instance
  std::optional<InvariantVector> expected_invariants;  // of that instance
};

const std::vector<CatalogEntry>& entries();

// Constructors.  Lie tables are antisymmetrized automatically.
StructureConstants abelian(long d);
StructureConstants nonabelian2();         // [e1,e2] = e2
StructureConstants heisenberg(long m);    // dim 2m+1, [e_i, e_{m+i}] = e_{2m+1}
StructureConstants sl2();                 // basis (h, e, f)
StructureConstants gl(long m);            // elementary-matrix commutators
StructureConstants leibniz_nilpotent2();  // [e1,e1] = e2, non-Lie Leibniz
// sl2 extended by the irreducible (2n+1)-dimensional module as an abelian
// ideal: basis (h, e, f, v_0..v_{2n}) with h.v_k = (2n-2k) v_k,
// e.v_k = k(2n-k+1) v_{k-1}, f.v_k = v_{k+1}
StructureConstants semidirect_sl2(long n);

// Dispatch by entry name; params.size() must equal the entry's arity.
StructureConstants get(const std::string& name,
                       const std::vector<long>& params);

// One instance per entry, built from its sample parameters, plus the
// extra abelian sizes used throughout the tests.
std::vector<StructureConstants> default_instances();

// Static reference data: r(n) counts the irreducible components and s(n)
// the open orbits of the variety of n-dimensional complex Lie algebras,
// n = 1..7.  Stored, not recomputed.
struct ReferenceCounts {
  std::vector<long> r;
  std::vector<long> s;
};

const ReferenceCounts& reference_counts();

}  // namespace catalog
}  // namespace lieb

#endif
