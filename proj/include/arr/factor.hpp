#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "arr/lattice.hpp"
#include "arr/partition.hpp"

namespace arr {

/// Verdict plus structured evidence. Whatever witness a checker produces
/// re-verifies to the same verdict through the corresponding checker.
struct Certificate {
  bool verdict = false;
  std::optional<Partition> partition;                // nice partition / factorization found
  std::optional<std::vector<int>> transversal;       // dependent transversal (hyperplane indices)
  std::optional<MemberMask> flat_members;            // violating / offending flat
  std::optional<std::vector<MemberMask>> chain;      // modular chain, rank 0..r
  std::optional<std::vector<int>> pivot_chain;       // addition order for inductive classes
  std::optional<std::vector<int>> exponents;         // sorted ascending, zeros included
  std::string note;
};

/// Every transversal (one hyperplane per block) must be linearly
/// independent. Enumerates transversals; errors with CapExceeded past
/// `max_transversals`.
Certificate is_independent(const Arrangement& a, const Partition& p,
                           std::uint64_t max_transversals = 1000000);

/// Nonempty blocks pi_i with members in A_X, block order inherited.
/// Indices stay those of `a`.
Partition induced_partition_at_flat(const Arrangement& a, const Partition& p, int flat_id);

/// Independent and every localization at a flat X != V has a singleton
/// block. The empty partition is nice for the empty arrangement.
Certificate is_nice(const Arrangement& a, const Partition& p,
                    std::uint64_t max_transversals = 1000000);

/// Whether some nice partition exists (memoized).
bool is_factored(const Arrangement& a);

/// All nice partitions up to block reordering (blocks sorted by minimum),
/// truncated at `limit`. Backtracking over block assignments with target
/// block sizes taken from the linear factorization of the Poincare
/// polynomial, pruned on rank-2 localizations.
std::vector<Partition> find_nice_partitions(const Arrangement& a,
                                            std::optional<std::size_t> limit = std::nullopt,
                                            int jobs = 1);

/// The restriction map R: A \ pi_1 -> A'' for the block containing the
/// pivot (rotated to front internally).
struct RestrictionMapResult {
  Triple triple;
  int pivot_block = 0;
  std::vector<int> image;  // whole index -> index in A'' (-1 inside the pivot block)
  bool injective = false;
  bool surjective = false;
  bool bijective = false;
  bool partition_ok = false;       // images of the non-pivot blocks partition A''
  Partition restricted_partition;  // indices of A''; meaningful iff partition_ok
  std::optional<std::pair<int, int>> collision;  // witnesses non-injectivity
};
RestrictionMapResult restriction_map(const Arrangement& a, const Partition& p, int pivot);

/// Induced partition of the deletion A' = A minus pivot, in A' indices.
Partition induced_deleted_partition(const Partition& p, int pivot);

/// Pivot is distinguished iff the induced partition is nice for A'.
Certificate is_distinguished(const Arrangement& a, const Partition& p, int pivot);

/// The three statements of the addition-deletion theorem for nice
/// partitions, computed independently. `violation` must never be set.
struct AddDelReport {
  bool nice_whole = false;
  bool nice_deleted = false;
  bool r_bijective = false;
  bool nice_restricted = false;  // pi'' is a partition of A'' and nice
  bool statement_iii() const { return r_bijective && nice_restricted; }
  bool violation = false;           // exactly two statements hold, the third fails
  bool hypothesis_not_met = false;  // pi'' nice but R not bijective
};
AddDelReport add_del_check(const Arrangement& a, const Partition& p, int pivot);

/// {0^(l-r)} plus the block sizes, ascending. NotNice unless p is nice.
std::vector<int> exponents_from_partition(const Arrangement& a, const Partition& p);

Certificate is_inductively_free(const Arrangement& a);

Certificate is_inductive_factorization(const Arrangement& a, const Partition& p);

Certificate is_inductively_factored(const Arrangement& a);

Certificate is_supersolvable(const Arrangement& a);

/// pi_i = A_{X_i} \ A_{X_{i-1}} along a maximal modular chain.
Partition nice_from_modular_chain(const Arrangement& a, const std::vector<MemberMask>& chain);

enum class Property { Factored, InductivelyFactored, InductivelyFree };

/// Property must hold for A^X for every flat X, including X = V.
Certificate hereditary_check(const Arrangement& a, Property prop);

/// One step of an induction of factorizations. Partitions use the indices
/// of the full arrangement; `restricted_blocks` lists the blocks other than
/// the pivot's, which is how the restricted partition prints.
struct InductionRow {
  Partition before;
  std::vector<int> exp_before;
  int added = 0;
  std::string alpha;
  std::vector<std::vector<int>> restricted_blocks;
  std::vector<int> exp_restricted;
  int chosen_block = 0;  // index into the partition after this step
};

struct InductionTable {
  std::vector<InductionRow> rows;
  Partition final_partition;
  std::vector<int> exp_final;
};

struct TableFailure {
  int step = 0;  // 0-based position in `order` where every option failed
  std::string reason;
};

/// Extends a factorization one hyperplane at a time along `order`. Each
/// step tries the existing blocks (ascending) and a new singleton block,
/// accepting an option iff the restriction map is bijective and the induced
/// restricted partition is an inductive factorization of A''; the search
/// backtracks, and the first complete assignment wins. `target` pins every
/// step's block choice to the block structure of a given partition.
std::variant<InductionTable, TableFailure> emit_induction_table(
    const Arrangement& a, const std::vector<int>& order,
    const std::optional<std::pair<Arrangement, Partition>>& seed = std::nullopt,
    const std::optional<Partition>& target = std::nullopt);

std::string render_induction_table(const InductionTable& t);

/// Re-runs every checker a certificate claims; used by tests and --json.
bool reverify_certificate(const Arrangement& a, const Certificate& c, const std::string& kind);

}  // namespace arr
