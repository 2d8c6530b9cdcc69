#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nearring/classify.hpp"
#include "nearring/nearring.hpp"

namespace nearring {

enum class TheoremStatus { pass, fail, not_applicable, error };

std::string to_string(TheoremStatus s);

struct Counterexample {
  std::vector<Elem> elements;
  std::string clause;
};

struct TheoremReport {
  std::string nearring;
  std::string theorem;
  TheoremStatus status = TheoremStatus::pass;
  std::size_t instantiations = 0;
  std::optional<Counterexample> counterexample;  // fail only
  std::string hypothesis_witness;                // not_applicable only
  std::string error;                             // error only
};

struct TheoremInfo {
  std::string id;
  std::string statement;
};

/// The fixed list of checkable results, in catalog order.
const std::vector<TheoremInfo>& theorem_catalog();
bool is_theorem_id(const std::string& id);

struct CheckOptions {
  // Results stated for unital zero-symmetric near-rings are not applicable
  // elsewhere. Turning this off evaluates them anyway (used to exhibit
  // what breaks without zero-symmetry).
  bool require_zero_symmetric = true;
};

/// Exhaustive evaluation of one catalog entry. Implications whose
/// hypothesis fails report not_applicable; a fail carries the first
/// counterexample in ascending scan order. Throws Error on an unknown id
/// and CapExceeded when a needed enumeration is over its cap.
TheoremReport check(const Analysis& A, const std::string& id, const CheckOptions& opts = {});
TheoremReport check(const NearRing& N, const std::string& id, const CheckOptions& opts = {});

/// Re-checks a fail report's counterexample straight from the tables,
/// without the classification layer.
bool reverify(const NearRing& N, const TheoremReport& report);

struct ChainRow {
  std::string nearring;
  bool in_scope = false;  // unital and zero-symmetric
  bool left_strongly_regular = false;
  bool left_morphic_regular = false;
  bool unit_regular = false;
};

struct SuiteReport {
  std::vector<TheoremReport> cells;  // sorted by (near-ring, theorem id)
  bool aggregate_pass = true;        // no cell failed
  std::size_t errors = 0;
  std::vector<ChainRow> chain;       // corpus order
  std::vector<std::string> lmr_not_lsr;  // in-scope members, left morphic regular but not lsr
  std::vector<std::string> ur_not_lmr;   // in-scope members, unit-regular but not left morphic regular
  std::vector<std::string> inclusion_violations;
};

/// All (near-ring, theorem) cells. A cell that throws is recorded with
/// status error and the run continues. Empty ids means the whole catalog.
SuiteReport run_suite(const std::vector<NearRing>& corpus,
                      const std::vector<std::string>& ids = {},
                      Exec exec = Exec::parallel, const CheckOptions& opts = {});

/// Value of the seven statements for idempotent e, in order (1)..(7):
/// e left morphic; Ne = (0:_l 1-e); x(1-e) = -xe + x for all x;
/// (0:_l e) meets (0:_l 1-e) only in 0 and e(1-e) = 0; x(1-e) = x - xe for
/// all x; N(1-e) = (0:_l e) and e(1-e) = 0; 1-e left morphic and idempotent.
std::array<bool, 7> idempotent_statements(const Analysis& A, Elem e);

}  // namespace nearring
