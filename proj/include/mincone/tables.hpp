#pragma once

// The 23 admissible Peirce triples of exceptional Hsiang algebras and their
// realizability status.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mincone/catalog.hpp"
#include "mincone/identities.hpp"

namespace mincone {

enum class TripleStatus { Realizable, Eliminated, Open, NotAdmissible };

std::string status_name(TripleStatus s);
/// Accepts "realizable", "eliminated", "open"; throws InvalidInput otherwise.
TripleStatus parse_status(const std::string& s);

struct TripleRecord {
  int n1 = 0, n2 = 0, n3 = 0;
  int dim = 0;
  TripleStatus status = TripleStatus::Open;
  /// Catalog name of a form realizing the triple, when realizable.
  std::optional<std::string> witness;
};

const std::vector<TripleRecord>& admissible_triples();
TripleStatus triple_status(int n1, int n2, int n3);

/// FNV-1a over "n1,n2,n3,dim,status;" for all rows, in order.
std::uint64_t table_checksum();
/// The value table_checksum() must have; guards the embedded data.
std::uint64_t expected_table_checksum();

struct ValidationRow {
  TripleRecord record;
  bool tested = false;
  bool pass = false;
  std::optional<Surd> theta;
  std::string mode;
  double error_bound = 0.0;
  int idempotents = 0;
  std::optional<Triple> computed;
  std::string detail;
};

struct ValidationOptions {
  IdentityOptions identity;
  int restarts = 16;
  std::uint64_t seed = 1;
};

/// For each realizable row: builds the witness, runs the radial check, finds
/// idempotents and compares the Peirce triple of every one of them with the
/// row. Other rows are reported untested. Failures are reported, never thrown.
std::vector<ValidationRow> cross_validate(const ValidationOptions& opt);

nlohmann::ordered_json triple_to_json(const TripleRecord& r);
nlohmann::ordered_json validation_to_json(const ValidationRow& r);

}  // namespace mincone
