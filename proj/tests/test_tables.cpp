#include "doctest.h"
#include "mincone/tables.hpp"

using namespace mincone;

TEST_CASE("table rows") {
  const auto& rows = admissible_triples();
  REQUIRE(rows.size() == 23);
  int counts[3] = {0, 0, 0};
  for (const auto& r : rows) {
    CHECK(r.dim == 1 + r.n1 + r.n2 + r.n3);
    CHECK(r.n3 == 2 * r.n1 + r.n2 - 2);
    CHECK(r.witness.has_value() == (r.status == TripleStatus::Realizable));
    if (r.witness) CHECK(catalog_entry(*r.witness).dim == r.dim);
    ++counts[static_cast<int>(r.status)];
  }
  CHECK(counts[0] == 12);
  CHECK(counts[1] == 8);
  CHECK(counts[2] == 3);
  CHECK(table_checksum() == expected_table_checksum());
}

TEST_CASE("status lookups") {
  CHECK(triple_status(2, 8, 10) == TripleStatus::Eliminated);
  CHECK(triple_status(9, 8, 24) == TripleStatus::Open);
  CHECK(triple_status(4, 5, 11) == TripleStatus::Realizable);
  CHECK(triple_status(1, 1, 1) == TripleStatus::NotAdmissible);
  for (const auto& r : admissible_triples()) {
    if (r.n1 == 9 && r.n2 == 0) CHECK(r.dim == 26);
    if (r.n1 == 4 && r.n2 == 5) CHECK(*r.witness == "albert21");
  }
  CHECK(status_name(TripleStatus::NotAdmissible) == "not-admissible");
  CHECK(parse_status("open") == TripleStatus::Open);
  CHECK_THROWS_AS(parse_status("maybe"), InvalidInput);
}

TEST_CASE("n2 = 0 rows follow the Hurwitz-Radon pattern") {
  const int n1[] = {2, 3, 5, 9};
  int k = 0;
  for (const auto& r : admissible_triples()) {
    if (r.n2 == 0) CHECK(r.n1 == n1[k++]);
  }
  CHECK(k == 4);
}

TEST_CASE("cross validation") {
  ValidationOptions opt;
  opt.restarts = 4;
  opt.seed = 5;
  int tested = 0;
  for (const auto& v : cross_validate(opt)) {
    if (!v.tested) {
      CHECK(v.record.status != TripleStatus::Realizable);
      continue;
    }
    ++tested;
    CHECK_MESSAGE(v.pass, v.record.witness.value_or("?") << " " << v.detail);
    if (v.record.dim == 54) {
      CHECK(v.mode == "random");
      CHECK(v.error_bound <= 1e-105);
    }
  }
  CHECK(tested == 12);
}
