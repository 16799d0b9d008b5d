#include "mincone/tables.hpp"

#include <algorithm>

namespace mincone {

std::string status_name(TripleStatus s) {
  switch (s) {
    case TripleStatus::Realizable: return "realizable";
    case TripleStatus::Eliminated: return "eliminated";
    case TripleStatus::Open: return "open";
    case TripleStatus::NotAdmissible: return "not-admissible";
  }
  return "not-admissible";
}

TripleStatus parse_status(const std::string& s) {
  if (s == "realizable") return TripleStatus::Realizable;
  if (s == "eliminated") return TripleStatus::Eliminated;
  if (s == "open") return TripleStatus::Open;
  throw InvalidInput("unknown status '" + s + "'");
}

namespace {

TripleRecord row(int n1, int n2, int n3, int dim, TripleStatus s,
                 std::optional<std::string> witness = std::nullopt) {
  return TripleRecord{n1, n2, n3, dim, s, std::move(witness)};
}

}  // namespace

const std::vector<TripleRecord>& admissible_triples() {
  using S = TripleStatus;
  static const std::vector<TripleRecord> rows = {
      row(2, 0, 2, 5, S::Realizable, "cartan-d1"),
      row(3, 0, 4, 8, S::Realizable, "cartan-d2"),
      row(5, 0, 8, 14, S::Realizable, "cartan-d4"),
      row(9, 0, 16, 26, S::Realizable, "cartan-d8"),
      row(0, 5, 3, 9, S::Realizable, "involution-d2"),
      row(1, 5, 5, 12, S::Realizable, "complexified-d1"),
      row(2, 5, 7, 15, S::Eliminated),
      row(4, 5, 11, 21, S::Realizable, "albert21"),
      row(0, 8, 6, 15, S::Realizable, "involution-d4"),
      row(1, 8, 8, 18, S::Realizable, "complexified-d2"),
      row(2, 8, 10, 21, S::Eliminated),
      row(3, 8, 12, 24, S::Open),
      row(5, 8, 16, 30, S::Open),
      row(9, 8, 24, 42, S::Open),
      row(0, 14, 12, 27, S::Realizable, "involution-d8"),
      row(1, 14, 14, 30, S::Realizable, "complexified-d4"),
      row(2, 14, 16, 33, S::Eliminated),
      row(3, 14, 18, 36, S::Eliminated),
      row(0, 26, 24, 51, S::Eliminated),
      row(1, 26, 26, 54, S::Realizable, "complexified-d8"),
      row(2, 26, 28, 57, S::Eliminated),
      row(3, 26, 30, 60, S::Eliminated),
      row(7, 26, 38, 72, S::Eliminated),
  };
  return rows;
}

TripleStatus triple_status(int n1, int n2, int n3) {
  for (const auto& r : admissible_triples()) {
    if (r.n1 == n1 && r.n2 == n2 && r.n3 == n3) return r.status;
  }
  return TripleStatus::NotAdmissible;
}

std::uint64_t table_checksum() {
  std::uint64_t h = 14695981039346656037ull;
  auto feed = [&](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ull;
    }
  };
  for (const auto& r : admissible_triples()) {
    feed(std::to_string(r.n1) + "," + std::to_string(r.n2) + "," + std::to_string(r.n3) + "," +
         std::to_string(r.dim) + "," + status_name(r.status) + ";");
  }
  return h;
}

std::uint64_t expected_table_checksum() { return 0x7edd0490b0ed8f33ull; }

std::vector<ValidationRow> cross_validate(const ValidationOptions& opt) {
  std::vector<ValidationRow> out;
  for (const auto& rec : admissible_triples()) {
    ValidationRow v;
    v.record = rec;
    if (rec.status != TripleStatus::Realizable || !rec.witness) {
      v.detail = "untestable: " + status_name(rec.status);
      out.push_back(std::move(v));
      continue;
    }
    v.tested = true;
    try {
      const CubicForm u = build_catalog_form(*rec.witness);
      if (u.dim() != rec.dim) {
        v.detail = "witness has dimension " + std::to_string(u.dim());
        out.push_back(std::move(v));
        continue;
      }
      const IdentityResult radial = check_radial(u, opt.identity);
      v.mode = radial.mode;
      v.error_bound = radial.error_bound;
      if (!radial.pass) {
        v.detail = "radial check failed";
        out.push_back(std::move(v));
        continue;
      }
      v.theta = radial.constant;
      const MetrisedAlgebra A(u);
      const IdempotentSearch search = find_idempotents(A, opt.restarts, opt.seed);
      v.idempotents = static_cast<int>(search.idempotents.size());
      if (search.idempotents.empty()) {
        v.detail = search.diagnostic;
        out.push_back(std::move(v));
        continue;
      }
      bool all_match = true;
      for (const auto& p : search.idempotents) {
        const Triple t{p.n1, p.n2, p.n3};
        if (!v.computed) v.computed = t;
        if (t != Triple{rec.n1, rec.n2, rec.n3} || !p.unbinned.empty() || p.n_one != 1) {
          all_match = false;
          v.computed = t;
        }
      }
      v.pass = all_match;
      if (!all_match) v.detail = "computed Peirce triple differs";
    } catch (const std::exception& e) {
      v.detail = e.what();
    }
    out.push_back(std::move(v));
  }
  return out;
}

nlohmann::ordered_json triple_to_json(const TripleRecord& r) {
  nlohmann::ordered_json j;
  j["triple"] = {r.n1, r.n2, r.n3};
  j["dim"] = r.dim;
  j["status"] = status_name(r.status);
  j["witness"] = r.witness ? nlohmann::ordered_json(*r.witness) : nlohmann::ordered_json(nullptr);
  return j;
}

nlohmann::ordered_json validation_to_json(const ValidationRow& v) {
  nlohmann::ordered_json j = triple_to_json(v.record);
  j["tested"] = v.tested;
  j["pass"] = v.pass;
  if (v.tested) {
    j["theta"] = v.theta ? nlohmann::ordered_json(v.theta->str()) : nlohmann::ordered_json(nullptr);
    j["mode"] = v.mode;
    j["error_bound"] = v.error_bound;
    j["idempotents"] = v.idempotents;
    j["computed"] = v.computed ? nlohmann::ordered_json(*v.computed) : nlohmann::ordered_json(nullptr);
  }
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

}  // namespace mincone
