#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfca/scalar.hpp"

namespace hopfca {

// One per-check ledger.  A failing entry always carries a witness: the basis
// index tuple where the two sides first differ, plus both scalar values.
struct Witness {
  std::vector<int> indices;
  std::string lhs;
  std::string rhs;
};

struct ReportEntry {
  std::string check_id;
  bool pass = true;
  std::optional<Witness> witness;
};

class VerificationReport {
 public:
  explicit VerificationReport(std::string subject) : subject_(std::move(subject)) {}

  void add_pass(const std::string& id) { entries_.push_back({id, true, std::nullopt}); }
  void add_fail(const std::string& id, Witness w) {
    entries_.push_back({id, false, std::move(w)});
  }
  void add(const std::string& id, bool pass, Witness w = {}) {
    if (pass)
      add_pass(id);
    else
      add_fail(id, std::move(w));
  }
  void absorb(const VerificationReport& other, const std::string& prefix = "") {
    for (const auto& e : other.entries_)
      entries_.push_back({prefix + e.check_id, e.pass, e.witness});
  }

  const std::string& subject() const { return subject_; }
  const std::vector<ReportEntry>& entries() const { return entries_; }
  bool overall() const {
    for (const auto& e : entries_)
      if (!e.pass) return false;
    return true;
  }
  // First failing check id, or empty string.
  std::string first_failure() const {
    for (const auto& e : entries_)
      if (!e.pass) return e.check_id;
    return "";
  }

 private:
  std::string subject_;
  std::vector<ReportEntry> entries_;
};

}  // namespace hopfca
