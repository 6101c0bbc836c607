#pragma once

// Published-formula checks. Each entry sets a quantity computed here against
// the value a published closed form or structure gives for the same input.

#include <string>
#include <vector>

#include "susynu/app/config.hpp"
#include "susynu/app/table.hpp"

namespace susynu::app {

enum class Verdict { Match, Mismatch, NotApplicable };

const char* to_string(Verdict v);

struct LedgerEntry {
  std::string claim_id;
  std::string subject;
  std::string reference_formula;
  std::vector<double> computed;
  std::vector<double> reference;
  Verdict verdict = Verdict::NotApplicable;
  double tolerance = 0.0;
  std::string note;
};

/// Elementwise |c - r| <= tol * max(1, |r|); Mismatch on a length difference.
Verdict compare(const std::vector<double>& computed, const std::vector<double>& reference,
                double tol);

/// Largest elementwise |c - r|; infinity on a length difference.
double max_deviation(const std::vector<double>& computed, const std::vector<double>& reference);

/// Entries for the configured family and parameters.
std::vector<LedgerEntry> family_ledger(const RunConfig& cfg);

/// family_ledger for all three families, each at the configured parameters.
std::vector<LedgerEntry> full_ledger(const RunConfig& cfg);

Table ledger_table(const std::vector<LedgerEntry>& entries);

}  // namespace susynu::app
