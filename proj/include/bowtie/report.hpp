#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bowtie {

enum class Errc {
  format,         // malformed input data
  validation,     // structural axiom failed on construction
  size,           // desk-scale cap exceeded
  domain,         // precondition on mathematical domain violated
  numeric,        // tolerance / rounding guard exceeded
  splitting,      // semisimple decomposition did not converge or close
  factorization,  // not an exact factorization
  axiom,          // verified-structure precondition failed
  rigidity,       // dual solving failed (missing or non-unique)
  containment,    // subgroup / subset containment violated
  subring,        // label subset not tensor-closed
  consistency,    // internal dimension bookkeeping failed
  internal,       // should-not-happen; indicates a bug or corrupted input
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::format: return "format";
    case Errc::validation: return "validation";
    case Errc::size: return "size";
    case Errc::domain: return "domain";
    case Errc::numeric: return "numeric";
    case Errc::splitting: return "splitting";
    case Errc::factorization: return "factorization";
    case Errc::axiom: return "axiom";
    case Errc::rigidity: return "rigidity";
    case Errc::containment: return "containment";
    case Errc::subring: return "subring";
    case Errc::consistency: return "consistency";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

// One violated rule together with a witness tuple, e.g. ("associativity", "(a=1,b=2,c=0,d=3)").
struct Violation {
  std::string rule;
  std::string witness;
};

// Outcome of a verification pass. Violations are data, not errors: an invalid
// structure yields a non-empty report, not an exception.
struct Report {
  std::vector<Violation> items;

  bool ok() const { return items.empty(); }
  void add(std::string rule, std::string witness) {
    items.push_back({std::move(rule), std::move(witness)});
  }
  void merge(const Report& other) {
    items.insert(items.end(), other.items.begin(), other.items.end());
  }
};

}  // namespace bowtie
