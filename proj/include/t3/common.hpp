#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace t3 {

using Idx = std::uint32_t;
using IdxVec = std::vector<Idx>;

enum class Err {
  ParseError,
  UnknownName,
  SizeCapExceeded,
  NotAHomomorphism,
  NotNormal,
  NotAnAction,
  NotACrossedModule,
  NotSimplicial,
  TruncationTooShallow,
  NotAMorphism,
  InvalidInput,
  QuotientIllFormed,
  RetractionInvalid,
  NotA1Nerve,
  NotAFunctor,
  NotGroupLevel,
  NotInH,
  NotAMonoid,
  Internal,
};

inline const char* errCode(Err e) {
  switch (e) {
    case Err::ParseError: return "parse_error";
    case Err::UnknownName: return "unknown_name";
    case Err::SizeCapExceeded: return "size_cap_exceeded";
    case Err::NotAHomomorphism: return "not_a_homomorphism";
    case Err::NotNormal: return "not_normal";
    case Err::NotAnAction: return "not_an_action";
    case Err::NotACrossedModule: return "not_a_crossed_module";
    case Err::NotSimplicial: return "not_simplicial";
    case Err::TruncationTooShallow: return "truncation_too_shallow";
    case Err::NotAMorphism: return "not_a_morphism";
    case Err::InvalidInput: return "invalid_input";
    case Err::QuotientIllFormed: return "quotient_ill_formed";
    case Err::RetractionInvalid: return "retraction_invalid";
    case Err::NotA1Nerve: return "not_a_1_nerve";
    case Err::NotAFunctor: return "not_a_functor";
    case Err::NotGroupLevel: return "not_group_level";
    case Err::NotInH: return "not_in_h";
    case Err::NotAMonoid: return "not_a_monoid";
    case Err::Internal: return "internal_error";
  }
  return "internal_error";
}

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Err code() const { return code_; }
  const char* codeString() const { return errCode(code_); }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

// Enumeration budgets. Everything is materialized eagerly; these caps turn a
// blow-up into a SizeCapExceeded error instead of an OOM.
struct Caps {
  std::size_t max_table_order = 4096;   // largest carrier stored as a Cayley table
  std::size_t max_scan = 10'000'000;    // pair-enumeration budget per fiber product
  std::size_t max_set_elements = 2'000'000;  // largest Set-level carrier
  std::size_t max_validate_order = 256;      // O(n^3) associativity bound
  std::size_t max_iso_order = 128;           // isomorphism-search bound
};

// A validator outcome: violations are data, not failures.
struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  void add(std::string v) { violations.push_back(std::move(v)); }
  std::string joined() const {
    std::string out;
    for (const auto& v : violations) {
      if (!out.empty()) out += "; ";
      out += v;
    }
    return out;
  }
};

}  // namespace t3
