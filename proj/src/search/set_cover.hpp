#pragma once

#include "search/certificate.hpp"

#include <optional>
#include <string>

namespace thrcnf {

/// T(n,q,k): fewest k-sets such that every q-subset of [n] contains one.
Certificate turan_number(unsigned n, unsigned q, unsigned k, const SearchLimits& limits = {});

/// C(n,q,k): fewest q-sets such that every k-subset of [n] lies in one.
Certificate covering_number(unsigned n, unsigned q, unsigned k, const SearchLimits& limits = {});

struct TuranIdentityReport {
  unsigned n = 0, k = 0;
  bool skipped = false;
  std::string notice;
  std::optional<Certificate> turan;      // T(n, k+1, k)
  std::optional<Certificate> cover;      // C(n, n-k, n-k-1)
  std::optional<Certificate> splus;      // S+(n, n-k, k)
  BigInt complement;                     // C(n,k) - S+(n, n-k, k)
  bool holds = false;
};

/// Computes the three quantities by independent searches and compares them.
/// Throws VerificationError (with all three witnesses in the message) on a
/// mismatch. Parameters with k + 1 > n are skipped.
TuranIdentityReport verify_turan_identity(unsigned n, unsigned k, const SearchLimits& limits = {});

}  // namespace thrcnf
