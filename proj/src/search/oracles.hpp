#pragma once

#include "search/certificate.hpp"

namespace thrcnf {

/// Exact S(n,t,2) over all 2-CNFs, monotone or not. Solution sets of 2-CNFs
/// are exactly the sets closed under bitwise majority, so the oracle looks
/// for the largest family W of weight-t vectors whose majority closure has
/// no vector of weight below t. Refuses when the slice of vectors of weight
/// >= t exceeds the configured size.
Certificate median_closed_oracle(unsigned n, unsigned t, const SearchLimits& limits = {});

/// Largest number of maximal independent sets of size s over all graphs on
/// n vertices, by a sweep over all 2^C(n,2) graphs. Witness is the first
/// maximising graph in edge-code order.
Certificate max_mis_over_graphs(unsigned n, unsigned s, const SearchLimits& limits = {});

}  // namespace thrcnf
