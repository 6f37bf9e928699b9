/*
  baker-gamma, a toolkit of exact and interval arithmetic certificates
  around the log-gamma reflection identity.

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0
*/
#pragma once

#include <gmpxx.h>

namespace bakergamma::detail {

/// Exact Bernoulli number B_{2k}, k >= 1 (B_2 = 1/6, B_4 = -1/30, ...).
/// Backed by an integer tangent-number triangle, grown on demand;
/// thread-safe.
mpq_class bernoulli_2k(unsigned long k);

} // namespace bakergamma::detail
