#pragma once

#include <gmpxx.h>

namespace schubert {

// This gmpxx build has no long long constructors; long is 64-bit here.
inline mpq_class to_mpq(long long v) { return mpq_class(static_cast<long>(v)); }
inline mpq_class to_mpq(long long num, long long den) {
    mpq_class q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
}

}  // namespace schubert
