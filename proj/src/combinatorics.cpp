#include "pbmotz/combinatorics.hpp"

#include <mutex>
#include <string>

#include "pbmotz/errors.hpp"

namespace pbmotz {

namespace {

std::mutex memo_mutex;

// Iterative, memoized tables.  Fills are idempotent, so a single mutex
// around lookups keeps concurrent use safe.

const std::vector<Int>& a_table(long upto) {
  static std::vector<Int> table{1, 1};
  while (static_cast<long>(table.size()) <= upto) {
    const std::size_t m = table.size();
    table.push_back(table[m - 1] + Int(m - 1) * table[m - 2]);
  }
  return table;
}

const std::vector<std::vector<Int>>& m_table(long upto) {
  static std::vector<std::vector<Int>> rows{{1}};
  while (static_cast<long>(rows.size()) <= upto) {
    const std::size_t n = rows.size();
    const auto& prev = rows.back();
    std::vector<Int> row(n + 1);
    auto at = [&prev](long r) {
      return (r < 0 || r >= static_cast<long>(prev.size())) ? Int(0) : prev[r];
    };
    for (std::size_t r = 0; r <= n; ++r) {
      row[r] = at(static_cast<long>(r) - 1) + at(r) + at(r + 1);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

const std::vector<std::vector<Int>>& mprime_table(long upto) {
  static std::vector<std::vector<Int>> rows{{1}};
  while (static_cast<long>(rows.size()) <= upto) {
    const std::size_t n = rows.size();
    const auto& prev = rows.back();
    std::vector<Int> row(n + 1);
    auto at = [&prev](long r) {
      return (r < 0 || r >= static_cast<long>(prev.size())) ? Int(0) : prev[r];
    };
    for (std::size_t r = 0; r <= n; ++r) {
      Int value = at(static_cast<long>(r) - 1);
      for (std::size_t j = r + 1; j < n; ++j) value += at(j);
      row[r] = value;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void check_parity(Family f, long n, long r) {
  if (family_has_parity(f) && ((n - r) % 2 != 0)) {
    throw ParityError(std::string(family_name(f)) + "_" + std::to_string(n) +
                      " has no elements of rank " + std::to_string(r));
  }
}

}  // namespace

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int result = 1;
  for (long i = 1; i <= k; ++i) {
    result = result * Int(n - k + i) / Int(i);
  }
  return result;
}

Int factorial(long n) {
  Int result = 1;
  for (long i = 2; i <= n; ++i) result *= i;
  return result;
}

Int double_factorial(long k) {
  if (k == -1) return 1;
  if (k < -1) throw OutOfRangeError("double factorial of " + std::to_string(k));
  if (k % 2 == 0) return 0;
  Int result = 1;
  for (long i = k; i >= 3; i -= 2) result *= i;
  return result;
}

Int a_seq(long m) {
  if (m < 0) throw OutOfRangeError("a(m) needs m >= 0");
  std::lock_guard<std::mutex> lock(memo_mutex);
  return a_table(m)[m];
}

Int motzkin_m(long n, long r) {
  if (n < 0 || r < 0 || r > n) return 0;
  std::lock_guard<std::mutex> lock(memo_mutex);
  return m_table(n)[n][r];
}

Int riordan_mprime(long n, long r) {
  if (n < 0 || r < 0 || r > n) return 0;
  std::lock_guard<std::mutex> lock(memo_mutex);
  return mprime_table(n)[n][r];
}

Int rclass_count(Family f, long n, long r) {
  if (n < 0 || r < 0 || r > n) {
    throw OutOfRangeError("rank " + std::to_string(r) + " out of range");
  }
  check_parity(f, n, r);
  switch (f) {
    case Family::I:
    case Family::O:
      return binomial(n, r);
    case Family::B:
      return binomial(n, r) * double_factorial(n - r - 1);
    case Family::J: {
      // (r+1)/(n+1) * C(n+1, k) with r = n - 2k; the division is exact.
      const long k = (n - r) / 2;
      const Int numerator = binomial(n + 1, k) * Int(r + 1);
      if (numerator % Int(n + 1) != 0) {
        throw Error("ballot number was not an integer");  // unreachable
      }
      return numerator / Int(n + 1);
    }
    case Family::PB:
      return binomial(n, r) * a_seq(n - r);
    case Family::M:
      return motzkin_m(n, r);
    case Family::S:
      return r == n ? Int(1) : Int(0);
  }
  throw Error("unknown family");
}

Int hclass_size(Family f, long r) {
  switch (f) {
    case Family::PB:
    case Family::B:
    case Family::I:
    case Family::S:
      return factorial(r);
    case Family::M:
    case Family::J:
    case Family::O:
      return 1;
  }
  throw Error("unknown family");
}

Int dclass_size(Family f, long n, long r) {
  const Int rc = rclass_count(f, n, r);
  return rc * rc * hclass_size(f, r);
}

Int ideal_size(Family f, long n, long r) {
  if (n < 0 || r < 0 || r > n) {
    throw OutOfRangeError("rank " + std::to_string(r) + " out of range");
  }
  Int total = 0;
  for (long s = 0; s <= r; ++s) {
    if (family_has_parity(f) && (n - s) % 2 != 0) continue;
    total += dclass_size(f, n, s);
  }
  return total;
}

Int monoid_size(Family f, long n) { return ideal_size(f, n, n); }

IdealRank rank_of_ideal(Family f, long n, long r) {
  if (f != Family::PB && f != Family::M) {
    throw FamilyMismatchError("ideal ranks are provided for PB and M only");
  }
  if (n < 0 || r < 0 || r > n) {
    throw OutOfRangeError("rank " + std::to_string(r) + " out of range");
  }
  IdealRank out;
  if (f == Family::PB) {
    if (r <= n - 2) {
      out.rank = binomial(n, r - 1) * double_factorial(n - r) +
                 binomial(n, r) * a_seq(n - r);
      out.idempotent_generated = true;
    } else if (r == n - 1) {
      out.rank = binomial(n + 1, 2) + (n >= 4 ? 1 : 0);
      out.idempotent_generated = n <= 1;
    } else {  // r == n
      out.rank = n <= 2 ? n + 1 : 4;
      out.idempotent_generated = n <= 1;
    }
  } else {
    if (r == 0) {
      out.rank = motzkin_m(n, 0);
    } else if (r <= n - 1) {
      out.rank = motzkin_m(n, r) + riordan_mprime(n, r - 1);
    } else {  // r == n
      out.rank = n == 0 ? 1 : 2 * n;
    }
    out.idempotent_generated = n <= 1 || r < n / 2;
  }
  if (out.idempotent_generated) out.idrank = out.rank;
  return out;
}

Int rank_of_idempotent_generated(Family f, long n, std::optional<long> r) {
  if (f != Family::PB && f != Family::M) {
    throw FamilyMismatchError("idempotent-generated ranks are for PB and M only");
  }
  if (n < 0) throw OutOfRangeError("degree must be non-negative");
  if (r) {
    if (f != Family::M) {
      throw TheoremRangeError("per-ideal idempotent-generated rank known for M only");
    }
    if (*r < 0 || *r > n - 2) {
      throw TheoremRangeError("rank(E(I_r(M_n))) known for 0 <= r <= n-2 only");
    }
    if (*r == 0) return motzkin_m(n, 0);
    return motzkin_m(n, *r) + riordan_mprime(n, *r - 1);
  }
  // whole monoid; degrees 0 and 1 are idempotent-generated outright
  if (n == 0) return 1;
  if (n == 1) return 2;
  if (f == Family::PB) return 1 + binomial(n + 1, 2);
  return 3 * n - 2;
}

Int standard_tableaux_count(const std::vector<long>& lambda) {
  long total = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] <= 0 || (i > 0 && lambda[i] > lambda[i - 1])) {
      throw NotAPartitionError("shape must be weakly decreasing and positive");
    }
    total += lambda[i];
  }
  // hook length formula: n! / product of hooks
  Int hooks = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (long j = 0; j < lambda[i]; ++j) {
      long arm = lambda[i] - j - 1;
      long leg = 0;
      for (std::size_t k = i + 1; k < lambda.size(); ++k) {
        if (lambda[k] > j) ++leg;
      }
      hooks *= Int(arm + leg + 1);
    }
  }
  return factorial(total) / hooks;
}

Int cell_dim_pb(long n, long r, const std::vector<long>& lambda) {
  long total = 0;
  for (long part : lambda) total += part;
  if (total != r || r > n || r < 0) {
    throw NotAPartitionError("shape must be a partition of r <= n");
  }
  return binomial(n, r) * a_seq(n - r) * standard_tableaux_count(lambda);
}

CountKind parse_count_kind(std::string_view tag) {
  if (tag == "a") return CountKind::A;
  if (tag == "m") return CountKind::M;
  if (tag == "mprime") return CountKind::MPrime;
  if (tag == "rclass") return CountKind::RClass;
  if (tag == "dclass_size") return CountKind::DClassSize;
  if (tag == "ideal_size") return CountKind::IdealSize;
  if (tag == "rank") return CountKind::Rank;
  if (tag == "idrank") return CountKind::IdRank;
  throw ParseError("unknown count kind '" + std::string(tag) + "'");
}

std::string_view count_kind_name(CountKind kind) {
  switch (kind) {
    case CountKind::A: return "a";
    case CountKind::M: return "m";
    case CountKind::MPrime: return "mprime";
    case CountKind::RClass: return "rclass";
    case CountKind::DClassSize: return "dclass_size";
    case CountKind::IdealSize: return "ideal_size";
    case CountKind::Rank: return "rank";
    case CountKind::IdRank: return "idrank";
  }
  return "?";
}

namespace {

Family require_family(CountKind kind, const std::optional<Family>& family) {
  if (!family) {
    throw ParseError("count kind '" + std::string(count_kind_name(kind)) +
                     "' needs a family");
  }
  return *family;
}

}  // namespace

Int count_value(CountKind kind, std::optional<Family> family, long n,
                std::optional<long> r) {
  switch (kind) {
    case CountKind::A:
      return a_seq(n);
    case CountKind::M:
      return motzkin_m(n, r.value_or(0));
    case CountKind::MPrime:
      return riordan_mprime(n, r.value_or(0));
    default:
      break;
  }
  const Family f = require_family(kind, family);
  if (!r) throw ParseError("this count kind needs a rank");
  switch (kind) {
    case CountKind::RClass:
      return rclass_count(f, n, *r);
    case CountKind::DClassSize:
      return dclass_size(f, n, *r);
    case CountKind::IdealSize:
      return ideal_size(f, n, *r);
    case CountKind::Rank:
      return rank_of_ideal(f, n, *r).rank;
    case CountKind::IdRank: {
      const IdealRank ir = rank_of_ideal(f, n, *r);
      if (!ir.idrank) {
        throw TheoremRangeError("the ideal is not idempotent-generated");
      }
      return *ir.idrank;
    }
    default:
      throw Error("unhandled count kind");
  }
}

CountTable build_count_table(CountKind kind, std::optional<Family> family,
                             long max_n) {
  CountTable table;
  table.kind = kind;
  if (kind != CountKind::A && kind != CountKind::M && kind != CountKind::MPrime) {
    table.family = require_family(kind, family);
  }
  for (long n = 0; n <= max_n; ++n) {
    if (kind == CountKind::A) {
      table.entries.push_back({n, std::nullopt, a_seq(n)});
      continue;
    }
    for (long r = 0; r <= n; ++r) {
      if (table.family && family_has_parity(*table.family) && (n - r) % 2 != 0 &&
          (kind == CountKind::RClass || kind == CountKind::DClassSize)) {
        continue;
      }
      if (kind == CountKind::IdRank &&
          !rank_of_ideal(*table.family, n, r).idrank) {
        continue;
      }
      table.entries.push_back({n, r, count_value(kind, table.family, n, r)});
    }
  }
  return table;
}

}  // namespace pbmotz
