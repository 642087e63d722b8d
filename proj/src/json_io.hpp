#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "permclass/class_engine.hpp"
#include "permclass/periodic.hpp"
#include "permclass/polynomial.hpp"
#include "permclass/rank_encoding.hpp"
#include "permclass/structure.hpp"

namespace permclass::json_io {

using nlohmann::json;

inline constexpr const char* kSchema = "permclass/1";

json to_json(const Perm& g);
json to_json(const std::vector<Perm>& perms);
/// Fits-in-int64 values become numbers, larger ones decimal strings.
json to_json(const BigInt& v);
json to_json(const std::vector<BigInt>& v);
json to_json(const Poly& p);
json to_json(const GenFun& g);
json to_json(const FiniteBasisClass& c);
json to_json(const PeriodicPerm& p);
json to_json(const RawPrefix& p);
json to_json(const Dfa& d);
json to_json(const AtomicityReport& r);
json to_json(const DichotomyReport& r);
json to_json(const PeriodicRankWord& w);

/// Accepts [3,1,4,2] or "3142" / "3 1 4 2".
Perm perm_from_json(const json& j);
FiniteBasisClass class_from_json(const json& j);
/// {"window","N","P"} gives a PeriodicPerm, {"prefix"} a RawPrefix.
InfinitePerm infinite_from_json(const json& j);
Poly poly_from_json(const json& j);
GenFun genfun_from_json(const json& j);
Dfa dfa_from_json(const json& j);

json read_file(const std::string& path);

}  // namespace permclass::json_io
