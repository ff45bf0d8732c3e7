// Copyright 2026 The symfun Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYMFUN_REPORT_HPP_
#define SYMFUN_REPORT_HPP_

#include <string>

#include "json.hpp"

#include "symfun/certifier.hpp"
#include "symfun/dyadic.hpp"
#include "symfun/indices.hpp"

namespace symfun {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Finite values as numbers, the rest as "inf", "-inf" or "nan".
Json number(double v);

Json to_json(const IndexEstimate& e);
Json to_json(const FInterval& f);
Json to_json(const SpaceIndices& idx);
Json to_json(const OrliczIndices& o);
Json to_json(const LorentzIndices& l);
Json to_json(const MinMaxReport& r);
Json to_json(const IdentityTally& t);
Json to_json(const BoundPair& b);
Json to_json(const Prop4Report& r);
Json to_json(const TailReport& t);
Json to_json(const DistortionReport& r);
Json to_json(const CertifyResult& r);
Json to_json(const ScanTable& t);

/// Header p,in_interval,verdict,lo,hi,distortion,generator.
std::string scan_csv(const ScanTable& t);
/// Header estimate,n,value,running_inf.
std::string indices_csv(const SpaceIndices& idx);

/// Indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace symfun

#endif  // SYMFUN_REPORT_HPP_
