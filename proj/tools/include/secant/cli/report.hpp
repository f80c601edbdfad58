#pragma once

// JSON views of the library's result types. Exact integers are written as
// decimal strings so arbitrarily large determinants survive the round trip.

#include "json.hpp"

#include "secant/codes.hpp"
#include "secant/gr26.hpp"
#include "secant/induction.hpp"
#include "secant/terracini.hpp"

namespace secant::cli {

using Json = nlohmann::ordered_json;

Json to_json(const SpanVerdict& v);
Json to_json(const ImpliedRange& r);
Json to_json(const PropCheck& c);
Json to_json(const ChainCheck& c);
Json to_json(const DirectProbe& d);
Json to_json(const InductionCertificate& cert);
Json to_json(const MembershipReport& r);
Json to_json(const FiveTermIdentity& f);
Json to_json(const CodeSet& c);
Json to_json(const GrahamSloaneBounds& b);
Json to_json(const OrbitRepresentative& r);
Json to_json(const SpanDemo& d);

/// Inverse of to_json(SpanVerdict); used when replaying cached probes.
SpanVerdict span_verdict_from_json(const Json& j);

}  // namespace secant::cli
