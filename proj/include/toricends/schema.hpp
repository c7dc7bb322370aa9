#pragma once

#include "toricends/ends.hpp"
#include "toricends/reduce.hpp"

#include <json.hpp>

namespace toric::schema {

using json = nlohmann::json;

// Readers throw Error(parse) on malformed documents, including unknown keys.

BigInt read_bigint(const json& j, const char* what);
json write_bigint(const BigInt& v);

Slope read_slope(const json& j);
json write_slope(const Slope& s);

json write_matrix(const GL2ZMatrix& m);
GL2ZMatrix read_matrix(const json& j);

SlopeTarget read_target(const json& j);
json write_target(const SlopeTarget& t);

SignData read_signs(const json& j);
json write_signs(const SignData& s);

TorusRecord read_torus(const json& j);
json write_torus(const TorusRecord& t);

EndDescription read_description(const json& j);
json write_description(const EndDescription& e);

json write_block(const Block& b);

/// Classification document: context fields plus "invariant".
json write_invariant(const EndInvariant& inv);
EndInvariant read_invariant(const json& j);

OpenToricAnnulus read_annulus(const json& j);
json write_annulus(const OpenToricAnnulus& a);

/// Checks that every key of object j is in `allowed`.
void expect_keys(const json& j, std::initializer_list<const char*> allowed, const char* what);

std::uint64_t read_count(const json& j, const char* what);

}  // namespace toric::schema
