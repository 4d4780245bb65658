#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "signlab/adversary.hpp"
#include "signlab/boolfn.hpp"
#include "signlab/degree.hpp"

namespace signlab::io {

/// `n:<s>`: s has 2^n characters from {+,-}, position j holding f(mask j).
/// Reading also accepts a numeric arity prefix (`3:<s>`) and checks it.
std::string format_truth_table(const BoolFunction& f);
BoolFunction parse_truth_table(std::string_view text);

/// Header `n=<k>`, then `<mask> <num>/<den>` for each nonzero entry, ascending.
std::string format_rational_table(const RationalTable& table);
RationalTable parse_rational_table(std::string_view text);

/// `claimed_degree=<d> alpha=<a|inf>` followed by the rational table.
std::string format_witness(const DualWitness& witness);
/// Attributes are recomputed against `f`.
DualWitness parse_witness(std::string_view text, const BoolFunction& f);

/// Header `m=<k>`, then `x y value` for x <= y with nonzero value.
std::string format_certificate(const AdversaryCertificate& certificate);
AdversaryCertificate parse_certificate(std::string_view text);

std::string format_representation(const SignRepresentation& p);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace signlab::io
