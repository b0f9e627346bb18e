#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cfded/clusters.hpp"
#include "cfded/contfrac.hpp"
#include "cfded/integer.hpp"
#include "cfded/surd.hpp"
#include "cfded/verify.hpp"

namespace cfded::report {

enum class Format { Text, Json };

// Every report is built as one JSON document (all numbers as decimal
// strings) and rendered either verbatim or as aligned text.

std::string expand(const QuadSurd& z, bool regular, bool negative, std::size_t depth, Format format);
std::string expand_digits(const std::vector<Integer>& digits, Kind kind, Format format);

std::string convergents(const QuadSurd& z, std::size_t depth, Format format);
std::string convergents_digits(const std::vector<Integer>& digits, Kind kind, std::size_t depth, Format format);

std::string dedekind(const QuadSurd& z, std::size_t depth, Format format);
std::string dedekind_pair(const Integer& a, const Integer& b, Format format);

std::string clusters(const QuadSurd& z, unsigned precision, Format format);

std::string probe(const QuadSurd& z, const ProbeReport& probe, unsigned precision, Format format);

std::string verify(const std::vector<VerifyCheck>& checks, Format format);

/// Largest denominator for which dedekind reports include the naive route.
inline constexpr long kNaiveReportLimit = 100'000;

}  // namespace cfded::report
