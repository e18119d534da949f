#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhilb/series.hpp"

namespace qhilb {

struct CastelnuovoPoly {
    std::vector<long> s;  // s_0..s_n, no trailing zeros
    int sigma = 0;        // length of the staircase prefix 1,2,..,sigma

    friend bool operator==(const CastelnuovoPoly& a, const CastelnuovoPoly& b) { return a.s == b.s; }
    friend bool operator<(const CastelnuovoPoly& a, const CastelnuovoPoly& b) { return a.s < b.s; }
};

struct InvariantPair {
    long ne = 0;
    long no = 0;
    friend bool operator==(const InvariantPair& a, const InvariantPair& b) { return a.ne == b.ne && a.no == b.no; }
};

struct DistinctPartition {
    std::vector<long> parts;  // strictly decreasing
    friend bool operator==(const DistinctPartition& a, const DistinctPartition& b) { return a.parts == b.parts; }
};

class CastelnuovoError : public std::invalid_argument {
public:
    CastelnuovoError(std::size_t index, const std::string& what)
        : std::invalid_argument(what), index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

CastelnuovoPoly validate(std::vector<long> s);
InvariantPair weights(const CastelnuovoPoly& s);
std::vector<CastelnuovoPoly> enumerate(long ne, long no);
long count(long ne, long no);

// 1 - s(t)(1-t)^2, the characteristic polynomial of the ideal
LaurentPoly char_poly(const CastelnuovoPoly& s);
TruncatedSeries to_hilbert(const CastelnuovoPoly& s, int T);
CastelnuovoPoly from_char_poly(const LaurentPoly& q);

DistinctPartition to_partition(const CastelnuovoPoly& s);
InvariantPair chess_weights(const DistinctPartition& lambda);

bool in_N(long ne, long no);

struct NMembership {
    long k;
    long l;
    int which;  // 1: n_e - l = k^2, 2: n_e - l = (k+1)^2
};
std::optional<NMembership> n_membership(long ne, long no);
CastelnuovoPoly extremal_castelnuovo(long k, int which);

// Column chart, top row first; even columns '#', odd columns '.'.
std::string diagram(const CastelnuovoPoly& s);
std::string to_string(const CastelnuovoPoly& s);

} // namespace qhilb
