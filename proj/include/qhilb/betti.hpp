#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhilb/series.hpp"

namespace qhilb {

// Graded Betti numbers of a length-one free resolution
//   0 -> (+) A(-i)^{b_i} -> (+) A(-i)^{a_i} -> M -> 0.
struct BettiTable {
    std::map<int, long> a;
    std::map<int, long> b;

    int sigma() const { return a.begin()->first; }
    friend bool operator==(const BettiTable& x, const BettiTable& y) { return x.a == y.a && x.b == y.b; }
};

class BettiError : public std::invalid_argument {
public:
    BettiError(long l, const std::string& what) : std::invalid_argument(what), l_(l) {}
    long l() const { return l_; }

private:
    long l_;
};

BettiTable validate_betti(std::map<int, long> a, std::map<int, long> b);
LaurentPoly char_poly(const BettiTable& t);
// All valid tables with a_i - b_i = q_i and support below degree_bound.
// Without a bound the support is limited to the degree of q, which is exact
// for rank at most one (condition (3) forbids anything beyond it).
std::vector<BettiTable> enumerate_for(const LaurentPoly& q, std::optional<int> degree_bound = std::nullopt);
BettiTable extremal_resolution(long ne, long no);
mpz_class ext1_graded_dim(const BettiTable& t, const TruncatedSeries& h);

// "0 -> A(-4) -> A(-2)^2 -> I -> 0"
std::string resolution_string(const BettiTable& t);

} // namespace qhilb
