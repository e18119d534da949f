#include "qhilb/appendix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qhilb {

namespace {

constexpr int kOrder = 6;

const char* const kHeader =
    "# Hilbert series of rank-one ideals I over a cubic AS-algebra, invariants (n_e,n_o) <= (3,3).\n"
    "# Hand-transcribed reference table; `qhilb appendix --check` must reproduce it byte for byte.\n"
    "# Columns: (n_e,n_o) | Castelnuovo polynomial s_I | h_I coefficients t^0..t^6 | dim Ext^1(I,I) | minimal resolutions\n";

int max_support(const BettiTable& t)
{
    int m = t.a.rbegin()->first;
    if (!t.b.empty()) m = std::max(m, t.b.rbegin()->first);
    return m;
}

std::vector<std::string> split_lines(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}

} // namespace

std::vector<AppendixRow> appendix_regenerate()
{
    std::vector<AppendixRow> rows;
    for (long ne = 0; ne <= 3; ++ne)
        for (long no = 0; no <= 3; ++no) {
            auto polys = enumerate(ne, no);
            std::reverse(polys.begin(), polys.end());
            for (const auto& s : polys) {
                AppendixRow row;
                row.inv = {ne, no};
                row.s = s;
                LaurentPoly q = char_poly(s);
                row.tables = enumerate_for(q);
                if (row.tables.empty()) throw std::logic_error("no minimal resolution for " + to_string(s));
                int top = kOrder;
                for (const auto& t : row.tables) top = std::max(top, max_support(t));
                TruncatedSeries h = to_hilbert(s, top);
                for (int d = 0; d <= kOrder; ++d) row.h.push_back(h.at(d));
                for (std::size_t i = 0; i < row.tables.size(); ++i) {
                    if (char_poly(row.tables[i]) != q) throw std::logic_error("resolution does not match its series");
                    mpz_class e = ext1_graded_dim(row.tables[i], h);
                    if (i == 0) row.ext1 = e.get_si();
                    else if (e != row.ext1) throw std::logic_error("resolutions of one series disagree on Ext^1");
                }
                rows.push_back(std::move(row));
            }
        }
    return rows;
}

std::string render_appendix(const std::vector<AppendixRow>& rows)
{
    std::ostringstream os;
    os << kHeader;
    for (const auto& r : rows) {
        os << "(" << r.inv.ne << "," << r.inv.no << ") | " << to_string(r.s) << " | ";
        for (std::size_t i = 0; i < r.h.size(); ++i) os << (i ? "," : "") << r.h[i].get_str();
        os << " | " << r.ext1 << " | ";
        for (std::size_t i = 0; i < r.tables.size(); ++i) os << (i ? " ; " : "") << resolution_string(r.tables[i]);
        os << "\n";
    }
    return os.str();
}

AppendixCheck check_appendix(const std::string& golden_text, const std::string& rendered)
{
    AppendixCheck res;
    res.ok = golden_text == rendered;
    if (res.ok) return res;
    auto g = split_lines(golden_text), a = split_lines(rendered);
    std::ostringstream os;
    for (std::size_t i = 0; i < std::max(g.size(), a.size()); ++i) {
        const std::string* gl = i < g.size() ? &g[i] : nullptr;
        const std::string* al = i < a.size() ? &a[i] : nullptr;
        if (gl && al && *gl == *al) continue;
        os << "@@ line " << i + 1 << "\n";
        if (gl) os << "-" << *gl << "\n";
        if (al) os << "+" << *al << "\n";
    }
    res.diff = os.str();
    if (res.diff.empty()) res.diff = "@@ trailing newline differs\n";
    return res;
}

} // namespace qhilb
