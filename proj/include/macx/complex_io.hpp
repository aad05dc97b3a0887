#pragma once

// Text format for simplicial complexes:
//
//   # comment
//   vertices 5
//   facet 1 2 5
//   facet 1 4
//
// Vertices are 1-based; whitespace separated; `#` starts a comment.

#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "macx/simplicial_complex.hpp"

namespace macx {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

inline SimplicialComplex parse_complex(std::istream& in) {
    std::optional<int> m;
    std::vector<std::vector<int>> facets;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream line(raw);
        std::string keyword;
        if (!(line >> keyword)) continue;

        std::vector<long long> nums;
        std::string tok;
        while (line >> tok) {
            std::size_t used = 0;
            long long v = 0;
            try {
                v = std::stoll(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size()) throw ParseError(lineno, "not an integer: '" + tok + "'");
            nums.push_back(v);
        }

        if (keyword == "vertices") {
            if (m) throw ParseError(lineno, "duplicate 'vertices' header");
            if (!facets.empty()) throw ParseError(lineno, "'vertices' must precede facets");
            if (nums.size() != 1) throw ParseError(lineno, "'vertices' takes exactly one count");
            if (nums[0] < 0) throw ParseError(lineno, "negative vertex count");
            if (nums[0] > kMaxVertices)
                throw ParseError(lineno, "at most " + std::to_string(kMaxVertices) + " vertices supported");
            m = static_cast<int>(nums[0]);
        } else if (keyword == "facet") {
            if (!m) throw ParseError(lineno, "facet before 'vertices' header");
            std::vector<int> facet;
            for (long long v : nums) {
                if (v < 1 || v > *m)
                    throw ParseError(lineno, "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(*m));
                for (int seen : facet)
                    if (seen == v) throw ParseError(lineno, "duplicate vertex " + std::to_string(v));
                facet.push_back(static_cast<int>(v));
            }
            facets.push_back(std::move(facet));
        } else {
            throw ParseError(lineno, "unknown keyword '" + keyword + "'");
        }
    }
    if (!m) throw ParseError(lineno, "missing 'vertices' header");
    return SimplicialComplex::from_facets(*m, facets);
}

inline SimplicialComplex parse_complex(const std::string& text) {
    std::istringstream in(text);
    return parse_complex(in);
}

inline SimplicialComplex load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_complex(in);
}

/// Inverse of parse_complex for complexes on labels 1..m.
inline std::string format_complex(const SimplicialComplex& k) {
    if (k.vertices() != VertexSet::range(k.num_vertices()))
        throw std::invalid_argument("text format requires labels 1..m");
    std::ostringstream out;
    out << "vertices " << k.num_vertices() << '\n';
    for (const auto& f : k.facet_labels()) {
        if (f.size() < 2) continue;
        out << "facet";
        for (int v : f) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

} // namespace macx
