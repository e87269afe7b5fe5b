#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "oneplane/drawing.hpp"

namespace oneplane {

/// A true vertex of the associated plane graph is big when its degree there
/// is at least 9, small when at most 8.
constexpr int kBigDegree = 9;

/// Per-drawing classification used by the discharging rules: big/small
/// vertices, hungry false-vertex incidences, burdened faces, and face type
/// signatures over the alphabet {F, B, S}.
struct Classification {
    std::vector<char> letter;                 // per vertex: 'F', 'B' or 'S'
    std::vector<std::vector<bool>> hungry;    // [face][boundary position]
    std::vector<bool> burdened;               // per face
    std::vector<std::string> signature_raw;   // boundary order
    std::vector<std::string> signature;       // canonical form
};

/// Lexicographically least rotation of s or of its reversal; face
/// signatures are cyclic and orientation-free.
inline std::string canonical_cyclic(std::string s) {
    if (s.empty()) return s;
    std::string best = s;
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            const std::string rot = s.substr(i) + s.substr(0, i);
            if (rot < best) best = rot;
        }
        std::reverse(s.begin(), s.end());
    }
    return best;
}

inline Classification classify(const OnePlaneDrawing& d) {
    Classification c;
    c.letter.resize(d.vertex_count());
    for (int v = 0; v < d.vertex_count(); ++v)
        c.letter[v] = d.is_false_vertex(v) ? 'F' : (d.degree(v) >= kBigDegree ? 'B' : 'S');

    const int nf = d.face_count();
    c.hungry.resize(nf);
    c.burdened.assign(nf, false);
    c.signature_raw.resize(nf);
    c.signature.resize(nf);
    for (int f = 0; f < nf; ++f) {
        const auto vs = d.face_vertices(f);
        const int L = static_cast<int>(vs.size());
        std::string sig(L, '?');
        c.hungry[f].assign(L, false);
        for (int i = 0; i < L; ++i) {
            sig[i] = c.letter[vs[i]];
            if (sig[i] == 'S') c.burdened[f] = true;
        }
        for (int i = 0; i < L; ++i) {
            if (sig[i] != 'F') continue;
            const char prev = c.letter[vs[(i + L - 1) % L]];
            const char next = c.letter[vs[(i + 1) % L]];
            c.hungry[f][i] = (prev == 'B' && next == 'B');
        }
        c.signature_raw[f] = sig;
        c.signature[f] = canonical_cyclic(sig);
    }
    return c;
}

/// True iff face f has the given type up to rotation/reflection, e.g.
/// matches_type(c, f, "FSBS").
inline bool matches_type(const Classification& c, int f, const std::string& pattern) {
    return c.signature[f] == canonical_cyclic(pattern);
}

} // namespace oneplane
