#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "oneplane/classify.hpp"
#include "oneplane/drawing.hpp"
#include "oneplane/rational.hpp"
#include "oneplane/structure.hpp"

namespace oneplane {

struct ElementId {
    enum class Kind { Vertex, Face };
    Kind kind = Kind::Vertex;
    int index = 0;

    friend bool operator==(const ElementId& a, const ElementId& b) {
        return a.kind == b.kind && a.index == b.index;
    }
    friend bool operator<(const ElementId& a, const ElementId& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.index < b.index;
    }
    std::string str() const {
        return (kind == Kind::Vertex ? "v" : "f") + std::to_string(index);
    }
};

struct Transfer {
    ElementId from;
    ElementId to;
    Rational amount;
    std::string rule; // "R1".."R9"
};

/// Charge bookkeeping for one drawing. Charges are exact rationals; the
/// running total is an invariant (-12 for connected drawings) that is
/// recorded after every rule phase.
struct ChargeLedger {
    std::vector<Rational> initial_vertex, initial_face;
    std::vector<Rational> vertex_charge, face_charge;
    std::vector<Transfer> log;
    std::vector<std::pair<std::string, Rational>> phase_totals;
    bool partial = false;             // R6-R9 transfers missing for some k
    std::vector<std::string> notes;

    Rational total() const {
        Rational t = 0;
        for (const auto& c : vertex_charge) t += c;
        for (const auto& c : face_charge) t += c;
        return t;
    }

    Rational charge(const ElementId& e) const {
        return e.kind == ElementId::Kind::Vertex ? vertex_charge[e.index] : face_charge[e.index];
    }
};

namespace detail {

inline bool drawing_connected(const OnePlaneDrawing& d) {
    const int n = d.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int e : d.rotation(v)) {
            const auto& [a, b] = d.edge(e);
            const int w = a == v ? b : a;
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

inline void apply(ChargeLedger& L, const ElementId& from, const ElementId& to,
                  const Rational& amount, const char* rule) {
    if (amount.zero()) return;
    auto& src = from.kind == ElementId::Kind::Vertex ? L.vertex_charge[from.index]
                                                     : L.face_charge[from.index];
    auto& dst = to.kind == ElementId::Kind::Vertex ? L.vertex_charge[to.index]
                                                   : L.face_charge[to.index];
    src -= amount;
    dst += amount;
    L.log.push_back({from, to, amount, rule});
}

} // namespace detail

/// Initial charges: d(v) - 6 on vertices, 2 d(f) - 6 on faces. By Euler's
/// formula the total is exactly -12 on a connected drawing.
inline ChargeLedger init_charges(const OnePlaneDrawing& d) {
    if (!d.validate().ok()) throw InputError("init_charges: invalid drawing");
    if (!detail::drawing_connected(d)) throw InputError("init_charges: drawing not connected");
    ChargeLedger L;
    L.vertex_charge.reserve(d.vertex_count());
    for (int v = 0; v < d.vertex_count(); ++v) L.vertex_charge.push_back(d.degree(v) - 6);
    for (const Face& f : d.faces()) L.face_charge.push_back(2 * f.degree() - 6);
    L.initial_vertex = L.vertex_charge;
    L.initial_face = L.face_charge;
    L.phase_totals.push_back({"init", L.total()});
    return L;
}

/// Run rules R1-R9 in phases. `chain`, when present, supplies the k-master
/// assignments for R6-R9; the run is flagged partial when some k in {2..5}
/// has clients but no available masters.
inline ChargeLedger run_discharge(const OnePlaneDrawing& d,
                                  const MastersChain* chain = nullptr) {
    ChargeLedger L = init_charges(d);
    const Classification cls = classify(d);
    const Rational third(1, 3), two_thirds(2, 3), half(1, 2), four_thirds(4, 3);

    const int nf = d.face_count();
    std::vector<std::vector<int>> face_vs(nf);
    for (int f = 0; f < nf; ++f) face_vs[f] = d.face_vertices(f);

    // R1: big vertices pay 1/3 per face incidence.
    std::vector<Rational> r1_income(nf, Rational(0));
    for (int f = 0; f < nf; ++f) {
        for (int v : face_vs[f]) {
            if (cls.letter[v] != 'B') continue;
            detail::apply(L, {ElementId::Kind::Vertex, v}, {ElementId::Kind::Face, f}, third,
                          "R1");
            r1_income[f] += third;
        }
    }
    L.phase_totals.push_back({"R1", L.total()});

    // R2: 4+-faces pay their false incidences, 4/3 if hungry else 2/3.
    for (int f = 0; f < nf; ++f) {
        if (static_cast<int>(face_vs[f].size()) < 4) continue;
        for (int i = 0; i < static_cast<int>(face_vs[f].size()); ++i) {
            const int v = face_vs[f][i];
            if (cls.letter[v] != 'F') continue;
            detail::apply(L, {ElementId::Kind::Face, f}, {ElementId::Kind::Vertex, v},
                          cls.hungry[f][i] ? four_thirds : two_thirds, "R2");
        }
    }
    L.phase_totals.push_back({"R2", L.total()});

    // R3: false 3-faces forward their R1 income to the false vertex.
    // R4: true 3-faces forward it to their small vertices (equal split).
    // R5: 4+-faces split their remaining balance over small incidences.
    for (int f = 0; f < nf; ++f) {
        const auto& vs = face_vs[f];
        const int deg = static_cast<int>(vs.size());
        if (deg == 3) {
            if (r1_income[f].zero()) continue;
            std::vector<int> falses;
            for (int v : vs)
                if (cls.letter[v] == 'F') falses.push_back(v);
            if (!falses.empty()) {
                detail::apply(L, {ElementId::Kind::Face, f},
                              {ElementId::Kind::Vertex, falses.front()}, r1_income[f], "R3");
            } else {
                std::vector<int> small_only;
                for (int v : vs)
                    if (cls.letter[v] == 'S') small_only.push_back(v);
                if (small_only.empty()) continue;
                const Rational share =
                    r1_income[f] / Rational(static_cast<int>(small_only.size()));
                for (int v : small_only)
                    detail::apply(L, {ElementId::Kind::Face, f}, {ElementId::Kind::Vertex, v},
                                  share, "R4");
            }
        } else if (deg >= 4) {
            std::vector<int> small_pos;
            for (int i = 0; i < deg; ++i)
                if (cls.letter[vs[i]] == 'S') small_pos.push_back(i);
            if (small_pos.empty()) continue;
            const Rational balance = L.face_charge[f];
            if (balance.negative()) {
                L.notes.push_back("face " + std::to_string(f) +
                                  " negative after R2: " + balance.str());
                continue;
            }
            if (balance.zero()) continue;
            const Rational share = balance / Rational(static_cast<int>(small_pos.size()));
            for (int i : small_pos)
                detail::apply(L, {ElementId::Kind::Face, f}, {ElementId::Kind::Vertex, vs[i]},
                              share, "R5");
        }
    }
    L.phase_totals.push_back({"R3-R5", L.total()});

    // R6-R9: masters pay their clients; amount depends only on k.
    const std::map<int, Rational> master_amount = {
        {2, two_thirds}, {3, half}, {4, half}, {5, two_thirds}};
    const char* master_rule[6] = {nullptr, nullptr, "R6", "R7", "R8", "R9"};
    const Graph g = d.recover_original();
    const auto trues = d.true_vertex_ids();
    for (int k = 2; k <= 5; ++k) {
        bool clients_exist = false;
        for (int v = 0; v < g.vertex_count() && !clients_exist; ++v)
            clients_exist = g.degree(v) >= 2 && g.degree(v) <= k;
        if (!clients_exist) continue;
        const ChainEntry* entry = nullptr;
        if (chain) {
            const auto it = chain->entries.find(k);
            if (it != chain->entries.end()) entry = &it->second;
        }
        if (!entry || entry->status != ChainEntry::Status::Masters) {
            L.partial = true;
            L.notes.push_back("no masters for k=" + std::to_string(k) +
                              (entry && entry->status == ChainEntry::Status::Blocked
                                   ? " (blocked by alternating structure)"
                                   : ""));
            continue;
        }
        for (const auto& [x, y] : entry->masters->pairs) {
            const int dx = g.degree(x);
            if (dx < 2) continue; // rules cover 2- to 5-vertices only
            detail::apply(L, {ElementId::Kind::Vertex, trues[y]},
                          {ElementId::Kind::Vertex, trues[x]}, master_amount.at(k),
                          master_rule[dx]);
        }
    }
    L.phase_totals.push_back({"R6-R9", L.total()});
    return L;
}

/// Elements with negative final charge, id order.
inline std::vector<std::pair<ElementId, Rational>> negative_elements(const ChargeLedger& L) {
    std::vector<std::pair<ElementId, Rational>> out;
    for (int v = 0; v < static_cast<int>(L.vertex_charge.size()); ++v)
        if (L.vertex_charge[v].negative())
            out.push_back({{ElementId::Kind::Vertex, v}, L.vertex_charge[v]});
    for (int f = 0; f < static_cast<int>(L.face_charge.size()); ++f)
        if (L.face_charge[f].negative())
            out.push_back({{ElementId::Kind::Face, f}, L.face_charge[f]});
    return out;
}

// ---------------------------------------------------------------------------
// Claim verification: the closed-form per-face transfer amounts.

struct ClaimDeviation {
    int face = 0;
    std::string expected;
    std::string actual;
};

struct ClaimReport {
    std::vector<ClaimDeviation> deviations;
    std::map<std::string, int> checked; // category -> number of faces checked
    bool ok() const { return deviations.empty(); }
};

namespace detail {

/// The claims quantify over faces from the proof's context, where two small
/// vertices are never adjacent. A face qualifies when no two cyclically
/// consecutive boundary vertices are both small.
inline bool claim_eligible(const std::string& raw) {
    const int L = static_cast<int>(raw.size());
    for (int i = 0; i < L; ++i)
        if (raw[i] == 'S' && raw[(i + 1) % L] == 'S') return false;
    return true;
}

} // namespace detail

/// Check the logged outgoing transfers of every claim-eligible face against
/// the closed forms. `ledger` must come from run_discharge on `d`.
inline ClaimReport verify_claims(const OnePlaneDrawing& d, const ChargeLedger& L) {
    if (static_cast<int>(L.face_charge.size()) != d.face_count() ||
        static_cast<int>(L.vertex_charge.size()) != d.vertex_count())
        throw InputError("verify_claims: ledger does not match drawing");
    const Classification cls = classify(d);
    ClaimReport report;
    const Rational third(1, 3), two_thirds(2, 3), five_sixths(5, 6), one(1), four_thirds(4, 3);

    // Outgoing transfers per face, excluding the R2 payments to false
    // vertices (the claims describe what reaches smalls / the 3-face false
    // vertex via R3-R5).
    std::vector<std::vector<std::pair<int, Rational>>> outgoing(d.face_count());
    for (const Transfer& t : L.log) {
        if (t.from.kind != ElementId::Kind::Face) continue;
        if (t.rule == "R2") continue;
        outgoing[t.from.index].push_back({t.to.index, t.amount});
    }

    auto fail = [&](int f, const std::string& want, const std::string& got) {
        report.deviations.push_back({f, want, got});
    };
    auto describe = [&](int f) {
        std::string out;
        for (const auto& [to, amt] : outgoing[f])
            out += "v" + std::to_string(to) + ":" + amt.str() + " ";
        return out.empty() ? std::string("(none)") : out;
    };

    for (int f = 0; f < d.face_count(); ++f) {
        const std::string& raw = cls.signature_raw[f];
        if (!detail::claim_eligible(raw)) continue;
        const auto vs = d.face_vertices(f);
        const int deg = static_cast<int>(vs.size());

        auto expect_exact = [&](const char* category, char receiver_letter,
                                const Rational& amount) {
            ++report.checked[category];
            int expected_count = 0;
            for (char ch : raw)
                if (ch == receiver_letter) ++expected_count;
            if (static_cast<int>(outgoing[f].size()) != expected_count) {
                fail(f, std::string(category) + ": " + std::to_string(expected_count) +
                             " transfers of " + amount.str(),
                     describe(f));
                return;
            }
            for (const auto& [to, amt] : outgoing[f]) {
                if (cls.letter[to] != receiver_letter || amt != amount) {
                    fail(f, std::string(category) + ": " + amount.str() + " to each " +
                                 receiver_letter,
                         describe(f));
                    return;
                }
            }
        };
        auto expect_at_least = [&](const char* category, const Rational& lower) {
            ++report.checked[category];
            int small_incidences = 0;
            for (char ch : raw)
                if (ch == 'S') ++small_incidences;
            if (static_cast<int>(outgoing[f].size()) != small_incidences) {
                fail(f, std::string(category) + ": one transfer per small incidence",
                     describe(f));
                return;
            }
            for (const auto& [to, amt] : outgoing[f]) {
                if (cls.letter[to] != 'S' || amt < lower) {
                    fail(f, std::string(category) + ": >= " + lower.str() + " to each small",
                         describe(f));
                    return;
                }
            }
        };

        if (deg == 3) {
            if (matches_type(cls, f, "FBB")) {
                expect_exact("(F,B,B) -> 2/3 to false", 'F', two_thirds);
            } else if (matches_type(cls, f, "FBS")) {
                expect_exact("(F,B,S) -> 1/3 to false", 'F', third);
            } else if (matches_type(cls, f, "SBB")) {
                expect_exact("burdened true 3-face -> 2/3 to small", 'S', two_thirds);
            }
        } else if (deg == 4 && cls.burdened[f]) {
            if (matches_type(cls, f, "FSFS")) {
                expect_exact("(F,S,F,S) -> 1/3 each small", 'S', third);
            } else if (matches_type(cls, f, "FSBS")) {
                expect_exact("(F,S,B,S) -> 5/6 each small", 'S', five_sixths);
            } else if (matches_type(cls, f, "FSFB")) {
                expect_exact("(F,S,F,B) -> 1 to small", 'S', one);
            } else {
                expect_at_least("other burdened 4-face -> >= 4/3", four_thirds);
            }
        } else if (deg >= 5 && cls.burdened[f]) {
            expect_at_least("burdened 5+-face -> >= 4/3", four_thirds);
        }
    }
    return report;
}

/// Convenience driver: masters chain (when Delta >= 10) plus a full run.
inline ChargeLedger discharge_drawing(const OnePlaneDrawing& d,
                                      AlternatorKind kind = AlternatorKind::AlternatingSubgraph) {
    const Graph g = d.recover_original();
    if (g.vertex_count() > 0 && g.max_degree() >= 10) {
        const MastersChain chain = masters_chain(g, kind);
        return run_discharge(d, &chain);
    }
    return run_discharge(d, nullptr);
}

} // namespace oneplane
