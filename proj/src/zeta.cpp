#include "casweep/zeta.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "casweep/graph.hpp"

namespace casweep {

std::uint32_t ZAutomaton::letters() const { return static_cast<std::uint32_t>(ipow(q, tracks)); }

Symbol ZAutomaton::digit(std::uint32_t letter, unsigned track) const {
    return static_cast<Symbol>((letter / ipow(q, tracks - 1 - track)) % q);
}

void ZAutomaton::validate() const {
    if (offsets.size() != tracks) throw std::domain_error("automaton offsets do not match track count");
    if (initial.size() != states || final_.size() != states) throw std::domain_error("automaton I/F size mismatch");
    const auto L = letters();
    for (const auto& e : edges)
        if (e.from >= states || e.to >= states || e.letter >= L) throw std::domain_error("automaton edge out of range");
}

namespace {

void check_size(std::size_t n, const char* what) {
    if (n > max_automaton_states())
        throw ResourceError(std::string(what) + " needs " + std::to_string(n) + " states (cap " +
                            std::to_string(max_automaton_states()) + ")");
}

graph::Adjacency adjacency(const ZAutomaton& A) {
    graph::Adjacency adj(A.states);
    for (const auto& e : A.edges) adj[e.from].push_back(e.to);
    return adj;
}

std::vector<std::vector<ZAutomaton::Edge>> out_lists(const ZAutomaton& A) {
    std::vector<std::vector<ZAutomaton::Edge>> out(A.states);
    for (const auto& e : A.edges) out[e.from].push_back(e);
    return out;
}

bool all_set(const std::vector<char>& v) {
    return std::all_of(v.begin(), v.end(), [](char c) { return c != 0; });
}

// (state, phase) product over a periodic word; vertex = state * L + phase.
graph::Adjacency periodic_product(const std::vector<std::vector<ZAutomaton::Edge>>& out, const Word& period) {
    const std::size_t L = period.size();
    graph::Adjacency adj(out.size() * L);
    for (std::size_t s = 0; s < out.size(); ++s)
        for (std::size_t j = 0; j < L; ++j)
            for (const auto& e : out[s])
                if (e.letter == period[j])
                    adj[s * L + j].push_back(static_cast<std::uint32_t>(e.to * L + (j + 1) % L));
    return adj;
}

std::vector<char> lift_marks(const std::vector<char>& marks, std::size_t L) {
    std::vector<char> r(marks.size() * L);
    for (std::size_t s = 0; s < marks.size(); ++s)
        for (std::size_t j = 0; j < L; ++j) r[s * L + j] = marks[s];
    return r;
}

std::vector<char> useful_states(const ZAutomaton& A) {
    const auto adj = adjacency(A);
    const auto scc = graph::tarjan(adj);
    const auto fromI = graph::reach(adj, graph::on_marked_cycle(adj, scc, A.initial));
    const auto toF = graph::reach(graph::reverse(adj), graph::on_marked_cycle(adj, scc, A.final_));
    std::vector<char> u(A.states);
    for (std::size_t s = 0; s < A.states; ++s) u[s] = fromI[s] && toF[s];
    return u;
}

}  // namespace

bool member_packed(const ZAutomaton& A, const EpConfig& x) {
    if (x.q != A.letters()) throw std::domain_error("word alphabet does not match the automaton");
    const auto out = out_lists(A);
    const std::size_t L = x.left_period.size(), R = x.right_period.size();

    // states at the left boundary of the center with an I-recurrent past
    const auto gl = periodic_product(out, x.left_period);
    const auto sl = graph::tarjan(gl);
    const auto past = graph::reach(gl, graph::on_marked_cycle(gl, sl, lift_marks(A.initial, L)));
    std::vector<char> cur(A.states, 0);
    for (std::size_t s = 0; s < A.states; ++s) cur[s] = past[s * L];

    for (Symbol c : x.center) {
        std::vector<char> nxt(A.states, 0);
        for (std::size_t s = 0; s < A.states; ++s)
            if (cur[s])
                for (const auto& e : out[s])
                    if (e.letter == c) nxt[e.to] = 1;
        cur.swap(nxt);
    }

    // states at the start of the right tail with an F-recurrent future
    const auto gr = periodic_product(out, x.right_period);
    const auto sr = graph::tarjan(gr);
    const auto future = graph::reach(graph::reverse(gr), graph::on_marked_cycle(gr, sr, lift_marks(A.final_, R)));
    for (std::size_t s = 0; s < A.states; ++s)
        if (cur[s] && future[s * R]) return true;
    return false;
}

bool member(const ZAutomaton& A, const std::vector<EpConfig>& tracks) {
    if (tracks.size() != A.tracks) throw std::domain_error("track count does not match the automaton");
    return member_packed(A, zip(tracks, A.offsets));
}

ZAutomaton trim(const ZAutomaton& A) {
    const auto u = useful_states(A);
    std::vector<std::uint32_t> remap(A.states, UINT32_MAX);
    ZAutomaton T;
    T.q = A.q;
    T.tracks = A.tracks;
    T.offsets = A.offsets;
    for (std::size_t s = 0; s < A.states; ++s)
        if (u[s]) {
            remap[s] = static_cast<std::uint32_t>(T.states++);
            T.initial.push_back(A.initial[s]);
            T.final_.push_back(A.final_[s]);
        }
    for (const auto& e : A.edges)
        if (u[e.from] && u[e.to]) T.edges.push_back({remap[e.from], e.letter, remap[e.to]});
    return T;
}

bool is_empty(const ZAutomaton& A) {
    const auto u = useful_states(A);
    return std::none_of(u.begin(), u.end(), [](char c) { return c != 0; });
}

namespace {

// Shortest path of at least `min_len` edges from src to a vertex satisfying `goal`.
template <class Goal>
std::optional<std::pair<Word, std::uint32_t>> bfs_letters(const std::vector<std::vector<ZAutomaton::Edge>>& out,
                                                           std::uint32_t src, Goal goal, bool nonempty) {
    if (!nonempty && goal(src)) return std::make_pair(Word{}, src);
    std::vector<const ZAutomaton::Edge*> via(out.size(), nullptr);
    std::deque<std::uint32_t> q;
    for (const auto& e : out[src])
        if (!via[e.to]) {
            via[e.to] = &e;
            q.push_back(e.to);
        }
    while (!q.empty()) {
        const auto v = q.front();
        q.pop_front();
        if (goal(v)) {
            Word w;
            std::uint32_t cur = v;
            do {
                w.push_back(via[cur]->letter);
                cur = via[cur]->from;
            } while (cur != src);
            std::reverse(w.begin(), w.end());
            return std::make_pair(w, v);
        }
        for (const auto& e : out[v])
            if (!via[e.to]) {
                via[e.to] = &e;
                q.push_back(e.to);
            }
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<EpConfig>> nonempty_witness(const ZAutomaton& A0) {
    const ZAutomaton A = trim(A0);
    if (A.states == 0) return std::nullopt;
    const auto adj = adjacency(A);
    const auto scc = graph::tarjan(adj);
    const auto out = out_lists(A);
    std::vector<char> fcyc(A.states), icyc(A.states);
    for (std::size_t s = 0; s < A.states; ++s) {
        fcyc[s] = A.final_[s] && scc.nontrivial[scc.comp[s]];
        icyc[s] = A.initial[s] && scc.nontrivial[scc.comp[s]];
    }
    // after trimming every state reaches an F-cycle, so any I-cycle state works
    std::uint32_t t = 0;
    while (t < A.states && !icyc[t]) ++t;
    if (t == A.states) throw IntegrityError("trimmed automaton without I-cycle");
    auto back_to = [&](std::uint32_t s) { return bfs_letters(out, s, [s](std::uint32_t v) { return v == s; }, true); };
    const auto left = back_to(t);
    const auto mid = bfs_letters(out, t, [&](std::uint32_t v) { return fcyc[v] != 0; }, false);
    if (!left || !mid) throw IntegrityError("witness extraction failed");
    const auto right = back_to(mid->second);
    if (!right) throw IntegrityError("witness extraction failed");
    const EpConfig z(A.letters(), left->first, mid->first, 0, right->first);
    std::vector<EpConfig> tracks;
    for (unsigned k = 0; k < A.tracks; ++k) tracks.push_back(unzip(z, A.q, A.tracks, k, A.offsets[k]).normalized());
    return tracks;
}

ZAutomaton retime(const ZAutomaton& A, const std::vector<Pos>& offsets) {
    if (offsets.size() != A.tracks) throw std::domain_error("retime: wrong number of offsets");
    const unsigned K = A.tracks, q = A.q;
    Pos D = A.offsets[0] - offsets[0];
    for (unsigned k = 1; k < K; ++k) D = std::max(D, A.offsets[k] - offsets[k]);
    std::vector<unsigned> B(K);
    unsigned total = 0;
    for (unsigned k = 0; k < K; ++k) {
        B[k] = static_cast<unsigned>(offsets[k] - A.offsets[k] + D);
        total += B[k];
    }
    ZAutomaton R = A;
    R.offsets = offsets;
    if (total == 0) return R;  // offsets differ by a constant: shift invariance

    // track k's buffer holds the last B[k] letters read on that track (oldest first)
    const Index bufspace = ipow(q, total);
    check_size(A.states * bufspace, "retimed automaton");
    std::vector<Index> place(K);  // weight of track k's buffer inside the packed buffer
    {
        Index w = 1;
        for (unsigned k = K; k-- > 0;) {
            place[k] = w;
            w *= ipow(q, B[k]);
        }
    }
    R.states = A.states * bufspace;
    R.initial.assign(R.states, 0);
    R.final_.assign(R.states, 0);
    R.edges.clear();
    for (std::size_t s = 0; s < A.states; ++s)
        for (Index b = 0; b < bufspace; ++b) {
            R.initial[s * bufspace + b] = A.initial[s];
            R.final_[s * bufspace + b] = A.final_[s];
        }
    std::vector<Index> buf(K);
    std::vector<unsigned> freeTracks;
    for (unsigned k = 0; k < K; ++k)
        if (B[k]) freeTracks.push_back(k);
    const auto out = out_lists(A);
    for (std::size_t s = 0; s < A.states; ++s)
        for (Index b = 0; b < bufspace; ++b) {
            for (unsigned k = 0; k < K; ++k) buf[k] = (b / place[k]) % ipow(q, B[k]);
            for (const auto& e : out[s]) {
                bool ok = true;
                for (unsigned k = 0; k < K && ok; ++k)
                    if (B[k]) ok = buf[k] / ipow(q, B[k] - 1) == A.digit(e.letter, k);
                if (!ok) continue;
                const Index combos = ipow(q, static_cast<unsigned>(freeTracks.size()));
                for (Index c = 0; c < combos; ++c) {
                    std::vector<Symbol> now(K);
                    Index cc = c;
                    for (std::size_t t = freeTracks.size(); t-- > 0;) {
                        now[freeTracks[t]] = static_cast<Symbol>(cc % q);
                        cc /= q;
                    }
                    Index letter = 0, nb = 0;
                    for (unsigned k = 0; k < K; ++k) {
                        if (!B[k]) now[k] = A.digit(e.letter, k);
                        letter = letter * q + now[k];
                        if (B[k]) nb += ((buf[k] * q + now[k]) % ipow(q, B[k])) * place[k];
                    }
                    R.edges.push_back({static_cast<std::uint32_t>(s * bufspace + b), static_cast<std::uint32_t>(letter),
                                       static_cast<std::uint32_t>(e.to * bufspace + nb)});
                }
            }
        }
    return R;
}

ZAutomaton lift(const ZAutomaton& A, unsigned tracks, const std::vector<unsigned>& placement,
                const std::vector<Pos>& offsets) {
    if (placement.size() != A.tracks || offsets.size() != tracks) throw std::domain_error("lift: bad placement");
    std::vector<char> used(tracks, 0);
    for (unsigned k = 0; k < A.tracks; ++k) {
        if (placement[k] >= tracks || used[placement[k]]) throw std::domain_error("lift: bad placement");
        used[placement[k]] = 1;
    }
    ZAutomaton R;
    R.q = A.q;
    R.tracks = tracks;
    R.offsets.assign(tracks, 0);
    // keep the constrained tracks' relative offsets; free tracks take the requested ones
    const Pos shift = offsets[placement[0]] - A.offsets[0];
    for (unsigned t = 0; t < tracks; ++t) R.offsets[t] = offsets[t];
    for (unsigned k = 0; k < A.tracks; ++k)
        if (offsets[placement[k]] - A.offsets[k] != shift) throw std::domain_error("lift: offsets incompatible");
    R.states = A.states;
    R.initial = A.initial;
    R.final_ = A.final_;
    std::vector<unsigned> freeTracks;
    for (unsigned t = 0; t < tracks; ++t)
        if (!used[t]) freeTracks.push_back(t);
    const Index combos = ipow(A.q, static_cast<unsigned>(freeTracks.size()));
    for (const auto& e : A.edges)
        for (Index c = 0; c < combos; ++c) {
            std::vector<Symbol> d(tracks, 0);
            for (unsigned k = 0; k < A.tracks; ++k) d[placement[k]] = A.digit(e.letter, k);
            Index cc = c;
            for (std::size_t t = freeTracks.size(); t-- > 0;) {
                d[freeTracks[t]] = static_cast<Symbol>(cc % A.q);
                cc /= A.q;
            }
            Index letter = 0;
            for (auto s : d) letter = letter * A.q + s;
            R.edges.push_back({e.from, static_cast<std::uint32_t>(letter), e.to});
        }
    return R;
}

ZAutomaton intersect(const ZAutomaton& A0, const ZAutomaton& B0) {
    if (A0.q != B0.q || A0.tracks != B0.tracks) throw std::domain_error("intersect: alphabet mismatch");
    const ZAutomaton A = trim(A0);
    const ZAutomaton B = trim(A0.offsets == B0.offsets ? B0 : retime(B0, A0.offsets));

    const bool needR = !all_set(A.final_) && !all_set(B.final_);
    const bool needL = !all_set(A.initial) && !all_set(B.initial);
    const std::size_t fR = needR ? 2 : 1, fL = needL ? 2 : 1;
    check_size(A.states * B.states * fR * fL, "intersection");

    ZAutomaton P;
    P.q = A.q;
    P.tracks = A.tracks;
    P.offsets = A.offsets;
    P.states = A.states * B.states * fR * fL;
    P.initial.assign(P.states, 0);
    P.final_.assign(P.states, 0);
    auto id = [&](std::size_t a, std::size_t b, unsigned kR, unsigned kL) {
        return static_cast<std::uint32_t>(((a * B.states + b) * fR + kR) * fL + kL);
    };
    // Right: kR waits for F_A (0) then F_B (1); accepting when F_B closes a round.
    // Left: the same bookkeeping run backwards in time over I_A and I_B.
    auto updR = [&](unsigned k, std::size_t a, std::size_t b) -> unsigned {
        if (!needR) return 0;
        if (k == 0) return A.final_[a] ? 1 : 0;
        return B.final_[b] ? 0 : 1;
    };
    auto updL = [&](unsigned k, std::size_t a, std::size_t b) -> unsigned {
        if (!needL) return 0;
        if (k == 0) return A.initial[a] ? 1 : 0;
        return B.initial[b] ? 0 : 1;
    };
    for (std::size_t a = 0; a < A.states; ++a)
        for (std::size_t b = 0; b < B.states; ++b)
            for (unsigned kR = 0; kR < fR; ++kR)
                for (unsigned kL = 0; kL < fL; ++kL) {
                    const auto v = id(a, b, kR, kL);
                    P.final_[v] = needR ? (kR == 1 && B.final_[b]) : (A.final_[a] && B.final_[b]);
                    P.initial[v] = needL ? (kL == 1 && B.initial[b]) : (A.initial[a] && B.initial[b]);
                }

    const std::uint32_t L = A.letters();
    std::vector<std::vector<const ZAutomaton::Edge*>> byA(L), byB(L);
    for (const auto& e : A.edges) byA[e.letter].push_back(&e);
    for (const auto& e : B.edges) byB[e.letter].push_back(&e);
    for (std::uint32_t l = 0; l < L; ++l)
        for (const auto* ea : byA[l])
            for (const auto* eb : byB[l])
                for (unsigned kR = 0; kR < fR; ++kR)
                    for (unsigned kL2 = 0; kL2 < fL; ++kL2) {
                        const unsigned kR2 = updR(kR, ea->from, eb->from);
                        const unsigned kL = updL(kL2, ea->to, eb->to);
                        P.edges.push_back({id(ea->from, eb->from, kR, kL), l, id(ea->to, eb->to, kR2, kL2)});
                    }
    return trim(P);
}

ZAutomaton project(const ZAutomaton& A, unsigned track) {
    if (track >= A.tracks) throw std::domain_error("project: no such track");
    ZAutomaton R;
    R.q = A.q;
    R.tracks = 1;
    R.offsets = {A.offsets[track]};
    R.states = A.states;
    R.initial = A.initial;
    R.final_ = A.final_;
    for (const auto& e : A.edges) R.edges.push_back({e.from, A.digit(e.letter, track), e.to});
    std::sort(R.edges.begin(), R.edges.end(), [](const auto& x, const auto& y) {
        return std::tie(x.from, x.letter, x.to) < std::tie(y.from, y.letter, y.to);
    });
    R.edges.erase(std::unique(R.edges.begin(), R.edges.end(),
                              [](const auto& x, const auto& y) {
                                  return x.from == y.from && x.letter == y.letter && x.to == y.to;
                              }),
                  R.edges.end());
    return R;
}

ZAutomaton full_automaton(unsigned q, unsigned tracks) {
    ZAutomaton R;
    R.q = q;
    R.tracks = tracks;
    R.offsets.assign(tracks, 0);
    R.states = 1;
    R.initial = {1};
    R.final_ = {1};
    for (std::uint32_t l = 0; l < R.letters(); ++l) R.edges.push_back({0, l, 0});
    return R;
}

ZAutomaton diagonal_automaton(unsigned q) {
    ZAutomaton R;
    R.q = q;
    R.tracks = 2;
    R.offsets = {0, 0};
    R.states = 1;
    R.initial = {1};
    R.final_ = {1};
    for (Symbol a = 0; a < q; ++a) R.edges.push_back({0, a * q + a, 0});
    return R;
}

ZAutomaton differs_automaton(unsigned q, unsigned tracks, unsigned i, unsigned j, const std::vector<Pos>& offsets) {
    if (i >= tracks || j >= tracks || offsets.size() != tracks) throw std::domain_error("differs: bad tracks");
    if (offsets[i] != offsets[j]) throw std::domain_error("differs: compared tracks need equal offsets");
    ZAutomaton R;
    R.q = q;
    R.tracks = tracks;
    R.offsets = offsets;
    R.states = 2;
    R.initial = {1, 0};
    R.final_ = {0, 1};
    for (std::uint32_t l = 0; l < R.letters(); ++l) {
        R.edges.push_back({0, l, 0});
        R.edges.push_back({1, l, 1});
        if (R.digit(l, i) != R.digit(l, j)) R.edges.push_back({0, l, 1});
    }
    return R;
}

ZAutomaton slider_relation_automaton(const BlockRule& chi) {
    if (!chi.is_bijective()) throw std::domain_error("slider relation needs a bijective block rule");
    // A representation is a bi-infinite chain of carries C_s (the m-1 cells at
    // [s, s+m-1) when the forward or backward sweep passes s) with
    // chi(C_s y_{s+m-1}) = z_s C_{s+1}.
    const unsigned q = chi.q();
    ZAutomaton R;
    R.q = q;
    R.tracks = 2;
    R.offsets = {static_cast<Pos>(chi.m()) - 1, 0};
    R.states = chi.carries();
    R.initial.assign(R.states, 1);
    R.final_.assign(R.states, 1);
    for (Index c = 0; c < chi.carries(); ++c)
        for (Symbol y = 0; y < q; ++y) {
            auto [z, next] = chi.step(c, y);
            R.edges.push_back({static_cast<std::uint32_t>(c), y * q + z, static_cast<std::uint32_t>(next)});
        }
    return R;
}

ZAutomaton sweeper_relation_automaton(const BlockRule& chi) {
    // The limit run is a chain of carries c producing z. A run born at s starts
    // with carry y_[s, s+m-1) (the buffered y letters); `pending` follows one
    // such run until it merges with the chain, which sets `flag`. Merges must
    // recur infinitely far to the left.
    const unsigned q = chi.q();
    const Index Qc = chi.carries();
    const Index none = Qc;
    check_size(Qc * Qc * (Qc + 1) * 2, "sweeper automaton");
    ZAutomaton R;
    R.q = q;
    R.tracks = 2;
    R.offsets = {static_cast<Pos>(chi.m()) - 1, 0};
    R.states = Qc * Qc * (Qc + 1) * 2;
    auto id = [&](Index c, Index yb, Index p, Index fl) {
        return static_cast<std::uint32_t>(((c * Qc + yb) * (Qc + 1) + p) * 2 + fl);
    };
    R.initial.assign(R.states, 0);
    R.final_.assign(R.states, 1);
    for (Index c = 0; c < Qc; ++c)
        for (Index yb = 0; yb < Qc; ++yb)
            for (Index p = 0; p <= Qc; ++p) R.initial[id(c, yb, p, 1)] = 1;

    for (Index c = 0; c < Qc; ++c)
        for (Index yb = 0; yb < Qc; ++yb)
            for (Index p = 0; p <= Qc; ++p)
                for (Index fl = 0; fl < 2; ++fl)
                    for (Symbol y = 0; y < q; ++y) {
                        auto [z, c2] = chi.step(c, y);
                        const Index yb2 = (yb * q + y) % Qc;
                        const std::uint32_t from = id(c, yb, p, fl), letter = y * q + z;
                        std::vector<Index> starts{p};
                        if (p == none) starts.push_back(yb);
                        for (Index pe : starts) {
                            if (pe == none) {
                                R.edges.push_back({from, letter, id(c2, yb2, none, 0)});
                                continue;
                            }
                            const Index d2 = chi.step(pe, y).second;
                            if (d2 == c2)
                                R.edges.push_back({from, letter, id(c2, yb2, none, 1)});
                            else
                                R.edges.push_back({from, letter, id(c2, yb2, d2, 0)});
                        }
                    }
    return R;
}

ZAutomaton graph_mismatch_automaton(const LocalRule& f) {
    // Phase 0 keeps the last w-1 letters of y; a step whose window image differs
    // from z may jump to the accepting sink.
    const unsigned q = f.q;
    const Index buf = ipow(q, f.width - 1);
    ZAutomaton R;
    R.q = q;
    R.tracks = 2;
    R.offsets = {f.right_end(), 0};
    R.states = buf + 1;
    const auto sink = static_cast<std::uint32_t>(buf);
    R.initial.assign(R.states, 1);
    R.initial[sink] = 0;
    R.final_.assign(R.states, 0);
    R.final_[sink] = 1;
    for (Index u = 0; u < buf; ++u)
        for (Symbol y = 0; y < q; ++y)
            for (Symbol z = 0; z < q; ++z) {
                const Index window = u * q + y;
                R.edges.push_back({static_cast<std::uint32_t>(u), y * q + z, static_cast<std::uint32_t>(window % buf)});
                if (f.table[window] != z) R.edges.push_back({static_cast<std::uint32_t>(u), y * q + z, sink});
            }
    for (std::uint32_t l = 0; l < q * q; ++l) R.edges.push_back({sink, l, sink});
    return R;
}

bool is_function(const ZAutomaton& A0) {
    if (A0.tracks != 2) throw std::domain_error("is_function expects a two-track automaton");
    const ZAutomaton A = trim(A0);
    const Pos oy = A.offsets[0], oz = A.offsets[1];
    const std::vector<Pos> off3{oy, oz, oz};
    // (y, z, z') with (y, z) and (y, z') both accepted and z != z' somewhere
    const ZAutomaton fiber = intersect(lift(A, 3, {0, 1}, off3), lift(A, 3, {0, 2}, off3));
    return is_empty(intersect(fiber, differs_automaton(A.q, 3, 1, 2, off3)));
}

bool is_slider_rule_for(const BlockRule& chi, const LocalRule& f) {
    if (!chi.is_bijective()) throw std::domain_error("is_slider_rule_for needs a bijective block rule");
    if (chi.q() != f.q) throw std::domain_error("block rule and CA alphabets differ");
    // the slider relation projects onto all configurations, so being a function
    // inside graph(f) makes it equal to graph(f)
    const ZAutomaton S = slider_relation_automaton(chi);
    return is_function(S) && is_empty(intersect(S, graph_mismatch_automaton(f)));
}

bool sweeper_defines_function(const BlockRule& chi) { return is_function(sweeper_relation_automaton(chi)); }

}  // namespace casweep
