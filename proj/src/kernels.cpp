#include "casweep/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace casweep::kernels {

bool parallel_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace {

struct StairGeometry {
    unsigned q, m, r;
    Index pre;     // q^(m+r): free cells [-r, m) and also v-prefix [m, 2m+r)
    Index tail;    // q^(m-r): the part of v the image never sees
    Index wspace;  // q^(2m)
};

StairGeometry geometry(const LocalRule& fr, unsigned m) {
    const int r = -static_cast<int>(fr.anchor);
    if (r < 0 || fr.width != static_cast<unsigned>(2 * r + 1)) throw std::domain_error("stair kernels need a radius-form rule");
    if (static_cast<unsigned>(r) > m) throw std::domain_error("stair length requires radius <= m");
    const auto ur = static_cast<unsigned>(r);
    return {fr.q, m, ur, ipow(fr.q, m + ur), ipow(fr.q, m - ur), ipow(fr.q, 2 * m)};
}

// Sorted distinct images w for one v-prefix.
void images_for_prefix(const LocalRule& fr, const StairGeometry& g, Index vp, std::vector<Index>& out) {
    const unsigned len = 2 * (g.m + g.r);
    const unsigned win = 2 * g.r + 1;
    const Index winmod = ipow(g.q, win);
    Word x(len);
    out.clear();
    out.reserve(static_cast<std::size_t>(g.pre));
    const Word tailw = word_of_index(vp, g.q, g.m + g.r);
    std::copy(tailw.begin(), tailw.end(), x.begin() + (g.m + g.r));
    for (Index F = 0; F < g.pre; ++F) {
        Index v = F;
        for (unsigned k = g.m + g.r; k-- > 0;) {
            x[k] = static_cast<Symbol>(v % g.q);
            v /= g.q;
        }
        Index idx = 0, w = 0;
        for (unsigned k = 0; k < len; ++k) {
            idx = (idx * g.q + x[k]) % winmod;
            if (k + 1 >= win) w = w * g.q + fr.table[idx];
        }
        out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
}

void emit_prefix(const StairGeometry& g, Index vp, const std::vector<Index>& ws, std::vector<Index>& dst) {
    for (Index s = 0; s < g.tail; ++s) {
        const Index v = vp * g.tail + s;
        for (Index w : ws) dst.push_back(v * g.wspace + w);
    }
}

}  // namespace

std::vector<Index> stair_list_serial(const LocalRule& fr, unsigned m) {
    const StairGeometry g = geometry(fr, m);
    std::vector<Index> all, ws;
    for (Index vp = 0; vp < g.pre; ++vp) {
        images_for_prefix(fr, g, vp, ws);
        emit_prefix(g, vp, ws, all);
    }
    return all;
}

std::vector<Index> stair_list_parallel(const LocalRule& fr, unsigned m) {
    const StairGeometry g = geometry(fr, m);
    std::vector<std::vector<Index>> parts(static_cast<std::size_t>(g.pre));
#pragma omp parallel
    {
        std::vector<Index> ws;
#pragma omp for schedule(dynamic, 16)
        for (std::int64_t vp = 0; vp < static_cast<std::int64_t>(g.pre); ++vp) {
            images_for_prefix(fr, g, static_cast<Index>(vp), ws);
            emit_prefix(g, static_cast<Index>(vp), ws, parts[static_cast<std::size_t>(vp)]);
        }
    }
    std::size_t total = 0;
    for (const auto& p : parts) total += p.size();
    std::vector<Index> all;
    all.reserve(total);
    for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    return all;
}

Index stair_count_serial(const LocalRule& fr, unsigned m) {
    const StairGeometry g = geometry(fr, m);
    std::vector<Index> ws;
    Index n = 0;
    for (Index vp = 0; vp < g.pre; ++vp) {
        images_for_prefix(fr, g, vp, ws);
        n += ws.size();
    }
    return n * g.tail;
}

Index stair_count_parallel(const LocalRule& fr, unsigned m) {
    const StairGeometry g = geometry(fr, m);
    Index n = 0;
#pragma omp parallel reduction(+ : n)
    {
        std::vector<Index> ws;
#pragma omp for schedule(dynamic, 16)
        for (std::int64_t vp = 0; vp < static_cast<std::int64_t>(g.pre); ++vp) {
            images_for_prefix(fr, g, static_cast<Index>(vp), ws);
            n += ws.size();
        }
    }
    return n * g.tail;
}

// ---------------------------------------------------------------------------

namespace {

struct MaskGeometry {
    unsigned q, m, r;
    Index sspace, tspace, pspace, uspace, entries;
};

MaskGeometry mask_geometry(const LocalRule& fr, unsigned m, Index cap = Index{1} << 26) {
    const int r = -static_cast<int>(fr.anchor);
    if (r < 1 || fr.width != static_cast<unsigned>(2 * r + 1)) throw std::domain_error("mask kernels need a radius-form rule with r >= 1");
    if (fr.q > 64) throw std::domain_error("mask kernels support alphabets up to 64 symbols");
    const auto ur = static_cast<unsigned>(r);
    MaskGeometry g{fr.q, m, ur, ipow(fr.q, m), ipow(fr.q, 2 * m), ipow(fr.q, m + ur), ipow(fr.q, ur), 0};
    g.entries = g.sspace * g.tspace * fr.q;
    if (g.entries > cap) throw ResourceError("strong radius check needs " + std::to_string(g.entries) + " mask entries");
    return g;
}

// All windows with a fixed s; writes only entries keyed by s.
void masks_for_s(const LocalRule& fr, const MaskGeometry& g, Index s, std::vector<std::uint64_t>& masks) {
    const unsigned len = 2 * g.m + 2 * g.r + 1;
    const unsigned win = 2 * g.r + 1;
    const Index winmod = ipow(g.q, win);
    Word x(len);
    const Word sw = word_of_index(s, g.q, g.m);
    std::copy(sw.begin(), sw.end(), x.begin() + (g.m + g.r + 1));
    for (Index P = 0; P < g.pspace; ++P) {
        const Word pw = word_of_index(P, g.q, g.m + g.r);
        std::copy(pw.begin(), pw.end(), x.begin());
        for (Symbol a = 0; a < g.q; ++a) {
            x[g.m + g.r] = a;
            for (Index U = 0; U < g.uspace; ++U) {
                Index u = U;
                for (unsigned k = len; k-- > len - g.r;) {
                    x[k] = static_cast<Symbol>(u % g.q);
                    u /= g.q;
                }
                Index idx = 0, t = 0;
                Symbol b = 0;
                for (unsigned k = 0; k < len; ++k) {
                    idx = (idx * g.q + x[k]) % winmod;
                    if (k + 1 < win) continue;
                    const Symbol img = fr.table[idx];
                    if (k + 1 == win)
                        b = img;
                    else
                        t = t * g.q + img;
                }
                masks[(s * g.tspace + t) * g.q + b] |= std::uint64_t{1} << a;
            }
        }
    }
}

}  // namespace

std::vector<std::uint64_t> strong_masks_serial(const LocalRule& fr, unsigned m) {
    const MaskGeometry g = mask_geometry(fr, m);
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(g.entries), 0);
    for (Index s = 0; s < g.sspace; ++s) masks_for_s(fr, g, s, masks);
    return masks;
}

std::vector<std::uint64_t> strong_masks_parallel(const LocalRule& fr, unsigned m) {
    const MaskGeometry g = mask_geometry(fr, m);
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(g.entries), 0);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(g.sspace); ++s) masks_for_s(fr, g, static_cast<Index>(s), masks);
    return masks;
}

// ---------------------------------------------------------------------------

namespace {

bool represents(const BlockRule& chi, const EpConfig& y, const EpConfig& fy, Pos i, Index w) {
    const auto m = static_cast<Pos>(chi.m());
    const Pos H = std::max(i + m, y.center_end());
    Word mid = word_of_index(w, chi.q(), chi.m());
    const Word rest = y.cells(i + m, H);
    mid.insert(mid.end(), rest.begin(), rest.end());
    const EpConfig x = splice(fy, i, mid, y.cells(H, H + static_cast<Pos>(y.right_period.size())));
    auto [yy, zz] = representation_eval(chi, {x, i});
    return ep_equal(yy, y) && ep_equal(zz, fy);
}

}  // namespace

Index count_representations_serial(const BlockRule& chi, const LocalRule& f, const EpConfig& y, Pos i) {
    if (!chi.is_bijective()) throw std::domain_error("count_representations requires a bijective block rule");
    const EpConfig fy = apply_ep(f, y);
    Index n = 0;
    for (Index w = 0; w < chi.size(); ++w) n += represents(chi, y, fy, i, w);
    return n;
}

Index count_representations_parallel(const BlockRule& chi, const LocalRule& f, const EpConfig& y, Pos i) {
    if (!chi.is_bijective()) throw std::domain_error("count_representations requires a bijective block rule");
    const EpConfig fy = apply_ep(f, y);
    Index n = 0;
#pragma omp parallel for reduction(+ : n) schedule(dynamic, 8)
    for (std::int64_t w = 0; w < static_cast<std::int64_t>(chi.size()); ++w)
        n += represents(chi, y, fy, i, static_cast<Index>(w));
    return n;
}

}  // namespace casweep::kernels
