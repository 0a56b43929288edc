#include "enr/lattice/isometry.hpp"

#include <algorithm>
#include <cstdlib>

namespace enr {

namespace {

long dot(const std::vector<long>& a, const std::vector<long>& b) {
    long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<long> mat_vec(const std::vector<std::vector<long>>& m, const std::vector<long>& v) {
    std::vector<long> out(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
    return out;
}

struct Search {
    const std::vector<std::vector<long>>& target;
    std::vector<size_t> order;
    std::vector<std::vector<const std::vector<long>*>> cands;  // per target index
    std::vector<std::vector<const std::vector<long>*>> images;
    std::vector<const std::vector<long>*> chosen, chosen_img;

    bool run(size_t k) {
        if (k == order.size()) return true;
        const size_t j = order[k];
        for (size_t c = 0; c < cands[j].size(); ++c) {
            const auto* v = cands[j][c];
            bool ok = true;
            for (size_t kk = 0; kk < k && ok; ++kk)
                ok = dot(*v, *chosen_img[order[kk]]) == target[j][order[kk]];
            if (!ok) continue;
            chosen[j] = v;
            chosen_img[j] = images[j][c];
            if (run(k + 1)) return true;
        }
        return false;
    }
};

}  // namespace

IsometryData::IsometryData(const QuadLattice& l, long bound) : det_(l.det()) {
    Inertia s = l.signature();
    if (s.positive == l.rank())
        sign_ = 1;
    else if (s.negative == l.rank())
        sign_ = -1;
    else
        throw IndefiniteLattice("isometry testing needs a definite lattice");
    gram_ = l.int_gram();
    LLLResult r = lll_reduce(Rational(sign_) * l.gram());
    w_ = r.u;
    const size_t n = l.rank();
    red_.assign(n, std::vector<long>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) red_[i][j] = to_i64(r.gram(i, j).num());
    bound_ = std::max(bound, max_diagonal());
    sv_ = enr::short_vectors(red_, bound_);
    for (const auto& v : sv_.vectors) sv_images_.push_back(mat_vec(red_, v));
}

long IsometryData::max_diagonal() const {
    long m = 0;
    for (size_t i = 0; i < red_.size(); ++i) m = std::max(m, red_[i][i]);
    return m;
}

long IsometryData::min_norm() const {
    long m = bound_ + 1;
    for (long v : sv_.norms) m = std::min(m, v);
    return m;
}

std::map<long, size_t> IsometryData::theta() const {
    std::map<long, size_t> t;
    for (long v : sv_.norms) ++t[v];
    return t;
}

IsometryData::Fingerprint IsometryData::fingerprint(const std::vector<long>& v) const {
    std::map<std::pair<long, long>, long> counts;
    for (size_t i = 0; i < sv_.vectors.size(); ++i) counts[{sv_.norms[i], std::labs(dot(v, sv_images_[i]))}] += 2;
    Fingerprint fp;
    for (const auto& [k, c] : counts) fp.push_back({k.first, k.second, c});
    return fp;
}

const std::vector<IsometryData::Fingerprint>& IsometryData::short_vector_fingerprints() const {
    if (!fps_) {
        auto f = std::make_shared<std::vector<Fingerprint>>();
        for (const auto& v : sv_.vectors) f->push_back(fingerprint(v));
        fps_ = f;
    }
    return *fps_;
}

std::optional<IntMatrix> isometry_test(const IsometryData& a, const IsometryData& b) {
    if (a.rank() != b.rank() || a.sign() != b.sign() || a.det() != b.det()) return std::nullopt;
    if (a.bound() != b.bound()) throw std::invalid_argument("isometry data computed with different bounds");
    if (b.max_diagonal() > a.bound()) throw std::invalid_argument("short vector bound too small for the target");
    if (a.theta() != b.theta()) return std::nullopt;
    const size_t n = a.rank();
    const auto& target = b.reduced();
    const auto& fps = a.short_vector_fingerprints();
    const auto& sv = a.short_vectors();

    std::vector<std::vector<long>> pool, pool_img;
    std::vector<size_t> pool_src;
    for (size_t i = 0; i < sv.vectors.size(); ++i) {
        std::vector<long> neg = sv.vectors[i];
        for (auto& x : neg) x = -x;
        pool.push_back(sv.vectors[i]);
        pool.push_back(neg);
        pool_src.push_back(i);
        pool_src.push_back(i);
    }
    for (const auto& v : pool) pool_img.push_back(mat_vec(a.reduced(), v));

    Search s{target, {}, std::vector<std::vector<const std::vector<long>*>>(n),
             std::vector<std::vector<const std::vector<long>*>>(n), std::vector<const std::vector<long>*>(n),
             std::vector<const std::vector<long>*>(n)};
    for (size_t j = 0; j < n; ++j) {
        std::vector<long> e(n, 0);
        e[j] = 1;
        auto fj = b.fingerprint(e);
        for (size_t p = 0; p < pool.size(); ++p) {
            const size_t i = pool_src[p];
            if (sv.norms[i] != target[j][j] || fps[i] != fj) continue;
            s.cands[j].push_back(&pool[p]);
            s.images[j].push_back(&pool_img[p]);
        }
        if (s.cands[j].empty()) return std::nullopt;
    }
    s.order.resize(n);
    for (size_t j = 0; j < n; ++j) s.order[j] = j;
    std::stable_sort(s.order.begin(), s.order.end(),
                     [&](size_t x, size_t y) { return s.cands[x].size() < s.cands[y].size(); });
    // -1 is always an automorphism, so the first image can be taken up to sign.
    {
        auto& c0 = s.cands[s.order[0]];
        auto& i0 = s.images[s.order[0]];
        std::vector<const std::vector<long>*> c1, i1;
        for (size_t c = 0; c < c0.size(); c += 2) {
            c1.push_back(c0[c]);
            i1.push_back(i0[c]);
        }
        c0 = c1;
        i0 = i1;
    }
    if (!s.run(0)) return std::nullopt;

    IntMatrix x(n, n);
    for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k) x(j, k) = (*s.chosen[j])[k];
    QMatrix u = inverse(to_rational(b.transform())) * to_rational(x * a.transform());
    IntMatrix ui = to_integer(u);
    if (!(ui * a.gram() * ui.transpose() == b.gram())) throw std::logic_error("isometry search produced a wrong transform");
    return ui;
}

std::optional<IntMatrix> isometry_test(const QuadLattice& a, const QuadLattice& b) {
    if (a.rank() != b.rank() || a.det() != b.det()) return std::nullopt;
    if (a.rank() == 0) return IntMatrix(0, 0);
    Rational den(lcm(common_denominator(a.gram()), common_denominator(b.gram())));
    QuadLattice as = a.scaled(den), bs = b.scaled(den);
    IsometryData da(as), db(bs);
    const long bound = std::max(da.bound(), db.bound());
    if (da.bound() != bound) da = IsometryData(as, bound);
    if (db.bound() != bound) db = IsometryData(bs, bound);
    return isometry_test(da, db);
}

}  // namespace enr
