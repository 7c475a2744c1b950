#include "nakayama/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nakayama {

const char* to_string(KupischViolation v) {
    switch (v) {
    case KupischViolation::LastNotOne: return "LastNotOne";
    case KupischViolation::EntryBelowTwo: return "EntryBelowTwo";
    case KupischViolation::DropTooSteep: return "DropTooSteep";
    case KupischViolation::OverhangsQuiver: return "OverhangsQuiver";
    }
    return "?";
}

KupischSeries KupischSeries::validate(std::vector<int> entries) {
    if (entries.empty())
        throw InvalidKupisch(KupischViolation::LastNotOne, "empty series");
    const int n = static_cast<int>(entries.size()) - 1;
    if (entries[static_cast<std::size_t>(n)] != 1)
        throw InvalidKupisch(KupischViolation::LastNotOne,
                             "c_" + std::to_string(n) + " = " +
                                 std::to_string(entries[static_cast<std::size_t>(n)]));
    for (int i = 0; i <= n; ++i) {
        const int ci = entries[static_cast<std::size_t>(i)];
        if (i < n && ci < 2)
            throw InvalidKupisch(KupischViolation::EntryBelowTwo,
                                 "c_" + std::to_string(i) + " = " + std::to_string(ci));
        if (ci + i > n + 1)
            throw InvalidKupisch(KupischViolation::OverhangsQuiver,
                                 "c_" + std::to_string(i) + " + " + std::to_string(i) +
                                     " > " + std::to_string(n + 1));
        if (i < n && entries[static_cast<std::size_t>(i + 1)] < ci - 1)
            throw InvalidKupisch(KupischViolation::DropTooSteep,
                                 "c_" + std::to_string(i + 1) + " < c_" +
                                     std::to_string(i) + " - 1");
    }
    return KupischSeries(std::move(entries));
}

KupischSeries KupischSeries::parse(std::string_view text) {
    std::string buf(text);
    std::replace(buf.begin(), buf.end(), ',', ' ');
    std::istringstream in(buf);
    std::vector<int> entries;
    int v = 0;
    while (in >> v)
        entries.push_back(v);
    if (!in.eof()) {
        std::string rest;
        in.clear();
        in >> rest;
        throw ParseError("bad Kupisch entry '" + rest + "'");
    }
    if (entries.empty())
        throw ParseError("empty Kupisch series");
    return validate(std::move(entries));
}

KupischSeries KupischSeries::hereditary(int simples) {
    std::vector<int> entries(static_cast<std::size_t>(simples));
    for (int i = 0; i < simples; ++i)
        entries[static_cast<std::size_t>(i)] = simples - i;
    return validate(std::move(entries));
}

std::string KupischSeries::str() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i > 0)
            out.push_back(',');
        out += std::to_string(entries_[i]);
    }
    return out;
}

UniserialModule UniserialModule::parse(std::string_view text) {
    std::size_t b = 0;
    std::size_t e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1])))
        --e;
    const std::string_view body = text.substr(b, e - b);
    if (body == "0")
        return zero();
    int top = 0;
    int length = 0;
    char m = 0;
    char open = 0;
    char comma = 0;
    char close = 0;
    std::istringstream in{std::string(body)};
    if (in >> m >> open >> top >> comma >> length >> close && (m == 'M' || m == 'm') &&
        open == '(' && comma == ',' && close == ')' && in.peek() == EOF) {
        if (top < 0 || length < 1)
            throw ParseError("module indices out of range in '" + std::string(body) + "'");
        return UniserialModule{top, length};
    }
    throw ParseError("expected \"M(i,k)\" or \"0\", got '" + std::string(body) + "'");
}

std::string UniserialModule::str() const {
    if (is_zero())
        return "0";
    return "M(" + std::to_string(top) + "," + std::to_string(length) + ")";
}

Algebra::Algebra(KupischSeries series) : series_(std::move(series)) {
    const int n = simples() - 1;
    d_.resize(static_cast<std::size_t>(n + 1));
    for (int j = 0; j <= n; ++j) {
        // min-form with c_{<0} := 0
        int k = 1;
        while (j - k >= 0 && k < series_[j - k])
            ++k;
        d_[static_cast<std::size_t>(j)] = k;

        // max-form cross-check: d_j = max{j-a+1 : 0 <= a <= j, c_a >= j-a+1}
        int best = 0;
        for (int a = 0; a <= j; ++a)
            if (series_[a] >= j - a + 1)
                best = std::max(best, j - a + 1);
        if (best != k)
            throw std::logic_error("injective dimension vector forms disagree at j = " +
                                   std::to_string(j));
    }
}

UniserialModule Algebra::simple(int i) const { return UniserialModule{i, 1}; }

UniserialModule Algebra::projective(int i) const { return UniserialModule{i, series_[i]}; }

UniserialModule Algebra::injective(int j) const {
    const int dj = d_at(j);
    return UniserialModule{j - dj + 1, dj};
}

UniserialModule Algebra::radical(int i) const {
    if (series_[i] == 1)
        return UniserialModule::zero();
    return UniserialModule{i + 1, series_[i] - 1};
}

void Algebra::require_valid(const UniserialModule& m) const {
    if (m.is_zero()) {
        if (m.top != 0)
            throw BadModule("zero module must be encoded as M(0,0)");
        return;
    }
    const int n = simples() - 1;
    if (m.top < 0 || m.top > n)
        throw BadModule(m.str() + ": top vertex outside [0," + std::to_string(n) + "]");
    if (m.length < 1 || m.length > series_[m.top])
        throw BadModule(m.str() + ": length outside [1,c_" + std::to_string(m.top) + " = " +
                        std::to_string(series_[m.top]) + "]");
}

bool Algebra::is_projective(const UniserialModule& m) const {
    return !m.is_zero() && m.length == series_[m.top];
}

bool Algebra::is_injective(const UniserialModule& m) const {
    return !m.is_zero() && m.length == d_at(m.socle());
}

UniserialModule Algebra::syzygy(const UniserialModule& m) const {
    require_valid(m);
    if (m.is_zero() || m.length == series_[m.top])
        return UniserialModule::zero();
    return UniserialModule{m.top + m.length, series_[m.top] - m.length};
}

UniserialModule Algebra::cosyzygy(const UniserialModule& m) const {
    require_valid(m);
    if (m.is_zero())
        return UniserialModule::zero();
    const int j = m.socle();
    const int dj = d_at(j);
    if (m.length == dj)
        return UniserialModule::zero();
    return UniserialModule{m.top + m.length - dj, dj - m.length};
}

int Algebra::proj_dim(const UniserialModule& m) const {
    int dim = 0;
    for (UniserialModule x = syzygy(m); !x.is_zero(); x = syzygy(x))
        ++dim;
    return dim;
}

int Algebra::inj_dim(const UniserialModule& m) const {
    int dim = 0;
    for (UniserialModule x = cosyzygy(m); !x.is_zero(); x = cosyzygy(x))
        ++dim;
    return dim;
}

InjDimClass Algebra::id_at_most_one(const UniserialModule& m) const {
    require_valid(m);
    if (m.is_zero())
        throw ZeroModule("id_at_most_one: zero module");
    const int dj = d_at(m.socle());
    if (m.length == dj)
        return InjDimClass::Injective;
    if (dj - m.length == d_at(m.top - 1))
        return InjDimClass::DimOne;
    return InjDimClass::DimAtLeastTwo;
}

int Algebra::count_proj_inj_dim_one() const {
    int count = 0;
    for (int i = 0; i < simples(); ++i)
        if (id_at_most_one(projective(i)) == InjDimClass::DimOne)
            ++count;
    return count;
}

int Algebra::count_inj_proj_dim_one() const {
    int count = 0;
    for (int j = 0; j < simples(); ++j)
        if (proj_dim(injective(j)) == 1)
            ++count;
    return count;
}

int Algebra::radical_id_le_one_count() const {
    int count = 0;
    for (int i = 0; i < simples(); ++i) {
        const UniserialModule r = radical(i);
        if (r.is_zero() || id_at_most_one(r) != InjDimClass::DimAtLeastTwo)
            ++count;
    }
    return count;
}

int Algebra::ext1_jj_dim() const { return simples() - radical_id_le_one_count(); }

int Algebra::hom_dim(const UniserialModule& ma, const UniserialModule& mb) const {
    require_valid(ma);
    require_valid(mb);
    if (ma.is_zero() || mb.is_zero())
        return 0;
    // A nonzero map factors as quotient-of-ma onto submodule-of-mb; both
    // descriptions force the image to be M(ma.top, mb.top + mb.length - ma.top).
    const bool nonzero = mb.top <= ma.top && ma.top <= mb.top + mb.length - 1 &&
                         mb.top + mb.length <= ma.top + ma.length;
    return nonzero ? 1 : 0;
}

int Algebra::ext1_dim(const UniserialModule& ma, const UniserialModule& mb) const {
    require_valid(ma);
    require_valid(mb);
    if (ma.is_zero() || mb.is_zero() || is_projective(ma))
        return 0;
    const UniserialModule cover = projective(ma.top);
    return hom_dim(syzygy(ma), mb) - hom_dim(cover, mb) + hom_dim(ma, mb);
}

int Algebra::ext_dim(const UniserialModule& ma, const UniserialModule& mb, int degree) const {
    if (degree < 1)
        throw std::invalid_argument("ext_dim: degree must be >= 1");
    UniserialModule m = ma;
    for (int l = 1; l < degree && !m.is_zero(); ++l)
        m = syzygy(m);
    return ext1_dim(m, mb);
}

int Algebra::global_dimension() const {
    int gd = 0;
    for (int i = 0; i < simples(); ++i)
        gd = std::max(gd, proj_dim(simple(i)));
    return gd;
}

int inj_pd1_formula(const DyckPath& path) {
    const int n = path.semilength();
    if (path.empty())
        return 0;
    const AscentDescent runs = ascent_descent(path);
    const int l = runs.blocks();
    if (l == 1)
        return n; // u^n d^n
    const std::vector<int> k = valley_levels(runs);
    int total = runs.descents[0] - 1;
    for (int i = 1; i + 1 < l; ++i)
        total += std::max(runs.descents[static_cast<std::size_t>(i)] -
                              k[static_cast<std::size_t>(i)] - 1,
                          0);
    total += runs.ascents[static_cast<std::size_t>(l - 1)] - 1;
    return total;
}

int inj_pd1_formula(const Permutation& p) { return fixed_points_formula(p); }

int radical_id_le1_formula(const DyckPath& path) {
    const int n = path.semilength();
    if (path.empty())
        return 1;
    const AscentDescent runs = ascent_descent(path);
    const int l = runs.blocks();
    if (l == 1)
        return n + 1; // hereditary: every e_i J has id <= 1
    const std::vector<int> k = valley_levels(runs);
    int total = runs.descents[0];
    for (int i = 1; i + 1 < l; ++i)
        total += std::max(runs.descents[static_cast<std::size_t>(i)] -
                              k[static_cast<std::size_t>(i)],
                          0);
    total += runs.ascents[static_cast<std::size_t>(l - 1)];
    return total;
}

int radical_id_le1_formula(const Permutation& p) {
    if (!is_321_avoiding(p))
        throw Not321Avoiding("radical_id_le1_formula: " + p.str());
    if (p.is_identity())
        return p.size() + 1;
    return connectivity_formula(p) + 1;
}

} // namespace nakayama
