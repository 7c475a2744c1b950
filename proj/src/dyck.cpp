#include "nakayama/dyck.hpp"

#include <array>

namespace nakayama {

namespace {

void check_lattice_word(const std::vector<Step>& steps) {
    int height = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        height += steps[i] == Step::Up ? 1 : -1;
        if (height < 0)
            throw NonLatticeWord("prefix of length " + std::to_string(i + 1) +
                                 " dips below the axis");
    }
    if (height != 0)
        throw NonLatticeWord("unbalanced word: final height " + std::to_string(height));
}

} // namespace

DyckPath DyckPath::parse(std::string_view text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
        case 'U': case 'u': case '1': steps.push_back(Step::Up); break;
        case 'D': case 'd': case '0': steps.push_back(Step::Down); break;
        default:
            throw BadAlphabet(std::string("unexpected character '") + text[i] +
                              "' at position " + std::to_string(i));
        }
    }
    return from_steps(std::move(steps));
}

DyckPath DyckPath::from_steps(std::vector<Step> steps) {
    check_lattice_word(steps);
    return DyckPath(std::move(steps));
}

std::string DyckPath::str() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_)
        out.push_back(s == Step::Up ? 'U' : 'D');
    return out;
}

AscentDescent ascent_descent(const DyckPath& path) {
    if (path.empty())
        throw EmptyPath("ascent_descent: empty path");
    AscentDescent runs;
    const auto& steps = path.steps();
    std::size_t i = 0;
    while (i < steps.size()) {
        int ups = 0;
        while (i < steps.size() && steps[i] == Step::Up) { ++ups; ++i; }
        int downs = 0;
        while (i < steps.size() && steps[i] == Step::Down) { ++downs; ++i; }
        runs.ascents.push_back(ups);
        runs.descents.push_back(downs);
    }
    return runs;
}

DyckPath path_from_runs(const AscentDescent& runs) {
    std::vector<Step> steps;
    for (int b = 0; b < runs.blocks(); ++b) {
        steps.insert(steps.end(), runs.ascents[b], Step::Up);
        steps.insert(steps.end(), runs.descents[b], Step::Down);
    }
    return DyckPath::from_steps(std::move(steps));
}

PartialSumCode partial_code(const DyckPath& path) {
    const AscentDescent runs = ascent_descent(path);
    PartialSumCode code;
    int a = 0;
    int d = 0;
    for (int b = 0; b + 1 < runs.blocks(); ++b) {
        a += runs.ascents[b];
        d += runs.descents[b];
        code.ascent_code.push_back(a);
        code.descent_code.push_back(d);
    }
    return code;
}

std::vector<int> valley_levels(const AscentDescent& runs) {
    std::vector<int> k(runs.blocks());
    k[0] = 1;
    for (int i = 1; i < runs.blocks(); ++i)
        k[i] = k[i - 1] + runs.ascents[i - 1] - runs.descents[i - 1];
    return k;
}

std::vector<std::pair<int, int>> peaks_and_levels(const DyckPath& path) {
    if (path.empty())
        throw EmptyPath("peaks_and_levels: empty path");
    std::vector<std::pair<int, int>> peaks;
    const auto& steps = path.steps();
    int height = 0;
    for (std::size_t x = 1; x < steps.size(); ++x) {
        height += steps[x - 1] == Step::Up ? 1 : -1;
        if (steps[x - 1] == Step::Up && steps[x] == Step::Down)
            peaks.emplace_back(static_cast<int>(x), height + 1);
    }
    return peaks;
}

std::vector<int> height_profile(const DyckPath& path) {
    std::vector<int> h;
    h.reserve(path.steps().size() + 1);
    h.push_back(0);
    for (Step s : path.steps())
        h.push_back(h.back() + (s == Step::Up ? 1 : -1));
    return h;
}

std::uint64_t catalan(int n) {
    constexpr int kMax = 33; // C_33 < 2^64
    static const std::array<std::uint64_t, kMax + 1> table = [] {
        std::array<std::uint64_t, kMax + 1> t{};
        t[0] = 1;
        for (int m = 1; m <= kMax; ++m)
            t[m] = t[m - 1] * (2 * (2 * std::uint64_t(m) - 1)) / (m + 1);
        return t;
    }();
    if (n < 0 || n > kMax)
        throw std::out_of_range("catalan: n out of range");
    return table[static_cast<std::size_t>(n)];
}

namespace {

void generate(int n, int ups, int downs, std::vector<Step>& prefix,
              std::vector<DyckPath>& out) {
    if (ups == n && downs == n) {
        out.push_back(DyckPath::from_steps(prefix));
        return;
    }
    if (ups < n) {
        prefix.push_back(Step::Up);
        generate(n, ups + 1, downs, prefix, out);
        prefix.pop_back();
    }
    if (downs < ups) {
        prefix.push_back(Step::Down);
        generate(n, ups, downs + 1, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<DyckPath> enumerate_dyck(int n) {
    if (n < 0)
        throw std::invalid_argument("enumerate_dyck: negative semilength");
    std::vector<DyckPath> out;
    out.reserve(static_cast<std::size_t>(catalan(n)));
    std::vector<Step> prefix;
    prefix.reserve(2 * static_cast<std::size_t>(n));
    generate(n, 0, 0, prefix, out);
    return out;
}

} // namespace nakayama
