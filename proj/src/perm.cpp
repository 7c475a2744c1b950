#include "nakayama/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nakayama {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : images_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("not a permutation of {1.." + std::to_string(n) + "}");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text) {
    std::string buf(text);
    std::replace(buf.begin(), buf.end(), ',', ' ');
    std::istringstream in(buf);
    std::vector<int> images;
    int v = 0;
    while (in >> v)
        images.push_back(v);
    if (!in.eof()) {
        std::string rest;
        in.clear();
        in >> rest;
        throw ParseError("bad permutation token '" + rest + "'");
    }
    try {
        return Permutation(std::move(images));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if ((*this)(i) != i)
            return false;
    return true;
}

std::string Permutation::str() const {
    std::string out;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i > 0)
            out.push_back(' ');
        out += std::to_string(images_[i]);
    }
    return out;
}

bool is_321_avoiding(const Permutation& p) {
    // Linear scan: high = max of the prefix, mid = largest value that
    // already has a larger value before it.  A value below mid completes a
    // descending triple.
    int high = 0;
    int mid = 0;
    for (int i = 1; i <= p.size(); ++i) {
        const int v = p(i);
        if (v > high) {
            high = v;
        } else {
            if (v < mid)
                return false;
            mid = v;
        }
    }
    return true;
}

ExcedanceData excedances(const Permutation& p) {
    ExcedanceData data;
    for (int i = 1; i <= p.size(); ++i) {
        if (p(i) > i) {
            data.locations.push_back(i);
            data.values.push_back(p(i));
        }
    }
    return data;
}

Permutation bjs(const DyckPath& path) {
    const int n = path.semilength();
    if (n == 0)
        return Permutation();
    const PartialSumCode code = partial_code(path);
    std::vector<int> images(static_cast<std::size_t>(n), 0);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (std::size_t j = 0; j < code.ascent_code.size(); ++j) {
        const int value = code.ascent_code[j] + 1;
        const int pos = code.descent_code[j];
        images[static_cast<std::size_t>(pos - 1)] = value;
        used[static_cast<std::size_t>(value - 1)] = true;
    }
    int next = 1;
    for (int i = 0; i < n; ++i) {
        if (images[static_cast<std::size_t>(i)] != 0)
            continue;
        while (used[static_cast<std::size_t>(next - 1)])
            ++next;
        images[static_cast<std::size_t>(i)] = next;
        used[static_cast<std::size_t>(next - 1)] = true;
    }
    return Permutation(std::move(images));
}

DyckPath bjs_inverse(const Permutation& p) {
    if (!is_321_avoiding(p))
        throw Not321Avoiding("bjs_inverse: " + p.str());
    const int n = p.size();
    const ExcedanceData exc = excedances(p);
    const int r = exc.count();
    if (r == 0) { // identity <-> u^n d^n
        std::vector<Step> steps;
        steps.insert(steps.end(), static_cast<std::size_t>(n), Step::Up);
        steps.insert(steps.end(), static_cast<std::size_t>(n), Step::Down);
        return DyckPath::from_steps(std::move(steps));
    }
    AscentDescent runs;
    runs.ascents.push_back(exc.values[0] - 1);
    runs.descents.push_back(exc.locations[0]);
    for (int j = 1; j < r; ++j) {
        runs.ascents.push_back(exc.values[static_cast<std::size_t>(j)] -
                               exc.values[static_cast<std::size_t>(j - 1)]);
        runs.descents.push_back(exc.locations[static_cast<std::size_t>(j)] -
                                exc.locations[static_cast<std::size_t>(j - 1)]);
    }
    runs.ascents.push_back(n + 1 - exc.values[static_cast<std::size_t>(r - 1)]);
    runs.descents.push_back(n - exc.locations[static_cast<std::size_t>(r - 1)]);
    return path_from_runs(runs);
}

int fixed_points(const Permutation& p) {
    int count = 0;
    for (int i = 1; i <= p.size(); ++i)
        if (p(i) == i)
            ++count;
    return count;
}

int fixed_points_formula(const Permutation& p) {
    if (!is_321_avoiding(p))
        throw Not321Avoiding("fixed_points_formula: " + p.str());
    const int n = p.size();
    const ExcedanceData exc = excedances(p);
    const int r = exc.count();
    if (r == 0)
        return n;
    int total = exc.locations[0] - 1;
    for (int j = 1; j < r; ++j)
        total += std::max(exc.locations[static_cast<std::size_t>(j)] -
                              exc.values[static_cast<std::size_t>(j - 1)] - 1,
                          0);
    total += n - exc.values[static_cast<std::size_t>(r - 1)];
    return total;
}

std::vector<int> connectivity_set(const Permutation& p) {
    std::vector<int> out;
    int prefix_max = 0;
    for (int i = 1; i <= p.size(); ++i) {
        if (prefix_max < i)
            out.push_back(i);
        prefix_max = std::max(prefix_max, p(i));
    }
    return out;
}

int connectivity_formula(const Permutation& p) {
    if (!is_321_avoiding(p))
        throw Not321Avoiding("connectivity_formula: " + p.str());
    if (p.is_identity())
        throw IdentityNotCovered("connectivity_formula excludes the identity");
    const int n = p.size();
    const ExcedanceData exc = excedances(p);
    const int r = exc.count();
    int total = exc.locations[0];
    for (int j = 1; j < r; ++j)
        total += std::max(exc.locations[static_cast<std::size_t>(j)] -
                              exc.values[static_cast<std::size_t>(j - 1)],
                          0);
    total += n - exc.values[static_cast<std::size_t>(r - 1)];
    return total;
}

int block_number(const Permutation& p) {
    int blocks = 0;
    int prefix_max = 0;
    for (int k = 1; k <= p.size(); ++k) {
        prefix_max = std::max(prefix_max, p(k));
        if (prefix_max == k)
            ++blocks;
    }
    return blocks;
}

int support_size(const Permutation& p) {
    return p.size() - block_number(p);
}

bool partial_sums_check(const Permutation& p) {
    if (!is_321_avoiding(p))
        throw Not321Avoiding("partial_sums_check: " + p.str());
    const ExcedanceData exc = excedances(p);
    if (exc.count() == 0)
        return true;
    const AscentDescent runs = ascent_descent(bjs_inverse(p));
    int a = 0;
    int d = 0;
    for (int j = 0; j < exc.count(); ++j) {
        a += runs.ascents[static_cast<std::size_t>(j)];
        d += runs.descents[static_cast<std::size_t>(j)];
        if (a != exc.values[static_cast<std::size_t>(j)] - 1)
            return false;
        if (d != exc.locations[static_cast<std::size_t>(j)])
            return false;
    }
    return true;
}

} // namespace nakayama
