#include "nakayama/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "nakayama/algebra.hpp"
#include "nakayama/bridge.hpp"

namespace nakayama {

namespace {

struct HomologyMarks {
    std::vector<std::pair<int, int>> pd_one;         // injective positions (x, y)
    std::vector<std::pair<int, int>> syzygy_radical; // injective positions (x, y)
};

// Injective j sits at plot point (2j - d_j + 1, d_j - 1).  The marked
// injectives of the second family are those whose syzygy is a nonzero
// radical, plus one projective-injective standing in for the zero radical
// e_nJ; this keeps the mark count equal to radical_id_le_one_count.
HomologyMarks homology_marks(const DyckPath& path) {
    HomologyMarks marks;
    const Algebra alg(dyck_to_kupisch(path));
    const int n = alg.simples() - 1;
    bool zero_radical_marked = false;
    for (int j = 0; j <= n; ++j) {
        const UniserialModule inj = alg.injective(j);
        const int dj = alg.injective_dims()[static_cast<std::size_t>(j)];
        const std::pair<int, int> point{2 * j - dj + 1, dj - 1};
        if (alg.proj_dim(inj) == 1)
            marks.pd_one.push_back(point);
        const UniserialModule s = alg.syzygy(inj);
        if (!s.is_zero() && s.top >= 1 && s.length == alg.kupisch()[s.top - 1] - 1) {
            marks.syzygy_radical.push_back(point);
        } else if (s.is_zero() && !zero_radical_marked) {
            marks.syzygy_radical.push_back(point);
            zero_radical_marked = true;
        }
    }
    return marks;
}

std::string levels_line(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0)
            out += ",";
        out += std::to_string(values[i]);
    }
    return out;
}

} // namespace

std::string render_ascii(const DyckPath& path, const RenderOptions& options) {
    std::ostringstream out;
    if (path.empty()) {
        out << "(empty path)\n";
        return out.str();
    }
    const std::vector<int> h = height_profile(path);
    const int maxh = *std::max_element(h.begin(), h.end());
    const int width = static_cast<int>(path.steps().size());

    // One character per step; step t occupies the band between h(t) and h(t+1).
    std::vector<std::string> canvas(static_cast<std::size_t>(maxh),
                                    std::string(static_cast<std::size_t>(width), ' '));
    const auto band_row = [&](int band) { return static_cast<std::size_t>(maxh - band); };
    for (int t = 0; t < width; ++t) {
        const bool up = path.steps()[static_cast<std::size_t>(t)] == Step::Up;
        const int band =
            std::max(h[static_cast<std::size_t>(t)], h[static_cast<std::size_t>(t + 1)]);
        canvas[band_row(band)][static_cast<std::size_t>(t)] = up ? '/' : '\\';
    }

    if (options.homology) {
        // A vertex is written onto the cell of its outgoing step (incoming
        // for the final vertex), which keeps distinct vertices in distinct
        // cells.
        const auto put = [&](int x, char mark) {
            const int col = x < width ? x : width - 1;
            const int band = std::max(h[static_cast<std::size_t>(col)],
                                      h[static_cast<std::size_t>(col + 1)]);
            char& cell = canvas[band_row(band)][static_cast<std::size_t>(col)];
            cell = (cell == 'o' || cell == '#' || cell == '*') ? '*' : mark;
        };
        const HomologyMarks marks = homology_marks(path);
        for (auto [x, y] : marks.pd_one)
            put(x, 'o');
        for (auto [x, y] : marks.syzygy_radical)
            put(x, '#');
    }

    for (const std::string& row : canvas)
        out << row << '\n';

    const AscentDescent runs = ascent_descent(path);
    const std::vector<int> k = valley_levels(runs);
    std::vector<int> peak_levels;
    for (const auto& [x, level] : peaks_and_levels(path))
        peak_levels.push_back(level);
    out << "peak levels: " << levels_line(peak_levels) << '\n';
    out << "k levels:    " << levels_line(k) << '\n';
    if (options.homology)
        out << "marks: o = injective with pd 1, # = syzygy is a radical, * = both\n";
    return out.str();
}

std::string render_svg(const DyckPath& path, const RenderOptions& options) {
    const int unit = 24;
    const int pad = 32;
    const std::vector<int> h = height_profile(path);
    const int maxh = path.empty() ? 1 : *std::max_element(h.begin(), h.end());
    const int width = 2 * pad + unit * static_cast<int>(path.steps().size());
    const int height = 2 * pad + unit * maxh;
    auto px = [&](int x) { return pad + x * unit; };
    auto py = [&](int y) { return height - pad - y * unit; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "  <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\""
        << px(static_cast<int>(path.steps().size())) << "\" y2=\"" << py(0)
        << "\" stroke=\"#bbbbbb\"/>\n";
    out << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
    for (std::size_t x = 0; x < h.size(); ++x) {
        if (x > 0)
            out << ' ';
        out << px(static_cast<int>(x)) << ',' << py(h[x]);
    }
    out << "\"/>\n";

    if (!path.empty()) {
        for (const auto& [x, level] : peaks_and_levels(path)) {
            out << "  <circle cx=\"" << px(x) << "\" cy=\"" << py(level - 1)
                << "\" r=\"3\" fill=\"black\"/>\n";
            out << "  <text x=\"" << px(x) << "\" y=\"" << py(level - 1) - 8
                << "\" font-size=\"12\" text-anchor=\"middle\">" << level << "</text>\n";
        }
        const AscentDescent runs = ascent_descent(path);
        const std::vector<int> k = valley_levels(runs);
        int x = 0;
        for (int b = 0; b < runs.blocks(); ++b) {
            if (b > 0) {
                out << "  <circle cx=\"" << px(x) << "\" cy=\""
                    << py(k[static_cast<std::size_t>(b)] - 1)
                    << "\" r=\"3\" fill=\"none\" stroke=\"black\"/>\n";
                out << "  <text x=\"" << px(x) << "\" y=\""
                    << py(k[static_cast<std::size_t>(b)] - 1) + 16
                    << "\" font-size=\"12\" text-anchor=\"middle\">"
                    << k[static_cast<std::size_t>(b)] << "</text>\n";
            }
            x += runs.ascents[static_cast<std::size_t>(b)] +
                 runs.descents[static_cast<std::size_t>(b)];
        }
        if (options.homology) {
            const HomologyMarks marks = homology_marks(path);
            for (auto [mx, my] : marks.pd_one)
                out << "  <circle cx=\"" << px(mx) << "\" cy=\"" << py(my)
                    << "\" r=\"6\" fill=\"none\" stroke=\"#cc3333\" stroke-width=\"2\"/>\n";
            for (auto [mx, my] : marks.syzygy_radical)
                out << "  <rect x=\"" << px(mx) - 5 << "\" y=\"" << py(my) - 5
                    << "\" width=\"10\" height=\"10\" fill=\"none\" stroke=\"#3333cc\""
                    << " stroke-width=\"2\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace nakayama
