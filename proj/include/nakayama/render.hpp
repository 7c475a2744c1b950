#ifndef NAKAYAMA_RENDER_HPP
#define NAKAYAMA_RENDER_HPP

#include <string>

#include "nakayama/dyck.hpp"

namespace nakayama {

struct RenderOptions {
    /// Mark the descent points of the two homological families: injectives
    /// with projective dimension one ('o') and injectives whose first
    /// syzygy is a radical of a projective ('#'); '*' where both apply.
    bool homology = false;
};

/// Character drawing of the path with peak/valley level annotations.
std::string render_ascii(const DyckPath& path, const RenderOptions& options = {});

/// Self-contained SVG drawing of the path with the same annotations.
std::string render_svg(const DyckPath& path, const RenderOptions& options = {});

} // namespace nakayama

#endif
