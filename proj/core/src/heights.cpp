#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>

#include "toricdimer/error.hpp"
#include "toricdimer/matchings.hpp"

namespace toricdimer {

namespace {

const FaceSet& require_faces(const PlanarPatch& patch) {
  if (!patch.base_faces) throw Error(Errc::MissingRotation, "heights need a rotation system");
  if (!patch.base_faces->cellular) throw Error(Errc::NotCellular, "heights need a cellular embedding");
  if (patch.dual_tree.empty()) throw Error(Errc::NotCellular, "a face winds around the torus");
  return *patch.base_faces;
}

// Faces lie to the right of their darts, so for a white -> black dart the
// face across it is the left face of the edge.
std::int64_t step(const std::vector<int>& chain, int d) {
  const int c = chain[static_cast<std::size_t>(dart_edge(d))];
  return dart_from_white(d) ? c : -c;
}

}  // namespace

HeightField height_function(const PlanarPatch& patch, const Matching& base, const Matching& m,
                            int base_face) {
  const FaceSet& fs = require_faces(patch);
  const TorusGraph& g = patch.graph;
  require_matching(g, base);
  require_matching(g, m);
  if (base_face < 0 || base_face >= static_cast<int>(patch.faces.size()))
    throw Error(Errc::BadParameters, "base face outside the patch");

  // Coefficient of each edge (oriented white -> black) in the chain m - base.
  std::vector<int> chain(static_cast<std::size_t>(g.num_edges()), 0);
  for (int e : m.edge_ids) chain[static_cast<std::size_t>(e)] += 1;
  for (int e : base.edge_ids) chain[static_cast<std::size_t>(e)] -= 1;

  std::vector<std::int64_t> along(patch.dual_tree.size(), 0);
  for (std::size_t i = 1; i < patch.dual_tree.size(); ++i) {
    const auto& node = patch.dual_tree[i];
    along[i] = along[static_cast<std::size_t>(node.parent)] + step(chain, node.dart);
  }
  const std::int64_t zero = along[static_cast<std::size_t>(patch.tree_node[static_cast<std::size_t>(base_face)])];

  HeightField field;
  field.faces = patch.faces;
  field.base_face = base_face;
  field.height.resize(patch.faces.size());
  for (std::size_t f = 0; f < patch.faces.size(); ++f)
    field.height[f] = along[static_cast<std::size_t>(patch.tree_node[f])] - zero;

  for (std::size_t fi = 0; fi < patch.faces.size(); ++fi) {
    const PatchFace here = patch.faces[fi];
    const auto& darts = fs.faces[static_cast<std::size_t>(here.face)];
    for (std::size_t p = 0; p < darts.size(); ++p) {
      const int ti = patch.face_index(patch.across(here, p));
      if (ti < 0) continue;
      const std::int64_t expected = *field.height[fi] + step(chain, darts[p]);
      if (*field.height[static_cast<std::size_t>(ti)] != expected) {
        std::ostringstream os;
        os << "dual edge across edge " << dart_edge(darts[p]) << " gives " << expected << " but face has "
           << *field.height[static_cast<std::size_t>(ti)];
        throw Error(Errc::InconsistentHeights, os.str());
      }
    }
  }
  return field;
}

PeriodReport period_increments(const HeightField& field) {
  std::set<std::int64_t> dx, dy;
  auto lookup = [&](PatchFace f) -> const std::optional<std::int64_t>* {
    auto it = std::lower_bound(field.faces.begin(), field.faces.end(), f);
    if (it == field.faces.end() || *it != f) return nullptr;
    return &field.height[static_cast<std::size_t>(it - field.faces.begin())];
  };
  for (std::size_t i = 0; i < field.faces.size(); ++i) {
    const auto& h = field.height[i];
    if (!h) continue;
    const PatchFace f = field.faces[i];
    if (const auto* r = lookup({f.face, f.cell + Vec2{1, 0}}); r && *r) dx.insert(**r - *h);
    if (const auto* u = lookup({f.face, f.cell + Vec2{0, 1}}); u && *u) dy.insert(**u - *h);
  }
  return PeriodReport{{dx.begin(), dx.end()}, {dy.begin(), dy.end()}};
}

HomologyVector tilde_height_change(const PlanarPatch& patch, const Matching& base, const Matching& m,
                                   int base_face) {
  if (patch.k < 2 || patch.l < 2) throw Error(Errc::BadParameters, "tilde height change needs a patch of at least 2x2");
  const HeightField field = height_function(patch, base, m, base_face);
  const PeriodReport pr = period_increments(field);
  if (pr.dx_values.size() != 1 || pr.dy_values.size() != 1) {
    throw Error(Errc::InconsistentHeights, "height increments are not periodic across the patch");
  }
  return {pr.dx_values.front(), pr.dy_values.front()};
}

}  // namespace toricdimer
