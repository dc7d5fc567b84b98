"""From a binary vessel mask to a bifurcation graph.

Thins a phantom's mask to a one-voxel skeleton, builds the node/edge graph,
prunes spurs, and compares the junction candidates against the ground-truth
bifurcation centers. Saves a projection figure and the graph text dump.

Run from the repository root:  python3 demos/02_skeleton_to_graph.py
"""

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from cowbif.phantom import PhantomSpec, build_phantom
from cowbif.thinning import skeletonize
from cowbif.vessel_graph import build_graph, candidate_centers, export_graph_text, prune_spurs

OUT = os.path.join(os.path.dirname(__file__), "out")
os.makedirs(OUT, exist_ok=True)

sample = build_phantom(PhantomSpec(seed=21, p_truncated_posterior=0.0))
print(f"mask voxels: {int(sample.mask.data.sum()):,}")

skel = skeletonize(sample.mask)
print(f"skeleton voxels: {int(skel.data.sum()):,} "
      f"({100 * skel.data.sum() / sample.mask.data.sum():.1f}% of the mask)")

raw = build_graph(skel, sample.spec.spacing)
graph = prune_spurs(raw, 3)
print(f"graph: {len(raw.nodes)} nodes / {len(raw.edges)} edges, "
      f"after pruning {len(graph.nodes)} / {len(graph.edges)}")
print(f"junctions: {len(graph.junctions())}, endpoints: {len(graph.endpoints())}")

cands = np.array(candidate_centers(graph), dtype=float)
print("\nlabel  gt center        nearest junction  distance")
for lab, c in sorted(sample.gt.entries.items()):
    d = np.sqrt(((cands - np.asarray(c, float)) ** 2).sum(axis=1))
    j = d.argmin()
    print(f"{lab:5s}  {str(c):16s} {str(tuple(int(v) for v in cands[j])):17s} {d[j]:.2f}")

with open(os.path.join(OUT, "vessel_graph.txt"), "w") as fh:
    fh.write(export_graph_text(graph))

fig, ax = plt.subplots(figsize=(7, 7))
ax.imshow(sample.mask.data.max(axis=2).T, cmap="gray", origin="lower")
sk = skel.voxels
ax.plot(sk[:, 0], sk[:, 1], ".", ms=1, color="tab:cyan", label="skeleton")
ax.plot(cands[:, 0], cands[:, 1], "o", ms=7, mfc="none", mec="orange", label="junctions")
for lab, (x, y, z) in sample.gt.entries.items():
    ax.plot(x, y, "x", ms=8, color="red")
    ax.annotate(lab, (x, y), color="red", fontsize=9, xytext=(4, 4),
                textcoords="offset points")
ax.legend(loc="lower right")
ax.set_title("mask MIP, skeleton, junction candidates (orange), ground truth (red)")
ax.axis("off")
fig.tight_layout()
fig.savefig(os.path.join(OUT, "skeleton_graph.png"), dpi=110)
print(f"\nwrote vessel_graph.txt and skeleton_graph.png under {OUT}")
