"""Miniature end-to-end run: phantoms -> training -> detection.

Trains a small classifier for a few epochs on a handful of phantoms and runs
the full detection pipeline (expert segmentation) on a held-out phantom.
This is a scaled-down illustration; the desk-scale experiment with the full
architecture lives in scripts/run_acceptance.py.

Expect ~5-10 minutes of CPU. Run from the repository root:
    python3 demos/05_mini_pipeline.py
"""

import os
import time

import numpy as np

from cowbif import experiments
from cowbif.models import load_model
from cowbif.phantom import read_manifest, regenerate
from cowbif.pipeline import detect

OUT = os.path.join(os.path.dirname(__file__), "out", "mini_pipeline")
os.makedirs(OUT, exist_ok=True)

cfg = experiments.merge_config({
    "seed": 99,
    "phantom": {"n": 10, "write_volumes": "none"},
    "split": {"train": 8, "test": 2},
    "classifier": {"epochs": 10},
})

t0 = time.time()
manifest_path = os.path.join(OUT, "manifest.json")
if not os.path.exists(manifest_path):
    print("generating 10 phantoms ...")
    experiments.cmd_phantom_gen(cfg, OUT)
manifest = read_manifest(manifest_path)

clf_ckpt = os.path.join(OUT, "classifier.ckpt")
if not os.path.exists(clf_ckpt):
    print("training the classifier for 10 epochs on 8 phantoms ...")
    experiments.cmd_train_classifier(
        cfg, OUT, manifest,
        log_fn=lambda tr, va: print(
            f"  epoch {tr['epoch']}: train acc {tr['accuracy']:.3f}, "
            f"val acc {va['accuracy']:.3f}"
        ),
    )
classifier, _ = load_model(clf_ckpt)

print("\ndetection on held-out phantom 8 (expert segmentation):")
sample = regenerate(manifest, 8)
result = detect(sample.volume, classifier, expert_mask=sample.mask,
                gt=sample.gt, threshold=16)
print(f"  {len(result.candidates)} junction candidates")
print(f"  {'label':5s} {'present':7s} {'pred center':18s} {'conf':>6s} {'dist':>6s} hit")
for row in result.report.rows:
    center = str(row.predicted_center) if row.predicted_center else "-"
    dist = f"{row.distance:.1f}" if np.isfinite(row.distance) else "-"
    print(f"  {row.label:5s} {str(row.present):7s} {center:18s} "
          f"{row.confidence:6.2f} {dist:>6s} {row.hit}")
print(f"  recognition rate at Th=16: {result.report.recognition_rate:.2f}")
print(f"\ntotal {time.time() - t0:.0f}s; artifacts under {OUT}")
