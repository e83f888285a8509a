#!/usr/bin/env python3
# Copyright 2026 The Curvetext Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates data/mini_corpus: five images, their polygon annotations and
per-instance residual thresholds.

Thresholds come from an independent NumPy fit (SVD-based lstsq on the
fixed-endpoint system), not from the C++ library. Run from the repo root:

    python3 scripts/prepare_corpus.py
"""

import json
import math
from pathlib import Path

import numpy as np
from matplotlib.path import Path as MplPath

OUT = Path(__file__).resolve().parent.parent / "data" / "mini_corpus"
WIDTH, HEIGHT = 320, 240
# Relative slack on top of the oracle residual, plus an absolute floor.
REL_SLACK = 1e-6
ABS_SLACK = 1e-9


def arc_side(cx, cy, radius, a0, a1, n):
    angles = np.linspace(a0, a1, n)
    return np.stack([cx + radius * np.cos(angles), cy - radius * np.sin(angles)], axis=1)


def wave_side(x0, x1, y, amp, phase, n):
    xs = np.linspace(x0, x1, n)
    return np.stack([xs, y + amp * np.sin(phase + 2.0 * math.pi * (xs - x0) / (x1 - x0))], axis=1)


def line_side(p, q, n):
    s = np.linspace(0.0, 1.0, n)[:, None]
    return (1 - s) * np.asarray(p, float) + s * np.asarray(q, float)


def polygon(top, bottom):
    """Top left->right, bottom left->right; stored bottom reversed."""
    pts = np.concatenate([top, bottom[::-1]], axis=0)
    return np.clip(np.rint(pts), 0, None).astype(int)


def instances_for(index, per_side):
    n = per_side
    if index == 0:
        return [
            (polygon(arc_side(160, 230, 150, math.radians(160), math.radians(20), n),
                     arc_side(160, 230, 115, math.radians(160), math.radians(20), n)), "CURVED"),
            (polygon(line_side((40, 170), (150, 160), n), line_side((40, 200), (150, 190), n)), "STRAIGHT"),
        ]
    if index == 1:
        return [
            (polygon(wave_side(20, 300, 60, 12, 0.0, n), wave_side(20, 300, 92, 12, 0.0, n)), "wavy"),
            (polygon(line_side((200, 150), (290, 150), n), line_side((200, 175), (290, 175), n)), "###"),
            (polygon(arc_side(110, 60, 70, math.radians(200), math.radians(340), n),
                     arc_side(110, 60, 100, math.radians(200), math.radians(340), n)), "smile"),
        ]
    if index == 2:
        return [
            (polygon(wave_side(30, 220, 120, 25, 0.6, n), wave_side(30, 220, 160, 18, 0.6, n)), "Bezier"),
            (polygon(line_side((240, 30), (300, 200), n), line_side((270, 30), (315, 195), n)), "tilt"),
        ]
    if index == 3:
        return [
            (polygon(arc_side(160, 250, 150, math.radians(150), math.radians(30), n),
                     arc_side(160, 250, 118, math.radians(150), math.radians(30), n)), "文字曲线"),
            (polygon(wave_side(40, 280, 150, 8, 1.2, n), wave_side(40, 280, 185, 8, 1.2, n)), "text line, with comma"),
        ]
    return [
        (polygon(arc_side(160, -40, 180, math.radians(235), math.radians(305), n),
                 arc_side(160, -40, 215, math.radians(235), math.radians(305), n)), "arch"),
        (polygon(wave_side(20, 150, 210, 10, 2.0, n), wave_side(20, 150, 232, 6, 2.0, n)), "###"),
        (polygon(line_side((180, 180), (300, 140), n), line_side((185, 205), (305, 165), n)), "ramp"),
    ]


def bernstein(t):
    t = np.asarray(t, float)
    s = 1.0 - t
    return np.stack([s ** 3, 3 * t * s ** 2, 3 * t ** 2 * s, t ** 3], axis=1)


def oracle_side_residual(points):
    pts = np.asarray(points, float)
    keep = [0] + [i for i in range(1, len(pts)) if not np.array_equal(pts[i], pts[i - 1])]
    pts = pts[keep]
    seg = np.hypot(*np.diff(pts, axis=0).T)
    t = np.concatenate([[0.0], np.cumsum(seg) / seg.sum()])
    t[-1] = 1.0
    basis = bernstein(t)
    if len(pts) == 2:
        ctrl = np.array([pts[0], pts[0] + (pts[1] - pts[0]) / 3, pts[0] + 2 * (pts[1] - pts[0]) / 3, pts[1]])
    else:
        rhs = pts - np.outer(basis[:, 0], pts[0]) - np.outer(basis[:, 3], pts[-1])
        free, *_ = np.linalg.lstsq(basis[:, 1:3], rhs, rcond=None)
        ctrl = np.array([pts[0], free[0], free[1], pts[-1]])
    fitted = basis @ ctrl
    return float(np.sqrt(np.mean(np.sum((fitted - pts) ** 2, axis=1))))


def paint(instances):
    yy, xx = np.mgrid[0:HEIGHT, 0:WIDTH]
    img = 200.0 + 40.0 * (xx / WIDTH) - 30.0 * (yy / HEIGHT)
    coords = np.stack([xx.ravel() + 0.0, yy.ravel() + 0.0], axis=1)
    for poly, _ in instances:
        inside = MplPath(poly).contains_points(coords).reshape(HEIGHT, WIDTH)
        stripes = 60.0 + 50.0 * (np.sin(xx / 3.0) > 0)
        img = np.where(inside, stripes, img)
    return np.clip(np.rint(img), 0, 255).astype(np.uint8)


def write_pgm(path, img):
    header = f"P5\n{img.shape[1]} {img.shape[0]}\n255\n".encode()
    path.write_bytes(header + img.tobytes())


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    manifest = {"description": "Synthetic Total-Text / CTW1500 style polygons; thresholds are the "
                               "NumPy oracle RMS residual per instance (max of both sides) with slack "
                               f"rel={REL_SLACK}, abs={ABS_SLACK}.",
                "files": {}}
    plan = [("ten_point", 5)] * 3 + [("fourteen_point", 7)] * 2
    for index, (dialect, per_side) in enumerate(plan):
        stem = f"img_{index + 1:02d}"
        instances = instances_for(index, per_side)
        lines = []
        entries = []
        for poly, text in instances:
            lines.append(",".join(str(v) for v in poly.ravel()) + "," + text)
            half = len(poly) // 2
            top = poly[:half]
            bottom = poly[half:][::-1]
            residual = max(oracle_side_residual(top), oracle_side_residual(bottom))
            entries.append({"transcription": text,
                            "oracle_residual": residual,
                            "threshold": residual * (1.0 + REL_SLACK) + ABS_SLACK})
        (OUT / f"{stem}.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")
        write_pgm(OUT / f"{stem}.pgm", paint(instances))
        manifest["files"][f"{stem}.txt"] = {"dialect": dialect, "image": f"{stem}.pgm",
                                            "width": WIDTH, "height": HEIGHT, "instances": entries}
    (OUT / "thresholds.json").write_text(json.dumps(manifest, indent=2, ensure_ascii=False) + "\n",
                                         encoding="utf-8")


if __name__ == "__main__":
    main()
