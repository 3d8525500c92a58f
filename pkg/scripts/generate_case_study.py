"""Regenerate the bundled synthetic case-study fixture.

The structure mirrors a project-management maturity assessment: nine
processes, each split into the existence of the process and five process
inputs, evaluated on a nine-term linguistic scale for eight institutions
against five limiting profiles.  The institution evaluations are synthetic:
each institution has a target quality level and its 54 linguistic scores
are drawn around it with a fixed seed, so rerunning this script reproduces
the shipped file byte for byte.

Usage: python scripts/generate_case_study.py
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

SEED = 20260823

TERMS = ["EI", "HI", "VI", "SI", "M", "SM", "VM", "HM", "EM"]

PROCESSES = ["PP", "TW", "PN", "ProjM", "PE", "PortM", "IPM", "CM", "THR"]
PROCESS_RANKS = [1, 2, 1, 2, 1, 2, 3, 3, 3]
INPUTS = ["IF", "HR", "CR", "WP", "IR"]
INPUT_RANKS = [2, 2, 3, 4, 1]

#: Target mean linguistic level (0..8) per institution.  Some targets sit
#: near a profile boundary on purpose, so that the category depends on the
#: sampled weights and the acceptability indices split.
QUALITY = {
    "Inst. 1": 7.6,
    "Inst. 2": 7.0,
    "Inst. 3": 5.9,
    "Inst. 4": 5.4,
    "Inst. 5": 4.3,
    "Inst. 6": 3.3,
    "Inst. 7": 2.2,
    "Inst. 8": 1.0,
}


def build() -> dict:
    rng = np.random.Generator(np.random.PCG64(SEED))

    scale = {"terms": [
        ["EI", [0, 0, 0.75]],
        ["HI", [1, 0.75, 0.75]],
        ["VI", [2, 0.75, 0.75]],
        ["SI", [3, 0.75, 0.75]],
        ["M", [4, 0.75, 0.75]],
        ["SM", [5, 0.75, 0.75]],
        ["VM", [6, 0.75, 0.75]],
        ["HM", [7, 0.75, 0.75]],
        ["EM", [8, 0.75, 0]],
    ]}

    children = []
    for name in PROCESSES:
        children.append({
            "label": name,
            "weights": {"deterministic": [0.6, 0.4]},
            "children": [
                {"label": "existence"},
                {
                    "label": "inputs",
                    "weights": {"ordinal": INPUT_RANKS},
                    "children": [{"label": i} for i in INPUTS],
                },
            ],
        })

    paths = []
    for name in PROCESSES:
        paths.append(f"{name}/existence")
        paths.extend(f"{name}/inputs/{i}" for i in INPUTS)

    alternatives = {}
    for inst, quality in QUALITY.items():
        draws = np.clip(np.rint(rng.normal(quality, 1.2, size=len(paths))), 0, 8)
        alternatives[inst] = {
            path: TERMS[int(level)] for path, level in zip(paths, draws)
        }

    return {
        "schema": 1,
        "name": "Synthetic maturity assessment (9 processes, 8 institutions)",
        "notes": (
            "Synthetic linguistic evaluations drawn around per-institution "
            f"quality targets with numpy PCG64 seed {SEED}; regenerate with "
            "scripts/generate_case_study.py."
        ),
        "categories": ["C1", "C2", "C3", "C4"],
        "scales": {"maturity": scale},
        "default_scale": "maturity",
        "tree": {
            "weights": {"ordinal": PROCESS_RANKS},
            "children": children,
        },
        "profiles": {"default": [8, "HM", "SM", "SI", 0]},
        "preferences": {"default": {"shape": "usual", "direction": "maximize"}},
        "alternatives": alternatives,
        "smaa": {"iterations": 10000, "seed": 0, "rule": "net", "defuzz": "centroid"},
    }


def main() -> None:
    out = Path(__file__).resolve().parents[1] / "src/smaaflow/fixtures/case_study_synthetic.json"
    out.write_text(json.dumps(build(), indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
