#!/usr/bin/env python3
# Copyright 2026 The stationplan Authors
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
"""Regenerates the CSV fixtures under data/.

appendix_table1.csv is a transcription of published allocation counts.
Everything else (door counts, door-access demand, travel times) is
SYNTHETIC and seeded; it is not real access-control data.
"""

import csv
import pathlib
import random
import re

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"

# name, initial, heuristic, building allocation, door-unrestricted
APPENDIX = [
    ("Academic Success Center", 2, 2, 1, 2),
    ("Administrative Services Building", 1, 1, 1, 7),
    ("Barre Hall", 4, 2, 1, 4),
    ("BioSystems Research Center", 4, 5, 4, 5),
    ("Brackett Hall", 2, 4, 4, 4),
    ("Brooks Center", 2, 4, 3, 3),
    ("Campbell Museum", 1, 1, 1, 1),
    ("College of Business Building", 20, 15, 24, 9),
    ("Cook Laboratory", 1, 1, 1, 1),
    ("Dillard Building", 2, 1, 1, 1),
    ("Earle Hall", 1, 2, 1, 3),
    ("Edwards Hall", 2, 4, 3, 4),
    ("Fluor Daniel", 1, 2, 1, 3),
    ("Freeman Hall", 3, 4, 2, 4),
    ("Godfrey Hall", 1, 2, 1, 1),
    ("Hardin Hall", 3, 2, 1, 1),
    ("Harris Smith", 1, 1, 1, 1),
    ("Holtzendorff Hall", 1, 3, 1, 1),
    ("Hunter Hall", 1, 3, 1, 3),
    ("Jordan Hall", 2, 2, 1, 1),
    ("Kinard Hall", 4, 2, 1, 2),
    ("Lee Hall (Includes 3 Buildings)", 6, 4, 3, 2),
    ("Long Hall", 1, 2, 1, 2),
    ("Lowry Hall", 1, 2, 1, 2),
    ("Martin Hall (Includes 3 Buildings)", 6, 3, 1, 3),
    ("McAdams Hall", 2, 3, 1, 2),
    ("Olin Hall", 1, 1, 1, 1),
    ("P&A Building", 4, 4, 3, 4),
    ("Rhodes Hall/Annex", 2, 3, 1, 2),
    ("Cooper Library", 4, 9, 13, 4),
    ("Sikes Hall", 3, 3, 1, 3),
    ("Sirrine Hall", 4, 5, 4, 5),
    ("Strode Tower", 1, 2, 1, 2),
    ("Tillman Hall", 6, 5, 4, 4),
    ("Vickery Hall", 1, 2, 1, 1),
    ("Watt Innovation", 1, 8, 11, 4),
]

DOOR_LABELS = ["main", "north", "south", "east", "west", "loading",
               "courtyard", "annex", "lobby", "garage", "plaza", "service"]

WEEKS = ["2021-W06", "2021-W14", "2021-W15", "2021-W16"]

# Synthetic travel times (seconds), 3 classrooms x 10 candidate sites.
FREEMAN_TIMES = [
    [8, 30, 26, 33, 40, 36, 31, 38, 44, 46],
    [34, 30, 28, 31, 27, 8, 33, 35, 29, 39],
    [41, 30, 37, 32, 34, 24, 36, 35, 36, 8],
]


def slug(name):
    return re.sub(r"[^a-z0-9]+", "_", name.lower()).strip("_")


def write(path, header, rows):
    with open(path, "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def main():
    rng = random.Random(20210208)
    ids = [slug(r[0]) for r in APPENDIX]

    write(DATA / "appendix_table1.csv",
          ["building_id", "display_name", "initial", "heuristic",
           "building_allocation", "door_unrestricted"],
          [[i, *r] for i, r in zip(ids, APPENDIX)])

    columns = {"initial": 1, "heuristic": 2, "building_allocation": 3,
               "door_unrestricted": 4}
    for col, k in columns.items():
        write(DATA / f"appendix_{col}.csv", ["building_id", "stations"],
              [[i, r[k]] for i, r in zip(ids, APPENDIX)])

    door_counts = []
    for name, initial, *_ in APPENDIX:
        if name == "Freeman Hall":
            door_counts.append(10)
        else:
            door_counts.append(max(2, min(12, initial + rng.randint(1, 4))))
    write(DATA / "campus_registry.csv",
          ["building_id", "display_name", "door_count", "baseline_stations"],
          [[i, r[0], n, r[1]] for i, r, n in zip(ids, APPENDIX, door_counts)])

    base = {}
    for i, (name, initial, heur, *_), n in zip(ids, APPENDIX, door_counts):
        scale = 900 * heur
        if name == "Freeman Hall":
            base[i] = [1400, 210, 180, 160, 150, 140, 120, 610, 90, 70]
            continue
        weights = [rng.uniform(0.2, 1.0) for _ in range(n)]
        total = sum(weights)
        base[i] = [int(round(scale * w / total)) for w in weights]

    rows = []
    for wi, week in enumerate(WEEKS):
        for i, n in zip(ids, door_counts):
            for d in range(n):
                v = base[i][d]
                if wi > 0:
                    v = int(round(v * rng.uniform(0.92, 1.08)))
                rows.append([i, DOOR_LABELS[d], week, v])
    write(DATA / "demand_weeks.csv",
          ["building_id", "door_label", "week", "event_count"], rows)
    write(DATA / "demand_2021-W06.csv",
          ["building_id", "door_label", "week", "event_count"],
          [r for r in rows if r[2] == WEEKS[0]])

    write(DATA / "freeman_coverage.csv", ["classroom_id", "site_id", "seconds"],
          [[f"room{c + 1}", f"site{j}", FREEMAN_TIMES[c][j]]
           for c in range(3) for j in range(10)])


if __name__ == "__main__":
    main()
