"""
Searching for a counterexample to the monochromatic-cycle conjecture
====================================================================

Every labeled orientation of a small part-size vector is colored with the
finest coloring that makes all 3- and 4-cycles monochromatic, plus a few
random coarsenings, and tested for a kernel by monochromatic paths.  The
search checkpoints to disk and can be resumed.
"""

import tempfile
from pathlib import Path

from kcolored import search_conjecture

for parts in ((1, 1, 1), (2, 1), (2, 1, 1), (2, 2)):
    report, _ = search_conjecture(parts, allow_symmetric=True, coarsenings=2, seed=7)
    print(report.summary())
    print()

# stop after 100 orientations, then pick up from the checkpoint file
with tempfile.TemporaryDirectory() as tmp:
    checkpoint = Path(tmp) / "search.json"
    first, state = search_conjecture((2, 1, 1, 1), True, checkpoint=checkpoint, max_orientations=100)
    print("interrupted at orientation", state.cursor, "of", first.orientations_total)
    final, _ = search_conjecture((2, 1, 1, 1), True, checkpoint=checkpoint)
    print("resumed run complete:", final.complete, "with", final.examined, "instances examined")
