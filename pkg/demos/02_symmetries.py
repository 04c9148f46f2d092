"""
Symmetries that keep a design valid
===================================

Relabeling elements, reordering rows, mirroring the columns and shuffling
columns inside one window all map a valid design to a valid design.
"""

import random

from pbtd import (
    permute_rows,
    permute_window_columns,
    reflect_horizontal,
    relabel,
    table1,
    verify,
)

rng = random.Random(1)
design = table1()

# relabel the 18 elements at random
perm = list(range(18))
rng.shuffle(perm)
relabeled = relabel(design, perm)
print("relabel:", verify(relabeled).valid)

# reverse the row order
print("rows reversed:", verify(permute_rows(design, range(8, -1, -1))).valid)

# mirror: column j goes to column 18 - j, the middle column stays put
mirrored = reflect_horizontal(design)
print("mirror:", verify(mirrored).valid, mirrored.cell(0, 0))

# shuffle columns 1..8; column 9 belongs to both windows and must stay
cols = list(range(17))
front = cols[:8]
rng.shuffle(front)
cols[:8] = front
print("front shuffle:", verify(permute_window_columns(design, "front", cols)).valid)

# swapping column 9 is refused
cols = list(range(17))
cols[0], cols[8] = 8, 0
try:
    permute_window_columns(design, "front", cols)
except ValueError as exc:
    print("refused:", exc)
