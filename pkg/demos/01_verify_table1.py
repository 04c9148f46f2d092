"""
Checking the side-nine design
=============================

Load the embedded 9 x 17 design, confirm it passes every check, then break
one cell and read the report.
"""

# The design ships with the package, so no file is needed.
from pbtd import emit_text, table1, verify

design = table1()
print(emit_text(design))

report = verify(design)
print(report.format_text())

# Overwrite row 1, column 1 with a pair that already sits elsewhere in the
# row. The column loses element 16, gains a second 5, and the pair {2,5}
# now appears twice while {2,16} is gone.
broken = design.replace_cell(0, 0, (2, 5))
print(verify(broken).format_text())

# The same report as flat records, ready for json.dumps.
for record in verify(broken).as_record()["violations"][:3]:
    print(record)
