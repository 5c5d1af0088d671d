"""End-to-end tour: build a diagram, check it, cut it, certify it.

Run with ``python demos/walkthrough.py``.  Output is deterministic.
"""

from platsurf import (
    build_topology,
    certificate_json,
    certify,
    check_hypotheses,
    decompose,
    enumerate_allowable,
    make_diagram,
    render,
    surface_invariants,
)

# Three rows of triple half-twists on six strands.  Odd rows carry two
# boxes, the middle row three; the caps close the strands into a knot.
diagram = make_diagram(3, 3, [[3, 3], [3, 3, 3], [3, 3]])

print(render(diagram, fmt="ascii").decode())

report = check_hypotheses(diagram)
print(f"hypotheses pass: {report.passed}")

topology = build_topology(diagram)
print(f"link components: {topology.component_count}")

paths = enumerate_allowable(diagram)
print(f"allowable paths: {[p.entries for p in paths]}")

dec = decompose(diagram, paths[0])
print(f"sphere crosses the link {dec.puncture_count} times")
print(f"boxes left of the sphere: {sorted(dec.left.boxes)}")
for surface in surface_invariants(dec):
    print(
        f"  {surface.kind}: chi={surface.euler} genus={surface.genus} "
        f"boundary={surface.boundary} closed={surface.closed}"
    )

print()
print(certificate_json(certify(diagram)), end="")
