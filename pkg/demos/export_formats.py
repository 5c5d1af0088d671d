"""Exports: braid word, PD code, canonical JSON, and both renders."""

from platsurf import (
    diagram_to_json,
    make_diagram,
    pd_trace_components,
    render,
    to_braid_word,
    to_pd_code,
)

diagram = make_diagram(3, 1, [[3, 0]])

word = to_braid_word(diagram)
print("braid word:", word.text())
print("word permutation:", word.permutation())

code = to_pd_code(diagram)
print("PD code:", code.text())
print("components traced from the code:", pd_trace_components(code))

print()
print(diagram_to_json(diagram), end="")

print()
print(render(diagram, fmt="ascii").decode(), end="")

svg = render(diagram)
print(f"\nSVG render: {len(svg)} bytes, starts {svg[:30]!r}")
