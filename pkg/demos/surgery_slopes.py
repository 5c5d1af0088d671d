"""Surgery certification: slopes, coverage, and a refusal with reasons."""

from platsurf import (
    build_topology,
    certify_haken,
    direct_coverage_check,
    make_diagram,
    parity_criterion,
    parse_slopes,
)

knot = make_diagram(3, 3, [[3, 3], [3, 3, 3], [3, 3]])
print("knot diagram, components:", build_topology(knot).component_count)
print("coverage:", direct_coverage_check(knot).ok)
print("parity reading:", parity_criterion(knot).value)

cert = certify_haken(knot, parse_slopes("3/1"))
print("certify 3/1:", cert.certified)
for c in cert.conclusions:
    print(f"  [{c.cite}] {c.statement}")

cert = certify_haken(knot, parse_slopes("1/0"))
print("certify 1/0:", cert.certified)
for r in cert.refusals:
    print("  refusal:", r)

# Even twist counts at every odd-row end leave the outer components
# beside every sphere, so no slope tuple can be certified.
link = make_diagram(3, 3, [[4, 4], [3, 3, 3], [4, 4]])
print()
print("link diagram, components:", build_topology(link).component_count)
cov = direct_coverage_check(link)
print("coverage:", cov.ok, "uncovered:", cov.uncovered)
cert = certify_haken(link, parse_slopes("3/1,3/1,3/1"))
print("certify 3/1,3/1,3/1:", cert.certified)
for r in cert.refusals:
    print("  refusal:", r)
