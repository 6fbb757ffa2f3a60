"""Rokhlin and Donaldson obstruction reports.

A closed simply connected 4-manifold carries a unimodular symmetric form on
H_2. If the manifold is smooth, an even form must have signature divisible
by 16 and a definite form must be diagonalizable over Z. The E8 form fails
the first test, E8 + E8 passes it but fails the second, and identity forms
pass both. Group-ring pairings are rejected up front: their determinants are
+-|G|^|G|, never +-1 beyond the trivial group.
"""

import json

from forms4d import (
    analyze_intersection_form,
    analyze_trace_form,
    direct_sum,
    e8_form,
    h2_from_group_ring,
)
from forms4d.exactla import IntMatrix
from forms4d.groupring import abelian_group
from forms4d.quadform import BilinearForm

for name, form in (
    ("E8", e8_form()),
    ("E8 + E8", direct_sum(e8_form(), e8_form())),
    ("I_4", BilinearForm(IntMatrix.identity(4))),
):
    report = analyze_intersection_form(form)
    print(f"{name}: signature {report.signature_value}, parity {report.parity}, "
          f"Rokhlin violation {report.rokhlin_violation}, "
          f"Donaldson violation {report.donaldson_violation}")

print("\ngroup-ring candidates for H_2:")
for invs in ([], [2], [3]):
    result = h2_from_group_ring(abelian_group(invs))
    label = f"Z[{'Z/' + '+Z/'.join(map(str, invs)) if invs else 'trivial group'}]"
    if result.report is not None:
        print(f"  {label}: analyzed, obstructed={result.report.smooth_obstructed}")
    else:
        print(f"  {label}: {result.rejection}")

print("\ntwo-power trace-form model, n = 4:")
report = analyze_trace_form(two_power=4)
print(json.dumps(report.to_json_dict(), indent=2))
